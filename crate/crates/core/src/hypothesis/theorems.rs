use serde::{Deserialize, Serialize};

use super::check_hypothesis;
use crate::arith;
use crate::construct::{psl2, psl2_order};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::lattice::{maximal_classes, minimal_normal_subgroups, sylow};
use crate::report::Verdict;
use crate::structure::{
    fingerprint, fingerprint_has_name, identify, identify_fingerprint, is_p_nilpotent,
    is_p_solvable, is_solvable, p_residual, quotient, solvable_radical, upper_p_series,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremACase {
    I,
    Ii,
    Iii,
    /// The group is solvable.
    NotApplicable,
    /// The quotient by the solvable radical matches no case.
    Unidentifiable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremAReport {
    pub group: String,
    pub case: TheoremACase,
    /// Whether every maximal subgroup is 2-nilpotent or of prime index. The
    /// case is computed from the structure either way.
    pub hypothesis_holds: bool,
    pub radical_order: u64,
    /// `|O_{2',2}(G)|`.
    pub o22_order: u64,
    /// `S(G) = O_{2',2}(G)`; `false` is reported as a discrepancy.
    pub radical_matches: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quotient: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quotient_fingerprint: Option<String>,
    /// `|O^2(G)|`.
    pub o2_order: u64,
    /// Simple factors of `O^2(G)/S(G)` (case iii).
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub factors: Vec<String>,
    /// Case (iii) shape found with `O^2(G) = G`, where the statement asks
    /// for a proper subgroup.
    pub boundary: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

const CASE_I: [&str; 3] = ["Alt(5)", "PSL(2,7)", "PSL(2,11)"];
const CASE_II: [&str; 2] = ["Sym(5)", "PGL(2,7)"];

/// `q` for a catalog name `PSL(2,q)` (canonical or alias) matching `fp`.
fn psl2_field_size(fp: &crate::structure::Fingerprint) -> Result<Option<u64>> {
    for q in [4u64, 5, 7, 8, 9, 11, 13] {
        if psl2_order(q) == fp.order && fingerprint_has_name(fp, &format!("PSL(2,{q})"))? {
            return Ok(Some(q));
        }
    }
    Ok(None)
}

/// Classifies `g` into the three cases for groups whose maximal subgroups
/// are 2-nilpotent or of prime index.
pub fn classify_theorem_a(g: &PermGroup) -> Result<TheoremAReport> {
    let group = identify(g)?.unwrap_or_else(|| format!("group of order {}", g.order()));
    let radical = solvable_radical(g)?;
    let series = upper_p_series(g, 2)?;
    let o22 = series.term(2);
    let o2 = p_residual(g, 2)?;
    let mut report = TheoremAReport {
        group,
        case: TheoremACase::NotApplicable,
        hypothesis_holds: false,
        radical_order: radical.order(),
        o22_order: o22.order(),
        radical_matches: radical.same_as(o22),
        quotient: None,
        quotient_fingerprint: None,
        o2_order: o2.order(),
        factors: vec![],
        boundary: false,
        note: None,
    };
    if is_solvable(g) {
        report.note = Some("group is solvable".into());
        return Ok(report);
    }
    report.hypothesis_holds = check_hypothesis(g, 2)?.passes();
    if !report.hypothesis_holds {
        report.note = Some("hypothesis fails at p = 2".into());
    } else if !report.radical_matches {
        report.note = Some("discrepancy: S(G) differs from O_{2',2}(G)".into());
    }
    let bar = if radical.is_trivial() {
        g.clone()
    } else {
        quotient(g, &radical)?.image().clone()
    };
    let fp = fingerprint(&bar)?;
    report.quotient_fingerprint = Some(fp.to_string());
    report.quotient = identify_fingerprint(&fp)?;
    if let Some(name) = report.quotient.as_deref() {
        if CASE_I.contains(&name) {
            report.case = TheoremACase::I;
            return Ok(report);
        }
        if CASE_II.contains(&name) {
            report.case = TheoremACase::Ii;
            return Ok(report);
        }
    }
    // case (iii): O^2(G)/S(G) a direct power of PSL_2(q), q in the family
    if !o2.contains_group(&radical) {
        report.case = TheoremACase::Unidentifiable;
        return Ok(report);
    }
    let top = if radical.is_trivial() {
        o2.clone()
    } else {
        quotient(&o2, &radical)?.image().clone()
    };
    let minimals = minimal_normal_subgroups(&top)?;
    let mut field_sizes = Vec::new();
    for n in &minimals {
        let nfp = fingerprint(n)?;
        match psl2_field_size(&nfp)? {
            Some(q) => {
                field_sizes.push(q);
                report.factors.push(format!("PSL(2,{q})"));
            }
            None => {
                report.case = TheoremACase::Unidentifiable;
                return Ok(report);
            }
        }
    }
    let product: u64 = minimals.iter().map(PermGroup::order).product();
    field_sizes.dedup();
    let family = field_sizes.len() == 1 && arith::family_tag(field_sizes[0])?.member;
    if product == top.order() && family {
        report.case = TheoremACase::Iii;
        report.boundary = o2.order() == g.order();
    } else {
        report.case = TheoremACase::Unidentifiable;
    }
    Ok(report)
}

/// Outcome of a series bound: the series reaches `G` within `steps` terms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesVerdict {
    pub group: String,
    pub prime: u64,
    pub orders: Vec<u64>,
    pub p_length: u32,
    /// Number of terms after the trivial one that the statement allows.
    pub steps: usize,
    /// Number of terms after the trivial one needed to reach `G`.
    pub steps_needed: usize,
    pub verdict: Verdict,
}

fn series_verdict(g: &PermGroup, p: u64, steps: usize, max_length: u32) -> Result<SeriesVerdict> {
    let s = upper_p_series(g, p)?;
    let steps_needed = s.terms.len() - 1;
    let ok = s.reaches_group && s.term_order(steps) == g.order() && s.p_length <= max_length;
    Ok(SeriesVerdict {
        group: identify(g)?.unwrap_or_else(|| format!("group of order {}", g.order())),
        prime: p,
        orders: s.orders(),
        p_length: s.p_length,
        steps,
        steps_needed,
        verdict: Verdict::from_bool(ok),
    })
}

/// For solvable `g` satisfying the hypothesis at 2: `O_{2',2,2',2}(G) = G`.
pub fn verify_theorem_b(g: &PermGroup) -> Result<SeriesVerdict> {
    if !is_solvable(g) {
        return Err(Error::Precondition("group is not solvable".into()));
    }
    if !check_hypothesis(g, 2)?.passes() {
        return Err(Error::Precondition("hypothesis fails at p = 2".into()));
    }
    series_verdict(g, 2, 4, 2)
}

/// For odd `p` and `p`-solvable `g` satisfying the hypothesis at `p`:
/// `O_{p',p,p',p,p'}(G) = G`, so the `p`-length is at most 2.
pub fn verify_theorem_d(g: &PermGroup, p: u64) -> Result<SeriesVerdict> {
    if p % 2 == 0 || !arith::is_prime(p) {
        return Err(Error::Precondition(format!("{p} is not an odd prime")));
    }
    if !is_p_solvable(g, p)? {
        return Err(Error::Precondition(format!("group is not {p}-solvable")));
    }
    if !check_hypothesis(g, p)?.passes() {
        return Err(Error::Precondition(format!("hypothesis fails at p = {p}")));
    }
    series_verdict(g, p, 5, 2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Lemma23Case {
    /// `r` is the characteristic.
    #[serde(rename = "1")]
    Defining,
    /// `r` odd, dividing `(q-1)/d`.
    #[serde(rename = "2")]
    Split,
    /// `r` odd, dividing `(q+1)/d`.
    #[serde(rename = "3")]
    NonSplit,
    /// `r = 2`, `q = ±1 (mod 8)`.
    #[serde(rename = "4.1")]
    SelfNormalizing,
    /// `r = 2`, `q = ±3 (mod 8)`.
    #[serde(rename = "4.2")]
    Alt4,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma23Row {
    pub r: u64,
    pub case: Lemma23Case,
    pub sylow_order: u64,
    pub normalizer_order: u64,
    pub expected_normalizer_order: u64,
    /// The structural part of the case: cyclic `N/R` (1), a cyclic subgroup
    /// of index 2 (2, 3), `N = R` (4.1), `N` of type `Alt(4)` (4.2).
    pub shape_holds: bool,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma23Report {
    pub q: u64,
    pub d: u64,
    pub verdict: Verdict,
    #[serde(rename = "row")]
    pub rows: Vec<Lemma23Row>,
}

pub const LEMMA_2_3_MAX_Q: u64 = 19;

fn has_element_of_order(g: &PermGroup, n: u64) -> Result<bool> {
    let e = g.enumeration()?;
    Ok(e.orders().iter().any(|&o| o as u64 == n))
}

/// Sylow normalizers of `PSL_2(q)` against their described structure.
pub fn verify_lemma_2_3(q: u64) -> Result<Lemma23Report> {
    let (char_p, _) = arith::prime_power(q)
        .filter(|_| (4..=LEMMA_2_3_MAX_Q).contains(&q))
        .ok_or_else(|| {
            Error::InvalidParameter(format!("q = {q} must be a prime power in 4..={LEMMA_2_3_MAX_Q}"))
        })?;
    let d = arith::gcd(2, q + 1);
    let g = psl2(q)?;
    let mut rows = Vec::new();
    for r in arith::prime_factors(g.order()) {
        let syl = sylow(&g, r)?.subgroup;
        let n = g.normalizer(&syl)?;
        let (case, expected, shape) = if r == char_p {
            let bar = quotient(&n, &syl)?;
            let cyclic = has_element_of_order(bar.image(), bar.image().order())?;
            (Lemma23Case::Defining, q * (q - 1) / d, cyclic)
        } else if r != 2 {
            let (case, m) = if ((q - 1) / d) % r == 0 {
                (Lemma23Case::Split, (q - 1) / d)
            } else {
                (Lemma23Case::NonSplit, (q + 1) / d)
            };
            (case, 2 * m, has_element_of_order(&n, m)?)
        } else if matches!(q % 8, 1 | 7) {
            (Lemma23Case::SelfNormalizing, syl.order(), n.same_as(&syl))
        } else {
            (Lemma23Case::Alt4, 12, fingerprint_has_name(&fingerprint(&n)?, "Alt(4)")?)
        };
        rows.push(Lemma23Row {
            r,
            case,
            sylow_order: syl.order(),
            normalizer_order: n.order(),
            expected_normalizer_order: expected,
            shape_holds: shape,
            holds: shape && n.order() == expected,
        });
    }
    Ok(Lemma23Report {
        q,
        d,
        verdict: Verdict::from_bool(rows.iter().all(|r| r.holds)),
        rows,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma41Row {
    /// Order of the minimal normal subgroup `N`.
    pub normal_order: u64,
    /// `(index, order)` of a non-`p`-nilpotent maximal class not containing `N`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<(u64, u64)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_type: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma41Report {
    pub group: String,
    pub prime: u64,
    pub verdict: Verdict,
    #[serde(rename = "row")]
    pub rows: Vec<Lemma41Row>,
}

/// For each minimal normal subgroup `N` that is not `p`-solvable, looks for
/// a maximal subgroup that neither contains `N` nor is `p`-nilpotent.
pub fn verify_lemma_4_1(g: &PermGroup, p: u64) -> Result<Lemma41Report> {
    if p % 2 == 0 || !arith::is_prime(p) {
        return Err(Error::Precondition(format!("{p} is not an odd prime")));
    }
    let mut qualifying = Vec::new();
    for n in minimal_normal_subgroups(g)? {
        if !is_p_solvable(&n, p)? {
            qualifying.push(n);
        }
    }
    if qualifying.is_empty() {
        return Err(Error::Precondition(format!(
            "no minimal normal subgroup fails to be {p}-solvable"
        )));
    }
    let classes = maximal_classes(g)?;
    let mut rows = Vec::new();
    for n in &qualifying {
        let mut witness = None;
        for c in &classes {
            let m = &c.representative;
            if !m.contains_group(n) && !is_p_nilpotent(m, p)? {
                witness = Some((c, identify(m)?));
                break;
            }
        }
        rows.push(Lemma41Row {
            normal_order: n.order(),
            witness: witness.as_ref().map(|(c, _)| (c.index, c.order)),
            witness_type: witness.and_then(|(_, name)| name),
        });
    }
    Ok(Lemma41Report {
        group: identify(g)?.unwrap_or_else(|| format!("group of order {}", g.order())),
        prime: p,
        verdict: Verdict::from_bool(rows.iter().all(|r| r.witness.is_some())),
        rows,
    })
}
