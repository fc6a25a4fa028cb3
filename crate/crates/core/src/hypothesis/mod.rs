//! The maximal-subgroup hypothesis: every maximal subgroup is `p`-nilpotent
//! or has prime index.

mod large;
mod theorems;

pub use large::{
    large_group_catalog, psl3_512_entry, psl5_2_entry, DescriptorKind, LargeGroupCatalogEntry,
    MaximalDescriptor,
};
pub use theorems::{
    classify_theorem_a, verify_lemma_2_3, verify_lemma_4_1, verify_theorem_b, verify_theorem_d,
    Lemma23Case, Lemma23Report, Lemma23Row, Lemma41Report, Lemma41Row, SeriesVerdict,
    TheoremACase, TheoremAReport,
};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::lattice::maximal_classes;
use crate::report::{decimal, Verdict};
use crate::structure::{fingerprint, identify_fingerprint, is_p_nilpotent};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    /// Maximal classes from the exhaustive subgroup lattice.
    Lattice,
    /// Maximal subgroups from an embedded catalog entry.
    Catalog,
}

/// How the `p`-nilpotency flag of a row was settled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Basis {
    /// The `p'`-elements of the representative generate a normal Hall subgroup.
    Closure,
    /// `p` does not divide the order.
    CoprimeOrder,
    /// Not decided (catalog row with `p` dividing the order and no construction).
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaximalRow {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(with = "decimal")]
    pub order: u128,
    #[serde(with = "decimal")]
    pub index: u128,
    /// Number of conjugate subgroups in the class (lattice rows), or the
    /// number of classes the row stands for (catalog rows).
    pub multiplicity: u64,
    pub prime_index: bool,
    pub p_nilpotent: bool,
    pub basis: Basis,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub identified: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fingerprint: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub generators: Vec<String>,
}

impl MaximalRow {
    pub fn passes(&self) -> bool {
        self.prime_index || self.p_nilpotent
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HypothesisReport {
    pub group: String,
    #[serde(with = "decimal")]
    pub order: u128,
    pub prime: u64,
    pub source: Source,
    pub verdict: Verdict,
    /// Positions in `rows` of the classes that fail both conditions.
    pub witnesses: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fingerprint: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
    #[serde(rename = "row")]
    pub rows: Vec<MaximalRow>,
}

impl HypothesisReport {
    fn assemble(
        group: String,
        order: u128,
        prime: u64,
        source: Source,
        mut rows: Vec<MaximalRow>,
    ) -> Self {
        rows.sort_by(|a, b| (a.index, a.order, &a.label).cmp(&(b.index, b.order, &b.label)));
        let witnesses: Vec<usize> = (0..rows.len()).filter(|&i| !rows[i].passes()).collect();
        let note = (order % prime as u128 != 0)
            .then(|| format!("{prime} does not divide the group order; every subgroup is {prime}-nilpotent"));
        HypothesisReport {
            group,
            order,
            prime,
            source,
            verdict: Verdict::from_bool(witnesses.is_empty()),
            witnesses,
            fingerprint: None,
            note,
            elapsed_ms: None,
            rows,
        }
    }

    pub fn passes(&self) -> bool {
        self.verdict.is_pass()
    }

    pub fn witness_rows(&self) -> impl Iterator<Item = &MaximalRow> {
        self.witnesses.iter().map(|&i| &self.rows[i])
    }

    /// Identified names of the failing classes, sorted, without repeats.
    pub fn witness_names(&self) -> Vec<String> {
        let mut v: Vec<String> = self
            .witness_rows()
            .map(|r| r.identified.clone().unwrap_or_else(|| format!("order-{}", r.order)))
            .collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn with_group_name(mut self, name: &str) -> Self {
        self.group = name.to_string();
        self
    }
}

/// Runs the hypothesis over the exhaustive list of maximal classes.
pub fn check_hypothesis(g: &PermGroup, p: u64) -> Result<HypothesisReport> {
    if !arith::is_prime(p) {
        return Err(Error::InvalidParameter(format!("{p} is not prime")));
    }
    let classes = maximal_classes(g)?;
    let rows = classes
        .par_iter()
        .map(|c| -> Result<MaximalRow> {
            let rep = &c.representative;
            let fp = fingerprint(rep)?;
            Ok(MaximalRow {
                label: None,
                order: c.order as u128,
                index: c.index as u128,
                multiplicity: c.class_length,
                prime_index: arith::is_prime(c.index),
                p_nilpotent: is_p_nilpotent(rep, p)?,
                basis: if c.order % p == 0 {
                    Basis::Closure
                } else {
                    Basis::CoprimeOrder
                },
                identified: identify_fingerprint(&fp)?,
                fingerprint: Some(fp.to_string()),
                generators: rep
                    .with_reduced_generators()
                    .generators()
                    .iter()
                    .map(ToString::to_string)
                    .collect(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let fp = fingerprint(g)?;
    let name = identify_fingerprint(&fp)?.unwrap_or_else(|| format!("group of order {}", g.order()));
    let mut report = HypothesisReport::assemble(name, g.order() as u128, p, Source::Lattice, rows);
    report.fingerprint = Some(fp.to_string());
    Ok(report)
}

/// Runs the hypothesis over a catalog entry's maximal-subgroup descriptors.
pub fn check_hypothesis_catalog(entry: &LargeGroupCatalogEntry, p: u64) -> Result<HypothesisReport> {
    if !arith::is_prime(p) {
        return Err(Error::InvalidParameter(format!("{p} is not prime")));
    }
    entry.validate()?;
    let rows = entry
        .maximals
        .iter()
        .map(|d| d.row(p, entry.order))
        .collect::<Result<Vec<_>>>()?;
    Ok(HypothesisReport::assemble(
        entry.name.clone(),
        entry.order,
        p,
        Source::Catalog,
        rows,
    ))
}
