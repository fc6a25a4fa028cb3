//! Structural predicates: p-nilpotency, cores, the upper p'p-series,
//! radicals, solvability, supersolvability, simplicity.

mod fingerprint;
mod hom;

pub use fingerprint::{
    catalog, fingerprint, fingerprint_has_name, identify, identify_fingerprint, CatalogEntry,
    Fingerprint,
};
pub use hom::{coset_action, quotient, Homomorphism};

use serde::Serialize;

use crate::arith;
use crate::enumerate::ElemSet;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::lattice::normal_sets;

/// The normal Hall `p'`-subgroup, if `g` is `p`-nilpotent.
///
/// The `p'`-elements always number at least `|G|_{p'}`; they generate a
/// subgroup of exactly that order iff they are closed under products.
pub fn normal_p_complement(g: &PermGroup, p: u64) -> Result<Option<PermGroup>> {
    let e = g.enumeration()?;
    let target = g.order() / arith::p_part(g.order(), p);
    let orders = e.orders();
    let mut s = e.trivial();
    for i in 0..e.len() as u32 {
        if orders[i as usize] as u64 % p != 0 && !s.contains(i) {
            s = e.extend(&s, i);
            if s.order() as u64 > target {
                return Ok(None);
            }
        }
    }
    if s.order() as u64 != target {
        return Ok(None);
    }
    let hall = g.group_of(&e, &s);
    assert!(g.is_normal(&hall), "normal Hall p'-subgroup");
    Ok(Some(hall))
}

/// `O^p(G)`: the subgroup generated by the `p'`-elements, the smallest
/// normal subgroup with a `p`-group quotient.
pub fn p_residual(g: &PermGroup, p: u64) -> Result<PermGroup> {
    let e = g.enumeration()?;
    let orders = e.orders();
    let mut s = e.trivial();
    for i in 0..e.len() as u32 {
        if orders[i as usize] as u64 % p != 0 && !s.contains(i) {
            s = e.extend(&s, i);
        }
    }
    Ok(g.group_of(&e, &s))
}

pub fn is_p_nilpotent(g: &PermGroup, p: u64) -> Result<bool> {
    Ok(normal_p_complement(g, p)?.is_some())
}

/// The unique largest member of `family`, checked to contain every other.
fn largest(family: Vec<&ElemSet>) -> ElemSet {
    let top = family
        .iter()
        .max_by_key(|s| s.order())
        .copied()
        .expect("trivial subgroup always qualifies")
        .clone();
    assert!(family.iter().all(|s| s.is_subset(&top)), "largest member is unique");
    top
}

fn core_by(g: &PermGroup, keep: impl Fn(u64) -> bool) -> Result<PermGroup> {
    let (e, normals) = normal_sets(g)?;
    let top = largest(normals.iter().filter(|s| keep(s.order() as u64)).collect());
    Ok(g.group_of(&e, &top))
}

/// `O_p(G)`: the largest normal `p`-subgroup.
pub fn p_core(g: &PermGroup, p: u64) -> Result<PermGroup> {
    core_by(g, |n| arith::is_p_power(n, p))
}

/// `O_{p'}(G)`: the largest normal `p'`-subgroup.
pub fn p_prime_core(g: &PermGroup, p: u64) -> Result<PermGroup> {
    core_by(g, |n| n % p != 0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StepKind {
    PPrime,
    P,
}

#[derive(Clone, Debug)]
pub struct SeriesTerm {
    /// `None` for the initial trivial term.
    pub kind: Option<StepKind>,
    pub group: PermGroup,
    pub order: u64,
}

/// The upper `p'p`-series `1 <= O_{p'} <= O_{p',p} <= ...`.
#[derive(Clone, Debug)]
pub struct PSeriesRecord {
    pub prime: u64,
    /// Starts at the trivial group; one entry per step until the series
    /// reaches `G` or stops growing.
    pub terms: Vec<SeriesTerm>,
    /// Number of `p`-steps with a nontrivial factor.
    pub p_length: u32,
    pub reaches_group: bool,
}

impl PSeriesRecord {
    /// The term after `k` steps, `O_{p', p, ...}` with `k` subscripts.
    pub fn term(&self, k: usize) -> &PermGroup {
        &self.terms[k.min(self.terms.len() - 1)].group
    }

    pub fn term_order(&self, k: usize) -> u64 {
        self.terms[k.min(self.terms.len() - 1)].order
    }

    pub fn orders(&self) -> Vec<u64> {
        self.terms.iter().map(|t| t.order).collect()
    }

    /// Term orders with repeats removed.
    pub fn distinct_orders(&self) -> Vec<u64> {
        let mut v = self.orders();
        v.dedup();
        v
    }
}

fn step_core(g: &PermGroup, kind: StepKind, p: u64) -> Result<PermGroup> {
    match kind {
        StepKind::PPrime => p_prime_core(g, p),
        StepKind::P => p_core(g, p),
    }
}

/// The upper `p'p`-series via quotients: each step pulls back the `p'`- or
/// `p`-core of `G/K`.
pub fn upper_p_series(g: &PermGroup, p: u64) -> Result<PSeriesRecord> {
    series_with(g, p, |g, k, kind| {
        if k.is_trivial() {
            return step_core(g, kind, p);
        }
        let h = quotient(g, k)?;
        let core = step_core(h.image(), kind, p)?;
        h.preimage(&core)
    })
}

/// The same series computed inside the normal-subgroup lattice of `G`: the
/// next term is the largest normal `L >= K` with `|L : K|` a `p'`-number
/// (or a power of `p`).
pub fn upper_p_series_by_lattice(g: &PermGroup, p: u64) -> Result<PSeriesRecord> {
    let (e, normals) = normal_sets(g)?;
    series_with(g, p, |g, k, kind| {
        let ks = g.set_of(&e, k)?;
        let family: Vec<&ElemSet> = normals
            .iter()
            .filter(|l| ks.is_subset(l))
            .filter(|l| {
                let idx = (l.order() / ks.order()) as u64;
                match kind {
                    StepKind::PPrime => idx % p != 0,
                    StepKind::P => arith::is_p_power(idx, p),
                }
            })
            .collect();
        Ok(g.group_of(&e, &largest(family)))
    })
}

fn series_with(
    g: &PermGroup,
    p: u64,
    mut next: impl FnMut(&PermGroup, &PermGroup, StepKind) -> Result<PermGroup>,
) -> Result<PSeriesRecord> {
    if !arith::is_prime(p) {
        return Err(Error::InvalidParameter(format!("{p} is not prime")));
    }
    let n = g.order();
    let mut k = PermGroup::trivial(g.degree());
    let mut terms = vec![SeriesTerm {
        kind: None,
        group: k.clone(),
        order: 1,
    }];
    let mut p_length = 0;
    let mut kind = StepKind::PPrime;
    while k.order() < n {
        let l = next(g, &k, kind)?;
        let grew = l.order() > k.order();
        if !grew && terms.len() > 1 {
            break;
        }
        if grew && kind == StepKind::P {
            p_length += 1;
        }
        terms.push(SeriesTerm {
            kind: Some(kind),
            order: l.order(),
            group: l.clone(),
        });
        k = l;
        kind = match kind {
            StepKind::PPrime => StepKind::P,
            StepKind::P => StepKind::PPrime,
        };
    }
    Ok(PSeriesRecord {
        prime: p,
        terms,
        p_length,
        reaches_group: k.order() == n,
    })
}

pub fn is_p_solvable(g: &PermGroup, p: u64) -> Result<bool> {
    Ok(upper_p_series(g, p)?.reaches_group)
}

fn radical_by(g: &PermGroup, keep: impl Fn(&PermGroup) -> Result<bool>) -> Result<PermGroup> {
    let (e, normals) = normal_sets(g)?;
    let mut family = Vec::new();
    for s in &normals {
        if keep(&g.group_of(&e, s))? {
            family.push(s);
        }
    }
    Ok(g.group_of(&e, &largest(family)))
}

/// `S(G)`: the largest normal solvable subgroup.
pub fn solvable_radical(g: &PermGroup) -> Result<PermGroup> {
    radical_by(g, |n| Ok(is_solvable(n)))
}

/// `S_p(G)`: the largest normal `p`-solvable subgroup.
pub fn p_solvable_radical(g: &PermGroup, p: u64) -> Result<PermGroup> {
    radical_by(g, |n| is_p_solvable(n, p))
}

/// `G, G', G'', ...` down to the point where it stabilizes.
pub fn derived_series(g: &PermGroup) -> Vec<PermGroup> {
    let mut out = vec![g.clone()];
    loop {
        let last = out.last().unwrap();
        let d = last.derived_subgroup();
        if d.order() == last.order() {
            return out;
        }
        out.push(d);
    }
}

pub fn is_solvable(g: &PermGroup) -> bool {
    derived_series(g).last().unwrap().is_trivial()
}

/// Number of steps to the trivial group, or `None` if `g` is not solvable.
pub fn derived_length(g: &PermGroup) -> Option<u32> {
    let s = derived_series(g);
    s.last()
        .unwrap()
        .is_trivial()
        .then(|| s.len() as u32 - 1)
}

/// `G = γ_1 >= γ_2 = [G, G] >= γ_3 = [γ_2, G] ...` until it stabilizes.
pub fn lower_central_series(g: &PermGroup) -> Vec<PermGroup> {
    let mut out = vec![g.clone()];
    loop {
        let last = out.last().unwrap();
        let next = g
            .commutator_subgroup(last, g)
            .expect("series terms lie in G");
        if next.order() == last.order() {
            return out;
        }
        out.push(next);
    }
}

pub fn is_nilpotent(g: &PermGroup) -> bool {
    lower_central_series(g).last().unwrap().is_trivial()
}

pub fn nilpotency_class(g: &PermGroup) -> Result<u32> {
    let s = lower_central_series(g);
    if !s.last().unwrap().is_trivial() {
        return Err(Error::Precondition("group is not nilpotent".into()));
    }
    Ok(s.len() as u32 - 1)
}

/// A chain of normal subgroups of `G` from 1 to `G` with every step of
/// prime index, found by depth-first search over the normal lattice.
pub fn is_supersolvable(g: &PermGroup) -> Result<bool> {
    if g.is_trivial() {
        return Ok(true);
    }
    let (_, normals) = normal_sets(g)?;
    let n = normals.len();
    let full = g.order() as usize;
    let mut visited = vec![false; n];
    let mut stack = vec![0usize];
    visited[0] = true;
    debug_assert_eq!(normals[0].order(), 1);
    while let Some(i) = stack.pop() {
        if normals[i].order() == full {
            return Ok(true);
        }
        for j in 0..n {
            if visited[j] || normals[j].order() <= normals[i].order() {
                continue;
            }
            let idx = (normals[j].order() / normals[i].order()) as u64;
            if normals[j].order() % normals[i].order() == 0
                && arith::is_prime(idx)
                && normals[i].is_subset(&normals[j])
            {
                visited[j] = true;
                stack.push(j);
            }
        }
    }
    Ok(false)
}

/// Exactly two normal subgroups (so abelian groups of prime order count).
pub fn is_simple(g: &PermGroup) -> Result<bool> {
    Ok(normal_sets(g)?.1.len() == 2)
}

/// `core_G(H)`: the intersection of the conjugates of `H`.
pub fn core(g: &PermGroup, h: &PermGroup) -> Result<PermGroup> {
    let e = g.enumeration()?;
    let hs = g.set_of(&e, h)?;
    let mut bits = hs.bits.clone();
    for x in 0..e.len() as u32 {
        let c = e.conjugate_set(&hs, x);
        bits.intersect_with(&c.bits);
    }
    Ok(g.group_of(&e, &e.closed_elem_set(&bits)))
}
