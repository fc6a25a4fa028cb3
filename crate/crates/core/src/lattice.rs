//! Exhaustive subgroup enumeration.
//!
//! Subgroups are found one conjugacy class at a time. Starting from the
//! trivial subgroup, every class representative `H` is extended by each
//! element `g` outside it (one `g` per right coset `Hg`, since `<H, g>`
//! depends only on the coset). Every subgroup `K > 1` has a maximal subgroup
//! `M` and equals `<M, g>` for any `g` in `K \ M`, so conjugating `M` onto
//! its class representative shows every class is reached. The same pass
//! decides maximality: a proper `H` is maximal iff every such extension is
//! the whole group.
//!
//! Subgroups are keyed by their element bitset over the parent enumeration.

use std::collections::VecDeque;
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use rustc_hash::FxHashMap;

use crate::arith;
use crate::chain::StabChain;
use crate::enumerate::{ElemSet, Enumeration};
use crate::error::{Error, Result};
use crate::group::{normalizer_bits, PermGroup};
use crate::limits;

/// One conjugacy class of subgroups.
#[derive(Clone, Debug)]
pub struct SubgroupClass {
    pub representative: PermGroup,
    pub order: u64,
    /// Number of conjugates, `|G : N_G(rep)|`.
    pub class_length: u64,
    pub is_maximal: bool,
    /// `|G : rep|`.
    pub index: u64,
}

#[derive(Clone, Debug)]
pub(crate) struct ClassData {
    pub rep: ElemSet,
    pub conjugates: Vec<ElemSet>,
    pub is_maximal: bool,
}

/// All subgroup classes of one enumerated group.
pub struct Lattice {
    pub(crate) classes: Vec<ClassData>,
}

impl Lattice {
    fn compute(g: &PermGroup, e: &Enumeration) -> Lattice {
        let gens = g.generator_indices(e);
        let n = e.len();
        let full_order = n as u64;
        let mut seen: FxHashMap<FixedBitSet, usize> = FxHashMap::default();
        let mut classes: Vec<ClassData> = Vec::new();
        let mut queue = VecDeque::new();

        let add_class = |k: ElemSet, seen: &mut FxHashMap<FixedBitSet, usize>, classes: &mut Vec<ClassData>| -> usize {
            if let Some(&c) = seen.get(&k.bits) {
                return c;
            }
            let id = classes.len();
            let conjugates = conjugate_orbit(e, &gens, k.clone());
            for c in &conjugates {
                seen.insert(c.bits.clone(), id);
            }
            classes.push(ClassData {
                rep: k,
                conjugates,
                is_maximal: false,
            });
            id
        };

        let trivial = e.trivial();
        let id = add_class(trivial, &mut seen, &mut classes);
        queue.push_back(id);
        // extensions reaching G are skipped below, so G is added up front
        add_class(e.full(&gens), &mut seen, &mut classes);

        while let Some(c) = queue.pop_front() {
            let h = classes[c].rep.clone();
            if h.order() == n {
                continue;
            }
            let mut covered = h.bits.clone();
            let mut reps = Vec::new();
            for x in 0..n as u32 {
                if covered.contains(x as usize) {
                    continue;
                }
                for &y in &h.elems {
                    covered.insert(e.mul(y, x) as usize);
                }
                reps.push(x);
            }
            let degree = g.degree();
            let h_gens: Vec<_> = h.gens.iter().map(|&i| e.element(i).clone()).collect();
            let extensions: Vec<Option<ElemSet>> = reps
                .par_iter()
                .map(|&x| {
                    let mut gs = h_gens.clone();
                    gs.push(e.element(x).clone());
                    if StabChain::new(degree, &gs).order() == full_order {
                        None
                    } else {
                        Some(e.extend(&h, x))
                    }
                })
                .collect();
            let mut maximal = true;
            for k in extensions.into_iter().flatten() {
                maximal = false;
                let before = classes.len();
                let id = add_class(k, &mut seen, &mut classes);
                if id == before {
                    queue.push_back(id);
                }
            }
            classes[c].is_maximal = maximal;
        }

        classes.sort_by(|a, b| {
            (a.rep.order(), a.conjugates.len(), &a.rep.elems).cmp(&(b.rep.order(), b.conjugates.len(), &b.rep.elems))
        });
        Lattice { classes }
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn subgroup_count(&self) -> usize {
        self.classes.iter().map(|c| c.conjugates.len()).sum()
    }
}

fn conjugate_orbit(e: &Enumeration, gens: &[u32], k: ElemSet) -> Vec<ElemSet> {
    let mut seen: rustc_hash::FxHashSet<FixedBitSet> = Default::default();
    seen.insert(k.bits.clone());
    let mut orbit = vec![k];
    let mut i = 0;
    while i < orbit.len() {
        for &s in gens {
            let c = e.conjugate_set(&orbit[i], s);
            if seen.insert(c.bits.clone()) {
                orbit.push(c);
            }
        }
        i += 1;
    }
    orbit
}

fn check_cutoff(g: &PermGroup) -> Result<()> {
    let order = g.order();
    let cutoff = limits::lattice_cutoff();
    if order > cutoff {
        return Err(Error::CutoffExceeded {
            what: "lattice",
            order,
            cutoff,
        });
    }
    Ok(())
}

pub(crate) fn lattice(g: &PermGroup) -> Result<(Arc<Enumeration>, Arc<Lattice>)> {
    check_cutoff(g)?;
    let e = g.enumeration()?;
    let l = e
        .lattice_cache
        .get_or_init(|| Arc::new(Lattice::compute(g, &e)))
        .clone();
    Ok((e, l))
}

/// Every subgroup of `g`, each exactly once.
pub fn all_subgroups(g: &PermGroup) -> Result<Vec<PermGroup>> {
    let (e, l) = lattice(g)?;
    Ok(l.classes
        .iter()
        .flat_map(|c| c.conjugates.iter())
        .map(|s| g.group_of(&e, s))
        .collect())
}

/// Conjugacy classes of subgroups, by increasing order.
pub fn subgroup_classes(g: &PermGroup) -> Result<Vec<SubgroupClass>> {
    let (e, l) = lattice(g)?;
    let n = g.order();
    Ok(l.classes
        .iter()
        .map(|c| SubgroupClass {
            representative: g.group_of(&e, &c.rep),
            order: c.rep.order() as u64,
            class_length: c.conjugates.len() as u64,
            is_maximal: c.is_maximal,
            index: n / c.rep.order() as u64,
        })
        .collect())
}

/// Classes of maximal subgroups, by increasing index.
pub fn maximal_classes(g: &PermGroup) -> Result<Vec<SubgroupClass>> {
    let mut out: Vec<SubgroupClass> = subgroup_classes(g)?
        .into_iter()
        .filter(|c| c.is_maximal)
        .collect();
    out.sort_by_key(|c| (c.index, c.class_length));
    Ok(out)
}

/// Normal subgroups as element sets: joins of normal closures of
/// conjugacy classes, closed under pairwise joins.
pub(crate) fn normal_sets(g: &PermGroup) -> Result<(Arc<Enumeration>, Vec<ElemSet>)> {
    let (e, classes) = g.class_lists()?;
    let gens = g.generator_indices(&e);
    let normals = e
        .normal_cache
        .get_or_init(|| {
            let mut found: Vec<ElemSet> = Vec::new();
            let mut keys: rustc_hash::FxHashSet<FixedBitSet> = Default::default();
            let mut push = |s: ElemSet, found: &mut Vec<ElemSet>| {
                if keys.insert(s.bits.clone()) {
                    found.push(s);
                }
            };
            for class in &classes {
                let nc = normal_closure_set(&e, &gens, class[0]);
                push(nc, &mut found);
            }
            let mut i = 0;
            while i < found.len() {
                let mut j = 0;
                while j < i {
                    let joined = e.join(&found[i], &found[j]);
                    push(joined, &mut found);
                    j += 1;
                }
                i += 1;
            }
            found.sort_by(|a, b| (a.order(), &a.elems).cmp(&(b.order(), &b.elems)));
            found
        })
        .clone();
    Ok((e, normals))
}

fn normal_closure_set(e: &Enumeration, gens: &[u32], x: u32) -> ElemSet {
    let mut n = e.closure(&[x]);
    'grow: loop {
        for &y in &n.gens.clone() {
            for &s in gens {
                let c = e.conj(y, s);
                if !n.contains(c) {
                    n = e.extend(&n, c);
                    continue 'grow;
                }
            }
        }
        return n;
    }
}

/// Every normal subgroup, by increasing order.
pub fn normal_subgroups(g: &PermGroup) -> Result<Vec<PermGroup>> {
    let (e, normals) = normal_sets(g)?;
    Ok(normals.iter().map(|s| g.group_of(&e, s)).collect())
}

/// Minimal nontrivial normal subgroups.
pub fn minimal_normal_subgroups(g: &PermGroup) -> Result<Vec<PermGroup>> {
    let (e, normals) = normal_sets(g)?;
    let nontrivial: Vec<&ElemSet> = normals.iter().filter(|s| s.order() > 1).collect();
    Ok(nontrivial
        .iter()
        .filter(|s| {
            !nontrivial
                .iter()
                .any(|t| t.order() < s.order() && t.is_subset(s))
        })
        .map(|s| g.group_of(&e, s))
        .collect())
}

/// A Sylow `p`-subgroup. `is_trivial_flag` is set when `p` does not divide
/// `|G|`.
#[derive(Clone, Debug)]
pub struct SylowSubgroup {
    pub prime: u64,
    pub subgroup: PermGroup,
    pub p_does_not_divide: bool,
}

/// Builds a Sylow subgroup upward: start from a cyclic subgroup of largest
/// `p`-power order and repeatedly adjoin an element of the normalizer whose
/// coset has order `p`.
pub fn sylow(g: &PermGroup, p: u64) -> Result<SylowSubgroup> {
    if !arith::is_prime(p) {
        return Err(Error::InvalidParameter(format!("{p} is not prime")));
    }
    let target = arith::p_part(g.order(), p);
    if target == 1 {
        return Ok(SylowSubgroup {
            prime: p,
            subgroup: PermGroup::trivial(g.degree()),
            p_does_not_divide: true,
        });
    }
    let e = g.enumeration()?;
    let orders = e.orders();
    let start = (0..e.len() as u32)
        .filter(|&i| arith::is_p_power(orders[i as usize] as u64, p))
        .max_by_key(|&i| (orders[i as usize], std::cmp::Reverse(i)))
        .expect("identity is a p-element");
    let mut p_sub = e.closure(&[start]);
    while (p_sub.order() as u64) < target {
        let norm = normalizer_bits(&e, &p_sub);
        let y = norm
            .ones()
            .map(|i| i as u32)
            .find(|&y| !p_sub.contains(y) && p_sub.contains(pow_index(&e, y, p)))
            .expect("a non-Sylow p-subgroup has p | |N(P):P|");
        p_sub = e.extend(&p_sub, y);
    }
    debug_assert_eq!(p_sub.order() as u64, target);
    Ok(SylowSubgroup {
        prime: p,
        subgroup: g.group_of(&e, &p_sub),
        p_does_not_divide: false,
    })
}

fn pow_index(e: &Enumeration, x: u32, k: u64) -> u32 {
    (1..k).fold(x, |acc, _| e.mul(acc, x))
}
