//! Finitely generated permutation groups.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::chain::StabChain;
use crate::enumerate::{ElemSet, Enumeration};
use crate::error::{Error, Result};
use crate::limits;
use crate::perm::Perm;

/// A permutation group given by generators.
///
/// The stabilizer chain and the element list are computed on first use and
/// then shared; both caches are filled through [`OnceLock`], so concurrent
/// readers either see nothing or the finished value.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    chain: OnceLock<StabChain>,
    enumeration: OnceLock<Arc<Enumeration>>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Perm>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch(degree, g.degree()));
        }
        Ok(PermGroup {
            degree,
            generators,
            chain: OnceLock::new(),
            enumeration: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::new(degree, Vec::new()).expect("no generators")
    }

    /// Parses 1-based cycle strings, one per generator.
    pub fn from_cycles(degree: usize, gens: &[&str]) -> Result<Self> {
        let gens = gens
            .iter()
            .map(|s| Perm::parse(s, degree))
            .collect::<Result<Vec<_>>>()?;
        PermGroup::new(degree, gens)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.degree)
    }

    pub fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| StabChain::new(self.degree, &self.generators))
    }

    pub fn order(&self) -> u64 {
        self.chain().order()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn contains(&self, g: &Perm) -> Result<bool> {
        if g.degree() != self.degree {
            return Err(Error::DegreeMismatch(self.degree, g.degree()));
        }
        Ok(self.chain().contains(g))
    }

    /// `true` if every generator of `other` lies in `self`.
    pub fn contains_group(&self, other: &PermGroup) -> bool {
        other.degree == self.degree
            && other.generators.iter().all(|g| self.chain().contains(g))
    }

    /// Equality as sets of permutations.
    pub fn same_as(&self, other: &PermGroup) -> bool {
        self.order() == other.order() && self.contains_group(other)
    }

    pub fn enumeration(&self) -> Result<Arc<Enumeration>> {
        if let Some(e) = self.enumeration.get() {
            return Ok(e.clone());
        }
        let order = self.order();
        let cutoff = limits::enumeration_cutoff();
        if order > cutoff {
            return Err(Error::CutoffExceeded {
                what: "enumeration",
                order,
                cutoff,
            });
        }
        Ok(self
            .enumeration
            .get_or_init(|| Arc::new(Enumeration::new(self.chain())))
            .clone())
    }

    /// All elements, sorted lexicographically by image array.
    pub fn elements(&self) -> Result<Vec<Perm>> {
        Ok(self.enumeration()?.elements().to_vec())
    }

    pub(crate) fn generator_indices(&self, e: &Enumeration) -> Vec<u32> {
        self.generators
            .iter()
            .filter(|g| !g.is_identity())
            .map(|g| e.index_of(g).expect("generator is an element"))
            .collect()
    }

    /// A subgroup `h` of `self` as an element set of `self`'s enumeration.
    pub(crate) fn set_of(&self, e: &Enumeration, h: &PermGroup) -> Result<ElemSet> {
        if h.degree != self.degree {
            return Err(Error::DegreeMismatch(self.degree, h.degree));
        }
        let gens = h
            .generators
            .iter()
            .map(|g| e.index_of(g).ok_or_else(|| Error::NotInGroup(g.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Ok(e.closure(&gens))
    }

    pub(crate) fn group_of(&self, e: &Enumeration, s: &ElemSet) -> PermGroup {
        let gens = s.gens.iter().map(|&i| e.element(i).clone()).collect();
        PermGroup::new(self.degree, gens).expect("same degree")
    }

    /// The subgroup generated by `gens`, which must lie in `self`.
    pub fn generated_subgroup(&self, gens: &[Perm]) -> Result<PermGroup> {
        for g in gens {
            if !self.contains(g)? {
                return Err(Error::NotInGroup(g.to_string()));
            }
        }
        let sub = PermGroup::new(self.degree, gens.to_vec())?;
        assert_eq!(self.order() % sub.order(), 0, "Lagrange");
        Ok(sub)
    }

    /// Conjugacy classes as (smallest element, class size), ordered by
    /// representative.
    pub fn conjugacy_classes(&self) -> Result<Vec<(Perm, usize)>> {
        let e = self.enumeration()?;
        let gens = self.generator_indices(&e);
        Ok(e.classes(&gens)
            .iter()
            .map(|c| (e.element(c[0]).clone(), c.len()))
            .collect())
    }

    pub(crate) fn class_lists(&self) -> Result<(Arc<Enumeration>, Vec<Vec<u32>>)> {
        let e = self.enumeration()?;
        let gens = self.generator_indices(&e);
        let classes = e.classes(&gens).to_vec();
        Ok((e, classes))
    }

    /// `N_G(H)` by scanning every element of `G`.
    pub fn normalizer(&self, h: &PermGroup) -> Result<PermGroup> {
        let e = self.enumeration()?;
        let hs = self.set_of(&e, h)?;
        let bits = normalizer_bits(&e, &hs);
        let n = e.closed_elem_set(&bits);
        Ok(self.group_of(&e, &n))
    }

    /// `C_G(H)` by scanning every element of `G`.
    pub fn centralizer(&self, h: &PermGroup) -> Result<PermGroup> {
        let e = self.enumeration()?;
        let hs = self.set_of(&e, h)?;
        let mut bits = fixedbitset::FixedBitSet::with_capacity(e.len());
        for x in 0..e.len() as u32 {
            if hs.gens.iter().all(|&g| e.mul(x, g) == e.mul(g, x)) {
                bits.insert(x as usize);
            }
        }
        let c = e.closed_elem_set(&bits);
        Ok(self.group_of(&e, &c))
    }

    pub fn center(&self) -> Result<PermGroup> {
        self.centralizer(self)
    }

    /// Smallest normal subgroup of `self` containing `gens`.
    pub fn normal_closure(&self, gens: &[Perm]) -> Result<PermGroup> {
        let start = self.generated_subgroup(gens)?;
        Ok(normal_closure_in(&self.generators, start))
    }

    /// `[A, B]`: the normal closure in `<A, B>` of the commutators of
    /// generators.
    pub fn commutator_subgroup(&self, a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
        for x in a.generators.iter().chain(&b.generators) {
            if !self.contains(x)? {
                return Err(Error::NotInGroup(x.to_string()));
            }
        }
        let ambient: Vec<Perm> = a.generators.iter().chain(&b.generators).cloned().collect();
        let comms: Vec<Perm> = a
            .generators
            .iter()
            .flat_map(|x| b.generators.iter().map(move |y| x.commutator(y)))
            .filter(|c| !c.is_identity())
            .collect();
        let start = PermGroup::new(self.degree, comms)?;
        Ok(normal_closure_in(&ambient, start))
    }

    pub fn derived_subgroup(&self) -> PermGroup {
        self.commutator_subgroup(self, self)
            .expect("generators lie in the group")
    }

    /// Every generator commutes with every other.
    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        g.iter()
            .enumerate()
            .all(|(i, a)| g[i + 1..].iter().all(|b| a.then(b) == b.then(a)))
    }

    /// `true` if `h` is a subgroup of `self` normalized by `self`'s generators.
    pub fn is_normal(&self, h: &PermGroup) -> bool {
        self.contains_group(h)
            && self.generators.iter().all(|g| {
                h.generators
                    .iter()
                    .all(|x| h.chain().contains(&x.conjugate_by(g)))
            })
    }

    /// Relabel points: the group `x^-1 G x`.
    pub fn conjugate(&self, x: &Perm) -> PermGroup {
        let gens = self.generators.iter().map(|g| g.conjugate_by(x)).collect();
        PermGroup::new(self.degree, gens).expect("same degree")
    }

    /// Drops generators already generated by earlier ones.
    pub fn with_reduced_generators(&self) -> PermGroup {
        let mut kept: Vec<Perm> = Vec::new();
        let mut chain = StabChain::new(self.degree, &[]);
        for g in &self.generators {
            if !chain.contains(g) {
                kept.push(g.clone());
                chain = StabChain::new(self.degree, &kept);
            }
        }
        PermGroup::new(self.degree, kept).expect("same degree")
    }

    /// Orbits of the natural action, 0-based, sorted.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for s in 0..self.degree {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut orb = vec![s];
            let mut k = 0;
            while k < orb.len() {
                for g in &self.generators {
                    let y = g.apply(orb[k]);
                    if !seen[y] {
                        seen[y] = true;
                        orb.push(y);
                    }
                }
                k += 1;
            }
            orb.sort_unstable();
            out.push(orb);
        }
        out
    }
}

pub(crate) fn normalizer_bits(e: &Enumeration, h: &ElemSet) -> fixedbitset::FixedBitSet {
    let mut bits = fixedbitset::FixedBitSet::with_capacity(e.len());
    for x in 0..e.len() as u32 {
        if e.is_normalized_by(h, x) {
            bits.insert(x as usize);
        }
    }
    bits
}

fn normal_closure_in(ambient: &[Perm], start: PermGroup) -> PermGroup {
    let mut n = start;
    'grow: loop {
        for x in n.generators.clone() {
            for g in ambient {
                let c = x.conjugate_by(g);
                if !n.chain().contains(&c) {
                    let mut gens = n.generators.clone();
                    gens.push(c);
                    n = PermGroup::new(n.degree, gens).expect("same degree");
                    continue 'grow;
                }
            }
        }
        return n;
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermGroup(degree {}, <", self.degree)?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(">)")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(n: usize) -> PermGroup {
        let cyc: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        PermGroup::from_cycles(n, &["(1,2)", &format!("({})", cyc.join(","))]).unwrap()
    }

    #[test]
    fn orders() {
        assert_eq!(sym(4).order(), 24);
        let a5 = PermGroup::from_cycles(5, &["(1,2,3)", "(3,4,5)"]).unwrap();
        assert_eq!(a5.order(), 60);
        assert_eq!(a5.elements().unwrap().len(), 60);
    }

    #[test]
    fn membership() {
        let a4 = PermGroup::from_cycles(4, &["(1,2,3)", "(2,3,4)"]).unwrap();
        assert!(a4.contains(&Perm::parse("(1,2)(3,4)", 4).unwrap()).unwrap());
        assert!(!a4.contains(&Perm::parse("(1,2)", 4).unwrap()).unwrap());
        assert!(a4.contains(&Perm::parse("(1,2)", 5).unwrap()).is_err());
    }

    #[test]
    fn generated_subgroups() {
        let s3 = sym(3);
        let c3 = s3.generated_subgroup(&[Perm::parse("(1,2,3)", 3).unwrap()]).unwrap();
        assert_eq!(c3.order(), 3);
        assert_eq!(s3.generated_subgroup(&[]).unwrap().order(), 1);
        let s4 = sym(4);
        assert!(s3.generated_subgroup(&[Perm::parse("(1,4)", 4).unwrap()]).is_err());
        // the 2'-elements of Sym(3) are e, (1,2,3), (1,3,2)
        let odd: Vec<Perm> = s3
            .elements()
            .unwrap()
            .into_iter()
            .filter(|g| g.order() % 2 == 1)
            .collect();
        assert_eq!(odd.len(), 3);
        assert_eq!(s3.generated_subgroup(&odd).unwrap().order(), 3);
        assert_eq!(s4.order(), 24);
    }

    #[test]
    fn element_list_is_sorted_and_cutoff_enforced() {
        let els = sym(4).elements().unwrap();
        assert!(els.windows(2).all(|w| w[0] < w[1]));
        assert!(matches!(sym(9).elements(), Err(Error::CutoffExceeded { .. })));
    }

    #[test]
    fn conjugacy_classes_of_sym3() {
        let mut sizes: Vec<usize> = sym(3)
            .conjugacy_classes()
            .unwrap()
            .into_iter()
            .map(|c| c.1)
            .collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 3]);
    }

    #[test]
    fn normalizer_of_four_cycle_in_sym4() {
        let s4 = sym(4);
        let c4 = PermGroup::from_cycles(4, &["(1,2,3,4)"]).unwrap();
        assert_eq!(s4.normalizer(&c4).unwrap().order(), 8);
        let a4 = PermGroup::from_cycles(4, &["(1,2,3)", "(2,3,4)"]).unwrap();
        assert_eq!(a4.normalizer(&a4).unwrap().order(), 12);
    }

    #[test]
    fn centralizer_closure_commutator() {
        let s3 = sym(3);
        assert_eq!(s3.centralizer(&PermGroup::trivial(3)).unwrap().order(), 6);
        assert_eq!(s3.commutator_subgroup(&s3, &s3).unwrap().order(), 3);
        let a5 = PermGroup::from_cycles(5, &["(1,2,3)", "(3,4,5)"]).unwrap();
        let nc = a5.normal_closure(&[Perm::parse("(1,2,3)", 5).unwrap()]).unwrap();
        assert_eq!(nc.order(), 60);
        assert_eq!(sym(4).center().unwrap().order(), 1);
    }
}
