//! Full element lists and index arithmetic.
//!
//! Elements are sorted lexicographically by image array. Each element is
//! identified by its images of the stabilizer-chain base, which makes the
//! index of a product `a * b` computable from `O(|base|)` point lookups.

use std::sync::{Arc, OnceLock};

use fixedbitset::FixedBitSet;
use rustc_hash::FxHashMap;

use crate::chain::StabChain;
use crate::perm::Perm;

enum KeyIndex {
    Packed(FxHashMap<u128, u32>),
    Wide(FxHashMap<Box<[u16]>, u32>),
}

/// The enumerated elements of a permutation group.
pub struct Enumeration {
    elements: Vec<Perm>,
    base: Vec<usize>,
    index: KeyIndex,
    identity: u32,
    inverses: OnceLock<Vec<u32>>,
    orders: OnceLock<Vec<u32>>,
    classes: OnceLock<Vec<Vec<u32>>>,
    pub(crate) normal_cache: OnceLock<Vec<ElemSet>>,
    pub(crate) lattice_cache: OnceLock<Arc<crate::lattice::Lattice>>,
}

/// A subgroup of an enumerated group, as a bitset over the parent's indices.
#[derive(Clone, Debug)]
pub(crate) struct ElemSet {
    pub bits: FixedBitSet,
    pub elems: Vec<u32>,
    pub gens: Vec<u32>,
}

impl ElemSet {
    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn contains(&self, i: u32) -> bool {
        self.bits.contains(i as usize)
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.elems.len() <= other.elems.len() && self.bits.is_subset(&other.bits)
    }
}

impl Enumeration {
    pub(crate) fn new(chain: &StabChain) -> Self {
        let mut elements = chain.elements();
        elements.sort_unstable();
        let base = chain.base();
        let index = if base.len() <= 8 {
            let mut m = FxHashMap::default();
            m.reserve(elements.len());
            for (i, e) in elements.iter().enumerate() {
                m.insert(pack(&base, |b| e.apply(b)), i as u32);
            }
            KeyIndex::Packed(m)
        } else {
            let mut m = FxHashMap::default();
            for (i, e) in elements.iter().enumerate() {
                let key: Box<[u16]> = base.iter().map(|&b| e.apply(b) as u16).collect();
                m.insert(key, i as u32);
            }
            KeyIndex::Wide(m)
        };
        let identity = elements
            .binary_search(&Perm::identity(chain.degree()))
            .expect("identity is an element") as u32;
        Enumeration {
            elements,
            base,
            index,
            identity,
            inverses: OnceLock::new(),
            orders: OnceLock::new(),
            classes: OnceLock::new(),
            normal_cache: OnceLock::new(),
            lattice_cache: OnceLock::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: u32) -> &Perm {
        &self.elements[i as usize]
    }

    pub fn identity(&self) -> u32 {
        self.identity
    }

    fn lookup(&self, image_of_base: impl Fn(usize) -> usize) -> Option<u32> {
        match &self.index {
            KeyIndex::Packed(m) => m.get(&pack(&self.base, image_of_base)).copied(),
            KeyIndex::Wide(m) => {
                let key: Box<[u16]> = self.base.iter().map(|&b| image_of_base(b) as u16).collect();
                m.get(&key).copied()
            }
        }
    }

    /// Index of `g`, or `None` if `g` is not an element.
    pub fn index_of(&self, g: &Perm) -> Option<u32> {
        if g.degree() != self.elements[0].degree() {
            return None;
        }
        let i = self.lookup(|b| g.apply(b))?;
        (self.elements[i as usize] == *g).then_some(i)
    }

    /// Index of `a * b` (apply `a`, then `b`).
    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        let (pa, pb) = (&self.elements[a as usize], &self.elements[b as usize]);
        self.lookup(|x| pb.apply(pa.apply(x)))
            .expect("group is closed under products")
    }

    pub fn inv(&self, a: u32) -> u32 {
        self.inverses()[a as usize]
    }

    /// `b^-1 a b`.
    pub fn conj(&self, a: u32, b: u32) -> u32 {
        self.mul(self.mul(self.inv(b), a), b)
    }

    fn inverses(&self) -> &[u32] {
        self.inverses.get_or_init(|| {
            self.elements
                .iter()
                .map(|e| {
                    let inv = e.inverse();
                    self.lookup(|x| inv.apply(x)).expect("inverse is an element")
                })
                .collect()
        })
    }

    /// Element orders, aligned with the element list.
    pub fn orders(&self) -> &[u32] {
        self.orders
            .get_or_init(|| self.elements.iter().map(|e| e.order() as u32).collect())
    }

    /// Conjugacy classes as sorted index lists, ordered by smallest member.
    pub(crate) fn classes(&self, gens: &[u32]) -> &[Vec<u32>] {
        self.classes.get_or_init(|| {
            let n = self.len();
            let mut seen = FixedBitSet::with_capacity(n);
            let mut out = Vec::new();
            for start in 0..n as u32 {
                if seen.contains(start as usize) {
                    continue;
                }
                seen.insert(start as usize);
                let mut class = vec![start];
                let mut k = 0;
                while k < class.len() {
                    let x = class[k];
                    for &s in gens {
                        let y = self.conj(x, s);
                        if !seen.contains(y as usize) {
                            seen.insert(y as usize);
                            class.push(y);
                        }
                    }
                    k += 1;
                }
                class.sort_unstable();
                out.push(class);
            }
            out
        })
    }

    pub(crate) fn trivial(&self) -> ElemSet {
        let mut bits = FixedBitSet::with_capacity(self.len());
        bits.insert(self.identity as usize);
        ElemSet {
            bits,
            elems: vec![self.identity],
            gens: Vec::new(),
        }
    }

    pub(crate) fn full(&self, gens: &[u32]) -> ElemSet {
        let mut bits = FixedBitSet::with_capacity(self.len());
        bits.insert_range(..);
        ElemSet {
            bits,
            elems: (0..self.len() as u32).collect(),
            gens: gens.to_vec(),
        }
    }

    /// `<h, g>` by Dimino's coset extension.
    pub(crate) fn extend(&self, h: &ElemSet, g: u32) -> ElemSet {
        if h.contains(g) {
            return h.clone();
        }
        let mut gens = h.gens.clone();
        gens.push(g);
        let mut bits = h.bits.clone();
        let mut elems = h.elems.clone();
        let mut reps = vec![self.identity];
        let mut k = 0;
        while k < reps.len() {
            let r = reps[k];
            for &s in &gens {
                let t = self.mul(r, s);
                if !bits.contains(t as usize) {
                    for &x in &h.elems {
                        let y = self.mul(x, t);
                        bits.insert(y as usize);
                        elems.push(y);
                    }
                    reps.push(t);
                }
            }
            k += 1;
        }
        ElemSet { bits, elems, gens }
    }

    pub(crate) fn closure(&self, gens: &[u32]) -> ElemSet {
        gens.iter()
            .fold(self.trivial(), |acc, &g| self.extend(&acc, g))
    }

    pub(crate) fn join(&self, a: &ElemSet, b: &ElemSet) -> ElemSet {
        if b.is_subset(a) {
            return a.clone();
        }
        if a.is_subset(b) {
            return b.clone();
        }
        b.gens.iter().fold(a.clone(), |acc, &g| self.extend(&acc, g))
    }

    /// A subgroup from an element set known to be closed, with a short
    /// generating set chosen greedily in index order.
    pub(crate) fn closed_elem_set(&self, bits: &FixedBitSet) -> ElemSet {
        let mut cur = self.trivial();
        for i in bits.ones() {
            if !cur.contains(i as u32) {
                cur = self.extend(&cur, i as u32);
            }
        }
        debug_assert_eq!(cur.bits, *bits, "set was not a subgroup");
        cur
    }

    /// Conjugate `h` by element `x`, mapping every element.
    pub(crate) fn conjugate_set(&self, h: &ElemSet, x: u32) -> ElemSet {
        let mut bits = FixedBitSet::with_capacity(self.len());
        let elems: Vec<u32> = h
            .elems
            .iter()
            .map(|&e| {
                let y = self.conj(e, x);
                bits.insert(y as usize);
                y
            })
            .collect();
        let gens = h.gens.iter().map(|&e| self.conj(e, x)).collect();
        ElemSet { bits, elems, gens }
    }

    pub(crate) fn is_normalized_by(&self, h: &ElemSet, x: u32) -> bool {
        h.gens.iter().all(|&e| h.contains(self.conj(e, x)))
    }
}

fn pack(base: &[usize], f: impl Fn(usize) -> usize) -> u128 {
    base.iter()
        .fold(0u128, |acc, &b| (acc << 16) | f(b) as u128)
}
