//! Independent oracles shared by the integration tests.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;

use pnil::{Perm, PermGroup};

/// Brute-force subgroup lattice: elements indexed by a private hash map,
/// subgroups as plain bit vectors.
pub struct Oracle {
    elems: Vec<Perm>,
    mul: Vec<Vec<u32>>,
    words: usize,
}

pub type Bits = Vec<u64>;

impl Oracle {
    pub fn new(g: &PermGroup) -> Self {
        let elems = g.elements().unwrap();
        let index: HashMap<&Perm, u32> = elems.iter().enumerate().map(|(i, p)| (p, i as u32)).collect();
        let mul = elems
            .par_iter()
            .map(|a| elems.iter().map(|b| index[&a.then(b)]).collect())
            .collect();
        let words = elems.len().div_ceil(64);
        Oracle { elems, mul, words }
    }

    pub fn closure(&self, gens: &[u32]) -> Bits {
        let e = self.elems.iter().position(Perm::is_identity).unwrap() as u32;
        let mut bits = vec![0u64; self.words];
        let mut stack = vec![e];
        bits[e as usize / 64] |= 1 << (e % 64);
        while let Some(x) = stack.pop() {
            for &s in gens {
                let y = self.mul[x as usize][s as usize];
                let (w, b) = (y as usize / 64, y % 64);
                if bits[w] & (1 << b) == 0 {
                    bits[w] |= 1 << b;
                    stack.push(y);
                }
            }
        }
        bits
    }

    pub fn members(bits: &Bits) -> Vec<u32> {
        let mut v = Vec::new();
        for (w, &word) in bits.iter().enumerate() {
            for b in 0..64 {
                if word & (1 << b) != 0 {
                    v.push((w * 64 + b) as u32);
                }
            }
        }
        v
    }

    pub fn subset(a: &Bits, b: &Bits) -> bool {
        a.iter().zip(b).all(|(x, y)| x & !y == 0)
    }

    /// All subgroups with at most two generators, closed under pairwise join.
    pub fn lattice(&self) -> HashMap<Bits, Vec<u32>> {
        let n = self.elems.len() as u32;
        let mut found: HashMap<Bits, Vec<u32>> = (0..n)
            .into_par_iter()
            .flat_map_iter(|a| (a..n).map(move |b| (a, b)))
            .map(|(a, b)| (self.closure(&[a, b]), vec![a, b]))
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
        loop {
            let subs: Vec<(&Bits, &Vec<u32>)> = found.iter().collect();
            let fresh: HashSet<Bits> = (0..subs.len())
                .into_par_iter()
                .flat_map_iter(|i| (0..i).map(move |j| (i, j)))
                .filter_map(|(i, j)| {
                    let (a, ga) = subs[i];
                    let (b, gb) = subs[j];
                    if Self::subset(a, b) || Self::subset(b, a) {
                        return None;
                    }
                    let gens: Vec<u32> = ga.iter().chain(gb).copied().collect();
                    let j = self.closure(&gens);
                    (!found.contains_key(&j)).then_some(j)
                })
                .collect();
            if fresh.is_empty() {
                return found;
            }
            for b in fresh {
                let gens = Self::members(&b);
                found.insert(b, gens);
            }
        }
    }
}

pub fn keyed(g: &PermGroup) -> Vec<Vec<u16>> {
    let mut v: Vec<Vec<u16>> = g.elements().unwrap().iter().map(|p| p.images().to_vec()).collect();
    v.sort();
    v
}

pub fn oracle_sets(o: &Oracle) -> HashSet<Vec<Vec<u16>>> {
    o.lattice()
        .keys()
        .map(|bits| {
            let mut v: Vec<Vec<u16>> = Oracle::members(bits)
                .into_iter()
                .map(|i| o.elems[i as usize].images().to_vec())
                .collect();
            v.sort();
            v
        })
        .collect()
}

/// Order of the subgroup generated by the `p'`-elements, by plain closure.
pub fn p_prime_closure_order(g: &PermGroup, p: u64) -> u64 {
    let elems = g.elements().unwrap();
    let gens: Vec<&Perm> = elems.iter().filter(|x| x.order() % p != 0).collect();
    let mut seen: HashSet<Perm> = HashSet::from([Perm::identity(g.degree())]);
    let mut stack = vec![Perm::identity(g.degree())];
    while let Some(x) = stack.pop() {
        for s in &gens {
            let y = x.then(s);
            if seen.insert(y.clone()) {
                stack.push(y);
            }
        }
    }
    seen.len() as u64
}

/// `G` is p-nilpotent iff its `p'`-elements generate a `p'`-group.
pub fn p_nilpotent_by_closure(g: &PermGroup, p: u64) -> bool {
    !p_prime_closure_order(g, p).is_multiple_of(p)
}
