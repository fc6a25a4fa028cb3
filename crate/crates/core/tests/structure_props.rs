use std::collections::HashSet;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use pnil::arith::{self, p_part};
use pnil::construct::{alternating, corpus, psl, psl2};
use pnil::lattice::{maximal_classes, normal_subgroups};
use pnil::structure::{
    catalog, coset_action, core, fingerprint, identify, is_p_nilpotent, is_simple, is_supersolvable,
    p_prime_core, quotient, upper_p_series, upper_p_series_by_lattice,
};
use pnil::{Perm, PermGroup};

mod common;
use common::p_nilpotent_by_closure;

const PRIMES: [u64; 5] = [2, 3, 5, 7, 11];

#[test]
fn p_nilpotency_three_ways() {
    for (name, g) in corpus().unwrap() {
        for p in PRIMES {
            let ours = is_p_nilpotent(&g, p).unwrap();
            let k = p_prime_core(&g, p).unwrap();
            assert_eq!(ours, g.order() / k.order() == p_part(g.order(), p), "{name} p={p}");
            assert_eq!(ours, p_nilpotent_by_closure(&g, p), "{name} p={p}");
        }
    }
}

#[test]
fn series_routes_agree() {
    for (name, g) in corpus().unwrap() {
        for p in arith::prime_factors(g.order()) {
            let a = upper_p_series(&g, p).unwrap();
            let b = upper_p_series_by_lattice(&g, p).unwrap();
            assert_eq!(a.orders(), b.orders(), "{name} p={p}");
            assert_eq!(a.p_length, b.p_length, "{name} p={p}");
            for (s, t) in a.terms.iter().zip(&b.terms) {
                assert!(s.group.same_as(&t.group), "{name} p={p}");
                assert!(g.is_normal(&s.group), "{name} p={p}");
            }
            // a stalled series (not p-solvable) also has no p-steps
            if a.reaches_group {
                let o = p_prime_core(&g, p).unwrap();
                assert_eq!(a.p_length == 0, o.order() == g.order(), "{name} p={p}");
            }
        }
    }
}

#[test]
fn huppert_prime_index_iff_supersolvable() {
    for (name, g) in corpus().unwrap() {
        if g.order() > 2000 {
            continue;
        }
        let all_prime = maximal_classes(&g)
            .unwrap()
            .iter()
            .all(|m| arith::is_prime(m.index));
        assert_eq!(all_prime, is_supersolvable(&g).unwrap(), "{name}");
    }
}

#[test]
fn homomorphism_orders_multiply() {
    for (name, g) in corpus().unwrap() {
        for n in normal_subgroups(&g).unwrap() {
            let h = quotient(&g, &n).unwrap();
            assert_eq!(h.kernel().order() * h.image().order(), g.order(), "{name}");
            assert!(h.kernel().same_as(&n), "{name}");
        }
        for m in maximal_classes(&g).unwrap() {
            if m.index > 200 {
                continue;
            }
            let h = coset_action(&g, &m.representative).unwrap();
            assert_eq!(h.kernel().order() * h.image().order(), g.order(), "{name}");
            assert!(h.kernel().same_as(&core(&g, &m.representative).unwrap()), "{name}");
        }
    }
}

#[test]
fn fingerprints_survive_relabeling() {
    let mut rng = StdRng::seed_from_u64(11);
    for entry in catalog().unwrap() {
        let g = entry.group().unwrap();
        assert_eq!(fingerprint(&g).unwrap(), entry.fingerprint, "{}", entry.name);
        for _ in 0..5 {
            let mut v: Vec<usize> = (0..g.degree()).collect();
            v.shuffle(&mut rng);
            let x = Perm::from_images(v).unwrap();
            let h = g.conjugate(&x);
            assert_eq!(fingerprint(&h).unwrap(), entry.fingerprint, "{}", entry.name);
            assert_eq!(identify(&h).unwrap().as_deref(), Some(entry.name));
        }
    }
}

#[test]
fn isomorphic_constructions_share_fingerprints() {
    let f = |g: PermGroup| fingerprint(&g).unwrap();
    assert_eq!(f(psl(3, 2).unwrap()), f(psl2(7).unwrap()));
    let a5 = f(alternating(5).unwrap());
    assert_eq!(f(psl2(4).unwrap()), a5);
    assert_eq!(f(psl2(5).unwrap()), a5);
}

#[test]
fn psl2_is_simple_and_two_transitive() {
    for q in [4, 5, 7, 8, 9, 11, 13] {
        let g = psl2(q).unwrap();
        assert!(is_simple(&g).unwrap(), "q={q}");
        let n = g.degree();
        let mut pairs = HashSet::new();
        for x in g.elements().unwrap() {
            pairs.insert((x.apply(0), x.apply(1)));
        }
        assert_eq!(pairs.len(), n * (n - 1), "q={q}");
    }
}

#[test]
fn trivial_group_conventions() {
    let g = PermGroup::trivial(3);
    for p in PRIMES {
        assert!(is_p_nilpotent(&g, p).unwrap());
        assert_eq!(upper_p_series(&g, p).unwrap().p_length, 0);
    }
    assert!(is_supersolvable(&g).unwrap());
    assert!(pnil::structure::is_solvable(&g));
}
