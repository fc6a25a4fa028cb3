use std::collections::HashSet;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use pnil::construct::corpus;
use pnil::Perm;

fn perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(v).unwrap())
}

fn perms3(n: usize) -> impl Strategy<Value = (Perm, Perm, Perm)> {
    (perm(n), perm(n), perm(n))
}

proptest! {
    #[test]
    fn then_applies_left_first((g, h, _) in perms3(9)) {
        let gh = g.then(&h);
        for x in 0..9 {
            prop_assert_eq!(gh.apply(x), h.apply(g.apply(x)));
        }
    }

    #[test]
    fn group_laws((a, b, c) in perms3(12)) {
        let e = Perm::identity(12);
        prop_assert_eq!(a.then(&b).then(&c), a.then(&b.then(&c)));
        prop_assert_eq!(a.then(&a.inverse()), e.clone());
        prop_assert_eq!(a.inverse().then(&a), e.clone());
        prop_assert_eq!(a.then(&e), a.clone());
        prop_assert_eq!(a.then(&b).inverse(), b.inverse().then(&a.inverse()));
    }

    #[test]
    fn order_and_powers(a in perm(10)) {
        let k = a.order();
        prop_assert!(a.pow(k as i64).is_identity());
        prop_assert_eq!(a.pow(-1), a.inverse());
        for d in 1..k {
            if k % d == 0 {
                prop_assert!(!a.pow(d as i64).is_identity());
            }
        }
    }

    #[test]
    fn cycle_notation_round_trips(a in perm(11)) {
        let text = a.to_string();
        prop_assert_eq!(Perm::parse(&text, 11).unwrap(), a.clone());
        let spaced = text.replace(',', " ");
        prop_assert_eq!(Perm::parse(&spaced, 11).unwrap(), a);
    }

    #[test]
    fn conjugation_is_a_relabeling((a, x, _) in perms3(8)) {
        let c = a.conjugate_by(&x);
        prop_assert_eq!(c.order(), a.order());
        let lens = |p: &Perm| {
            let mut v: Vec<usize> = p.cycles().iter().map(Vec::len).collect();
            v.sort();
            v
        };
        prop_assert_eq!(lens(&c), lens(&a));
    }
}

#[test]
fn malformed_cycles_are_rejected() {
    for bad in ["(1,2", "(1,1)", "(0,1)", "(1,9)", "(a,b)", "(1,2)(2,3)"] {
        assert!(Perm::parse(bad, 4).is_err(), "{bad}");
    }
}

fn random_word(gens: &[Perm], degree: usize, rng: &mut StdRng) -> Perm {
    let mut g = Perm::identity(degree);
    for _ in 0..rng.gen_range(0..30) {
        g = g.then(gens.choose(rng).unwrap());
    }
    g
}

fn random_perm(degree: usize, rng: &mut StdRng) -> Perm {
    let mut v: Vec<usize> = (0..degree).collect();
    v.shuffle(rng);
    Perm::from_images(v).unwrap()
}

#[test]
fn chain_agrees_with_enumeration_on_corpus() {
    let mut rng = StdRng::seed_from_u64(7);
    for (name, g) in corpus().unwrap() {
        let elems = g.elements().unwrap();
        assert_eq!(elems.len() as u64, g.order(), "{name}");
        let set: HashSet<Perm> = elems.iter().cloned().collect();
        assert_eq!(set.len(), elems.len(), "{name}: repeated elements");

        // closure under the generators
        for x in elems.iter().take(200) {
            for s in g.generators() {
                assert!(set.contains(&x.then(s)), "{name}");
            }
        }

        // sift membership against the element set
        for i in 0..500 {
            let x = if i % 2 == 0 && !g.generators().is_empty() {
                random_word(g.generators(), g.degree(), &mut rng)
            } else {
                random_perm(g.degree(), &mut rng)
            };
            assert_eq!(g.contains(&x).unwrap(), set.contains(&x), "{name}: {x}");
        }

        // compose pointwise on random pairs of elements
        for _ in 0..200 {
            let a = elems.choose(&mut rng).unwrap();
            let b = elems.choose(&mut rng).unwrap();
            let ab = a.then(b);
            assert!(set.contains(&ab));
            for x in 0..g.degree() {
                assert_eq!(ab.apply(x), b.apply(a.apply(x)));
            }
        }

        let classes = g.conjugacy_classes().unwrap();
        let total: usize = classes.iter().map(|c| c.1).sum();
        assert_eq!(total as u64, g.order(), "{name}");
        assert!(classes.iter().all(|c| g.order() % c.1 as u64 == 0), "{name}");
    }
}
