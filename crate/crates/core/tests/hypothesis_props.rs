use pnil::arith;
use pnil::construct::{alternating, corpus, pgl2, psl2, symmetric};
use pnil::hypothesis::{
    check_hypothesis, check_hypothesis_catalog, classify_theorem_a, psl5_2_entry, verify_lemma_4_1,
    verify_theorem_b, verify_theorem_d, HypothesisReport, TheoremACase,
};
use pnil::lattice::{minimal_normal_subgroups, sylow};
use pnil::report::{Check, Document};
use pnil::structure::{is_p_solvable, is_solvable, nilpotency_class};
use pnil::{Error, PermGroup};

mod common;
use common::p_nilpotent_by_closure;

const PRIMES: [u64; 4] = [2, 3, 5, 7];

fn composite_by_trial_division(n: u128) -> bool {
    n > 3 && (2..).take_while(|d: &u128| d * d <= n).any(|d| n.is_multiple_of(d))
}

/// Rebuilds every witness from its recorded generators and re-derives both
/// reasons it fails.
fn assert_sound(r: &HypothesisReport, degree: usize) {
    for w in r.witness_rows() {
        assert!(composite_by_trial_division(w.index) || w.index == 1, "{}: index {}", r.group, w.index);
        let gens: Vec<&str> = w.generators.iter().map(String::as_str).collect();
        let m = PermGroup::from_cycles(degree, &gens).unwrap();
        assert_eq!(m.order() as u128, w.order);
        assert!(!p_nilpotent_by_closure(&m, r.prime), "{}", r.group);
    }
}

#[test]
fn reports_are_sound_on_corpus() {
    for (name, g) in corpus().unwrap() {
        for p in PRIMES {
            let r = check_hypothesis(&g, p).unwrap();
            assert_eq!(r.passes(), r.witnesses.is_empty(), "{name}");
            assert_sound(&r, g.degree());
            let mut sorted = r.rows.clone();
            sorted.sort_by_key(|row| (row.index, row.order));
            let keys: Vec<_> = r.rows.iter().map(|row| (row.index, row.order)).collect();
            assert_eq!(keys, sorted.iter().map(|row| (row.index, row.order)).collect::<Vec<_>>());
        }
    }
}

#[test]
fn nonsolvable_passing_groups_get_a_case() {
    for (name, g) in corpus().unwrap() {
        if is_solvable(&g) || !check_hypothesis(&g, 2).unwrap().passes() {
            continue;
        }
        let a = classify_theorem_a(&g).unwrap();
        assert!(a.hypothesis_holds);
        assert!(
            matches!(a.case, TheoremACase::I | TheoremACase::Ii | TheoremACase::Iii),
            "{name}: {:?}",
            a.case
        );
    }
}

/// The class bound on Sylow subgroups does not follow from the hypothesis:
/// every p-group satisfies it (all maximal subgroups have index p), so
/// p-groups of class 3 break it. This pins the corpus counterexamples and
/// checks the bound everywhere else.
#[test]
fn sylow_class_bound_and_its_counterexamples() {
    let mut broken = Vec::new();
    for (name, g) in corpus().unwrap() {
        for p in arith::prime_factors(g.order()) {
            let regime = if p == 2 {
                is_solvable(&g)
            } else {
                is_p_solvable(&g, p).unwrap()
            };
            if !regime || !check_hypothesis(&g, p).unwrap().passes() {
                continue;
            }
            let s = sylow(&g, p).unwrap().subgroup;
            if nilpotency_class(&s).unwrap() > 2 {
                broken.push((name, p));
            }
        }
    }
    assert_eq!(broken, [("D(16)", 2), ("C3wrC3", 3), ("Ex324_160", 3)]);
}

#[test]
fn series_theorems_hold_on_corpus() {
    let mut checked = 0;
    for (name, g) in corpus().unwrap() {
        if is_solvable(&g) && check_hypothesis(&g, 2).unwrap().passes() {
            assert!(verify_theorem_b(&g).unwrap().verdict.is_pass(), "{name}");
            checked += 1;
        }
        for p in arith::prime_factors(g.order()).into_iter().filter(|&p| p > 2) {
            if is_p_solvable(&g, p).unwrap() && check_hypothesis(&g, p).unwrap().passes() {
                let v = verify_theorem_d(&g, p).unwrap();
                assert!(v.verdict.is_pass() && v.p_length <= 2, "{name} p={p}");
                checked += 1;
            }
        }
    }
    assert!(checked > 20);
}

#[test]
fn lemma_4_1_on_every_qualifying_instance() {
    let mut qualifying = 0;
    for (name, g) in corpus().unwrap() {
        for p in arith::prime_factors(g.order()).into_iter().filter(|&p| p > 2) {
            let any = minimal_normal_subgroups(&g)
                .unwrap()
                .iter()
                .any(|n| !is_p_solvable(n, p).unwrap());
            match verify_lemma_4_1(&g, p) {
                Ok(r) => {
                    assert!(any, "{name} p={p}");
                    assert!(r.verdict.is_pass(), "{name} p={p}");
                    qualifying += 1;
                }
                Err(Error::Precondition(_)) => assert!(!any, "{name} p={p}"),
                Err(e) => panic!("{name} p={p}: {e}"),
            }
        }
    }
    assert!(qualifying >= 10, "{qualifying}");
}

#[test]
fn negative_controls() {
    let cases: [(PermGroup, u64, &str); 5] = [
        (alternating(5).unwrap(), 5, "D10"),
        (psl2(11).unwrap(), 3, "D12"),
        (psl2(11).unwrap(), 11, "C11:C5"),
        (pgl2(11).unwrap(), 2, "Sym(4)"),
        (symmetric(5).unwrap(), 5, "C5:C4"),
    ];
    for (g, p, witness) in cases {
        let r = check_hypothesis(&g, p).unwrap();
        assert!(!r.passes());
        assert_eq!(r.witness_names(), vec![witness.to_string()], "{} p={p}", r.group);
        assert_sound(&r, g.degree());
    }
}

#[test]
fn reports_round_trip_through_toml() {
    let r = check_hypothesis(&pgl2(7).unwrap(), 2).unwrap();
    let c = check_hypothesis_catalog(&psl5_2_entry(), 5).unwrap();
    let doc = Document::new(vec![Check::Hypothesis(r), Check::Hypothesis(c)]);
    let text = doc.to_toml();
    assert!(text.starts_with("version = 1"));
    assert_eq!(Document::from_toml(&text).unwrap(), doc);
    let bumped = text.replacen("version = 1", "version = 99", 1);
    assert!(Document::from_toml(&bumped).is_err());
}
