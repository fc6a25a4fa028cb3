use num_bigint::BigUint;
use proptest::prelude::*;

use pnil::arith::{
    family_tag, is_prime, is_primitive_prime_divisor, multiplicative_order, prime_factors, prime_power,
    primality, theorem_c_candidates, Primality,
};

fn trial_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn brute_order(a: u64, p: u64) -> Option<u64> {
    if a.is_multiple_of(p) {
        return None;
    }
    let mut x = a % p;
    let mut k = 1;
    while x != 1 {
        x = x * a % p;
        k += 1;
    }
    Some(k)
}

#[test]
fn primality_matches_trial_division() {
    for n in 0..20_000 {
        assert_eq!(is_prime(n), trial_prime(n), "{n}");
    }
    assert!(is_prime(262_657));
    assert!(is_prime(2_147_483_647));
    assert!(!is_prime(3_215_031_751)); // strong pseudoprime to bases 2, 3, 5, 7
}

proptest! {
    #[test]
    fn prime_power_matches_factorization(n in 1u64..200_000) {
        let f = prime_factors(n);
        let expected = match f.as_slice() {
            [r] => {
                let mut m = 0;
                let mut k = n;
                while k % r == 0 { k /= r; m += 1; }
                Some((*r, m))
            }
            _ => None,
        };
        prop_assert_eq!(prime_power(n), expected);
    }

    #[test]
    fn multiplicative_order_by_iteration(a in 2u64..50, i in 0usize..200) {
        let primes: Vec<u64> = (3..2000).filter(|&n| trial_prime(n)).collect();
        let p = primes[i % primes.len()];
        prop_assert_eq!(multiplicative_order(a, p), brute_order(a, p));
    }
}

#[test]
fn primitive_prime_divisors_by_definition() {
    for n in 1..=20u64 {
        for p in (3..200).filter(|&p| trial_prime(p)) {
            let divides = |i: u64| ((BigUint::from(2u8) << (i - 1)) - 1u8) % p == BigUint::from(0u8);
            let expected = divides(n) && (1..n).all(|i| !divides(i));
            assert_eq!(is_primitive_prime_divisor(2, n, p), expected, "n={n} p={p}");
        }
    }
}

#[test]
fn sieve_triples() {
    let find = |p, n_max, d_max| theorem_c_candidates(p, n_max, d_max).unwrap();
    let t3 = find(3, 7, 3);
    assert!(t3.iter().any(|t| (t.n, t.d, t.q_point_count.as_str()) == (3, 1, "7")));
    let t5 = find(5, 7, 3);
    assert!(t5.iter().any(|t| (t.n, t.d, t.q_point_count.as_str()) == (5, 1, "31")));
    let t19 = find(19, 5, 11);
    let hit = t19.iter().find(|t| (t.n, t.d) == (3, 9)).unwrap();
    assert_eq!(hit.q_point_count, "262657");
    assert_eq!(hit.point_count_primality, Primality::Prime);
    for t in t3.iter().chain(&t5).chain(&t19) {
        assert!(t.revalidate(), "{t:?}");
    }
    assert!(theorem_c_candidates(2, 5, 5).is_err());
    assert!(theorem_c_candidates(9, 5, 5).is_err());
}

#[test]
fn large_point_counts_are_not_decided() {
    let big = (BigUint::from(1u8) << 89) - 1u8;
    assert_eq!(primality(&big), Primality::Unverified);
    assert_eq!(primality(&BigUint::from(91u8)), Primality::Composite);
}

#[test]
fn family_tags() {
    let t = family_tag(9).unwrap();
    assert!(t.member && t.r == 3 && t.m == 2);
    assert!(family_tag(7).unwrap().member);
    assert!(family_tag(7).unwrap().mersenne);
    assert!(!family_tag(11).unwrap().member);
    assert!(!family_tag(8).unwrap().member);
    assert!(family_tag(81).unwrap().member);
    assert!(!family_tag(27).unwrap().member);
    assert!(family_tag(12).is_err());
}

fn trial_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[test]
fn primitive_prime_divisor_sets_by_factorization() {
    for a in [2u64, 3] {
        for n in 1..=20u32 {
            let earlier: Vec<u64> = (1..n).flat_map(|i| trial_factors(a.pow(i) - 1)).collect();
            let expected: Vec<u64> = trial_factors(a.pow(n) - 1)
                .into_iter()
                .filter(|p| !earlier.contains(p))
                .collect();
            for p in trial_factors(a.pow(n) - 1) {
                assert_eq!(is_primitive_prime_divisor(a, n as u64, p), expected.contains(&p), "a={a} n={n} p={p}");
            }
        }
    }
}

#[test]
fn family_membership_by_definition() {
    for q in 2..10_000u64 {
        let Some((r, m)) = prime_power(q) else { continue };
        let t = family_tag(q).unwrap();
        let direct = r % 2 == 1 && ((m >= 2 && m & (m - 1) == 0) || (m == 1 && (r % 8 == 1 || r % 8 == 7)));
        assert_eq!(t.member, direct, "q={q}");
        assert_eq!(t.residue_mod_8, q % 8);
    }
}

#[test]
fn q_plus_one_prime_power_gives_mersenne_fermat_or_eight() {
    let mut hits = Vec::new();
    for q in 4..1_000_000u64 {
        if prime_power(q).is_some() && q + 1 > 4 && prime_power(q + 1).is_some() {
            hits.push(q);
        }
    }
    // odd q forces q + 1 = 2^t, so q is a Mersenne prime; even q = 2^m
    // needs 2^m + 1 = 9 or a Fermat prime
    for &q in &hits {
        let fermat = [4, 16, 256, 65536].contains(&q);
        assert!(q == 8 || fermat || family_tag(q).unwrap().mersenne, "q={q}");
    }
    assert!(hits.contains(&8) && hits.contains(&7) && hits.contains(&31));
}
