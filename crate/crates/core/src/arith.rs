//! Number-theoretic side conditions.
//!
//! Primality below `2^64` is exact (deterministic Miller-Rabin witnesses, via
//! `num-prime`). Values beyond that are never asserted prime; they are
//! reported as [`Primality::Unverified`].

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    num_prime::nt_funcs::is_prime64(n)
}

/// `Some((r, k))` with `n = r^k`, `r` prime; `None` for `n < 2` or otherwise.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let r = smallest_prime_factor(n);
    let mut m = n;
    let mut k = 0;
    while m % r == 0 {
        m /= r;
        k += 1;
    }
    (m == 1).then_some((r, k))
}

fn smallest_prime_factor(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return d;
        }
        d += 2;
    }
    n
}

/// Distinct prime factors in increasing order (trial division).
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    while n > 1 {
        let p = smallest_prime_factor(n);
        out.push(p);
        while n % p == 0 {
            n /= p;
        }
    }
    out
}

/// The `p`-part of `n`.
pub fn p_part(mut n: u64, p: u64) -> u64 {
    let mut part = 1;
    while n % p == 0 {
        n /= p;
        part *= p;
    }
    part
}

pub fn is_p_power(n: u64, p: u64) -> bool {
    p_part(n, p) == n
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn pow_mod(base: u64, mut e: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let m128 = m as u128;
    let mut acc: u128 = 1;
    let mut b = (base % m) as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        e >>= 1;
    }
    acc as u64
}

/// Multiplicative order of `a` modulo `p`; `None` if they share a factor.
pub fn multiplicative_order(a: u64, p: u64) -> Option<u64> {
    if p < 2 || gcd(a % p, p) != 1 {
        return None;
    }
    // order divides phi(p) = p - 1 when p is prime; fall back to a scan otherwise
    if is_prime(p) {
        let mut ord = p - 1;
        for l in prime_factors(p - 1) {
            while ord % l == 0 && pow_mod(a, ord / l, p) == 1 {
                ord /= l;
            }
        }
        return Some(ord);
    }
    let mut x = a % p;
    let mut k = 1;
    while x != 1 {
        x = (x as u128 * a as u128 % p as u128) as u64;
        k += 1;
    }
    Some(k)
}

/// `p` divides `a^n - 1` but no `a^i - 1` with `1 <= i < n`.
pub fn is_primitive_prime_divisor(a: u64, n: u64, p: u64) -> bool {
    is_prime(p) && multiplicative_order(a, p) == Some(n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Primality {
    Prime,
    Composite,
    /// Above `2^64`; not decided.
    Unverified,
}

pub fn primality(n: &BigUint) -> Primality {
    match u64::try_from(n) {
        Ok(v) if is_prime(v) => Primality::Prime,
        Ok(_) => Primality::Composite,
        Err(_) => Primality::Unverified,
    }
}

/// A parameter set `(n, d, p)` passing the arithmetic test for
/// `PSL_n(2^d)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CandidateTriple {
    pub n: u64,
    pub d: u64,
    pub p: u64,
    /// `(2^{dn} - 1) / (2^d - 1)`, the number of projective points.
    pub q_point_count: String,
    pub point_count_primality: Primality,
}

impl CandidateTriple {
    /// Rechecks every condition by direct divisibility, independently of the
    /// order computation used by the sieve.
    pub fn revalidate(&self) -> bool {
        let (n, d, p) = (self.n, self.d, self.p);
        if !is_prime(n) || n < 3 || d % 2 == 0 || !is_prime(p) || p % 2 == 0 {
            return false;
        }
        if gcd(n, (1u64 << d) - 1) != 1 {
            return false;
        }
        let e = d * (n - 1);
        let divides = |i: u64| {
            let v = (BigUint::from(1u8) << i) - 1u8;
            (&v % p) == BigUint::from(0u8)
        };
        if !divides(e) || (1..e).any(divides) {
            return false;
        }
        let repunit = ((BigUint::from(1u8) << (d * n)) - 1u8) / ((BigUint::from(1u8) << d) - 1u8);
        repunit.to_string() == self.q_point_count && primality(&repunit) != Primality::Composite
    }
}

/// Every `(n, d)` with `3 <= n <= n_max` prime, `1 <= d <= d_max` odd,
/// `gcd(n, 2^d - 1) = 1`, `p` a primitive prime divisor of `2^{d(n-1)} - 1`,
/// and `(2^{dn} - 1)/(2^d - 1)` prime (or too large to decide).
pub fn theorem_c_candidates(p: u64, n_max: u64, d_max: u64) -> Result<Vec<CandidateTriple>> {
    if p % 2 == 0 || !is_prime(p) {
        return Err(Error::InvalidParameter(format!("p = {p} must be an odd prime")));
    }
    if n_max == 0 || d_max == 0 || d_max >= 64 {
        return Err(Error::InvalidParameter("bounds must be positive (d_max < 64)".into()));
    }
    let mut out = Vec::new();
    let order = multiplicative_order(2, p).expect("p odd");
    for n in (3..=n_max).filter(|&n| is_prime(n)) {
        for d in (1..=d_max).step_by(2) {
            if gcd(n, (1u64 << d) - 1) != 1 || order != d * (n - 1) {
                continue;
            }
            let repunit =
                ((BigUint::from(1u8) << (d * n)) - 1u8) / ((BigUint::from(1u8) << d) - 1u8);
            let status = primality(&repunit);
            if status == Primality::Composite {
                continue;
            }
            out.push(CandidateTriple {
                n,
                d,
                p,
                q_point_count: repunit.to_string(),
                point_count_primality: status,
            });
        }
    }
    Ok(out)
}

/// Arithmetic classification of a prime power `q = r^m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyTag {
    pub q: u64,
    pub r: u64,
    pub m: u32,
    /// `q` prime and `q + 1` a power of 2.
    pub mersenne: bool,
    /// `q + 1 = s^t` with `s` prime, if any.
    pub q_plus_one_prime_power: Option<(u64, u32)>,
    pub residue_mod_8: u64,
    /// `r` odd, and `m = 2^a` with `a >= 1`, or `m = 1` with `r = ±1 (mod 8)`.
    pub member: bool,
}

pub fn family_tag(q: u64) -> Result<FamilyTag> {
    let (r, m) =
        prime_power(q).ok_or_else(|| Error::InvalidParameter(format!("{q} is not a prime power")))?;
    let q1 = prime_power(q + 1);
    let member = r % 2 == 1
        && ((m >= 2 && m.is_power_of_two()) || (m == 1 && matches!(r % 8, 1 | 7)));
    Ok(FamilyTag {
        q,
        r,
        m,
        mersenne: m == 1 && matches!(q1, Some((2, _))),
        q_plus_one_prime_power: q1,
        residue_mod_8: q % 8,
        member,
    })
}
