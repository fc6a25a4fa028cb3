//! Small finite fields `GF(r^k)`.
//!
//! An element is the integer `c_0 + c_1 r + ... + c_{k-1} r^{k-1}` whose base-`r`
//! digits are its coefficients in `F_r[x] / (m(x))`. The modulus `m` is the
//! least monic irreducible of degree `k` when its lower coefficients are read
//! as such an integer.

use crate::arith;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Fq {
    r: u32,
    k: u32,
    q: u32,
    modulus: Vec<u32>,
    primitive: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// Largest field order the table-driven arithmetic accepts.
pub const MAX_FIELD_ORDER: u64 = 1 << 16;

impl Fq {
    pub fn new(q: u64) -> Result<Self> {
        let (r, k) = arith::prime_power(q)
            .ok_or_else(|| Error::InvalidParameter(format!("{q} is not a prime power")))?;
        if q > MAX_FIELD_ORDER {
            return Err(Error::InvalidParameter(format!("field order {q} too large")));
        }
        let (r, k, q) = (r as u32, k, q as u32);
        let modulus = least_irreducible(r, k);
        let mut field = Fq {
            r,
            k,
            q,
            modulus,
            primitive: 0,
            exp: Vec::new(),
            log: Vec::new(),
        };
        field.primitive = field.find_primitive();
        let mut exp = Vec::with_capacity(q as usize - 1);
        let mut log = vec![u32::MAX; q as usize];
        let mut x = 1;
        for i in 0..q - 1 {
            exp.push(x);
            log[x as usize] = i;
            x = field.slow_mul(x, field.primitive);
        }
        assert_eq!(x, 1, "primitive element has order q-1");
        field.exp = exp;
        field.log = log;
        Ok(field)
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.r
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    /// Coefficients `m_0..m_k` of the modulus (monic, `m_k = 1`).
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// A generator of the multiplicative group.
    pub fn primitive(&self) -> u32 {
        self.primitive
    }

    pub fn zero(&self) -> u32 {
        0
    }

    pub fn one(&self) -> u32 {
        1
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.digitwise(a, b, |x, y| (x + y) % self.r)
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.digitwise(a, b, |x, y| (x + self.r - y) % self.r)
    }

    pub fn neg(&self, a: u32) -> u32 {
        self.sub(0, a)
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let s = (self.log[a as usize] + self.log[b as usize]) % (self.q - 1);
        self.exp[s as usize]
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let l = self.log[a as usize];
        Some(self.exp[((self.q - 1 - l) % (self.q - 1)) as usize])
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let l = self.log[a as usize] as u64 * e % (self.q as u64 - 1);
        self.exp[l as usize]
    }

    /// `primitive^i`.
    pub fn exp(&self, i: u64) -> u32 {
        self.exp[(i % (self.q as u64 - 1)) as usize]
    }

    pub fn is_square(&self, a: u32) -> bool {
        a == 0 || self.r == 2 || self.log[a as usize] % 2 == 0
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.q
    }

    fn digitwise(&self, mut a: u32, mut b: u32, f: impl Fn(u32, u32) -> u32) -> u32 {
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.k {
            out += f(a % self.r, b % self.r) * place;
            a /= self.r;
            b /= self.r;
            place *= self.r;
        }
        out
    }

    fn to_coeffs(&self, mut a: u32) -> Vec<u32> {
        (0..self.k)
            .map(|_| {
                let c = a % self.r;
                a /= self.r;
                c
            })
            .collect()
    }

    fn encode_coeffs(&self, c: &[u32]) -> u32 {
        c.iter().rev().fold(0, |acc, &x| acc * self.r + x)
    }

    fn slow_mul(&self, a: u32, b: u32) -> u32 {
        let prod = poly_mul(&self.to_coeffs(a), &self.to_coeffs(b), self.r);
        let rem = poly_rem(&prod, &self.modulus, self.r);
        let mut c = rem;
        c.resize(self.k as usize, 0);
        self.encode_coeffs(&c)
    }

    fn find_primitive(&self) -> u32 {
        let n = self.q as u64 - 1;
        let primes = arith::prime_factors(n);
        (1..self.q)
            .find(|&g| {
                primes
                    .iter()
                    .all(|&l| self.slow_pow(g, n / l) != 1)
            })
            .expect("multiplicative group is cyclic")
    }

    fn slow_pow(&self, a: u32, mut e: u64) -> u32 {
        let mut acc = 1;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.slow_mul(acc, base);
            }
            base = self.slow_mul(base, base);
            e >>= 1;
        }
        acc
    }
}

fn trim(mut p: Vec<u32>) -> Vec<u32> {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
    p
}

fn poly_mul(a: &[u32], b: &[u32], r: u32) -> Vec<u32> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % r;
        }
    }
    trim(out)
}

/// Remainder of `a` modulo the monic polynomial `m`.
fn poly_rem(a: &[u32], m: &[u32], r: u32) -> Vec<u32> {
    let mut a = a.to_vec();
    while a.len() >= m.len() {
        let lead = *a.last().unwrap();
        if lead != 0 {
            let shift = a.len() - m.len();
            for (i, &c) in m.iter().enumerate() {
                a[shift + i] = (a[shift + i] + r - (lead * c) % r) % r;
            }
        }
        a.pop();
    }
    if a.is_empty() {
        a.push(0);
    }
    trim(a)
}

fn monic_from_index(mut idx: u64, degree: u32, r: u32) -> Vec<u32> {
    let mut c: Vec<u32> = (0..degree)
        .map(|_| {
            let x = (idx % r as u64) as u32;
            idx /= r as u64;
            x
        })
        .collect();
    c.push(1);
    c
}

fn is_irreducible(p: &[u32], r: u32) -> bool {
    let deg = p.len() as u32 - 1;
    if deg <= 1 {
        return true;
    }
    for d in 1..=deg / 2 {
        for idx in 0..(r as u64).pow(d) {
            let f = monic_from_index(idx, d, r);
            let rem = poly_rem(p, &f, r);
            if rem.iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn least_irreducible(r: u32, k: u32) -> Vec<u32> {
    if k == 1 {
        return vec![0, 1];
    }
    (0..(r as u64).pow(k))
        .map(|idx| monic_from_index(idx, k, r))
        .find(|p| is_irreducible(p, r))
        .expect("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field() {
        let f = Fq::new(7).unwrap();
        assert_eq!(f.mul(3, 5), 1);
        assert_eq!(f.add(4, 5), 2);
        assert_eq!(f.inv(3), Some(5));
        assert_eq!(f.primitive(), 3);
    }

    #[test]
    fn gf4_and_gf9_moduli() {
        // x^2 + x + 1 over F_2; x^2 + 1 over F_3
        assert_eq!(Fq::new(4).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(Fq::new(9).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(Fq::new(8).unwrap().modulus(), &[1, 1, 0, 1]);
    }

    #[test]
    fn field_axioms_spot_check() {
        for q in [4u64, 8, 9, 16, 25, 27] {
            let f = Fq::new(q).unwrap();
            for a in f.elements() {
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    let c = (a + b) % f.order();
                    assert_eq!(
                        f.mul(a, f.add(b, c)),
                        f.add(f.mul(a, b), f.mul(a, c))
                    );
                }
            }
        }
    }

    #[test]
    fn rejects_non_prime_powers() {
        assert!(Fq::new(12).is_err());
        assert!(Fq::new(1).is_err());
    }
}
