//! Permutations of `{1..n}`.
//!
//! Points are stored 0-based; cycle notation on input and output is 1-based.
//! Products are read left to right: `g.then(&h)` maps `x` to `h(g(x))`,
//! i.e. apply `g` first and then `h`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Box<[u16]>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        assert!(degree <= u16::MAX as usize + 1, "degree {degree} too large");
        Perm {
            images: (0..degree).map(|i| i as u16).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images<I>(images: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let images: Vec<usize> = images.into_iter().collect();
        let n = images.len();
        if n > u16::MAX as usize + 1 {
            return Err(Error::NotAPermutation(format!("degree {n} too large")));
        }
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::NotAPermutation(format!("{images:?}")));
            }
            seen[x] = true;
        }
        Ok(Perm {
            images: images.into_iter().map(|x| x as u16).collect(),
        })
    }

    /// Builds a permutation from 1-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                if x == 0 || x > degree {
                    return Err(Error::Parse(format!("point {x} outside 1..={degree}")));
                }
                if touched[x - 1] {
                    return Err(Error::Parse(format!("point {x} repeated")));
                }
                touched[x - 1] = true;
                let y = cycle[(k + 1) % cycle.len()];
                if y == 0 || y > degree {
                    return Err(Error::Parse(format!("point {y} outside 1..={degree}")));
                }
                images[x - 1] = y - 1;
            }
        }
        Perm::from_images(images)
    }

    /// Parses cycle notation such as `(1,2,3)(4,5)` or `(1 2 3)(4 5)`.
    /// Whitespace is ignored around points; `()` is the identity.
    pub fn parse(s: &str, degree: usize) -> Result<Self> {
        let cycles = parse_cycle_list(s)?;
        let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
        Perm::from_cycles(degree, &refs)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 0-based point `x`.
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    #[inline]
    pub fn images(&self) -> &[u16] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self` followed by `other`. Panics on degree mismatch; see [`Perm::compose`].
    #[inline]
    pub fn then(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Perm {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.then(other))
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u16; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u16;
        }
        Perm {
            images: inv.into_boxed_slice(),
        }
    }

    /// `self^k` for any integer `k`.
    pub fn pow(&self, k: i64) -> Perm {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Perm::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&sq);
            }
            sq = sq.then(&sq);
            e >>= 1;
        }
        acc
    }

    /// `other^-1 * self * other`.
    pub fn conjugate_by(&self, other: &Perm) -> Perm {
        other.inverse().then(self).then(other)
    }

    /// `self^-1 * other^-1 * self * other`.
    pub fn commutator(&self, other: &Perm) -> Perm {
        self.inverse().then(&other.inverse()).then(self).then(other)
    }

    /// Disjoint cycles of length at least two, 0-based, each starting at its
    /// smallest point, sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Element order: lcm of cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    pub fn smallest_moved_point(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &x)| *i != x as usize)
            .map(|(i, _)| i)
    }

    /// Places `self` on points `offset..offset+degree` of a larger set.
    pub fn shifted(&self, offset: usize, degree: usize) -> Perm {
        assert!(offset + self.degree() <= degree);
        let mut images: Vec<u16> = (0..degree as u16).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[offset + i] = offset as u16 + x;
        }
        Perm {
            images: images.into_boxed_slice(),
        }
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

fn parse_cycle_list(s: &str) -> Result<Vec<Vec<usize>>> {
    let mut cycles = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let Some(body) = rest.strip_prefix('(') else {
            return Err(Error::Parse(format!("expected '(' in {s:?}")));
        };
        let Some(close) = body.find(')') else {
            return Err(Error::Parse(format!("unbalanced parenthesis in {s:?}")));
        };
        let inner = &body[..close];
        if inner.contains('(') {
            return Err(Error::Parse(format!("nested parenthesis in {s:?}")));
        }
        let points = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad point {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if !points.is_empty() {
            cycles.push(points);
        }
        rest = body[close + 1..].trim_start();
    }
    Ok(cycles)
}

/// Cycle notation with 1-based points; the identity prints as `()`.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (k, x) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", x + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}]{}", self.degree(), self)
    }
}

/// Parses `degree:cycles`, e.g. `5:(1,2)(3,4)`.
impl FromStr for Perm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (deg, cycles) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected 'degree:cycles', got {s:?}")))?;
        let degree = deg
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad degree in {s:?}")))?;
        Perm::parse(cycles, degree)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Perm {
        Perm::parse(s, n).unwrap()
    }

    #[test]
    fn compose_with_identity() {
        let g = p("(1,2)", 3);
        assert_eq!(g.then(&Perm::identity(3)), g);
    }

    #[test]
    fn compose_applies_left_first() {
        // 1 -> 2 -> 2, 2 -> 1 -> 3, 3 -> 3 -> 1
        assert_eq!(p("(1,2)", 3).then(&p("(1,3)", 3)), p("(1,2,3)", 3));
    }

    #[test]
    fn compose_rejects_degree_mismatch() {
        assert_eq!(
            p("(1,2)", 3).compose(&p("(1,2)", 4)),
            Err(Error::DegreeMismatch(3, 4))
        );
    }

    #[test]
    fn parse_is_whitespace_insensitive() {
        assert_eq!(p(" ( 1 , 2,3 ) (4 5) ", 6), p("(1,2,3)(4,5)", 6));
        assert_eq!(p("()", 4), Perm::identity(4));
        assert_eq!(p("", 4), Perm::identity(4));
    }

    #[test]
    fn parse_rejects_malformed() {
        for bad in ["(1,2", "1,2)", "(1,1)", "(0,1)", "(1,9)", "(1,(2))", "(a,b)", "(1,2)(2,3)"] {
            assert!(Perm::parse(bad, 5).is_err(), "{bad}");
        }
    }

    #[test]
    fn display_round_trips() {
        let g = p("(1,5,2)(3,4)", 6);
        assert_eq!(g.to_string(), "(1,5,2)(3,4)");
        assert_eq!(p(&g.to_string(), 6), g);
        assert_eq!("6:(1,5,2)(3,4)".parse::<Perm>().unwrap(), g);
    }

    #[test]
    fn order_and_power() {
        let g = p("(1,2,3)(4,5)", 5);
        assert_eq!(g.order(), 6);
        assert!(g.pow(6).is_identity());
        assert_eq!(g.pow(-1), g.inverse());
        assert_eq!(g.pow(7), g);
    }

    #[test]
    fn shifted_moves_points() {
        let g = p("(1,2)", 2).shifted(3, 6);
        assert_eq!(g, p("(4,5)", 6));
    }
}
