//! Named groups as explicit permutation groups.
//!
//! Every constructor checks the order of what it built against the closed
//! formula for that family and fails with [`Error::SelfCheck`] otherwise.

use std::fmt;

use rustc_hash::FxHashMap;

use crate::arith;
use crate::error::{Error, Result};
use crate::field::Fq;
use crate::group::PermGroup;
use crate::limits;
use crate::perm::Perm;

fn checked(name: &str, g: PermGroup, expected: u64) -> Result<PermGroup> {
    let got = g.order();
    if got != expected {
        return Err(Error::SelfCheck(format!("{name}: order {got}, expected {expected}")));
    }
    Ok(g)
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

fn nonzero(n: usize, what: &str) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidParameter(format!("{what}: n must be positive")))
    } else {
        Ok(())
    }
}

fn cycle(points: impl IntoIterator<Item = usize>, degree: usize) -> Perm {
    let pts: Vec<usize> = points.into_iter().collect();
    Perm::from_cycles(degree, &[&pts]).expect("valid cycle")
}

pub fn symmetric(n: usize) -> Result<PermGroup> {
    nonzero(n, "Sym")?;
    let gens = match n {
        1 => vec![],
        2 => vec![cycle([1, 2], 2)],
        _ => vec![cycle([1, 2], n), cycle(1..=n, n)],
    };
    checked(&format!("Sym({n})"), PermGroup::new(n, gens)?, factorial(n as u64))
}

pub fn alternating(n: usize) -> Result<PermGroup> {
    nonzero(n, "Alt")?;
    let gens = (1..n.saturating_sub(1)).map(|i| cycle([i, i + 1, i + 2], n)).collect();
    let order = if n < 2 { 1 } else { factorial(n as u64) / 2 };
    checked(&format!("Alt({n})"), PermGroup::new(n, gens)?, order)
}

pub fn cyclic(n: usize) -> Result<PermGroup> {
    nonzero(n, "C")?;
    let gens = if n == 1 { vec![] } else { vec![cycle(1..=n, n)] };
    checked(&format!("C({n})"), PermGroup::new(n, gens)?, n as u64)
}

/// Dihedral group of the given order (`2n`), on `n` points for `n >= 3`.
pub fn dihedral(order: usize) -> Result<PermGroup> {
    if order == 0 || order % 2 == 1 {
        return Err(Error::InvalidParameter(format!("D({order}): order must be even and positive")));
    }
    let n = order / 2;
    let g = match n {
        1 => PermGroup::new(2, vec![cycle([1, 2], 2)])?,
        2 => PermGroup::new(4, vec![cycle([1, 2], 4), cycle([3, 4], 4)])?,
        _ => {
            let reflection = Perm::from_images((0..n).map(|x| (n - x) % n))?;
            PermGroup::new(n, vec![cycle(1..=n, n), reflection])?
        }
    };
    checked(&format!("D({order})"), g, order as u64)
}

/// `C_p : C_k` acting on `F_p` by `x -> x + 1` and `x -> a x`, `a` of order `k`.
pub fn frobenius(p: u64, k: u64) -> Result<PermGroup> {
    if !arith::is_prime(p) || k == 0 || (p - 1) % k != 0 {
        return Err(Error::InvalidParameter(format!("F({p},{k}): need p prime, k | p-1")));
    }
    let n = p as usize;
    let a = (1..p)
        .find(|&a| arith::multiplicative_order(a, p) == Some(k))
        .expect("cyclic unit group");
    let t = Perm::from_images((0..n).map(|x| (x + 1) % n))?;
    let m = Perm::from_images((0..n).map(|x| (x as u64 * a % p) as usize))?;
    checked(&format!("F({p},{k})"), PermGroup::new(n, vec![t, m])?, p * k)
}

pub fn direct_product(a: &PermGroup, b: &PermGroup) -> PermGroup {
    let n = a.degree() + b.degree();
    let gens = a
        .generators()
        .iter()
        .map(|g| g.shifted(0, n))
        .chain(b.generators().iter().map(|g| g.shifted(a.degree(), n)))
        .collect();
    PermGroup::new(n, gens).expect("shifted generators share the degree")
}

pub fn psl2_order(q: u64) -> u64 {
    q * (q * q - 1) / arith::gcd(2, q - 1)
}

pub fn psl_order(n: u32, q: u64) -> Option<u64> {
    let mut order: u64 = q.checked_pow(n * (n - 1) / 2)?;
    for i in 2..=n {
        order = order.checked_mul(q.checked_pow(i)? - 1)?;
    }
    Some(order / arith::gcd(n as u64, q - 1))
}

fn field_for(q: u64) -> Result<Fq> {
    Fq::new(q)
}

/// Projective line: points `0..q` are field elements, point `q` is infinity.
fn projective_line_maps(f: &Fq, mu: u32) -> Result<Vec<Perm>> {
    let q = f.order() as usize;
    let inf = q;
    let t = Perm::from_images((0..=q).map(|x| if x == inf { inf } else { f.add(x as u32, 1) as usize }))?;
    let m = Perm::from_images((0..=q).map(|x| if x == inf { inf } else { f.mul(x as u32, mu) as usize }))?;
    let s = Perm::from_images((0..=q).map(|x| {
        if x == inf {
            0
        } else if x == 0 {
            inf
        } else {
            f.neg(f.inv(x as u32).unwrap()) as usize
        }
    }))?;
    Ok(vec![t, m, s])
}

/// `PSL_2(q)` on the `q + 1` points of the projective line, generated by
/// `x -> x + 1`, `x -> mu x` (`mu` a generator of the nonzero squares) and
/// `x -> -1/x`.
pub fn psl2(q: u64) -> Result<PermGroup> {
    if q < 4 {
        return Err(Error::InvalidParameter(format!("PSL(2,{q}): need q >= 4")));
    }
    let f = field_for(q)?;
    let mu = f.pow(f.primitive(), 2);
    let g = PermGroup::new(q as usize + 1, projective_line_maps(&f, mu)?)?;
    checked(&format!("PSL(2,{q})"), g, psl2_order(q))
}

/// `PGL_2(q)` on the projective line, with `mu` a primitive element.
pub fn pgl2(q: u64) -> Result<PermGroup> {
    if q < 3 {
        return Err(Error::InvalidParameter(format!("PGL(2,{q}): need q >= 3")));
    }
    let f = field_for(q)?;
    let g = PermGroup::new(q as usize + 1, projective_line_maps(&f, f.primitive())?)?;
    checked(&format!("PGL(2,{q})"), g, q * (q * q - 1))
}

/// `M_10`: `PSL_2(9)` extended by `x -> w x^3`, `w` primitive in `F_9`
/// (the product of a diagonal and a field automorphism); order 720.
pub fn m10() -> Result<PermGroup> {
    let f = field_for(9)?;
    let mut gens = projective_line_maps(&f, f.pow(f.primitive(), 2))?;
    let w = f.primitive();
    gens.push(Perm::from_images((0..=9).map(|x| {
        if x == 9 {
            9
        } else {
            f.mul(w, f.pow(x as u32, 3)) as usize
        }
    }))?);
    checked("M10", PermGroup::new(10, gens)?, 720)
}

/// Matrix over `F_q` stored row-major.
type Matrix = Vec<Vec<u32>>;

fn identity_matrix(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| u32::from(i == j)).collect()).collect()
}

fn row_times(f: &Fq, v: &[u32], m: &Matrix) -> Vec<u32> {
    (0..v.len())
        .map(|j| {
            v.iter()
                .enumerate()
                .fold(0, |acc, (i, &x)| f.add(acc, f.mul(x, m[i][j])))
        })
        .collect()
}

/// Generators of `SL_n(q)`: transvections `I + c E_12` for `c` running over
/// the power basis `1, w, .., w^{k-1}`, `diag(w, w^-1, 1, ..)`, and the
/// cyclic shift with a sign fixing the determinant.
fn sl_generators(f: &Fq, n: usize) -> Vec<Matrix> {
    let mut out = Vec::new();
    let w = f.primitive();
    for i in 0..f.degree() {
        let mut t = identity_matrix(n);
        t[0][1] = f.pow(w, i as u64);
        out.push(t);
    }
    let mut d = identity_matrix(n);
    d[0][0] = w;
    d[1][1] = f.inv(w).unwrap();
    out.push(d);
    let mut c = vec![vec![0; n]; n];
    for i in 0..n {
        c[i][(i + 1) % n] = 1;
    }
    if n % 2 == 0 {
        c[0][1] = f.neg(1);
    }
    out.push(c);
    out
}

fn encode(v: &[u32], q: u32) -> usize {
    v.iter().fold(0usize, |acc, &x| acc * q as usize + x as usize)
}

fn vector_perm(f: &Fq, m: &Matrix, points: &[Vec<u32>], index: &FxHashMap<usize, usize>, projective: bool) -> Result<Perm> {
    let q = f.order();
    Perm::from_images(points.iter().map(|v| {
        let mut w = row_times(f, v, m);
        if projective {
            normalize(f, &mut w);
        }
        index[&encode(&w, q)]
    }))
}

/// Scales so the first nonzero coordinate is 1.
fn normalize(f: &Fq, v: &mut [u32]) {
    if let Some(&lead) = v.iter().find(|&&x| x != 0) {
        let inv = f.inv(lead).unwrap();
        for x in v.iter_mut() {
            *x = f.mul(*x, inv);
        }
    }
}

fn all_vectors(q: u32, n: usize) -> impl Iterator<Item = Vec<u32>> {
    let total = (q as usize).pow(n as u32);
    (0..total).map(move |mut code| {
        let mut v = vec![0; n];
        for slot in v.iter_mut().rev() {
            *slot = (code % q as usize) as u32;
            code /= q as usize;
        }
        v
    })
}

/// `PSL_n(q)` on projective points, points ordered lexicographically as
/// normalized vectors.
pub fn psl(n: usize, q: u64) -> Result<PermGroup> {
    if n < 2 || arith::prime_power(q).is_none() || (n == 2 && q < 4) {
        return Err(Error::InvalidParameter(format!("PSL({n},{q}) out of range")));
    }
    let points_count = (q.pow(n as u32) - 1) / (q - 1);
    if points_count > limits::degree_cutoff() {
        return Err(Error::InvalidParameter(format!(
            "PSL({n},{q}) acts on {points_count} points, above the degree cutoff"
        )));
    }
    let expected = psl_order(n as u32, q)
        .ok_or_else(|| Error::InvalidParameter(format!("PSL({n},{q}) order overflows")))?;
    let f = field_for(q)?;
    let points: Vec<Vec<u32>> = all_vectors(f.order(), n)
        .filter(|v| v.iter().find(|&&x| x != 0) == Some(&1))
        .collect();
    let index: FxHashMap<usize, usize> =
        points.iter().enumerate().map(|(i, v)| (encode(v, f.order()), i)).collect();
    let gens = sl_generators(&f, n)
        .iter()
        .map(|m| vector_perm(&f, m, &points, &index, true))
        .collect::<Result<Vec<_>>>()?;
    checked(&format!("PSL({n},{q})"), PermGroup::new(points.len(), gens)?, expected)
}

/// `SL_2(q)` on the `q^2 - 1` nonzero row vectors.
pub fn sl2_on_vectors(q: u64) -> Result<PermGroup> {
    if q < 2 {
        return Err(Error::InvalidParameter(format!("SL(2,{q}) out of range")));
    }
    let f = field_for(q)?;
    let points: Vec<Vec<u32>> = all_vectors(f.order(), 2).filter(|v| v != &[0, 0]).collect();
    let index: FxHashMap<usize, usize> =
        points.iter().enumerate().map(|(i, v)| (encode(v, f.order()), i)).collect();
    let gens = sl_generators(&f, 2)
        .iter()
        .map(|m| vector_perm(&f, m, &points, &index, false))
        .collect::<Result<Vec<_>>>()?;
    checked(&format!("SL(2,{q})"), PermGroup::new(points.len(), gens)?, q * (q * q - 1))
}

/// `C_3 : K` for `K <= Sym(4)`, where the odd elements of `K` invert `C_3`.
/// On 7 points: `C_3 = <(1,2,3)>` and `K` acts on points 4..7.
pub fn c3_sign_twist(k: &PermGroup) -> Result<PermGroup> {
    if k.degree() != 4 {
        return Err(Error::InvalidParameter("twist needs a subgroup of Sym(4)".into()));
    }
    let tau = cycle([2, 3], 7);
    let mut gens = vec![cycle([1, 2, 3], 7)];
    for g in k.generators() {
        let odd = g.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 1;
        let s = g.shifted(3, 7);
        gens.push(if odd { tau.then(&s) } else { s });
    }
    let g = PermGroup::new(7, gens)?;
    checked("C3 twist", g, 3 * k.order())
}

/// `C_3 : Sym(4)`, `Sym(4)` acting through `Sym(4)/Alt(4)`; order 72.
///
/// The generators are `(1,2,3)`, `(2,3)(4,5)`, `(2,3)(4,5,6,7)`. Besides the
/// order, the build verifies the upper 2'2-series has orders 1, 3, 12, 36, 72.
pub fn example_group_72_43() -> Result<PermGroup> {
    let g = PermGroup::from_cycles(7, &["(1,2,3)", "(2,3)(4,5)", "(2,3)(4,5,6,7)"])?;
    let g = checked("Ex72_43", g, 72)?;
    let series = crate::structure::upper_p_series(&g, 2)?;
    let orders = series.distinct_orders();
    if orders != [1, 3, 12, 36, 72] {
        return Err(Error::SelfCheck(format!("Ex72_43: series orders {orders:?}")));
    }
    Ok(g)
}

/// `C_3^3 : Alt(4)` as an affine group on the 27 vectors of `F_3^4` with
/// coordinate sum zero: translations plus `Alt(4)` permuting coordinates.
/// The build verifies order 324 and 3-length 2.
pub fn example_group_324_160() -> Result<PermGroup> {
    let points: Vec<[u8; 4]> = (0..81u32)
        .map(|c| [(c / 27 % 3) as u8, (c / 9 % 3) as u8, (c / 3 % 3) as u8, (c % 3) as u8])
        .filter(|v| v.iter().map(|&x| x as u32).sum::<u32>() % 3 == 0)
        .collect();
    let index: FxHashMap<[u8; 4], usize> = points.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let translate = |t: [u8; 4]| {
        Perm::from_images(points.iter().map(|v| {
            let w = [0, 1, 2, 3].map(|i| (v[i] + t[i]) % 3);
            index[&w]
        }))
    };
    // coordinate i moves to position sigma(i)
    let permute = |sigma: [usize; 4]| {
        Perm::from_images(points.iter().map(|v| {
            let mut w = [0u8; 4];
            for i in 0..4 {
                w[sigma[i]] = v[i];
            }
            index[&w]
        }))
    };
    let gens = vec![
        translate([1, 2, 0, 0])?,
        translate([0, 1, 2, 0])?,
        translate([0, 0, 1, 2])?,
        permute([1, 2, 0, 3])?,
        permute([1, 0, 3, 2])?,
    ];
    let g = checked("Ex324_160", PermGroup::new(27, gens)?, 324)?;
    let series = crate::structure::upper_p_series(&g, 3)?;
    if series.p_length != 2 {
        return Err(Error::SelfCheck(format!("Ex324_160: 3-length {}", series.p_length)));
    }
    Ok(g)
}

/// `C_3 wr C_3` on 9 points; order 81.
pub fn c3_wreath_c3() -> Result<PermGroup> {
    let g = PermGroup::from_cycles(9, &["(1,2,3)", "(1,4,7)(2,5,8)(3,6,9)"])?;
    checked("C3wrC3", g, 81)
}

/// Named groups used by the property and acceptance tests, roughly by size.
/// Every entry is accepted by [`by_name`].
pub const CORPUS: &[&str] = &[
    "C(1)",
    "C(2)",
    "C(6)",
    "C(2) x C(2)",
    "Sym(3)",
    "D(8)",
    "D(16)",
    "C(12)",
    "D(12)",
    "Alt(4)",
    "C(2) x C(6)",
    "F(5,4)",
    "F(7,3)",
    "D(20)",
    "Sym(4)",
    "SL(2,3)",
    "C(3) x Sym(3)",
    "Sym(3) x Sym(3)",
    "C(3) x Alt(4)",
    "Sym(4) x C(2)",
    "Alt(5)",
    "C3wrC3",
    "F(11,5)",
    "Ex72_43",
    "Sym(5)",
    "SL(2,5)",
    "PSL(2,7)",
    "PSL(3,2)",
    "Ex324_160",
    "PGL(2,7)",
    "PSL(2,9)",
    "Alt(5) x C(3)",
    "PSL(2,8)",
    "PSL(2,11)",
    "Sym(6)",
    "M10",
    "PGL(2,9)",
    "PSL(2,7) x C(5)",
    "PSL(2,13)",
    "PGL(2,11)",
    "SL(2,11)",
];

/// Builds every [`CORPUS`] group.
pub fn corpus() -> Result<Vec<(&'static str, PermGroup)>> {
    CORPUS.iter().map(|&n| Ok((n, by_name(n)?))).collect()
}

/// Builds a group from its name:
/// `Alt(n)`, `Sym(n)`, `C(n)`, `D(2n)`, `PSL(n,q)`, `PGL(2,q)`, `SL(2,q)`,
/// `F(p,k)`, `C3wrC3`, `M10`, `Ex72_43`, `Ex324_160`, and direct products joined
/// with ` x `.
pub fn by_name(name: &str) -> Result<PermGroup> {
    let parts: Vec<&str> = name.split(" x ").map(str::trim).collect();
    if parts.len() > 1 {
        let mut it = parts.into_iter();
        let first = single_by_name(it.next().unwrap())?;
        return it.try_fold(first, |acc, p| Ok(direct_product(&acc, &single_by_name(p)?)));
    }
    single_by_name(name.trim())
}

fn single_by_name(name: &str) -> Result<PermGroup> {
    let bad = || Error::InvalidParameter(format!("unknown group name {name:?}"));
    match name {
        "Ex72_43" => return example_group_72_43(),
        "Ex324_160" => return example_group_324_160(),
        "C3wrC3" => return c3_wreath_c3(),
        "M10" => return m10(),
        _ => {}
    }
    let open = name.find('(').ok_or_else(bad)?;
    let args = name[open..]
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(bad)?;
    let nums = args
        .split(',')
        .map(|a| a.trim().parse::<u64>().map_err(|_| bad()))
        .collect::<Result<Vec<_>>>()?;
    match (&name[..open], nums.as_slice()) {
        ("Alt", [n]) => alternating(*n as usize),
        ("Sym", [n]) => symmetric(*n as usize),
        ("C", [n]) => cyclic(*n as usize),
        ("D", [n]) => dihedral(*n as usize),
        ("F", [p, k]) => frobenius(*p, *k),
        ("PSL", [2, q]) => psl2(*q),
        ("PSL", [n, q]) => psl(*n as usize, *q),
        ("PGL", [2, q]) => pgl2(*q),
        ("SL", [2, q]) => sl2_on_vectors(*q),
        _ => Err(bad()),
    }
}

/// A group given by explicit generators, in the line format
///
/// ```text
/// name C3:Sym(4)
/// degree 7
/// gen (1,2,3)
/// gen (2,3)(4,5)
/// expect-order 72
/// ```
///
/// `#` starts a comment; `name` and `expect-order` are optional.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub name: Option<String>,
    pub degree: usize,
    pub generators: Vec<Perm>,
    pub expect_order: Option<u64>,
    pub provenance: Option<String>,
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<Self> {
        let mut name = None;
        let mut degree = None;
        let mut raw_gens = Vec::new();
        let mut expect_order = None;
        let mut provenance = None;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let rest = rest.trim();
            let err = |m: &str| Error::Parse(format!("line {}: {m}", lineno + 1));
            match key {
                "name" => name = Some(rest.to_string()),
                "provenance" => provenance = Some(rest.to_string()),
                "degree" => {
                    if degree.is_some() {
                        return Err(err("duplicate degree"));
                    }
                    degree = Some(rest.parse::<usize>().map_err(|_| err("bad degree"))?);
                }
                "gen" => raw_gens.push((lineno + 1, rest.to_string())),
                "expect-order" => {
                    expect_order = Some(rest.parse::<u64>().map_err(|_| err("bad order"))?)
                }
                other => return Err(err(&format!("unknown key {other:?}"))),
            }
        }
        let degree = degree.ok_or_else(|| Error::Parse("missing 'degree' line".into()))?;
        if degree == 0 {
            return Err(Error::Parse("degree must be positive".into()));
        }
        let generators = raw_gens
            .into_iter()
            .map(|(l, s)| {
                Perm::parse(&s, degree).map_err(|e| Error::Parse(format!("line {l}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GroupSpec {
            name,
            degree,
            generators,
            expect_order,
            provenance,
        })
    }

    /// Builds the group, checking `expect-order` when present.
    pub fn build(&self) -> Result<PermGroup> {
        let g = PermGroup::new(self.degree, self.generators.clone())?;
        match self.expect_order {
            Some(o) => checked(self.name.as_deref().unwrap_or("group spec"), g, o),
            None => Ok(g),
        }
    }

    pub fn from_group(name: Option<&str>, g: &PermGroup) -> Self {
        GroupSpec {
            name: name.map(str::to_string),
            degree: g.degree(),
            generators: g.generators().to_vec(),
            expect_order: Some(g.order()),
            provenance: None,
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = &self.name {
            writeln!(f, "name {n}")?;
        }
        if let Some(p) = &self.provenance {
            writeln!(f, "provenance {p}")?;
        }
        writeln!(f, "degree {}", self.degree)?;
        for g in &self.generators {
            writeln!(f, "gen {g}")?;
        }
        if let Some(o) = self.expect_order {
            writeln!(f, "expect-order {o}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_families() {
        assert_eq!(alternating(5).unwrap().order(), 60);
        assert_eq!(symmetric(5).unwrap().order(), 120);
        assert_eq!(symmetric(1).unwrap().order(), 1);
        assert_eq!(cyclic(7).unwrap().order(), 7);
        assert_eq!(dihedral(4).unwrap().order(), 4);
        assert_eq!(frobenius(11, 5).unwrap().order(), 55);
        assert!(symmetric(0).is_err());
        assert!(dihedral(7).is_err());
    }

    #[test]
    fn dihedral_12_has_derived_subgroup_of_order_3() {
        let d12 = dihedral(12).unwrap();
        assert_eq!(d12.order(), 12);
        assert_eq!(d12.derived_subgroup().order(), 3);
    }

    #[test]
    fn linear_groups() {
        let g = psl2(7).unwrap();
        assert_eq!((g.degree(), g.order()), (8, 168));
        let g = pgl2(11).unwrap();
        assert_eq!((g.degree(), g.order()), (12, 1320));
        let g = psl(3, 2).unwrap();
        assert_eq!((g.degree(), g.order()), (7, 168));
        let g = psl(3, 3).unwrap();
        assert_eq!((g.degree(), g.order()), (13, 5616));
        let g = psl(2, 9).unwrap();
        assert_eq!((g.degree(), g.order()), (10, 360));
        let g = sl2_on_vectors(11).unwrap();
        assert_eq!((g.degree(), g.order()), (120, 1320));
        assert!(psl2(6).is_err());
        assert!(psl2(3).is_err());
    }

    #[test]
    fn more_linear_groups() {
        for q in [4u64, 5, 8, 9, 13, 16, 17, 19, 25, 27] {
            assert_eq!(psl2(q).unwrap().order(), psl2_order(q), "q = {q}");
            assert_eq!(pgl2(q).unwrap().order(), q * (q * q - 1), "q = {q}");
        }
        assert_eq!(psl(4, 2).unwrap().order(), 20160);
        assert_eq!(psl(3, 4).unwrap().order(), 20160);
        assert_eq!(psl(5, 2).unwrap().order(), 9_999_360);
        assert_eq!(psl(2, 8).unwrap().order(), 504);
    }

    #[test]
    fn products() {
        let g = direct_product(&cyclic(2).unwrap(), &cyclic(3).unwrap());
        assert_eq!(g.order(), 6);
        assert!(g.is_abelian());
        let big = direct_product(&psl2(7).unwrap(), &psl2(11).unwrap());
        assert_eq!(big.order(), 168 * 660);
    }

    #[test]
    fn names() {
        assert_eq!(by_name("PSL(2,11)").unwrap().order(), 660);
        assert_eq!(by_name("PSL(3,2)").unwrap().degree(), 7);
        assert_eq!(by_name("PSL(2,7) x C(5)").unwrap().order(), 840);
        assert_eq!(by_name("D(10)").unwrap().order(), 10);
        assert!(by_name("PSL(2,6)").is_err());
        assert!(by_name("Foo(3)").is_err());
        assert!(by_name("Alt(x)").is_err());
    }

    #[test]
    fn group_spec_format() {
        let text = "# the order-72 example\nname Ex\ndegree 7\ngen (1,2,3)\ngen (2,3)(4,5)\ngen (2, 3) (4, 5, 6, 7)\nexpect-order 72\n";
        let spec = GroupSpec::parse(text).unwrap();
        assert_eq!(spec.build().unwrap().order(), 72);
        assert_eq!(GroupSpec::parse(&spec.to_string()).unwrap(), spec);
        assert!(GroupSpec::parse("degree 3\ngen (1,2\n").is_err());
        assert!(GroupSpec::parse("gen (1,2)\n").is_err());
        assert!(GroupSpec::parse("degree 3\ncolour red\n").is_err());
        let wrong = GroupSpec::parse("degree 3\ngen (1,2)\nexpect-order 6\n").unwrap();
        assert!(matches!(wrong.build(), Err(Error::SelfCheck(_))));
    }
}
