//! Isomorphism invariants and a small catalog of named groups.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith;
use crate::construct::*;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::lattice::{maximal_classes, normal_sets};
use crate::structure::derived_length;

/// Invariants that agree on isomorphic groups.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fingerprint {
    pub order: u64,
    pub abelian: bool,
    pub simple: bool,
    /// Element order -> number of elements of that order.
    pub element_orders: BTreeMap<u32, u64>,
    /// Conjugacy class sizes, ascending.
    pub class_sizes: Vec<u64>,
    /// `None` for non-solvable groups.
    pub derived_length: Option<u32>,
    pub center_order: u64,
}

pub fn fingerprint(g: &PermGroup) -> Result<Fingerprint> {
    let e = g.enumeration()?;
    let mut element_orders = BTreeMap::new();
    for &o in e.orders() {
        *element_orders.entry(o).or_insert(0) += 1;
    }
    let mut class_sizes: Vec<u64> = g
        .conjugacy_classes()?
        .iter()
        .map(|(_, n)| *n as u64)
        .collect();
    class_sizes.sort_unstable();
    let center_order = class_sizes.iter().filter(|&&n| n == 1).count() as u64;
    Ok(Fingerprint {
        order: g.order(),
        abelian: g.is_abelian(),
        simple: normal_sets(g)?.1.len() == 2,
        element_orders,
        class_sizes,
        derived_length: derived_length(g),
        center_order,
    })
}

impl Fingerprint {
    pub fn is_cyclic(&self) -> bool {
        self.element_orders.contains_key(&(self.order as u32))
    }

    /// Invariant factors `n_1 | n_2 | ...` of an abelian group, recovered
    /// from its element-order histogram; `None` if the group is nonabelian.
    pub fn abelian_invariants(&self) -> Option<Vec<u64>> {
        if !self.abelian {
            return None;
        }
        // per prime, the exponents e_i of the cyclic p-factors
        let mut factors: Vec<Vec<u32>> = Vec::new();
        for p in arith::prime_factors(self.order) {
            let count_dividing = |pk: u64| -> u64 {
                self.element_orders
                    .iter()
                    .filter(|(&o, _)| pk % o as u64 == 0)
                    .map(|(_, &n)| n)
                    .sum()
            };
            let log = |mut n: u64| {
                let mut k = 0u32;
                while n > 1 {
                    n /= p;
                    k += 1;
                }
                k
            };
            // #{i : e_i >= k} = log_p(n_k) - log_p(n_{k-1})
            let mut exps = Vec::new();
            let (mut pk, mut prev) = (1u64, 0u32);
            loop {
                pk *= p;
                let cur = log(count_dividing(pk));
                let at_least = (cur - prev) as usize;
                if at_least == 0 {
                    break;
                }
                exps.resize(exps.len().max(at_least), 0);
                for e in exps.iter_mut().take(at_least) {
                    *e += 1;
                }
                prev = cur;
            }
            exps.sort_unstable();
            factors.push(exps);
        }
        let primes = arith::prime_factors(self.order);
        let rank = factors.iter().map(Vec::len).max().unwrap_or(0);
        let mut inv = vec![1u64; rank];
        for (p, exps) in primes.iter().zip(&factors) {
            // align largest exponents with the last invariant factor
            for (slot, &e) in inv.iter_mut().rev().zip(exps.iter().rev()) {
                *slot *= p.pow(e);
            }
        }
        Some(inv)
    }

    fn field_pairs(&self) -> Vec<(&'static str, String)> {
        let join = |v: Vec<String>| v.join(",");
        vec![
            ("abelian", self.abelian.to_string()),
            ("center-order", self.center_order.to_string()),
            ("class-sizes", join(self.class_sizes.iter().map(u64::to_string).collect())),
            (
                "derived-length",
                self.derived_length.map_or("inf".into(), |d| d.to_string()),
            ),
            (
                "element-orders",
                join(self.element_orders.iter().map(|(o, n)| format!("{o}:{n}")).collect()),
            ),
            ("order", self.order.to_string()),
            ("simple", self.simple.to_string()),
        ]
    }
}

/// Canonical text: `key=value` pairs sorted by key, separated by `;`.
impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .field_pairs()
            .into_iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        f.write_str(&parts.join(";"))
    }
}

impl FromStr for Fingerprint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("fingerprint: {what}"));
        let mut map = BTreeMap::new();
        for part in s.trim().split(';') {
            let (k, v) = part.split_once('=').ok_or_else(|| bad(part))?;
            if map.insert(k, v).is_some() {
                return Err(bad(&format!("duplicate key {k}")));
            }
        }
        let get = |k: &str| map.get(k).copied().ok_or_else(|| bad(&format!("missing {k}")));
        let num = |v: &str| v.parse::<u64>().map_err(|_| bad(v));
        let flag = |v: &str| v.parse::<bool>().map_err(|_| bad(v));
        fn list(v: &str) -> Result<Vec<&str>> {
            Ok(if v.is_empty() { vec![] } else { v.split(',').collect() })
        }
        let mut element_orders = BTreeMap::new();
        for item in list(get("element-orders")?)? {
            let (o, n) = item.split_once(':').ok_or_else(|| bad(item))?;
            element_orders.insert(num(o)? as u32, num(n)?);
        }
        let fp = Fingerprint {
            order: num(get("order")?)?,
            abelian: flag(get("abelian")?)?,
            simple: flag(get("simple")?)?,
            element_orders,
            class_sizes: list(get("class-sizes")?)?
                .into_iter()
                .map(num)
                .collect::<Result<_>>()?,
            derived_length: match get("derived-length")? {
                "inf" => None,
                v => Some(num(v)? as u32),
            },
            center_order: num(get("center-order")?)?,
        };
        if map.len() != 7 {
            return Err(bad("unexpected keys"));
        }
        if fp.to_string() != s.trim() {
            return Err(bad("not in canonical form"));
        }
        Ok(fp)
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    /// Other names for the same group.
    pub aliases: &'static [&'static str],
    pub fingerprint: Fingerprint,
    build: Builder,
}

impl CatalogEntry {
    /// Rebuilds the permutation group the fingerprint was taken from.
    pub fn group(&self) -> Result<PermGroup> {
        (self.build)()
    }
}

type Builder = fn() -> Result<PermGroup>;

fn dihedrals() -> Vec<(&'static str, &'static [&'static str], Builder)> {
    macro_rules! d {
        ($($n:literal),*) => {
            vec![$((concat!("D", $n), &[] as &[&str], (|| dihedral($n)) as Builder)),*]
        };
    }
    d!(8, 10, 12, 14, 16, 18, 20, 22, 24, 26, 28, 30, 32, 34, 36, 38, 40)
}

fn sym4_subgroup(gens: &[&str]) -> Result<PermGroup> {
    PermGroup::from_cycles(4, gens)
}

fn c3sq_d12() -> Result<PermGroup> {
    let g = example_group_324_160()?;
    let m = maximal_classes(&g)?
        .into_iter()
        .find(|c| c.order == 108)
        .ok_or_else(|| Error::Catalog("no maximal subgroup of order 108".into()))?;
    Ok(m.representative)
}

fn builders() -> Vec<(&'static str, &'static [&'static str], Builder)> {
    let mut v: Vec<(&'static str, &'static [&'static str], Builder)> = vec![
        ("Sym(3)", &["PSL(2,2)", "D6"], || symmetric(3)),
        ("Sym(4)", &["PGL(2,3)"], || symmetric(4)),
        ("Sym(5)", &["PGL(2,5)"], || symmetric(5)),
        ("Sym(6)", &[], || symmetric(6)),
        ("Alt(4)", &["PSL(2,3)"], || alternating(4)),
        ("Alt(5)", &["PSL(2,4)", "PSL(2,5)"], || alternating(5)),
        ("PSL(2,9)", &["Alt(6)"], || psl2(9)),
        ("PGL(2,9)", &[], || pgl2(9)),
        ("M10", &[], m10),
        ("Alt(7)", &[], || alternating(7)),
        ("PSL(2,7)", &["PSL(3,2)"], || psl2(7)),
        ("PSL(2,8)", &[], || psl2(8)),
        ("PSL(2,11)", &[], || psl2(11)),
        ("PSL(2,13)", &[], || psl2(13)),
        ("PGL(2,7)", &[], || pgl2(7)),
        ("PGL(2,11)", &[], || pgl2(11)),
        ("PSL(3,3)", &[], || psl(3, 3)),
        ("SL(2,11)", &[], || sl2_on_vectors(11)),
        ("C5:C4", &["F(5,4)"], || frobenius(5, 4)),
        ("C7:C3", &["F(7,3)"], || frobenius(7, 3)),
        ("C11:C5", &["F(11,5)"], || frobenius(11, 5)),
        ("C31:C5", &["F(31,5)"], || frobenius(31, 5)),
        ("C3 x Alt(4)", &[], || c3_sign_twist(&alternating(4)?)),
        ("C3:D8", &[], || {
            c3_sign_twist(&sym4_subgroup(&["(1,2,3,4)", "(1,3)"])?)
        }),
        ("C3:Sym(3)", &[], || {
            c3_sign_twist(&sym4_subgroup(&["(1,2,3)", "(1,2)"])?)
        }),
        ("C3:Sym(4)", &["Ex72_43"], example_group_72_43),
        ("C3wrC3", &[], c3_wreath_c3),
        ("C3^3:Alt(4)", &["Ex324_160"], example_group_324_160),
        ("C3^2:D12", &[], c3sq_d12),
    ];
    v.extend(dihedrals());
    v
}

/// The named nonabelian groups, with fingerprints verified pairwise distinct
/// on first use. Abelian groups are named from their invariants instead.
pub fn catalog() -> Result<&'static [CatalogEntry]> {
    static CATALOG: OnceLock<std::result::Result<Vec<CatalogEntry>, String>> = OnceLock::new();
    CATALOG
        .get_or_init(|| build_catalog().map_err(|e| e.to_string()))
        .as_deref()
        .map_err(|e| Error::Catalog(e.clone()))
}

fn build_catalog() -> Result<Vec<CatalogEntry>> {
    let entries = builders()
        .into_par_iter()
        .map(|(name, aliases, build)| {
            let g = build().map_err(|e| Error::Catalog(format!("{name}: {e}")))?;
            let fingerprint = fingerprint(&g)?;
            if fingerprint.abelian {
                return Err(Error::Catalog(format!("{name} is abelian")));
            }
            Ok(CatalogEntry {
                name,
                aliases,
                fingerprint,
                build,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    for (i, a) in entries.iter().enumerate() {
        for b in &entries[..i] {
            if a.fingerprint == b.fingerprint {
                return Err(Error::Catalog(format!(
                    "{} and {} share a fingerprint",
                    a.name, b.name
                )));
            }
        }
    }
    Ok(entries)
}

fn abelian_name(invariants: &[u64]) -> String {
    match invariants {
        [] => "C1".into(),
        [n] => format!("C{n}"),
        _ => {
            let mut parts: Vec<String> = Vec::new();
            let mut i = 0;
            while i < invariants.len() {
                let n = invariants[i];
                let run = invariants[i..].iter().take_while(|&&m| m == n).count();
                parts.push(if run == 1 { format!("C{n}") } else { format!("C{n}^{run}") });
                i += run;
            }
            parts.join(" x ")
        }
    }
}

/// Name of `g` if it is abelian or matches a catalog entry; `None` otherwise.
pub fn identify(g: &PermGroup) -> Result<Option<String>> {
    let fp = fingerprint(g)?;
    identify_fingerprint(&fp)
}

pub fn identify_fingerprint(fp: &Fingerprint) -> Result<Option<String>> {
    if let Some(inv) = fp.abelian_invariants() {
        return Ok(Some(abelian_name(&inv)));
    }
    Ok(catalog()?
        .iter()
        .find(|c| &c.fingerprint == fp)
        .map(|c| c.name.to_string()))
}

/// Whether `name` is the canonical name or an alias of the entry matching `fp`.
pub fn fingerprint_has_name(fp: &Fingerprint, name: &str) -> Result<bool> {
    if fp.abelian {
        return Ok(identify_fingerprint(fp)?.as_deref() == Some(name));
    }
    Ok(catalog()?
        .iter()
        .any(|c| &c.fingerprint == fp && (c.name == name || c.aliases.contains(&name))))
}
