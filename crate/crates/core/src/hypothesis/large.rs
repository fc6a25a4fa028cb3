//! Maximal-subgroup data for groups too large to enumerate.

use serde::{Deserialize, Serialize};

use super::{Basis, MaximalRow};
use crate::arith;
use crate::construct::GroupSpec;
use crate::error::{Error, Result};
use crate::report::decimal;
use crate::structure::{identify, is_p_nilpotent};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum DescriptorKind {
    /// Only the index is used (it is expected to be prime).
    PrimeIndex,
    /// A small group given by generators, built and tested directly.
    Constructible { spec: String },
    /// Only the order is used: the row passes when `p` does not divide it.
    OrderOnly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaximalDescriptor {
    pub label: String,
    #[serde(with = "decimal")]
    pub order: u128,
    /// Number of conjugacy classes of this shape.
    pub classes: u64,
    pub kind: DescriptorKind,
    pub provenance: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LargeGroupCatalogEntry {
    pub name: String,
    #[serde(with = "decimal")]
    pub order: u128,
    pub maximals: Vec<MaximalDescriptor>,
}

fn is_prime_u128(n: u128) -> bool {
    u64::try_from(n).is_ok_and(arith::is_prime)
}

impl LargeGroupCatalogEntry {
    /// Every descriptor order divides the group order, and there is at
    /// least one descriptor.
    pub fn validate(&self) -> Result<()> {
        if self.maximals.is_empty() {
            return Err(Error::Catalog(format!("{}: no maximal subgroups listed", self.name)));
        }
        for d in &self.maximals {
            if d.order == 0 || self.order % d.order != 0 || d.order == self.order {
                return Err(Error::Catalog(format!(
                    "{}: order {} of {} is not a proper divisor of {}",
                    self.name, d.order, d.label, self.order
                )));
            }
            if d.classes == 0 {
                return Err(Error::Catalog(format!("{}: {} has no classes", self.name, d.label)));
            }
        }
        Ok(())
    }
}

impl MaximalDescriptor {
    pub(crate) fn row(&self, p: u64, group_order: u128) -> Result<MaximalRow> {
        let index = group_order / self.order;
        let coprime = self.order % p as u128 != 0;
        let (p_nilpotent, basis, identified, generators) = match &self.kind {
            DescriptorKind::Constructible { spec } => {
                let spec = GroupSpec::parse(spec)?;
                let g = spec.build()?;
                if g.order() as u128 != self.order {
                    return Err(Error::Catalog(format!(
                        "{}: built order {} but listed {}",
                        self.label,
                        g.order(),
                        self.order
                    )));
                }
                let gens = g.generators().iter().map(ToString::to_string).collect();
                (is_p_nilpotent(&g, p)?, Basis::Closure, identify(&g)?, gens)
            }
            _ if coprime => (true, Basis::CoprimeOrder, None, vec![]),
            _ => (false, Basis::Undecided, None, vec![]),
        };
        Ok(MaximalRow {
            label: Some(self.label.clone()),
            order: self.order,
            index,
            multiplicity: self.classes,
            prime_index: is_prime_u128(index),
            p_nilpotent,
            basis,
            identified,
            fingerprint: None,
            generators,
        })
    }
}

fn descriptor(label: &str, order: u128, classes: u64, kind: DescriptorKind, provenance: &str) -> MaximalDescriptor {
    MaximalDescriptor {
        label: label.into(),
        order,
        classes,
        kind,
        provenance: provenance.into(),
    }
}

/// `PSL_5(2)`, order 9999360.
pub fn psl5_2_entry() -> LargeGroupCatalogEntry {
    let source = "ATLAS of Finite Groups, maximal subgroups of L5(2)";
    // C31 : C5 inside the normalizer of a Singer cycle: x -> x + 1, x -> 2x on F_31
    let singer = "name C31:C5\n\
                  degree 31\n\
                  gen (1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26,27,28,29,30,31)\n\
                  gen (2,3,5,9,17)(4,7,13,25,18)(6,11,21,10,19)(8,15,29,26,20)(12,23,14,27,22)(16,31,30,28,24)\n\
                  expect-order 155\n";
    LargeGroupCatalogEntry {
        name: "PSL(5,2)".into(),
        order: 9_999_360,
        maximals: vec![
            descriptor("2^4:PSL(4,2)", 322_560, 2, DescriptorKind::PrimeIndex, source),
            descriptor("2^6:(Sym(3) x PSL(3,2))", 64_512, 2, DescriptorKind::OrderOnly, source),
            descriptor(
                "C31:C5",
                155,
                1,
                DescriptorKind::Constructible {
                    spec: singer.into(),
                },
                source,
            ),
        ],
    }
}

/// `PSL_3(2^9)`, whose order exceeds `2^64`.
pub fn psl3_512_entry() -> LargeGroupCatalogEntry {
    let q: u128 = 512;
    let source = "Bray, Holt, Roney-Dougal, Table 8.3 (maximal subgroups of L3(q))";
    let order = q.pow(3) * (q * q - 1) * (q.pow(3) - 1);
    LargeGroupCatalogEntry {
        name: "PSL(3,512)".into(),
        order,
        maximals: vec![
            descriptor("[q^2]:GL(2,q)", order / (q * q + q + 1), 2, DescriptorKind::PrimeIndex, source),
            descriptor("(q-1)^2:Sym(3)", (q - 1) * (q - 1) * 6, 1, DescriptorKind::OrderOnly, source),
            descriptor("(q^2+q+1).3", (q * q + q + 1) * 3, 1, DescriptorKind::OrderOnly, source),
            descriptor("PSL(3,8)", 16_482_816, 1, DescriptorKind::OrderOnly, source),
        ],
    }
}

pub fn large_group_catalog() -> Vec<LargeGroupCatalogEntry> {
    vec![psl5_2_entry(), psl3_512_entry()]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypothesis::check_hypothesis_catalog;

    #[test]
    fn entries_are_consistent() {
        for e in large_group_catalog() {
            e.validate().unwrap();
        }
        assert_eq!(crate::construct::psl_order(5, 2), Some(9_999_360));
        assert_eq!(crate::construct::psl_order(3, 8), Some(16_482_816));
    }

    #[test]
    fn psl5_2_at_five() {
        let r = check_hypothesis_catalog(&psl5_2_entry(), 5).unwrap();
        assert!(r.passes(), "{r:#?}");
        let singer = r.rows.iter().find(|r| r.order == 155).unwrap();
        assert!(singer.p_nilpotent && singer.basis == Basis::Closure);
        assert_eq!(singer.identified.as_deref(), Some("C31:C5"));
    }

    #[test]
    fn psl3_512_at_nineteen() {
        let r = check_hypothesis_catalog(&psl3_512_entry(), 19).unwrap();
        assert!(r.passes());
        assert_eq!(r.rows[0].index, 262_657);
        assert!(r.rows[0].prime_index);
    }

    #[test]
    fn empty_entry_is_rejected() {
        let e = LargeGroupCatalogEntry {
            name: "X".into(),
            order: 60,
            maximals: vec![],
        };
        assert!(check_hypothesis_catalog(&e, 5).is_err());
    }
}
