//! Versioned TOML report documents.
//!
//! A document is a `version` field followed by one `[[check]]` table per
//! check. Integers that may exceed the TOML integer range are written as
//! decimal strings.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypothesis::{
    HypothesisReport, Lemma23Report, Lemma41Report, SeriesVerdict, TheoremAReport,
};
use crate::structure::PSeriesRecord;
use crate::arith::CandidateTriple;

pub const REPORT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn is_pass(self) -> bool {
        self == Verdict::Pass
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

/// Serde adapter writing `u128` as a decimal string.
pub mod decimal {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &u128, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<u128, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Series data in report form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesReport {
    pub group: String,
    pub prime: u64,
    pub orders: Vec<u64>,
    /// `p'` or `p` for each step after the trivial term.
    pub steps: Vec<String>,
    pub p_length: u32,
    pub reaches_group: bool,
}

impl SeriesReport {
    pub fn new(group: &str, s: &PSeriesRecord) -> Self {
        SeriesReport {
            group: group.to_string(),
            prime: s.prime,
            orders: s.orders(),
            steps: s
                .terms
                .iter()
                .skip(1)
                .map(|t| match t.kind {
                    Some(crate::structure::StepKind::P) => "p".to_string(),
                    _ => "p'".to_string(),
                })
                .collect(),
            p_length: s.p_length,
            reaches_group: s.reaches_group,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SieveReport {
    pub prime: u64,
    pub n_max: u64,
    pub d_max: u64,
    pub triples: Vec<SieveRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SieveRow {
    pub n: u64,
    pub d: u64,
    pub point_count: String,
    pub primality: String,
    pub revalidated: bool,
}

impl SieveReport {
    pub fn new(prime: u64, n_max: u64, d_max: u64, triples: &[CandidateTriple]) -> Self {
        SieveReport {
            prime,
            n_max,
            d_max,
            triples: triples
                .iter()
                .map(|t| SieveRow {
                    n: t.n,
                    d: t.d,
                    point_count: t.q_point_count.clone(),
                    primality: format!("{:?}", t.point_count_primality).to_lowercase(),
                    revalidated: t.revalidate(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Check {
    Hypothesis(HypothesisReport),
    Series(SeriesReport),
    TheoremA(TheoremAReport),
    SeriesVerdict(SeriesVerdict),
    Lemma23(Lemma23Report),
    Lemma41(Lemma41Report),
    Sieve(SieveReport),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Document {
    pub version: u32,
    #[serde(default, rename = "check")]
    pub checks: Vec<Check>,
}

impl Document {
    pub fn new(checks: Vec<Check>) -> Self {
        Document {
            version: REPORT_VERSION,
            checks,
        }
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("report types serialize to TOML")
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        let doc: Document = toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if doc.version != REPORT_VERSION {
            return Err(Error::Parse(format!("unsupported report version {}", doc.version)));
        }
        Ok(doc)
    }
}
