//! On-disk representations.
//!
//! K-type tables:
//!
//! ```json
//! {"m": 2, "lambda": 1, "semantics": "multiplicity",
//!  "bounds": {"min_mu0": -5, "max_mu0": 5, "max_mu1": 4},
//!  "entries": [{"mu0": 1, "mu": [0, 0], "mult": 1}, ...]}
//! ```
//!
//! CSV uses the columns `mu0,mu_1,...,mu_m,mult`.
//!
//! Polynomials:
//!
//! ```json
//! {"nvars": 2, "terms": [{"exp": [2, 0], "num": 1, "den": 1}]}
//! ```
//!
//! `num` and `den` are JSON integers when they fit in `i64` and decimal
//! strings otherwise; both forms are accepted on input.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use lieball_core::blattner::{KTypeTable, ScanBounds, TableSemantics};
use lieball_core::{KTypeParam, SparsePolynomial};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SemanticsDoc {
    Multiplicity,
    EulerCharacteristic,
}

impl From<TableSemantics> for SemanticsDoc {
    fn from(s: TableSemantics) -> Self {
        match s {
            TableSemantics::Multiplicity => SemanticsDoc::Multiplicity,
            TableSemantics::EulerCharacteristic => SemanticsDoc::EulerCharacteristic,
        }
    }
}

impl From<SemanticsDoc> for TableSemantics {
    fn from(s: SemanticsDoc) -> Self {
        match s {
            SemanticsDoc::Multiplicity => TableSemantics::Multiplicity,
            SemanticsDoc::EulerCharacteristic => TableSemantics::EulerCharacteristic,
        }
    }
}

pub fn semantics_label(s: TableSemantics) -> &'static str {
    match s {
        TableSemantics::Multiplicity => "multiplicity",
        TableSemantics::EulerCharacteristic => "Euler characteristic (outside the weakly fair range)",
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsDoc {
    pub min_mu0: i64,
    pub max_mu0: i64,
    pub max_mu1: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryDoc {
    pub mu0: i64,
    pub mu: Vec<i64>,
    pub mult: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDoc {
    pub m: usize,
    pub lambda: i64,
    pub semantics: SemanticsDoc,
    pub bounds: BoundsDoc,
    pub entries: Vec<EntryDoc>,
}

impl From<&KTypeTable> for TableDoc {
    fn from(t: &KTypeTable) -> Self {
        TableDoc {
            m: t.m,
            lambda: t.lambda,
            semantics: t.semantics.into(),
            bounds: BoundsDoc {
                min_mu0: t.bounds.min_mu0,
                max_mu0: t.bounds.max_mu0,
                max_mu1: t.bounds.max_mu1,
            },
            entries: t
                .entries
                .iter()
                .map(|(k, &mult)| EntryDoc {
                    mu0: k.mu0(),
                    mu: k.mu().to_vec(),
                    mult,
                })
                .collect(),
        }
    }
}

impl TryFrom<TableDoc> for KTypeTable {
    type Error = CliError;

    fn try_from(doc: TableDoc) -> Result<Self, CliError> {
        let mut entries = BTreeMap::new();
        for e in doc.entries {
            if e.mu.len() != doc.m {
                return Err(CliError::Format(format!(
                    "entry {:?} has rank {} but the table has m = {}",
                    e.mu,
                    e.mu.len(),
                    doc.m
                )));
            }
            if e.mult != 0 {
                entries.insert(KTypeParam::new(e.mu0, e.mu)?, e.mult);
            }
        }
        Ok(KTypeTable {
            m: doc.m,
            lambda: doc.lambda,
            entries,
            bounds: ScanBounds {
                min_mu0: doc.bounds.min_mu0,
                max_mu0: doc.bounds.max_mu0,
                max_mu1: doc.bounds.max_mu1,
            },
            semantics: doc.semantics.into(),
        })
    }
}

pub fn table_to_json(t: &KTypeTable) -> Result<String, CliError> {
    Ok(serde_json::to_string_pretty(&TableDoc::from(t))? + "\n")
}

pub fn table_from_json(s: &str) -> Result<KTypeTable, CliError> {
    serde_json::from_str::<TableDoc>(s)?.try_into()
}

pub fn table_csv_header(m: usize) -> Vec<String> {
    std::iter::once("mu0".to_string())
        .chain((1..=m).map(|i| format!("mu_{i}")))
        .collect()
}

pub fn table_to_csv(t: &KTypeTable) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = table_csv_header(t.m);
    header.push("mult".into());
    w.write_record(&header)?;
    for (k, mult) in &t.entries {
        let row: Vec<String> = std::iter::once(k.mu0())
            .chain(k.mu().iter().copied())
            .chain(std::iter::once(*mult))
            .map(|x| x.to_string())
            .collect();
        w.write_record(&row)?;
    }
    csv_finish(w)
}

pub fn table_from_csv(m: usize, lambda: i64, s: &str) -> Result<Vec<EntryDoc>, CliError> {
    let mut r = csv::Reader::from_reader(s.as_bytes());
    let mut out = Vec::new();
    for rec in r.records() {
        let rec = rec?;
        let nums = rec
            .iter()
            .map(|f| f.parse::<i64>().map_err(|e| CliError::Format(format!("{f:?}: {e}"))))
            .collect::<Result<Vec<_>, _>>()?;
        if nums.len() != m + 2 {
            return Err(CliError::Format(format!(
                "row has {} fields, expected {} for m = {m}, lambda = {lambda}",
                nums.len(),
                m + 2
            )));
        }
        out.push(EntryDoc {
            mu0: nums[0],
            mu: nums[1..=m].to_vec(),
            mult: nums[m + 1],
        });
    }
    Ok(out)
}

pub fn table_to_text(t: &KTypeTable) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "K-types m={} lambda={} [{}] mu0 in [{}, {}], mu_1 <= {}",
        t.m,
        t.lambda,
        semantics_label(t.semantics),
        t.bounds.min_mu0,
        t.bounds.max_mu0,
        t.bounds.max_mu1
    );
    for (k, mult) in &t.entries {
        let _ = writeln!(s, "{k}  {mult}");
    }
    let _ = writeln!(s, "{} nonzero entries", t.entries.len());
    s
}

pub(crate) fn csv_finish(w: csv::Writer<Vec<u8>>) -> Result<String, CliError> {
    let bytes = w.into_inner().map_err(|e| CliError::Format(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Format(e.to_string()))
}

/// An integer that is written as a JSON number when it fits in `i64`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IntDoc {
    Small(i64),
    Big(String),
}

impl From<&BigInt> for IntDoc {
    fn from(n: &BigInt) -> Self {
        match n.to_i64() {
            Some(v) => IntDoc::Small(v),
            None => IntDoc::Big(n.to_string()),
        }
    }
}

impl TryFrom<&IntDoc> for BigInt {
    type Error = CliError;

    fn try_from(d: &IntDoc) -> Result<Self, CliError> {
        match d {
            IntDoc::Small(v) => Ok(BigInt::from(*v)),
            IntDoc::Big(s) => s
                .parse()
                .map_err(|_| CliError::Format(format!("{s:?} is not an integer"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub exp: Vec<u32>,
    pub num: IntDoc,
    pub den: IntDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialDoc {
    pub nvars: usize,
    pub terms: Vec<TermDoc>,
}

impl From<&SparsePolynomial> for PolynomialDoc {
    fn from(p: &SparsePolynomial) -> Self {
        PolynomialDoc {
            nvars: p.nvars(),
            terms: p
                .terms()
                .map(|(m, c)| TermDoc {
                    exp: m.exponents().to_vec(),
                    num: c.numer().into(),
                    den: c.denom().into(),
                })
                .collect(),
        }
    }
}

impl TryFrom<&PolynomialDoc> for SparsePolynomial {
    type Error = CliError;

    fn try_from(doc: &PolynomialDoc) -> Result<Self, CliError> {
        let mut terms = Vec::with_capacity(doc.terms.len());
        for t in &doc.terms {
            let den = BigInt::try_from(&t.den)?;
            if den.is_zero() {
                return Err(CliError::Format("zero denominator".into()));
            }
            terms.push((t.exp.clone(), BigRational::new(BigInt::try_from(&t.num)?, den)));
        }
        Ok(SparsePolynomial::from_terms(doc.nvars, terms)?)
    }
}

pub fn polynomial_to_json(p: &SparsePolynomial) -> Result<String, CliError> {
    Ok(serde_json::to_string_pretty(&PolynomialDoc::from(p))? + "\n")
}

pub fn polynomial_from_json(s: &str) -> Result<SparsePolynomial, CliError> {
    (&serde_json::from_str::<PolynomialDoc>(s)?).try_into()
}

#[cfg(test)]
mod tests {
    use super::*;
    use lieball_core::blattner::ktype_table;

    #[test]
    fn table_json_round_trip() {
        let t = ktype_table(2, 1, 5, 3).unwrap();
        let back = table_from_json(&table_to_json(&t).unwrap()).unwrap();
        assert_eq!(back, t);
        let t = ktype_table(3, 0, 3, 2).unwrap();
        let json = table_to_json(&t).unwrap();
        assert!(json.contains("\"euler_characteristic\""));
        assert_eq!(table_from_json(&json).unwrap(), t);
    }

    #[test]
    fn table_csv_round_trip() {
        let t = ktype_table(3, 2, 6, 3).unwrap();
        let csv = table_to_csv(&t).unwrap();
        assert!(csv.starts_with("mu0,mu_1,mu_2,mu_3,mult\n"));
        let rows = table_from_csv(3, 2, &csv).unwrap();
        assert_eq!(rows, TableDoc::from(&t).entries);
        assert!(table_from_csv(2, 1, &csv).is_err());
    }

    #[test]
    fn polynomial_round_trip_with_big_coefficients() {
        let big: BigInt = BigInt::from(i64::MAX) * 1000;
        let p = SparsePolynomial::from_terms(
            2,
            [
                (vec![2, 0], BigRational::new(3.into(), 2.into())),
                (vec![0, 1], BigRational::new(big.clone(), 3.into())),
            ],
        )
        .unwrap();
        let json = polynomial_to_json(&p).unwrap();
        assert!(json.contains(&format!("\"{big}\"")));
        assert_eq!(polynomial_from_json(&json).unwrap(), p);
    }

    #[test]
    fn polynomial_input_is_validated() {
        let bad_den = r#"{"nvars": 1, "terms": [{"exp": [1], "num": 1, "den": 0}]}"#;
        assert!(polynomial_from_json(bad_den).is_err());
        let bad_arity = r#"{"nvars": 2, "terms": [{"exp": [1], "num": 1, "den": 1}]}"#;
        assert!(polynomial_from_json(bad_arity).is_err());
        let strings = r#"{"nvars": 1, "terms": [{"exp": [3], "num": "-4", "den": "6"}]}"#;
        let p = polynomial_from_json(strings).unwrap();
        assert_eq!(p.to_string(), "-2/3*z1^3");
    }
}
