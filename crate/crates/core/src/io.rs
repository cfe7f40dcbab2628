//! JSON input files and report schemas.

use std::ops::RangeInclusive;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::field::{PrimeField, DEFAULT_PRIME};
use crate::linalg::Matrix;
use crate::poly::Polynomial;
use crate::resolution::BettiEntry;
use crate::ring::QuotientRingSpec;
use crate::wildness::{RegularSequence, WildnessReport};

pub const SCHEMA: &str = "cmwild/1";

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct RingFile {
    pub vars: Vec<String>,
    #[serde(default)]
    pub relations: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u32>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct InstanceFile {
    pub ring: RingFile,
    pub sequence: Vec<String>,
    pub c: i32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    pub n: usize,
    #[serde(rename = "Ax")]
    pub ax: Vec<Vec<i64>>,
    #[serde(rename = "Ay", default, skip_serializing_if = "Option::is_none")]
    pub ay: Option<Vec<Vec<i64>>>,
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

pub fn ring_from_file(file: &RingFile, p_override: Option<u32>) -> Result<QuotientRingSpec> {
    let p = p_override.or(file.p).unwrap_or(DEFAULT_PRIME);
    let vars: Vec<&str> = file.vars.iter().map(String::as_str).collect();
    let rels: Vec<&str> = file.relations.iter().map(String::as_str).collect();
    QuotientRingSpec::parse(&vars, &rels, p)
}

pub fn parse_sequence(ring: &QuotientRingSpec, items: &[String]) -> Result<RegularSequence> {
    let ys = items.iter().map(|s| ring.parse_poly(s.trim())).collect::<Result<Vec<Polynomial>>>()?;
    RegularSequence::unverified(ys)
}

/// Splits `"x^2,y^2"` on top-level commas.
pub fn split_list(text: &str) -> Vec<String> {
    text.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect()
}

/// Parses `"3..8"` (inclusive) or a single degree.
pub fn parse_window(text: &str) -> Result<RangeInclusive<i32>> {
    let bad = || Error::Input(format!("invalid degree window '{text}', expected A..B"));
    match text.split_once("..") {
        Some((a, b)) => {
            let a: i32 = a.trim().parse().map_err(|_| bad())?;
            let b: i32 = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
            if a > b {
                return Err(bad());
            }
            Ok(a..=b)
        }
        None => {
            let c: i32 = text.trim().parse().map_err(|_| bad())?;
            Ok(c..=c)
        }
    }
}

pub fn matrix_from_json(rows: &[Vec<i64>], n: usize, field: PrimeField) -> Result<Matrix> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Error::Input(format!("matrix must be {n}x{n}")));
    }
    let data: Vec<Vec<u32>> = rows.iter().map(|r| r.iter().map(|&v| field.reduce_i64(v)).collect()).collect();
    Matrix::from_rows(&data)
}

pub fn spec_from_instance(inst: &InstanceFile, p_override: Option<u32>) -> Result<FamilySpec> {
    let ring = ring_from_file(&inst.ring, p_override)?;
    let y = parse_sequence(&ring, &inst.sequence)?;
    let ax = matrix_from_json(&inst.ax, inst.n, ring.field())?;
    let ay = inst.ay.as_ref().map(|m| matrix_from_json(m, inst.n, ring.field())).transpose()?;
    let y = y.verify(&ring)?;
    let basis = match &inst.basis {
        Some(b) => b.iter().map(|s| ring.parse_poly(s)).collect::<Result<Vec<_>>>()?,
        None => FamilySpec::default_basis(&ring, &y, inst.c, if ay.is_some() { 3 } else { 2 })?,
    };
    FamilySpec::new(ring, y, inst.c, basis, ax, ay)
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct ReportJson {
    pub schema: String,
    pub verdict: String,
    pub p: u32,
    pub seed: u64,
    pub sequence: Vec<String>,
    pub m: i32,
    pub d: usize,
    pub c: Option<i32>,
    pub dim_c: Option<usize>,
    pub scanned: Vec<(i32, usize)>,
    pub cm_assumed: bool,
    pub narrative: String,
}

impl ReportJson {
    pub fn from_report(r: &WildnessReport, seed: u64) -> Self {
        ReportJson {
            schema: SCHEMA.into(),
            verdict: r.verdict.to_string(),
            p: r.p,
            seed,
            sequence: r.sequence_text.clone(),
            m: r.m(),
            d: r.d,
            c: r.witness.map(|w| w.0),
            dim_c: r.witness.map(|w| w.1),
            scanned: r.scanned.clone(),
            cm_assumed: r.cm_assumed,
            narrative: r.narrative.clone(),
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct BettiReportJson {
    pub schema: String,
    pub p: u32,
    pub seed: u64,
    pub betti: Vec<BettiEntry>,
    pub minimal: bool,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct HilbertJson {
    pub schema: String,
    pub p: u32,
    pub seed: u64,
    pub krull_dimension: i64,
    pub series: String,
    /// `(t, dim R_t)`.
    pub values: Vec<(i32, usize)>,
}

#[derive(Serialize, Debug, Clone)]
pub struct IsoJson {
    pub schema: String,
    pub p: u32,
    pub seed: u64,
    #[serde(flatten)]
    pub certificate: crate::intertwine::IsoCertificate,
    pub note: String,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_file_roundtrip() {
        let text = r#"{"vars":["x","y","z"],"relations":["x^4+y^4+z^4"],"p":32003}"#;
        let rf: RingFile = serde_json::from_str(text).unwrap();
        assert_eq!(serde_json::to_string(&rf).unwrap(), text);
        let r = ring_from_file(&rf, None).unwrap();
        assert_eq!(r.hilbert_dim(4), 14);
        assert_eq!(ring_from_file(&rf, Some(7)).unwrap().field().char(), 7);
    }

    #[test]
    fn windows() {
        assert_eq!(parse_window("3..8").unwrap(), 3..=8);
        assert_eq!(parse_window("4").unwrap(), 4..=4);
        assert!(parse_window("8..3").is_err());
        assert!(parse_window("a..b").is_err());
    }

    #[test]
    fn instance_parsing() {
        let text = r#"{"ring":{"vars":["x","y","z"],"relations":["x^4+y^4+z^4"]},"sequence":["x^2","y^2"],"c":4,
            "basis":["x*y*z^2","x*z^3","y*z^3"],"n":2,"Ax":[[0,1],[0,0]],"Ay":[[0,0],[0,0]]}"#;
        let inst: InstanceFile = serde_json::from_str(text).unwrap();
        let spec = spec_from_instance(&inst, None).unwrap();
        assert_eq!(spec.n, 2);
        assert!(spec.ay.is_some());
        let mut no_basis = inst.clone();
        no_basis.basis = None;
        assert_eq!(spec_from_instance(&no_basis, None).unwrap().basis, spec.basis);
    }
}
