//! Serializable report schemas shared by the harness and the CLI.
//!
//! Numeric fidelity rules: big integers serialize as arbitrary-size JSON
//! integers or decimal strings, never floating point; rationals serialize
//! as `"p/q"` in lowest terms with a positive denominator. Reports carry no
//! timing, so identical inputs produce byte-identical JSON.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::engine::InequalityReport;
use crate::harness::{CorpusKind, CorpusResult};

/// An arbitrary-size integer rendered as a JSON number.
fn json_int(n: &BigInt) -> serde_json::Number {
    serde_json::Number::from_str(&n.to_string()).expect("decimal integer literal")
}

/// `"p/q"` in lowest terms, `q > 0`.
pub fn rational_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// How the f-vector under check was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum InputKind {
    Graph,
    Facets,
    Fvector,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckEntry {
    pub n: usize,
    pub lhs: String,
    pub v: String,
    pub v_integral: bool,
    pub holds: bool,
}

/// The serialized form of one inequality check.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub f_vector: Vec<serde_json::Number>,
    pub alpha: Vec<String>,
    pub max_n: usize,
    pub results: Vec<CheckEntry>,
    pub all_hold: bool,
    pub input_kind: InputKind,
    /// `None` (serialized as `null`) when the input was a raw f-vector and
    /// flagness is therefore unknowable.
    pub is_flag: Option<bool>,
    pub routes_agree: bool,
}

impl CheckReport {
    pub fn new(report: &InequalityReport, input_kind: InputKind, is_flag: Option<bool>) -> Self {
        Self {
            f_vector: report.fvector.counts().iter().map(json_int).collect(),
            alpha: report.alpha.values().iter().map(BigInt::to_string).collect(),
            max_n: report.max_n,
            results: report
                .entries
                .iter()
                .map(|e| CheckEntry {
                    n: e.n,
                    lhs: e.lhs.to_string(),
                    v: rational_string(&e.v),
                    v_integral: e.v_integral,
                    holds: e.holds,
                })
                .collect(),
            all_hold: report.all_hold,
            input_kind,
            is_flag,
            routes_agree: report.routes_agree,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ViolationEntry {
    pub input: String,
    pub n: usize,
    pub lhs: String,
}

/// The serialized form of a corpus run. Wall time is deliberately omitted:
/// a corpus report is a pure function of its spec.
#[derive(Debug, Clone, Serialize)]
pub struct CorpusReport {
    pub kind: &'static str,
    pub vertices: usize,
    pub edge_prob: Option<String>,
    pub trials: Option<u64>,
    pub seed: Option<u64>,
    pub max_n: usize,
    pub order: usize,
    pub total: u64,
    pub violations: Vec<ViolationEntry>,
    pub route_disagreements: u64,
    pub max_v_seen: Vec<Option<String>>,
}

impl CorpusReport {
    pub fn new(result: &CorpusResult) -> Self {
        let (edge_prob, trials, seed) = match &result.spec.kind {
            CorpusKind::Random { edge_prob, trials, seed } => (
                Some(format!("{}/{}", edge_prob.numer(), edge_prob.denom())),
                Some(*trials),
                Some(*seed),
            ),
            _ => (None, None, None),
        };
        Self {
            kind: result.spec.kind.name(),
            vertices: result.spec.vertices,
            edge_prob,
            trials,
            seed,
            max_n: result.spec.max_n,
            order: result.spec.order,
            total: result.total,
            violations: result
                .violations
                .iter()
                .map(|v| ViolationEntry {
                    input: v.input.clone(),
                    n: v.n,
                    lhs: v.lhs.to_string(),
                })
                .collect(),
            route_disagreements: result.route_disagreements,
            max_v_seen: result
                .max_v_seen
                .iter()
                .map(|v| v.as_ref().map(rational_string))
                .collect(),
        }
    }
}

/// Compact single-line JSON.
pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report serialization cannot fail")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::check_inequalities;
    use crate::fvector::FVector;
    use crate::harness::{run_corpus, CorpusSpec, EdgeProb};

    #[test]
    fn check_report_round_trips_byte_identically() {
        let f: FVector = "3,3".parse().unwrap();
        let report = CheckReport::new(&check_inequalities(&f, 3), InputKind::Fvector, None);
        let json = to_json(&report);
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(serde_json::to_string(&value).unwrap(), json);
        assert!(json.contains("\"is_flag\":null"));
        assert!(json.contains("\"lhs\":\"-3\""));
        assert!(json.contains("\"v\":\"-1/1\""));
    }

    #[test]
    fn huge_face_counts_stay_exact_json_integers() {
        let f: FVector = "1267650600228229401496703205376,2".parse().unwrap();
        let report = CheckReport::new(&check_inequalities(&f, 2), InputKind::Fvector, None);
        let json = to_json(&report);
        assert!(json.contains("\"f_vector\":[1267650600228229401496703205376,2]"));
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(serde_json::to_string(&value).unwrap(), json);
    }

    #[test]
    fn corpus_report_fields() {
        let spec = CorpusSpec {
            kind: crate::harness::CorpusKind::Random {
                edge_prob: EdgeProb::new(2, 6),
                trials: 3,
                seed: 11,
            },
            vertices: 5,
            max_n: 4,
            order: 16,
        };
        let report = CorpusReport::new(&run_corpus(&spec, None).unwrap());
        let json = to_json(&report);
        // reduced to lowest terms
        assert!(json.contains("\"edge_prob\":\"1/3\""));
        assert!(json.contains("\"kind\":\"random\""));
        assert!(json.contains("\"total\":3"));
        assert!(!json.contains("elapsed"));
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(serde_json::to_string(&value).unwrap(), json);
    }
}
