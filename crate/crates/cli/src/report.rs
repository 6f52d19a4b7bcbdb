//! Machine-readable verification reports.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use scx_core::formats::ComplexFile;
use scx_core::report::{extended_float, CheckReport, Outcome};
use scx_core::Complex;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

/// SHA-256 of arbitrary input bytes, hex encoded.
pub fn digest_bytes(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().fold(String::with_capacity(64), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}

/// Digest of the canonical missing-face JSON of a complex.
pub fn digest_complex(x: &Complex) -> String {
    let text = serde_json::to_string(&ComplexFile::from_complex(x)).expect("serialisable");
    digest_bytes(text.as_bytes())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Record {
    pub check: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trial: Option<u64>,
    pub inputs_digest: String,
    #[serde(with = "extended_float")]
    pub lhs: f64,
    #[serde(with = "extended_float")]
    pub rhs: f64,
    #[serde(with = "extended_float")]
    pub margin: f64,
    pub outcome: Outcome,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl Record {
    pub fn from_check(c: CheckReport, trial: Option<u64>, inputs_digest: String) -> Record {
        Record {
            pass: c.passed(),
            check: c.check,
            trial,
            inputs_digest,
            lhs: c.lhs,
            rhs: c.rhs,
            margin: c.margin,
            outcome: c.outcome,
            detail: c.detail,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub seed: u64,
    pub tolerances: BTreeMap<String, f64>,
    pub records: Vec<Record>,
    pub pass: bool,
    /// Only filled in on request, so that reports stay byte-identical by default.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_s: Option<f64>,
}

impl VerificationReport {
    pub fn new(suite: &str, seed: u64, tolerances: BTreeMap<String, f64>, records: Vec<Record>) -> Self {
        let pass = records.iter().all(|r| r.pass);
        VerificationReport {
            suite: suite.to_string(),
            seed,
            tolerances,
            records,
            pass,
            wall_time_s: None,
        }
    }

    pub fn count(&self, outcome: Outcome) -> usize {
        self.records.iter().filter(|r| r.outcome == outcome).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| !r.pass)
    }

    /// Fixed-width table for terminals.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "suite {}  seed {}  records {}", self.suite, self.seed, self.records.len());
        let _ = writeln!(out, "{:<20} {:>6} {:>14} {:>14} {:>14}  {:<14} {}", "check", "trial", "lhs", "rhs", "margin", "outcome", "detail");
        for r in &self.records {
            let trial = r.trial.map_or("-".to_string(), |t| t.to_string());
            let _ = writeln!(
                out,
                "{:<20} {:>6} {:>14.6} {:>14.6} {:>14.6}  {:<14} {}",
                r.check,
                trial,
                r.lhs,
                r.rhs,
                r.margin,
                format!("{:?}", r.outcome),
                r.detail
            );
        }
        let _ = writeln!(
            out,
            "holds {}  vacuous {}  not applicable {}  violated {}  => {}",
            self.count(Outcome::Holds),
            self.count(Outcome::Vacuous),
            self.count(Outcome::NotApplicable),
            self.count(Outcome::Violated),
            if self.pass { "PASS" } else { "FAIL" }
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_and_overall_pass() {
        let ok = Record::from_check(CheckReport::at_least("a", f64::INFINITY, 1.0, 0.0), Some(0), "x".into());
        let bad = Record::from_check(CheckReport::at_least("b", 0.0, 1.0, 0.0), Some(1), "y".into());
        let tol = BTreeMap::from([("slack".to_string(), 1e-9)]);
        let r = VerificationReport::new("s", 1, tol.clone(), vec![ok.clone()]);
        assert!(r.pass);
        let text = serde_json::to_string(&r).unwrap();
        assert_eq!(serde_json::from_str::<VerificationReport>(&text).unwrap(), r);
        let r = VerificationReport::new("s", 1, tol, vec![ok, bad]);
        assert!(!r.pass);
        assert_eq!(r.failures().count(), 1);
    }

    #[test]
    fn digests_are_stable() {
        assert_eq!(
            digest_bytes(b"abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
        let x = scx_core::named::hollow_triangle();
        assert_eq!(digest_complex(&x), digest_complex(&x.clone()));
    }
}
