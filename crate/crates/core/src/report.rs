//! Outcome records shared by every inequality and identity checker.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Holds,
    Violated,
    /// The statement holds trivially (an empty cochain space or an infinite parameter).
    Vacuous,
    /// The hypothesis of the statement is not met.
    NotApplicable,
}

/// One evaluated statement `lhs >= rhs` (or `lhs == rhs` for identities).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    #[serde(with = "extended_float")]
    pub lhs: f64,
    #[serde(with = "extended_float")]
    pub rhs: f64,
    /// `lhs - rhs`; negative beyond the slack means a violation.
    #[serde(with = "extended_float")]
    pub margin: f64,
    pub outcome: Outcome,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl CheckReport {
    /// `lhs >= rhs - slack`; vacuous when `lhs` is `+inf` or `rhs` is `-inf`.
    pub fn at_least(check: &str, lhs: f64, rhs: f64, slack: f64) -> CheckReport {
        let outcome = if lhs == f64::INFINITY || rhs == f64::NEG_INFINITY {
            Outcome::Vacuous
        } else if lhs >= rhs - slack {
            Outcome::Holds
        } else {
            Outcome::Violated
        };
        CheckReport::new(check, lhs, rhs, outcome)
    }

    /// `|lhs - rhs| <= tol`.
    pub fn close(check: &str, lhs: f64, rhs: f64, tol: f64) -> CheckReport {
        let outcome = if (lhs - rhs).abs() <= tol || lhs == rhs {
            Outcome::Holds
        } else {
            Outcome::Violated
        };
        CheckReport::new(check, lhs, rhs, outcome)
    }

    /// Exact integer identity.
    pub fn equal(check: &str, lhs: i64, rhs: i64) -> CheckReport {
        let outcome = if lhs == rhs { Outcome::Holds } else { Outcome::Violated };
        CheckReport::new(check, lhs as f64, rhs as f64, outcome)
    }

    pub fn new(check: &str, lhs: f64, rhs: f64, outcome: Outcome) -> CheckReport {
        let margin = if lhs.is_infinite() && lhs == rhs { 0.0 } else { lhs - rhs };
        CheckReport {
            check: check.to_string(),
            lhs,
            rhs,
            margin,
            outcome,
            detail: String::new(),
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> CheckReport {
        self.detail = detail.into();
        self
    }

    /// Also marks the report violated when `ok` is false.
    pub fn and(mut self, ok: bool, why: &str) -> CheckReport {
        if !ok {
            self.outcome = Outcome::Violated;
            if !self.detail.is_empty() {
                self.detail.push_str("; ");
            }
            self.detail.push_str(why);
        }
        self
    }

    /// Anything except a violation.
    pub fn passed(&self) -> bool {
        self.outcome != Outcome::Violated
    }
}

/// Floats that may be infinite: finite values as JSON numbers, the rest as
/// the strings `"inf"`, `"-inf"` and `"nan"`.
pub mod extended_float {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
        if x.is_finite() {
            s.serialize_f64(*x)
        } else if x.is_nan() {
            s.serialize_str("nan")
        } else if *x > 0.0 {
            s.serialize_str("inf")
        } else {
            s.serialize_str("-inf")
        }
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Num(f64),
        Text(String),
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        match Repr::deserialize(d)? {
            Repr::Num(x) => Ok(x),
            Repr::Text(t) => match t.as_str() {
                "inf" => Ok(f64::INFINITY),
                "-inf" => Ok(f64::NEG_INFINITY),
                "nan" => Ok(f64::NAN),
                other => Err(serde::de::Error::custom(format!("not a number: {other}"))),
            },
        }
    }
}
