//! JSON reports produced by the verification checks.

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// `{"check", "params", "pass", "counterexample"}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub params: Value,
    pub pass: bool,
    pub counterexample: Option<Value>,
}

impl CheckReport {
    pub fn passed(check: impl Into<String>, params: Value) -> Self {
        CheckReport {
            check: check.into(),
            params,
            pass: true,
            counterexample: None,
        }
    }

    pub fn failed(check: impl Into<String>, params: Value, counterexample: Value) -> Self {
        CheckReport {
            check: check.into(),
            params,
            pass: false,
            counterexample: Some(counterexample),
        }
    }

    /// Pass unless a counterexample was found.
    pub fn from_outcome(check: impl Into<String>, params: Value, counterexample: Option<Value>) -> Self {
        match counterexample {
            None => Self::passed(check, params),
            Some(c) => Self::failed(check, params, c),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn schema() {
        let r = CheckReport::passed("x", json!({"n": 2}));
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v, json!({"check": "x", "params": {"n": 2}, "pass": true, "counterexample": null}));
        let r = CheckReport::from_outcome("y", json!({}), Some(json!([1, 2])));
        assert!(!r.pass);
        let back: CheckReport = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }
}
