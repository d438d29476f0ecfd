//! Structured comparison of an oracle value against an engine value.

use serde::{Deserialize, Serialize};

/// One oracle-versus-engine comparison, ready for JSON serialization.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct OracleReport {
    /// What was compared, e.g. `"loop counts by length"`.
    pub subject: String,
    pub oracle: serde_json::Value,
    pub engine: serde_json::Value,
    pub agree: bool,
}

impl OracleReport {
    /// Compares the two values by their JSON forms.
    pub fn new<A: Serialize, B: Serialize>(subject: &str, oracle: &A, engine: &B) -> Self {
        let oracle = serde_json::to_value(oracle).expect("oracle value must serialize");
        let engine = serde_json::to_value(engine).expect("engine value must serialize");
        OracleReport { subject: subject.to_string(), agree: oracle == engine, oracle, engine }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn agreement_is_by_serialized_value() {
        let r = OracleReport::new("counts", &[1, 2, 3], &vec![1, 2, 3]);
        assert!(r.agree);
        let r = OracleReport::new("counts", &[1, 2, 3], &[1, 2, 4]);
        assert!(!r.agree);
        let text = serde_json::to_string(&r).unwrap();
        assert!(text.starts_with("{\"subject\":\"counts\",\"oracle\":[1,2,3]"));
    }
}
