//! JSON report envelope shared by every subcommand.
//!
//! Reports are deterministic: field order follows struct declaration order,
//! rationals are rendered as exact `p/q` strings, and the same arguments and
//! seed always produce byte-identical output.

use anyhow::Result;
use num_rational::BigRational;
use serde::Serialize;

use crate::parse::rational_string;
use boe_core::scalar::Coeff;

/// Top-level schema tag carried by every JSON report.
pub const SCHEMA: &str = "boe-fluct/1";

#[derive(Serialize)]
struct Envelope<T: Serialize> {
    schema: &'static str,
    op: &'static str,
    #[serde(flatten)]
    body: T,
}

/// Render a report body under the `{schema, op, …}` envelope.
pub fn render<T: Serialize>(op: &'static str, body: T) -> Result<String> {
    let envelope = Envelope { schema: SCHEMA, op, body };
    Ok(serde_json::to_string_pretty(&envelope)?)
}

/// A number that may be exactly rational: `value` is the decimal rendering,
/// `exact` the `p/q` form when one exists.
#[derive(Serialize, Clone, Debug)]
pub struct ExactValue {
    pub value: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
}

impl ExactValue {
    pub fn from_rational(v: &BigRational) -> Self {
        ExactValue { value: Coeff::to_f64(v), exact: Some(rational_string(v)) }
    }

    pub fn from_f64(v: f64) -> Self {
        ExactValue { value: v, exact: None }
    }
}

/// Equality certificate for one combinatorial-identity check.
#[derive(Serialize, Clone, Debug)]
pub struct Certificate {
    pub identity: &'static str,
    pub n: usize,
    pub input: serde_json::Value,
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
}

/// Certificate batch; `all_equal` is the exit-code signal.
#[derive(Serialize)]
pub struct CertificateBatch {
    pub trials: usize,
    pub all_equal: bool,
    pub certificates: Vec<Certificate>,
}

impl CertificateBatch {
    pub fn new(certificates: Vec<Certificate>) -> Self {
        CertificateBatch {
            trials: certificates.len(),
            all_equal: certificates.iter().all(|c| c.equal),
            certificates,
        }
    }
}

/// JSON list of exact rationals.
pub fn rational_list_json(values: &[BigRational]) -> serde_json::Value {
    serde_json::Value::Array(
        values.iter().map(|v| serde_json::Value::String(rational_string(v))).collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use boe_core::scalar::rat;

    #[test]
    fn envelope_leads_with_schema_and_op() {
        #[derive(Serialize)]
        struct Body {
            answer: u32,
        }
        let text = render("demo", Body { answer: 7 }).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[1], "  \"schema\": \"boe-fluct/1\",");
        assert_eq!(lines[2], "  \"op\": \"demo\",");
        assert!(text.contains("\"answer\": 7"));
    }

    #[test]
    fn exact_values_render_both_forms() {
        let v = ExactValue::from_rational(&rat(3, 128));
        assert_eq!(v.exact.as_deref(), Some("3/128"));
        assert!((v.value - 0.0234375).abs() < 1e-15);
        let w = ExactValue::from_f64(0.5);
        assert!(serde_json::to_string(&w).unwrap() == "{\"value\":0.5}");
    }

    #[test]
    fn batch_flags_inequality() {
        let good = Certificate {
            identity: "demo",
            n: 2,
            input: serde_json::json!([1, -1]),
            lhs: "1".into(),
            rhs: "1".into(),
            equal: true,
        };
        let mut bad = good.clone();
        bad.equal = false;
        assert!(CertificateBatch::new(vec![good.clone()]).all_equal);
        assert!(!CertificateBatch::new(vec![good, bad]).all_equal);
    }
}
