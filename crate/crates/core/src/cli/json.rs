//! JSON encodings of exact values.
//!
//! Integers become JSON numbers when they fit in `i64` and decimal strings
//! otherwise; rationals are always strings like `"-1/4"` or `"6"`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::arith::{AbGroup, IntMatrix, Mat2};
use crate::cusp::CuspCycle;

pub fn int(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

pub fn rational(r: &BigRational) -> Value {
    json!(r.to_string())
}

pub fn mat2(m: &Mat2) -> Value {
    json!([[int(&m.a), int(&m.b)], [int(&m.c), int(&m.d)]])
}

pub fn matrix(m: &IntMatrix) -> Value {
    Value::Array(
        m.to_rows()
            .iter()
            .map(|row| Value::Array(row.iter().map(int).collect()))
            .collect(),
    )
}

pub fn group(g: &AbGroup) -> Value {
    json!({
        "free_rank": g.free_rank(),
        "divisors": g.divisors().iter().map(int).collect::<Vec<_>>(),
        "torsion_order": int(&g.torsion_order()),
        "display": g.to_string(),
    })
}

pub fn cycle(c: &CuspCycle) -> Value {
    json!(c.entries())
}

/// Canonical text form: object keys sorted, no insignificant whitespace.
pub fn canonical(v: &Value) -> String {
    serde_json::to_string(v).expect("JSON values always serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integers() {
        assert_eq!(int(&BigInt::from(-649)), json!(-649));
        let big = BigInt::from(i64::MAX) * 4;
        assert_eq!(int(&big), json!(big.to_string()));
    }

    #[test]
    fn rationals() {
        let r = BigRational::new(BigInt::from(2), BigInt::from(-8));
        assert_eq!(rational(&r), json!("-1/4"));
        assert_eq!(rational(&BigRational::from_integer(BigInt::from(6))), json!("6"));
    }

    #[test]
    fn keys_are_sorted() {
        let v: Value = serde_json::from_str(r#"{"b":1,"a":{"d":2,"c":3}}"#).unwrap();
        assert_eq!(canonical(&v), r#"{"a":{"c":3,"d":2},"b":1}"#);
    }
}
