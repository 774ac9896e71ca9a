//! JSON system files.
//!
//! ```json
//! {"n": 5, "d": [...], "a": [...], "a_tilde": [...], "b": [...],
//!  "b_tilde": [...], "s": 0, "t": 0, "y": [...]}
//! ```
//!
//! Values are JSON numbers or exact-rational strings such as `"-3/4"`.
//! `y` is optional. Band lengths follow [`NearlyPentaMatrix::new`].

use crate::error::{Error, Result};
use crate::matrix::NearlyPentaMatrix;
use crate::scalar::{Rational, Scalar};
use serde::Serialize;
use serde_json::{Map, Number, Value};
use std::str::FromStr;

/// Scalars that can be read from and written to system files.
pub trait JsonScalar: Scalar {
    fn from_json(v: &Value) -> Result<Self>;
    fn to_json(&self) -> Value;
}

impl JsonScalar for Rational {
    /// Numbers are taken at their literal decimal value; strings may be
    /// `p/q`, `p` or a decimal.
    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::Number(num) => Rational::from_decimal_str(&num.to_string()),
            Value::String(s) => s.parse(),
            other => Err(Error::Parse(format!(
                "expected a number or rational string, got {other}"
            ))),
        }
    }

    /// Integers become JSON numbers, anything else a `"p/q"` string.
    fn to_json(&self) -> Value {
        if self.is_integer() {
            if let Ok(num) = Number::from_str(&self.to_string()) {
                return Value::Number(num);
            }
        }
        Value::String(self.to_string())
    }
}

impl JsonScalar for f64 {
    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::Number(num) => num
                .to_string()
                .parse::<f64>()
                .map_err(|e| Error::Parse(format!("bad number {num}: {e}"))),
            Value::String(s) => Ok(s.parse::<Rational>()?.to_f64()),
            other => Err(Error::Parse(format!(
                "expected a number or rational string, got {other}"
            ))),
        }
    }

    fn to_json(&self) -> Value {
        match Number::from_f64(*self) {
            Some(num) => Value::Number(num),
            None => Value::String(self.to_string()),
        }
    }
}

/// A matrix with an optional right-hand side.
#[derive(Clone, Debug, PartialEq)]
pub struct SystemDoc<T> {
    pub matrix: NearlyPentaMatrix<T>,
    pub y: Option<Vec<T>>,
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key)
        .ok_or_else(|| Error::Parse(format!("missing field {key:?}")))
}

fn vector<T: JsonScalar>(obj: &Map<String, Value>, key: &str) -> Result<Vec<T>> {
    match field(obj, key)? {
        Value::Array(items) => items
            .iter()
            .enumerate()
            .map(|(i, v)| T::from_json(v).map_err(|e| Error::Parse(format!("{key}[{i}]: {e}"))))
            .collect(),
        _ => Err(Error::Parse(format!("field {key:?} must be an array"))),
    }
}

fn scalar<T: JsonScalar>(obj: &Map<String, Value>, key: &str) -> Result<T> {
    T::from_json(field(obj, key)?).map_err(|e| Error::Parse(format!("{key}: {e}")))
}

/// Parses a system document.
pub fn parse_system<T: JsonScalar>(text: &str) -> Result<SystemDoc<T>> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let obj = value
        .as_object()
        .ok_or_else(|| Error::Parse("top level must be an object".into()))?;
    let n = field(obj, "n")?
        .as_u64()
        .ok_or_else(|| Error::Parse("field \"n\" must be a non-negative integer".into()))?
        as usize;
    let d: Vec<T> = vector(obj, "d")?;
    if d.len() != n {
        return Err(Error::LengthMismatch {
            what: "d",
            expected: n,
            actual: d.len(),
        });
    }
    let matrix = NearlyPentaMatrix::new(
        d,
        vector(obj, "a")?,
        vector(obj, "a_tilde")?,
        vector(obj, "b")?,
        vector(obj, "b_tilde")?,
        scalar(obj, "s")?,
        scalar(obj, "t")?,
    )?;
    let y = match obj.get("y") {
        None | Some(Value::Null) => None,
        Some(_) => {
            let y: Vec<T> = vector(obj, "y")?;
            if y.len() != n {
                return Err(Error::LengthMismatch {
                    what: "y",
                    expected: n,
                    actual: y.len(),
                });
            }
            Some(y)
        }
    };
    Ok(SystemDoc { matrix, y })
}

#[derive(Serialize)]
struct SystemOut {
    n: usize,
    d: Vec<Value>,
    a: Vec<Value>,
    a_tilde: Vec<Value>,
    b: Vec<Value>,
    b_tilde: Vec<Value>,
    s: Value,
    t: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    y: Option<Vec<Value>>,
}

/// Serializes a system with the key order `n, d, a, a_tilde, b, b_tilde, s, t, y`.
pub fn write_system<T: JsonScalar>(m: &NearlyPentaMatrix<T>, y: Option<&[T]>) -> String {
    let conv = |v: &[T]| v.iter().map(JsonScalar::to_json).collect::<Vec<_>>();
    let out = SystemOut {
        n: m.n(),
        d: conv(m.d_vec()),
        a: conv(m.a_vec()),
        a_tilde: conv(m.a_tilde_vec()),
        b: conv(m.b_vec()),
        b_tilde: conv(m.b_tilde_vec()),
        s: m.s().to_json(),
        t: m.t().to_json(),
        y: y.map(conv),
    };
    serde_json::to_string(&out).expect("system serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::gen_laplacian;

    const SMALL: &str = r#"{"n": 5, "d": [1, "1/2", 0.25, -2, 3],
        "a": [1, 2, 3, 4], "a_tilde": [1, 2, 3], "b": [1, 2, 3, 4],
        "b_tilde": [1, 2, 3], "s": "7", "t": -1.5e1, "y": [1, 2, 3, 4, 5]}"#;

    #[test]
    fn parse_exact_values() {
        let doc: SystemDoc<Rational> = parse_system(SMALL).unwrap();
        let m = doc.matrix;
        assert_eq!(m.d(2), &"1/2".parse().unwrap());
        assert_eq!(m.d(3), &"1/4".parse().unwrap());
        assert_eq!(m.s(), &Rational::from(7));
        assert_eq!(m.t(), &Rational::from(-15));
        assert_eq!(doc.y.unwrap().len(), 5);
    }

    #[test]
    fn parse_float_values() {
        let doc: SystemDoc<f64> = parse_system(SMALL).unwrap();
        assert_eq!(*doc.matrix.d(2), 0.5);
        assert_eq!(*doc.matrix.t(), -15.0);
    }

    #[test]
    fn exact_keeps_decimal_literal() {
        // 0.1 is read as exactly 1/10, not the nearest double.
        let text = SMALL.replace("0.25", "0.1");
        let doc: SystemDoc<Rational> = parse_system(&text).unwrap();
        assert_eq!(doc.matrix.d(3), &"1/10".parse().unwrap());
    }

    #[test]
    fn rejects_bad_documents() {
        assert!(parse_system::<Rational>("[]").is_err());
        assert!(parse_system::<Rational>(&SMALL.replace("\"1/2\"", "\"1/0\"")).is_err());
        assert!(parse_system::<Rational>(&SMALL.replace("\"1/2\"", "\"half\"")).is_err());
        assert!(parse_system::<Rational>(&SMALL.replace("\"1/2\"", "true")).is_err());
        assert!(matches!(
            parse_system::<Rational>(&SMALL.replace("\"n\": 5", "\"n\": 6")),
            Err(Error::LengthMismatch { what: "d", .. })
        ));
        assert!(matches!(
            parse_system::<Rational>(&SMALL.replace("[1, 2, 3, 4, 5]}", "[1, 2]}")),
            Err(Error::LengthMismatch { what: "y", .. })
        ));
    }

    #[test]
    fn y_is_optional() {
        let m = gen_laplacian::<Rational>(6).unwrap();
        let text = write_system(&m, None);
        assert!(!text.contains("\"y\""));
        let doc: SystemDoc<Rational> = parse_system(&text).unwrap();
        assert_eq!(doc.matrix, m);
        assert!(doc.y.is_none());
    }

    #[test]
    fn stable_key_order() {
        let m = gen_laplacian::<Rational>(5).unwrap();
        let y = vec![Rational::new(1, 3).unwrap(); 5];
        let text = write_system(&m, Some(&y));
        assert!(
            text.starts_with(r#"{"n":5,"d":[-4,-4,-4,-4,-4],"a":[1,1,1,1],"a_tilde":[1,1,1],"b":"#)
        );
        assert!(text.ends_with(r#""s":0,"t":0,"y":["1/3","1/3","1/3","1/3","1/3"]}"#));
    }
}
