//! JSON file formats and canonical serialization.
//!
//! Scalars are written as `{num, den}` for rationals and `{re, im}` with two
//! such fractions otherwise. Integers that fit in `i64` are JSON numbers, larger
//! ones are decimal strings. Output is pretty-printed with sorted keys and a
//! trailing newline, so that emitting a parsed file reproduces it byte for byte.

mod algebra;
mod gk;

pub use algebra::{algebra_from_json, algebra_to_json, AlgebraFile};
pub use gk::{
    module_from_json, module_to_json, pair_from_json, pair_to_json, spectrum_from_json,
    spectrum_to_json,
};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar, Vector};

/// What a JSON document describes, decided by its shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FileKind {
    Algebra,
    Pair,
    Module,
    Spectrum,
}

impl FileKind {
    pub fn as_str(self) -> &'static str {
        match self {
            FileKind::Algebra => "algebra",
            FileKind::Pair => "pair",
            FileKind::Module => "module",
            FileKind::Spectrum => "spectrum",
        }
    }
}

pub fn detect(v: &Value) -> Result<FileKind> {
    match v {
        Value::Array(_) => Ok(FileKind::Spectrum),
        Value::Object(o) if o.contains_key("structure_constants") => Ok(FileKind::Pair),
        Value::Object(o) if o.contains_key("weight_spaces") => Ok(FileKind::Module),
        Value::Object(o) if o.contains_key("basis") && o.contains_key("g") => Ok(FileKind::Algebra),
        _ => Err(Error::Format(
            "unrecognized document: expected an algebra, pair, module or spectrum".into(),
        )),
    }
}

/// Parses text, reporting the line and column of syntax errors.
pub fn parse(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| {
        Error::Format(format!("line {}, column {}: {e}", e.line(), e.column()))
    })
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn canonical(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values always serialize");
    s.push('\n');
    s
}

fn int_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(x) => json!(x),
        None => json!(n.to_string()),
    }
}

fn fraction_json(r: &BigRational) -> Value {
    json!({"num": int_json(r.numer()), "den": int_json(r.denom())})
}

pub fn scalar_json(s: &Scalar) -> Value {
    if s.im().is_zero() {
        fraction_json(s.re())
    } else {
        json!({"re": fraction_json(s.re()), "im": fraction_json(s.im())})
    }
}

pub fn vector_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(scalar_json).collect())
}

pub fn matrix_json(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|i| vector_json(m.row(i))).collect())
}

/// A JSON value together with its location, for error messages.
#[derive(Clone)]
pub(crate) struct Node<'a> {
    v: &'a Value,
    path: String,
}

impl<'a> Node<'a> {
    pub(crate) fn root(v: &'a Value) -> Self {
        Node {
            v,
            path: "$".into(),
        }
    }

    pub(crate) fn node(&self) -> &Node<'a> {
        self
    }

    pub(crate) fn err(&self, msg: impl std::fmt::Display) -> Error {
        Error::Format(format!("{}: {msg}", self.path))
    }

    pub(crate) fn field(&self, key: &str) -> Result<Node<'a>> {
        self.opt(key).ok_or_else(|| self.err(format!("missing field `{key}`")))
    }

    pub(crate) fn opt(&self, key: &str) -> Option<Node<'a>> {
        self.v.get(key).map(|v| Node {
            v,
            path: format!("{}.{key}", self.path),
        })
    }

    pub(crate) fn items(&self) -> Result<Vec<Node<'a>>> {
        let arr = self.v.as_array().ok_or_else(|| self.err("expected an array"))?;
        Ok(arr
            .iter()
            .enumerate()
            .map(|(i, v)| Node {
                v,
                path: format!("{}[{i}]", self.path),
            })
            .collect())
    }

    pub(crate) fn str(&self) -> Result<&'a str> {
        self.v.as_str().ok_or_else(|| self.err("expected a string"))
    }

    pub(crate) fn usize(&self) -> Result<usize> {
        self.v
            .as_u64()
            .and_then(|x| usize::try_from(x).ok())
            .ok_or_else(|| self.err("expected a nonnegative integer"))
    }

    pub(crate) fn u64(&self) -> Result<u64> {
        self.v.as_u64().ok_or_else(|| self.err("expected a nonnegative integer"))
    }

    pub(crate) fn i64(&self) -> Result<i64> {
        self.v.as_i64().ok_or_else(|| self.err("expected an integer"))
    }

    fn bigint(&self) -> Result<BigInt> {
        if let Some(x) = self.v.as_i64() {
            return Ok(BigInt::from(x));
        }
        if let Some(s) = self.v.as_str() {
            return s.parse().map_err(|_| self.err("expected a decimal integer"));
        }
        Err(self.err("expected an integer"))
    }

    fn fraction(&self) -> Result<BigRational> {
        if self.v.is_i64() || self.v.is_string() {
            return Ok(BigRational::from_integer(self.bigint()?));
        }
        let num = self.field("num")?.node().bigint()?;
        let den = self.field("den")?.node().bigint()?;
        if den.is_zero() {
            return Err(self.err("zero denominator"));
        }
        Ok(BigRational::new(num, den))
    }

    /// `{num, den}`, `{re, im}` or a bare integer.
    pub(crate) fn scalar(&self) -> Result<Scalar> {
        if self.v.get("re").is_some() || self.v.get("im").is_some() {
            let part = |k: &str| -> Result<BigRational> {
                match self.opt(k) {
                    Some(o) => o.node().fraction(),
                    None => Ok(BigRational::zero()),
                }
            };
            return Ok(Scalar::new(part("re")?, part("im")?));
        }
        Ok(Scalar::real(self.fraction()?))
    }

    pub(crate) fn vector(&self) -> Result<Vector> {
        self.items()?.iter().map(|o| o.node().scalar()).collect()
    }

    pub(crate) fn matrix(&self, rows: usize, cols: usize) -> Result<Matrix> {
        let items = self.items()?;
        if items.len() != rows {
            return Err(self.err(format!("expected {rows} rows, found {}", items.len())));
        }
        let mut data = Vec::with_capacity(rows * cols);
        for row in &items {
            let v = row.node().vector()?;
            if v.len() != cols {
                return Err(row.node().err(format!("expected {cols} entries, found {}", v.len())));
            }
            data.extend(v);
        }
        Matrix::from_data(rows, cols, data)
    }

    pub(crate) fn weight(&self) -> Result<Vec<i64>> {
        if let Some(x) = self.v.as_i64() {
            return Ok(vec![x]);
        }
        self.items()?.iter().map(|o| o.node().i64()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_round_trip() {
        for s in [
            Scalar::int(0),
            Scalar::frac(-3, 4),
            Scalar::gaussian(1, -2),
            Scalar::new(
                BigRational::new(BigInt::from(10).pow(30), BigInt::from(7)),
                BigRational::zero(),
            ),
        ] {
            let v = scalar_json(&s);
            assert_eq!(Node::root(&v).scalar().unwrap(), s);
        }
        assert_eq!(Node::root(&json!(5)).scalar().unwrap(), Scalar::int(5));
    }

    #[test]
    fn parse_errors_carry_positions() {
        let e = parse("{\n  \"a\": ,\n}").unwrap_err().to_string();
        assert!(e.contains("line 2"), "{e}");
        let v = json!({"a": [1, "x"]});
        let e = Node::root(&v).field("a").unwrap().node().vector().unwrap_err();
        assert!(e.to_string().contains("$.a[1]"), "{e}");
    }

    #[test]
    fn detection() {
        assert_eq!(detect(&json!([])).unwrap(), FileKind::Spectrum);
        assert_eq!(detect(&json!({"structure_constants": []})).unwrap(), FileKind::Pair);
        assert_eq!(detect(&json!({"weight_spaces": []})).unwrap(), FileKind::Module);
        assert_eq!(detect(&json!({"basis": [], "g": 1})).unwrap(), FileKind::Algebra);
        assert!(detect(&json!({"x": 1})).is_err());
    }
}
