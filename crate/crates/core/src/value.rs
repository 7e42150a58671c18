use std::fmt;

use serde::Serialize;

use crate::poly::Poly;
use num_traits::Zero;

use crate::rat::Rat;

/// A number or a polynomial in `x`, compared exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Number(Rat),
    Polynomial(Poly),
}

impl From<Rat> for Value {
    fn from(r: Rat) -> Self {
        Value::Number(r)
    }
}

impl From<Poly> for Value {
    fn from(p: Poly) -> Self {
        Value::Polynomial(p)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Number(r) => write!(f, "{r}"),
            Value::Polynomial(p) => write!(f, "{p}"),
        }
    }
}

impl Serialize for Value {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl Value {
    pub fn zero(form: Form) -> Self {
        match form {
            Form::Number => Value::Number(Rat::zero()),
            Form::Polynomial => Value::Polynomial(Poly::zero()),
        }
    }

    pub fn form(&self) -> Form {
        match self {
            Value::Number(_) => Form::Number,
            Value::Polynomial(_) => Form::Polynomial,
        }
    }

    /// `self += c·other`; both sides must share a form.
    pub fn add_scaled(&mut self, c: &Rat, other: &Value) {
        if c.is_zero() {
            return;
        }
        match (self, other) {
            (Value::Number(a), Value::Number(b)) => *a += c * b,
            (Value::Polynomial(a), Value::Polynomial(b)) => *a = &*a + &b.scale(c),
            (lhs, rhs) => panic!("cannot add a {:?} to a {:?}", rhs.form(), lhs.form()),
        }
    }

    pub fn as_number(&self) -> Option<&Rat> {
        match self {
            Value::Number(r) => Some(r),
            Value::Polynomial(_) => None,
        }
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        match self {
            Value::Polynomial(p) => Some(p),
            Value::Number(_) => None,
        }
    }
}

/// Whether a family member is evaluated as a number or as a polynomial in `x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Form {
    Number,
    Polynomial,
}

/// Which reading of a published identity is evaluated: the formula as printed
/// (with only index typos repaired) or the derivation-consistent repair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    AsStated,
    Corrected,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::AsStated => "as_stated",
            Variant::Corrected => "corrected",
        })
    }
}
