//! Dense univariate polynomials over [`Rat`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::rat::{self, Rat};

/// Coefficients are stored by ascending power with no trailing zeros; the zero
/// polynomial is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(coeffs: Vec<Rat>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    /// `c · x^m`
    pub fn monomial(c: Rat, m: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); m + 1];
        coeffs[m] = c;
        Poly::new(coeffs)
    }

    /// The monic linear factor `x − root`.
    pub fn linear(root: &Rat) -> Self {
        Poly::new(vec![-root.clone(), Rat::one()])
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| rat::int(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rat> {
        self.coeffs
    }

    pub fn coeff(&self, m: usize) -> Rat {
        self.coeffs.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, exp: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// `p(x + shift)` by Horner's scheme.
    pub fn compose_shift(&self, shift: &Rat) -> Poly {
        let step = Poly::new(vec![shift.clone(), Rat::one()]);
        self.coeffs.iter().rev().fold(Poly::zero(), |acc, c| {
            &(&acc * &step) + &Poly::constant(c.clone())
        })
    }

    /// Replaces each coefficient `c_m` by `f(m, c_m)`.
    pub fn map_terms(&self, mut f: impl FnMut(usize, &Rat) -> Rat) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(m, c)| f(m, c))
                .collect(),
        )
    }

    /// `Σ_m f(m) · c_m`
    pub fn contract(&self, mut moment: impl FnMut(usize) -> Rat) -> Rat {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(Rat::zero(), |acc, (m, c)| acc + c * moment(m))
    }
}

/// Expands `∏ (x − root)`.
pub fn product_of_roots<'a>(roots: impl IntoIterator<Item = &'a Rat>) -> Poly {
    let mut coeffs = vec![Rat::one()];
    for root in roots {
        // multiply in place by (x − root), highest coefficient first
        coeffs.push(Rat::zero());
        for i in (1..coeffs.len()).rev() {
            let (lower, upper) = coeffs.split_at_mut(i);
            let below = &lower[i - 1];
            if root.is_zero() {
                upper[0] = below.clone();
            } else {
                upper[0] = below - &upper[0] * root;
            }
        }
        if !root.is_zero() {
            coeffs[0] = -&coeffs[0] * root;
        } else {
            coeffs[0] = Rat::zero();
        }
    }
    Poly::new(coeffs)
}

/// `x(x−1)⋯(x−n+1)`; the empty product for `n = 0`.
pub fn falling_factorial(n: usize) -> Poly {
    let roots: Vec<Rat> = (0..n as i64).map(rat::int).collect();
    product_of_roots(&roots)
}

/// `∫_0^upper p(x) dx`
pub fn integrate_0_to(p: &Poly, upper: &Rat) -> Rat {
    p.contract(|m| rat::pow(upper, m + 1) / rat::int(m as i64 + 1))
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|m| self.coeff(m) + rhs.coeff(m)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let unit = magnitude.is_one();
            match m {
                0 => write!(f, "{magnitude}")?,
                _ => {
                    if !unit {
                        write!(f, "{magnitude}*")?;
                    }
                    if m == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{m}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Serialized as the list of coefficient strings by ascending power.
impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}
