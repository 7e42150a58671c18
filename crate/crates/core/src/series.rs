//! Truncated formal power series over [`Rat`].
//!
//! A series carries its truncation order `N` explicitly and stores the
//! coefficients of `t^0..=t^N`. Binary operations truncate to the smaller of
//! the operand orders; nothing ever extends an order.

use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rat::{self, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    order: usize,
    coeffs: Vec<Rat>,
}

impl Series {
    /// Builds a series of the given order from leading coefficients, padding
    /// with zeros or dropping terms past `order`.
    pub fn new(order: usize, mut coeffs: Vec<Rat>) -> Self {
        coeffs.resize(order + 1, Rat::zero());
        Series { order, coeffs }
    }

    pub fn one(order: usize) -> Self {
        Series::new(order, vec![Rat::one()])
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Rat) -> Self {
        Series {
            order,
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn from_poly(p: &Poly, order: usize) -> Self {
        Series::new(order, p.coeffs().to_vec())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &Rat {
        &self.coeffs[n]
    }

    /// `n! · [t^n]` for every `n`, the exponential-generating-function values.
    pub fn egf_values(&self) -> Vec<Rat> {
        let mut fact = BigInt::one();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| {
                if n > 0 {
                    fact *= BigInt::from(n);
                }
                c * rat::from_bigint(fact.clone())
            })
            .collect()
    }

    pub fn truncate(&self, order: usize) -> Series {
        let order = order.min(self.order);
        Series::new(order, self.coeffs[..=order].to_vec())
    }

    pub fn pow(&self, k: u32) -> Series {
        let mut acc = Series::one(self.order);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Result<Series> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::NonInvertibleSeries);
        }
        let inv0 = c0.recip();
        let mut out: Vec<Rat> = Vec::with_capacity(self.order + 1);
        out.push(inv0.clone());
        for n in 1..=self.order {
            let acc = (1..=n).fold(Rat::zero(), |acc, j| acc + &self.coeffs[j] * &out[n - j]);
            out.push(-acc * &inv0);
        }
        Ok(Series {
            order: self.order,
            coeffs: out,
        })
    }

    /// Multiplies by `e^{xt}`, truncating to `min(self.order, order)`.
    pub fn exp_xt_times(&self, x: &Rat, order: usize) -> Series {
        let order = order.min(self.order);
        &self.truncate(order) * &exp(x, order)
    }
}

impl Mul for &Series {
    type Output = Series;

    fn mul(self, rhs: &Series) -> Series {
        let order = self.order.min(rhs.order);
        let mut out = vec![Rat::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Series { order, coeffs: out }
    }
}

/// `log(1+t)/t = Σ (−1)^m t^m/(m+1)`
pub fn log1p_over_t(order: usize) -> Series {
    Series::from_fn(order, |m| rat::sign(m) / rat::int(m as i64 + 1))
}

/// `e^{xt} = Σ x^m t^m / m!`
pub fn exp(x: &Rat, order: usize) -> Series {
    let mut term = Rat::one();
    Series::from_fn(order, |m| {
        if m > 0 {
            term = &term * x / rat::int(m as i64);
        }
        term.clone()
    })
}

/// `(e^t − 1)/t = Σ t^m/(m+1)!`
pub fn expm1_over_t(order: usize) -> Series {
    Series::from_fn(order, |m| {
        Rat::new(BigInt::one(), rat::factorial(m + 1))
    })
}

/// `t/(e^t − 1)`, the Bernoulli generating function.
pub fn bernoulli_gf(order: usize) -> Series {
    expm1_over_t(order)
        .inverse()
        .expect("constant term of (e^t-1)/t is 1")
}

/// `(1+t)^x = Σ binom(x, m) t^m` for rational `x`.
pub fn binomial_series(x: &Rat, order: usize) -> Series {
    let mut term = Rat::one();
    Series::from_fn(order, |m| {
        if m > 0 {
            term = &term * (x - rat::int(m as i64 - 1)) / rat::int(m as i64);
        }
        term.clone()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{frac, int};

    #[test]
    fn log1p_coefficients() {
        assert_eq!(log1p_over_t(0).coeffs(), &[int(1)]);
        assert_eq!(log1p_over_t(2).coeffs(), &[int(1), frac(-1, 2), frac(1, 3)]);
        assert_eq!(
            log1p_over_t(3).coeffs(),
            &[int(1), frac(-1, 2), frac(1, 3), frac(-1, 4)]
        );
    }

    #[test]
    fn powers() {
        let s = log1p_over_t(2);
        assert_eq!(s.pow(0), Series::one(2));
        assert_eq!(s.pow(2).coeffs(), &[int(1), int(-1), frac(11, 12)]);
        assert_eq!(
            bernoulli_gf(2).pow(2).coeffs(),
            &[int(1), int(-1), frac(5, 12)]
        );
    }

    #[test]
    fn exponential_factor() {
        let s = log1p_over_t(4);
        assert_eq!(s.exp_xt_times(&int(0), 4), s);
        assert_eq!(
            Series::one(2).exp_xt_times(&int(1), 2).coeffs(),
            &[int(1), int(1), frac(1, 2)]
        );
        assert_eq!(
            Series::one(2).exp_xt_times(&int(2), 2).coeffs(),
            &[int(1), int(2), int(2)]
        );
    }

    #[test]
    fn mismatched_orders_truncate() {
        let a = log1p_over_t(5);
        let b = log1p_over_t(2);
        assert_eq!((&a * &b).order(), 2);
        assert_eq!(a.exp_xt_times(&int(1), 3).order(), 3);
    }

    #[test]
    fn inverse_roundtrip() {
        let s = log1p_over_t(6);
        let inv = s.inverse().unwrap();
        assert_eq!(&s * &inv, Series::one(6));
        assert_eq!(
            Series::new(3, vec![int(0), int(1)]).inverse(),
            Err(Error::NonInvertibleSeries)
        );
    }

    #[test]
    fn binomial_series_matches_integer_expansion() {
        assert_eq!(
            binomial_series(&int(3), 4).coeffs(),
            &[int(1), int(3), int(3), int(1), int(0)]
        );
        assert_eq!(
            binomial_series(&frac(1, 2), 2).coeffs(),
            &[int(1), frac(1, 2), frac(-1, 8)]
        );
    }
}
