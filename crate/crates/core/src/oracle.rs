//! Moment-expansion evaluator for k-fold integrals of a polynomial in the
//! product `u = x_1⋯x_k`.
//!
//! Both functionals factor over the coordinates: the monomial `u^m`
//! integrates to the product of one-dimensional moments. For the Volkenborn
//! integral every coordinate contributes `∫ x^m dμ_0 = B_m`; over a box
//! `[0,ℓ_1]×⋯×[0,ℓ_k]` coordinate `j` contributes `ℓ_j^{m+1}/(m+1)`.
//!
//! The Volkenborn moments here come from the translation rule
//! `∫ f(x+1) dμ_0 − ∫ f(x) dμ_0 = f'(0)` and never from the Bernoulli
//! generating function, so they stay independent of [`crate::classical`].

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rat::{self, Rat};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum IntegralKind {
    /// `k`-fold Volkenborn integral over `Z_p`.
    Volkenborn(u32),
    /// Iterated Lebesgue integral over `[0, ℓ_1] × ⋯ × [0, ℓ_k]`.
    Box(Vec<Rat>),
}

impl IntegralKind {
    pub fn volkenborn(k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::domain("volkenborn", "needs at least one variable"));
        }
        Ok(IntegralKind::Volkenborn(k))
    }

    pub fn boxed(limits: Vec<Rat>) -> Result<Self> {
        if limits.is_empty() {
            return Err(Error::domain("box", "needs at least one limit"));
        }
        Ok(IntegralKind::Box(limits))
    }

    pub fn dimension(&self) -> usize {
        match self {
            IntegralKind::Volkenborn(k) => *k as usize,
            IntegralKind::Box(limits) => limits.len(),
        }
    }

    /// `∫ u^m` over all coordinates, memoized per functional.
    pub fn moment(&self, m: usize) -> Rat {
        type Cache = RwLock<HashMap<IntegralKind, Vec<Rat>>>;
        static CACHE: OnceLock<Cache> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(v) = cache
            .read()
            .expect("moment cache poisoned")
            .get(self)
            .and_then(|row| row.get(m))
        {
            return v.clone();
        }
        let mut guard = cache.write().expect("moment cache poisoned");
        let row = guard.entry(self.clone()).or_default();
        while row.len() <= m {
            let next = self.moment_uncached(row.len());
            row.push(next);
        }
        row[m].clone()
    }

    fn moment_uncached(&self, m: usize) -> Rat {
        match self {
            IntegralKind::Volkenborn(k) => rat::pow(&volkenborn_moment(m), *k as usize),
            IntegralKind::Box(limits) => {
                let width = rat::int(m as i64 + 1);
                limits
                    .iter()
                    .map(|l| rat::pow(l, m + 1) / &width)
                    .product()
            }
        }
    }
}

/// `∫_{Z_p} x^m dμ_0(x)`.
///
/// Applying the translation rule to `x^{m+1}` gives
/// `Σ_{j≤m} binom(m+1, j)·M_j = [m = 0]`, solved for `M_m` in order.
pub fn volkenborn_moment(m: usize) -> Rat {
    static MOMENTS: OnceLock<RwLock<Vec<Rat>>> = OnceLock::new();
    let table = MOMENTS.get_or_init(|| RwLock::new(vec![Rat::one()]));
    {
        let moments = table.read().expect("moment cache poisoned");
        if let Some(v) = moments.get(m) {
            return v.clone();
        }
    }
    let mut moments = table.write().expect("moment cache poisoned");
    while moments.len() <= m {
        let next = moments.len();
        let lower = moments
            .iter()
            .enumerate()
            .fold(Rat::zero(), |acc, (j, mj)| {
                acc + rat::from_bigint(rat::binomial(next + 1, j)) * mj
            });
        moments.push(-lower / rat::int(next as i64 + 1));
    }
    moments[m].clone()
}

/// Integrates `p(x_1⋯x_k)` under `kind`.
pub fn eval_product_functional(p: &Poly, kind: &IntegralKind) -> Rat {
    p.contract(|m| kind.moment(m))
}

/// Integrates `p(x_1⋯x_k·x)` under `kind`, leaving a polynomial in `x`.
pub fn eval_product_functional_poly(p: &Poly, kind: &IntegralKind) -> Poly {
    p.map_terms(|m, c| {
        if c.is_zero() {
            Rat::zero()
        } else {
            c * kind.moment(m)
        }
    })
}

/// `∫ p(x_1 + ⋯ + x_k + x) dμ_0(x_1)⋯dμ_0(x_k)` for the classical
/// sum-argument families.
///
/// The moments of the sum come from binomial convolution of the
/// one-variable moments, `E[(S + X)^m] = Σ_j binom(m, j) E[S^j] E[X^{m−j}]`.
pub fn eval_sum_functional(p: &Poly, k: u32, x: &Rat) -> Rat {
    let top = p.coeffs().len();
    let single: Vec<Rat> = (0..top).map(volkenborn_moment).collect();
    // start from the point mass at x and add one Volkenborn variable at a time
    let mut moments: Vec<Rat> = (0..top).map(|m| rat::pow(x, m)).collect();
    for _ in 0..k {
        moments = (0..top)
            .map(|m| {
                (0..=m).fold(Rat::zero(), |acc, j| {
                    acc + rat::from_bigint(rat::binomial(m, j)) * &moments[j] * &single[m - j]
                })
            })
            .collect();
    }
    p.contract(|m| moments[m].clone())
}

/// `p(u) ↦ p(−u)`.
pub fn reflect(p: &Poly) -> Poly {
    p.map_terms(|m, c| if m % 2 == 0 { c.clone() } else { -c })
}
