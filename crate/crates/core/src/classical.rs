//! Classical triangles and sequences: Stirling numbers of both kinds, Lah
//! numbers, Bernoulli numbers and polynomials of order `k`, Daehee numbers and
//! polynomials of order `k`, and Cauchy numbers of both kinds.
//!
//! Stirling numbers of the first kind are signed. Lah numbers are unsigned.
//! Bernoulli numbers use `B_1 = −1/2`, the convention of `t/(e^t − 1)`.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::oracle::reflect;
use crate::poly::{self, Poly};
use crate::rat::{self, Rat};
use crate::series::{self, Series};

/// Process-wide memo tables. Rows are append-only; a reader that misses takes
/// the write lock, re-checks, and extends. Recomputation is deterministic, so
/// losing a race only costs time.
#[derive(Default)]
pub struct TriangleCache {
    stirling1: RwLock<Vec<Vec<Rat>>>,
    stirling2: RwLock<Vec<Vec<Rat>>>,
    bernoulli: RwLock<Vec<Rat>>,
}

impl TriangleCache {
    pub fn global() -> &'static TriangleCache {
        static CACHE: OnceLock<TriangleCache> = OnceLock::new();
        CACHE.get_or_init(TriangleCache::default)
    }

    fn triangle(
        table: &RwLock<Vec<Vec<Rat>>>,
        n: usize,
        m: usize,
        next: impl Fn(&[Rat], usize) -> Vec<Rat>,
    ) -> Rat {
        if m > n {
            return Rat::zero();
        }
        {
            let rows = table.read().expect("triangle cache poisoned");
            if let Some(row) = rows.get(n) {
                return row[m].clone();
            }
        }
        let mut rows = table.write().expect("triangle cache poisoned");
        if rows.is_empty() {
            rows.push(vec![Rat::one()]);
        }
        while rows.len() <= n {
            let len = rows.len();
            let row = next(&rows[len - 1], len);
            rows.push(row);
        }
        rows[n][m].clone()
    }

    pub fn stirling1(&self, n: usize, m: usize) -> Rat {
        // s(n, k) = s(n−1, k−1) − (n−1)·s(n−1, k)
        Self::triangle(&self.stirling1, n, m, |prev, n| {
            let lower = rat::int(n as i64 - 1);
            (0..=n)
                .map(|k| {
                    let up = if k > 0 { prev[k - 1].clone() } else { Rat::zero() };
                    let same = prev.get(k).map(|v| v * &lower).unwrap_or_else(Rat::zero);
                    up - same
                })
                .collect()
        })
    }

    pub fn stirling2(&self, n: usize, m: usize) -> Rat {
        // S(n, k) = k·S(n−1, k) + S(n−1, k−1)
        Self::triangle(&self.stirling2, n, m, |prev, n| {
            (0..=n)
                .map(|k| {
                    let up = if k > 0 { prev[k - 1].clone() } else { Rat::zero() };
                    let same = prev
                        .get(k)
                        .map(|v| v * rat::int(k as i64))
                        .unwrap_or_else(Rat::zero);
                    up + same
                })
                .collect()
        })
    }

    pub fn bernoulli(&self, n: usize) -> Rat {
        {
            let table = self.bernoulli.read().expect("bernoulli cache poisoned");
            if let Some(b) = table.get(n) {
                return b.clone();
            }
        }
        let mut table = self.bernoulli.write().expect("bernoulli cache poisoned");
        if table.len() <= n {
            let order = n.max(2 * table.len()).max(16);
            *table = series::bernoulli_gf(order).egf_values();
        }
        table[n].clone()
    }
}

fn check_triangle(family: &'static str, n: usize, m: usize) -> Result<()> {
    if m > n {
        return Err(Error::domain(family, format!("index {m} exceeds row {n}")));
    }
    Ok(())
}

/// Signed Stirling number of the first kind: the coefficient of `x^m` in `(x)_n`.
pub fn stirling1(n: usize, m: usize) -> Result<Rat> {
    check_triangle("stirling1", n, m)?;
    Ok(s1(n, m))
}

/// Stirling number of the second kind.
pub fn stirling2(n: usize, m: usize) -> Result<Rat> {
    check_triangle("stirling2", n, m)?;
    Ok(s2(n, m))
}

/// Unsigned Lah number `binom(m−1, ℓ−1)·m!/ℓ!`, with `L(0,0) = 1`.
pub fn lah(m: usize, l: usize) -> Result<Rat> {
    check_triangle("lah", m, l)?;
    Ok(lah_unchecked(m, l))
}

// Zero outside the triangle.
pub(crate) fn s1(n: usize, m: usize) -> Rat {
    TriangleCache::global().stirling1(n, m)
}

pub(crate) fn s2(n: usize, m: usize) -> Rat {
    TriangleCache::global().stirling2(n, m)
}

pub(crate) fn lah_unchecked(m: usize, l: usize) -> Rat {
    match (m, l) {
        (0, 0) => Rat::one(),
        (_, 0) => Rat::zero(),
        _ if l > m => Rat::zero(),
        _ => rat::from_bigint(
            rat::binomial(m - 1, l - 1) * rat::factorial(m) / rat::factorial(l),
        ),
    }
}

/// `B_n`, extracted from `t/(e^t − 1)`.
pub fn bernoulli(n: usize) -> Rat {
    TriangleCache::global().bernoulli(n)
}

/// `B_n^{(k)}(x) = n!·[t^n] (t/(e^t−1))^k e^{xt}`.
pub fn bernoulli_higher(n: usize, k: u32, x: &Rat) -> Rat {
    let gf = series::bernoulli_gf(n).pow(k).exp_xt_times(x, n);
    gf.coeff(n) * rat::from_bigint(rat::factorial(n))
}

/// `D_n = (−1)^n n!/(n+1)`.
pub fn daehee(n: usize) -> Rat {
    rat::sign(n) * Rat::new(rat::factorial(n), BigInt::from(n + 1))
}

/// `D_n^{(k)} = s(n+k, k)/binom(n+k, k)`.
///
/// Order zero is admitted only for `n = 0`, where the empty power gives 1.
pub fn daehee_higher(n: usize, k: u32) -> Result<Rat> {
    if k == 0 {
        return if n == 0 {
            Ok(Rat::one())
        } else {
            Err(Error::domain(
                "daehee_higher",
                format!("order k = 0 is undefined for n = {n}"),
            ))
        };
    }
    let k = k as usize;
    Ok(s1(n + k, k) / rat::from_bigint(rat::binomial(n + k, k)))
}

/// `D_n^{(k)}(x) = Σ_ℓ s(n,ℓ) B_ℓ^{(k)}(x)`.
pub fn daehee_poly_higher(n: usize, k: u32, x: &Rat) -> Rat {
    (0..=n).fold(Rat::zero(), |acc, l| {
        let s = s1(n, l);
        if s.is_zero() {
            acc
        } else {
            acc + s * bernoulli_higher(l, k, x)
        }
    })
}

/// `n!·[t^n] (log(1+t)/t)^k`
pub fn daehee_higher_from_gf(n: usize, k: u32) -> Rat {
    series::log1p_over_t(n).pow(k).egf_values()[n].clone()
}

/// `n!·[t^n] (log(1+t)/t)^k (1+t)^x`
pub fn daehee_poly_from_gf(n: usize, k: u32, x: &Rat) -> Rat {
    let gf = &series::log1p_over_t(n).pow(k) * &series::binomial_series(x, n);
    gf.egf_values()[n].clone()
}

/// `C_n = ∫_0^1 (x)_n dx`
pub fn cauchy1(n: usize) -> Rat {
    poly::integrate_0_to(&poly::falling_factorial(n), &Rat::one())
}

/// `Ĉ_n = ∫_0^1 (−x)_n dx`
pub fn cauchy2(n: usize) -> Rat {
    poly::integrate_0_to(&reflect(&poly::falling_factorial(n)), &Rat::one())
}

/// `(t/log(1+t))^k` truncated at `order`; `k = 1` generates `C_n`.
pub fn cauchy_gf(k: u32, order: usize) -> Series {
    series::log1p_over_t(order)
        .inverse()
        .expect("constant term of log(1+t)/t is 1")
        .pow(k)
}

/// `t/((1+t) log(1+t))` truncated at `order`; generates `Ĉ_n`.
pub fn cauchy2_gf(order: usize) -> Series {
    &cauchy_gf(1, order) * &series::binomial_series(&-Rat::one(), order)
}

/// The signed-Stirling row of `(x)_n` as a polynomial.
pub fn stirling1_poly(n: usize) -> Poly {
    Poly::new((0..=n).map(|m| s1(n, m)).collect())
}
