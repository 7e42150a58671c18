//! Multiparameter poly-Cauchy numbers of both kinds: box integrals of the
//! shifted product evaluated at `±x_1⋯x_k`.

use num_traits::{One, Zero};

use crate::classical::lah_unchecked;
use crate::comtet::comtet_first;
use crate::daehee::Kind;
use crate::error::{Error, Result};
use crate::oracle::{self, IntegralKind};
use crate::params::ParamVector;
use crate::rat::{self, Rat};
use crate::value::Variant;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyCauchyQuery {
    params: ParamVector,
    limits: Vec<Rat>,
    kind: Kind,
}

impl PolyCauchyQuery {
    /// One upper limit per integration variable; `k = limits.len() ≥ 1`.
    pub fn new(params: ParamVector, limits: Vec<Rat>, kind: Kind) -> Result<Self> {
        if limits.is_empty() {
            return Err(Error::domain("poly_cauchy", "needs at least one upper limit"));
        }
        Ok(PolyCauchyQuery {
            params,
            limits,
            kind,
        })
    }

    pub fn k(&self) -> usize {
        self.limits.len()
    }

    pub fn params(&self) -> &ParamVector {
        &self.params
    }

    pub fn limits(&self) -> &[Rat] {
        &self.limits
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }
}

/// Reference value from the box functional.
pub fn poly_cauchy(q: &PolyCauchyQuery) -> Rat {
    let integrand = q.kind.orient(q.params.expand());
    oracle::eval_product_functional(&integrand, &IntegralKind::Box(q.limits.clone()))
}

/// Closed-form sum over the Comtet row.
///
/// `AsStated` reads the printed summand as `(ℓ_1⋯ℓ_k)^{m+1}/(m+1)^k` with a
/// single index `m`; for the second kind it keeps the printed Lah factor
/// `Σ_{ℓ≤m} L(m,ℓ)`. `Corrected` is `Σ_m (±1)^m s_ᾱ(n,m;r̄) ∏_j ℓ_j^{m+1}/(m+1)`.
pub fn poly_cauchy_via_thm(q: &PolyCauchyQuery, variant: Variant) -> Rat {
    let row = comtet_first(&q.params);
    let k = q.k();
    let volume: Rat = q.limits.iter().product();
    // ℓ_j^{m+1} and (ℓ_1⋯ℓ_k)^{m+1}, advanced once per m
    let mut limit_powers = q.limits.clone();
    let mut volume_power = volume.clone();
    let mut total = Rat::zero();
    for (m, s) in row.coeffs().iter().enumerate() {
        if !s.is_zero() {
            let degree = rat::int(m as i64 + 1);
            let term = match variant {
                Variant::AsStated => {
                    let lah = match q.kind {
                        Kind::First => Rat::one(),
                        Kind::Second => (0..=m).fold(Rat::zero(), |a, l| a + lah_unchecked(m, l)),
                    };
                    lah * &volume_power / rat::pow(&degree, k)
                }
                Variant::Corrected => {
                    let sign = match q.kind {
                        Kind::First => Rat::one(),
                        Kind::Second => rat::sign(m),
                    };
                    sign * limit_powers.iter().map(|p| p / &degree).product::<Rat>()
                }
            };
            total += s * term;
        }
        for (p, l) in limit_powers.iter_mut().zip(&q.limits) {
            *p *= l;
        }
        volume_power *= &volume;
    }
    total
}
