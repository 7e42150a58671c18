//! Generalized Comtet numbers of the first kind and the composed
//! multiparameter non-central Stirling numbers of the second kind.

use num_traits::Zero;

use crate::classical::s2;
use crate::error::{Error, Result};
use crate::params::ParamVector;
use crate::poly::Poly;
use crate::rat::{self, Rat};

/// Monomial coefficients `s_ᾱ(n, m; r̄)` of `∏ (x − α_i)^{r_i}` for
/// `m = 0..=|r|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComtetRow {
    params: ParamVector,
    coeffs: Vec<Rat>,
}

impl ComtetRow {
    pub fn params(&self) -> &ParamVector {
        &self.params
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn get(&self, m: usize) -> Rat {
        self.coeffs.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn to_poly(&self) -> Poly {
        Poly::new(self.coeffs.clone())
    }

    fn top(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `S(n, ℓ; ᾱ, r̄) = Σ_{m=ℓ}^{|r|} s_ᾱ(n,m;r̄)·S(m,ℓ)`: the coefficient of
    /// `(x)_ℓ` when the product is written in the falling-factorial basis.
    pub fn stirling2(&self, l: usize) -> Result<Rat> {
        self.check(l)?;
        Ok(self.compose(l, |_| true))
    }

    /// `Σ_{m=ℓ}^{|r|} (−1)^m s_ᾱ(n,m;r̄)·S(m,ℓ)`: the coefficient of `(u)_ℓ`
    /// in `∏ (−u − α_i)^{r_i}`.
    pub fn stirling2_signed(&self, l: usize) -> Result<Rat> {
        self.check(l)?;
        Ok(self.compose(l, |m| m % 2 == 0))
    }

    fn check(&self, l: usize) -> Result<()> {
        if l > self.top() {
            return Err(Error::domain(
                "gen_stirling2",
                format!("l = {l} exceeds |r| = {}", self.top()),
            ));
        }
        Ok(())
    }

    fn compose(&self, l: usize, positive: impl Fn(usize) -> bool) -> Rat {
        (l..=self.top()).fold(Rat::zero(), |acc, m| {
            let term = &self.coeffs[m] * s2(m, l);
            if positive(m) {
                acc + term
            } else {
                acc - term
            }
        })
    }
}

pub fn comtet_first(params: &ParamVector) -> ComtetRow {
    let mut coeffs = params.expand().into_coeffs();
    // the product is monic, so only |r| = 0 can leave an empty vector
    if coeffs.is_empty() {
        coeffs.push(rat::int(1));
    }
    ComtetRow {
        params: params.clone(),
        coeffs,
    }
}

pub fn gen_stirling2(params: &ParamVector, l: usize) -> Result<Rat> {
    comtet_first(params).stirling2(l)
}

pub fn gen_stirling2_signed(params: &ParamVector, l: usize) -> Result<Rat> {
    comtet_first(params).stirling2_signed(l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::stirling1;
    use crate::rat::{frac, int};

    fn pv(alphas: &[i64], rs: &[u32]) -> ParamVector {
        ParamVector::new(alphas.iter().map(|&a| int(a)).collect(), rs.to_vec()).unwrap()
    }

    #[test]
    fn empty_row() {
        assert_eq!(comtet_first(&ParamVector::empty()).coeffs(), &[int(1)]);
    }

    #[test]
    fn falling_factorial_row_is_stirling1() {
        for n in 0..=8 {
            let row = comtet_first(&ParamVector::consecutive(n, &int(0), 1));
            let expected: Vec<Rat> = (0..=n).map(|m| stirling1(n, m).unwrap()).collect();
            assert_eq!(row.coeffs(), expected.as_slice());
        }
    }

    #[test]
    fn two_shifts() {
        let row = comtet_first(&pv(&[1, 2], &[1, 1]));
        assert_eq!(row.coeffs(), &[int(2), int(-3), int(1)]);
        assert_eq!(row.stirling2(1).unwrap(), int(-2));
        assert_eq!(row.stirling2(2).unwrap(), int(1));
        assert_eq!(row.stirling2_signed(1).unwrap(), int(4));
        assert_eq!(row.stirling2_signed(2).unwrap(), int(1));
    }

    #[test]
    fn single_factor() {
        assert_eq!(gen_stirling2(&pv(&[0], &[1]), 1).unwrap(), int(1));
        assert_eq!(gen_stirling2_signed(&pv(&[0], &[1]), 1).unwrap(), int(-1));
    }

    #[test]
    fn leading_terms() {
        let p = ParamVector::new(vec![frac(1, 2), int(-1)], vec![2, 1]).unwrap();
        assert_eq!(gen_stirling2(&p, 3).unwrap(), int(1));
        assert_eq!(gen_stirling2_signed(&p, 3).unwrap(), int(-1));
        assert!(matches!(gen_stirling2(&p, 4), Err(Error::Domain { .. })));
    }
}
