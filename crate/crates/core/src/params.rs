use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::poly::{self, Poly};
use crate::rat::{self, Rat};

/// Shift parameters `α_0..α_{n−1}` with multiplicities `r_0..r_{n−1}`,
/// describing the product `∏ (x − α_i)^{r_i}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ParamVector {
    alphas: Vec<Rat>,
    multiplicities: Vec<u32>,
}

impl ParamVector {
    pub fn new(alphas: Vec<Rat>, multiplicities: Vec<u32>) -> Result<Self> {
        if alphas.len() != multiplicities.len() {
            return Err(Error::ParamLength {
                alphas: alphas.len(),
                multiplicities: multiplicities.len(),
            });
        }
        Ok(ParamVector {
            alphas,
            multiplicities,
        })
    }

    pub fn empty() -> Self {
        ParamVector::default()
    }

    /// `α_i = alpha`, `r_i = r` for `i < n`.
    pub fn uniform(n: usize, alpha: &Rat, r: u32) -> Self {
        ParamVector {
            alphas: vec![alpha.clone(); n],
            multiplicities: vec![r; n],
        }
    }

    /// `α_i = i + shift`, `r_i = r`; with `shift = 0, r = 1` the product is
    /// the falling factorial `(x)_n`.
    pub fn consecutive(n: usize, shift: &Rat, r: u32) -> Self {
        ParamVector {
            alphas: (0..n).map(|i| rat::int(i as i64) + shift).collect(),
            multiplicities: vec![r; n],
        }
    }

    /// Unit multiplicities over the given shifts.
    pub fn simple(alphas: Vec<Rat>) -> Self {
        let n = alphas.len();
        ParamVector {
            alphas,
            multiplicities: vec![1; n],
        }
    }

    pub fn len(&self) -> usize {
        self.alphas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alphas.is_empty()
    }

    pub fn alphas(&self) -> &[Rat] {
        &self.alphas
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.multiplicities
    }

    /// `|r| = Σ r_i`, the degree of the expanded product.
    pub fn total_weight(&self) -> usize {
        self.multiplicities.iter().map(|&r| r as usize).sum()
    }

    pub fn shifted(&self, c: &Rat) -> Self {
        ParamVector {
            alphas: self.alphas.iter().map(|a| a + c).collect(),
            multiplicities: self.multiplicities.clone(),
        }
    }

    /// The expanded product `∏ (x − α_i)^{r_i}`, memoized since every grid
    /// point expands its parameters several times.
    pub fn expand(&self) -> Poly {
        static CACHE: OnceLock<RwLock<HashMap<ParamVector, Poly>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(p) = cache.read().expect("expansion cache poisoned").get(self) {
            return p.clone();
        }
        let p = poly_from_factors(self);
        cache
            .write()
            .expect("expansion cache poisoned")
            .entry(self.clone())
            .or_insert(p)
            .clone()
    }
}

pub fn poly_from_factors(params: &ParamVector) -> Poly {
    let roots = params
        .alphas
        .iter()
        .zip(&params.multiplicities)
        .flat_map(|(a, &r)| std::iter::repeat_n(a, r as usize));
    poly::product_of_roots(roots)
}

impl fmt::Display for ParamVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let alphas: Vec<String> = self.alphas.iter().map(|a| a.to_string()).collect();
        let rs: Vec<String> = self.multiplicities.iter().map(|r| r.to_string()).collect();
        write!(f, "alpha=({}) r=({})", alphas.join(","), rs.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::int;

    #[test]
    fn empty_product_is_one() {
        assert_eq!(poly_from_factors(&ParamVector::empty()), Poly::one());
        let zero_weights = ParamVector::new(vec![int(3), int(-1)], vec![0, 0]).unwrap();
        assert_eq!(zero_weights.expand(), Poly::one());
        assert_eq!(zero_weights.total_weight(), 0);
    }

    #[test]
    fn small_products() {
        let p = ParamVector::new(vec![int(0), int(1)], vec![1, 1]).unwrap();
        assert_eq!(p.expand(), Poly::from_ints(&[0, -1, 1]));
        let q = ParamVector::new(vec![int(1), int(2)], vec![1, 1]).unwrap();
        assert_eq!(q.expand(), Poly::from_ints(&[2, -3, 1]));
        let sq = ParamVector::new(vec![int(1)], vec![2]).unwrap();
        assert_eq!(sq.expand(), Poly::from_ints(&[1, -2, 1]));
    }

    #[test]
    fn length_mismatch_rejected() {
        assert_eq!(
            ParamVector::new(vec![int(0)], vec![]),
            Err(Error::ParamLength {
                alphas: 1,
                multiplicities: 0
            })
        );
    }

    #[test]
    fn display() {
        let p = ParamVector::new(vec![int(0), crate::rat::frac(1, 2)], vec![1, 2]).unwrap();
        assert_eq!(p.to_string(), "alpha=(0,1/2) r=(1,2)");
    }
}
