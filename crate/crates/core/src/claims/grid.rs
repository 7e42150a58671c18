use crate::params::ParamVector;
use crate::rat::{frac, int, Rat};

/// Parameter ranges a claim is checked over. Enumeration order is
/// lexicographic in the order the values are listed, so counterexamples are
/// reported stably.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid {
    pub n_max: usize,
    pub k_max: u32,
    pub multiplicities: Vec<u32>,
    pub alphas: Vec<Rat>,
    pub xs: Vec<Rat>,
    pub limits: Vec<Rat>,
}

impl Default for Grid {
    fn default() -> Self {
        Grid {
            n_max: 4,
            k_max: 3,
            multiplicities: vec![1, 2],
            alphas: vec![int(0), int(1), int(-1), frac(1, 2)],
            xs: vec![int(0), int(1), frac(-1, 2)],
            limits: vec![int(1), frac(1, 2)],
        }
    }
}

impl Grid {
    /// A reduced grid for smoke runs.
    pub fn small() -> Self {
        Grid {
            n_max: 2,
            k_max: 2,
            multiplicities: vec![1, 2],
            alphas: vec![int(0), frac(1, 2)],
            xs: vec![int(0), frac(-1, 2)],
            limits: vec![int(1), frac(1, 2)],
        }
    }

    pub fn orders(&self) -> impl Iterator<Item = u32> {
        1..=self.k_max
    }

    /// Every `(ᾱ, r̄)` with `n ≤ n_max`, ordered by `n` and then
    /// lexicographically by `(α_0, r_0), (α_1, r_1), …`.
    pub fn params(&self) -> Vec<ParamVector> {
        let choices: Vec<(Rat, u32)> = self
            .alphas
            .iter()
            .flat_map(|a| self.multiplicities.iter().map(move |&r| (a.clone(), r)))
            .collect();
        let mut out = Vec::new();
        for n in 0..=self.n_max {
            for tuple in tuples(&choices, n) {
                let (alphas, rs) = tuple.into_iter().unzip();
                out.push(ParamVector::new(alphas, rs).expect("lengths match"));
            }
        }
        out
    }

    /// Shift tuples with unit multiplicities, `n ≤ n_max`.
    pub fn simple_params(&self) -> Vec<ParamVector> {
        (0..=self.n_max)
            .flat_map(|n| tuples(&self.alphas, n))
            .map(ParamVector::simple)
            .collect()
    }

    /// Every tuple of upper limits of length `1..=k_max`.
    pub fn limit_tuples(&self) -> Vec<Vec<Rat>> {
        (1..=self.k_max as usize)
            .flat_map(|k| tuples(&self.limits, k))
            .collect()
    }
}

/// All length-`len` tuples over `choices`, first position most significant.
pub fn tuples<T: Clone>(choices: &[T], len: usize) -> Vec<Vec<T>> {
    let mut out = vec![Vec::with_capacity(len)];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                choices.iter().map(move |c| {
                    let mut next = prefix.clone();
                    next.push(c.clone());
                    next
                })
            })
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuple_counts_and_order() {
        assert_eq!(tuples(&[1, 2, 3], 0), vec![Vec::<i32>::new()]);
        assert_eq!(tuples(&[1, 2], 2), vec![vec![1, 1], vec![1, 2], vec![2, 1], vec![2, 2]]);
    }

    #[test]
    fn default_grid_sizes() {
        let g = Grid::default();
        // 8 choices per position: 1 + 8 + 64 + 512 + 4096
        assert_eq!(g.params().len(), 4681);
        assert_eq!(g.simple_params().len(), 1 + 4 + 16 + 64 + 256);
        assert_eq!(g.limit_tuples().len(), 2 + 4 + 8);
        assert!(g.params()[0].is_empty());
    }
}
