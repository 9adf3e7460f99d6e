//! The `C(d+1, 2)` two-term coordinates of `Z_d^0`.
//!
//! Coordinate `(j, k)` with `k <= d` tracks the blade `e_j e_k`; coordinate
//! `(j, d+1)` tracks `e_j e_{d+1} e_{d+2}`. Pairs are listed
//! lexicographically over `k <= d`, followed by the `(j, d+1)` pairs.

use num_traits::Zero;

use crate::blade::Blade;
use crate::multivector::{AlgebraError, Multivector, Subspace};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordinateChart {
    dim: usize,
    pairs: Vec<(usize, usize)>,
}

impl CoordinateChart {
    pub fn new(dim: usize) -> Self {
        let mut pairs = Vec::with_capacity(dim * (dim + 1) / 2);
        for j in 1..=dim {
            for k in j + 1..=dim {
                pairs.push((j, k));
            }
        }
        for j in 1..=dim {
            pairs.push((j, dim + 1));
        }
        CoordinateChart { dim, pairs }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `C(d+1, 2)`.
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn index_of(&self, j: usize, k: usize) -> Option<usize> {
        self.pairs.iter().position(|&p| p == (j, k))
    }

    /// The blade tracked by coordinate `(j, k)`.
    pub fn blade(&self, j: usize, k: usize) -> Blade {
        two_term_blade(self.dim, j, k)
    }

    pub fn blades(&self) -> Vec<Blade> {
        self.pairs
            .iter()
            .map(|&(j, k)| self.blade(j, k))
            .collect()
    }

    /// Raw two-term coefficients (no normalization).
    pub fn coordinates(&self, x: &Multivector) -> Vec<Rational> {
        self.blades().into_iter().map(|b| x.coefficient(b)).collect()
    }

    /// Label such as `x_{1,3}`.
    pub fn label(&self, index: usize) -> String {
        let (j, k) = self.pairs[index];
        format!("x_{{{j},{k}}}")
    }

    /// Linear map `R^{2^d} -> R^{C(d+1,2)}` (in `z0_basis` order) keeping
    /// only two-term coordinates.
    pub fn projection_matrix(&self) -> Vec<Vec<Rational>> {
        let basis = crate::blade::z0_basis(self.dim);
        self.blades()
            .into_iter()
            .map(|b| {
                basis
                    .iter()
                    .map(|c| {
                        if *c == b {
                            Rational::from_integer(1.into())
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect()
            })
            .collect()
    }
}

/// Blade for the two-term coordinate `(j, k)`, `1 <= j < k <= d+1`.
pub fn two_term_blade(dim: usize, j: usize, k: usize) -> Blade {
    assert!(1 <= j && j < k && k <= dim + 1, "bad two-term index ({j},{k})");
    if k <= dim {
        Blade::from_indices(dim, &[j, k])
    } else {
        Blade::from_indices(dim, &[j, dim + 1, dim + 2])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EtaError {
    #[error("first coordinate is zero (point lies on H_0)")]
    OnH0,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Normalizes the `1`-coefficient to one and keeps the two-term coordinates.
pub fn eta_project(x: &Multivector) -> Result<Vec<Rational>, EtaError> {
    if !x.is_in(Subspace::Z0) {
        return Err(AlgebraError::NotInZ0.into());
    }
    let first = x.scalar_part();
    if first.is_zero() {
        return Err(EtaError::OnH0);
    }
    let chart = CoordinateChart::new(x.dim());
    Ok(chart
        .coordinates(x)
        .into_iter()
        .map(|c| c / &first)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, RationalVector};

    #[test]
    fn chart_order() {
        let c = CoordinateChart::new(3);
        assert_eq!(
            c.pairs(),
            &[(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)]
        );
        assert_eq!(c.blade(2, 4).to_string(), "e2e4e5");
        assert_eq!(c.label(3), "x_{1,4}");
        for d in 2..=6 {
            assert_eq!(CoordinateChart::new(d).len(), d * (d + 1) / 2);
        }
    }

    #[test]
    fn eta_examples() {
        let d = 2;
        assert_eq!(
            eta_project(&Multivector::one(d)).unwrap(),
            vec![int(0); 3]
        );
        let v: RationalVector = vec![int(2), int(-5)];
        let x = &Multivector::one(d)
            + &(&Multivector::pair(d) * &Multivector::embed(d, &v).unwrap());
        assert_eq!(eta_project(&x).unwrap(), vec![int(0), int(-2), int(5)]);
        assert_eq!(
            eta_project(&x.scale(&int(2))).unwrap(),
            eta_project(&x).unwrap()
        );
        assert_eq!(
            eta_project(&Multivector::generator(d, 1).scale(&int(0))),
            Err(EtaError::OnH0)
        );
        assert!(eta_project(&Multivector::generator(d, 1)).is_err());
    }
}
