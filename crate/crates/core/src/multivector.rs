//! Sparse exact multivectors of `X_d`.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::blade::{self, Blade, MAX_DIM, MIN_DIM};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("vector has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("unsupported dimension {0} (supported {MIN_DIM}..={MAX_DIM})")]
    UnsupportedDimension(usize),
    #[error("multivector is not in Z_d^0")]
    NotInZ0,
    #[error("grade {0} is odd")]
    OddGrade(u32),
    #[error("parse error at byte {pos}: {reason}")]
    Parse { pos: usize, reason: String },
}

/// Named subspaces of `X_d` for membership tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subspace {
    /// Even products of `e_1..e_d` and the pair `e_{d+1}e_{d+2}`.
    Z0,
    /// `Cl_d^0`.
    EvenClifford,
    /// `Cl_k^0` for `k <= d`.
    EvenCliffordOf(usize),
    /// `Cl_k`.
    CliffordOf(usize),
    /// `i(R^d)`.
    Vectors,
}

/// Element of `X_d`: a map from basis blades to nonzero rational
/// coefficients. Values are immutable; every operation returns a new one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multivector {
    dim: usize,
    terms: BTreeMap<Blade, Rational>,
}

pub(crate) fn check_dim(dim: usize) -> Result<(), AlgebraError> {
    if (MIN_DIM..=MAX_DIM).contains(&dim) {
        Ok(())
    } else {
        Err(AlgebraError::UnsupportedDimension(dim))
    }
}

impl Multivector {
    pub fn zero(dim: usize) -> Self {
        check_dim(dim).expect("unsupported dimension");
        Multivector {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(dim: usize) -> Self {
        Self::scalar(dim, Rational::one())
    }

    pub fn scalar(dim: usize, value: Rational) -> Self {
        Self::term(Blade::scalar(dim), value)
    }

    pub fn term(blade: Blade, coeff: Rational) -> Self {
        let mut mv = Multivector::zero(blade.dim());
        if !coeff.is_zero() {
            mv.terms.insert(blade, coeff);
        }
        mv
    }

    /// `e_j`, 1-based.
    pub fn generator(dim: usize, j: usize) -> Self {
        Self::term(Blade::generator(dim, j), Rational::one())
    }

    /// The pair `e_{d+1}e_{d+2}`.
    pub fn pair(dim: usize) -> Self {
        Self::term(Blade::from_indices(dim, &[dim + 1, dim + 2]), Rational::one())
    }

    /// Product of the listed generators in the given (not necessarily
    /// sorted) order.
    pub fn product_of(dim: usize, generators: &[usize]) -> Self {
        generators
            .iter()
            .fold(Self::one(dim), |acc, &j| &acc * &Self::generator(dim, j))
    }

    pub fn from_terms<I>(dim: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Blade, Rational)>,
    {
        let mut mv = Multivector::zero(dim);
        for (b, c) in terms {
            assert_eq!(b.dim(), dim, "blade dimension mismatch");
            mv.accumulate(b, c);
        }
        mv
    }

    /// The embedding `i(v) = sum v_j e_j`.
    pub fn embed(dim: usize, v: &[Rational]) -> Result<Self, AlgebraError> {
        check_dim(dim)?;
        if v.len() != dim {
            return Err(AlgebraError::LengthMismatch {
                expected: dim,
                got: v.len(),
            });
        }
        Ok(Self::from_terms(
            dim,
            v.iter()
                .enumerate()
                .map(|(j, c)| (Blade::generator(dim, j + 1), c.clone())),
        ))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> impl Iterator<Item = (Blade, &Rational)> {
        self.terms.iter().map(|(b, c)| (*b, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, blade: Blade) -> Rational {
        self.terms.get(&blade).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficient of `1`, the "first coordinate".
    pub fn scalar_part(&self) -> Rational {
        self.coefficient(Blade::scalar(self.dim))
    }

    /// `Some(c)` when the multivector is `c * 1`.
    pub fn as_scalar(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self
                .terms
                .get(&Blade::scalar(self.dim))
                .cloned(),
            _ => None,
        }
    }

    /// `Some(v)` when the multivector is `i(v)`.
    pub fn as_vector(&self) -> Option<Vec<Rational>> {
        let mut v = rational::zeros(self.dim);
        for (b, c) in self.terms() {
            if !b.is_vector() {
                return None;
            }
            v[b.indices().next().unwrap() - 1] = c.clone();
        }
        Some(v)
    }

    fn accumulate(&mut self, blade: Blade, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(blade) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn same_dim(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(AlgebraError::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.same_dim(other)?;
        let mut out = self.clone();
        for (b, c) in other.terms() {
            out.accumulate(b, c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.same_dim(other)?;
        let mut out = self.clone();
        for (b, c) in other.terms() {
            out.accumulate(b, -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.same_dim(other)?;
        let mut out = Multivector::zero(self.dim);
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                let (sign, blade) = a.product(b);
                match sign {
                    0 => {}
                    1 => out.accumulate(blade, ca * cb),
                    _ => out.accumulate(blade, -(ca * cb)),
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Multivector::zero(self.dim);
        }
        self.map_coefficients(|_, c| c * s)
    }

    fn map_coefficients(&self, f: impl Fn(Blade, &Rational) -> Rational) -> Self {
        Multivector {
            dim: self.dim,
            terms: self.terms().map(|(b, c)| (b, f(b, c))).collect(),
        }
    }

    fn signed_map(&self, sign: impl Fn(Blade) -> i8) -> Self {
        self.map_coefficients(|b, c| if sign(b) < 0 { -c } else { c.clone() })
    }

    /// The automorphism fixing `e_{d+2}` and negating `e_1..e_{d+1}`.
    pub fn alpha(&self) -> Self {
        self.signed_map(Blade::alpha_sign)
    }

    /// The anti-automorphism `t` with `t(e_j) = e_j`.
    pub fn reverse(&self) -> Self {
        self.signed_map(Blade::reverse_sign)
    }

    /// `alpha(t(x))`.
    pub fn conjugate(&self) -> Self {
        self.signed_map(|b| b.alpha_sign() * b.reverse_sign())
    }

    /// `N(x) = x * conjugate(x)`.
    pub fn norm(&self) -> Self {
        self * &self.conjugate()
    }

    /// Sub-sum of the `m`-terms of an element of `Z_d^0`.
    pub fn grade_select(&self, m: u32) -> Result<Self, AlgebraError> {
        if !self.is_in(Subspace::Z0) {
            return Err(AlgebraError::NotInZ0);
        }
        if m % 2 != 0 {
            return Err(AlgebraError::OddGrade(m));
        }
        Ok(self.filter(|b| b.grade() == m))
    }

    /// Distinct grades present, ascending.
    pub fn grades(&self) -> Vec<u32> {
        let mut g: Vec<u32> = self.terms().map(|(b, _)| b.grade()).collect();
        g.sort_unstable();
        g.dedup();
        g
    }

    pub fn filter(&self, keep: impl Fn(Blade) -> bool) -> Self {
        Multivector {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| keep(**b))
                .map(|(b, c)| (*b, c.clone()))
                .collect(),
        }
    }

    pub fn is_in(&self, which: Subspace) -> bool {
        let d = self.dim;
        self.terms().all(|(b, _)| match which {
            Subspace::Z0 => b.in_z0(),
            Subspace::EvenClifford => b.in_even_clifford(d),
            Subspace::EvenCliffordOf(k) => b.in_even_clifford(k),
            Subspace::CliffordOf(k) => b.in_clifford(k),
            Subspace::Vectors => b.is_vector(),
        })
    }

    /// Coordinates in the `z0_basis` ordering. Panics if the element is not
    /// in `Z_d^0`.
    pub fn z0_coordinates(&self) -> Vec<Rational> {
        assert!(self.is_in(Subspace::Z0), "not in Z_d^0");
        blade::z0_basis(self.dim)
            .into_iter()
            .map(|b| self.coefficient(b))
            .collect()
    }

    pub fn from_z0_coordinates(dim: usize, coords: &[Rational]) -> Self {
        let basis = blade::z0_basis(dim);
        assert_eq!(coords.len(), basis.len(), "expected 2^d coordinates");
        Self::from_terms(dim, basis.into_iter().zip(coords.iter().cloned()))
    }

    /// Terms sorted for display: by grade, then mask.
    pub fn sorted_terms(&self) -> Vec<(Blade, &Rational)> {
        let mut t: Vec<_> = self.terms().collect();
        t.sort_by(|a, b| a.0.grade_order(b.0));
        t
    }
}

impl Add for &Multivector {
    type Output = Multivector;

    /// Panics on dimension mismatch; use `checked_add` to recover.
    fn add(self, rhs: &Multivector) -> Multivector {
        self.checked_add(rhs).expect("multivector add")
    }
}

impl Sub for &Multivector {
    type Output = Multivector;

    fn sub(self, rhs: &Multivector) -> Multivector {
        self.checked_sub(rhs).expect("multivector sub")
    }
}

impl Mul for &Multivector {
    type Output = Multivector;

    fn mul(self, rhs: &Multivector) -> Multivector {
        self.checked_mul(rhs).expect("multivector mul")
    }
}

impl Mul<&Rational> for &Multivector {
    type Output = Multivector;

    fn mul(self, rhs: &Rational) -> Multivector {
        self.scale(rhs)
    }
}

impl Neg for &Multivector {
    type Output = Multivector;

    fn neg(self) -> Multivector {
        self.map_coefficients(|_, c| -c)
    }
}

impl Add for Multivector {
    type Output = Multivector;
    fn add(self, rhs: Multivector) -> Multivector {
        &self + &rhs
    }
}

impl Sub for Multivector {
    type Output = Multivector;
    fn sub(self, rhs: Multivector) -> Multivector {
        &self - &rhs
    }
}

impl Mul for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: Multivector) -> Multivector {
        &self * &rhs
    }
}

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        -&self
    }
}
