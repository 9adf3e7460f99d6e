//! Exact affine flats in `Q^N` and linear systems describing them.
//!
//! An `AffineFlat` is stored canonically: the direction space as the nonzero
//! rows of its reduced row echelon form, and the base point reduced so it
//! vanishes in every pivot column. Two flats are equal as sets exactly when
//! they are equal as values.

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{self, Echelon, Matrix, Solution};
use crate::rational::{self, format_rational, parse_rational, Rational, RationalVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FlatError {
    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("operation needs a nonempty flat")]
    Empty,
    #[error("parametrization directions are linearly dependent")]
    DependentDirections,
    #[error("bad flat encoding: {0}")]
    Encoding(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct FlatData {
    base: RationalVector,
    directions: Matrix,
    pivots: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineFlat {
    ambient: usize,
    data: Option<FlatData>,
}

impl AffineFlat {
    pub fn empty(ambient: usize) -> Self {
        AffineFlat {
            ambient,
            data: None,
        }
    }

    /// `base + span(directions)`, canonicalized. Directions may be dependent.
    pub fn new(base: RationalVector, directions: &[RationalVector]) -> Self {
        let ambient = base.len();
        let ech = linalg::rref(directions, ambient);
        let base = ech.reduce(&base);
        AffineFlat {
            ambient,
            data: Some(FlatData {
                base,
                directions: ech.rows,
                pivots: ech.pivots,
            }),
        }
    }

    pub fn point(p: RationalVector) -> Self {
        Self::new(p, &[])
    }

    /// Linear subspace spanned by `directions`.
    pub fn span(ambient: usize, directions: &[RationalVector]) -> Self {
        Self::new(rational::zeros(ambient), directions)
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(ambient, &linalg::identity(ambient))
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_none()
    }

    /// Dimension, or `None` for the empty flat.
    pub fn dim(&self) -> Option<usize> {
        self.data.as_ref().map(|d| d.directions.len())
    }

    pub fn is_point(&self) -> bool {
        self.dim() == Some(0)
    }

    pub fn is_full(&self) -> bool {
        self.dim() == Some(self.ambient)
    }

    /// Canonical base point.
    pub fn base(&self) -> Option<&RationalVector> {
        self.data.as_ref().map(|d| &d.base)
    }

    /// Canonical (reduced echelon) direction basis.
    pub fn directions(&self) -> &[RationalVector] {
        self.data.as_ref().map_or(&[], |d| &d.directions)
    }

    fn echelon(&self) -> Option<Echelon> {
        self.data.as_ref().map(|d| Echelon {
            ncols: self.ambient,
            rows: d.directions.clone(),
            pivots: d.pivots.clone(),
        })
    }

    pub fn contains(&self, p: &[Rational]) -> bool {
        match (&self.data, self.echelon()) {
            (Some(d), Some(ech)) => {
                p.len() == self.ambient && ech.contains(&rational::sub(p, &d.base))
            }
            _ => false,
        }
    }

    /// Implicit equations `n . x = c`, one per normal direction. The empty
    /// flat yields the single inconsistent row `0 = 1`.
    pub fn equations(&self) -> LinearSystem {
        let Some(d) = &self.data else {
            return LinearSystem::new(
                self.ambient,
                vec![(rational::zeros(self.ambient), Rational::from_integer(1.into()))],
            );
        };
        let normals = linalg::rref(&d.directions, self.ambient).nullspace();
        let rows = normals
            .into_iter()
            .map(|n| {
                let c = rational::dot(&n, &d.base);
                (n, c)
            })
            .collect();
        LinearSystem::new(self.ambient, rows)
    }

    fn same_ambient(&self, other: &Self) -> Result<(), FlatError> {
        if self.ambient == other.ambient {
            Ok(())
        } else {
            Err(FlatError::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            })
        }
    }

    pub fn intersect(&self, other: &Self) -> Result<Self, FlatError> {
        self.same_ambient(other)?;
        if self.is_empty() || other.is_empty() {
            return Ok(AffineFlat::empty(self.ambient));
        }
        let mut sys = self.equations();
        sys.rows.extend(other.equations().rows);
        Ok(sys.solution_set())
    }

    /// Smallest flat containing both.
    pub fn hull(&self, other: &Self) -> Result<Self, FlatError> {
        self.same_ambient(other)?;
        let (Some(a), Some(b)) = (&self.data, &other.data) else {
            return Err(FlatError::Empty);
        };
        let mut dirs = a.directions.clone();
        dirs.extend(b.directions.iter().cloned());
        dirs.push(rational::sub(&b.base, &a.base));
        Ok(AffineFlat::new(a.base.clone(), &dirs))
    }

    /// Image under the linear map `x -> M x`.
    pub fn map_linear(&self, m: &[RationalVector]) -> Self {
        let out = m.len();
        match &self.data {
            None => AffineFlat::empty(out),
            Some(d) => {
                let dirs: Matrix = d.directions.iter().map(|v| linalg::mat_vec(m, v)).collect();
                AffineFlat::new(linalg::mat_vec(m, &d.base), &dirs)
            }
        }
    }

    /// `{ s : h(s) in self }` for a parametrized flat `h`.
    pub fn pullback(&self, h: &ParametrizedFlat) -> Result<Self, FlatError> {
        if h.ambient() != self.ambient {
            return Err(FlatError::AmbientMismatch {
                left: self.ambient,
                right: h.ambient(),
            });
        }
        let k = h.dim();
        let sys = self.equations();
        let rows = sys
            .rows
            .iter()
            .map(|(n, c)| {
                let coeffs: RationalVector =
                    h.directions.iter().map(|dir| rational::dot(n, dir)).collect();
                (coeffs, c - rational::dot(n, &h.base))
            })
            .collect();
        Ok(LinearSystem::new(k, rows).solution_set())
    }
}

/// A system of affine equations `row . x = rhs` over `Q^N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystem {
    ambient: usize,
    pub rows: Vec<(RationalVector, Rational)>,
}

impl LinearSystem {
    pub fn new(ambient: usize, rows: Vec<(RationalVector, Rational)>) -> Self {
        for (r, _) in &rows {
            assert_eq!(r.len(), ambient, "row length must equal ambient dimension");
        }
        LinearSystem { ambient, rows }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn solution_set(&self) -> AffineFlat {
        let a: Matrix = self.rows.iter().map(|(r, _)| r.clone()).collect();
        let b: RationalVector = self.rows.iter().map(|(_, c)| c.clone()).collect();
        match linalg::solve(&a, &b, self.ambient) {
            Solution::Inconsistent => AffineFlat::empty(self.ambient),
            Solution::Affine { particular, kernel } => AffineFlat::new(particular, &kernel),
        }
    }

    /// Reduced echelon form of the augmented rows; drops redundant rows.
    pub fn canonical(&self) -> LinearSystem {
        let aug: Matrix = self
            .rows
            .iter()
            .map(|(r, c)| {
                let mut v = r.clone();
                v.push(c.clone());
                v
            })
            .collect();
        let ech = linalg::rref(&aug, self.ambient + 1);
        LinearSystem {
            ambient: self.ambient,
            rows: ech
                .rows
                .into_iter()
                .map(|mut v| {
                    let c = v.pop().expect("augmented column");
                    (v, c)
                })
                .collect(),
        }
    }

    /// Renders each row as `c = a x_1 + b x_2 ...` using `labels` for the
    /// unknowns; zero coefficients are skipped.
    pub fn render(&self, labels: &[String]) -> Vec<String> {
        self.rows
            .iter()
            .map(|(row, rhs)| {
                let mut terms = Vec::new();
                for (c, name) in row.iter().zip(labels) {
                    if c.is_zero() {
                        continue;
                    }
                    let neg = rational::is_negative(c);
                    let mag = if neg { -c } else { c.clone() };
                    let coeff = if mag == Rational::from_integer(1.into()) {
                        String::new()
                    } else {
                        format_rational(&mag)
                    };
                    terms.push((neg, format!("{coeff}{name}")));
                }
                let mut lhs = String::new();
                for (i, (neg, t)) in terms.iter().enumerate() {
                    match (i, neg) {
                        (0, true) => lhs.push('-'),
                        (0, false) => {}
                        (_, true) => lhs.push_str(" - "),
                        (_, false) => lhs.push_str(" + "),
                    }
                    lhs.push_str(t);
                }
                if lhs.is_empty() {
                    lhs.push('0');
                }
                format!("{lhs} = {}", format_rational(rhs))
            })
            .collect()
    }
}

/// A flat given by an explicit affine parametrization
/// `s -> base + sum s_i directions[i]` with independent directions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParametrizedFlat {
    base: RationalVector,
    directions: Matrix,
}

impl ParametrizedFlat {
    pub fn new(base: RationalVector, directions: Matrix) -> Result<Self, FlatError> {
        let n = base.len();
        if directions.iter().any(|v| v.len() != n) {
            return Err(FlatError::AmbientMismatch {
                left: n,
                right: directions.iter().map(Vec::len).find(|&l| l != n).unwrap_or(n),
            });
        }
        if linalg::rank(&directions, n) != directions.len() {
            return Err(FlatError::DependentDirections);
        }
        Ok(ParametrizedFlat { base, directions })
    }

    /// The whole space with its standard coordinates.
    pub fn identity(ambient: usize) -> Self {
        ParametrizedFlat {
            base: rational::zeros(ambient),
            directions: linalg::identity(ambient),
        }
    }

    pub fn ambient(&self) -> usize {
        self.base.len()
    }

    pub fn dim(&self) -> usize {
        self.directions.len()
    }

    pub fn base(&self) -> &[Rational] {
        &self.base
    }

    pub fn directions(&self) -> &[RationalVector] {
        &self.directions
    }

    pub fn apply(&self, s: &[Rational]) -> RationalVector {
        assert_eq!(s.len(), self.dim());
        let mut out = self.base.clone();
        for (si, dir) in s.iter().zip(&self.directions) {
            if si.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(dir) {
                *o += si * x;
            }
        }
        out
    }

    pub fn to_flat(&self) -> AffineFlat {
        AffineFlat::new(self.base.clone(), &self.directions)
    }
}

/// Pulls each flat back through the parametrization of `h`, giving flats in
/// `h`'s own coordinates. Output order matches input order.
pub fn slice_flats(flats: &[AffineFlat], h: &ParametrizedFlat) -> Result<Vec<AffineFlat>, FlatError> {
    flats.par_iter().map(|f| f.pullback(h)).collect()
}

/// JSON form: `{"ambient": N, "base": ["p/q", ...], "directions": [[...], ...]}`
/// with `"base": null` for the empty flat.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlatJson {
    pub ambient: usize,
    pub base: Option<Vec<String>>,
    pub directions: Vec<Vec<String>>,
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn parse_strings(v: &[String]) -> Result<RationalVector, FlatError> {
    v.iter()
        .map(|s| parse_rational(s).map_err(|e| FlatError::Encoding(e.to_string())))
        .collect()
}

impl From<&AffineFlat> for FlatJson {
    fn from(f: &AffineFlat) -> Self {
        FlatJson {
            ambient: f.ambient,
            base: f.base().map(|b| strings(b)),
            directions: f.directions().iter().map(|d| strings(d)).collect(),
        }
    }
}

impl TryFrom<&FlatJson> for AffineFlat {
    type Error = FlatError;

    fn try_from(j: &FlatJson) -> Result<Self, FlatError> {
        let Some(base) = &j.base else {
            return Ok(AffineFlat::empty(j.ambient));
        };
        let base = parse_strings(base)?;
        if base.len() != j.ambient {
            return Err(FlatError::Encoding("base length differs from ambient".into()));
        }
        let dirs = j
            .directions
            .iter()
            .map(|d| {
                let v = parse_strings(d)?;
                if v.len() == j.ambient {
                    Ok(v)
                } else {
                    Err(FlatError::Encoding("direction length differs from ambient".into()))
                }
            })
            .collect::<Result<Matrix, _>>()?;
        Ok(AffineFlat::new(base, &dirs))
    }
}

/// JSON form of a linear system: one object per row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearSystemJson {
    pub ambient: usize,
    pub variables: Vec<String>,
    pub rows: Vec<RowJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowJson {
    pub rhs: String,
    pub coefficients: Vec<String>,
}

impl LinearSystemJson {
    pub fn new(sys: &LinearSystem, variables: Vec<String>) -> Self {
        LinearSystemJson {
            ambient: sys.ambient,
            variables,
            rows: sys
                .rows
                .iter()
                .map(|(r, c)| RowJson {
                    rhs: format_rational(c),
                    coefficients: strings(r),
                })
                .collect(),
        }
    }

    pub fn to_system(&self) -> Result<LinearSystem, FlatError> {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let coeffs = parse_strings(&r.coefficients)?;
                if coeffs.len() != self.ambient {
                    return Err(FlatError::Encoding("row length differs from ambient".into()));
                }
                let rhs = parse_rational(&r.rhs).map_err(|e| FlatError::Encoding(e.to_string()))?;
                Ok((coeffs, rhs))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(LinearSystem::new(self.ambient, rows))
    }
}
