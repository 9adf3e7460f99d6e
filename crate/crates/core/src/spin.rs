//! Spin(d) and Spun(d) elements, the rigid-motion map, and projective rotors.
//!
//! `Spun(d)` lives in `Z_d^0`; every element factors uniquely as
//! `gamma * (1 + e_{d+1}e_{d+2} i(v))` with `gamma` in `Spin(d)`. It acts on
//! `R^d` through `w -> x (e_{d+2} i(w) + e_{d+1}) conj(x)`, which always has
//! the shape `e_{d+2} i(w') + e_{d+1}`.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::blade::Blade;
use crate::chart::two_term_blade;
use crate::linalg::{self, Matrix};
use crate::multivector::{AlgebraError, Multivector, Subspace};
use crate::rational::{self, Rational, RationalVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("vector {index} has squared norm {norm_sq}, expected 1")]
    NotUnit { index: usize, norm_sq: String },
    #[error("Spin elements need an even number of unit vectors, got {0}")]
    OddCount(usize),
    #[error("not an element of Spin(d): {0}")]
    NotSpin(&'static str),
    #[error("not an element of Spun(d): {0}")]
    NotSpun(&'static str),
    #[error("not a projective rotor: {0}")]
    NotProjective(&'static str),
    #[error("conjugated point has the wrong shape")]
    MalformedAction,
    #[error("linear lift system is singular")]
    SingularLift,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

fn conjugates_vectors_to_vectors(value: &Multivector, scale: &Rational) -> bool {
    let d = value.dim();
    let conj = value.conjugate();
    (1..=d).all(|j| {
        let image = &(value * &Multivector::generator(d, j)) * &conj;
        image.scale(&scale.recip()).is_in(Subspace::Vectors)
    })
}

/// An element of `Spin(d)`: a product of an even number of unit vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpinElement {
    value: Multivector,
    witness: Vec<RationalVector>,
}

impl SpinElement {
    pub fn identity(dim: usize) -> Self {
        SpinElement {
            value: Multivector::one(dim),
            witness: Vec::new(),
        }
    }

    /// `i(u_1) i(u_2) ... i(u_k)` for an even number of rational unit vectors.
    pub fn from_unit_vectors(dim: usize, us: &[RationalVector]) -> Result<Self, GroupError> {
        if us.len() % 2 != 0 {
            return Err(GroupError::OddCount(us.len()));
        }
        let mut value = Multivector::one(dim);
        for (index, u) in us.iter().enumerate() {
            let iu = Multivector::embed(dim, u)?;
            let n = rational::norm_sq(u);
            if !n.is_one() {
                return Err(GroupError::NotUnit {
                    index,
                    norm_sq: rational::format_rational(&n),
                });
            }
            value = &value * &iu;
        }
        Ok(SpinElement {
            value,
            witness: us.to_vec(),
        })
    }

    /// Certifies an arbitrary even-Clifford element as a Spin element.
    pub fn from_value(value: Multivector) -> Result<Self, GroupError> {
        if !value.is_in(Subspace::EvenClifford) {
            return Err(GroupError::NotSpin("not in Cl_d^0"));
        }
        if value.norm() != Multivector::one(value.dim()) {
            return Err(GroupError::NotSpin("norm is not 1"));
        }
        if !conjugates_vectors_to_vectors(&value, &Rational::one()) {
            return Err(GroupError::NotSpin("conjugation leaves i(R^d)"));
        }
        Ok(SpinElement {
            value,
            witness: Vec::new(),
        })
    }

    pub fn value(&self) -> &Multivector {
        &self.value
    }

    pub fn witness(&self) -> &[RationalVector] {
        &self.witness
    }

    pub fn dim(&self) -> usize {
        self.value.dim()
    }

    /// True when `witness` multiplies out to `value`.
    pub fn has_witness(&self) -> bool {
        !self.witness.is_empty() || self.value == Multivector::one(self.dim())
    }

    pub fn compose(&self, other: &SpinElement) -> SpinElement {
        let witness = if self.has_witness() && other.has_witness() {
            self.witness.iter().chain(&other.witness).cloned().collect()
        } else {
            Vec::new()
        };
        SpinElement {
            value: &self.value * &other.value,
            witness,
        }
    }

    /// `conj(i(u_1)...i(u_k)) = i(u_k)...i(u_1)` for even `k`.
    pub fn inverse(&self) -> SpinElement {
        SpinElement {
            value: self.value.conjugate(),
            witness: self.witness.iter().rev().cloned().collect(),
        }
    }

    pub fn negate(&self) -> SpinElement {
        let mut witness = self.witness.clone();
        if let Some(first) = witness.first_mut() {
            *first = rational::neg(first);
        }
        SpinElement {
            value: -&self.value,
            witness,
        }
    }

    /// `i^{-1}(gamma i(w) conj(gamma))`.
    pub fn rotate(&self, w: &[Rational]) -> Result<RationalVector, GroupError> {
        let iw = Multivector::embed(self.dim(), w)?;
        let image = &(&self.value * &iw) * &self.value.conjugate();
        image.as_vector().ok_or(GroupError::MalformedAction)
    }
}

/// An element of `Spun(d)` together with its unique `(gamma, v)` factorization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpunElement {
    value: Multivector,
    gamma: SpinElement,
    translation_v: RationalVector,
}

/// `e_{d+2} i(w) + e_{d+1}`.
fn point_element(dim: usize, w: &[Rational]) -> Result<Multivector, AlgebraError> {
    let top = Multivector::generator(dim, dim + 2);
    Ok(&(&top * &Multivector::embed(dim, w)?) + &Multivector::generator(dim, dim + 1))
}

/// Reads `w` back from `e_{d+2} i(w) + e_{d+1}`.
fn read_point(x: &Multivector) -> Option<RationalVector> {
    let d = x.dim();
    if !x.coefficient(Blade::generator(d, d + 1)).is_one() {
        return None;
    }
    let mut w = rational::zeros(d);
    for (b, c) in x.terms() {
        if b == Blade::generator(d, d + 1) {
            continue;
        }
        let idx: Vec<usize> = b.indices().collect();
        match idx.as_slice() {
            [j, top] if *top == d + 2 && *j <= d => w[j - 1] = c.clone(),
            _ => return None,
        }
    }
    Some(w)
}

fn conjugate_point(x: &Multivector, w: &[Rational]) -> Result<Option<RationalVector>, AlgebraError> {
    let p = point_element(x.dim(), w)?;
    Ok(read_point(&(&(x * &p) * &x.conjugate())))
}

/// Membership in `Spun(d)`: `x` in `Z_d^0`, `N(x) = 1`, and the point shape
/// survives conjugation at `v = 0` and at every basis vector. The condition
/// is affine in `v`, so these `d + 1` checks cover all of `R^d`.
pub fn is_spun_member(x: &Multivector) -> bool {
    let d = x.dim();
    if !x.is_in(Subspace::Z0) || x.norm() != Multivector::one(d) {
        return false;
    }
    std::iter::once(rational::zeros(d))
        .chain((0..d).map(|j| rational::unit(d, j)))
        .all(|v| matches!(conjugate_point(x, &v), Ok(Some(_))))
}

impl SpunElement {
    pub fn identity(dim: usize) -> Self {
        SpunElement {
            value: Multivector::one(dim),
            gamma: SpinElement::identity(dim),
            translation_v: rational::zeros(dim),
        }
    }

    /// `gamma (1 + e_{d+1}e_{d+2} i(v))`.
    pub fn from_parts(gamma: SpinElement, v: RationalVector) -> Result<Self, GroupError> {
        let d = gamma.dim();
        let shift = &Multivector::one(d) + &(&Multivector::pair(d) * &Multivector::embed(d, &v)?);
        Ok(SpunElement {
            value: gamma.value() * &shift,
            gamma,
            translation_v: v,
        })
    }

    /// Recovers the unique `(gamma, v)` of a `Spun(d)` element.
    pub fn decompose(x: &Multivector) -> Result<Self, GroupError> {
        if !is_spun_member(x) {
            return Err(GroupError::NotSpun("membership test failed"));
        }
        let d = x.dim();
        let gamma_part = x.filter(|b| !b.contains(d + 2));
        let gamma = SpinElement::from_value(gamma_part)?;
        // conj(gamma) (x - gamma) = e_{d+1}e_{d+2} i(v) = -sum v_j e_j e_{d+1} e_{d+2}
        let rest = &gamma.value().conjugate() * &(x - gamma.value());
        let mut v = rational::zeros(d);
        for (b, c) in rest.terms() {
            let idx: Vec<usize> = b.indices().collect();
            match idx.as_slice() {
                [j, p, q] if *j <= d && *p == d + 1 && *q == d + 2 => v[j - 1] = -c,
                _ => return Err(GroupError::NotSpun("translation part has the wrong shape")),
            }
        }
        let rebuilt = SpunElement::from_parts(gamma, v)?;
        if &rebuilt.value != x {
            return Err(GroupError::NotSpun("factorization does not reproduce x"));
        }
        Ok(rebuilt)
    }

    pub fn value(&self) -> &Multivector {
        &self.value
    }

    pub fn gamma(&self) -> &SpinElement {
        &self.gamma
    }

    pub fn translation_v(&self) -> &[Rational] {
        &self.translation_v
    }

    pub fn dim(&self) -> usize {
        self.value.dim()
    }

    /// Group product; the factorization is recomputed from the value.
    pub fn compose(&self, other: &SpunElement) -> Result<SpunElement, GroupError> {
        SpunElement::decompose(&(&self.value * &other.value))
    }

    /// The inverse is the conjugate.
    pub fn inverse(&self) -> SpunElement {
        SpunElement::decompose(&self.value.conjugate())
            .expect("conjugate of a Spun element is a Spun element")
    }

    pub fn negate(&self) -> SpunElement {
        SpunElement {
            value: -&self.value,
            gamma: self.gamma.negate(),
            translation_v: self.translation_v.clone(),
        }
    }

    /// `rho(x)(w)`.
    pub fn act(&self, w: &[Rational]) -> Result<RationalVector, GroupError> {
        conjugate_point(&self.value, w)?.ok_or(GroupError::MalformedAction)
    }

    /// The proper rigid motion `rho(x)`, read off from the images of the
    /// origin and the standard basis.
    pub fn to_rigid_motion(&self) -> Result<RigidMotion, GroupError> {
        let d = self.dim();
        let translation = self.act(&rational::zeros(d))?;
        let mut columns = Vec::with_capacity(d);
        for j in 0..d {
            columns.push(rational::sub(&self.act(&rational::unit(d, j))?, &translation));
        }
        let rotation = linalg::transpose(&columns, d);
        RigidMotion::new(rotation, translation).map_err(|_| GroupError::MalformedAction)
    }
}

/// Spun-level action: errors when `x` is not a valid Spun element.
pub fn spun_action(x: &SpunElement, w: &[Rational]) -> Result<RationalVector, GroupError> {
    x.act(w)
}

/// `spun_decompose` as a pair.
pub fn spun_decompose(x: &Multivector) -> Result<(SpinElement, RationalVector), GroupError> {
    let s = SpunElement::decompose(x)?;
    Ok((s.gamma, s.translation_v))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MotionError {
    #[error("rotation is not orthogonal")]
    NotOrthogonal,
    #[error("rotation has determinant {0}, expected 1")]
    Improper(String),
    #[error("shape mismatch")]
    Shape,
}

/// A proper rigid motion `w -> rotation * w + translation`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RigidMotion {
    rotation: Matrix,
    translation: RationalVector,
}

impl RigidMotion {
    pub fn new(rotation: Matrix, translation: RationalVector) -> Result<Self, MotionError> {
        let d = translation.len();
        if rotation.len() != d || rotation.iter().any(|r| r.len() != d) {
            return Err(MotionError::Shape);
        }
        let rt = linalg::transpose(&rotation, d);
        if linalg::mat_mul(&rt, &rotation) != linalg::identity(d) {
            return Err(MotionError::NotOrthogonal);
        }
        let det = linalg::determinant(&rotation);
        if !det.is_one() {
            return Err(MotionError::Improper(rational::format_rational(&det)));
        }
        Ok(RigidMotion {
            rotation,
            translation,
        })
    }

    pub fn identity(dim: usize) -> Self {
        RigidMotion {
            rotation: linalg::identity(dim),
            translation: rational::zeros(dim),
        }
    }

    pub fn rotation(&self) -> &Matrix {
        &self.rotation
    }

    pub fn translation(&self) -> &[Rational] {
        &self.translation
    }

    pub fn apply(&self, w: &[Rational]) -> RationalVector {
        rational::add(&linalg::mat_vec(&self.rotation, w), &self.translation)
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &RigidMotion) -> RigidMotion {
        RigidMotion {
            rotation: linalg::mat_mul(&self.rotation, &other.rotation),
            translation: self.apply(&other.translation),
        }
    }
}

/// A nonzero rational multiple of a Spin or Spun element: the value and the
/// positive scalar `N(value)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectiveRotor {
    value: Multivector,
    normsq: Rational,
}

impl ProjectiveRotor {
    /// Checks that `N(value)` is a positive multiple of `1` and that `value`
    /// lies in `Z_d^0`.
    pub fn new(value: Multivector) -> Result<Self, GroupError> {
        if !value.is_in(Subspace::Z0) {
            return Err(GroupError::NotProjective("not in Z_d^0"));
        }
        let normsq = value
            .norm()
            .as_scalar()
            .ok_or(GroupError::NotProjective("norm is not a scalar"))?;
        if !normsq.is_positive() {
            return Err(GroupError::NotProjective("norm is not positive"));
        }
        Ok(ProjectiveRotor { value, normsq })
    }

    pub fn value(&self) -> &Multivector {
        &self.value
    }

    pub fn normsq(&self) -> &Rational {
        &self.normsq
    }

    pub fn dim(&self) -> usize {
        self.value.dim()
    }

    /// `g i(w) g^{-1} = g i(w) conj(g) / N(g)`, read back as a vector.
    pub fn rotate(&self, w: &[Rational]) -> Result<RationalVector, GroupError> {
        let iw = Multivector::embed(self.dim(), w)?;
        let image = &(&self.value * &iw) * &self.value.conjugate();
        image
            .scale(&self.normsq.recip())
            .as_vector()
            .ok_or(GroupError::MalformedAction)
    }

    pub fn compose(&self, other: &ProjectiveRotor) -> ProjectiveRotor {
        ProjectiveRotor {
            value: &self.value * &other.value,
            normsq: &self.normsq * &other.normsq,
        }
    }

    /// Membership in `G_d`: even Clifford element acting on `i(R^d)`.
    pub fn is_in_gd(&self) -> bool {
        self.value.is_in(Subspace::EvenClifford)
            && conjugates_vectors_to_vectors(&self.value, &self.normsq)
    }
}

/// A rotor `g = i(v)(i(v) + i(u))` whose action takes the unit vector `u`
/// to the unit vector `v`, with `N(g) = 2 + 2<u, v>`. The antipodal case
/// goes through an intermediate basis direction.
pub fn rotor_taking(u: &[Rational], v: &[Rational]) -> Result<ProjectiveRotor, GroupError> {
    let d = u.len();
    for (index, w) in [u, v].into_iter().enumerate() {
        let n = rational::norm_sq(w);
        if !n.is_one() {
            return Err(GroupError::NotUnit {
                index,
                norm_sq: rational::format_rational(&n),
            });
        }
    }
    if rational::add(u, v).iter().all(Zero::is_zero) {
        let via = (0..d)
            .map(|j| rational::unit(d, j))
            .find(|w| !rational::dot(w, u).abs().is_one())
            .unwrap_or_else(|| rational::unit(d, 0));
        let first = rotor_taking(u, &via)?;
        let second = rotor_taking(&via, v)?;
        return Ok(second.compose(&first));
    }
    let iu = Multivector::embed(d, u)?;
    let iv = Multivector::embed(d, v)?;
    ProjectiveRotor::new(&iv * &(&iv + &iu))
}

/// Which factorization `gd_peel` found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PeelBranch {
    /// `g = h (e_d i(u) - 1)`.
    Vector(RationalVector),
    /// `g = h e_{d-1} e_d`.
    Pair,
}

/// Splits `g` in `G_d` as `h * e_{d-1}e_d` or `h * (e_d i(u) - 1)` with `h`
/// in `G_{d-1}`, where `u` is the preimage of `e_d` under the action of `g`.
/// Over rational projective rotors `u` is always rational.
pub fn gd_peel(g: &ProjectiveRotor) -> Result<(ProjectiveRotor, PeelBranch), GroupError> {
    let d = g.dim();
    if !g.is_in_gd() {
        return Err(GroupError::NotSpin("input is not in G_d"));
    }
    let ed = Multivector::generator(d, d);
    // i(u) = g^{-1} e_d g
    let iu = (&(&g.value().conjugate() * &ed) * g.value()).scale(&g.normsq().recip());
    let u = iu.as_vector().ok_or(GroupError::MalformedAction)?;
    let (h, branch) = if (&iu + &ed).is_zero() {
        let pair = Multivector::product_of(d, &[d - 1, d]);
        (-&(g.value() * &pair), PeelBranch::Pair)
    } else {
        // x = e_d (e_d + i(u)), x^{-1} = conj(x) / N(x)
        let x = &ed * &(&ed + &iu);
        let nx = x.norm().as_scalar().ok_or(GroupError::MalformedAction)?;
        ((g.value() * &x.conjugate()).scale(&nx.recip()), PeelBranch::Vector(u))
    };
    if !h.is_in(Subspace::EvenCliffordOf(d - 1)) {
        return Err(GroupError::NotSpin("peeled factor is not in Cl_{d-1}^0"));
    }
    Ok((ProjectiveRotor::new(h)?, branch))
}

/// Rebuilds `g` from a peel.
pub fn gd_unpeel(h: &ProjectiveRotor, branch: &PeelBranch) -> Multivector {
    let d = h.dim();
    match branch {
        PeelBranch::Pair => h.value() * &Multivector::product_of(d, &[d - 1, d]),
        PeelBranch::Vector(u) => {
            let ed = Multivector::generator(d, d);
            let iu = Multivector::embed(d, u).expect("length checked at peel");
            h.value() * &(&(&ed * &iu) - &Multivector::one(d))
        }
    }
}

/// Two-term coefficient targets `(j, k) -> lambda_{j,k}` with
/// `1 <= j < k <= d+1`; missing entries are zero.
pub type TwoTermTargets = BTreeMap<(usize, usize), Rational>;

fn target(lambdas: &TwoTermTargets, j: usize, k: usize) -> Rational {
    lambdas.get(&(j, k)).cloned().unwrap_or_else(Rational::zero)
}

/// The `n x n` system matrix `r I + Lambda`: diagonal `r`, `-lambda_{j,l}`
/// above and `lambda_{l,j}` below.
fn lift_matrix(r: &Rational, lambdas: &TwoTermTargets, n: usize) -> Matrix {
    (1..=n)
        .map(|j| {
            (1..=n)
                .map(|l| match j.cmp(&l) {
                    std::cmp::Ordering::Equal => r.clone(),
                    std::cmp::Ordering::Less => -target(lambdas, j, l),
                    std::cmp::Ordering::Greater => target(lambdas, l, j),
                })
                .collect()
        })
        .collect()
}

/// Builds `g` in `J_d` with `1`-coefficient `r` and two-term coefficients
/// `lambdas`, where coordinate `(j, d+1)` refers to `e_j e_{d+1} e_{d+2}`.
///
/// Works up through `Cl_1^0 ⊂ Cl_2^0 ⊂ ... ⊂ Cl_d^0`, setting
/// `h <- h - h e_k i(u)` at each step with `u` solving `(r I + Lambda) u =
/// (lambda_{1,k}, ..., lambda_{k-1,k})`, then appends the translation part
/// `g = h - h e_{d+1}e_{d+2} i(u)` from the final `d x d` system. The matrix
/// is a nonzero multiple of the identity plus a skew-symmetric matrix, so it
/// is always invertible.
pub fn j_lift(dim: usize, r: &Rational, lambdas: &TwoTermTargets) -> Result<ProjectiveRotor, GroupError> {
    crate::multivector::check_dim(dim)?;
    if r.is_zero() {
        return Err(GroupError::NotProjective("first coordinate must be nonzero"));
    }
    for &(j, k) in lambdas.keys() {
        if !(1 <= j && j < k && k <= dim + 1) {
            return Err(GroupError::NotProjective("two-term index out of range"));
        }
    }
    let mut h = Multivector::scalar(dim, r.clone());
    for k in 2..=dim {
        let a = lift_matrix(r, lambdas, k - 1);
        let b: RationalVector = (1..k).map(|j| target(lambdas, j, k)).collect();
        let mut u = linalg::solve_unique(&a, &b).ok_or(GroupError::SingularLift)?;
        u.resize(dim, Rational::zero());
        let step = &(&h * &Multivector::generator(dim, k)) * &Multivector::embed(dim, &u)?;
        h = &h - &step;
    }
    let a = lift_matrix(r, lambdas, dim);
    let b: RationalVector = (1..=dim).map(|j| target(lambdas, j, dim + 1)).collect();
    let u = linalg::solve_unique(&a, &b).ok_or(GroupError::SingularLift)?;
    let step = &(&h * &Multivector::pair(dim)) * &Multivector::embed(dim, &u)?;
    ProjectiveRotor::new(&h - &step)
}

/// Reads `(r, lambdas)` back from an element of `Z_d^0`.
pub fn two_term_coefficients(x: &Multivector) -> (Rational, TwoTermTargets) {
    let d = x.dim();
    let mut out = TwoTermTargets::new();
    for j in 1..=d {
        for k in j + 1..=d + 1 {
            let c = x.coefficient(two_term_blade(d, j, k));
            if !c.is_zero() {
                out.insert((j, k), c);
            }
        }
    }
    (x.scalar_part(), out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn vec_of(xs: &[(i64, i64)]) -> RationalVector {
        xs.iter().map(|&(n, d)| frac(n, d)).collect()
    }

    #[test]
    fn spin_from_vectors() {
        let d = 2;
        assert_eq!(
            SpinElement::from_unit_vectors(d, &[]).unwrap().value(),
            &Multivector::one(d)
        );
        let e1 = rational::unit(d, 0);
        let e2 = rational::unit(d, 1);
        assert_eq!(
            SpinElement::from_unit_vectors(d, &[e1.clone(), e2]).unwrap().value(),
            &Multivector::product_of(d, &[1, 2])
        );
        let u = vec_of(&[(3, 5), (4, 5)]);
        assert_eq!(
            SpinElement::from_unit_vectors(d, &[u.clone(), u]).unwrap().value(),
            &-Multivector::one(d)
        );
        assert_eq!(
            SpinElement::from_unit_vectors(d, &[e1.clone()]),
            Err(GroupError::OddCount(1))
        );
        assert!(matches!(
            SpinElement::from_unit_vectors(d, &[e1, vec![int(1), int(1)]]),
            Err(GroupError::NotUnit { index: 1, .. })
        ));
    }

    #[test]
    fn spun_parts_and_decomposition() {
        let d = 2;
        let v = vec![int(1), int(2)];
        let x = SpunElement::from_parts(SpinElement::identity(d), v.clone()).unwrap();
        let expected =
            &Multivector::one(d) + &(&Multivector::pair(d) * &Multivector::embed(d, &v).unwrap());
        assert_eq!(x.value(), &expected);

        let e12 = SpinElement::from_unit_vectors(d, &[rational::unit(d, 0), rational::unit(d, 1)])
            .unwrap();
        let y = SpunElement::from_parts(e12.clone(), v.clone()).unwrap();
        let (gamma, w) = spun_decompose(y.value()).unwrap();
        assert_eq!(gamma.value(), e12.value());
        assert_eq!(w, v);
    }

    #[test]
    fn membership_examples() {
        assert!(is_spun_member(&Multivector::one(3)));
        assert!(!is_spun_member(&Multivector::generator(3, 1)));
        assert!(!is_spun_member(&Multivector::scalar(3, int(2))));
        assert!(SpunElement::decompose(&Multivector::scalar(3, int(2))).is_err());
    }

    #[test]
    fn translation_moves_by_twice_v() {
        let d = 3;
        let v = vec![int(1), frac(-1, 2), int(3)];
        let x = SpunElement::from_parts(SpinElement::identity(d), v.clone()).unwrap();
        let w = vec![int(2), int(0), frac(1, 3)];
        assert_eq!(
            x.act(&w).unwrap(),
            rational::add(&w, &rational::scale(&v, &int(2)))
        );
        let m = x.to_rigid_motion().unwrap();
        assert_eq!(m.rotation(), &linalg::identity(d));
        assert_eq!(m.translation(), &rational::scale(&v, &int(2))[..]);
    }

    #[test]
    fn rotation_example_d2() {
        let d = 2;
        let value = Multivector::from_terms(
            d,
            [
                (Blade::scalar(d), frac(3, 5)),
                (Blade::from_indices(d, &[1, 2]), frac(4, 5)),
            ],
        );
        let x = SpunElement::decompose(&value).unwrap();
        assert_eq!(
            x.act(&[int(1), int(0)]).unwrap(),
            vec![frac(-7, 25), frac(24, 25)]
        );
    }

    #[test]
    fn inverse_is_conjugate() {
        let d = 2;
        let v = vec![int(1), int(2)];
        let x = SpunElement::from_parts(SpinElement::identity(d), v.clone()).unwrap();
        let inv = x.inverse();
        let expected =
            &Multivector::one(d) - &(&Multivector::pair(d) * &Multivector::embed(d, &v).unwrap());
        assert_eq!(inv.value(), &expected);
        assert_eq!(x.value() * inv.value(), Multivector::one(d));
        assert_eq!(SpunElement::identity(d).inverse(), SpunElement::identity(d));
    }

    #[test]
    fn rotor_taking_examples() {
        let d = 2;
        let u = rational::unit(d, 0);
        let v = rational::unit(d, 1);
        let g = rotor_taking(&u, &v).unwrap();
        assert_eq!(
            g.value(),
            &(&-Multivector::one(d) + &Multivector::product_of(d, &[2, 1]))
        );
        assert_eq!(g.normsq(), &int(2));
        assert_eq!(g.rotate(&u).unwrap(), v);

        let same = rotor_taking(&u, &u).unwrap();
        assert_eq!(same.value(), &Multivector::scalar(d, int(-2)));
        assert_eq!(same.rotate(&v).unwrap(), v);

        let u3 = vec![frac(2, 3), frac(2, 3), frac(1, 3)];
        let back = rational::neg(&u3);
        let g = rotor_taking(&u3, &back).unwrap();
        assert_eq!(g.rotate(&u3).unwrap(), back);
    }

    #[test]
    fn peel_examples() {
        let d = 3;
        let (h, branch) = gd_peel(&ProjectiveRotor::new(Multivector::one(d)).unwrap()).unwrap();
        assert_eq!(branch, PeelBranch::Vector(rational::unit(d, d - 1)));
        assert_eq!(h.value(), &Multivector::scalar(d, frac(-1, 2)));

        let pair = ProjectiveRotor::new(Multivector::product_of(d, &[2, 3])).unwrap();
        let (h, branch) = gd_peel(&pair).unwrap();
        assert_eq!(branch, PeelBranch::Pair);
        assert_eq!(h.value(), &Multivector::one(d));
        assert_eq!(gd_unpeel(&h, &branch), *pair.value());

        let not_gd = ProjectiveRotor::new(Multivector::one(d) + Multivector::product_of(d, &[1, 4, 5])).unwrap();
        assert!(gd_peel(&not_gd).is_err());
    }

    #[test]
    fn j_lift_examples() {
        let d = 2;
        let g = j_lift(d, &int(1), &TwoTermTargets::new()).unwrap();
        assert_eq!(g.value(), &Multivector::one(d));

        let c = frac(3, 7);
        let mut l = TwoTermTargets::new();
        l.insert((1, 2), c.clone());
        let g = j_lift(d, &int(1), &l).unwrap();
        assert_eq!(
            g.value(),
            &(&Multivector::one(d) + &Multivector::product_of(d, &[1, 2]).scale(&c))
        );

        let mut l = TwoTermTargets::new();
        l.insert((1, 2), int(2));
        l.insert((1, 3), frac(-1, 3));
        l.insert((2, 3), int(5));
        let g = j_lift(d, &frac(1, 2), &l).unwrap();
        assert_eq!(two_term_coefficients(g.value()), (frac(1, 2), l));
        assert!(j_lift(d, &int(0), &TwoTermTargets::new()).is_err());
    }
}
