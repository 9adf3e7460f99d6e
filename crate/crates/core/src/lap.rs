//! The maps `tau_ap`, the subspaces `F_ap`, the projection onto the
//! two-term chart, and the flats `L_ap` with their explicit equations.

use num_traits::{One, Zero};

use crate::blade;
use crate::chart::{eta_project, CoordinateChart, EtaError};
use crate::flat::{AffineFlat, LinearSystem};
use crate::linalg::Matrix;
use crate::multivector::{AlgebraError, Multivector};
use crate::rational::{self, Rational, RationalVector};
use crate::spin::{j_lift, GroupError, ProjectiveRotor, TwoTermTargets};

/// `1 + s e_{d+1}e_{d+2} i(v)`.
fn translator(v: &[Rational], s: &Rational) -> Result<Multivector, AlgebraError> {
    let d = v.len();
    let iv = Multivector::embed(d, v)?;
    Ok(&Multivector::one(d) + &(&Multivector::pair(d) * &iv).scale(s))
}

fn check_points(x: &Multivector, a: &[Rational], p: &[Rational]) -> Result<(), AlgebraError> {
    for v in [a, p] {
        if v.len() != x.dim() {
            return Err(AlgebraError::LengthMismatch {
                expected: x.dim(),
                got: v.len(),
            });
        }
    }
    Ok(())
}

/// `(1 + 1/2 e_{d+1}e_{d+2} i(p)) x (1 - 1/2 e_{d+1}e_{d+2} i(a))`.
pub fn tau_ap(x: &Multivector, a: &[Rational], p: &[Rational]) -> Result<Multivector, AlgebraError> {
    check_points(x, a, p)?;
    let half = rational::frac(1, 2);
    let left = translator(p, &half)?;
    let right = translator(a, &-&half)?;
    Ok(&(&left * x) * &right)
}

pub fn tau_ap_inverse(x: &Multivector, a: &[Rational], p: &[Rational]) -> Result<Multivector, AlgebraError> {
    check_points(x, a, p)?;
    let half = rational::frac(1, 2);
    let left = translator(p, &-&half)?;
    let right = translator(a, &half)?;
    Ok(&(&left * x) * &right)
}

/// `F_ap` as a linear subspace of `Q^{2^d}` in `z0_basis` coordinates.
pub fn f_ap_subspace(a: &[Rational], p: &[Rational]) -> Result<AffineFlat, AlgebraError> {
    let d = a.len();
    crate::multivector::check_dim(d)?;
    let images = f_ap_generators(a, p)?;
    let dirs: Matrix = images.iter().map(Multivector::z0_coordinates).collect();
    Ok(AffineFlat::span(1 << d, &dirs))
}

/// `tau_ap` images of the standard basis of `Cl_d^0`.
pub fn f_ap_generators(a: &[Rational], p: &[Rational]) -> Result<Vec<Multivector>, AlgebraError> {
    let d = a.len();
    crate::multivector::check_dim(d)?;
    blade::even_clifford_basis(d, d)
        .into_iter()
        .map(|b| tau_ap(&Multivector::term(b, Rational::one()), a, p))
        .collect()
}

/// The hyperplane `H_1` (first coordinate one) in `Q^{2^d}`.
fn h1(d: usize) -> AffineFlat {
    let n = 1usize << d;
    let dirs: Matrix = (1..n).map(|i| rational::unit(n, i)).collect();
    AffineFlat::new(rational::unit(n, 0), &dirs)
}

/// `L_ap = eta(F_ap \ H_0)`, computed as the chart projection of
/// `F_ap ∩ H_1`.
pub fn l_ap_flat(a: &[Rational], p: &[Rational]) -> Result<AffineFlat, AlgebraError> {
    let d = a.len();
    let f = f_ap_subspace(a, p)?;
    let section = f.intersect(&h1(d)).expect("same ambient");
    Ok(section.map_linear(&CoordinateChart::new(d).projection_matrix()))
}

/// The `d` explicit equations cutting out `L_ap` in chart coordinates.
///
/// Row `j`: `a_j - p_j = sum_{k>j} (a_k+p_k) x_{j,k} - sum_{k<j} (a_k+p_k)
/// x_{k,j} + 2 x_{j,d+1}`.
pub fn l_ap_equations(a: &[Rational], p: &[Rational]) -> Result<LinearSystem, AlgebraError> {
    let d = a.len();
    crate::multivector::check_dim(d)?;
    if p.len() != d {
        return Err(AlgebraError::LengthMismatch {
            expected: d,
            got: p.len(),
        });
    }
    let chart = CoordinateChart::new(d);
    let s = rational::add(a, p);
    let rows = (1..=d)
        .map(|j| {
            let mut row = rational::zeros(chart.len());
            for k in 1..=d {
                if k > j {
                    row[chart.index_of(j, k).expect("pair")] = s[k - 1].clone();
                } else if k < j {
                    row[chart.index_of(k, j).expect("pair")] = -&s[k - 1];
                }
            }
            row[chart.index_of(j, d + 1).expect("pair")] = rational::int(2);
            (row, &a[j - 1] - &p[j - 1])
        })
        .collect();
    Ok(LinearSystem::new(chart.len(), rows))
}

/// The unique element of `J_d` with first coordinate one whose chart
/// coordinates are `y`.
pub fn eta_inverse_lift(d: usize, y: &[Rational]) -> Result<ProjectiveRotor, GroupError> {
    crate::multivector::check_dim(d)?;
    let chart = CoordinateChart::new(d);
    if y.len() != chart.len() {
        return Err(AlgebraError::LengthMismatch {
            expected: chart.len(),
            got: y.len(),
        }
        .into());
    }
    let lambdas: TwoTermTargets = chart
        .pairs()
        .iter()
        .zip(y)
        .filter(|(_, c)| !c.is_zero())
        .map(|(&jk, c)| (jk, c.clone()))
        .collect();
    j_lift(d, &Rational::one(), &lambdas)
}

/// `x / x_1`, the `H_1` representative.
pub fn h1_normalize(x: &Multivector) -> Result<Multivector, EtaError> {
    let first = x.scalar_part();
    if first.is_zero() {
        return Err(EtaError::OnH0);
    }
    Ok(x.scale(&first.recip()))
}

/// Chart point of `x` (re-exported for symmetry with `eta_inverse_lift`).
pub fn eta(x: &Multivector) -> Result<RationalVector, EtaError> {
    eta_project(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};
    use crate::sample;
    use crate::text::parse_multivector;

    fn v(xs: &[i64]) -> RationalVector {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn tau_examples() {
        let d = 3;
        let mut r = sample::rng(5);
        let x = sample::random_multivector(&mut r, d, 6);
        assert_eq!(tau_ap(&x, &v(&[0, 0, 0]), &v(&[0, 0, 0])).unwrap(), x);
        let a = v(&[1, -2, 3]);
        let p = vec![frac(1, 2), int(0), int(7)];
        let expect = &Multivector::one(d)
            + &(&Multivector::pair(d) * &Multivector::embed(d, &rational::sub(&p, &a)).unwrap())
                .scale(&frac(1, 2));
        assert_eq!(tau_ap(&Multivector::one(d), &a, &p).unwrap(), expect);
        for _ in 0..20 {
            let x = sample::random_multivector(&mut r, d, 8);
            let a = sample::small_vector(&mut r, d, 5);
            let p = sample::small_vector(&mut r, d, 5);
            assert_eq!(tau_ap_inverse(&tau_ap(&x, &a, &p).unwrap(), &a, &p).unwrap(), x);
        }
    }

    #[test]
    fn f_ap_dimension_and_d2_basis() {
        let d = 2;
        let a = v(&[1, 2]);
        let p = v(&[3, -1]);
        let g = f_ap_generators(&a, &p).unwrap();
        let one = parse_multivector(d, "1 + e3e4e1 - 3/2 e3e4e2").unwrap();
        // (p2+a2) e1 - (p1+a1) e2 = e1 - 4 e2
        let e12 = parse_multivector(d, "e1e2 + 1/2 e3e4e1 - 2 e3e4e2").unwrap();
        assert_eq!(g, vec![one, e12]);
        assert_eq!(
            f_ap_subspace(&v(&[0, 0]), &v(&[0, 0])).unwrap(),
            AffineFlat::span(4, &[v(&[1, 0, 0, 0]), v(&[0, 1, 0, 0])])
        );
        let mut r = sample::rng(9);
        for d in 2..=5 {
            let a = sample::small_vector(&mut r, d, 6);
            let p = sample::small_vector(&mut r, d, 6);
            assert_eq!(f_ap_subspace(&a, &p).unwrap().dim(), Some(1 << (d - 1)));
            assert_eq!(l_ap_flat(&a, &p).unwrap().dim(), Some(d * (d - 1) / 2));
        }
    }

    #[test]
    fn l_ap_examples() {
        let l = l_ap_flat(&v(&[0, 0]), &v(&[0, 0])).unwrap();
        assert_eq!(l, AffineFlat::span(3, &[v(&[1, 0, 0])]));
        let sys = l_ap_equations(&v(&[0, 0]), &v(&[0, 0])).unwrap();
        let labels: Vec<String> = (0..3).map(|i| CoordinateChart::new(2).label(i)).collect();
        assert_eq!(sys.render(&labels), vec!["2x_{1,3} = 0", "2x_{2,3} = 0"]);

        let vv = v(&[3, -1]);
        let x = &Multivector::one(2)
            + &(&Multivector::pair(2) * &Multivector::embed(2, &vv).unwrap());
        let pt = eta_project(&x).unwrap();
        assert_eq!(pt, v(&[0, -3, 1]));
        assert!(l_ap_flat(&v(&[0, 0]), &rational::scale(&vv, &int(2)))
            .unwrap()
            .contains(&pt));

        let sys = l_ap_equations(&v(&[1, 0, 0]), &v(&[0, 1, 0])).unwrap();
        let labels: Vec<String> = (0..6).map(|i| CoordinateChart::new(3).label(i)).collect();
        assert_eq!(
            sys.render(&labels),
            vec![
                "x_{1,2} + 2x_{1,4} = 1",
                "-x_{1,2} + 2x_{2,4} = -1",
                "-x_{1,3} - x_{2,3} + 2x_{3,4} = 0",
            ]
        );
    }

    #[test]
    fn equations_match_flat() {
        let mut r = sample::rng(21);
        for d in 2..=5 {
            for _ in 0..8 {
                let a = sample::small_vector(&mut r, d, 6);
                let p = sample::small_vector(&mut r, d, 6);
                assert_eq!(
                    l_ap_equations(&a, &p).unwrap().solution_set(),
                    l_ap_flat(&a, &p).unwrap()
                );
            }
        }
    }

    #[test]
    fn eta_lift_roundtrip() {
        assert_eq!(
            eta_inverse_lift(3, &rational::zeros(6)).unwrap().value(),
            &Multivector::one(3)
        );
        let mut r = sample::rng(4);
        for d in 2..=4 {
            for _ in 0..5 {
                let x = sample::random_spun_plus(&mut r, d);
                let y = eta_project(x.value()).unwrap();
                let j = eta_inverse_lift(d, &y).unwrap();
                assert_eq!(j.value(), &h1_normalize(x.value()).unwrap());
                assert_eq!(eta_project(j.value()).unwrap(), y);
            }
        }
    }

    #[test]
    fn spin_images_lie_on_l_ap() {
        let mut r = sample::rng(8);
        for d in 2..=4 {
            let a = sample::small_vector(&mut r, d, 4);
            let p = sample::small_vector(&mut r, d, 4);
            let l = l_ap_flat(&a, &p).unwrap();
            for _ in 0..4 {
                let g = sample::random_spin_plus(&mut r, d);
                let t = tau_ap(g.value(), &a, &p).unwrap();
                assert!(l.contains(&eta_project(&t).unwrap()));
            }
        }
    }
}
