//! Seeded random generation of exact test inputs.
//!
//! Every sampler takes an explicit RNG; `rng(seed)` gives the portable
//! ChaCha stream used throughout, so a seed reproduces the same values on
//! every platform and thread count.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::blade::{self, Blade};
use crate::multivector::Multivector;
use crate::rational::{self, Rational, RationalVector};
use crate::spin::{SpinElement, SpunElement};

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `p/q` with `|p| <= bound` and `1 <= q <= bound`.
pub fn small_rational(rng: &mut SampleRng, bound: i64) -> Rational {
    let p = rng.gen_range(-bound..=bound);
    let q = rng.gen_range(1..=bound);
    rational::frac(p, q)
}

pub fn small_vector(rng: &mut SampleRng, n: usize, bound: i64) -> RationalVector {
    (0..n).map(|_| small_rational(rng, bound)).collect()
}

/// Rational with numerator and denominator magnitudes below `2^bits`.
pub fn wide_rational(rng: &mut SampleRng, bits: u32) -> Rational {
    let limit = 1u64 << bits;
    let p = rng.gen_range(0..limit);
    let q = rng.gen_range(1..limit);
    let r = Rational::new(BigInt::from(p), BigInt::from(q));
    if rng.gen_bool(0.5) {
        -r
    } else {
        r
    }
}

/// Inverse stereographic projection `t -> (2t, |t|^2 - 1) / (|t|^2 + 1)`,
/// an exactly unit vector in `Q^{len(t)+1}`.
pub fn stereographic_unit(t: &[Rational]) -> RationalVector {
    let n2 = rational::norm_sq(t);
    let den = &n2 + Rational::one();
    let mut u: RationalVector = t
        .iter()
        .map(|x| x * Rational::from_integer(2.into()) / &den)
        .collect();
    u.push((&n2 - Rational::one()) / &den);
    u
}

pub fn random_unit(rng: &mut SampleRng, dim: usize) -> RationalVector {
    let t = small_vector(rng, dim - 1, 4);
    stereographic_unit(&t)
}

/// A rational unit vector in `Q^d` drawn from `seed`.
pub fn rational_unit_sample(dim: usize, seed: u64) -> RationalVector {
    assert!(dim >= 2, "need d >= 2");
    random_unit(&mut rng(seed), dim)
}

/// Product of `k` (even) random rational unit vectors.
pub fn random_spin(rng: &mut SampleRng, dim: usize, k: usize) -> SpinElement {
    let us: Vec<RationalVector> = (0..k).map(|_| random_unit(rng, dim)).collect();
    SpinElement::from_unit_vectors(dim, &us).expect("stereographic vectors are unit")
}

/// Random Spin element with a positive first coordinate.
pub fn random_spin_plus(rng: &mut SampleRng, dim: usize) -> SpinElement {
    loop {
        let k = 2 * rng.gen_range(1..=2);
        let g = random_spin(rng, dim, k);
        let first = g.value().scalar_part();
        if first.is_positive() {
            return g;
        }
        if first.is_negative() {
            return g.negate();
        }
    }
}

/// Random Spun element: 0, 2 or 4 unit vectors and a random translation.
pub fn random_spun(rng: &mut SampleRng, dim: usize) -> SpunElement {
    let k = 2 * rng.gen_range(0..=2);
    let gamma = random_spin(rng, dim, k);
    let v = small_vector(rng, dim, 5);
    SpunElement::from_parts(gamma, v).expect("length matches")
}

/// Random Spun element with a positive first coordinate.
pub fn random_spun_plus(rng: &mut SampleRng, dim: usize) -> SpunElement {
    loop {
        let x = random_spun(rng, dim);
        let first = x.value().scalar_part();
        if first.is_positive() {
            return x;
        }
        if first.is_negative() {
            return x.negate();
        }
    }
}

/// Sparse multivector over all `2^{d+2}` blades with up to `max_terms` terms.
pub fn random_multivector(rng: &mut SampleRng, dim: usize, max_terms: usize) -> Multivector {
    let n = rng.gen_range(1..=max_terms);
    let terms: Vec<(Blade, Rational)> = (0..n)
        .map(|_| {
            let mask = rng.gen_range(0..1u16 << (dim + 2));
            (Blade::new(dim, mask), small_rational(rng, 6))
        })
        .collect();
    Multivector::from_terms(dim, terms)
}

/// Nonzero element of `Z_d^0` made of `m`-terms only.
pub fn random_pure_grade_z0(rng: &mut SampleRng, dim: usize, m: u32) -> Multivector {
    let blades: Vec<Blade> = blade::z0_basis(dim)
        .into_iter()
        .filter(|b| b.grade() == m)
        .collect();
    random_combination(rng, dim, &blades)
}

/// Nonzero element of `Cl_k^0` (inside `X_d`) made of `m`-terms only.
pub fn random_pure_grade_even(rng: &mut SampleRng, dim: usize, k: usize, m: u32) -> Multivector {
    let blades: Vec<Blade> = blade::even_clifford_basis(dim, k)
        .into_iter()
        .filter(|b| b.grade() == m)
        .collect();
    random_combination(rng, dim, &blades)
}

fn random_combination(rng: &mut SampleRng, dim: usize, blades: &[Blade]) -> Multivector {
    assert!(!blades.is_empty(), "no blades of the requested grade");
    loop {
        let x = Multivector::from_terms(
            dim,
            blades.iter().filter_map(|&b| {
                if rng.gen_bool(0.6) {
                    Some((b, small_rational(rng, 5)))
                } else {
                    None
                }
            }),
        );
        if !x.is_zero() {
            return x;
        }
    }
}

/// Random `b, q` with `|a - b| = |p - q| > 0`, built by applying a random
/// proper rigid motion taking `a` to `p`.
pub fn distance_matched(
    rng: &mut SampleRng,
    a: &[Rational],
    p: &[Rational],
) -> (RationalVector, RationalVector) {
    let d = a.len();
    loop {
        let b = rational::add(a, &small_vector(rng, d, 4));
        if b == a {
            continue;
        }
        let k = 2 * rng.gen_range(0..=2);
        let gamma = random_spin(rng, d, k);
        // q = p + gamma(b - a)
        let q = rational::add(p, &gamma.rotate(&rational::sub(&b, a)).expect("spin rotates"));
        if !rational::norm_sq(&rational::sub(&b, a)).is_zero() {
            return (b, q);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn stereographic_examples() {
        assert_eq!(stereographic_unit(&[int(0)]), vec![int(0), int(-1)]);
        assert_eq!(stereographic_unit(&[int(0), int(0)]), vec![int(0), int(0), int(-1)]);
        assert_eq!(stereographic_unit(&[int(1)]), vec![int(1), int(0)]);
        assert_eq!(
            stereographic_unit(&[int(1), int(1)]),
            vec![frac(2, 3), frac(2, 3), frac(1, 3)]
        );
    }

    #[test]
    fn seeded_units_are_unit_and_reproducible() {
        for d in 2..=6 {
            for seed in 0..20 {
                let u = rational_unit_sample(d, seed);
                assert_eq!(u.len(), d);
                assert!(rational::norm_sq(&u).is_one());
                assert_eq!(u, rational_unit_sample(d, seed));
            }
        }
    }

    #[test]
    fn matched_pairs_have_equal_distance() {
        let mut r = rng(3);
        for d in 2..=4 {
            let a = small_vector(&mut r, d, 3);
            let p = small_vector(&mut r, d, 3);
            let (b, q) = distance_matched(&mut r, &a, &p);
            assert_eq!(
                rational::norm_sq(&rational::sub(&a, &b)),
                rational::norm_sq(&rational::sub(&p, &q))
            );
        }
    }
}
