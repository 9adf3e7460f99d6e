use proptest::prelude::*;

use spun::flat::AffineFlat;
use spun::lap::{eta, eta_inverse_lift};
use spun::rational::{frac, Rational};
use spun::{parse_multivector, Blade, Multivector};

const DIM: usize = 3;

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| frac(n, d))
}

fn multivector(dim: usize) -> impl Strategy<Value = Multivector> {
    let masks = 1u32 << (dim + 2);
    prop::collection::vec((0..masks, rational()), 0..6).prop_map(move |terms| {
        Multivector::from_terms(dim, terms.into_iter().map(|(m, c)| (Blade::new(dim, m as u16), c)))
    })
}

fn vector(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(rational(), n)
}

fn flat(n: usize) -> impl Strategy<Value = AffineFlat> {
    (vector(n), prop::collection::vec(vector(n), 0..n)).prop_map(|(base, dirs)| AffineFlat::new(base, &dirs))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_is_associative(a in multivector(DIM), b in multivector(DIM), c in multivector(DIM)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn product_distributes(a in multivector(DIM), b in multivector(DIM), c in multivector(DIM)) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn display_parse_round_trip(a in multivector(DIM)) {
        let back = parse_multivector(DIM, &a.to_string()).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn conjugate_reverses_products(a in multivector(DIM), b in multivector(DIM)) {
        prop_assert_eq!((&a * &b).conjugate(), &b.conjugate() * &a.conjugate());
    }

    #[test]
    fn flat_contains_its_points(f in flat(4), s in vector(3)) {
        let mut p = f.base().unwrap().clone();
        for (d, t) in f.directions().iter().zip(&s) {
            for (x, y) in p.iter_mut().zip(d) {
                *x += y * t;
            }
        }
        prop_assert!(f.contains(&p));
        prop_assert_eq!(f.equations().solution_set(), f);
    }

    #[test]
    fn intersection_is_symmetric_and_contained(f in flat(4), g in flat(4)) {
        let fg = f.intersect(&g).unwrap();
        prop_assert_eq!(&fg, &g.intersect(&f).unwrap());
        prop_assert_eq!(&fg.intersect(&f).unwrap(), &fg);
        let h = f.hull(&g).unwrap();
        prop_assert_eq!(&h.intersect(&f).unwrap(), &f);
    }

    #[test]
    fn eta_inverts_the_lift(y in vector(DIM * (DIM + 1) / 2)) {
        let j = eta_inverse_lift(DIM, &y).unwrap();
        prop_assert_eq!(eta(j.value()).unwrap(), y);
    }
}
