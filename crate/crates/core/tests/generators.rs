//! Degrees, leading coefficients and interpolation of the Drinfeld generators.

use drinfeld_core::drinfeld::{interpolate, DrinfeldKind, DrinfeldSet};
use drinfeld_core::rational::rat;
use drinfeld_core::{AlgebraElement, Rational};
use proptest::prelude::*;

#[test]
fn degrees_and_leading_coefficients() {
    for n in 1..=3 {
        let set = DrinfeldSet::new(n).unwrap();
        for m in 1..=n {
            assert_eq!(set.a(m).degree(), Some(m));
            assert_eq!(set.a(m).leading_coefficient(), Some(&AlgebraElement::one(n)));
        }
        for m in 1..n {
            assert_eq!(set.b(m).degree(), Some(m - 1));
            assert_eq!(set.c(m).degree(), Some(m - 1));
            assert_eq!(set.d(m).degree(), Some(m));
            assert_eq!(set.b(m).leading_coefficient(), Some(&AlgebraElement::generator(n, m, m + 1).unwrap()));
            assert_eq!(set.c(m).leading_coefficient(), Some(&AlgebraElement::generator(n, m + 1, m).unwrap()));
            for kind in DrinfeldKind::ALL {
                assert_eq!(set.get(kind, m).unwrap().degree(), Some(kind.degree(m)));
            }
        }
    }
}

fn distinct_pair() -> impl Strategy<Value = (Rational, Rational)> {
    ((-30i64..=30, 1i64..=7), (-30i64..=30, 1i64..=7))
        .prop_map(|((p, q), (r, s))| (rat(p, q), rat(r, s)))
        .prop_filter("distinct", |(x, y)| x != y)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn rank_three_interpolation((x, y) in distinct_pair()) {
        let set = DrinfeldSet::new(3).unwrap();
        let points = [-x, -y];
        for poly in [set.b(2), set.c(2)] {
            let values: Vec<AlgebraElement> = points.iter().map(|p| poly.evaluate_at(p)).collect();
            prop_assert_eq!(&interpolate(&points, &values, 1).unwrap(), poly);
        }
    }

    #[test]
    fn principal_minor_interpolation(pts in prop::collection::btree_set((-40i64..=40, 1i64..=5).prop_map(|(p, q)| rat(p, q)), 4)) {
        let set = DrinfeldSet::new(3).unwrap();
        let points: Vec<Rational> = pts.into_iter().collect();
        let values: Vec<AlgebraElement> = points.iter().map(|p| set.a(3).evaluate_at(p)).collect();
        prop_assert_eq!(&interpolate(&points, &values, 3).unwrap(), set.a(3));
    }
}
