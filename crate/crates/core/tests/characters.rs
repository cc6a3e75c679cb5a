//! Tableau characters against highest-weight eigenvalues under `l_mi = λ_i − i + 1`.

use drinfeld_core::algebra::hw_eigenvalue;
use drinfeld_core::drinfeld::{gt_generator, DrinfeldSet};
use drinfeld_core::rational::rat;
use drinfeld_core::{Rational, Tableau};
use proptest::prelude::*;

fn weight(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-20i64..=20, 1i64..=6).prop_map(|(p, q)| rat(p, q)), n)
}

fn distinct_rows(l: &Tableau) -> bool {
    !l.is_critical()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn gamma_is_the_central_character(n in 1usize..=3, seed in weight(3)) {
        let lambda = &seed[..n];
        let l = Tableau::from_weight(lambda).unwrap();
        prop_assume!(distinct_rows(&l));
        for m in 1..=n {
            for k in 1..=m {
                let c = gt_generator(n, m, k).unwrap();
                prop_assert_eq!(l.gamma_value(m, k as u32).unwrap(), hw_eigenvalue(&c, lambda).unwrap());
            }
        }
    }

    #[test]
    fn alpha_is_the_principal_minor_character(n in 1usize..=3, seed in weight(3)) {
        let lambda = &seed[..n];
        let l = Tableau::from_weight(lambda).unwrap();
        let set = DrinfeldSet::new(n).unwrap();
        for m in 1..=n {
            let alpha = l.alpha_polynomial(m).unwrap();
            let a = set.a(m);
            prop_assert_eq!(a.degree(), alpha.degree());
            for d in 0..=m {
                prop_assert_eq!(hw_eigenvalue(&a.coefficient(d), lambda).unwrap(), alpha.coefficient(d));
            }
        }
    }
}

#[test]
fn weight_tableau_examples() {
    // c_21 = E_11 + E_22 acts by λ_1 + λ_2
    let lambda = [rat(3, 1), rat(0, 1)];
    let l = Tableau::from_weight(&lambda).unwrap();
    assert_eq!(l.row(2), &[rat(3, 1), rat(-1, 1)]);
    assert_eq!(l.gamma_value(2, 1).unwrap(), rat(3, 1));
    assert_eq!(hw_eigenvalue(&gt_generator(2, 2, 1).unwrap(), &lambda).unwrap(), rat(3, 1));
}
