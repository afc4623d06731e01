use num_bigint::BigInt;
use proptest::prelude::*;
use qschur_core::laurent::LaurentPoly;
use qschur_core::linalg::ratio;

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-20i64..=20, -6i32..=6), 0..6)
        .prop_map(|ts| LaurentPoly::from_terms(ts.into_iter().map(|(c, e)| (e, c))))
}

proptest! {
    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, LaurentPoly::zero());
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
    }

    #[test]
    fn bar_is_a_ring_involution(a in poly(), b in poly()) {
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        prop_assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
    }

    #[test]
    fn shift_is_multiplication_by_q_power(a in poly(), k in -5i32..=5) {
        prop_assert_eq!(a.shift(k), &a * &LaurentPoly::q_pow(k));
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly(), b in poly(), n in 1i64..=7, d in 1i64..=7) {
        let q = ratio(n, d);
        let ev = |p: &LaurentPoly| p.eval(&q).unwrap();
        prop_assert_eq!(ev(&(&a * &b)), ev(&a) * ev(&b));
        prop_assert_eq!(ev(&(&a + &b)), ev(&a) + ev(&b));
        prop_assert_eq!(BigInt::from(a.eval_one()), a.eval(&ratio(1, 1)).unwrap().to_integer());
    }

    #[test]
    fn display_parses_back(a in poly()) {
        prop_assert_eq!(LaurentPoly::parse(&a.to_string()).unwrap(), a);
    }
}
