mod common;

use common::*;
use qschur_core::g2::build_xn;
use qschur_core::hecke::HeckeElement;
use qschur_core::schur::SchurAlgebra;
use qschur_core::tmodule::{bar_t, TElement};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn products_of_standard_elements_stay_in_the_algebra() {
    let ws = build_xn(1).unwrap();
    let s = SchurAlgebra::new(&ws);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let a = s.std(rng.gen_range(0..s.dim()));
        let b = s.std(rng.gen_range(0..s.dim()));
        let c = s.std(rng.gen_range(0..s.dim()));
        let ab = a.compose(&b);
        assert!(ab.is_member(&ws));
        assert_eq!(ab.compose(&c), a.compose(&b.compose(&c)));
        let coords = s.coords(&ab).unwrap();
        assert_eq!(s.from_coords(&coords), ab);
    }
}

#[test]
fn schur_action_commutes_with_hecke_action() {
    for ws in [b2_set(), a2_set(), build_xn(1).unwrap()] {
        let s = SchurAlgebra::new(&ws);
        let g = ws.group();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..30 {
            let eta = s.std(rng.gen_range(0..s.dim()));
            let mut v = TElement::zero();
            v.add_term(rng.gen_range(0..ws.len()), &small_poly(&mut rng));
            let h = HeckeElement::term(rng.gen_range(0..g.order()), small_poly(&mut rng));
            assert_eq!(eta.apply(&v.act(&ws, &h)), eta.apply(&v).act(&ws, &h));
        }
    }
}

#[test]
fn bar_compatibility_on_b2() {
    let ws = b2_set();
    let s = SchurAlgebra::new(&ws);
    let g = ws.group();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let eta = s.std(rng.gen_range(0..s.dim())).scale(&small_poly(&mut rng));
        let mut v = TElement::zero();
        v.add_term(rng.gen_range(0..ws.len()), &small_poly(&mut rng));
        let h = HeckeElement::term(rng.gen_range(0..g.order()), small_poly(&mut rng));
        let lhs = bar_t(&ws, &eta.apply(&v).act(&ws, &h));
        let rhs = s.bar(&eta).unwrap().apply(&bar_t(&ws, &v)).act(&ws, &h.bar(g));
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn standard_basis_agrees_with_double_coset_operators() {
    for ws in [b2_set(), a2_set(), build_xn(1).unwrap()] {
        let s = SchurAlgebra::new(&ws);
        for n in 0..s.dim() {
            assert_eq!(s.std(n), s.std_via_hecke(n).unwrap(), "xi {}", n);
        }
    }
}
