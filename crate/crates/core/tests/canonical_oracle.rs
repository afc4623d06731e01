mod common;

use common::*;
use qschur_core::g2::build_xn;
use qschur_core::schur::SchurAlgebra;
use qschur_core::weightsets::WeightSet;

fn uniqueness_solve_reproduces_table(ws: &WeightSet) {
    let s = SchurAlgebra::new(ws);
    let table = s.canonical_table().unwrap();
    for n in 0..s.dim() {
        let oracle = canonical_by_bar_solve(&s, n).expect("unique solution");
        assert_eq!(oracle, table[n], "xi {}", n);
    }
}

#[test]
fn g2_x1() {
    uniqueness_solve_reproduces_table(&build_xn(1).unwrap());
}

#[test]
fn b2_regular_and_singleton() {
    uniqueness_solve_reproduces_table(&b2_set());
}

#[test]
fn a2_three_orbits() {
    uniqueness_solve_reproduces_table(&a2_set());
}

#[test]
fn canonical_differs_from_standard_somewhere() {
    let ws = build_xn(1).unwrap();
    let s = SchurAlgebra::new(&ws);
    let table = s.canonical_table().unwrap();
    assert!(table.iter().any(|m| m.len() > 1));
    for (n, m) in table.iter().enumerate() {
        for (k, c) in m {
            if *k != n {
                assert!(c.is_in_q_zq(), "xi {} coefficient at {} is {}", n, k, c);
            }
        }
    }
}
