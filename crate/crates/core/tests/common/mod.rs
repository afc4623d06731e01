#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use qschur_core::hecke::{bar_basis, HeckeElement};
use qschur_core::laurent::LaurentPoly;
use qschur_core::linalg::{Echelon, Rat, SparseVec};
use qschur_core::rootdata::{CartanDatum, CartanType, ShiftedWeight};
use qschur_core::schur::SchurAlgebra;
use qschur_core::weightsets::WeightSet;
use qschur_core::weylgroup::WeylGroup;

pub fn group(t: CartanType) -> WeylGroup {
    WeylGroup::generate(&CartanDatum::new(t)).unwrap()
}

pub fn pairing_set(t: CartanType, seeds: &[&[i64]]) -> WeightSet {
    let seeds: Vec<ShiftedWeight> = seeds.iter().map(|s| ShiftedWeight(s.to_vec())).collect();
    WeightSet::from_seeds(&CartanDatum::new(t), &seeds, 1000).unwrap()
}

pub fn g2_set(seeds: &[(i64, i64, i64)]) -> WeightSet {
    let seeds: Vec<ShiftedWeight> =
        seeds.iter().map(|&(a, b, c)| ShiftedWeight::from_g2_delta(a, b, c).unwrap()).collect();
    WeightSet::from_seeds(&CartanDatum::new(CartanType::G2), &seeds, 12).unwrap()
}

/// B2 with a regular orbit and a singleton.
pub fn b2_set() -> WeightSet {
    pairing_set(CartanType::B(2), &[&[-1, -1], &[0, 0]])
}

/// A2 with a regular orbit, a subregular orbit and a singleton.
pub fn a2_set() -> WeightSet {
    pairing_set(CartanType::A(2), &[&[-1, -1], &[0, -1], &[0, 0]])
}

/// Unknowns are `(key, degree)`; each equation is the coefficient of one
/// `(basis element, exponent)` in `const + sum x_u * vec_u`.
pub struct AffineSystem {
    unknowns: Vec<(usize, i32)>,
    columns: Vec<BTreeMap<(usize, i32), BigInt>>,
    constant: BTreeMap<(usize, i32), BigInt>,
}

fn add_poly(target: &mut BTreeMap<(usize, i32), BigInt>, key: usize, p: &LaurentPoly) {
    for (e, c) in p.terms() {
        *target.entry((key, e)).or_insert_with(BigInt::zero) += c;
    }
}

impl AffineSystem {
    pub fn new() -> Self {
        AffineSystem { unknowns: Vec::new(), columns: Vec::new(), constant: BTreeMap::new() }
    }

    pub fn add_constant(&mut self, key: usize, p: &LaurentPoly) {
        add_poly(&mut self.constant, key, p);
    }

    pub fn add_unknown(&mut self, name: (usize, i32), vec: &[(usize, LaurentPoly)]) {
        let mut col = BTreeMap::new();
        for (k, p) in vec {
            add_poly(&mut col, *k, p);
        }
        self.unknowns.push(name);
        self.columns.push(col);
    }

    /// The unique solution, or `None` if the system is inconsistent or
    /// underdetermined.
    pub fn solve(&self) -> Option<BTreeMap<(usize, i32), Rat>> {
        let m = self.unknowns.len();
        let mut rows: BTreeMap<(usize, i32), SparseVec> = BTreeMap::new();
        for (u, col) in self.columns.iter().enumerate() {
            for (eq, c) in col {
                rows.entry(*eq).or_default().add_to(u, &Rat::from_integer(c.clone()));
            }
        }
        for (eq, c) in &self.constant {
            rows.entry(*eq).or_default().add_to(m, &Rat::from_integer(c.clone()));
        }
        let mut e = Echelon::new();
        for (_, r) in rows {
            e.insert(r);
        }
        if e.rows().any(|(p, _)| p == m) || e.rank() != m {
            return None;
        }
        let mut out = BTreeMap::new();
        for (p, r) in e.rows() {
            out.insert(self.unknowns[p], -r.get(m));
        }
        Some(out)
    }
}

fn to_polys(sol: &BTreeMap<(usize, i32), Rat>) -> Option<BTreeMap<usize, LaurentPoly>> {
    let mut out: BTreeMap<usize, LaurentPoly> = BTreeMap::new();
    for ((k, d), x) in sol {
        if !x.is_integer() {
            return None;
        }
        let c = x.to_integer();
        if c.is_zero() {
            continue;
        }
        *out.entry(*k).or_default() += &LaurentPoly::monomial(c, *d);
    }
    out.retain(|_, p| !p.is_zero());
    Some(out)
}

fn hecke_vec(h: &HeckeElement) -> Vec<(usize, LaurentPoly)> {
    h.terms().map(|(w, c)| (w, c.clone())).collect()
}

/// `C_w` as the unique bar-invariant `H_w + sum_{y<w} qZ[q] H_y`, found by a
/// linear solve over the rationals with degrees bounded by `l(w) - l(y)`.
pub fn kl_by_bar_solve(g: &WeylGroup, w: usize) -> Option<HeckeElement> {
    let mut sys = AffineSystem::new();
    let bw = bar_basis(g, w).sub(&HeckeElement::basis(w));
    for (z, c) in bw.terms() {
        sys.add_constant(z, c);
    }
    let lw = g.length(w) as i32;
    for y in (0..g.order()).filter(|&y| y != w && g.bruhat_leq(y, w)) {
        let by = bar_basis(g, y);
        for d in 1..=lw - g.length(y) as i32 {
            let col = by.shift(-d).sub(&HeckeElement::basis(y).shift(d));
            sys.add_unknown((y, d), &hecke_vec(&col));
        }
    }
    let sol = to_polys(&sys.solve()?)?;
    let mut c = HeckeElement::basis(w);
    for (y, p) in sol {
        c.add_term(y, &p);
    }
    Some(c)
}

/// Standard coordinates of the unique bar-invariant element of
/// `[phi_n] + sum_{y<g} qZ[q] [phi_y]`, solved with degrees up to `l(w0) + 1`.
pub fn canonical_by_bar_solve(s: &SchurAlgebra, n: usize) -> Option<BTreeMap<usize, LaurentPoly>> {
    let ws = s.ws();
    let g = ws.group();
    let t = ws.xi()[n];
    let bar_coords = |m: usize| -> Vec<(usize, LaurentPoly)> {
        let b = s.bar(&s.std(m)).unwrap();
        s.coords(&b).unwrap().into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
    };
    let mut sys = AffineSystem::new();
    for (k, c) in bar_coords(n) {
        sys.add_constant(k, &c);
    }
    sys.add_constant(n, &LaurentPoly::constant(-1));
    let top = g.length(g.longest()) as i32 + 1;
    for (m, u) in ws.xi().iter().enumerate() {
        if m == n || u.gamma != t.gamma || u.nu != t.nu || !g.bruhat_leq(u.g, t.g) {
            continue;
        }
        let bm = bar_coords(m);
        for d in 1..=top {
            let mut col: Vec<(usize, LaurentPoly)> = bm.iter().map(|(k, c)| (*k, c.shift(-d))).collect();
            col.push((m, LaurentPoly::monomial(-1, d)));
            sys.add_unknown((m, d), &col);
        }
    }
    let mut sol = to_polys(&sys.solve()?)?;
    sol.insert(n, LaurentPoly::one());
    Some(sol)
}

/// A small deterministic Laurent polynomial with coefficients in `-2..=2`.
pub fn small_poly<R: rand::Rng>(rng: &mut R) -> LaurentPoly {
    let k = rng.gen_range(1..=2);
    LaurentPoly::from_terms((0..k).map(|_| (rng.gen_range(-2..=2), rng.gen_range(-2i64..=2))))
}

pub fn as_i64(x: &BigInt) -> i64 {
    x.to_i64().unwrap()
}
