//! The Iwahori-Hecke algebra over `Z[q, q^-1]` with quadratic relation
//! `(H_k - q^-1)(H_k + q) = 0`, and its Kazhdan-Lusztig bases.
//!
//! KL polynomials use the normalization `C_w = H_w + sum_{y<w} p_{y,w} H_y`
//! with `p_{y,w} in qZ[q]`, so `C_s = H_s + q`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::weylgroup::{GenSet, WeylGroup};

/// A finite sum `sum_w c_w H_w`, keyed by group index.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct HeckeElement {
    coeffs: BTreeMap<usize, LaurentPoly>,
}

impl HeckeElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::basis(0)
    }

    /// `H_w`.
    pub fn basis(w: usize) -> Self {
        Self::term(w, LaurentPoly::one())
    }

    pub fn term(w: usize, c: LaurentPoly) -> Self {
        let mut h = Self::zero();
        h.add_term(w, &c);
        h
    }

    pub fn from_terms<I: IntoIterator<Item = (usize, LaurentPoly)>>(it: I) -> Self {
        let mut h = Self::zero();
        for (w, c) in it {
            h.add_term(w, &c);
        }
        h
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, w: usize) -> LaurentPoly {
        self.coeffs.get(&w).cloned().unwrap_or_default()
    }

    pub fn coeff_ref(&self, w: usize) -> Option<&LaurentPoly> {
        self.coeffs.get(&w)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &LaurentPoly)> + '_ {
        self.coeffs.iter().map(|(w, c)| (*w, c))
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn add_term(&mut self, w: usize, c: &LaurentPoly) {
        self.add_scaled_term(w, c, 0);
    }

    fn add_scaled_term(&mut self, w: usize, c: &LaurentPoly, shift: i32) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(w).or_default();
        e.add_scaled(c, &BigInt::one(), shift);
        if e.is_zero() {
            self.coeffs.remove(&w);
        }
    }

    /// `self += q^shift * c * other`.
    pub fn add_scaled(&mut self, other: &HeckeElement, c: &LaurentPoly, shift: i32) {
        for (w, x) in &other.coeffs {
            let p = x * c;
            self.add_scaled_term(*w, &p, shift);
        }
    }

    pub fn add(&self, other: &HeckeElement) -> HeckeElement {
        let mut out = self.clone();
        out.add_scaled(other, &LaurentPoly::one(), 0);
        out
    }

    pub fn sub(&self, other: &HeckeElement) -> HeckeElement {
        let mut out = self.clone();
        out.add_scaled(other, &LaurentPoly::constant(-1), 0);
        out
    }

    pub fn scale(&self, c: &LaurentPoly) -> HeckeElement {
        let mut out = Self::zero();
        out.add_scaled(self, c, 0);
        out
    }

    pub fn shift(&self, k: i32) -> HeckeElement {
        HeckeElement { coeffs: self.coeffs.iter().map(|(w, c)| (*w, c.shift(k))).collect() }
    }

    /// Right multiplication by `H_k`.
    pub fn mul_gen(&self, group: &WeylGroup, k: usize) -> HeckeElement {
        let mut out = Self::zero();
        let qq = LaurentPoly::qinv_minus_q();
        for (&w, c) in &self.coeffs {
            let ws = group.rmul_gen(w, k);
            out.add_term(ws, c);
            if group.length(ws) < group.length(w) {
                out.add_term(w, &(c * &qq));
            }
        }
        out
    }

    /// Left multiplication by `H_k`.
    pub fn lmul_gen(&self, group: &WeylGroup, k: usize) -> HeckeElement {
        let mut out = Self::zero();
        let qq = LaurentPoly::qinv_minus_q();
        for (&w, c) in &self.coeffs {
            let sw = group.lmul_gen(w, k);
            out.add_term(sw, c);
            if group.length(sw) < group.length(w) {
                out.add_term(w, &(c * &qq));
            }
        }
        out
    }

    /// Right multiplication by `H_w`.
    pub fn mul_basis(&self, group: &WeylGroup, w: usize) -> HeckeElement {
        group.word(w).iter().fold(self.clone(), |acc, &k| acc.mul_gen(group, k as usize))
    }

    pub fn mul(&self, group: &WeylGroup, other: &HeckeElement) -> HeckeElement {
        let mut out = Self::zero();
        for (&y, c) in &other.coeffs {
            out.add_scaled(&self.mul_basis(group, y), c, 0);
        }
        out
    }

    /// The bar involution: `q -> q^-1`, `H_w -> H_{w^-1}^-1`.
    pub fn bar(&self, group: &WeylGroup) -> HeckeElement {
        let mut out = Self::zero();
        for (&w, c) in &self.coeffs {
            out.add_scaled(&bar_basis(group, w), &c.bar(), 0);
        }
        out
    }

    pub fn is_bar_invariant(&self, group: &WeylGroup) -> bool {
        self.bar(group) == *self
    }

    /// Terms rendered as `c*H[s1*s2]`, highest length first.
    pub fn render(&self, group: &WeylGroup) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut ws: Vec<usize> = self.coeffs.keys().copied().collect();
        ws.sort_by_key(|&w| (core::cmp::Reverse(group.length(w)), w));
        let parts: Vec<String> =
            ws.iter().map(|&w| format!("({})*H[{}]", self.coeffs[&w], group.render(w))).collect();
        parts.join(" + ")
    }
}

/// `bar(H_w)`, computed as the product of `H_k + (q - q^-1)` along a reduced word.
pub fn bar_basis(group: &WeylGroup, w: usize) -> HeckeElement {
    let corr = LaurentPoly::qinv_minus_q().bar();
    let mut acc = HeckeElement::one();
    for &k in group.word(w) {
        let mut next = acc.mul_gen(group, k as usize);
        next.add_scaled(&acc, &corr, 0);
        acc = next;
    }
    acc
}

/// `H_Y = sum_{w in Y} q^{-l(w)} H_w`.
pub fn subset_sum<I: IntoIterator<Item = usize>>(group: &WeylGroup, ys: I) -> HeckeElement {
    let mut h = HeckeElement::zero();
    for w in ys {
        h.add_term(w, &LaurentPoly::q_pow(-(group.length(w) as i32)));
    }
    h
}

/// `x_J = sum_{w in W_J} q^{l(w_J) - l(w)} H_w`.
pub fn q_symmetrizer(group: &WeylGroup, j: GenSet) -> HeckeElement {
    let p = group.parabolic(j);
    let top = group.length(p.longest) as i32;
    HeckeElement::from_terms(
        p.elements.iter().map(|&w| (w, LaurentPoly::q_pow(top - group.length(w) as i32))),
    )
}

/// Memoized KL basis elements `C_w`.
///
/// Filling needs `&mut self`; once filled, lookups are read-only and the
/// table can be shared.
#[derive(Debug, Clone)]
pub struct KlTable {
    elts: Vec<Option<HeckeElement>>,
}

impl KlTable {
    pub fn new(group: &WeylGroup) -> Self {
        KlTable { elts: vec![None; group.order()] }
    }

    /// A table with every `C_w` filled.
    pub fn full(group: &WeylGroup) -> Self {
        let mut t = Self::new(group);
        for w in 0..group.order() {
            t.ensure(group, w);
        }
        t
    }

    pub fn is_filled(&self, w: usize) -> bool {
        self.elts[w].is_some()
    }

    pub fn ensure(&mut self, group: &WeylGroup, w: usize) {
        if self.elts[w].is_some() {
            return;
        }
        let c = if w == 0 {
            HeckeElement::one()
        } else {
            let s = group.left_descents(w).0.trailing_zeros() as usize;
            let w1 = group.lmul_gen(w, s);
            self.ensure(group, w1);
            let cw1 = self.elts[w1].clone().expect("filled above");
            let mut c = cw1.lmul_gen(group, s);
            c.add_scaled(&cw1, &LaurentPoly::q_pow(1), 0);
            for (z, p) in cw1.terms() {
                if z == w1 || !group.left_descents(z).contains(s) {
                    continue;
                }
                let mu = p.coeff(1);
                if mu == BigInt::from(0) {
                    continue;
                }
                self.ensure(group, z);
                let cz = self.elts[z].as_ref().expect("filled above");
                c.add_scaled(cz, &LaurentPoly::constant(-mu), 0);
            }
            c
        };
        self.elts[w] = Some(c);
    }

    /// `C_w`; the entry must have been filled.
    pub fn get(&self, w: usize) -> &HeckeElement {
        self.elts[w].as_ref().expect("KL table entry not filled")
    }

    pub fn element(&mut self, group: &WeylGroup, w: usize) -> HeckeElement {
        self.ensure(group, w);
        self.get(w).clone()
    }

    /// `p_{y,w}`, the coefficient of `H_y` in `C_w`.
    pub fn poly(&mut self, group: &WeylGroup, y: usize, w: usize) -> LaurentPoly {
        self.ensure(group, w);
        self.get(w).coeff(y)
    }

    /// `mu(y, w)`, the coefficient of `q` in `p_{y,w}`.
    pub fn mu(&mut self, group: &WeylGroup, y: usize, w: usize) -> BigInt {
        self.poly(group, y, w).coeff(1)
    }

    /// The classical KL polynomial `P_{y,w}(t)` returned as a polynomial
    /// whose exponent `i` is the power of `t`, using
    /// `p_{y,w} = q^{l(w)-l(y)} P_{y,w}(q^-2)`.
    pub fn classical(&mut self, group: &WeylGroup, y: usize, w: usize) -> LaurentPoly {
        classical_from_normalized(&self.poly(group, y, w), group.length(w) as i32 - group.length(y) as i32)
    }

    /// `C^J_w = C_{w_J w}` for a minimal representative `w` of `W_J w`,
    /// checked against the defining properties.
    pub fn parabolic_element(&mut self, group: &WeylGroup, j: GenSet, w: usize) -> Result<HeckeElement> {
        self.parabolic_coeffs(group, j, w)?;
        let big = group.mul(group.parabolic(j).longest, w);
        Ok(self.get(big).clone())
    }

    /// The coefficients `c_y` with `C^J_w = sum_y c_y x_J H_y`, `y` minimal
    /// coset representatives.
    pub fn parabolic_coeffs(
        &mut self,
        group: &WeylGroup,
        j: GenSet,
        w: usize,
    ) -> Result<BTreeMap<usize, LaurentPoly>> {
        if group.left_descents(w).intersects(j) {
            return Err(Error::NotMinimalCosetRep(format!(
                "{} has a left descent in {}",
                group.render(w),
                j
            )));
        }
        let p = group.parabolic(j);
        let top = p.longest;
        let big = group.mul(top, w);
        let c = self.element(group, big);
        let mut coeffs = BTreeMap::new();
        for &y in &p.min_reps {
            let cy = c.coeff(group.mul(top, y));
            if !cy.is_zero() {
                coeffs.insert(y, cy);
            }
        }
        let xj = q_symmetrizer(group, j);
        let mut rebuilt = HeckeElement::zero();
        for (&y, cy) in &coeffs {
            rebuilt.add_scaled(&xj.mul_basis(group, y), cy, 0);
        }
        let fail = |what: &str| Error::CanonicalCheck(format!("C^{}_{}: {}", j, group.render(w), what));
        if rebuilt != c {
            return Err(fail("not in the span of x_J H_y"));
        }
        if !coeffs.get(&w).is_some_and(LaurentPoly::is_one) {
            return Err(fail("leading coefficient is not 1"));
        }
        if coeffs.iter().any(|(&y, cy)| y != w && !cy.is_in_q_zq()) {
            return Err(fail("lower coefficient outside qZ[q]"));
        }
        if !c.is_bar_invariant(group) {
            return Err(fail("not bar invariant"));
        }
        Ok(coeffs)
    }
}

/// Converts `p_{y,w}` with `d = l(w) - l(y)` to classical `P_{y,w}(t)`.
pub fn classical_from_normalized(p: &LaurentPoly, d: i32) -> LaurentPoly {
    LaurentPoly::from_terms(p.terms().map(|(e, c)| ((d - e) / 2, c.clone())))
}
