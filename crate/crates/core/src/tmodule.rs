//! The right Hecke module `T_f` with basis `v_i`, `i` in a weight set.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::hecke::{q_symmetrizer, HeckeElement, KlTable};
use crate::laurent::LaurentPoly;
use crate::rootdata::Descent;
use crate::weightsets::WeightSet;

/// A vector `sum_i c_i v_i`, keyed by element index of a [`WeightSet`].
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct TElement {
    coeffs: BTreeMap<usize, LaurentPoly>,
}

impl TElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `v_i`.
    pub fn basis(i: usize) -> Self {
        Self::term(i, LaurentPoly::one())
    }

    pub fn term(i: usize, c: LaurentPoly) -> Self {
        let mut v = Self::zero();
        v.add_term(i, &c);
        v
    }

    pub fn from_terms<I: IntoIterator<Item = (usize, LaurentPoly)>>(it: I) -> Self {
        let mut v = Self::zero();
        for (i, c) in it {
            v.add_term(i, &c);
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> LaurentPoly {
        self.coeffs.get(&i).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &LaurentPoly)> + '_ {
        self.coeffs.iter().map(|(i, c)| (*i, c))
    }

    pub fn add_term(&mut self, i: usize, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(i).or_default();
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&i);
        }
    }

    pub fn add_scaled(&mut self, other: &TElement, c: &LaurentPoly) {
        for (&i, x) in &other.coeffs {
            self.add_term(i, &(x * c));
        }
    }

    pub fn add(&self, other: &TElement) -> TElement {
        let mut out = self.clone();
        out.add_scaled(other, &LaurentPoly::one());
        out
    }

    pub fn sub(&self, other: &TElement) -> TElement {
        let mut out = self.clone();
        out.add_scaled(other, &LaurentPoly::constant(-1));
        out
    }

    pub fn scale(&self, c: &LaurentPoly) -> TElement {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn shift(&self, k: i32) -> TElement {
        TElement { coeffs: self.coeffs.iter().map(|(i, c)| (*i, c.shift(k))).collect() }
    }

    /// Coefficientwise bar, `q -> q^-1`, with no action on the basis.
    pub fn bar_coeffs(&self) -> TElement {
        TElement { coeffs: self.coeffs.iter().map(|(i, c)| (*i, c.bar())).collect() }
    }

    /// `v H_k`.
    pub fn act_gen(&self, ws: &WeightSet, k: usize) -> TElement {
        let mut out = TElement::zero();
        let qq = LaurentPoly::qinv_minus_q();
        for (&i, c) in &self.coeffs {
            match ws.descent(i, k) {
                Descent::Fixed => out.add_term(i, &c.shift(-1)),
                Descent::Up => out.add_term(ws.reflect(i, k), c),
                Descent::Down => {
                    out.add_term(ws.reflect(i, k), c);
                    out.add_term(i, &(c * &qq));
                }
            }
        }
        out
    }

    /// `v H_w`.
    pub fn act_basis(&self, ws: &WeightSet, w: usize) -> TElement {
        ws.group().word(w).iter().fold(self.clone(), |acc, &k| acc.act_gen(ws, k as usize))
    }

    /// `v h`.
    pub fn act(&self, ws: &WeightSet, h: &HeckeElement) -> TElement {
        let mut out = TElement::zero();
        for (w, c) in h.terms() {
            out.add_scaled(&self.act_basis(ws, w), c);
        }
        out
    }

    /// Specialization at `q = 1`, as integer coefficients.
    pub fn eval_one(&self) -> BTreeMap<usize, BigInt> {
        self.coeffs
            .iter()
            .map(|(i, c)| (*i, c.eval_one()))
            .filter(|(_, c)| *c != BigInt::from(0))
            .collect()
    }

    pub fn render(&self, ws: &WeightSet) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let parts: Vec<String> =
            self.coeffs.iter().map(|(i, c)| format!("({})*v{}", c, ws.render(*i))).collect();
        parts.join(" + ")
    }
}

/// `Omega`: the image of `v` in `x_gamma H` for each linkage class `gamma`
/// (zero components omitted).
pub fn omega(ws: &WeightSet, v: &TElement) -> BTreeMap<usize, HeckeElement> {
    let g = ws.group();
    let mut out: BTreeMap<usize, HeckeElement> = BTreeMap::new();
    let syms: Vec<HeckeElement> = ws.orbits().iter().map(|o| q_symmetrizer(g, o.j)).collect();
    for (i, c) in v.terms() {
        let gamma = ws.orbit_of(i);
        let img = syms[gamma].mul_basis(g, ws.coset_rep(i));
        out.entry(gamma).or_default().add_scaled(&img, c, 0);
    }
    out.retain(|_, h| !h.is_zero());
    out
}

/// `Omega^-1` on a single component `h in x_gamma H`.
pub fn omega_inv_component(ws: &WeightSet, gamma: usize, h: &HeckeElement) -> Result<TElement> {
    let g = ws.group();
    let o = ws.orbit(gamma);
    let top = g.length(o.longest) as i32;
    let mut v = TElement::zero();
    for (pos, &y) in o.reps.iter().enumerate() {
        let c = h.coeff(y);
        if !c.is_zero() {
            v.add_term(o.offset + pos, &c.shift(-top));
        }
    }
    let back = omega(ws, &v).remove(&gamma).unwrap_or_default();
    if back != *h {
        return Err(Error::NotInSpan(format!(
            "element is not in x_J H for the class of {}",
            o.antidominant.render(ws.datum())
        )));
    }
    Ok(v)
}

pub fn omega_inv(ws: &WeightSet, parts: &BTreeMap<usize, HeckeElement>) -> Result<TElement> {
    let mut v = TElement::zero();
    for (&gamma, h) in parts {
        v.add_scaled(&omega_inv_component(ws, gamma, h)?, &LaurentPoly::one());
    }
    Ok(v)
}

/// The bar involution of `T_f`, transported from the Hecke algebra through `Omega`.
pub fn bar_t(ws: &WeightSet, v: &TElement) -> TElement {
    let g = ws.group();
    let parts: BTreeMap<usize, HeckeElement> =
        omega(ws, v).into_iter().map(|(gamma, h)| (gamma, h.bar(g))).collect();
    omega_inv(ws, &parts).expect("x_J H is bar invariant")
}

/// The bar involution from `bar(v_{i^-}) = v_{i^-}` and `bar(v h) = bar(v) bar(h)`.
pub fn bar_t_by_action(ws: &WeightSet, v: &TElement) -> TElement {
    let g = ws.group();
    let mut out = TElement::zero();
    for (i, c) in v.terms() {
        let anti = TElement::basis(ws.orbit(ws.orbit_of(i)).antidominant_index());
        let hw = HeckeElement::basis(ws.coset_rep(i)).bar(g);
        out.add_scaled(&anti.act(ws, &hw), &c.bar());
    }
    out
}

/// The canonical basis element `C_i = Omega^-1(C^J_w)` for `i = i^- . w`.
pub fn canonical_t(ws: &WeightSet, kl: &mut KlTable, i: usize) -> Result<TElement> {
    let g = ws.group();
    let gamma = ws.orbit_of(i);
    let o = ws.orbit(gamma);
    let coeffs = kl.parabolic_coeffs(g, o.j, ws.coset_rep(i))?;
    let v = TElement::from_terms(coeffs.into_iter().map(|(y, c)| {
        (ws.index_in_orbit(gamma, y).expect("minimal representative"), c)
    }));
    Ok(v)
}

/// Checks the two characterizing properties of a canonical basis vector.
pub fn is_canonical_t(ws: &WeightSet, i: usize, c: &TElement) -> bool {
    let g = ws.group();
    let gamma = ws.orbit_of(i);
    let w = ws.coset_rep(i);
    if bar_t(ws, c) != *c || !c.coeff(i).is_one() {
        return false;
    }
    c.terms().all(|(j, p)| {
        j == i
            || (ws.orbit_of(j) == gamma && g.bruhat_leq(ws.coset_rep(j), w) && p.is_in_q_zq())
    })
}

/// Expands `v` in the canonical basis `{C_i}`; the change of basis is
/// unitriangular with respect to the Bruhat order on coset representatives.
pub fn canonical_t_coords(ws: &WeightSet, kl: &mut KlTable, v: &TElement) -> Result<BTreeMap<usize, LaurentPoly>> {
    let g = ws.group();
    let mut rest = v.clone();
    let mut out = BTreeMap::new();
    while let Some((i, c)) = rest
        .terms()
        .max_by_key(|(i, _)| (g.length(ws.coset_rep(*i)), *i))
        .map(|(i, c)| (i, c.clone()))
    {
        let ci = canonical_t(ws, kl, i)?;
        rest.add_scaled(&ci, &-c.clone());
        out.insert(i, c);
    }
    Ok(out)
}
