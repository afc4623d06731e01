//! The q-Schur algebra `S_q = End_H(T_f)`, realized by matrices of
//! coordinate functions: entry `(i, j)` is `c_{i,j}`, so column `j` is the
//! image of `v_j`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hecke::{subset_sum, HeckeElement, KlTable};
use crate::laurent::LaurentPoly;
use crate::linalg::{Rat, RatMatrix};
use crate::rootdata::Descent;
use crate::tmodule::{bar_t, canonical_t, canonical_t_coords, omega_inv_component, TElement};
use crate::weightsets::{WeightSet, XiTriple};

/// A square matrix over `Z[q, q^-1]` indexed by a weight set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SchurElement {
    n: usize,
    entries: Vec<LaurentPoly>,
}

impl SchurElement {
    pub fn zero(n: usize) -> Self {
        SchurElement { n, entries: vec![LaurentPoly::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.set(i, i, LaurentPoly::one());
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, c: LaurentPoly) {
        self.entries[i * self.n + j] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(LaurentPoly::is_zero)
    }

    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, &LaurentPoly)> + '_ {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (k / self.n, k % self.n, c))
    }

    pub fn column(&self, j: usize) -> TElement {
        TElement::from_terms((0..self.n).map(|i| (i, self.get(i, j).clone())))
    }

    pub fn set_column(&mut self, j: usize, v: &TElement) {
        for i in 0..self.n {
            self.set(i, j, LaurentPoly::zero());
        }
        for (i, c) in v.terms() {
            self.set(i, j, c.clone());
        }
    }

    /// The image of `v`.
    pub fn apply(&self, v: &TElement) -> TElement {
        let mut out = TElement::zero();
        for (j, c) in v.terms() {
            for i in 0..self.n {
                let e = self.get(i, j);
                if !e.is_zero() {
                    out.add_term(i, &(e * c));
                }
            }
        }
        out
    }

    /// `self o other`.
    pub fn compose(&self, other: &SchurElement) -> SchurElement {
        let n = self.n;
        let mut out = SchurElement::zero(n);
        for k in 0..n {
            for j in 0..n {
                let b = other.get(k, j);
                if b.is_zero() {
                    continue;
                }
                for i in 0..n {
                    let a = self.get(i, k);
                    if !a.is_zero() {
                        out.entries[i * n + j] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn add_scaled(&mut self, other: &SchurElement, c: &LaurentPoly) {
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            if !b.is_zero() {
                *a += &(b * c);
            }
        }
    }

    pub fn add(&self, other: &SchurElement) -> SchurElement {
        let mut out = self.clone();
        out.add_scaled(other, &LaurentPoly::one());
        out
    }

    pub fn sub(&self, other: &SchurElement) -> SchurElement {
        let mut out = self.clone();
        out.add_scaled(other, &LaurentPoly::constant(-1));
        out
    }

    pub fn scale(&self, c: &LaurentPoly) -> SchurElement {
        SchurElement { n: self.n, entries: self.entries.iter().map(|x| x * c).collect() }
    }

    pub fn shift(&self, k: i32) -> SchurElement {
        SchurElement { n: self.n, entries: self.entries.iter().map(|x| x.shift(k)).collect() }
    }

    /// Specialization at a rational `q`.
    pub fn eval(&self, q: &Rat) -> Result<RatMatrix> {
        let mut m = RatMatrix::zero(self.n);
        for (i, j, c) in self.nonzero_entries() {
            let x = c.eval(q).ok_or_else(|| Error::BadArgument("q = 0 is not a valid sample".into()))?;
            m.add_to(i, j, &x);
        }
        Ok(m)
    }

    /// The four coordinate relations characterizing `End_H(T_f)`, checked
    /// for every `(i, j, k)`.
    pub fn is_member(&self, ws: &WeightSet) -> bool {
        self.first_violation(ws).is_none()
    }

    /// The first `(i, j, k)` at which a coordinate relation fails.
    pub fn first_violation(&self, ws: &WeightSet) -> Option<(usize, usize, usize)> {
        if self.n != ws.len() {
            return Some((0, 0, 0));
        }
        let qq = LaurentPoly::qinv_minus_q();
        for k in 0..ws.datum().rank() {
            for i in 0..self.n {
                let is = ws.reflect(i, k);
                let di = ws.descent(i, k);
                for j in 0..self.n {
                    let js = ws.reflect(j, k);
                    let dj = ws.descent(j, k);
                    let c = self.get(i, j);
                    let ok = match (di, dj) {
                        (Descent::Down, Descent::Fixed) => *c == self.get(is, j).shift(-1),
                        (Descent::Fixed, Descent::Down) => *c == self.get(i, js).shift(-1),
                        (Descent::Up, Descent::Down) => c == self.get(is, js),
                        (Descent::Down, Descent::Down) => *c == self.get(is, js) + &(self.get(i, js) * &qq),
                        _ => true,
                    };
                    if !ok {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// Direct check that the matrix commutes with every `H_k`.
    pub fn commutes_with_hecke(&self, ws: &WeightSet) -> bool {
        (0..ws.datum().rank()).all(|k| {
            (0..self.n).all(|j| {
                let lhs = self.column(j).act_gen(ws, k);
                let rhs = self.apply(&TElement::basis(j).act_gen(ws, k));
                lhs == rhs
            })
        })
    }
}

/// Computations in `S_q` for a fixed weight set. Every KL element needed for
/// the canonical basis is computed on construction; afterwards the context is
/// read-only and can be shared between threads.
#[derive(Debug, Clone)]
pub struct SchurAlgebra<'a> {
    ws: &'a WeightSet,
    kl: KlTable,
}

impl<'a> SchurAlgebra<'a> {
    pub fn new(ws: &'a WeightSet) -> Self {
        let g = ws.group();
        let mut kl = KlTable::new(g);
        for t in ws.xi() {
            kl.ensure(g, t.gplus);
        }
        for o in ws.orbits() {
            for &w in &o.reps {
                kl.ensure(g, g.mul(o.longest, w));
            }
        }
        SchurAlgebra { ws, kl }
    }

    pub fn ws(&self) -> &'a WeightSet {
        self.ws
    }

    pub fn kl(&self) -> &KlTable {
        &self.kl
    }

    pub fn dim(&self) -> usize {
        self.ws.xi().len()
    }

    pub fn n(&self) -> usize {
        self.ws.len()
    }

    pub fn xi(&self, n: usize) -> &XiTriple {
        &self.ws.xi()[n]
    }

    fn len(&self, w: usize) -> i32 {
        self.ws.group().length(w) as i32
    }

    /// The H-linear map sending `v_{i^-_nu}` to `images[nu]` for each listed
    /// class and killing the other classes.
    pub fn from_images(&self, images: &[(usize, TElement)]) -> SchurElement {
        let ws = self.ws;
        let mut m = SchurElement::zero(ws.len());
        for (nu, img) in images {
            let o = ws.orbit(*nu);
            let mut cols: Vec<TElement> = Vec::with_capacity(o.len());
            for i in o.indices() {
                let col = match ws.parent(i) {
                    None => img.clone(),
                    Some((p, k)) => cols[p - o.offset].act_gen(ws, k),
                };
                cols.push(col);
            }
            for (pos, col) in cols.iter().enumerate() {
                m.set_column(o.offset + pos, col);
            }
        }
        m
    }

    /// `eta_{i,j}` for a transversal pair.
    pub fn eta(&self, i: usize, j: usize) -> Result<SchurElement> {
        let t = self.ws.pair_to_xi(i, j)?;
        Ok(self.eta_of(&t))
    }

    fn eta_of(&self, t: &XiTriple) -> SchurElement {
        let ws = self.ws;
        let g = ws.group();
        let o = ws.orbit(t.gamma);
        let jn = ws.orbit(t.nu).j;
        let lg = self.len(t.g);
        let mut img = TElement::zero();
        for (pos, &w) in o.reps.iter().enumerate() {
            if g.double_coset_min(o.j, jn, w) == t.g {
                img.add_term(o.offset + pos, &LaurentPoly::q_pow(lg - self.len(w)));
            }
        }
        self.from_images(&[(t.nu, img)])
    }

    pub fn eta_xi(&self, n: usize) -> SchurElement {
        self.eta_of(&self.ws.xi()[n])
    }

    /// Exponent `e` with `phi = q^e eta`.
    pub fn phi_exponent(&self, t: &XiTriple) -> i32 {
        let ws = self.ws;
        self.len(ws.orbit(t.nu).longest) - self.len(ws.orbit(t.gamma).longest) - self.len(t.g)
    }

    /// Exponent `e` with `[phi] = q^e eta`.
    pub fn std_exponent(&self, t: &XiTriple) -> i32 {
        self.len(t.gplus) - self.len(self.ws.orbit(t.gamma).longest) - self.len(t.g)
    }

    /// `phi^g_{gamma nu}`.
    pub fn phi(&self, n: usize) -> SchurElement {
        let t = self.ws.xi()[n];
        self.eta_of(&t).shift(self.phi_exponent(&t))
    }

    /// The standard basis element `[phi^g_{gamma nu}]`.
    pub fn std(&self, n: usize) -> SchurElement {
        let t = self.ws.xi()[n];
        self.eta_of(&t).shift(self.std_exponent(&t))
    }

    /// `[phi]` built from `x_nu -> q^{l(g+)} H_{W_gamma g W_nu}` through `Omega`.
    pub fn std_via_hecke(&self, n: usize) -> Result<SchurElement> {
        let t = self.ws.xi()[n];
        let g = self.ws.group();
        let o = self.ws.orbit(t.gamma);
        let coset = g.double_cosets(o.j, self.ws.orbit(t.nu).j).into_iter().find(|c| c.rep == t.g).expect("coset");
        let h = subset_sum(g, coset.elements.iter().copied()).shift(self.len(t.gplus));
        let img = omega_inv_component(self.ws, t.gamma, &h)?;
        Ok(self.from_images(&[(t.nu, img)]))
    }

    /// `1_gamma`.
    pub fn idempotent(&self, gamma: usize) -> SchurElement {
        let n = self.ws.xi_index(gamma, 0, gamma).expect("diagonal");
        self.std(n)
    }

    /// Coordinates in the standard basis, read at transversal pairs.
    pub fn coords(&self, a: &SchurElement) -> Result<Vec<LaurentPoly>> {
        if let Some((i, j, k)) = a.first_violation(self.ws) {
            return Err(Error::NotMember { i, j, k });
        }
        Ok(self.coords_unchecked(a))
    }

    pub fn coords_unchecked(&self, a: &SchurElement) -> Vec<LaurentPoly> {
        self.ws
            .xi()
            .iter()
            .zip(self.ws.transversal())
            .map(|(t, &(i, j))| a.get(i, j).shift(-self.std_exponent(t)))
            .collect()
    }

    pub fn from_coords(&self, c: &[LaurentPoly]) -> SchurElement {
        let mut m = SchurElement::zero(self.n());
        for (n, x) in c.iter().enumerate() {
            if !x.is_zero() {
                m.add_scaled(&self.std(n), x);
            }
        }
        m
    }

    /// The bar involution of `S_q`.
    pub fn bar(&self, a: &SchurElement) -> Result<SchurElement> {
        if let Some((i, j, k)) = a.first_violation(self.ws) {
            return Err(Error::NotMember { i, j, k });
        }
        let images: Vec<(usize, TElement)> = (0..self.ws.orbits().len())
            .map(|nu| {
                let j = self.ws.orbit(nu).offset;
                (nu, bar_t(self.ws, &a.column(j)))
            })
            .collect();
        Ok(self.from_images(&images))
    }

    /// The canonical basis element `{phi^g_{gamma nu}}`, sending `x_nu` to `C_{g+}`.
    pub fn canonical(&self, n: usize) -> Result<SchurElement> {
        let t = self.ws.xi()[n];
        let c = self.kl.get(t.gplus);
        let img = omega_inv_component(self.ws, t.gamma, c)?;
        Ok(self.from_images(&[(t.nu, img)]))
    }

    /// Standard-basis coordinates of `{phi^g}` predicted by KL polynomials:
    /// `p_{y+,g+}` at `[phi^y]` for `y <= g` in the same double coset family.
    pub fn canonical_coords_from_kl(&self, n: usize) -> BTreeMap<usize, LaurentPoly> {
        let t = self.ws.xi()[n];
        let c = self.kl.get(t.gplus);
        let mut out = BTreeMap::new();
        for (m, u) in self.ws.xi().iter().enumerate() {
            if u.gamma == t.gamma && u.nu == t.nu {
                let p = c.coeff(u.gplus);
                if !p.is_zero() {
                    out.insert(m, p);
                }
            }
        }
        out
    }

    /// Standard-basis coordinates of every canonical basis element, read from
    /// the matrices.
    pub fn canonical_table(&self) -> Result<Vec<BTreeMap<usize, LaurentPoly>>> {
        (0..self.dim())
            .map(|n| {
                let m = self.canonical(n)?;
                Ok(sparse(self.coords(&m)?))
            })
            .collect()
    }

    /// Expands standard coordinates in the canonical basis by peeling off the
    /// longest `g` first.
    pub fn std_to_canonical(
        &self,
        table: &[BTreeMap<usize, LaurentPoly>],
        std_coords: &[LaurentPoly],
    ) -> Result<BTreeMap<usize, LaurentPoly>> {
        let mut rest: BTreeMap<usize, LaurentPoly> = sparse(std_coords.to_vec());
        let mut out = BTreeMap::new();
        let g = self.ws.group();
        while let Some((&n, c)) = rest.iter().max_by_key(|(n, _)| (g.length(self.ws.xi()[**n].g), **n)) {
            let c = c.clone();
            let row = &table[n];
            if !row.get(&n).is_some_and(LaurentPoly::is_one) {
                return Err(Error::CanonicalCheck(format!("canonical element {} is not unitriangular", n)));
            }
            for (m, x) in row {
                let e = rest.entry(*m).or_default();
                *e -= &(x * &c);
                if e.is_zero() {
                    rest.remove(m);
                }
            }
            out.insert(n, c);
        }
        Ok(out)
    }

    /// `m_{b,b'}^{b''}` with `b b' = sum m b''`.
    pub fn structure_constants(
        &self,
        table: &[BTreeMap<usize, LaurentPoly>],
        b: usize,
        b2: usize,
    ) -> Result<BTreeMap<usize, LaurentPoly>> {
        let prod = self.canonical(b)?.compose(&self.canonical(b2)?);
        let c = self.coords(&prod)?;
        self.std_to_canonical(table, &c)
    }

    /// `t_{b,c}^{c''}` with `b C_i = sum t C_{i''}`.
    pub fn action_on_canonical_t(&self, b: &SchurElement, i: usize) -> Result<BTreeMap<usize, LaurentPoly>> {
        let mut kl = self.kl.clone();
        let c = canonical_t(self.ws, &mut kl, i)?;
        canonical_t_coords(self.ws, &mut kl, &b.apply(&c))
    }

    /// The matrix of `v -> v H_w` at a rational `q`.
    pub fn hecke_matrix(&self, w: usize, q: &Rat) -> Result<RatMatrix> {
        let ws = self.ws;
        let mut m = RatMatrix::zero(ws.len());
        for j in 0..ws.len() {
            let img = TElement::basis(j).act_basis(ws, w);
            for (i, c) in img.terms() {
                let x = c.eval(q).ok_or_else(|| Error::BadArgument("q = 0 is not a valid sample".into()))?;
                m.add_to(i, j, &x);
            }
        }
        Ok(m)
    }
}

fn sparse(v: Vec<LaurentPoly>) -> BTreeMap<usize, LaurentPoly> {
    v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
}

/// Checks `{phi} = [phi] + sum_{y<g} qZ[q] [phi^y]` on standard coordinates.
pub fn is_unitriangular(ws: &WeightSet, n: usize, coords: &BTreeMap<usize, LaurentPoly>) -> bool {
    let t = ws.xi()[n];
    let g = ws.group();
    coords.get(&n).is_some_and(LaurentPoly::is_one)
        && coords.iter().all(|(m, c)| {
            let u = ws.xi()[*m];
            *m == n || (u.gamma == t.gamma && u.nu == t.nu && u.g != t.g && g.bruhat_leq(u.g, t.g) && c.is_in_q_zq())
        })
}

/// Applies the Hecke element `h` on the right, column by column.
pub fn right_act(ws: &WeightSet, a: &SchurElement, h: &HeckeElement) -> SchurElement {
    let mut m = SchurElement::zero(a.size());
    for j in 0..a.size() {
        m.set_column(j, &a.column(j).act(ws, h));
    }
    m
}
