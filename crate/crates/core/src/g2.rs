//! Type G2: the sets `X_n`, epsilon-weights, the generators `e_a`, `f_a`, `t`
//! of `S_q(n)`, and executable corpora for the bar involution on `T`, the
//! generator actions on standard vectors and generation of `S(2)`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::linalg::{rat, ratio, Echelon, Rat, RatMatrix, SparseVec};
use crate::rootdata::{CartanDatum, CartanType, ShiftedWeight};
use crate::schur::{SchurAlgebra, SchurElement};
use crate::tmodule::{bar_t, TElement};
use crate::weightsets::WeightSet;
use crate::weylgroup::GenSet;

/// Delta coordinates `(a, b, c)` with `a + b + c = 0`.
pub type Delta = (i64, i64, i64);

/// The label `eps_a + eps_b`, `0 <= a <= b`, of the class of `(a, b, -a-b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EpsWeight {
    pub a: i64,
    pub b: i64,
}

impl EpsWeight {
    /// `eps_x + eps_y`, normalized so that `a <= b`.
    pub fn new(x: i64, y: i64) -> Self {
        EpsWeight { a: x.min(y), b: x.max(y) }
    }

    pub fn antidominant(self) -> Delta {
        (self.a, self.b, -self.a - self.b)
    }

    pub fn of_class(ws: &WeightSet, gamma: usize) -> Self {
        let (a, b, _) = ws.orbit(gamma).antidominant.to_g2_delta();
        EpsWeight::new(a, b)
    }

    pub fn contains(self, k: i64) -> bool {
        self.a == k || self.b == k
    }
}

impl fmt::Display for EpsWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}+e{}", self.a, self.b)
    }
}

/// `X_n`: the union of the classes `eps_a + eps_b` with `0 <= a <= b <= n`.
pub fn build_xn(n: usize) -> Result<WeightSet> {
    if n == 0 {
        return Err(Error::BadArgument("X_n needs n >= 1".into()));
    }
    let n = n as i64;
    let mut seeds = Vec::new();
    for a in 0..=n {
        for b in a..=n {
            seeds.push(ShiftedWeight::from_g2_delta(a, b, -a - b)?);
        }
    }
    WeightSet::from_seeds(&CartanDatum::new(CartanType::G2), &seeds, 12)
}

/// The largest `b` among the class labels, i.e. `n` for `X_n`.
pub fn label_bound(ws: &WeightSet) -> i64 {
    (0..ws.orbits().len()).map(|g| EpsWeight::of_class(ws, g).b).max().unwrap_or(0)
}

pub fn delta_index(ws: &WeightSet, d: Delta) -> Option<usize> {
    let w = ShiftedWeight::from_g2_delta(d.0, d.1, d.2).ok()?;
    ws.index_of(&w)
}

pub fn class_of(ws: &WeightSet, e: EpsWeight) -> Option<usize> {
    delta_index(ws, e.antidominant()).map(|i| ws.orbit_of(i))
}

/// `i . w`, applying the simple reflections of a reduced word of `w` in order.
pub fn act_right(ws: &WeightSet, i: usize, w: usize) -> usize {
    ws.group().word(w).iter().fold(i, |acc, &k| ws.reflect(acc, k as usize))
}

/// `^kW`: minimal representatives of `<s_k> \ W` (`k` is 0-based).
pub fn coset_reps(ws: &WeightSet, k: usize) -> Vec<usize> {
    ws.group().parabolic(GenSet::from_indices([k])).min_reps
}

fn check_gen_index(ws: &WeightSet, a: usize) -> Result<i64> {
    let n = label_bound(ws);
    if a as i64 >= n {
        return Err(Error::BadArgument(format!("generator index {} needs 0 <= a < n = {}", a, n)));
    }
    Ok(a as i64)
}

fn xi_of(s: &SchurAlgebra, gamma: EpsWeight, g: usize, nu: EpsWeight) -> Option<usize> {
    let ws = s.ws();
    ws.xi_index(class_of(ws, gamma)?, g, class_of(ws, nu)?)
}

fn sum_canonical(s: &SchurAlgebra, terms: &[(EpsWeight, usize, EpsWeight)]) -> Result<SchurElement> {
    let mut m = SchurElement::zero(s.n());
    for &(gamma, g, nu) in terms {
        if let Some(k) = xi_of(s, gamma, g, nu) {
            m = m.add(&s.canonical(k)?);
        }
    }
    Ok(m)
}

/// `e_a = sum_k {phi^1_{eps_a+eps_k, eps_{a+1}+eps_k}}`.
pub fn gen_e(s: &SchurAlgebra, a: usize) -> Result<SchurElement> {
    let ws = s.ws();
    let a = check_gen_index(ws, a)?;
    let terms: Vec<_> =
        (0..=label_bound(ws)).map(|k| (EpsWeight::new(a, k), 0, EpsWeight::new(a + 1, k))).collect();
    sum_canonical(s, &terms)
}

/// `f_a = sum_k {phi^1_{eps_{a+1}+eps_k, eps_a+eps_k}}`.
pub fn gen_f(s: &SchurAlgebra, a: usize) -> Result<SchurElement> {
    let ws = s.ws();
    let a = check_gen_index(ws, a)?;
    let terms: Vec<_> =
        (0..=label_bound(ws)).map(|k| (EpsWeight::new(a + 1, k), 0, EpsWeight::new(a, k))).collect();
    sum_canonical(s, &terms)
}

/// `t` as a sum of canonical basis elements.
pub fn gen_t(s: &SchurAlgebra) -> Result<SchurElement> {
    let ws = s.ws();
    let n = label_bound(ws);
    let s1 = ws.group().generator(0);
    let mut terms = Vec::new();
    for k in 0..=n {
        for l in k + 2..=n {
            terms.push((EpsWeight::new(k, l), 0, EpsWeight::new(k, l)));
        }
    }
    for k in 0..n {
        let e = EpsWeight::new(k, k + 1);
        terms.push((e, s1, e));
    }
    sum_canonical(s, &terms)
}

/// `t` as the equivalent sum of standard basis elements.
pub fn gen_t_standard(s: &SchurAlgebra) -> Result<SchurElement> {
    let ws = s.ws();
    let n = label_bound(ws);
    let s1 = ws.group().generator(0);
    let mut m = SchurElement::zero(s.n());
    let mut add = |gamma: EpsWeight, g: usize, c: LaurentPoly| {
        if let Some(k) = xi_of(s, gamma, g, gamma) {
            m.add_scaled(&s.std(k), &c);
        }
    };
    for k in 0..=n {
        for l in k + 2..=n {
            add(EpsWeight::new(k, l), 0, LaurentPoly::one());
        }
    }
    for k in 0..n {
        let e = EpsWeight::new(k, k + 1);
        add(e, s1, LaurentPoly::one());
        add(e, 0, LaurentPoly::q_pow(if k == 0 { 2 } else { 1 }));
    }
    Ok(m)
}

/// `e_0, ..., e_{n-1}`, `f_0, ..., f_{n-1}` and `t`.
#[derive(Debug, Clone)]
pub struct Generators {
    pub e: Vec<SchurElement>,
    pub f: Vec<SchurElement>,
    pub t: SchurElement,
}

impl Generators {
    pub fn new(s: &SchurAlgebra) -> Result<Self> {
        let n = label_bound(s.ws()) as usize;
        Ok(Generators {
            e: (0..n).map(|a| gen_e(s, a)).collect::<Result<_>>()?,
            f: (0..n).map(|a| gen_f(s, a)).collect::<Result<_>>()?,
            t: gen_t(s)?,
        })
    }

    /// `e_0, e_1, ..., f_0, f_1, ..., t`.
    pub fn all(&self) -> Vec<&SchurElement> {
        self.e.iter().chain(&self.f).chain(core::iter::once(&self.t)).collect()
    }
}

/// One instantiated formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub formula_id: String,
    pub instance: String,
    pub pass: bool,
    pub lhs: String,
    pub rhs: String,
}

/// How often one reading of an ambiguous formula matched the construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reading {
    pub formula_id: String,
    pub reading: String,
    pub matched: usize,
    pub total: usize,
    pub chosen: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
    pub readings: Vec<Reading>,
}

impl SuiteReport {
    fn new(suite: &str) -> Self {
        SuiteReport { suite: suite.to_string(), ..Default::default() }
    }

    pub fn pass(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    fn push(&mut self, formula_id: &str, instance: String, pass: bool, lhs: String, rhs: String) {
        self.checks.push(Check { formula_id: formula_id.to_string(), instance, pass, lhs, rhs });
    }

    fn push_t(&mut self, ws: &WeightSet, id: &str, instance: String, lhs: &TElement, rhs: &TElement) {
        self.push(id, instance, lhs == rhs, lhs.render(ws), rhs.render(ws));
    }
}

fn show(d: Delta) -> String {
    format!("({},{},{})", d.0, d.1, d.2)
}

fn dq() -> LaurentPoly {
    LaurentPoly::qinv_minus_q()
}

/// `-(q^-1 - q) q^k`.
fn mq(k: i32) -> LaurentPoly {
    -(dq().shift(k))
}

type Wt = fn(i64, i64) -> Delta;

/// A bar formula `bar(v_lhs) = sum c v_w`, parametrized by `b > a > 0`.
struct BarFormula {
    id: &'static str,
    uses_b: bool,
    lhs: Wt,
    rhs: Vec<(Wt, LaurentPoly)>,
}

fn bar_formulas() -> Vec<BarFormula> {
    let one = LaurentPoly::one;
    let d2 = || &dq() * &dq();
    let p2 = LaurentPoly::from_terms([(-2, 1), (0, -1), (2, 1)]);
    let p2s = LaurentPoly::from_terms([(-2, 1), (2, 1)]);
    let p4 = LaurentPoly::from_terms([(-4, 1), (-2, -1), (0, 1), (2, -1), (4, 1)]);
    let p4s = LaurentPoly::from_terms([(-4, 1), (0, 1), (4, 1)]);
    let md = || -dq();
    let mdp2 = || -(&dq() * &p2);
    let d2p2s = || &d2() * &p2s;
    let mdp4 = || -(&dq() * &p4);
    let d2p4s = || &d2() * &p4s;

    let z: Wt = |_, _| (0, 0, 0);
    let s0: Wt = |a, _| (0, a, -a);
    let s1: Wt = |a, _| (a, 0, -a);
    let s2: Wt = |a, _| (-a, a, 0);
    let s3: Wt = |a, _| (a, -a, 0);
    let s4: Wt = |a, _| (-a, 0, a);
    let s5: Wt = |a, _| (0, -a, a);
    let t0: Wt = |a, _| (a, a, -2 * a);
    let t1: Wt = |a, _| (-a, 2 * a, -a);
    let t2: Wt = |a, _| (2 * a, -a, -a);
    let t3: Wt = |a, _| (-2 * a, a, a);
    let t4: Wt = |a, _| (a, -2 * a, a);
    let t5: Wt = |a, _| (-a, -a, 2 * a);
    let a0: Wt = |a, b| (a, b, -b - a);
    let b1: Wt = |a, b| (b, a, -b - a);
    let b2: Wt = |a, b| (-a, b + a, -b);
    let c1: Wt = |a, b| (-b, b + a, -a);
    let c2: Wt = |a, b| (b + a, -a, -b);
    let d1: Wt = |a, b| (b + a, -b, -a);
    let dd2: Wt = |a, b| (-b - a, b, a);
    let e1: Wt = |a, b| (-b - a, a, b);
    let e2: Wt = |a, b| (b, -b - a, a);
    let f1: Wt = |a, b| (-b, -a, b + a);
    let f2: Wt = |a, b| (a, -b - a, b);
    let gg: Wt = |a, b| (-a, -b, b + a);

    let chain = |lhs: Wt, below: &[Wt]| -> Vec<(Wt, LaurentPoly)> {
        let mut v = vec![(lhs, one())];
        for (k, w) in below.iter().enumerate() {
            v.push((*w, mq(k as i32)));
        }
        v
    };
    let f = |id, uses_b, lhs, rhs| BarFormula { id, uses_b, lhs, rhs };
    vec![
        f("A.1", false, z, vec![(z, one())]),
        f("A.2", false, s0, vec![(s0, one())]),
        f("A.3", false, s1, chain(s1, &[s0])),
        f("A.4", false, s2, chain(s2, &[s1, s0])),
        f("A.5", false, s3, chain(s3, &[s2, s1, s0])),
        f("A.6", false, s4, chain(s4, &[s3, s2, s1, s0])),
        f("A.7", false, s5, chain(s5, &[s4, s3, s2, s1, s0])),
        f("A.8", false, t0, vec![(t0, one())]),
        f("A.9", false, t1, chain(t1, &[t0])),
        f("A.10", false, t2, chain(t2, &[t1, t0])),
        f("A.11", false, t3, chain(t3, &[t2, t1, t0])),
        f("A.12", false, t4, chain(t4, &[t3, t2, t1, t0])),
        f("A.13", false, t5, chain(t5, &[t4, t3, t2, t1, t0])),
        f("A.14", true, a0, vec![(a0, one())]),
        f("A.15", true, b1, vec![(b1, one()), (a0, md())]),
        f("A.16", true, b2, vec![(b2, one()), (a0, md())]),
        f("A.17", true, c1, vec![(c1, one()), (b1, md()), (b2, md()), (a0, d2())]),
        f("A.18", true, c2, vec![(c2, one()), (b1, md()), (b2, md()), (a0, d2())]),
        f(
            "A.19",
            true,
            d1,
            vec![(d1, one()), (c1, md()), (c2, md()), (b2, d2()), (b1, d2()), (a0, mdp2())],
        ),
        f(
            "A.20",
            true,
            dd2,
            vec![(dd2, one()), (c1, md()), (c2, md()), (b2, d2()), (b1, d2()), (a0, mdp2())],
        ),
        f(
            "A.21",
            true,
            e1,
            vec![
                (e1, one()),
                (d1, md()),
                (dd2, md()),
                (c2, d2()),
                (c1, d2()),
                (b2, mdp2()),
                (b1, mdp2()),
                (a0, d2p2s()),
            ],
        ),
        f(
            "A.22",
            true,
            e2,
            vec![
                (e2, one()),
                (d1, md()),
                (dd2, md()),
                (c2, d2()),
                (c1, d2()),
                (b2, mdp2()),
                (b1, mdp2()),
                (a0, d2p2s()),
            ],
        ),
        f(
            "A.23",
            true,
            f1,
            vec![
                (f1, one()),
                (e1, md()),
                (e2, md()),
                (dd2, d2()),
                (d1, d2()),
                (c1, mdp2()),
                (c2, mdp2()),
                (b2, d2p2s()),
                (b1, d2p2s()),
                (a0, mdp4()),
            ],
        ),
        f(
            "A.24",
            true,
            f2,
            vec![
                (f2, one()),
                (e1, md()),
                (e2, md()),
                (dd2, d2()),
                (d1, d2()),
                (c1, mdp2()),
                (c2, mdp2()),
                (b2, d2p2s()),
                (b1, d2p2s()),
                (a0, mdp4()),
            ],
        ),
        f(
            "A.25",
            true,
            gg,
            vec![
                (gg, one()),
                (f1, md()),
                (f2, md()),
                (e1, d2()),
                (e2, d2()),
                (dd2, mdp2()),
                (d1, mdp2()),
                (c1, d2p2s()),
                (c2, d2p2s()),
                (b2, mdp4()),
                (b1, mdp4()),
                (a0, d2p4s()),
            ],
        ),
    ]
}

fn vector(ws: &WeightSet, terms: &[(Delta, LaurentPoly)]) -> Option<TElement> {
    let mut v = TElement::zero();
    for (d, c) in terms {
        v.add_term(delta_index(ws, *d)?, c);
    }
    Some(v)
}

/// The bar involution formulas on `T`, including the action of `bar(H_k)`,
/// instantiated over every valid parameter inside `ws` and compared with
/// [`bar_t`].
pub fn appendix_a_suite(ws: &WeightSet) -> SuiteReport {
    let mut r = SuiteReport::new("A");
    let n = label_bound(ws);
    let qq = dq();
    let corr = LaurentPoly::from_terms([(1, 1), (-1, -1)]);
    for i in 0..ws.len() {
        let (a, b, c) = ws.weight(i).to_g2_delta();
        let v = TElement::basis(i);
        for k in 0..2 {
            let lhs = v.act_gen(ws, k).add(&v.scale(&corr));
            let (fixed, down, swapped) = if k == 0 { (a == b, a < b, (b, a, c)) } else { (a == 0, a > 0, (-a, -c, -b)) };
            let rhs = if fixed {
                Some(v.shift(1))
            } else {
                let mut terms = vec![(swapped, LaurentPoly::one())];
                if down {
                    terms.push(((a, b, c), -qq.clone()));
                }
                vector(ws, &terms)
            };
            let id = if k == 0 { "A.H1" } else { "A.H2" };
            match rhs {
                Some(rhs) => r.push_t(ws, id, show((a, b, c)), &lhs, &rhs),
                None => r.push(id, show((a, b, c)), false, lhs.render(ws), "weight outside the set".into()),
            }
        }
    }
    for f in bar_formulas() {
        let mut params = Vec::new();
        if f.id == "A.1" {
            params.push((0, 0));
        } else if f.uses_b {
            for a in 1..=n {
                for b in a + 1..=n {
                    params.push((a, b));
                }
            }
        } else {
            for a in 1..=n {
                params.push((a, 0));
            }
        }
        for (a, b) in params {
            let x = (f.lhs)(a, b);
            let terms: Vec<(Delta, LaurentPoly)> = f.rhs.iter().map(|(w, c)| (w(a, b), c.clone())).collect();
            let (Some(i), Some(rhs)) = (delta_index(ws, x), vector(ws, &terms)) else {
                continue;
            };
            let lhs = bar_t(ws, &TElement::basis(i));
            let inst = if f.uses_b { format!("a={},b={}", a, b) } else { format!("a={}", a) };
            r.push_t(ws, f.id, inst, &lhs, &rhs);
        }
    }
    r
}

/// One side of an action formula: `c * X v_x`.
struct Side {
    scale: LaurentPoly,
    x: Delta,
}

struct ActionCheck<'a> {
    ws: &'a WeightSet,
    report: SuiteReport,
    readings: Vec<Reading>,
}

impl ActionCheck<'_> {
    fn image(&self, op: &SchurElement, side: &Side) -> Option<TElement> {
        let i = delta_index(self.ws, side.x)?;
        Some(op.apply(&TElement::basis(i)).scale(&side.scale))
    }

    /// Checks `c * X v_x = rhs`; skipped when a weight lies outside the set.
    fn check(
        &mut self,
        id: &str,
        inst: String,
        op: &SchurElement,
        side: Side,
        rhs: &[(Delta, LaurentPoly)],
    ) -> Option<bool> {
        let (Some(lhs), Some(rhs)) = (self.image(op, &side), vector(self.ws, rhs)) else {
            return None;
        };
        self.report.push_t(self.ws, id, inst, &lhs, &rhs);
        Some(lhs == rhs)
    }

    /// Tallies an alternative reading without adding it to the checks.
    fn tally(&mut self, id: &str, reading: &str, holds: Option<bool>) {
        let Some(holds) = holds else {
            return;
        };
        let pos = self.readings.iter().position(|r| r.formula_id == id && r.reading == reading);
        let pos = pos.unwrap_or_else(|| {
            self.readings.push(Reading {
                formula_id: id.to_string(),
                reading: reading.to_string(),
                matched: 0,
                total: 0,
                chosen: false,
            });
            self.readings.len() - 1
        });
        self.readings[pos].total += 1;
        if holds {
            self.readings[pos].matched += 1;
        }
    }

    fn finish(mut self) -> SuiteReport {
        for r in &mut self.readings {
            r.chosen = r.matched == r.total;
        }
        self.report.readings = self.readings;
        self.report
    }
}

fn one() -> LaurentPoly {
    LaurentPoly::one()
}

fn qp(k: i32) -> LaurentPoly {
    LaurentPoly::q_pow(k)
}

fn side(x: Delta) -> Side {
    Side { scale: one(), x }
}

fn qside(k: i32, x: Delta) -> Side {
    Side { scale: qp(k), x }
}

/// The displayed actions of `e_a`, `f_a` and `t` on standard vectors,
/// compared with the generators built from canonical basis elements.
pub fn appendix_b_suite(s: &SchurAlgebra) -> Result<SuiteReport> {
    let ws = s.ws();
    let gens = Generators::new(s)?;
    let n = label_bound(ws);
    let group = ws.group();
    let w_all: Vec<usize> = (0..group.order()).collect();
    let w1 = coset_reps(ws, 0);
    let w2 = coset_reps(ws, 1);
    let mut c = ActionCheck { ws, report: SuiteReport::new("B"), readings: Vec::new() };
    let at = |d: Delta, tau: usize| -> Option<Delta> {
        let i = delta_index(ws, d)?;
        Some(ws.weight(act_right(ws, i, tau)).to_g2_delta())
    };
    let tau_name = |tau: usize| group.render(tau);

    let e0 = &gens.e[0];
    let f0 = &gens.f[0];
    let t = &gens.t;
    let explicit_e: [(Delta, Vec<(Delta, LaurentPoly)>); 6] = [
        ((-1, -1, 2), vec![((-1, 0, 1), one()), ((0, -1, 1), qp(-1))]),
        ((1, -2, 1), vec![((1, -1, 0), one()), ((0, -1, 1), one())]),
        ((-2, 1, 1), vec![((-1, 1, 0), one()), ((-1, 0, 1), one())]),
        ((2, -1, -1), vec![((1, 0, -1), one()), ((1, -1, 0), one())]),
        ((-1, 2, -1), vec![((0, 1, -1), one()), ((-1, 1, 0), one())]),
        ((1, 1, -2), vec![((0, 1, -1), qp(1)), ((1, 0, -1), one())]),
    ];
    for (k, (x, rhs)) in explicit_e.iter().enumerate() {
        c.check(&format!("e.{}", k + 1), show(*x), e0, side(*x), rhs);
    }
    let six = [(0, 1, -1), (1, 0, -1), (-1, 1, 0), (1, -1, 0), (-1, 0, 1), (0, -1, 1)];
    for (k, x) in six.iter().enumerate() {
        c.check("e.7", show(*x), e0, qside(k as i32, *x), &[((0, 0, 0), one())]);
    }
    for b in 2..=n {
        for &tau in &w2 {
            let (Some(x), Some(y), Some(z)) = (at((1, b, -b - 1), tau), at((-1, b + 1, -b), tau), at((0, b, -b), tau))
            else {
                continue;
            };
            let inst = format!("b={},tau={}", b, tau_name(tau));
            let first = c.check("e.8", inst.clone(), e0, side(x), &[(z, one())]);
            let second = c.check("e.8", inst + ",second", e0, qside(1, y), &[(z, one())]);
            let literal = c.image(e0, &side(x)).zip(vector(ws, &[(y, qp(1))])).map(|(l, r)| l == r);
            c.tally("e.8", "operator applied to each member", first.zip(second).map(|(a, b)| a && b));
            c.tally("e.8", "literal chain e_0 v_x = q v_y", literal);
        }
    }
    for a in 1..n {
        let g = &gens.e[a as usize];
        for &tau in &w1 {
            let inst = format!("a={},tau={}", a, tau_name(tau));
            let (Some(x), Some(y1), Some(y2), Some(z)) = (
                at((a + 1, a + 1, -2 * a - 2), tau),
                at((a, a + 1, -2 * a - 1), tau),
                at((a + 1, a, -2 * a - 1), tau),
                at((a, a, -2 * a), tau),
            ) else {
                continue;
            };
            c.check("e.9", inst.clone(), g, side(x), &[(y1, qp(1)), (y2, one())]);
            c.check("e.10", inst.clone(), g, side(y1), &[(z, one())]);
            c.check("e.10", inst + ",second", g, qside(1, y2), &[(z, one())]);
        }
        for b in (0..=n).filter(|&b| b != a && b != a + 1) {
            for &tau in &w_all {
                let (Some(x), Some(z)) = (at((a + 1, b, -a - b - 1), tau), at((a, b, -a - b), tau)) else {
                    continue;
                };
                c.check("e.11", format!("a={},b={},tau={}", a, b, tau_name(tau)), g, side(x), &[(z, one())]);
            }
        }
    }
    for a in 0..n {
        let g = &gens.e[a as usize];
        for gamma in 0..ws.orbits().len() {
            let lab = EpsWeight::of_class(ws, gamma);
            if lab.contains(a + 1) {
                continue;
            }
            for i in ws.orbit(gamma).indices() {
                let x = ws.weight(i).to_g2_delta();
                c.check("e.12", format!("a={},v={}", a, show(x)), g, side(x), &[]);
            }
        }
    }

    c.check(
        "f.1",
        show((0, 0, 0)),
        f0,
        side((0, 0, 0)),
        &six.iter().rev().enumerate().map(|(k, x)| (*x, qp(k as i32))).collect::<Vec<_>>(),
    );
    let explicit_f: [(Delta, Vec<(Delta, LaurentPoly)>); 6] = [
        ((0, -1, 1), vec![((1, -2, 1), one()), ((-1, -1, 2), qp(-1))]),
        ((-1, 0, 1), vec![((-2, 1, 1), one()), ((-1, -1, 2), one())]),
        ((1, -1, 0), vec![((2, -1, -1), one()), ((1, -2, 1), one())]),
        ((-1, 1, 0), vec![((-1, 2, -1), one()), ((-2, 1, 1), one())]),
        ((1, 0, -1), vec![((1, 1, -2), one()), ((2, -1, -1), one())]),
        ((0, 1, -1), vec![((1, 1, -2), qp(1)), ((-1, 2, -1), one())]),
    ];
    for (k, (x, rhs)) in explicit_f.iter().enumerate() {
        c.check(&format!("f.{}", k + 2), show(*x), f0, side(*x), rhs);
    }
    for b in 2..=n {
        for &tau in &w2 {
            let (Some(x), Some(y1), Some(y2)) = (at((0, b, -b), tau), at((1, b, -b - 1), tau), at((-1, b + 1, -b), tau))
            else {
                continue;
            };
            c.check("f.8", format!("b={},tau={}", b, tau_name(tau)), f0, side(x), &[(y1, qp(1)), (y2, one())]);
        }
    }
    for a in 1..n {
        let g = &gens.f[a as usize];
        for &tau in &w1 {
            let inst = format!("a={},tau={}", a, tau_name(tau));
            let (Some(x), Some(y1), Some(y2), Some(z)) = (
                at((a, a, -2 * a), tau),
                at((a, a + 1, -2 * a - 1), tau),
                at((a + 1, a, -2 * a - 1), tau),
                at((a + 1, a + 1, -2 * a - 2), tau),
            ) else {
                continue;
            };
            c.check("f.9", inst.clone(), g, side(x), &[(y1, qp(1)), (y2, one())]);
            c.check("f.10", inst.clone(), g, side(y1), &[(z, one())]);
            c.check("f.10", inst + ",second", g, qside(1, y2), &[(z, one())]);
        }
        for b in (0..=n).filter(|&b| b != a && b != a + 1) {
            for &tau in &w_all {
                let (Some(x), Some(z)) = (at((a, b, -a - b), tau), at((a + 1, b, -a - b - 1), tau)) else {
                    continue;
                };
                c.check("f.11", format!("a={},b={},tau={}", a, b, tau_name(tau)), g, side(x), &[(z, one())]);
            }
        }
    }
    for a in 0..n {
        let g = &gens.f[a as usize];
        for gamma in 0..ws.orbits().len() {
            if EpsWeight::of_class(ws, gamma).contains(a) {
                continue;
            }
            for i in ws.orbit(gamma).indices() {
                let x = ws.weight(i).to_g2_delta();
                c.check("f.12", format!("a={},v={}", a, show(x)), g, side(x), &[]);
            }
        }
    }

    let explicit_t: [(Delta, Vec<(Delta, LaurentPoly)>); 6] = [
        ((0, -1, 1), vec![((0, -1, 1), qp(-2)), ((-1, 0, 1), qp(-1)), ((1, -1, 0), one())]),
        ((-1, 0, 1), vec![((-1, 0, 1), one()), ((-1, 1, 0), one()), ((0, -1, 1), qp(-1))]),
        ((1, -1, 0), vec![((1, -1, 0), one()), ((0, -1, 1), one()), ((1, 0, -1), one())]),
        ((-1, 1, 0), vec![((-1, 1, 0), one()), ((-1, 0, 1), one()), ((0, 1, -1), one())]),
        ((1, 0, -1), vec![((1, 0, -1), one()), ((1, -1, 0), one()), ((0, 1, -1), qp(1))]),
        ((0, 1, -1), vec![((0, 1, -1), qp(2)), ((1, 0, -1), qp(1)), ((-1, 1, 0), one())]),
    ];
    for (k, (x, rhs)) in explicit_t.iter().enumerate() {
        c.check(&format!("t.{}", k + 1), show(*x), t, side(*x), rhs);
    }
    for a in 1..n {
        for &tau in &w1 {
            let (Some(x), Some(y)) = (at((a, a + 1, -2 * a - 1), tau), at((a + 1, a, -2 * a - 1), tau)) else {
                continue;
            };
            let inst = format!("a={},tau={}", a, tau_name(tau));
            let rhs = [(x, qp(1)), (y, one())];
            c.check("t.7", inst.clone(), t, side(x), &rhs);
            c.check("t.7", inst + ",second", t, qside(1, y), &rhs);
        }
    }
    for a in 0..=n {
        for b in a + 2..=n {
            for &tau in &w_all {
                let Some(x) = at((a, b, -a - b), tau) else {
                    continue;
                };
                let held = c.check("t.8", format!("a={},b={},tau={}", a, b, tau_name(tau)), t, side(x), &[(x, one())]);
                let printed = c.image(t, &side(x)).zip(vector(ws, &[((a, b, -a - b), one())])).map(|(l, r)| l == r);
                c.tally("t.8", "image v_{(a,b,-a-b).tau}", held);
                c.tally("t.8", "image v_{(a,b,-a-b)} as printed", printed);
            }
        }
    }
    Ok(c.finish())
}

/// `S(2)` at `q = 1` with rational coefficients.
pub struct SchurAtOne<'a> {
    ws: &'a WeightSet,
    pub e: [RatMatrix; 2],
    pub f: [RatMatrix; 2],
    pub t: RatMatrix,
    pub one: RatMatrix,
}

impl<'a> SchurAtOne<'a> {
    pub fn new(s: &SchurAlgebra<'a>) -> Result<Self> {
        let ws = s.ws();
        if label_bound(ws) != 2 {
            return Err(Error::BadArgument("the generation corpus is stated for X_2".into()));
        }
        let g = Generators::new(s)?;
        let one = rat(1);
        Ok(SchurAtOne {
            ws,
            e: [g.e[0].eval(&one)?, g.e[1].eval(&one)?],
            f: [g.f[0].eval(&one)?, g.f[1].eval(&one)?],
            t: g.t.eval(&one)?,
            one: RatMatrix::identity(ws.len()),
        })
    }

    /// `eta_{i,j}` at `q = 1`: the indicator of the W-orbit of `(i, j)`.
    pub fn eta(&self, i: Delta, j: Delta) -> Option<RatMatrix> {
        let i = delta_index(self.ws, i)?;
        let j = delta_index(self.ws, j)?;
        let mut m = RatMatrix::zero(self.ws.len());
        for (k, l) in self.ws.pair_orbit(i, j) {
            m.add_to(k, l, &rat(1));
        }
        Some(m)
    }
}

fn prod(ms: &[&RatMatrix]) -> RatMatrix {
    let mut it = ms.iter();
    let first = (*it.next().expect("nonempty product")).clone();
    it.fold(first, |acc, m| acc.mul(m))
}

fn poly_in(t: &RatMatrix, coeffs: &[i64]) -> RatMatrix {
    let mut out = RatMatrix::zero(t.n);
    let mut pow = RatMatrix::identity(t.n);
    for c in coeffs {
        out.axpy(&rat(*c), &pow);
        pow = pow.mul(t);
    }
    out
}

/// Coordinates of an element of the specialized algebra: its entries at the
/// transversal pairs.
pub fn transversal_coords(ws: &WeightSet, m: &RatMatrix) -> SparseVec {
    let mut v = SparseVec::new();
    for (k, &(i, j)) in ws.transversal().iter().enumerate() {
        v.add_to(k, &m.get(i, j));
    }
    v
}

/// Rank of the span of all monomials in `gens` (including the empty one),
/// measured in transversal coordinates.
pub fn monomial_span_rank(ws: &WeightSet, gens: &[RatMatrix]) -> (usize, usize) {
    let mut e = Echelon::new();
    let id = RatMatrix::identity(ws.len());
    e.insert(transversal_coords(ws, &id));
    let mut frontier = vec![id];
    let mut depth = 0;
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for m in &frontier {
            for g in gens {
                let p = g.mul(m);
                if e.insert(transversal_coords(ws, &p)) {
                    next.push(p);
                }
            }
        }
        if !next.is_empty() {
            depth += 1;
        }
        frontier = next;
    }
    (e.rank(), depth)
}

/// The relations expressing every `eta_{i,j}` of `S(2)` through the
/// generators at `q = 1`, followed by generation checks by spanning at `q = 1`
/// and at each extra sample.
pub fn appendix_c_suite(s: &SchurAlgebra, samples: &[Rat]) -> Result<SuiteReport> {
    let ws = s.ws();
    let a = SchurAtOne::new(s)?;
    let mut r = SuiteReport::new("C");
    let group = ws.group();
    let eta = |i: Delta, j: Delta| a.eta(i, j).expect("weights of X_2");
    let (e0, e1, f0, f1, t, one) = (&a.e[0], &a.e[1], &a.f[0], &a.f[1], &a.t, &a.one);
    let half = ratio(1, 2);
    let quarter = ratio(1, 4);
    let sub = |x: &RatMatrix, c: i64| x.sub(&one.scale(&rat(c)));
    let mut rel = |id: &str, inst: String, lhs: RatMatrix, rhs: RatMatrix| {
        let pass = lhs == rhs;
        let desc = |m: &RatMatrix| format!("{} nonzero entries", m.cols.iter().map(|c| c.0.len()).sum::<usize>());
        r.push(id, inst, pass, desc(&lhs), desc(&rhs));
    };

    let z = (0, 0, 0);
    let p = (0, 1, -1);
    let u = (1, 1, -2);
    let v = (0, 2, -2);
    let reg = (1, 2, -3);
    let w4 = (2, 2, -4);
    let e_zz = eta(z, z);
    let e_pp = eta(p, p);
    let e_uu = eta(u, u);
    let e_rr = eta(reg, reg);
    let f0e0 = f0.mul(e0);
    let e0f0 = e0.mul(f0);
    let tm1 = sub(t, 1);

    rel("C.1", show(z), e_zz.clone(), prod(&[e0, e0, f0, f0]).scale(&ratio(1, 24)));
    rel("C.2", show(p), e_pp.clone(), prod(&[e1, e0, f0, f1]).scale(&half));
    rel("C.3", show((1, 0, -1)), eta((1, 0, -1), p), tm1.mul(&e_pp));
    rel("C.4", show((1, -1, 0)), eta((1, -1, 0), p), poly_in(t, &[-1, -2, 1]).mul(&e_pp));
    rel(
        "C.5",
        show((0, -1, 1)),
        eta((0, -1, 1), p),
        prod(&[&tm1, &poly_in(t, &[-2, -2, 1]), &e_pp]).scale(&half),
    );
    rel("C.6", show(p), eta(p, z), f0.mul(&e_zz));
    rel("C.7", show(z), eta(z, p), e0.mul(&e_pp));
    rel("C.8", show(u), e_uu.clone(), prod(&[e1, e1, f1, f1]).scale(&quarter));
    rel("C.9", show((-1, 2, -1)), eta((-1, 2, -1), u), sub(&f0e0, 2).mul(&e_uu));
    let x = sub(&f0e0, 2);
    rel("C.10", show((-2, 1, 1)), eta((-2, 1, 1), u), sub(&x.mul(&x), 2).mul(&e_uu));
    rel(
        "C.11",
        show((-1, -1, 2)),
        eta((-1, -1, 2), u),
        prod(&[f0, &eta((0, -1, 1), p), e0, &e_uu]).sub(&eta((-2, 1, 1), u)).scale(&half),
    );
    rel("C.12", show(u), eta(u, z), f0.mul(f0).scale(&half));
    rel("C.13", show(z), eta(z, u), e0.mul(e0).scale(&half));
    rel("C.14", show(u), eta(u, p), f0.mul(&e_pp));
    rel("C.15", show((2, -1, -1)), eta((2, -1, -1), p), prod(&[f0, &sub(&e0f0, 3), &e_pp]));
    rel(
        "C.16",
        show((1, -2, 1)),
        eta((1, -2, 1), p),
        sub(&f0e0, 1).mul(&eta((2, -1, -1), p)).sub(&prod(&[f0, &sub(&e0f0, 2), &e_pp])),
    );
    rel("C.17", show(p), eta(p, u), e0.mul(&e_uu));
    rel("C.18", show((-1, 1, 0)), eta((-1, 1, 0), u), prod(&[e0, &sub(&f0e0, 3), &e_uu]));
    rel(
        "C.19",
        show((-1, 0, 1)),
        eta((-1, 0, 1), u),
        sub(&e0f0, 1).mul(&eta((-1, 1, 0), u)).sub(&prod(&[e0, &sub(&f0e0, 2), &e_uu])),
    );
    let e_vv = eta(v, v);
    rel("C.20", show(v), e_vv.clone(), prod(&[e0, f0, f1, e1]).scale(&half));
    rel("C.21", show((2, 0, -2)), eta((2, 0, -2), v), prod(&[f1, &eta((1, 0, -1), p), e1]));
    rel("C.22", show((2, -2, 0)), eta((2, -2, 0), v), prod(&[f1, &eta((1, -1, 0), p), e1]));
    rel("C.23", show((0, -2, 2)), eta((0, -2, 2), v), prod(&[f1, &eta((0, -1, 1), p), e1]));
    let at = |d: Delta, w: usize| ws.weight(act_right(ws, delta_index(ws, d).expect("in X_2"), w)).to_g2_delta();
    let mut seen = alloc::collections::BTreeSet::new();
    for abc in [z, p, u] {
        for w in 0..group.order() {
            let (i, i2) = (at(v, w), at(p, w));
            if seen.insert(("C.24", i, i2, abc)) {
                rel("C.24", format!("{},{}", show(i), show(abc)), eta(i, abc), f1.mul(&eta(i2, abc)));
            }
            let j = at(abc, w);
            if seen.insert(("C.25", j, j, abc)) {
                rel("C.25", format!("{},{}", show(j), show(abc)), eta(j, v), eta(j, p).mul(e1));
            }
        }
    }
    let mut rhs = one.clone();
    for d in [z, p, u, v, w4] {
        rhs = rhs.sub(&eta(d, d));
    }
    rel("C.26", show(reg), e_rr.clone(), rhs);
    let chain = [
        ("C.27", (2, 1, -3), tm1.mul(&e_rr)),
        ("C.28", (-1, 3, -2), sub(&prod(&[f0, f1, e1, e0]), 1).mul(&e_rr)),
    ];
    for (id, d, m) in chain {
        rel(id, show(d), eta(d, reg), m);
    }
    let er = |d: Delta| eta(d, reg);
    rel("C.29", show((-2, 3, -1)), er((-2, 3, -1)), tm1.mul(&er((-1, 3, -2))));
    rel("C.30", show((3, -1, -2)), er((3, -1, -2)), er((-1, 3, -2)).mul(&er((2, 1, -3))));
    rel("C.31", show((3, -2, -1)), er((3, -2, -1)), tm1.mul(&er((3, -1, -2))));
    rel("C.32", show((1, -3, 2)), er((1, -3, 2)), er((-2, 3, -1)).mul(&er((3, -2, -1))));
    rel("C.33", show((2, -3, 1)), er((2, -3, 1)), tm1.mul(&er((1, -3, 2))));
    rel("C.34", show((-3, 2, 1)), er((-3, 2, 1)), er((-1, 3, -2)).mul(&er((-2, 3, -1))));
    rel("C.35", show((-3, 1, 2)), er((-3, 1, 2)), tm1.mul(&er((-3, 2, 1))));
    rel("C.36", show((-1, -2, 3)), er((-1, -2, 3)), er((1, -3, 2)).mul(&er((-1, 3, -2))));
    rel("C.37", show((-2, -1, 3)), er((-2, -1, 3)), tm1.mul(&er((-1, -2, 3))));
    rel("C.38", show(z), eta(z, reg), prod(&[e0, e1, e0]));
    for w in 0..group.order() {
        let rw = at(reg, w);
        let inst = |d: Delta| format!("{},w={}", show(d), group.render(w));
        let e_rw = eta(rw, reg);
        let (pw, uw, vw) = (at(p, w), at(u, w), at(v, w));
        rel("C.39", inst(pw), eta(pw, reg), prod(&[e1, e0, &e_rw]));
        rel("C.40", inst(uw), eta(uw, reg), e1.mul(&e_rw));
        rel("C.41", inst(vw), eta(vw, reg), e0.mul(&e_rw));
        rel("C.43", inst(rw), eta(rw, p), prod(&[&e_rw, f0, f1]));
        rel("C.44", inst(rw), eta(rw, u), e_rw.mul(f1));
        rel("C.45", inst(rw), eta(rw, v), e_rw.mul(f0));
    }
    rel("C.42", show(reg), eta(reg, z), prod(&[f0, f1, f0]));
    rel("C.46", show(w4), eta(w4, w4), prod(&[f1, f1, e1, e1]).scale(&quarter));
    for (id, d, du) in [
        ("C.47", (-2, 4, -2), (-1, 2, -1)),
        ("C.48", (-4, 2, 2), (-2, 1, 1)),
        ("C.49", (-2, -2, 4), (-1, -1, 2)),
    ] {
        rel(id, show(d), eta(d, w4), prod(&[f1, f1, &eta(du, u), e1, e1]).scale(&quarter));
    }
    for abc in [z, p, v, u, reg] {
        for w in 0..group.order() {
            let (i, i2) = (at(w4, w), at(u, w));
            if seen.insert(("C.50", i, i2, abc)) {
                rel("C.50", format!("{},{}", show(i), show(abc)), eta(i, abc), prod(&[f1, f1, &eta(i2, abc)]).scale(&half));
            }
            let j = at(abc, w);
            if seen.insert(("C.51", j, j, abc)) {
                rel("C.51", format!("{},{}", show(j), show(abc)), eta(j, w4), prod(&[&eta(j, u), e1, e1]).scale(&half));
            }
        }
    }

    let dim = ws.xi().len();
    let (rank, depth) = monomial_span_rank(ws, &[e0.clone(), e1.clone(), f0.clone(), f1.clone(), t.clone()]);
    r.push("C.span", "q=1".into(), rank == dim, format!("rank {} at depth {}", rank, depth), format!("{}", dim));
    let gens = Generators::new(s)?;
    for q in samples {
        let mats: Vec<RatMatrix> = gens.all().iter().map(|g| g.eval(q)).collect::<Result<_>>()?;
        let (rank, depth) = monomial_span_rank(ws, &mats);
        r.push(
            "C.span",
            format!("q={}", q),
            rank == dim,
            format!("rank {} at depth {}", rank, depth),
            format!("{}", dim),
        );
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn xn_sizes() {
        for (n, size) in [(1, 13), (2, 37), (3, 73)] {
            assert_eq!(build_xn(n).unwrap().len(), size);
        }
        let ws = build_xn(2).unwrap();
        assert_eq!(ws.orbits().len(), 6);
        assert_eq!(label_bound(&ws), 2);
        assert!(build_xn(0).is_err());
    }

    #[test]
    fn eps_labels_normalize() {
        assert_eq!(EpsWeight::new(3, 1), EpsWeight { a: 1, b: 3 });
        assert_eq!(EpsWeight::new(0, 2).antidominant(), (0, 2, -2));
        assert_eq!(EpsWeight::new(1, 2).to_string(), "e1+e2");
    }

    #[test]
    fn generator_examples() {
        let ws = build_xn(1).unwrap();
        let s = SchurAlgebra::new(&ws);
        let e0 = gen_e(&s, 0).unwrap();
        let f0 = gen_f(&s, 0).unwrap();
        let t = gen_t(&s).unwrap();
        let v = |d: Delta| TElement::basis(delta_index(&ws, d).unwrap());
        assert_eq!(e0.apply(&v((0, 1, -1))), v((0, 0, 0)));
        let six = [(0, -1, 1), (-1, 0, 1), (1, -1, 0), (-1, 1, 0), (1, 0, -1), (0, 1, -1)];
        let mut expect = TElement::zero();
        for (k, d) in six.iter().enumerate() {
            expect.add_scaled(&v(*d), &LaurentPoly::q_pow(k as i32));
        }
        assert_eq!(f0.apply(&v((0, 0, 0))), expect);
        let mut tv = v((0, -1, 1)).shift(-2);
        tv.add_scaled(&v((-1, 0, 1)), &LaurentPoly::q_pow(-1));
        tv.add_scaled(&v((1, -1, 0)), &LaurentPoly::one());
        assert_eq!(t.apply(&v((0, -1, 1))), tv);
        assert_eq!(t, gen_t_standard(&s).unwrap());
        for g in [&e0, &f0, &t] {
            assert_eq!(&s.bar(g).unwrap(), g);
        }
        assert!(gen_e(&s, 1).is_err());
    }

    #[test]
    fn bar_corpus_on_x2() {
        let ws = build_xn(2).unwrap();
        let r = appendix_a_suite(&ws);
        let bad: Vec<_> = r.failures().collect();
        assert!(bad.is_empty(), "{:?}", bad.first());
    }
}
