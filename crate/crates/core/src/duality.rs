//! Double centralizer check for `S_q` and the Hecke action on `T_f`, by exact
//! rational linear algebra at sampled values of `q`.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{Echelon, Rat, RatMatrix, SparseVec};
use crate::schur::SchurAlgebra;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualitySample {
    /// `q` rendered as `n` or `n/d`.
    pub q: alloc::string::String,
    pub centralizer_dim: usize,
    pub hecke_rank: usize,
    pub hecke_commutes: bool,
    /// Commutator equations consumed before the rank bound was reached.
    pub equations: usize,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityReport {
    pub weyl_order: usize,
    pub t_dim: usize,
    pub schur_dim: usize,
    /// Largest `|exponent|` among the standard basis entries.
    pub exponent_bound: i32,
    pub samples: Vec<DualitySample>,
    pub pass: bool,
}

fn rows_of(m: &RatMatrix) -> Vec<Vec<(usize, Rat)>> {
    let mut rows = alloc::vec![Vec::new(); m.n];
    for (j, col) in m.cols.iter().enumerate() {
        for (i, x) in &col.0 {
            rows[*i].push((j, x.clone()));
        }
    }
    rows
}

/// Adds the equations `M X - X M = 0` in the unknowns `X[i][j]` (index `i*n+j`)
/// until the echelon reaches `target` rank. Returns the number consumed.
fn add_commutator_equations(e: &mut Echelon, m: &RatMatrix, target: usize) -> usize {
    let n = m.n;
    let rows = rows_of(m);
    let mut used = 0;
    for i in 0..n {
        for j in 0..n {
            if e.rank() >= target {
                return used;
            }
            let mut eq = SparseVec::new();
            for (k, x) in &rows[i] {
                eq.add_to(k * n + j, x);
            }
            for (k, x) in &m.cols[j].0 {
                eq.add_to(i * n + k, &-x);
            }
            used += 1;
            if !eq.is_zero() {
                e.insert(eq);
            }
        }
    }
    used
}

fn render_rat(q: &Rat) -> alloc::string::String {
    if q.denom() == &num_bigint::BigInt::from(1) {
        alloc::format!("{}", q.numer())
    } else {
        alloc::format!("{}/{}", q.numer(), q.denom())
    }
}

/// Verifies at each sample `q` that the centralizer of `S_q` in all matrices
/// on `T_f` has dimension `|W|` and equals the span of the Hecke action.
pub fn verify_duality(s: &SchurAlgebra, samples: &[Rat]) -> Result<DualityReport> {
    if !s.ws().has_regular_orbit() {
        return Err(Error::NoRegularOrbit);
    }
    centralizer_report(s, samples)
}

/// The same computation as [`verify_duality`] without the regular orbit
/// precondition. Without a regular orbit the Hecke action need not be
/// faithful, and `pass` is then false.
pub fn centralizer_report(s: &SchurAlgebra, samples: &[Rat]) -> Result<DualityReport> {
    let ws = s.ws();
    let group = ws.group();
    let n = ws.len();
    let order = group.order();
    let basis: Vec<_> = (0..s.dim()).map(|k| s.std(k)).collect();
    let exponent_bound = basis
        .iter()
        .flat_map(|b| b.nonzero_entries().flat_map(|(_, _, c)| [c.min_degree(), c.max_degree()]))
        .flatten()
        .map(i32::unsigned_abs)
        .max()
        .unwrap_or(0) as i32;
    let mut out = Vec::new();
    for q in samples {
        if q.is_zero() {
            return Err(Error::BadArgument("q = 0 is not a valid sample".into()));
        }
        let mats: Vec<RatMatrix> = basis.iter().map(|b| b.eval(q)).collect::<Result<_>>()?;
        let gens: Vec<RatMatrix> =
            (0..ws.datum().rank()).map(|k| s.hecke_matrix(group.generator(k), q)).collect::<Result<_>>()?;
        let hecke_commutes = gens.iter().all(|h| mats.iter().all(|m| h.mul(m) == m.mul(h)));
        let mut span = Echelon::new();
        for w in 0..order {
            span.insert(s.hecke_matrix(w, q)?.flatten());
        }
        let hecke_rank = span.rank();
        // The Hecke span lies in the centralizer, so once the equations cut it
        // down to that dimension the count is exact.
        let target = if hecke_commutes { n * n - hecke_rank } else { n * n };
        let mut e = Echelon::new();
        let mut equations = 0;
        for m in &mats {
            equations += add_commutator_equations(&mut e, m, target);
            if e.rank() >= target {
                break;
            }
        }
        let centralizer_dim = n * n - e.rank();
        let pass = centralizer_dim == order && hecke_rank == order && hecke_commutes;
        out.push(DualitySample { q: render_rat(q), centralizer_dim, hecke_rank, hecke_commutes, equations, pass });
    }
    let pass = out.iter().all(|x| x.pass);
    Ok(DualityReport { weyl_order: order, t_dim: n, schur_dim: s.dim(), exponent_bound, samples: out, pass })
}
