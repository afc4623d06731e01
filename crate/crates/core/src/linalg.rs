//! Sparse exact linear algebra over the rationals.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// A sparse vector: index to nonzero rational.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SparseVec(pub BTreeMap<usize, Rat>);

impl SparseVec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> Rat {
        self.0.get(&i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_to(&mut self, i: usize, c: &Rat) {
        if c.is_zero() {
            return;
        }
        let e = self.0.entry(i).or_insert_with(Rat::zero);
        *e += c;
        if e.is_zero() {
            self.0.remove(&i);
        }
    }

    /// `self += c * other`.
    pub fn axpy(&mut self, c: &Rat, other: &SparseVec) {
        if c.is_zero() {
            return;
        }
        for (i, x) in &other.0 {
            self.add_to(*i, &(x * c));
        }
    }

    pub fn scale(&self, c: &Rat) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec(self.0.iter().map(|(i, x)| (*i, x * c)).collect())
    }
}

/// Square matrix stored by sparse columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    pub n: usize,
    pub cols: Vec<SparseVec>,
}

impl RatMatrix {
    pub fn zero(n: usize) -> Self {
        RatMatrix { n, cols: vec![SparseVec::new(); n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.cols[i].add_to(i, &Rat::one());
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> Rat {
        self.cols[j].get(i)
    }

    pub fn add_to(&mut self, i: usize, j: usize, c: &Rat) {
        self.cols[j].add_to(i, c);
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(SparseVec::is_zero)
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (j, x) in &v.0 {
            out.axpy(x, &self.cols[*j]);
        }
        out
    }

    /// `self * other`.
    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        RatMatrix { n: self.n, cols: other.cols.iter().map(|c| self.apply(c)).collect() }
    }

    pub fn axpy(&mut self, c: &Rat, other: &RatMatrix) {
        for (a, b) in self.cols.iter_mut().zip(&other.cols) {
            a.axpy(c, b);
        }
    }

    pub fn add(&self, other: &RatMatrix) -> RatMatrix {
        let mut out = self.clone();
        out.axpy(&Rat::one(), other);
        out
    }

    pub fn sub(&self, other: &RatMatrix) -> RatMatrix {
        let mut out = self.clone();
        out.axpy(&-Rat::one(), other);
        out
    }

    pub fn scale(&self, c: &Rat) -> RatMatrix {
        RatMatrix { n: self.n, cols: self.cols.iter().map(|v| v.scale(c)).collect() }
    }

    /// Row-major flattening `i * n + j`.
    pub fn flatten(&self) -> SparseVec {
        let mut v = SparseVec::new();
        for (j, col) in self.cols.iter().enumerate() {
            for (i, x) in &col.0 {
                v.0.insert(i * self.n + j, x.clone());
            }
        }
        v
    }
}

/// An incrementally built row-echelon basis of a subspace.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` modulo the current span.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let mut floor = 0usize;
        loop {
            let next = v.0.range(floor..).find(|(c, _)| self.rows.contains_key(c)).map(|(c, x)| (*c, x.clone()));
            match next {
                Some((c, x)) => {
                    v.axpy(&-x, &self.rows[&c]);
                    floor = c + 1;
                }
                None => return v,
            }
        }
    }

    /// The reduced rows, keyed by pivot column.
    pub fn rows(&self) -> impl Iterator<Item = (usize, &SparseVec)> + '_ {
        self.rows.iter().map(|(p, r)| (*p, r))
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v.clone()).is_zero()
    }

    /// Adds `v`; returns whether it enlarged the span.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let r = self.reduce(v);
        let Some((&p, lead)) = r.0.iter().next() else {
            return false;
        };
        let inv = lead.recip();
        let r = r.scale(&inv);
        let touched: Vec<usize> = self.rows.iter().filter(|(_, row)| row.0.contains_key(&p)).map(|(k, _)| *k).collect();
        for k in touched {
            let row = self.rows.get_mut(&k).expect("present");
            let c = row.get(p);
            row.axpy(&-c, &r);
        }
        self.rows.insert(p, r);
        true
    }
}

/// Rank of a family of vectors.
pub fn rank<I: IntoIterator<Item = SparseVec>>(vs: I) -> usize {
    let mut e = Echelon::new();
    for v in vs {
        e.insert(v);
    }
    e.rank()
}
