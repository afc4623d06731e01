//! Cartan data of the irreducible finite types and the combinatorics of
//! rho-shifted weights.
//!
//! Weights are stored by their coroot pairings `m_k = <i, alpha_k^vee>`, so a
//! simple reflection only touches integers and the Hecke-action branch test is
//! the sign of a single coordinate. Nodes follow Bourbaki numbering; in type
//! G2 node 1 is the short root.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CartanType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    G2,
}

impl CartanType {
    pub fn rank(self) -> usize {
        match self {
            CartanType::A(n) | CartanType::B(n) | CartanType::C(n) | CartanType::D(n) | CartanType::E(n) => n,
            CartanType::F4 => 4,
            CartanType::G2 => 2,
        }
    }

    /// Parses labels such as `A3`, `b2`, `E6`, `G2`.
    pub fn parse(label: &str) -> Result<Self> {
        let s = label.trim();
        let err = || Error::UnknownType(label.to_string());
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(err)?.to_ascii_uppercase();
        let n: usize = chars.as_str().parse().map_err(|_| err())?;
        let ty = match (letter, n) {
            ('A', n) if n >= 1 => CartanType::A(n),
            ('B', n) if n >= 2 => CartanType::B(n),
            ('C', n) if n >= 2 => CartanType::C(n),
            ('D', n) if n >= 4 => CartanType::D(n),
            ('E', n) if (6..=8).contains(&n) => CartanType::E(n),
            ('F', 4) => CartanType::F4,
            ('G', 2) => CartanType::G2,
            _ => return Err(err()),
        };
        Ok(ty)
    }

    /// Order of the Weyl group.
    pub fn weyl_order(self) -> u128 {
        fn fact(n: usize) -> u128 {
            (1..=n as u128).product()
        }
        match self {
            CartanType::A(n) => fact(n + 1),
            CartanType::B(n) | CartanType::C(n) => (1u128 << n) * fact(n),
            CartanType::D(n) => (1u128 << (n - 1)) * fact(n),
            CartanType::E(6) => 51_840,
            CartanType::E(7) => 2_903_040,
            CartanType::E(_) => 696_729_600,
            CartanType::F4 => 1_152,
            CartanType::G2 => 12,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CartanType::A(n) => write!(f, "A{}", n),
            CartanType::B(n) => write!(f, "B{}", n),
            CartanType::C(n) => write!(f, "C{}", n),
            CartanType::D(n) => write!(f, "D{}", n),
            CartanType::E(n) => write!(f, "E{}", n),
            CartanType::F4 => f.write_str("F4"),
            CartanType::G2 => f.write_str("G2"),
        }
    }
}

/// Position of one weight relative to another in the dominance order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dominance {
    Less,
    Equal,
    Greater,
    Incomparable,
}

/// How `i . s_k` sits relative to `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Descent {
    Fixed,
    /// `i . s_k` is strictly higher than `i`.
    Up,
    Down,
}

/// A rho-shifted weight, as its vector of coroot pairings.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShiftedWeight(pub Vec<i64>);

impl ShiftedWeight {
    pub fn pairings(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_antidominant(&self) -> bool {
        self.0.iter().all(|&m| m <= 0)
    }

    pub fn is_regular(&self) -> bool {
        self.0.iter().all(|&m| m != 0)
    }

    pub fn descent(&self, k: usize) -> Result<Descent> {
        let m = *self.0.get(k).ok_or(Error::IndexOutOfRange { index: k, rank: self.0.len() })?;
        Ok(match m.signum() {
            0 => Descent::Fixed,
            -1 => Descent::Up,
            _ => Descent::Down,
        })
    }

    /// G2 weight from its delta coordinates `(a, b, c)`, `a + b + c = 0`.
    pub fn from_g2_delta(a: i64, b: i64, c: i64) -> Result<Self> {
        if a + b + c != 0 {
            return Err(Error::InvalidWeight(format!("({},{},{}) does not sum to zero", a, b, c)));
        }
        Ok(ShiftedWeight(vec![a - b, -a]))
    }

    /// Inverse of [`ShiftedWeight::from_g2_delta`]; only meaningful in type G2.
    pub fn to_g2_delta(&self) -> (i64, i64, i64) {
        let (m1, m2) = (self.0[0], self.0[1]);
        let a = -m2;
        let b = -m2 - m1;
        (a, b, -a - b)
    }
}

impl fmt::Display for ShiftedWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (n, m) in self.0.iter().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", m)?;
        }
        f.write_str("]")
    }
}

/// Cartan matrix and Coxeter orders of an irreducible finite type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanDatum {
    pub cartan_type: CartanType,
    rank: usize,
    /// `cartan[j][k] = <alpha_k, alpha_j^vee>`.
    cartan: Vec<Vec<i64>>,
    coxeter: Vec<Vec<u32>>,
    inverse: Vec<Vec<BigRational>>,
}

impl CartanDatum {
    pub fn new(cartan_type: CartanType) -> Self {
        let rank = cartan_type.rank();
        let (edges, lengths) = dynkin(cartan_type);
        let mut cartan = vec![vec![0i64; rank]; rank];
        for (j, row) in cartan.iter_mut().enumerate() {
            row[j] = 2;
        }
        for &(x, y) in &edges {
            for (j, k) in [(x, y), (y, x)] {
                // short-to-long entries carry the bond multiplicity
                cartan[j][k] = -(lengths[k] / lengths[j]).max(1);
            }
        }
        let coxeter = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| {
                        if i == j {
                            1
                        } else {
                            match cartan[i][j] * cartan[j][i] {
                                0 => 2,
                                1 => 3,
                                2 => 4,
                                3 => 6,
                                p => unreachable!("non-finite bond product {}", p),
                            }
                        }
                    })
                    .collect()
            })
            .collect();
        let inverse = invert(&cartan);
        CartanDatum { cartan_type, rank, cartan, coxeter, inverse }
    }

    pub fn parse(label: &str) -> Result<Self> {
        CartanType::parse(label).map(Self::new)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn coxeter_order(&self, i: usize, j: usize) -> u32 {
        self.coxeter[i][j]
    }

    fn check_index(&self, k: usize) -> Result<()> {
        if k < self.rank {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: k, rank: self.rank })
        }
    }

    pub fn check_weight(&self, w: &ShiftedWeight) -> Result<()> {
        if w.rank() == self.rank {
            Ok(())
        } else {
            Err(Error::InvalidWeight(format!(
                "{} has {} coordinates, type {} needs {}",
                w,
                w.rank(),
                self.cartan_type,
                self.rank
            )))
        }
    }

    /// Right action of `s_k`: `i . s_k = i - m_k alpha_k`.
    pub fn reflect(&self, k: usize, i: &ShiftedWeight) -> Result<ShiftedWeight> {
        self.check_index(k)?;
        self.check_weight(i)?;
        let mk = i.0[k];
        Ok(ShiftedWeight(
            i.0.iter().enumerate().map(|(j, &mj)| mj - mk * self.cartan[j][k]).collect(),
        ))
    }

    pub fn descent_sign(&self, i: &ShiftedWeight, k: usize) -> Result<Descent> {
        self.check_index(k)?;
        i.descent(k)
    }

    /// Coordinates of `j - i` in the basis of simple roots.
    pub fn root_coordinates(&self, i: &ShiftedWeight, j: &ShiftedWeight) -> Result<Vec<BigRational>> {
        self.check_weight(i)?;
        self.check_weight(j)?;
        let diff: Vec<BigRational> = i
            .0
            .iter()
            .zip(&j.0)
            .map(|(a, b)| BigRational::from_integer(BigInt::from(b - a)))
            .collect();
        Ok(self
            .inverse
            .iter()
            .map(|row| row.iter().zip(&diff).fold(BigRational::zero(), |acc, (x, y)| acc + x * y))
            .collect())
    }

    /// Dominance order: `i < j` iff `j - i` is a nonzero sum of simple roots
    /// with nonnegative integer coefficients.
    pub fn compare(&self, i: &ShiftedWeight, j: &ShiftedWeight) -> Result<Dominance> {
        let r = self.root_coordinates(i, j)?;
        if r.iter().any(|x| !x.is_integer()) {
            return Ok(Dominance::Incomparable);
        }
        if r.iter().all(|x| x.is_zero()) {
            Ok(Dominance::Equal)
        } else if r.iter().all(|x| !x.is_negative()) {
            Ok(Dominance::Less)
        } else if r.iter().all(|x| !x.is_positive()) {
            Ok(Dominance::Greater)
        } else {
            Ok(Dominance::Incomparable)
        }
    }

    /// The unique antidominant weight in the orbit of `i`, and the simple
    /// reflections applied to reach it.
    pub fn antidominant_rep(&self, i: &ShiftedWeight) -> Result<(ShiftedWeight, Vec<usize>)> {
        self.check_weight(i)?;
        let mut cur = i.clone();
        let mut path = Vec::new();
        while let Some(k) = cur.0.iter().position(|&m| m > 0) {
            cur = self.reflect(k, &cur)?;
            path.push(k);
        }
        Ok((cur, path))
    }
}

/// Edges and squared root lengths (scaled to integers) in Bourbaki numbering.
fn dynkin(t: CartanType) -> (Vec<(usize, usize)>, Vec<i64>) {
    let chain = |n: usize| (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
    match t {
        CartanType::A(n) => (chain(n), vec![1; n]),
        CartanType::B(n) => {
            let mut l = vec![2; n];
            l[n - 1] = 1;
            (chain(n), l)
        }
        CartanType::C(n) => {
            let mut l = vec![1; n];
            l[n - 1] = 2;
            (chain(n), l)
        }
        CartanType::D(n) => {
            let mut e = chain(n - 1);
            e.push((n - 3, n - 1));
            (e, vec![1; n])
        }
        CartanType::E(n) => {
            let mut e = vec![(0, 2), (1, 3)];
            e.extend((2..n - 1).map(|i| (i, i + 1)));
            (e, vec![1; n])
        }
        CartanType::F4 => (chain(4), vec![2, 2, 1, 1]),
        CartanType::G2 => (vec![(0, 1)], vec![1, 3]),
    }
}

fn invert(m: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<BigRational> =
                row.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect();
            r.extend((0..n).map(|j| BigRational::from_integer(BigInt::from((i == j) as i64))));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).expect("Cartan matrices are invertible");
        a.swap(col, piv);
        let p = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x = &*x / &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..2 * n {
                    let t = &a[col][c] * &f;
                    a[r][c] -= t;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

impl fmt::Display for CartanDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cartan_type)
    }
}

impl ShiftedWeight {
    /// Parses `(a,b,c)` delta coordinates (G2 only) or a bracketed pairing
    /// vector such as `[-1,0]`.
    pub fn parse(datum: &CartanDatum, s: &str) -> Result<Self> {
        let t = s.trim();
        let err = || Error::InvalidWeight(t.to_string());
        let nums = |body: &str| -> Result<Vec<i64>> {
            body.split(',').map(|x| x.trim().parse::<i64>().map_err(|_| err())).collect()
        };
        let w = if let Some(body) = t.strip_prefix('(').and_then(|x| x.strip_suffix(')')) {
            if datum.cartan_type != CartanType::G2 {
                return Err(Error::InvalidWeight(format!(
                    "delta coordinates {} are only accepted in type G2",
                    t
                )));
            }
            let v = nums(body)?;
            if v.len() != 3 {
                return Err(err());
            }
            ShiftedWeight::from_g2_delta(v[0], v[1], v[2])?
        } else if let Some(body) = t.strip_prefix('[').and_then(|x| x.strip_suffix(']')) {
            ShiftedWeight(nums(body)?)
        } else {
            return Err(err());
        };
        datum.check_weight(&w)?;
        Ok(w)
    }

    /// `(a,b,c)` in type G2, `[m1,...]` otherwise.
    pub fn render(&self, datum: &CartanDatum) -> String {
        if datum.cartan_type == CartanType::G2 {
            let (a, b, c) = self.to_g2_delta();
            format!("({},{},{})", a, b, c)
        } else {
            format!("{}", self)
        }
    }
}
