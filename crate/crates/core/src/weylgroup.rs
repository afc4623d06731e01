//! Finite Weyl groups, enumerated in full.
//!
//! Elements are indices into a table. Index order is ShortLex order of the
//! least reduced words, and index 0 is the identity. Generators are numbered
//! from 0 internally and printed from 1 (`s1*s2`).

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::rootdata::{CartanDatum, ShiftedWeight};

pub const DEFAULT_CAP: usize = 51_840;

/// A subset of the simple reflections, as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GenSet(pub u32);

impl GenSet {
    pub const EMPTY: GenSet = GenSet(0);

    pub fn full(rank: usize) -> Self {
        GenSet(((1u64 << rank) - 1) as u32)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        GenSet(it.into_iter().fold(0, |acc, k| acc | (1 << k)))
    }

    pub fn contains(self, k: usize) -> bool {
        self.0 >> k & 1 == 1
    }

    pub fn insert(&mut self, k: usize) {
        self.0 |= 1 << k;
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn intersects(self, other: GenSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&k| self.contains(k))
    }
}

impl fmt::Display for GenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (n, k) in self.iter().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", k + 1)?;
        }
        f.write_str("}")
    }
}

#[derive(Debug, Clone)]
pub struct WeylGroup {
    datum: CartanDatum,
    base: ShiftedWeight,
    weights: Vec<ShiftedWeight>,
    lookup: BTreeMap<Vec<i64>, usize>,
    words: Vec<Vec<u8>>,
    rmul: Vec<Vec<u32>>,
    lmul: Vec<Vec<u32>>,
    inv: Vec<u32>,
    right_desc: Vec<GenSet>,
    left_desc: Vec<GenSet>,
    longest: usize,
}

/// `W_J`, its longest element and the minimal right coset representatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parabolic {
    pub j: GenSet,
    pub elements: Vec<usize>,
    pub longest: usize,
    pub min_reps: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleCoset {
    pub rep: usize,
    pub elements: Vec<usize>,
    pub longest: usize,
}

impl WeylGroup {
    pub fn generate(datum: &CartanDatum) -> Result<Self> {
        Self::generate_with_cap(datum, DEFAULT_CAP)
    }

    pub fn generate_with_cap(datum: &CartanDatum, cap: usize) -> Result<Self> {
        if datum.cartan_type.weyl_order() > cap as u128 {
            return Err(Error::GroupTooLarge { cap });
        }
        let d = datum.rank();
        let base = ShiftedWeight(vec![-1; d]);
        let mut weights = vec![base.clone()];
        let mut lookup = BTreeMap::new();
        lookup.insert(base.0.clone(), 0usize);
        let mut words: Vec<Vec<u8>> = vec![Vec::new()];
        let mut rmul: Vec<Vec<u32>> = Vec::new();
        let mut head = 0;
        while head < weights.len() {
            let mut row = Vec::with_capacity(d);
            for k in 0..d {
                let next = datum.reflect(k, &weights[head])?;
                let idx = match lookup.get(&next.0) {
                    Some(&i) => i,
                    None => {
                        let i = weights.len();
                        if i >= cap {
                            return Err(Error::GroupTooLarge { cap });
                        }
                        lookup.insert(next.0.clone(), i);
                        let mut w = words[head].clone();
                        w.push(k as u8);
                        words.push(w);
                        weights.push(next);
                        i
                    }
                };
                row.push(idx as u32);
            }
            rmul.push(row);
            head += 1;
        }
        let n = weights.len();
        let inv: Vec<u32> = (0..n)
            .map(|w| words[w].iter().rev().fold(0u32, |x, &k| rmul[x as usize][k as usize]))
            .collect();
        let lmul: Vec<Vec<u32>> = (0..n)
            .map(|w| (0..d).map(|k| inv[rmul[inv[w] as usize][k] as usize]).collect())
            .collect();
        let len = |w: usize| words[w].len();
        let right_desc: Vec<GenSet> = (0..n)
            .map(|w| GenSet::from_indices((0..d).filter(|&k| len(rmul[w][k] as usize) < len(w))))
            .collect();
        let left_desc: Vec<GenSet> = (0..n)
            .map(|w| GenSet::from_indices((0..d).filter(|&k| len(lmul[w][k] as usize) < len(w))))
            .collect();
        let longest = n - 1;
        Ok(WeylGroup {
            datum: datum.clone(),
            base,
            weights,
            lookup,
            words,
            rmul,
            lmul,
            inv,
            right_desc,
            left_desc,
            longest,
        })
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn order(&self) -> usize {
        self.words.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn longest(&self) -> usize {
        self.longest
    }

    pub fn length(&self, w: usize) -> usize {
        self.words[w].len()
    }

    pub fn word(&self, w: usize) -> &[u8] {
        &self.words[w]
    }

    pub fn generator(&self, k: usize) -> usize {
        self.rmul[0][k] as usize
    }

    /// The image of the tracking weight `(-1,...,-1)` under `w`.
    pub fn tracking_weight(&self, w: usize) -> &ShiftedWeight {
        &self.weights[w]
    }

    pub fn base_weight(&self) -> &ShiftedWeight {
        &self.base
    }

    pub fn find_by_weight(&self, m: &ShiftedWeight) -> Option<usize> {
        self.lookup.get(&m.0).copied()
    }

    /// `w s_k`.
    pub fn rmul_gen(&self, w: usize, k: usize) -> usize {
        self.rmul[w][k] as usize
    }

    /// `s_k w`.
    pub fn lmul_gen(&self, w: usize, k: usize) -> usize {
        self.lmul[w][k] as usize
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.words[y].iter().fold(x, |acc, &k| self.rmul_gen(acc, k as usize))
    }

    pub fn inverse(&self, w: usize) -> usize {
        self.inv[w] as usize
    }

    pub fn from_word(&self, word: &[usize]) -> Result<usize> {
        let mut w = 0;
        for &k in word {
            if k >= self.rank() {
                return Err(Error::IndexOutOfRange { index: k, rank: self.rank() });
            }
            w = self.rmul_gen(w, k);
        }
        Ok(w)
    }

    pub fn right_descents(&self, w: usize) -> GenSet {
        self.right_desc[w]
    }

    pub fn left_descents(&self, w: usize) -> GenSet {
        self.left_desc[w]
    }

    /// Applies `w` on the right of a shifted weight of the same type.
    pub fn act(&self, i: &ShiftedWeight, w: usize) -> Result<ShiftedWeight> {
        let mut cur = i.clone();
        for &k in &self.words[w] {
            cur = self.datum.reflect(k as usize, &cur)?;
        }
        Ok(cur)
    }

    pub fn bruhat_leq(&self, x: usize, y: usize) -> bool {
        let (mut x, mut y) = (x, y);
        loop {
            if x == y {
                return true;
            }
            if self.length(x) >= self.length(y) {
                return false;
            }
            let s = self.right_desc[y].0.trailing_zeros() as usize;
            if self.right_desc[x].contains(s) {
                x = self.rmul_gen(x, s);
            }
            y = self.rmul_gen(y, s);
        }
    }

    /// Pairs `(x, y)` with `x < y` and `l(y) = l(x) + 1`.
    pub fn bruhat_covers(&self) -> Vec<(usize, usize)> {
        let n = self.order();
        let mut out = Vec::new();
        for y in 0..n {
            for x in 0..n {
                if self.length(x) + 1 == self.length(y) && self.bruhat_leq(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    pub fn in_parabolic(&self, j: GenSet, w: usize) -> bool {
        self.words[w].iter().all(|&k| j.contains(k as usize))
    }

    pub fn parabolic(&self, j: GenSet) -> Parabolic {
        let elements: Vec<usize> = (0..self.order()).filter(|&w| self.in_parabolic(j, w)).collect();
        let longest = *elements.iter().max_by_key(|&&w| self.length(w)).expect("identity is present");
        let min_reps = (0..self.order()).filter(|&w| !self.left_desc[w].intersects(j)).collect();
        Parabolic { j, elements, longest, min_reps }
    }

    /// Writes `w = u v` with `u` in `W_J` and `v` a minimal representative of `W_J w`.
    pub fn factor_left(&self, j: GenSet, w: usize) -> (usize, usize) {
        let mut u = 0;
        let mut v = w;
        loop {
            let d = GenSet(self.left_desc[v].0 & j.0);
            if d.is_empty() {
                return (u, v);
            }
            let k = d.0.trailing_zeros() as usize;
            v = self.lmul_gen(v, k);
            u = self.rmul_gen(u, k);
        }
    }

    /// The minimal element of `W_{jl} w W_{jr}`.
    pub fn double_coset_min(&self, jl: GenSet, jr: GenSet, w: usize) -> usize {
        let mut v = w;
        loop {
            let l = GenSet(self.left_desc[v].0 & jl.0);
            if !l.is_empty() {
                v = self.lmul_gen(v, l.0.trailing_zeros() as usize);
                continue;
            }
            let r = GenSet(self.right_desc[v].0 & jr.0);
            if !r.is_empty() {
                v = self.rmul_gen(v, r.0.trailing_zeros() as usize);
                continue;
            }
            return v;
        }
    }

    /// Double cosets `W_{jl} g W_{jr}` ordered by their minimal element.
    pub fn double_cosets(&self, jl: GenSet, jr: GenSet) -> Vec<DoubleCoset> {
        let reps: Vec<usize> = (0..self.order())
            .filter(|&w| !self.left_desc[w].intersects(jl) && !self.right_desc[w].intersects(jr))
            .collect();
        reps.into_iter()
            .map(|rep| {
                let mut seen = BTreeSet::new();
                seen.insert(rep);
                let mut stack = vec![rep];
                while let Some(w) = stack.pop() {
                    for k in jl.iter() {
                        let x = self.lmul_gen(w, k);
                        if seen.insert(x) {
                            stack.push(x);
                        }
                    }
                    for k in jr.iter() {
                        let x = self.rmul_gen(w, k);
                        if seen.insert(x) {
                            stack.push(x);
                        }
                    }
                }
                let elements: Vec<usize> = seen.into_iter().collect();
                let longest = *elements.last().expect("nonempty");
                DoubleCoset { rep, elements, longest }
            })
            .collect()
    }

    /// Renders as `s1*s2*s1`, or `e` for the identity.
    pub fn render(&self, w: usize) -> String {
        render_word(&self.words[w])
    }

    /// Parses `s1*s2`, `s1s2`, `1*2` or `e`; the word need not be reduced.
    pub fn parse(&self, s: &str) -> Result<usize> {
        let word = parse_word(s, self.rank())?;
        self.from_word(&word)
    }
}

pub fn render_word(word: &[u8]) -> String {
    if word.is_empty() {
        return "e".to_string();
    }
    let parts: Vec<String> = word.iter().map(|k| format!("s{}", k + 1)).collect();
    parts.join("*")
}

pub fn parse_word(s: &str, rank: usize) -> Result<Vec<usize>> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let err = || Error::ParseElement(s.to_string());
    if t.is_empty() || t == "e" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for tok in t.split(['*', 's']).filter(|x| !x.is_empty()) {
        let k: usize = tok.parse().map_err(|_| err())?;
        if k == 0 || k > rank {
            return Err(Error::IndexOutOfRange { index: k, rank });
        }
        out.push(k - 1);
    }
    if out.is_empty() {
        return Err(err());
    }
    Ok(out)
}
