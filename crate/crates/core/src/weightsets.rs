//! Finite W-invariant sets of shifted weights, split into linkage classes.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::rootdata::{CartanDatum, Descent, ShiftedWeight};
use crate::weylgroup::{GenSet, WeylGroup};

/// One W-orbit. Members are `i^-_gamma . w` for `w` in `reps`, in that order,
/// and occupy global indices `offset..offset + reps.len()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkageClass {
    pub id: usize,
    pub antidominant: ShiftedWeight,
    pub j: GenSet,
    /// Longest element of `W_J`.
    pub longest: usize,
    /// Minimal representatives of `W_J \ W`, ShortLex.
    pub reps: Vec<usize>,
    pub offset: usize,
}

impl LinkageClass {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn is_regular(&self) -> bool {
        self.j.is_empty()
    }

    pub fn indices(&self) -> core::ops::Range<usize> {
        self.offset..self.offset + self.reps.len()
    }

    pub fn antidominant_index(&self) -> usize {
        self.offset
    }
}

/// An element `(gamma, g, nu)` of the index set of the standard basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct XiTriple {
    pub gamma: usize,
    pub g: usize,
    pub nu: usize,
    /// Longest element of `W_gamma g W_nu`.
    pub gplus: usize,
}

#[derive(Debug, Clone)]
pub struct WeightSet {
    group: WeylGroup,
    elements: Vec<ShiftedWeight>,
    lookup: BTreeMap<Vec<i64>, usize>,
    orbit_of: Vec<usize>,
    rep_of: Vec<usize>,
    reflect: Vec<Vec<u32>>,
    parent: Vec<Option<(usize, usize)>>,
    orbits: Vec<LinkageClass>,
    xi: Vec<XiTriple>,
    xi_index: BTreeMap<(usize, usize, usize), usize>,
    pairs: Vec<(usize, usize)>,
    pair_index: BTreeMap<(usize, usize), usize>,
}

impl WeightSet {
    /// The union of the W-orbits of `seeds`.
    pub fn close_under_w(group: WeylGroup, seeds: &[ShiftedWeight]) -> Result<Self> {
        if seeds.is_empty() {
            return Err(Error::BadArgument("no seed weights given".into()));
        }
        let datum = group.datum().clone();
        let mut antis: Vec<ShiftedWeight> = Vec::new();
        for s in seeds {
            let (a, _) = datum.antidominant_rep(s)?;
            if !antis.contains(&a) {
                antis.push(a);
            }
        }
        antis.sort_by(|x, y| {
            let key = |w: &ShiftedWeight| w.0.iter().map(|m| m.abs()).sum::<i64>();
            key(x).cmp(&key(y)).then_with(|| y.0.cmp(&x.0))
        });
        let mut elements = Vec::new();
        let mut orbit_of = Vec::new();
        let mut rep_of = Vec::new();
        let mut orbits = Vec::new();
        for (id, a) in antis.into_iter().enumerate() {
            let j = GenSet::from_indices((0..datum.rank()).filter(|&k| a.0[k] == 0));
            let p = group.parabolic(j);
            let offset = elements.len();
            for &w in &p.min_reps {
                elements.push(group.act(&a, w)?);
                orbit_of.push(id);
                rep_of.push(w);
            }
            orbits.push(LinkageClass { id, antidominant: a, j, longest: p.longest, reps: p.min_reps, offset });
        }
        let lookup: BTreeMap<Vec<i64>, usize> =
            elements.iter().enumerate().map(|(i, e)| (e.0.clone(), i)).collect();
        let mut reflect = Vec::with_capacity(elements.len());
        for e in &elements {
            let row = (0..datum.rank())
                .map(|k| datum.reflect(k, e).map(|r| lookup[&r.0] as u32))
                .collect::<Result<Vec<u32>>>()?;
            reflect.push(row);
        }
        let parent = (0..elements.len())
            .map(|i| {
                let w = rep_of[i];
                let word = group.word(w);
                word.last().map(|&k| {
                    let k = k as usize;
                    let orb = &orbits[orbit_of[i]];
                    let wp = group.rmul_gen(w, k);
                    let pos = orb.reps.binary_search(&wp).expect("prefix of a minimal representative");
                    (orb.offset + pos, k)
                })
            })
            .collect();
        let mut ws = WeightSet {
            group,
            elements,
            lookup,
            orbit_of,
            rep_of,
            reflect,
            parent,
            orbits,
            xi: Vec::new(),
            xi_index: BTreeMap::new(),
            pairs: Vec::new(),
            pair_index: BTreeMap::new(),
        };
        ws.build_xi();
        Ok(ws)
    }

    pub fn from_seeds(datum: &CartanDatum, seeds: &[ShiftedWeight], cap: usize) -> Result<Self> {
        let group = WeylGroup::generate_with_cap(datum, cap)?;
        Self::close_under_w(group, seeds)
    }

    fn build_xi(&mut self) {
        let g = &self.group;
        for gamma in 0..self.orbits.len() {
            for nu in 0..self.orbits.len() {
                let (jg, jn) = (self.orbits[gamma].j, self.orbits[nu].j);
                for dc in g.double_cosets(jg, jn) {
                    let t = XiTriple { gamma, g: dc.rep, nu, gplus: dc.longest };
                    let i = self.orbits[gamma].offset + self.orbits[gamma].reps.binary_search(&dc.rep).expect("rep");
                    let j = self.orbits[nu].offset;
                    let n = self.xi.len();
                    self.xi_index.insert((gamma, dc.rep, nu), n);
                    self.pair_index.insert((i, j), n);
                    self.pairs.push((i, j));
                    self.xi.push(t);
                }
            }
        }
    }

    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    pub fn datum(&self) -> &CartanDatum {
        self.group.datum()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[ShiftedWeight] {
        &self.elements
    }

    pub fn weight(&self, i: usize) -> &ShiftedWeight {
        &self.elements[i]
    }

    pub fn index_of(&self, w: &ShiftedWeight) -> Option<usize> {
        self.lookup.get(&w.0).copied()
    }

    pub fn orbits(&self) -> &[LinkageClass] {
        &self.orbits
    }

    pub fn orbit(&self, gamma: usize) -> &LinkageClass {
        &self.orbits[gamma]
    }

    pub fn orbit_of(&self, i: usize) -> usize {
        self.orbit_of[i]
    }

    /// The minimal representative `w` with `i = i^- . w`.
    pub fn coset_rep(&self, i: usize) -> usize {
        self.rep_of[i]
    }

    /// Index of `i^-_gamma . w` for a minimal representative `w`.
    pub fn index_in_orbit(&self, gamma: usize, w: usize) -> Option<usize> {
        let o = &self.orbits[gamma];
        o.reps.binary_search(&w).ok().map(|p| o.offset + p)
    }

    pub fn reflect(&self, i: usize, k: usize) -> usize {
        self.reflect[i][k] as usize
    }

    pub fn descent(&self, i: usize, k: usize) -> Descent {
        match self.elements[i].0[k].signum() {
            0 => Descent::Fixed,
            -1 => Descent::Up,
            _ => Descent::Down,
        }
    }

    /// For `i = i^- . w` with `w != 1`: the element `i^- . w s_k` one step
    /// lower and the letter `k`, where `k` ends the ShortLex word of `w`.
    pub fn parent(&self, i: usize) -> Option<(usize, usize)> {
        self.parent[i]
    }

    pub fn has_regular_orbit(&self) -> bool {
        self.orbits.iter().any(LinkageClass::is_regular)
    }

    pub fn regular_orbit(&self) -> Option<usize> {
        self.orbits.iter().position(LinkageClass::is_regular)
    }

    pub fn xi(&self) -> &[XiTriple] {
        &self.xi
    }

    pub fn xi_index(&self, gamma: usize, g: usize, nu: usize) -> Option<usize> {
        self.xi_index.get(&(gamma, g, nu)).copied()
    }

    /// The transversal pairs, aligned with [`WeightSet::xi`].
    pub fn transversal(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn pair_index(&self, i: usize, j: usize) -> Option<usize> {
        self.pair_index.get(&(i, j)).copied()
    }

    /// `(gamma, g, nu) -> (i^-_gamma . g, i^-_nu)` as element indices.
    pub fn xi_to_pair(&self, t: &XiTriple) -> (usize, usize) {
        let i = self.index_in_orbit(t.gamma, t.g).expect("g is a minimal representative");
        (i, self.orbits[t.nu].offset)
    }

    /// Inverse of [`WeightSet::xi_to_pair`], defined on the transversal.
    pub fn pair_to_xi(&self, i: usize, j: usize) -> Result<XiTriple> {
        if !self.is_transversal(i, j) {
            return Err(Error::NotInTransversal { i, j });
        }
        let t = XiTriple {
            gamma: self.orbit_of[i],
            g: self.rep_of[i],
            nu: self.orbit_of[j],
            gplus: 0,
        };
        let n = self.xi_index(t.gamma, t.g, t.nu).ok_or(Error::NotInTransversal { i, j })?;
        Ok(self.xi[n])
    }

    /// Conditions (i)-(ii): `j` antidominant, and `i . s_k` is not below `i`
    /// whenever `s_k` fixes `j`.
    pub fn is_transversal(&self, i: usize, j: usize) -> bool {
        self.elements[j].is_antidominant()
            && (0..self.datum().rank())
                .all(|k| self.elements[j].0[k] != 0 || self.descent(i, k) != Descent::Down)
    }

    /// The transversal computed directly from conditions (i)-(ii).
    pub fn transversal_by_conditions(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for o in &self.orbits {
            let j = o.offset;
            for i in 0..self.len() {
                if self.is_transversal(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// The W-orbit of `(i, j)` under the diagonal action, as a sorted list.
    pub fn pair_orbit(&self, i: usize, j: usize) -> Vec<(usize, usize)> {
        let mut seen = alloc::collections::BTreeSet::new();
        seen.insert((i, j));
        let mut stack = alloc::vec![(i, j)];
        while let Some((a, b)) = stack.pop() {
            for k in 0..self.datum().rank() {
                let p = (self.reflect(a, k), self.reflect(b, k));
                if seen.insert(p) {
                    stack.push(p);
                }
            }
        }
        seen.into_iter().collect()
    }

    fn len_of(&self, w: usize) -> i64 {
        self.group.length(w) as i64
    }

    /// `d(xi) = l(g+) + l(w0) - l(w0^gamma) - l(w0^nu)`.
    pub fn orbit_dimension(&self, t: &XiTriple) -> i64 {
        self.len_of(t.gplus) + self.len_of(self.group.longest())
            - self.len_of(self.orbits[t.gamma].longest)
            - self.len_of(self.orbits[t.nu].longest)
    }

    /// `(gamma, 1, gamma)`.
    pub fn diagonal(&self, gamma: usize) -> XiTriple {
        self.xi[self.xi_index(gamma, 0, gamma).expect("identity double coset")]
    }

    /// The exponent `l(g+) - l(w0^nu)` relating the two standard bases.
    pub fn std_exponent(&self, t: &XiTriple) -> i64 {
        self.len_of(t.gplus) - self.len_of(self.orbits[t.nu].longest)
    }

    /// Renders an element as delta coordinates in type G2, pairings otherwise.
    pub fn render(&self, i: usize) -> alloc::string::String {
        self.elements[i].render(self.datum())
    }

    pub fn render_xi(&self, t: &XiTriple) -> alloc::string::String {
        format!(
            "({},{},{})",
            self.orbits[t.gamma].antidominant.render(self.datum()),
            self.group.render(t.g),
            self.orbits[t.nu].antidominant.render(self.datum())
        )
    }
}
