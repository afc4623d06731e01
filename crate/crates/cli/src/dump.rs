//! Flat JSON dumps of a weight set and its basis tables, and their inverse.

use std::collections::BTreeMap;

use qschur_core::error::{Error, Result};
use qschur_core::hecke::{HeckeElement, KlTable};
use qschur_core::laurent::LaurentPoly;
use qschur_core::rootdata::{CartanDatum, CartanType, ShiftedWeight};
use qschur_core::schur::{SchurAlgebra, SchurElement};
use qschur_core::tmodule::{canonical_t, TElement};
use qschur_core::weightsets::WeightSet;
use serde::{Deserialize, Serialize};

pub const FORMAT: &str = "qschur-dump/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitRecord {
    pub antidominant: Vec<i64>,
    /// 1-based simple indices fixing the antidominant element.
    pub stabilizer: Vec<usize>,
    pub size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct XiRecord {
    pub gamma: usize,
    pub g: String,
    pub nu: usize,
    pub gplus: String,
    /// The transversal pair `(i, j)` at which coordinates are read.
    pub pair: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dump {
    pub format: String,
    pub cartan_type: String,
    /// Coroot pairings of the antidominant representatives, in orbit order.
    pub seeds: Vec<Vec<i64>>,
    pub weights: Vec<Vec<i64>>,
    pub orbits: Vec<OrbitRecord>,
    pub xi: Vec<XiRecord>,
    /// Standard coordinates of each canonical basis element.
    pub canonical: Vec<BTreeMap<usize, LaurentPoly>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kl: Option<Vec<BTreeMap<usize, LaurentPoly>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub canonical_t: Option<Vec<BTreeMap<usize, LaurentPoly>>>,
    /// Nonzero entries `(i, j, c)` of each standard basis matrix.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub std_matrices: Option<Vec<Vec<(usize, usize, LaurentPoly)>>>,
}

/// Objects rebuilt from a dump.
#[derive(Debug, Clone)]
pub struct Restored {
    pub ws: WeightSet,
    pub canonical: Vec<SchurElement>,
    pub kl: Option<Vec<HeckeElement>>,
    pub canonical_t: Option<Vec<TElement>>,
    pub std: Option<Vec<SchurElement>>,
}

fn sparse_t(v: &TElement) -> BTreeMap<usize, LaurentPoly> {
    v.terms().map(|(i, c)| (i, c.clone())).collect()
}

impl Dump {
    pub fn build(ws: &WeightSet, all: bool) -> Result<Dump> {
        let g = ws.group();
        let s = SchurAlgebra::new(ws);
        let orbits = ws
            .orbits()
            .iter()
            .map(|o| OrbitRecord {
                antidominant: o.antidominant.0.clone(),
                stabilizer: o.j.iter().map(|k| k + 1).collect(),
                size: o.len(),
            })
            .collect();
        let xi = ws
            .xi()
            .iter()
            .zip(ws.transversal())
            .map(|(t, &pair)| XiRecord { gamma: t.gamma, g: g.render(t.g), nu: t.nu, gplus: g.render(t.gplus), pair })
            .collect();
        let mut d = Dump {
            format: FORMAT.to_string(),
            cartan_type: ws.datum().cartan_type.to_string(),
            seeds: ws.orbits().iter().map(|o| o.antidominant.0.clone()).collect(),
            weights: ws.elements().iter().map(|w| w.0.clone()).collect(),
            orbits,
            xi,
            canonical: s.canonical_table()?,
            kl: None,
            canonical_t: None,
            std_matrices: None,
        };
        if all {
            let full = KlTable::full(g);
            d.kl = Some((0..g.order()).map(|w| full.get(w).terms().map(|(y, c)| (y, c.clone())).collect()).collect());
            let mut kl = s.kl().clone();
            d.canonical_t =
                Some((0..ws.len()).map(|i| canonical_t(ws, &mut kl, i).map(|v| sparse_t(&v))).collect::<Result<_>>()?);
            d.std_matrices = Some(
                (0..s.dim())
                    .map(|n| s.std(n).nonzero_entries().map(|(i, j, c)| (i, j, c.clone())).collect())
                    .collect(),
            );
        }
        Ok(d)
    }

    pub fn from_json(text: &str) -> core::result::Result<Dump, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Rebuilds the weight set from the seeds and the stored tables, checking
    /// that the rebuilt set lists the same weights in the same order.
    pub fn restore(&self) -> Result<Restored> {
        if self.format != FORMAT {
            return Err(Error::BadArgument(format!("unknown dump format `{}`", self.format)));
        }
        let t = CartanType::parse(&self.cartan_type)?;
        let datum = CartanDatum::new(t);
        let seeds: Vec<ShiftedWeight> = self.seeds.iter().map(|m| ShiftedWeight(m.clone())).collect();
        let cap = usize::try_from(t.weyl_order()).unwrap_or(usize::MAX);
        let ws = WeightSet::from_seeds(&datum, &seeds, cap)?;
        let listed: Vec<Vec<i64>> = ws.elements().iter().map(|w| w.0.clone()).collect();
        if listed != self.weights {
            return Err(Error::BadArgument("dump weights do not match the set generated by its seeds".into()));
        }
        let s = SchurAlgebra::new(&ws);
        if self.canonical.len() != s.dim() {
            return Err(Error::BadArgument(format!("dump has {} canonical rows, expected {}", self.canonical.len(), s.dim())));
        }
        let canonical = self
            .canonical
            .iter()
            .map(|m| {
                let mut c = vec![LaurentPoly::zero(); s.dim()];
                for (k, p) in m {
                    *c.get_mut(*k).ok_or_else(|| Error::BadArgument(format!("triple index {} out of range", k)))? = p.clone();
                }
                Ok(s.from_coords(&c))
            })
            .collect::<Result<_>>()?;
        let kl = self
            .kl
            .as_ref()
            .map(|rows| rows.iter().map(|m| HeckeElement::from_terms(m.iter().map(|(y, c)| (*y, c.clone())))).collect());
        let canonical_t = self
            .canonical_t
            .as_ref()
            .map(|rows| rows.iter().map(|m| TElement::from_terms(m.iter().map(|(i, c)| (*i, c.clone())))).collect());
        let n = ws.len();
        let std = match &self.std_matrices {
            None => None,
            Some(rows) => Some(
                rows.iter()
                    .map(|entries| {
                        let mut m = SchurElement::zero(n);
                        for (i, j, c) in entries {
                            if *i >= n || *j >= n {
                                return Err(Error::BadArgument(format!("matrix entry ({}, {}) out of range", i, j)));
                            }
                            m.set(*i, *j, c.clone());
                        }
                        Ok(m)
                    })
                    .collect::<Result<_>>()?,
            ),
        };
        Ok(Restored { ws, canonical, kl, canonical_t, std })
    }
}
