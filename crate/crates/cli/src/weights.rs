//! Resolution of `--type`, `--weights` and `--n` into a closed weight set.

use std::fs;

use qschur_core::g2::build_xn;
use qschur_core::rootdata::{CartanDatum, CartanType, ShiftedWeight};
use qschur_core::weightsets::WeightSet;
use serde_json::Value;

use crate::CliError;

/// Where the seeds of a weight set come from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeightSpec {
    /// `g2:n=N`, the set `X_N`.
    G2Box(usize),
    /// A JSON file holding an array of shifted weights.
    File(String),
}

impl WeightSpec {
    pub fn parse(s: &str) -> Result<Self, CliError> {
        if let Some(rest) = s.strip_prefix("g2:") {
            let n = rest
                .strip_prefix("n=")
                .and_then(|x| x.parse::<usize>().ok())
                .filter(|&n| n >= 1)
                .ok_or_else(|| CliError::usage(format!("bad weight shorthand `{}`; expected g2:n=N with N >= 1", s)))?;
            return Ok(WeightSpec::G2Box(n));
        }
        Ok(WeightSpec::File(s.to_string()))
    }
}

/// Parses a seed list: each entry is either a string accepted by
/// [`ShiftedWeight::parse`] or an array of integer pairings.
pub fn parse_seeds(datum: &CartanDatum, text: &str) -> Result<Vec<ShiftedWeight>, CliError> {
    let v: Value = serde_json::from_str(text).map_err(|e| CliError::usage(format!("seed file is not JSON: {}", e)))?;
    let Value::Array(items) = v else {
        return Err(CliError::usage("seed file must hold a JSON array".into()));
    };
    let mut seeds = Vec::new();
    for item in items {
        let w = match &item {
            Value::String(s) => ShiftedWeight::parse(datum, s).map_err(CliError::from_core_usage)?,
            Value::Array(xs) => {
                let m: Option<Vec<i64>> = xs.iter().map(Value::as_i64).collect();
                let m = m.ok_or_else(|| CliError::usage(format!("seed {} is not an integer array", item)))?;
                let w = ShiftedWeight(m);
                datum.check_weight(&w).map_err(CliError::from_core_usage)?;
                w
            }
            other => return Err(CliError::usage(format!("seed {} is neither a string nor an array", other))),
        };
        seeds.push(w);
    }
    if seeds.is_empty() {
        return Err(CliError::usage("seed list is empty".into()));
    }
    Ok(seeds)
}

pub fn resolve(type_label: &str, spec: Option<&WeightSpec>, cap: usize) -> Result<WeightSet, CliError> {
    let t = CartanType::parse(type_label).map_err(CliError::from_core_usage)?;
    let datum = CartanDatum::new(t);
    match spec {
        Some(WeightSpec::G2Box(n)) => {
            if t != CartanType::G2 {
                return Err(CliError::usage(format!("g2:n=N weights need --type G2, not {}", t)));
            }
            build_xn(*n).map_err(CliError::from_core_usage)
        }
        Some(WeightSpec::File(path)) => {
            let text = fs::read_to_string(path).map_err(|e| CliError::usage(format!("cannot read {}: {}", path, e)))?;
            let seeds = parse_seeds(&datum, &text)?;
            WeightSet::from_seeds(&datum, &seeds, cap).map_err(CliError::from_core_usage)
        }
        None if t == CartanType::G2 => build_xn(1).map_err(CliError::from_core_usage),
        None => Err(CliError::usage(format!("type {} needs --weights FILE", t))),
    }
}
