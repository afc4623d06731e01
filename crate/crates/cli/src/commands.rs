use std::collections::BTreeMap;
use std::fmt::Write as _;

use qschur_core::duality::verify_duality;
use qschur_core::error::Error as CoreError;
use qschur_core::g2::{appendix_a_suite, appendix_b_suite, appendix_c_suite, build_xn, EpsWeight, SuiteReport};
use qschur_core::hecke::KlTable;
use qschur_core::laurent::LaurentPoly;
use qschur_core::rootdata::{CartanDatum, CartanType};
use qschur_core::schur::{is_unitriangular, SchurAlgebra, SchurElement};
use qschur_core::tmodule::{bar_t, canonical_t, TElement};
use qschur_core::weightsets::WeightSet;
use qschur_core::weylgroup::WeylGroup;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::weights::{resolve, WeightSpec};
use crate::{
    dump, parse_samples, Basis, CliError, Command, G2Cmd, G2Suite, Global, HeckeCmd, Output, SchurCmd, SchurSuite,
    TmoduleCmd,
};

pub fn dispatch(g: &Global, cmd: &Command) -> Result<Output, CliError> {
    match cmd {
        Command::Info => info(&weight_set(g)?),
        Command::Hecke { cmd: HeckeCmd::Cbasis } => hecke_cbasis(g),
        Command::Tmodule { cmd } => tmodule(&weight_set(g)?, cmd),
        Command::Schur { cmd } => {
            let ws = weight_set(g)?;
            let s = SchurAlgebra::new(&ws);
            match cmd {
                SchurCmd::Cbasis => schur_cbasis(&s),
                SchurCmd::Compose { a, b, basis } => compose(&s, a, b, *basis),
                SchurCmd::Coords { xi, basis } => coords(&s, xi, *basis),
                SchurCmd::Verify { suite: SchurSuite::Duality } => duality(&s, &parse_samples(&g.q_samples)?),
                SchurCmd::Verify { suite: SchurSuite::Positivity } => positivity(&s),
                SchurCmd::Verify { suite: SchurSuite::Bar } => bar_suite(&s),
            }
        }
        Command::G2 { cmd: G2Cmd::Verify { suite } } => g2_verify(g, *suite),
        Command::Dump { all } => {
            let ws = weight_set(g)?;
            let d = dump::Dump::build(&ws, *all).map_err(CliError::internal)?;
            let text = format!(
                "dump of {} weights, {} triples; use --format json for the content\n",
                d.weights.len(),
                d.xi.len()
            );
            Ok(Output::ok(serde_json::to_value(&d).expect("serializable"), text))
        }
    }
}

fn weight_set(g: &Global) -> Result<WeightSet, CliError> {
    resolve(&g.type_label, g.weight_spec()?.as_ref(), g.cap)
}

fn poly(p: &LaurentPoly) -> String {
    p.to_string()
}

fn gen_set(ws: &WeightSet, gamma: usize) -> Vec<usize> {
    ws.orbit(gamma).j.iter().map(|k| k + 1).collect()
}

fn info(ws: &WeightSet) -> Result<Output, CliError> {
    let d = ws.datum();
    let g = ws.group();
    let s = SchurAlgebra::new(ws);
    let g2 = d.cartan_type == CartanType::G2;
    let classes: Vec<Value> = (0..ws.orbits().len())
        .map(|gamma| {
            let o = ws.orbit(gamma);
            let mut v = json!({
                "antidominant": o.antidominant.render(d),
                "size": o.len(),
                "stabilizer": gen_set(ws, gamma),
                "regular": o.is_regular(),
            });
            if g2 {
                v["label"] = json!(EpsWeight::of_class(ws, gamma).to_string());
            }
            v
        })
        .collect();
    let json = json!({
        "type": d.to_string(),
        "rank": d.rank(),
        "weyl_order": g.order(),
        "weights": ws.len(),
        "orbits": ws.orbits().len(),
        "xi": s.dim(),
        "regular_orbit": ws.has_regular_orbit(),
        "classes": classes,
    });
    let mut text = String::new();
    let _ = writeln!(text, "type {} (rank {}), |W| = {}", d, d.rank(), g.order());
    let _ = writeln!(text, "|X| = {}, orbits = {}, |Xi| = {}", ws.len(), ws.orbits().len(), s.dim());
    for (gamma, c) in classes.iter().enumerate() {
        let label = c.get("label").and_then(Value::as_str).map(|l| format!(" {}", l)).unwrap_or_default();
        let _ = writeln!(
            text,
            "  orbit {:>3}: {:<12} size {:>4}  J = {:?}{}",
            gamma,
            c["antidominant"].as_str().unwrap_or(""),
            c["size"],
            gen_set(ws, gamma),
            label
        );
    }
    Ok(Output::ok(json, text))
}

fn hecke_cbasis(g: &Global) -> Result<Output, CliError> {
    let t = CartanType::parse(&g.type_label).map_err(CliError::from_core_usage)?;
    let group = WeylGroup::generate_with_cap(&CartanDatum::new(t), g.cap).map_err(CliError::from_core_usage)?;
    let kl = KlTable::full(&group);
    let mut rows = Vec::new();
    let mut text = String::new();
    for w in 0..group.order() {
        let c = kl.get(w);
        let mut ys: Vec<usize> = c.terms().map(|(y, _)| y).collect();
        ys.sort_by_key(|&y| (std::cmp::Reverse(group.length(y)), y));
        let terms: Vec<Value> = ys.iter().map(|&y| json!([group.render(y), poly(&c.coeff(y))])).collect();
        rows.push(json!({ "w": group.render(w), "length": group.length(w), "terms": terms }));
        let _ = writeln!(text, "C[{}] = {}", group.render(w), c.render(&group));
    }
    Ok(Output::ok(json!({ "type": t.to_string(), "elements": rows }), text))
}

fn t_terms(ws: &WeightSet, v: &TElement) -> Vec<Value> {
    v.terms().map(|(i, c)| json!([ws.render(i), poly(c)])).collect()
}

fn tmodule(ws: &WeightSet, cmd: &TmoduleCmd) -> Result<Output, CliError> {
    let mut kl = KlTable::new(ws.group());
    let mut rows = Vec::new();
    let mut text = String::new();
    for i in 0..ws.len() {
        let v = match cmd {
            TmoduleCmd::Cbasis => canonical_t(ws, &mut kl, i).map_err(CliError::internal)?,
            TmoduleCmd::Bar => bar_t(ws, &TElement::basis(i)),
        };
        rows.push(json!({ "weight": ws.render(i), "terms": t_terms(ws, &v) }));
        let name = if matches!(cmd, TmoduleCmd::Cbasis) { "C" } else { "bar v" };
        let _ = writeln!(text, "{}{} = {}", name, ws.render(i), v.render(ws));
    }
    let key = if matches!(cmd, TmoduleCmd::Cbasis) { "canonical" } else { "bar" };
    Ok(Output::ok(json!({ key: rows }), text))
}

fn std_terms(s: &SchurAlgebra, m: &BTreeMap<usize, LaurentPoly>) -> Vec<Value> {
    m.iter().map(|(k, c)| json!([s.ws().render_xi(&s.ws().xi()[*k]), poly(c)])).collect()
}

fn render_terms(s: &SchurAlgebra, m: &BTreeMap<usize, LaurentPoly>, prefix: &str) -> String {
    if m.is_empty() {
        return "0".into();
    }
    m.iter()
        .map(|(k, c)| format!("({}){}{}", c, prefix, s.ws().render_xi(&s.ws().xi()[*k])))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn schur_cbasis(s: &SchurAlgebra) -> Result<Output, CliError> {
    let table = s.canonical_table().map_err(CliError::internal)?;
    let mut rows = Vec::new();
    let mut text = String::new();
    for (n, m) in table.iter().enumerate() {
        let name = s.ws().render_xi(&s.ws().xi()[n]);
        rows.push(json!({ "xi": name, "index": n, "std": std_terms(s, m) }));
        let _ = writeln!(text, "{{phi {}}} = {}", name, render_terms(s, m, "[phi]"));
    }
    Ok(Output::ok(json!({ "dim": s.dim(), "canonical": rows }), text))
}

/// A triple given by index or by its rendering `(gamma,g,nu)`.
fn parse_xi(s: &SchurAlgebra, arg: &str) -> Result<usize, CliError> {
    let ws = s.ws();
    if let Ok(n) = arg.trim().parse::<usize>() {
        return if n < s.dim() {
            Ok(n)
        } else {
            Err(CliError::usage(format!("triple index {} out of range 0..{}", n, s.dim())))
        };
    }
    let want: String = arg.chars().filter(|c| !c.is_whitespace()).collect();
    ws.xi()
        .iter()
        .position(|t| ws.render_xi(t) == want)
        .ok_or_else(|| CliError::usage(format!("no triple `{}`", arg)))
}

fn sparse(v: Vec<LaurentPoly>) -> BTreeMap<usize, LaurentPoly> {
    v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
}

fn element(s: &SchurAlgebra, n: usize, basis: Basis) -> Result<SchurElement, CliError> {
    match basis {
        Basis::Std => Ok(s.std(n)),
        Basis::Canonical => s.canonical(n).map_err(CliError::internal),
    }
}

fn compose(s: &SchurAlgebra, a: &str, b: &str, basis: Basis) -> Result<Output, CliError> {
    let (a, b) = (parse_xi(s, a)?, parse_xi(s, b)?);
    let m = match basis {
        Basis::Std => sparse(s.coords(&s.std(a).compose(&s.std(b))).map_err(CliError::internal)?),
        Basis::Canonical => {
            let table = s.canonical_table().map_err(CliError::internal)?;
            s.structure_constants(&table, a, b).map_err(CliError::internal)?
        }
    };
    let name = |n: usize| s.ws().render_xi(&s.ws().xi()[n]);
    let (l, r) = if basis == Basis::Std { ("[phi]", "[phi]") } else { ("{phi}", "{phi}") };
    let text = format!("{}{} * {}{} = {}\n", l, name(a), r, name(b), render_terms(s, &m, l));
    let json = json!({
        "basis": if basis == Basis::Std { "std" } else { "canonical" },
        "a": name(a),
        "b": name(b),
        "product": std_terms(s, &m),
    });
    Ok(Output::ok(json, text))
}

fn coords(s: &SchurAlgebra, xi: &str, basis: Basis) -> Result<Output, CliError> {
    let ws = s.ws();
    let n = parse_xi(s, xi)?;
    let m = element(s, n, basis)?;
    let entries: Vec<Value> = m.nonzero_entries().map(|(i, j, c)| json!([ws.render(i), ws.render(j), poly(c)])).collect();
    let c = sparse(s.coords(&m).map_err(CliError::internal)?);
    let mut text = String::new();
    let _ = writeln!(text, "{} nonzero entries c(i,j):", entries.len());
    for (i, j, c) in m.nonzero_entries() {
        let _ = writeln!(text, "  {} <- {}: {}", ws.render(i), ws.render(j), c);
    }
    let _ = writeln!(text, "standard coordinates: {}", render_terms(s, &c, "[phi]"));
    let json = json!({ "xi": ws.render_xi(&ws.xi()[n]), "entries": entries, "std": std_terms(s, &c) });
    Ok(Output::ok(json, text))
}

fn duality(s: &SchurAlgebra, samples: &[qschur_core::linalg::Rat]) -> Result<Output, CliError> {
    let r = match verify_duality(s, samples) {
        Err(CoreError::NoRegularOrbit) => return Err(CliError::from_core_usage(CoreError::NoRegularOrbit)),
        other => other.map_err(CliError::internal)?,
    };
    let rows: Vec<Value> = r
        .samples
        .iter()
        .map(|x| {
            json!({
                "q": x.q,
                "centralizer_dim": x.centralizer_dim,
                "hecke_rank": x.hecke_rank,
                "hecke_commutes": x.hecke_commutes,
                "equations": x.equations,
                "pass": x.pass,
            })
        })
        .collect();
    let failures: Vec<Value> = rows.iter().filter(|x| x["pass"] == json!(false)).cloned().collect();
    let mut text = String::new();
    let _ = writeln!(
        text,
        "|W| = {}, dim T = {}, dim S = {}, exponent bound {}",
        r.weyl_order, r.t_dim, r.schur_dim, r.exponent_bound
    );
    for x in &r.samples {
        let _ = writeln!(
            text,
            "  q = {:<6} centralizer dim {:>3}, Hecke rank {:>3}, commutes {}: {}",
            x.q,
            x.centralizer_dim,
            x.hecke_rank,
            x.hecke_commutes,
            if x.pass { "pass" } else { "FAIL" }
        );
    }
    let json = json!({
        "suite": "duality",
        "weyl_order": r.weyl_order,
        "t_dim": r.t_dim,
        "schur_dim": r.schur_dim,
        "exponent_bound": r.exponent_bound,
        "samples": rows,
        "pass": r.pass,
    });
    Ok(Output { json, text, failures })
}

fn suite_output(name: &str, checked: usize, failures: Vec<Value>) -> Output {
    let pass = failures.is_empty();
    let mut text = format!("{}: {} checks, {} failures\n", name, checked, failures.len());
    for f in &failures {
        let _ = writeln!(text, "  {}", f);
    }
    let json = json!({ "suite": name, "checks": checked, "failures": failures, "pass": pass });
    Output { json, text, failures }
}

fn positivity(s: &SchurAlgebra) -> Result<Output, CliError> {
    let ws = s.ws();
    let table = s.canonical_table().map_err(CliError::internal)?;
    let dim = s.dim();
    let name = |n: usize| ws.render_xi(&ws.xi()[n]);
    let products: Vec<Vec<Value>> = (0..dim * dim)
        .into_par_iter()
        .map(|k| {
            let (b, b2) = (k / dim, k % dim);
            let m = s.structure_constants(&table, b, b2).map_err(CliError::internal)?;
            Ok(m.iter()
                .filter(|(_, c)| !c.is_nonnegative())
                .map(|(b3, c)| json!({ "kind": "product", "b": name(b), "b2": name(b2), "b3": name(*b3), "coeff": poly(c) }))
                .collect())
        })
        .collect::<Result<_, CliError>>()?;
    let canon: Vec<SchurElement> = (0..dim).map(|n| s.canonical(n)).collect::<Result<_, _>>().map_err(CliError::internal)?;
    let actions: Vec<Vec<Value>> = (0..dim * ws.len())
        .into_par_iter()
        .map(|k| {
            let (b, i) = (k / ws.len(), k % ws.len());
            let m = s.action_on_canonical_t(&canon[b], i).map_err(CliError::internal)?;
            Ok(m.iter()
                .filter(|(_, c)| !c.is_nonnegative())
                .map(|(j, c)| json!({ "kind": "action", "b": name(b), "c": ws.render(i), "c2": ws.render(*j), "coeff": poly(c) }))
                .collect())
        })
        .collect::<Result<_, CliError>>()?;
    let failures: Vec<Value> = products.into_iter().chain(actions).flatten().collect();
    Ok(suite_output("positivity", dim * dim + dim * ws.len(), failures))
}

fn bar_suite(s: &SchurAlgebra) -> Result<Output, CliError> {
    let ws = s.ws();
    let table = s.canonical_table().map_err(CliError::internal)?;
    let failures: Vec<Vec<Value>> = (0..s.dim())
        .into_par_iter()
        .map(|n| {
            let name = ws.render_xi(&ws.xi()[n]);
            let mut out = Vec::new();
            let c = s.canonical(n).map_err(CliError::internal)?;
            if s.bar(&c).map_err(CliError::internal)? != c {
                out.push(json!({ "xi": name, "check": "canonical element is bar invariant" }));
            }
            if !is_unitriangular(ws, n, &table[n]) {
                out.push(json!({ "xi": name, "check": "canonical element is unitriangular" }));
            }
            let b = s.bar(&s.std(n)).map_err(CliError::internal)?;
            if s.bar(&b).map_err(CliError::internal)? != s.std(n) {
                out.push(json!({ "xi": name, "check": "bar is an involution" }));
            }
            Ok(out)
        })
        .collect::<Result<_, CliError>>()?;
    Ok(suite_output("bar", 3 * s.dim(), failures.into_iter().flatten().collect()))
}

fn suite_json(r: &SuiteReport) -> (Value, Vec<Value>) {
    let check = |c: &qschur_core::g2::Check| {
        json!({
            "formula_id": c.formula_id,
            "instance": c.instance,
            "status": if c.pass { "pass" } else { "fail" },
            "lhs": c.lhs,
            "rhs": c.rhs,
        })
    };
    let readings: Vec<Value> = r
        .readings
        .iter()
        .map(|x| json!({ "formula_id": x.formula_id, "reading": x.reading, "matched": x.matched, "total": x.total, "chosen": x.chosen }))
        .collect();
    let failures: Vec<Value> = r.failures().map(check).collect();
    let json = json!({
        "suite": r.suite,
        "pass": r.pass(),
        "checks": r.checks.iter().map(check).collect::<Vec<_>>(),
        "readings": readings,
    });
    (json, failures)
}

fn g2_verify(g: &Global, suite: G2Suite) -> Result<Output, CliError> {
    if CartanType::parse(&g.type_label).map_err(CliError::from_core_usage)? != CartanType::G2 {
        return Err(CliError::usage("g2 verify needs --type G2".into()));
    }
    let n = match g.weight_spec()? {
        Some(WeightSpec::G2Box(n)) => n,
        Some(WeightSpec::File(_)) => return Err(CliError::usage("g2 verify takes g2:n=N weights only".into())),
        None => 2,
    };
    if suite == G2Suite::C && n != 2 {
        return Err(CliError::usage(format!("suite C lives in S(2); got n = {}", n)));
    }
    let ws = build_xn(n).map_err(CliError::from_core_usage)?;
    let s = SchurAlgebra::new(&ws);
    let r = match suite {
        G2Suite::A => appendix_a_suite(&ws),
        G2Suite::B => appendix_b_suite(&s).map_err(CliError::internal)?,
        G2Suite::C => {
            let samples = parse_samples(&g.q_samples)?;
            appendix_c_suite(&s, &samples[1..]).map_err(CliError::internal)?
        }
    };
    let (json, failures) = suite_json(&r);
    let mut families: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
    for c in &r.checks {
        let e = families.entry(c.formula_id.as_str()).or_default();
        e.0 += 1;
        e.1 += usize::from(!c.pass);
    }
    let mut text = String::new();
    let _ = writeln!(
        text,
        "suite {} on X_{}: {} families, {} instances, {} failures",
        r.suite,
        n,
        families.len(),
        r.checks.len(),
        failures.len()
    );
    for x in &r.readings {
        let _ = writeln!(
            text,
            "  reading {} '{}': {}/{}{}",
            x.formula_id,
            x.reading,
            x.matched,
            x.total,
            if x.chosen { " (chosen)" } else { "" }
        );
    }
    for c in r.failures() {
        let _ = writeln!(text, "  FAIL {} [{}]: {} != {}", c.formula_id, c.instance, c.lhs, c.rhs);
    }
    Ok(Output { json, text, failures })
}
