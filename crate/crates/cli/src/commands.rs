use std::fmt::Write as _;
use std::path::Path;

use anyhow::{anyhow, bail, Context};
use distspec::bounds::{self, TreeOrderSummary};
use distspec::catalog::{Family, FAMILY_NAMES};
use distspec::closed_forms::ClosedFormError;
use distspec::exact::{det_exact, distinct_eigenvalue_count, inertia_exact};
use distspec::graph::{read_edge_list, Graph};
use distspec::matrix::{read_matrix, write_matrix, IntSymMatrix};
use distspec::numeric::{
    format_sig, max_deviation, numeric_spectrum, round_sig, spectra_match, Spectrum, SpectrumJson,
};
use distspec::srg::{
    classify_one_positive, complement_params, is_conference, is_optimistic, srg_eigen_data,
    srg_parameters, SrgParams,
};
use distspec::verify::{check_barbell, check_spectrum, lemma_grid, VerifyError};
use distspec::{distance_matrix, QuadraticNumber};
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::{Format, Report, Target, VerifyArgs};

const SIG: usize = 12;

fn sig(x: f64) -> f64 {
    round_sig(x, SIG)
}

fn to_json(v: &impl Serialize) -> anyhow::Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn ok(body: String) -> anyhow::Result<Report> {
    Ok(Report { body, ok: true })
}

/// A resolved graph together with a label for output.
struct Resolved {
    label: String,
    family: Option<Family>,
    graph: Graph,
}

fn resolve(target: &Target) -> anyhow::Result<Resolved> {
    if let Some(path) = &target.graph {
        let text =
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let graph = read_edge_list(&text).with_context(|| format!("parsing {}", path.display()))?;
        return Ok(Resolved {
            label: path.display().to_string(),
            family: None,
            graph,
        });
    }
    let name = target
        .family
        .as_deref()
        .ok_or_else(|| anyhow!("give a family name or --graph FILE"))?;
    let family = Family::parse(name, &target.params)?;
    let graph = family.graph()?;
    Ok(Resolved {
        label: family.to_string(),
        family: Some(family),
        graph,
    })
}

fn connected_distance_matrix(r: &Resolved) -> anyhow::Result<IntSymMatrix> {
    distance_matrix(&r.graph).with_context(|| format!("{} has no distance matrix", r.label))
}

pub fn spectrum(target: &Target, verify: bool, tol: f64, fmt: Format) -> anyhow::Result<Report> {
    if tol.is_nan() || tol <= 0.0 {
        bail!("--tol must be positive");
    }
    let r = resolve(target)?;
    let (closed, formula, mut note) = match r.family.map(|f| f.closed_form()) {
        Some(Some(Ok(c))) => (Some(c.spectrum), Some(c.formula), None),
        Some(Some(Err(e @ ClosedFormError::HalvedCubeScope(_)))) => {
            (None, None, Some(e.to_string()))
        }
        Some(Some(Err(e))) => return Err(e.into()),
        Some(None) => (
            None,
            None,
            Some("no closed form for this family".to_string()),
        ),
        None => match srg_parameters(&r.graph) {
            Some(p) => (
                Some(srg_eigen_data(&p).distance_spectrum()),
                Some("strongly regular"),
                None,
            ),
            None => (
                None,
                None,
                Some("no closed form for an edge-list graph".to_string()),
            ),
        },
    };
    let numeric = if verify || closed.is_none() {
        Some(numeric_spectrum(&connected_distance_matrix(&r)?)?)
    } else {
        None
    };
    let (matches, deviation) = match (&closed, &numeric) {
        (Some(c), Some(n)) => (Some(spectra_match(c, n, tol)), max_deviation(c, n)),
        _ => (None, None),
    };
    if verify && closed.is_none() && note.is_none() {
        note = Some("nothing to compare with".to_string());
    }
    let body = match fmt {
        Format::Json => to_json(&json!({
            "graph": r.label,
            "family": r.family.map(|f| f.name()),
            "params": r.family.map(|f| f.params()),
            "order": r.graph.order(),
            "closed_form": closed.as_ref().map(|c| json!({"formula": formula, "spectrum": c.to_json()})),
            "numeric": numeric.as_ref().map(Spectrum::to_json),
            "match": matches,
            "max_deviation": deviation.map(sig),
            "note": note,
        }))?,
        _ => {
            let mut out = format!("{} (order {})\n", r.label, r.graph.order());
            if let Some(c) = &closed {
                let _ = writeln!(out, "closed form ({}): {c}", formula.unwrap_or(""));
            }
            if let Some(n) = &numeric {
                let _ = writeln!(out, "numeric: {n}");
            }
            if let Some(m) = matches {
                let _ = writeln!(
                    out,
                    "match: {m} (max deviation {})",
                    deviation.map_or("n/a".into(), |d| format_sig(d, SIG))
                );
            }
            if let Some(n) = &note {
                let _ = writeln!(out, "note: {n}");
            }
            out
        }
    };
    Ok(Report {
        body,
        ok: matches != Some(false),
    })
}

#[derive(Serialize)]
struct SpectrumRow {
    family: String,
    params: String,
    order: usize,
    #[serde(rename = "match")]
    matches: bool,
    max_deviation: Option<f64>,
}

#[derive(Serialize)]
struct BarbellRow {
    k: usize,
    m: usize,
    l: usize,
    order: usize,
    #[serde(rename = "match")]
    matches: bool,
    det_formula: String,
    det_exact: String,
    inertia_formula: String,
    inertia_exact: String,
}

#[derive(Serialize)]
struct LemmaRow {
    identity: u8,
    x: u32,
    b: Option<u32>,
    lhs: String,
    rhs: String,
    holds: bool,
}

fn render_grid<T: Serialize>(
    family: &str,
    rows: &[T],
    passed: impl Fn(&T) -> bool,
    text: impl Fn(&T) -> String,
    fmt: Format,
) -> anyhow::Result<Report> {
    let failed = rows.iter().filter(|r| !passed(r)).count();
    let body = match fmt {
        Format::Json => to_json(&json!({
            "family": family,
            "instances": rows,
            "passed": rows.len() - failed,
            "failed": failed,
        }))?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in rows {
                w.serialize(r)?;
            }
            String::from_utf8(w.into_inner()?)?
        }
        Format::Text => {
            let mut out = String::new();
            for r in rows {
                let _ = writeln!(out, "{}", text(r));
            }
            let _ = writeln!(
                out,
                "{family}: {} passed, {failed} failed",
                rows.len() - failed
            );
            out
        }
    };
    Ok(Report {
        body,
        ok: failed == 0,
    })
}

fn require(args: &VerifyArgs, name: &str, family: &str) -> anyhow::Result<Vec<usize>> {
    args.range(name)
        .map(|r| r.iter().collect())
        .ok_or_else(|| anyhow!("`verify {family}` needs --{name}"))
}

/// All parameter tuples for a catalog family. A missing `r` for Johnson or
/// Kneser graphs means every admissible `r`.
fn family_grid(args: &VerifyArgs, name: &str, names: &[&str]) -> anyhow::Result<Vec<Vec<usize>>> {
    let mut tuples: Vec<Vec<usize>> = vec![vec![]];
    for &p in names {
        let mut next = Vec::new();
        for t in &tuples {
            let values: Vec<usize> = match (args.range(p), name, p) {
                (Some(r), _, _) => r.iter().collect(),
                (None, "johnson", "r") => (1..t[0]).collect(),
                (None, "kneser", "r") => (1..t[0]).filter(|r| t[0] > 2 * r).collect(),
                (None, _, _) => bail!("`verify {name}` needs --{p}"),
            };
            next.extend(values.into_iter().map(|v| {
                let mut u = t.clone();
                u.push(v);
                u
            }));
        }
        tuples = next;
    }
    Ok(tuples)
}

pub fn verify(args: &VerifyArgs, fmt: Format) -> anyhow::Result<Report> {
    if args.tol.is_nan() || args.tol <= 0.0 {
        bail!("--tol must be positive");
    }
    match args.family.as_str() {
        "barbell" => {
            let (ks, ms, ls) = (
                require(args, "k", "barbell")?,
                require(args, "m", "barbell")?,
                require(args, "l", "barbell")?,
            );
            let mut grid = Vec::with_capacity(ks.len() * ms.len() * ls.len());
            for &k in &ks {
                for &m in &ms {
                    grid.extend(ls.iter().map(|&l| (k, m, l)));
                }
            }
            let rows = grid
                .par_iter()
                .map(|&(k, m, l)| {
                    let c = check_barbell(k, m, l)?;
                    Ok(BarbellRow {
                        k,
                        m,
                        l,
                        order: c.order,
                        matches: c.matches,
                        det_formula: c.det_formula.to_string(),
                        det_exact: c.det_exact.to_string(),
                        inertia_formula: c.inertia_formula.to_string(),
                        inertia_exact: c.inertia_exact.to_string(),
                    })
                })
                .collect::<Result<Vec<_>, VerifyError>>()?;
            render_grid(
                "barbell",
                &rows,
                |r| r.matches,
                |r| {
                    format!(
                        "barbell k={} m={} l={} order={} match={} det={} inertia={}",
                        r.k, r.m, r.l, r.order, r.matches, r.det_exact, r.inertia_exact
                    )
                },
                fmt,
            )
        }
        "lemma-identities" => {
            let rows: Vec<LemmaRow> = lemma_grid(args.max, args.max / 2)
                .into_iter()
                .map(|c| LemmaRow {
                    identity: c.identity,
                    x: c.x,
                    b: c.b,
                    lhs: c.lhs.to_string(),
                    rhs: c.rhs.to_string(),
                    holds: c.holds,
                })
                .collect();
            render_grid(
                "lemma-identities",
                &rows,
                |r| r.holds,
                |r| {
                    let b = r.b.map(|b| format!(" b={b}")).unwrap_or_default();
                    format!(
                        "identity {} x={}{b} lhs={} rhs={} holds={}",
                        r.identity, r.x, r.lhs, r.rhs, r.holds
                    )
                },
                fmt,
            )
        }
        name => {
            let (_, names) = FAMILY_NAMES
                .iter()
                .find(|(f, _)| *f == name)
                .ok_or_else(|| anyhow!("unknown family '{name}'"))?;
            let families = family_grid(args, name, names)?
                .into_iter()
                .map(|p| Family::parse(name, &p))
                .collect::<Result<Vec<_>, _>>()?;
            if let Some(f) = families.first() {
                if f.closed_form().is_none() {
                    bail!("{name} has no closed-form spectrum to verify");
                }
            }
            let rows = families
                .par_iter()
                .map(|f| {
                    let c = check_spectrum(f, args.tol).with_context(|| f.to_string())?;
                    if let (None, Some(note)) = (&c.closed_form, &c.note) {
                        bail!("{f}: {note}");
                    }
                    let params: Vec<String> = f.params().iter().map(|p| p.to_string()).collect();
                    Ok(SpectrumRow {
                        family: f.name().to_string(),
                        params: params.join(" "),
                        order: c.order,
                        matches: c.matches.unwrap_or(false),
                        max_deviation: c.max_deviation.map(sig),
                    })
                })
                .collect::<anyhow::Result<Vec<_>>>()?;
            render_grid(
                name,
                &rows,
                |r| r.matches,
                |r| {
                    format!(
                        "{} {} order={} match={} max_deviation={}",
                        r.family,
                        r.params,
                        r.order,
                        r.matches,
                        r.max_deviation.map_or("n/a".into(), |d| format_sig(d, SIG))
                    )
                },
                fmt,
            )
        }
    }
}

fn quadratic_json(q: &QuadraticNumber) -> Value {
    json!({"exact": q.to_string(), "value": sig(q.to_f64())})
}

fn params_json(p: &SrgParams) -> Value {
    json!({"n": p.n, "k": p.k, "lambda": p.lambda, "mu": p.mu})
}

pub fn srg(n: u64, k: u64, lambda: u64, mu: u64, fmt: Format) -> anyhow::Result<Report> {
    let out = match SrgParams::new(n, k, lambda, mu) {
        Err(e) => json!({
            "params": {"n": n, "k": k, "lambda": lambda, "mu": mu},
            "feasible": false,
            "reason": e.to_string(),
            "conference": null,
            "optimistic": null,
            "one_positive": classify_one_positive(n, k, lambda, mu).ok(),
            "complement": null,
            "eigen_data": null,
        }),
        Ok(p) => {
            let e = srg_eigen_data(&p);
            let complement = complement_params(&p).ok().map(|c| {
                let mut v = params_json(&c);
                v["optimistic"] = json!(is_optimistic(&c));
                v
            });
            json!({
                "params": params_json(&p),
                "feasible": true,
                "conference": is_conference(&p),
                "optimistic": is_optimistic(&p),
                "one_positive": classify_one_positive(n, k, lambda, mu)?,
                "complement": complement,
                "eigen_data": {
                    "theta": quadratic_json(&e.theta),
                    "tau": quadratic_json(&e.tau),
                    "rho_d": e.rho_d.to_string(),
                    "theta_d": quadratic_json(&e.theta_d),
                    "tau_d": quadratic_json(&e.tau_d),
                    "m_theta": e.m_theta,
                    "m_tau": e.m_tau,
                    "distance_spectrum": e.distance_spectrum().to_json(),
                },
            })
        }
    };
    let body = match fmt {
        Format::Json => to_json(&out)?,
        _ => {
            let mut s = format!("({n}, {k}, {lambda}, {mu}) feasible={}\n", out["feasible"]);
            for key in ["conference", "optimistic", "one_positive"] {
                let _ = writeln!(s, "{key}: {}", out[key]);
            }
            if let Some(r) = out["reason"].as_str() {
                let _ = writeln!(s, "reason: {r}");
            }
            if let Some(spec) = out["eigen_data"].get("distance_spectrum") {
                let parsed: SpectrumJson = serde_json::from_value(spec.clone())?;
                let _ = writeln!(s, "distance spectrum: {}", Spectrum::from_json(&parsed)?);
            }
            s
        }
    };
    ok(body)
}

#[derive(Serialize)]
struct TreeRow {
    order: usize,
    trees: usize,
    strong_violations: usize,
    weak_violations: usize,
    ceil_violations: usize,
}

pub fn verify_trees(max_order: usize, fmt: Format) -> anyhow::Result<Report> {
    let summaries: Vec<TreeOrderSummary> = bounds::verify_trees(max_order)?;
    let passed = |s: &TreeOrderSummary| s.strong_violations == 0 && s.weak_violations == 0;
    let all_ok = summaries.iter().all(passed);
    let body = match fmt {
        Format::Json => to_json(&summaries)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for s in &summaries {
                w.serialize(TreeRow {
                    order: s.order,
                    trees: s.trees,
                    strong_violations: s.strong_violations,
                    weak_violations: s.weak_violations,
                    ceil_violations: s.ceil_violations,
                })?;
            }
            String::from_utf8(w.into_inner()?)?
        }
        Format::Text => {
            let mut out = String::new();
            for s in &summaries {
                let _ = writeln!(
                    out,
                    "order {:>2}: {:>4} trees, strong violations {}, weak violations {}, ceiling violations {}",
                    s.order, s.trees, s.strong_violations, s.weak_violations, s.ceil_violations
                );
                for c in &s.counterexamples {
                    let _ = writeln!(out, "  counterexample: {c:?}");
                }
            }
            out
        }
    };
    Ok(Report { body, ok: all_ok })
}

pub fn zf_bound(target: &Target, fmt: Format) -> anyhow::Result<Report> {
    let r = resolve(target)?;
    let bound = bounds::zf_eigenvalue_bound(&r.graph)?;
    let z = bounds::zero_forcing_number(&distspec::graph::complement(&r.graph))?;
    let ceil = bound
        .ceil()
        .to_integer()
        .to_usize()
        .context("bound out of range")?;
    let q = distinct_eigenvalue_count(&connected_distance_matrix(&r)?)?;
    let holds = q >= ceil;
    let body = match fmt {
        Format::Json => to_json(&json!({
            "graph": r.label,
            "order": r.graph.order(),
            "zero_forcing_complement": z,
            "bound": bound.to_string(),
            "bound_value": sig(bound.to_f64().unwrap_or(f64::NAN)),
            "bound_ceil": ceil,
            "distinct_eigenvalues": q,
            "holds": holds,
        }))?,
        _ => format!(
            "{}: Z(complement) = {z}, bound = {bound}, ceiling {ceil}, distinct distance eigenvalues {q}, holds = {holds}\n",
            r.label
        ),
    };
    Ok(Report { body, ok: holds })
}

pub fn matrix(target: &Target, fmt: Format) -> anyhow::Result<Report> {
    let r = resolve(target)?;
    let d = connected_distance_matrix(&r)?;
    let body = match fmt {
        Format::Json => {
            let rows: Vec<Vec<i64>> = (0..d.dim())
                .map(|i| {
                    d.row(i)
                        .iter()
                        .map(|x| x.to_i64().unwrap_or(i64::MAX))
                        .collect()
                })
                .collect();
            to_json(&json!({"graph": r.label, "n": d.dim(), "rows": rows}))?
        }
        _ => write_matrix(&d),
    };
    ok(body)
}

pub fn det(target: &Target, matrix_file: Option<&Path>, fmt: Format) -> anyhow::Result<Report> {
    let (label, m) = match matrix_file {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            (
                path.display().to_string(),
                read_matrix(&text).with_context(|| format!("parsing {}", path.display()))?,
            )
        }
        None => {
            let r = resolve(target)?;
            let d = connected_distance_matrix(&r)?;
            (r.label, d)
        }
    };
    let det = det_exact(&m);
    let inertia = inertia_exact(&m);
    let body = match fmt {
        Format::Json => to_json(&json!({
            "source": label,
            "order": m.dim(),
            "det": det.to_string(),
            "inertia": inertia,
        }))?,
        _ => format!("{label}: order {}, det {det}, inertia {inertia}\n", m.dim()),
    };
    ok(body)
}

pub fn families(fmt: Format) -> anyhow::Result<Report> {
    let body = match fmt {
        Format::Json => to_json(
            &FAMILY_NAMES
                .iter()
                .map(|(name, params)| json!({"family": name, "params": params}))
                .collect::<Vec<_>>(),
        )?,
        _ => FAMILY_NAMES
            .iter()
            .map(|(name, params)| format!("{name} {}\n", params.join(" ")).replace(" \n", "\n"))
            .collect(),
    };
    ok(body)
}
