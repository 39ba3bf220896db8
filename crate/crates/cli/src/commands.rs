//! The five commands. Each returns a [`Report`]; printing and exit codes are
//! handled by `main`.

use std::path::Path;

use anyhow::{bail, Context, Result};
use oddcrit::factors::{is_k_critical_with, search_criticality_witness};
use oddcrit::graph::io::{parse_corpus, write_graph6};
use oddcrit::graph::{
    extremal_gprime, g_star, proof_graph_g2, proof_graph_g3, vertex_connectivity, FamilyShape,
};
use oddcrit::spectral::{spectral_radius, transmissions, wiener_gprime_closed_form, wiener_index};
use oddcrit::theorems::{
    counterexample_sweep, single_edge_additions, single_edge_deletions, SweepConfig, SweepReport,
};
use oddcrit::{CriticalityOptions, ExtremalParams, FactorSpec, Graph, MatrixKind, TheoremId};
use serde_json::{json, Map, Value};

use crate::config::{required, Mode, Perturb, RunConfig, Variant};
use crate::report::{grid_table, key_value_table, show, Report, Verdict};

fn read_corpus(path: &Path) -> Result<Vec<Graph>> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_corpus(&text).with_context(|| format!("parsing {}", path.display()))
}

fn input_path(cfg: &RunConfig) -> Result<&Path> {
    cfg.input
        .as_deref()
        .context("missing required parameter --input")
}

/// First graph of the input file.
fn read_graph(cfg: &RunConfig) -> Result<Graph> {
    let path = input_path(cfg)?;
    read_corpus(path)?
        .into_iter()
        .next()
        .with_context(|| format!("{} contains no graph", path.display()))
}

fn file_label(path: &Path) -> String {
    path.file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn single(json: Value, table: String, verdict: Verdict) -> Report {
    Report {
        rows: vec![json.clone()],
        json,
        table,
        verdict,
    }
}

pub fn analyze(cfg: &RunConfig) -> Result<Report> {
    let g = read_graph(cfg)?;
    let kind = cfg.matrix;
    let radius = spectral_radius(&g, kind)?;
    let connected = g.is_connected();
    let (wiener, tr_min, tr_max) = if connected && g.order() > 0 {
        let tr = transmissions(&g)?;
        (Some(wiener_index(&g)?), tr.min(), tr.max())
    } else {
        (None, None, None)
    };
    let min_degree = g.min_degree().ok();
    let kappa = vertex_connectivity(&g);
    let json = json!({
        "order": g.order(),
        "edges": g.edge_count(),
        "min_degree": min_degree,
        "connectivity": kappa,
        "connected": connected,
        "wiener_index": wiener,
        "transmission_min": tr_min,
        "transmission_max": tr_max,
        "matrix": kind.name(),
        "spectral_radius": radius,
    });
    let opt = |x: Option<u64>| x.map_or("-".to_string(), |v| v.to_string());
    let table = key_value_table(&[
        ("n", g.order().to_string()),
        ("edges", g.edge_count().to_string()),
        ("min degree", opt(min_degree.map(|d| d as u64))),
        ("connectivity", kappa.to_string()),
        ("wiener index", opt(wiener)),
        ("transmission min", opt(tr_min)),
        ("transmission max", opt(tr_max)),
        (&format!("{kind} radius"), show(Some(radius))),
    ]);
    Ok(single(json, table, Verdict::Affirmative))
}

/// Builds the requested variant with its part layout.
fn build_variant(cfg: &RunConfig) -> Result<(Graph, FamilyShape, ExtremalParams)> {
    let n = required(cfg.n, "n")?;
    let b = required(cfg.b, "b")?;
    let k = required(cfg.k, "k")?;
    Ok(match cfg.variant {
        Variant::Gprime => {
            let p = ExtremalParams::new(n, b, k, required(cfg.delta, "delta")?);
            (extremal_gprime(&p)?, p.gprime_shape()?, p)
        }
        Variant::G2 => {
            let p =
                ExtremalParams::new(n, b, k, cfg.delta.unwrap_or(0)).with_s(required(cfg.s, "s")?);
            (proof_graph_g2(&p)?, p.g2_shape()?, p)
        }
        Variant::G3 => {
            let p = ExtremalParams::new(n, b, k, required(cfg.delta, "delta")?)
                .with_s(required(cfg.s, "s")?);
            (proof_graph_g3(&p)?, p.g3_shape()?, p)
        }
        Variant::Gstar => {
            let p = ExtremalParams::new(n, b, k, k + 2);
            (g_star(n, b, k)?, p.gprime_shape()?, p)
        }
    })
}

fn variant_name(v: Variant) -> &'static str {
    match v {
        Variant::Gprime => "gprime",
        Variant::G2 => "g2",
        Variant::G3 => "g3",
        Variant::Gstar => "gstar",
    }
}

fn variant_id(cfg: &RunConfig, p: &ExtremalParams) -> String {
    let mut id = format!("{}({},{},{}", variant_name(cfg.variant), p.n, p.b, p.k);
    match cfg.variant {
        Variant::Gprime => id.push_str(&format!(",{})", p.delta)),
        Variant::G2 => id.push_str(&format!(",s={})", p.s.unwrap_or(0))),
        Variant::G3 => id.push_str(&format!(",{},s={})", p.delta, p.s.unwrap_or(0))),
        Variant::Gstar => id.push(')'),
    }
    id
}

pub struct Extremal {
    pub report: Report,
    pub graph6: String,
}

pub fn extremal(cfg: &RunConfig) -> Result<Extremal> {
    let (g, shape, p) = build_variant(cfg)?;
    let mu1 = spectral_radius(&g, MatrixKind::Distance)?;
    let eta1 = spectral_radius(&g, MatrixKind::DistanceSignlessLaplacian)?;
    let wiener = wiener_index(&g)?;
    let closed = match cfg.variant {
        Variant::Gprime => Some(wiener_gprime_closed_form(&p)?),
        _ => None,
    };
    let graph6 = write_graph6(&g);
    let min_degree = g.min_degree()?;
    let json = json!({
        "variant": variant_name(cfg.variant),
        "n": p.n,
        "b": p.b,
        "k": p.k,
        "delta": p.delta,
        "s": p.s,
        "join": shape.join,
        "parts": shape.parts,
        "edges": g.edge_count(),
        "min_degree": min_degree,
        "mu1": mu1,
        "eta1": eta1,
        "wiener_index": wiener,
        "wiener_closed_form": closed,
        "graph6": graph6,
    });
    let parts: Vec<String> = shape.parts.iter().map(usize::to_string).collect();
    let table = key_value_table(&[
        ("graph", variant_id(cfg, &p)),
        ("join", shape.join.to_string()),
        ("parts", parts.join(" ")),
        ("edges", g.edge_count().to_string()),
        ("min degree", min_degree.to_string()),
        ("distance radius", show(Some(mu1))),
        ("distance signless radius", show(Some(eta1))),
        ("wiener index", wiener.to_string()),
        (
            "wiener closed form",
            closed.map_or("-".into(), |w| w.to_string()),
        ),
    ]);
    Ok(Extremal {
        report: single(json, table, Verdict::Affirmative),
        graph6,
    })
}

pub fn check_critical(cfg: &RunConfig) -> Result<Report> {
    let g = read_graph(cfg)?;
    let b = required(cfg.b, "b")?;
    let k = required(cfg.k, "k")?;
    let spec = FactorSpec::constant(b, k);
    let (critical, witness, odd, allowance, examined, cross_check, complete) = match cfg.mode {
        Mode::Exact => {
            let opts = CriticalityOptions::default().with_cap(cfg.cap);
            let v = is_k_critical_with(&g, &spec, &opts)?;
            if v.definitional_agrees == Some(false) {
                bail!("subset enumeration and the definitional check disagree");
            }
            (
                Some(v.critical),
                v.witness,
                v.witness_odd_components,
                v.witness_allowance,
                v.subsets_examined,
                v.definitional_agrees,
                true,
            )
        }
        Mode::WitnessOnly => {
            let w = search_criticality_witness(&g, &spec, cfg.budget)?;
            let critical = if w.witness.is_some() {
                Some(false)
            } else if w.complete {
                Some(true)
            } else {
                None
            };
            (
                critical,
                w.witness,
                w.witness_odd_components,
                w.witness_allowance,
                w.subsets_examined,
                None,
                w.complete,
            )
        }
    };
    let verdict = match critical {
        Some(true) => Verdict::Affirmative,
        Some(false) => Verdict::Negative,
        None => Verdict::Undetermined,
    };
    let mode = match cfg.mode {
        Mode::Exact => "exact",
        Mode::WitnessOnly => "witness-only",
    };
    let json = json!({
        "order": g.order(),
        "b": b,
        "k": k,
        "mode": mode,
        "critical": critical,
        "complete": complete,
        "witness": witness,
        "witness_size": witness.as_ref().map(|w| w.len()),
        "witness_odd_components": odd,
        "witness_allowance": allowance,
        "subsets_examined": examined,
        "definitional_agrees": cross_check,
    });
    let verdict_text = match critical {
        Some(true) => "critical",
        Some(false) => "not critical",
        None => "undetermined (budget exhausted)",
    };
    let witness_text = witness.as_ref().map_or("-".to_string(), |w| {
        let m: Vec<String> = w.members().iter().map(usize::to_string).collect();
        format!("{{{}}}", m.join(", "))
    });
    let table = key_value_table(&[
        ("verdict", verdict_text.to_string()),
        ("witness", witness_text),
        ("odd components", odd.map_or("-".into(), |o| o.to_string())),
        ("allowance", allowance.map_or("-".into(), |a| a.to_string())),
        ("subsets examined", examined.to_string()),
    ]);
    Ok(single(json, table, verdict))
}

fn sweep_config(cfg: &RunConfig) -> Result<SweepConfig> {
    let theorem = required(cfg.theorem, "theorem")?;
    let b = required(cfg.b, "b")?;
    let k = required(cfg.k, "k")?;
    let delta = match (cfg.delta, theorem) {
        (Some(d), _) => d,
        // the connected variant fixes the comparison graph at δ = k + 1
        (None, TheoremId::DistanceRadiusConnected) => k + 1,
        (None, _) => required(cfg.delta, "delta")?,
    };
    let mut sc = SweepConfig::new(theorem, b, k, delta);
    sc.tolerances = cfg.tolerances;
    sc.criticality = CriticalityOptions::default().with_cap(cfg.cap);
    Ok(sc)
}

fn flatten_record(record: &Value) -> Value {
    let mut row = Map::new();
    if let Value::Object(map) = record {
        for (key, v) in map {
            let flat = match v {
                Value::Object(_) | Value::Array(_) => Value::String(v.to_string()),
                other => other.clone(),
            };
            row.insert(key.clone(), flat);
        }
    }
    Value::Object(row)
}

fn sweep_report(report: &SweepReport) -> Result<Report> {
    let json = serde_json::to_value(report)?;
    let rows = json["records"]
        .as_array()
        .map(|records| records.iter().map(flatten_record).collect())
        .unwrap_or_default();
    let table_rows: Vec<Vec<String>> = report
        .records
        .iter()
        .map(|r| {
            vec![
                r.graph_id.clone(),
                r.order.to_string(),
                r.edges.to_string(),
                show(r.graph_value),
                show(r.extremal_value),
                r.conclusion
                    .map_or_else(|| "error".to_string(), |c| c.to_string()),
                r.brute_force_verdict.map_or("-".into(), |c| {
                    if c { "critical" } else { "not critical" }.into()
                }),
                if r.falsification { "FALSIFIED" } else { "" }.into(),
            ]
        })
        .collect();
    let mut table = grid_table(
        &[
            "graph",
            "n",
            "e",
            "value",
            "threshold",
            "conclusion",
            "brute force",
            "",
        ],
        &table_rows,
    );
    table.push_str(&format!(
        "condition {}: {} graphs, {} falsifications\n",
        report.theorem_id,
        report.records.len(),
        report.falsifications
    ));
    let verdict = if report.falsifications == 0 {
        Verdict::Affirmative
    } else {
        Verdict::Negative
    };
    Ok(Report {
        json,
        rows,
        table,
        verdict,
    })
}

pub fn verify(cfg: &RunConfig) -> Result<Report> {
    let sc = sweep_config(cfg)?;
    let path = input_path(cfg)?;
    let label = file_label(path);
    let corpus: Vec<(String, Graph)> = read_corpus(path)?
        .into_iter()
        .enumerate()
        .map(|(i, g)| (format!("{label}#{i}"), g))
        .collect();
    sweep_report(&counterexample_sweep(&corpus, &sc))
}

pub fn sweep(cfg: &RunConfig) -> Result<Report> {
    let sc = sweep_config(cfg)?;
    let (base_id, base) = match &cfg.input {
        Some(path) => (file_label(path), read_graph(cfg)?),
        None => {
            let (g, _, p) = build_variant(cfg)?;
            (variant_id(cfg, &p), g)
        }
    };
    let mut corpus = vec![(base_id.clone(), base.clone())];
    if matches!(cfg.perturb, Perturb::Add | Perturb::Both) {
        corpus.extend(single_edge_additions(&base_id, &base));
    }
    if matches!(cfg.perturb, Perturb::Delete | Perturb::Both) {
        corpus.extend(single_edge_deletions(&base_id, &base));
    }
    sweep_report(&counterexample_sweep(&corpus, &sc))
}
