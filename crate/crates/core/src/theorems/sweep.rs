//! Corpus sweeps: evaluate a condition on every graph and confirm each
//! positive conclusion by brute-force criticality.

use serde::Serialize;

use super::{evaluate_theorem, round_report, Conclusion, Hypotheses, TheoremId, Tolerances};
use crate::factors::{is_k_critical_with, CriticalityOptions, FactorSpec};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepConfig {
    pub theorem: TheoremId,
    pub b: usize,
    pub k: usize,
    pub delta: usize,
    pub tolerances: Tolerances,
    pub criticality: CriticalityOptions,
}

impl SweepConfig {
    pub fn new(theorem: TheoremId, b: usize, k: usize, delta: usize) -> Self {
        SweepConfig {
            theorem,
            b,
            k,
            delta,
            tolerances: Tolerances::default(),
            criticality: CriticalityOptions::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRecord {
    pub graph_id: String,
    pub theorem_id: TheoremId,
    pub order: usize,
    pub edges: usize,
    pub hypotheses: Option<Hypotheses>,
    pub graph_value: Option<f64>,
    pub extremal_value: Option<f64>,
    pub condition_met: bool,
    pub conclusion: Option<Conclusion>,
    /// Brute-force criticality, run for every graph where the condition
    /// fires (including the excluded graphs).
    pub brute_force_verdict: Option<bool>,
    pub witness: Option<VertexSet>,
    pub subsets_examined: Option<u64>,
    /// A positive conclusion contradicted by brute force.
    pub falsification: bool,
    pub error: Option<String>,
}

impl SweepRecord {
    fn failed(graph_id: &str, g: &Graph, cfg: &SweepConfig, error: String) -> Self {
        SweepRecord {
            graph_id: graph_id.to_string(),
            theorem_id: cfg.theorem,
            order: g.order(),
            edges: g.edge_count(),
            hypotheses: None,
            graph_value: None,
            extremal_value: None,
            condition_met: false,
            conclusion: None,
            brute_force_verdict: None,
            witness: None,
            subsets_examined: None,
            falsification: false,
            error: Some(error),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepReport {
    pub theorem_id: TheoremId,
    pub b: usize,
    pub k: usize,
    pub delta: usize,
    pub records: Vec<SweepRecord>,
    pub falsifications: usize,
}

fn sweep_one(graph_id: &str, g: &Graph, cfg: &SweepConfig) -> SweepRecord {
    let verdict = match evaluate_theorem(g, cfg.theorem, cfg.b, cfg.k, cfg.delta, &cfg.tolerances) {
        Ok(v) => v,
        Err(e) => return SweepRecord::failed(graph_id, g, cfg, e.to_string()),
    };
    let mut record = SweepRecord {
        graph_id: graph_id.to_string(),
        theorem_id: cfg.theorem,
        order: g.order(),
        edges: g.edge_count(),
        hypotheses: Some(verdict.hypotheses.clone()),
        graph_value: verdict.graph_value.map(round_report),
        extremal_value: verdict.extremal_value.map(round_report),
        condition_met: verdict.condition_met,
        conclusion: Some(verdict.conclusion),
        brute_force_verdict: None,
        witness: None,
        subsets_examined: None,
        falsification: false,
        error: None,
    };
    if matches!(
        verdict.conclusion,
        Conclusion::AssertsCritical | Conclusion::ExtremalException
    ) {
        match is_k_critical_with(g, &FactorSpec::constant(cfg.b, cfg.k), &cfg.criticality) {
            Ok(c) => {
                record.falsification = verdict.conclusion == Conclusion::AssertsCritical
                    && (!c.critical || c.definitional_agrees == Some(false));
                record.brute_force_verdict = Some(c.critical);
                record.witness = c.witness;
                record.subsets_examined = Some(c.subsets_examined);
            }
            Err(e) => record.error = Some(e.to_string()),
        }
    }
    record
}

/// Evaluates the configured condition on every `(id, graph)` pair, in corpus
/// order. Per-graph failures (scale caps, disconnected graphs) are recorded,
/// not propagated.
pub fn counterexample_sweep(corpus: &[(String, Graph)], cfg: &SweepConfig) -> SweepReport {
    let records: Vec<SweepRecord> = corpus.iter().map(|(id, g)| sweep_one(id, g, cfg)).collect();
    SweepReport {
        theorem_id: cfg.theorem,
        b: cfg.b,
        k: cfg.k,
        delta: cfg.delta,
        falsifications: records.iter().filter(|r| r.falsification).count(),
        records,
    }
}

/// `G + uv` for every non-edge, identified as `base+u-v`.
pub fn single_edge_additions(base_id: &str, g: &Graph) -> Vec<(String, Graph)> {
    g.non_edges()
        .map(|(u, v)| {
            let h = g.with_edge(u, v).expect("non-edge endpoints are in range");
            (format!("{base_id}+{u}-{v}"), h)
        })
        .collect()
}

/// `G - uv` for every edge, identified as `base-u-v`.
pub fn single_edge_deletions(base_id: &str, g: &Graph) -> Vec<(String, Graph)> {
    g.edges()
        .map(|(u, v)| {
            let h = g.without_edge(u, v).expect("edge endpoints are in range");
            (format!("{base_id}-{u}-{v}"), h)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{extremal_gprime, ExtremalParams};

    #[test]
    fn empty_corpus() {
        let r = counterexample_sweep(&[], &SweepConfig::new(TheoremId::EdgeCount, 1, 1, 3));
        assert!(r.records.is_empty());
        assert_eq!(r.falsifications, 0);
    }

    #[test]
    fn extremal_graph_is_confirmed_non_critical() {
        let g = extremal_gprime(&ExtremalParams::new(19, 1, 1, 3)).unwrap();
        let r = counterexample_sweep(
            &[("gprime".into(), g)],
            &SweepConfig::new(TheoremId::EdgeCount, 1, 1, 3),
        );
        let rec = &r.records[0];
        assert_eq!(rec.conclusion, Some(Conclusion::ExtremalException));
        assert_eq!(rec.brute_force_verdict, Some(false));
        assert_eq!(rec.witness, Some(VertexSet::new([0, 1, 2])));
        assert!(!rec.falsification);
    }

    #[test]
    fn cap_errors_stay_local() {
        let g = extremal_gprime(&ExtremalParams::new(47, 1, 1, 3)).unwrap();
        let h = g.with_edge(44, 45).unwrap();
        let r = counterexample_sweep(
            &[("big".into(), h)],
            &SweepConfig::new(TheoremId::DistanceRadius, 1, 1, 3),
        );
        assert_eq!(r.records[0].conclusion, Some(Conclusion::AssertsCritical));
        assert!(r.records[0].error.as_deref().unwrap().contains("cap"));
        assert_eq!(r.falsifications, 0);
    }

    #[test]
    fn perturbation_corpora() {
        let g = crate::graph::path(4);
        assert_eq!(single_edge_additions("p4", &g).len(), 3);
        let del = single_edge_deletions("p4", &g);
        assert_eq!(del.len(), 3);
        assert_eq!(del[0].0, "p4-0-1");
    }
}
