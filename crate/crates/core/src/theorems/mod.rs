//! Sufficient conditions for k-criticality with respect to `[1,b]`-odd
//! factors, evaluated on concrete graphs.
//!
//! Each condition compares one graph invariant of `G` (size, adjacency
//! radius, signless Laplacian radius, distance radius or distance signless
//! Laplacian radius) against the same invariant of an extremal graph, under
//! gates on parity, connectivity, order and minimum degree. The "unless `G`
//! is the extremal graph" clause is decided by label identity with the graphs
//! built by [`crate::graph`], never by isomorphism testing.

mod bounds;
mod checks;
mod sweep;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{param_err, Error, Result};
use crate::graph::{
    connected_extremal, extremal_gprime, is_k_connected, pendant_exception, ExtremalParams, Graph,
};
use crate::spectral::{spectral_radius, MatrixKind};

pub use bounds::{eta_hypothesis_bound, order_bound, OrderBound};
pub use checks::{
    eta_lower_bound_check, family_ordering_check, gstar_ordering_check, interlacing_bound_check,
    CheckOutcome, Comparison, FamilyOrdering, GstarOrdering,
};
pub use sweep::{
    counterexample_sweep, single_edge_additions, single_edge_deletions, SweepConfig, SweepRecord,
    SweepReport,
};

/// The six sufficient conditions, identified externally as `1.1` to `1.6`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    /// `e(G) >= e(G′)`.
    EdgeCount,
    /// `ρ(G) >= ρ(G′)`.
    AdjacencyRadius,
    /// `q(G) >= q(G′)`.
    SignlessRadius,
    /// `μ1(G) <= μ1(K_{k+1} ∨ (K_{n-b-k-2} ∪ (b+1)K_1))`, connected `G`.
    DistanceRadiusConnected,
    /// `μ1(G) <= μ1(G′)`.
    DistanceRadius,
    /// `η1(G) <= η1(G′)`, with `b >= k`.
    DistanceSignlessRadius,
}

impl TheoremId {
    pub const ALL: [TheoremId; 6] = [
        TheoremId::EdgeCount,
        TheoremId::AdjacencyRadius,
        TheoremId::SignlessRadius,
        TheoremId::DistanceRadiusConnected,
        TheoremId::DistanceRadius,
        TheoremId::DistanceSignlessRadius,
    ];

    pub fn code(self) -> &'static str {
        match self {
            TheoremId::EdgeCount => "1.1",
            TheoremId::AdjacencyRadius => "1.2",
            TheoremId::SignlessRadius => "1.3",
            TheoremId::DistanceRadiusConnected => "1.4",
            TheoremId::DistanceRadius => "1.5",
            TheoremId::DistanceSignlessRadius => "1.6",
        }
    }

    /// Whether `G` must beat the extremal value from above (`>=`) rather
    /// than stay below it (`<=`).
    pub fn is_lower_threshold(self) -> bool {
        matches!(
            self,
            TheoremId::EdgeCount | TheoremId::AdjacencyRadius | TheoremId::SignlessRadius
        )
    }

    /// The compared invariant, or `None` for the edge count.
    pub fn matrix_kind(self) -> Option<MatrixKind> {
        match self {
            TheoremId::EdgeCount => None,
            TheoremId::AdjacencyRadius => Some(MatrixKind::Adjacency),
            TheoremId::SignlessRadius => Some(MatrixKind::SignlessLaplacian),
            TheoremId::DistanceRadiusConnected | TheoremId::DistanceRadius => {
                Some(MatrixKind::Distance)
            }
            TheoremId::DistanceSignlessRadius => Some(MatrixKind::DistanceSignlessLaplacian),
        }
    }

    fn uses_min_degree(self) -> bool {
        self != TheoremId::DistanceRadiusConnected
    }

    fn required_connectivity(self, k: usize) -> usize {
        if self == TheoremId::DistanceRadiusConnected {
            1
        } else {
            k + 1
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.code() == s.trim())
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.code())
    }
}

/// Comparison tolerances shared by every spectral check.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerances {
    /// Two values within this distance count as equal.
    pub equality: f64,
    /// A strict inequality must hold by at least this much.
    pub strict_margin: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            equality: 1e-8,
            strict_margin: 1e-9,
        }
    }
}

impl Tolerances {
    pub fn with_equality(self, equality: f64) -> Self {
        Tolerances { equality, ..self }
    }

    pub fn approx_eq(&self, a: f64, b: f64) -> bool {
        (a - b).abs() <= self.equality
    }

    pub fn at_least(&self, a: f64, b: f64) -> bool {
        a >= b - self.equality
    }

    pub fn at_most(&self, a: f64, b: f64) -> bool {
        a <= b + self.equality
    }

    pub fn strictly_greater(&self, a: f64, b: f64) -> bool {
        a > b + self.strict_margin
    }
}

/// Per-hypothesis breakdown of the gate in front of a condition.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Hypotheses {
    /// `n ≡ k (mod 2)`.
    pub parity: bool,
    pub b_odd: bool,
    /// `b >= k`, only required by the distance signless Laplacian condition.
    pub b_at_least_k: Option<bool>,
    pub connectivity_required: usize,
    pub connectivity: bool,
    pub order_bound: OrderBound,
    pub order: bool,
    pub min_degree_value: Option<usize>,
    /// `δ(G) = delta`; absent for the condition that does not reference it.
    pub min_degree: Option<bool>,
}

impl Hypotheses {
    pub fn all_met(&self) -> bool {
        self.parity
            && self.b_odd
            && self.b_at_least_k.unwrap_or(true)
            && self.connectivity
            && self.order
            && self.min_degree.unwrap_or(true)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Conclusion {
    /// Hypotheses and condition hold and `G` is not an excluded graph.
    AssertsCritical,
    /// Hypotheses and condition hold but `G` is an excluded extremal graph.
    ExtremalException,
    /// Some hypothesis fails, or the comparison graph does not exist.
    Inapplicable,
    ConditionFails,
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Conclusion::AssertsCritical => "asserts_critical",
            Conclusion::ExtremalException => "extremal_exception",
            Conclusion::Inapplicable => "inapplicable",
            Conclusion::ConditionFails => "condition_fails",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremVerdict {
    pub theorem_id: TheoremId,
    pub hypotheses: Hypotheses,
    pub hypotheses_met: bool,
    /// Invariant of `G`; absent when undefined (e.g. disconnected `G` for a
    /// distance invariant).
    pub graph_value: Option<f64>,
    /// Invariant of the comparison graph; absent when it cannot be built.
    pub extremal_value: Option<f64>,
    pub condition_met: bool,
    /// `G` equals an excluded graph label for label.
    pub is_excluded_graph: bool,
    pub conclusion: Conclusion,
}

fn invariant(g: &Graph, id: TheoremId) -> Result<f64> {
    match id.matrix_kind() {
        None => Ok(g.edge_count() as f64),
        Some(kind) => spectral_radius(g, kind),
    }
}

/// The comparison graph and the graphs excluded from the conclusion.
fn comparison_graphs(
    id: TheoremId,
    n: usize,
    b: usize,
    k: usize,
    delta: usize,
) -> Result<(Graph, Vec<Graph>)> {
    if id == TheoremId::DistanceRadiusConnected {
        let ext = connected_extremal(n, b, k)?;
        let mut excluded = vec![ext.clone()];
        if let Ok(small) = pendant_exception(n, k) {
            excluded.push(small);
        }
        Ok((ext, excluded))
    } else {
        let ext = extremal_gprime(&ExtremalParams::new(n, b, k, delta))?;
        Ok((ext.clone(), vec![ext]))
    }
}

/// Evaluates one condition on `G`. Hypothesis failures are part of the
/// verdict; only non-positive `b` or `k` are errors.
pub fn evaluate_theorem(
    g: &Graph,
    id: TheoremId,
    b: usize,
    k: usize,
    delta: usize,
    tol: &Tolerances,
) -> Result<TheoremVerdict> {
    if b == 0 || k == 0 {
        return param_err(format!("b = {b} and k = {k} must be positive integers"));
    }
    let n = g.order();
    let bound = bounds::raw_order_bound(id, b, k, delta);
    let min_degree_value = g.min_degree().ok();
    let required = id.required_connectivity(k);
    let hypotheses = Hypotheses {
        parity: n % 2 == k % 2,
        b_odd: b % 2 == 1,
        b_at_least_k: (id == TheoremId::DistanceSignlessRadius).then_some(b >= k),
        connectivity_required: required,
        connectivity: is_k_connected(g, required),
        order: bound.admits(n),
        order_bound: bound,
        min_degree_value,
        min_degree: id
            .uses_min_degree()
            .then_some(min_degree_value == Some(delta)),
    };
    let hypotheses_met = hypotheses.all_met();

    let graph_value = invariant(g, id).ok();
    let comparison = comparison_graphs(id, n, b, k, delta).ok();
    let extremal_value = comparison
        .as_ref()
        .and_then(|(ext, _)| invariant(ext, id).ok());
    let is_excluded_graph = comparison
        .as_ref()
        .is_some_and(|(_, excluded)| excluded.iter().any(|x| x == g));

    let condition_met = match (graph_value, extremal_value) {
        (Some(x), Some(y)) if id.is_lower_threshold() => tol.at_least(x, y),
        (Some(x), Some(y)) => tol.at_most(x, y),
        _ => false,
    };

    let conclusion = if !hypotheses_met || extremal_value.is_none() {
        Conclusion::Inapplicable
    } else if !condition_met {
        Conclusion::ConditionFails
    } else if is_excluded_graph {
        Conclusion::ExtremalException
    } else {
        Conclusion::AssertsCritical
    };

    Ok(TheoremVerdict {
        theorem_id: id,
        hypotheses,
        hypotheses_met,
        graph_value,
        extremal_value,
        condition_met,
        is_excluded_graph,
        conclusion,
    })
}

/// Rounds to 12 significant digits, the precision used in reports.
pub fn round_report(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}
