//! Odd factors and k-criticality.
//!
//! A graph is k-critical with respect to `(1,f)`-odd factors iff for every
//! `S ⊆ V(G)` with `|S| >= k`
//!
//! ```text
//! o(G - S) <= Σ_{v∈S} f(v) - max{ Σ_{v∈X} f(v) : X ⊆ S, |X| = k }
//! ```
//!
//! which for constant `f ≡ b` reads `o(G - S) <= b(|S| - k)`. The checks here
//! enumerate `S` directly, so they are exponential in `n`; an enumeration cap
//! guards against accidental large runs. `S = V(G)` is never a violation
//! (`o = 0`) and is skipped.

use serde::Serialize;

use crate::error::{param_err, Error, Result};
use crate::graph::{for_each_subset_of_size, ExtremalParams, Graph, VertexSet};

/// Default largest order accepted by the subset enumeration (about 4M subsets).
pub const DEFAULT_CAP: usize = 22;
/// Hard limit imposed by the 64-bit vertex masks.
pub const MAX_CAP: usize = 64;

/// Per-vertex odd upper bounds on factor degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OddBound {
    Constant(usize),
    PerVertex(Vec<usize>),
}

impl OddBound {
    fn validate(&self, order: usize) -> Result<()> {
        match self {
            OddBound::Constant(b) if b % 2 == 1 => Ok(()),
            OddBound::Constant(b) => param_err(format!("b = {b} must be a positive odd integer")),
            OddBound::PerVertex(f) => {
                if f.len() != order {
                    return param_err(format!(
                        "f has {} values for a graph of order {order}",
                        f.len()
                    ));
                }
                match f.iter().position(|x| x % 2 == 0) {
                    Some(v) => param_err(format!("f({v}) = {} must be odd and positive", f[v])),
                    None => Ok(()),
                }
            }
        }
    }

    fn min(&self) -> usize {
        match self {
            OddBound::Constant(b) => *b,
            OddBound::PerVertex(f) => f.iter().copied().min().unwrap_or(1),
        }
    }

    /// `Σ_{v∈S} f(v) - max_{X⊆S, |X|=k} Σ_{v∈X} f(v)` for `|S| >= k`.
    fn allowance(&self, members: &[usize], k: usize) -> i64 {
        match self {
            OddBound::Constant(b) => (*b as i64) * (members.len() as i64 - k as i64),
            OddBound::PerVertex(f) => {
                let mut vals: Vec<usize> = members.iter().map(|&v| f[v]).collect();
                vals.sort_unstable_by(|a, b| b.cmp(a));
                vals[k..].iter().sum::<usize>() as i64
            }
        }
    }
}

/// `f` together with the criticality order `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorSpec {
    pub bound: OddBound,
    pub k: usize,
}

impl FactorSpec {
    /// The `[1,b]` case.
    pub fn constant(b: usize, k: usize) -> Self {
        FactorSpec {
            bound: OddBound::Constant(b),
            k,
        }
    }

    pub fn per_vertex(f: Vec<usize>, k: usize) -> Self {
        FactorSpec {
            bound: OddBound::PerVertex(f),
            k,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CriticalityOptions {
    /// Largest graph order accepted (at most [`MAX_CAP`]).
    pub cap: usize,
    /// On a positive verdict with constant `f`, confirm it by checking
    /// `G - X` for every `|X| = k`.
    pub cross_check: bool,
    /// Skip subset sizes whose bound is at least the number of vertices left,
    /// since `o(G - S) <= n - |S|`.
    pub prune_by_order: bool,
}

impl Default for CriticalityOptions {
    fn default() -> Self {
        CriticalityOptions {
            cap: DEFAULT_CAP,
            cross_check: true,
            prune_by_order: true,
        }
    }
}

impl CriticalityOptions {
    pub fn with_cap(self, cap: usize) -> Self {
        CriticalityOptions { cap, ..self }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriticalityVerdict {
    pub critical: bool,
    /// First violating `S` in (size, lexicographic) order.
    pub witness: Option<VertexSet>,
    /// `o(G - S)` for the witness.
    pub witness_odd_components: Option<usize>,
    /// Right-hand side of the criterion for the witness.
    pub witness_allowance: Option<i64>,
    pub subsets_examined: u64,
    /// Result of the definitional cross-check, when it ran.
    pub definitional_agrees: Option<bool>,
}

/// Bit-mask view of a graph for fast odd-component counting.
struct MaskGraph {
    n: usize,
    nbrs: Vec<u64>,
}

impl MaskGraph {
    fn new(g: &Graph, cap: usize) -> Result<Self> {
        let cap = cap.min(MAX_CAP);
        if g.order() > cap {
            return Err(Error::CapExceeded {
                order: g.order(),
                cap,
            });
        }
        Ok(MaskGraph {
            n: g.order(),
            nbrs: g.neighbor_masks().expect("order checked against MAX_CAP"),
        })
    }

    /// Odd components among the vertices of `alive`.
    fn odd_components(&self, mut alive: u64) -> usize {
        let mut odd = 0;
        while alive != 0 {
            let seed = alive & alive.wrapping_neg();
            let mut comp = seed;
            let mut frontier = seed;
            while frontier != 0 {
                let mut reach = 0;
                let mut f = frontier;
                while f != 0 {
                    reach |= self.nbrs[f.trailing_zeros() as usize];
                    f &= f - 1;
                }
                frontier = reach & alive & !comp;
                comp |= frontier;
            }
            odd += (comp.count_ones() & 1) as usize;
            alive &= !comp;
        }
        odd
    }
}

struct Violation {
    set: Vec<usize>,
    odd: usize,
    allowance: i64,
}

struct Scan {
    violation: Option<Violation>,
    /// The subset budget ran out before the enumeration finished.
    truncated: bool,
}

/// Enumerates `S ⊆ vertices` with `|S| >= k`, `S` ≠ all, in (size, lex) order
/// and stops at the first `S` with `o(G' - S) > allowance(S)`, where `G'` is
/// the graph induced on `vertices`.
fn scan_for_violation(
    mg: &MaskGraph,
    vertices: &[usize],
    f: &OddBound,
    k: usize,
    prune: bool,
    budget: Option<u64>,
    examined: &mut u64,
) -> Scan {
    let m = vertices.len();
    let alive_all = vertices.iter().fold(0u64, |acc, &v| acc | 1 << v);
    let min_f = f.min();
    let mut found = None;
    let mut truncated = false;
    for size in k..m {
        if prune && m - size <= (size - k) * min_f {
            continue;
        }
        let hit = for_each_subset_of_size(m, size, |idx| {
            if budget.is_some_and(|b| *examined >= b) {
                truncated = true;
                return true;
            }
            *examined += 1;
            let members: Vec<usize> = idx.iter().map(|&i| vertices[i]).collect();
            let removed = members.iter().fold(0u64, |acc, &v| acc | 1 << v);
            let odd = mg.odd_components(alive_all & !removed);
            let allowance = f.allowance(&members, k);
            if odd as i64 > allowance {
                found = Some(Violation {
                    set: members,
                    odd,
                    allowance,
                });
                true
            } else {
                false
            }
        });
        if hit {
            break;
        }
    }
    Scan {
        violation: found,
        truncated,
    }
}

/// Whether `G` has a `(1,f)`-odd factor: `o(G - S) <= Σ_{v∈S} f(v)` for all `S`.
pub fn has_odd_factor(g: &Graph, f: &OddBound) -> Result<bool> {
    has_odd_factor_with(g, f, &CriticalityOptions::default())
}

pub fn has_odd_factor_with(g: &Graph, f: &OddBound, opts: &CriticalityOptions) -> Result<bool> {
    f.validate(g.order())?;
    let mg = MaskGraph::new(g, opts.cap)?;
    let vertices: Vec<usize> = (0..mg.n).collect();
    let mut examined = 0;
    let scan = scan_for_violation(
        &mg,
        &vertices,
        f,
        0,
        opts.prune_by_order,
        None,
        &mut examined,
    );
    Ok(scan.violation.is_none())
}

/// k-criticality by the subset criterion, with a witness on failure.
pub fn is_k_critical(g: &Graph, spec: &FactorSpec) -> Result<CriticalityVerdict> {
    is_k_critical_with(g, spec, &CriticalityOptions::default())
}

pub fn is_k_critical_with(
    g: &Graph,
    spec: &FactorSpec,
    opts: &CriticalityOptions,
) -> Result<CriticalityVerdict> {
    let n = g.order();
    let k = spec.k;
    if n < k + 2 {
        return param_err(format!(
            "criticality needs n >= k + 2, got n = {n}, k = {k}"
        ));
    }
    spec.bound.validate(n)?;
    let mg = MaskGraph::new(g, opts.cap)?;
    let vertices: Vec<usize> = (0..n).collect();
    let mut examined = 0;
    let violation = scan_for_violation(
        &mg,
        &vertices,
        &spec.bound,
        k,
        opts.prune_by_order,
        None,
        &mut examined,
    )
    .violation;

    let definitional_agrees = match (&violation, &spec.bound) {
        (None, OddBound::Constant(_)) if opts.cross_check => Some(definitional_critical(
            &mg,
            &spec.bound,
            k,
            opts.prune_by_order,
        )),
        _ => None,
    };

    Ok(match violation {
        Some(v) => CriticalityVerdict {
            critical: false,
            witness: Some(VertexSet::new(v.set)),
            witness_odd_components: Some(v.odd),
            witness_allowance: Some(v.allowance),
            subsets_examined: examined,
            definitional_agrees,
        },
        None => CriticalityVerdict {
            critical: true,
            witness: None,
            witness_odd_components: None,
            witness_allowance: None,
            subsets_examined: examined,
            definitional_agrees,
        },
    })
}

/// `G - X` has an odd factor for every `|X| = k`.
fn definitional_critical(mg: &MaskGraph, f: &OddBound, k: usize, prune: bool) -> bool {
    let n = mg.n;
    let mut all_ok = true;
    for_each_subset_of_size(n, k, |x| {
        let remaining: Vec<usize> = (0..n).filter(|v| !x.contains(v)).collect();
        let mut examined = 0;
        let fails = scan_for_violation(mg, &remaining, f, 0, prune, None, &mut examined)
            .violation
            .is_some();
        if fails {
            all_ok = false;
        }
        fails
    });
    all_ok
}

/// Definitional check on its own: for every `|X| = k`, does `G - X` have a
/// `[1,b]`-odd factor?
pub fn is_k_critical_definitional(g: &Graph, b: usize, k: usize, cap: usize) -> Result<bool> {
    let f = OddBound::Constant(b);
    f.validate(g.order())?;
    let mg = MaskGraph::new(g, cap)?;
    Ok(definitional_critical(&mg, &f, k, true))
}

/// Outcome of a bounded search for a violating set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessSearch {
    pub witness: Option<VertexSet>,
    pub witness_odd_components: Option<usize>,
    pub witness_allowance: Option<i64>,
    pub subsets_examined: u64,
    /// Every candidate set was examined, so an absent witness proves
    /// criticality.
    pub complete: bool,
}

/// Looks for a violating set among the first `budget` candidates in the
/// usual (size, lexicographic) order, without the definitional cross-check.
/// Accepts graphs up to [`MAX_CAP`] vertices regardless of the order cap.
pub fn search_criticality_witness(
    g: &Graph,
    spec: &FactorSpec,
    budget: u64,
) -> Result<WitnessSearch> {
    let n = g.order();
    let k = spec.k;
    if n < k + 2 {
        return param_err(format!(
            "criticality needs n >= k + 2, got n = {n}, k = {k}"
        ));
    }
    spec.bound.validate(n)?;
    let mg = MaskGraph::new(g, MAX_CAP)?;
    let vertices: Vec<usize> = (0..n).collect();
    let mut examined = 0;
    let scan = scan_for_violation(
        &mg,
        &vertices,
        &spec.bound,
        k,
        true,
        Some(budget),
        &mut examined,
    );
    Ok(match scan.violation {
        Some(v) => WitnessSearch {
            witness: Some(VertexSet::new(v.set)),
            witness_odd_components: Some(v.odd),
            witness_allowance: Some(v.allowance),
            subsets_examined: examined,
            complete: true,
        },
        None => WitnessSearch {
            witness: None,
            witness_odd_components: None,
            witness_allowance: None,
            subsets_examined: examined,
            complete: !scan.truncated,
        },
    })
}

/// The join clique of `G′`, which certifies that `G′` is not k-critical:
/// removing it leaves the odd big clique and `bδ-bk+1` singletons, i.e.
/// `bδ-bk+2 > b(δ-k)` odd components.
pub fn criticality_witness_extremal(p: &ExtremalParams) -> Result<VertexSet> {
    let shape = p.gprime_shape()?;
    Ok(VertexSet::new(0..shape.join))
}

/// Largest graphs accepted by [`find_odd_factor`].
pub const ORACLE_MAX_ORDER: usize = 12;
pub const ORACLE_MAX_EDGES: usize = 24;

/// Constructive search for a spanning subgraph with every degree odd and at
/// most `b`. Depth-first over the edges in lexicographic order; a vertex is
/// checked for odd degree as soon as its last incident edge is decided.
pub fn find_odd_factor(g: &Graph, b: usize) -> Result<Option<Vec<(usize, usize)>>> {
    let n = g.order();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    if n > ORACLE_MAX_ORDER || edges.len() > ORACLE_MAX_EDGES {
        return Err(Error::OracleScale {
            order: n,
            edges: edges.len(),
        });
    }
    if b.is_multiple_of(2) {
        return param_err(format!("b = {b} must be a positive odd integer"));
    }
    // degrees summing to an even number cannot all be odd on an odd order
    if n % 2 == 1 || (0..n).any(|v| g.degree(v) == 0) {
        return Ok(None);
    }
    let mut last = vec![0; n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        last[u] = i;
        last[v] = i;
    }
    let mut search = OddFactorSearch {
        edges: &edges,
        last: &last,
        b,
        deg: vec![0; n],
        chosen: Vec::new(),
    };
    Ok(search.run(0).then_some(search.chosen))
}

struct OddFactorSearch<'a> {
    edges: &'a [(usize, usize)],
    last: &'a [usize],
    b: usize,
    deg: Vec<usize>,
    chosen: Vec<(usize, usize)>,
}

impl OddFactorSearch<'_> {
    fn closes_ok(&self, i: usize) -> bool {
        let (u, v) = self.edges[i];
        (self.last[u] != i || self.deg[u] % 2 == 1) && (self.last[v] != i || self.deg[v] % 2 == 1)
    }

    fn run(&mut self, i: usize) -> bool {
        if i == self.edges.len() {
            return true;
        }
        let (u, v) = self.edges[i];
        if self.deg[u] < self.b && self.deg[v] < self.b {
            self.deg[u] += 1;
            self.deg[v] += 1;
            self.chosen.push((u, v));
            if self.closes_ok(i) && self.run(i + 1) {
                return true;
            }
            self.chosen.pop();
            self.deg[u] -= 1;
            self.deg[v] -= 1;
        }
        self.closes_ok(i) && self.run(i + 1)
    }
}
