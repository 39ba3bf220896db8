//! Joins, unions and the parameterised families `K_s ∨ (K_{n1} ∪ … ∪ K_{nt})`.
//!
//! Family graphs use a canonical labelling: the join clique first, then the
//! parts in the order given. Partitions and subgraph checks rely on it.

use super::Graph;
use crate::error::{param_err, Error, Result};

pub fn complete(m: usize) -> Graph {
    let mut g = Graph::empty(m);
    for u in 0..m {
        for v in (u + 1)..m {
            g.set(u, v, true);
        }
    }
    g
}

/// `mK_1`.
pub fn empty(m: usize) -> Graph {
    Graph::empty(m)
}

pub fn path(m: usize) -> Graph {
    let mut g = Graph::empty(m);
    for v in 1..m {
        g.set(v - 1, v, true);
    }
    g
}

pub fn cycle(m: usize) -> Graph {
    let mut g = path(m);
    if m >= 3 {
        g.set(0, m - 1, true);
    }
    g
}

/// `K_{1,leaves}` with the centre at vertex 0.
pub fn star(leaves: usize) -> Graph {
    let mut g = Graph::empty(leaves + 1);
    for v in 1..=leaves {
        g.set(0, v, true);
    }
    g
}

/// `G ∪ H`; the vertices of `H` are shifted by `|G|`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let off = g.order();
    let mut out = Graph::empty(off + h.order());
    for (u, v) in g.edges() {
        out.set(u, v, true);
    }
    for (u, v) in h.edges() {
        out.set(u + off, v + off, true);
    }
    out
}

/// `G ∨ H`: the disjoint union plus every edge between the two sides.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let mut out = disjoint_union(g, h);
    let off = g.order();
    for u in 0..off {
        for v in 0..h.order() {
            out.set(u, v + off, true);
        }
    }
    out
}

/// Layout of a family graph: a join clique of size `join` and clique parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyShape {
    pub join: usize,
    pub parts: Vec<usize>,
}

impl FamilyShape {
    pub fn new(join: usize, parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::DegenerateFamily);
        }
        if parts.contains(&0) {
            return param_err("family parts must be positive");
        }
        Ok(FamilyShape { join, parts })
    }

    pub fn order(&self) -> usize {
        self.join + self.parts.iter().sum::<usize>()
    }

    pub fn build(&self) -> Graph {
        let union = self.parts.iter().fold(Graph::empty(0), |acc, &p| {
            disjoint_union(&acc, &complete(p))
        });
        join(&complete(self.join), &union)
    }
}

/// `K_s ∨ (K_{n1} ∪ … ∪ K_{nt})` under the canonical labelling.
pub fn family(s: usize, parts: &[usize]) -> Result<Graph> {
    Ok(FamilyShape::new(s, parts.to_vec())?.build())
}

/// Parameters of the extremal and proof graphs.
///
/// `b` is the odd-factor degree bound, `k` the criticality order, `delta` the
/// minimum-degree parameter and `s` the optional separator size.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtremalParams {
    pub n: usize,
    pub b: usize,
    pub k: usize,
    pub delta: usize,
    pub s: Option<usize>,
}

impl ExtremalParams {
    pub fn new(n: usize, b: usize, k: usize, delta: usize) -> Self {
        ExtremalParams {
            n,
            b,
            k,
            delta,
            s: None,
        }
    }

    pub fn with_s(self, s: usize) -> Self {
        ExtremalParams { s: Some(s), ..self }
    }

    /// Parity and positivity of `n`, `b`, `k`; `delta` is checked by the
    /// constructors that use it.
    pub fn validate_base(&self) -> Result<()> {
        if self.b == 0 || self.b.is_multiple_of(2) {
            return param_err(format!("b = {} must be a positive odd integer", self.b));
        }
        if self.k == 0 {
            return param_err("k must be a positive integer");
        }
        if self.n % 2 != self.k % 2 {
            return param_err(format!(
                "n = {} and k = {} must have the same parity (n ≡ k mod 2)",
                self.n, self.k
            ));
        }
        Ok(())
    }

    fn s_required(&self) -> Result<usize> {
        self.s
            .ok_or_else(|| Error::InvalidParameter("separator size s is required".into()))
    }

    /// Layout of `K_δ ∨ (K_{n-(b+1)δ+bk-1} ∪ (bδ-bk+1)K_1)`.
    pub fn gprime_shape(&self) -> Result<FamilyShape> {
        self.validate_base()?;
        if self.delta == 0 {
            return param_err("delta must be a positive integer");
        }
        singleton_shape(self.n, self.b, self.k, self.delta)
    }

    /// Layout of `K_s ∨ (K_{n-(b+1)s+bk-1} ∪ (bs-bk+1)K_1)`.
    pub fn g2_shape(&self) -> Result<FamilyShape> {
        self.validate_base()?;
        let s = self.s_required()?;
        if s == 0 {
            return param_err("s must be positive");
        }
        singleton_shape(self.n, self.b, self.k, s)
    }

    /// Layout of `K_s ∨ (K_{n-s-(δ+1-s)(bs-bk+1)} ∪ (bs-bk+1)K_{δ+1-s})`.
    pub fn g3_shape(&self) -> Result<FamilyShape> {
        self.validate_base()?;
        let s = self.s_required()?;
        if s == 0 {
            return param_err("s must be positive");
        }
        if s + 1 > self.delta {
            return param_err(format!(
                "s = {s} must satisfy s <= delta - 1 = {}",
                self.delta as i64 - 1
            ));
        }
        let (n, b, k, d, s) = (
            self.n as i64,
            self.b as i64,
            self.k as i64,
            self.delta as i64,
            s as i64,
        );
        let count = b * s - b * k + 1;
        if count < 1 {
            return param_err(format!("part count bs-bk+1 = {count} must be positive"));
        }
        let small = d + 1 - s;
        let big = n - s - small * count;
        if big < 1 {
            return param_err(format!(
                "big clique order n-s-(δ+1-s)(bs-bk+1) = {big} must be positive"
            ));
        }
        let mut parts = vec![big as usize];
        parts.extend(std::iter::repeat_n(small as usize, count as usize));
        FamilyShape::new(s as usize, parts)
    }
}

fn singleton_shape(n: usize, b: usize, k: usize, join_size: usize) -> Result<FamilyShape> {
    let (n, b, k, j) = (n as i64, b as i64, k as i64, join_size as i64);
    let singles = b * j - b * k + 1;
    if singles < 1 {
        return param_err(format!(
            "singleton count b·{j}-bk+1 = {singles} must be positive"
        ));
    }
    let big = n - (b + 1) * j + b * k - 1;
    if big < 1 {
        return param_err(format!(
            "big clique order n-(b+1)·{j}+bk-1 = {big} must be positive"
        ));
    }
    let mut parts = vec![big as usize];
    parts.extend(std::iter::repeat_n(1, singles as usize));
    FamilyShape::new(join_size, parts)
}

/// `G′ = K_δ ∨ (K_{n-(b+1)δ+bk-1} ∪ (bδ-bk+1)K_1)`.
pub fn extremal_gprime(p: &ExtremalParams) -> Result<Graph> {
    Ok(p.gprime_shape()?.build())
}

pub fn proof_graph_g2(p: &ExtremalParams) -> Result<Graph> {
    Ok(p.g2_shape()?.build())
}

pub fn proof_graph_g3(p: &ExtremalParams) -> Result<Graph> {
    Ok(p.g3_shape()?.build())
}

/// `K_{k+1} ∨ (K_{n-b-k-2} ∪ (b+1)K_1)`, i.e. `G′` with `δ = k+1`.
pub fn connected_extremal(n: usize, b: usize, k: usize) -> Result<Graph> {
    extremal_gprime(&ExtremalParams::new(n, b, k, k + 1))
}

/// `K_k ∨ (K_{n-k-1} ∪ K_1)`.
pub fn pendant_exception(n: usize, k: usize) -> Result<Graph> {
    if n < k + 2 {
        return param_err(format!("n = {n} must be at least k + 2 = {}", k + 2));
    }
    family(k, &[n - k - 1, 1])
}

/// `K_{k+2} ∨ (K_{n-2b-k-3} ∪ (2b+1)K_1)` plus an edge between the first two
/// vertices of the independent part.
pub fn g_star(n: usize, b: usize, k: usize) -> Result<Graph> {
    let p = ExtremalParams::new(n, b, k, k + 2);
    p.validate_base()?;
    if (n as i64) - 2 * (b as i64) - (k as i64) - 3 < 1 {
        return param_err(format!(
            "n-2b-k-3 = {} must be positive",
            n as i64 - 2 * b as i64 - k as i64 - 3
        ));
    }
    let shape = p.gprime_shape()?;
    let first_single = shape.join + shape.parts[0];
    shape.build().with_edge(first_single, first_single + 1)
}
