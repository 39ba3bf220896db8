//! Simple undirected graphs on the vertex range `0..n`.

mod connectivity;
mod families;
pub mod io;

pub(crate) use connectivity::for_each_subset_of_size;
pub use connectivity::{is_k_connected, vertex_connectivity};
pub use families::{
    complete, connected_extremal, cycle, disjoint_union, empty, extremal_gprime, family, g_star,
    join, path, pendant_exception, proof_graph_g2, proof_graph_g3, star, ExtremalParams,
    FamilyShape,
};

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// A finite simple undirected graph stored as a dense adjacency relation.
///
/// Values are immutable once built; the mutating helpers are only used while
/// a graph is being assembled.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![false; n * n],
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    order: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.set(u, v, true);
        Ok(())
    }

    fn set(&mut self, u: usize, v: usize, on: bool) {
        self.adj[u * self.n + v] = on;
        self.adj[v * self.n + u] = on;
    }

    /// Copy of the graph with `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut g = self.clone();
        g.try_add_edge(u, v)?;
        Ok(g)
    }

    /// Copy of the graph with `uv` removed (a no-op when absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    order: self.n,
                });
            }
        }
        let mut g = self.clone();
        g.set(u, v, false);
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().filter(|&&b| b).count()
    }

    fn row(&self, v: usize) -> &[bool] {
        &self.adj[v * self.n..(v + 1) * self.n]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v)
            .iter()
            .enumerate()
            .filter_map(|(u, &b)| b.then_some(u))
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            ((u + 1)..self.n).filter_map(move |v| self.has_edge(u, v).then_some((u, v)))
        })
    }

    /// Unordered vertex pairs that are not edges, lexicographic order.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            ((u + 1)..self.n).filter_map(move |v| (!self.has_edge(u, v)).then_some((u, v)))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&b| b).count() / 2
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> Result<usize> {
        (0..self.n)
            .map(|v| self.degree(v))
            .min()
            .ok_or(Error::EmptyGraph)
    }

    /// Component label per vertex, among the vertices not in `removed`.
    /// Removed vertices get `usize::MAX`.
    fn component_labels(&self, removed: &[bool]) -> (Vec<usize>, usize) {
        let mut label = vec![usize::MAX; self.n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if removed[start] || label[start] != usize::MAX {
                continue;
            }
            label[start] = count;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if !removed[w] && label[w] == usize::MAX {
                        label[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    /// Sizes of the connected components of `G - S`, in order of their
    /// smallest vertex.
    pub fn component_sizes_after_removal(&self, s: &VertexSet) -> Result<Vec<usize>> {
        let removed = s.indicator(self.n)?;
        let (label, count) = self.component_labels(&removed);
        let mut sizes = vec![0; count];
        for l in label.into_iter().filter(|&l| l != usize::MAX) {
            sizes[l] += 1;
        }
        Ok(sizes)
    }

    /// `c(G)`.
    pub fn components(&self) -> usize {
        self.component_labels(&vec![false; self.n]).1
    }

    pub fn is_connected(&self) -> bool {
        self.components() <= 1
    }

    /// `o(G - S)`: number of odd components left after deleting `S`.
    pub fn odd_components_after_removal(&self, s: &VertexSet) -> Result<usize> {
        Ok(self
            .component_sizes_after_removal(s)?
            .into_iter()
            .filter(|c| c % 2 == 1)
            .count())
    }

    /// `G - S` with the surviving vertices relabelled in increasing order.
    pub fn remove_vertices(&self, s: &VertexSet) -> Result<Graph> {
        let removed = s.indicator(self.n)?;
        let keep: Vec<usize> = (0..self.n).filter(|&v| !removed[v]).collect();
        let mut g = Graph::empty(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set(i, j, true);
                }
            }
        }
        Ok(g)
    }

    /// True when every edge of `self` is an edge of `other` under the identity
    /// labelling and both graphs have the same order.
    pub fn is_spanning_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n && self.edges().all(|(u, v)| other.has_edge(u, v))
    }

    /// Neighbourhoods as bit masks. Only available for `n <= 64`.
    pub fn neighbor_masks(&self) -> Option<Vec<u64>> {
        if self.n > 64 {
            return None;
        }
        Some(
            (0..self.n)
                .map(|v| self.neighbors(v).fold(0u64, |m, u| m | (1 << u)))
                .collect(),
        )
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// A set of vertices, kept sorted and duplicate free.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, serde::Serialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(members: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = members.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    pub fn from_mask(mask: u64) -> Self {
        VertexSet((0..64).filter(|&i| mask >> i & 1 == 1).collect())
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Checks the set against a vertex range and returns its indicator vector.
    pub fn indicator(&self, order: usize) -> Result<Vec<bool>> {
        let mut ind = vec![false; order];
        for &v in &self.0 {
            if v >= order {
                return Err(Error::VertexOutOfRange { vertex: v, order });
            }
            ind[v] = true;
        }
        Ok(ind)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}
