//! Vertex connectivity by exhaustive cut enumeration.
//!
//! Cuts are tried in increasing size. Since `κ(G) <= δ(G)` only sizes below
//! the minimum degree need to be enumerated, so the cost is
//! `Σ_{j<δ} C(n, j)` connectivity tests: exponential in `δ`, fine at the
//! scales this crate targets.

use super::{Graph, VertexSet};

pub(crate) fn for_each_subset_of_size(
    n: usize,
    size: usize,
    mut f: impl FnMut(&[usize]) -> bool,
) -> bool {
    if size > n {
        return false;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        if f(&idx) {
            return true;
        }
        // next combination in lexicographic order
        let mut i = size;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if idx[i] < n - size + i {
                break;
            }
        }
        idx[i] += 1;
        for j in (i + 1)..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn separates(g: &Graph, cut: &[usize]) -> bool {
    let set = VertexSet::new(cut.iter().copied());
    // `set` is built from in-range indices
    g.component_sizes_after_removal(&set)
        .map(|c| c.len() > 1)
        .unwrap_or(false)
}

/// Smallest cut of size `< limit`, if any.
fn smallest_cut_below(g: &Graph, limit: usize) -> Option<usize> {
    let n = g.order();
    (0..limit.min(n.saturating_sub(1)))
        .find(|&size| for_each_subset_of_size(n, size, |cut| separates(g, cut)))
}

/// `κ(G)`: size of a minimum vertex cut, `n-1` for complete graphs and 0 for
/// disconnected graphs (or `n <= 1`).
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if n <= 1 {
        return 0;
    }
    let delta = g.min_degree().unwrap_or(0);
    smallest_cut_below(g, delta).unwrap_or(delta)
}

/// True when `n > k` and `G - X` is connected for every `|X| < k`.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    g.order() > k && smallest_cut_below(g, k).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, disjoint_union, extremal_gprime, path, ExtremalParams};

    #[test]
    fn small_graphs() {
        assert_eq!(vertex_connectivity(&complete(6)), 5);
        assert_eq!(vertex_connectivity(&complete(2)), 1);
        assert_eq!(vertex_connectivity(&cycle(5)), 2);
        assert_eq!(vertex_connectivity(&path(4)), 1);
        assert_eq!(
            vertex_connectivity(&disjoint_union(&complete(3), &complete(3))),
            0
        );
    }

    #[test]
    fn gprime_connectivity_is_delta() {
        let g = extremal_gprime(&ExtremalParams::new(19, 1, 1, 3)).unwrap();
        assert_eq!(vertex_connectivity(&g), 3);
        assert!(is_k_connected(&g, 3));
        assert!(!is_k_connected(&g, 4));
    }

    #[test]
    fn k_connected_requires_order_above_k() {
        assert!(is_k_connected(&complete(3), 2));
        assert!(!is_k_connected(&complete(3), 3));
        assert!(is_k_connected(&complete(1), 0));
    }

    #[test]
    fn combinations_are_lexicographic() {
        let mut seen = Vec::new();
        for_each_subset_of_size(4, 2, |c| {
            seen.push(c.to_vec());
            false
        });
        assert_eq!(
            seen,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }
}
