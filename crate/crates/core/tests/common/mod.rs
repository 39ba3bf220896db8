//! Helpers shared by the integration test targets.
#![allow(dead_code)]

use oddcrit::graph::{extremal_gprime, proof_graph_g2, proof_graph_g3};
use oddcrit::{ExtremalParams, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random graph: each pair independently with probability `p`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Random connected graph: a random recursive tree plus independent extra
/// edges with probability `p`.
pub fn random_connected_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.random_range(0..v), v));
    }
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::from_edges(n, edges).unwrap()
}

/// Graph on `n` vertices whose edges are the set bits of `mask` over the
/// pairs `(u, v)`, `u < v`, in lexicographic order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in (u + 1)..n {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Whether all three proof graphs exist for these parameters.
fn grid_member(p: &ExtremalParams) -> bool {
    extremal_gprime(p).is_ok() && proof_graph_g2(p).is_ok() && proof_graph_g3(p).is_ok()
}

/// Thirty parameter tuples `(n, b, k, δ, s)` with `b` odd, `n ≡ k (mod 2)`,
/// `k <= s <= δ-1`, `n <= 60`, for which `G′`, `G₂` and `G₃` all exist.
pub fn parameter_grid() -> Vec<ExtremalParams> {
    let mut all = Vec::new();
    for b in [1, 3] {
        for k in 1..=2 {
            for delta in (k + 1)..=(k + 3) {
                for s in k..delta {
                    for n in (20..=60).step_by(8) {
                        let n = if n % 2 == k % 2 { n } else { n + 1 };
                        let p = ExtremalParams::new(n, b, k, delta).with_s(s);
                        if n <= 60 && grid_member(&p) {
                            all.push(p);
                        }
                    }
                }
            }
        }
    }
    // spread the selection over the whole candidate list
    let step = all.len() as f64 / 30.0;
    let grid: Vec<ExtremalParams> = (0..30).map(|i| all[(i as f64 * step) as usize]).collect();
    assert_eq!(grid.len(), 30, "only {} candidate tuples", all.len());
    grid
}
