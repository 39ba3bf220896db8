//! Library results against independent reference computations.

mod common;

use common::{parameter_grid, random_connected_graph, random_graph, rng};
use nalgebra::DMatrix;
use oddcrit::factors::{
    find_odd_factor, has_odd_factor, is_k_critical, is_k_critical_definitional,
};
use oddcrit::graph::{family, vertex_connectivity, FamilyShape};
use oddcrit::partition::{closed_form, quotient, shape_partition};
use oddcrit::spectral::{
    distance_matrix, distance_signless_laplacian, graph_matrix, power_radius, spectral_radius,
    wiener_gprime_closed_form, wiener_index,
};
use oddcrit::{FactorSpec, Graph, MatrixKind, OddBound, SymMatrix, VertexSet};
use rand::Rng;

const INF: u64 = u64::MAX / 4;

fn floyd_warshall(g: &Graph) -> Vec<Vec<u64>> {
    let n = g.order();
    let mut d = vec![vec![INF; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0;
    }
    for (u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for m in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][m] + d[m][j] < d[i][j] {
                    d[i][j] = d[i][m] + d[m][j];
                }
            }
        }
    }
    d
}

fn connected_without(g: &Graph, removed: u64) -> bool {
    let n = g.order();
    let alive: Vec<usize> = (0..n).filter(|v| removed >> v & 1 == 0).collect();
    if alive.len() <= 1 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![alive[0]];
    seen[alive[0]] = true;
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for w in g.neighbors(u) {
            if removed >> w & 1 == 0 && !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == alive.len()
}

/// Smallest vertex set whose removal disconnects `G`, over all subsets.
fn brute_connectivity(g: &Graph) -> usize {
    let n = g.order();
    (0u64..1 << n)
        .filter(|&s| (s.count_ones() as usize) + 2 <= n && !connected_without(g, s))
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap_or(n.saturating_sub(1))
}

fn nalgebra_spectrum(m: &SymMatrix) -> Vec<f64> {
    let n = m.order();
    let a = DMatrix::from_fn(n, n, |i, j| m.get(i, j));
    let mut ev: Vec<f64> = a.symmetric_eigen().eigenvalues.iter().copied().collect();
    ev.sort_by(|x, y| y.total_cmp(x));
    ev
}

#[test]
fn bfs_distances_match_floyd_warshall() {
    let mut r = rng(1);
    for _ in 0..100 {
        let n = r.random_range(1..20);
        let g = random_connected_graph(&mut r, n, 0.15);
        let d = distance_matrix(&g).unwrap();
        let fw = floyd_warshall(&g);
        for i in 0..n {
            for j in 0..n {
                assert_eq!(d.get(i, j) as u64, fw[i][j]);
            }
        }
    }
}

#[test]
fn family_graphs_have_diameter_two() {
    let mut r = rng(2);
    for _ in 0..50 {
        let s = r.random_range(1..4);
        let t = r.random_range(1..5);
        let parts: Vec<usize> = (0..t).map(|_| r.random_range(1..6)).collect();
        let g = family(s, &parts).unwrap();
        let d = distance_matrix(&g).unwrap();
        let fw = floyd_warshall(&g);
        for i in 0..g.order() {
            for j in 0..g.order() {
                assert!(d.get(i, j) <= 2);
                assert_eq!(d.get(i, j) as u64, fw[i][j]);
            }
        }
    }
}

#[test]
fn connectivity_matches_exhaustive_cuts() {
    let mut r = rng(3);
    for _ in 0..200 {
        let n = r.random_range(2..10);
        let density = r.random_range(0.2..0.9);
        let g = random_graph(&mut r, n, density);
        assert_eq!(vertex_connectivity(&g), brute_connectivity(&g), "{g:?}");
    }
}

#[test]
fn jacobi_matches_nalgebra() {
    let mut r = rng(4);
    for _ in 0..60 {
        let n = r.random_range(1..25);
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let x = r.random_range(-5.0..5.0);
                data[i * n + j] = x;
                data[j * n + i] = x;
            }
        }
        let m = SymMatrix::from_row_major(n, data).unwrap();
        let ours = m.eigenvalues();
        let theirs = nalgebra_spectrum(&m);
        for (a, b) in ours.eigenvalues().iter().zip(&theirs) {
            assert!(
                (a - b).abs() < 1e-10 * (1.0 + m.frobenius_norm()),
                "{a} vs {b}"
            );
        }
    }
    for _ in 0..30 {
        let n = r.random_range(2..30);
        let g = random_connected_graph(&mut r, n, 0.2);
        for kind in MatrixKind::ALL {
            let m = graph_matrix(&g, kind).unwrap().to_real().unwrap();
            let theirs = nalgebra_spectrum(&m);
            assert!((spectral_radius(&g, kind).unwrap() - theirs[0]).abs() < 1e-9);
        }
    }
}

#[test]
fn power_iteration_agrees_with_full_decomposition() {
    let mut r = rng(5);
    for _ in 0..40 {
        let n = r.random_range(2..30);
        let g = random_connected_graph(&mut r, n, 0.25);
        for kind in MatrixKind::ALL {
            let m = graph_matrix(&g, kind).unwrap().to_real().unwrap();
            if let Some(fast) = power_radius(&m) {
                assert!((fast - m.eigenvalues().radius()).abs() < 1e-8);
            }
        }
    }
}

#[test]
fn wiener_closed_form_matches_direct_sum() {
    for p in parameter_grid().into_iter().take(20) {
        let g = oddcrit::graph::extremal_gprime(&p).unwrap();
        assert_eq!(
            wiener_gprime_closed_form(&p).unwrap(),
            wiener_index(&g).unwrap() as i64,
            "{p:?}"
        );
    }
}

#[test]
fn printed_quotients_match_computed_quotients() {
    for p in parameter_grid() {
        let gp = p.gprime_shape().unwrap();
        let g2 = p.g2_shape().unwrap();
        let g3 = p.g3_shape().unwrap();
        let cases: [(&FamilyShape, _, _); 3] = [
            (
                &gp,
                closed_form::distance_gprime(&p),
                closed_form::qd_gprime(&p),
            ),
            (&g2, closed_form::distance_g2(&p), closed_form::qd_g2(&p)),
            (&g3, closed_form::distance_g3(&p), closed_form::qd_g3(&p)),
        ];
        for (shape, d_printed, qd_printed) in cases {
            let g = shape.build();
            let part = shape_partition(shape).unwrap();
            let d = quotient(&distance_matrix(&g).unwrap(), &part).unwrap();
            let qd = quotient(&distance_signless_laplacian(&g).unwrap(), &part).unwrap();
            assert_eq!(d.rows(), d_printed.unwrap().rows(), "{p:?}");
            assert_eq!(qd.rows(), qd_printed.unwrap().rows(), "{p:?}");
        }
    }
}

/// `G - X` has an odd factor for every `|X| = k`, checked constructively.
fn critical_by_construction(g: &Graph, b: usize, k: usize) -> bool {
    let n = g.order();
    (0u64..1 << n)
        .filter(|x| x.count_ones() as usize == k)
        .all(|x| {
            let h = g.remove_vertices(&VertexSet::from_mask(x)).unwrap();
            find_odd_factor(&h, b).unwrap().is_some()
        })
}

#[test]
fn criticality_matches_constructive_oracle() {
    let mut r = rng(6);
    let mut checked = 0;
    while checked < 150 {
        let n = r.random_range(3..9);
        let density = r.random_range(0.2..0.9);
        let g = random_connected_graph(&mut r, n, density);
        if g.edge_count() > 24 {
            continue;
        }
        for (b, k) in [(1, 1), (1, 2), (3, 1), (3, 2)] {
            if n < k + 2 {
                continue;
            }
            let v = is_k_critical(&g, &FactorSpec::constant(b, k)).unwrap();
            assert_eq!(
                v.critical,
                critical_by_construction(&g, b, k),
                "{g:?} b={b} k={k}"
            );
            if let Some(agrees) = v.definitional_agrees {
                assert!(agrees);
            }
        }
        checked += 1;
    }
}

#[test]
fn subset_and_definitional_routes_agree() {
    let mut r = rng(7);
    for _ in 0..150 {
        let n = r.random_range(4..12);
        let density = r.random_range(0.3..0.9);
        let g = random_connected_graph(&mut r, n, density);
        for (b, k) in [(1, 1), (1, 2), (3, 1), (3, 3)] {
            if n < k + 2 {
                continue;
            }
            let direct = is_k_critical(&g, &FactorSpec::constant(b, k))
                .unwrap()
                .critical;
            let definitional = is_k_critical_definitional(&g, b, k, 22).unwrap();
            assert_eq!(direct, definitional, "{g:?} b={b} k={k}");
        }
    }
}

#[test]
fn critical_graphs_are_connected_enough_and_stay_critical() {
    let mut r = rng(8);
    let mut found = 0;
    for _ in 0..300 {
        let n = r.random_range(4..11);
        let density = r.random_range(0.4..0.95);
        let g = random_connected_graph(&mut r, n, density);
        for (b, k) in [(1, 1), (1, 2), (3, 2)] {
            if n < k + 2
                || !is_k_critical(&g, &FactorSpec::constant(b, k))
                    .unwrap()
                    .critical
            {
                continue;
            }
            found += 1;
            assert_eq!(n % 2, k % 2);
            assert!(vertex_connectivity(&g) >= k);
            for (u, v) in g.non_edges() {
                let h = g.with_edge(u, v).unwrap();
                assert!(
                    is_k_critical(&h, &FactorSpec::constant(b, k))
                        .unwrap()
                        .critical
                );
            }
        }
    }
    assert!(found > 20, "too few critical graphs sampled: {found}");
}

#[test]
fn odd_factor_routes_agree_on_random_graphs() {
    let mut r = rng(9);
    for _ in 0..300 {
        let n = r.random_range(1..11);
        let density = r.random_range(0.1..0.6);
        let g = random_graph(&mut r, n, density);
        if g.edge_count() > 24 {
            continue;
        }
        for b in [1, 3, 5] {
            let found = find_odd_factor(&g, b).unwrap();
            if let Some(edges) = &found {
                let h = Graph::from_edges(n, edges.iter().copied()).unwrap();
                assert!(h.degrees().iter().all(|&d| d % 2 == 1 && d <= b));
            }
            assert_eq!(
                has_odd_factor(&g, &OddBound::Constant(b)).unwrap(),
                found.is_some() || n == 0
            );
        }
    }
}
