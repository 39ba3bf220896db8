use std::collections::VecDeque;

use serde::Serialize;

use super::IntMatrix;
use crate::error::{Error, Result};
use crate::graph::{ExtremalParams, Graph};

/// All-pairs shortest-path distances by a breadth-first search from every
/// vertex.
pub fn distance_matrix(g: &Graph) -> Result<IntMatrix> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let mut d = IntMatrix::zeros(n);
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::with_capacity(n);
    for src in 0..n {
        dist.fill(usize::MAX);
        dist[src] = 0;
        queue.push_back(src);
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        if reached != n {
            return Err(Error::Disconnected);
        }
        for (v, &dv) in dist.iter().enumerate() {
            d.set(src, v, dv as i64);
        }
    }
    Ok(d)
}

/// Per-vertex transmissions `Tr(v) = Σ_u d(v, u)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct TransmissionVector(pub Vec<u64>);

impl TransmissionVector {
    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn min(&self) -> Option<u64> {
        self.0.iter().copied().min()
    }

    pub fn max(&self) -> Option<u64> {
        self.0.iter().copied().max()
    }

    pub fn is_regular(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }
}

pub fn transmissions(g: &Graph) -> Result<TransmissionVector> {
    let d = distance_matrix(g)?;
    Ok(TransmissionVector(
        (0..g.order()).map(|v| d.row_sum(v) as u64).collect(),
    ))
}

/// `W(G) = Σ_{i<j} d_ij`.
pub fn wiener_index(g: &Graph) -> Result<u64> {
    let d = distance_matrix(g)?;
    let n = g.order();
    Ok((0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .map(|(i, j)| d.get(i, j) as u64)
        .sum())
}

pub fn is_transmission_regular(g: &Graph) -> Result<bool> {
    Ok(transmissions(g)?.is_regular())
}

/// Closed form of `W(G′)`:
///
/// `½[n² + (2bδ-2bk+1)n - (b²+2b)δ² + ((2b²+2b)k-3b-2)δ - b²k² + 3bk - 2]`.
pub fn wiener_gprime_closed_form(p: &ExtremalParams) -> Result<i64> {
    p.gprime_shape()?;
    let (n, b, k, d) = (p.n as i64, p.b as i64, p.k as i64, p.delta as i64);
    let twice = n * n + (2 * b * d - 2 * b * k + 1) * n - (b * b + 2 * b) * d * d
        + ((2 * b * b + 2 * b) * k - 3 * b - 2) * d
        - b * b * k * k
        + 3 * b * k
        - 2;
    debug_assert_eq!(twice % 2, 0);
    Ok(twice / 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, extremal_gprime, path};

    #[test]
    fn path_distances() {
        let d = distance_matrix(&path(3)).unwrap();
        assert_eq!(
            d,
            IntMatrix::from_rows(&[vec![0, 1, 2], vec![1, 0, 1], vec![2, 1, 0]]).unwrap()
        );
        assert_eq!(wiener_index(&path(3)).unwrap(), 4);
    }

    #[test]
    fn complete_and_cycle_transmissions() {
        for n in 1..8u64 {
            let g = complete(n as usize);
            assert_eq!(wiener_index(&g).unwrap(), n * (n - 1) / 2);
        }
        let tr = transmissions(&cycle(4)).unwrap();
        assert_eq!(tr.0, vec![4, 4, 4, 4]);
        assert!(tr.is_regular());
        assert_eq!(wiener_index(&cycle(4)).unwrap(), 8);
        assert!(!is_transmission_regular(&path(3)).unwrap());
    }

    #[test]
    fn closed_form_at_19_1_1_3() {
        let p = ExtremalParams::new(19, 1, 1, 3);
        assert_eq!(wiener_gprime_closed_form(&p).unwrap(), 213);
        let g = extremal_gprime(&p).unwrap();
        assert_eq!(wiener_index(&g).unwrap(), 213);
        assert_eq!(transmissions(&g).unwrap().total(), 2 * 213);
    }

    #[test]
    fn closed_form_rejects_parity() {
        assert!(wiener_gprime_closed_form(&ExtremalParams::new(20, 1, 1, 3)).is_err());
    }
}
