//! Cyclic Jacobi diagonalisation of dense symmetric matrices.
//!
//! Each sweep annihilates every off-diagonal entry once with a plane
//! rotation. Sweeps stop when the off-diagonal Frobenius mass falls below
//! `1e-12 · ‖M‖_F`.

use super::{Spectrum, SymMatrix};

const REL_OFF_DIAGONAL: f64 = 1e-12;
const MAX_SWEEPS: usize = 100;

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            s += 2.0 * a[i * n + j] * a[i * n + j];
        }
    }
    s.sqrt()
}

/// Returns eigenvalues (unsorted, diagonal order) and, when requested, the
/// eigenvector matrix in column-major order (column `j` pairs with value `j`).
pub(crate) fn diagonalize(m: &SymMatrix, want_vectors: bool) -> (Vec<f64>, Option<Vec<f64>>) {
    let n = m.order();
    let mut a = m.data().to_vec();
    let mut v = want_vectors.then(|| {
        let mut v = vec![0.0; n * n];
        for i in 0..n {
            v[i * n + i] = 1.0;
        }
        v
    });
    let scale = m.frobenius_norm();
    if n > 1 && scale > 0.0 {
        for _ in 0..MAX_SWEEPS {
            if off_diagonal_norm(&a, n) < REL_OFF_DIAGONAL * scale {
                break;
            }
            for p in 0..n {
                for q in (p + 1)..n {
                    rotate(&mut a, v.as_deref_mut(), n, p, q);
                }
            }
        }
    }
    let values = (0..n).map(|i| a[i * n + i]).collect();
    (values, v)
}

fn rotate(a: &mut [f64], v: Option<&mut [f64]>, n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let app = a[p * n + p];
    let aqq = a[q * n + q];
    let theta = (aqq - app) / (2.0 * apq);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    // theta.signum() is 1.0 for +0.0, which gives the 45° rotation when app == aqq
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    for r in 0..n {
        if r == p || r == q {
            continue;
        }
        let arp = a[r * n + p];
        let arq = a[r * n + q];
        let new_rp = c * arp - s * arq;
        let new_rq = s * arp + c * arq;
        a[r * n + p] = new_rp;
        a[p * n + r] = new_rp;
        a[r * n + q] = new_rq;
        a[q * n + r] = new_rq;
    }
    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;

    if let Some(v) = v {
        for r in 0..n {
            let vrp = v[r * n + p];
            let vrq = v[r * n + q];
            v[r * n + p] = c * vrp - s * vrq;
            v[r * n + q] = s * vrp + c * vrq;
        }
    }
}

/// Full spectrum, descending.
pub fn eigenvalues(m: &SymMatrix) -> Spectrum {
    let (mut values, _) = diagonalize(m, false);
    values.sort_by(|x, y| y.total_cmp(x));
    Spectrum::from_sorted(values)
}

/// Eigenpairs sorted by descending eigenvalue; `vectors[j]` is a unit
/// eigenvector for `spectrum.eigenvalues()[j]`.
pub fn eigen_decomposition(m: &SymMatrix) -> (Spectrum, Vec<Vec<f64>>) {
    let n = m.order();
    let (values, vecs) = diagonalize(m, true);
    let vecs = vecs.unwrap_or_default();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| values[j].total_cmp(&values[i]));
    let vectors = order
        .iter()
        .map(|&j| (0..n).map(|r| vecs[r * n + j]).collect())
        .collect();
    let sorted = order.iter().map(|&j| values[j]).collect();
    (Spectrum::from_sorted(sorted), vectors)
}

/// Largest eigenvalue of a nonnegative matrix by shifted power iteration.
///
/// Returns `None` when the iteration does not settle; callers fall back to
/// the full decomposition.
pub fn power_radius(m: &SymMatrix) -> Option<f64> {
    let n = m.order();
    if n == 0 || m.data().iter().any(|&x| x < 0.0) {
        return None;
    }
    let a = m.data();
    let max_row = (0..n)
        .map(|i| a[i * n..(i + 1) * n].iter().sum::<f64>())
        .fold(0.0, f64::max);
    if max_row == 0.0 {
        return Some(0.0);
    }
    // the shift keeps the most negative eigenvalue from competing
    let shift = 0.5 * max_row;
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut y = vec![0.0; n];
    for _ in 0..200_000 {
        for i in 0..n {
            let row = &a[i * n..(i + 1) * n];
            y[i] = row.iter().zip(&x).map(|(r, xi)| r * xi).sum::<f64>() + shift * x[i];
        }
        let lambda: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        let residual = x
            .iter()
            .zip(&y)
            .map(|(xi, yi)| (yi - lambda * xi).powi(2))
            .sum::<f64>()
            .sqrt();
        if residual <= 1e-10 * lambda.abs() {
            return Some(lambda - shift);
        }
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm == 0.0 {
            return None;
        }
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi / norm;
        }
    }
    None
}
