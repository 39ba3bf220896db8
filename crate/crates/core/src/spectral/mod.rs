//! Graph matrices and their spectra.
//!
//! Graph matrices (`A`, `Q = D̂ + A`, `D`, `Q_D = D + Tr`) are kept as
//! integer matrices so that transmissions and Wiener indices stay exact; they
//! are promoted to `f64` only when handed to the eigensolver.

mod distance;
mod jacobi;

pub use distance::{
    distance_matrix, is_transmission_regular, transmissions, wiener_gprime_closed_form,
    wiener_index, TransmissionVector,
};
pub use jacobi::{eigen_decomposition, eigenvalues, power_radius};

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Dense real symmetric matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    order: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    /// Validates symmetry (exact) and finiteness.
    pub fn from_row_major(order: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != order * order {
            return Err(Error::InvalidParameter(format!(
                "expected {} entries for order {order}, got {}",
                order * order,
                data.len()
            )));
        }
        for i in 0..order {
            for j in 0..order {
                let x = data[i * order + j];
                if !x.is_finite() {
                    return Err(Error::NonFinite { row: i, col: j });
                }
                if j > i && x != data[j * order + i] {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(SymMatrix { order, data })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let order = rows.len();
        if let Some(i) = rows.iter().position(|r| r.len() != order) {
            return Err(Error::InvalidParameter(format!(
                "row {i} has {} entries, expected {order}",
                rows[i].len()
            )));
        }
        Self::from_row_major(order, rows.concat())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.order + j]
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// Principal submatrix on the given (sorted, distinct) indices.
    pub fn principal_submatrix(&self, idx: &[usize]) -> SymMatrix {
        let m = idx.len();
        let mut data = Vec::with_capacity(m * m);
        for &i in idx {
            for &j in idx {
                data.push(self.get(i, j));
            }
        }
        SymMatrix { order: m, data }
    }

    pub fn eigenvalues(&self) -> Spectrum {
        eigenvalues(self)
    }

    pub fn to_csv(&self) -> String {
        rows_to_csv(self.order, |i, j| format!("{}", self.get(i, j)))
    }
}

/// Dense integer matrix, row-major. Graph matrices are symmetric by
/// construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    order: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub(crate) fn zeros(order: usize) -> Self {
        IntMatrix {
            order,
            data: vec![0; order * order],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let order = rows.len();
        if rows.iter().any(|r| r.len() != order) {
            return Err(Error::InvalidParameter(
                "rows must form a square matrix".into(),
            ));
        }
        Ok(IntMatrix {
            order,
            data: rows.concat(),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.order + j]
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, x: i64) {
        self.data[i * self.order + j] = x;
    }

    pub fn row_sum(&self, i: usize) -> i64 {
        self.data[i * self.order..(i + 1) * self.order].iter().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.order).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Promotes to a real symmetric matrix; fails if the matrix is not
    /// symmetric.
    pub fn to_real(&self) -> Result<SymMatrix> {
        SymMatrix::from_row_major(self.order, self.data.iter().map(|&x| x as f64).collect())
    }

    pub fn to_csv(&self) -> String {
        rows_to_csv(self.order, |i, j| self.get(i, j).to_string())
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_csv())
    }
}

fn rows_to_csv(order: usize, cell: impl Fn(usize, usize) -> String) -> String {
    let mut out = String::new();
    for i in 0..order {
        let row: Vec<String> = (0..order).map(|j| cell(i, j)).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

/// Eigenvalues sorted in descending order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
}

impl Spectrum {
    pub(crate) fn from_sorted(eigenvalues: Vec<f64>) -> Self {
        Spectrum { eigenvalues }
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Largest eigenvalue (`NaN` for the empty matrix).
    pub fn radius(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(f64::NAN)
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn sum(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }
}

/// Which graph matrix a spectral radius refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MatrixKind {
    /// `A(G)`, radius `ρ(G)`.
    Adjacency,
    /// `Q(G)`, radius `q(G)`.
    SignlessLaplacian,
    /// `D(G)`, radius `μ1(G)`.
    Distance,
    /// `Q_D(G)`, radius `η1(G)`.
    DistanceSignlessLaplacian,
}

impl MatrixKind {
    pub const ALL: [MatrixKind; 4] = [
        MatrixKind::Adjacency,
        MatrixKind::SignlessLaplacian,
        MatrixKind::Distance,
        MatrixKind::DistanceSignlessLaplacian,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MatrixKind::Adjacency => "adjacency",
            MatrixKind::SignlessLaplacian => "signless-laplacian",
            MatrixKind::Distance => "distance",
            MatrixKind::DistanceSignlessLaplacian => "distance-signless-laplacian",
        }
    }

    pub fn needs_connected(self) -> bool {
        matches!(
            self,
            MatrixKind::Distance | MatrixKind::DistanceSignlessLaplacian
        )
    }
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MatrixKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "adjacency" | "a" => Ok(MatrixKind::Adjacency),
            "signless-laplacian" | "signless_laplacian" | "q" => Ok(MatrixKind::SignlessLaplacian),
            "distance" | "d" => Ok(MatrixKind::Distance),
            "distance-signless-laplacian" | "distance_signless_laplacian" | "qd" => {
                Ok(MatrixKind::DistanceSignlessLaplacian)
            }
            other => Err(Error::InvalidParameter(format!(
                "unknown matrix kind {other:?}"
            ))),
        }
    }
}

pub fn adjacency_matrix(g: &Graph) -> IntMatrix {
    let mut m = IntMatrix::zeros(g.order());
    for (u, v) in g.edges() {
        m.set(u, v, 1);
        m.set(v, u, 1);
    }
    m
}

pub fn signless_laplacian(g: &Graph) -> IntMatrix {
    let mut m = adjacency_matrix(g);
    for v in 0..g.order() {
        m.set(v, v, g.degree(v) as i64);
    }
    m
}

/// `Q_D(G) = D(G) + Tr(G)`.
pub fn distance_signless_laplacian(g: &Graph) -> Result<IntMatrix> {
    let mut m = distance_matrix(g)?;
    for v in 0..g.order() {
        let tr = m.row_sum(v);
        m.set(v, v, tr);
    }
    Ok(m)
}

pub fn graph_matrix(g: &Graph, kind: MatrixKind) -> Result<IntMatrix> {
    match kind {
        MatrixKind::Adjacency => Ok(adjacency_matrix(g)),
        MatrixKind::SignlessLaplacian => Ok(signless_laplacian(g)),
        MatrixKind::Distance => distance_matrix(g),
        MatrixKind::DistanceSignlessLaplacian => distance_signless_laplacian(g),
    }
}

/// `ρ(G)`, `q(G)`, `μ1(G)` or `η1(G)` from the full decomposition.
pub fn spectral_radius(g: &Graph, kind: MatrixKind) -> Result<f64> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(graph_matrix(g, kind)?.to_real()?.eigenvalues().radius())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, disjoint_union, path, star};

    const TOL: f64 = 1e-10;

    #[test]
    fn rejects_asymmetric_and_non_finite() {
        assert_eq!(
            SymMatrix::from_rows(&[vec![0.0, 1.0], vec![2.0, 0.0]]),
            Err(Error::NotSymmetric { row: 0, col: 1 })
        );
        assert!(matches!(
            SymMatrix::from_rows(&[vec![f64::NAN]]),
            Err(Error::NonFinite { .. })
        ));
    }

    #[test]
    fn distance_spectrum_of_p3() {
        // roots of x^3 - 6x - 4 = (x + 2)(x^2 - 2x - 2)
        let d = distance_matrix(&path(3)).unwrap().to_real().unwrap();
        let spec = d.eigenvalues();
        let s3 = 3f64.sqrt();
        let expected = [1.0 + s3, 1.0 - s3, -2.0];
        for (got, want) in spec.eigenvalues().iter().zip(expected) {
            assert!((got - want).abs() < TOL, "{got} vs {want}");
        }
        assert!((spec.radius() - 2.732_050_807_568_877).abs() < TOL);
    }

    #[test]
    fn complete_graph_radii() {
        for m in 2..10 {
            let g = complete(m);
            let a = spectral_radius(&g, MatrixKind::Adjacency).unwrap();
            let q = spectral_radius(&g, MatrixKind::SignlessLaplacian).unwrap();
            let qd = spectral_radius(&g, MatrixKind::DistanceSignlessLaplacian).unwrap();
            assert!((a - (m as f64 - 1.0)).abs() < TOL);
            assert!((q - 2.0 * (m as f64 - 1.0)).abs() < TOL);
            assert!((qd - 2.0 * (m as f64 - 1.0)).abs() < TOL);
        }
    }

    #[test]
    fn small_known_radii() {
        let qd = spectral_radius(&cycle(4), MatrixKind::DistanceSignlessLaplacian).unwrap();
        assert!((qd - 8.0).abs() < TOL);
        let rho = spectral_radius(&star(3), MatrixKind::Adjacency).unwrap();
        assert!((rho - 3f64.sqrt()).abs() < TOL);
    }

    #[test]
    fn distance_kinds_need_connectivity() {
        let g = disjoint_union(&complete(2), &complete(2));
        assert_eq!(
            spectral_radius(&g, MatrixKind::Distance),
            Err(Error::Disconnected)
        );
        assert!((spectral_radius(&g, MatrixKind::Adjacency).unwrap() - 1.0).abs() < TOL);
    }

    #[test]
    fn power_iteration_matches_jacobi() {
        for g in [path(2), path(7), cycle(6), star(5), complete(4)] {
            let d = distance_matrix(&g).unwrap().to_real().unwrap();
            let fast = power_radius(&d).unwrap();
            assert!((fast - d.eigenvalues().radius()).abs() < 1e-8);
        }
    }

    #[test]
    fn eigenvectors_are_orthonormal_eigenpairs() {
        let m = distance_signless_laplacian(&path(5))
            .unwrap()
            .to_real()
            .unwrap();
        let (spec, vecs) = eigen_decomposition(&m);
        let n = m.order();
        for (lambda, v) in spec.eigenvalues().iter().zip(&vecs) {
            for i in 0..n {
                let mv: f64 = (0..n).map(|j| m.get(i, j) * v[j]).sum();
                assert!((mv - lambda * v[i]).abs() < 1e-9);
            }
            let norm: f64 = v.iter().map(|x| x * x).sum();
            assert!((norm - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn matrix_kind_names_round_trip() {
        for kind in MatrixKind::ALL {
            assert_eq!(kind.name().parse::<MatrixKind>().unwrap(), kind);
        }
        assert!("laplacian".parse::<MatrixKind>().is_err());
    }
}
