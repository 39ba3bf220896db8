//! Vertex partitions, quotient matrices and equitability.
//!
//! For a partition `Π = {X_1, …, X_m}` of the index set of a matrix `M`, the
//! quotient `R(M)` holds the average row sums of the blocks `M_ij`. The
//! partition is equitable when every block has constant row sums; the
//! quotient's eigenvalues are then eigenvalues of `M`.

use crate::error::{Error, Result};
use crate::graph::{ExtremalParams, FamilyShape};
use crate::spectral::{eigen_decomposition, eigenvalues, IntMatrix, SymMatrix};

/// Ordered, disjoint, nonempty cells covering `0..order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    order: usize,
    cells: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(order: usize, cells: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; order];
        for (c, cell) in cells.iter().enumerate() {
            if cell.is_empty() {
                return Err(Error::PartitionMismatch(format!("cell {c} is empty")));
            }
            for &v in cell {
                if v >= order {
                    return Err(Error::PartitionMismatch(format!(
                        "index {v} in cell {c} is outside 0..{order}"
                    )));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::PartitionMismatch(format!("index {v} appears twice")));
                }
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::PartitionMismatch(format!(
                "index {v} is not covered"
            )));
        }
        Ok(Partition { order, cells })
    }

    /// All singletons.
    pub fn discrete(order: usize) -> Self {
        Partition {
            order,
            cells: (0..order).map(|v| vec![v]).collect(),
        }
    }

    /// One cell holding everything (no cells when `order == 0`).
    pub fn trivial(order: usize) -> Self {
        Partition {
            order,
            cells: if order == 0 {
                vec![]
            } else {
                vec![(0..order).collect()]
            },
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cell_sizes(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    fn check_order(&self, order: usize) -> Result<()> {
        if order != self.order {
            return Err(Error::PartitionMismatch(format!(
                "partition covers 0..{} but the matrix has order {order}",
                self.order
            )));
        }
        Ok(())
    }
}

/// `[join cell, first part, remaining parts]` for a family graph laid out by
/// [`FamilyShape`]; empty cells are dropped.
pub fn join_partition(s: usize, parts: &[usize]) -> Result<Partition> {
    let shape = FamilyShape::new(s, parts.to_vec())?;
    let order = shape.order();
    let big_end = s + parts[0];
    let cells: Vec<Vec<usize>> = [0..s, s..big_end, big_end..order]
        .into_iter()
        .filter(|r| !r.is_empty())
        .map(|r| r.collect())
        .collect();
    Partition::new(order, cells)
}

pub fn shape_partition(shape: &FamilyShape) -> Result<Partition> {
    join_partition(shape.join, &shape.parts)
}

/// Matrices a quotient can be taken of.
pub trait BlockMatrix {
    fn order(&self) -> usize;
    fn entry(&self, i: usize, j: usize) -> f64;
    /// Whether the rows in `rows` have equal sums over the columns `cols`.
    fn equal_block_row_sums(&self, rows: &[usize], cols: &[usize]) -> bool;
}

impl BlockMatrix for IntMatrix {
    fn order(&self) -> usize {
        IntMatrix::order(self)
    }

    fn entry(&self, i: usize, j: usize) -> f64 {
        self.get(i, j) as f64
    }

    fn equal_block_row_sums(&self, rows: &[usize], cols: &[usize]) -> bool {
        let sum = |r: usize| cols.iter().map(|&c| self.get(r, c)).sum::<i64>();
        let first = sum(rows[0]);
        rows.iter().all(|&r| sum(r) == first)
    }
}

/// Relative tolerance for row-sum comparisons on real matrices.
pub const REAL_EQUITABLE_TOL: f64 = 1e-9;

impl BlockMatrix for SymMatrix {
    fn order(&self) -> usize {
        SymMatrix::order(self)
    }

    fn entry(&self, i: usize, j: usize) -> f64 {
        self.get(i, j)
    }

    fn equal_block_row_sums(&self, rows: &[usize], cols: &[usize]) -> bool {
        let sums: Vec<f64> = rows
            .iter()
            .map(|&r| cols.iter().map(|&c| self.get(r, c)).sum())
            .collect();
        let scale = sums.iter().fold(1.0f64, |m, s| m.max(s.abs()));
        sums.iter()
            .all(|s| (s - sums[0]).abs() <= REAL_EQUITABLE_TOL * scale)
    }
}

/// `R(M)`: average block row sums. Cell sizes are kept so that the spectrum
/// can be computed from the symmetric form `S^{1/2} R S^{-1/2}`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuotientMatrix {
    order: usize,
    entries: Vec<f64>,
    cell_sizes: Vec<usize>,
}

impl QuotientMatrix {
    /// Builds a quotient from explicit entries, e.g. a closed-form one.
    pub fn from_rows(rows: &[Vec<f64>], cell_sizes: Vec<usize>) -> Result<Self> {
        let m = rows.len();
        if rows.iter().any(|r| r.len() != m) || cell_sizes.len() != m {
            return Err(Error::PartitionMismatch(
                "quotient rows and cell sizes disagree in length".into(),
            ));
        }
        if cell_sizes.contains(&0) {
            return Err(Error::PartitionMismatch("empty cell".into()));
        }
        Ok(QuotientMatrix {
            order: m,
            entries: rows.concat(),
            cell_sizes,
        })
    }

    pub fn from_int_rows<const M: usize>(
        rows: [[i64; M]; M],
        cell_sizes: Vec<usize>,
    ) -> Result<Self> {
        let rows: Vec<Vec<f64>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| x as f64).collect())
            .collect();
        Self::from_rows(&rows, cell_sizes)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.order + j]
    }

    pub fn cell_sizes(&self) -> &[usize] {
        &self.cell_sizes
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.entries
            .chunks(self.order)
            .map(<[f64]>::to_vec)
            .collect()
    }

    /// `S^{1/2} R S^{-1/2}` with `S = diag(cell sizes)`. Symmetric whenever the
    /// quotient came from a symmetric matrix, since `|X_i| R_ij` is then the
    /// symmetric block sum.
    pub fn symmetrized(&self) -> Result<SymMatrix> {
        let m = self.order;
        let mut data = vec![0.0; m * m];
        for i in 0..m {
            for j in 0..m {
                let si = self.cell_sizes[i] as f64;
                let sj = self.cell_sizes[j] as f64;
                data[i * m + j] = self.get(i, j) * (si / sj).sqrt();
            }
        }
        // the two triangles agree up to rounding; average them
        for i in 0..m {
            for j in (i + 1)..m {
                let (a, b) = (data[i * m + j], data[j * m + i]);
                if (a - b).abs() > 1e-9 * a.abs().max(b.abs()).max(1.0) {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
                let avg = 0.5 * (a + b);
                data[i * m + j] = avg;
                data[j * m + i] = avg;
            }
        }
        SymMatrix::from_row_major(m, data)
    }

    /// Eigenvalues, descending, through the symmetric similarity transform.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        Ok(eigenvalues(&self.symmetrized()?).eigenvalues().to_vec())
    }

    /// Coefficients `(c2, c1, c0)` of `det(xI - R) = x³ + c2 x² + c1 x + c0`.
    pub fn characteristic_cubic(&self) -> Result<[f64; 3]> {
        if self.order != 3 {
            return Err(Error::PartitionMismatch(format!(
                "characteristic cubic needs a 3x3 quotient, got {}x{}",
                self.order, self.order
            )));
        }
        let r = |i, j| self.get(i, j);
        let trace = r(0, 0) + r(1, 1) + r(2, 2);
        let minors = r(0, 0) * r(1, 1) - r(0, 1) * r(1, 0) + r(0, 0) * r(2, 2) - r(0, 2) * r(2, 0)
            + r(1, 1) * r(2, 2)
            - r(1, 2) * r(2, 1);
        let det = r(0, 0) * (r(1, 1) * r(2, 2) - r(1, 2) * r(2, 1))
            - r(0, 1) * (r(1, 0) * r(2, 2) - r(1, 2) * r(2, 0))
            + r(0, 2) * (r(1, 0) * r(2, 1) - r(1, 1) * r(2, 0));
        Ok([-trace, minors, -det])
    }

    /// Largest real root of the characteristic cubic.
    pub fn largest_root_cubic(&self) -> Result<f64> {
        let [a, b, c] = self.characteristic_cubic()?;
        Ok(cubic_real_roots(a, b, c)[0])
    }
}

/// Real roots of `x³ + a x² + b x + c`, descending, each refined by a few
/// Newton steps.
pub fn cubic_real_roots(a: f64, b: f64, c: f64) -> Vec<f64> {
    use std::f64::consts::PI;
    let p = b - a * a / 3.0;
    let q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    let shift = -a / 3.0;
    let disc = q * q / 4.0 + p * p * p / 27.0;
    let mut roots = if p < 0.0 && disc <= 0.0 {
        let r = 2.0 * (-p / 3.0).sqrt();
        let arg = (3.0 * q / (p * r)).clamp(-1.0, 1.0);
        let phi = arg.acos() / 3.0;
        (0..3)
            .map(|k| r * (phi - 2.0 * PI * k as f64 / 3.0).cos() + shift)
            .collect::<Vec<_>>()
    } else {
        let sq = disc.max(0.0).sqrt();
        vec![(-q / 2.0 + sq).cbrt() + (-q / 2.0 - sq).cbrt() + shift]
    };
    let f = |x: f64| ((x + a) * x + b) * x + c;
    let df = |x: f64| (3.0 * x + 2.0 * a) * x + b;
    for x in roots.iter_mut() {
        for _ in 0..4 {
            let d = df(*x);
            if d == 0.0 {
                break;
            }
            let step = f(*x) / d;
            if !step.is_finite() {
                break;
            }
            *x -= step;
        }
    }
    roots.sort_by(|x, y| y.total_cmp(x));
    roots
}

/// `R(M)` for the given partition.
pub fn quotient<M: BlockMatrix>(m: &M, p: &Partition) -> Result<QuotientMatrix> {
    p.check_order(m.order())?;
    let k = p.len();
    let mut entries = vec![0.0; k * k];
    for (i, rows) in p.cells().iter().enumerate() {
        for (j, cols) in p.cells().iter().enumerate() {
            let total: f64 = rows
                .iter()
                .map(|&r| cols.iter().map(|&c| m.entry(r, c)).sum::<f64>())
                .sum();
            entries[i * k + j] = total / rows.len() as f64;
        }
    }
    Ok(QuotientMatrix {
        order: k,
        entries,
        cell_sizes: p.cell_sizes(),
    })
}

/// Every block has constant row sums: exact on integer matrices, relative
/// tolerance [`REAL_EQUITABLE_TOL`] on real ones.
pub fn is_equitable<M: BlockMatrix>(m: &M, p: &Partition) -> Result<bool> {
    p.check_order(m.order())?;
    Ok(p.cells().iter().all(|rows| {
        p.cells()
            .iter()
            .all(|cols| m.equal_block_row_sums(rows, cols))
    }))
}

/// Positive unit eigenvector for the largest eigenvalue of a nonnegative
/// irreducible matrix.
pub fn perron_vector(m: &SymMatrix) -> Result<Vec<f64>> {
    let n = m.order();
    if n == 0 || m.data().iter().any(|&x| x < 0.0) {
        return Err(Error::Reducible);
    }
    if n > 1 && !pattern_connected(m) {
        return Err(Error::Reducible);
    }
    if n == 1 {
        return Ok(vec![1.0]);
    }
    let (_, vectors) = eigen_decomposition(m);
    let mut v = vectors.into_iter().next().ok_or(Error::Reducible)?;
    if v.iter().sum::<f64>() < 0.0 {
        v.iter_mut().for_each(|x| *x = -*x);
    }
    if v.iter().any(|&x| x <= 0.0) {
        return Err(Error::Reducible);
    }
    Ok(v)
}

/// Whether the off-diagonal nonzero pattern is a connected graph.
fn pattern_connected(m: &SymMatrix) -> bool {
    let n = m.order();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for w in 0..n {
            if w != u && !seen[w] && m.get(u, w) != 0.0 {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Largest within-cell (population) standard deviation of `v`.
pub fn max_cell_std(v: &[f64], p: &Partition) -> Result<f64> {
    p.check_order(v.len())?;
    Ok(p.cells()
        .iter()
        .map(|cell| {
            let mean = cell.iter().map(|&i| v[i]).sum::<f64>() / cell.len() as f64;
            let var = cell.iter().map(|&i| (v[i] - mean).powi(2)).sum::<f64>() / cell.len() as f64;
            var.sqrt()
        })
        .fold(0.0, f64::max))
}

/// Closed-form 3×3 quotients of the join partition of the proof graphs.
///
/// `G′` is the `s = δ` instance of the `G₂` formulas.
pub mod closed_form {
    use super::*;

    fn ints(p: &ExtremalParams) -> Result<(i64, i64, i64, i64, i64)> {
        let s =
            p.s.ok_or_else(|| Error::InvalidParameter("separator size s is required".into()))?;
        Ok((p.n as i64, p.b as i64, p.k as i64, p.delta as i64, s as i64))
    }

    /// `R(D(G₂))` for `G₂ = K_s ∨ (K_{n-(b+1)s+bk-1} ∪ (bs-bk+1)K_1)`.
    pub fn distance_g2(p: &ExtremalParams) -> Result<QuotientMatrix> {
        let shape = p.g2_shape()?;
        let (n, b, k, _, s) = ints(p)?;
        let big = n - (b + 1) * s + b * k - 1;
        let singles = b * s - b * k + 1;
        let rows = [
            [s - 1, big, singles],
            [s, big - 1, 2 * singles],
            [s, 2 * big, 2 * (b * s - b * k)],
        ];
        QuotientMatrix::from_int_rows(rows, shape_sizes(&shape))
    }

    /// `R(D(G′))`.
    pub fn distance_gprime(p: &ExtremalParams) -> Result<QuotientMatrix> {
        distance_g2(&p.with_s(p.delta))
    }

    /// `R(D(G₃))` for `G₃ = K_s ∨ (K_{n-s-(δ+1-s)(bs-bk+1)} ∪ (bs-bk+1)K_{δ+1-s})`.
    pub fn distance_g3(p: &ExtremalParams) -> Result<QuotientMatrix> {
        let shape = p.g3_shape()?;
        let (n, b, k, d, s) = ints(p)?;
        let count = b * s - b * k + 1;
        let small = d + 1 - s;
        let big = n - s - small * count;
        let rows = [
            [s - 1, big, count * small],
            [s, big - 1, 2 * count * small],
            [s, 2 * big, d - s + 2 * (b * s - b * k) * small],
        ];
        QuotientMatrix::from_int_rows(rows, shape_sizes(&shape))
    }

    /// `R(Q_D(G₂))`.
    pub fn qd_g2(p: &ExtremalParams) -> Result<QuotientMatrix> {
        let shape = p.g2_shape()?;
        let (n, b, k, _, s) = ints(p)?;
        let big = n - (b + 1) * s + b * k - 1;
        let singles = b * s - b * k + 1;
        let rows = [
            [n + s - 2, big, singles],
            [s, 2 * n - s - 2, 2 * singles],
            [s, 2 * big, 2 * (n - b * k - 1) + (2 * b - 1) * s],
        ];
        QuotientMatrix::from_int_rows(rows, shape_sizes(&shape))
    }

    /// `R(Q_D(G′))`.
    pub fn qd_gprime(p: &ExtremalParams) -> Result<QuotientMatrix> {
        qd_g2(&p.with_s(p.delta))
    }

    /// `R(Q_D(G₃))`.
    pub fn qd_g3(p: &ExtremalParams) -> Result<QuotientMatrix> {
        let shape = p.g3_shape()?;
        let (n, b, k, d, s) = ints(p)?;
        let count = b * s - b * k + 1;
        let small = d + 1 - s;
        let big = n - s - small * count;
        let rows = [
            [n + s - 2, big, count * small],
            [s, 2 * n - s - 2, 2 * count * small],
            [s, 2 * big, 2 * (n - 1 + (b * s - b * k) * small) - s],
        ];
        QuotientMatrix::from_int_rows(rows, shape_sizes(&shape))
    }

    fn shape_sizes(shape: &FamilyShape) -> Vec<usize> {
        vec![shape.join, shape.parts[0], shape.parts[1..].iter().sum()]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, extremal_gprime, path, proof_graph_g2, proof_graph_g3};
    use crate::spectral::{distance_matrix, distance_signless_laplacian};

    #[test]
    fn partition_validation() {
        assert!(Partition::new(3, vec![vec![0, 1], vec![2]]).is_ok());
        assert!(Partition::new(3, vec![vec![0, 1], vec![1, 2]]).is_err());
        assert!(Partition::new(3, vec![vec![0, 1]]).is_err());
        assert!(Partition::new(3, vec![vec![0, 1, 2], vec![]]).is_err());
        assert!(Partition::new(3, vec![vec![0, 1, 3]]).is_err());
    }

    #[test]
    fn single_cell_quotient_of_complete_distance() {
        let d = distance_matrix(&complete(6)).unwrap();
        let q = quotient(&d, &Partition::trivial(6)).unwrap();
        assert_eq!(q.rows(), vec![vec![5.0]]);
        assert!(is_equitable(&d, &Partition::trivial(6)).unwrap());
    }

    #[test]
    fn join_partition_cells() {
        let p = join_partition(3, &[13, 1, 1, 1]).unwrap();
        assert_eq!(p.cell_sizes(), vec![3, 13, 3]);
        assert_eq!(join_partition(0, &[5]).unwrap(), Partition::trivial(5));
        let g3 = ExtremalParams::new(19, 1, 1, 4)
            .with_s(3)
            .g3_shape()
            .unwrap();
        assert_eq!(shape_partition(&g3).unwrap().cell_sizes(), vec![3, 10, 6]);
    }

    #[test]
    fn equitability() {
        let d = distance_matrix(&path(4)).unwrap();
        assert!(is_equitable(&d, &Partition::discrete(4)).unwrap());
        // ends with interiors is equitable; an end with an interior is not
        let good = Partition::new(4, vec![vec![0, 3], vec![1, 2]]).unwrap();
        let bad = Partition::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        assert!(is_equitable(&d, &good).unwrap());
        assert!(!is_equitable(&d, &bad).unwrap());
        assert!(!is_equitable(&d.to_real().unwrap(), &bad).unwrap());
        assert!(is_equitable(&d, &Partition::discrete(3)).is_err());
    }

    #[test]
    fn closed_form_matches_computed_quotients() {
        let p = ExtremalParams::new(19, 1, 1, 3);
        let g = extremal_gprime(&p).unwrap();
        let part = shape_partition(&p.gprime_shape().unwrap()).unwrap();
        let d = distance_matrix(&g).unwrap();
        assert!(is_equitable(&d, &part).unwrap());
        assert_eq!(
            quotient(&d, &part).unwrap(),
            closed_form::distance_gprime(&p).unwrap()
        );
        let qd = distance_signless_laplacian(&g).unwrap();
        assert_eq!(
            quotient(&qd, &part).unwrap(),
            closed_form::qd_gprime(&p).unwrap()
        );

        let p3 = ExtremalParams::new(25, 1, 1, 4).with_s(2);
        let g3 = proof_graph_g3(&p3).unwrap();
        let part3 = shape_partition(&p3.g3_shape().unwrap()).unwrap();
        let d3 = distance_matrix(&g3).unwrap();
        assert_eq!(
            quotient(&d3, &part3).unwrap(),
            closed_form::distance_g3(&p3).unwrap()
        );
        let qd3 = distance_signless_laplacian(&g3).unwrap();
        assert_eq!(
            quotient(&qd3, &part3).unwrap(),
            closed_form::qd_g3(&p3).unwrap()
        );

        let p2 = ExtremalParams::new(31, 1, 1, 2).with_s(4);
        let g2 = proof_graph_g2(&p2).unwrap();
        let part2 = shape_partition(&p2.g2_shape().unwrap()).unwrap();
        let qd2 = distance_signless_laplacian(&g2).unwrap();
        assert_eq!(
            quotient(&qd2, &part2).unwrap(),
            closed_form::qd_g2(&p2).unwrap()
        );
    }

    #[test]
    fn cubic_solver() {
        // (x - 3)(x + 1)(x - 0.5)
        let roots = cubic_real_roots(-2.5, -2.0, 1.5);
        for (r, want) in roots.iter().zip([3.0, 0.5, -1.0]) {
            assert!((r - want).abs() < 1e-12);
        }
        // x^3 - 1 has a single real root
        let roots = cubic_real_roots(0.0, 0.0, -1.0);
        assert_eq!(roots.len(), 1);
        assert!((roots[0] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn cubic_and_symmetrized_routes_agree() {
        let q = closed_form::distance_gprime(&ExtremalParams::new(19, 1, 1, 3)).unwrap();
        let cubic = q.largest_root_cubic().unwrap();
        let sym = q.eigenvalues().unwrap()[0];
        assert!((cubic - sym).abs() < 1e-9, "{cubic} vs {sym}");
    }

    #[test]
    fn perron_vectors() {
        let d = distance_matrix(&complete(5)).unwrap().to_real().unwrap();
        let v = perron_vector(&d).unwrap();
        for x in &v {
            assert!((x - 1.0 / 5f64.sqrt()).abs() < 1e-10);
        }
        let d = distance_matrix(&path(3)).unwrap().to_real().unwrap();
        let v = perron_vector(&d).unwrap();
        assert!((v[0] - v[2]).abs() < 1e-10);
        assert!((v[1] - v[0]).abs() > 1e-3);

        let reducible = SymMatrix::from_rows(&[vec![1.0, 0.0], vec![0.0, 2.0]]).unwrap();
        assert_eq!(perron_vector(&reducible), Err(Error::Reducible));
        let zero = SymMatrix::from_rows(&[vec![0.0, 0.0], vec![0.0, 0.0]]).unwrap();
        assert_eq!(perron_vector(&zero), Err(Error::Reducible));
    }
}
