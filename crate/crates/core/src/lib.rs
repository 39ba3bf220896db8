//! Extremal graph families, distance spectra and criticality with respect to
//! `[1,b]`-odd factors.
//!
//! The crate is split along the lines of the computation:
//!
//! * [`graph`]: simple graphs, the join/union family constructors, connectivity
//!   queries and graph6 / edge-list I/O.
//! * [`spectral`]: adjacency, signless Laplacian, distance and distance
//!   signless Laplacian matrices, a cyclic Jacobi eigensolver, transmissions and
//!   the Wiener index.
//! * [`partition`]: vertex partitions, quotient matrices and equitability.
//! * [`factors`]: odd-factor existence and k-criticality by subset enumeration,
//!   with a constructive search used as an oracle on tiny graphs.
//! * [`theorems`]: order bounds, theorem verdicts, spectral ordering checks and
//!   corpus sweeps.

pub mod error;
pub mod factors;
pub mod graph;
pub mod partition;
pub mod spectral;
pub mod theorems;

pub use error::{Error, Result};
pub use factors::{CriticalityOptions, CriticalityVerdict, FactorSpec, OddBound};
pub use graph::{ExtremalParams, Graph, VertexSet};
pub use partition::{Partition, QuotientMatrix};
pub use spectral::{IntMatrix, MatrixKind, Spectrum, SymMatrix};
pub use theorems::{Conclusion, TheoremId, TheoremVerdict, Tolerances};
