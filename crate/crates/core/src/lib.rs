//! Alpha-triangle eigenvector centrality (αTEC) for undirected graphs.
//!
//! The centrality is the positive Perron vector of a third-order tensor that
//! blends edge structure (weight `alpha`) with triangle structure (weight
//! `1 - alpha`). Alongside it the crate provides the usual comparison
//! measures, triangle rankings and vertex-removal experiments.
//!
//! ```
//! use tricent::{graph::parse_edge_list, centrality::atec, spectral::SolverOptions, TriangleSet};
//!
//! let g = parse_edge_list("1 2\n2 3\n1 3\n3 4").unwrap();
//! let t = TriangleSet::enumerate(&g);
//! let report = atec(&g, &t, 0.5, &SolverOptions::default()).unwrap();
//! assert_eq!(report.top(1), vec!["3"]);
//! ```

// Negated float comparisons below are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analysis;
pub mod centrality;
pub mod error;
pub mod graph;
pub mod linalg;
pub mod spectral;
pub mod tensor;
pub mod triangles;

pub use error::{Error, Result};
pub use graph::{Graph, LoadOptions};
pub use spectral::{solve_spectral, SolverOptions, SpectralResult};
pub use tensor::{Alpha, AlphaTriangleOperator, MaterializedTensor};
pub use triangles::{vertex_stats, TriangleSet, VertexStats};
