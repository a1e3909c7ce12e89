//! Vertex centrality measures sharing one report type.

mod atec;
mod betweenness;
mod degree;
mod eigenvector;
mod fiedler;
mod report;
mod subgraph;
mod triangle;

pub use atec::{atec, atec_per_component, atec_with_spectrum};
pub use betweenness::{betweenness_centrality, brandes};
pub use degree::degree_centrality;
pub use eigenvector::{adjacency_perron, eigenvector_centrality, PerronPair};
pub use fiedler::{
    fiedler_vector, fiedler_vector_with, Fiedler, FiedlerMethod, DEFAULT_FIEDLER_TOL,
};
pub use report::{
    rank_scores, unit_normalize, CentralityReport, Diagnostics, Measure, MeasureKind,
    Normalization, RankEntry, TIE_TOLERANCE,
};
pub use subgraph::{subgraph_centrality, subgraph_scores, SUBGRAPH_LIMIT};
pub use triangle::triangle_centrality;
