//! Triangle rankings, vertex-removal experiments and cross-measure
//! correlation.

mod correlation;
mod removal;
mod triangle_rank;

pub use correlation::{correlation, rank_correlation, CorrelationMethod};
pub use removal::{removal_experiment, RemovalMode, RemovalOutcome};
pub use triangle_rank::{
    cycle_index_fiedler, cycle_index_from_vector, triangle_importance, RankingIndex, TriangleEntry,
    TriangleRanking, TRIANGLE_TIE_TOLERANCE,
};
