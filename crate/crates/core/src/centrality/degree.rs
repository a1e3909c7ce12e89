use super::report::{CentralityReport, Measure, Normalization};
use crate::graph::Graph;

pub fn degree_centrality(graph: &Graph) -> CentralityReport {
    let scores = (0..graph.n()).map(|v| graph.degree(v) as f64).collect();
    CentralityReport::new(graph, Measure::Degree, scores, Normalization::Raw)
}
