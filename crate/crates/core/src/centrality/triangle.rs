//! Triangle centrality (Burkhardt): a vertex's share of the graph's
//! triangles seen through its closed neighborhood.
//!
//! ```text
//! TC(v) = ( 1/3 · Σ_{u ∈ {v} ∪ N△(v)} T(u)  +  Σ_{w ∈ N(v) \ N△(v)} T(w) ) / T(G)
//! ```
//!
//! where `N△(v)` are the neighbors sharing a triangle with `v`.

use super::report::{CentralityReport, Measure, Normalization};
use crate::graph::Graph;
use crate::triangles::TriangleSet;

pub fn triangle_centrality(graph: &Graph, triangles: &TriangleSet) -> CentralityReport {
    let n = graph.n();
    let total = triangles.len();
    if total == 0 {
        let mut report =
            CentralityReport::new(graph, Measure::Triangle, vec![0.0; n], Normalization::Raw)
                .with_unit_column();
        report
            .warnings
            .push("graph has no triangles; triangle centrality is zero everywhere".into());
        return report;
    }

    let mut in_triangle_with = vec![false; n];
    let scores = (0..n)
        .map(|v| {
            for &(j, k) in triangles.incidence(v) {
                in_triangle_with[j] = true;
                in_triangle_with[k] = true;
            }
            let mut closed = triangles.count(v) as f64;
            let mut open = 0.0;
            for &w in graph.neighbors(v) {
                if in_triangle_with[w] {
                    closed += triangles.count(w) as f64;
                } else {
                    open += triangles.count(w) as f64;
                }
            }
            for &(j, k) in triangles.incidence(v) {
                in_triangle_with[j] = false;
                in_triangle_with[k] = false;
            }
            (closed / 3.0 + open) / total as f64
        })
        .collect();
    CentralityReport::new(graph, Measure::Triangle, scores, Normalization::Raw).with_unit_column()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators;

    #[test]
    fn example_graph_ratio() {
        let g = generators::example_g14();
        let r = triangle_centrality(&g, &TriangleSet::enumerate(&g));
        let tc = |l: &str| r.score_of(l).unwrap();
        assert_eq!(tc("4"), 1.0);
        assert_eq!(tc("1"), 0.5);
        assert_eq!(tc("4") / tc("1"), 2.0);
        assert_eq!(tc("2"), 0.5);
        assert_eq!(tc("8"), 0.0);
        assert_eq!(tc("11"), 0.0);
        assert_eq!(r.top(1), vec!["4"]);
    }

    #[test]
    fn k3_is_uniform() {
        let g = generators::complete(3);
        let r = triangle_centrality(&g, &TriangleSet::enumerate(&g));
        assert!(r.scores.iter().all(|&s| s == 1.0));
    }

    #[test]
    fn triangle_free_is_zero_with_warning() {
        let g = generators::path(3);
        let r = triangle_centrality(&g, &TriangleSet::enumerate(&g));
        assert!(r.scores.iter().all(|&s| s == 0.0));
        assert_eq!(r.warnings.len(), 1);
    }
}
