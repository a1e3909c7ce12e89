use std::cmp::Ordering;

use serde::Serialize;

use crate::centrality::fiedler_vector;
use crate::error::{Error, Result};
use crate::graph::{compare_labels, Graph};
use crate::triangles::TriangleSet;

/// Triangle scores closer than this share a rank.
pub const TRIANGLE_TIE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "index", rename_all = "kebab-case")]
pub enum RankingIndex {
    /// Sum of the three vertices' alpha-triangle centralities.
    Importance { alpha: f64 },
    /// Sum over the three edges of squared Fiedler-vector differences.
    FiedlerCycle,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TriangleEntry {
    /// Internal ids, ascending.
    #[serde(skip)]
    pub triangle: [usize; 3],
    /// External labels in natural order.
    pub labels: [String; 3],
    pub score: f64,
    /// Competition rank: ties share the smallest rank and the next distinct
    /// score skips accordingly (1, 2, 2, 2, 5).
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TriangleRanking {
    pub index: RankingIndex,
    pub entries: Vec<TriangleEntry>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

impl TriangleRanking {
    fn build(
        graph: &Graph,
        triangles: &TriangleSet,
        index: RankingIndex,
        scores: Vec<f64>,
    ) -> Self {
        let mut entries: Vec<TriangleEntry> = triangles
            .triangles()
            .iter()
            .zip(scores)
            .map(|(&t, score)| {
                let mut labels = t.map(|v| graph.label(v).to_string());
                labels.sort_by(|a, b| compare_labels(a, b));
                TriangleEntry {
                    triangle: t,
                    labels,
                    score,
                    rank: 0,
                }
            })
            .collect();
        entries.sort_by(|a, b| b.score.total_cmp(&a.score));

        // Group by leader score, order each group by label triple, then
        // assign competition ranks.
        let mut start = 0;
        while start < entries.len() {
            let leader = entries[start].score;
            let mut end = start + 1;
            while end < entries.len() && leader - entries[end].score <= TRIANGLE_TIE_TOLERANCE {
                end += 1;
            }
            entries[start..end].sort_by(|a, b| compare_triples(&a.labels, &b.labels));
            for e in &mut entries[start..end] {
                e.rank = start + 1;
            }
            start = end;
        }

        let mut warnings = Vec::new();
        if entries.is_empty() {
            warnings.push("graph has no triangles; ranking is empty".to_string());
        }
        Self {
            index,
            entries,
            warnings,
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entry for the triangle on these three labels, in any order.
    pub fn find(&self, labels: [&str; 3]) -> Option<&TriangleEntry> {
        let mut key = labels.map(str::to_string);
        key.sort_by(|a, b| compare_labels(a, b));
        self.entries.iter().find(|e| e.labels == key)
    }
}

fn compare_triples(a: &[String; 3], b: &[String; 3]) -> Ordering {
    a.iter()
        .zip(b)
        .map(|(x, y)| compare_labels(x, y))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

/// Ranks triangles by `x_p + x_q + x_r` where `x` is the alpha-triangle
/// centrality vector of the same graph.
pub fn triangle_importance(
    graph: &Graph,
    triangles: &TriangleSet,
    x: &[f64],
    alpha: f64,
) -> Result<TriangleRanking> {
    if x.len() != graph.n() {
        return Err(Error::DimensionMismatch {
            expected: graph.n(),
            actual: x.len(),
        });
    }
    if let Some(i) = x.iter().position(|&v| !(v > 0.0)) {
        return Err(Error::InvalidArgument(format!(
            "centrality vector must be positive (vertex {} has {})",
            graph.label(i),
            x[i]
        )));
    }
    let scores = triangles
        .triangles()
        .iter()
        .map(|&[p, q, r]| x[p] + x[q] + x[r])
        .collect();
    Ok(TriangleRanking::build(
        graph,
        triangles,
        RankingIndex::Importance { alpha },
        scores,
    ))
}

/// Ranks triangles by `Σ_{(p,q) ∈ edges} (v_p - v_q)²` for a given
/// Fiedler vector `v`. The sign of `v` does not matter.
pub fn cycle_index_from_vector(
    graph: &Graph,
    triangles: &TriangleSet,
    fiedler: &[f64],
) -> Result<TriangleRanking> {
    if fiedler.len() != graph.n() {
        return Err(Error::DimensionMismatch {
            expected: graph.n(),
            actual: fiedler.len(),
        });
    }
    let sq = |a: usize, b: usize| (fiedler[a] - fiedler[b]).powi(2);
    let scores = triangles
        .triangles()
        .iter()
        .map(|&[p, q, r]| sq(p, q) + sq(q, r) + sq(p, r))
        .collect();
    Ok(TriangleRanking::build(
        graph,
        triangles,
        RankingIndex::FiedlerCycle,
        scores,
    ))
}

pub fn cycle_index_fiedler(
    graph: &Graph,
    triangles: &TriangleSet,
    tol: f64,
) -> Result<TriangleRanking> {
    let f = fiedler_vector(graph, tol)?;
    cycle_index_from_vector(graph, triangles, &f.vector)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::centrality::atec;
    use crate::graph::generators;
    use crate::spectral::SolverOptions;

    #[test]
    fn k3_single_triangle() {
        let g = generators::complete(3);
        let t = TriangleSet::enumerate(&g);
        let x = atec(&g, &t, 0.4, &SolverOptions::default()).unwrap();
        let r = triangle_importance(&g, &t, &x.scores, 0.4).unwrap();
        assert_eq!(r.len(), 1);
        assert!((r.entries[0].score - 3f64.sqrt()).abs() < 1e-9);
        assert_eq!(r.entries[0].rank, 1);

        let c = cycle_index_fiedler(&g, &t, 1e-10).unwrap();
        assert_eq!(c.len(), 1);
        assert!(c.entries[0].score >= 0.0);
    }

    #[test]
    fn competition_ranks() {
        // K4 with a pendant: triangles through the pendant's neighbor score
        // differently from the one avoiding it.
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let t = TriangleSet::enumerate(&g);
        let x = [0.4, 0.3, 0.3, 0.3];
        let r = triangle_importance(&g, &t, &x, 0.5).unwrap();
        let ranks: Vec<usize> = r.entries.iter().map(|e| e.rank).collect();
        assert_eq!(ranks, vec![1, 1, 1, 4]);
        assert_eq!(r.entries[3].labels, ["2", "3", "4"].map(String::from));
        assert_eq!(r.entries[0].labels, ["1", "2", "3"].map(String::from));
    }

    #[test]
    fn cycle_index_zero_iff_constant_on_triangle() {
        let g = generators::complete(4);
        let t = TriangleSet::enumerate(&g);
        let v = [0.5, 0.5, 0.5, -1.5];
        let r = cycle_index_from_vector(&g, &t, &v).unwrap();
        let flat = r.find(["1", "2", "3"]).unwrap();
        assert_eq!(flat.score, 0.0);
        assert!(r.entries.iter().filter(|e| e.score == 0.0).count() == 1);
    }

    #[test]
    fn empty_with_warning() {
        let g = generators::path(4);
        let t = TriangleSet::enumerate(&g);
        let r = triangle_importance(&g, &t, &[0.5; 4], 0.5).unwrap();
        assert!(r.is_empty());
        assert_eq!(r.warnings.len(), 1);
    }

    #[test]
    fn rejects_nonpositive_vector() {
        let g = generators::complete(3);
        let t = TriangleSet::enumerate(&g);
        assert!(triangle_importance(&g, &t, &[0.5, 0.0, 0.5], 0.5).is_err());
        assert!(triangle_importance(&g, &t, &[0.5, 0.5], 0.5).is_err());
    }
}
