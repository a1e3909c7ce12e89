//! Subgraph centrality: the diagonal of the adjacency matrix exponential,
//! i.e. weighted counts of closed walks, `SC(i) = Σ_j φ_j(i)² e^{λ_j}`.

use super::report::{CentralityReport, Measure, Normalization};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{adjacency_matrix, symmetric_eigen};

pub const SUBGRAPH_LIMIT: usize = 5000;

pub fn subgraph_scores(graph: &Graph) -> Result<Vec<f64>> {
    let n = graph.n();
    if n > SUBGRAPH_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: SUBGRAPH_LIMIT,
        });
    }
    let eig = symmetric_eigen(&adjacency_matrix(graph), n)?;
    let mut sc = vec![0.0; n];
    for (lambda, phi) in eig.values.iter().zip(&eig.vectors) {
        let weight = lambda.exp();
        for (s, p) in sc.iter_mut().zip(phi) {
            *s += p * p * weight;
        }
    }
    Ok(sc)
}

pub fn subgraph_centrality(graph: &Graph) -> Result<CentralityReport> {
    Ok(CentralityReport::new(
        graph,
        Measure::Subgraph,
        subgraph_scores(graph)?,
        Normalization::Raw,
    )
    .with_unit_column())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators;

    #[test]
    fn k2_is_cosh_one() {
        let sc = subgraph_scores(&generators::complete(2)).unwrap();
        for s in sc {
            assert!((s - 1f64.cosh()).abs() < 1e-13);
        }
    }

    #[test]
    fn k3_uniform() {
        let sc = subgraph_scores(&generators::complete(3)).unwrap();
        // e^A for K3: diagonal (e² + 2e⁻¹) / 3.
        let expected = ((2f64).exp() + 2.0 * (-1f64).exp()) / 3.0;
        for s in sc {
            assert!((s - expected).abs() < 1e-12);
        }
    }

    #[test]
    fn example_graph_top_is_8() {
        let r = subgraph_centrality(&generators::example_g14()).unwrap();
        assert_eq!(r.top(1), vec!["8"]);
        assert!((r.unit_score_of("8").unwrap() - 0.6042).abs() < 5e-4);
        assert!((r.unit_score_of("1").unwrap() - 0.3023).abs() < 5e-4);
        assert!((r.unit_score_of("9").unwrap() - 0.1565).abs() < 5e-4);
    }
}
