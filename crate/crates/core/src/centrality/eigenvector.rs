//! Classic eigenvector centrality: the Perron vector of the adjacency matrix.

use super::report::{CentralityReport, Diagnostics, Measure, Normalization};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{adjacency_matrix, symmetric_eigen};

const MAX_ITER: usize = 200_000;
/// Largest graph for which the dense Jacobi fallback is attempted.
const DENSE_FALLBACK_LIMIT: usize = 2000;

#[derive(Debug, Clone, PartialEq)]
pub struct PerronPair {
    pub value: f64,
    pub vector: Vec<f64>,
    pub iterations: usize,
}

/// Power iteration on `A + I` (the shift removes the bipartite sign
/// oscillation), stopped when the Collatz-Wielandt bracket
/// `min/max_i ((A+I)x)_i / x_i` is narrower than `tol`. Falls back to a dense
/// Jacobi solve if the iteration budget runs out.
pub fn adjacency_perron(graph: &Graph, tol: f64) -> Result<PerronPair> {
    graph.ensure_connected()?;
    let n = graph.n();
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut y = vec![0.0; n];
    for iteration in 1..=MAX_ITER {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for v in 0..n {
            let mut s = x[v];
            for &w in graph.neighbors(v) {
                s += x[w];
            }
            y[v] = s;
            let ratio = s / x[v];
            lo = lo.min(ratio);
            hi = hi.max(ratio);
        }
        if hi - lo < tol {
            return Ok(PerronPair {
                value: 0.5 * (lo + hi) - 1.0,
                vector: x,
                iterations: iteration,
            });
        }
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi / norm;
        }
    }
    if n > DENSE_FALLBACK_LIMIT {
        return Err(Error::Eigen(format!(
            "adjacency power iteration did not converge in {MAX_ITER} iterations"
        )));
    }
    let eig = symmetric_eigen(&adjacency_matrix(graph), n)?;
    let mut vector = eig.vectors[n - 1].clone();
    let sign = if vector.iter().sum::<f64>() < 0.0 {
        -1.0
    } else {
        1.0
    };
    for v in &mut vector {
        *v *= sign;
    }
    Ok(PerronPair {
        value: eig.values[n - 1],
        vector,
        iterations: MAX_ITER,
    })
}

pub fn eigenvector_centrality(graph: &Graph, tol: f64) -> Result<CentralityReport> {
    let pair = adjacency_perron(graph, tol)?;
    let residual = (0..graph.n())
        .map(|v| {
            let ax: f64 = graph.neighbors(v).iter().map(|&w| pair.vector[w]).sum();
            (ax - pair.value * pair.vector[v]).abs()
        })
        .fold(0.0, f64::max);
    let mut report = CentralityReport::new(
        graph,
        Measure::Eigenvector,
        pair.vector,
        Normalization::UnitEuclidean,
    );
    report.diagnostics = Some(Diagnostics {
        eigenvalue: pair.value,
        tolerance: tol,
        iterations: pair.iterations,
        residual,
    });
    Ok(report)
}
