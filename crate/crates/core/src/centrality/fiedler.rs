//! Fiedler vector: unit eigenvector of the graph Laplacian for its second
//! smallest eigenvalue (the algebraic connectivity).

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{laplacian_matrix, symmetric_eigen};

pub const DEFAULT_FIEDLER_TOL: f64 = 1e-10;
const POWER_MAX_ITER: usize = 2_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FiedlerMethod {
    /// Dense Jacobi for up to `DENSE_LIMIT` vertices, power iteration beyond.
    Auto,
    Dense,
    /// Power iteration on `c·I - L` with the all-ones direction projected out
    /// at every step, `c = 2·max_degree + 1`.
    DeflatedPower,
}

pub const DENSE_LIMIT: usize = 1000;

#[derive(Debug, Clone, PartialEq)]
pub struct Fiedler {
    pub value: f64,
    pub vector: Vec<f64>,
    /// `max_i |(L v)_i - value · v_i|`.
    pub residual: f64,
}

fn laplacian_apply(graph: &Graph, x: &[f64], out: &mut [f64]) {
    for v in 0..graph.n() {
        let mut s = graph.degree(v) as f64 * x[v];
        for &w in graph.neighbors(v) {
            s -= x[w];
        }
        out[v] = s;
    }
}

fn project_and_normalize(x: &mut [f64]) {
    let mean = x.iter().sum::<f64>() / x.len() as f64;
    for v in x.iter_mut() {
        *v -= mean;
    }
    let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    for v in x.iter_mut() {
        *v /= norm;
    }
}

/// Rayleigh quotient and residual of a unit vector.
fn rayleigh(graph: &Graph, x: &[f64], scratch: &mut [f64]) -> (f64, f64) {
    laplacian_apply(graph, x, scratch);
    let value: f64 = x.iter().zip(scratch.iter()).map(|(a, b)| a * b).sum();
    let residual = x
        .iter()
        .zip(scratch.iter())
        .map(|(a, b)| (b - value * a).abs())
        .fold(0.0, f64::max);
    (value, residual)
}

fn canonical_sign(x: &mut [f64]) {
    if let Some(first) = x.iter().copied().find(|v| v.abs() > 1e-12) {
        if first < 0.0 {
            for v in x.iter_mut() {
                *v = -*v;
            }
        }
    }
}

pub fn fiedler_vector(graph: &Graph, tol: f64) -> Result<Fiedler> {
    fiedler_vector_with(graph, tol, FiedlerMethod::Auto)
}

pub fn fiedler_vector_with(graph: &Graph, tol: f64, method: FiedlerMethod) -> Result<Fiedler> {
    let n = graph.n();
    if n < 2 {
        return Err(Error::InvalidArgument(
            "Fiedler vector needs at least two vertices".into(),
        ));
    }
    graph.ensure_connected()?;
    let dense = match method {
        FiedlerMethod::Auto => n <= DENSE_LIMIT,
        FiedlerMethod::Dense => true,
        FiedlerMethod::DeflatedPower => false,
    };
    let mut x = if dense {
        let eig = symmetric_eigen(&laplacian_matrix(graph), n)?;
        eig.vectors[1].clone()
    } else {
        deflated_power(graph, tol)?
    };
    project_and_normalize(&mut x);
    canonical_sign(&mut x);
    let mut scratch = vec![0.0; n];
    let (value, residual) = rayleigh(graph, &x, &mut scratch);
    if residual >= tol {
        return Err(Error::Eigen(format!(
            "Fiedler residual {residual:e} exceeds tolerance {tol:e}"
        )));
    }
    Ok(Fiedler {
        value,
        vector: x,
        residual,
    })
}

fn deflated_power(graph: &Graph, tol: f64) -> Result<Vec<f64>> {
    let n = graph.n();
    let c = 2.0 * graph.max_degree() as f64 + 1.0;
    // Deterministic start with no special alignment to the spectrum.
    let mut state: u64 = 0x9E37_79B9_7F4A_7C15;
    let mut x: Vec<f64> = (0..n)
        .map(|_| {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        })
        .collect();
    project_and_normalize(&mut x);
    let mut lx = vec![0.0; n];
    for iteration in 0..POWER_MAX_ITER {
        laplacian_apply(graph, &x, &mut lx);
        if iteration % 16 == 0 {
            let value: f64 = x.iter().zip(&lx).map(|(a, b)| a * b).sum();
            let residual = x
                .iter()
                .zip(&lx)
                .map(|(a, b)| (b - value * a).abs())
                .fold(0.0, f64::max);
            if residual < 0.5 * tol {
                return Ok(x);
            }
        }
        for (xi, li) in x.iter_mut().zip(&lx) {
            *xi = c * *xi - li;
        }
        project_and_normalize(&mut x);
    }
    Err(Error::Eigen(format!(
        "Fiedler power iteration did not converge in {POWER_MAX_ITER} iterations"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators;

    #[test]
    fn path3() {
        for method in [FiedlerMethod::Dense, FiedlerMethod::DeflatedPower] {
            let f = fiedler_vector_with(&generators::path(3), 1e-10, method).unwrap();
            assert!((f.value - 1.0).abs() < 1e-10);
            let s = 0.5f64.sqrt();
            let expected = [s, 0.0, -s];
            for (a, b) in f.vector.iter().zip(expected) {
                assert!((a - b).abs() < 1e-9, "{method:?} {:?}", f.vector);
            }
        }
    }

    #[test]
    fn k2() {
        let f = fiedler_vector(&generators::complete(2), 1e-10).unwrap();
        assert!((f.value - 2.0).abs() < 1e-12);
        assert!((f.vector[0] - 0.5f64.sqrt()).abs() < 1e-12);
        assert!((f.vector[1] + 0.5f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn k3_degenerate_pair() {
        for method in [FiedlerMethod::Dense, FiedlerMethod::DeflatedPower] {
            let f = fiedler_vector_with(&generators::complete(3), 1e-10, method).unwrap();
            assert!((f.value - 3.0).abs() < 1e-10);
            assert!(f.vector.iter().sum::<f64>().abs() < 1e-10);
            assert!(f.residual < 1e-10);
        }
    }

    #[test]
    fn methods_agree_on_example_graph() {
        let g = generators::example_g14();
        let a = fiedler_vector_with(&g, 1e-11, FiedlerMethod::Dense).unwrap();
        let b = fiedler_vector_with(&g, 1e-11, FiedlerMethod::DeflatedPower).unwrap();
        assert!((a.value - b.value).abs() < 1e-10);
        for (x, y) in a.vector.iter().zip(&b.vector) {
            assert!((x - y).abs() < 1e-8);
        }
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            fiedler_vector(&g, 1e-10),
            Err(Error::Disconnected { components: 2 })
        ));
    }
}
