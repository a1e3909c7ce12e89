//! Alpha-triangle eigenvector centrality: the Perron vector of the
//! alpha-triangle tensor, used directly as vertex scores.

use super::report::{CentralityReport, Diagnostics, Measure, Normalization};
use crate::error::Result;
use crate::graph::Graph;
use crate::spectral::{solve_spectral, SolverOptions, SpectralResult};
use crate::tensor::{Alpha, AlphaTriangleOperator};
use crate::triangles::TriangleSet;

/// Scores for a connected graph, together with the raw solver output.
pub fn atec_with_spectrum(
    graph: &Graph,
    triangles: &TriangleSet,
    alpha: f64,
    opts: &SolverOptions,
) -> Result<(CentralityReport, SpectralResult)> {
    let op = AlphaTriangleOperator::new(graph, triangles, alpha)?;
    let spectrum = solve_spectral(&op, opts)?;
    let mut report = CentralityReport::new(
        graph,
        Measure::Atec { alpha },
        spectrum.x.clone(),
        Normalization::UnitEuclidean,
    );
    report.diagnostics = Some(Diagnostics {
        eigenvalue: spectrum.rho,
        tolerance: opts.tol,
        iterations: spectrum.iterations,
        residual: spectrum.residual,
    });
    Ok((report, spectrum))
}

pub fn atec(
    graph: &Graph,
    triangles: &TriangleSet,
    alpha: f64,
    opts: &SolverOptions,
) -> Result<CentralityReport> {
    atec_with_spectrum(graph, triangles, alpha, opts).map(|(report, _)| report)
}

/// Solves each connected component on its own; every component's scores
/// have unit norm, and an isolated vertex scores 1. Diagnostics report the
/// largest component eigenvalue, iteration count and residual.
pub fn atec_per_component(
    graph: &Graph,
    alpha: f64,
    opts: &SolverOptions,
) -> Result<CentralityReport> {
    Alpha::new(alpha)?;
    let mut scores = vec![0.0; graph.n()];
    let mut diag = Diagnostics {
        eigenvalue: 0.0,
        tolerance: opts.tol,
        iterations: 0,
        residual: 0.0,
    };
    let components = graph.connected_components();
    for component in &components {
        if component.len() == 1 {
            scores[component[0]] = 1.0;
            continue;
        }
        let sub = graph.induced(component);
        let triangles = TriangleSet::enumerate(&sub);
        let op = AlphaTriangleOperator::new(&sub, &triangles, alpha)?;
        let mut sub_opts = opts.clone();
        sub_opts.initial = None;
        let spectrum = solve_spectral(&op, &sub_opts)?;
        for (&v, &x) in component.iter().zip(&spectrum.x) {
            scores[v] = x;
        }
        diag.eigenvalue = diag.eigenvalue.max(spectrum.rho);
        diag.iterations = diag.iterations.max(spectrum.iterations);
        diag.residual = diag.residual.max(spectrum.residual);
    }
    let mut report = CentralityReport::new(
        graph,
        Measure::Atec { alpha },
        scores,
        if components.len() == 1 {
            Normalization::UnitEuclidean
        } else {
            Normalization::PerComponentUnit
        },
    );
    report.diagnostics = Some(diag);
    if components.len() > 1 {
        report.warnings.push(format!(
            "graph has {} components; scores normalized per component",
            components.len()
        ));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::graph::generators;

    #[test]
    fn example_graph_alpha_06() {
        let g = generators::example_g14();
        let t = TriangleSet::enumerate(&g);
        let r = atec(&g, &t, 0.6, &SolverOptions::default()).unwrap();
        let expect = [
            ("1", 0.3379),
            ("2", 0.2984),
            ("4", 0.3303),
            ("8", 0.3209),
            ("9", 0.1842),
        ];
        for (label, value) in expect {
            assert!((r.score_of(label).unwrap() - value).abs() < 5e-4, "{label}");
        }
    }

    #[test]
    fn example_graph_alpha_1_top_is_8() {
        let g = generators::example_g14();
        let t = TriangleSet::enumerate(&g);
        let r = atec(&g, &t, 1.0, &SolverOptions::default()).unwrap();
        assert_eq!(r.top(1), vec!["8"]);
        assert!((r.score_of("8").unwrap() - 0.4306).abs() < 5e-4);
    }

    #[test]
    fn rejects_zero_alpha_and_disconnected() {
        let g = generators::complete(3);
        let t = TriangleSet::enumerate(&g);
        assert_eq!(
            atec(&g, &t, 0.0, &SolverOptions::default()).unwrap_err(),
            Error::AlphaOutOfRange(0.0)
        );
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap();
        let t = TriangleSet::enumerate(&g);
        assert_eq!(
            atec(&g, &t, 0.5, &SolverOptions::default()).unwrap_err(),
            Error::Disconnected { components: 2 }
        );
    }

    #[test]
    fn per_component_mode() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap();
        let r = atec_per_component(&g, 0.5, &SolverOptions::default()).unwrap();
        assert_eq!(r.normalization, Normalization::PerComponentUnit);
        for v in 0..3 {
            assert!((r.scores[v] - 3f64.sqrt().recip()).abs() < 1e-9);
        }
        assert!((r.scores[3] - 0.5f64.sqrt()).abs() < 1e-9);
        assert_eq!(r.scores[5], 1.0);
        assert_eq!(r.warnings.len(), 1);
    }
}
