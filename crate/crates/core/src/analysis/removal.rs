use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RemovalMode {
    /// Exactly three labels that form a triangle.
    Triangle,
    /// Any set of labels.
    Free,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RemovalOutcome {
    pub removed: Vec<String>,
    pub n_before: usize,
    pub n_after: usize,
    pub components_before: usize,
    pub components_after: usize,
    /// Component sizes after removal, largest first.
    pub sizes_after: Vec<usize>,
}

pub fn removal_experiment<S: AsRef<str>>(
    graph: &Graph,
    labels: &[S],
    mode: RemovalMode,
) -> Result<RemovalOutcome> {
    let mut ids = labels
        .iter()
        .map(|l| graph.require_id(l.as_ref()))
        .collect::<Result<Vec<_>>>()?;
    ids.sort_unstable();
    ids.dedup();
    if mode == RemovalMode::Triangle {
        if ids.len() != 3 {
            return Err(Error::InvalidArgument(format!(
                "triangle mode needs exactly 3 distinct vertices, got {}",
                ids.len()
            )));
        }
        let [a, b, c] = [ids[0], ids[1], ids[2]];
        if !(graph.has_edge(a, b) && graph.has_edge(b, c) && graph.has_edge(a, c)) {
            return Err(Error::InvalidArgument(format!(
                "vertices {}, {}, {} do not form a triangle",
                graph.label(a),
                graph.label(b),
                graph.label(c)
            )));
        }
    }
    let remainder = graph.remove_ids(&ids);
    let mut sizes_after: Vec<usize> = remainder
        .connected_components()
        .iter()
        .map(Vec::len)
        .collect();
    sizes_after.sort_unstable_by(|a, b| b.cmp(a));
    Ok(RemovalOutcome {
        removed: ids.iter().map(|&v| graph.label(v).to_string()).collect(),
        n_before: graph.n(),
        n_after: remainder.n(),
        components_before: graph.component_count(),
        components_after: sizes_after.len(),
        sizes_after,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators;

    #[test]
    fn k4_minus_triangle() {
        let out = removal_experiment(
            &generators::complete(4),
            &["1", "2", "3"],
            RemovalMode::Triangle,
        )
        .unwrap();
        assert_eq!((out.components_before, out.components_after), (1, 1));
        assert_eq!(out.sizes_after, vec![1]);
        assert_eq!(out.n_after, out.n_before - 3);
    }

    #[test]
    fn example_graph_cut_vertex() {
        let out = removal_experiment(&generators::example_g14(), &["8"], RemovalMode::Free).unwrap();
        assert_eq!(out.components_after, 7);
        assert_eq!(out.sizes_after, vec![7, 1, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn triangle_mode_validation() {
        let g = generators::example_g14();
        assert!(removal_experiment(&g, &["1", "2"], RemovalMode::Triangle).is_err());
        assert!(removal_experiment(&g, &["1", "4", "5"], RemovalMode::Triangle).is_err());
        assert_eq!(
            removal_experiment(&g, &["1", "2", "99"], RemovalMode::Triangle).unwrap_err(),
            Error::UnknownLabel("99".into())
        );
    }
}
