//! Betweenness centrality by Brandes' dependency accumulation.

use std::collections::VecDeque;

use super::report::{CentralityReport, Measure, Normalization};
use crate::graph::Graph;

/// Raw betweenness: for each vertex, the sum over unordered pairs `{s, t}`
/// (neither equal to it) of the fraction of shortest `s`-`t` paths through it.
pub fn brandes(graph: &Graph) -> Vec<f64> {
    let n = graph.n();
    let mut bc = vec![0.0; n];
    let mut sigma = vec![0.0f64; n];
    let mut dist = vec![usize::MAX; n];
    let mut delta = vec![0.0f64; n];
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut stack = Vec::with_capacity(n);
    let mut queue = VecDeque::with_capacity(n);

    for s in 0..n {
        for v in 0..n {
            sigma[v] = 0.0;
            dist[v] = usize::MAX;
            delta[v] = 0.0;
            preds[v].clear();
        }
        sigma[s] = 1.0;
        dist[s] = 0;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            stack.push(v);
            for &w in graph.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                if dist[w] == dist[v] + 1 {
                    sigma[w] += sigma[v];
                    preds[w].push(v);
                }
            }
        }
        while let Some(w) = stack.pop() {
            for &v in &preds[w] {
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            }
            if w != s {
                bc[w] += delta[w];
            }
        }
    }
    // Every unordered pair was counted from both ends.
    for b in &mut bc {
        *b /= 2.0;
    }
    bc
}

pub fn betweenness_centrality(graph: &Graph) -> CentralityReport {
    CentralityReport::new(
        graph,
        Measure::Betweenness,
        brandes(graph),
        Normalization::Raw,
    )
    .with_unit_column()
}
