//! Triangle enumeration and per-vertex triangle statistics.

use serde::Serialize;

use crate::graph::Graph;

/// All 3-cliques of a graph in canonical `p < q < r` order, plus for every
/// vertex the pairs `(j, k)`, `j < k`, that close a triangle with it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleSet {
    n: usize,
    triangles: Vec<[usize; 3]>,
    incidence: Vec<Vec<(usize, usize)>>,
}

impl TriangleSet {
    /// Enumerates triangles with the degree-ordered "forward" algorithm:
    /// each edge is oriented towards the higher-ranked endpoint and a
    /// triangle is found once, at its lowest-ranked vertex, by intersecting
    /// out-neighbor lists. Runs in O(m^{3/2}).
    pub fn enumerate(graph: &Graph) -> Self {
        let n = graph.n();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (graph.degree(v), v));
        let mut rank = vec![0; n];
        for (r, &v) in order.iter().enumerate() {
            rank[v] = r;
        }
        let forward: Vec<Vec<usize>> = (0..n)
            .map(|u| {
                let mut out: Vec<usize> = graph
                    .neighbors(u)
                    .iter()
                    .copied()
                    .filter(|&v| rank[v] > rank[u])
                    .collect();
                out.sort_unstable_by_key(|&v| rank[v]);
                out
            })
            .collect();

        let mut triangles = Vec::new();
        for u in 0..n {
            for &v in &forward[u] {
                // Both lists are sorted by rank; merge-intersect.
                let (a, b) = (&forward[u], &forward[v]);
                let (mut i, mut j) = (0, 0);
                while i < a.len() && j < b.len() {
                    match rank[a[i]].cmp(&rank[b[j]]) {
                        std::cmp::Ordering::Less => i += 1,
                        std::cmp::Ordering::Greater => j += 1,
                        std::cmp::Ordering::Equal => {
                            let mut t = [u, v, a[i]];
                            t.sort_unstable();
                            triangles.push(t);
                            i += 1;
                            j += 1;
                        }
                    }
                }
            }
        }
        triangles.sort_unstable();
        Self::from_sorted(n, triangles)
    }

    fn from_sorted(n: usize, triangles: Vec<[usize; 3]>) -> Self {
        let mut incidence = vec![Vec::new(); n];
        for &[p, q, r] in &triangles {
            incidence[p].push((q, r));
            incidence[q].push((p, r));
            incidence[r].push((p, q));
        }
        for list in &mut incidence {
            list.sort_unstable();
        }
        Self {
            n,
            triangles,
            incidence,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.triangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    /// Pairs `(j, k)` with `j < k` such that `{v, j, k}` is a triangle, sorted.
    pub fn incidence(&self, v: usize) -> &[(usize, usize)] {
        &self.incidence[v]
    }

    /// Number of triangles containing `v`.
    pub fn count(&self, v: usize) -> usize {
        self.incidence[v].len()
    }
}

/// Degree `D(i)`, triangle count `T(i)` and neighbor triangle sum `NT(i)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VertexStats {
    pub degree: usize,
    pub triangles: usize,
    pub neighbor_triangles: usize,
}

pub fn vertex_stats(graph: &Graph, triangles: &TriangleSet) -> Vec<VertexStats> {
    (0..graph.n())
        .map(|v| VertexStats {
            degree: graph.degree(v),
            triangles: triangles.count(v),
            neighbor_triangles: graph.neighbors(v).iter().map(|&w| triangles.count(w)).sum(),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generators, parse_edge_list};

    #[test]
    fn single_triangle() {
        let t = TriangleSet::enumerate(&generators::complete(3));
        assert_eq!(t.triangles(), &[[0, 1, 2]]);
        assert_eq!(t.incidence(1), &[(0, 2)]);
    }

    #[test]
    fn triangle_free() {
        assert!(TriangleSet::enumerate(&generators::path(3)).is_empty());
        assert!(TriangleSet::enumerate(&generators::cycle(6)).is_empty());
    }

    #[test]
    fn k4_has_four() {
        let t = TriangleSet::enumerate(&generators::complete(4));
        assert_eq!(t.triangles(), &[[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]);
        assert!((0..4).all(|v| t.count(v) == 3));
    }

    #[test]
    fn stats_on_k3() {
        let g = generators::complete(3);
        let stats = vertex_stats(&g, &TriangleSet::enumerate(&g));
        for s in stats {
            assert_eq!((s.degree, s.triangles, s.neighbor_triangles), (2, 1, 2));
        }
    }

    #[test]
    fn stats_on_example_graph_vertex_4() {
        let g = generators::example_g14();
        let stats = vertex_stats(&g, &TriangleSet::enumerate(&g));
        let s = stats[g.id_of("4").unwrap()];
        assert_eq!((s.degree, s.triangles, s.neighbor_triangles), (3, 0, 2));
    }

    #[test]
    fn karate_counts_quoted_in_text() {
        let text = include_str!("../../../datasets/karate.edges");
        let g = parse_edge_list(text).unwrap();
        let t = TriangleSet::enumerate(&g);
        let count = |label: &str| t.count(g.id_of(label).unwrap());
        assert_eq!(count("20"), 1);
        assert_eq!(count("31"), 3);
        assert_eq!(count("12"), 0);
        assert_eq!(count("25"), 1);
        assert_eq!(t.len(), 45);
    }
}
