//! The alpha-triangle tensor as an implicit operator.
//!
//! The third-order tensor blends an edge part, `b[i][j][j] = 1` for every
//! edge `{i, j}`, with a triangle part carrying `1/2` at each of the six index
//! permutations of every triangle. Contracting it twice with `x` gives
//!
//! ```text
//! (A x²)_i = alpha · Σ_{j ~ i} x_j²  +  (1 - alpha) · Σ_{{i,j,k} triangle} x_j · x_k
//! ```
//!
//! which costs `O(|E| + |triangles|)` per application, so the `n³` array is
//! never built outside of [`MaterializedTensor`], a small-graph test oracle.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::triangles::TriangleSet;

/// Blend weight of the edge term, restricted to `(0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Alpha(f64);

impl Alpha {
    pub fn new(value: f64) -> Result<Self> {
        if value > 0.0 && value <= 1.0 {
            Ok(Self(value))
        } else {
            Err(Error::AlphaOutOfRange(value))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl TryFrom<f64> for Alpha {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        Alpha::new(value)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct AlphaTriangleOperator<'g> {
    alpha: Alpha,
    graph: &'g Graph,
    triangles: &'g TriangleSet,
}

impl<'g> AlphaTriangleOperator<'g> {
    /// Builds the operator for a connected graph.
    pub fn new(graph: &'g Graph, triangles: &'g TriangleSet, alpha: f64) -> Result<Self> {
        let op = Self::new_allow_disconnected(graph, triangles, alpha)?;
        graph.ensure_connected()?;
        Ok(op)
    }

    /// Builds the operator without the connectivity guard. The Perron vector
    /// is not unique on disconnected input.
    pub fn new_allow_disconnected(
        graph: &'g Graph,
        triangles: &'g TriangleSet,
        alpha: f64,
    ) -> Result<Self> {
        let alpha = Alpha::new(alpha)?;
        if triangles.n() != graph.n() {
            return Err(Error::DimensionMismatch {
                expected: graph.n(),
                actual: triangles.n(),
            });
        }
        Ok(Self {
            alpha,
            graph,
            triangles,
        })
    }

    pub fn alpha(&self) -> Alpha {
        self.alpha
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn triangles(&self) -> &'g TriangleSet {
        self.triangles
    }

    pub fn apply(&self, x: &[f64]) -> Result<Vec<f64>> {
        let mut out = vec![0.0; self.n()];
        self.apply_into(x, &mut out)?;
        Ok(out)
    }

    /// Writes `A x²` into `out`. Neighbors and triangle pairs are summed in
    /// ascending order so results are reproducible bit for bit.
    pub fn apply_into(&self, x: &[f64], out: &mut [f64]) -> Result<()> {
        let n = self.n();
        if x.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                actual: x.len(),
            });
        }
        if out.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                actual: out.len(),
            });
        }
        let alpha = self.alpha.get();
        let beta = 1.0 - alpha;
        for (i, slot) in out.iter_mut().enumerate() {
            let mut edge = 0.0;
            for &j in self.graph.neighbors(i) {
                edge += x[j] * x[j];
            }
            let mut tri = 0.0;
            for &(j, k) in self.triangles.incidence(i) {
                tri += x[j] * x[k];
            }
            *slot = alpha * edge + beta * tri;
        }
        Ok(())
    }

    /// Out-neighbors of the tensor's associated digraph: `i -> j` whenever
    /// some nonzero entry `a[i][i2][i3]` has `j` in `{i2, i3}`.
    fn digraph(&self) -> Vec<Vec<usize>> {
        let alpha = self.alpha.get();
        (0..self.n())
            .map(|i| {
                let mut out = Vec::new();
                if alpha > 0.0 {
                    out.extend_from_slice(self.graph.neighbors(i));
                }
                if alpha < 1.0 {
                    for &(j, k) in self.triangles.incidence(i) {
                        out.push(j);
                        out.push(k);
                    }
                }
                out.sort_unstable();
                out.dedup();
                out
            })
            .collect()
    }

    /// Checks that the associated digraph is strongly connected, i.e. that
    /// the tensor is weakly irreducible.
    pub fn verify_weak_irreducibility(&self) -> IrreducibilityCheck {
        strong_connectivity(&self.digraph())
    }
}

/// Outcome of a strong-connectivity check rooted at vertex 0.
///
/// When the digraph is strongly connected, `forward_parent` and
/// `backward_parent` are BFS trees certifying a path from the root to every
/// vertex and from every vertex back to the root. Otherwise `witness` holds a
/// pair `(from, to)` with no directed path from `from` to `to`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrreducibilityCheck {
    pub irreducible: bool,
    pub witness: Option<(usize, usize)>,
    pub forward_parent: Vec<Option<usize>>,
    pub backward_parent: Vec<Option<usize>>,
}

fn bfs_parents(arcs: &[Vec<usize>], root: usize) -> (Vec<bool>, Vec<Option<usize>>) {
    let mut seen = vec![false; arcs.len()];
    let mut parent = vec![None; arcs.len()];
    let mut queue = VecDeque::from([root]);
    seen[root] = true;
    while let Some(v) = queue.pop_front() {
        for &w in &arcs[v] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some(v);
                queue.push_back(w);
            }
        }
    }
    (seen, parent)
}

/// Strong connectivity of a digraph given as out-neighbor lists.
pub fn strong_connectivity(arcs: &[Vec<usize>]) -> IrreducibilityCheck {
    let n = arcs.len();
    if n == 0 {
        return IrreducibilityCheck {
            irreducible: false,
            witness: None,
            forward_parent: Vec::new(),
            backward_parent: Vec::new(),
        };
    }
    let mut reverse = vec![Vec::new(); n];
    for (i, out) in arcs.iter().enumerate() {
        for &j in out {
            reverse[j].push(i);
        }
    }
    let (reach_fwd, forward_parent) = bfs_parents(arcs, 0);
    let (reach_bwd, backward_parent) = bfs_parents(&reverse, 0);
    let witness = reach_fwd
        .iter()
        .position(|&r| !r)
        .map(|j| (0, j))
        .or_else(|| reach_bwd.iter().position(|&r| !r).map(|j| (j, 0)));
    IrreducibilityCheck {
        irreducible: witness.is_none(),
        witness,
        forward_parent,
        backward_parent,
    }
}

/// Largest graph [`MaterializedTensor`] will build.
pub const MATERIALIZE_LIMIT: usize = 64;

/// Dense `n × n × n` edge and triangle tensors, kept apart so the blend can
/// be evaluated at any alpha in `[0, 1]`, including the excluded `alpha = 0`.
#[derive(Debug, Clone)]
pub struct MaterializedTensor {
    n: usize,
    alpha: f64,
    edge: Vec<f64>,
    triangle: Vec<f64>,
}

impl MaterializedTensor {
    pub fn build(graph: &Graph, triangles: &TriangleSet, alpha: f64) -> Result<Self> {
        let n = graph.n();
        if n > MATERIALIZE_LIMIT {
            return Err(Error::TooLarge {
                n,
                limit: MATERIALIZE_LIMIT,
            });
        }
        if !(0.0..=1.0).contains(&alpha) {
            return Err(Error::AlphaOutOfRange(alpha));
        }
        let mut edge = vec![0.0; n * n * n];
        let mut triangle = vec![0.0; n * n * n];
        let at = |i: usize, j: usize, k: usize| (i * n + j) * n + k;
        for &(u, v) in graph.edges() {
            edge[at(u, v, v)] = 1.0;
            edge[at(v, u, u)] = 1.0;
        }
        for &[p, q, r] in triangles.triangles() {
            for (i, j, k) in [
                (p, q, r),
                (p, r, q),
                (q, p, r),
                (q, r, p),
                (r, p, q),
                (r, q, p),
            ] {
                triangle[at(i, j, k)] = 0.5;
            }
        }
        Ok(Self {
            n,
            alpha,
            edge,
            triangle,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn at(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.n + j) * self.n + k
    }

    pub fn edge_entry(&self, i: usize, j: usize, k: usize) -> f64 {
        self.edge[self.at(i, j, k)]
    }

    pub fn triangle_entry(&self, i: usize, j: usize, k: usize) -> f64 {
        self.triangle[self.at(i, j, k)]
    }

    /// Blended entry `alpha · b + (1 - alpha) · c`.
    pub fn entry(&self, i: usize, j: usize, k: usize) -> f64 {
        self.alpha * self.edge_entry(i, j, k) + (1.0 - self.alpha) * self.triangle_entry(i, j, k)
    }

    /// Triple-loop contraction `Σ_{j,k} a[i][j][k] x_j x_k`.
    ///
    /// The edge part is summed over all `(j, k)` in row-major order. The
    /// triangle part visits each unordered pair `j <= k` once, adding the two
    /// mirrored slots `(j, k)` and `(k, j)` together; since those hold equal
    /// halves the pair sum is exact, and the result matches the implicit
    /// operator bit for bit.
    pub fn contract(&self, x: &[f64]) -> Result<Vec<f64>> {
        let n = self.n;
        if x.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                actual: x.len(),
            });
        }
        let beta = 1.0 - self.alpha;
        let mut out = vec![0.0; n];
        for (i, slot) in out.iter_mut().enumerate() {
            let mut edge = 0.0;
            for j in 0..n {
                for k in 0..n {
                    let b = self.edge_entry(i, j, k);
                    if b != 0.0 {
                        edge += b * x[j] * x[k];
                    }
                }
            }
            let mut tri = 0.0;
            for j in 0..n {
                for k in j..n {
                    let (c_jk, c_kj) = (self.triangle_entry(i, j, k), self.triangle_entry(i, k, j));
                    if c_jk != 0.0 || c_kj != 0.0 {
                        tri += if j == k {
                            c_jk * x[j] * x[k]
                        } else {
                            c_jk * x[j] * x[k] + c_kj * x[k] * x[j]
                        };
                    }
                }
            }
            *slot = self.alpha * edge + beta * tri;
        }
        Ok(out)
    }

    /// Strong connectivity of the associated digraph read off the dense
    /// entries; independent of the operator's structural shortcut.
    pub fn verify_weak_irreducibility(&self) -> IrreducibilityCheck {
        let n = self.n;
        let arcs: Vec<Vec<usize>> = (0..n)
            .map(|i| {
                let mut out = Vec::new();
                for j in 0..n {
                    for k in 0..n {
                        if self.entry(i, j, k) != 0.0 {
                            out.push(j);
                            out.push(k);
                        }
                    }
                }
                out.sort_unstable();
                out.dedup();
                out
            })
            .collect();
        strong_connectivity(&arcs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators;

    fn setup(g: &Graph) -> TriangleSet {
        TriangleSet::enumerate(g)
    }

    #[test]
    fn alpha_domain() {
        assert!(Alpha::new(0.0).is_err());
        assert!(Alpha::new(-0.1).is_err());
        assert!(Alpha::new(1.0 + 1e-12).is_err());
        assert!(Alpha::new(f64::NAN).is_err());
        assert_eq!(Alpha::new(1.0).unwrap().get(), 1.0);
    }

    #[test]
    fn k3_pure_edge() {
        let g = generators::complete(3);
        let t = setup(&g);
        let op = AlphaTriangleOperator::new(&g, &t, 1.0).unwrap();
        assert_eq!(op.apply(&[1.0, 1.0, 1.0]).unwrap(), vec![2.0, 2.0, 2.0]);
    }

    #[test]
    fn k3_half_blend() {
        let g = generators::complete(3);
        let t = setup(&g);
        let op = AlphaTriangleOperator::new(&g, &t, 0.5).unwrap();
        assert_eq!(op.apply(&[1.0, 1.0, 1.0]).unwrap(), vec![1.5, 1.5, 1.5]);
        assert_eq!(op.apply(&[0.0; 3]).unwrap(), vec![0.0; 3]);
    }

    #[test]
    fn path_hand_evaluation() {
        let g = generators::path(3);
        let t = setup(&g);
        let op = AlphaTriangleOperator::new(&g, &t, 0.7).unwrap();
        let y = op.apply(&[1.0, 2.0, 3.0]).unwrap();
        let expected = [2.8, 7.0, 2.8];
        for (a, b) in y.iter().zip(expected) {
            assert!((a - b).abs() < 1e-12, "{y:?}");
        }
    }

    #[test]
    fn dimension_mismatch() {
        let g = generators::complete(3);
        let t = setup(&g);
        let op = AlphaTriangleOperator::new(&g, &t, 0.5).unwrap();
        assert_eq!(
            op.apply(&[1.0, 1.0]),
            Err(Error::DimensionMismatch {
                expected: 3,
                actual: 2
            })
        );
    }

    #[test]
    fn disconnected_guard() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let t = setup(&g);
        assert_eq!(
            AlphaTriangleOperator::new(&g, &t, 0.5).unwrap_err(),
            Error::Disconnected { components: 2 }
        );
        let op = AlphaTriangleOperator::new_allow_disconnected(&g, &t, 0.5).unwrap();
        let check = op.verify_weak_irreducibility();
        assert!(!check.irreducible);
        assert_eq!(check.witness, Some((0, 2)));
    }

    #[test]
    fn irreducible_examples() {
        for alpha in [0.1, 0.5, 1.0] {
            let g = generators::complete(3);
            let t = setup(&g);
            let op = AlphaTriangleOperator::new(&g, &t, alpha).unwrap();
            assert!(op.verify_weak_irreducibility().irreducible);
        }
        let g = generators::example_g14();
        let t = setup(&g);
        let op = AlphaTriangleOperator::new(&g, &t, 0.5).unwrap();
        let check = op.verify_weak_irreducibility();
        assert!(check.irreducible);
        assert!(check.forward_parent[1..].iter().all(Option::is_some));
        assert!(check.backward_parent[1..].iter().all(Option::is_some));
    }

    #[test]
    fn materialized_entries_k3() {
        let g = generators::complete(3);
        let t = setup(&g);
        let m = MaterializedTensor::build(&g, &t, 1.0).unwrap();
        assert_eq!(m.edge_entry(0, 1, 1), 1.0);
        assert_eq!(m.edge_entry(0, 2, 2), 1.0);
        assert_eq!(m.edge_entry(0, 1, 2), 0.0);
        assert_eq!(m.entry(0, 1, 2), 0.0);

        let m0 = MaterializedTensor::build(&g, &t, 0.0).unwrap();
        assert_eq!(m0.entry(0, 1, 2), 0.5);
        assert_eq!(m0.entry(0, 2, 1), 0.5);
        assert_eq!(m0.entry(2, 0, 1), 0.5);
        assert_eq!(m0.entry(0, 1, 1), 0.0);
    }

    #[test]
    fn materialize_refuses_large() {
        let g = generators::path(65);
        let t = setup(&g);
        assert!(matches!(
            MaterializedTensor::build(&g, &t, 0.5),
            Err(Error::TooLarge { n: 65, .. })
        ));
    }

    #[test]
    fn pure_triangle_tensor_on_path_is_reducible() {
        // alpha = 0 leaves only triangle arcs; a path has none.
        let g = generators::path(3);
        let t = setup(&g);
        let m = MaterializedTensor::build(&g, &t, 0.0).unwrap();
        assert!(!m.verify_weak_irreducibility().irreducible);
        let m = MaterializedTensor::build(&g, &t, 0.3).unwrap();
        assert!(m.verify_weak_irreducibility().irreducible);
    }
}
