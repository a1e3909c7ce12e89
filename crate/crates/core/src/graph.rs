//! Undirected simple graphs with stable external labels.
//!
//! Vertices carry an arbitrary string label and a contiguous internal id in
//! `0..n`. Ids are assigned in first-appearance order when loading an edge
//! list, so every run over the same file sees the same ids.

use std::collections::{HashMap, HashSet, VecDeque};
use std::io::BufRead;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LoadOptions {
    /// Drop repeated edges (in either orientation) instead of failing.
    pub dedupe: bool,
    /// Drop `a a` lines instead of failing.
    pub skip_self_loops: bool,
}

impl Default for LoadOptions {
    fn default() -> Self {
        Self {
            dedupe: true,
            skip_self_loops: false,
        }
    }
}

/// A graph together with the cleanup performed while reading it.
#[derive(Debug, Clone)]
pub struct LoadedGraph {
    pub graph: Graph,
    pub duplicates: usize,
    pub skipped_self_loops: usize,
}

/// Reads a whitespace-separated edge list. `#` starts a comment.
pub fn load_edge_list<R: BufRead>(reader: R, options: LoadOptions) -> Result<LoadedGraph> {
    let mut builder = Builder::default();
    let mut duplicates = 0;
    let mut skipped_self_loops = 0;

    for (lineno, line) in reader.lines().enumerate() {
        let line_number = lineno + 1;
        let line = line.map_err(|e| Error::Parse {
            line: line_number,
            message: e.to_string(),
        })?;
        let content = match line.find('#') {
            Some(pos) => &line[..pos],
            None => line.as_str(),
        };
        let mut tokens = content.split_whitespace();
        let (a, b) = match (tokens.next(), tokens.next(), tokens.next()) {
            (None, _, _) => continue,
            (Some(a), Some(b), None) => (a, b),
            (Some(_), None, _) => {
                return Err(Error::Parse {
                    line: line_number,
                    message: "expected two vertex labels, found one".into(),
                })
            }
            (Some(_), Some(_), Some(extra)) => {
                return Err(Error::Parse {
                    line: line_number,
                    message: format!("expected two vertex labels, found extra token {extra:?}"),
                })
            }
        };
        if a == b {
            if options.skip_self_loops {
                skipped_self_loops += 1;
                continue;
            }
            return Err(Error::SelfLoop {
                line: line_number,
                label: a.to_string(),
            });
        }
        let u = builder.vertex(a);
        let v = builder.vertex(b);
        if !builder.edge(u, v) {
            if !options.dedupe {
                return Err(Error::Parse {
                    line: line_number,
                    message: format!("duplicate edge {a} {b}"),
                });
            }
            duplicates += 1;
        }
    }

    if builder.edges.is_empty() {
        return Err(Error::EmptyGraph);
    }
    Ok(LoadedGraph {
        graph: builder.finish(),
        duplicates,
        skipped_self_loops,
    })
}

/// Parses an in-memory edge list with default options.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    load_edge_list(text.as_bytes(), LoadOptions::default()).map(|l| l.graph)
}

#[derive(Default)]
struct Builder {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    edges: Vec<(usize, usize)>,
    seen: HashSet<(usize, usize)>,
}

impl Builder {
    fn vertex(&mut self, label: &str) -> usize {
        if let Some(&id) = self.index.get(label) {
            return id;
        }
        let id = self.labels.len();
        self.labels.push(label.to_string());
        self.index.insert(label.to_string(), id);
        id
    }

    fn edge(&mut self, u: usize, v: usize) -> bool {
        let key = (u.min(v), u.max(v));
        if self.seen.insert(key) {
            self.edges.push(key);
            true
        } else {
            false
        }
    }

    fn finish(self) -> Graph {
        Graph::from_parts(self.labels, self.index, self.edges)
    }
}

impl Graph {
    fn from_parts(
        labels: Vec<String>,
        index: HashMap<String, usize>,
        mut edges: Vec<(usize, usize)>,
    ) -> Self {
        let n = labels.len();
        edges.sort_unstable();
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Self {
            labels,
            index,
            adjacency,
            edges,
        }
    }

    /// Builds a graph on ids `0..n` labelled `"1"..="n"`.
    ///
    /// Self-loops and duplicates are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        Self::with_labels(labels, edges)
    }

    /// Builds a graph on ids `0..labels.len()` with the given labels.
    pub fn with_labels(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut index = HashMap::with_capacity(n);
        for (i, label) in labels.iter().enumerate() {
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::InvalidArgument(format!("duplicate label {label:?}")));
            }
        }
        let mut seen = HashSet::with_capacity(edges.len());
        let mut canonical = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidArgument(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::SelfLoop {
                    line: 0,
                    label: labels[u].clone(),
                });
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::InvalidArgument(format!("duplicate edge ({u}, {v})")));
            }
            canonical.push(key);
        }
        Ok(Self::from_parts(labels, index, canonical))
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbor ids of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn id_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn require_id(&self, label: &str) -> Result<usize> {
        self.id_of(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Serializes to the edge-list format read by [`load_edge_list`].
    ///
    /// Isolated vertices have no representation in this format and are lost.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for &(u, v) in &self.edges {
            out.push_str(&self.labels[u]);
            out.push(' ');
            out.push_str(&self.labels[v]);
            out.push('\n');
        }
        out
    }

    /// Connected components by breadth-first search, each sorted ascending,
    /// ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut component = Vec::new();
            while let Some(v) = queue.pop_front() {
                component.push(v);
                for &w in &self.adjacency[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            component.sort_unstable();
            components.push(component);
        }
        components
    }

    pub fn component_count(&self) -> usize {
        self.connected_components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.component_count() == 1
    }

    /// Fails with [`Error::Disconnected`] unless the graph is connected.
    pub fn ensure_connected(&self) -> Result<()> {
        let components = self.component_count();
        if components == 1 {
            Ok(())
        } else {
            Err(Error::Disconnected { components })
        }
    }

    /// Induced subgraph on the vertices not named in `labels`.
    pub fn remove_vertices<S: AsRef<str>>(&self, labels: &[S]) -> Result<Graph> {
        let ids = labels
            .iter()
            .map(|l| self.require_id(l.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.remove_ids(&ids))
    }

    /// Induced subgraph on the vertices not in `removed`; surviving vertices
    /// keep their relative order and labels.
    pub fn remove_ids(&self, removed: &[usize]) -> Graph {
        let mut keep = vec![true; self.n()];
        for &v in removed {
            keep[v] = false;
        }
        let survivors: Vec<usize> = (0..self.n()).filter(|&v| keep[v]).collect();
        self.induced(&survivors)
    }

    /// Induced subgraph on `vertices` (ids), relabelled to `0..vertices.len()`
    /// in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut remap = vec![usize::MAX; self.n()];
        for (new, &old) in vertices.iter().enumerate() {
            remap[old] = new;
        }
        let labels: Vec<String> = vertices.iter().map(|&v| self.labels[v].clone()).collect();
        let index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        let edges = self
            .edges
            .iter()
            .filter_map(|&(u, v)| {
                let (a, b) = (remap[u], remap[v]);
                (a != usize::MAX && b != usize::MAX).then(|| (a.min(b), a.max(b)))
            })
            .collect();
        Graph::from_parts(labels, index, edges)
    }
}

/// Orders labels numerically when both parse as integers, else lexically.
pub fn compare_labels(a: &str, b: &str) -> std::cmp::Ordering {
    match (a.parse::<i64>(), b.parse::<i64>()) {
        (Ok(x), Ok(y)) => x.cmp(&y),
        _ => a.cmp(b),
    }
}

/// Small named graphs used throughout the tests and benchmarks.
pub mod generators {
    use super::Graph;

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).expect("valid complete graph")
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges).expect("valid path")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n - 1));
        Graph::from_edges(n, &edges).expect("valid cycle")
    }

    /// Center is vertex 0.
    pub fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::from_edges(leaves + 1, &edges).expect("valid star")
    }

    /// The 14-vertex example graph: triangles {1,2,3} and {5,6,7} joined
    /// through vertex 4, which also hangs vertex 8 carrying leaves 9..=14.
    pub fn example_g14() -> Graph {
        let mut edges = vec![
            (1, 2),
            (1, 3),
            (2, 3),
            (5, 6),
            (5, 7),
            (6, 7),
            (1, 4),
            (4, 5),
            (4, 8),
        ];
        edges.extend((9..=14).map(|leaf| (8, leaf)));
        let edges: Vec<_> = edges.into_iter().map(|(u, v)| (u - 1, v - 1)).collect();
        Graph::from_edges(14, &edges).expect("valid example graph")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loads_triangle() {
        let g = parse_edge_list("1 2\n2 3\n1 3").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.neighbors(0), &[1, 2]);
    }

    #[test]
    fn dedupes_with_count() {
        let loaded = load_edge_list("a b\nb a\na b".as_bytes(), LoadOptions::default()).unwrap();
        assert_eq!(loaded.graph.n(), 2);
        assert_eq!(loaded.graph.edge_count(), 1);
        assert_eq!(loaded.duplicates, 2);
    }

    #[test]
    fn duplicates_rejected_without_dedupe() {
        let opts = LoadOptions {
            dedupe: false,
            ..LoadOptions::default()
        };
        let err = load_edge_list("a b\nb a".as_bytes(), opts).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn labels_in_first_appearance_order() {
        let g = parse_edge_list("# header\nz y  # trailing\n\ny x\n").unwrap();
        assert_eq!(g.labels(), &["z", "y", "x"]);
        assert_eq!(g.id_of("x"), Some(2));
    }

    #[test]
    fn malformed_line_reports_number() {
        let err = parse_edge_list("1 2\n3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = parse_edge_list("1 2 3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
    }

    #[test]
    fn self_loops() {
        let err = parse_edge_list("1 2\n2 2\n").unwrap_err();
        assert_eq!(
            err,
            Error::SelfLoop {
                line: 2,
                label: "2".into()
            }
        );
        let opts = LoadOptions {
            skip_self_loops: true,
            ..LoadOptions::default()
        };
        let loaded = load_edge_list("1 2\n2 2\n".as_bytes(), opts).unwrap();
        assert_eq!(loaded.skipped_self_loops, 1);
        assert_eq!(loaded.graph.edge_count(), 1);
    }

    #[test]
    fn empty_input_is_an_error() {
        assert_eq!(parse_edge_list("# nothing\n\n"), Err(Error::EmptyGraph));
    }

    #[test]
    fn components() {
        assert_eq!(
            generators::complete(3).connected_components(),
            vec![vec![0, 1, 2]]
        );
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.connected_components(), vec![vec![0, 1], vec![2, 3]]);
        assert!(matches!(
            g.ensure_connected(),
            Err(Error::Disconnected { components: 2 })
        ));
    }

    #[test]
    fn removal() {
        let k2 = generators::complete(3).remove_vertices(&["2"]).unwrap();
        assert_eq!(k2.n(), 2);
        assert_eq!(k2.edge_count(), 1);
        assert_eq!(k2.labels(), &["1", "3"]);

        let g = generators::example_g14().remove_vertices(&["8"]).unwrap();
        let comps = g.connected_components();
        assert_eq!(comps.len(), 7);
        assert_eq!(comps[0].len(), 7);
        assert!(comps[1..].iter().all(|c| c.len() == 1));

        assert_eq!(
            generators::complete(3).remove_vertices(&["9"]),
            Err(Error::UnknownLabel("9".into()))
        );
    }

    #[test]
    fn round_trip_text() {
        let g = generators::example_g14();
        let back = parse_edge_list(&g.to_edge_list()).unwrap();
        assert_eq!(back.n(), g.n());
        for &(u, v) in g.edges() {
            let a = back.id_of(g.label(u)).unwrap();
            let b = back.id_of(g.label(v)).unwrap();
            assert!(back.has_edge(a, b));
        }
    }

    #[test]
    fn natural_label_order() {
        use std::cmp::Ordering::*;
        assert_eq!(compare_labels("9", "10"), Less);
        assert_eq!(compare_labels("b", "a"), Greater);
    }
}
