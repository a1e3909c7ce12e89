//! Shared fixtures and brute-force oracles for the integration tests.
//! Nothing here calls into the algorithms it is used to check.

#![allow(dead_code)]

use std::path::PathBuf;

use rand::Rng;
use tricent::Graph;

pub fn data_dir() -> PathBuf {
    match std::env::var_os("TRICENT_DATA_DIR") {
        Some(dir) => PathBuf::from(dir),
        None => PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../datasets"),
    }
}

pub fn load_dataset(name: &str) -> Result<Graph, String> {
    let path = data_dir().join(name);
    let text = std::fs::read_to_string(&path)
        .map_err(|e| format!("dataset {} unavailable: {e}", path.display()))?;
    tricent::graph::parse_edge_list(&text).map_err(|e| format!("{}: {e}", path.display()))
}

/// Random connected graph: a random recursive spanning tree plus each other
/// pair independently with probability `p`.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Erdős–Rényi graph, possibly disconnected.
pub fn random_gnp<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Graph {
    random_connected(rng, n, 0.0)
}

pub fn adjacency(graph: &Graph) -> Vec<Vec<f64>> {
    let n = graph.n();
    let mut a = vec![vec![0.0; n]; n];
    for &(u, v) in graph.edges() {
        a[u][v] = 1.0;
        a[v][u] = 1.0;
    }
    a
}

fn mat_mul(a: &[Vec<f64>], b: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = a.len();
    let mut c = vec![vec![0.0; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] != 0.0 {
                for j in 0..n {
                    c[i][j] += a[i][k] * b[k][j];
                }
            }
        }
    }
    c
}

/// `trace(A³) / 6`.
pub fn triangle_count_by_trace(graph: &Graph) -> usize {
    let a = adjacency(graph);
    let a3 = mat_mul(&mat_mul(&a, &a), &a);
    let trace: f64 = (0..graph.n()).map(|i| a3[i][i]).sum();
    (trace / 6.0).round() as usize
}

/// Diagonal of `exp(A)` by scaling and squaring a truncated Taylor series.
pub fn exp_diagonal_taylor(graph: &Graph) -> Vec<f64> {
    let n = graph.n();
    let a = adjacency(graph);
    let norm = a
        .iter()
        .map(|row| row.iter().sum::<f64>())
        .fold(0.0, f64::max);
    let mut squarings = 0;
    while norm / f64::from(1u32 << squarings) > 0.5 {
        squarings += 1;
    }
    let scale = f64::from(1u32 << squarings);
    let scaled: Vec<Vec<f64>> = a
        .iter()
        .map(|row| row.iter().map(|x| x / scale).collect())
        .collect();
    let mut result = vec![vec![0.0; n]; n];
    let mut term = vec![vec![0.0; n]; n];
    for i in 0..n {
        result[i][i] = 1.0;
        term[i][i] = 1.0;
    }
    for k in 1..=30 {
        term = mat_mul(&term, &scaled);
        for row in term.iter_mut() {
            for x in row.iter_mut() {
                *x /= k as f64;
            }
        }
        for i in 0..n {
            for j in 0..n {
                result[i][j] += term[i][j];
            }
        }
    }
    for _ in 0..squarings {
        result = mat_mul(&result, &result);
    }
    (0..n).map(|i| result[i][i]).collect()
}

/// Betweenness by enumerating every simple path between every pair.
pub fn betweenness_by_paths(graph: &Graph) -> Vec<f64> {
    let n = graph.n();
    let mut bc = vec![0.0; n];
    for s in 0..n {
        for t in s + 1..n {
            let mut paths: Vec<Vec<usize>> = Vec::new();
            let mut stack = vec![s];
            let mut on_path = vec![false; n];
            on_path[s] = true;
            collect_paths(graph, t, &mut stack, &mut on_path, &mut paths);
            let Some(shortest) = paths.iter().map(Vec::len).min() else {
                continue;
            };
            let shortest_paths: Vec<&Vec<usize>> =
                paths.iter().filter(|p| p.len() == shortest).collect();
            let total = shortest_paths.len() as f64;
            for (v, score) in bc.iter_mut().enumerate() {
                if v == s || v == t {
                    continue;
                }
                let through = shortest_paths.iter().filter(|p| p.contains(&v)).count();
                *score += through as f64 / total;
            }
        }
    }
    bc
}

fn collect_paths(
    graph: &Graph,
    target: usize,
    stack: &mut Vec<usize>,
    on_path: &mut [bool],
    out: &mut Vec<Vec<usize>>,
) {
    let v = *stack.last().unwrap();
    if v == target {
        out.push(stack.clone());
        return;
    }
    for &w in graph.neighbors(v) {
        if !on_path[w] {
            on_path[w] = true;
            stack.push(w);
            collect_paths(graph, target, stack, on_path, out);
            stack.pop();
            on_path[w] = false;
        }
    }
}

/// Largest adjacency eigenvalue by dense power iteration on `A + I` with a
/// Rayleigh-quotient readout; independent of the library's solvers.
pub fn adjacency_lambda_max(graph: &Graph) -> f64 {
    let a = adjacency(graph);
    let n = graph.n();
    let mut x = vec![1.0; n];
    let mut lambda = 0.0;
    for _ in 0..200_000 {
        let mut y: Vec<f64> = (0..n)
            .map(|i| x[i] + a[i].iter().zip(&x).map(|(aij, xj)| aij * xj).sum::<f64>())
            .collect();
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        y.iter_mut().for_each(|v| *v /= norm);
        let ay: Vec<f64> = (0..n)
            .map(|i| a[i].iter().zip(&y).map(|(aij, yj)| aij * yj).sum())
            .collect();
        let next: f64 = ay.iter().zip(&y).map(|(p, q)| p * q).sum();
        let done =
            (next - lambda).abs() < 1e-15 && x.iter().zip(&y).all(|(p, q)| (p - q).abs() < 1e-13);
        lambda = next;
        x = y;
        if done {
            break;
        }
    }
    lambda
}
