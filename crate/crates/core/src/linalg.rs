//! Dense symmetric eigendecomposition by cyclic Jacobi rotations.
//!
//! Adequate for desk-scale graphs (a few hundred vertices); cost is
//! `O(n³)` per sweep and typically 6-10 sweeps are needed.

use crate::error::{Error, Result};
use crate::graph::Graph;

const MAX_SWEEPS: usize = 60;

/// Eigenpairs sorted by ascending eigenvalue. `vectors[k]` is the unit
/// eigenvector for `values[k]`.
#[derive(Debug, Clone)]
pub struct SymmetricEigen {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<f64>>,
}

/// Row-major dense adjacency matrix.
pub fn adjacency_matrix(graph: &Graph) -> Vec<f64> {
    let n = graph.n();
    let mut a = vec![0.0; n * n];
    for &(u, v) in graph.edges() {
        a[u * n + v] = 1.0;
        a[v * n + u] = 1.0;
    }
    a
}

/// Row-major dense Laplacian `D - A`.
pub fn laplacian_matrix(graph: &Graph) -> Vec<f64> {
    let n = graph.n();
    let mut l = vec![0.0; n * n];
    for v in 0..n {
        l[v * n + v] = graph.degree(v) as f64;
    }
    for &(u, v) in graph.edges() {
        l[u * n + v] = -1.0;
        l[v * n + u] = -1.0;
    }
    l
}

/// Eigendecomposition of a symmetric row-major `n × n` matrix. Only the
/// upper triangle is read.
pub fn symmetric_eigen(matrix: &[f64], n: usize) -> Result<SymmetricEigen> {
    if matrix.len() != n * n {
        return Err(Error::DimensionMismatch {
            expected: n * n,
            actual: matrix.len(),
        });
    }
    let mut a = matrix.to_vec();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let mut d: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    let mut b = d.clone();
    let mut z = vec![0.0; n];

    let mut converged = n <= 1;
    for sweep in 1..=MAX_SWEEPS {
        if converged {
            break;
        }
        let mut off = 0.0;
        for p in 0..n {
            for q in p + 1..n {
                off += a[p * n + q].abs();
            }
        }
        if off == 0.0 {
            converged = true;
            break;
        }
        let threshold = if sweep < 4 {
            0.2 * off / (n * n) as f64
        } else {
            0.0
        };
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[p * n + q];
                let g = 100.0 * apq.abs();
                if sweep > 4 && d[p].abs() + g == d[p].abs() && d[q].abs() + g == d[q].abs() {
                    a[p * n + q] = 0.0;
                } else if apq.abs() > threshold {
                    let h = d[q] - d[p];
                    let t = if h.abs() + g == h.abs() {
                        apq / h
                    } else {
                        let theta = 0.5 * h / apq;
                        let t = 1.0 / (theta.abs() + (1.0 + theta * theta).sqrt());
                        if theta < 0.0 {
                            -t
                        } else {
                            t
                        }
                    };
                    let c = 1.0 / (1.0 + t * t).sqrt();
                    let s = t * c;
                    let tau = s / (1.0 + c);
                    let h = t * apq;
                    z[p] -= h;
                    z[q] += h;
                    d[p] -= h;
                    d[q] += h;
                    a[p * n + q] = 0.0;
                    let rotate = |m: &mut [f64], i: usize, j: usize| {
                        let (g, h) = (m[i], m[j]);
                        m[i] = g - s * (h + g * tau);
                        m[j] = h + s * (g - h * tau);
                    };
                    for j in 0..p {
                        rotate(&mut a, j * n + p, j * n + q);
                    }
                    for j in p + 1..q {
                        rotate(&mut a, p * n + j, j * n + q);
                    }
                    for j in q + 1..n {
                        rotate(&mut a, p * n + j, q * n + j);
                    }
                    for j in 0..n {
                        rotate(&mut v, j * n + p, j * n + q);
                    }
                }
            }
        }
        for p in 0..n {
            b[p] += z[p];
            d[p] = b[p];
            z[p] = 0.0;
        }
    }
    if !converged {
        return Err(Error::Eigen(format!(
            "Jacobi did not converge in {MAX_SWEEPS} sweeps"
        )));
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| d[i].total_cmp(&d[j]));
    let values = order.iter().map(|&k| d[k]).collect();
    let vectors = order
        .iter()
        .map(|&k| (0..n).map(|row| v[row * n + k]).collect())
        .collect();
    Ok(SymmetricEigen { values, vectors })
}

/// `y = M x` for a row-major square matrix.
pub fn mat_vec(matrix: &[f64], x: &[f64]) -> Vec<f64> {
    let n = x.len();
    (0..n)
        .map(|i| {
            matrix[i * n..(i + 1) * n]
                .iter()
                .zip(x)
                .map(|(a, b)| a * b)
                .sum()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators;

    #[test]
    fn two_by_two() {
        let e = symmetric_eigen(&[2.0, 1.0, 1.0, 2.0], 2).unwrap();
        assert!((e.values[0] - 1.0).abs() < 1e-14);
        assert!((e.values[1] - 3.0).abs() < 1e-14);
    }

    #[test]
    fn reconstructs_random_symmetric() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let n = 12;
        let mut m = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let x: f64 = rng.gen_range(-1.0..1.0);
                m[i * n + j] = x;
                m[j * n + i] = x;
            }
        }
        let e = symmetric_eigen(&m, n).unwrap();
        for (lambda, vec) in e.values.iter().zip(&e.vectors) {
            let mv = mat_vec(&m, vec);
            for (a, b) in mv.iter().zip(vec) {
                assert!((a - lambda * b).abs() < 1e-12);
            }
            let norm: f64 = vec.iter().map(|x| x * x).sum();
            assert!((norm - 1.0).abs() < 1e-12);
        }
        assert!(e.values.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn cycle_spectrum() {
        let g = generators::cycle(6);
        let e = symmetric_eigen(&adjacency_matrix(&g), 6).unwrap();
        let mut expected: Vec<f64> = (0..6)
            .map(|k| 2.0 * (2.0 * std::f64::consts::PI * k as f64 / 6.0).cos())
            .collect();
        expected.sort_by(f64::total_cmp);
        for (a, b) in e.values.iter().zip(expected) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn laplacian_of_path() {
        let e = symmetric_eigen(&laplacian_matrix(&generators::path(3)), 3).unwrap();
        assert!(e.values[0].abs() < 1e-14);
        assert!((e.values[1] - 1.0).abs() < 1e-14);
        assert!((e.values[2] - 3.0).abs() < 1e-14);
    }
}
