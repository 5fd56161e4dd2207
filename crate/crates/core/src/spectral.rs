//! Laplacian spectrum via cyclic Jacobi rotations on the dense symmetric
//! matrix L = Deg − Adj.
//!
//! Only eigenvalues are needed downstream, so eigenvectors are never
//! accumulated; the final off-diagonal Frobenius norm is kept as the
//! convergence certificate.

use crate::graph::Graph;

/// Convergence: off-diagonal Frobenius norm below this factor times ‖L‖_F.
pub const CONVERGENCE_FACTOR: f64 = 1e-12;

/// Eigenvalues closer than this factor times max(1, θ_max) count as one
/// distinct eigenvalue, and eigenvalues below it count as zero.
pub const DISTINCT_TOL_FACTOR: f64 = 1e-8;

const MAX_SWEEPS: usize = 64;

/// Laplacian eigenvalues and the derived quantities the bound evaluators use.
#[derive(Debug, Clone)]
pub struct SpectralData {
    /// All n eigenvalues, sorted ascending.
    pub eigenvalues: Vec<f64>,
    /// Number of distinct eigenvalues under the documented clustering rule.
    pub distinct_count: usize,
    /// Second-smallest eigenvalue; positive iff the graph is connected.
    pub algebraic_connectivity: f64,
    /// Σ 1/θ over the nonzero eigenvalues.
    pub reciprocal_sum: f64,
    /// Final off-diagonal Frobenius norm (convergence certificate).
    pub off_norm: f64,
}

pub fn laplacian_spectrum(g: &Graph) -> SpectralData {
    let n = g.vertex_count();
    let mut a = vec![0.0f64; n * n];
    for v in 0..n {
        a[v * n + v] = g.degree(v) as f64;
        for &w in g.neighbors(v) {
            a[v * n + w] = -1.0;
        }
    }
    let off_norm = jacobi_diagonalize(&mut a, n);
    let mut eigenvalues: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eigenvalues.sort_by(|x, y| x.partial_cmp(y).expect("eigenvalues are finite"));

    let theta_max = eigenvalues.last().copied().unwrap_or(0.0);
    let tol = DISTINCT_TOL_FACTOR * theta_max.max(1.0);

    let mut distinct_count = usize::from(n > 0);
    for i in 1..n {
        if eigenvalues[i] - eigenvalues[i - 1] > tol {
            distinct_count += 1;
        }
    }

    let algebraic_connectivity = if n >= 2 { eigenvalues[1] } else { 0.0 };
    let reciprocal_sum = eigenvalues
        .iter()
        .filter(|&&t| t > tol)
        .map(|&t| 1.0 / t)
        .sum();

    SpectralData {
        eigenvalues,
        distinct_count,
        algebraic_connectivity,
        reciprocal_sum,
        off_norm,
    }
}

/// Cyclic Jacobi sweeps on a symmetric matrix stored row-major; afterwards the
/// diagonal holds the eigenvalues. Returns the final off-diagonal norm.
fn jacobi_diagonalize(a: &mut [f64], n: usize) -> f64 {
    if n < 2 {
        return 0.0;
    }
    let frob = |a: &[f64]| -> f64 { a.iter().map(|x| x * x).sum::<f64>().sqrt() };
    let off = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for p in 0..n {
            for q in 0..n {
                if p != q {
                    s += a[p * n + q] * a[p * n + q];
                }
            }
        }
        s.sqrt()
    };
    let target = CONVERGENCE_FACTOR * frob(a);
    let mut off_norm = off(a);
    for _ in 0..MAX_SWEEPS {
        if off_norm <= target {
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                // smaller-angle rotation root
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
        off_norm = off(a);
    }
    off_norm
}
