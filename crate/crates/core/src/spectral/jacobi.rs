//! Cyclic Jacobi eigenvalue iteration for dense symmetric matrices.

use crate::error::{Error, Result};

/// Sweeps allowed before giving up.
pub const MAX_SWEEPS: usize = 100;

/// Off-diagonal Frobenius norm at which iteration stops, relative to the full norm.
pub const OFF_DIAGONAL_TOLERANCE: f64 = 1e-12;

fn off_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j] * a[i * n + j];
            }
        }
    }
    s.sqrt()
}

/// Eigenvalues of the symmetric `n × n` row-major matrix `a`, unsorted.
pub fn symmetric_eigenvalues(mut a: Vec<f64>, n: usize) -> Result<Vec<f64>> {
    if a.len() != n * n {
        return Err(Error::DimensionMismatch(format!("{} entries for a {n} x {n} matrix", a.len())));
    }
    let scale = a.iter().map(|x| x * x).sum::<f64>().sqrt().max(1.0);
    let tol = OFF_DIAGONAL_TOLERANCE * scale;
    for _ in 0..MAX_SWEEPS {
        if off_norm(&a, n) <= tol {
            return Ok((0..n).map(|i| a[i * n + i]).collect());
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq.abs() < 1e-300 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
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
    }
    Err(Error::NoConvergence(off_norm(&a, n)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two() {
        let mut e = symmetric_eigenvalues(vec![2.0, 1.0, 1.0, 2.0], 2).unwrap();
        e.sort_by(f64::total_cmp);
        assert!((e[0] - 1.0).abs() < 1e-12 && (e[1] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn trace_and_frobenius_preserved() {
        let n = 6;
        let a: Vec<f64> = (0..n * n).map(|k| {
            let (i, j) = (k / n, k % n);
            ((i + j) % 5) as f64 - 1.5 + if i == j { i as f64 } else { 0.0 }
        }).collect();
        let e = symmetric_eigenvalues(a.clone(), n).unwrap();
        let trace: f64 = (0..n).map(|i| a[i * n + i]).sum();
        let frob: f64 = a.iter().map(|x| x * x).sum();
        assert!((e.iter().sum::<f64>() - trace).abs() < 1e-9);
        assert!((e.iter().map(|x| x * x).sum::<f64>() - frob).abs() < 1e-9);
    }

    #[test]
    fn shape_mismatch() {
        assert!(symmetric_eigenvalues(vec![0.0; 3], 2).is_err());
    }
}
