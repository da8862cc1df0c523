use crate::commgraph::IntMatrix;
use crate::{Error, Result};

pub const FLOAT_DIM_CAP: usize = 4096;
const MAX_SWEEPS: usize = 100;

/// Eigenvalues from the floating-point oracle, sorted descending.
#[derive(Clone, Debug, PartialEq)]
pub struct FloatSpectrum {
    pub values: Vec<f64>,
    /// Largest off-diagonal magnitude left after the final sweep.
    pub residual: f64,
}

/// Cyclic Jacobi rotations on each diagonal block of a symmetric matrix.
pub fn float_eigensolve(m: &IntMatrix) -> Result<FloatSpectrum> {
    if m.dim() > FLOAT_DIM_CAP {
        return Err(Error::DimensionCap { dim: m.dim(), cap: FLOAT_DIM_CAP });
    }
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let mut values = Vec::with_capacity(m.dim());
    let mut residual = 0f64;
    for block in m.diagonal_blocks() {
        let n = block.len();
        let mut a: Vec<f64> = Vec::with_capacity(n * n);
        for &i in &block {
            for &j in &block {
                a.push(m.get(i, j) as f64);
            }
        }
        let r = jacobi(&mut a, n)?;
        residual = residual.max(r);
        values.extend((0..n).map(|i| a[i * n + i]));
    }
    values.sort_by(|x, y| y.total_cmp(x));
    Ok(FloatSpectrum { values, residual })
}

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

/// Diagonalizes `a` in place; returns the largest remaining off-diagonal entry.
fn jacobi(a: &mut [f64], n: usize) -> Result<f64> {
    let norm = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let tol = 1e-14 * norm.max(1.0);
    for _ in 0..MAX_SWEEPS {
        if off_norm(a, n) <= tol {
            let worst = (0..n)
                .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
                .map(|(i, j)| a[i * n + j].abs())
                .fold(0.0, f64::max);
            return Ok(worst);
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
                let t = if theta == 0.0 { 1.0 } else { t };
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
            }
        }
    }
    Err(Error::NoConvergence { sweeps: MAX_SWEEPS })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::commgraph::{CommutingGraph, MatrixKind};

    #[test]
    fn complete_graph() {
        let k3 = CommutingGraph::clique_union(&[3]).adjacency();
        let s = float_eigensolve(&k3).unwrap();
        for (got, want) in s.values.iter().zip([2.0, -1.0, -1.0]) {
            assert!((got - want).abs() < 1e-10);
        }
        assert!(s.residual <= 1e-10 * 3.0);
    }

    #[test]
    fn dense_block() {
        let m = IntMatrix::from_rows(
            &[vec![2, 1, 0, 0], vec![1, 2, 1, 0], vec![0, 1, 2, 1], vec![0, 0, 1, 2]],
            MatrixKind::General,
        )
        .unwrap();
        let s = float_eigensolve(&m).unwrap();
        // Path-graph spectrum 2 + 2cos(kπ/5).
        let mut want: Vec<f64> = (1..=4)
            .map(|k| 2.0 + 2.0 * (k as f64 * std::f64::consts::PI / 5.0).cos())
            .collect();
        want.sort_by(|x, y| y.total_cmp(x));
        for (g, w) in s.values.iter().zip(want) {
            assert!((g - w).abs() < 1e-12);
        }
    }

    #[test]
    fn rejects_asymmetric() {
        let m = IntMatrix::from_rows(&[vec![0, 1], vec![0, 0]], MatrixKind::General).unwrap();
        assert_eq!(float_eigensolve(&m), Err(Error::NotSymmetric));
    }
}
