use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntPoly;
use crate::commgraph::IntMatrix;

/// `det(xI - M)` by Berkowitz's division-free recurrence.
///
/// Step `r` extends the characteristic polynomial of the leading `r x r`
/// block to `(r+1) x (r+1)` by a Toeplitz product whose column is
/// `1, -m_rr, -R C, -R M C, -R M^2 C, ...`.
pub fn char_poly(m: &IntMatrix) -> IntPoly {
    let n = m.dim();
    // Coefficients high to low.
    let mut v: Vec<BigInt> = vec![BigInt::one()];
    for r in 0..n {
        let mut t = Vec::with_capacity(r + 2);
        t.push(BigInt::one());
        t.push(BigInt::from(-m.get(r, r)));
        let mut w: Vec<BigInt> = (0..r).map(|i| BigInt::from(m.get(i, r))).collect();
        for k in 0..r {
            let dot = (0..r).fold(BigInt::zero(), |acc, j| {
                let rj = m.get(r, j);
                if rj == 0 { acc } else { acc + &w[j] * rj }
            });
            t.push(-dot);
            if k + 1 < r {
                w = mat_vec(m, r, &w);
            }
        }
        let mut next = vec![BigInt::zero(); r + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for j in 0..=i.min(r) {
                if i - j < t.len() && !t[i - j].is_zero() && !v[j].is_zero() {
                    *slot += &t[i - j] * &v[j];
                }
            }
        }
        v = next;
    }
    v.reverse();
    IntPoly::new(v)
}

/// Leading `r x r` block of `m` times `w`.
fn mat_vec(m: &IntMatrix, r: usize, w: &[BigInt]) -> Vec<BigInt> {
    (0..r)
        .map(|i| {
            let row = &m.row(i)[..r];
            row.iter().zip(w).fold(BigInt::zero(), |acc, (&a, x)| {
                if a == 0 { acc } else { acc + x * a }
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::commgraph::{CommutingGraph, MatrixKind};

    fn mat(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows(rows, MatrixKind::General).unwrap()
    }

    #[test]
    fn small_graphs() {
        let k2 = CommutingGraph::clique_union(&[2]).matrices();
        assert_eq!(char_poly(&k2.adjacency), IntPoly::from_i64s(&[-1, 0, 1]));
        assert_eq!(char_poly(&k2.laplacian), IntPoly::from_i64s(&[0, -2, 1]));
        let k3 = CommutingGraph::clique_union(&[3]).adjacency();
        assert_eq!(char_poly(&k3), IntPoly::from_i64s(&[-2, -3, 0, 1]));
        assert_eq!(char_poly(&mat(&[])), IntPoly::one());
    }

    #[test]
    fn matches_cofactor_expansion() {
        let m = mat(&[vec![2, -1, 0, 3], vec![1, 0, 4, -2], vec![0, 5, -1, 1], vec![-3, 2, 2, 0]]);
        let cp = char_poly(&m);
        // Independent check: det(kI - M) by exact cofactor expansion at several k.
        for k in -3i64..=3 {
            let shifted: Vec<Vec<i64>> = (0..4)
                .map(|i| (0..4).map(|j| if i == j { k - m.get(i, j) } else { -m.get(i, j) }).collect())
                .collect();
            assert_eq!(cp.eval_int(&BigInt::from(k)), BigInt::from(det(&shifted)), "k={k}");
        }
        assert_eq!(cp.coeffs()[3], BigInt::from(-m.trace()));
    }

    fn det(m: &[Vec<i64>]) -> i64 {
        if m.len() == 1 {
            return m[0][0];
        }
        (0..m.len())
            .map(|c| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &x)| x).collect())
                    .collect();
                let sign = if c % 2 == 0 { 1 } else { -1 };
                sign * m[0][c] * det(&minor)
            })
            .sum()
    }
}
