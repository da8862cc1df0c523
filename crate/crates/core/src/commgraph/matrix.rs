use std::fmt;

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MatrixKind {
    Adjacency,
    Degree,
    Laplacian,
    Signless,
    General,
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MatrixKind::Adjacency => "adjacency",
            MatrixKind::Degree => "degree",
            MatrixKind::Laplacian => "laplacian",
            MatrixKind::Signless => "signless",
            MatrixKind::General => "general",
        })
    }
}

/// Dense square integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    dim: usize,
    data: Vec<i64>,
    kind: MatrixKind,
}

impl IntMatrix {
    pub fn zeros(dim: usize, kind: MatrixKind) -> Self {
        IntMatrix {
            dim,
            data: vec![0; dim * dim],
            kind,
        }
    }

    pub fn from_rows(rows: &[Vec<i64>], kind: MatrixKind) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::InvalidParameters("matrix rows have unequal length".into()));
        }
        Ok(IntMatrix {
            dim,
            data: rows.concat(),
            kind,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kind(&self) -> MatrixKind {
        self.kind
    }

    pub fn with_kind(mut self, kind: MatrixKind) -> Self {
        self.kind = kind;
        self
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.dim + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.dim + j] = v;
    }

    /// Row-major entries.
    pub fn data(&self) -> &[i64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (i + 1..self.dim).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn trace(&self) -> i64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// `trace(M^2) = Σ_ij m_ij m_ji`.
    pub fn trace_of_square(&self) -> i128 {
        let mut t = 0i128;
        for i in 0..self.dim {
            for j in 0..self.dim {
                t += self.get(i, j) as i128 * self.get(j, i) as i128;
            }
        }
        t
    }

    pub fn row_sums(&self) -> Vec<i64> {
        (0..self.dim).map(|i| self.row(i).iter().sum()).collect()
    }

    /// `P M P^T` for the permutation sending index `i` to `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut out = IntMatrix::zeros(self.dim, self.kind);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.set(perm[i], perm[j], self.get(i, j));
            }
        }
        out
    }

    /// The principal submatrix on `indices`.
    pub fn principal(&self, indices: &[usize]) -> Self {
        let mut out = IntMatrix::zeros(indices.len(), self.kind);
        for (a, &i) in indices.iter().enumerate() {
            for (b, &j) in indices.iter().enumerate() {
                out.set(a, b, self.get(i, j));
            }
        }
        out
    }

    /// Groups of indices that the off-diagonal pattern connects; the matrix is
    /// block diagonal with respect to them. Ordered by smallest index.
    pub fn diagonal_blocks(&self) -> Vec<Vec<usize>> {
        let n = self.dim;
        let mut block = vec![usize::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if block[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            block[start] = id;
            let mut members = vec![start];
            let mut head = 0;
            while head < members.len() {
                let i = members[head];
                head += 1;
                for j in 0..n {
                    if block[j] == usize::MAX && (self.get(i, j) != 0 || self.get(j, i) != 0) {
                        block[j] = id;
                        members.push(j);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn traces_and_blocks() {
        let m = IntMatrix::from_rows(
            &[vec![1, 0, 2], vec![0, 5, 0], vec![2, 0, 3]],
            MatrixKind::General,
        )
        .unwrap();
        assert_eq!(m.trace(), 9);
        assert_eq!(m.trace_of_square(), 1 + 25 + 9 + 8);
        assert_eq!(m.diagonal_blocks(), vec![vec![0, 2], vec![1]]);
        assert!(m.is_symmetric());
        let p = m.permuted(&[2, 0, 1]);
        assert_eq!(p.trace(), 9);
        assert_eq!(p.get(2, 1), 2);
        assert!(IntMatrix::from_rows(&[vec![1, 2]], MatrixKind::General).is_err());
    }
}
