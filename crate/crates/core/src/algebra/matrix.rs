use std::fmt;

use super::field::{Elem, FiniteField};
use crate::{Error, Result};

/// A square matrix with entries in a [`FiniteField`], stored row-major.
///
/// The field is passed to every operation rather than stored, so matrices
/// stay `Copy` and hash cheaply when used as group elements.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquareMat<const N: usize>(pub [[Elem; N]; N]);

pub type Mat2 = SquareMat<2>;
pub type Mat3 = SquareMat<3>;

impl<const N: usize> SquareMat<N> {
    pub fn identity() -> Self {
        let mut m = [[0; N]; N];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        SquareMat(m)
    }

    pub fn mul(&self, rhs: &Self, f: &FiniteField) -> Self {
        let mut out = [[0; N]; N];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                let mut acc = 0;
                for k in 0..N {
                    acc = f.add(acc, f.mul(self.0[i][k], rhs.0[k][j]));
                }
                *slot = acc;
            }
        }
        SquareMat(out)
    }

    pub fn entries(&self) -> impl Iterator<Item = Elem> + '_ {
        self.0.iter().flatten().copied()
    }
}

impl<const N: usize> fmt::Display for SquareMat<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl<const N: usize> fmt::Debug for SquareMat<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Mat2 {
    pub fn det(&self, f: &FiniteField) -> Elem {
        let [[a, b], [c, d]] = self.0;
        f.sub(f.mul(a, d), f.mul(b, c))
    }
}

impl Mat3 {
    pub fn det(&self, f: &FiniteField) -> Elem {
        let m = &self.0;
        let minor = |r1: usize, r2: usize, c1: usize, c2: usize| {
            f.sub(f.mul(m[r1][c1], m[r2][c2]), f.mul(m[r1][c2], m[r2][c1]))
        };
        let t0 = f.mul(m[0][0], minor(1, 2, 1, 2));
        let t1 = f.mul(m[0][1], minor(1, 2, 0, 2));
        let t2 = f.mul(m[0][2], minor(1, 2, 0, 1));
        f.add(f.sub(t0, t1), t2)
    }
}

fn all_mat2(f: &FiniteField) -> impl Iterator<Item = Mat2> + '_ {
    let q = f.order();
    (0..q.pow(4)).map(move |t| {
        // Row-major entries, first entry most significant.
        let d = [t / (q * q * q), (t / (q * q)) % q, (t / q) % q, t % q];
        SquareMat([[d[0], d[1]], [d[2], d[3]]])
    })
}

fn check_cap(order: u64, cap: usize) -> Result<()> {
    if order > cap as u64 {
        return Err(Error::OrderCapExceeded {
            order: order as u128,
            cap,
        });
    }
    Ok(())
}

/// All invertible 2x2 matrices over `f`, in row-major lexicographic order.
pub fn gl2_enumerate(f: &FiniteField, cap: usize) -> Result<Vec<Mat2>> {
    let q = f.order() as u64;
    check_cap((q * q - 1) * (q * q - q), cap)?;
    Ok(all_mat2(f).filter(|m| m.det(f) != 0).collect())
}

/// All determinant-one 2x2 matrices over `f`, in row-major lexicographic order.
pub fn sl2_enumerate(f: &FiniteField, cap: usize) -> Result<Vec<Mat2>> {
    let q = f.order() as u64;
    check_cap(q * q * q - q, cap)?;
    Ok(all_mat2(f).filter(|m| m.det(f) == 1).collect())
}
