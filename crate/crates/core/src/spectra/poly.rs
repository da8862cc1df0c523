use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense integer polynomial, coefficients low to high, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly(Vec<BigInt>);

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly(coeffs)
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        IntPoly(vec![BigInt::one()])
    }

    /// `x - k`.
    pub fn linear(k: i64) -> Self {
        Self::from_i64s(&[-k, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn lc(&self) -> BigInt {
        self.0.last().cloned().unwrap_or_default()
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.0.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.0
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    }

    /// Sign of `p(x)` computed over the integers via the homogenized form.
    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        let (num, den) = (x.numer(), x.denom());
        let d = self.degree();
        let mut den_pow = vec![BigInt::one(); d + 1];
        for i in 1..=d {
            den_pow[i] = &den_pow[i - 1] * den;
        }
        let mut acc = BigInt::zero();
        let mut num_pow = BigInt::one();
        for (i, c) in self.0.iter().enumerate() {
            acc += c * &num_pow * &den_pow[d - i];
            num_pow *= num;
        }
        acc.sign_cmp()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.0.len().max(rhs.0.len());
        let get = |p: &Self, i: usize| p.0.get(i).cloned().unwrap_or_default();
        Self::new((0..n).map(|i| get(self, i) - get(rhs, i)).collect())
    }

    pub fn neg(&self) -> Self {
        IntPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.lc().is_negative() {
            g = -g;
        }
        IntPoly(self.0.iter().map(|c| c / &g).collect())
    }

    /// Exact quotient over the integers, `None` if `rhs` does not divide.
    pub fn div_exact(&self, rhs: &Self) -> Option<Self> {
        assert!(!rhs.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(self.clone());
        }
        if self.degree() < rhs.degree() {
            return None;
        }
        let mut rem = self.0.clone();
        let db = rhs.degree();
        let lb = rhs.lc();
        let mut q = vec![BigInt::zero(); self.degree() - db + 1];
        for k in (0..q.len()).rev() {
            let top = &rem[k + db];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(&lb);
            if !r.is_zero() {
                return None;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                rem[k + j] -= &c * b;
            }
            q[k] = c;
        }
        rem.iter().all(Zero::is_zero).then(|| Self::new(q))
    }

    /// Divides by `x - k`, assuming `k` is a root.
    pub fn deflate(&self, k: i64) -> Self {
        let k = BigInt::from(k);
        let n = self.degree();
        let mut q = vec![BigInt::zero(); n];
        let mut carry = BigInt::zero();
        for i in (0..n).rev() {
            carry = &self.0[i + 1] + &carry * &k;
            q[i] = carry.clone();
        }
        debug_assert!((&self.0[0] + &carry * &k).is_zero(), "deflating by a non-root");
        Self::new(q)
    }

    /// `|lc(b)|^(deg a - deg b + 1) * a mod b`; the positive multiplier keeps
    /// signs intact, which Sturm sequences rely on.
    pub fn pseudo_rem(&self, b: &Self) -> Self {
        assert!(!b.is_zero());
        if self.degree() < b.degree() || self.is_zero() {
            return self.clone();
        }
        let mut r = self.0.clone();
        let db = b.degree();
        let lb = b.lc().abs();
        let sign_b = b.lc().sign_cmp();
        for k in (0..=self.degree() - db).rev() {
            let top = r[k + db].clone();
            for c in r.iter_mut() {
                *c *= &lb;
            }
            if !top.is_zero() {
                // r*|lb| - top*sign(lb)*x^k*b cancels the leading term.
                let f = if sign_b == Ordering::Less { -top } else { top };
                for (j, bj) in b.0.iter().enumerate() {
                    r[k + j] -= &f * bj;
                }
            }
            r.truncate(k + db);
        }
        Self::new(r)
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let mut a = self.primitive();
        let mut b = rhs.primitive();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        a.primitive()
    }

    /// `[(f_1, 1), (f_2, 2), ...]` with `self = c * Π f_i^i` and the `f_i`
    /// squarefree and pairwise coprime; constant factors are dropped.
    pub fn squarefree_decomposition(&self) -> Vec<(IntPoly, u64)> {
        let f = self.primitive();
        if f.degree() == 0 {
            return Vec::new();
        }
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_exact(&a0).expect("gcd divides");
        let c = df.div_exact(&a0).expect("gcd divides derivative");
        let mut d = c.sub(&b.derivative());
        let mut out = Vec::new();
        let mut i = 1;
        while b.degree() > 0 {
            let a = b.gcd(&d);
            let next_b = b.div_exact(&a).expect("gcd divides");
            let next_c = d.div_exact(&a).expect("gcd divides");
            if a.degree() > 0 {
                out.push((a, i));
            }
            d = next_c.sub(&next_b.derivative());
            b = next_b;
            i += 1;
        }
        out
    }

    pub fn sturm_sequence(&self) -> Vec<IntPoly> {
        let mut seq = vec![self.clone(), self.derivative()];
        while !seq.last().unwrap().is_zero() {
            let n = seq.len();
            let r = seq[n - 2].pseudo_rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            // Dividing by the positive content keeps signs.
            let g = r.content();
            seq.push(IntPoly(r.0.iter().map(|c| -(c / &g)).collect()));
        }
        seq
    }

    /// Integer `B` with every real root in `(-B, B)` (Cauchy bound).
    pub fn root_bound(&self) -> BigInt {
        let lc = self.lc().abs();
        let max = self.0.iter().map(Signed::abs).max().unwrap_or_default();
        BigInt::one() + max.div_ceil(&lc)
    }
}

/// Number of distinct real roots in `(lo, hi]`.
pub fn count_roots(sturm: &[IntPoly], lo: &BigRational, hi: &BigRational) -> usize {
    let v = |x: &BigRational| {
        let signs: Vec<Ordering> = sturm
            .iter()
            .map(|p| p.sign_at(x))
            .filter(|s| *s != Ordering::Equal)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    };
    v(lo).saturating_sub(v(hi))
}

trait SignCmp {
    fn sign_cmp(&self) -> Ordering;
}

impl SignCmp for BigInt {
    fn sign_cmp(&self) -> Ordering {
        if self.is_negative() {
            Ordering::Less
        } else if self.is_zero() {
            Ordering::Equal
        } else {
            Ordering::Greater
        }
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = !abs.is_one() || i == 0;
            match (show_coeff, i) {
                (true, 0) => write!(f, "{abs}")?,
                (true, 1) => write!(f, "{abs}x")?,
                (true, _) => write!(f, "{abs}x^{i}")?,
                (false, 1) => write!(f, "x")?,
                (false, _) => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-5, 0, 1]).to_string(), "x^2 - 5");
        assert_eq!(p(&[2, -3, 0, -1]).to_string(), "-x^3 - 3x + 2");
        assert_eq!(p(&[]).to_string(), "0");
    }

    #[test]
    fn arithmetic() {
        let a = p(&[-1, 1]);
        let b = p(&[1, 1]);
        assert_eq!(a.mul(&b), p(&[-1, 0, 1]));
        assert_eq!(p(&[-1, 0, 1]).div_exact(&a), Some(b.clone()));
        assert_eq!(p(&[-1, 0, 1]).div_exact(&p(&[1, 2])), None);
        assert_eq!(p(&[-2, -3, 0, 1]).deflate(2), p(&[1, 2, 1]));
        assert_eq!(p(&[3, 2, 1]).derivative(), p(&[2, 2]));
        assert_eq!(p(&[-4, 0, 6]).primitive(), p(&[-2, 0, 3]));
        assert_eq!(p(&[4, 0, -6]).primitive(), p(&[-2, 0, 3]));
    }

    #[test]
    fn gcds() {
        let f = p(&[-1, 1]).mul(&p(&[-5, 0, 1]));
        let g = p(&[-5, 0, 1]).mul(&p(&[3, 1]));
        assert_eq!(f.gcd(&g), p(&[-5, 0, 1]));
        assert_eq!(p(&[1, 1]).gcd(&p(&[2, 1])), IntPoly::one());
        let h = p(&[0, 2]).mul(&p(&[-5, 0, 1]));
        assert_eq!(h.gcd(&p(&[10, 0, -2])), p(&[-5, 0, 1]));
    }

    #[test]
    fn squarefree() {
        // (x^2 - 5)^2 (x^2 - 3x - 2) (x + 1)^3
        let a = p(&[-5, 0, 1]);
        let b = p(&[-2, -3, 1]);
        let c = p(&[1, 1]);
        let f = a.mul(&a).mul(&b).mul(&c).mul(&c).mul(&c);
        let parts = f.squarefree_decomposition();
        assert_eq!(parts, vec![(b, 1), (a, 2), (c, 3)]);
        assert!(p(&[7]).squarefree_decomposition().is_empty());
    }

    #[test]
    fn sturm_counts() {
        let f = p(&[-5, 0, 1]).mul(&p(&[-2, -3, 1]));
        let s = f.sturm_sequence();
        let b = BigRational::from_integer(f.root_bound());
        assert_eq!(count_roots(&s, &-b.clone(), &b), 4);
        assert_eq!(count_roots(&s, &int(2), &int(3)), 1);
        assert_eq!(count_roots(&s, &int(-3), &int(0)), 2);
        assert_eq!(count_roots(&s, &ratio(23, 10), &int(3)), 0);
    }

    #[test]
    fn signs() {
        let f = p(&[-5, 0, 1]);
        assert_eq!(f.sign_at(&ratio(22, 10)), Ordering::Less);
        assert_eq!(f.sign_at(&ratio(-23, 10)), Ordering::Greater);
        assert_eq!(p(&[-4, 0, 1]).sign_at(&int(2)), Ordering::Equal);
        assert_eq!(f.eval(&ratio(1, 2)), ratio(-19, 4));
    }
}
