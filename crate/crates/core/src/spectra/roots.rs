use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use super::poly::count_roots;
use super::IntPoly;
use crate::rational::midpoint;

/// Integer roots of `p` with multiplicity, searched in `[-bound, bound]`, and
/// the cofactor left after dividing them out.
pub fn integer_roots(p: &IntPoly, bound: i64) -> (Vec<(i64, u64)>, IntPoly) {
    let mut rest = p.clone();
    let mut roots = Vec::new();
    let zeros = rest.coeffs().iter().take_while(|c| c.is_zero()).count();
    if zeros > 0 {
        rest = IntPoly::new(rest.coeffs()[zeros..].to_vec());
        roots.push((0, zeros as u64));
    }
    for k in (-bound..=bound).filter(|&k| k != 0) {
        if rest.degree() == 0 {
            break;
        }
        let kb = BigInt::from(k);
        let mut mult = 0;
        while rest.degree() > 0 && rest.coeffs()[0].is_multiple_of(&kb) && rest.eval_int(&kb).is_zero() {
            rest = rest.deflate(k);
            mult += 1;
        }
        if mult > 0 {
            roots.push((k, mult));
        }
    }
    (roots, rest)
}

/// Splits squarefree factors into pairwise coprime pieces, adding the
/// multiplicities of shared roots.
pub fn coprime_basis(factors: Vec<(IntPoly, u64)>) -> Vec<(IntPoly, u64)> {
    let mut basis: Vec<(IntPoly, u64)> = Vec::new();
    for (p, m) in factors {
        let mut p = p.primitive();
        let mut next = Vec::with_capacity(basis.len() + 2);
        for (q, n) in basis {
            if p.degree() == 0 {
                next.push((q, n));
                continue;
            }
            let g = p.gcd(&q);
            if g.degree() == 0 {
                next.push((q, n));
                continue;
            }
            let q_rest = q.div_exact(&g).expect("gcd divides").primitive();
            if q_rest.degree() > 0 {
                next.push((q_rest, n));
            }
            p = p.div_exact(&g).expect("gcd divides").primitive();
            next.push((g, n + m));
        }
        if p.degree() > 0 {
            next.push((p, m));
        }
        basis = next;
    }
    basis
}

/// Disjoint intervals `(lo, hi]` each holding exactly one root of the
/// squarefree polynomial `p`, ascending.
pub fn isolate(p: &IntPoly) -> Vec<(BigRational, BigRational)> {
    let sturm = p.sturm_sequence();
    let b = BigRational::from_integer(p.root_bound());
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        match count_roots(&sturm, &lo, &hi) {
            0 => {}
            1 => out.push((lo, hi)),
            _ => {
                let mid = midpoint(&lo, &hi);
                stack.push((lo, mid.clone()));
                stack.push((mid, hi));
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Halves `(lo, hi]` around the single root of `p` until the width is at most
/// `width`. Endpoints are never roots because the root is irrational.
pub fn refine(p: &IntPoly, lo: &mut BigRational, hi: &mut BigRational, width: &BigRational) {
    let mut s_lo = p.sign_at(lo);
    while &(&*hi - &*lo) > width {
        let mid = midpoint(lo, hi);
        let s_mid = p.sign_at(&mid);
        if s_mid == Ordering::Equal {
            // Only reachable for a rational root; collapse onto it.
            *lo = mid.clone();
            *hi = mid;
            return;
        }
        if s_mid == s_lo {
            *lo = mid;
            s_lo = s_mid;
        } else {
            *hi = mid;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, pow2_neg, ratio, to_f64};

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn integer_root_extraction() {
        // x^2 (x - 3)(x + 1)^2 (x^2 - 5)
        let f = p(&[0, 0, 1]).mul(&p(&[-3, 1])).mul(&p(&[1, 1])).mul(&p(&[1, 1])).mul(&p(&[-5, 0, 1]));
        let (roots, rest) = integer_roots(&f, 10);
        assert_eq!(roots, vec![(0, 2), (-1, 2), (3, 1)]);
        assert_eq!(rest, p(&[-5, 0, 1]));
    }

    #[test]
    fn basis_merges_shared_factors() {
        let a = p(&[-5, 0, 1]);
        let b = p(&[-13, 0, 1]);
        let basis = coprime_basis(vec![(a.mul(&b), 1), (a.clone(), 2), (p(&[-2, -3, 1]), 1)]);
        assert!(basis.contains(&(a, 3)));
        assert!(basis.contains(&(b, 1)));
        assert_eq!(basis.len(), 3);
    }

    #[test]
    fn isolation_and_refinement() {
        let f = p(&[-5, 0, 1]).mul(&p(&[-2, -3, 1]));
        let iv = isolate(&f);
        assert_eq!(iv.len(), 4);
        let expected = [-5f64.sqrt(), (3.0 - 17f64.sqrt()) / 2.0, 5f64.sqrt(), (3.0 + 17f64.sqrt()) / 2.0];
        let width = pow2_neg(40);
        for ((lo, hi), want) in iv.into_iter().zip(expected) {
            let (mut lo, mut hi) = (lo, hi);
            refine(&f, &mut lo, &mut hi, &width);
            assert!(&hi - &lo <= width);
            assert!(to_f64(&lo) <= want + 1e-12 && want <= to_f64(&hi) + 1e-12);
        }
        let (mut lo, mut hi) = (int(2), int(3));
        refine(&p(&[-5, 0, 1]), &mut lo, &mut hi, &ratio(1, 1000));
        assert!(lo < ratio(2237, 1000) && hi > ratio(2236, 1000));
    }
}
