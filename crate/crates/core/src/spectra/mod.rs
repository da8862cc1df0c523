//! Exact spectra of integer symmetric matrices: characteristic polynomials,
//! integer eigenvalues with multiplicity, isolated irrational eigenvalues,
//! and a floating-point Jacobi solver used as an independent check.

mod charpoly;
mod jacobi;
mod poly;
mod roots;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

pub use charpoly::char_poly;
pub use jacobi::{float_eigensolve, FloatSpectrum, FLOAT_DIM_CAP};
pub use poly::{count_roots, IntPoly};
pub use roots::{coprime_basis, integer_roots, isolate, refine};

use crate::commgraph::{CommutingGraph, IntMatrix, MatrixKind};
use crate::groups::FiniteGroup;
use crate::rational::{self, int, midpoint, pow2_neg};
use crate::{Error, Result};

pub const EXACT_DIM_CAP: usize = 1024;
/// Isolating intervals are refined to width `2^-DEFAULT_ISOLATION_BITS`.
pub const DEFAULT_ISOLATION_BITS: u32 = 40;

/// An eigenvalue: an exact integer or the unique root of `poly` in `(lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Eigenvalue {
    Integer(i64),
    Isolated {
        poly: IntPoly,
        lo: BigRational,
        hi: BigRational,
    },
}

impl Eigenvalue {
    /// Closed enclosure `[lo, hi]`.
    pub fn enclosure(&self) -> (BigRational, BigRational) {
        match self {
            Eigenvalue::Integer(k) => (int(*k), int(*k)),
            Eigenvalue::Isolated { lo, hi, .. } => (lo.clone(), hi.clone()),
        }
    }

    pub fn midpoint(&self) -> BigRational {
        let (lo, hi) = self.enclosure();
        midpoint(&lo, &hi)
    }

    pub fn to_f64(&self) -> f64 {
        rational::to_f64(&self.midpoint())
    }

    pub fn is_integer(&self) -> bool {
        matches!(self, Eigenvalue::Integer(_))
    }

    pub fn width(&self) -> BigRational {
        let (lo, hi) = self.enclosure();
        hi - lo
    }

    pub fn refine(&mut self, width: &BigRational) {
        if let Eigenvalue::Isolated { poly, lo, hi } = self {
            refine(poly, lo, hi, width);
        }
    }

    /// Refines until the enclosure no longer contains `x`.
    pub fn separate_from(&mut self, x: &BigRational) {
        if let Eigenvalue::Isolated { poly, lo, hi } = self {
            while &*lo <= x && x <= &*hi {
                let half = (&*hi - &*lo) / int(2);
                refine(poly, lo, hi, &half);
            }
        }
    }

    /// Exact equality of the two algebraic numbers.
    pub fn same_value(&self, other: &Eigenvalue) -> bool {
        use Eigenvalue::*;
        match (self, other) {
            (Integer(a), Integer(b)) => a == b,
            (Integer(k), Isolated { poly, lo, hi }) | (Isolated { poly, lo, hi }, Integer(k)) => {
                let x = int(*k);
                lo <= &x && &x <= hi && poly.sign_at(&x).is_eq()
            }
            (Isolated { poly: p, lo: l1, hi: h1 }, Isolated { poly: q, lo: l2, hi: h2 }) => {
                let lo = l1.max(l2);
                let hi = h1.min(h2);
                if lo > hi {
                    return false;
                }
                let g = p.gcd(q);
                if g.degree() == 0 {
                    return false;
                }
                // A root of g in the overlap is the root of p and the root of q.
                g.sign_at(lo).is_eq() || count_roots(&g.sturm_sequence(), lo, hi) > 0
            }
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Eigenvalue::Integer(k) => Value::String(k.to_string()),
            Eigenvalue::Isolated { poly, lo, hi } => {
                let coeffs: Vec<Value> = poly
                    .coeffs()
                    .iter()
                    .map(|c| match i64::try_from(c) {
                        Ok(v) => json!(v),
                        Err(_) => Value::String(c.to_string()),
                    })
                    .collect();
                json!({"poly": coeffs, "lo": rational::to_text(lo), "hi": rational::to_text(hi)})
            }
        }
    }
}

impl fmt::Display for Eigenvalue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Eigenvalue::Integer(k) => write!(f, "{k}"),
            Eigenvalue::Isolated { poly, .. } => {
                write!(f, "[{} root of {poly}]", rational::to_decimal(&self.midpoint(), 10))
            }
        }
    }
}

/// Eigenvalue multiset of one matrix, largest first.
///
/// Multiplicities are signed so that printed spectra with impossible
/// multiplicities can be represented verbatim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactSpectrum {
    kind: MatrixKind,
    entries: Vec<(Eigenvalue, i64)>,
}

impl ExactSpectrum {
    pub fn new(kind: MatrixKind, entries: Vec<(Eigenvalue, i64)>) -> Self {
        ExactSpectrum { kind, entries }
    }

    /// Integer eigenvalues with multiplicities, sorted largest first.
    pub fn from_integers(kind: MatrixKind, values: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut merged: BTreeMap<i64, i64> = BTreeMap::new();
        for (v, m) in values {
            *merged.entry(v).or_insert(0) += m;
        }
        let entries = merged
            .into_iter()
            .rev()
            .filter(|&(_, m)| m != 0)
            .map(|(v, m)| (Eigenvalue::Integer(v), m))
            .collect();
        ExactSpectrum { kind, entries }
    }

    pub fn kind(&self) -> MatrixKind {
        self.kind
    }

    pub fn entries(&self) -> &[(Eigenvalue, i64)] {
        &self.entries
    }

    pub fn dimension(&self) -> i64 {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|(v, _)| v.is_integer())
    }

    pub fn multiplicity_of(&self, k: i64) -> i64 {
        self.entries
            .iter()
            .filter(|(v, _)| v.same_value(&Eigenvalue::Integer(k)))
            .map(|(_, m)| m)
            .sum()
    }

    pub fn refine(&mut self, width: &BigRational) {
        for (v, _) in &mut self.entries {
            v.refine(width);
        }
    }

    /// Enclosure of `Σ mult * λ^k`.
    pub fn moment(&self, k: u32) -> (BigRational, BigRational) {
        let mut lo = BigRational::zero();
        let mut hi = BigRational::zero();
        for (v, m) in &self.entries {
            let (a, b) = v.enclosure();
            let (pa, pb) = (pow(&a, k), pow(&b, k));
            let (mut l, h) = if pa <= pb { (pa, pb) } else { (pb, pa) };
            if k % 2 == 0 && a.is_negative() && b.is_positive() {
                l = BigRational::zero();
            }
            let m = int(*m);
            if m.is_negative() {
                lo += &h * &m;
                hi += &l * &m;
            } else {
                lo += &l * &m;
                hi += &h * &m;
            }
        }
        (lo, hi)
    }

    /// Midpoints expanded by multiplicity, largest first.
    pub fn approximate(&self) -> Vec<f64> {
        let mut out: Vec<f64> = self
            .entries
            .iter()
            .flat_map(|(v, m)| std::iter::repeat_n(v.to_f64(), (*m).max(0) as usize))
            .collect();
        out.sort_by(|x, y| y.total_cmp(x));
        out
    }

    /// Same values with the same total multiplicities.
    pub fn same_multiset(&self, other: &ExactSpectrum) -> bool {
        let a = merge(&self.entries);
        let mut b = merge(&other.entries);
        if a.len() != b.len() {
            return false;
        }
        for (v, m) in a {
            match b.iter().position(|(w, _)| v.same_value(w)) {
                Some(i) if b[i].1 == m => {
                    b.swap_remove(i);
                }
                _ => return false,
            }
        }
        true
    }

    pub fn agrees_with_float(&self, float: &FloatSpectrum, tol: f64) -> bool {
        let exact = self.approximate();
        exact.len() == float.values.len()
            && exact.iter().zip(&float.values).all(|(a, b)| (a - b).abs() <= tol)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.entries
                .iter()
                .map(|(v, m)| json!({"value": v.to_json(), "mult": m}))
                .collect(),
        )
    }
}

fn merge(entries: &[(Eigenvalue, i64)]) -> Vec<(Eigenvalue, i64)> {
    let mut out: Vec<(Eigenvalue, i64)> = Vec::new();
    for (v, m) in entries {
        match out.iter_mut().find(|(w, _)| w.same_value(v)) {
            Some(slot) => slot.1 += m,
            None => out.push((v.clone(), *m)),
        }
    }
    out.retain(|(_, m)| *m != 0);
    out
}

fn pow(x: &BigRational, k: u32) -> BigRational {
    (0..k).fold(int(1), |acc, _| acc * x)
}

impl fmt::Display for ExactSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (v, m)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            match v {
                Eigenvalue::Integer(k) if *k < 0 => write!(f, "({k})^{m}")?,
                _ => write!(f, "{v}^{m}")?,
            }
        }
        write!(f, "}}")
    }
}

struct BlockRoots {
    integers: Vec<(i64, u64)>,
    irrational: Vec<(IntPoly, u64)>,
}

fn block_roots(block: &IntMatrix) -> BlockRoots {
    let cp = char_poly(block);
    let bound = (0..block.dim())
        .map(|i| block.row(i).iter().map(|x| x.abs()).sum::<i64>())
        .max()
        .unwrap_or(0);
    let (integers, rest) = integer_roots(&cp, bound);
    let irrational = if rest.degree() > 0 {
        rest.squarefree_decomposition()
    } else {
        Vec::new()
    };
    BlockRoots { integers, irrational }
}

pub fn exact_spectrum(m: &IntMatrix) -> Result<ExactSpectrum> {
    exact_spectrum_with(m, DEFAULT_ISOLATION_BITS)
}

/// Exact spectrum with irrational eigenvalues isolated to width `2^-bits`.
///
/// The matrix is split into its irreducible diagonal blocks first; identical
/// blocks share one characteristic polynomial.
pub fn exact_spectrum_with(m: &IntMatrix, bits: u32) -> Result<ExactSpectrum> {
    if m.dim() > EXACT_DIM_CAP {
        return Err(Error::DimensionCap { dim: m.dim(), cap: EXACT_DIM_CAP });
    }
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let mut order: Vec<Vec<i64>> = Vec::new();
    let mut seen: HashMap<Vec<i64>, (IntMatrix, u64)> = HashMap::new();
    for block in m.diagonal_blocks() {
        let sub = m.principal(&block);
        let key = sub.data().to_vec();
        match seen.get_mut(&key) {
            Some(slot) => slot.1 += 1,
            None => {
                order.push(key.clone());
                seen.insert(key, (sub, 1));
            }
        }
    }
    let mut integers: BTreeMap<i64, i64> = BTreeMap::new();
    let mut factors = Vec::new();
    for key in &order {
        let (sub, count) = &seen[key];
        let roots = block_roots(sub);
        for (k, mult) in roots.integers {
            *integers.entry(k).or_insert(0) += (mult * count) as i64;
        }
        factors.extend(roots.irrational.into_iter().map(|(p, mult)| (p, mult * count)));
    }
    let width = pow2_neg(bits);
    let mut entries: Vec<(Eigenvalue, i64)> = integers
        .into_iter()
        .map(|(k, mult)| (Eigenvalue::Integer(k), mult))
        .collect();
    for (poly, mult) in coprime_basis(factors) {
        for (mut lo, mut hi) in isolate(&poly) {
            refine(&poly, &mut lo, &mut hi, &width);
            entries.push((Eigenvalue::Isolated { poly: poly.clone(), lo, hi }, mult as i64));
        }
    }
    entries.sort_by(|a, b| b.0.midpoint().cmp(&a.0.midpoint()));
    Ok(ExactSpectrum { kind: m.kind(), entries })
}

/// Closed-form spectrum of a disjoint union of complete graphs `K_a`.
pub fn clique_union_spectrum(sizes: &[usize], kind: MatrixKind) -> ExactSpectrum {
    let values = sizes.iter().flat_map(|&a| {
        let a = a as i64;
        match kind {
            MatrixKind::Adjacency => [(a - 1, 1), (-1, a - 1)],
            MatrixKind::Laplacian => [(0, 1), (a, a - 1)],
            MatrixKind::Signless => [(2 * a - 2, 1), (a - 2, a - 1)],
            MatrixKind::Degree => [(a - 1, a), (0, 0)],
            MatrixKind::General => panic!("no closed form for a general matrix"),
        }
    });
    ExactSpectrum::from_integers(kind, values)
}

/// Adjacency, Laplacian and signless Laplacian spectra of a graph.
pub fn graph_spectra(g: &CommutingGraph, bits: u32) -> Result<[ExactSpectrum; 3]> {
    let m = g.matrices();
    Ok([
        exact_spectrum_with(&m.adjacency, bits)?,
        exact_spectrum_with(&m.laplacian, bits)?,
        exact_spectrum_with(&m.signless, bits)?,
    ])
}

pub fn is_integral(s: &ExactSpectrum) -> bool {
    s.is_integral()
}

/// Integrality of the adjacency, Laplacian and signless spectra of `Γ_G`.
pub fn integrality_flags(g: &FiniteGroup) -> Result<[bool; 3]> {
    let gamma = CommutingGraph::new(g)?;
    let [a, l, q] = graph_spectra(&gamma, 8)?;
    Ok([a.is_integral(), l.is_integral(), q.is_integral()])
}

pub fn super_integral(g: &FiniteGroup) -> Result<bool> {
    Ok(integrality_flags(g)?.iter().all(|&b| b))
}
