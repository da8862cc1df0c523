//! Graph energy `E = Σ|λ|`, Laplacian energy `LE = Σ|μ - d̄|` and signless
//! Laplacian energy `LE+ = Σ|ν - d̄|`, with `d̄ = 2|e|/|v|`.

use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::commgraph::{CommutingGraph, MatrixKind};
use crate::groups::FiniteGroup;
use crate::rational::{self, int, ratio};
use crate::spectra::{
    clique_union_spectrum, exact_spectrum_with, Eigenvalue, ExactSpectrum, DEFAULT_ISOLATION_BITS,
};
use crate::{Error, Result};

pub fn default_tolerance() -> BigRational {
    ratio(1, 1_000_000_000)
}

/// An exact rational, or a certified enclosure `[lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExactOrInterval {
    Exact(BigRational),
    Interval { lo: BigRational, hi: BigRational },
}

impl ExactOrInterval {
    pub fn lo(&self) -> &BigRational {
        match self {
            ExactOrInterval::Exact(q) => q,
            ExactOrInterval::Interval { lo, .. } => lo,
        }
    }

    pub fn hi(&self) -> &BigRational {
        match self {
            ExactOrInterval::Exact(q) => q,
            ExactOrInterval::Interval { hi, .. } => hi,
        }
    }

    pub fn exact(&self) -> Option<&BigRational> {
        match self {
            ExactOrInterval::Exact(q) => Some(q),
            ExactOrInterval::Interval { .. } => None,
        }
    }

    pub fn width(&self) -> BigRational {
        self.hi() - self.lo()
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        self.lo() <= x && x <= self.hi()
    }

    pub fn overlaps(&self, lo: &BigRational, hi: &BigRational) -> bool {
        self.lo() <= hi && lo <= self.hi()
    }

    pub fn to_f64(&self) -> f64 {
        rational::to_f64(&rational::midpoint(self.lo(), self.hi()))
    }

    pub fn to_json(&self) -> Value {
        match self {
            ExactOrInterval::Exact(q) => json!({"exact": rational::to_text(q)}),
            ExactOrInterval::Interval { lo, hi } => json!({"interval": {
                "lo": rational::to_text(lo),
                "hi": rational::to_text(hi),
            }}),
        }
    }

    /// `num/den`, or `lo..hi` for an interval.
    pub fn to_text(&self) -> String {
        match self {
            ExactOrInterval::Exact(q) => rational::to_text(q),
            ExactOrInterval::Interval { lo, hi } => {
                format!("{}..{}", rational::to_text(lo), rational::to_text(hi))
            }
        }
    }
}

impl fmt::Display for ExactOrInterval {
    /// Exact values as `num/den`; intervals as a decimal midpoint `± half-width`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactOrInterval::Exact(q) => write!(f, "{}", rational::to_text(q)),
            ExactOrInterval::Interval { lo, hi } => {
                let mid = rational::midpoint(lo, hi);
                let half = (hi - lo) / int(2);
                write!(f, "{} ± {:.1e}", rational::to_decimal(&mid, 12), rational::to_f64(&half))
            }
        }
    }
}

/// Which spectra fed the report.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpectrumPath {
    /// Closed forms for a disjoint union of cliques.
    CliqueUnion,
    /// Characteristic polynomials of the full matrices.
    General,
}

/// Path selection for [`energy_report_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PathChoice {
    #[default]
    Auto,
    Force(SpectrumPath),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnergyReport {
    pub energy: ExactOrInterval,
    pub laplacian_energy: ExactOrInterval,
    pub signless_energy: ExactOrInterval,
    pub mean_degree: BigRational,
    pub vertices: usize,
    pub edges: usize,
    pub path: SpectrumPath,
}

impl EnergyReport {
    pub fn triple(&self) -> [&ExactOrInterval; 3] {
        [&self.energy, &self.laplacian_energy, &self.signless_energy]
    }

    pub fn to_json(&self) -> Value {
        json!({
            "E": self.energy.to_json(),
            "LE": self.laplacian_energy.to_json(),
            "LEplus": self.signless_energy.to_json(),
            "meanDegree": rational::to_text(&self.mean_degree),
            "vertices": self.vertices,
            "edges": self.edges,
        })
    }
}

pub fn mean_degree(g: &CommutingGraph) -> Result<BigRational> {
    if g.vertex_count() == 0 {
        return Err(Error::InvalidParameters("graph has no vertices".into()));
    }
    Ok(ratio(2 * g.edge_count() as i64, g.vertex_count() as i64))
}

/// `Σ mult * |λ - center|`, exact when every eigenvalue is an integer and an
/// enclosure of total width at most `tol` otherwise.
fn deviation_sum(s: &ExactSpectrum, center: &BigRational, tol: &BigRational) -> ExactOrInterval {
    let mut exact = BigRational::zero();
    let mut irrational: Vec<(Eigenvalue, i64)> = Vec::new();
    for (v, m) in s.entries() {
        match v {
            Eigenvalue::Integer(k) => exact += (int(*k) - center).abs() * int(*m),
            Eigenvalue::Isolated { .. } => irrational.push((v.clone(), *m)),
        }
    }
    if irrational.is_empty() {
        return ExactOrInterval::Exact(exact);
    }
    let total: i64 = irrational.iter().map(|(_, m)| m.abs()).sum();
    let each = tol / int(total);
    let (mut lo, mut hi) = (exact.clone(), exact);
    for (mut v, m) in irrational {
        v.separate_from(center);
        v.refine(&each);
        let (a, b) = v.enclosure();
        let (da, db) = ((a - center).abs(), (b - center).abs());
        let (l, h) = if da <= db { (da, db) } else { (db, da) };
        lo += l * int(m);
        hi += h * int(m);
    }
    ExactOrInterval::Interval { lo, hi }
}

fn expect_kind(s: &ExactSpectrum, kind: MatrixKind) {
    assert_eq!(s.kind(), kind, "spectrum of the wrong matrix kind");
}

pub fn energy(s: &ExactSpectrum, tol: &BigRational) -> ExactOrInterval {
    expect_kind(s, MatrixKind::Adjacency);
    deviation_sum(s, &BigRational::zero(), tol)
}

pub fn laplacian_energy(s: &ExactSpectrum, mean: &BigRational, tol: &BigRational) -> ExactOrInterval {
    expect_kind(s, MatrixKind::Laplacian);
    deviation_sum(s, mean, tol)
}

pub fn signless_energy(s: &ExactSpectrum, mean: &BigRational, tol: &BigRational) -> ExactOrInterval {
    expect_kind(s, MatrixKind::Signless);
    deviation_sum(s, mean, tol)
}

/// The three energies from already computed adjacency, Laplacian and signless spectra.
pub fn energies_from_spectra(
    spectra: &[ExactSpectrum; 3],
    mean: &BigRational,
    tol: &BigRational,
) -> [ExactOrInterval; 3] {
    [
        energy(&spectra[0], tol),
        laplacian_energy(&spectra[1], mean, tol),
        signless_energy(&spectra[2], mean, tol),
    ]
}

/// Spectra of `A`, `L`, `Q` along the chosen path.
pub fn spectra_for(g: &CommutingGraph, path: PathChoice) -> Result<(SpectrumPath, [ExactSpectrum; 3])> {
    let cliques = match path {
        PathChoice::Force(SpectrumPath::General) => None,
        PathChoice::Force(SpectrumPath::CliqueUnion) => Some(g.clique_decomposition().ok_or_else(|| {
            Error::InvalidParameters("graph is not a disjoint union of cliques".into())
        })?),
        PathChoice::Auto => g.clique_decomposition(),
    };
    match cliques {
        Some(sizes) => Ok((
            SpectrumPath::CliqueUnion,
            [
                clique_union_spectrum(&sizes, MatrixKind::Adjacency),
                clique_union_spectrum(&sizes, MatrixKind::Laplacian),
                clique_union_spectrum(&sizes, MatrixKind::Signless),
            ],
        )),
        None => {
            let m = g.matrices();
            let bits = DEFAULT_ISOLATION_BITS;
            Ok((
                SpectrumPath::General,
                [
                    exact_spectrum_with(&m.adjacency, bits)?,
                    exact_spectrum_with(&m.laplacian, bits)?,
                    exact_spectrum_with(&m.signless, bits)?,
                ],
            ))
        }
    }
}

pub fn graph_energy_report(g: &CommutingGraph, tol: &BigRational, path: PathChoice) -> Result<EnergyReport> {
    let mean = mean_degree(g)?;
    let (path, spectra) = spectra_for(g, path)?;
    let [energy, laplacian_energy, signless_energy] = energies_from_spectra(&spectra, &mean, tol);
    Ok(EnergyReport {
        energy,
        laplacian_energy,
        signless_energy,
        mean_degree: mean,
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        path,
    })
}

pub fn energy_report(g: &FiniteGroup) -> Result<EnergyReport> {
    energy_report_with(g, &default_tolerance(), PathChoice::Auto)
}

pub fn energy_report_with(g: &FiniteGroup, tol: &BigRational, path: PathChoice) -> Result<EnergyReport> {
    graph_energy_report(&CommutingGraph::new(g)?, tol, path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::GroupFamilySpec;
    use crate::spectra::exact_spectrum;

    fn group(d: &str) -> FiniteGroup {
        d.parse::<GroupFamilySpec>().unwrap().build(2048).unwrap()
    }

    fn exact(e: &ExactOrInterval) -> BigRational {
        e.exact().cloned().expect("exact value")
    }

    #[test]
    fn mean_degrees() {
        let sz = CommutingGraph::new(&group("suzuki2")).unwrap();
        assert_eq!(mean_degree(&sz).unwrap(), ratio(42, 19));
        let a4 = CommutingGraph::new(&group("a4")).unwrap();
        assert_eq!(mean_degree(&a4).unwrap(), ratio(14, 11));
        assert_eq!(mean_degree(&CommutingGraph::clique_union(&[6])).unwrap(), int(5));
    }

    #[test]
    fn documented_triples() {
        for (d, e, le, lep) in [
            ("suzuki2", ratio(26, 1), ratio(504, 19), ratio(484, 19)),
            ("sl23", ratio(30, 1), ratio(408, 11), ratio(312, 11)),
            ("hanakiU:n=2", ratio(18, 1), ratio(18, 1), ratio(18, 1)),
            ("hanakiV:p=3,n=1", ratio(40, 1), ratio(40, 1), ratio(40, 1)),
            ("dihedral:m=3", ratio(2, 1), ratio(16, 5), ratio(16, 5)),
            ("dicyclic:m=2", ratio(6, 1), ratio(6, 1), ratio(6, 1)),
            ("a4", ratio(12, 1), ratio(140, 11), ratio(124, 11)),
        ] {
            let r = energy_report(&group(d)).unwrap();
            assert_eq!([exact(&r.energy), exact(&r.laplacian_energy), exact(&r.signless_energy)], [e, le, lep], "{d}");
        }
    }

    #[test]
    fn edgeless_and_trivial() {
        let s = exact_spectrum(&crate::commgraph::IntMatrix::zeros(3, MatrixKind::Adjacency)).unwrap();
        assert_eq!(energy(&s, &default_tolerance()), ExactOrInterval::Exact(int(0)));
        let l = clique_union_spectrum(&[1, 1, 1], MatrixKind::Laplacian);
        assert_eq!(laplacian_energy(&l, &int(0), &default_tolerance()), ExactOrInterval::Exact(int(0)));
    }

    #[test]
    fn symmetric_four_intervals() {
        let tol = default_tolerance();
        let r = energy_report_with(&group("s4"), &tol, PathChoice::Auto).unwrap();
        assert_eq!(r.path, SpectrumPath::General);
        let want_e = 17.0 + 4.0 * 5f64.sqrt() + 17f64.sqrt();
        assert!(r.energy.width() <= tol);
        assert!((r.energy.to_f64() - want_e).abs() < 1e-9);
        for e in r.triple() {
            assert!(e.exact().is_none());
            assert!(e.width() <= tol);
        }
        let finer = energy_report_with(&group("s4"), &(&tol / int(1000)), PathChoice::Auto).unwrap();
        for (c, f) in r.triple().iter().zip(finer.triple()) {
            assert!(c.lo() <= f.lo() && f.hi() <= c.hi());
        }
    }

    #[test]
    fn fast_path_equals_general_path() {
        let tol = default_tolerance();
        for d in ["suzuki2", "a4", "sl23", "gl2:p=3,n=1", "pq:p=3,q=7", "quasidihedral:n=5"] {
            let g = group(d);
            let fast = energy_report_with(&g, &tol, PathChoice::Force(SpectrumPath::CliqueUnion)).unwrap();
            let general = energy_report_with(&g, &tol, PathChoice::Force(SpectrumPath::General)).unwrap();
            assert_eq!(fast.triple(), general.triple(), "{d}");
        }
    }

    #[test]
    fn json_shape() {
        let r = energy_report(&group("suzuki2")).unwrap();
        assert_eq!(
            r.to_json().to_string(),
            r#"{"E":{"exact":"26"},"LE":{"exact":"504/19"},"LEplus":{"exact":"484/19"},"meanDegree":"42/19","vertices":19,"edges":21}"#
        );
    }

    #[test]
    fn regular_graphs_have_equal_energies() {
        for d in ["elementary:p=2,z=4", "hanakiV:p=5,n=1", "dicyclic:m=2"] {
            let g = group(d);
            let gamma = CommutingGraph::new(&g).unwrap();
            assert!(gamma.is_regular());
            let r = energy_report(&g).unwrap();
            assert_eq!(r.energy, r.laplacian_energy);
            assert_eq!(r.energy, r.signless_energy);
        }
    }
}
