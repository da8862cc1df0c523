//! Adjudication of the formula registry against direct computation.
//!
//! Computed values come only from [`crate::commgraph`], [`crate::spectra`] and
//! [`crate::energies`]; predictions come only from [`crate::formulas`].

mod bind;
mod report;
mod suite;

use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::commgraph::{clique_counts, CommutingGraph};
use crate::energies::{
    energies_from_spectra, mean_degree, spectra_for, EnergyReport, ExactOrInterval, PathChoice, SpectrumPath,
};
use crate::formulas::{evaluate, predicted_spectra, Params, Predicted, Quantity, Surd};
use crate::groups::{GroupFamilySpec, DEFAULT_ORDER_CAP};
use crate::rational::{self, ratio};
use crate::spectra::{float_eigensolve, ExactSpectrum, EXACT_DIM_CAP};
use crate::{Error, Result};

pub use bind::bind;
pub use report::{csv_report, errata_report, json_report, ErrataEntry, ErrataItem, ErrataReport};
pub use suite::{
    default_suite, run_pairs, scan_family, super_integral_census, CensusRow, ScanResult, Skipped, ORDER16,
};

/// Agreement required between the exact spectra and the float oracle.
pub const FLOAT_TOLERANCE: f64 = 1e-8;

/// Width to which computed and predicted enclosures are refined before comparing.
pub fn comparison_width() -> BigRational {
    ratio(1, 10_000_000_000)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub max_order: usize,
    pub tolerance: BigRational,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { max_order: DEFAULT_ORDER_CAP, tolerance: comparison_width() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    ExactMatch,
    IntervalMatch,
    /// `predicted - computed`.
    Mismatch(ExactOrInterval),
}

impl Status {
    pub fn is_mismatch(&self) -> bool {
        matches!(self, Status::Mismatch(_))
    }

    pub fn name(&self) -> &'static str {
        match self {
            Status::ExactMatch => "ExactMatch",
            Status::IntervalMatch => "IntervalMatch",
            Status::Mismatch(_) => "Mismatch",
        }
    }

    pub fn delta(&self) -> Option<&ExactOrInterval> {
        match self {
            Status::Mismatch(d) => Some(d),
            _ => None,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Status::Mismatch(d) => json!({ "status": "Mismatch", "delta": d.to_json() }),
            other => json!({ "status": other.name() }),
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Mismatch(d) => write!(f, "Mismatch(delta = {d})"),
            other => f.write_str(other.name()),
        }
    }
}

fn compare_single(predicted: &Surd, computed: &ExactOrInterval, width: &BigRational) -> Status {
    if let (Some(p), Some(c)) = (predicted.as_rational(), computed.exact()) {
        return if &p == c {
            Status::ExactMatch
        } else {
            Status::Mismatch(ExactOrInterval::Exact(p - c))
        };
    }
    let (plo, phi) = predicted.enclosure(width);
    let delta = ExactOrInterval::Interval { lo: &plo - computed.hi(), hi: &phi - computed.lo() };
    // An irrational surd never equals an exact rational.
    if computed.exact().is_some() || !computed.overlaps(&plo, &phi) {
        Status::Mismatch(delta)
    } else {
        Status::IntervalMatch
    }
}

/// Compares a prediction with a computed value. For a printed set, the best
/// member wins and a mismatch reports the delta to the nearest member.
pub fn compare(predicted: &Predicted, computed: &ExactOrInterval, width: &BigRational) -> Status {
    match predicted {
        Predicted::Single(s) => compare_single(s, computed, width),
        Predicted::Set(members) => {
            let all: Vec<Status> = members.iter().map(|s| compare_single(s, computed, width)).collect();
            if all.contains(&Status::ExactMatch) {
                return Status::ExactMatch;
            }
            if all.contains(&Status::IntervalMatch) {
                return Status::IntervalMatch;
            }
            all.into_iter()
                .min_by_key(|s| {
                    let d = s.delta().expect("mismatch");
                    rational::midpoint(d.lo(), d.hi()).abs()
                })
                .unwrap_or(Status::Mismatch(ExactOrInterval::Exact(BigRational::zero())))
        }
    }
}

/// Internal cross-checks between independent computations. A record failing
/// any of them is never reported as an erratum.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Consistency {
    /// Clique closed forms agree with characteristic polynomials.
    pub fast_vs_general: Option<bool>,
    /// Exact spectra agree with the Jacobi oracle, per matrix kind.
    pub float_oracle: [Option<bool>; 3],
    /// Energies from the printed spectra match the computed energies exactly
    /// when the spectra coincide.
    pub printed_spectra: Option<bool>,
}

impl Consistency {
    pub fn is_consistent(&self) -> bool {
        self.fast_vs_general != Some(false)
            && self.float_oracle.iter().all(|f| *f != Some(false))
            && self.printed_spectra != Some(false)
    }

    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.fast_vs_general == Some(false) {
            out.push("clique closed forms disagree with characteristic polynomials".to_string());
        }
        for q in Quantity::ALL {
            if self.float_oracle[q.index()] == Some(false) {
                out.push(format!("{:?} spectrum disagrees with the float oracle", q.kind()));
            }
        }
        if self.printed_spectra == Some(false) {
            out.push("printed spectra and printed-spectrum energies disagree".to_string());
        }
        out
    }

    fn to_json(&self) -> Value {
        json!({
            "fastVsGeneral": self.fast_vs_general,
            "floatOracle": self.float_oracle.to_vec(),
            "printedSpectra": self.printed_spectra,
        })
    }
}

/// Facts about the commuting graph attached to every record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evidence {
    /// Clique decomposition written like `6K2 + 4K4 + 3K6`.
    pub cliques: Option<String>,
    pub vertices: usize,
    pub edges: usize,
    pub spectra: [ExactSpectrum; 3],
    /// Energies recomputed from the printed spectra, when those exist and
    /// their multiplicities add up to the vertex count.
    pub printed_spectrum_energies: Option<[ExactOrInterval; 3]>,
}

impl Evidence {
    fn to_json(&self) -> Value {
        json!({
            "cliques": self.cliques,
            "vertices": self.vertices,
            "edges": self.edges,
            "spectra": {
                "A": self.spectra[0].to_json(),
                "L": self.spectra[1].to_json(),
                "Q": self.spectra[2].to_json(),
            },
            "printedSpectrumEnergies": self
                .printed_spectrum_energies
                .as_ref()
                .map(|t| t.iter().map(ExactOrInterval::to_json).collect::<Vec<_>>()),
        })
    }
}

pub fn format_cliques(sizes: &[usize]) -> String {
    clique_counts(sizes)
        .into_iter()
        .map(|(size, count)| if count == 1 { format!("K{size}") } else { format!("{count}K{size}") })
        .collect::<Vec<_>>()
        .join(" + ")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationRecord {
    pub group: String,
    pub formula: &'static str,
    pub params: Params,
    pub cases: [String; 3],
    pub predicted: [Predicted; 3],
    pub computed: EnergyReport,
    pub statuses: [Status; 3],
    pub spectrum_notes: Vec<String>,
    pub evidence: Evidence,
    pub consistency: Consistency,
}

impl VerificationRecord {
    pub fn status(&self, q: Quantity) -> &Status {
        &self.statuses[q.index()]
    }

    pub fn has_mismatch(&self) -> bool {
        self.statuses.iter().any(Status::is_mismatch)
    }

    pub fn to_json(&self) -> Value {
        let mut quantities = serde_json::Map::new();
        for q in Quantity::ALL {
            let i = q.index();
            quantities.insert(
                q.name().to_string(),
                json!({
                    "case": self.cases[i],
                    "predicted": self.predicted[i].to_json(),
                    "computed": self.computed.triple()[i].to_json(),
                    "result": self.statuses[i].to_json(),
                }),
            );
        }
        json!({
            "group": self.group,
            "formula": self.formula,
            "params": self.params.to_string(),
            "quantities": Value::Object(quantities),
            "spectrumNotes": self.spectrum_notes,
            "consistency": self.consistency.to_json(),
            "evidence": self.evidence.to_json(),
        })
    }
}

fn kind_name(q: Quantity) -> &'static str {
    match q {
        Quantity::E => "adjacency",
        Quantity::LE => "Laplacian",
        Quantity::LEplus => "signless Laplacian",
    }
}

/// Checks the printed spectra (if any) against the vertex count and the
/// computed spectra. Returns notes, the printed-spectrum energies, and the
/// consistency verdict.
fn printed_spectra_check(
    id: &str,
    params: &Params,
    computed: &[ExactSpectrum; 3],
    energies: &[ExactOrInterval; 3],
    graph: &CommutingGraph,
    width: &BigRational,
) -> Result<(Vec<String>, Option<[ExactOrInterval; 3]>, Option<bool>)> {
    let printed = match predicted_spectra(id, params) {
        Ok(p) => p,
        Err(Error::NoPrintedSpectra(_)) | Err(Error::Inapplicable { .. }) => return Ok((Vec::new(), None, None)),
        Err(e) => return Err(e),
    };
    let n = graph.vertex_count() as i64;
    let mut notes = Vec::new();
    for q in Quantity::ALL {
        let dim = printed[q.index()].dimension();
        if dim != n {
            notes.push(format!(
                "printed {} multiplicities sum to {dim}, but |v| = {n}",
                kind_name(q)
            ));
        } else if !printed[q.index()].same_multiset(&computed[q.index()]) {
            notes.push(format!("printed {} spectrum differs from the computed one", kind_name(q)));
        }
    }
    if printed.iter().any(|s| s.dimension() != n) {
        return Ok((notes, None, None));
    }
    let mean = mean_degree(graph)?;
    let from_printed = energies_from_spectra(&printed, &mean, width);
    let mut consistent = true;
    for q in Quantity::ALL {
        let i = q.index();
        if printed[i].same_multiset(&computed[i]) {
            let a = &from_printed[i];
            let b = &energies[i];
            let agree = match (a.exact(), b.exact()) {
                (Some(x), Some(y)) => x == y,
                _ => a.overlaps(b.lo(), b.hi()),
            };
            consistent &= agree;
        }
    }
    Ok((notes, Some(from_printed), Some(consistent)))
}

/// Verifies one (group, formula) pairing with default options.
pub fn verify_group(spec: &GroupFamilySpec, id: &str) -> Result<VerificationRecord> {
    verify_group_with(spec, id, &VerifyOptions::default())
}

pub fn verify_group_with(spec: &GroupFamilySpec, id: &str, opts: &VerifyOptions) -> Result<VerificationRecord> {
    let group = spec.build(opts.max_order)?;
    let params = bind(id, spec, &group)?;
    let prediction = evaluate(id, &params)?;

    let graph = CommutingGraph::new(&group)?;
    let (path, spectra) = spectra_for(&graph, PathChoice::Auto)?;
    let mean = mean_degree(&graph)?;
    let width = &opts.tolerance;
    let [energy, laplacian_energy, signless_energy] = energies_from_spectra(&spectra, &mean, width);
    let computed = EnergyReport {
        energy,
        laplacian_energy,
        signless_energy,
        mean_degree: mean,
        vertices: graph.vertex_count(),
        edges: graph.edge_count(),
        path,
    };

    let mut consistency = Consistency::default();
    if path == SpectrumPath::CliqueUnion && graph.vertex_count() <= EXACT_DIM_CAP {
        let (_, general) = spectra_for(&graph, PathChoice::Force(SpectrumPath::General))?;
        consistency.fast_vs_general = Some(spectra.iter().zip(&general).all(|(a, b)| a.same_multiset(b)));
    }
    let matrices = graph.matrices();
    for (i, m) in [&matrices.adjacency, &matrices.laplacian, &matrices.signless].into_iter().enumerate() {
        consistency.float_oracle[i] = match float_eigensolve(m) {
            Ok(f) => Some(spectra[i].agrees_with_float(&f, FLOAT_TOLERANCE)),
            Err(Error::DimensionCap { .. }) => None,
            Err(e) => return Err(e),
        };
    }

    let triple = computed.triple();
    let statuses = [0, 1, 2].map(|i| compare(&prediction.values[i], triple[i], width));
    let energies = [triple[0].clone(), triple[1].clone(), triple[2].clone()];
    let (spectrum_notes, printed_spectrum_energies, printed_ok) =
        printed_spectra_check(id, &params, &spectra, &energies, &graph, width)?;
    consistency.printed_spectra = printed_ok;

    Ok(VerificationRecord {
        group: spec.to_string(),
        formula: prediction.id,
        params: prediction.params,
        cases: prediction.cases,
        predicted: prediction.values,
        statuses,
        spectrum_notes,
        evidence: Evidence {
            cliques: graph.clique_decomposition().map(|s| format_cliques(&s)),
            vertices: computed.vertices,
            edges: computed.edges,
            spectra,
            printed_spectrum_energies,
        },
        computed,
        consistency,
    })
}
