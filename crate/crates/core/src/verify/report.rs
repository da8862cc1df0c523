//! Errata grouping and JSON/CSV serialization of verification runs.

use serde_json::{json, Value};

use super::{ScanResult, VerificationRecord};
use crate::formulas::{registry, Quantity};
use crate::Result;

/// One mismatching record for a given formula and quantity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ErrataItem {
    pub group: String,
    pub params: String,
    pub case: String,
    pub predicted: String,
    pub computed: String,
    pub delta: String,
    pub cliques: Option<String>,
    /// Computed spectrum of the matrix behind the quantity.
    pub spectrum: Value,
    /// The same energy recomputed from the printed spectrum, when available.
    pub from_printed_spectrum: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ErrataEntry {
    pub formula: String,
    pub quantity: Quantity,
    pub items: Vec<ErrataItem>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ErrataReport {
    pub entries: Vec<ErrataEntry>,
    /// `(group, formula, note)` for printed spectra that disagree with the graph.
    pub spectrum_notes: Vec<(String, String, String)>,
    /// `(group, formula, failure)` for records excluded from the errata.
    pub inconsistencies: Vec<(String, String, String)>,
}

impl ErrataReport {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty() && self.spectrum_notes.is_empty()
    }

    pub fn entry(&self, formula: &str, quantity: Quantity) -> Option<&ErrataEntry> {
        self.entries.iter().find(|e| e.formula == formula && e.quantity == quantity)
    }

    pub fn notes_for(&self, formula: &str) -> impl Iterator<Item = &(String, String, String)> {
        let formula = formula.to_string();
        self.spectrum_notes.iter().filter(move |n| n.1 == formula)
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .entries
            .iter()
            .map(|e| {
                json!({
                    "formula": e.formula,
                    "quantity": e.quantity.name(),
                    "items": e.items.iter().map(|i| json!({
                        "group": i.group,
                        "params": i.params,
                        "case": i.case,
                        "predicted": i.predicted,
                        "computed": i.computed,
                        "delta": i.delta,
                        "cliques": i.cliques,
                        "spectrum": i.spectrum,
                        "fromPrintedSpectrum": i.from_printed_spectrum,
                    })).collect::<Vec<_>>(),
                })
            })
            .collect();
        let triples = |v: &[(String, String, String)], key: &str| -> Vec<Value> {
            v.iter()
                .map(|(g, f, n)| json!({ "group": g, "formula": f, key: n }))
                .collect()
        };
        json!({
            "mismatches": entries,
            "spectrumNotes": triples(&self.spectrum_notes, "note"),
            "inconsistencies": triples(&self.inconsistencies, "failure"),
        })
    }
}

/// Groups mismatches by formula and quantity, in registry order. Records
/// failing an internal cross-check are listed separately and never counted
/// as errata.
pub fn errata_report(records: &[VerificationRecord]) -> ErrataReport {
    let mut report = ErrataReport::default();
    let (good, bad): (Vec<_>, Vec<_>) = records.iter().partition(|r| r.consistency.is_consistent());
    for r in bad {
        for f in r.consistency.failures() {
            report.inconsistencies.push((r.group.clone(), r.formula.to_string(), f));
        }
    }
    for entry in registry() {
        let mine: Vec<&&VerificationRecord> = good.iter().filter(|r| r.formula == entry.id).collect();
        for q in Quantity::ALL {
            let i = q.index();
            let items: Vec<ErrataItem> = mine
                .iter()
                .filter_map(|r| {
                    let delta = r.statuses[i].delta()?;
                    Some(ErrataItem {
                        group: r.group.clone(),
                        params: r.params.to_string(),
                        case: r.cases[i].clone(),
                        predicted: r.predicted[i].to_text(),
                        computed: r.computed.triple()[i].to_text(),
                        delta: delta.to_text(),
                        cliques: r.evidence.cliques.clone(),
                        spectrum: r.evidence.spectra[i].to_json(),
                        from_printed_spectrum: r
                            .evidence
                            .printed_spectrum_energies
                            .as_ref()
                            .map(|t| t[i].to_text()),
                    })
                })
                .collect();
            if !items.is_empty() {
                report.entries.push(ErrataEntry { formula: entry.id.to_string(), quantity: q, items });
            }
        }
        for r in &mine {
            for n in &r.spectrum_notes {
                report.spectrum_notes.push((r.group.clone(), r.formula.to_string(), n.clone()));
            }
        }
    }
    report
}

/// The full run as pretty JSON: records, skipped pairings and errata.
pub fn json_report(result: &ScanResult) -> String {
    let value = json!({
        "records": result.records.iter().map(VerificationRecord::to_json).collect::<Vec<_>>(),
        "skipped": result.skipped.iter().map(|s| s.to_json()).collect::<Vec<_>>(),
        "errata": errata_report(&result.records).to_json(),
    });
    let mut text = serde_json::to_string_pretty(&value).expect("JSON values serialize");
    text.push('\n');
    text
}

/// One CSV row per record and quantity. Rationals are `num/den`, intervals `lo..hi`.
pub fn csv_report(records: &[VerificationRecord]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| crate::Error::InvalidParameters(format!("csv: {e}"));
    w.write_record([
        "group", "formula", "params", "quantity", "case", "predicted", "computed", "status", "delta",
        "consistent",
    ])
    .map_err(io)?;
    for r in records {
        for q in Quantity::ALL {
            let i = q.index();
            let params = r.params.to_string();
            let predicted = r.predicted[i].to_text();
            let computed = r.computed.triple()[i].to_text();
            let delta = r.statuses[i].delta().map(|d| d.to_text()).unwrap_or_default();
            let consistent = r.consistency.is_consistent().to_string();
            w.write_record([
                r.group.as_str(),
                r.formula,
                params.as_str(),
                q.name(),
                r.cases[i].as_str(),
                predicted.as_str(),
                computed.as_str(),
                r.statuses[i].name(),
                delta.as_str(),
                consistent.as_str(),
            ])
            .map_err(io)?;
        }
    }
    let bytes = w.into_inner().map_err(|e| crate::Error::InvalidParameters(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::GroupFamilySpec;
    use crate::verify::{run_pairs, VerifyOptions};

    fn run(pairs: &[(&str, &str)]) -> ScanResult {
        let pairs: Vec<(GroupFamilySpec, String)> =
            pairs.iter().map(|(g, f)| (g.parse().unwrap(), f.to_string())).collect();
        run_pairs(&pairs, &VerifyOptions::default())
    }

    #[test]
    fn clean_formulas_have_empty_errata() {
        let r = run(&[
            ("elementary:p=2,z=4", "F2"),
            ("elementary:p=3,z=3", "F2"),
            ("dihedral:m=4", "F13"),
            ("m16", "F13"),
            ("dicyclic:m=2", "F17"),
            ("sg16_3", "F17"),
        ]);
        assert_eq!(r.records.len(), 6);
        let report = errata_report(&r.records);
        assert!(report.is_empty(), "{:?}", report);
        assert!(report.inconsistencies.is_empty());
    }

    #[test]
    fn gl2_energy_appears() {
        let r = run(&[("gl2:p=3,n=1", "F11"), ("gl2:p=2,n=2", "F11")]);
        let report = errata_report(&r.records);
        let e = report.entry("F11", Quantity::E).expect("F11 E entry");
        assert_eq!(e.items.len(), 2);
        assert_eq!(e.items[0].computed, "66");
        assert_eq!(e.items[0].predicted, "21/2");
        assert_eq!(e.items[0].cliques.as_deref(), Some("6K2 + 4K4 + 3K6"));
    }

    #[test]
    fn frobenius_multiplicity_note() {
        let r = run(&[("pq:p=3,q=7", "F8")]);
        let report = errata_report(&r.records);
        assert!(report.notes_for("F8").any(|n| n.2.contains("adjacency") && n.2.contains("sum to 21")));
    }

    #[test]
    fn csv_and_json_are_stable() {
        let r = run(&[("dihedral:m=3", "F6"), ("s4", "F19")]);
        let csv = csv_report(&r.records).unwrap();
        assert_eq!(csv.lines().count(), 1 + 6);
        assert!(csv.lines().nth(1).unwrap().starts_with("dihedral:m=3,F6,m=3,E,"));
        assert!(csv.contains(".."));
        let again = run(&[("dihedral:m=3", "F6"), ("s4", "F19")]);
        assert_eq!(json_report(&r), json_report(&again));
        assert_eq!(csv, csv_report(&again.records).unwrap());
    }
}
