//! Witness suite, parallel scanning and the super-integrality census.

use rayon::prelude::*;
use serde_json::{json, Value};

use super::{verify_group_with, VerificationRecord, VerifyOptions};
use crate::formulas::registry;
use crate::groups::GroupFamilySpec;
use crate::spectra::integrality_flags;
use crate::Result;

/// A pairing that was not verified, and why.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Skipped {
    pub group: String,
    pub formula: String,
    pub reason: String,
}

impl Skipped {
    pub fn to_json(&self) -> Value {
        json!({ "group": self.group, "formula": self.formula, "reason": self.reason })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScanResult {
    pub records: Vec<VerificationRecord>,
    pub skipped: Vec<Skipped>,
}

impl ScanResult {
    pub fn is_consistent(&self) -> bool {
        self.records.iter().all(|r| r.consistency.is_consistent())
    }
}

/// Verifies every pairing in parallel; output order follows `pairs`.
pub fn run_pairs(pairs: &[(GroupFamilySpec, String)], opts: &VerifyOptions) -> ScanResult {
    let outcomes: Vec<_> = pairs
        .par_iter()
        .map(|(spec, id)| verify_group_with(spec, id, opts))
        .collect();
    let mut result = ScanResult::default();
    for ((spec, id), outcome) in pairs.iter().zip(outcomes) {
        match outcome {
            Ok(r) => result.records.push(r),
            Err(e) => result.skipped.push(Skipped {
                group: spec.to_string(),
                formula: id.clone(),
                reason: e.to_string(),
            }),
        }
    }
    result
}

/// One formula over a family of witnesses, in the order given.
pub fn scan_family(specs: &[GroupFamilySpec], id: &str, opts: &VerifyOptions) -> ScanResult {
    let pairs: Vec<_> = specs.iter().map(|s| (s.clone(), id.to_string())).collect();
    run_pairs(&pairs, opts)
}

fn specs(descriptors: &[&str]) -> Vec<GroupFamilySpec> {
    descriptors
        .iter()
        .map(|d| d.parse().unwrap_or_else(|e| panic!("suite descriptor {d}: {e}")))
        .collect()
}

/// The six order-16 groups with four centralizers.
pub const ORDER16: [&str; 6] = [
    "product:inner=dihedral:m=4,k=2",
    "product:inner=dicyclic:m=2,k=2",
    "m16",
    "z4z4",
    "d8z4",
    "sg16_3",
];

fn witnesses(id: &str) -> Vec<GroupFamilySpec> {
    let mut out: Vec<String> = Vec::new();
    let mut push = |s: String| out.push(s);
    match id {
        "F1" => {
            push("suzuki2".into());
            for k in [2, 3, 5] {
                push(format!("product:inner=suzuki2,k={k}"));
            }
        }
        "F2" => {
            for p in [2, 3, 5] {
                for c in 1..=3 {
                    push(format!("elementary:p={p},z={}", c * p));
                }
            }
        }
        "F3" => {
            for d in ["dihedral:m=4", "dicyclic:m=2", "hanakiV:p=3,n=1", "hanakiV:p=5,n=1"] {
                push(d.into());
            }
        }
        "F4" => {
            for m in 3..=8 {
                push(format!("dihedral:m={m}"));
            }
            for m in 3..=5 {
                push(format!("dicyclic:m={m}"));
            }
            push("product:inner=dihedral:m=3,k=2".into());
            push("product:inner=dihedral:m=5,k=3".into());
        }
        "F5" => {
            for (m, n) in [(3, 1), (3, 2), (4, 1), (5, 1), (5, 2), (6, 2)] {
                push(format!("metacyclic:m={m},n={n}"));
            }
        }
        "F6" => {
            for m in 3..=10 {
                push(format!("dihedral:m={m}"));
            }
        }
        "F7" => {
            for m in 2..=6 {
                push(format!("dicyclic:m={m}"));
            }
        }
        "F8" => {
            for (p, q) in [(2, 3), (2, 5), (2, 7), (3, 7), (5, 11), (3, 13)] {
                push(format!("pq:p={p},q={q}"));
            }
        }
        "F9" => {
            for n in 4..=6 {
                push(format!("quasidihedral:n={n}"));
            }
        }
        "F10" => {
            for k in 2..=3 {
                push(format!("psl2:k={k}"));
            }
        }
        "F11" => {
            for (p, n) in [(3, 1), (2, 2), (5, 1)] {
                push(format!("gl2:p={p},n={n}"));
            }
        }
        "F12a" => {
            for n in 2..=3 {
                push(format!("hanakiU:n={n}"));
            }
        }
        "F12b" => {
            for (p, n) in [(2, 1), (3, 1), (2, 2), (5, 1)] {
                push(format!("hanakiV:p={p},n={n}"));
            }
        }
        "F13" | "F17" => {
            push("dihedral:m=4".into());
            push("dicyclic:m=2".into());
            ORDER16.iter().for_each(|d| push(d.to_string()));
        }
        "F14" | "F16" => {
            push("dihedral:m=4".into());
            push("dicyclic:m=2".into());
            ORDER16.iter().for_each(|d| push(d.to_string()));
            push("hanakiV:p=3,n=1".into());
            push("hanakiV:p=5,n=1".into());
        }
        "F15" => {
            push("dihedral:m=3".into());
            for k in [2, 3] {
                push(format!("product:inner=dihedral:m=3,k={k}"));
            }
            push("hanakiV:p=3,n=1".into());
        }
        "F18" => {
            for d in [
                "dihedral:m=7",
                "dihedral:m=5",
                "dihedral:m=3",
                "product:inner=dihedral:m=3,k=2",
                "hanakiV:p=3,n=1",
            ] {
                push(d.into());
            }
        }
        "F19" | "F20" => {
            let entry = registry().iter().find(|e| e.id == id).expect("registry entry");
            entry.rows.iter().for_each(|r| push(r.groups[0].to_string()));
        }
        _ => {}
    }
    let refs: Vec<&str> = out.iter().map(String::as_str).collect();
    specs(&refs)
}

/// Every witness pairing, formulas in registry order.
pub fn default_suite() -> Vec<(GroupFamilySpec, String)> {
    registry()
        .iter()
        .flat_map(|e| witnesses(e.id).into_iter().map(move |s| (s, e.id.to_string())))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRow {
    pub group: String,
    pub super_integral: bool,
    /// Integrality of the adjacency, Laplacian and signless spectra.
    pub flags: [bool; 3],
}

impl CensusRow {
    pub fn to_json(&self) -> Value {
        json!({
            "group": self.group,
            "superIntegral": self.super_integral,
            "A": self.flags[0],
            "L": self.flags[1],
            "Q": self.flags[2],
        })
    }
}

pub fn super_integral_census(specs: &[GroupFamilySpec], max_order: usize) -> Result<Vec<CensusRow>> {
    specs
        .par_iter()
        .map(|s| {
            let flags = integrality_flags(&s.build(max_order)?)?;
            Ok(CensusRow { group: s.to_string(), super_integral: flags.iter().all(|&b| b), flags })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas::Quantity;
    use crate::verify::Status;

    #[test]
    fn suite_covers_every_formula() {
        let suite = default_suite();
        for e in registry() {
            assert!(suite.iter().any(|(_, id)| id == e.id), "{}", e.id);
        }
        assert_eq!(suite.iter().filter(|(_, id)| id == "F19").count(), 17);
        assert_eq!(suite.iter().filter(|(_, id)| id == "F20").count(), 7);
    }

    #[test]
    fn dihedral_scan_cardinality() {
        let specs: Vec<GroupFamilySpec> = (3..=10).map(|m| GroupFamilySpec::Dihedral { m }).collect();
        let r = scan_family(&specs, "F6", &VerifyOptions::default());
        assert_eq!(r.records.len(), 8);
        assert!(r.skipped.is_empty());
        assert!(r.is_consistent());
        let groups: Vec<_> = r.records.iter().map(|r| r.group.clone()).collect();
        assert_eq!(groups[0], "dihedral:m=3");
        assert_eq!(groups[7], "dihedral:m=10");
    }

    #[test]
    fn elementary_scan_matches() {
        let specs = specs(&["elementary:p=3,z=3", "elementary:p=3,z=6", "elementary:p=3,z=9"]);
        let r = scan_family(&specs, "F2", &VerifyOptions::default());
        assert_eq!(r.records.len(), 3);
        for rec in &r.records {
            for q in Quantity::ALL {
                assert_eq!(rec.status(q), &Status::ExactMatch, "{} {q:?}", rec.group);
            }
        }
    }

    #[test]
    fn suzuki_products_mismatch_signless() {
        let specs = specs(&[
            "suzuki2",
            "product:inner=suzuki2,k=2",
            "product:inner=suzuki2,k=3",
            "product:inner=suzuki2,k=5",
        ]);
        let r = scan_family(&specs, "F1", &VerifyOptions::default());
        assert_eq!(r.records.len(), 4);
        assert!(!r.records[0].status(Quantity::LEplus).is_mismatch());
        for rec in &r.records[1..] {
            assert!(rec.status(Quantity::LEplus).is_mismatch(), "{}", rec.group);
        }
    }

    #[test]
    fn cap_violations_are_skipped() {
        let opts = VerifyOptions { max_order: 32, ..VerifyOptions::default() };
        let specs = specs(&["dihedral:m=4", "psl2:k=2"]);
        let r = scan_family(&specs, "F13", &opts);
        assert_eq!(r.records.len(), 1);
        assert_eq!(r.skipped.len(), 1);
        assert!(r.skipped[0].reason.contains("cap"));
    }

    #[test]
    fn census_flags() {
        let rows = super_integral_census(&specs(&["sl23", "s4", "dihedral:m=5"]), 2048).unwrap();
        assert!(rows[0].super_integral);
        assert!(!rows[1].super_integral);
        assert!(!rows[1].flags[0]);
        assert!(rows[2].super_integral);
    }
}
