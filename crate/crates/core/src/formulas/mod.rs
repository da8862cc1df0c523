//! Registry of printed closed-form energy formulas, evaluable exactly.
//!
//! Every entry stores its right-hand sides and case conditions as text in a
//! small expression language (see [`expr`]), so the registry can be audited
//! against the printed statements line by line.

pub mod expr;
mod registry;

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use serde_json::{json, Value};

use crate::commgraph::MatrixKind;
use crate::groups::GroupFamilySpec;
use crate::rational;
use crate::spectra::{Eigenvalue, ExactSpectrum};
use crate::{Error, Result};

pub use expr::{Env, Expr, Surd};

/// One of the three energies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Quantity {
    E,
    LE,
    LEplus,
}

impl Quantity {
    pub const ALL: [Quantity; 3] = [Quantity::E, Quantity::LE, Quantity::LEplus];

    pub fn name(self) -> &'static str {
        match self {
            Quantity::E => "E",
            Quantity::LE => "LE",
            Quantity::LEplus => "LEplus",
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }

    /// The matrix whose spectrum feeds this energy.
    pub fn kind(self) -> MatrixKind {
        match self {
            Quantity::E => MatrixKind::Adjacency,
            Quantity::LE => MatrixKind::Laplacian,
            Quantity::LEplus => MatrixKind::Signless,
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A printed case: condition and right-hand side. The condition `otherwise`
/// holds when no earlier case of the same quantity does.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Case {
    pub when: &'static str,
    pub value: &'static str,
}

/// `(eigenvalue, multiplicity)` pairs as printed.
pub type SpectrumLiteral = &'static [(&'static str, &'static str)];

/// Values printed for one specific group inside a set-valued result.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroupRow {
    pub name: &'static str,
    /// Descriptors of the group (any of them selects the row).
    pub groups: &'static [&'static str],
    pub values: [&'static str; 3],
    pub spectra: Option<[SpectrumLiteral; 3]>,
}

impl GroupRow {
    pub fn matches(&self, spec: &GroupFamilySpec) -> bool {
        self.groups
            .iter()
            .any(|d| d.parse::<GroupFamilySpec>().map(|s| &s == spec).unwrap_or(false))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FormulaEntry {
    pub id: &'static str,
    /// Which printed result this is.
    pub statement: &'static str,
    /// A verbatim fragment of the printed statement.
    pub quote: &'static str,
    pub params: &'static [&'static str],
    /// Applicability predicate over the parameters.
    pub domain: &'static str,
    /// Cases for E, LE and LE+.
    pub cases: [&'static [Case]; 3],
    /// Set-valued results list every printed value per quantity.
    pub value_sets: Option<[&'static [&'static str]; 3]>,
    /// Printed adjacency, Laplacian and signless Laplacian spectra.
    pub spectra: Option<[SpectrumLiteral; 3]>,
    pub rows: &'static [GroupRow],
    pub notes: &'static [&'static str],
}

impl FormulaEntry {
    pub fn row_for(&self, spec: &GroupFamilySpec) -> Option<&'static GroupRow> {
        self.rows.iter().find(|r| r.matches(spec))
    }

    pub fn has_printed_spectra(&self) -> bool {
        self.spectra.is_some() || self.rows.iter().any(|r| r.spectra.is_some())
    }
}

pub fn registry() -> &'static [FormulaEntry] {
    &registry::REGISTRY
}

/// Case-insensitive lookup by id.
pub fn lookup(id: &str) -> Result<&'static FormulaEntry> {
    registry()
        .iter()
        .find(|e| e.id.eq_ignore_ascii_case(id.trim()))
        .ok_or_else(|| Error::UnknownFormula(id.to_string()))
}

/// Parameter bindings: integer variables and, for set-valued results with
/// per-group rows, an optional group descriptor.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params {
    pub vars: Env,
    pub group: Option<GroupFamilySpec>,
}

impl Params {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: &str, value: i64) -> Self {
        self.vars.insert(name.to_string(), value);
        self
    }

    pub fn with_group(mut self, spec: GroupFamilySpec) -> Self {
        self.group = Some(spec);
        self
    }

    /// Parses `name=value` items; `group=<descriptor>` selects a row.
    pub fn parse<S: AsRef<str>>(items: &[S]) -> Result<Self> {
        let mut out = Params::new();
        for item in items {
            let item = item.as_ref();
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| Error::parse(item, "expected name=value"))?;
            let (k, v) = (k.trim(), v.trim());
            if k == "group" {
                out.group = Some(v.parse()?);
            } else {
                let x = v
                    .parse()
                    .map_err(|_| Error::parse(item, "parameter values must be integers"))?;
                out.vars.insert(k.to_string(), x);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.vars.iter().map(|(k, v)| format!("{k}={v}")).collect();
        if let Some(g) = &self.group {
            parts.push(format!("group={g}"));
        }
        f.write_str(&parts.join(","))
    }
}

/// A predicted energy: one printed value or a printed set of values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Predicted {
    Single(Surd),
    Set(Vec<Surd>),
}

impl Predicted {
    pub fn single(&self) -> Option<&Surd> {
        match self {
            Predicted::Single(s) => Some(s),
            Predicted::Set(_) => None,
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            Predicted::Single(s) => s.to_string(),
            Predicted::Set(v) => {
                let items: Vec<String> = v.iter().map(Surd::to_string).collect();
                format!("{{{}}}", items.join("; "))
            }
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Predicted::Single(s) => surd_json(s),
            Predicted::Set(v) => json!({ "oneOf": v.iter().map(surd_json).collect::<Vec<_>>() }),
        }
    }
}

fn surd_json(s: &Surd) -> Value {
    match s.as_rational() {
        Some(q) => json!({ "exact": rational::to_text(&q) }),
        None => {
            let (lo, hi) = s.enclosure(&surd_width());
            json!({ "surd": s.to_string(), "lo": rational::to_text(&lo), "hi": rational::to_text(&hi) })
        }
    }
}

/// Width of the rational enclosures attached to surd values.
pub fn surd_width() -> BigRational {
    rational::ratio(1, 1_000_000_000_000)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaPrediction {
    pub id: &'static str,
    pub params: Params,
    /// Condition text of the chosen case, per quantity.
    pub cases: [String; 3],
    pub values: [Predicted; 3],
}

impl FormulaPrediction {
    pub fn value(&self, q: Quantity) -> &Predicted {
        &self.values[q.index()]
    }

    pub fn to_json(&self) -> Value {
        let mut quantities = serde_json::Map::new();
        for q in Quantity::ALL {
            quantities.insert(
                q.name().to_string(),
                json!({ "case": self.cases[q.index()], "value": self.values[q.index()].to_json() }),
            );
        }
        json!({
            "id": self.id,
            "params": self.params.to_string(),
            "predictions": Value::Object(quantities),
        })
    }
}

fn check_domain(entry: &FormulaEntry, params: &Params) -> Result<()> {
    let inapplicable = |reason: String| Error::Inapplicable { id: entry.id.to_string(), reason };
    if let Some(missing) = entry.params.iter().find(|p| !params.vars.contains_key(**p)) {
        // F15 only needs `m` on its dihedral branch.
        let needed = Expr::parse(entry.domain)?.truth(&params.vars).is_err();
        if needed {
            return Err(inapplicable(format!("missing parameter `{missing}`")));
        }
    }
    if let Some(extra) = params.vars.keys().find(|k| !entry.params.contains(&k.as_str())) {
        return Err(inapplicable(format!("unexpected parameter `{extra}`")));
    }
    let ok = Expr::parse(entry.domain)?
        .truth(&params.vars)
        .map_err(|e| inapplicable(e.to_string()))?;
    if !ok {
        return Err(inapplicable(format!("{} fails `{}`", params, entry.domain)));
    }
    Ok(())
}

/// Index of the case that applies, honouring `otherwise`.
pub fn select_case(cases: &[Case], env: &Env) -> Result<Option<usize>> {
    for (i, c) in cases.iter().enumerate() {
        if c.when == "otherwise" || Expr::parse(c.when)?.truth(env)? {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

fn literal_set(values: &[&str]) -> Result<Vec<Surd>> {
    values.iter().map(|v| expr::eval_number(v, &Env::new())).collect()
}

/// Evaluates an entry's printed right-hand sides for the given parameters.
pub fn evaluate(id: &str, params: &Params) -> Result<FormulaPrediction> {
    let entry = lookup(id)?;
    if let Some(spec) = &params.group {
        let row = entry.row_for(spec).ok_or_else(|| Error::Inapplicable {
            id: entry.id.to_string(),
            reason: format!("no printed row for {spec}"),
        })?;
        let values = [
            Predicted::Single(expr::eval_number(row.values[0], &Env::new())?),
            Predicted::Single(expr::eval_number(row.values[1], &Env::new())?),
            Predicted::Single(expr::eval_number(row.values[2], &Env::new())?),
        ];
        let case = format!("row {}", row.name);
        return Ok(FormulaPrediction {
            id: entry.id,
            params: params.clone(),
            cases: [case.clone(), case.clone(), case],
            values,
        });
    }
    check_domain(entry, params)?;
    if let Some(sets) = entry.value_sets {
        return Ok(FormulaPrediction {
            id: entry.id,
            params: params.clone(),
            cases: ["value set".into(), "value set".into(), "value set".into()],
            values: [
                Predicted::Set(literal_set(sets[0])?),
                Predicted::Set(literal_set(sets[1])?),
                Predicted::Set(literal_set(sets[2])?),
            ],
        });
    }
    let mut cases: [String; 3] = Default::default();
    let mut values = Vec::with_capacity(3);
    for q in Quantity::ALL {
        let list = entry.cases[q.index()];
        let i = select_case(list, &params.vars)?.ok_or_else(|| Error::CaseGap {
            id: entry.id.to_string(),
            quantity: q.name().to_string(),
            params: params.to_string(),
        })?;
        cases[q.index()] = list[i].when.to_string();
        values.push(Predicted::Single(expr::eval_number(list[i].value, &params.vars)?));
    }
    let values: [Predicted; 3] = values.try_into().expect("three quantities");
    Ok(FormulaPrediction { id: entry.id, params: params.clone(), cases, values })
}

fn build_spectrum(kind: MatrixKind, literal: SpectrumLiteral, env: &Env) -> Result<ExactSpectrum> {
    let mut entries: Vec<(Eigenvalue, i64)> = Vec::new();
    let mut integers: BTreeMap<i64, i64> = BTreeMap::new();
    for (value, mult) in literal {
        let v = expr::eval_number(value, env)?.to_eigenvalue()?;
        let m = expr::eval_number(mult, env)?
            .as_rational()
            .filter(|q| q.is_integer())
            .and_then(|q| num_traits::ToPrimitive::to_i64(&q.to_integer()))
            .ok_or_else(|| Error::Expr(format!("multiplicity `{mult}` is not an integer")))?;
        match v {
            Eigenvalue::Integer(k) => *integers.entry(k).or_insert(0) += m,
            other => entries.push((other, m)),
        }
    }
    entries.extend(integers.into_iter().map(|(k, m)| (Eigenvalue::Integer(k), m)));
    entries.sort_by(|a, b| b.0.midpoint().cmp(&a.0.midpoint()));
    Ok(ExactSpectrum::new(kind, entries))
}

/// The printed spectra for the given parameters (or group row), with the
/// printed multiplicities kept even when they do not add up.
pub fn predicted_spectra(id: &str, params: &Params) -> Result<[ExactSpectrum; 3]> {
    let entry = lookup(id)?;
    let literal = match &params.group {
        Some(spec) => entry.row_for(spec).and_then(|r| r.spectra),
        None => {
            if entry.spectra.is_some() {
                check_domain(entry, params)?;
            }
            entry.spectra
        }
    };
    let literal = literal.ok_or_else(|| Error::NoPrintedSpectra(entry.id.to_string()))?;
    Ok([
        build_spectrum(MatrixKind::Adjacency, literal[0], &params.vars)?,
        build_spectrum(MatrixKind::Laplacian, literal[1], &params.vars)?,
        build_spectrum(MatrixKind::Signless, literal[2], &params.vars)?,
    ])
}
