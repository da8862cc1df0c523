use std::fmt::Write as _;

use num_rational::BigRational;
use rayon::prelude::*;
use serde_json::{json, Value};

use commenergy::commgraph::CommutingGraph;
use commenergy::energies::{
    default_tolerance, energy_report_with, EnergyReport, ExactOrInterval, PathChoice, SpectrumPath,
};
use commenergy::formulas::{evaluate, lookup, registry, Params, Predicted, Quantity, Surd};
use commenergy::groups::{FiniteGroup, GroupFamilySpec, QuotientTag};
use commenergy::rational;
use commenergy::spectra::{graph_spectra, ExactSpectrum, DEFAULT_ISOLATION_BITS};
use commenergy::verify::{
    comparison_width, compare, csv_report, default_suite, errata_report, format_cliques, json_report,
    run_pairs, super_integral_census, verify_group_with, Status, VerifyOptions, ORDER16,
};

use crate::{Cli, CliError, Command, FormulasAction, Output, OutputFormat, TableKind, VerifyArgs};

type Outcome = Result<Output, CliError>;

pub fn dispatch(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Group { descriptor } => cmd_group(cli, descriptor),
        Command::Energy { descriptor, path } => cmd_energy(cli, descriptor, path),
        Command::Spectrum { descriptor, kind } => cmd_spectrum(cli, descriptor, kind),
        Command::Graph { descriptor } => cmd_graph(cli, descriptor),
        Command::Formulas { action } => cmd_formulas(cli, action),
        Command::Verify(args) => cmd_verify(cli, args),
        Command::Table { which } => cmd_table(cli, *which),
    }
}

fn unsupported(cli: &Cli, what: &str) -> CliError {
    CliError::Usage(format!("--format {:?} is not available for {what}", cli.format).to_lowercase())
}

fn tolerance(cli: &Cli, fallback: BigRational) -> Result<BigRational, CliError> {
    match &cli.tolerance {
        None => Ok(fallback),
        Some(t) => {
            let q = rational::parse(t)?;
            if q <= BigRational::from_integer(0.into()) {
                return Err(CliError::Usage("--tolerance must be positive".into()));
            }
            Ok(q)
        }
    }
}

fn build(cli: &Cli, descriptor: &str) -> Result<(GroupFamilySpec, FiniteGroup), CliError> {
    let spec: GroupFamilySpec = descriptor.parse()?;
    let g = spec.build(cli.max_order)?;
    Ok((spec, g))
}

fn pretty_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn csv_text(rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.write_record(r).expect("in-memory CSV write");
    }
    String::from_utf8(w.into_inner().expect("in-memory CSV flush")).expect("UTF-8")
}

fn quotient_text(tag: QuotientTag) -> String {
    match tag {
        QuotientTag::ElemAbelianPSquared(p) => format!("Z_{p} x Z_{p}"),
        QuotientTag::Dihedral(m) => format!("D_{}", 2 * m),
        QuotientTag::Suzuki2 => "Sz(2)".into(),
        QuotientTag::Other => "other".into(),
    }
}

fn cmd_group(cli: &Cli, descriptor: &str) -> Outcome {
    let (spec, g) = build(cli, descriptor)?;
    let z = g.center().len();
    let centralizers = g.centralizer_count();
    let pr = rational::to_text(&g.commutativity_degree());
    let quotient = if g.is_abelian() { "trivial".to_string() } else { quotient_text(g.recognize_quotient()) };
    let text = match cli.format {
        OutputFormat::Json => {
            let table: Value = serde_json::from_str(&g.to_json()).expect("group dump is JSON");
            pretty_json(&json!({
                "descriptor": spec.to_string(),
                "order": g.order(),
                "center": z,
                "centralizers": centralizers,
                "commutativityDegree": pr,
                "centralQuotient": quotient,
                "group": table,
            }))
        }
        OutputFormat::Csv => csv_text(&[
            vec!["descriptor", "order", "center", "centralizers", "commutativity_degree", "central_quotient"]
                .into_iter()
                .map(String::from)
                .collect(),
            vec![
                spec.to_string(),
                g.order().to_string(),
                z.to_string(),
                centralizers.to_string(),
                pr,
                quotient,
            ],
        ]),
        OutputFormat::Pretty => {
            let mut s = String::new();
            let _ = writeln!(s, "group          {spec}");
            let _ = writeln!(s, "order          {}", g.order());
            let _ = writeln!(s, "|Z(G)|         {z}");
            let _ = writeln!(s, "centralizers   {centralizers}");
            let _ = writeln!(s, "Pr(G)          {pr}");
            let _ = writeln!(s, "G/Z(G)         {quotient}");
            s
        }
        OutputFormat::Dot => return Err(unsupported(cli, "group")),
    };
    Ok(text.into())
}

fn path_choice(path: &str) -> Result<PathChoice, CliError> {
    match path {
        "auto" => Ok(PathChoice::Auto),
        "clique" => Ok(PathChoice::Force(SpectrumPath::CliqueUnion)),
        "general" => Ok(PathChoice::Force(SpectrumPath::General)),
        other => Err(CliError::Usage(format!("unknown --path `{other}` (auto, clique, general)"))),
    }
}

fn path_name(p: SpectrumPath) -> &'static str {
    match p {
        SpectrumPath::CliqueUnion => "clique-union",
        SpectrumPath::General => "general",
    }
}

fn energy_rows(group: &str, r: &EnergyReport) -> Vec<String> {
    vec![
        group.to_string(),
        r.energy.to_text(),
        r.laplacian_energy.to_text(),
        r.signless_energy.to_text(),
        rational::to_text(&r.mean_degree),
        r.vertices.to_string(),
        r.edges.to_string(),
    ]
}

fn cmd_energy(cli: &Cli, descriptor: &str, path: &str) -> Outcome {
    let choice = path_choice(path)?;
    let tol = tolerance(cli, default_tolerance())?;
    let (spec, g) = build(cli, descriptor)?;
    let report = energy_report_with(&g, &tol, choice)?;
    let text = match cli.format {
        OutputFormat::Json => {
            let mut v = report.to_json();
            v["group"] = json!(spec.to_string());
            v["path"] = json!(path_name(report.path));
            pretty_json(&v)
        }
        OutputFormat::Csv => csv_text(&[
            ["group", "E", "LE", "LEplus", "mean_degree", "vertices", "edges"]
                .into_iter()
                .map(String::from)
                .collect(),
            energy_rows(&spec.to_string(), &report),
        ]),
        OutputFormat::Pretty => {
            let mut s = String::new();
            let _ = writeln!(s, "group     {spec}");
            let _ = writeln!(s, "|v|       {}", report.vertices);
            let _ = writeln!(s, "|e|       {}", report.edges);
            let _ = writeln!(s, "mean deg  {}", rational::to_text(&report.mean_degree));
            let _ = writeln!(s, "E         {}", report.energy);
            let _ = writeln!(s, "LE        {}", report.laplacian_energy);
            let _ = writeln!(s, "LE+       {}", report.signless_energy);
            let _ = writeln!(s, "path      {}", path_name(report.path));
            s
        }
        OutputFormat::Dot => return Err(unsupported(cli, "energy")),
    };
    Ok(text.into())
}

fn cmd_spectrum(cli: &Cli, descriptor: &str, kind: &str) -> Outcome {
    let wanted: Vec<usize> = match kind {
        "all" => vec![0, 1, 2],
        "adjacency" | "A" => vec![0],
        "laplacian" | "L" => vec![1],
        "signless" | "Q" => vec![2],
        other => return Err(CliError::Usage(format!("unknown --kind `{other}`"))),
    };
    let (spec, g) = build(cli, descriptor)?;
    let spectra = graph_spectra(&CommutingGraph::new(&g)?, DEFAULT_ISOLATION_BITS)?;
    const NAMES: [&str; 3] = ["A", "L", "Q"];
    let text = match cli.format {
        OutputFormat::Json => {
            let mut m = serde_json::Map::new();
            m.insert("group".into(), json!(spec.to_string()));
            for &i in &wanted {
                m.insert(NAMES[i].into(), spectra[i].to_json());
            }
            pretty_json(&Value::Object(m))
        }
        OutputFormat::Csv => {
            let mut rows = vec![vec!["kind".to_string(), "eigenvalue".into(), "multiplicity".into()]];
            for &i in &wanted {
                for (v, m) in spectra[i].entries() {
                    rows.push(vec![NAMES[i].into(), v.to_string(), m.to_string()]);
                }
            }
            csv_text(&rows)
        }
        OutputFormat::Pretty => {
            let mut s = String::new();
            for &i in &wanted {
                let _ = writeln!(s, "{}: {}", NAMES[i], spectrum_line(&spectra[i]));
            }
            s
        }
        OutputFormat::Dot => return Err(unsupported(cli, "spectrum")),
    };
    Ok(text.into())
}

fn spectrum_line(s: &ExactSpectrum) -> String {
    s.entries()
        .iter()
        .map(|(v, m)| format!("{v}^{m}"))
        .collect::<Vec<_>>()
        .join(", ")
}

fn cmd_graph(cli: &Cli, descriptor: &str) -> Outcome {
    let (_, g) = build(cli, descriptor)?;
    let gamma = CommutingGraph::new(&g)?;
    let text = match cli.format {
        OutputFormat::Dot => gamma.to_dot(),
        OutputFormat::Json => {
            let mut s = gamma.to_json();
            s.push('\n');
            s
        }
        OutputFormat::Csv => {
            let labels = gamma.labels();
            let mut rows = vec![vec!["u".to_string(), "v".to_string()]];
            for (i, j) in gamma.edge_list() {
                rows.push(vec![labels[i].clone(), labels[j].clone()]);
            }
            csv_text(&rows)
        }
        OutputFormat::Pretty => {
            let mut s = String::new();
            let _ = writeln!(s, "vertices    {}", gamma.vertex_count());
            let _ = writeln!(s, "edges       {}", gamma.edge_count());
            let _ = writeln!(s, "components  {}", gamma.components().len());
            let _ = writeln!(s, "regular     {}", gamma.is_regular());
            let cliques = gamma.clique_decomposition().map(|c| format_cliques(&c));
            let _ = writeln!(s, "cliques     {}", cliques.as_deref().unwrap_or("not a union of cliques"));
            s
        }
    };
    Ok(text.into())
}

fn cmd_formulas(cli: &Cli, action: &FormulasAction) -> Outcome {
    match action {
        FormulasAction::List => {
            let text = match cli.format {
                OutputFormat::Json => pretty_json(&Value::Array(
                    registry()
                        .iter()
                        .map(|e| {
                            json!({
                                "id": e.id,
                                "statement": e.statement,
                                "quote": e.quote,
                                "params": e.params,
                                "domain": e.domain,
                                "rows": e.rows.iter().map(|r| r.name).collect::<Vec<_>>(),
                                "notes": e.notes,
                            })
                        })
                        .collect(),
                )),
                OutputFormat::Csv => {
                    let mut rows = vec![["id", "statement", "params", "domain"].map(String::from).to_vec()];
                    for e in registry() {
                        rows.push(vec![e.id.into(), e.statement.into(), e.params.join(" "), e.domain.into()]);
                    }
                    csv_text(&rows)
                }
                OutputFormat::Pretty => {
                    let mut s = String::new();
                    for e in registry() {
                        let _ = writeln!(s, "{:<5} {}", e.id, e.statement);
                        let _ = writeln!(s, "      params [{}]  domain: {}", e.params.join(", "), e.domain);
                    }
                    s
                }
                OutputFormat::Dot => return Err(unsupported(cli, "formulas")),
            };
            Ok(text.into())
        }
        FormulasAction::Eval { id, params } => {
            let entry = lookup(id)?;
            let params = Params::parse(params)?;
            let p = evaluate(entry.id, &params)?;
            let text = match cli.format {
                OutputFormat::Json => pretty_json(&p.to_json()),
                OutputFormat::Csv => {
                    let mut rows = vec![["id", "params", "quantity", "case", "value"].map(String::from).to_vec()];
                    for q in Quantity::ALL {
                        rows.push(vec![
                            p.id.into(),
                            p.params.to_string(),
                            q.name().into(),
                            p.cases[q.index()].clone(),
                            p.value(q).to_text(),
                        ]);
                    }
                    csv_text(&rows)
                }
                OutputFormat::Pretty => {
                    let mut s = String::new();
                    let _ = writeln!(s, "{} with {}", p.id, p.params);
                    for q in Quantity::ALL {
                        let _ = writeln!(
                            s,
                            "{:<6} = {}    [{}]",
                            q.name(),
                            p.value(q).to_text(),
                            p.cases[q.index()]
                        );
                    }
                    s
                }
                OutputFormat::Dot => return Err(unsupported(cli, "formulas")),
            };
            Ok(text.into())
        }
    }
}

fn factor_prime_power(q: u64) -> Option<(u64, u32)> {
    let p = (2..=q).find(|d| q % d == 0)?;
    let (mut m, mut e) = (q, 0);
    while m % p == 0 {
        m /= p;
        e += 1;
    }
    (m == 1).then_some((p, e))
}

/// The family a formula is stated for, instantiated at the given parameters.
fn descriptor_for(id: &str, vals: &[(&str, u64)]) -> Result<String, CliError> {
    let get = |name: &str| -> Result<u64, CliError> {
        vals.iter()
            .find(|(n, _)| *n == name)
            .map(|(_, v)| *v)
            .ok_or_else(|| CliError::Usage(format!("{id} needs --{name} (or --family)")))
    };
    let d = match id {
        "F1" => match get("z")? {
            1 => "suzuki2".to_string(),
            c => format!("product:inner=suzuki2,k={c}"),
        },
        "F2" => format!("elementary:p={},z={}", get("p")?, get("z")?),
        "F3" => format!("hanakiV:p={},n=1", get("p")?),
        "F5" => format!("metacyclic:m={},n={}", get("m")?, get("n")?),
        "F6" => format!("dihedral:m={}", get("m")?),
        "F7" => format!("dicyclic:m={}", get("m")?),
        "F8" => format!("pq:p={},q={}", get("p")?, get("q")?),
        "F9" => format!("quasidihedral:n={}", get("n")?),
        "F10" => format!("psl2:k={}", get("k")?),
        "F11" => {
            let q = get("q")?;
            let (p, n) =
                factor_prime_power(q).ok_or_else(|| CliError::Usage(format!("q = {q} is not a prime power")))?;
            format!("gl2:p={p},n={n}")
        }
        "F12a" => format!("hanakiU:n={}", get("n")?),
        "F12b" => format!("hanakiV:p={},n={}", get("p")?, get("n")?),
        _ => return Err(CliError::Usage(format!("{id} needs --family to pick witnesses"))),
    };
    Ok(d)
}

fn combinations<'a>(lists: &[(&'a str, &[u64])]) -> Vec<Vec<(&'a str, u64)>> {
    let mut out: Vec<Vec<(&str, u64)>> = vec![Vec::new()];
    for (name, values) in lists {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                values.iter().map(move |v| {
                    let mut next = prefix.clone();
                    next.push((*name, *v));
                    next
                })
            })
            .collect();
    }
    out
}

fn extend_descriptor(base: &str, vals: &[(&str, u64)]) -> String {
    let mut d = base.to_string();
    for (name, v) in vals {
        let sep = if d.contains(':') { ',' } else { ':' };
        let _ = write!(d, "{sep}{name}={v}");
    }
    d
}

fn verify_pairs(args: &VerifyArgs) -> Result<Vec<(GroupFamilySpec, String)>, CliError> {
    let formulas: Vec<String> = args
        .formula
        .iter()
        .map(|f| lookup(f).map(|e| e.id.to_string()))
        .collect::<Result<_, _>>()?;
    if args.all {
        let suite = default_suite();
        return Ok(if formulas.is_empty() {
            suite
        } else {
            suite.into_iter().filter(|(_, id)| formulas.contains(id)).collect()
        });
    }
    if formulas.is_empty() {
        return Err(CliError::Usage("verify needs --formula or --all".into()));
    }
    let lists: Vec<(&str, &[u64])> = [
        ("m", &args.m),
        ("n", &args.n),
        ("p", &args.p),
        ("q", &args.q),
        ("k", &args.k),
        ("z", &args.z),
    ]
    .into_iter()
    .filter(|(_, v)| !v.is_empty())
    .map(|(n, v)| (n, v.as_slice()))
    .collect();
    let mut pairs = Vec::new();
    for id in &formulas {
        if args.family.is_none() && lists.is_empty() {
            pairs.extend(default_suite().into_iter().filter(|(_, f)| f == id));
            continue;
        }
        for combo in combinations(&lists) {
            let d = match &args.family {
                Some(base) => extend_descriptor(base, &combo),
                None => descriptor_for(id, &combo)?,
            };
            pairs.push((d.parse::<GroupFamilySpec>()?, id.clone()));
        }
    }
    Ok(pairs)
}

fn status_cell(s: &Status) -> String {
    match s {
        Status::Mismatch(d) => format!("Mismatch({})", d.to_text()),
        other => other.name().to_string(),
    }
}

fn cmd_verify(cli: &Cli, args: &VerifyArgs) -> Outcome {
    let pairs = verify_pairs(args)?;
    let opts = VerifyOptions { max_order: cli.max_order, tolerance: tolerance(cli, comparison_width())? };
    let result = run_pairs(&pairs, &opts);
    let text = match cli.format {
        OutputFormat::Json => json_report(&result),
        OutputFormat::Csv => csv_report(&result.records)?,
        OutputFormat::Pretty => {
            let mut s = String::new();
            for r in &result.records {
                let _ = writeln!(
                    s,
                    "{:<5} {:<34} {:<18} E: {}  LE: {}  LE+: {}",
                    r.formula,
                    r.group,
                    r.params.to_string(),
                    status_cell(&r.statuses[0]),
                    status_cell(&r.statuses[1]),
                    status_cell(&r.statuses[2]),
                );
            }
            for sk in &result.skipped {
                let _ = writeln!(s, "skipped {} on {}: {}", sk.formula, sk.group, sk.reason);
            }
            let report = errata_report(&result.records);
            let _ = writeln!(
                s,
                "\n{} records, {} with mismatches, {} skipped",
                result.records.len(),
                result.records.iter().filter(|r| r.has_mismatch()).count(),
                result.skipped.len()
            );
            for e in &report.entries {
                let _ = writeln!(s, "erratum {} {}:", e.formula, e.quantity.name());
                for i in &e.items {
                    let _ = writeln!(
                        s,
                        "  {} ({}): printed {} computed {} delta {}{}",
                        i.group,
                        i.params,
                        i.predicted,
                        i.computed,
                        i.delta,
                        i.cliques.as_ref().map(|c| format!(" [{c}]")).unwrap_or_default()
                    );
                }
            }
            for (g, f, n) in &report.spectrum_notes {
                let _ = writeln!(s, "spectrum note {f} on {g}: {n}");
            }
            for (g, f, n) in &report.inconsistencies {
                let _ = writeln!(s, "INCONSISTENT {f} on {g}: {n}");
            }
            s
        }
        OutputFormat::Dot => return Err(unsupported(cli, "verify")),
    };
    let failure = (!result.is_consistent()).then(|| {
        let n = result.records.iter().filter(|r| !r.consistency.is_consistent()).count();
        CliError::Inconsistent(format!("{n} record(s) failed an internal cross-check"))
    });
    Ok(Output { text, failure })
}

struct TableRow {
    name: String,
    group: String,
    computed: [ExactOrInterval; 3],
    printed: [String; 3],
    statuses: [Status; 3],
}

fn formula_rows(cli: &Cli, id: &str) -> Result<Vec<TableRow>, CliError> {
    let entry = lookup(id)?;
    let opts = VerifyOptions { max_order: cli.max_order, tolerance: tolerance(cli, comparison_width())? };
    entry
        .rows
        .par_iter()
        .map(|row| {
            let spec: GroupFamilySpec = row.groups[0].parse()?;
            let r = verify_group_with(&spec, id, &opts)?;
            let t = r.computed.triple();
            Ok(TableRow {
                name: row.name.to_string(),
                group: r.group.clone(),
                computed: [t[0].clone(), t[1].clone(), t[2].clone()],
                printed: r.predicted.clone().map(|p| p.to_text()),
                statuses: r.statuses.clone(),
            })
        })
        .collect()
}

fn order16_rows(cli: &Cli) -> Result<Vec<TableRow>, CliError> {
    let width = tolerance(cli, comparison_width())?;
    let printed = Predicted::Single(Surd::integer(18));
    let planar = lookup("F19")?;
    ORDER16
        .par_iter()
        .map(|d| {
            let (spec, g) = build(cli, d)?;
            let r = energy_report_with(&g, &width, PathChoice::Auto)?;
            let t = r.triple();
            let name = planar.row_for(&spec).map_or_else(|| spec.to_string(), |r| r.name.to_string());
            Ok(TableRow {
                name,
                group: spec.to_string(),
                computed: [t[0].clone(), t[1].clone(), t[2].clone()],
                printed: ["18".into(), "18".into(), "18".into()],
                statuses: [0, 1, 2].map(|i| compare(&printed, t[i], &width)),
            })
        })
        .collect()
}

fn render_rows(cli: &Cli, rows: &[TableRow]) -> Result<String, CliError> {
    Ok(match cli.format {
        OutputFormat::Json => pretty_json(&Value::Array(
            rows.iter()
                .map(|r| {
                    let mut m = serde_json::Map::new();
                    m.insert("name".into(), json!(r.name));
                    m.insert("group".into(), json!(r.group));
                    for q in Quantity::ALL {
                        let i = q.index();
                        m.insert(
                            q.name().into(),
                            json!({
                                "computed": r.computed[i].to_json(),
                                "printed": r.printed[i],
                                "result": r.statuses[i].to_json(),
                            }),
                        );
                    }
                    Value::Object(m)
                })
                .collect(),
        )),
        OutputFormat::Csv => {
            let mut out = vec![[
                "name", "group", "E", "E_printed", "E_status", "LE", "LE_printed", "LE_status", "LEplus",
                "LEplus_printed", "LEplus_status",
            ]
            .map(String::from)
            .to_vec()];
            for r in rows {
                let mut row = vec![r.name.clone(), r.group.clone()];
                for i in 0..3 {
                    row.push(r.computed[i].to_text());
                    row.push(r.printed[i].clone());
                    row.push(r.statuses[i].name().into());
                }
                out.push(row);
            }
            csv_text(&out)
        }
        OutputFormat::Pretty => {
            let mut s = String::new();
            let _ = writeln!(s, "{:<12} {:<32} {:<40} {:<40} {}", "group", "descriptor", "E", "LE", "LE+");
            for r in rows {
                let cell = |i: usize| {
                    let mark = if r.statuses[i].is_mismatch() { " !=" } else { " ==" };
                    format!("{}{} {}", r.computed[i], mark, r.printed[i])
                };
                let _ = writeln!(s, "{:<12} {:<32} {:<40} {:<40} {}", r.name, r.group, cell(0), cell(1), cell(2));
            }
            s
        }
        OutputFormat::Dot => return Err(unsupported(cli, "table")),
    })
}

fn cmd_table(cli: &Cli, which: TableKind) -> Outcome {
    let text = match which {
        TableKind::Planar => render_rows(cli, &formula_rows(cli, "F19")?)?,
        TableKind::Toroidal => render_rows(cli, &formula_rows(cli, "F20")?)?,
        TableKind::Order16 => render_rows(cli, &order16_rows(cli)?)?,
        TableKind::SuperintegralCensus => {
            let mut specs: Vec<GroupFamilySpec> = Vec::new();
            for (s, _) in default_suite() {
                if !specs.contains(&s) && s.build(cli.max_order).is_ok_and(|g| !g.is_abelian()) {
                    specs.push(s);
                }
            }
            let rows = super_integral_census(&specs, cli.max_order)?;
            match cli.format {
                OutputFormat::Json => {
                    pretty_json(&Value::Array(rows.iter().map(|r| r.to_json()).collect()))
                }
                OutputFormat::Csv => {
                    let mut out = vec![["group", "super_integral", "A", "L", "Q"].map(String::from).to_vec()];
                    for r in &rows {
                        out.push(vec![
                            r.group.clone(),
                            r.super_integral.to_string(),
                            r.flags[0].to_string(),
                            r.flags[1].to_string(),
                            r.flags[2].to_string(),
                        ]);
                    }
                    csv_text(&out)
                }
                OutputFormat::Pretty => {
                    let mut s = String::new();
                    for r in &rows {
                        let f = |b: bool| if b { "integral" } else { "not integral" };
                        let _ = writeln!(
                            s,
                            "{:<36} {:<5}  A {}, L {}, Q {}",
                            r.group,
                            if r.super_integral { "yes" } else { "no" },
                            f(r.flags[0]),
                            f(r.flags[1]),
                            f(r.flags[2])
                        );
                    }
                    s
                }
                OutputFormat::Dot => return Err(unsupported(cli, "table")),
            }
        }
    };
    Ok(text.into())
}
