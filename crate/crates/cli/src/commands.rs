//! One function per verb. Each returns the rendered payload or the error
//! that decides the exit status.

use std::fmt::Write as _;
use std::path::Path;

use fuzzysoft_core::decision::{hybrid_breakdown, weighted_breakdown, ChoiceBreakdown};
use fuzzysoft_core::topology::{
    is_fuzzy_continuous, is_pu_continuous, FuzzyAxiomViolation, SoftAxiomViolation,
};
use fuzzysoft_core::{
    assess_mean, maji_choice_values, rank, ChoiceValues, Error, FuzzyTopology, GradeDistribution,
    GradeScale, SeparationClass, SoftSet, SoftTopology, Verdict,
};
use serde_json::{json, Map, Value};

use crate::error::{CliError, CliResult};
use crate::formats::{self, Family, LoadedFamily, SoftSetDoc};
use crate::{Format, SoftOp};

fn to_json(value: &Value) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("JSON values serialize");
    out.push('\n');
    out
}

fn pick_scale(flag: Option<&Path>, embedded: Option<GradeScale>) -> CliResult<GradeScale> {
    match flag {
        Some(path) => formats::load_scale(path),
        None => Ok(embedded.unwrap_or_default()),
    }
}

/// Parses `A:3,B:7`; commas and whitespace both separate pairs.
pub fn parse_grade_spec(spec: &str) -> CliResult<GradeDistribution> {
    let counts = spec
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|pair| {
            let (label, count) = pair.split_once(':').ok_or_else(|| {
                CliError::validation(format!(
                    "malformed grade pair `{pair}`, expected label:count"
                ))
            })?;
            let count = count.parse::<u64>().map_err(|_| {
                CliError::validation(format!(
                    "count `{count}` of grade {label} is not a whole number"
                ))
            })?;
            Ok((label.to_string(), count))
        })
        .collect::<CliResult<Vec<_>>>()?;
    if counts.is_empty() {
        return Err(CliError::validation("no grades given"));
    }
    Ok(GradeDistribution::new(counts)?)
}

pub fn assess(grades: &str, scale: Option<&Path>, format: Format) -> CliResult<String> {
    let file = Path::new(grades);
    let dist = if file.is_file() {
        parse_grade_spec(&formats::read_text(file)?).map_err(|e| e.in_file(file))?
    } else {
        parse_grade_spec(grades)?
    };
    let scale = pick_scale(scale, None)?;
    let a = assess_mean(&dist, &scale)?;
    Ok(match format {
        Format::Json => to_json(&json!({
            "mean": [a.mean.lower(), a.mean.upper()],
            "value": a.value,
            "grade": a.grade,
        })),
        Format::Table => format!(
            "mean: [{:.4}, {:.4}]\nvalue: {:.4}\ngrade: {}\n",
            a.mean.lower(),
            a.mean.upper(),
            a.value,
            a.grade
        ),
    })
}

fn render_ranking(groups: &[Vec<String>]) -> String {
    groups
        .iter()
        .map(|g| match g.as_slice() {
            [only] => only.clone(),
            many => format!("{{{}}}", many.join(", ")),
        })
        .collect::<Vec<_>>()
        .join(" > ")
}

fn render_breakdown_line(b: &ChoiceBreakdown) -> String {
    match b.grades {
        Some(i) => format!(
            "  {}: {:.4} + V([{:.4}, {:.4}]) = {:.4}",
            b.alternative,
            b.binary,
            i.lower(),
            i.upper(),
            b.value()
        ),
        None => format!("  {}: {:.4}", b.alternative, b.value()),
    }
}

pub fn decide(
    path: &Path,
    weighted: bool,
    scale: Option<&Path>,
    format: Format,
) -> CliResult<String> {
    let loaded = formats::load_table(path)?;
    let scale = pick_scale(scale, loaded.scale)?;
    let table = loaded.table;
    table
        .validate_grades(&scale)
        .map_err(|e| CliError::from(e).in_file(path))?;

    let (method, breakdown) = if weighted {
        if table.weights().is_none() {
            return Err(CliError::at(
                path,
                "--weighted needs weights on every parameter",
            ));
        }
        ("weighted", Some(weighted_breakdown(&table, &scale)?))
    } else if table.is_binary() {
        ("maji", None)
    } else {
        ("hybrid", Some(hybrid_breakdown(&table, &scale)?))
    };
    let values = match &breakdown {
        Some(rows) => ChoiceValues::new(
            rows.iter()
                .map(|r| (r.alternative.clone(), r.value()))
                .collect(),
        ),
        None => maji_choice_values(&table)?,
    };
    let groups = rank(&values);

    if format == Format::Json {
        let mut doc = Map::new();
        doc.insert("method".into(), json!(method));
        doc.insert(
            "values".into(),
            Value::Object(
                values
                    .iter()
                    .map(|(a, v)| (a.to_string(), json!(v)))
                    .collect(),
            ),
        );
        doc.insert("ranking".into(), json!(groups));
        if let Some(rows) = &breakdown {
            let rows: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "alternative": r.alternative,
                        "binary": r.binary,
                        "grades": r.grades.map(|i| vec![i.lower(), i.upper()]),
                        "value": r.value(),
                    })
                })
                .collect();
            doc.insert("breakdown".into(), Value::Array(rows));
        }
        return Ok(to_json(&Value::Object(doc)));
    }

    let width = table
        .alternatives()
        .iter()
        .map(|a| a.chars().count())
        .max()
        .unwrap_or(0);
    let mut out = format!("method: {method}\n");
    for (alt, v) in values.iter() {
        writeln!(out, "{alt:<width$}  {v:.4}").unwrap();
    }
    writeln!(out, "ranking: {}", render_ranking(&groups)).unwrap();
    if let Some(rows) = breakdown {
        let binary_part = if weighted {
            "weights of the 1 cells"
        } else {
            "count of 1 cells"
        };
        let interval_part = if weighted {
            "weighted sum of grade intervals / 100"
        } else {
            "sum of grade intervals / 100"
        };
        writeln!(
            out,
            "\nvalue = {binary_part} + V({interval_part}), V = interval midpoint:"
        )
        .unwrap();
        for r in &rows {
            writeln!(out, "{}", render_breakdown_line(r)).unwrap();
        }
    }
    Ok(out)
}

fn pair(a: &Path, b: &Path) -> CliResult<(SoftSet, SoftSet)> {
    Ok((formats::load_soft_set(a)?, formats::load_soft_set(b)?))
}

fn render_soft(s: &SoftSet, format: Format) -> String {
    match format {
        Format::Json => to_json(
            &serde_json::to_value(SoftSetDoc::from_soft_set(s)).expect("soft set serializes"),
        ),
        Format::Table => format!("{s}\n"),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn soft(op: &SoftOp, format: Format) -> CliResult<String> {
    match op {
        SoftOp::Union { a, b } => {
            let (x, y) = pair(a, b)?;
            Ok(render_soft(&x.union(&y)?, format))
        }
        SoftOp::Intersect { a, b } => {
            let (x, y) = pair(a, b)?;
            Ok(render_soft(&x.intersect(&y)?, format))
        }
        SoftOp::Complement { a } => Ok(render_soft(
            &formats::load_soft_set(a)?.complement(),
            format,
        )),
        SoftOp::Subsets { a } => {
            let all = formats::load_soft_set(a)?.enumerate_soft_subsets()?;
            Ok(match format {
                Format::Json => to_json(&Value::Array(
                    all.iter()
                        .map(|s| {
                            serde_json::to_value(SoftSetDoc::from_soft_set(s))
                                .expect("soft set serializes")
                        })
                        .collect(),
                )),
                Format::Table => {
                    let width = all.len().to_string().len();
                    let mut out = String::new();
                    for (i, s) in all.iter().enumerate() {
                        writeln!(out, "{:>width$}  {s}", i + 1).unwrap();
                    }
                    out
                }
            })
        }
        SoftOp::Tabular { a } => {
            let m = formats::load_soft_set(a)?.to_matrix();
            Ok(match format {
                Format::Json => to_json(&json!({
                    "rows": m.row_labels(),
                    "columns": m.column_labels(),
                    "bits": m.bits(),
                })),
                Format::Table => formats::render_matrix_csv(&m),
            })
        }
        SoftOp::CheckSubset { a, b } => {
            let (x, y) = pair(a, b)?;
            let subset = x.is_soft_subset(&y)?;
            let proper = x.is_proper_soft_subset(&y)?;
            Ok(match format {
                Format::Json => to_json(&json!({"subset": subset, "proper": proper})),
                Format::Table => format!(
                    "soft subset: {}\nproper soft subset: {}\n",
                    yes_no(subset),
                    yes_no(proper)
                ),
            })
        }
    }
}

fn fuzzy_witness(v: FuzzyAxiomViolation, names: &[String]) -> String {
    match v {
        FuzzyAxiomViolation::MissingEmpty => "empty set absent".into(),
        FuzzyAxiomViolation::MissingUniversal => "universal set absent".into(),
        FuzzyAxiomViolation::UnionNotOpen(i, j) => format!("{} ∪ {} ∉ family", names[i], names[j]),
        FuzzyAxiomViolation::IntersectionNotOpen(i, j) => {
            format!("{} ∩ {} ∉ family", names[i], names[j])
        }
    }
}

fn soft_witness(v: SoftAxiomViolation, names: &[String]) -> String {
    match v {
        SoftAxiomViolation::MissingNull => "null soft set absent".into(),
        SoftAxiomViolation::MissingAbsolute => "absolute soft set absent".into(),
        SoftAxiomViolation::UnionNotOpen(i, j) => format!("{} ∪ {} ∉ family", names[i], names[j]),
        SoftAxiomViolation::IntersectionNotOpen(i, j) => {
            format!("{} ∩ {} ∉ family", names[i], names[j])
        }
    }
}

fn named(e: Error, names: &[String], path: &Path) -> CliError {
    let err = match e {
        Error::DuplicateOpen(i) => {
            CliError::validation(format!("open {} repeats an earlier open", names[i]))
        }
        other => CliError::from(other),
    };
    err.in_file(path)
}

enum Space {
    Fuzzy(FuzzyTopology),
    Soft(SoftTopology),
}

fn build(loaded: LoadedFamily, path: &Path) -> CliResult<(Space, Vec<String>)> {
    let names = loaded.names;
    let space = match loaded.family {
        Family::Fuzzy { universe, opens } => {
            Space::Fuzzy(FuzzyTopology::new(universe, opens).map_err(|e| named(e, &names, path))?)
        }
        Family::Soft {
            universe,
            parameters,
            opens,
        } => Space::Soft(
            SoftTopology::new(universe, parameters, opens).map_err(|e| named(e, &names, path))?,
        ),
    };
    Ok((space, names))
}

fn separation_label(c: SeparationClass) -> &'static str {
    match c {
        SeparationClass::None => "none",
        SeparationClass::T1 => "T1",
        SeparationClass::T2 => "T2",
    }
}

pub fn topology(
    path: &Path,
    separation: bool,
    continuity: Option<(&Path, &Path)>,
    format: Format,
) -> CliResult<String> {
    let (space, names) = build(formats::load_family(path)?, path)?;
    let (kind, witness) = match &space {
        Space::Fuzzy(t) => (
            "fuzzy",
            t.check_axioms()
                .witness()
                .map(|w| fuzzy_witness(*w, &names)),
        ),
        Space::Soft(t) => (
            "soft",
            t.check_axioms().witness().map(|w| soft_witness(*w, &names)),
        ),
    };

    let separation = if separation {
        match &space {
            Space::Fuzzy(t) => Some(separation_label(t.separation_class()?)),
            Space::Soft(_) => {
                return Err(CliError::validation(
                    "--separation applies to fuzzy families only",
                ))
            }
        }
    } else {
        None
    };

    let continuity = match continuity {
        None => None,
        Some((codomain_path, map_path)) => {
            let (target, target_names) =
                build(formats::load_family(codomain_path)?, codomain_path)?;
            let map = formats::load_map(map_path)?;
            let verdict: Verdict<usize> = match (&space, &target) {
                (Space::Fuzzy(tx), Space::Fuzzy(sy)) => {
                    let f = map
                        .point_map(tx.universe(), sy.universe())
                        .map_err(|e| e.in_file(map_path))?;
                    is_fuzzy_continuous(tx, sy, &f)?
                }
                (Space::Soft(tu), Space::Soft(sv)) => {
                    let maps = map
                        .point_parameter_maps(
                            (tu.universe(), tu.parameters()),
                            (sv.universe(), sv.parameters()),
                        )
                        .map_err(|e| e.in_file(map_path))?;
                    is_pu_continuous(tu, sv, &maps)?
                }
                _ => {
                    return Err(CliError::at(
                        codomain_path,
                        "codomain is not of the same kind as the family",
                    ))
                }
            };
            Some(
                verdict
                    .witness()
                    .map(|&i| format!("preimage of {} is not open", target_names[i])),
            )
        }
    };

    if format == Format::Json {
        let mut doc = Map::new();
        doc.insert("kind".into(), json!(kind));
        doc.insert("topology".into(), json!(witness.is_none()));
        if let Some(w) = &witness {
            doc.insert("witness".into(), json!(w));
        }
        if let Some(s) = separation {
            doc.insert("separation".into(), json!(s));
        }
        if let Some(c) = &continuity {
            doc.insert("continuous".into(), json!(c.is_none()));
            if let Some(w) = c {
                doc.insert("continuity_witness".into(), json!(w));
            }
        }
        return Ok(to_json(&Value::Object(doc)));
    }

    let verdict = |w: &Option<String>| match w {
        None => "yes".to_string(),
        Some(w) => format!("no: {w}"),
    };
    let mut out = format!("{kind} topology: {}\n", verdict(&witness));
    if let Some(s) = separation {
        writeln!(out, "separation: {s}").unwrap();
    }
    if let Some(c) = &continuity {
        writeln!(out, "continuous: {}", verdict(c)).unwrap();
    }
    Ok(out)
}
