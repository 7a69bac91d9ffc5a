//! JSON views of library results and the output formats.

use serde_json::{json, Map, Value};

use infinite_cycles::CycleWitness;
use matroid_core::{AxiomReport, GroundSet, Subset, Verdict, Witness};
use matroid_ops::{BaseWitness, SpectrumReport};

pub fn sets(ground: &GroundSet, family: &[Subset]) -> Value {
    json!(family.iter().map(|&s| ground.label_list(s)).collect::<Vec<_>>())
}

fn witness_sets(ground: &GroundSet, w: &Witness) -> Value {
    let l = |s: Subset| json!(ground.label_list(s));
    match *w {
        Witness::EmptyDependent | Witness::NoBase => json!({}),
        Witness::NotDownwardClosed { set, subset } => json!({"set": l(set), "subset": l(subset)}),
        Witness::NoAugmentation { non_maximal, maximal } => json!({"non_maximal": l(non_maximal), "maximal": l(maximal)}),
        Witness::NoExchange { first, second, removed } => {
            json!({"first": l(first), "second": l(second), "removed": ground.label(removed)})
        }
        Witness::NoGrowth { smaller, larger } => json!({"smaller": l(smaller), "larger": l(larger)}),
    }
}

pub fn axioms(ground: &GroundSet, report: &AxiomReport) -> Value {
    let verdicts: Vec<Value> = report
        .verdicts
        .iter()
        .map(|(axiom, v)| match v {
            Verdict::Pass => json!({"axiom": axiom.to_string(), "verdict": "pass"}),
            Verdict::VacuousPass => json!({"axiom": axiom.to_string(), "verdict": "vacuous_pass"}),
            Verdict::Fail(w) => json!({
                "axiom": axiom.to_string(),
                "verdict": "fail",
                "witness": w.describe(ground),
                "sets": witness_sets(ground, w),
            }),
        })
        .collect();
    json!({"system": report.system.code(), "passed": report.passed(), "verdicts": verdicts})
}

pub fn finite_spectrum(ground: &GroundSet, r: &SpectrumReport<BaseWitness>) -> Value {
    let witnesses: Vec<Value> = r
        .witnesses
        .iter()
        .map(|(v, w)| {
            json!({
                "value": v,
                "inner_base": ground.label_list(w.inner_base),
                "outer_base": ground.label_list(w.outer_base),
            })
        })
        .collect();
    json!({
        "values": r.values,
        "witnesses": witnesses,
        "complete_within_bounds": r.complete_within_bounds,
    })
}

pub fn graph_spectrum(r: &SpectrumReport<CycleWitness>) -> Value {
    let witnesses: Vec<Value> = r
        .witnesses
        .iter()
        .map(|(v, w)| json!({"value": v, "base": w.base, "fin_base": w.fin_base, "added": w.added}))
        .collect();
    let bounds: Map<String, Value> = r.bounds.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
    json!({
        "values": r.values,
        "witnesses": witnesses,
        "bounds": bounds,
        "complete_within_bounds": r.complete_within_bounds,
    })
}

fn text_lines(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match x {
                    Value::Object(_) | Value::Array(_) if !is_flat(x) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        text_lines(x, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", compact(x))),
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                if is_flat(x) {
                    out.push_str(&format!("{pad}- {}\n", compact(x)));
                } else {
                    out.push_str(&format!("{pad}-\n"));
                    text_lines(x, indent + 1, out);
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", compact(other))),
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Object(m) => m.is_empty(),
        Value::Array(a) => a.iter().all(|x| !matches!(x, Value::Object(_)) && is_flat(x)),
        _ => true,
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn text(report: &Value) -> String {
    let mut out = String::new();
    text_lines(report, 0, &mut out);
    out
}

fn cell(v: &Value) -> String {
    match v {
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            a.iter().map(compact).collect::<Vec<_>>().join(" ")
        }
        Value::Null => String::new(),
        other => compact(other),
    }
}

/// The first array of the result as a table, one row per item.
pub fn csv(report: &Value) -> Result<String, String> {
    let result = report.get("result").and_then(Value::as_object).ok_or("report has no result")?;
    let (_, rows) = result
        .iter()
        .find(|(_, v)| v.as_array().is_some_and(|a| !a.is_empty()))
        .ok_or("result has no table")?;
    let rows = rows.as_array().expect("checked above");
    let mut w = csv::Writer::from_writer(Vec::new());
    let keys: Vec<String> = match &rows[0] {
        Value::Object(m) => m.keys().cloned().collect(),
        _ => vec!["item".into()],
    };
    w.write_record(&keys).map_err(|e| e.to_string())?;
    for row in rows {
        let record: Vec<String> = match row {
            Value::Object(m) => keys.iter().map(|k| m.get(k).map(cell).unwrap_or_default()).collect(),
            other => vec![cell(other)],
        };
        w.write_record(&record).map_err(|e| e.to_string())?;
    }
    String::from_utf8(w.into_inner().map_err(|e| e.to_string())?).map_err(|e| e.to_string())
}
