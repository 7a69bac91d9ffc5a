//! Resolution of shorthands and input files.

use std::path::{Path, PathBuf};

use serde_json::Value;

use families::{load_family, FamilyEdit};
use linear_matroids::build_system;
use matroid_core::{Limits, MatroidError, OracleMatroid, System, SystemDoc};
use matroid_ops::{ch4_system, NestedPair};
use periodic_graphs::{Gluing, PeriodicGraph};

fn read(path: &Path) -> Result<String, MatroidError> {
    std::fs::read_to_string(path).map_err(|e| MatroidError::Parse(format!("{}: {e}", path.display())))
}

fn parse_json(text: &str) -> Result<Value, MatroidError> {
    serde_json::from_str(text).map_err(|e| MatroidError::Parse(e.to_string()))
}

fn number(text: &str, what: &str) -> Result<usize, MatroidError> {
    text.parse().map_err(|_| MatroidError::Parse(format!("bad {what} `{text}`")))
}

fn ch4_size(reference: &str) -> Result<Option<usize>, MatroidError> {
    reference.strip_prefix("ch4:").map(|r| number(r, "block count")).transpose()
}

/// `ch4:r` (the inner system), `uniform:k:n`, `free:n` or a system file.
pub fn system(reference: &str) -> Result<System, MatroidError> {
    if let Some(r) = ch4_size(reference)? {
        return Ok(ch4_system(r)?.inner().clone());
    }
    if let Some(rest) = reference.strip_prefix("uniform:") {
        let (k, n) = rest
            .split_once(':')
            .ok_or_else(|| MatroidError::Parse(format!("expected uniform:k:n, got {reference}")))?;
        return Ok(OracleMatroid::uniform(number(k, "rank")?, number(n, "size")?)?.into());
    }
    if let Some(n) = reference.strip_prefix("free:") {
        return Ok(OracleMatroid::free(number(n, "size")?)?.into());
    }
    system_value(&parse_json(&read(Path::new(reference))?)?, None)
}

/// An inline system document or a path to one.
fn system_value(v: &Value, dir: Option<&Path>) -> Result<System, MatroidError> {
    match v {
        Value::String(s) => {
            let path = dir.map_or_else(|| PathBuf::from(s), |d| d.join(s));
            system(path.to_str().unwrap_or(s))
        }
        other => {
            let doc: SystemDoc = serde_json::from_value(other.clone()).map_err(|e| MatroidError::Parse(e.to_string()))?;
            build_system(&doc)
        }
    }
}

/// `ch4:r` or a file `{"inner": ..., "outer": ...}`.
pub fn pair(reference: &str, limits: Limits) -> Result<NestedPair, MatroidError> {
    if let Some(r) = ch4_size(reference)? {
        return ch4_system(r);
    }
    let path = Path::new(reference);
    let v = parse_json(&read(path)?)?;
    let part = |key: &str| -> Result<System, MatroidError> {
        let x = v
            .get(key)
            .ok_or_else(|| MatroidError::Parse(format!("pair file needs `{key}`")))?;
        system_value(x, path.parent())
    };
    NestedPair::new(part("inner")?, part("outer")?, limits)
}

pub fn pair_of(inner: &str, outer: &str, limits: Limits) -> Result<NestedPair, MatroidError> {
    NestedPair::new(system(inner)?, system(outer)?, limits)
}

/// A family shorthand, a family file or an edit file. Returns the edge
/// names to contract as well.
pub fn family(reference: &str) -> Result<(PeriodicGraph, Vec<String>), MatroidError> {
    if reference == "bean" || reference.starts_with("ladder:") {
        return Ok((load_family(reference, None)?, vec![]));
    }
    let path = Path::new(reference);
    let v = parse_json(&read(path)?)?;
    if v.get("base").is_some() {
        let edit: FamilyEdit = serde_json::from_value(v).map_err(|e| MatroidError::Parse(e.to_string()))?;
        return Ok((edit.apply(path.parent())?, edit.contract.clone()));
    }
    let spec = serde_json::from_value(v).map_err(|e| MatroidError::Parse(e.to_string()))?;
    Ok((PeriodicGraph::new(spec)?, vec![]))
}

/// `all`, `none`, inline JSON or a gluing file.
pub fn gluing(g: &PeriodicGraph, reference: &str) -> Result<Gluing, MatroidError> {
    match reference {
        "all" => Ok(Gluing::all(g)),
        "none" => Ok(Gluing::none(g)),
        s if s.trim_start().starts_with('{') => Gluing::parse(g, s),
        path => Gluing::parse(g, &read(Path::new(path))?),
    }
}

pub fn matrix_spec(reference: &str) -> Result<linear_matroids::PeriodicMatrixSpec, MatroidError> {
    linear_matroids::PeriodicMatrixSpec::parse(&read(Path::new(reference))?)
}
