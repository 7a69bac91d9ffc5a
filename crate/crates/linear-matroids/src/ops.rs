use std::fmt;
use std::sync::Arc;

use num::{BigRational, One, Zero};

use matroid_core::{
    GroundSet, IndependenceOracle, Limits, MatroidError, Multigraph, OracleMatroid, RankFunction, Subset, System,
    SystemDoc,
};

use crate::field::FieldTag;
use crate::matrix::{MatrixDoc, MatrixRep};

struct ColumnRank {
    rep: Arc<MatrixRep>,
}

impl fmt::Debug for ColumnRank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ColumnRank({}x{} over {})", self.rep.nrows(), self.rep.ncols(), self.rep.field().code())
    }
}

impl RankFunction for ColumnRank {
    fn rank(&self, s: Subset) -> usize {
        self.rep.rank(s)
    }
}

/// Column matroid of `m`, labelled by the column labels.
pub fn linear_matroid(m: &MatrixRep) -> Result<OracleMatroid, MatroidError> {
    let ground = GroundSet::with_labels(m.col_labels().to_vec())?;
    Ok(OracleMatroid::new(ground, ColumnRank { rep: Arc::new(m.clone()) }))
}

/// Signed vertex-edge incidence matrix: `+1` at the lower endpoint, `-1` at
/// the higher one, zero columns for loops.
pub fn incidence_matrix(graph: &Multigraph, field: FieldTag) -> Result<MatrixRep, MatroidError> {
    let n = graph.vertex_count;
    let columns = graph
        .edges
        .iter()
        .map(|&(u, v)| {
            let mut col = vec![BigRational::zero(); n];
            if u != v {
                col[u.min(v)] = BigRational::one();
                col[u.max(v)] = -BigRational::one();
            }
            col
        })
        .collect();
    MatrixRep::from_columns(
        field,
        (0..n).map(|i| format!("v{i}")).collect(),
        (0..graph.edges.len()).map(|j| format!("e{j}")).collect(),
        columns,
    )
}

/// Whether the incidence column matroid of `graph` over `field` has the same
/// independent sets as its cycle matroid.
pub fn verify_thin_ac_equiv(graph: &Multigraph, field: FieldTag, limits: Limits) -> Result<bool, MatroidError> {
    let lin = linear_matroid(&incidence_matrix(graph, field)?)?;
    let cyc = OracleMatroid::graphic(graph.clone())?;
    limits.check(lin.ground())?;
    Ok(lin
        .ground()
        .subsets()
        .all(|s| lin.is_independent(s) == cyc.is_independent(s)))
}

/// For an independent `s`: whether every column lies in the span of the
/// columns of `s`, i.e. is the image of a coefficient vector supported on `s`.
pub fn span_maximality_check(m: &MatrixRep, s: Subset) -> Result<bool, MatroidError> {
    if s.elements().any(|e| e >= m.ncols()) {
        return Err(MatroidError::ElementOutOfRange {
            element: s.elements().max().unwrap_or(0),
            size: m.ncols(),
        });
    }
    if m.rank(s) != s.len() {
        return Err(MatroidError::Dependent(format!("{s:?}")));
    }
    Ok((0..m.ncols()).all(|e| s.contains(e) || m.in_span(s, e)))
}

/// Span check on GF(2) columns packed into words, for at most 64 rows.
pub fn span_maximality_bits(cols: &[u64], s: Subset) -> Result<bool, MatroidError> {
    let mut basis = [0u64; 64];
    let reduce = |basis: &[u64; 64], mut v: u64| {
        while v != 0 {
            let h = 63 - v.leading_zeros() as usize;
            if basis[h] == 0 {
                break;
            }
            v ^= basis[h];
        }
        v
    };
    for e in s.elements() {
        let v = reduce(&basis, cols[e]);
        if v == 0 {
            return Err(MatroidError::Dependent(format!("{s:?}")));
        }
        basis[63 - v.leading_zeros() as usize] = v;
    }
    Ok((0..cols.len()).all(|e| s.contains(e) || reduce(&basis, cols[e]) == 0))
}

/// Loads any system document, including `linear` ones whose `matrix` field
/// holds a matrix file.
pub fn build_system(doc: &SystemDoc) -> Result<System, MatroidError> {
    if doc.kind != "linear" {
        return doc.build();
    }
    let value = doc
        .matrix
        .clone()
        .ok_or_else(|| MatroidError::Parse("`linear` system needs a `matrix` field".into()))?;
    let mdoc: MatrixDoc = serde_json::from_value(value).map_err(|e| MatroidError::Parse(e.to_string()))?;
    let rep = mdoc.build()?;
    if doc.ground.len() != rep.ncols() {
        return Err(MatroidError::Parse(format!(
            "{} ground labels for {} matrix columns",
            doc.ground.len(),
            rep.ncols()
        )));
    }
    let ground = doc.ground_set()?;
    Ok(OracleMatroid::new(ground, ColumnRank { rep: Arc::new(rep) }).into())
}
