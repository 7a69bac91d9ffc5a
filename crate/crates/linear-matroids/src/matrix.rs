use num::{BigRational, Zero};
use serde::{Deserialize, Serialize};

use matroid_core::{MatroidError, Subset, MAX_GROUND};

use crate::field::{parse_scalar, FieldTag};

/// A finite matrix over a field. Columns are ground elements, rows are
/// coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixRep {
    field: FieldTag,
    rows: Vec<String>,
    cols: Vec<String>,
    /// Column-major, already reduced into the field.
    columns: Vec<Vec<BigRational>>,
    /// Bit-packed columns, present over GF(2).
    packed: Option<Vec<Vec<u64>>>,
}

fn pack(col: &[BigRational]) -> Vec<u64> {
    let mut words = vec![0u64; col.len().div_ceil(64).max(1)];
    for (i, x) in col.iter().enumerate() {
        if !x.is_zero() {
            words[i / 64] |= 1 << (i % 64);
        }
    }
    words
}

impl MatrixRep {
    /// Builds from column vectors; entries are reduced into the field.
    pub fn from_columns(
        field: FieldTag,
        rows: Vec<String>,
        cols: Vec<String>,
        columns: Vec<Vec<BigRational>>,
    ) -> Result<Self, MatroidError> {
        if cols.len() != columns.len() {
            return Err(MatroidError::Parse(format!(
                "{} column labels for {} columns",
                cols.len(),
                columns.len()
            )));
        }
        if cols.len() > MAX_GROUND {
            return Err(MatroidError::CapExceeded { size: cols.len(), cap: MAX_GROUND });
        }
        let mut reduced = Vec::with_capacity(columns.len());
        for (j, col) in columns.into_iter().enumerate() {
            if col.len() != rows.len() {
                return Err(MatroidError::Parse(format!("column {j} has {} entries, expected {}", col.len(), rows.len())));
            }
            let col = col
                .iter()
                .map(|x| field.reduce(x).ok_or_else(|| MatroidError::Parse(format!("{x} has no image in GF(2)"))))
                .collect::<Result<Vec<_>, _>>()?;
            reduced.push(col);
        }
        let packed = (field == FieldTag::Gf2).then(|| reduced.iter().map(|c| pack(c)).collect());
        Ok(MatrixRep {
            field,
            rows,
            cols,
            columns: reduced,
            packed,
        })
    }

    /// Builds from integer rows, labelling rows `r0..` and columns `c0..`.
    pub fn from_int_rows(field: FieldTag, data: &[Vec<i64>]) -> Result<Self, MatroidError> {
        let nrows = data.len();
        let ncols = data.first().map_or(0, Vec::len);
        if data.iter().any(|r| r.len() != ncols) {
            return Err(MatroidError::Parse("ragged matrix rows".into()));
        }
        let columns = (0..ncols)
            .map(|j| data.iter().map(|r| BigRational::from_integer(r[j].into())).collect())
            .collect();
        MatrixRep::from_columns(
            field,
            (0..nrows).map(|i| format!("r{i}")).collect(),
            (0..ncols).map(|j| format!("c{j}")).collect(),
            columns,
        )
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    pub fn row_labels(&self) -> &[String] {
        &self.rows
    }

    pub fn col_labels(&self) -> &[String] {
        &self.cols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &[BigRational] {
        &self.columns[j]
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigRational {
        &self.columns[j][i]
    }

    /// Dimension of the span of the chosen columns.
    pub fn rank(&self, cols: Subset) -> usize {
        match &self.packed {
            Some(p) => gf2_rank(cols.elements().map(|j| p[j].clone())),
            None => rational_rank(cols.elements().map(|j| self.columns[j].clone()).collect()),
        }
    }

    /// Whether column `e` is a linear combination of the columns in `s`,
    /// found by solving for the coefficients.
    pub fn in_span(&self, s: Subset, e: usize) -> bool {
        match &self.packed {
            Some(p) => {
                let mut basis = Gf2Basis::new(self.nrows());
                for j in s.elements() {
                    basis.insert(p[j].clone());
                }
                basis.reduce(p[e].clone()).iter().all(|&w| w == 0)
            }
            None => {
                let cols: Vec<Vec<BigRational>> = s.elements().map(|j| self.columns[j].clone()).collect();
                solve(&cols, &self.columns[e]).is_some()
            }
        }
    }
}

/// Echelon basis over GF(2), one stored vector per leading bit.
pub struct Gf2Basis {
    by_lead: Vec<Option<Vec<u64>>>,
    size: usize,
}

fn leading_bit(v: &[u64]) -> Option<usize> {
    v.iter()
        .enumerate()
        .rev()
        .find(|(_, &w)| w != 0)
        .map(|(i, &w)| i * 64 + 63 - w.leading_zeros() as usize)
}

impl Gf2Basis {
    pub fn new(nrows: usize) -> Self {
        Gf2Basis {
            by_lead: vec![None; nrows.max(1)],
            size: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    /// Residue of `v` after elimination against the basis.
    pub fn reduce(&self, mut v: Vec<u64>) -> Vec<u64> {
        while let Some(h) = leading_bit(&v) {
            match &self.by_lead[h] {
                Some(b) => v.iter_mut().zip(b).for_each(|(x, y)| *x ^= y),
                None => break,
            }
        }
        v
    }

    /// Adds `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: Vec<u64>) -> bool {
        let v = self.reduce(v);
        match leading_bit(&v) {
            Some(h) => {
                self.by_lead[h] = Some(v);
                self.size += 1;
                true
            }
            None => false,
        }
    }
}

fn gf2_rank(cols: impl Iterator<Item = Vec<u64>>) -> usize {
    let mut basis: Option<Gf2Basis> = None;
    for c in cols {
        basis.get_or_insert_with(|| Gf2Basis::new(c.len() * 64)).insert(c);
    }
    basis.map_or(0, |b| b.len())
}

/// Row-reduces `m` (rows of equal length) in place; returns pivot columns.
fn row_reduce(m: &mut [Vec<BigRational>]) -> Vec<usize> {
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for k in c..ncols {
                    let d = &m[r][k] * &f;
                    m[i][k] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn rational_rank(cols: Vec<Vec<BigRational>>) -> usize {
    if cols.is_empty() {
        return 0;
    }
    let nrows = cols[0].len();
    let mut m: Vec<Vec<BigRational>> = (0..nrows).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
    row_reduce(&mut m).len()
}

/// Coefficients `x` with `Σ x_j cols[j] = target`, if any.
fn solve(cols: &[Vec<BigRational>], target: &[BigRational]) -> Option<Vec<BigRational>> {
    let k = cols.len();
    let mut m: Vec<Vec<BigRational>> = (0..target.len())
        .map(|i| cols.iter().map(|c| c[i].clone()).chain([target[i].clone()]).collect())
        .collect();
    let pivots = row_reduce(&mut m);
    if pivots.contains(&k) {
        return None;
    }
    let mut x = vec![BigRational::zero(); k];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][k].clone();
    }
    Some(x)
}

/// Matrix file: sparse `[row, col, value]` triples over labelled axes.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatrixDoc {
    pub field: String,
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub entries: Vec<(usize, usize, serde_json::Value)>,
}

impl MatrixDoc {
    pub fn parse(text: &str) -> Result<Self, MatroidError> {
        serde_json::from_str(text).map_err(|e| MatroidError::Parse(e.to_string()))
    }

    pub fn build(&self) -> Result<MatrixRep, MatroidError> {
        let field = FieldTag::parse(&self.field)
            .ok_or_else(|| MatroidError::Parse(format!("unknown field `{}`", self.field)))?;
        let mut columns = vec![vec![BigRational::zero(); self.rows.len()]; self.cols.len()];
        for (r, c, v) in &self.entries {
            if *r >= self.rows.len() || *c >= self.cols.len() {
                return Err(MatroidError::Parse(format!("entry ({r},{c}) is outside the matrix")));
            }
            columns[*c][*r] = parse_scalar(v).ok_or_else(|| MatroidError::Parse(format!("bad scalar {v}")))?;
        }
        MatrixRep::from_columns(field, self.rows.clone(), self.cols.clone(), columns)
    }

    pub fn from_rep(m: &MatrixRep) -> Self {
        let mut entries = Vec::new();
        for j in 0..m.ncols() {
            for i in 0..m.nrows() {
                let x = m.entry(i, j);
                if !x.is_zero() {
                    let v = if x.is_integer() {
                        x.numer().to_string().parse::<i64>().map_or_else(|_| x.to_string().into(), Into::into)
                    } else {
                        serde_json::Value::String(x.to_string())
                    };
                    entries.push((i, j, v));
                }
            }
        }
        entries.sort_by_key(|&(i, j, _)| (i, j));
        MatrixDoc {
            field: m.field().code().to_string(),
            rows: m.row_labels().to_vec(),
            cols: m.col_labels().to_vec(),
            entries,
        }
    }
}
