use num::{BigRational, Zero};
use serde::{Deserialize, Serialize};

use matroid_core::MatroidError;

use crate::field::{parse_scalar, FieldTag};
use crate::matrix::MatrixRep;

/// Row addressed by a column of block `b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RowRef {
    /// A row shared by all blocks.
    Global(usize),
    /// Row `row` of block `b - back`; dropped when that block does not exist.
    Block { back: usize, row: usize },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PeriodicColumn {
    pub label: String,
    pub entries: Vec<(RowRef, serde_json::Value)>,
}

/// A column family repeated block by block: every block contributes the same
/// columns, with entries in global rows or in rows of recent blocks.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PeriodicMatrixSpec {
    pub field: FieldTag,
    pub global_rows: Vec<String>,
    pub block_rows: Vec<String>,
    pub block_columns: Vec<PeriodicColumn>,
}

/// Outcome of [`nearly_thin_count`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThinVerdict {
    pub count: usize,
    pub growing_rows: Vec<String>,
    pub depth: usize,
}

impl PeriodicMatrixSpec {
    pub fn parse(text: &str) -> Result<Self, MatroidError> {
        let spec: PeriodicMatrixSpec = serde_json::from_str(text).map_err(|e| MatroidError::Parse(e.to_string()))?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<(), MatroidError> {
        for c in &self.block_columns {
            for (r, v) in &c.entries {
                let ok = match *r {
                    RowRef::Global(i) => i < self.global_rows.len(),
                    RowRef::Block { row, .. } => row < self.block_rows.len(),
                };
                if !ok {
                    return Err(MatroidError::Parse(format!("column `{}` references a missing row", c.label)));
                }
                let x = parse_scalar(v).ok_or_else(|| MatroidError::Parse(format!("bad scalar {v}")))?;
                self.field
                    .reduce(&x)
                    .ok_or_else(|| MatroidError::Parse(format!("{x} has no image in GF(2)")))?;
            }
        }
        Ok(())
    }

    /// Largest block offset used by any entry, plus one.
    pub fn span(&self) -> usize {
        self.block_columns
            .iter()
            .flat_map(|c| &c.entries)
            .map(|(r, _)| match *r {
                RowRef::Global(_) => 0,
                RowRef::Block { back, .. } => back,
            })
            .max()
            .unwrap_or(0)
            + 1
    }

    fn row_index(&self, r: &RowRef, block: usize) -> Option<usize> {
        match *r {
            RowRef::Global(i) => Some(i),
            RowRef::Block { back, row } => block
                .checked_sub(back)
                .map(|b| self.global_rows.len() + b * self.block_rows.len() + row),
        }
    }

    fn nrows(&self, depth: usize) -> usize {
        self.global_rows.len() + depth * self.block_rows.len()
    }

    fn row_label(&self, i: usize) -> String {
        let g = self.global_rows.len();
        if i < g {
            self.global_rows[i].clone()
        } else {
            let k = self.block_rows.len();
            format!("{}@{}", self.block_rows[(i - g) % k], (i - g) / k)
        }
    }

    /// Number of nonzero entries in each row over blocks `0..depth`.
    pub fn row_support(&self, depth: usize) -> Vec<usize> {
        let mut support = vec![0; self.nrows(depth)];
        for b in 0..depth {
            for c in &self.block_columns {
                for (r, v) in &c.entries {
                    let nonzero = parse_scalar(v)
                        .and_then(|x| self.field.reduce(&x))
                        .is_some_and(|x| !x.is_zero());
                    if let (true, Some(i)) = (nonzero, self.row_index(r, b)) {
                        support[i] += 1;
                    }
                }
            }
        }
        support
    }

    /// Explicit matrix over blocks `0..depth`, columns labelled `label@b`.
    pub fn truncate(&self, depth: usize) -> Result<MatrixRep, MatroidError> {
        let nrows = self.nrows(depth);
        let mut columns = Vec::new();
        let mut labels = Vec::new();
        for b in 0..depth {
            for c in &self.block_columns {
                let mut col = vec![BigRational::zero(); nrows];
                for (r, v) in &c.entries {
                    if let Some(i) = self.row_index(r, b) {
                        col[i] += parse_scalar(v).ok_or_else(|| MatroidError::Parse(format!("bad scalar {v}")))?;
                    }
                }
                columns.push(col);
                labels.push(format!("{}@{b}", c.label));
            }
        }
        MatrixRep::from_columns(self.field, (0..nrows).map(|i| self.row_label(i)).collect(), labels, columns)
    }

    /// Rows present at `depth` whose support grows at every one of the next
    /// `span + 1` block additions.
    fn growing_rows(&self, depth: usize) -> Vec<usize> {
        let horizon = depth + self.span() + 1;
        let supports: Vec<Vec<usize>> = (depth..=horizon).map(|d| self.row_support(d)).collect();
        (0..self.nrows(depth))
            .filter(|&i| supports.windows(2).all(|w| w[1][i] > w[0][i]))
            .collect()
    }
}

/// Rows receiving infinitely many nonzero entries, read off as rows whose
/// support keeps growing. The count must agree at `depth` and `depth + 1`.
pub fn nearly_thin_count(spec: &PeriodicMatrixSpec, depth: usize) -> Result<ThinVerdict, MatroidError> {
    if depth < 2 {
        return Err(MatroidError::Parse("depth must be at least 2".into()));
    }
    spec.validate()?;
    let here = spec.growing_rows(depth);
    let next = spec.growing_rows(depth + 1);
    if here != next {
        return Err(MatroidError::BoundExhausted(format!(
            "growing row count changes from {} to {} between depths {depth} and {}",
            here.len(),
            next.len(),
            depth + 1
        )));
    }
    Ok(ThinVerdict {
        count: here.len(),
        growing_rows: here.iter().map(|&i| spec.row_label(i)).collect(),
        depth,
    })
}
