use serde_json::json;

use linear_matroids::periodic::{PeriodicColumn, PeriodicMatrixSpec, RowRef};
use linear_matroids::FieldTag;
use periodic_graphs::{PeriodicGraph, TypeKind};

/// Signed incidence columns of the repeating edges. Prefix vertices carrying
/// fan edges become global rows; a splice leaving block `b` is a column of
/// block `b + 1`.
pub fn incidence_spec(g: &PeriodicGraph, field: FieldTag) -> PeriodicMatrixSpec {
    let global_rows = g.apexes().iter().map(|&a| g.prefix_vertices()[a].clone()).collect();
    let block = |back: usize, row: usize| RowRef::Block { back, row };
    let columns = g
        .types()
        .iter()
        .map(|t| {
            let (a, b) = match t.kind {
                TypeKind::Local(u, v) => (block(0, u), block(0, v)),
                TypeKind::Splice(l, r) => (block(1, l), block(0, r)),
                TypeKind::Fan(a, x) => {
                    let row = g.apexes().iter().position(|&v| v == a).expect("fan from an apex");
                    (RowRef::Global(row), block(0, x))
                }
            };
            PeriodicColumn {
                label: t.name.clone(),
                entries: vec![(a, json!(1)), (b, json!(-1))],
            }
        })
        .collect();
    PeriodicMatrixSpec {
        field,
        global_rows,
        block_rows: g.repeat_vertices().to_vec(),
        block_columns: columns,
    }
}
