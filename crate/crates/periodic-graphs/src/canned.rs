use matroid_core::MatroidError;

use crate::spec::{PeriodicGraph, PeriodicGraphSpec};

const LADDER: &str = r#"{
    "prefix": {"vertices": ["T0", "B0"], "edges": [["r0", "T0", "B0"], ["t0", "T0", "T"], ["b0", "B0", "B"]]},
    "repeat": {"vertices": ["T", "B"], "edges": [["r", "T", "B"]]},
    "splice": [["T", "T", "t"], ["B", "B", "b"]],
    "ends": ["e"]
}"#;

const BEAN: &str = r#"{
    "prefix": {"vertices": ["v"], "edges": [["vt", "v", "t"]]},
    "repeat": {"vertices": ["t", "x"], "edges": []},
    "splice": [["t", "t", "t"], ["x", "x", "x"]],
    "apex": [{"vertex": "v", "per_block_edges": [["x", "f"]]}],
    "ends": ["w", "w"]
}"#;

fn spec(text: &str) -> PeriodicGraphSpec {
    serde_json::from_str(text).expect("canned family text")
}

/// One-way infinite ladder: rails `T` and `B`, rungs `r`, top edges `t`
/// and bottom edges `b`. Copies of a union are tagged `L1.`, `L2.`, ...
pub fn ladder_family(n: usize) -> Result<PeriodicGraph, MatroidError> {
    match n {
        0 => Err(MatroidError::Parse("ladder family needs n >= 1".into())),
        1 => PeriodicGraph::new(spec(LADDER)),
        _ => {
            let one = spec(LADDER);
            let tags: Vec<String> = (1..=n).map(|i| format!("L{i}.")).collect();
            let parts: Vec<(&str, &PeriodicGraphSpec)> = tags.iter().map(|t| (t.as_str(), &one)).collect();
            PeriodicGraph::disjoint_union(&parts)
        }
    }
}

/// Two parallel rays `t` and `x`; apex `v` starts the `t` ray and is joined
/// by a fan edge `f` to the `x` ray in every block.
pub fn bean_family() -> Result<PeriodicGraph, MatroidError> {
    PeriodicGraph::new(spec(BEAN))
}
