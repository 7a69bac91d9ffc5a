//! JSON form of independence systems.
//!
//! ```json
//! {"ground": ["a", "b", "c"], "kind": "explicit", "independents": [[], [0], [1], [0, 1]]}
//! {"ground": ["a", "b", "c"], "kind": "uniform", "rank": 1}
//! {"ground": ["x", "y", "z"], "kind": "graphic", "vertices": 3, "edges": [[0, 1], [1, 2], [0, 2]]}
//! ```
//!
//! Explicit payloads either list a downward-closed `independents` family or
//! a `generators` list whose downward closure is taken.

use serde::{Deserialize, Serialize};

use crate::error::MatroidError;
use crate::graph::Multigraph;
use crate::oracle::OracleMatroid;
use crate::subset::{GroundSet, Limits, Subset};
use crate::system::{ExplicitSystem, IndependenceOracle};

/// Either presentation of a finite system.
#[derive(Clone, Debug)]
pub enum System {
    Explicit(ExplicitSystem),
    Oracle(OracleMatroid),
}

impl System {
    pub fn to_explicit(&self, limits: Limits) -> Result<ExplicitSystem, MatroidError> {
        match self {
            System::Explicit(e) => Ok(e.clone()),
            System::Oracle(m) => m.to_explicit(limits),
        }
    }

    /// Rank-oracle view; explicit families are tabulated.
    pub fn to_oracle(&self) -> OracleMatroid {
        match self {
            System::Explicit(e) => OracleMatroid::from_explicit(e),
            System::Oracle(m) => m.clone(),
        }
    }
}

impl IndependenceOracle for System {
    fn ground(&self) -> &GroundSet {
        match self {
            System::Explicit(e) => e.ground(),
            System::Oracle(m) => m.ground(),
        }
    }

    fn is_independent(&self, s: Subset) -> bool {
        match self {
            System::Explicit(e) => e.is_independent(s),
            System::Oracle(m) => m.is_independent(s),
        }
    }
}

impl From<ExplicitSystem> for System {
    fn from(e: ExplicitSystem) -> Self {
        System::Explicit(e)
    }
}

impl From<OracleMatroid> for System {
    fn from(m: OracleMatroid) -> Self {
        System::Oracle(m)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct SystemDoc {
    pub ground: Vec<String>,
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub independents: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<(usize, usize)>>,
    /// Matrix payload of `linear` systems, interpreted by the linear crate.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<serde_json::Value>,
}

fn missing(kind: &str, field: &str) -> MatroidError {
    MatroidError::Parse(format!("`{kind}` system needs a `{field}` field"))
}

impl SystemDoc {
    pub fn parse(text: &str) -> Result<Self, MatroidError> {
        serde_json::from_str(text).map_err(|e| MatroidError::Parse(e.to_string()))
    }

    pub fn ground_set(&self) -> Result<GroundSet, MatroidError> {
        GroundSet::with_labels(self.ground.clone())
    }

    /// Builds explicit, uniform and graphic systems.
    pub fn build(&self) -> Result<System, MatroidError> {
        let ground = self.ground_set()?;
        match self.kind.as_str() {
            "explicit" => {
                let to_sets = |v: &Vec<Vec<usize>>| -> Result<Vec<Subset>, MatroidError> {
                    v.iter().map(|s| ground.subset(s)).collect()
                };
                match (&self.independents, &self.generators) {
                    (Some(ind), _) => Ok(ExplicitSystem::from_family(ground.clone(), to_sets(ind)?)?.into()),
                    (None, Some(gen)) => {
                        Ok(ExplicitSystem::downward_closure(ground.clone(), to_sets(gen)?)?.into())
                    }
                    (None, None) => Err(missing("explicit", "independents")),
                }
            }
            "uniform" => {
                let k = self.rank.ok_or_else(|| missing("uniform", "rank"))?;
                Ok(OracleMatroid::uniform_on(k, ground)?.into())
            }
            "graphic" => {
                let n = self.vertices.ok_or_else(|| missing("graphic", "vertices"))?;
                let edges = self.edges.clone().ok_or_else(|| missing("graphic", "edges"))?;
                if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= n || v >= n) {
                    return Err(MatroidError::Parse(format!("edge ({u},{v}) uses a vertex outside 0..{n}")));
                }
                Ok(OracleMatroid::graphic_on(Multigraph::new(n, edges), ground)?.into())
            }
            "linear" => Err(MatroidError::Parse(
                "linear systems need a matrix-aware loader".to_string(),
            )),
            other => Err(MatroidError::Parse(format!("unknown system kind `{other}`"))),
        }
    }

    /// Explicit document listing every independent set of `sys`.
    pub fn explicit_from(sys: &dyn IndependenceOracle, limits: Limits) -> Result<Self, MatroidError> {
        let snap = ExplicitSystem::from_oracle(sys, limits)?;
        Ok(SystemDoc {
            ground: snap.ground().labels().to_vec(),
            kind: "explicit".to_string(),
            independents: Some(snap.members().map(|s| s.elements().collect()).collect()),
            ..SystemDoc::default()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_each_kind() {
        let u = SystemDoc::parse(r#"{"ground":["a","b","c"],"kind":"uniform","rank":1}"#)
            .unwrap()
            .build()
            .unwrap();
        assert!(!u.is_independent(Subset::from_elements([0, 1])));
        let g = SystemDoc::parse(r#"{"ground":["x","y","z"],"kind":"graphic","vertices":3,"edges":[[0,1],[1,2],[0,2]]}"#)
            .unwrap()
            .build()
            .unwrap();
        assert!(!g.is_independent(Subset::full(3)));
        let e = SystemDoc::parse(r#"{"ground":["1","2","3"],"kind":"explicit","generators":[[0],[1,2]]}"#)
            .unwrap()
            .build()
            .unwrap();
        assert!(e.is_independent(Subset::from_elements([1, 2])));
        assert!(!e.is_independent(Subset::from_elements([0, 2])));
    }

    #[test]
    fn rejects_bad_input() {
        let bad = [
            r#"{"ground":["a"],"kind":"explicit","independents":[[0]]}"#,
            r#"{"ground":["a"],"kind":"explicit","independents":[[],[1]]}"#,
            r#"{"ground":["a"],"kind":"graphic","vertices":1,"edges":[[0,1]]}"#,
            r#"{"ground":["a"],"kind":"uniform"}"#,
            r#"{"ground":["a"],"kind":"mystery"}"#,
            r#"{"ground":["a","a"],"kind":"uniform","rank":0}"#,
            r#"not json"#,
        ];
        for text in bad {
            let r = SystemDoc::parse(text).and_then(|d| d.build());
            assert!(r.is_err(), "{text}");
        }
    }

    #[test]
    fn explicit_round_trip() {
        let m = OracleMatroid::uniform(2, 3).unwrap();
        let doc = SystemDoc::explicit_from(&m, Limits::default()).unwrap();
        let back = doc.build().unwrap().to_explicit(Limits::default()).unwrap();
        assert_eq!(back, m.to_explicit(Limits::default()).unwrap());
    }
}
