use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use matroid_core::MatroidError;

use crate::spec::PeriodicGraph;

/// Partition of end labels into groups; the groups listed in `psi` each get
/// a glue point, the others stay open.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gluing {
    groups: Vec<Vec<String>>,
    #[serde(default)]
    psi: Vec<usize>,
}

impl Gluing {
    pub fn new(g: &PeriodicGraph, groups: Vec<Vec<String>>, psi: Vec<usize>) -> Result<Gluing, MatroidError> {
        let gl = Gluing { groups, psi };
        gl.validate(g)?;
        Ok(gl)
    }

    /// Every end glued to one point.
    pub fn all(g: &PeriodicGraph) -> Gluing {
        Gluing {
            groups: vec![g.end_classes()],
            psi: vec![0],
        }
    }

    /// No glue points.
    pub fn none(g: &PeriodicGraph) -> Gluing {
        Gluing {
            groups: vec![g.end_classes()],
            psi: Vec::new(),
        }
    }

    pub fn parse(g: &PeriodicGraph, text: &str) -> Result<Gluing, MatroidError> {
        let gl: Gluing = serde_json::from_str(text).map_err(|e| MatroidError::Parse(e.to_string()))?;
        gl.validate(g)?;
        Ok(gl)
    }

    /// Checks that each end label of `g` lies in exactly one group.
    pub fn validate(&self, g: &PeriodicGraph) -> Result<(), MatroidError> {
        let mut seen = BTreeSet::new();
        for label in self.groups.iter().flatten() {
            if !seen.insert(label.as_str()) {
                return Err(MatroidError::Parse(format!("end label `{label}` is in two groups")));
            }
        }
        if let Some(missing) = g.end_classes().iter().find(|e| !seen.contains(e.as_str())) {
            return Err(MatroidError::Parse(format!("end label `{missing}` is in no group")));
        }
        if let Some(&bad) = self.psi.iter().find(|&&i| i >= self.groups.len()) {
            return Err(MatroidError::Parse(format!("glued group {bad} does not exist")));
        }
        Ok(())
    }

    pub fn groups(&self) -> &[Vec<String>] {
        &self.groups
    }

    pub fn psi(&self) -> &[usize] {
        &self.psi
    }

    pub fn is_open(&self) -> bool {
        self.psi.is_empty()
    }

    pub fn group_of(&self, label: &str) -> Option<usize> {
        self.groups.iter().position(|grp| grp.iter().any(|l| l == label))
    }

    /// Group of `label` when that group has a glue point.
    pub fn glued_group(&self, label: &str) -> Option<usize> {
        self.group_of(label).filter(|i| self.psi.contains(i))
    }

    /// Whether `self` glues at least what `other` glues: every glued group
    /// of `other` lies inside a glued group of `self`.
    pub fn coarsens(&self, other: &Gluing) -> bool {
        other.psi.iter().all(|&i| {
            let mut hit = other.groups[i].iter().map(|l| self.glued_group(l));
            match hit.next() {
                None => true,
                Some(first) => first.is_some() && hit.all(|h| h == first),
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canned::ladder_family;

    #[test]
    fn validation_and_lookup() {
        let g = ladder_family(2).unwrap();
        let ends = g.end_classes();
        assert_eq!(ends.len(), 2);
        assert!(Gluing::new(&g, vec![vec![ends[0].clone()]], vec![0]).is_err());
        assert!(Gluing::new(&g, vec![ends.clone(), vec![ends[0].clone()]], vec![]).is_err());
        assert!(Gluing::new(&g, vec![ends.clone()], vec![1]).is_err());
        let split = Gluing::new(&g, vec![vec![ends[0].clone()], vec![ends[1].clone()]], vec![1]).unwrap();
        assert_eq!(split.glued_group(&ends[0]), None);
        assert_eq!(split.glued_group(&ends[1]), Some(1));
        let all = Gluing::all(&g);
        assert!(all.coarsens(&split));
        assert!(!split.coarsens(&all));
        assert!(Gluing::none(&g).is_open());
        let text = format!(r#"{{"groups": [["{}", "{}"]], "psi": [0]}}"#, ends[0], ends[1]);
        assert_eq!(Gluing::parse(&g, &text).unwrap(), all);
    }
}
