//! Failure of the augmentation axiom on graphs where an apex dominates a ray.

use serde::Serialize;

use matroid_core::MatroidError;
use periodic_graphs::{EdgeRef, Gluing, PeriodicGraph, TypeKind, UPEdgeSet, UPEdgeSetDoc};
use periodic_graphs::spec::PrefixEnd;

use crate::system::{cycle_independent, cycle_is_base, BaseVerdict};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub claim: String,
    pub holds: bool,
}

/// Two maximal sets `h` and `h_swapped` and an independent `s` such that
/// `s` minus `removed` is not maximal yet no edge of `h_swapped` extends it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct I3Witness {
    pub removed: String,
    pub h: UPEdgeSetDoc,
    pub h_swapped: UPEdgeSetDoc,
    pub s: UPEdgeSetDoc,
    pub claims: Vec<Claim>,
}

fn structure(msg: &str) -> MatroidError {
    MatroidError::Structure(msg.to_string())
}

pub fn verify_i3_violation(g: &PeriodicGraph, gluing: &Gluing) -> Result<I3Witness, MatroidError> {
    let (fan, apex, target) = g
        .types()
        .iter()
        .enumerate()
        .find_map(|(ty, t)| match t.kind {
            TypeKind::Fan(a, x) => Some((ty, a, x)),
            _ => None,
        })
        .ok_or_else(|| structure("no apex with fan edges"))?;
    let corridor = g.corridor_of(target);
    let removed = g
        .prefix_edges()
        .iter()
        .position(|e| match e.ends {
            (PrefixEnd::Prefix(a), PrefixEnd::Block0(y)) | (PrefixEnd::Block0(y), PrefixEnd::Prefix(a)) => {
                a == apex && g.corridor_of(y) != corridor
            }
            _ => false,
        })
        .ok_or_else(|| structure("apex has no edge into another ray"))?;
    let removed = EdgeRef::Prefix(removed);

    let on_target = |kind: TypeKind| match kind {
        TypeKind::Local(u, v) | TypeKind::Splice(u, v) => g.corridor_of(u) == corridor && g.corridor_of(v) == corridor,
        TypeKind::Fan(..) => false,
    };
    let statics = vec![true; g.prefix_edges().len()];
    let row = |keep: &dyn Fn(TypeKind) -> bool| g.types().iter().map(|t| keep(t.kind)).collect::<Vec<bool>>();
    let ray_row = row(&|k| !matches!(k, TypeKind::Fan(..)));
    let h = UPEdgeSet::from_parts(g, statics.clone(), vec![], vec![ray_row.clone()])?;
    let h_swapped = h.without(removed).with(EdgeRef::Block { ty: fan, block: 0 });
    let s = UPEdgeSet::from_parts(g, statics, vec![], vec![row(&|k| !on_target(k))])?;
    let s_minus = s.without(removed);

    let mut claims = Vec::new();
    let mut claim = |text: &str, holds: bool| claims.push(Claim { claim: text.into(), holds });
    claim("h is maximal", cycle_is_base(g, &h, gluing)?.is_base());
    claim("h_swapped is maximal", cycle_is_base(g, &h_swapped, gluing)?.is_base());
    claim("s is maximal", cycle_is_base(g, &s, gluing)?.is_base());
    let verdict = cycle_is_base(g, &s_minus, gluing)?;
    claim("s minus the removed edge is independent", !matches!(verdict, BaseVerdict::Dependent { .. }));
    claim("s minus the removed edge is not maximal", matches!(verdict, BaseVerdict::Extendable { .. }));
    let depth = h_swapped.prefix_blocks() + 2 * h_swapped.period() + 2;
    let mut blocked = true;
    let mut any = false;
    for e in h_swapped.edges_before(depth) {
        if s_minus.contains(e) {
            continue;
        }
        any = true;
        blocked &= !cycle_independent(g, &s_minus.with(e), gluing)?.independent;
    }
    claim("no edge of h_swapped extends s minus the removed edge", any && blocked);

    if let Some(c) = claims.iter().find(|c| !c.holds) {
        return Err(MatroidError::Structure(format!("augmentation witness failed: {}", c.claim)));
    }
    Ok(I3Witness {
        removed: UPEdgeSet::edge_name(g, removed),
        h: h.to_doc(g),
        h_swapped: h_swapped.to_doc(g),
        s: s.to_doc(g),
        claims,
    })
}
