//! Independence systems of edge sets of periodic graphs in which rays may
//! close up at glue points attached to their ends.

pub mod bean;
pub mod spectrum;
pub mod system;
pub mod verdict;

pub use bean::{verify_i3_violation, Claim, I3Witness};
pub use spectrum::{
    enumerate_bases, hat_check, mk_spectrum, replay_witness, spectrum_search, CycleWitness, FoundBase, HatResult,
    SearchBounds,
};
pub use system::{
    component_surplus, cycle_independent, cycle_is_base, defect, extend_to_fin_base, fin_is_base, BaseVerdict, Checked,
    Independence,
};
pub use verdict::{nearly_finitary_verdict, NearlyFinitary};
