//! Operators on finite systems: union, top truncation, difference of a
//! nested pair, spectra and the block counterexample.

pub mod ch4;
pub mod difference;
pub mod pair;
pub mod spectrum;
pub mod truncate;
pub mod union;

pub use ch4::{blocks, ch4_system};
pub use difference::{base_pairs, difference, verify_difference_duality, DualityCheck};
pub use pair::{direct_sum, dual_system, uniform, NestedPair};
pub use spectrum::{smin_enumerate, spectrum, sum_values, BaseWitness, SpectrumReport};
pub use truncate::{truncate_top, truncate_top_explicit};
pub use union::{check_unionable, union};
