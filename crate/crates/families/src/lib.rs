//! Canned families, prefix edits and batch spectrum scans.

pub mod edit;
pub mod incidence;
pub mod scan;

pub use edit::{contract_coloops, delete_edges, load_family, Contraction, FamilyEdit};
pub use incidence::incidence_spec;
pub use scan::{find_gap, spectrum_scan, ScanEntry, ScanRow, ScanTarget};
pub mod random;

pub use random::random_family;
