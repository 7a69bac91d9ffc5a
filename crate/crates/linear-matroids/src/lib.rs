//! Matroids represented by matrices over GF(2) or the rationals, with exact
//! arithmetic throughout.

pub mod field;
pub mod matrix;
pub mod ops;
pub mod periodic;

pub use field::FieldTag;
pub use matrix::{Gf2Basis, MatrixDoc, MatrixRep};
pub use ops::{
    build_system, incidence_matrix, linear_matroid, span_maximality_bits, span_maximality_check, verify_thin_ac_equiv,
};
pub use periodic::{nearly_thin_count, PeriodicColumn, PeriodicMatrixSpec, RowRef, ThinVerdict};
