//! Exact arithmetic and constructive algorithms for central simple algebras
//! with involution over small exact fields.

pub mod error;
pub mod field;
pub mod involutions;
pub mod linalg;
pub mod matrix;
pub mod neat;
pub mod poly;
pub mod search;
pub(crate) mod span;

pub use error::{Error, Result};
pub use span::MatrixSpan;

/// The exact layer in one place: fields, matrices, polynomials, subspaces
/// and seeded search.
pub mod exactalg {
    pub use crate::field::{AnyField, Field, FieldSpec, FiniteField, Rationals, Ring};
    pub use crate::linalg::Subspace;
    pub use crate::matrix::Matrix;
    pub use crate::poly::Poly;
    pub use crate::search::{search, SearchOptions};
    pub use crate::MatrixSpan;
}
