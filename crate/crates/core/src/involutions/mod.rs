//! Algebras with involution in concrete matrix models.
//!
//! Every model is a span of N×N matrices over F with the involution given by
//! an ambient rule. Kind, type, degree and capacity are read off from
//! dimensions of the centre and of the symmetric, skew and symmetrized
//! subspaces.

mod algebra;
mod embed;
mod extend;
mod forms;
mod json;
mod model;
mod prd;
mod quadratic;
mod subalgebra;

pub use algebra::{build_algebra, AlgebraWithInvolution, Classification, InvolutionType, Kind, SymmetrizedSpaces};
pub use embed::{phi, phi_image, psi, psi_image};
pub use forms::{cap2_form, QuadraticFormData};
pub use json::{
    decode_matrix, encode_matrix, AlgebraDoc, AnyAlgebra, SubalgebraDoc, SubalgebraFlags, ALGEBRA_SCHEMA,
    SUBALGEBRA_SCHEMA,
};
pub use model::{default_unitary_c, symplectic_j, Model, ModelSpec};
pub use prd::{Chi, ScalarPoly};
pub use quadratic::{artin_schreier, quadratic_split, QuadraticSplit};
pub use subalgebra::Subalgebra;

#[allow(unused_imports)]
pub(crate) use algebra::from_model;
#[allow(unused_imports)]
pub(crate) use subalgebra::min_poly;

#[cfg(test)]
mod tests;
