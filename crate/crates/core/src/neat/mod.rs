//! Neat étale subalgebras: decision procedures and constructions.
//!
//! An étale L ⊆ Symm(σ) is neat when A is free as a left L-module and every
//! nonzero idempotent of L has a corner of the same type as σ. The
//! constructions here realize maximal étale subalgebras, neat quadratic
//! extensions, neat biquadratic subalgebras in capacity 4 and σ-stable
//! triquadratic subalgebras of split symplectic algebras of degree 8. Every
//! search is deterministic for a given seed; "not found" never claims
//! nonexistence.

mod capacity4;
mod certificate;
mod etale;
mod maximal;
mod quadratic;
mod split;
mod springer;
mod verdict;

pub use capacity4::{find_c1c3_zero, neat_biquadratic, neat_biquadratic_with, triquadratic_split, BiquadraticRoute};
pub use certificate::{Certificate, CertificateKind, Certified};
pub use etale::{idempotents, idempotents_exhaustive, is_etale, primitive_element, EtaleDescription};
pub use maximal::{max_etale, max_etale_with};
pub use quadratic::{
    extend_neat_quadratic, extend_neat_quadratic_with, neat_quadratic_field, square_separable_search, stable_quaternion_cap2,
    ExtensionMethod, NeatExtension, SquareSeparable,
};
pub use split::{split_idempotents, split_neat, split_neat_with};
pub use springer::{plant_springer_instance, springer_descent, CubicForm, SpringerInstance};
pub use verdict::{idempotents_keep_type, is_neat, NeatFailure, NeatVerdict};

#[cfg(test)]
mod tests;
