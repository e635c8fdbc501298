//! The embeddings Φ: (M_m, t) → (M_2m, s) and Ψ: (A₀ × A₀^op, sw) → (M_2m, s).

use super::algebra::{build_algebra, AlgebraWithInvolution};
use super::model::ModelSpec;
use super::subalgebra::Subalgebra;
use crate::error::Result;
use crate::field::Field;
use crate::matrix::Matrix;

/// Φ(α) = diag(α, α).
pub fn phi<F: Field>(f: &F, alpha: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    Matrix::block_diag(f, &[alpha, alpha])
}

/// Ψ(α, β^op) = diag(α, βᵗ).
pub fn psi<F: Field>(f: &F, alpha: &Matrix<F::Elem>, beta: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    Matrix::block_diag(f, &[alpha, &beta.transpose()])
}

/// (M_2m(F), s) with the image of Φ as a subalgebra.
pub fn phi_image<F: Field>(f: &F, m: usize) -> Result<(AlgebraWithInvolution<F>, Subalgebra<F>)> {
    let target = build_algebra(f, &ModelSpec::Symplectic { m })?;
    let mut gens = Vec::new();
    for i in 0..m {
        for j in 0..m {
            gens.push(phi(f, &Matrix::unit(f, m, i, j)));
        }
    }
    let img = Subalgebra::new(&target, gens)?;
    Ok((target, img))
}

/// (M_2m(F), s) with the image of Ψ as a subalgebra.
pub fn psi_image<F: Field>(f: &F, m: usize) -> Result<(AlgebraWithInvolution<F>, Subalgebra<F>)> {
    let target = build_algebra(f, &ModelSpec::Symplectic { m })?;
    let z = Matrix::zeros(f, m, m);
    let mut gens = Vec::new();
    for i in 0..m {
        for j in 0..m {
            let e = Matrix::unit(f, m, i, j);
            gens.push(psi(f, &e, &z));
            gens.push(psi(f, &z, &e));
        }
    }
    let img = Subalgebra::new(&target, gens)?;
    Ok((target, img))
}
