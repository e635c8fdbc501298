//! Deterministic instances for grid points.

use neatalg::field::{AnyField, Field};
use neatalg::involutions::{build_algebra, AlgebraWithInvolution, AnyAlgebra, ModelSpec};
use neatalg::matrix::Matrix;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::config::{GridPoint, TypeName};
use crate::error::HarnessError;

/// Seed of the instance at `index` in a run seeded with `seed`.
pub fn instance_seed(seed: u64, index: usize) -> u64 {
    seed.wrapping_add(index as u64)
}

/// An invertible symmetric m that is not alternating.
fn random_orthogonal_form<F: Field>(f: &F, d: usize, rng: &mut ChaCha8Rng) -> Matrix<F::Elem> {
    loop {
        let mut m = Matrix::zeros(f, d, d);
        for i in 0..d {
            for j in i..d {
                let x = f.random(rng);
                m.set(i, j, x.clone());
                m.set(j, i, x);
            }
        }
        let alternating = (0..d).all(|i| f.is_zero(m.get(i, i)));
        if !alternating && m.det(f).is_ok_and(|x| !f.is_zero(&x)) {
            return m;
        }
    }
}

/// The model for `point`: canonical when `seed` is 0; orthogonal points
/// with a nonzero seed use Int(m)∘t for a sampled m.
pub fn model_spec<F: Field>(f: &F, point: &GridPoint, seed: u64) -> ModelSpec<F::Elem> {
    let d = point.degree;
    match point.ty {
        TypeName::Orthogonal if seed == 0 => ModelSpec::Transpose { d },
        TypeName::Orthogonal => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            ModelSpec::Orthogonal {
                g: random_orthogonal_form(f, d, &mut rng),
            }
        }
        TypeName::Symplectic => ModelSpec::Symplectic { m: d / 2 },
        TypeName::Unitary => ModelSpec::Unitary { d, c: None, h: None },
        TypeName::UnitaryInner => ModelSpec::Switch { d },
    }
}

fn build<F: Field>(f: &F, point: &GridPoint, seed: u64) -> Result<AlgebraWithInvolution<F>, HarnessError> {
    build_algebra(f, &model_spec(f, point, seed)).map_err(|e| HarnessError::Unrealizable {
        point: point.to_string(),
        reason: e.to_string(),
    })
}

pub fn generate_instance(point: &GridPoint, seed: u64) -> Result<AnyAlgebra, HarnessError> {
    if !point.ty.realizable(point.degree) {
        return Err(HarnessError::Unrealizable {
            point: point.to_string(),
            reason: "symplectic involutions need even degree".into(),
        });
    }
    Ok(match point.field.build()? {
        AnyField::Finite(f) => AnyAlgebra::Finite(build(&f, point, seed)?),
        AnyField::Rational(q) => AnyAlgebra::Rational(build(&q, point, seed)?),
    })
}
