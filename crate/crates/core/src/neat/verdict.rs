//! The neatness decision procedure.

use serde::{Deserialize, Serialize};

use super::etale::idempotents;
use crate::field::Field;
use crate::involutions::{AlgebraWithInvolution, InvolutionType, Subalgebra};
use crate::matrix::Matrix;
use crate::span::{closure, MatrixSpan};

/// The first neatness condition that fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum NeatFailure {
    NotEtale,
    NotInSymm,
    /// [L:F]·dim C_A(L) ≠ dim A, with all dimensions over the base field.
    NotFree {
        degree: usize,
        centralizer_dim: usize,
        algebra_dim: usize,
    },
    /// A nonzero idempotent whose corner has a different involution type.
    BadIdempotent,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeatVerdict<E> {
    pub neat: bool,
    pub failed_condition: Option<NeatFailure>,
    pub witness: Option<Matrix<E>>,
}

impl<E> NeatVerdict<E> {
    fn pass() -> Self {
        NeatVerdict {
            neat: true,
            failed_condition: None,
            witness: None,
        }
    }

    fn fail(c: NeatFailure, witness: Option<Matrix<E>>) -> Self {
        NeatVerdict {
            neat: false,
            failed_condition: Some(c),
            witness,
        }
    }
}

/// Decides whether L is neat in (A, σ): étale, inside Symm(σ), A free as a
/// left L-module (tested by the dimension identity), and, for orthogonal σ
/// in characteristic 2, no nonzero idempotent of L in Symd(σ).
///
/// For a switch model the identity over A = A₀ × A₀^op is twice the one over
/// A₀, so the global test agrees with the test in the first component.
pub fn is_neat<F: Field>(a: &AlgebraWithInvolution<F>, l: &Subalgebra<F>) -> NeatVerdict<F::Elem> {
    let f = a.field();
    if !l.is_commutative() || !l.is_etale() {
        let witness = radical_witness(l);
        return NeatVerdict::fail(NeatFailure::NotEtale, witness);
    }
    if let Some(b) = l.basis().iter().find(|b| !a.is_symmetric(b)) {
        return NeatVerdict::fail(NeatFailure::NotInSymm, Some(b.clone()));
    }
    // dimensions over the base field Z ∩ Symm; L is enlarged by the base
    let k = a.base().dim();
    let lb = if k == 1 {
        l.basis().to_vec()
    } else {
        let mut start = l.basis().to_vec();
        start.extend(a.base().basis().iter().cloned());
        closure(f, a.ambient_size(), start)
    };
    let lb = MatrixSpan::new(f, a.ambient_size(), lb);
    let c = a.centralizer_of(lb.basis()).dim();
    let (deg, cdim, adim) = (lb.dim() / k, c / k, a.dim() / k);
    if deg * cdim != adim {
        return NeatVerdict::fail(
            NeatFailure::NotFree {
                degree: deg,
                centralizer_dim: cdim,
                algebra_dim: adim,
            },
            None,
        );
    }
    if f.characteristic() == 2 && a.involution_type() == InvolutionType::Orthogonal {
        let desc = match idempotents(l) {
            Ok(d) => d,
            Err(_) => return NeatVerdict::fail(NeatFailure::NotEtale, None),
        };
        if desc.rank() <= 16 {
            if let Some(e) = desc
                .all_idempotents(f)
                .into_iter()
                .skip(1)
                .find(|e| a.symd().contains(f, e))
            {
                return NeatVerdict::fail(NeatFailure::BadIdempotent, Some(e));
            }
        }
    }
    NeatVerdict::pass()
}

/// A nonzero element of the radical of the trace form (or a non-commuting
/// basis element).
fn radical_witness<F: Field>(l: &Subalgebra<F>) -> Option<Matrix<F::Elem>> {
    let f = l.field();
    if !l.is_commutative() {
        let b = l.basis();
        return b
            .iter()
            .find(|x| b.iter().any(|y| x.mul(f, y) != y.mul(f, x)))
            .cloned();
    }
    l.trace_form().kernel(f).first().map(|c| l.element(c))
}

/// Whether every nonzero idempotent of L has a corner of the same type as
/// (A, σ), checked by building each corner.
pub fn idempotents_keep_type<F: Field>(a: &AlgebraWithInvolution<F>, l: &Subalgebra<F>) -> crate::Result<bool> {
    let desc = idempotents(l)?;
    let t = a.involution_type();
    for e in desc.all_idempotents(a.field()).into_iter().skip(1) {
        if a.corner(&e)?.involution_type() != t {
            return Ok(false);
        }
    }
    Ok(true)
}
