//! Maximal étale subalgebras of the symmetrized elements.

use super::etale::idempotents;
use super::split::split_neat_with;
use super::verdict::is_neat;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::involutions::{AlgebraWithInvolution, Subalgebra};
use crate::matrix::Matrix;
use crate::poly::poly_separable;
use crate::search::SearchOptions;
use crate::span::{closure, commutant, kernel_within, search_span, MatrixSpan};

/// An étale L ⊆ Symm(σ) with [L:F] = κ(A,σ), containing K and free over it
/// when K is given.
pub fn max_etale<F: Field>(a: &AlgebraWithInvolution<F>, containing: Option<&Subalgebra<F>>) -> Result<Subalgebra<F>> {
    max_etale_with(a, containing, &a.search_options())
}

pub fn max_etale_with<F: Field>(
    a: &AlgebraWithInvolution<F>,
    containing: Option<&Subalgebra<F>>,
    opts: &SearchOptions,
) -> Result<Subalgebra<F>> {
    let l = match containing {
        None => generic(a, opts)?,
        Some(k) => over(a, k, opts)?,
    };
    let v = is_neat(a, &l);
    if l.dim() != a.capacity() || !v.neat {
        return Err(Error::Verification(format!(
            "maximal étale subalgebra of degree {} is not neat: {:?}",
            l.dim(),
            v.failed_condition
        )));
    }
    Ok(l)
}

/// F[a] for the first invertible a ∈ Syms(σ) with separable χ_a; then
/// without invertibility; then the split construction.
fn generic<F: Field>(a: &AlgebraWithInvolution<F>, opts: &SearchOptions) -> Result<Subalgebra<F>> {
    let f = a.field();
    let k = a.capacity();
    for need_unit in [true, false] {
        let found = search_span(f, a.syms(), &opts.fork(need_unit as u64), "separable element", |x| {
            let chi = a.chi(&x).ok()?.chi;
            if need_unit && f.is_zero(&chi.coeff(f, 0)) {
                return None;
            }
            if !poly_separable(f, &chi).ok()? {
                return None;
            }
            let l = Subalgebra::generated(a, &[x]).ok()?;
            (l.dim() == k).then_some(l)
        });
        match found {
            Ok(l) => return Ok(l),
            Err(Error::NotFound { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    split_neat_with(a, k, opts)
}

/// Per primitive idempotent eᵢ of K, a Kᵢ[aᵢ] of dimension (κ/[K:F])·[Kᵢ:F]
/// with aᵢ ∈ eᵢ(Syms(σ) ∩ C_A(K)); L is their sum.
fn over<F: Field>(a: &AlgebraWithInvolution<F>, k: &Subalgebra<F>, opts: &SearchOptions) -> Result<Subalgebra<F>> {
    let f = a.field();
    let n = a.ambient_size();
    let kap = a.capacity();
    if !k.is_etale() || !k.in_symm() || !k.contains(a.unit()) {
        return Err(Error::Precondition("K must be étale, symmetric and unital in A".into()));
    }
    if !kap.is_multiple_of(k.dim()) {
        return Err(Error::Precondition(format!("[K:F] = {} does not divide κ = {kap}", k.dim())));
    }
    let rank = kap / k.dim();
    let cent = commutant(f, a.syms().basis(), k.basis().iter().cloned());
    let desc = idempotents(k)?;
    let mut basis: Vec<Matrix<F::Elem>> = Vec::new();
    for (i, e) in desc.primitive_idempotents.iter().enumerate() {
        let ki: Vec<_> = k.basis().iter().map(|b| e.mul(f, b)).collect();
        let target = rank * MatrixSpan::new(f, n, ki.iter().cloned()).dim();
        let space = MatrixSpan::new(f, n, kernel_within(f, &cent, |x| e.mul(f, x).sub(f, x)));
        let part = search_span(f, &space, &opts.fork(100 + i as u64), "étale extension in a corner", |x| {
            let mut start = ki.clone();
            start.push(x);
            let b = closure(f, n, start);
            if b.len() != target {
                return None;
            }
            let li = Subalgebra::new(a, b).ok()?;
            li.is_etale().then(|| li.basis().to_vec())
        })?;
        basis.extend(part);
    }
    let l = Subalgebra::new(a, basis)?;
    if !l.contains_sub(k) || !l.is_etale() || !l.in_symm() {
        return Err(Error::Verification("assembled subalgebra is not an étale extension of K".into()));
    }
    Ok(l)
}
