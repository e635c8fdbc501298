//! Split neat subalgebras from orthogonal families of symmetric idempotents.

use super::etale::eval_at;
use super::verdict::is_neat;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::involutions::{min_poly, AlgebraWithInvolution, InvolutionType, Subalgebra};
use crate::matrix::Matrix;
use crate::poly::Poly;
use crate::search::SearchOptions;
use crate::span::search_span;

/// κ(A,σ) pairwise orthogonal symmetric idempotents summing to 1 whose
/// corners have capacity 1 and the type of σ.
///
/// Recursive: a symmetrized element x with a simple eigenvalue in F splits
/// the current corner by the projections onto its simple eigenspaces and the
/// remainder; splits producing a corner of another type are skipped.
pub fn split_idempotents<F: Field>(a: &AlgebraWithInvolution<F>, opts: &SearchOptions) -> Result<Vec<Matrix<F::Elem>>> {
    let mut out = Vec::new();
    split_rec(a, a.involution_type(), opts, 1, &mut out)?;
    let f = a.field();
    out.sort_by_key(|e| {
        let pos = e.as_slice().iter().position(|x| !f.is_zero(x)).unwrap_or(usize::MAX);
        (pos, e.as_slice().iter().map(|x| f.order_key(x)).collect::<Vec<_>>())
    });
    Ok(out)
}

fn split_rec<F: Field>(
    b: &AlgebraWithInvolution<F>,
    typ: InvolutionType,
    opts: &SearchOptions,
    salt: u64,
    out: &mut Vec<Matrix<F::Elem>>,
) -> Result<()> {
    if b.capacity() <= 1 {
        out.push(b.unit().clone());
        return Ok(());
    }
    let parts = search_span(b.field(), b.syms(), &opts.fork(salt), "splitting element", |x| {
        try_split(b, typ, &x)
    })?;
    for (i, c) in parts.iter().enumerate() {
        split_rec(c, typ, opts, salt.wrapping_mul(31).wrapping_add(i as u64 + 1), out)?;
    }
    Ok(())
}

/// The corners cut out by the simple F-eigenvalues of x, if there are at
/// least two and all keep the type.
fn try_split<F: Field>(
    b: &AlgebraWithInvolution<F>,
    typ: InvolutionType,
    x: &Matrix<F::Elem>,
) -> Option<Vec<AlgebraWithInvolution<F>>> {
    let f = b.field();
    let e = b.unit();
    let m = min_poly(f, b.ambient_size(), e, x);
    if m.degree()? < 2 {
        return None;
    }
    let simple: Vec<_> = m
        .roots(f)?
        .into_iter()
        .filter(|r| m.root_multiplicity(f, r) == 1)
        .collect();
    if simple.is_empty() {
        return None;
    }
    let mut idems = Vec::new();
    let mut rest = e.clone();
    for r in &simple {
        let g = m.divrem(f, &Poly::linear(f, r)).ok()?.0;
        let w = f.inv(&g.eval(f, r))?;
        let p = eval_at(f, &g.scale(f, &w), x, e);
        rest = rest.sub(f, &p);
        idems.push(p);
    }
    if !rest.is_zero(f) {
        idems.push(rest);
    }
    let corners = idems
        .iter()
        .map(|p| b.corner(p))
        .collect::<Result<Vec<_>>>()
        .ok()?;
    corners
        .iter()
        .all(|c| c.involution_type() == typ)
        .then_some(corners)
}

/// A split neat L ≅ F^r: the split idempotents grouped into r sums of
/// κ/r each. Requires r to divide both the coindex and κ(A,σ).
pub fn split_neat<F: Field>(a: &AlgebraWithInvolution<F>, r: usize) -> Result<Subalgebra<F>> {
    split_neat_with(a, r, &a.search_options())
}

pub fn split_neat_with<F: Field>(a: &AlgebraWithInvolution<F>, r: usize, opts: &SearchOptions) -> Result<Subalgebra<F>> {
    let k = a.capacity();
    let coind = a.classification().coindex;
    if r == 0 || !k.is_multiple_of(r) || !coind.is_multiple_of(r) {
        return Err(Error::NoSplitNeat(r));
    }
    let f = a.field();
    let n = a.ambient_size();
    let idems = split_idempotents(a, opts)?;
    let sums = idems
        .chunks(k / r)
        .map(|c| c.iter().fold(Matrix::zeros(f, n, n), |acc, e| acc.add(f, e)))
        .collect();
    let l = Subalgebra::new(a, sums)?;
    let v = is_neat(a, &l);
    if !v.neat || l.dim() != r {
        return Err(Error::Verification(format!(
            "split subalgebra of degree {r} is not neat: {:?}",
            v.failed_condition
        )));
    }
    Ok(l)
}
