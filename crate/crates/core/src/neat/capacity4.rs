//! Capacity 4: elements with c₁ = c₃ = 0, neat biquadratic subalgebras, and
//! σ-stable triquadratic subalgebras of split symplectic algebras of
//! degree 8.

use super::certificate::{Certificate, CertificateKind, Certified};
use super::etale::idempotents;
use super::quadratic::{extend_neat_quadratic_with, ExtensionMethod};
use super::split::split_neat_with;
use super::verdict::is_neat;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::involutions::{min_poly, AlgebraWithInvolution, InvolutionType, Subalgebra};
use crate::matrix::Matrix;
use crate::poly::poly_separable;
use crate::search::SearchOptions;
use crate::span::{search_span, MatrixSpan};

fn c1_c3_vanish<F: Field>(a: &AlgebraWithInvolution<F>, x: &Matrix<F::Elem>) -> bool {
    let f = a.field();
    match a.chi(x) {
        Ok(chi) => f.is_zero(&chi.c[0]) && f.is_zero(&chi.c[2]),
        Err(_) => false,
    }
}

fn is_scalar<F: Field>(a: &AlgebraWithInvolution<F>, x: &Matrix<F::Elem>) -> bool {
    MatrixSpan::new(a.field(), a.ambient_size(), [a.unit().clone()]).contains(a.field(), x)
}

/// a ∈ Syms(σ) ∖ F with c₁(a) = c₃(a) = 0, for κ(A,σ) ≡ 0 mod 4.
///
/// With a split neat F × F = F f₁ ⊕ F f₂ the element f₁ − f₂ (char ≠ 2,
/// χ = (X² − 1)^{κ/2}) or f₁ (char 2, χ = X^κ + X^{κ/2}) is tried first;
/// otherwise Syms(σ) is searched directly.
pub fn find_c1c3_zero<F: Field>(a: &AlgebraWithInvolution<F>, opts: &SearchOptions) -> Result<Matrix<F::Elem>> {
    let k = a.capacity();
    if !k.is_multiple_of(4) {
        return Err(Error::Precondition(format!("κ = {k} is not divisible by 4")));
    }
    let f = a.field();
    if let Ok(l) = split_neat_with(a, 2, opts) {
        let e = idempotents(&l)?.primitive_idempotents;
        let x = if f.characteristic() == 2 {
            e[0].clone()
        } else {
            e[0].sub(f, &e[1])
        };
        if c1_c3_vanish(a, &x) && !is_scalar(a, &x) {
            return Ok(x);
        }
    }
    search_span(f, a.syms(), &opts.fork(400), "element with c₁ = c₃ = 0", |x| {
        (c1_c3_vanish(a, &x) && !is_scalar(a, &x)).then_some(x)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BiquadraticRoute {
    /// K from a split neat F × F (A has zero divisors), then extend.
    #[default]
    ZeroDivisors,
    /// K = F[a²] for a with c₁ = c₃ = 0 and χ_a = f(X²), f separable.
    C1C3,
}

/// A neat biquadratic L = K ⊗ L′ in capacity 4, certified by its two
/// quadratic generators.
pub fn neat_biquadratic<F: Field>(a: &AlgebraWithInvolution<F>) -> Result<Certified<F>> {
    neat_biquadratic_with(a, BiquadraticRoute::ZeroDivisors, &a.search_options())
}

pub fn neat_biquadratic_with<F: Field>(
    a: &AlgebraWithInvolution<F>,
    route: BiquadraticRoute,
    opts: &SearchOptions,
) -> Result<Certified<F>> {
    if a.capacity() != 4 {
        return Err(Error::Precondition(format!("capacity is {}, not 4", a.capacity())));
    }
    let f = a.field();
    let k = match route {
        BiquadraticRoute::ZeroDivisors => split_neat_with(a, 2, opts)?,
        BiquadraticRoute::C1C3 => search_span(f, a.syms(), &opts.fork(500), "square-type element", |x| {
            if !c1_c3_vanish(a, &x) {
                return None;
            }
            let g = a.chi(&x).ok()?.chi.even_part(f)?;
            if !poly_separable(f, &g).ok()? {
                return None;
            }
            let k = Subalgebra::generated(a, &[x.mul(f, &x)]).ok()?;
            (k.dim() == 2 && is_neat(a, &k).neat).then_some(k)
        })?,
    };
    let ext = extend_neat_quadratic_with(a, &k, ExtensionMethod::Auto, opts)?;
    let cert = Certificate {
        kind: CertificateKind::Biquadratic,
        generators: vec![k.basis().to_vec(), ext.l.basis().to_vec()],
        transcript: Vec::new(),
    };
    Certified::new(a, ext.kl, cert)
}

/// L[f] for a split neat biquadratic L in a symplectic algebra of degree 8:
/// in each corner eᵢAeᵢ a rank-one idempotent fᵢ with fᵢ + σ(fᵢ) = eᵢ, and
/// f = Σ fᵢ, so that f + σ(f) = 1 and f² = f.
pub fn triquadratic_split<F: Field>(
    a: &AlgebraWithInvolution<F>,
    l: &Subalgebra<F>,
    opts: &SearchOptions,
) -> Result<Certified<F>> {
    let f = a.field();
    let n = a.ambient_size();
    if a.involution_type() != InvolutionType::Symplectic || a.degree() != 8 {
        return Err(Error::Precondition("(A,σ) is not symplectic of degree 8".into()));
    }
    if l.dim() != 4 || !is_neat(a, l).neat {
        return Err(Error::Precondition("L is not a neat subalgebra of degree 4".into()));
    }
    let desc = idempotents(l)?;
    if !desc.split {
        return Err(Error::Precondition("L is not split".into()));
    }
    let e = &desc.primitive_idempotents;
    let mut fsum = Matrix::zeros(f, n, n);
    for (i, ei) in e.iter().enumerate() {
        let corner = a.corner(ei)?;
        let fi = search_span(f, corner.span(), &opts.fork(600 + i as u64), "rank-one idempotent", |y| {
            let m = min_poly(f, n, ei, &y);
            let r = m.roots(f)?;
            if m.degree() != Some(2) || r.len() != 2 {
                return None;
            }
            let w = f.inv(&f.sub(&r[0], &r[1]))?;
            let fi = y.sub(f, &ei.scale(f, &r[1])).scale(f, &w);
            (fi.add(f, &a.sigma(&fi)) == *ei).then_some(fi)
        })?;
        fsum = fsum.add(f, &fi);
    }
    if fsum.mul(f, &fsum) != fsum || fsum.add(f, &a.sigma(&fsum)) != *a.unit() {
        return Err(Error::Verification("f² = f and f + σ(f) = 1 fail".into()));
    }
    let t = l.adjoin(a, std::slice::from_ref(&fsum))?;
    let one = a.unit().clone();
    let cert = Certificate {
        kind: CertificateKind::Triquadratic,
        generators: vec![
            vec![one.clone(), e[0].add(f, &e[1])],
            vec![one.clone(), e[0].add(f, &e[2])],
            vec![one, fsum],
        ],
        transcript: Vec::new(),
    };
    Certified::new(a, t, cert)
}
