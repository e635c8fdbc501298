//! Extending a neat quadratic subalgebra: square-separable elements, the
//! neat extension KL of degree κ, and σ-stable quaternions in capacity 2.

use super::certificate::{Certificate, CertificateKind, Certified};
use super::etale::idempotents;
use super::split::split_idempotents;
use super::verdict::is_neat;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::involutions::{quadratic_split, AlgebraWithInvolution, Subalgebra};
use crate::matrix::Matrix;
use crate::poly::{poly_separable, Poly};
use crate::search::SearchOptions;
use crate::span::{search_span, MatrixSpan};

/// A square-separable element a: invertible, in C′_A(K) ∩ Symm(σ), with
/// χ_a(X) = f(X²) for a separable f.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareSeparable<E> {
    pub element: Matrix<E>,
    pub even_part: Poly<E>,
    /// |F| > κ(A,σ), the hypothesis under which existence is known.
    pub hypothesis_holds: bool,
}

fn check_neat_quadratic<F: Field>(a: &AlgebraWithInvolution<F>, k: &Subalgebra<F>) -> Result<()> {
    if k.dim() != 2 || !k.contains(a.unit()) {
        return Err(Error::Precondition("K is not a unital quadratic subalgebra".into()));
    }
    let v = is_neat(a, k);
    if !v.neat {
        return Err(Error::Precondition(format!("K is not neat: {:?}", v.failed_condition)));
    }
    Ok(())
}

pub(crate) fn hypothesis_holds<F: Field>(a: &AlgebraWithInvolution<F>) -> bool {
    a.field().cardinality().is_none_or(|q| q > a.capacity() as u64)
}

pub fn square_separable_search<F: Field>(
    a: &AlgebraWithInvolution<F>,
    k: &Subalgebra<F>,
    opts: &SearchOptions,
) -> Result<SquareSeparable<F::Elem>> {
    check_neat_quadratic(a, k)?;
    let f = a.field();
    let split = quadratic_split(a, k)?;
    let w = split.twisted.intersect(f, a.symm());
    let (element, even_part) = search_span(f, &w, opts, "square-separable element", |x| {
        let chi = a.chi(&x).ok()?.chi;
        if f.is_zero(&chi.coeff(f, 0)) {
            return None;
        }
        let g = chi.even_part(f)?;
        poly_separable(f, &g).ok()?.then_some((x, g))
    })?;
    Ok(SquareSeparable {
        element,
        even_part,
        hypothesis_holds: hypothesis_holds(a),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExtensionMethod {
    /// Idempotents for split K over finite fields; otherwise a
    /// square-separable element, falling back to idempotents over finite
    /// fields when none is found.
    #[default]
    Auto,
    SquareSeparable,
    Idempotent,
}

/// L with KL neat of degree κ(A,σ), L ⊆ C_A(K) and K, L linearly disjoint.
#[derive(Debug, Clone)]
pub struct NeatExtension<F: Field> {
    pub l: Subalgebra<F>,
    pub kl: Subalgebra<F>,
    /// The square-separable element when L = F[a²].
    pub element: Option<Matrix<F::Elem>>,
    pub method: ExtensionMethod,
}

pub fn extend_neat_quadratic<F: Field>(a: &AlgebraWithInvolution<F>, k: &Subalgebra<F>) -> Result<NeatExtension<F>> {
    extend_neat_quadratic_with(a, k, ExtensionMethod::Auto, &a.search_options())
}

pub fn extend_neat_quadratic_with<F: Field>(
    a: &AlgebraWithInvolution<F>,
    k: &Subalgebra<F>,
    method: ExtensionMethod,
    opts: &SearchOptions,
) -> Result<NeatExtension<F>> {
    check_neat_quadratic(a, k)?;
    let f = a.field();
    let kap = a.capacity();
    if kap == 2 {
        let l = Subalgebra::generated(a, &[])?;
        return finish(a, k, l, None, method);
    }
    let split = idempotents(k)?.split;
    let finite = f.is_finite();
    let small = f.cardinality().is_some_and(|q| q <= kap as u64);
    let method = match method {
        ExtensionMethod::Auto if finite && (split || small) => ExtensionMethod::Idempotent,
        ExtensionMethod::Auto => match square_separable_search(a, k, opts) {
            Ok(s) => return via_square(a, k, s.element),
            Err(Error::NotFound { .. }) if finite => ExtensionMethod::Idempotent,
            Err(e) => return Err(e),
        },
        m => m,
    };
    match method {
        ExtensionMethod::SquareSeparable => {
            let s = square_separable_search(a, k, opts)?;
            via_square(a, k, s.element)
        }
        _ => {
            let l = via_idempotents(a, k, opts)?;
            finish(a, k, l, None, ExtensionMethod::Idempotent)
        }
    }
}

fn via_square<F: Field>(a: &AlgebraWithInvolution<F>, k: &Subalgebra<F>, x: Matrix<F::Elem>) -> Result<NeatExtension<F>> {
    let sq = x.mul(a.field(), &x);
    let l = Subalgebra::generated(a, &[sq])?;
    finish(a, k, l, Some(x), ExtensionMethod::SquareSeparable)
}

/// For K ≅ F × F with idempotents e₁, e₂: L = span(f₁ⱼ + f₂ⱼ) from split
/// idempotents fᵢⱼ of the corners eᵢAeᵢ. For a field K: the split
/// idempotents of (C_A(K), σ|) over K.
fn via_idempotents<F: Field>(
    a: &AlgebraWithInvolution<F>,
    k: &Subalgebra<F>,
    opts: &SearchOptions,
) -> Result<Subalgebra<F>> {
    let f = a.field();
    let desc = idempotents(k)?;
    let basis = if desc.split {
        let mut halves = Vec::new();
        for (i, e) in desc.primitive_idempotents.iter().enumerate() {
            halves.push(split_idempotents(&a.corner(e)?, &opts.fork(200 + i as u64))?);
        }
        if halves[0].len() != halves[1].len() {
            return Err(Error::Verification("corners of K have different capacities".into()));
        }
        halves[0].iter().zip(&halves[1]).map(|(x, y)| x.add(f, y)).collect()
    } else {
        split_idempotents(&a.centralizer_algebra(k)?, &opts.fork(300))?
    };
    Subalgebra::new(a, basis)
}

fn finish<F: Field>(
    a: &AlgebraWithInvolution<F>,
    k: &Subalgebra<F>,
    l: Subalgebra<F>,
    element: Option<Matrix<F::Elem>>,
    method: ExtensionMethod,
) -> Result<NeatExtension<F>> {
    let f = a.field();
    let kl = k.adjoin(a, l.basis())?;
    let fail = |what: &str| Err(Error::Verification(format!("neat extension: {what}")));
    if !is_neat(a, &l).neat {
        return fail("L is not neat");
    }
    if kl.dim() != k.dim() * l.dim() {
        return fail("K and L are not linearly disjoint");
    }
    if kl.dim() != a.capacity() || !is_neat(a, &kl).neat {
        return fail("KL is not neat of degree κ");
    }
    let commutes = l
        .basis()
        .iter()
        .all(|x| k.basis().iter().all(|y| x.mul(f, y) == y.mul(f, x)));
    if !commutes {
        return fail("L is not in C_A(K)");
    }
    Ok(NeatExtension { l, kl, element, method })
}

/// Q = K ⊕ Kx for x ∈ C′_A(K) ∩ Symm(σ) with x² ∈ F^×, in capacity 2.
pub fn stable_quaternion_cap2<F: Field>(
    a: &AlgebraWithInvolution<F>,
    k: &Subalgebra<F>,
    opts: &SearchOptions,
) -> Result<Certified<F>> {
    if a.capacity() != 2 {
        return Err(Error::Precondition("capacity is not 2".into()));
    }
    check_neat_quadratic(a, k)?;
    let f = a.field();
    let n = a.ambient_size();
    let split = quadratic_split(a, k)?;
    let w = split.twisted.intersect(f, a.symm());
    let unit_line = MatrixSpan::new(f, n, [a.unit().clone()]);
    let x = search_span(f, &w, opts, "anisotropic vector of c₂", |x| {
        let c = unit_line.coords(f, &x.mul(f, &x))?;
        (!f.is_zero(&c[0])).then_some(x)
    })
    .map_err(|e| Error::Verification(format!("c₂ should be anisotropic somewhere on C′ ∩ Symm: {e}")))?;
    let mut basis = k.basis().to_vec();
    basis.extend(k.basis().iter().map(|b| b.mul(f, &x)));
    let q = Subalgebra::new(a, basis)?;
    let cert = Certificate {
        kind: CertificateKind::Quaternion,
        generators: vec![k.basis().to_vec(), vec![x]],
        transcript: Vec::new(),
    };
    Certified::new(a, q, cert)
}

/// A neat quadratic subalgebra K = F[x] ⊆ Syms(σ) that is a field: the
/// first x in search order with irreducible quadratic minimal polynomial
/// and F[x] neat.
pub fn neat_quadratic_field<F: Field>(a: &AlgebraWithInvolution<F>, opts: &SearchOptions) -> Result<Subalgebra<F>> {
    if !a.capacity().is_multiple_of(2) {
        return Err(Error::Precondition(format!("κ = {} is odd", a.capacity())));
    }
    if let Some(q) = a.field().cardinality() {
        if let Ok(k) = quadratic_inside_field(a, q, opts) {
            return Ok(k);
        }
    }
    let f = a.field();
    search_span(f, a.syms(), &opts.fork(700), "neat quadratic field", |x| {
        let k = Subalgebra::generated(a, std::slice::from_ref(&x)).ok()?;
        if k.dim() != 2 || !k.min_poly(&x).roots(f)?.is_empty() {
            return None;
        }
        is_neat(a, &k).neat.then_some(k)
    })
}

/// Over F_q: a field L = F[x] of degree κ inside Syms, then K = L^{Frob²}
/// generated by a trace Σ z^{q^{2i}}.
fn quadratic_inside_field<F: Field>(a: &AlgebraWithInvolution<F>, q: u64, opts: &SearchOptions) -> Result<Subalgebra<F>> {
    let f = a.field();
    let kappa = a.capacity();
    let l = search_span(f, a.syms(), &opts.fork(701), "field of degree κ", |x| {
        let l = Subalgebra::generated(a, &[x]).ok()?;
        if l.dim() != kappa || !l.is_etale() {
            return None;
        }
        (idempotents(&l).ok()?.rank() == 1).then_some(l)
    })?;
    let mut rng = opts.fork(702).rng();
    for _ in 0..64 {
        let c: Vec<_> = (0..l.dim()).map(|_| f.random(&mut rng)).collect();
        let mut z = l.span().element(f, &c);
        let mut y = z.clone();
        for _ in 1..kappa / 2 {
            z = z.pow(f, q).pow(f, q);
            y = y.add(f, &z);
        }
        let k = Subalgebra::generated(a, std::slice::from_ref(&y))?;
        if k.dim() == 2 && is_neat(a, &k).neat {
            return Ok(k);
        }
    }
    Err(Error::NotFound {
        what: "quadratic subfield".into(),
        budget: 64,
    })
}
