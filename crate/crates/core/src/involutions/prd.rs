//! Reduced and Pfaffian characteristic polynomials.

use super::algebra::{AlgebraWithInvolution, InvolutionType};
use crate::error::{Error, Result};
use crate::field::{Field, QuadRing};
use crate::linalg::Subspace;
use crate::matrix::Matrix;
use crate::poly::{poly_sqrt_monic, poly_sqrt_monic_with, Poly};

/// A polynomial over F, or over K = F[θ]/(θ² − θ − c).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScalarPoly<E> {
    Base(Poly<E>),
    Quadratic { c: E, poly: Poly<(E, E)> },
}

impl<E: Clone + PartialEq + Eq + std::hash::Hash + std::fmt::Debug + Send + Sync> ScalarPoly<E> {
    /// Rewrites a K-polynomial with all coefficients in F as a base one.
    pub fn normalized<F: Field<Elem = E>>(self, f: &F) -> Self {
        match self {
            ScalarPoly::Quadratic { c, poly } => match poly_in_base(f, &poly) {
                Some(p) => ScalarPoly::Base(p),
                None => ScalarPoly::Quadratic { c, poly },
            },
            b => b,
        }
    }

    /// The polynomial over F, when its coefficients lie there.
    pub fn in_base<F: Field<Elem = E>>(&self, f: &F) -> Option<Poly<E>> {
        match self {
            ScalarPoly::Base(p) => Some(p.clone()),
            ScalarPoly::Quadratic { poly, .. } => poly_in_base(f, poly),
        }
    }

    pub fn degree(&self) -> Option<usize> {
        match self {
            ScalarPoly::Base(p) => p.degree(),
            ScalarPoly::Quadratic { poly, .. } => poly.degree(),
        }
    }

    /// p(X²).
    pub fn compose_square<F: Field<Elem = E>>(&self, f: &F) -> Self {
        match self {
            ScalarPoly::Base(p) => ScalarPoly::Base(p.compose_square(f)),
            ScalarPoly::Quadratic { c, poly } => ScalarPoly::Quadratic {
                c: c.clone(),
                poly: poly.compose_square(&QuadRing::new(f.clone(), c.clone())),
            },
        }
    }

    /// Whether only even powers of X occur.
    pub fn is_even<F: Field<Elem = E>>(&self, f: &F) -> bool {
        match self {
            ScalarPoly::Base(p) => p.coeffs().iter().skip(1).step_by(2).all(|x| f.is_zero(x)),
            ScalarPoly::Quadratic { poly, .. } => poly
                .coeffs()
                .iter()
                .skip(1)
                .step_by(2)
                .all(|x| f.is_zero(&x.0) && f.is_zero(&x.1)),
        }
    }

    pub fn display<F: Field<Elem = E>>(&self, f: &F) -> String {
        match self {
            ScalarPoly::Base(p) => p.display(f),
            ScalarPoly::Quadratic { poly, .. } => {
                let terms: Vec<String> = poly
                    .coeffs()
                    .iter()
                    .enumerate()
                    .rev()
                    .filter(|(_, x)| !(f.is_zero(&x.0) && f.is_zero(&x.1)))
                    .map(|(i, x)| format!("({}+{}θ)X^{i}", f.display(&x.0), f.display(&x.1)))
                    .collect();
                if terms.is_empty() {
                    "0".into()
                } else {
                    terms.join(" + ")
                }
            }
        }
    }
}

fn poly_in_base<F: Field>(f: &F, p: &Poly<(F::Elem, F::Elem)>) -> Option<Poly<F::Elem>> {
    let c = p
        .coeffs()
        .iter()
        .map(|x| f.is_zero(&x.1).then(|| x.0.clone()))
        .collect::<Option<Vec<_>>>()?;
    Some(Poly::new(f, c))
}

/// χ_a together with its signed coefficients:
/// χ_a = X^d − c₁X^{d−1} + c₂X^{d−2} − ⋯ + (−1)^d c_d.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chi<E> {
    pub chi: Poly<E>,
    pub c: Vec<E>,
}

impl<E: Clone> Chi<E> {
    /// c_i for 1 ≤ i ≤ d.
    pub fn coeff(&self, i: usize) -> &E {
        &self.c[i - 1]
    }
}

/// The space on which elements act for Prd: an F-basis, grouped as
/// (w, θw) pairs when there is a scalar structure.
#[derive(Debug, Clone)]
pub(crate) struct Module<E> {
    block: Option<usize>,
    gens: Vec<Vec<E>>,
    space: Subspace<E>,
    c: Option<E>,
}

impl<F: Field> AlgebraWithInvolution<F> {
    fn module(&self) -> Result<&Module<F::Elem>> {
        self.module_cache()
            .get_or_init(|| build_module(self))
            .as_ref()
            .map_err(|e| Error::Unsupported(e.clone()))
    }

    /// Prd_{A,a}: the characteristic polynomial of `a` on a simple module in
    /// the split model, over the centre's scalar structure when there is one.
    pub fn reduced_char_poly(&self, a: &Matrix<F::Elem>) -> Result<ScalarPoly<F::Elem>> {
        if !self.contains(a) {
            return Err(Error::NotInAlgebra);
        }
        let f = self.field();
        let m = self.module()?;
        let a = match m.block {
            Some(d) => a.block(0, 0, d, d),
            None => a.clone(),
        };
        let k = m.gens.len();
        match &m.c {
            None => {
                let mat = Matrix::from_fn(k, k, |_, _| f.zero());
                let mut mat = mat;
                for (j, w) in m.gens.iter().enumerate() {
                    let co = m.space.coords(f, &a.mul_vec(f, w)).ok_or_else(|| {
                        Error::InvalidAlgebra("module not stable under the algebra".into())
                    })?;
                    for (i, x) in co.into_iter().enumerate() {
                        mat.set(i, j, x);
                    }
                }
                Ok(ScalarPoly::Base(mat.char_poly(f)?))
            }
            Some(c) => {
                let q = QuadRing::new(f.clone(), c.clone());
                let mut mat = Matrix::zeros(&q, k, k);
                for (j, w) in m.gens.iter().enumerate() {
                    let co = m.space.coords(f, &a.mul_vec(f, w)).ok_or_else(|| {
                        Error::InvalidAlgebra("module not stable under the algebra".into())
                    })?;
                    for i in 0..k {
                        mat.set(i, j, (co[2 * i].clone(), co[2 * i + 1].clone()));
                    }
                }
                Ok(ScalarPoly::Quadratic {
                    c: c.clone(),
                    poly: mat.char_poly(&q)?,
                })
            }
        }
    }

    /// χ_a over the base scalars: Prd, or its monic square root for
    /// symplectic involutions. For centralizers over a quadratic subfield the
    /// coefficients live in that subfield.
    pub fn chi_scalar(&self, a: &Matrix<F::Elem>) -> Result<ScalarPoly<F::Elem>> {
        if !self.contains(a) {
            return Err(Error::NotInAlgebra);
        }
        if !self.syms().contains(self.field(), a) {
            return Err(Error::NotSymmetrized);
        }
        let prd = self.reduced_char_poly(a)?;
        if self.involution_type() != InvolutionType::Symplectic {
            return Ok(prd);
        }
        let f = self.field();
        Ok(match prd {
            ScalarPoly::Base(p) => ScalarPoly::Base(poly_sqrt_monic(f, &p)?),
            ScalarPoly::Quadratic { c, poly } => {
                let q = QuadRing::new(f.clone(), c.clone());
                let char_two = f.characteristic() == 2;
                let half = f.inv(&f.from_i64(2)).map(|h| q.embed(&h));
                let root = poly_sqrt_monic_with(&q, &poly, char_two, half.as_ref(), |x| q.sqrt_char2(x))?;
                ScalarPoly::Quadratic { c, poly: root }
            }
        })
    }

    /// χ_a with coefficients in F, and the forms c₁..c_d.
    pub fn chi(&self, a: &Matrix<F::Elem>) -> Result<Chi<F::Elem>> {
        let f = self.field();
        let p = self
            .chi_scalar(a)?
            .in_base(f)
            .ok_or(Error::CoefficientsNotInBase)?;
        Ok(chi_from_poly(f, p))
    }
}

pub(crate) fn chi_from_poly<F: Field>(f: &F, p: Poly<F::Elem>) -> Chi<F::Elem> {
    let d = p.degree().unwrap_or(0);
    let c = (1..=d)
        .map(|i| {
            let x = p.coeff(f, d - i);
            if i % 2 == 1 {
                f.neg(&x)
            } else {
                x
            }
        })
        .collect();
    Chi { chi: p, c }
}

fn build_module<F: Field>(a: &AlgebraWithInvolution<F>) -> std::result::Result<Module<F::Elem>, String> {
    let f = a.field();
    let r = a.realization();
    if let Some(why) = &r.unsupported {
        return Err(why.clone());
    }
    let cut = |m: &Matrix<F::Elem>| match r.block {
        Some(d) => m.block(0, 0, d, d),
        None => m.clone(),
    };
    let unit = cut(a.unit());
    let size = unit.rows();
    let cols = (0..size).map(|j| (0..size).map(|i| unit.get(i, j).clone()).collect::<Vec<_>>());
    let image = Subspace::span(f, size, cols);
    let expected = a.degree();
    match &r.scalar {
        None => {
            if image.dim() != expected {
                return Err(format!(
                    "module of dimension {} for degree {expected}",
                    image.dim()
                ));
            }
            Ok(Module {
                block: r.block,
                gens: image.basis().to_vec(),
                space: image,
                c: None,
            })
        }
        Some((theta, c)) => {
            let theta = cut(theta);
            let mut space = Subspace::zero(size);
            let mut gens = Vec::new();
            // over a split scalar ring a pure eigenvector never completes a
            // pair, so sums of basis vectors are tried as well
            let b = image.basis();
            let sums = (0..b.len()).flat_map(|i| {
                (i + 1..b.len()).map(move |j| b[i].iter().zip(&b[j]).map(|(x, y)| f.add(x, y)).collect())
            });
            for v in b.iter().cloned().chain(sums) {
                if space.dim() == image.dim() {
                    break;
                }
                if space.contains(f, &v) {
                    continue;
                }
                let tv = theta.mul_vec(f, &v);
                let mut trial = space.clone();
                if trial.push(f, v.clone()) && trial.push(f, tv) {
                    space = trial;
                    gens.push(v);
                }
            }
            if space.dim() != image.dim() {
                return Err("module is not free over the scalar structure".into());
            }
            if gens.len() != expected {
                return Err(format!("module of rank {} for degree {expected}", gens.len()));
            }
            Ok(Module {
                block: r.block,
                gens,
                space,
                c: Some(c.clone()),
            })
        }
    }
}
