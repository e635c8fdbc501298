//! Étale subalgebras: the trace-form test, primitive idempotents and
//! primitive elements of split étale algebras.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::involutions::{min_poly, Subalgebra};
use crate::matrix::Matrix;
use crate::poly::Poly;
use crate::search::{exhaustive_size, SearchOptions};
use crate::span::{kernel_within, search_span, MatrixSpan};

/// Decomposition of an étale algebra L = ∏ Lᵢ into its simple components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaleDescription<E> {
    /// Pairwise orthogonal, summing to the unit of L; sorted by the
    /// row-major position of their first nonzero entry.
    pub primitive_idempotents: Vec<Matrix<E>>,
    /// Minimal polynomial over F of a generator of each component eᵢL.
    pub component_minpolys: Vec<Poly<E>>,
    /// Every component is F itself.
    pub split: bool,
}

impl<E: Clone + PartialEq> EtaleDescription<E> {
    pub fn rank(&self) -> usize {
        self.primitive_idempotents.len()
    }

    /// [Lᵢ : F] for each component.
    pub fn component_degrees(&self) -> Vec<usize> {
        self.component_minpolys
            .iter()
            .map(|p| p.degree().unwrap_or(0))
            .collect()
    }

    /// All 2^r idempotents, as subset sums indexed by bitmask (bit i selects
    /// eᵢ); index 0 is the zero matrix.
    pub fn all_idempotents<F: Field<Elem = E>>(&self, f: &F) -> Vec<Matrix<E>> {
        let n = self.primitive_idempotents[0].rows();
        let r = self.rank();
        (0u64..1 << r)
            .map(|mask| {
                (0..r)
                    .filter(|i| mask >> i & 1 == 1)
                    .fold(Matrix::zeros(f, n, n), |acc, i| acc.add(f, &self.primitive_idempotents[i]))
            })
            .collect()
    }
}

/// Whether the trace form of L is nondegenerate.
pub fn is_etale<F: Field>(l: &Subalgebra<F>) -> Result<bool> {
    if !l.is_commutative() {
        return Err(Error::Precondition("L is not commutative".into()));
    }
    Ok(l.is_etale())
}

/// p(x) with `unit` standing for X⁰.
pub(crate) fn eval_at<F: Field>(
    f: &F,
    p: &Poly<F::Elem>,
    x: &Matrix<F::Elem>,
    unit: &Matrix<F::Elem>,
) -> Matrix<F::Elem> {
    let n = x.rows();
    p.coeffs()
        .iter()
        .rev()
        .fold(Matrix::zeros(f, n, n), |acc, c| acc.mul(f, x).add(f, &unit.scale(f, c)))
}

/// Primitive idempotents and component minimal polynomials of an étale L.
///
/// Over GF(q) the idempotents span the fixed points of x ↦ x^q, an algebra
/// isomorphic to F^r; eigenvalue projections of its basis elements refine
/// the unit into the r primitive idempotents. Over ℚ a primitive element is
/// sampled and its minimal polynomial split into rational roots and at most
/// one residual factor of degree ≤ 3.
pub fn idempotents<F: Field>(l: &Subalgebra<F>) -> Result<EtaleDescription<F::Elem>> {
    if !is_etale(l)? {
        return Err(Error::Precondition("L is not étale".into()));
    }
    let f = l.field();
    let mut parts = match f.cardinality() {
        Some(q) => {
            let idems = frobenius_idempotents(l, q);
            idems
                .into_iter()
                .map(|e| {
                    let p = component_minpoly(l, &e)?;
                    Ok((e, p))
                })
                .collect::<Result<Vec<_>>>()?
        }
        None => primitive_element_idempotents(l)?,
    };
    parts.sort_by_key(|(e, _)| idempotent_key(f, e));
    let split = parts.iter().all(|(_, p)| p.degree() == Some(1));
    let (primitive_idempotents, component_minpolys) = parts.into_iter().unzip();
    Ok(EtaleDescription {
        primitive_idempotents,
        component_minpolys,
        split,
    })
}

fn idempotent_key<F: Field>(f: &F, e: &Matrix<F::Elem>) -> (usize, Vec<crate::field::OrderKey>) {
    let pos = e.as_slice().iter().position(|x| !f.is_zero(x)).unwrap_or(usize::MAX);
    (pos, e.as_slice().iter().map(|x| f.order_key(x)).collect())
}

fn frobenius_idempotents<F: Field>(l: &Subalgebra<F>, q: u64) -> Vec<Matrix<F::Elem>> {
    let f = l.field();
    let n = l.ambient_size();
    // x ↦ x^q − x is F-linear on a commutative algebra over GF(q)
    let fixed = kernel_within(f, l.basis(), |x| x.pow(f, q).sub(f, x));
    let mut idems = vec![l.unit().clone()];
    for s in &fixed {
        let mut next = Vec::new();
        for e in idems {
            let x = s.mul(f, &e);
            let roots = min_poly(f, n, &e, &x).roots(f).expect("finite field");
            if roots.len() <= 1 {
                next.push(e);
                continue;
            }
            for (j, lj) in roots.iter().enumerate() {
                let mut p = Poly::one(f);
                for (k, lk) in roots.iter().enumerate() {
                    if k != j {
                        let w = f.inv(&f.sub(lj, lk)).expect("distinct roots");
                        p = p.mul(f, &Poly::linear(f, lk)).scale(f, &w);
                    }
                }
                next.push(eval_at(f, &p, &x, &e));
            }
        }
        idems = next;
    }
    idems
}

/// Minimal polynomial of the first generator of the field eL in canonical
/// search order.
fn component_minpoly<F: Field>(l: &Subalgebra<F>, e: &Matrix<F::Elem>) -> Result<Poly<F::Elem>> {
    let f = l.field();
    let n = l.ambient_size();
    let comp = MatrixSpan::new(f, n, l.basis().iter().map(|b| e.mul(f, b)));
    let k = comp.dim();
    search_span(f, &comp, &SearchOptions::default(), "component generator", |x| {
        let p = min_poly(f, n, e, &x);
        (p.degree() == Some(k)).then_some(p)
    })
}

fn primitive_element_idempotents<F: Field>(l: &Subalgebra<F>) -> Result<Vec<(Matrix<F::Elem>, Poly<F::Elem>)>> {
    let f = l.field();
    let n = l.ambient_size();
    let k = l.dim();
    let unit = l.unit();
    let opts = SearchOptions {
        seed: 0,
        budget: 10_000,
    };
    let (x, m) = search_span(f, l.span(), &opts, "primitive element", |x| {
        let m = min_poly(f, n, unit, &x);
        (m.degree() == Some(k)).then_some((x, m))
    })
    .map_err(|_| Error::IdempotentsInfeasible)?;
    let roots = m.roots(f).ok_or(Error::IdempotentsInfeasible)?;
    let mut factors: Vec<Poly<F::Elem>> = roots.iter().map(|r| Poly::linear(f, r)).collect();
    let residual = factors
        .iter()
        .fold(m.clone(), |acc, p| acc.divrem(f, p).expect("nonzero divisor").0);
    match residual.degree() {
        Some(0) => {}
        // no rational roots and degree ≤ 3: irreducible
        Some(d) if d <= 3 => factors.push(residual),
        _ => return Err(Error::IdempotentsInfeasible),
    }
    Ok(factors
        .into_iter()
        .map(|p| {
            let cof = m.divrem(f, &p).expect("nonzero divisor").0;
            let (_, s, _) = cof.ext_gcd(f, &p);
            let e_poly = s.mul(f, &cof).rem(f, &m);
            (eval_at(f, &e_poly, &x, unit), p)
        })
        .collect())
}

/// All idempotents of L by exhaustive enumeration of its elements, and the
/// primitive ones (minimal nonzero under e ≤ f ⟺ ef = e). Only for
/// |L| ≤ 2²⁰.
pub fn idempotents_exhaustive<F: Field>(l: &Subalgebra<F>) -> Result<(Vec<Matrix<F::Elem>>, Vec<Matrix<F::Elem>>)> {
    let f = l.field();
    if exhaustive_size(f, l.dim()).is_none() {
        return Err(Error::IdempotentsInfeasible);
    }
    let mut all = Vec::new();
    let _: Result<()> = crate::search::search(f, l.dim(), &SearchOptions::default(), "", |c| {
        let x = l.element(c);
        if x.mul(f, &x) == x {
            all.push(x);
        }
        None
    });
    let primitive = all
        .iter()
        .filter(|e| {
            !e.is_zero(f)
                && all
                    .iter()
                    .all(|g| g.is_zero(f) || g == *e || g.mul(f, e) != *g)
        })
        .cloned()
        .collect();
    Ok((all, primitive))
}

/// An element Σ sᵢeᵢ of a split étale L with distinct scalars sᵢ, taking
/// the lexicographically smallest tuple of distinct nonzero scalars, or of
/// distinct scalars when F has too few nonzero elements.
pub fn primitive_element<F: Field>(l: &Subalgebra<F>) -> Result<Matrix<F::Elem>> {
    let f = l.field();
    let desc = idempotents(l)?;
    if !desc.split {
        return Err(Error::Precondition("L is not split".into()));
    }
    let r = desc.rank();
    let scalars: Vec<F::Elem> = match f.elements() {
        Some(mut elems) => {
            elems.sort_by_key(|x| f.order_key(x));
            let nonzero: Vec<_> = elems.iter().filter(|x| !f.is_zero(x)).cloned().collect();
            if nonzero.len() >= r {
                nonzero[..r].to_vec()
            } else if elems.len() >= r {
                elems[..r].to_vec()
            } else {
                return Err(Error::NoPrimitiveElement);
            }
        }
        // nonzero fractions of height ≤ r contain at least r values
        None => {
            let h = r.max(1) as i64;
            let mut cands = Vec::new();
            for num in -h..=h {
                for den in 1..=h {
                    let x = f.div(&f.from_i64(num), &f.from_i64(den)).expect("nonzero denominator");
                    if !f.is_zero(&x) && !cands.contains(&x) {
                        cands.push(x);
                    }
                }
            }
            cands.sort_by_key(|x| f.order_key(x));
            cands.truncate(r);
            cands
        }
    };
    let n = l.ambient_size();
    let a = desc
        .primitive_idempotents
        .iter()
        .zip(&scalars)
        .fold(Matrix::zeros(f, n, n), |acc, (e, s)| acc.add(f, &e.scale(f, s)));
    debug_assert_eq!(l.min_poly(&a).degree(), Some(r));
    Ok(a)
}
