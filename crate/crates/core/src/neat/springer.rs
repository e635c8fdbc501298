//! Descent of zeros of cubic forms from a quadratic extension F[X]/(p).

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::poly::Poly;

/// A homogeneous cubic Σ c_{ijk} xᵢxⱼxₖ over i ≤ j ≤ k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicForm<E> {
    pub vars: usize,
    /// Coefficient table in the order of [`CubicForm::monomials`].
    pub coeffs: Vec<E>,
}

impl<E: Clone + PartialEq> CubicForm<E> {
    /// Index triples i ≤ j ≤ k in lexicographic order.
    pub fn monomials(vars: usize) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for i in 0..vars {
            for j in i..vars {
                for k in j..vars {
                    out.push((i, j, k));
                }
            }
        }
        out
    }

    pub fn new(vars: usize, coeffs: Vec<E>) -> Result<Self> {
        if coeffs.len() != Self::monomials(vars).len() {
            return Err(Error::Dimension(format!(
                "a cubic form in {vars} variables has {} coefficients",
                Self::monomials(vars).len()
            )));
        }
        Ok(CubicForm { vars, coeffs })
    }

    pub fn eval<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> E {
        Self::monomials(self.vars)
            .into_iter()
            .zip(&self.coeffs)
            .fold(f.zero(), |acc, ((i, j, k), c)| {
                f.add(&acc, &f.mul(c, &f.mul(&v[i], &f.mul(&v[j], &v[k]))))
            })
    }

    /// f(b + cX) ∈ F[X].
    pub fn eval_line<F: Field<Elem = E>>(&self, f: &F, b: &[E], c: &[E]) -> Poly<E> {
        let lin: Vec<Poly<E>> = b
            .iter()
            .zip(c)
            .map(|(bi, ci)| Poly::new(f, vec![bi.clone(), ci.clone()]))
            .collect();
        Self::monomials(self.vars)
            .into_iter()
            .zip(&self.coeffs)
            .fold(Poly::zero(), |acc, ((i, j, k), co)| {
                acc.add(f, &lin[i].mul(f, &lin[j]).mul(f, &lin[k]).scale(f, co))
            })
    }
}

/// A nontrivial F-zero of `form` from the zero b + cX over F[X]/(p).
///
/// With f(b + cX) = p·h: if h is constant the X³ coefficient f(c) vanishes
/// and c is returned (or b when c = 0, where h = 0 forces f(b) = 0); if h is
/// linear with root a then b + ca is a zero, unless it is the zero vector,
/// in which case f(c) = 0.
pub fn springer_descent<F: Field>(
    f: &F,
    form: &CubicForm<F::Elem>,
    b: &[F::Elem],
    c: &[F::Elem],
    p: &Poly<F::Elem>,
) -> Result<Vec<F::Elem>> {
    let n = form.vars;
    if b.len() != n || c.len() != n {
        return Err(Error::Dimension("zero vector has the wrong length".into()));
    }
    if b.iter().chain(c).all(|x| f.is_zero(x)) {
        return Err(Error::Precondition("the zero over F[X]/(p) is trivial".into()));
    }
    if p.degree() != Some(2) || !p.roots(f).is_some_and(|r| r.is_empty()) {
        return Err(Error::Precondition("p is not an irreducible quadratic".into()));
    }
    let g = form.eval_line(f, b, c);
    let (h, r) = g.divrem(f, p)?;
    if !r.is_zero() {
        return Err(Error::Precondition("f(b + cX) is not divisible by p".into()));
    }
    let nonzero = |v: &[F::Elem]| v.iter().any(|x| !f.is_zero(x));
    let out = match h.degree() {
        None | Some(0) => {
            if nonzero(c) {
                c.to_vec()
            } else {
                b.to_vec()
            }
        }
        _ => {
            let (h0, h1) = (h.coeff(f, 0), h.coeff(f, 1));
            let root = f.neg(&f.div(&h0, &h1).expect("linear h"));
            let v: Vec<_> = b.iter().zip(c).map(|(x, y)| f.add(x, &f.mul(y, &root))).collect();
            if nonzero(&v) {
                v
            } else {
                c.to_vec()
            }
        }
    };
    if !nonzero(&out) || !f.is_zero(&form.eval(f, &out)) {
        return Err(Error::Verification("descended vector is not a nontrivial zero".into()));
    }
    Ok(out)
}

/// A random cubic with a planted zero over a quadratic extension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpringerInstance<E> {
    pub form: CubicForm<E>,
    pub b: Vec<E>,
    pub c: Vec<E>,
    pub p: Poly<E>,
}

/// Samples p irreducible, (b, c) ≠ 0 and a random cubic, then solves for two
/// coefficients so that p divides f(b + cX).
pub fn plant_springer_instance<F: Field, R: Rng + ?Sized>(
    f: &F,
    vars: usize,
    rng: &mut R,
) -> Result<SpringerInstance<F::Elem>> {
    if vars < 2 {
        return Err(Error::Precondition("planting needs at least two variables".into()));
    }
    let monos = CubicForm::<F::Elem>::monomials(vars);
    for _ in 0..10_000 {
        let p = Poly::new(f, vec![f.random(rng), f.random(rng), f.one()]);
        if !p.roots(f).is_some_and(|r| r.is_empty()) {
            continue;
        }
        let b: Vec<_> = (0..vars).map(|_| f.random(rng)).collect();
        let c: Vec<_> = (0..vars).map(|_| f.random(rng)).collect();
        if b.iter().chain(&c).all(|x| f.is_zero(x)) {
            continue;
        }
        // each monomial's value at b + cX, reduced mod p
        let images: Vec<[F::Elem; 2]> = monos
            .iter()
            .map(|&(i, j, k)| {
                let mono = CubicForm {
                    vars,
                    coeffs: monos
                        .iter()
                        .map(|&m| if m == (i, j, k) { f.one() } else { f.zero() })
                        .collect(),
                };
                let r = mono.eval_line(f, &b, &c).rem(f, &p);
                [r.coeff(f, 0), r.coeff(f, 1)]
            })
            .collect();
        let mut coeffs: Vec<_> = (0..monos.len()).map(|_| f.random(rng)).collect();
        let pair = (0..monos.len())
            .flat_map(|s| (s + 1..monos.len()).map(move |t| (s, t)))
            .find(|&(s, t)| {
                let d = f.sub(
                    &f.mul(&images[s][0], &images[t][1]),
                    &f.mul(&images[t][0], &images[s][1]),
                );
                !f.is_zero(&d)
            });
        let Some((s, t)) = pair else { continue };
        let mut rhs = [f.zero(), f.zero()];
        for (m, img) in images.iter().enumerate() {
            if m != s && m != t {
                for r in 0..2 {
                    rhs[r] = f.sub(&rhs[r], &f.mul(&coeffs[m], &img[r]));
                }
            }
        }
        let sys = Matrix::from_fn(2, 2, |r, col| images[if col == 0 { s } else { t }][r].clone());
        let sol = sys.solve(f, &rhs).expect("invertible 2×2 system");
        coeffs[s] = sol[0].clone();
        coeffs[t] = sol[1].clone();
        let form = CubicForm { vars, coeffs };
        debug_assert!(form.eval_line(f, &b, &c).rem(f, &p).is_zero());
        return Ok(SpringerInstance { form, b, c, p });
    }
    Err(Error::NotFound {
        what: "planted cubic instance".into(),
        budget: 10_000,
    })
}
