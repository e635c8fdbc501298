use crate::error::{Error, Result};
use crate::field::{Field, QuadRing};
use crate::matrix::Matrix;

/// Model descriptor accepted by [`build_algebra`](super::build_algebra).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModelSpec<E> {
    /// M_d(F) with the transpose.
    Transpose { d: usize },
    /// M_{2m}(F) with s = Int(J)∘t, J = [[0, 1], [−1, 0]] in m×m blocks.
    Symplectic { m: usize },
    /// M_d(F) with Int(g)∘t for an invertible symmetric, non-alternating g.
    Orthogonal { g: Matrix<E> },
    /// M_d(F) with Int(g)∘t for an invertible alternating g.
    SymplecticForm { g: Matrix<E> },
    /// A₀ × A₀^op, A₀ = M_d(F), realized as diag(α, βᵗ) in M_{2d}(F) with
    /// the restriction of s.
    Switch { d: usize },
    /// M_d(K), K = F[θ]/(θ² − θ − c), with the adjoint of the hermitian form
    /// diag(h). `c = None` picks the first c making K a field (c = 1 over ℚ);
    /// `h = None` is the identity form.
    Unitary { d: usize, c: Option<E>, h: Option<Vec<E>> },
}

/// How an algebra was built; enough to rebuild it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Model<E> {
    /// M_d(F) with x ↦ g xᵗ g⁻¹.
    Matrix { d: usize, g: Matrix<E> },
    Switch { d: usize },
    Unitary { d: usize, c: E, h: Vec<E> },
    Corner { parent: Box<Model<E>>, e: Matrix<E> },
    /// Centralizer of span(`of`) in the parent. `scalar` is a generator θ of
    /// a quadratic subalgebra of `of` with θ² − θ = c, used as the scalar
    /// structure for reduced characteristic polynomials.
    Centralizer {
        parent: Box<Model<E>>,
        of: Vec<Matrix<E>>,
        scalar: Option<(Matrix<E>, E)>,
    },
}

impl<E: Clone + PartialEq> Model<E> {
    pub fn name(&self) -> &'static str {
        match self {
            Model::Matrix { .. } => "matrix",
            Model::Switch { .. } => "switch",
            Model::Unitary { .. } => "unitary",
            Model::Corner { .. } => "corner",
            Model::Centralizer { .. } => "centralizer",
        }
    }

    /// Size of the ambient matrices.
    pub fn ambient_size(&self) -> usize {
        match self {
            Model::Matrix { d, .. } => *d,
            Model::Switch { d } | Model::Unitary { d, .. } => 2 * d,
            Model::Corner { parent, .. } | Model::Centralizer { parent, .. } => parent.ambient_size(),
        }
    }

    pub(crate) fn rule<F: Field<Elem = E>>(&self, f: &F) -> Result<Rule<E>> {
        Ok(match self {
            Model::Matrix { g, .. } => Rule::Adjoint {
                g: g.clone(),
                g_inv: g.inverse(f)?,
            },
            Model::Switch { d } => {
                let j = symplectic_j(f, *d);
                Rule::Adjoint { g_inv: j.neg(f), g: j }
            }
            Model::Unitary { c, h, .. } => Rule::Hermitian {
                c: c.clone(),
                h_inv: h
                    .iter()
                    .map(|x| f.inv(x).ok_or(Error::Singular))
                    .collect::<Result<_>>()?,
                h: h.clone(),
            },
            Model::Corner { parent, .. } | Model::Centralizer { parent, .. } => parent.rule(f)?,
        })
    }

    pub(crate) fn realization<F: Field<Elem = E>>(&self, f: &F) -> Realization<E> {
        match self {
            Model::Matrix { .. } => Realization::default(),
            Model::Switch { d } => Realization {
                block: Some(*d),
                ..Realization::default()
            },
            Model::Unitary { d, c, .. } => {
                let k = QuadRing::new(f.clone(), c.clone());
                let t = k.regular_block(&(f.zero(), f.one()));
                let tm = Matrix::from_fn(2, 2, |i, j| t[i][j].clone());
                let blocks = vec![&tm; *d];
                Realization {
                    scalar: Some((Matrix::block_diag(f, &blocks), c.clone())),
                    ..Realization::default()
                }
            }
            Model::Corner { parent, .. } => parent.realization(f),
            Model::Centralizer { parent, scalar, .. } => {
                let mut r = parent.realization(f);
                if let Some(s) = scalar {
                    if r.scalar.is_some() {
                        r.unsupported = Some("centralizer of a quadratic subalgebra in a unitary model".into());
                    } else {
                        r.scalar = Some(s.clone());
                    }
                } else {
                    r.unsupported = Some("centralizer without a quadratic scalar structure".into());
                }
                r
            }
        }
    }
}

/// The involution as a rule on ambient matrices.
#[derive(Debug, Clone)]
pub(crate) enum Rule<E> {
    /// x ↦ g xᵗ g⁻¹
    Adjoint { g: Matrix<E>, g_inv: Matrix<E> },
    /// M_d(K) in 2×2 regular blocks: (x)_{ij} ↦ h_i⁻¹ γ(x_{ji}) h_j
    Hermitian { c: E, h: Vec<E>, h_inv: Vec<E> },
}

impl<E: Clone + PartialEq> Rule<E> {
    pub(crate) fn apply<F: Field<Elem = E>>(&self, f: &F, x: &Matrix<E>) -> Matrix<E> {
        match self {
            Rule::Adjoint { g, g_inv } => g.mul(f, &x.transpose()).mul(f, g_inv),
            Rule::Hermitian { c, h, h_inv } => {
                let k = QuadRing::new(f.clone(), c.clone());
                let d = h.len();
                let mut y = Matrix::zeros(f, 2 * d, 2 * d);
                for i in 0..d {
                    for j in 0..d {
                        let xji = (x.get(2 * j, 2 * i).clone(), x.get(2 * j + 1, 2 * i).clone());
                        let s = f.mul(&h_inv[i], &h[j]);
                        let v = k.conj(&xji);
                        let v = (f.mul(&v.0, &s), f.mul(&v.1, &s));
                        let b = k.regular_block(&v);
                        for (r, row) in b.iter().enumerate() {
                            for (col, e) in row.iter().enumerate() {
                                y.set(2 * i + r, 2 * j + col, e.clone());
                            }
                        }
                    }
                }
                y
            }
        }
    }
}

/// Where reduced characteristic polynomials are read off: the column space of
/// the unit (restricted to the leading block for switch models), optionally
/// as a module over F[θ] through the given matrix.
#[derive(Debug, Clone)]
pub(crate) struct Realization<E> {
    pub block: Option<usize>,
    pub scalar: Option<(Matrix<E>, E)>,
    pub unsupported: Option<String>,
}

impl<E> Default for Realization<E> {
    fn default() -> Self {
        Realization {
            block: None,
            scalar: None,
            unsupported: None,
        }
    }
}

/// J = [[0, 1], [−1, 0]] in d×d blocks.
pub fn symplectic_j<F: Field>(f: &F, d: usize) -> Matrix<F::Elem> {
    Matrix::from_fn(2 * d, 2 * d, |i, j| {
        if i < d && j == i + d {
            f.one()
        } else if i >= d && j + d == i {
            f.neg(&f.one())
        } else {
            f.zero()
        }
    })
}

/// First c (in encoding order, starting at 1) with θ² − θ − c irreducible;
/// c = 1 over ℚ (discriminant 5).
pub fn default_unitary_c<F: Field>(f: &F) -> F::Elem {
    match f.elements() {
        Some(es) => es
            .into_iter()
            .find(|c| QuadRing::new(f.clone(), c.clone()).is_field() == Some(true))
            .expect("finite fields have quadratic extensions"),
        None => f.one(),
    }
}

pub(crate) fn is_symmetric<F: Field>(f: &F, g: &Matrix<F::Elem>) -> bool {
    let _ = f;
    *g == g.transpose()
}

pub(crate) fn is_alternating<F: Field>(f: &F, g: &Matrix<F::Elem>) -> bool {
    *g == g.transpose().neg(f) && (0..g.rows()).all(|i| f.is_zero(g.get(i, i)))
}
