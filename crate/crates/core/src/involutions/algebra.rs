use std::fmt;
use std::sync::OnceLock;

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::model::{
    default_unitary_c, is_alternating, is_symmetric, symplectic_j, Model, ModelSpec, Realization, Rule,
};
use super::prd::Module;
use super::subalgebra::Subalgebra;
use crate::error::{Error, Result};
use crate::field::{Field, QuadRing};
use crate::matrix::Matrix;
use crate::search::SearchOptions;
use crate::span::{commutant, independent, kernel_within, MatrixSpan};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    First,
    Second,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InvolutionType {
    Orthogonal,
    Symplectic,
    Unitary,
}

impl fmt::Display for InvolutionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InvolutionType::Orthogonal => "orthogonal",
            InvolutionType::Symplectic => "symplectic",
            InvolutionType::Unitary => "unitary",
        })
    }
}

/// Kind, type and numerical invariants. Dimensions are taken relative to the
/// base `Z(A) ∩ Symm(σ)`, so centralizers over a symmetric subfield classify
/// over that subfield.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub kind: Kind,
    #[serde(rename = "type")]
    pub typ: InvolutionType,
    pub degree: usize,
    pub capacity: usize,
    pub index: usize,
    pub coindex: usize,
    /// F-dimension of `Z(A) ∩ Symm(σ)`.
    pub base_dim: usize,
}

#[derive(Debug, Clone)]
struct Structure<E> {
    centre: MatrixSpan<E>,
    base: MatrixSpan<E>,
    symm: MatrixSpan<E>,
    skew: MatrixSpan<E>,
    symd: MatrixSpan<E>,
    class: Classification,
}

/// A finite-dimensional F-algebra with F-linear involution, realized as a
/// span of N×N matrices over F.
#[derive(Debug, Clone)]
pub struct AlgebraWithInvolution<F: Field> {
    field: F,
    n: usize,
    model: Model<F::Elem>,
    rule: Rule<F::Elem>,
    realization: Realization<F::Elem>,
    unit: Matrix<F::Elem>,
    span: MatrixSpan<F::Elem>,
    images: Vec<Matrix<F::Elem>>,
    structure: Structure<F::Elem>,
    module: OnceLock<std::result::Result<Module<F::Elem>, String>>,
}

/// Builds a model and validates every structural invariant.
pub fn build_algebra<F: Field>(f: &F, spec: &ModelSpec<F::Elem>) -> Result<AlgebraWithInvolution<F>> {
    let model = match spec {
        ModelSpec::Transpose { d } => {
            positive(*d)?;
            Model::Matrix {
                d: *d,
                g: Matrix::identity(f, *d),
            }
        }
        ModelSpec::Symplectic { m } => {
            positive(*m)?;
            Model::Matrix {
                d: 2 * m,
                g: symplectic_j(f, *m),
            }
        }
        ModelSpec::Orthogonal { g } => {
            check_form(f, g)?;
            if !is_symmetric(f, g) {
                return Err(Error::InvalidModel("form matrix is not symmetric".into()));
            }
            if is_alternating(f, g) {
                return Err(Error::InvalidModel(
                    "alternating form gives a symplectic involution".into(),
                ));
            }
            Model::Matrix {
                d: g.rows(),
                g: g.clone(),
            }
        }
        ModelSpec::SymplecticForm { g } => {
            check_form(f, g)?;
            if !is_alternating(f, g) {
                return Err(Error::InvalidModel("form matrix is not alternating".into()));
            }
            Model::Matrix {
                d: g.rows(),
                g: g.clone(),
            }
        }
        ModelSpec::Switch { d } => {
            positive(*d)?;
            Model::Switch { d: *d }
        }
        ModelSpec::Unitary { d, c, h } => {
            positive(*d)?;
            let c = c.clone().unwrap_or_else(|| default_unitary_c(f));
            let disc = f.add(&f.mul(&f.from_i64(4), &c), &f.one());
            if f.is_zero(&disc) {
                return Err(Error::InvalidModel("θ² − θ − c is inseparable (4c + 1 = 0)".into()));
            }
            let h = h.clone().unwrap_or_else(|| vec![f.one(); *d]);
            if h.len() != *d || h.iter().any(|x| f.is_zero(x)) {
                return Err(Error::InvalidModel("hermitian form must be invertible diagonal of size d".into()));
            }
            Model::Unitary { d: *d, c, h }
        }
    };
    let a = from_model(f, model)?;
    if a.structure.class.base_dim != 1 {
        return Err(Error::InvalidAlgebra("Z(A) ∩ Symm(σ) is not F·1".into()));
    }
    Ok(a)
}

fn positive(d: usize) -> Result<()> {
    if d == 0 {
        return Err(Error::InvalidModel("degree must be positive".into()));
    }
    Ok(())
}

fn check_form<F: Field>(f: &F, g: &Matrix<F::Elem>) -> Result<()> {
    if !g.is_square() || g.rows() == 0 {
        return Err(Error::NotSquare {
            rows: g.rows(),
            cols: g.cols(),
        });
    }
    g.inverse(f).map(|_| ())
}

/// Rebuilds the algebra described by a model (top-level, corner or
/// centralizer), with full validation.
pub(crate) fn from_model<F: Field>(f: &F, model: Model<F::Elem>) -> Result<AlgebraWithInvolution<F>> {
    let (unit, cands) = model_basis(f, &model)?;
    AlgebraWithInvolution::assemble(f.clone(), model, unit, cands)
}

/// Unit and independent basis of a model, in the order the constructors
/// produce them.
fn model_basis<F: Field>(f: &F, model: &Model<F::Elem>) -> Result<(Matrix<F::Elem>, Vec<Matrix<F::Elem>>)> {
    let n = model.ambient_size();
    let (unit, cands) = model_candidates(f, model)?;
    Ok((unit, independent(f, n, cands).0))
}

fn model_candidates<F: Field>(f: &F, model: &Model<F::Elem>) -> Result<(Matrix<F::Elem>, Vec<Matrix<F::Elem>>)> {
    let n = model.ambient_size();
    Ok(match model {
        Model::Matrix { d, .. } => {
            let mut b = Vec::with_capacity(d * d);
            for i in 0..*d {
                for j in 0..*d {
                    b.push(Matrix::unit(f, *d, i, j));
                }
            }
            (Matrix::identity(f, *d), b)
        }
        Model::Switch { d } => {
            let mut b = Vec::with_capacity(2 * d * d);
            for i in 0..*d {
                for j in 0..*d {
                    b.push(Matrix::unit(f, n, i, j));
                }
            }
            for i in 0..*d {
                for j in 0..*d {
                    b.push(Matrix::unit(f, n, d + i, d + j));
                }
            }
            (Matrix::identity(f, n), b)
        }
        Model::Unitary { d, c, .. } => {
            let k = QuadRing::new(f.clone(), c.clone());
            let mut b = Vec::with_capacity(2 * d * d);
            for i in 0..*d {
                for j in 0..*d {
                    for x in [(f.one(), f.zero()), (f.zero(), f.one())] {
                        let blk = k.regular_block(&x);
                        let mut m = Matrix::zeros(f, n, n);
                        for (r, row) in blk.iter().enumerate() {
                            for (col, e) in row.iter().enumerate() {
                                m.set(2 * i + r, 2 * j + col, e.clone());
                            }
                        }
                        b.push(m);
                    }
                }
            }
            (Matrix::identity(f, n), b)
        }
        Model::Corner { parent, e } => {
            let (_, pb) = model_basis(f, parent)?;
            let pspan = MatrixSpan::new(f, n, pb.clone());
            if !pspan.contains(f, e) {
                return Err(Error::NotInAlgebra);
            }
            (e.clone(), pb.iter().map(|b| e.mul(f, b).mul(f, e)).collect())
        }
        Model::Centralizer { parent, of, .. } => {
            let (u, pb) = model_basis(f, parent)?;
            (u, commutant(f, &pb, of.iter().cloned()))
        }
    })
}

impl<F: Field> AlgebraWithInvolution<F> {
    pub(crate) fn assemble(
        field: F,
        model: Model<F::Elem>,
        unit: Matrix<F::Elem>,
        candidates: Vec<Matrix<F::Elem>>,
    ) -> Result<Self> {
        let f = &field;
        let n = model.ambient_size();
        if unit.rows() != n || !unit.is_square() {
            return Err(Error::Dimension("unit size differs from the ambient size".into()));
        }
        let rule = model.rule(f)?;
        let realization = model.realization(f);
        let span = MatrixSpan::new(f, n, candidates);
        if span.dim() == 0 {
            return Err(Error::InvalidAlgebra("empty basis".into()));
        }
        let basis = span.basis();
        if !span.contains(f, &unit) {
            return Err(Error::InvalidAlgebra("unit outside the span".into()));
        }
        let images: Vec<_> = basis.iter().map(|b| rule.apply(f, b)).collect();
        for (b, s) in basis.iter().zip(&images) {
            if unit.mul(f, b) != *b || b.mul(f, &unit) != *b {
                return Err(Error::InvalidAlgebra("unit is not a two-sided identity".into()));
            }
            if !span.contains(f, s) {
                return Err(Error::InvalidAlgebra("σ does not preserve the span".into()));
            }
            if rule.apply(f, s) != *b {
                return Err(Error::InvalidAlgebra("σ∘σ ≠ id".into()));
            }
        }
        for (i, x) in basis.iter().enumerate() {
            for (j, y) in basis.iter().enumerate() {
                let p = x.mul(f, y);
                if !span.contains(f, &p) {
                    return Err(Error::InvalidAlgebra("span is not multiplicatively closed".into()));
                }
                if rule.apply(f, &p) != images[j].mul(f, &images[i]) {
                    return Err(Error::InvalidAlgebra("σ is not an anti-automorphism".into()));
                }
            }
        }
        let structure = compute_structure(f, n, &span, &images, &rule, &unit)?;
        Ok(AlgebraWithInvolution {
            field,
            n,
            model,
            rule,
            realization,
            unit,
            span,
            images,
            structure,
            module: OnceLock::new(),
        })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn ambient_size(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.span.dim()
    }

    pub fn basis(&self) -> &[Matrix<F::Elem>] {
        self.span.basis()
    }

    pub fn unit(&self) -> &Matrix<F::Elem> {
        &self.unit
    }

    pub fn model(&self) -> &Model<F::Elem> {
        &self.model
    }

    /// σ applied to the basis, in basis order.
    pub fn involution_images(&self) -> &[Matrix<F::Elem>] {
        &self.images
    }

    pub(crate) fn realization(&self) -> &Realization<F::Elem> {
        &self.realization
    }

    pub(crate) fn module_cache(&self) -> &OnceLock<std::result::Result<Module<F::Elem>, String>> {
        &self.module
    }

    pub fn sigma(&self, x: &Matrix<F::Elem>) -> Matrix<F::Elem> {
        self.rule.apply(&self.field, x)
    }

    pub fn contains(&self, x: &Matrix<F::Elem>) -> bool {
        x.rows() == self.n && x.cols() == self.n && self.span.contains(&self.field, x)
    }

    pub fn coords(&self, x: &Matrix<F::Elem>) -> Option<Vec<F::Elem>> {
        self.span.coords(&self.field, x)
    }

    pub fn element(&self, coeffs: &[F::Elem]) -> Matrix<F::Elem> {
        self.span.element(&self.field, coeffs)
    }

    pub fn span(&self) -> &MatrixSpan<F::Elem> {
        &self.span
    }

    pub fn mul(&self, x: &Matrix<F::Elem>, y: &Matrix<F::Elem>) -> Matrix<F::Elem> {
        x.mul(&self.field, y)
    }

    pub fn scalar(&self, c: &F::Elem) -> Matrix<F::Elem> {
        self.unit.scale(&self.field, c)
    }

    pub fn classification(&self) -> Classification {
        self.structure.class
    }

    pub fn kind(&self) -> Kind {
        self.structure.class.kind
    }

    pub fn involution_type(&self) -> InvolutionType {
        self.structure.class.typ
    }

    pub fn degree(&self) -> usize {
        self.structure.class.degree
    }

    pub fn capacity(&self) -> usize {
        self.structure.class.capacity
    }

    pub fn centre(&self) -> &MatrixSpan<F::Elem> {
        &self.structure.centre
    }

    /// `Z(A) ∩ Symm(σ)`.
    pub fn base(&self) -> &MatrixSpan<F::Elem> {
        &self.structure.base
    }

    pub fn symm(&self) -> &MatrixSpan<F::Elem> {
        &self.structure.symm
    }

    pub fn skew(&self) -> &MatrixSpan<F::Elem> {
        &self.structure.skew
    }

    pub fn symd(&self) -> &MatrixSpan<F::Elem> {
        &self.structure.symd
    }

    /// Symd(σ) for symplectic involutions, Symm(σ) otherwise.
    pub fn syms(&self) -> &MatrixSpan<F::Elem> {
        match self.structure.class.typ {
            InvolutionType::Symplectic => &self.structure.symd,
            _ => &self.structure.symm,
        }
    }

    pub fn symmetrized_spaces(&self) -> SymmetrizedSpaces<F::Elem> {
        SymmetrizedSpaces {
            symm: self.symm().basis().to_vec(),
            skew: self.skew().basis().to_vec(),
            symd: self.symd().basis().to_vec(),
            syms: self.syms().basis().to_vec(),
            capacity: self.capacity(),
        }
    }

    pub fn is_symmetric(&self, x: &Matrix<F::Elem>) -> bool {
        self.sigma(x) == *x
    }

    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Matrix<F::Elem> {
        random_in(&self.field, &self.span, rng)
    }

    /// Commutant of `elems` inside A.
    pub fn centralizer_of(&self, elems: &[Matrix<F::Elem>]) -> MatrixSpan<F::Elem> {
        MatrixSpan::new(
            &self.field,
            self.n,
            commutant(&self.field, self.basis(), elems.iter().cloned()),
        )
    }

    /// C_A(L).
    pub fn centralizer(&self, l: &Subalgebra<F>) -> Result<Subalgebra<F>> {
        self.check_sub(l)?;
        Subalgebra::new(self, self.centralizer_of(l.basis()).basis().to_vec())
    }

    /// {x ∈ A | x u + u x = x}: for u with u² − u ∈ F this is
    /// C′_A(F[u]) = {x | x k = γ(k) x}.
    pub fn twisted_centralizer(&self, u: &Matrix<F::Elem>) -> MatrixSpan<F::Elem> {
        let f = &self.field;
        MatrixSpan::new(
            f,
            self.n,
            kernel_within(f, self.basis(), |x| x.mul(f, u).add(f, &u.mul(f, x)).sub(f, x)),
        )
    }

    /// (C_A(L), σ|) for a σ-stable subalgebra L, as an algebra with
    /// involution over `Z ∩ Symm`. When L is quadratic its Artin–Schreier
    /// generator becomes the scalar structure for reduced characteristic
    /// polynomials.
    pub fn centralizer_algebra(&self, l: &Subalgebra<F>) -> Result<AlgebraWithInvolution<F>> {
        self.check_sub(l)?;
        let f = &self.field;
        if l.basis().iter().any(|b| !l.contains(&self.sigma(b))) {
            return Err(Error::Precondition("L is not σ-stable".into()));
        }
        let scalar = if l.dim() == 2 && l.contains(&self.unit) {
            Some(super::quadratic::artin_schreier(self, l)?)
        } else {
            None
        };
        let basis = commutant(f, self.basis(), l.basis().iter().cloned());
        let model = Model::Centralizer {
            parent: Box::new(self.model.clone()),
            of: l.basis().to_vec(),
            scalar,
        };
        AlgebraWithInvolution::assemble(f.clone(), model, self.unit.clone(), basis)
    }

    /// (eAe, σ|) for a nonzero symmetric idempotent e.
    pub fn corner(&self, e: &Matrix<F::Elem>) -> Result<AlgebraWithInvolution<F>> {
        let f = &self.field;
        if !self.contains(e) {
            return Err(Error::NotInAlgebra);
        }
        if e.is_zero(f) || e.mul(f, e) != *e {
            return Err(Error::Precondition("e is not a nonzero idempotent".into()));
        }
        if self.sigma(e) != *e {
            return Err(Error::Precondition("σ(e) ≠ e".into()));
        }
        let cands = self.basis().iter().map(|b| e.mul(f, b).mul(f, e)).collect();
        let model = Model::Corner {
            parent: Box::new(self.model.clone()),
            e: e.clone(),
        };
        AlgebraWithInvolution::assemble(f.clone(), model, e.clone(), cands)
    }

    fn check_sub(&self, l: &Subalgebra<F>) -> Result<()> {
        if l.ambient_size() != self.n || l.basis().iter().any(|b| !self.contains(b)) {
            return Err(Error::NotSubalgebra("not contained in A".into()));
        }
        Ok(())
    }

    /// Default seeded options for internal searches on this algebra.
    pub fn search_options(&self) -> SearchOptions {
        SearchOptions::default()
    }
}

/// The four spaces attached to σ, with the capacity.
#[derive(Debug, Clone)]
pub struct SymmetrizedSpaces<E> {
    pub symm: Vec<Matrix<E>>,
    pub skew: Vec<Matrix<E>>,
    pub symd: Vec<Matrix<E>>,
    pub syms: Vec<Matrix<E>>,
    pub capacity: usize,
}

pub(crate) fn random_in<F: Field, R: Rng + ?Sized>(
    f: &F,
    span: &MatrixSpan<F::Elem>,
    rng: &mut R,
) -> Matrix<F::Elem> {
    let c: Vec<_> = (0..span.dim()).map(|_| f.random(rng)).collect();
    span.element(f, &c)
}

fn compute_structure<F: Field>(
    f: &F,
    n: usize,
    span: &MatrixSpan<F::Elem>,
    images: &[Matrix<F::Elem>],
    rule: &Rule<F::Elem>,
    unit: &Matrix<F::Elem>,
) -> Result<Structure<F::Elem>> {
    use rand::SeedableRng;
    let basis = span.basis();
    // two generic elements cut the candidate space down fast; the full basis
    // then certifies the result
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5EED);
    let probes: Vec<_> = (0..2).map(|_| random_in(f, span, &mut rng)).collect();
    let centre = commutant(f, basis, probes.into_iter().chain(basis.iter().cloned()));
    let base = kernel_within(f, &centre, |z| rule.apply(f, z).sub(f, z));
    let symm = kernel_within(f, basis, |x| rule.apply(f, x).sub(f, x));
    let skew = kernel_within(f, basis, |x| rule.apply(f, x).add(f, x));
    let symd = basis.iter().zip(images).map(|(b, s)| b.add(f, s));
    let centre = MatrixSpan::new(f, n, centre);
    let base = MatrixSpan::new(f, n, base);
    let symm = MatrixSpan::new(f, n, symm);
    let skew = MatrixSpan::new(f, n, skew);
    let symd = MatrixSpan::new(f, n, symd);

    let (zd, bd) = (centre.dim(), base.dim());
    let kind = if zd == bd {
        Kind::First
    } else if zd == 2 * bd {
        Kind::Second
    } else {
        return Err(Error::InvalidAlgebra(format!(
            "centre of dimension {zd} over a base of dimension {bd}"
        )));
    };
    let sq = span.dim() / zd;
    let degree = (0..=sq).find(|d| d * d >= sq).unwrap_or(0);
    if span.dim() % zd != 0 || degree * degree != sq {
        return Err(Error::InvalidAlgebra("dimension over the centre is not a square".into()));
    }
    let typ = match kind {
        Kind::Second => InvolutionType::Unitary,
        Kind::First if symd.dim() < skew.dim() && symd.contains(f, unit) => InvolutionType::Symplectic,
        Kind::First => InvolutionType::Orthogonal,
    };
    let capacity = if typ == InvolutionType::Symplectic {
        degree / 2
    } else {
        degree
    };
    Ok(Structure {
        centre,
        base,
        symm,
        skew,
        symd,
        class: Classification {
            kind,
            typ,
            degree,
            capacity,
            index: 1,
            coindex: degree,
            base_dim: bd,
        },
    })
}
