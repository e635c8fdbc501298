//! Per-result property checks on a single instance.

use neatalg::field::{Field, FieldSpec, AnyField, FiniteField};
use neatalg::involutions::{
    quadratic_split, AlgebraWithInvolution, AnyAlgebra, InvolutionType, Kind, Model, Subalgebra,
};
use neatalg::matrix::Matrix;
use neatalg::neat::{
    extend_neat_quadratic_with, find_c1c3_zero, idempotents, is_neat, max_etale_with, neat_biquadratic_with,
    neat_quadratic_field, plant_springer_instance, split_idempotents, split_neat_with, springer_descent,
    square_separable_search, triquadratic_split, BiquadraticRoute, Certified, ExtensionMethod, NeatFailure,
};
use neatalg::poly::poly_separable;
use neatalg::search::{search, SearchOptions};
use neatalg::{Error, MatrixSpan};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::config::{Budgets, SuiteName};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// A search exhausted its budget; not a failure.
    NotFound,
    /// The suite does not apply to this instance.
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseResult {
    pub status: Status,
    pub detail: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Value>,
}

/// Seed and budgets for one instance.
#[derive(Debug, Clone)]
pub struct Ctx<'a> {
    pub seed: u64,
    pub budgets: &'a Budgets,
}

impl Ctx<'_> {
    pub fn opts(&self) -> SearchOptions {
        SearchOptions {
            seed: self.seed,
            budget: self.budgets.search,
        }
    }

    fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.opts().fork(salt).seed)
    }
}

enum Done {
    Pass(String),
    Skip(String),
    Certified(String, Value),
}

type Check = neatalg::Result<Done>;

fn ensure(ok: bool, what: impl FnOnce() -> String) -> neatalg::Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Verification(what()))
    }
}

fn label(name: &str, e: Error) -> Error {
    match e {
        Error::Verification(m) => Error::Verification(format!("{name}: {m}")),
        e => e,
    }
}

fn finish(r: Check) -> CaseResult {
    let (status, detail, certificate) = match r {
        Ok(Done::Pass(d)) => (Status::Pass, d, None),
        Ok(Done::Skip(d)) => (Status::Skipped, d, None),
        Ok(Done::Certified(d, c)) => (Status::Pass, d, Some(c)),
        Err(e @ (Error::NotFound { .. } | Error::IdempotentsInfeasible)) => (Status::NotFound, e.to_string(), None),
        Err(e) => (Status::Fail, e.to_string(), None),
    };
    CaseResult {
        status,
        detail,
        certificate,
    }
}

fn random_in<F: Field>(f: &F, s: &MatrixSpan<F::Elem>, rng: &mut ChaCha8Rng) -> Matrix<F::Elem> {
    let c: Vec<_> = (0..s.dim()).map(|_| f.random(rng)).collect();
    s.element(f, &c)
}

/// Runs one algebra suite on one instance.
pub fn run_algebra_case(suite: SuiteName, a: &AnyAlgebra, ctx: &Ctx) -> CaseResult {
    finish(match (suite, a) {
        (SuiteName::NeatExt, AnyAlgebra::Finite(a)) => neat_ext(a, ctx),
        (SuiteName::NeatExt, AnyAlgebra::Rational(_)) => Ok(Done::Skip("no quadratic extension of ℚ in scope".into())),
        (_, AnyAlgebra::Finite(a)) => generic(suite, a, ctx),
        (_, AnyAlgebra::Rational(a)) => generic(suite, a, ctx),
    })
}

fn generic<F: Field>(suite: SuiteName, a: &AlgebraWithInvolution<F>, ctx: &Ctx) -> Check {
    match suite {
        SuiteName::PropNeat => prop_neat(a, ctx),
        SuiteName::LemPc => lem_pc(a, ctx),
        SuiteName::KeepsType => keeps_type(a, ctx),
        SuiteName::CapMaxDim => cap_max_dim(a, ctx),
        SuiteName::Cap2Form => cap2_form(a, ctx),
        SuiteName::NeatQuad => neat_quad(a, ctx),
        SuiteName::Biquadratic => biquadratic(a, ctx),
        SuiteName::AlbertRowen => albert_rowen(a, ctx),
        SuiteName::NeatExt | SuiteName::Springer => unreachable!("dispatched separately"),
    }
}

/// One planted cubic over `field`.
pub fn run_springer_case(field: &FieldSpec, seed: u64) -> CaseResult {
    finish(field.build().and_then(|f| match f {
        AnyField::Finite(f) => springer(&f, seed),
        AnyField::Rational(q) => springer(&q, seed),
    }))
}

fn springer<F: Field>(f: &F, seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let inst = plant_springer_instance(f, 3, &mut rng)?;
    let z = springer_descent(f, &inst.form, &inst.b, &inst.c, &inst.p)?;
    ensure(z.iter().any(|x| !f.is_zero(x)), || "zero vector returned".into())?;
    ensure(f.is_zero(&inst.form.eval(f, &z)), || "f(z) ≠ 0".into())?;
    let show: Vec<String> = z.iter().map(|x| f.display(x)).collect();
    Ok(Done::Pass(format!("p = {}, zero ({})", inst.p.display(f), show.join(", "))))
}

/// Split neat subalgebras of every degree dividing κ, a maximal étale one,
/// and F[x] for random x ∈ Symm(σ).
fn sample_subalgebras<F: Field>(
    a: &AlgebraWithInvolution<F>,
    ctx: &Ctx,
    salt: u64,
) -> neatalg::Result<Vec<(String, Subalgebra<F>)>> {
    let f = a.field();
    let k = a.capacity();
    let opts = ctx.opts();
    let mut out = Vec::new();
    for r in (1..=k).filter(|r| k.is_multiple_of(*r)) {
        match split_neat_with(a, r, &opts.fork(r as u64)) {
            Ok(l) => out.push((format!("split F^{r}"), l)),
            Err(Error::NoSplitNeat(_)) => {}
            Err(e) => return Err(e),
        }
    }
    out.push(("maximal étale".into(), max_etale_with(a, None, &opts)?));
    let mut rng = ctx.rng(salt);
    for i in 0..ctx.budgets.subalgebras {
        let x = random_in(f, a.symm(), &mut rng);
        out.push((format!("F[x{i}]"), Subalgebra::generated(a, &[x])?));
    }
    Ok(out)
}

fn prop_neat<F: Field>(a: &AlgebraWithInvolution<F>, ctx: &Ctx) -> Check {
    let f = a.field();
    let k = a.capacity();
    let cands = sample_subalgebras(a, ctx, 1)?;
    let mut neat = 0;
    for (name, l) in &cands {
        let v = is_neat(a, l);
        let (etale, symm) = (l.is_etale(), l.in_symm());
        if v.neat {
            neat += 1;
            ensure(etale && symm, || format!("{name}: neat but not étale in Symm"))?;
            ensure(k.is_multiple_of(l.dim()), || format!("{name}: neat of degree {} ∤ κ = {k}", l.dim()))?;
        }
        if !etale {
            ensure(v.failed_condition == Some(NeatFailure::NotEtale), || {
                format!("{name}: not étale but verdict {:?}", v.failed_condition)
            })?;
            continue;
        }
        if !symm {
            continue;
        }
        ensure(l.dim() <= k, || format!("{name}: étale of degree {} > κ = {k}", l.dim()))?;
        ensure(a.syms().contains_span(f, l.span()), || format!("{name}: étale in Symm but not in Syms"))?;
        if l.dim() == k {
            ensure(v.neat, || format!("{name}: degree κ but {:?}", v.failed_condition))?;
        }
        if a.kind() == Kind::First {
            corner_identity(a, l, &v.failed_condition).map_err(|e| label(name, e))?;
        }
        if v.neat && name.starts_with("split") {
            sub_neat(a, l).map_err(|e| label(name, e))?;
        }
    }
    Ok(Done::Pass(format!("{} subalgebras, {neat} neat", cands.len())))
}

/// dim C_A(L) = Σ ℓᵢdᵢ² with dᵢ = deg(eᵢAeᵢ)/ℓᵢ, and L is free exactly
/// when all dᵢ agree.
fn corner_identity<F: Field>(
    a: &AlgebraWithInvolution<F>,
    l: &Subalgebra<F>,
    failed: &Option<NeatFailure>,
) -> neatalg::Result<()> {
    let desc = match idempotents(l) {
        Ok(d) => d,
        Err(Error::IdempotentsInfeasible) => return Ok(()),
        Err(e) => return Err(e),
    };
    let mut parts = Vec::new();
    for (e, li) in desc.primitive_idempotents.iter().zip(desc.component_degrees()) {
        let deg = a.corner(e)?.degree();
        ensure(deg % li == 0, || format!("corner degree {deg} not divisible by ℓ = {li}"))?;
        parts.push((li, deg / li));
    }
    let want: usize = parts.iter().map(|(l, d)| l * d * d).sum();
    let got = a.centralizer(l)?.dim();
    ensure(got == want, || format!("dim C_A(L) = {got}, corner degrees give {want}"))?;
    let equal = parts.windows(2).all(|w| w[0].1 == w[1].1);
    let not_free = matches!(failed, Some(NeatFailure::NotFree { .. }));
    ensure(equal != not_free, || format!("corner degrees {parts:?} disagree with verdict {failed:?}"))
}

/// Subalgebras of a split neat L over which L is free are neat.
fn sub_neat<F: Field>(a: &AlgebraWithInvolution<F>, l: &Subalgebra<F>) -> neatalg::Result<()> {
    let f = a.field();
    let e = idempotents(l)?.primitive_idempotents;
    let r = e.len();
    for s in (1..r).filter(|s| r % s == 0) {
        let basis = e
            .chunks(r / s)
            .map(|c| c.iter().skip(1).fold(c[0].clone(), |acc, x| acc.add(f, x)))
            .collect();
        let k = Subalgebra::new(a, basis)?;
        let v = is_neat(a, &k);
        ensure(v.neat, || format!("subalgebra of degree {s} is not neat: {:?}", v.failed_condition))?;
    }
    Ok(())
}

fn lem_pc<F: Field>(a: &AlgebraWithInvolution<F>, ctx: &Ctx) -> Check {
    let f = a.field();
    let n = ctx.budgets.pc;
    let opts = ctx.opts();
    let mut rng = ctx.rng(2);
    let mut done = Vec::new();
    match split_neat_with(a, 2, &opts) {
        Ok(k) => {
            let e = idempotents(&k)?.primitive_idempotents;
            let (a1, a2) = (a.corner(&e[0])?, a.corner(&e[1])?);
            ensure(a1.degree() == a2.degree(), || "corners of unequal degree".into())?;
            let w = quadratic_split(a, &k)?.twisted.intersect(f, a.symm());
            for _ in 0..n {
                let x = random_in(f, a.span(), &mut rng);
                let y = e[0].mul(f, &x).mul(f, &e[1]).add(f, &e[1].mul(f, &x).mul(f, &e[0]));
                let u = e[0].mul(f, &y).mul(f, &e[1]);
                let v = e[1].mul(f, &y).mul(f, &e[0]);
                let p = a.reduced_char_poly(&y)?.normalized(f);
                let p1 = a1.reduced_char_poly(&u.mul(f, &v))?.compose_square(f).normalized(f);
                let p2 = a2.reduced_char_poly(&v.mul(f, &u))?.compose_square(f).normalized(f);
                ensure(p == p1 && p == p2, || {
                    format!("Prd(a) = {} but Prd(uv)(X²) = {}", p.display(f), p1.display(f))
                })?;
                let z = random_in(f, &w, &mut rng);
                let chi = a.chi_scalar(&z)?;
                ensure(chi.is_even(f), || format!("χ = {} is not even (split K)", chi.display(f)))?;
            }
            done.push(format!("Prd doubling ×{n}"));
        }
        Err(Error::NoSplitNeat(_)) => done.push("no split neat F×F".into()),
        Err(e) => return Err(e),
    }
    let switch = matches!(a.model(), Model::Switch { .. });
    if a.capacity().is_multiple_of(2) && (a.kind() == Kind::First || switch) {
        let k = neat_quadratic_field(a, &opts)?;
        let c = a.centralizer_algebra(&k)?;
        let w = quadratic_split(a, &k)?.twisted.intersect(f, a.symm());
        for _ in 0..n {
            let z = random_in(f, &w, &mut rng);
            let sq = z.mul(f, &z);
            ensure(c.syms().contains(f, &sq), || "a² ∉ Syms(σ_C)".into())?;
            let lhs = a.chi_scalar(&z)?.normalized(f);
            let rhs = c.chi_scalar(&sq)?.compose_square(f).normalized(f);
            ensure(lhs == rhs, || format!("χ_A(a) = {} but χ_C(a²)(X²) = {}", lhs.display(f), rhs.display(f)))?;
            ensure(lhs.is_even(f), || format!("χ = {} is not even (field K)", lhs.display(f)))?;
        }
        done.push(format!("χ doubling over a quadratic field ×{n}"));
    }
    Ok(Done::Pass(done.join("; ")))
}

fn keeps_type<F: Field>(a: &AlgebraWithInvolution<F>, ctx: &Ctx) -> Check {
    let f = a.field();
    let opts = ctx.opts();
    let split = split_idempotents(a, &opts)?;
    let mut idems: Vec<Matrix<F::Elem>> = Vec::new();
    if split.len() <= 8 {
        for mask in 1u32..(1 << split.len()) {
            let e = (0..split.len())
                .filter(|i| mask >> i & 1 == 1)
                .fold(Matrix::zeros(f, a.ambient_size(), a.ambient_size()), |acc, i| acc.add(f, &split[i]));
            idems.push(e);
        }
    } else {
        idems.extend(split.iter().cloned());
    }
    let mut rng = ctx.rng(3);
    for _ in 0..ctx.budgets.subalgebras {
        let l = Subalgebra::generated(a, &[random_in(f, a.symm(), &mut rng)])?;
        if !l.is_etale() {
            continue;
        }
        match idempotents(&l) {
            Ok(d) => idems.extend(d.all_idempotents(f).into_iter().skip(1)),
            Err(Error::IdempotentsInfeasible) => {}
            Err(e) => return Err(e),
        }
    }
    let ty = a.involution_type();
    let mut exceptions = 0;
    for e in &idems {
        let expected = if ty == InvolutionType::Orthogonal && f.characteristic() == 2 && a.symd().contains(f, e) {
            exceptions += 1;
            InvolutionType::Symplectic
        } else {
            ty
        };
        let got = a.corner(e)?.involution_type();
        ensure(got == expected, || format!("corner type {got:?}, expected {expected:?}"))?;
    }
    Ok(Done::Pass(format!("{} corners, {exceptions} symplectic exceptions", idems.len())))
}

fn cap_max_dim<F: Field>(a: &AlgebraWithInvolution<F>, ctx: &Ctx) -> Check {
    let f = a.field();
    let k = a.capacity();
    let opts = ctx.opts();
    let l = max_etale_with(a, None, &opts)?;
    ensure(l.dim() == k, || format!("[L:F] = {} ≠ κ = {k}", l.dim()))?;
    ensure(is_neat(a, &l).neat, || "maximal étale L is not neat".into())?;
    ensure(a.syms().contains_span(f, l.span()), || "L ⊄ Syms".into())?;
    let mut notes = vec![format!("[L:F] = {k}")];
    if k.is_multiple_of(2) {
        if let Ok(kk) = split_neat_with(a, 2, &opts) {
            let l2 = max_etale_with(a, Some(&kk), &opts.fork(9))?;
            ensure(l2.contains_sub(&kk) && l2.dim() == k, || "maximal étale over K".into())?;
            notes.push("contains split F×F".into());
        }
    }
    let symm = a.symm().echelon(f);
    let size = f.cardinality().and_then(|q| q.checked_pow(symm.dim() as u32));
    if size.is_some_and(|s| s <= 4096) {
        let mut elems = Vec::new();
        let _ = search(f, symm.dim(), &SearchOptions::default(), "", |c| {
            elems.push(symm.element(f, c));
            None::<()>
        });
        let mut best = 0;
        for x in &elems {
            let l = Subalgebra::generated(a, std::slice::from_ref(x))?;
            if l.is_etale() {
                best = best.max(l.dim());
            }
        }
        if elems.len() <= 64 {
            for x in &elems {
                for y in &elems {
                    if x.mul(f, y) != y.mul(f, x) {
                        continue;
                    }
                    let l = Subalgebra::generated(a, &[x.clone(), y.clone()])?;
                    if l.is_etale() {
                        best = best.max(l.dim());
                    }
                }
            }
            ensure(best == k, || format!("exhaustive maximum {best} ≠ κ = {k}"))?;
        }
        ensure(best <= k, || format!("étale subalgebra of degree {best} > κ = {k}"))?;
        notes.push(format!("exhaustive over {} elements: max {best}", elems.len()));
    }
    Ok(Done::Pass(notes.join("; ")))
}

/// Γ(a,b,c,d,e,g) ∈ Symd(s) for s on M₄(F).
fn gamma<F: Field>(f: &F, v: &[F::Elem]) -> Matrix<F::Elem> {
    let z = f.zero();
    let [a, b, c, d, e, g] = [&v[0], &v[1], &v[2], &v[3], &v[4], &v[5]].map(Clone::clone);
    Matrix::from_fn(4, 4, |i, j| {
        let rows = [
            [a.clone(), b.clone(), z.clone(), e.clone()],
            [c.clone(), d.clone(), f.neg(&e), z.clone()],
            [z.clone(), g.clone(), a.clone(), c.clone()],
            [f.neg(&g), z.clone(), b.clone(), d.clone()],
        ];
        rows[i][j].clone()
    })
}

fn cap2_form<F: Field>(a: &AlgebraWithInvolution<F>, ctx: &Ctx) -> Check {
    if a.capacity() != 2 {
        return Ok(Done::Skip(format!("capacity {}", a.capacity())));
    }
    let f = a.field();
    let n = a.ambient_size();
    let q = neatalg::involutions::cap2_form(a)?;
    let want = match a.involution_type() {
        InvolutionType::Orthogonal => 3,
        InvolutionType::Unitary => 4,
        InvolutionType::Symplectic => 6,
    };
    ensure(q.dim() == want, || format!("dim Syms = {} ≠ {want}", q.dim()))?;
    ensure(q.is_nondegenerate(), || {
        format!("c₂ degenerate: rad(q) {}, rad(b_q) {}", q.radical.len(), q.polar_radical.len())
    })?;
    let mut notes = vec![format!("dim Syms = {want}, dim rad(b_q) = {}", q.polar_radical.len())];
    let mut rng = ctx.rng(4);

    let canonical_s = matches!(a.model(), Model::Matrix { d: 4, g } if *g == neatalg::involutions::symplectic_j(f, 2));
    if canonical_s {
        for _ in 0..ctx.budgets.det {
            let v: Vec<_> = (0..6).map(|_| f.random(&mut rng)).collect();
            let x = gamma(f, &v);
            ensure(a.symd().contains(f, &x), || "Γ ∉ Symd(s)".into())?;
            let pf = f.add(&f.sub(&f.mul(&v[0], &v[3]), &f.mul(&v[1], &v[2])), &f.mul(&v[4], &v[5]));
            ensure(x.det(f)? == f.mul(&pf, &pf), || "det Γ ≠ (ad − bc + eg)²".into())?;
        }
        notes.push(format!("det = Pf² ×{}", ctx.budgets.det));
    }

    // Syms = K ⊕ (C′ ∩ Symm), orthogonal for b_q, with c₂ the norm on K
    let k = max_etale_with(a, None, &ctx.opts())?;
    let split = quadratic_split(a, &k)?;
    let w = split.twisted.intersect(f, a.symm());
    let mut both = k.basis().to_vec();
    both.extend(w.basis().iter().cloned());
    ensure(
        MatrixSpan::new(f, n, both).dim() == q.dim() && k.dim() + w.dim() == q.dim(),
        || format!("Syms ≠ K ⊕ W: {} + {} vs {}", k.dim(), w.dim(), q.dim()),
    )?;
    let c2 = |x: &Matrix<F::Elem>| -> neatalg::Result<F::Elem> { Ok(a.chi(x)?.c[1].clone()) };
    let line = MatrixSpan::new(f, n, [a.unit().clone(), split.u.clone()]);
    for _ in 0..ctx.budgets.pc {
        let x = random_in(f, &w, &mut rng);
        ensure(a.scalar(&c2(&x)?) == x.mul(f, &x).neg(f), || "c₂(x) ≠ −x² on W".into())?;
        let y = random_in(f, k.span(), &mut rng);
        let cy = line.coords(f, &y).expect("K = F + Fu");
        let gy = a.scalar(&f.add(&cy[0], &cy[1])).sub(f, &split.u.scale(f, &cy[1]));
        ensure(a.scalar(&c2(&y)?) == y.mul(f, &gy), || "c₂ ≠ N_K on K".into())?;
        ensure(c2(&x.add(f, &y))? == f.add(&c2(&x)?, &c2(&y)?), || "K and W not b_q-orthogonal".into())?;
    }
    notes.push("Syms = K ⊕ W".into());
    Ok(Done::Pass(notes.join("; ")))
}

fn neat_ext(a: &AlgebraWithInvolution<FiniteField>, ctx: &Ctx) -> Check {
    let (b, emb) = a.extend_scalars(2)?;
    let cands = sample_subalgebras(a, ctx, 5)?;
    let mut neat = 0;
    for (name, l) in &cands {
        let lb = l.extend_scalars(&b, &emb)?;
        let (v, vb) = (is_neat(a, l), is_neat(&b, &lb));
        ensure(v.neat == vb.neat, || {
            format!("{name}: neat {} over F, {} after extension", v.neat, vb.neat)
        })?;
        neat += v.neat as usize;
    }
    Ok(Done::Pass(format!("{} subalgebras agree, {neat} neat", cands.len())))
}

/// Search budget for square-separable elements when |F| ≤ κ, where they
/// need not exist.
const SMALL_FIELD_PROBE: u64 = 10_000;

fn neat_quad<F: Field>(a: &AlgebraWithInvolution<F>, ctx: &Ctx) -> Check {
    let k = a.capacity();
    if !k.is_multiple_of(2) {
        return Ok(Done::Skip(format!("capacity {k} is odd")));
    }
    let f = a.field();
    let opts = ctx.opts();
    let large = f.cardinality().is_none_or(|q| q > k as u64);
    let mut ks = Vec::new();
    match split_neat_with(a, 2, &opts) {
        Ok(kk) => ks.push(("split K", kk)),
        Err(Error::NoSplitNeat(_)) => {}
        Err(e) => return Err(e),
    }
    ks.push(("field K", neat_quadratic_field(a, &opts)?));
    let mut notes = Vec::new();
    for (name, kk) in &ks {
        let ext = match extend_neat_quadratic_with(a, kk, ExtensionMethod::Auto, &opts) {
            Ok(x) => x,
            Err(e @ Error::NotFound { .. }) if large => {
                return Err(Error::Verification(format!("{name}: {e} although |F| > κ")))
            }
            Err(e) => return Err(e),
        };
        ensure(ext.kl.dim() == k && is_neat(a, &ext.kl).neat, || format!("{name}: KL not neat of degree κ"))?;
        let probe = SearchOptions {
            budget: if large { opts.budget } else { opts.budget.min(SMALL_FIELD_PROBE) },
            ..opts.fork(11)
        };
        match square_separable_search(a, kk, &probe) {
            Ok(s) => {
                let x = &s.element;
                ensure(!f.is_zero(&x.det(f)?), || "square-separable element not invertible".into())?;
                let g = a.chi(x)?.chi.even_part(f);
                ensure(g.as_ref() == Some(&s.even_part) && poly_separable(f, &s.even_part)?, || {
                    "χ is not f(X²) with f separable".into()
                })?;
                notes.push(format!("{name}: {:?}, square-separable found", ext.method));
            }
            Err(e @ Error::NotFound { .. }) if large => {
                return Err(Error::Verification(format!("{name}: {e} although |F| > κ")))
            }
            Err(Error::NotFound { .. }) => {
                notes.push(format!("{name}: {:?}, square-separable not found (|F| ≤ κ)", ext.method))
            }
            Err(e) => return Err(e),
        }
    }
    Ok(Done::Pass(notes.join("; ")))
}

fn certificate_round_trip<F: Field>(a: &AlgebraWithInvolution<F>, c: &Certified<F>) -> neatalg::Result<Value> {
    c.verify(a)?;
    let doc = c.to_doc(a);
    let (_, back) = Certified::from_doc(a.field(), &doc)?;
    ensure(back.subalgebra.dim() == c.subalgebra.dim(), || "certificate round trip".into())?;
    Ok(doc.certificate.expect("certified document"))
}

fn biquadratic<F: Field>(a: &AlgebraWithInvolution<F>, ctx: &Ctx) -> Check {
    if a.capacity() != 4 {
        return Ok(Done::Skip(format!("capacity {}", a.capacity())));
    }
    let f = a.field();
    let opts = ctx.opts();
    let c = neat_biquadratic_with(a, BiquadraticRoute::ZeroDivisors, &opts)?;
    let cert = certificate_round_trip(a, &c)?;
    let x = find_c1c3_zero(a, &opts)?;
    let chi = a.chi(&x)?;
    ensure(f.is_zero(&chi.c[0]) && f.is_zero(&chi.c[2]), || "c₁ or c₃ nonzero".into())?;
    Ok(Done::Certified(
        format!("neat biquadratic certified; c₁ = c₃ = 0 for χ = {}", chi.chi.display(f)),
        cert,
    ))
}

fn albert_rowen<F: Field>(a: &AlgebraWithInvolution<F>, ctx: &Ctx) -> Check {
    if a.involution_type() != InvolutionType::Symplectic || a.degree() != 8 {
        return Ok(Done::Skip("not symplectic of degree 8".into()));
    }
    let opts = ctx.opts();
    let bq = neat_biquadratic_with(a, BiquadraticRoute::ZeroDivisors, &opts)?;
    let t = triquadratic_split(a, &bq.subalgebra, &opts)?;
    let cert = certificate_round_trip(a, &t)?;
    Ok(Done::Certified(
        format!("σ-stable triquadratic of dimension {} certified", t.subalgebra.dim()),
        cert,
    ))
}
