use rand::SeedableRng;

use super::*;
use crate::error::Error;
use crate::field::{Field, FiniteField, Rationals, Ring};
use crate::involutions::{build_algebra, AlgebraWithInvolution, InvolutionType, ModelSpec, Subalgebra};
use crate::matrix::Matrix;
use crate::poly::Poly;
use crate::search::SearchOptions;

fn gf(q: u64) -> FiniteField {
    let (p, k) = crate::field::prime_power(q).unwrap();
    FiniteField::new(p, k).unwrap()
}

fn m<F: Field>(f: &F, rows: &[&[i64]]) -> Matrix<F::Elem> {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| f.from_i64(x)).collect()).collect()).unwrap()
}

fn diag<F: Field>(f: &F, d: &[i64]) -> Matrix<F::Elem> {
    Matrix::from_fn(d.len(), d.len(), |i, j| if i == j { f.from_i64(d[i]) } else { f.zero() })
}

fn unit<F: Field>(f: &F, n: usize, i: usize) -> Matrix<F::Elem> {
    Matrix::unit(f, n, i, i)
}

fn transpose<F: Field>(f: &F, d: usize) -> AlgebraWithInvolution<F> {
    build_algebra(f, &ModelSpec::Transpose { d }).unwrap()
}

fn symplectic<F: Field>(f: &F, m: usize) -> AlgebraWithInvolution<F> {
    build_algebra(f, &ModelSpec::Symplectic { m }).unwrap()
}

fn diagonals<F: Field>(a: &AlgebraWithInvolution<F>) -> Subalgebra<F> {
    let f = a.field();
    let n = a.ambient_size();
    Subalgebra::new(a, (0..n).map(|i| unit(f, n, i)).collect()).unwrap()
}

/// The orthogonal involution Int(m)∘t on M₄(F) whose corner at e = E₃₃ + E₄₄
/// is symplectic in characteristic 2.
fn twisted_m4(f: &FiniteField) -> (AlgebraWithInvolution<FiniteField>, Matrix<u64>) {
    let g = m(f, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 0]]);
    let a = build_algebra(f, &ModelSpec::Orthogonal { g }).unwrap();
    let e = unit(f, 4, 2).add(f, &unit(f, 4, 3));
    (a, e)
}

#[test]
fn etale_examples() {
    let f = gf(2);
    let a = transpose(&f, 2);
    let k = Subalgebra::generated(&a, &[m(&f, &[&[0, 1], &[1, 1]])]).unwrap();
    assert!(is_etale(&k).unwrap());
    let nil = Subalgebra::generated(&a, &[m(&f, &[&[0, 1], &[0, 0]])]).unwrap();
    assert!(!is_etale(&nil).unwrap());
    assert!(is_etale(&diagonals(&transpose(&f, 3))).unwrap());
    let whole = Subalgebra::new(&a, a.basis().to_vec()).unwrap();
    assert!(is_etale(&whole).is_err());
}

#[test]
fn idempotent_counts() {
    let f = gf(2);
    let a3 = transpose(&f, 3);
    let d = idempotents(&diagonals(&a3)).unwrap();
    assert_eq!((d.all_idempotents(&f).len(), d.rank()), (8, 3));
    assert!(d.split);
    assert_eq!(d.primitive_idempotents, vec![unit(&f, 3, 0), unit(&f, 3, 1), unit(&f, 3, 2)]);

    let a2 = transpose(&f, 2);
    let field = Subalgebra::generated(&a2, &[m(&f, &[&[0, 1], &[1, 1]])]).unwrap();
    let d = idempotents(&field).unwrap();
    assert_eq!(d.all_idempotents(&f), vec![Matrix::zeros(&f, 2, 2), a2.unit().clone()]);
    assert_eq!(d.component_minpolys, vec![Poly::new(&f, vec![1, 1, 1])]);

    // GF(4) × GF(2) inside M₃(GF(2))
    let x = m(&f, &[&[0, 1, 0], &[1, 1, 0], &[0, 0, 0]]);
    let l = Subalgebra::generated(&a3, &[x]).unwrap();
    let d = idempotents(&l).unwrap();
    assert_eq!((d.all_idempotents(&f).len(), d.rank()), (4, 2));
    assert_eq!(d.component_degrees(), vec![2, 1]);
    assert!(!d.split);
    // agrees with brute force e² = e
    let (all, prim) = idempotents_exhaustive(&l).unwrap();
    assert_eq!(all.len(), 4);
    let mut prim_sorted = prim.clone();
    prim_sorted.sort_by_key(|e| e.as_slice().to_vec());
    let mut ours = d.primitive_idempotents.clone();
    ours.sort_by_key(|e| e.as_slice().to_vec());
    assert_eq!(ours, prim_sorted);
}

#[test]
fn idempotents_over_the_rationals() {
    let q = Rationals;
    let a = transpose(&q, 3);
    let d = idempotents(&diagonals(&a)).unwrap();
    assert_eq!(d.rank(), 3);
    assert!(d.split);
    // eigenvalues ±1 and 5
    let sym = m(&q, &[&[0, 1, 0], &[1, 0, 0], &[0, 0, 5]]);
    let l = Subalgebra::generated(&a, &[sym]).unwrap();
    let d = idempotents(&l).unwrap();
    assert_eq!(d.component_degrees(), vec![1, 1, 1]);
    // ℚ(√5) × ℚ
    let y = m(&q, &[&[0, 1, 0], &[1, 1, 0], &[0, 0, 3]]);
    let l = Subalgebra::generated(&a, &[y]).unwrap();
    let d = idempotents(&l).unwrap();
    assert_eq!(d.component_degrees(), vec![2, 1]);
    assert!(!d.split);
}

#[test]
fn primitive_element_examples() {
    let f5 = gf(5);
    let a = transpose(&f5, 3);
    let x = primitive_element(&diagonals(&a)).unwrap();
    assert_eq!(x, diag(&f5, &[1, 2, 3]));
    let mp = Subalgebra::generated(&a, std::slice::from_ref(&x)).unwrap().min_poly(&x);
    let want = Poly::linear(&f5, &1).mul(&f5, &Poly::linear(&f5, &2)).mul(&f5, &Poly::linear(&f5, &3));
    assert_eq!(mp, want);

    let f2 = gf(2);
    let x = primitive_element(&diagonals(&transpose(&f2, 2))).unwrap();
    assert_eq!(x, diag(&f2, &[0, 1]));
    assert_eq!(
        primitive_element(&diagonals(&transpose(&f2, 3))).unwrap_err(),
        Error::NoPrimitiveElement
    );
}

#[test]
fn non_neat_fixtures_over_gf2() {
    let f = gf(2);
    let (a, e) = twisted_m4(&f);
    let (e1, e2) = (unit(&f, 4, 0), unit(&f, 4, 1));
    let l = Subalgebra::new(&a, vec![e1.clone(), e2.clone(), e.clone()]).unwrap();
    assert!(l.is_etale() && l.in_symm());
    let v = is_neat(&a, &l);
    assert!(!v.neat);
    assert_eq!(
        v.failed_condition,
        Some(NeatFailure::NotFree {
            degree: 3,
            centralizer_dim: 6,
            algebra_dim: 16
        })
    );
    assert_ne!(16 % 3, 0);
    // the symplectic corner is a second reason
    assert_eq!(a.corner(&e).unwrap().involution_type(), InvolutionType::Symplectic);
    assert!(!idempotents_keep_type(&a, &l).unwrap());

    let e2e = e2.add(&f, &e);
    let lp = Subalgebra::new(&a, vec![e1.clone(), e2e.clone()]).unwrap();
    assert!(lp.is_etale() && lp.in_symm());
    assert!(idempotents_keep_type(&a, &lp).unwrap());
    let v = is_neat(&a, &lp);
    assert!(matches!(v.failed_condition, Some(NeatFailure::NotFree { .. })));
    // components of the centralizer: e₁Ae₁ and (e₂+e)A(e₂+e) of degrees 1 and 3
    assert_eq!(a.corner(&e1).unwrap().degree(), 1);
    assert_eq!(a.corner(&e2e).unwrap().degree(), 3);
}

#[test]
fn diagonal_algebra_is_neat() {
    for q in [2, 3, 5] {
        let f = gf(q);
        for d in 1..=4 {
            let a = transpose(&f, d);
            let v = is_neat(&a, &diagonals(&a));
            assert!(v.neat, "GF({q}) d={d}: {v:?}");
        }
    }
}

#[test]
fn bad_idempotent_in_symd_is_reported() {
    // in char 2 the idempotent E₁₁ + E₂₂ of a hyperbolic plane lies in
    // Symd for the form [[0,1],[1,0]] ⊕ [[1]]
    let f = gf(2);
    let g = m(&f, &[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
    let a = build_algebra(&f, &ModelSpec::Orthogonal { g }).unwrap();
    let e = unit(&f, 3, 0).add(&f, &unit(&f, 3, 1));
    assert!(a.symd().contains(&f, &e));
    let l = Subalgebra::new(&a, vec![e, unit(&f, 3, 2)]).unwrap();
    let v = is_neat(&a, &l);
    assert_eq!(v.failed_condition, Some(NeatFailure::NotFree { degree: 2, centralizer_dim: 5, algebra_dim: 9 }));
}

#[test]
fn split_neat_examples() {
    let f = gf(3);
    let l = split_neat(&transpose(&f, 4), 4).unwrap();
    let mut b = l.basis().to_vec();
    b.sort_by_key(|x| x.as_slice().to_vec());
    let mut want: Vec<_> = (0..4).map(|i| unit(&f, 4, i)).collect();
    want.sort_by_key(|x| x.as_slice().to_vec());
    assert_eq!(MatrixSpanEq(b), MatrixSpanEq(want));

    let s = symplectic(&f, 2);
    let l = split_neat(&s, 2).unwrap();
    assert_eq!(l.dim(), 2);
    assert!(is_neat(&s, &l).neat);
    assert!(idempotents(&l).unwrap().split);
    assert_eq!(split_neat(&s, 4).unwrap_err(), Error::NoSplitNeat(4));
}

/// Equality of spans given by bases.
#[derive(Debug)]
struct MatrixSpanEq(Vec<Matrix<u64>>);

impl PartialEq for MatrixSpanEq {
    fn eq(&self, o: &Self) -> bool {
        let f = gf(3);
        let n = self.0[0].rows();
        let a = crate::MatrixSpan::new(&f, n, self.0.clone());
        let b = crate::MatrixSpan::new(&f, n, o.0.clone());
        a.dim() == b.dim() && a.contains_span(&f, &b)
    }
}

#[test]
fn split_neat_in_every_type() {
    for q in [2, 3, 4, 5] {
        let f = gf(q);
        let models = [
            ModelSpec::Transpose { d: 4 },
            ModelSpec::Symplectic { m: 2 },
            ModelSpec::Switch { d: 2 },
            ModelSpec::Unitary { d: 2, c: None, h: None },
        ];
        for spec in &models {
            let a = build_algebra(&f, spec).unwrap();
            let k = a.capacity();
            let l = split_neat(&a, k).unwrap();
            assert_eq!(l.dim(), k, "GF({q}) {spec:?}");
            let idems = split_idempotents(&a, &SearchOptions::default()).unwrap();
            assert!(idems.iter().all(|e| a.corner(e).unwrap().capacity() == 1));
        }
    }
}

#[test]
fn max_etale_examples() {
    let f = gf(2);
    let a = transpose(&f, 2);
    let l = max_etale(&a, None).unwrap();
    assert!(l.contains(&m(&f, &[&[0, 1], &[1, 1]])));
    assert_eq!(l.dim(), 2);
    assert!(!idempotents(&l).unwrap().split);

    for q in [3, 5] {
        let f = gf(q);
        let a = transpose(&f, 3);
        assert_eq!(max_etale(&a, None).unwrap().dim(), 3);
        let s = symplectic(&f, 2);
        let l = max_etale(&s, None).unwrap();
        assert_eq!(l.dim(), 2);
        assert!(s.symd().contains_span(&f, l.span()));
    }
}

#[test]
fn max_etale_containing_a_neat_subalgebra() {
    let f = gf(3);
    let a = transpose(&f, 4);
    let k = split_neat(&a, 2).unwrap();
    let l = max_etale(&a, Some(&k)).unwrap();
    assert!(l.contains_sub(&k));
    assert_eq!(l.dim(), 4);
    // free over K: both idempotents of K cut L in halves
    for e in idempotents(&k).unwrap().primitive_idempotents {
        let part = crate::MatrixSpan::new(&f, 4, l.basis().iter().map(|b| e.mul(&f, b)));
        assert_eq!(part.dim(), 2);
    }
    let field = Subalgebra::generated(&a, &[block2(&f, &[&[0, 1], &[1, 2]])]).unwrap();
    assert!(is_neat(&a, &field).neat);
    let l = max_etale(&a, Some(&field)).unwrap();
    assert!(l.contains_sub(&field));
}

/// blockdiag(y, y) for a 2×2 y.
fn block2<F: Field>(f: &F, y: &[&[i64]]) -> Matrix<F::Elem> {
    let y = m(f, y);
    Matrix::block_diag(f, &[&y, &y])
}

#[test]
fn square_separable_examples() {
    let f = gf(5);
    let a = build_algebra(&f, &ModelSpec::Orthogonal { g: diag(&f, &[1, 2]) }).unwrap();
    let k = diagonals(&a);
    let s = square_separable_search(&a, &k, &SearchOptions::default()).unwrap();
    assert_eq!(s.element, m(&f, &[&[0, 1], &[2, 0]]));
    assert_eq!(s.even_part, Poly::new(&f, vec![f.from_i64(-2), 1]));
    assert!(s.hypothesis_holds);
    // γ swaps the two diagonal idempotents: a·e = γ(e)·a
    for e in k.basis() {
        let ge = k.unit().sub(&f, e);
        assert_eq!(s.element.mul(&f, e), ge.mul(&f, &s.element));
    }

    // g = g₁ + g₂ with gᵢ² = cᵢeᵢ: Prd = ∏(X² − cᵢ)
    let a = transpose(&f, 4);
    let g = m(&f, &[&[0, 0, 1, 0], &[0, 0, 0, 2], &[1, 0, 0, 0], &[0, 2, 0, 0]]);
    let chi = a.chi(&g).unwrap().chi;
    let want = Poly::new(&f, vec![f.from_i64(-1), 0, 1]).mul(&f, &Poly::new(&f, vec![f.from_i64(-4), 0, 1]));
    assert_eq!(chi, want);
}

#[test]
fn extend_neat_quadratic_examples() {
    let f3 = gf(3);
    let a = transpose(&f3, 2);
    let k = Subalgebra::generated(&a, &[m(&f3, &[&[0, 1], &[1, 1]])]).unwrap();
    let ext = extend_neat_quadratic(&a, &k).unwrap();
    assert_eq!(ext.l.dim(), 1);
    assert_eq!(ext.kl.dim(), 2);

    let f5 = gf(5);
    let a = transpose(&f5, 4);
    let k = Subalgebra::new(&a, vec![diag(&f5, &[1, 1, 0, 0]), diag(&f5, &[0, 0, 1, 1])]).unwrap();
    for method in [ExtensionMethod::Auto, ExtensionMethod::SquareSeparable, ExtensionMethod::Idempotent] {
        let ext = extend_neat_quadratic_with(&a, &k, method, &SearchOptions::default()).unwrap();
        assert_eq!(ext.kl.dim(), 4);
        assert!(is_neat(&a, &ext.kl).neat);
    }
    let field = Subalgebra::generated(&a, &[block2(&f5, &[&[0, 1], &[1, 2]])]).unwrap();
    let ext = extend_neat_quadratic(&a, &field).unwrap();
    assert_eq!(ext.method, ExtensionMethod::SquareSeparable);
    assert_eq!(ext.kl.dim(), 4);

    let s = symplectic(&f3, 4);
    let k = split_neat(&s, 2).unwrap();
    let ext = extend_neat_quadratic(&s, &k).unwrap();
    assert_eq!(ext.kl.dim(), 4);
}

#[test]
fn extend_over_the_rationals() {
    let q = Rationals;
    let a = transpose(&q, 4);
    let k = Subalgebra::new(&a, vec![diag(&q, &[1, 1, 0, 0]), diag(&q, &[0, 0, 1, 1])]).unwrap();
    let ext = extend_neat_quadratic(&a, &k).unwrap();
    assert_eq!(ext.method, ExtensionMethod::SquareSeparable);
    assert_eq!(ext.kl.dim(), 4);
}

#[test]
fn c1c3_witnesses() {
    let f3 = gf(3);
    let a = transpose(&f3, 4);
    let x = find_c1c3_zero(&a, &SearchOptions::default()).unwrap();
    assert_eq!(a.chi(&x).unwrap().chi, Poly::new(&f3, vec![1, 0, f3.from_i64(-2), 0, 1]));
    assert_eq!(x.mul(&f3, &x), *a.unit());

    let f2 = gf(2);
    let a = transpose(&f2, 4);
    let x = find_c1c3_zero(&a, &SearchOptions::default()).unwrap();
    assert_eq!(a.chi(&x).unwrap().chi, Poly::new(&f2, vec![0, 0, 1, 0, 1]));

    let s = symplectic(&f2, 4);
    let x = find_c1c3_zero(&s, &SearchOptions::default()).unwrap();
    let chi = s.chi(&x).unwrap();
    assert!(f2.is_zero(&chi.c[0]) && f2.is_zero(&chi.c[2]));
    assert!(find_c1c3_zero(&transpose(&f3, 3), &SearchOptions::default()).is_err());
}

#[test]
fn biquadratic_examples() {
    let f3 = gf(3);
    let a = transpose(&f3, 4);
    let c = neat_biquadratic(&a).unwrap();
    assert_eq!(c.subalgebra.dim(), 4);
    assert!(idempotents(&c.subalgebra).unwrap().split);
    assert!(c.verify(&a).is_ok());

    let f2 = gf(2);
    let s = symplectic(&f2, 4);
    let c = neat_biquadratic(&s).unwrap();
    assert_eq!(c.subalgebra.dim(), 4);
    assert!(is_neat(&s, &c.subalgebra).neat);

    let f5 = gf(5);
    let sw = build_algebra(&f5, &ModelSpec::Switch { d: 4 }).unwrap();
    let c = neat_biquadratic(&sw).unwrap();
    assert!(is_neat(&sw, &c.subalgebra).neat);
    assert_eq!(c.certificate.kind, CertificateKind::Biquadratic);
}

#[test]
fn biquadratic_through_c1c3() {
    let f5 = gf(5);
    let a = transpose(&f5, 4);
    let c = neat_biquadratic_with(&a, BiquadraticRoute::C1C3, &SearchOptions::default()).unwrap();
    assert_eq!(c.subalgebra.dim(), 4);
}

#[test]
fn stable_quaternions() {
    let f3 = gf(3);
    let a = transpose(&f3, 2);
    let k = Subalgebra::generated(&a, &[m(&f3, &[&[0, 1], &[1, 1]])]).unwrap();
    let q = stable_quaternion_cap2(&a, &k, &SearchOptions::default()).unwrap();
    assert_eq!(q.subalgebra.dim(), a.dim());

    let s = symplectic(&f3, 2);
    let k = max_etale(&s, None).unwrap();
    let q = stable_quaternion_cap2(&s, &k, &SearchOptions::default()).unwrap();
    assert_eq!(q.subalgebra.dim(), 4);
    assert!(q.subalgebra.basis().iter().all(|b| q.subalgebra.contains(&s.sigma(b))));
    assert!(stable_quaternion_cap2(&transpose(&f3, 3), &k, &SearchOptions::default()).is_err());
}

#[test]
fn triquadratic_in_split_symplectic_degree_8() {
    let f2 = gf(2);
    let s = symplectic(&f2, 4);
    let bq = neat_biquadratic(&s).unwrap();
    let t = triquadratic_split(&s, &bq.subalgebra, &SearchOptions::default()).unwrap();
    assert_eq!(t.subalgebra.dim(), 8);
    assert!(t.subalgebra.is_etale());
    assert!(t.subalgebra.basis().iter().all(|b| t.subalgebra.contains(&s.sigma(b))));
    let doc = t.to_doc(&s);
    let (_, back) = Certified::from_doc(&f2, &doc).unwrap();
    assert_eq!(back.certificate.transcript, t.certificate.transcript);
    // rank-one idempotent in a canonical quaternion corner
    let q = symplectic(&f2, 1);
    let e22 = unit(&f2, 2, 1);
    assert_eq!(e22.add(&f2, &q.sigma(&e22)), *q.unit());
}

#[test]
fn springer_branches() {
    let f = gf(5);
    // f = x₀³ − 2x₁³: p = X² − 2 … a zero (1, X)·? over GF(5)[X]/(X² − 2)
    // h = 0 with c ≠ 0: f(c) = f(b) = 0 along the whole line
    let vars = 2;
    let monos = CubicForm::<u64>::monomials(vars);
    assert_eq!(monos, vec![(0, 0, 0), (0, 0, 1), (0, 1, 1), (1, 1, 1)]);
    let form = CubicForm::new(vars, vec![0, 1, 0, 0]).unwrap(); // x₀²x₁
    let p = Poly::new(&f, vec![f.from_i64(-2), 0, 1]);
    assert!(p.roots(&f).unwrap().is_empty());
    // b + cX = (0, 1) + (0, 2)X: x₀ = 0 so f vanishes identically
    let z = springer_descent(&f, &form, &[0, 1], &[0, 2], &p).unwrap();
    assert_eq!(z, vec![0, 2]);
    // b + c·a = 0: b = −a·c with f(c) = 0
    let z = springer_descent(&f, &form, &[0, f.from_i64(-3)], &[0, 1], &p).unwrap();
    assert_eq!(z, vec![0, 1]);
    assert!(springer_descent(&f, &form, &[0, 0], &[0, 0], &p).is_err());
    assert!(springer_descent(&f, &CubicForm::new(vars, vec![1, 0, 0, 1]).unwrap(), &[1, 0], &[0, 1], &p).is_err());
}

#[test]
fn springer_planted_instances() {
    for q in [3, 5] {
        let f = gf(q);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(q);
        for _ in 0..50 {
            let inst = plant_springer_instance(&f, 3, &mut rng).unwrap();
            let z = springer_descent(&f, &inst.form, &inst.b, &inst.c, &inst.p).unwrap();
            assert!(z.iter().any(|x| *x != 0));
            assert_eq!(inst.form.eval(&f, &z), 0);
        }
        assert!(matches!(plant_springer_instance(&f, 1, &mut rng), Err(Error::Precondition(_))));
    }
}

#[test]
fn neat_dimension_identity_from_corner_degrees() {
    // [L:F]·dim C_A(L) − (deg A)² = Σ_{i<j} ℓᵢℓⱼ(dᵢ − dⱼ)²
    let f = gf(3);
    let a = transpose(&f, 5);
    let gens = [
        diag(&f, &[1, 0, 0, 0, 0]),
        diag(&f, &[1, 1, 0, 0, 0]),
        Matrix::block_diag(&f, &[&m(&f, &[&[0, 1], &[1, 0]]), &Matrix::zeros(&f, 3, 3)]),
    ];
    for (t, g) in gens.iter().enumerate() {
        let l = Subalgebra::generated(&a, std::slice::from_ref(g)).unwrap();
        if !l.is_etale() {
            continue;
        }
        let d = idempotents(&l).unwrap();
        let lhs = (l.dim() * a.centralizer(&l).unwrap().dim()) as i64 - 25;
        let parts: Vec<(i64, i64)> = d
            .primitive_idempotents
            .iter()
            .zip(d.component_degrees())
            .map(|(e, li)| (li as i64, a.corner(e).unwrap().degree() as i64 / li as i64))
            .collect();
        let mut rhs = 0;
        for i in 0..parts.len() {
            for j in i + 1..parts.len() {
                let (li, di) = parts[i];
                let (lj, dj) = parts[j];
                rhs += li * lj * (di - dj) * (di - dj);
            }
        }
        assert_eq!(lhs, rhs, "generator {t}");
    }
}

#[test]
fn etale_test_matches_nilpotent_search_over_gf2() {
    fn has_nilpotent(l: &Subalgebra<FiniteField>) -> bool {
        let f = l.field();
        let k = l.dim() as u64;
        let mut found = false;
        let _: crate::Result<()> = crate::search::search(f, l.dim(), &SearchOptions::default(), "", |c| {
            let x = l.element(c);
            if !x.is_zero(f) && x.pow(f, k).is_zero(f) {
                found = true;
            }
            None
        });
        found
    }
    let f = gf(2);
    for d in [2, 3] {
        let a = transpose(&f, d);
        let _: crate::Result<()> = crate::search::search(&f, d * d, &SearchOptions::default(), "", |c| {
            let x = Matrix::from_flat(d, d, c.to_vec()).unwrap();
            let l = Subalgebra::generated(&a, &[x]).unwrap();
            if l.dim() <= 3 {
                assert_eq!(is_etale(&l).unwrap(), !has_nilpotent(&l));
            }
            None
        });
    }
    // commutative algebras generated by pairs in M₂(GF(2))
    let a = transpose(&f, 2);
    let elems: Vec<_> = (0..16u64)
        .map(|i| Matrix::from_flat(2, 2, (0..4).map(|b| i >> b & 1).collect()).unwrap())
        .collect();
    for x in &elems {
        for y in &elems {
            if x.mul(&f, y) != y.mul(&f, x) {
                continue;
            }
            let l = Subalgebra::generated(&a, &[x.clone(), y.clone()]).unwrap();
            assert_eq!(is_etale(&l).unwrap(), !has_nilpotent(&l));
        }
    }
}

#[test]
fn five_dimensional_commutative_fixture_in_the_switch_model() {
    let f = gf(3);
    let a = build_algebra(&f, &ModelSpec::Switch { d: 4 }).unwrap();
    assert_eq!(a.capacity(), 4);
    // (x, x) ↦ diag(x, xᵗ) for x = a·1 + b E₁₃ + c E₁₄ + d E₂₃ + e E₂₄
    let lift = |x: &Matrix<u64>| Matrix::block_diag(&f, &[x, &x.transpose()]);
    let mut basis = vec![lift(&Matrix::identity(&f, 4))];
    for (i, j) in [(0, 2), (0, 3), (1, 2), (1, 3)] {
        basis.push(lift(&Matrix::unit(&f, 4, i, j)));
    }
    let l = Subalgebra::new(&a, basis).unwrap();
    assert_eq!(l.dim(), 5);
    assert!(l.is_commutative() && l.in_symm());
    assert!(a.syms().contains_span(&f, l.span()));
    assert!(!is_etale(&l).unwrap());
    assert!(l.dim() > a.capacity());
    assert_eq!(is_neat(&a, &l).failed_condition, Some(NeatFailure::NotEtale));
}
