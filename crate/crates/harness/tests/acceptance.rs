//! The eleven acceptance criteria, one PASS/FAIL line each.

use neatalg::field::{FiniteField, Ring};
use neatalg::involutions::{build_algebra, AlgebraWithInvolution, InvolutionType, ModelSpec, Subalgebra};
use neatalg::matrix::Matrix;
use neatalg::neat::{idempotents_keep_type, is_etale, is_neat, NeatFailure};
use neatalg_harness::{run_suite, Report, Status, SuiteConfig, SuiteName, SuiteReport};

type Outcome = Result<String, String>;

fn run(text: &str) -> Result<Report, String> {
    let cfg = SuiteConfig::parse(text).map_err(|e| e.to_string())?;
    run_suite(&cfg).map_err(|e| e.to_string())
}

fn suite(r: &Report, name: SuiteName) -> Result<&SuiteReport, String> {
    r.suite(name).ok_or_else(|| format!("{name} missing from report"))
}

fn check(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

/// Every instance passed; returns the suite report.
fn all_pass(r: &Report, name: SuiteName) -> Result<&SuiteReport, String> {
    let s = suite(r, name)?;
    if let Some(f) = s.failures.first() {
        return Err(format!("{} failures, first #{}: {}", s.failures.len(), f.index, f.detail));
    }
    check(s.passes == s.instances_run, || {
        format!("{name}: {} of {} passed ({} not found, {} skipped)", s.passes, s.instances_run, s.not_found, s.skipped)
    })?;
    Ok(s)
}

fn gf(q: u64) -> FiniteField {
    let (p, k) = neatalg::field::prime_power(q).expect("prime power");
    FiniteField::new(p, k).unwrap()
}

fn mat(f: &FiniteField, rows: &[&[i64]]) -> Matrix<u64> {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| f.from_i64(x)).collect()).collect()).unwrap()
}

/// (M₄(F), Int(m)∘t) with m = 𝕀₂ ⊕ [[0,1],[1,0]], and e = E₃₃ + E₄₄.
fn twisted_m4(f: &FiniteField) -> (AlgebraWithInvolution<FiniteField>, Matrix<u64>) {
    let m = mat(f, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 0]]);
    let e = mat(f, &[&[0, 0, 0, 0], &[0, 0, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
    (build_algebra(f, &ModelSpec::Orthogonal { g: m }).unwrap(), e)
}

fn dimension_table() -> Outcome {
    let mut seen = Vec::new();
    for (types, degree, want) in [
        ("orthogonal", 2, 3),
        ("unitary, unitary-inner", 2, 4),
        ("symplectic", 4, 6),
    ] {
        let text = format!("fields = GF(2), GF(3), GF(5), Q\ntypes = {types}\ndegrees = {degree}\nsuites = cap2-form\nbudget.det = 1");
        let r = run(&text)?;
        let s = all_pass(&r, SuiteName::Cap2Form)?;
        for res in &s.results {
            let needle = format!("dim Syms = {want}, ");
            check(res.result.detail.starts_with(&needle), || format!("{}: {}", res.label, res.result.detail))?;
        }
        seen.push(format!("{types} {want} ×{}", s.results.len()));
    }
    Ok(format!("dim Syms: {}; c₂ nondegenerate", seen.join(", ")))
}

fn determinant_identity() -> Outcome {
    let r = run("fields = GF(2), GF(3), GF(5), Q\ntypes = symplectic\ndegrees = 4\nsuites = cap2-form\nbudget.det = 200")?;
    let s = all_pass(&r, SuiteName::Cap2Form)?;
    for res in &s.results {
        check(res.result.detail.contains("det = Pf² ×200"), || format!("{}: {}", res.label, res.result.detail))?;
    }
    Ok(format!("200 Symd(s) elements on each of {} fields", s.results.len()))
}

fn doubling_identities() -> Outcome {
    let r = run("fields = GF(2), GF(3), GF(5)\ntypes = orthogonal, unitary, unitary-inner\ndegrees = 2, 4\nsuites = lem-PC\nbudget.pc = 500")?;
    let s = all_pass(&r, SuiteName::LemPc)?;
    let split = s.results.iter().filter(|r| r.result.detail.contains("Prd doubling ×500")).count();
    let field = s
        .results
        .iter()
        .filter(|r| r.result.detail.contains("χ doubling over a quadratic field ×500"))
        .count();
    check(split == s.results.len(), || format!("split-K doubling ran on {split} of {} instances", s.results.len()))?;
    check(field >= 12, || format!("quadratic-field doubling ran on only {field} instances"))?;
    Ok(format!("500 cases on {split} instances with split K, {field} with a quadratic field"))
}

fn corner_type_exception() -> Outcome {
    let mut seen = Vec::new();
    for (q, want) in [(2, InvolutionType::Symplectic), (3, InvolutionType::Orthogonal)] {
        let f = gf(q);
        let (a, e) = twisted_m4(&f);
        check(a.involution_type() == InvolutionType::Orthogonal, || format!("GF({q}): σ is {:?}", a.involution_type()))?;
        let c = a.corner(&e).map_err(|x| x.to_string())?;
        check(c.involution_type() == want, || format!("GF({q}): corner is {:?}", c.involution_type()))?;
        seen.push(format!("GF({q}) corner {want:?}"));
    }
    Ok(seen.join(", "))
}

fn capacity_theorem() -> Outcome {
    let r = run("fields = GF(2)\ntypes = orthogonal\ndegrees = 2\nsuites = capmaxdim")?;
    let detail = &all_pass(&r, SuiteName::CapMaxDim)?.results[0].result.detail;
    check(detail.contains("exhaustive over 8 elements: max 2"), || detail.clone())?;
    let mut total = 0;
    for (types, degrees) in [
        ("orthogonal, unitary, unitary-inner", "2, 3, 4, 5, 6, 7, 8"),
        ("symplectic", "2, 4, 6, 8"),
    ] {
        let text = format!("fields = GF(2), GF(3), GF(4), GF(5)\ntypes = {types}\ndegrees = {degrees}\nsuites = capmaxdim");
        total += all_pass(&run(&text)?, SuiteName::CapMaxDim)?.instances_run;
    }
    Ok(format!("(M₂(GF(2)), t) exhaustive max 2 = κ; max_etale neat of degree κ on {total} instances"))
}

fn non_neat_fixtures() -> Outcome {
    let f = gf(2);
    let (a, e) = twisted_m4(&f);
    let e1 = Matrix::unit(&f, 4, 0, 0);
    let e2 = Matrix::unit(&f, 4, 1, 1);
    let l = Subalgebra::new(&a, vec![e1.clone(), e2.clone(), e.clone()]).map_err(|x| x.to_string())?;
    let v = is_neat(&a, &l);
    check(
        v.failed_condition
            == Some(NeatFailure::NotFree {
                degree: 3,
                centralizer_dim: 6,
                algebra_dim: 16,
            }),
        || format!("L: {v:?}"),
    )?;
    check(idempotents_keep_type(&a, &l) == Ok(false), || "L: corner eAe keeps the type".into())?;
    let lp = Subalgebra::new(&a, vec![e1.clone(), e2.add(&f, &e)]).map_err(|x| x.to_string())?;
    let vp = is_neat(&a, &lp);
    check(matches!(vp.failed_condition, Some(NeatFailure::NotFree { .. })), || format!("L′: {vp:?}"))?;
    let d1 = a.corner(&e1).map_err(|x| x.to_string())?.degree();
    let d2 = a.corner(&e2.add(&f, &e)).map_err(|x| x.to_string())?.degree();
    check((d1, d2) == (1, 3), || format!("L′ corner degrees {d1}, {d2}"))?;

    let f3 = gf(3);
    let sw = build_algebra(&f3, &ModelSpec::Switch { d: 4 }).map_err(|x| x.to_string())?;
    let lift = |x: &Matrix<u64>| Matrix::block_diag(&f3, &[x, &x.transpose()]);
    let mut basis = vec![lift(&Matrix::identity(&f3, 4))];
    for (i, j) in [(0, 2), (0, 3), (1, 2), (1, 3)] {
        basis.push(lift(&Matrix::unit(&f3, 4, i, j)));
    }
    let five = Subalgebra::new(&sw, basis).map_err(|x| x.to_string())?;
    check(five.dim() == 5 && five.in_symm(), || "fixture is not 5-dimensional in Symm".into())?;
    check(is_etale(&five) == Ok(false), || "5-dimensional fixture accepted as étale".into())?;
    Ok(format!("L not free (3 ∤ 16, symplectic corner); L′ corners of degree {d1} and {d2}; 5-dimensional fixture not étale"))
}

fn neat_quadratic_extension() -> Outcome {
    let mut run_count = 0;
    let mut not_found = 0;
    for (types, degrees) in [("orthogonal, unitary, unitary-inner", "2, 4"), ("symplectic", "4, 8")] {
        let text = format!("fields = GF(2), GF(3), GF(4), GF(5)\ntypes = {types}\ndegrees = {degrees}\nsuites = neatquad");
        let r = run(&text)?;
        let s = suite(&r, SuiteName::NeatQuad)?;
        if let Some(f) = s.failures.first() {
            return Err(format!("#{} {}: {}", f.index, s.results[f.index].label, f.detail));
        }
        check(s.passes + s.not_found == s.instances_run, || format!("{} skipped", s.skipped))?;
        run_count += s.instances_run;
        not_found += s.not_found;
    }
    Ok(format!("{run_count} instances, KL neat of degree κ; {not_found} without a constructible K"))
}

fn biquadratic_certificates() -> Outcome {
    let mut n = 0;
    for (types, degree) in [("orthogonal, unitary, unitary-inner", 4), ("symplectic", 8)] {
        let text = format!("fields = GF(2), GF(3), GF(4), GF(5)\ntypes = {types}\ndegrees = {degree}\nsuites = biquadratic");
        let r = run(&text)?;
        let s = all_pass(&r, SuiteName::Biquadratic)?;
        for res in &s.results {
            let kind = res.result.certificate.as_ref().map(|c| c["kind"].clone());
            check(kind == Some("biquadratic".into()), || format!("{}: no biquadratic certificate", res.label))?;
        }
        n += s.results.len();
    }
    Ok(format!("{n} certificates produced and re-verified"))
}

fn albert_rowen() -> Outcome {
    let r = run("fields = GF(2), GF(3), GF(4), GF(5)\ntypes = symplectic\ndegrees = 8\nsuites = albert-rowen")?;
    let s = all_pass(&r, SuiteName::AlbertRowen)?;
    for res in &s.results {
        let c = res.result.certificate.as_ref().ok_or_else(|| format!("{}: no certificate", res.label))?;
        check(c["kind"] == "triquadratic", || format!("{}: {}", res.label, c["kind"]))?;
        check(res.result.detail.contains("dimension 8"), || format!("{}: {}", res.label, res.result.detail))?;
    }
    Ok(format!("triquadratic certificates of dimension 8 for q = 2, 3, 4, 5 ({})", s.results.len()))
}

fn springer_descent() -> Outcome {
    let r = run("fields = GF(5), GF(3)\nsuites = springer\nbudget.springer = 100")?;
    let s = all_pass(&r, SuiteName::Springer)?;
    check(s.instances_run == 200, || format!("{} instances", s.instances_run))?;
    Ok("200 of 200 planted cubics descended to a nontrivial F-zero".into())
}

fn scalar_extension() -> Outcome {
    let r = run("fields = GF(2), GF(3)\ntypes = orthogonal, unitary, unitary-inner\ndegrees = 2, 3, 4\nsuites = neat-ext")?;
    let s = all_pass(&r, SuiteName::NeatExt)?;
    let (mut pairs, mut neat) = (0, 0);
    for res in &s.results {
        check(res.result.status == Status::Pass, || res.result.detail.clone())?;
        let words: Vec<&str> = res.result.detail.split_whitespace().collect();
        pairs += words[0].parse::<usize>().map_err(|e| e.to_string())?;
        neat += words[3].parse::<usize>().map_err(|e| e.to_string())?;
    }
    check(pairs >= 50, || format!("only {pairs} pairs"))?;
    check(neat > 0 && neat < pairs, || format!("{neat} of {pairs} neat: both verdicts not exercised"))?;
    Ok(format!("{pairs} pairs agree ({neat} neat, {} not neat)", pairs - neat))
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("dimension table of capacity 2", dimension_table),
        ("determinant identity", determinant_identity),
        ("doubling identities", doubling_identities),
        ("corner-type exception", corner_type_exception),
        ("capacity theorem", capacity_theorem),
        ("non-neat fixtures", non_neat_fixtures),
        ("neat quadratic extension", neat_quadratic_extension),
        ("capacity-4 biquadratic", biquadratic_certificates),
        ("split Albert-Rowen", albert_rowen),
        ("Springer descent", springer_descent),
        ("scalar-extension stability", scalar_extension),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = std::time::Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match &outcome {
            Ok(d) => println!("criterion {:>2} PASS  {name}: {d} ({secs:.1}s)", i + 1),
            Err(d) => {
                println!("criterion {:>2} FAIL  {name}: {d} ({secs:.1}s)", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
