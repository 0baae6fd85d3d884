//! Acceptance run: one line per criterion, non-zero exit if any fails.

use std::process::ExitCode;

use adesing::braid::{
    hurwitz_move, hurwitz_move_inverse, picard_lefschetz, verify_deligne_transitivity,
    verify_monodromy_trace, verify_trace_criterion, CycleLattice, Factorization, TraceMode,
};
use adesing::grobner::{class_in_local_algebra, milnor_number};
use adesing::linalg::IntMatrix;
use adesing::poly::{parse_polynomial, Polynomial};
use adesing::singularity::{
    classify_ade, modality_quasihomogeneous, mu_const_linear_check, newton_diagram_2d,
    newton_number_2d, parse_corpus, spectrum_length, spectrum_quasihomogeneous, suspend_spectrum,
    three_variable_spectrum, Germ, SingularityError,
};
use adesing::weyl::{
    coxeter_element, definiteness, enumerate_group, exponents_and_coxeter_number, reflection,
    simple_reflection, weyl_group_order, Definiteness, GroupElement, RootSystem, RootSystemType,
};
use adesing::Rational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CORPUS: &str = include_str!("../../../corpus/normal_forms.txt");

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn rat(s: &str) -> Rational {
    s.parse().unwrap()
}

/// Expected type of a corpus germ from its name, e.g. "D7".
fn expected_type(name: &str) -> RootSystemType {
    name.parse().unwrap()
}

fn corpus_germs() -> Vec<(String, Germ)> {
    let (entries, errors) = parse_corpus(CORPUS);
    assert!(errors.is_empty());
    entries
        .into_iter()
        .map(|e| {
            let g = Germ::with_names(e.poly, e.vars).unwrap();
            (e.name, g)
        })
        .collect()
}

fn normal_forms() -> Vec<(String, RootSystemType)> {
    let mut v = Vec::new();
    for k in 1..=12 {
        v.push((format!("x^{} + y^2", k + 1), RootSystemType::a(k)));
    }
    for k in 4..=12 {
        v.push((format!("x^2*y + y^{}", k - 1), RootSystemType::d(k)));
    }
    v.push(("x^3 + y^4".into(), RootSystemType::e(6)));
    v.push(("x^3 + x*y^3".into(), RootSystemType::e(7)));
    v.push(("x^3 + y^5".into(), RootSystemType::e(8)));
    v
}

fn criterion_1() -> Outcome {
    let forms = normal_forms();
    for (f, t) in &forms {
        let c = classify_ade(&Germ::parse(f).unwrap()).map_err(|e| format!("{f}: {e}"))?;
        ensure(c.rstype == *t, || {
            format!("{f}: got {}, expected {t}", c.rstype)
        })?;
    }
    Ok(format!("{} normal forms classified", forms.len()))
}

/// `tr(c^k) = Σ cos(2π k m / h)`: eigenvalue angles from the exponents,
/// checked against integer traces of matrix powers.
fn exponents_match_coxeter_traces(rs: &RootSystem, exponents: &[u64], h: u64) -> bool {
    let c = coxeter_element(rs);
    (1..=h).all(|k| {
        let expected: f64 = exponents
            .iter()
            .map(|&m| (2.0 * std::f64::consts::PI * (k * m) as f64 / h as f64).cos())
            .sum();
        (c.pow(k).trace() as f64 - expected).abs() < 1e-9
    })
}

fn criterion_2() -> Outcome {
    let germs = corpus_germs();
    for (name, g) in &germs {
        let s3 = three_variable_spectrum(&spectrum_quasihomogeneous(g).map_err(|e| e.to_string())?);
        let t = expected_type(name);
        let rs = RootSystem::build(t);
        let data = exponents_and_coxeter_number(&rs);
        let lcm = s3
            .values()
            .iter()
            .fold(num_bigint::BigInt::from(1), |acc, v| {
                num_integer::Integer::lcm(&acc, v.denom())
            });
        ensure(lcm == data.coxeter_number.into(), || {
            format!("{name}: lcm {lcm} vs h {}", data.coxeter_number)
        })?;
        let h = Rational::from_integer(data.coxeter_number.into());
        let mut scaled: Vec<Rational> = s3.values().iter().map(|v| v * &h).collect();
        scaled.sort();
        let expected: Vec<Rational> = data
            .exponents
            .iter()
            .map(|&m| Rational::from_integer(m.into()))
            .collect();
        ensure(scaled == expected, || {
            format!(
                "{name}: h*spectrum {scaled:?} vs exponents {:?}",
                data.exponents
            )
        })?;
        ensure(
            exponents_match_coxeter_traces(&rs, &data.exponents, data.coxeter_number),
            || format!("{name}: exponents disagree with traces of Coxeter powers"),
        )?;
    }
    Ok(format!(
        "{} germs: h*spectrum = exponents, lcm = h",
        germs.len()
    ))
}

fn criterion_3() -> Outcome {
    for (name, g) in corpus_germs() {
        let expected = expected_type(&name).rank();
        let staircase = milnor_number(g.poly()).map_err(|e| e.to_string())?;
        let w = g.weights().ok_or(format!("{name}: no weights"))?;
        let product: Rational = w
            .values()
            .iter()
            .map(|nu| nu.recip() - Rational::from_integer(1.into()))
            .product();
        ensure(staircase == expected, || {
            format!("{name}: staircase {staircase}")
        })?;
        ensure(product == Rational::from_integer(expected.into()), || {
            format!("{name}: weights give {product}")
        })?;
    }
    Ok("staircase and weight formula agree on all corpus germs".into())
}

fn criterion_4() -> Outcome {
    let one = Rational::from_integer(1.into());
    for (name, g) in corpus_germs() {
        let len = spectrum_length(&spectrum_quasihomogeneous(&g).unwrap()).unwrap();
        ensure(len < one, || format!("{name}: length {len}"))?;
    }
    for f in ["x^3 + y^6", "x^4 + y^4"] {
        let g = Germ::parse(f).unwrap();
        let len = spectrum_length(&spectrum_quasihomogeneous(&g).unwrap()).unwrap();
        ensure(len == one, || format!("{f}: length {len}"))?;
        ensure(
            matches!(classify_ade(&g), Err(SingularityError::NotSimple { .. })),
            || format!("{f}: classifier accepted"),
        )?;
        let m = modality_quasihomogeneous(&g).unwrap();
        ensure(m == 1, || format!("{f}: modality {m}"))?;
    }
    Ok("length < 1 on corpus; x^3+y^6 and x^4+y^4 have length 1, modality 1, rejected".into())
}

fn criterion_5() -> Outcome {
    for t in RootSystemType::all_up_to_rank(8) {
        let d = definiteness(&t.cartan_matrix().neg().to_rational()).unwrap();
        ensure(d == Definiteness::NegativeDefinite, || format!("{t}: {d}"))?;
    }
    let expected = [
        ("A1", 2),
        ("A2", 6),
        ("A3", 24),
        ("A4", 120),
        ("A5", 720),
        ("D4", 192),
        ("D5", 1920),
    ];
    for (name, order) in expected {
        let rs = RootSystem::build(name.parse().unwrap());
        let n = enumerate_group(&rs, 10_000)
            .map_err(|e| e.to_string())?
            .len();
        ensure(n == order && weyl_group_order(&rs) == order as u64, || {
            format!("{name}: {n}")
        })?;
    }
    let affine = RootSystemType::e(8)
        .affine_cartan_matrix()
        .neg()
        .to_rational();
    let d = definiteness(&affine).unwrap();
    ensure(d == Definiteness::Semidefinite, || {
        format!("affine E8: {d}")
    })?;
    Ok(
        "-Cartan negative definite to rank 8; |W| 2 6 24 120 720 192 1920; affine E8 semidefinite"
            .into(),
    )
}

fn criterion_6() -> Outcome {
    let types = RootSystemType::all_up_to_rank(8);
    for t in &types {
        let r = verify_monodromy_trace(&RootSystem::build(*t));
        ensure(r.pass, || r.render_text())?;
    }
    Ok(format!(
        "{} types: trace -1, product = Coxeter element",
        types.len()
    ))
}

fn criterion_7() -> Outcome {
    let mut sizes = Vec::new();
    for (name, n) in [("A2", 3), ("A3", 16), ("D4", 162)] {
        let r = verify_deligne_transitivity(&RootSystem::build(name.parse().unwrap()), 100_000)
            .map_err(|e| e.to_string())?;
        ensure(
            r.pass && r.counts["orbit"] == n && r.counts["factorizations"] == n,
            || r.render_text(),
        )?;
        sizes.push(format!("{name} {n}"));
    }
    Ok(format!("orbit = factorization set: {}", sizes.join(", ")))
}

fn criterion_8() -> Outcome {
    let mut parts = Vec::new();
    for name in ["A2", "A3"] {
        let r = verify_trace_criterion(
            &RootSystem::build(name.parse().unwrap()),
            TraceMode::Exhaustive,
            1_000_000,
        )
        .map_err(|e| e.to_string())?;
        ensure(r.pass, || r.render_text())?;
        parts.push(format!("{name} {} tuples in S", r.counts["in-s"]));
    }
    let mode = TraceMode::Sample {
        count: 10_000,
        seed: 1,
    };
    let r = verify_trace_criterion(&RootSystem::build(RootSystemType::d(4)), mode, 1_000_000)
        .map_err(|e| e.to_string())?;
    ensure(r.pass && r.counts["in-s"] >= 10_000, || r.render_text())?;
    parts.push(format!(
        "D4 {} sampled ({} Coxeter)",
        r.counts["in-s"], r.counts["coxeter"]
    ));
    Ok(format!("0 mismatches: {}", parts.join(", ")))
}

fn criterion_9() -> Outcome {
    let samples = vec![rat("1"), rat("-1"), rat("1/2")];
    for (name, g) in corpus_germs() {
        let r = mu_const_linear_check(&g, &samples);
        ensure(r.vacuous && r.pass(), || {
            format!("{name}: [f] = {}", r.class)
        })?;
    }
    let f = parse_polynomial("x^5 + x^2*y^2 + y^5", &["x", "y"]).unwrap();
    let d = newton_diagram_2d(&f).unwrap();
    let oracle = newton_number_2d(&d).unwrap();
    ensure(oracle == 11, || format!("Newton number {oracle}"))?;
    let class = class_in_local_algebra(&f).map_err(|e| e.to_string())?;
    ensure(!class.is_zero(), || "[f] = 0".into())?;
    for t in &samples {
        let ft: Polynomial = f.add(&class.scale(t));
        ensure(newton_diagram_2d(&ft).unwrap() == d, || {
            format!("t={t}: diagram changed")
        })?;
        let mu = milnor_number(&ft).map_err(|e| e.to_string())?;
        ensure(mu as i64 == oracle, || format!("t={t}: dimension {mu}"))?;
    }
    Ok(format!(
        "[f] = 0 on corpus; x^5+x^2y^2+y^5: [f] = {class}, diagram and dimension 11 kept"
    ))
}

fn random_word(rs: &RootSystem, rng: &mut ChaCha8Rng, len: usize) -> GroupElement {
    (0..len).fold(GroupElement::identity(rs.rank()), |acc, _| {
        acc.compose(&simple_reflection(rs, rng.gen_range(0..rs.rank())))
    })
}

fn criterion_10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    // spectrum symmetry and suspension invariance
    for (name, g) in corpus_germs() {
        let s = spectrum_quasihomogeneous(&g).unwrap();
        ensure(s.is_symmetric(), || {
            format!("{name}: spectrum not symmetric")
        })?;
        let len = spectrum_length(&s).unwrap();
        for k in 1..=3 {
            let sk = suspend_spectrum(&s, k);
            ensure(
                spectrum_length(&sk).unwrap() == len && sk.is_symmetric(),
                || format!("{name}: suspension {k}"),
            )?;
        }
    }
    // Hurwitz product invariance and braid relations
    for name in ["A3", "D4"] {
        let rs = RootSystem::build(name.parse().unwrap());
        let mut f = Factorization::simple(&rs);
        let p = f.product(&rs);
        for _ in 0..1000 {
            let i = rng.gen_range(0..rs.rank() - 1);
            f = if rng.gen_bool(0.5) {
                hurwitz_move(i, &f, &rs).unwrap()
            } else {
                hurwitz_move_inverse(i, &f, &rs).unwrap()
            };
            ensure(f.product(&rs) == p, || format!("{name}: product changed"))?;
            let b = |j, x: &Factorization| hurwitz_move(j, x, &rs).unwrap();
            for j in 0..rs.rank() - 2 {
                ensure(
                    b(j, &b(j + 1, &b(j, &f))) == b(j + 1, &b(j, &b(j + 1, &f))),
                    || format!("{name}: braid relation at {j}"),
                )?;
            }
            if rs.rank() >= 4 {
                ensure(b(0, &b(2, &f)) == b(2, &b(0, &f)), || {
                    format!("{name}: far commutation")
                })?;
            }
        }
    }
    // form preservation and agreement of transvections with reflections
    for t in RootSystemType::all_up_to_rank(8) {
        let rs = RootSystem::build(t);
        for _ in 0..1000 {
            let w = random_word(&rs, &mut rng, 20);
            ensure(w.preserves_form(rs.cartan()), || {
                format!("{t}: form not preserved")
            })?;
        }
        let lattice = CycleLattice::from_root_system(&rs);
        for alpha in rs.roots() {
            let s = reflection(&rs, alpha).unwrap();
            let n = rs.rank();
            let cols: Vec<Vec<i64>> = (0..n)
                .map(|j| picard_lefschetz(&rs.simple_root(j), alpha, &lattice).unwrap())
                .collect();
            ensure(&IntMatrix::from_columns(&cols) == s.matrix(), || {
                format!("{t}: transvection != reflection")
            })?;
        }
    }
    Ok("symmetry, suspension, Hurwitz invariance, braid relations, form preservation, PL = reflection".into())
}

type Criterion = (u32, &'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (1, "normal-form classification", criterion_1),
        (2, "spectrum/exponent bridge", criterion_2),
        (3, "Milnor numbers", criterion_3),
        (4, "simplicity boundary", criterion_4),
        (5, "definiteness and group orders", criterion_5),
        (6, "monodromy trace", criterion_6),
        (7, "Hurwitz transitivity", criterion_7),
        (8, "trace criterion", criterion_8),
        (9, "mu-constant deformation", criterion_9),
        (10, "property suites", criterion_10),
    ];
    let mut failed = 0;
    for (n, title, f) in criteria {
        let start = std::time::Instant::now();
        let result = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {n:>2} PASS  {title}: {detail} ({secs:.1}s)"),
            Err(why) => {
                failed += 1;
                println!("criterion {n:>2} FAIL  {title}: {why} ({secs:.1}s)");
            }
        }
    }
    println!("acceptance: {} of 10 criteria pass", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
