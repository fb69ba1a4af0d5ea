//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Run with `cargo test -p binconic --test acceptance`.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use binconic::binquad::BinaryQuadraticForm;
use binconic::gf2n::ArtinSchreierSolver;
use binconic::pencil::{
    admissible_pairs, verify_note, AlphaBetaPencil, PencilParameter, VerificationReport,
    VerifyOptions,
};
use binconic::pg2::VerdictKind;
use binconic::FieldSpec;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn gf(n: u32) -> FieldSpec {
    FieldSpec::with_degree(n).expect("default modulus")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, budget: Duration) -> Result<(), String> {
    ensure(elapsed <= budget, || {
        format!(
            "took {:.1}s, budget {:.0}s",
            elapsed.as_secs_f64(),
            budget.as_secs_f64()
        )
    })
}

/// Every admissible ordered pair for n in 2..=12 has D(1/γ²) = 0.
fn main_theorem() -> Outcome {
    let start = Instant::now();
    let mut total = 0;
    for n in 2..=12 {
        let opts = VerifyOptions {
            geometry: false,
            ..VerifyOptions::default()
        };
        let r = verify_note(&gf(n), &opts);
        let m = 1u64 << (n - 1);
        ensure(r.ordered_pairs == m * (m - 1), || {
            format!("n = {n}: {} pairs", r.ordered_pairs)
        })?;
        ensure(r.trace_zero == r.ordered_pairs, || {
            format!("n = {n}: first failure {:?}", r.first_counterexample)
        })?;
        total += r.ordered_pairs;
    }
    within(start.elapsed(), Duration::from_secs(60))?;
    Ok(format!("{total} ordered pairs, all D(1/gamma^2) = 0"))
}

fn geometry_reports() -> Vec<VerificationReport> {
    (2..=8)
        .map(|n| verify_note(&gf(n), &VerifyOptions::default()))
        .collect()
}

/// C₃ is a real line pair with 2q + 1 points; no C₃ is imaginary.
fn geometric_refutation(reports: &[VerificationReport], elapsed: Duration) -> Outcome {
    let mut total = 0;
    for r in reports {
        let n = r.field.degree();
        ensure(
            r.histogram_count(VerdictKind::RealLinePair) == r.ordered_pairs,
            || format!("n = {n}: histogram {:?}", r.histogram),
        )?;
        ensure(r.falsifier_count == 0, || {
            format!("n = {n}: {} falsifiers", r.falsifier_count)
        })?;
        ensure(r.passed(), || {
            format!("n = {n}: {:?}", r.first_counterexample)
        })?;
        total += r.ordered_pairs;
    }
    within(elapsed, Duration::from_secs(120))?;
    Ok(format!(
        "{total} pairs, all C3 RealLinePair (2q+1 points), falsifiers 0"
    ))
}

/// C₁ and C₂ are one-point imaginary line pairs over the same sweep.
fn hypothesis_consistency(reports: &[VerificationReport]) -> Outcome {
    for r in reports {
        ensure(r.hypothesis_violations == 0, || {
            format!(
                "n = {}: {} violations",
                r.field.degree(),
                r.hypothesis_violations
            )
        })?;
    }
    // Direct re-check, independent of the report plumbing.
    let mut checked = 0;
    for n in 2..=8 {
        let f = gf(n);
        for a in binconic::pencil::admissible_parameters(&f) {
            for c in [binconic::pencil::c1(a), binconic::pencil::c2(a)] {
                let rec = binconic::pg2::classify(&c);
                ensure(
                    rec.kind() == VerdictKind::ImaginaryLinePair && rec.point_count == 1,
                    || format!("n = {n}, parameter {a}: {:?}", rec),
                )?;
                checked += 1;
            }
        }
    }
    Ok(format!(
        "C1, C2 ImaginaryLinePair with 1 point ({checked} base conics)"
    ))
}

/// Trace criterion agrees with brute-force factoring; 2^(n-1) irreducible.
fn criterion_oracle() -> Outcome {
    for n in 2..=8 {
        let f = gf(n);
        let mut irreducible = 0u64;
        for theta in f.nonzero_elements() {
            let form = BinaryQuadraticForm::new(theta).unwrap();
            let brute = form.brute_force_factor();
            ensure(form.is_irreducible() == brute.is_none(), || {
                format!("n = {n}, theta = {theta}")
            })?;
            ensure(form.factor() == brute, || {
                format!("n = {n}, theta = {theta}: factor mismatch")
            })?;
            irreducible += u64::from(form.is_irreducible());
        }
        ensure(irreducible == 1 << (n - 1), || {
            format!("n = {n}: {irreducible} irreducible")
        })?;
    }
    Ok("n = 2..=8 agree, irreducible count 2^(n-1)".into())
}

/// Frobenius and trace additivity, trace range and balance.
fn trace_laws() -> Outcome {
    for n in 1..=8 {
        let f = gf(n);
        for a in f.elements() {
            for b in f.elements() {
                ensure((a + b).square() == a.square() + b.square(), || {
                    format!("n = {n}: ({a}+{b})^2")
                })?;
                ensure((a + b).trace() == a.trace() + b.trace(), || {
                    format!("n = {n}: D({a}+{b})")
                })?;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x7ace);
    for n in 9..=16 {
        let f = gf(n);
        for _ in 0..100_000 {
            let a = f.element(rng.random_range(0..f.order())).unwrap();
            let b = f.element(rng.random_range(0..f.order())).unwrap();
            ensure((a + b).square() == a.square() + b.square(), || {
                format!("n = {n}: ({a}+{b})^2")
            })?;
            ensure((a + b).trace() == a.trace() + b.trace(), || {
                format!("n = {n}: D({a}+{b})")
            })?;
        }
    }
    for n in 1..=12 {
        let f = gf(n);
        let mut zeros = 0u64;
        for w in f.elements() {
            let t = w.trace();
            ensure(t.bits() <= 1, || format!("n = {n}: D({w}) = {t}"))?;
            zeros += u64::from(t.is_zero());
        }
        ensure(zeros == 1 << (n - 1), || {
            format!("n = {n}: {zeros} trace-zero elements")
        })?;
    }
    Ok("exhaustive n <= 8, 1e5 random pairs n = 9..=16, balance n <= 12".into())
}

/// The coordinate change sends C₃/(α+β)² to x'² + y'² + γx'y'.
fn canonical_transform() -> Outcome {
    let mut checked = 0;
    for n in 2..=8 {
        let f = gf(n);
        for (a, b) in admissible_pairs(&f) {
            let p = AlphaBetaPencil::new(a, b).unwrap();
            let t = p.canonical_transform();
            ensure(!t.determinant().is_zero(), || {
                format!("n = {n}: singular at ({a}, {b})")
            })?;
            let gamma = a * b * (a + b).inv().unwrap();
            let (o, l) = (f.zero(), f.one());
            ensure(
                p.canonical_form().coeffs() == [l, l, o, gamma, o, o],
                || format!("n = {n}, ({a}, {b}): got {}", p.canonical_form()),
            )?;
            checked += 1;
        }
    }
    Ok(format!("{checked} pairs map to (1,1,0,gamma,0,0)"))
}

/// Exactly three degenerate members at (1:0), (0:1), (β²:α²).
fn pencil_structure() -> Outcome {
    let mut checked = 0;
    for n in 2..=6 {
        let f = gf(n);
        for (a, b) in admissible_pairs(&f) {
            let p = AlphaBetaPencil::new(a, b).unwrap();
            let mut got: Vec<PencilParameter> = p
                .pencil()
                .degenerate_members()
                .into_iter()
                .map(|(x, _)| x)
                .collect();
            let mut want = vec![
                PencilParameter::new(f.one(), f.zero()).unwrap(),
                PencilParameter::new(f.zero(), f.one()).unwrap(),
                PencilParameter::new(b.square(), a.square()).unwrap(),
            ];
            got.sort_by_key(|x| (x.lambda().bits(), x.mu().bits()));
            want.sort_by_key(|x| (x.lambda().bits(), x.mu().bits()));
            ensure(got == want, || format!("n = {n}, ({a}, {b}): {got:?}"))?;
            checked += 1;
        }
    }
    Ok(format!(
        "{checked} pencils with exactly 3 degenerate members"
    ))
}

/// t² + t = c solvable iff D(c) = 0; solutions verify; 2^(n-1) solvable.
fn artin_schreier() -> Outcome {
    for n in 1..=10 {
        let f = gf(n);
        let solver = ArtinSchreierSolver::new(f);
        let mut solvable = 0u64;
        for c in f.elements() {
            match solver.solve(&c) {
                Some(t) => {
                    ensure(t.square() + t == c, || {
                        format!("n = {n}: bad root {t} for {c}")
                    })?;
                    ensure(c.trace().is_zero(), || {
                        format!("n = {n}: solved trace-1 {c}")
                    })?;
                    solvable += 1;
                }
                None => ensure(c.trace().is_one(), || format!("n = {n}: missed {c}"))?,
            }
        }
        ensure(solvable == 1 << (n - 1), || {
            format!("n = {n}: {solvable} solvable")
        })?;
    }
    Ok("n = 1..=10".into())
}

/// Same counts under x³ + x² + 1 as under x³ + x + 1.
fn modulus_independence() -> Outcome {
    let alt = FieldSpec::new(3, Some(0xd)).map_err(|e| e.to_string())?;
    let a = verify_note(&gf(3), &VerifyOptions::default());
    let b = verify_note(&alt, &VerifyOptions::default());
    ensure(a.ordered_pairs == b.ordered_pairs, || {
        "pair counts differ".into()
    })?;
    ensure(a.unordered_pairs == b.unordered_pairs, || {
        "unordered counts differ".into()
    })?;
    ensure(a.histogram == b.histogram, || {
        format!("{:?} vs {:?}", a.histogram, b.histogram)
    })?;
    ensure(a.falsifier_count == 0 && b.falsifier_count == 0, || {
        "falsifiers present".into()
    })?;
    ensure(a.passed() && b.passed(), || "verification failed".into())?;
    Ok(format!(
        "{} pairs, histogram {:?}",
        b.ordered_pairs, b.histogram
    ))
}

/// Two CSV runs of `verify-note --n 3 --exhaustive` are byte-identical.
fn cli_determinism() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_binconic"))
            .args(["verify-note", "--n", "3", "--exhaustive", "--format", "csv"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    ensure(
        a.status.code() == Some(0) && b.status.code() == Some(0),
        || format!("exit codes {:?} {:?}", a.status.code(), b.status.code()),
    )?;
    ensure(a.stdout == b.stdout, || "outputs differ".into())?;
    ensure(!a.stdout.is_empty(), || "empty output".into())?;
    Ok(format!("{} identical bytes, exit 0", a.stdout.len()))
}

fn main() -> ExitCode {
    let mut failed = 0;
    let mut report = |name: &str, outcome: Outcome| match outcome {
        Ok(detail) => println!("PASS  {name}: {detail}"),
        Err(why) => {
            failed += 1;
            println!("FAIL  {name}: {why}");
        }
    };

    report("main theorem D(1/gamma^2) = 0, n = 2..=12", main_theorem());
    let start = Instant::now();
    let reports = geometry_reports();
    let elapsed = start.elapsed();
    report(
        "geometric refutation, n = 2..=8",
        geometric_refutation(&reports, elapsed),
    );
    report(
        "hypothesis consistency, n = 2..=8",
        hypothesis_consistency(&reports),
    );
    report(
        "criterion/oracle equivalence, n = 2..=8",
        criterion_oracle(),
    );
    report("trace laws", trace_laws());
    report("canonical transform, n = 2..=8", canonical_transform());
    report("pencil structure, n = 2..=6", pencil_structure());
    report("Artin-Schreier solver, n <= 10", artin_schreier());
    report("modulus independence, n = 3", modulus_independence());
    report("CLI determinism", cli_determinism());

    if failed == 0 {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
