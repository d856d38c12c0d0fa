//! One pass/fail line per acceptance criterion. Exits nonzero if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use polyfam_core::bernoulli::{
    li_gf_check, mp_bernoulli, mp_bernoulli_gf_check, mp_bernoulli_poly, mp_bernoulli_poly_oracle,
    Convention,
};
use polyfam_core::cauchy::{
    agrees_with_oracle, lif_gf_check, modified_bell, mp_first_bell, mp_first_closed, mp_first_def,
    mp_first_noncentral, mp_first_via_polycauchy, mp_poly_first, mp_poly_first_oracle,
    mp_poly_second, mp_poly_second_oracle, mp_second_closed, mp_second_def, mp_second_lah,
    FamilyPoint, HarmonicVector,
};
use polyfam_core::harness::{
    grid_points, nonnegative_alpha, round_trip, sweep_with_threads, verify, GridSpec, IdentityId,
    ParamPoint, RoundTrip, Verdict,
};
use polyfam_core::scalar::{int, rational, sign, Rational};
use polyfam_core::stirling::{inversion_check, AlphaSeq, Lengths};
use serde_json::Value;

const SEED: u64 = 2024;

fn grid(n_max: usize, k_max: usize, points: usize) -> GridSpec {
    GridSpec {
        n_max,
        k_max,
        points,
        ..GridSpec::default()
    }
}

fn family(point: &ParamPoint) -> FamilyPoint<Rational> {
    point
        .family_point()
        .expect("grid points satisfy preconditions")
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let elapsed = start.elapsed();
    if elapsed < limit {
        Ok(())
    } else {
        Err(format!("took {elapsed:?}, limit {limit:?}"))
    }
}

fn ensure(condition: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if condition {
        Ok(())
    } else {
        Err(message())
    }
}

fn criterion_1() -> Result<(), String> {
    let start = Instant::now();
    let points = grid_points(IdentityId::T2_1, &grid(8, 3, 25), SEED);
    for point in &points {
        let p = family(point);
        let def = mp_first_def(&p);
        let paths = [
            mp_first_closed(&p).map_err(|e| e.to_string())?,
            mp_first_noncentral(&p).map_err(|e| e.to_string())?,
            mp_first_via_polycauchy(&p).map_err(|e| e.to_string())?,
        ];
        ensure(paths.iter().all(|v| *v == def), || {
            format!("paths disagree at {point:?}")
        })?;
    }
    within(start, Duration::from_secs(10))
}

fn criterion_2() -> Result<(), String> {
    let start = Instant::now();
    let points = grid_points(IdentityId::T3_1, &grid(8, 3, 25), SEED);
    let mut nonnegative = 0;
    for point in &points {
        let p = family(point);
        let def = mp_second_def(&p);
        ensure(mp_second_lah(&p).map_err(|e| e.to_string())? == def, || {
            format!("Lah path at {point:?}")
        })?;
        if nonnegative_alpha(point) {
            nonnegative += 1;
            ensure(
                mp_second_closed(&p).map_err(|e| e.to_string())? == def,
                || format!("closed form at {point:?}"),
            )?;
        }
    }
    ensure(nonnegative > 0, || "empty nonnegative subgrid".into())?;
    within(start, Duration::from_secs(10))
}

fn criterion_3() -> Result<(), String> {
    let points = grid_points(IdentityId::T2_4, &grid(6, 3, 25), SEED);
    let mut evaluated = 0;
    for point in points {
        // the classical points contain α_0 = 0
        if point.alpha.require_nonzero(point.n).is_err() {
            continue;
        }
        evaluated += 1;
        let p = family(&point);
        ensure(
            mp_first_bell(&p).map_err(|e| e.to_string())? == mp_first_def(&p),
            || format!("Bell route at {point:?}"),
        )?;
        let h = HarmonicVector::new(&point.alpha, point.n, 10)
            .map_err(|e| e.to_string())?
            .negated();
        for m in point.n + 1..=10 {
            ensure(
                modified_bell(m, &h).map_err(|e| e.to_string())? == int(0),
                || format!("P_{m} nonzero at {point:?}"),
            )?;
        }
    }
    ensure(evaluated > 0, || "no nonzero points".into())
}

fn criterion_4() -> Result<(), String> {
    let expected = [
        rational(1, 1),
        rational(1, 2),
        rational(-1, 6),
        rational(1, 4),
        rational(-19, 30),
    ];
    for (n, value) in expected.iter().enumerate() {
        let p = FamilyPoint::<Rational>::classical(n, 1).map_err(|e| e.to_string())?;
        ensure(mp_first_def(&p) == *value, || format!("C_{n}"))?;
    }
    let p = FamilyPoint::<Rational>::classical(2, 1).map_err(|e| e.to_string())?;
    ensure(mp_second_def(&p) == rational(5, 6), || "hat C_2".into())?;
    for (n, value) in [(1, rational(1, 2)), (2, rational(1, 6))] {
        let p = FamilyPoint::<Rational>::classical(n, 1).map_err(|e| e.to_string())?;
        ensure(
            mp_bernoulli(&p, Convention::Corrected).map_err(|e| e.to_string())? == value,
            || format!("B_{n}"),
        )?;
    }
    Ok(())
}

fn criterion_5() -> Result<(), String> {
    let start = Instant::now();
    for k in 1..=3 {
        ensure(
            lif_gf_check::<Rational>(k, 8).map_err(|e| e.to_string())?,
            || format!("Lif, k = {k}"),
        )?;
        ensure(li_gf_check::<Rational>(k, 8), || format!("Li, k = {k}"))?;
    }
    let alpha = AlphaSeq::new((1..=7).map(int).collect());
    for k in 1..=2 {
        let lengths = Lengths::unit(k).map_err(|e| e.to_string())?;
        let gf = mp_bernoulli_gf_check(&alpha, &lengths, 6).map_err(|e| e.to_string())?;
        ensure(gf.holds(), || format!("multiparameter GF, k = {k}"))?;
    }
    within(start, Duration::from_secs(5))
}

fn criterion_6() -> Result<(), String> {
    let mut series = grid(0, 1, 10);
    series.order = 10;
    let alphas: Vec<_> = grid_points(IdentityId::T4_1, &series, SEED)
        .into_iter()
        .filter(|p| p.alpha.as_slice().iter().any(|a| a.denom() != &1.into()))
        .collect();
    ensure(alphas.len() >= 10, || "too few random α".into())?;
    for point in &alphas {
        for n in 0..=10 {
            let report = inversion_check(&point.alpha, n).map_err(|e| e.to_string())?;
            ensure(report.unsigned, || {
                format!("orthogonality at N = {n}, {:?}", point.alpha)
            })?;
        }
    }
    let standard = grid(6, 2, 5);
    for id in [IdentityId::T4_2a, IdentityId::T5_2a] {
        for point in grid_points(id, &standard, SEED) {
            for pair in RoundTrip::ALL {
                ensure(round_trip(pair, &point).map_err(|e| e.to_string())?, || {
                    format!("{pair:?} at {point:?}")
                })?;
            }
        }
    }
    Ok(())
}

fn criterion_7() -> Result<(), String> {
    for point in grid_points(IdentityId::T5_1a, &grid(6, 2, 10), SEED) {
        let p = family(&point);
        let n = point.n;
        let first = mp_poly_first(&p).map_err(|e| e.to_string())?;
        let second = mp_poly_second(&p).map_err(|e| e.to_string())?;
        let bernoulli = mp_bernoulli_poly(&p, Convention::Corrected).map_err(|e| e.to_string())?;
        let checks = [
            agrees_with_oracle(&first, n, |z| mp_poly_first_oracle(&p, z)),
            agrees_with_oracle(&second, n, |z| mp_poly_second_oracle(&p, z)),
            agrees_with_oracle(&bernoulli, n, |z| mp_bernoulli_poly_oracle(&p, z)),
        ];
        for check in checks {
            ensure(check.map_err(|e| e.to_string())?, || {
                format!("oracle mismatch at {point:?}")
            })?;
        }
        let volume = p.volume();
        ensure(
            first.degree() == Some(n) && second.degree() == Some(n),
            || format!("degree at {point:?}"),
        )?;
        ensure(
            first.leading_coeff() == Some(&(sign::<Rational>(n) * volume.clone())),
            || format!("first leading at {point:?}"),
        )?;
        ensure(second.leading_coeff() == Some(&volume), || {
            format!("second leading at {point:?}")
        })?;
        for id in [IdentityId::T5_1a, IdentityId::T5_1b] {
            ensure(verify(id, &point).corrected == Verdict::Pass, || {
                format!("{id} at {point:?}")
            })?;
        }
    }
    Ok(())
}

fn criterion_8() -> Result<(), String> {
    use IdentityId::*;
    let ids = [
        Cases2, Cases3, C2_1, C2_2, C3_1, C3_2, C4_1a, C4_1b, C4_2a, C4_2b, C5_1a, C5_1b,
    ];
    let result = sweep_with_threads(&ids, &grid(6, 2, 10), SEED, None);
    for r in &result.reports {
        ensure(r.corrected == Verdict::Pass, || {
            format!("{} {:?} at {:?}", r.identity, r.corrected, r.point)
        })?;
    }
    // each specialization report lists the five cases of one kind
    let cases: Vec<_> = result
        .reports
        .iter()
        .filter(|r| matches!(r.identity, Cases2 | Cases3))
        .collect();
    ensure(!cases.is_empty(), || "no specialization points".into())?;
    ensure(cases.iter().all(|r| r.lhs.split(", ").count() == 5), || {
        "expected five cases per report".into()
    })
}

fn run_cli(args: &[&str], threads: &str) -> Result<(i32, String), String> {
    let output = Command::new(env!("CARGO_BIN_EXE_polyfam"))
        .args(args)
        .env("POLYFAM_THREADS", threads)
        .output()
        .map_err(|e| e.to_string())?;
    let stdout = String::from_utf8(output.stdout).map_err(|e| e.to_string())?;
    Ok((output.status.code().unwrap_or(-1), stdout))
}

const SWEEP: [&str; 11] = [
    "verify", "--ids", "all", "--n-max", "5", "--k-max", "2", "--points", "10", "--seed", "7",
];

fn json_lines(text: &str) -> Result<Vec<Value>, String> {
    text.lines()
        .map(|l| serde_json::from_str(l).map_err(|e| e.to_string()))
        .collect()
}

fn criterion_9() -> Result<(), String> {
    let (code, reports) = run_cli(&SWEEP, "0")?;
    ensure(code == 0, || format!("verify exited {code}"))?;
    let mut args = SWEEP.to_vec();
    args.push("--errata");
    let (code, ledger) = run_cli(&args, "0")?;
    ensure(code == 0, || format!("verify --errata exited {code}"))?;
    let (_, again) = run_cli(&args, "0")?;
    ensure(ledger == again, || "ledger differs between runs".into())?;

    let reports = json_lines(&reports)?;
    let ledger = json_lines(&ledger)?;
    let mut failing: Vec<String> = reports
        .iter()
        .filter(|r| r["verbatim"] == "FAIL")
        .map(|r| r["identity"].as_str().unwrap_or_default().to_string())
        .collect();
    failing.dedup();
    let listed: Vec<String> = ledger
        .iter()
        .map(|e| e["identity"].as_str().unwrap_or_default().to_string())
        .collect();
    ensure(failing == listed, || {
        format!("ledger ids {listed:?}, failing ids {failing:?}")
    })?;
    ensure(!listed.is_empty(), || {
        "no printed-form failures found".into()
    })?;
    for entry in &ledger {
        ensure(entry["counterexample"].is_object(), || {
            "entry without counterexample".into()
        })?;
        let id = &entry["identity"];
        let counterexample_fails = reports.iter().any(|r| {
            &r["identity"] == id && r["point"] == entry["counterexample"] && r["verbatim"] == "FAIL"
        });
        ensure(counterexample_fails, || {
            format!("counterexample for {id} is not a failing point")
        })?;
    }
    Ok(())
}

fn criterion_10() -> Result<(), String> {
    let (code_a, one) = run_cli(&SWEEP, "1")?;
    let (code_b, eight) = run_cli(&SWEEP, "8")?;
    let (_, one_again) = run_cli(&SWEEP, "1")?;
    ensure(code_a == 0 && code_b == 0, || "nonzero exit".into())?;
    ensure(one == one_again, || "repeat run differs".into())?;
    ensure(one == eight, || "output depends on thread count".into())
}

type Check = fn() -> Result<(), String>;

fn main() {
    let criteria: [(&str, Check); 10] = [
        ("first-kind oracle equivalence", criterion_1),
        ("second-kind oracle equivalence", criterion_2),
        ("Bell polynomial formula", criterion_3),
        ("classical anchors", criterion_4),
        ("generating functions", criterion_5),
        ("orthogonality and inversion round trips", criterion_6),
        ("polynomial families", criterion_7),
        ("specializations and k = 1 corollaries", criterion_8),
        ("errata ledger", criterion_9),
        ("determinism across thread counts", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("[PASS] criterion {}: {name} ({elapsed:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("[FAIL] criterion {}: {name} ({elapsed:.2}s): {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
