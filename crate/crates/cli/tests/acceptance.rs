//! The ten acceptance criteria, each with its time bound. Prints one line
//! per criterion and exits nonzero if any fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use serde_json::Value;

use klr_workbench::cyclotomic::{self, CyclotomicPresentation, DEFAULT_SCHEDULE};
use klr_workbench::exact_poly::rat;
use klr_workbench::klr::{self, RelationConvention};
use klr_workbench::root_data::{quantum_binomial, root_vectors_up_to, seq, CartanDatum, RootVector, Weight};
use klr_workbench::{nilhecke, quiver_orbits, sl2_models, Result};

type Outcome = Result<Option<String>>;

fn fail(msg: impl Into<String>) -> Outcome {
    Ok(Some(msg.into()))
}

fn subset_commutator() -> Outcome {
    for n in 0..=8 {
        let c = sl2_models::commutator_report(n);
        if !c.passed {
            return fail(format!("n={n}: {:?}", c.witness));
        }
    }
    Ok(None)
}

fn weyl_element() -> Outcome {
    for n in 0..=5usize {
        for k in 0..=n {
            let r = 2 * k as i64 - n as i64;
            if sl2_models::weyl_s(n, r)?.matrix.inverse().is_none() {
                return fail(format!("weyl_s({n}, {r}) is singular"));
            }
        }
        let c = sl2_models::weyl_conjugation_check(n)?;
        if !c.passed {
            return fail(format!("n={n}: {:?}", c.witness));
        }
    }
    Ok(None)
}

fn gaussian_triple() -> Outcome {
    for n in 0..=6i64 {
        for k in 0..=n {
            let g = sl2_models::gaussian_binomial(n, k)?;
            for q in [2u32, 3] {
                let count = sl2_models::grassmannian_count(k as usize, n as usize, q)?;
                if g.evaluate(&rat(q))? != rat(count) {
                    return fail(format!("n={n} k={k} q={q}: polynomial vs count {count}"));
                }
            }
            if g.at_one() != BigInt::from(num_integer_binomial(n, k)) {
                return fail(format!("n={n} k={k}: value at 1"));
            }
            if sl2_models::centered_gaussian_binomial(n, k)? != quantum_binomial(n, k)? {
                return fail(format!("n={n} k={k}: centered form"));
            }
        }
    }
    Ok(None)
}

fn num_integer_binomial(n: i64, k: i64) -> i64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn nil_hecke() -> Outcome {
    for n in 1..=4 {
        let checks = [
            nilhecke::relations_oracle_check(n, 3)?,
            nilhecke::relations_normal_form_check(n),
            nilhecke::idempotent_check(n),
            nilhecke::centrality_check(n),
        ];
        if let Some(c) = checks.iter().find(|c| !c.passed) {
            return fail(format!("{}: {:?}", c.name, c.witness));
        }
        if n <= 3 {
            let c = nilhecke::equality_oracle_check(n, 100, 0)?;
            if !c.passed {
                return fail(format!("{}: {:?}", c.name, c.witness));
            }
        }
    }
    Ok(None)
}

fn klr_soundness() -> Outcome {
    for d in [CartanDatum::type_a(1), CartanDatum::type_a(2), CartanDatum::type_a(3), CartanDatum::type_d(4)] {
        let conv = RelationConvention::default_for(&d);
        for nu in root_vectors_up_to(d.rank(), 4) {
            let c = klr::verify_relations(&conv, &d, &nu)?;
            if !c.passed {
                return fail(format!("{}: {:?}", c.name, c.witness));
            }
        }
    }
    let a2 = CartanDatum::type_a(2);
    let flipped = RelationConvention::flipped_braid(&a2);
    if klr::verify_relations(&flipped, &a2, &RootVector(vec![2, 1]))?.passed {
        return fail("sign-flipped negative control passed");
    }
    for n in 1..=3 {
        let c = klr::a1_specialization_check(n, 50, 0)?;
        if !c.passed {
            return fail(format!("{}: {:?}", c.name, c.witness));
        }
    }
    let conv = RelationConvention::default_for(&a2);
    for nu in root_vectors_up_to(2, 3) {
        let c = klr::oracle_consistency_check(&conv, &a2, &nu, 4, 3)?;
        if !c.passed {
            return fail(format!("{}: {:?}", c.name, c.witness));
        }
    }
    Ok(None)
}

fn graded_dimensions() -> Outcome {
    for (d, h) in [(CartanDatum::type_a(1), 3), (CartanDatum::type_a(2), 3)] {
        let conv = RelationConvention::default_for(&d);
        for nu in root_vectors_up_to(d.rank(), h) {
            let s = seq(&d, &nu);
            for i in &s {
                for j in &s {
                    let c = klr::graded_dim_rank_check(&conv, &d, i, j, 10)?;
                    if !c.passed {
                        return fail(format!("{}: {:?}", c.name, c.witness));
                    }
                }
            }
        }
    }
    Ok(None)
}

fn cyclotomic_vanishing() -> Outcome {
    let a1 = CartanDatum::type_a(1);
    for n in 0..=3 {
        for k in 0..=5 {
            let p = CyclotomicPresentation::with_default_convention(&a1, Weight(vec![n]), RootVector(vec![k]))?;
            if !cyclotomic::vanishing_check(&p, &DEFAULT_SCHEDULE)? {
                return fail(format!("sl2 n={n} k={k}"));
            }
            if cyclotomic::weight_multiplicity(&a1, &p.lambda, &p.nu)? > 0 && i64::from(k) > n {
                return fail(format!("oracle puts a weight at n={n} k={k}"));
            }
        }
    }
    let a2 = CartanDatum::type_a(2);
    for lambda in [vec![1, 0], vec![0, 1], vec![1, 1]] {
        for nu in root_vectors_up_to(2, 3) {
            let p = CyclotomicPresentation::with_default_convention(&a2, Weight(lambda.clone()), nu)?;
            let c = cyclotomic::vanishing_report(&p, &DEFAULT_SCHEDULE)?;
            if !c.passed {
                return fail(format!("{}: {:?}", c.name, c.witness));
            }
        }
    }
    Ok(None)
}

fn cyclotomic_dimensions() -> Outcome {
    let a1 = CartanDatum::type_a(1);
    for n in 0..=3u64 {
        for k in 0..=3u32 {
            let p = CyclotomicPresentation::with_default_convention(&a1, Weight(vec![n as i64]), RootVector(vec![k]))?;
            let r = cyclotomic::quotient_dims(&p, &DEFAULT_SCHEDULE)?;
            let want = cyclotomic::sl2_expected_dimension(n, u64::from(k));
            if r.total_dim() != Some(want) {
                return fail(format!("n={n} k={k}: brute force {:?}, expected {want}", r.total_dim()));
            }
        }
    }
    Ok(None)
}

fn quiver_counting() -> Outcome {
    for d in [CartanDatum::type_a(2), CartanDatum::type_a(3), CartanDatum::type_d(4)] {
        for nu in root_vectors_up_to(d.rank(), 4) {
            let checks = [
                quiver_orbits::compare_kostant(&d, &nu, 2)?,
                quiver_orbits::orientation_and_q_check(&d, &nu, &[2, 3])?,
                quiver_orbits::orbit_report_check(&quiver_orbits::enumerate_orbits(&d, &nu, 2, true)?),
                quiver_orbits::orbit_report_check(&quiver_orbits::enumerate_orbits(&d, &nu, 3, true)?),
            ];
            if let Some(c) = checks.iter().find(|c| !c.passed) {
                return fail(format!("{}: {:?}", c.name, c.witness));
            }
        }
    }
    Ok(None)
}

fn strip_timing(v: &mut Value) {
    match v {
        Value::Object(m) => {
            m.remove("timing_ms");
            m.values_mut().for_each(strip_timing);
        }
        Value::Array(a) => a.iter_mut().for_each(strip_timing),
        _ => {}
    }
}

fn run_cli(args: &[&str]) -> (Value, Duration) {
    let t = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_klrwb")).args(args).output().expect("binary runs");
    let mut v: Value = serde_json::from_slice(&out.stdout).expect("JSON report");
    strip_timing(&mut v);
    (v, t.elapsed())
}

fn determinism() -> Outcome {
    let suites = ["subset", "weyl", "nilhecke", "klr", "cyclotomic", "orbits"];
    let mut overhead = Duration::ZERO;
    for s in suites {
        for seed in ["0", "17"] {
            let (a, _) = run_cli(&["verify", "--suite", s, "--seed", seed]);
            let (b, t) = run_cli(&["verify", "--suite", s, "--seed", seed, "--jobs", "1"]);
            overhead += t;
            if a != b {
                return fail(format!("suite {s} seed {seed} differs between runs"));
            }
            if a["passed"] != Value::Bool(true) {
                return fail(format!("suite {s} seed {seed} did not pass"));
            }
        }
    }
    if overhead > Duration::from_secs(5) {
        return fail(format!("repeat runs took {overhead:?}"));
    }
    Ok(None)
}

fn main() -> ExitCode {
    let criteria: [(&str, u64, fn() -> Outcome); 10] = [
        ("1 subset-model commutator", 1, subset_commutator),
        ("2 Weyl element conjugation", 5, weyl_element),
        ("3 Gaussian triple agreement", 10, gaussian_triple),
        ("4 nil Hecke soundness", 30, nil_hecke),
        ("5 KLR soundness", 60, klr_soundness),
        ("6 graded dimensions", 30, graded_dimensions),
        ("7 cyclotomic vanishing", 60, cyclotomic_vanishing),
        ("8 cyclotomic dimensions", 120, cyclotomic_dimensions),
        ("9 quiver counting", 60, quiver_counting),
        ("10 determinism", 60, determinism),
    ];
    let mut failed = 0;
    for (name, bound, f) in criteria {
        let t = Instant::now();
        let outcome = f();
        let elapsed = t.elapsed();
        let verdict = match outcome {
            Ok(None) if elapsed <= Duration::from_secs(bound) => "PASS".to_string(),
            Ok(None) => format!("FAIL (over the {bound} s bound)"),
            Ok(Some(why)) => format!("FAIL ({why})"),
            Err(e) => format!("FAIL (error: {e})"),
        };
        if !verdict.starts_with("PASS") {
            failed += 1;
        }
        println!("criterion {name:<30} {verdict} in {:.2} s (bound {bound} s)", elapsed.as_secs_f64());
    }
    if failed == 0 {
        println!("acceptance: all 10 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
