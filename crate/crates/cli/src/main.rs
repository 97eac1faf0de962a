use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use klr_workbench::cyclotomic::{self, CyclotomicPresentation};
use klr_workbench::klr::{self, RelationConvention};
use klr_workbench::report::{Check, Report};
use klr_workbench::root_data::{self, root_vectors_up_to, CartanDatum, RootVector, Weight};
use klr_workbench::{nilhecke, quiver_orbits, sl2_models, Error, Result};

#[derive(Parser)]
#[command(name = "klrwb", version, about = "Exact verification of KLR algebras and their shadows")]
struct Cli {
    /// Worker threads for internal parallelism (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Gaussian binomial coefficient and its finite-field counts.
    Gaussian {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        k: i64,
    },
    /// Graded dimension of `e(j) R_nu e(i)`.
    GradedDim {
        #[command(flatten)]
        quiver: QuiverArg,
        /// Source sequence, a JSON array of labels.
        #[arg(long)]
        i: String,
        /// Target sequence, a JSON array of labels.
        #[arg(long)]
        j: String,
        #[arg(long, default_value_t = 10)]
        cutoff: i64,
        /// Also compare each coefficient with oracle ranks.
        #[arg(long)]
        check: bool,
    },
    /// Brute-force dimensions of a cyclotomic quotient.
    Cyclotomic {
        #[command(flatten)]
        quiver: QuiverArg,
        #[arg(long = "highest-weight")]
        highest_weight: String,
        #[arg(long)]
        nu: String,
        #[arg(long, value_delimiter = ',', default_value = "8,12,16")]
        cutoffs: Vec<i64>,
    },
    /// Count isomorphism classes of representations over F_q.
    CountReps {
        #[command(flatten)]
        quiver: QuiverArg,
        #[arg(long)]
        nu: String,
        #[arg(long, default_value_t = 2)]
        q: u32,
        #[arg(long)]
        burnside: bool,
    },
    /// Matrix of the Weyl element on the weight-r space of the subset model.
    Weyl {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: i64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Subset,
    Weyl,
    Nilhecke,
    Klr,
    Cyclotomic,
    Orbits,
}

#[derive(Args)]
struct QuiverArg {
    /// Quiver JSON file.
    #[arg(long, conflicts_with = "kind")]
    quiver: Option<PathBuf>,
    /// Built-in type such as A2, D4, E6.
    #[arg(long = "type")]
    kind: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    /// Size parameter: set size, nil Hecke strands.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    quiver: QuiverArg,
    /// Largest |nu| for the klr, cyclotomic and orbits suites.
    #[arg(long)]
    max_height: Option<u32>,
    /// Largest sum of highest-weight coordinates in the cyclotomic suite.
    #[arg(long, default_value_t = 1)]
    weight_level: i64,
    /// Field sizes for the orbits suite.
    #[arg(long, value_delimiter = ',', default_value = "2,3")]
    q: Vec<u32>,
}

impl QuiverArg {
    fn load(&self, default: &str) -> Result<CartanDatum> {
        match (&self.quiver, &self.kind) {
            (Some(path), _) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::input(format!("cannot read {}: {e}", path.display())))?;
                let d = CartanDatum::from_json_str(&text)?;
                d.ensure_finite_type()?;
                Ok(d)
            }
            (None, Some(name)) => CartanDatum::from_name(name),
            (None, None) => CartanDatum::from_name(default),
        }
    }
}

fn parse_json(what: &str, s: &str) -> Result<Value> {
    serde_json::from_str(s).map_err(|e| Error::input(format!("{what}: {e}")))
}

fn datum_param(d: &CartanDatum) -> Value {
    let types = d.finite_type().unwrap_or_default();
    json!({ "type": types, "quiver": d.to_json() })
}

fn verify(args: &VerifyArgs) -> Result<Report> {
    let mut r;
    match args.suite {
        Suite::Subset => {
            let n = args.n.unwrap_or(8);
            r = Report::new("subset").param("model", "subset").param("n", n);
            for m in 0..=n {
                r.push(sl2_models::commutator_report(m));
            }
        }
        Suite::Weyl => {
            let n = args.n.unwrap_or(5);
            r = Report::new("weyl").param("n", n);
            for m in 0..=n {
                r.push(sl2_models::weyl_conjugation_check(m)?);
            }
        }
        Suite::Nilhecke => {
            let n = args.n.unwrap_or(4);
            r = Report::new("nilhecke").param("n", n).param("seed", args.seed);
            for m in 1..=n {
                r.push(nilhecke::relations_oracle_check(m, 3)?);
                r.push(nilhecke::relations_normal_form_check(m));
                if m <= 3 {
                    r.push(nilhecke::equality_oracle_check(m, 100, args.seed)?);
                }
                r.push(nilhecke::idempotent_check(m));
                r.push(nilhecke::centrality_check(m));
            }
        }
        Suite::Klr => {
            let d = args.quiver.load("A2")?;
            let h = args.max_height.unwrap_or(3);
            if h > klr::MAX_VERIFY_STRANDS {
                return Err(Error::input(format!("--max-height must be at most {}", klr::MAX_VERIFY_STRANDS)));
            }
            r = Report::new("klr").param("datum", datum_param(&d)).param("max_height", h).param("seed", args.seed);
            let conv = RelationConvention::default_for(&d);
            r = r.param("convention", conv.to_json(&d));
            for nu in root_vectors_up_to(d.rank(), h) {
                r.push(klr::verify_relations(&conv, &d, &nu)?);
                r.push(klr::idempotent_calculus_check(&conv, &d, &nu)?);
                if nu.height() >= 2 {
                    r.push(klr::random_oracle_check(&conv, &d, &nu, 10, args.seed, 3)?);
                    r.push(klr::degree_additivity_check(&conv, &d, &nu, 20, args.seed)?);
                }
            }
            r.push(negative_control(&d)?);
            for n in 1..=3 {
                r.push(klr::a1_specialization_check(n, 50, args.seed)?);
            }
        }
        Suite::Cyclotomic => {
            let d = args.quiver.load("A1")?;
            let h = args.max_height.unwrap_or(3);
            r = Report::new("cyclotomic")
                .param("datum", datum_param(&d))
                .param("max_height", h)
                .param("weight_level", args.weight_level)
                .param("schedule", json!(cyclotomic::DEFAULT_SCHEDULE));
            for lambda in dominant_weights(d.rank(), args.weight_level) {
                for nu in root_vectors_up_to(d.rank(), h) {
                    let p = CyclotomicPresentation::with_default_convention(&d, lambda.clone(), nu.clone())?;
                    r.push(cyclotomic::vanishing_report(&p, &cyclotomic::DEFAULT_SCHEDULE)?);
                    if d.rank() == 1 {
                        r.push(sl2_dimension_check(&p)?);
                    }
                }
            }
        }
        Suite::Orbits => {
            let d = args.quiver.load("A3")?;
            let h = args.max_height.unwrap_or(4);
            r = Report::new("orbits")
                .param("datum", datum_param(&d))
                .param("max_height", h)
                .param("q", json!(args.q));
            for nu in root_vectors_up_to(d.rank(), h) {
                for &q in &args.q {
                    r.push(quiver_orbits::compare_kostant(&d, &nu, q)?);
                    r.push(quiver_orbits::orbit_report_check(&quiver_orbits::enumerate_orbits(&d, &nu, q, true)?));
                }
                r.push(quiver_orbits::orientation_and_q_check(&d, &nu, &args.q)?);
            }
        }
    }
    Ok(r)
}

/// The sign-flipped braid convention must be rejected somewhere.
fn negative_control(d: &CartanDatum) -> Result<Check> {
    let name = "flipped braid convention is rejected";
    let conv = RelationConvention::flipped_braid(d);
    for nu in root_vectors_up_to(d.rank(), 3) {
        let c = klr::verify_relations(&conv, d, &nu)?;
        if !c.passed {
            return Ok(Check::pass(name).with_data(json!({ "rejected_at": d.root_vector_to_json(&nu), "witness": c.witness })));
        }
    }
    if d.edges().is_empty() {
        return Ok(Check::pass(name).with_data(json!({ "rejected_at": null, "note": "no edges, braid corrections vanish" })));
    }
    Ok(Check::fail(name, "every relation held under the flipped convention"))
}

fn dominant_weights(rank: usize, level: i64) -> Vec<Weight> {
    let mut out = vec![];
    let mut cur = vec![0i64; rank];
    fn rec(i: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Weight>) {
        if i == cur.len() {
            out.push(Weight(cur.clone()));
            return;
        }
        for v in 0..=left {
            cur[i] = v;
            rec(i + 1, left - v, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, level, &mut cur, &mut out);
    out
}

fn sl2_dimension_check(p: &CyclotomicPresentation) -> Result<Check> {
    let (n, k) = (p.lambda.0[0] as u64, u64::from(p.nu.0[0]));
    let name = format!("sl2 quotient dimension n={n} k={k}");
    if k > 3 {
        return Ok(Check::pass(name).with_data(json!({ "skipped": "k > 3" })));
    }
    let report = cyclotomic::quotient_dims(p, &cyclotomic::DEFAULT_SCHEDULE)?;
    let want = cyclotomic::sl2_expected_dimension(n, k);
    let got = report.total_dim();
    let data = json!({ "expected": want, "total_dim": got });
    Ok(if got == Some(want) {
        Check::pass(name).with_data(data)
    } else {
        Check::fail(name, format!("brute force gives {got:?}, expected (k!)^2 binomial(n,k) = {want}")).with_data(data)
    })
}

fn gaussian(n: i64, k: i64) -> Result<Report> {
    let g = sl2_models::gaussian_binomial(n, k)?;
    let centered = sl2_models::centered_gaussian_binomial(n, k)?;
    let quantum = root_data::quantum_binomial(n, k)?;
    let mut r = Report::new("gaussian")
        .param("n", n)
        .param("k", k)
        .param("gaussian", g.to_string())
        .param("centered", centered.to_string())
        .param("quantum_binomial", quantum.to_string());
    let binom = if (0..=n).contains(&k) { num_binomial(n, k) } else { 0 };
    r.push(Check::from_witness(
        "value at q=1 is the binomial coefficient",
        (g.at_one() != binom.into()).then(|| format!("{} != {binom}", g.at_one())),
    ));
    r.push(Check::from_witness(
        "centered form equals the quantum binomial",
        (centered != quantum).then(|| format!("{centered} != {quantum}")),
    ));
    if (0..=8).contains(&n) && (0..=n).contains(&k) {
        for q in 2..=5u32 {
            let count = sl2_models::grassmannian_count(k as usize, n as usize, q)?;
            let value = g.evaluate(&klr_workbench::exact_poly::rat(q))?;
            r.push(
                Check::from_witness(
                    format!("subspace count over F_{q}"),
                    (value != klr_workbench::exact_poly::rat(count)).then(|| format!("polynomial gives {value}, count {count}")),
                )
                .with_data(json!({ "q": q, "count": count })),
            );
        }
    }
    Ok(r)
}

fn num_binomial(n: i64, k: i64) -> i64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn run(cli: &Cli) -> Result<Report> {
    Ok(match &cli.command {
        Command::Verify(args) => verify(args)?,
        Command::Gaussian { n, k } => gaussian(*n, *k)?,
        Command::GradedDim { quiver, i, j, cutoff, check } => {
            let d = quiver.load("A2")?;
            let i = d.sequence_from_json(&parse_json("--i", i)?)?;
            let j = d.sequence_from_json(&parse_json("--j", j)?)?;
            let series = klr::graded_dim_hom(&d, &i, &j, *cutoff)?;
            let mut r = Report::new("graded-dim")
                .param("datum", datum_param(&d))
                .param("i", json!(d.sequence_labels(&i)))
                .param("j", json!(d.sequence_labels(&j)))
                .param("cutoff", *cutoff)
                .param("series", series.truncated().to_string());
            if *check {
                let conv = RelationConvention::default_for(&d);
                r.push(klr::graded_dim_rank_check(&conv, &d, &i, &j, *cutoff)?);
            }
            r
        }
        Command::Cyclotomic {
            quiver,
            highest_weight,
            nu,
            cutoffs,
        } => {
            let d = quiver.load("A1")?;
            let lambda = d.weight_from_json(&parse_json("--highest-weight", highest_weight)?)?;
            let nu = d.root_vector_from_json(&parse_json("--nu", nu)?)?;
            let p = CyclotomicPresentation::with_default_convention(&d, lambda, nu)?;
            let q = cyclotomic::quotient_dims(&p, cutoffs)?;
            let mut r = Report::new("cyclotomic")
                .param("datum", datum_param(&d))
                .param("quotient", q.to_json(&d));
            r.push(Check::from_witness(
                "quotient dimensions stabilized",
                (!q.is_stabilized()).then(|| format!("no stabilization within cutoffs {cutoffs:?}")),
            ));
            r
        }
        Command::CountReps { quiver, nu, q, burnside } => {
            let d = quiver.load("A2")?;
            let nu: RootVector = d.root_vector_from_json(&parse_json("--nu", nu)?)?;
            let report = quiver_orbits::enumerate_orbits(&d, &nu, *q, *burnside)?;
            let mut r = Report::new("count-reps")
                .param("datum", datum_param(&d))
                .param("orbit_report", report.to_json(&d));
            r.push(quiver_orbits::orbit_report_check(&report));
            r
        }
        Command::Weyl { n, r: weight } => {
            let m = sl2_models::weyl_s(*n, *weight)?;
            let invertible = m.matrix.inverse().is_some();
            let mut r = Report::new("weyl").param("n", *n).param("r", *weight).param("weyl", m.to_json());
            r.push(Check::from_witness(
                "Weyl element block is invertible",
                (!invertible).then(|| "singular matrix".to_string()),
            ));
            r
        }
    })
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Input(_) | Error::UnsupportedType(_) | Error::Domain(_) | Error::Composition(_) | Error::TooLarge(_) => 2,
        Error::Inconclusive(_) | Error::Internal(_) => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(report) => {
            let report = report.finish();
            emit(&report.to_json());
            ExitCode::from(if report.passed { 0 } else { 1 })
        }
        Err(e) => {
            let out = json!({ "schema": 1, "passed": false, "error": { "kind": error_kind(&e), "message": e.to_string() } });
            emit(&out);
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

/// Writes to stdout, tolerating a closed pipe.
fn emit(v: &Value) {
    let text = serde_json::to_string_pretty(v).expect("reports serialize");
    let _ = writeln!(std::io::stdout(), "{text}");
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Input(_) => "input",
        Error::UnsupportedType(_) => "unsupported_type",
        Error::Domain(_) => "domain",
        Error::Composition(_) => "composition",
        Error::TooLarge(_) => "too_large",
        Error::Inconclusive(_) => "inconclusive",
        Error::Internal(_) => "internal",
    }
}
