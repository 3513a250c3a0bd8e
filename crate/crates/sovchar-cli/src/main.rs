//! Command-line surface for the sovchar library: exact computation of
//! characters and separated polynomials, verification sweeps over every
//! identity, and small benchmarks.
//!
//! Exit codes: 0 when everything passes, 1 on a verification failure,
//! 2 on a usage error. All numeric output is in exact rational form `p/q`.

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use sovchar::algebra::rational::to_string_frac;
use sovchar::algebra::{LaurentPoly, VarSet};
use sovchar::characters::{
    a_mu, chi, chi_truncated, dimension, phi_mu1, phi_mu_on, q_poly, weyl_denominator_product,
    MuVector, Partition,
};
use sovchar::integral::{q_operator_integral_apply, q_reduction_expected};
use sovchar::verify as vf;

#[derive(Parser)]
#[command(name = "sovchar", version, about = "Exact symplectic-character separation toolkit")]
struct Cli {
    /// Worker threads for verification sweeps (fallback: SOV_JOBS)
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Write output to this file instead of stdout
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute one object exactly and print it
    Compute {
        what: ComputeWhat,
        /// Number of variables L
        #[arg(long = "L")]
        l: usize,
        /// Partition parts, comma-separated (length L)
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Truncation / variable count where applicable
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Run a verification suite; one JSON line per case plus a summary
    Verify(VerifyOpts),
    /// Time determinant-vs-product and kernel-pipeline scaling; CSV output
    Bench {
        target: BenchTarget,
        /// Comma-separated list of sizes L (empty for none)
        #[arg(long, default_value = "")]
        sizes: String,
    },
}

#[derive(Args)]
struct VerifyOpts {
    suite: Suite,
    /// Largest L in the sweep
    #[arg(long = "Lmax")]
    l_max: Option<usize>,
    /// Largest part lambda_1 in the sweep
    #[arg(long)]
    lmax: Option<i64>,
    /// Verify a single partition instead of sweeping (requires --lambda)
    #[arg(long = "L")]
    l: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    /// Restrict to one k where the suite is k-indexed
    #[arg(long)]
    k: Option<usize>,
    /// Restrict to one Hamiltonian index where applicable
    #[arg(long)]
    j: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Copy, Clone, ValueEnum)]
enum ComputeWhat {
    Chi,
    ChiTrunc,
    Q,
    Dim,
    AMu,
    Phi,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Suite {
    Eigen,
    Denominator,
    InverseS,
    InverseSk,
    WAnnihilate,
    FactorizedH,
    Qred,
    Aam,
    Kprop,
    Roundtrip,
    All,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum BenchTarget {
    DetVsProduct,
    QredScaling,
}

/// Usage errors exit with code 2, matching clap's own behaviour.
fn die_usage(msg: &str) -> ! {
    eprintln!("error: {msg}");
    std::process::exit(2);
}

fn parse_lambda(l: usize, s: &str) -> Partition {
    let parts: Vec<i64> = s
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            t.trim()
                .parse()
                .unwrap_or_else(|_| die_usage(&format!("bad partition part `{t}`")))
        })
        .collect();
    if parts.len() != l {
        die_usage(&format!("--lambda has {} parts but --L is {l}", parts.len()));
    }
    Partition::new(parts).unwrap_or_else(|e| die_usage(&e.to_string()))
}

struct Output {
    sink: Box<dyn Write>,
}

impl Output {
    fn new(path: &Option<std::path::PathBuf>) -> Self {
        let sink: Box<dyn Write> = match path {
            Some(p) => Box::new(
                std::fs::File::create(p)
                    .unwrap_or_else(|e| die_usage(&format!("cannot open {}: {e}", p.display()))),
            ),
            None => Box::new(std::io::stdout()),
        };
        Output { sink }
    }

    fn line(&mut self, s: &str) {
        writeln!(self.sink, "{s}").expect("write output");
    }
}

fn poly_out(out: &mut Output, p: &LaurentPoly, format: Format) {
    match format {
        Format::Json => out.line(&serde_json::to_string(&p.to_json()).expect("serialize")),
        Format::Pretty => out.line(&p.to_string()),
        Format::Csv => die_usage("csv is not a valid format for compute"),
    }
}

fn run_compute(
    out: &mut Output,
    what: ComputeWhat,
    l: usize,
    lambda: &str,
    k: Option<usize>,
    format: Format,
) -> ExitCode {
    if l == 0 {
        die_usage("--L must be at least 1");
    }
    let lam = parse_lambda(l, lambda);
    match what {
        ComputeWhat::Chi => match chi(&lam) {
            Ok(p) => poly_out(out, &p, format),
            Err(e) => die_usage(&e.to_string()),
        },
        ComputeWhat::ChiTrunc => {
            let k = k.unwrap_or_else(|| die_usage("chi-trunc requires --k"));
            match chi_truncated(&lam, k) {
                Ok(p) => poly_out(out, &p, format),
                Err(e) => die_usage(&e.to_string()),
            }
        }
        ComputeWhat::Q => match q_poly(&lam) {
            Ok(p) => poly_out(out, &p, format),
            Err(e) => die_usage(&e.to_string()),
        },
        ComputeWhat::Dim => {
            let d = to_string_frac(&dimension(&lam));
            match format {
                Format::Json => out.line(&serde_json::to_string(&d).expect("serialize")),
                Format::Pretty => out.line(&d),
                Format::Csv => die_usage("csv is not a valid format for compute"),
            }
        }
        ComputeWhat::AMu => poly_out(out, &a_mu(&lam.mu()), format),
        ComputeWhat::Phi => {
            let k = k.unwrap_or(1);
            if k > l {
                die_usage(&format!("phi requires k <= L, got k = {k}"));
            }
            let p = if k == 1 {
                phi_mu1(&lam.mu())
            } else {
                let vars = VarSet::shared((1..=k).map(|i| format!("z{i}")));
                let rows: Vec<usize> = (0..k).collect();
                phi_mu_on(&vars, &rows, &lam.mu())
            };
            poly_out(out, &p, format);
        }
    }
    ExitCode::SUCCESS
}

/// Which suites run, with their default sweep bounds. Integral suites are
/// bounded lower because the kernel pipeline cost grows steeply with L.
/// A single-partition run verifies exactly that partition.
fn suite_reports(
    suite: Suite,
    l_max: Option<usize>,
    lmax: Option<i64>,
    single: Option<&Partition>,
    k: Option<usize>,
    j: Option<usize>,
) -> Vec<vf::SuiteReport> {
    let lams = |def_l: usize, def_m: i64| -> Vec<Partition> {
        match single {
            Some(lam) => vec![lam.clone()],
            None => {
                let l_top = l_max.unwrap_or(def_l);
                let m_top = lmax.unwrap_or(def_m);
                (1..=l_top)
                    .flat_map(|l| sovchar::characters::partitions(l, m_top))
                    .collect()
            }
        }
    };
    let filter_kj = |mut rep: vf::SuiteReport| -> vf::SuiteReport {
        if let Some(kk) = k {
            let want = serde_json::json!(kk);
            rep.cases.retain(|c| c.params.get("k").is_none() || c.params.get("k") == Some(&want));
        }
        if let Some(jj) = j {
            let want = serde_json::json!(jj);
            rep.cases.retain(|c| c.params.get("j").is_none() || c.params.get("j") == Some(&want));
        }
        rep
    };
    let mut reports = Vec::new();
    let mut push = |r: vf::SuiteReport| reports.push(filter_kj(r));
    match suite {
        Suite::Eigen => push(vf::eigen_suite_over(&lams(4, 3))),
        Suite::Denominator => {
            let ls = lams(4, 3);
            push(vf::denominator_suite_over(&ls));
            push(vf::dimension_suite_over(&ls));
        }
        Suite::InverseS => push(vf::inverse_s_suite_over(&lams(3, 3))),
        Suite::InverseSk => push(vf::inverse_sk_suite_over(&lams(3, 3))),
        Suite::WAnnihilate => push(vf::w_annihilate_suite_over(&lams(4, 3))),
        Suite::FactorizedH => push(vf::factorized_h_suite_over(&lams(4, 3), 5)),
        Suite::Qred => {
            let ls = lams(3, 2);
            push(vf::qred_suite_over(&ls));
            let small: Vec<Partition> = ls
                .iter()
                .filter(|p| p.len() <= 2 && p.parts().first().copied().unwrap_or(0) <= 2)
                .cloned()
                .collect();
            push(vf::q_full_suite_over(&small));
        }
        Suite::Aam => push(vf::aam_suite_over(&lams(2, 2))),
        Suite::Kprop => push(vf::kprop_suite_over(&lams(3, 2))),
        Suite::Roundtrip => {
            let (l_top, m_top) = (l_max.unwrap_or(3), lmax.unwrap_or(3));
            push(vf::roundtrip_suite(l_top, m_top, 3));
        }
        Suite::All => {
            for s in [
                Suite::Eigen,
                Suite::Denominator,
                Suite::InverseS,
                Suite::InverseSk,
                Suite::WAnnihilate,
                Suite::FactorizedH,
                Suite::Qred,
                Suite::Aam,
                Suite::Kprop,
                Suite::Roundtrip,
            ] {
                reports.extend(suite_reports(s, l_max, lmax, single, k, j));
            }
        }
    }
    reports
}

/// 0 when every case of every report passed, 1 otherwise.
fn exit_code_for(reports: &[vf::SuiteReport]) -> u8 {
    if reports.iter().all(|r| r.all_pass()) {
        0
    } else {
        1
    }
}

fn run_verify(out: &mut Output, opts: &VerifyOpts) -> ExitCode {
    let single = match (opts.l, &opts.lambda) {
        (Some(l), Some(s)) => Some(parse_lambda(l, s)),
        (None, None) => None,
        _ => die_usage("single-case verify needs both --L and --lambda"),
    };
    let format = opts.format;
    let started = Instant::now();
    let reports =
        suite_reports(opts.suite, opts.l_max, opts.lmax, single.as_ref(), opts.k, opts.j);
    let elapsed_ms = started.elapsed().as_millis();
    let mut passed = 0usize;
    let mut total = 0usize;
    for rep in &reports {
        let (p, t) = rep.count();
        passed += p;
        total += t;
        for case in &rep.cases {
            match format {
                Format::Json => {
                    out.line(&serde_json::to_string(case).expect("serialize case"))
                }
                Format::Pretty => out.line(&format!(
                    "{} {} {}",
                    if case.pass { "PASS" } else { "FAIL" },
                    case.check,
                    case.params
                )),
                Format::Csv => die_usage("csv is not a valid format for verify"),
            }
        }
    }
    let summary = serde_json::json!({
        "summary": true,
        "passed": passed,
        "total": total,
        "elapsed_ms": elapsed_ms,
    });
    match format {
        Format::Json => out.line(&serde_json::to_string(&summary).expect("serialize summary")),
        Format::Pretty => out.line(&format!(
            "{passed}/{total} checks passed in {elapsed_ms} ms"
        )),
        Format::Csv => unreachable!(),
    }
    ExitCode::from(exit_code_for(&reports))
}

const BENCH_SIZE_CAP: usize = 6;

fn parse_sizes(s: &str) -> Vec<usize> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            let n: usize = t
                .trim()
                .parse()
                .unwrap_or_else(|_| die_usage(&format!("bad size `{t}`")));
            if n == 0 || n > BENCH_SIZE_CAP {
                die_usage(&format!("sizes must be in 1..={BENCH_SIZE_CAP}"));
            }
            n
        })
        .collect()
}

fn run_bench(out: &mut Output, target: BenchTarget, sizes: &str) -> ExitCode {
    let sizes = parse_sizes(sizes);
    out.line("size,method,wall_ms,terms");
    match target {
        BenchTarget::DetVsProduct => {
            for &l in &sizes {
                let t0 = Instant::now();
                let det = a_mu(&MuVector::delta(l));
                let det_ms = t0.elapsed().as_secs_f64() * 1e3;
                let t1 = Instant::now();
                let prod = weyl_denominator_product(l);
                let prod_ms = t1.elapsed().as_secs_f64() * 1e3;
                if det != prod {
                    eprintln!("determinant and product disagree at L = {l}");
                    return ExitCode::from(1);
                }
                out.line(&format!("{l},determinant,{det_ms:.3},{}", det.num_terms()));
                out.line(&format!("{l},product,{prod_ms:.3},{}", prod.num_terms()));
            }
        }
        BenchTarget::QredScaling => {
            for &l in &sizes {
                let lam = Partition::zero(l);
                let t0 = Instant::now();
                let got = match q_operator_integral_apply(&lam) {
                    Ok(g) => g,
                    Err(e) => {
                        eprintln!("kernel pipeline failed at L = {l}: {e}");
                        return ExitCode::from(1);
                    }
                };
                let ms = t0.elapsed().as_secs_f64() * 1e3;
                if got != q_reduction_expected(&lam) {
                    eprintln!("kernel identity failed at L = {l}");
                    return ExitCode::from(1);
                }
                out.line(&format!("{l},kernel-pipeline,{ms:.3},{}", got.num_terms()));
            }
        }
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let jobs = cli.jobs.or_else(|| {
        std::env::var("SOV_JOBS").ok().and_then(|s| s.parse().ok())
    });
    if let Some(n) = jobs {
        if n == 0 {
            die_usage("--jobs must be at least 1");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .unwrap_or_else(|e| die_usage(&format!("cannot configure {n} workers: {e}")));
    }
    let mut out = Output::new(&cli.out);
    match cli.cmd {
        Cmd::Compute { what, l, lambda, k, format } => {
            run_compute(&mut out, what, l, &lambda, k, format)
        }
        Cmd::Verify(opts) => run_verify(&mut out, &opts),
        Cmd::Bench { target, sizes } => run_bench(&mut out, target, &sizes),
    }
}
