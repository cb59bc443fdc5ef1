use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lrh_core::analytic::{BigComplex, OrthoIntegrator};
use lrh_core::verify::{self, OutputFormat, RunConfig};
use lrh_core::weil::weil_identity_suite;
use lrh_core::zeta_poly::{is_admissible, zeta_poly_expansion};
use lrh_core::Error;

#[derive(Parser)]
#[command(name = "lrh", version, about = "Critical-line certificates for local zeta polynomials")]
struct Cli {
    /// Mantissa precision in bits for the numeric checks.
    #[arg(long, global = true, env = "LRH_PRECISION", default_value_t = 128)]
    precision: usize,
    /// Worker threads.
    #[arg(long, global = true, env = "LRH_JOBS", default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Json => OutputFormat::Json,
            Format::Csv => OutputFormat::Csv,
            Format::Text => OutputFormat::Text,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the normalized polynomial p_m^(k) and its zeros.
    Gen {
        m: usize,
        k: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certify every (m, k) with m <= m-max and run the cross-checks.
    Verify {
        #[arg(long, default_value_t = 8)]
        m_max: usize,
        /// Only these k (repeatable).
        #[arg(long = "k")]
        k: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Degree bound for the Weil identity suite.
        #[arg(long, default_value_t = 6)]
        weil_degree: usize,
        /// Largest m for the zeta ratio checks.
        #[arg(long, default_value_t = 6)]
        ratio_m_max: usize,
        #[arg(long, default_value_t = 0)]
        strip_trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Skip the numeric root witness.
        #[arg(long)]
        exact_only: bool,
        /// Record wall-clock timings.
        #[arg(long)]
        timing: bool,
    },
    /// Orthogonality of the critical-line restrictions for one k.
    Ortho {
        #[arg(long, default_value_t = 16)]
        m_max: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Exact Weil representation identities up to a total degree.
    Weil {
        #[arg(long, default_value_t = 12)]
        degree_bound: usize,
    },
    /// Seeded random instances of the strip-shrinking lemma.
    StripShrink {
        #[arg(long, default_value_t = 500)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Numeric zeta integral of f_{m,0} against the exact closed form.
    Eval {
        m: usize,
        k: usize,
        /// Point as RE,IM.
        #[arg(long, allow_hyphen_values = true)]
        s: String,
    },
}

enum Failure {
    Check(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Io(_) | Error::Json(_) | Error::Csv(_) | Error::Domain(_) => Failure::Usage(e.to_string()),
            _ => Failure::Check(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn sink(out: &Option<PathBuf>) -> Result<Box<dyn Write>, Failure> {
    Ok(match out {
        Some(p) => Box::new(BufWriter::new(File::create(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?)),
        None => Box::new(io::stdout().lock()),
    })
}

fn parse_point(s: &str, precision: usize) -> Result<BigComplex, Failure> {
    let bad = || Failure::Usage(format!("expected RE,IM, got {s:?}"));
    let (re, im) = s.split_once(',').ok_or_else(bad)?;
    let re: f64 = re.trim().parse().map_err(|_| bad())?;
    let im: f64 = im.trim().parse().map_err(|_| bad())?;
    Ok(BigComplex::from_f64(re, im, precision))
}

fn run(cli: Cli) -> Result<(), Failure> {
    let precision = cli.precision;
    match cli.command {
        Command::Gen { m, k, format, out } => {
            if k > m {
                return Err(Failure::Usage(format!("k = {k} exceeds m = {m}")));
            }
            let body = verify::render_table(&[zeta_poly_expansion(m, k)], format.into())?;
            let mut w = sink(&out)?;
            w.write_all(body.as_bytes())?;
            w.flush()?;
        }
        Command::Verify { m_max, k, out, format, weil_degree, ratio_m_max, strip_trials, seed, exact_only, timing } => {
            let cfg = RunConfig {
                m_max,
                k_filter: (!k.is_empty()).then_some(k),
                precision_bits: precision,
                output_format: format.into(),
                parallelism: cli.jobs,
                weil_degree_bound: Some(weil_degree),
                ratio_m_max,
                numeric_roots: !exact_only,
                strip_trials,
                seed,
                timing,
                ..RunConfig::default()
            };
            let outcome = verify::run_suite(&cfg)?;
            let mut w = sink(&out)?;
            verify::write_outcome(&outcome, cfg.output_format, &mut w)?;
            w.flush()?;
            if !outcome.summary.all_passed {
                return Err(Failure::Check(format!("{} check(s) failed", outcome.summary.failures.len())));
            }
        }
        Command::Ortho { m_max, k, tol } => {
            if m_max < k {
                return Err(Failure::Usage(format!("m-max = {m_max} is below k = {k}")));
            }
            let mut integ = OrthoIntegrator::new(k, m_max, precision)?;
            let ms: Vec<usize> = (k..=m_max).filter(|&m| is_admissible(m, k)).collect();
            let mut failed = 0;
            println!("truncation |t| <= {}", integ.truncation());
            for (i, &m) in ms.iter().enumerate() {
                for &m2 in &ms[i + 1..] {
                    let v = integ.pair(m, m2)?;
                    let ok = v.relative <= tol && v.error_estimate <= tol * v.norm_product;
                    failed += usize::from(!ok);
                    println!(
                        "k={k} m={m:>2} m'={m2:>2} integral={:+.3e} relative={:.3e} est={:.1e} {}",
                        v.integral,
                        v.relative,
                        v.error_estimate,
                        if ok { "ok" } else { "FAILED" }
                    );
                }
            }
            if failed > 0 {
                return Err(Failure::Check(format!("{failed} pair(s) not orthogonal within {tol:e}")));
            }
        }
        Command::Weil { degree_bound } => {
            weil_identity_suite(degree_bound)?;
            let count = (degree_bound + 1) * (degree_bound + 2) / 2;
            println!("weil identities hold on all {count} basis functions with m+n <= {degree_bound}");
        }
        Command::StripShrink { trials, seed } => {
            let outcomes = verify::strip_shrink_outcomes(trials, seed)?;
            let worst = outcomes.iter().filter_map(|o| o.margin).fold(f64::INFINITY, f64::min);
            println!("{trials} trials (seed {seed}): no counterexample, smallest margin {worst:.3e}");
        }
        Command::Eval { m, k, s } => {
            if k > m {
                return Err(Failure::Usage(format!("k = {k} exceeds m = {m}")));
            }
            let point = parse_point(&s, precision)?;
            let c = verify::eval_compare(m, k, &point)?;
            println!("{}", serde_json::to_string_pretty(&c).map_err(Error::from)?);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
