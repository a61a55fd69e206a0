//! Command-line front end: every verification as a reproducible, scriptable
//! run with CSV/JSON output.
//!
//! Exit codes: 0 success; 1 a verification residual exceeded its tolerance;
//! 2 invalid arguments or domain errors; 3 quadrature failed to converge;
//! 4 output I/O failure; 5 an identity invariant was violated (enumeration
//! bug tripwire).

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use orthospectrum::format::fmt_f64;
use orthospectrum::hypgeom::HConfig;
use orthospectrum::orthospec::{spectrum, spectrum_to_csv, spectrum_to_json, SurfaceSpec};
use orthospectrum::quadvol::{volume_report, VolumeReport};
use orthospectrum::rng::SplitMix64;
use orthospectrum::{dilog, Error};

#[derive(Parser)]
#[command(
    name = "orthospectrum",
    about = "Numerical verification of orthospectrum identities on hyperbolic surfaces",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate Li2, the Rogers dilogarithm and its derivative at a point.
    ///
    /// Prints one CSV row `x,li2,L,Lprime`; the derivative field is empty at
    /// the endpoints, where it diverges.
    Dilog {
        /// Argument in [0, 1].
        x: f64,
    },

    /// Evaluate all volume routes on a grid of angles and compare against
    /// the analytic target 8·L(1−x).
    ///
    /// Emits one CSV row per grid point and a trailing `# max_abs_residual`
    /// comment; exits 0 exactly when max |V_formula − target| < TOL.
    /// Monte Carlo row seeds are drawn from a SplitMix64 stream seeded with
    /// --seed, one draw per row.
    VerifyVolume {
        /// Grid angles in (0, π), radians.
        #[arg(required_unless_present = "grid")]
        alpha: Vec<f64>,
        /// Additional uniform grid START:END:COUNT, appended to the angles.
        #[arg(long)]
        grid: Option<String>,
        #[command(flatten)]
        run: RunArgs,
        /// Monte Carlo samples per grid point.
        #[arg(long, default_value_t = 1_000_000)]
        samples: u64,
        /// Base random seed.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },

    /// Enumerate the orthospectrum of a pair of pants.
    ///
    /// Writes the spectrum as CSV or JSON; prints the record count and the
    /// certified completeness length to standard error.
    Spectrum {
        b1: f64,
        b2: f64,
        b3: f64,
        #[arg(long, default_value_t = 8)]
        max_word_length: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[command(flatten)]
        run: RunArgs,
    },

    /// Partial sums of Σ L(1/cosh²(l/2)) against π²/2 across word bounds.
    ///
    /// Emits CSV rows `bound,count,partial_sum,rhs,residual`; exits 5 if the
    /// sums fail to increase monotonically or overshoot the limit.
    VerifyBridgeman {
        b1: f64,
        b2: f64,
        b3: f64,
        /// Comma-separated, strictly increasing word-length bounds.
        #[arg(long, default_value = "4,8,12")]
        bounds: String,
        #[command(flatten)]
        run: RunArgs,
    },

    /// Partial sums of the boundary-interval widths 2·2 ln coth(l/2)
    /// against the total boundary length, across word bounds.
    VerifyBasmajian {
        b1: f64,
        b2: f64,
        b3: f64,
        /// Comma-separated, strictly increasing word-length bounds.
        #[arg(long, default_value = "4,8,12")]
        bounds: String,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Args)]
struct RunArgs {
    /// Quadrature tolerance (verify-volume only).
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
    /// Cap on worker threads; output bytes do not depend on it.
    #[arg(long)]
    threads: Option<usize>,
    /// Write output here instead of standard output.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Csv,
    Json,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Tolerance(_) => 3,
            _ => 2,
        };
        Failure::new(code, e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn dispatch(cmd: Command) -> Result<(), Failure> {
    let threads = match &cmd {
        Command::Dilog { .. } => None,
        Command::VerifyVolume { run, .. }
        | Command::Spectrum { run, .. }
        | Command::VerifyBridgeman { run, .. }
        | Command::VerifyBasmajian { run, .. } => run.threads,
    };
    match threads {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .map_err(|e| Failure::new(2, format!("cannot build thread pool: {e}")))?;
            pool.install(|| run_command(cmd))
        }
        None => run_command(cmd),
    }
}

fn run_command(cmd: Command) -> Result<(), Failure> {
    match cmd {
        Command::Dilog { x } => cmd_dilog(x),
        Command::VerifyVolume {
            alpha,
            grid,
            run,
            samples,
            seed,
        } => cmd_verify_volume(alpha, grid, run, samples, seed),
        Command::Spectrum {
            b1,
            b2,
            b3,
            max_word_length,
            format,
            run,
        } => cmd_spectrum(b1, b2, b3, max_word_length, format, run),
        Command::VerifyBridgeman {
            b1,
            b2,
            b3,
            bounds,
            run,
        } => cmd_identity_table(b1, b2, b3, bounds, run, Identity::Bridgeman),
        Command::VerifyBasmajian {
            b1,
            b2,
            b3,
            bounds,
            run,
        } => cmd_identity_table(b1, b2, b3, bounds, run, Identity::Basmajian),
    }
}

fn cmd_dilog(x: f64) -> Result<(), Failure> {
    let li2 = dilog::li2(x)?;
    let l = dilog::rogers_l(x)?;
    let lprime = if x > 0.0 && x < 1.0 {
        fmt_f64(dilog::rogers_l_deriv(x)?)
    } else {
        String::new()
    };
    println!("x,li2,L,Lprime");
    println!("{},{},{},{}", fmt_f64(x), fmt_f64(li2), fmt_f64(l), lprime);
    Ok(())
}

fn parse_grid(spec: &str) -> Result<Vec<f64>, Failure> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(Failure::new(2, format!("--grid expects START:END:COUNT, got '{spec}'")));
    }
    let start: f64 = parts[0]
        .parse()
        .map_err(|_| Failure::new(2, format!("bad grid start '{}'", parts[0])))?;
    let end: f64 = parts[1]
        .parse()
        .map_err(|_| Failure::new(2, format!("bad grid end '{}'", parts[1])))?;
    let count: usize = parts[2]
        .parse()
        .map_err(|_| Failure::new(2, format!("bad grid count '{}'", parts[2])))?;
    if count == 0 {
        return Err(Failure::new(2, "grid count must be positive"));
    }
    if count == 1 {
        return Ok(vec![start]);
    }
    let step = (end - start) / (count as f64 - 1.0);
    Ok((0..count).map(|k| start + step * k as f64).collect())
}

fn cmd_verify_volume(
    mut alphas: Vec<f64>,
    grid: Option<String>,
    run: RunArgs,
    samples: u64,
    seed: u64,
) -> Result<(), Failure> {
    if let Some(spec) = grid {
        alphas.extend(parse_grid(&spec)?);
    }
    if !(run.tol > 0.0) {
        return Err(Failure::new(2, "tolerance must be positive"));
    }
    for &a in &alphas {
        if !(a > 0.0 && a < std::f64::consts::PI) {
            return Err(Failure::new(2, format!("grid point {a} outside (0, π)")));
        }
    }
    let mut seed_stream = SplitMix64::new(seed);
    let mut out = String::new();
    writeln!(out, "{}", VolumeReport::<f64>::CSV_HEADER).unwrap();
    let mut max_resid = 0.0f64;
    for &alpha in &alphas {
        let cfg = HConfig::from_alpha(alpha)?;
        let row_seed = seed_stream.next_u64();
        let report = volume_report(&cfg, run.tol, samples, row_seed)?;
        max_resid = max_resid.max(report.residual().abs());
        writeln!(out, "{}", report.csv_row()).unwrap();
    }
    writeln!(out, "# max_abs_residual,{}", fmt_f64(max_resid)).unwrap();
    write_output(&run.out, &out)?;
    if max_resid < run.tol {
        Ok(())
    } else {
        Err(Failure::new(
            1,
            format!("max |V_formula - target| = {max_resid:e} exceeds tol {:e}", run.tol),
        ))
    }
}

fn build_pants(b1: f64, b2: f64, b3: f64) -> Result<SurfaceSpec<f64>, Failure> {
    SurfaceSpec::pair_of_pants(b1, b2, b3).map_err(Failure::from)
}

fn cmd_spectrum(
    b1: f64,
    b2: f64,
    b3: f64,
    max_word_length: usize,
    format: Format,
    run: RunArgs,
) -> Result<(), Failure> {
    let spec = build_pants(b1, b2, b3)?;
    let s = spectrum(&spec, max_word_length)?;
    let payload = match format {
        Format::Csv => spectrum_to_csv(&s),
        Format::Json => {
            let mut text = serde_json::to_string_pretty(&spectrum_to_json(&s))
                .map_err(|e| Failure::new(4, format!("JSON encoding failed: {e}")))?;
            text.push('\n');
            text
        }
    };
    write_output(&run.out, &payload)?;
    eprintln!(
        "records={} completeness_length={}",
        s.records.len(),
        fmt_f64(s.completeness_length)
    );
    Ok(())
}

enum Identity {
    Bridgeman,
    Basmajian,
}

fn cmd_identity_table(
    b1: f64,
    b2: f64,
    b3: f64,
    bounds: String,
    run: RunArgs,
    which: Identity,
) -> Result<(), Failure> {
    let bounds: Vec<usize> = bounds
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| Failure::new(2, format!("bad word bound '{s}'")))
        })
        .collect::<Result<_, _>>()?;
    if bounds.is_empty() {
        return Err(Failure::new(2, "need at least one word bound"));
    }
    if bounds.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Failure::new(2, "bounds must be strictly increasing"));
    }
    let spec = build_pants(b1, b2, b3)?;
    let max_bound = *bounds.last().expect("non-empty");
    // canonical words are length-minimal, so truncating the deepest run
    // reproduces each shallower run exactly
    let s = spectrum(&spec, max_bound)?;
    let rhs = match which {
        Identity::Bridgeman => s.rhs,
        Identity::Basmajian => b1 + b2 + b3,
    };
    let mut out = String::from("bound,count,partial_sum,rhs,residual\n");
    let mut prev_sum = f64::NEG_INFINITY;
    let mut prev_residual = f64::INFINITY;
    let mut violation: Option<String> = None;
    for &bound in &bounds {
        let (count, bridgeman_sum, basmajian_sum) = s.truncated_partial_sums(bound);
        let partial = match which {
            Identity::Bridgeman => bridgeman_sum,
            Identity::Basmajian => basmajian_sum,
        };
        let residual = rhs - partial;
        writeln!(
            out,
            "{},{},{},{},{}",
            bound,
            count,
            fmt_f64(partial),
            fmt_f64(rhs),
            fmt_f64(residual)
        )
        .unwrap();
        if partial <= prev_sum {
            violation = Some(format!("partial sum not increasing at bound {bound}"));
        }
        if partial > rhs + 1e-9 {
            violation = Some(format!(
                "partial sum {partial} exceeds the limit {rhs} at bound {bound}"
            ));
        }
        if residual <= 0.0 || residual >= prev_residual {
            violation = Some(format!("residual not positive-decreasing at bound {bound}"));
        }
        prev_sum = partial;
        prev_residual = residual;
    }
    write_output(&run.out, &out)?;
    match violation {
        Some(msg) => Err(Failure::new(5, msg)),
        None => Ok(()),
    }
}

fn write_output(path: &Option<std::path::PathBuf>, payload: &str) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, payload)
            .map_err(|e| Failure::new(4, format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{payload}");
            Ok(())
        }
    }
}
