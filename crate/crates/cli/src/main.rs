//! `stefan`: similarity solutions for one-phase melting with a
//! space-dependent latent heat, from the command line.

// NaN-rejecting comparisons (`!(x > 0.0)`) are deliberate in validators.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use stefan_cli::formats;
use stefan_cli::sweep::Sweep;
use stefan_core::exact::{solve_exact_dirichlet, solve_exact_robin};
use stefan_core::hbim::{solve_p1, solve_p1h, solve_p2, solve_p2h, solve_p3, solve_p3h};
use stefan_core::leastsq::{solve_p4, solve_p4h};
use stefan_core::problem::{
    Boundary, MethodKind, ProblemParams, Scheme, SimilaritySolution, SolveError,
};
use stefan_core::report::{convergence_sweep, sample_field, table_convective, table_dirichlet};

#[derive(Parser)]
#[command(
    name = "stefan",
    version,
    about = "One-phase Stefan problems with space-dependent latent heat: exact and integral-method similarity solutions",
    after_help = "Methods: exact, p1 (classical HBIM), p2 (modified HBIM), p3 (RIM), p4 (least squares)\n\
                  and their Robin-face counterparts exacth, p1h, p2h, p3h, p4h."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format (also via the STEFAN_FORMAT environment variable)
    #[arg(long, value_enum, env = "STEFAN_FORMAT", default_value = "csv")]
    format: Format,
    /// Output path; standard output when omitted
    #[arg(long, allow_negative_numbers = true)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ScaleArgs {
    /// Temperature scale theta_inf
    #[arg(long, default_value_t = 1.0)]
    theta_inf: f64,
    /// Diffusion length scale a
    #[arg(long, default_value_t = 1.0)]
    a_diff: f64,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one problem variant and emit nu, A, B
    Solve {
        /// Method name (see --help footer)
        #[arg(long, allow_negative_numbers = true)]
        method: String,
        /// Latent-heat exponent, alpha >= 0
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        /// Generalized Stefan number, Ste > 0
        #[arg(long, allow_negative_numbers = true)]
        ste: f64,
        /// Biot number (required by the Robin-face methods)
        #[arg(long, allow_negative_numbers = true)]
        bi: Option<f64>,
        #[command(flatten)]
        scales: ScaleArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Accuracy table: exact front coefficient vs approximate methods
    Table {
        /// Latent-heat exponent, alpha >= 0
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        /// Stefan number: value, comma list, or lo:hi:step
        #[arg(long, allow_negative_numbers = true)]
        ste: Sweep,
        /// Biot sweep; selects the convective table (then --ste must be
        /// a single value)
        #[arg(long, allow_negative_numbers = true)]
        bi: Option<Sweep>,
        /// Comma-separated methods: p1..p4 for a Ste sweep, p1h..p4h for
        /// a Bi sweep
        #[arg(long, value_delimiter = ',')]
        methods: Vec<String>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Biot-convergence sweep of a Robin method toward its Dirichlet limit
    Converge {
        /// Latent-heat exponent, alpha >= 0
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        /// Generalized Stefan number, Ste > 0
        #[arg(long, allow_negative_numbers = true)]
        ste: f64,
        /// Strictly increasing Biot sweep
        #[arg(long, allow_negative_numbers = true)]
        bi: Sweep,
        /// Robin-face method: exacth, p1h, p2h, p3h or p4h
        #[arg(long, allow_negative_numbers = true)]
        method: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Temperature field sampled over an (x, t) rectangle
    Field {
        /// Method name (see --help footer)
        #[arg(long, allow_negative_numbers = true)]
        method: String,
        /// Latent-heat exponent, alpha >= 0
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        /// Generalized Stefan number, Ste > 0
        #[arg(long, allow_negative_numbers = true)]
        ste: f64,
        /// Biot number (required by the Robin-face methods)
        #[arg(long, allow_negative_numbers = true)]
        bi: Option<f64>,
        #[command(flatten)]
        scales: ScaleArgs,
        /// Right edge of the sampled x range
        #[arg(long, allow_negative_numbers = true)]
        x_max: f64,
        /// Start of the sampled time range, > 0
        #[arg(long, allow_negative_numbers = true)]
        t_min: f64,
        /// End of the sampled time range
        #[arg(long, allow_negative_numbers = true)]
        t_max: f64,
        /// Samples along x
        #[arg(long, default_value_t = 100)]
        nx: usize,
        /// Samples along t
        #[arg(long, default_value_t = 100)]
        nt: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
}

enum CliError {
    /// Bad arguments: exit 2.
    Usage(String),
    /// A solver failed on validated input: exit 1.
    Solver(String),
}

fn usage<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Usage(e.to_string())
}

fn parse_method(name: &str) -> Result<MethodKind, CliError> {
    MethodKind::parse(name).ok_or_else(|| CliError::Usage(format!("unknown method `{name}`")))
}

fn build_params(
    alpha: f64,
    ste: f64,
    bi: Option<f64>,
    scales: &ScaleArgs,
    needs_bi: bool,
) -> Result<ProblemParams, CliError> {
    if needs_bi && bi.is_none() {
        return Err(CliError::Usage("this method requires --bi".into()));
    }
    let mut p = ProblemParams::dirichlet(alpha, ste).map_err(usage)?;
    p.bi = bi;
    p = p
        .with_scales(scales.theta_inf, scales.a_diff)
        .map_err(usage)?;
    p.validate().map_err(usage)?;
    Ok(p)
}

fn solve_any(p: &ProblemParams, kind: MethodKind) -> Result<SimilaritySolution, SolveError> {
    match (kind.scheme, kind.boundary) {
        (Scheme::Exact, Boundary::Dirichlet) => solve_exact_dirichlet(p),
        (Scheme::Exact, Boundary::Robin) => solve_exact_robin(p),
        (Scheme::ClassicalHbim, Boundary::Dirichlet) => solve_p1(p).map(|c| c.solution),
        (Scheme::ClassicalHbim, Boundary::Robin) => solve_p1h(p).map(|c| c.solution),
        (Scheme::ModifiedHbim, Boundary::Dirichlet) => solve_p2(p),
        (Scheme::ModifiedHbim, Boundary::Robin) => solve_p2h(p),
        (Scheme::Rim, Boundary::Dirichlet) => solve_p3(p),
        (Scheme::Rim, Boundary::Robin) => solve_p3h(p),
        (Scheme::LeastSquares, Boundary::Dirichlet) => solve_p4(p).map(|l| l.solution),
        (Scheme::LeastSquares, Boundary::Robin) => solve_p4h(p).map(|l| l.solution),
    }
}

/// Table methods must be approximate and match the sweep's boundary.
fn table_schemes(methods: &[String], boundary: Boundary) -> Result<Vec<Scheme>, CliError> {
    methods
        .iter()
        .map(|name| {
            let kind = parse_method(name)?;
            if kind.scheme == Scheme::Exact {
                return Err(CliError::Usage(format!(
                    "`{name}` is the table's reference column; pick approximate methods"
                )));
            }
            if kind.boundary != boundary {
                let axis = match boundary {
                    Boundary::Dirichlet => "a Ste sweep takes Dirichlet methods (p1..p4)",
                    Boundary::Robin => "a Bi sweep takes Robin methods (p1h..p4h)",
                };
                return Err(CliError::Usage(format!(
                    "method `{name}` does not fit: {axis}"
                )));
            }
            Ok(kind.scheme)
        })
        .collect()
}

fn run(command: Command) -> Result<(String, OutputArgs), CliError> {
    match command {
        Command::Solve {
            method,
            alpha,
            ste,
            bi,
            scales,
            out,
        } => {
            let kind = parse_method(&method)?;
            let p = build_params(alpha, ste, bi, &scales, kind.boundary == Boundary::Robin)?;
            let sol = solve_any(&p, kind).map_err(|e| CliError::Solver(e.to_string()))?;
            let doc = match out.format {
                Format::Csv => formats::solve_csv(&sol),
                Format::Json => formats::solve_json(&sol),
            };
            Ok((doc, out))
        }
        Command::Table {
            alpha,
            ste,
            bi,
            methods,
            out,
        } => {
            let rows = match bi {
                Some(bi_sweep) => {
                    if !ste.is_scalar() {
                        return Err(CliError::Usage(
                            "exactly one sweep axis: with --bi sweeping, --ste must be a single value".into(),
                        ));
                    }
                    let schemes = table_schemes(&methods, Boundary::Robin)?;
                    for &b in bi_sweep.values() {
                        if !(b > 0.0) {
                            return Err(CliError::Usage(format!("Bi must be > 0, got {b}")));
                        }
                    }
                    table_convective(alpha, ste.values()[0], bi_sweep.values(), &schemes)
                }
                None => {
                    let schemes = table_schemes(&methods, Boundary::Dirichlet)?;
                    for &s in ste.values() {
                        ProblemParams::dirichlet(alpha, s).map_err(usage)?;
                    }
                    table_dirichlet(alpha, ste.values(), &schemes)
                }
            }
            .map_err(|e| CliError::Solver(e.to_string()))?;
            let doc = match out.format {
                Format::Csv => formats::table_csv(&rows),
                Format::Json => formats::table_json(&rows),
            };
            Ok((doc, out))
        }
        Command::Converge {
            alpha,
            ste,
            bi,
            method,
            out,
        } => {
            let kind = parse_method(&method)?;
            if kind.boundary != Boundary::Robin {
                return Err(CliError::Usage(format!(
                    "converge sweeps a Robin-face method (exacth, p1h..p4h), got `{method}`"
                )));
            }
            let grid = bi.values();
            if !grid.windows(2).all(|w| w[0] < w[1]) {
                return Err(CliError::Usage(
                    "--bi sweep must be strictly increasing".into(),
                ));
            }
            for &b in grid {
                if !(b > 0.0) {
                    return Err(CliError::Usage(format!("Bi must be > 0, got {b}")));
                }
            }
            ProblemParams::dirichlet(alpha, ste).map_err(usage)?;
            let points = convergence_sweep(alpha, ste, grid, kind.scheme)
                .map_err(|e| CliError::Solver(e.to_string()))?;
            let doc = match out.format {
                Format::Csv => formats::convergence_csv(&points),
                Format::Json => formats::convergence_json(&points),
            };
            Ok((doc, out))
        }
        Command::Field {
            method,
            alpha,
            ste,
            bi,
            scales,
            x_max,
            t_min,
            t_max,
            nx,
            nt,
            out,
        } => {
            let kind = parse_method(&method)?;
            let p = build_params(alpha, ste, bi, &scales, kind.boundary == Boundary::Robin)?;
            if !(x_max > 0.0) {
                return Err(CliError::Usage(format!("--x-max must be > 0, got {x_max}")));
            }
            if !(t_min > 0.0 && t_min <= t_max) {
                return Err(CliError::Usage(format!(
                    "time range must satisfy 0 < t_min <= t_max, got [{t_min}, {t_max}]"
                )));
            }
            if nx < 2 || nt < 2 {
                return Err(CliError::Usage("--nx and --nt must be at least 2".into()));
            }
            let sol = solve_any(&p, kind).map_err(|e| CliError::Solver(e.to_string()))?;
            let grid = sample_field(&p, &sol, x_max, (t_min, t_max), nx, nt)
                .map_err(|e| CliError::Solver(e.to_string()))?;
            let doc = match out.format {
                Format::Csv => formats::field_csv(&grid),
                Format::Json => formats::field_json(&grid),
            };
            Ok((doc, out))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((doc, out)) => {
            if let Some(path) = out.output {
                if let Err(e) = std::fs::write(&path, doc) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(1);
                }
            } else {
                print!("{doc}");
            }
            ExitCode::SUCCESS
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Solver(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
