use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use hyperphasor::expr::{
    check, classify_groups, format_decimal, parse, render, sample, samples_to_csv, simplify, ExprError, ExprSum, Grid,
    RenderOptions, SimplifyOptions, DEFAULT_PRECISION,
};

const EXIT_ERROR: u8 = 1;
const EXIT_CHECK_FAILED: u8 = 2;
const EXIT_OVERFLOW: u8 = 3;

/// Canonicalize sums of circular and hyperbolic sinusoids.
#[derive(Parser)]
#[command(name = "hyperphasor", version)]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalArgs {
    /// Fractional digits in printed numbers
    #[arg(long, global = true, default_value_t = DEFAULT_PRECISION)]
    precision: usize,
    /// Print circular groups as sines instead of cosines
    #[arg(long, global = true)]
    sine_form: bool,
    /// Relative light-cone band for snapping hyperbolic groups to exponentials
    #[arg(long, global = true, default_value_t = 0.0)]
    eps: f64,
}

#[derive(Subcommand)]
enum Command {
    /// Print one canonical term per (family, frequency) group
    Simplify {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Evaluate the expression at a point
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long = "t", allow_hyphen_values = true, value_parser = literal)]
        t: f64,
    },
    /// Print the causal class of every hyperbolic group
    Classify {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Compare the expression with its simplified form on a grid
    Check {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, allow_hyphen_values = true, value_parser = literal, default_value_t = -10.0)]
        from: f64,
        #[arg(long, allow_hyphen_values = true, value_parser = literal, default_value_t = 10.0)]
        to: f64,
        #[arg(long, default_value_t = 101)]
        points: usize,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Print `t,value` CSV rows on a uniform grid
    Sample {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, allow_hyphen_values = true, value_parser = literal)]
        from: f64,
        #[arg(long, allow_hyphen_values = true, value_parser = literal)]
        to: f64,
        #[arg(long)]
        points: usize,
    },
}

/// A numeric flag value in the literal syntax of the expression grammar,
/// so `pi/2` and `-2e-3` are accepted.
fn literal(s: &str) -> Result<f64, String> {
    let e = parse(s).map_err(|e| e.to_string())?;
    match e.terms.as_slice() {
        [term] if term.is_constant() => Ok(term.coef),
        _ => Err(format!("`{s}` is not a number")),
    }
}

fn parse_expr(input: &str) -> Result<ExprSum, ExprError> {
    Ok(parse(input)?)
}

fn run(cli: Cli) -> Result<ExitCode, ExprError> {
    let render_opts = RenderOptions::with_precision(cli.global.precision);
    let simplify_opts = SimplifyOptions { sine_form: cli.global.sine_form, eps: cli.global.eps };
    if !(simplify_opts.eps >= 0.0 && simplify_opts.eps.is_finite()) {
        return Err(ExprError::Range(format!("--eps must be finite and nonnegative, got {}", simplify_opts.eps)));
    }
    match cli.command {
        Command::Simplify { expr } => {
            let e = parse_expr(&expr)?;
            println!("{}", render(&simplify(&e, &simplify_opts)?, &render_opts));
        }
        Command::Eval { expr, t } => {
            let value = parse_expr(&expr)?.eval(t)?;
            println!("{}", format_decimal(value, cli.global.precision));
        }
        Command::Classify { expr } => {
            let groups = classify_groups(&parse_expr(&expr)?, simplify_opts.eps)?;
            for g in groups {
                println!("omega={}: {}", format_decimal(g.omega, cli.global.precision), g.class);
            }
        }
        Command::Check { expr, from, to, points, tol } => {
            let e = parse_expr(&expr)?;
            let grid = Grid::new(from, to, points)?;
            let report = check(&e, &grid, tol, &simplify_opts)?;
            let sig = |x: f64| format!("{x:.3e}");
            println!("simplified: {}", render(&report.simplified, &render_opts));
            println!("points: {}", report.points);
            println!("max_abs: {}", sig(report.max_abs));
            println!("max_rel: {}", sig(report.max_rel));
            println!("tol: {}", sig(report.tol));
            if report.overflow_points > 0 {
                eprintln!("warning: {} grid points overflowed and were skipped", report.overflow_points);
            }
            println!("{}", if report.passed { "PASS" } else { "FAIL" });
            if !report.passed {
                return Ok(ExitCode::from(EXIT_CHECK_FAILED));
            }
        }
        Command::Sample { expr, from, to, points } => {
            let rows = sample(&parse_expr(&expr)?, from, to, points)?;
            print!("{}", samples_to_csv(&rows));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_ERROR) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                ExprError::Overflow => EXIT_OVERFLOW,
                ExprError::Parse(_) | ExprError::Range(_) => EXIT_ERROR,
            })
        }
    }
}
