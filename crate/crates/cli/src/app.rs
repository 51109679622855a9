//! Argument handling and subcommand dispatch.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use w22_core::verify::{self, Options, SuiteId};
use w22_core::{GenKind, TwistConfig, VerificationReport};

use crate::error::CliError;
use crate::eval::{Evaluator, Value};
use crate::expr;
use crate::output;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "w22",
    version,
    about = "Exact Drinfeld-twist computations on U(W(2,2))[[t]]"
)]
struct Cli {
    /// Truncation order N: series are computed modulo t^{N+1}.
    #[arg(long, global = true, default_value_t = 4)]
    order: usize,
    /// Twist generator kind, X = L_{n0} or X = W_{n0}.
    #[arg(long, global = true, default_value = "L")]
    twist: GenKind,
    /// Index n0 of the twist generator (nonzero).
    #[arg(
        long,
        global = true,
        default_value_t = 1,
        allow_negative_numbers = true
    )]
    n0: i64,
    /// Seed for the randomized suites.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate an expression.
    Compute {
        #[arg(long)]
        expr: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run verification suites.
    Verify {
        /// `all` or one of: lie, 1.1, hopf0, 2.1 to 2.6, thm1.4, thm1.5.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        report: ReportFormat,
    },
    /// Print one t-coefficient of an expression.
    Expand {
        #[arg(long)]
        expr: String,
        #[arg(long)]
        degree: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

fn config(cli: &Cli, order: usize) -> Result<TwistConfig, CliError> {
    Ok(TwistConfig::new(cli.n0, cli.twist, order)?)
}

fn render(e: &expr::Expr, ev: &Evaluator, v: &Value, format: Format) -> String {
    match format {
        Format::Text => output::text(v),
        Format::Json => serde_json::to_string_pretty(&v.to_json()).expect("serializable"),
        Format::Latex => output::latex(e, ev.quantization(), v),
    }
}

fn compute(cli: &Cli, text: &str, format: Format) -> Result<String, CliError> {
    let e = expr::parse(text)?;
    let ev = Evaluator::new(config(cli, cli.order)?);
    let v = ev.eval(&e)?;
    Ok(render(&e, &ev, &v, format))
}

fn expand(cli: &Cli, text: &str, degree: usize, format: Format) -> Result<String, CliError> {
    let e = expr::parse(text)?;
    let ev = Evaluator::new(config(cli, cli.order.max(degree))?);
    let v = ev.eval(&e)?;
    let coeff = Value {
        series: false,
        data: v.data.coefficient(degree),
    };
    Ok(match format {
        Format::Latex => output::latex_value(&coeff),
        _ => render(&e, &ev, &coeff, format),
    })
}

fn report_text(reports: &[VerificationReport]) -> String {
    let mut out = Vec::new();
    for r in reports {
        out.push(r.summary());
        for c in r.failures() {
            out.push(format!("  FAIL {}: {}", c.id, c.detail));
        }
    }
    out.join("\n")
}

fn verify(cli: &Cli, suite: &str, format: ReportFormat) -> Result<(String, bool), CliError> {
    let opts = cli.seed.map(Options::with_seed).unwrap_or_default();
    let (reports, single) = if suite == "all" {
        (
            verify::run_all(&verify::default_configs(cli.order), &opts),
            false,
        )
    } else {
        let id: SuiteId = suite.parse()?;
        let cfg = config(cli, cli.order)?;
        (vec![verify::run_suite(id, &cfg, &opts)?], true)
    };
    let passed = verify::all_passed(&reports);
    let text = match format {
        ReportFormat::Text => report_text(&reports),
        ReportFormat::Json if single => {
            serde_json::to_string_pretty(&reports[0]).expect("serializable")
        }
        ReportFormat::Json => serde_json::to_string_pretty(&reports).expect("serializable"),
    };
    Ok((text, passed))
}

/// Runs the command line `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let result = match &cli.command {
        Command::Compute { expr, format } => compute(&cli, expr, *format).map(|s| (s, true)),
        Command::Expand {
            expr,
            degree,
            format,
        } => expand(&cli, expr, *degree, *format).map(|s| (s, true)),
        Command::Verify { suite, report } => verify(&cli, suite, *report),
    };
    match result {
        Ok((text, passed)) => {
            let _ = writeln!(out, "{text}");
            if passed {
                EXIT_OK
            } else {
                EXIT_FAILED
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
