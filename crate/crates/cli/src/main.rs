use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use morse_pencil_cli::{commands, ExitCode, OutputFormat, RunConfig};
use num_complex::Complex64;

/// Topology of plane curves through pencils, Morse complexes and branched covers.
#[derive(Debug, Parser)]
#[command(name = "morse-pencil", version)]
struct Cli {
    /// Backward-error tolerance for root refinement.
    #[arg(long = "tol", global = true, default_value_t = 1e-12, allow_hyphen_values = true)]
    tol: f64,
    /// Iteration budget for root refinement.
    #[arg(long = "max-iter", global = true, default_value_t = 200)]
    max_iter: usize,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Seed for randomized suggestions.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Plane curve analysis.
    Curve {
        #[command(subcommand)]
        action: CurveAction,
    },
    /// Homology of an integer chain complex.
    Homology { file: PathBuf },
    /// Riemann-Hurwitz genus of a branched cover.
    Rh { file: PathBuf },
    /// Split the degenerate critical point of z^n by z^n - t z.
    Perturb {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        epsilon: f64,
        /// Complex value such as `0.01`, `1e-3-2e-4i` or `0.5i`.
        #[arg(long, allow_hyphen_values = true)]
        t: Complex64,
    },
    /// Index of the Hessian 2[[aI, bI], [bI, -aI]].
    Hessian {
        #[arg(long, allow_hyphen_values = true)]
        a: f64,
        #[arg(long, allow_hyphen_values = true)]
        b: f64,
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
}

#[derive(Debug, Subcommand)]
enum CurveAction {
    /// Smoothness, critical locus, Lefschetz test, cell counts and genus.
    Analyze { file: PathBuf },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            let code = if e.use_stderr() { ExitCode::InputError.code() } else { 0 };
            std::process::exit(code);
        }
    };
    let config = RunConfig {
        tolerance: cli.tol,
        max_iterations: cli.max_iter,
        output_format: cli.format,
        seed: cli.seed,
    };
    if let Err(msg) = config.validate() {
        eprintln!("error: {msg}");
        std::process::exit(ExitCode::InputError.code());
    }
    let outcome = match &cli.command {
        Command::Curve {
            action: CurveAction::Analyze { file },
        } => commands::curve_analyze(file, &config),
        Command::Homology { file } => commands::homology_cmd(file, &config),
        Command::Rh { file } => commands::rh(file, &config),
        Command::Perturb { n, epsilon, t } => commands::perturb(*n, *epsilon, *t, &config),
        Command::Hessian { a, b, n } => commands::hessian(*a, *b, *n, &config),
    };
    let rendered = match config.output_format {
        OutputFormat::Machine => outcome.report.render_machine(),
        OutputFormat::Text => outcome.report.render_text(),
    };
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(rendered.as_bytes());
    let _ = stdout.flush();
    std::process::exit(outcome.exit.code());
}
