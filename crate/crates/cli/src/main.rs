//! Command-line front end: hulls, obstruction checks, holomorphic
//! extension and shadow plots for Reinhardt domains.

mod commands;
mod svg;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

/// Exit codes: 0 ok/clean, 1 obstructed, 2 input or schema error,
/// 3 unsupported dimension, 4 no valid torus, 5 no dominating torus.
#[derive(Debug)]
pub enum Failure {
    Input(String),
    UnsupportedDimension(String),
    NoValidTorus(String),
    NoDominatingTorus(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::UnsupportedDimension(_) => 3,
            Failure::NoValidTorus(_) => 4,
            Failure::NoDominatingTorus(_) => 5,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m)
            | Failure::UnsupportedDimension(m)
            | Failure::NoValidTorus(m)
            | Failure::NoDominatingTorus(m) => m,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Parser)]
#[command(
    name = "reinhardt",
    about = "Reinhardt domain hulls, Laurent obstruction checks and certified holomorphic extension",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the complete hull and the log-convex complete hull
    Envelope {
        /// Domain: a JSON file path or a builtin name (see list-domains)
        #[arg(long)]
        domain: String,
        /// Output path for the hull JSON; an .svg sibling is written for
        /// two-dimensional domains. Stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sample tori shrinking toward the origin and test negative-index
    /// Laurent coefficients; exit 0 when clean, 1 when obstructed
    Check {
        #[arg(long)]
        domain: String,
        /// Function: a builtin name (see list-functions)
        #[arg(long)]
        function: String,
        /// Grid size per axis (power of two)
        #[arg(long, default_value_t = 64)]
        grid: usize,
        /// Relative tolerance for the vanishing verdict
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// "auto" or a JSON list of radius vectors, e.g. [[0.3,0.6]]
        #[arg(long, default_value = "auto")]
        tori: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Evaluate the holomorphic extension at a target point
    Extend {
        #[arg(long)]
        domain: String,
        #[arg(long)]
        function: String,
        /// Target point: JSON, e.g. [0.5,0.25] or [[0.5,0],[0.25,0]]
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 128)]
        grid: usize,
        /// Taylor truncation degree (must satisfy degree < grid/2)
        #[arg(long, default_value_t = 40)]
        degree: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render the modulus and log shadows with hull overlays as SVG
    Plot {
        #[arg(long)]
        domain: String,
        /// "auto", "none", or a JSON list of radius vectors
        #[arg(long, default_value = "auto")]
        tori: String,
        #[arg(long, default_value_t = 64)]
        grid: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List builtin domains
    ListDomains,
    /// List builtin functions
    ListFunctions,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Envelope { domain, out } => commands::cmd_envelope(&domain, out.as_deref()),
        Command::Check {
            domain,
            function,
            grid,
            tol,
            tori,
            seed,
            out,
            format,
        } => commands::cmd_check(&domain, &function, grid, tol, &tori, seed, out.as_deref(), format),
        Command::Extend {
            domain,
            function,
            target,
            grid,
            degree,
            out,
        } => commands::cmd_extend(&domain, &function, &target, grid, degree, out.as_deref()),
        Command::Plot {
            domain,
            tori,
            grid,
            seed,
            out,
        } => commands::cmd_plot(&domain, &tori, grid, seed, out.as_deref()),
        Command::ListDomains => commands::cmd_list_domains(),
        Command::ListFunctions => commands::cmd_list_functions(),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
