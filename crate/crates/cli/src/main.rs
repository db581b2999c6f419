//! Command-line entry point: verifies built-in example pencils against
//! their claims, analyzes pencil files, and lists the catalogue.
//!
//! Exit codes: 0 when every executed check passes (or an analysis
//! completes), 1 when any check fails or errors, 2 for usage problems:
//! unknown ids or checks, unreadable or unparseable files, bad lambda.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;

use symmetroid::pencil::parse_pencil_file;
use symmetroid_cli::analyze::analyze;
use symmetroid_cli::checks::run_checks;
use symmetroid_cli::registry::{examples, resolve};
use symmetroid_cli::report::{CheckStatus, VerifyReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
}

#[derive(Parser)]
#[command(name = "symmetroid", version, about = "Exact verification of quartic symmetroid pencils")]
struct Cli {
    #[command(subcommand)]
    command: Commands,
}

#[derive(Subcommand)]
enum Commands {
    /// Run a built-in example's checks and report pass/fail per claim
    Verify {
        /// Example id; see `list-examples`
        id: String,
        /// Rational parameter for the lambda family, e.g. -3/4
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        /// Seed for all randomized searches
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Output format
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
        /// Comma-separated subset of checks to run
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<String>>,
    },
    /// Analyze a pencil file: determinant, cone test, rank profile, base
    /// locus, spectrahedron probes
    Analyze {
        /// Path to a pencil file (n=<count> header, then A<i>: blocks)
        file: String,
        /// Seed for all randomized searches
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Candidate budget for the definite-point search
        #[arg(long, default_value_t = 200)]
        budget: usize,
        /// Output format
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// List the built-in examples
    ListExamples {
        /// Output format
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Commands::Verify { id, lambda, seed, format, only } => {
            cmd_verify(&id, lambda.as_deref(), seed, format, only.as_deref())
        }
        Commands::Analyze { file, seed, budget, format } => {
            cmd_analyze(&file, seed, budget, format)
        }
        Commands::ListExamples { format } => cmd_list(format),
    }
}

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn parse_lambda(text: &str) -> Result<BigRational, String> {
    let mut parts = text.splitn(2, '/');
    let numer: BigInt = parts
        .next()
        .unwrap_or_default()
        .trim()
        .parse()
        .map_err(|_| format!("bad lambda '{text}': expected an integer or p/q"))?;
    let denom: BigInt = match parts.next() {
        Some(d) => d
            .trim()
            .parse()
            .map_err(|_| format!("bad lambda '{text}': expected an integer or p/q"))?,
        None => BigInt::from(1),
    };
    if denom == BigInt::from(0) {
        return Err(format!("bad lambda '{text}': zero denominator"));
    }
    Ok(BigRational::new(numer, denom))
}

fn cmd_verify(
    id: &str,
    lambda: Option<&str>,
    seed: u64,
    format: Format,
    only: Option<&[String]>,
) -> ExitCode {
    let lambda = match lambda.map(parse_lambda).transpose() {
        Ok(l) => l,
        Err(e) => return usage_error(&e),
    };
    let example = match resolve(id, lambda.as_ref()) {
        Ok(e) => e,
        Err(e) => return usage_error(&e),
    };
    let records = match run_checks(&example, seed, only) {
        Ok(r) => r,
        Err(e) => return usage_error(&e),
    };
    let passed = records.iter().all(|r| r.status == CheckStatus::Pass);
    let report = VerifyReport {
        id: example.id.clone(),
        seed,
        lambda: example.lambda.as_ref().map(|l| l.to_string()),
        version: env!("CARGO_PKG_VERSION").to_string(),
        passed,
        checks: records,
    };
    match format {
        Format::Human => print!("{}", report.render_human()),
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("report serializes")
        ),
    }
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_analyze(file: &str, seed: u64, budget: usize, format: Format) -> ExitCode {
    let text = match std::fs::read_to_string(file) {
        Ok(t) => t,
        Err(e) => return usage_error(&format!("cannot read '{file}': {e}")),
    };
    let pencil = match parse_pencil_file(&text) {
        Ok(p) => p,
        Err(e) => return usage_error(&format!("cannot parse '{file}': {e}")),
    };
    let report = analyze(&pencil, file, seed, budget);
    match format {
        Format::Human => print!("{}", report.render_human()),
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("report serializes")
        ),
    }
    ExitCode::SUCCESS
}

fn cmd_list(format: Format) -> ExitCode {
    let catalogue = examples();
    match format {
        Format::Human => {
            for info in catalogue {
                let lambda = if info.takes_lambda { " (takes --lambda)" } else { "" };
                println!("{:<14} {}{}", info.id, info.summary, lambda);
            }
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = catalogue
                .iter()
                .map(|info| {
                    serde_json::json!({
                        "id": info.id,
                        "summary": info.summary,
                        "takes_lambda": info.takes_lambda,
                    })
                })
                .collect();
            println!(
                "{}",
                serde_json::to_string_pretty(&rows).expect("catalogue serializes")
            );
        }
    }
    ExitCode::SUCCESS
}
