//! Argument parsing and exit-code mapping for the `envelope` binary.
//! Exit codes: 0 all checks pass, 1 a verification check failed, 2 usage
//! or parse error.

use clap::{Parser, Subcommand};
use envelope_cli::{output, Outcome};

#[derive(Parser)]
#[command(
    name = "envelope",
    about = "Exact-arithmetic workbench for enveloping algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse an algebra file and check the Jacobi identity and declared weights
    Check {
        /// Path to a `.lie` file
        file: String,
        /// Emit JSON instead of a text summary
        #[arg(long)]
        json: bool,
    },
    /// Evaluate an element expression and print its canonical form
    Eval {
        /// Path to a `.lie` file
        file: String,
        /// Expression over the basis names
        expression: String,
        /// Evaluation mode: pbw, trunc, abelian, or a2
        #[arg(long, default_value = "pbw")]
        mode: String,
        /// Weight cutoff for trunc mode
        #[arg(long)]
        cutoff: Option<u32>,
    },
    /// Basis of the primitive elements on a degree window
    Primitives {
        file: String,
        /// Window degree bound
        #[arg(long, default_value_t = 4)]
        degree: usize,
    },
    /// Decide membership of an element in U(L)·J
    Membership {
        file: String,
        expression: String,
        /// Comma-separated linear combinations of basis elements spanning J
        #[arg(long)]
        ideal: String,
    },
    /// Check a tower description: stage dimensions and bonding coherence
    Tower {
        file: String,
        /// Window degree for the coherence checks
        #[arg(long, default_value_t = 3)]
        degree: usize,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate the unital algebra morphisms K^n into the split example algebra
    CensusA2 { n: usize },
    /// Run the named invariant suites over the bundled corpus
    Verify {
        /// Suite selector (repeatable); all suites when omitted
        #[arg(long = "suite")]
        suites: Vec<String>,
        /// Seed for the randomized checks
        #[arg(long, default_value_t = envelope_cli::DEFAULT_SEED)]
        seed: u64,
        /// Emit the JSON report instead of the text summary
        #[arg(long)]
        json: bool,
    },
}

fn run(cli: Cli) -> Result<(String, bool), envelope_cli::CliError> {
    let render = |o: &Outcome| output::render(&o.value);
    match cli.command {
        Command::Check { file, json } => {
            let o = envelope_cli::cmd_check(&file)?;
            let text = if json {
                render(&o)
            } else {
                let mut s = format!("{}: dimension {}\n", file, o.value["dimension"]);
                for c in o.value["checks"].as_array().into_iter().flatten() {
                    s.push_str(&format!(
                        "{:<4} {} ({})\n",
                        c["status"].as_str().unwrap_or("?").to_uppercase(),
                        c["name"].as_str().unwrap_or("?"),
                        c["detail"].as_str().unwrap_or(""),
                    ));
                }
                s
            };
            Ok((text, o.failed))
        }
        Command::Eval {
            file,
            expression,
            mode,
            cutoff,
        } => {
            let o = envelope_cli::cmd_eval(&file, &expression, &mode, cutoff)?;
            Ok((render(&o), o.failed))
        }
        Command::Primitives { file, degree } => {
            let o = envelope_cli::cmd_primitives(&file, degree)?;
            Ok((render(&o), o.failed))
        }
        Command::Membership {
            file,
            expression,
            ideal,
        } => {
            let o = envelope_cli::cmd_membership(&file, &expression, &ideal)?;
            Ok((render(&o), o.failed))
        }
        Command::Tower { file, degree, json } => {
            let o = envelope_cli::cmd_tower(&file, degree)?;
            let text = if json {
                render(&o)
            } else {
                output::render(&o.value)
            };
            Ok((text, o.failed))
        }
        Command::CensusA2 { n } => {
            let o = envelope_cli::cmd_census_a2(n)?;
            Ok((render(&o), o.failed))
        }
        Command::Verify { suites, seed, json } => {
            let o = envelope_cli::cmd_verify(&suites, seed)?;
            let text = if json {
                render(&o)
            } else {
                envelope_cli::render_report_text(&o.value)
            };
            Ok((text, o.failed))
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok((text, failed)) => {
            // tolerate a closed pipe (e.g. piping into `head`)
            use std::io::Write;
            let mut stdout = std::io::stdout();
            let _ = stdout.write_all(text.as_bytes());
            if !text.ends_with('\n') {
                let _ = stdout.write_all(b"\n");
            }
            std::process::exit(if failed { 1 } else { 0 });
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
}
