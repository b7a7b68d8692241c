use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rainbow_torus::bounds::bound_set;
use rainbow_torus::oracle::{Budget, EngineChoice};
use rainbow_torus::patterns::{construct_upper, Recipe};
use rainbow_torus::verify;
use rainbow_torus_cli::error::{CliError, CliResult};
use rainbow_torus_cli::exec::{exact_timed, ExactJson};
use rainbow_torus_cli::format::{self, Format};
use rainbow_torus_cli::report::{self, ReportId};
use rainbow_torus_cli::sweep::{self, parse_range, SweepOptions};
use serde_json::json;

#[derive(Parser)]
#[command(name = "rainbow-torus", version, about = "2-rainbow domination on discrete tori C_m x C_n")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print a valid assignment meeting the best known upper bound
    Construct {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// F1, F2, PROP42, PROP43, PROP45_B1..PROP45_B5, PROP46, PROP47 or TRANSPOSE_OF(..)
        #[arg(long)]
        recipe: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Check an assignment read from a file, or stdin for `-`
    Verify {
        path: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Number of colors for grid input
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// Compute the exact rainbow domination number
    Exact {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// auto, brute or dp
        #[arg(long, default_value = "auto")]
        engine: String,
        /// Include an optimal assignment in the output
        #[arg(long)]
        witness: bool,
    },
    /// Lower and upper bounds and any known exact value
    Bounds {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// CSV of bounds, constructions and exact values over ranges like 3..10
    Sweep {
        #[arg(long)]
        m: String,
        #[arg(long)]
        n: String,
        /// Output file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        /// Skip the exact column
        #[arg(long)]
        no_exact: bool,
    },
    /// Print one of the tables
    Report {
        #[arg(value_enum)]
        id: ReportId,
        /// Range of n (known-table and conjecture)
        #[arg(long)]
        n: Option<String>,
        /// Range of m (conjecture, default 3..4)
        #[arg(long)]
        m: Option<String>,
        #[arg(long)]
        json: bool,
    },
}

fn range(s: Option<&str>, default: &str) -> CliResult<std::ops::RangeInclusive<usize>> {
    parse_range(s.unwrap_or(default)).map_err(CliError::Usage)
}

fn read_input(path: &str) -> CliResult<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        Ok(fs::read_to_string(path)?)
    }
}

fn pretty(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).unwrap() + "\n"
}

fn run(cli: Cli) -> CliResult<String> {
    match cli.cmd {
        Cmd::Construct { m, n, recipe, format } => {
            let recipe: Option<Recipe> = recipe.map(|r| r.parse()).transpose()?;
            let c = construct_upper(m, n, recipe.as_ref())?;
            Ok(format::render(&c.assignment, format))
        }
        Cmd::Verify { path, format, k } => {
            let a = format::parse(&read_input(&path)?, format, k)?;
            let rep = verify(&a);
            let violations: Vec<_> = rep
                .violations
                .iter()
                .map(|v| json!({"vertex": [v.vertex.0, v.vertex.1], "missing": v.missing.colors().collect::<Vec<_>>()}))
                .collect();
            Ok(pretty(&json!({
                "valid": rep.valid,
                "weight": rep.weight,
                "violations": violations,
                "profile": rep.profile.sums(),
                "lemma33_ok": rep.lemma33_ok,
            })))
        }
        Cmd::Exact { m, n, k, engine, witness } => {
            let engine: EngineChoice = engine.parse()?;
            let t = exact_timed(m, n, k, engine, &Budget::default())?;
            Ok(pretty(&ExactJson::new(&t, witness)))
        }
        Cmd::Bounds { m, n } => {
            let b = bound_set(m, n)?;
            Ok(pretty(&json!({
                "m": b.m,
                "n": b.n,
                "lower": b.lower,
                "ub1": b.ub1,
                "ub2": b.ub2,
                "ub1_transposed": b.ub1_t,
                "ub2_transposed": b.ub2_t,
                "best_upper": b.best_upper,
                "best_kind": b.best_kind.label(),
                "known_exact": b.known_exact,
                "known_gamma": b.known_gamma,
            })))
        }
        Cmd::Sweep { m, n, out, no_exact } => {
            let ms = parse_range(&m).map_err(CliError::Usage)?;
            let ns = parse_range(&n).map_err(CliError::Usage)?;
            let opts = SweepOptions { exact: !no_exact, ..SweepOptions::default() };
            let rows = sweep::sweep(ms, ns, &opts)?;
            match out {
                Some(path) => {
                    sweep::write_csv(&rows, fs::File::create(path)?)?;
                    Ok(String::new())
                }
                None => {
                    let mut buf = Vec::new();
                    sweep::write_csv(&rows, &mut buf)?;
                    Ok(String::from_utf8(buf).unwrap())
                }
            }
        }
        Cmd::Report { id, n, m, json } => match id {
            ReportId::KnownTable => {
                let t = report::known_table(range(n.as_deref(), "3..16")?);
                Ok(if json { pretty(&t) } else { t.render() })
            }
            ReportId::UbComparison => {
                let t = report::ub_comparison();
                Ok(if json { pretty(&t) } else { t.render() })
            }
            ReportId::Conjecture => {
                let t = report::conjecture(
                    range(m.as_deref(), "3..4")?,
                    range(n.as_deref(), "3..12")?,
                    &Budget::default(),
                )?;
                Ok(if json { pretty(&t) } else { t.render() })
            }
        },
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            // A closed pipe is not worth reporting.
            let _ = stdout.write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
