//! The `dovesat` command-line tool.
//!
//! Exit codes are a stable contract:
//!
//! * `prove` — 0 the statement was proved, 1 it was refuted, 2 the budget
//!   ran out undecided;
//! * `degree` — 0 a degree was established, 2 the ladder exhausted;
//! * `search` — 0 the search terminated with a verified result, 2 it
//!   exhausted its budget;
//! * `check-consistency` — 0 no contradiction found, 1 witness found;
//! * `bench` — 0 every scenario satisfied its bound, 1 any violation;
//! * 10 — usage, file or parse errors, for every command.
//!
//! All reports are byte-reproducible given the same inputs: nothing here
//! reads clocks, paths are the only environment touched, and warnings go
//! to stderr so stdout stays a clean artifact.

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use dovesat::degrees::{reachability_degree, unknowability_degree};
use dovesat::prover::{prove_default, ProverOutcome, QueryHint};
use dovesat::scenario::{generate_scenarios, rows_to_csv};
use dovesat::search::{bound_report, dovetail_search, SearchOutcome};
use dovesat::statement::Statement;
use dovesat::sweeps::run_scenarios;
use dovesat::system::{bounded_consistency_probe, ConsistencyReport, FormalSystem, LoadedSystem};
use dovesat::vm::Program;
use dovesat::Proof;
use serde::Deserialize;
use std::fs;
use std::process::ExitCode;

const EXIT_OK: u8 = 0;
const EXIT_NEGATIVE: u8 = 1;
const EXIT_EXHAUSTED: u8 = 2;
const EXIT_USAGE: u8 = 10;

const DEFAULT_SEARCH_FUEL: u64 = 1_000_000;

#[derive(Parser)]
#[command(name = "dovesat", version, about = "Saturation prover, degree operators and dovetailed search")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TextOrJson {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum HintArg {
    Positive,
    Negative,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OperatorArg {
    Reachability,
    Unknowability,
}

#[derive(Args)]
struct CorpusArgs {
    /// Corpus file (`axiom <statement>` lines; see the README).
    #[arg(long)]
    corpus: String,
    /// Statement in the grammar, e.g. "a => b".
    #[arg(long)]
    statement: String,
    /// Step budget; defaults to the corpus `fuel` directive.
    #[arg(long)]
    fuel: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Prove or refute a statement by bounded saturation.
    Prove {
        #[command(flatten)]
        common: CorpusArgs,
        /// Which bank to query first on each check.
        #[arg(long, value_enum, default_value = "positive")]
        hint: HintArg,
        #[arg(long, value_enum, default_value = "text")]
        format: TextOrJson,
    },
    /// Compute a fuel-bounded degree ladder for a statement.
    Degree {
        #[command(flatten)]
        common: CorpusArgs,
        /// Maximum unprovability-mark iterations per reachability run.
        #[arg(long, default_value_t = 2)]
        n_max: u64,
        /// Maximum reachability applications for the unknowability degree.
        #[arg(long, default_value_t = 3)]
        k_max: u64,
        #[arg(long, value_enum, default_value = "unknowability")]
        operator: OperatorArg,
        #[arg(long, value_enum, default_value = "json")]
        format: TextOrJson,
    },
    /// Race the prover against enumerated candidate programs.
    Search {
        #[command(flatten)]
        common: CorpusArgs,
        /// JSON plants file: `[{"index": 5, "program": [0,65,5,6]}]`.
        #[arg(long)]
        plants: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: TextOrJson,
    },
    /// Run the seeded bound-check scenario sweep; emits CSV.
    Bench {
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        scenarios: u32,
    },
    /// Saturate and dump the deduction digraph.
    ExportGraph {
        /// Corpus file.
        #[arg(long)]
        corpus: String,
        /// Optional query; the graph is taken after this run instead of
        /// after full saturation.
        #[arg(long)]
        statement: Option<String>,
        #[arg(long)]
        fuel: Option<u64>,
        #[arg(long, value_enum, default_value = "dot")]
        format: GraphFormat,
    },
    /// Fuel-bounded contradiction probe.
    CheckConsistency {
        /// Corpus file.
        #[arg(long)]
        corpus: String,
        #[arg(long)]
        fuel: Option<u64>,
    },
}

fn load_corpus(path: &str) -> Result<FormalSystem, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("cannot read `{path}`: {e}"))?;
    let LoadedSystem { system, warnings } =
        dovesat::load_system(&text).map_err(|e| format!("{path}: {e}"))?;
    for w in warnings {
        eprintln!("warning: {path}: {w}");
    }
    Ok(system)
}

fn parse_statement(text: &str) -> Result<Statement, String> {
    dovesat::parse(text).map_err(|e| format!("statement `{text}`: {e}"))
}

fn proof_lines(proof: &Proof) -> Vec<String> {
    proof
        .serialize_steps()
        .lines()
        .map(|l| l.to_string())
        .collect()
}

#[derive(Deserialize)]
struct PlantEntry {
    index: u64,
    program: Vec<u8>,
}

fn load_plants(path: &str) -> Result<Vec<(u64, Program)>, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("cannot read `{path}`: {e}"))?;
    let entries: Vec<PlantEntry> =
        serde_json::from_str(&text).map_err(|e| format!("plants file `{path}`: {e}"))?;
    let mut plants = Vec::with_capacity(entries.len());
    let mut seen = std::collections::HashSet::new();
    for entry in entries {
        if entry.index < 1 {
            return Err(format!("plants file `{path}`: index must be ≥ 1"));
        }
        if !seen.insert(entry.index) {
            return Err(format!(
                "plants file `{path}`: duplicate index {}",
                entry.index
            ));
        }
        plants.push((entry.index, Program::new(entry.program)));
    }
    Ok(plants)
}

fn cmd_prove(common: &CorpusArgs, hint: HintArg, format: TextOrJson) -> Result<u8, String> {
    let system = load_corpus(&common.corpus)?;
    let statement = parse_statement(&common.statement)?;
    let fuel = common.fuel.unwrap_or(system.fuel_default);
    if fuel < 1 {
        return Err("fuel must be at least 1".into());
    }
    let hint = match hint {
        HintArg::Positive => QueryHint::Positive,
        HintArg::Negative => QueryHint::Negative,
    };
    match prove_default(&system, &statement, hint, fuel) {
        ProverOutcome::Decided {
            d_prime,
            proof,
            meter,
        } => {
            let positive = d_prime == statement;
            match format {
                TextOrJson::Text => {
                    println!("outcome: decided");
                    println!("decision: {d_prime}");
                    println!("steps: {}", meter.steps);
                    println!("proof:");
                    print!("{}", proof.serialize_steps());
                }
                TextOrJson::Json => {
                    let value = serde_json::json!({
                        "outcome": "decided",
                        "decision": d_prime.to_string(),
                        "steps": meter.steps,
                        "proof": proof_lines(&proof),
                        "chain": proof.annotated_chain().iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                    });
                    println!("{value}");
                }
            }
            Ok(if positive { EXIT_OK } else { EXIT_NEGATIVE })
        }
        ProverOutcome::Exhausted { meter } => {
            match format {
                TextOrJson::Text => {
                    println!("outcome: exhausted");
                    println!("steps: {}", meter.steps);
                }
                TextOrJson::Json => {
                    let value = serde_json::json!({
                        "outcome": "exhausted",
                        "steps": meter.steps,
                    });
                    println!("{value}");
                }
            }
            Ok(EXIT_EXHAUSTED)
        }
    }
}

fn cmd_degree(
    common: &CorpusArgs,
    n_max: u64,
    k_max: u64,
    operator: OperatorArg,
    format: TextOrJson,
) -> Result<u8, String> {
    let system = load_corpus(&common.corpus)?;
    let statement = parse_statement(&common.statement)?;
    let fuel = common.fuel.unwrap_or(system.fuel_default);
    if fuel < 1 {
        return Err("fuel must be at least 1".into());
    }
    if k_max < 1 {
        return Err("k-max must be at least 1".into());
    }
    let outcome = match operator {
        OperatorArg::Reachability => reachability_degree(&system, &statement, fuel, n_max),
        OperatorArg::Unknowability => {
            unknowability_degree(&system, &statement, fuel, n_max, k_max)
        }
    };
    let ladder: Vec<String> = outcome.ladder().iter().map(|s| s.to_string()).collect();
    let meters: Vec<u64> = outcome.meters().iter().map(|m| m.steps).collect();
    match format {
        TextOrJson::Json => {
            let value = match outcome.degree() {
                Some(k) => serde_json::json!({
                    "subject": statement.to_string(),
                    "ladder": ladder,
                    "degree": k,
                    "fuel_per_rung": fuel,
                    "meters": meters,
                }),
                None => serde_json::json!({
                    "subject": statement.to_string(),
                    "ladder": ladder,
                    "exhausted": true,
                    "fuel_per_rung": fuel,
                    "meters": meters,
                }),
            };
            println!("{value}");
        }
        TextOrJson::Text => {
            println!("subject: {statement}");
            match outcome.degree() {
                Some(k) => println!("degree: {k}"),
                None => println!("degree: exhausted"),
            }
            for (i, rung) in ladder.iter().enumerate() {
                println!("ladder[{i}]: {rung}");
            }
            println!("fuel_per_rung: {fuel}");
        }
    }
    Ok(if outcome.degree().is_some() {
        EXIT_OK
    } else {
        EXIT_EXHAUSTED
    })
}

fn cmd_search(
    common: &CorpusArgs,
    plants_path: Option<&str>,
    format: TextOrJson,
) -> Result<u8, String> {
    let system = load_corpus(&common.corpus)?;
    let statement = parse_statement(&common.statement)?;
    let fuel = common.fuel.unwrap_or(DEFAULT_SEARCH_FUEL);
    if fuel < 1 {
        return Err("fuel must be at least 1".into());
    }
    let plants = match plants_path {
        Some(path) => load_plants(path)?,
        None => Vec::new(),
    };
    let outcome = dovetail_search(&system, &statement, fuel, &plants);
    match &outcome {
        SearchOutcome::Terminated(t) => {
            let report = bound_report(&outcome).expect("terminated search");
            match format {
                TextOrJson::Json => {
                    let value = serde_json::json!({
                        "outcome": "terminated",
                        "decision": t.decision.to_string(),
                        "proof": proof_lines(&t.proof),
                        "report": report,
                    });
                    println!("{value}");
                }
                TextOrJson::Text => {
                    println!("outcome: terminated");
                    let winner = if report.winner_id == 0 {
                        "prover".to_string()
                    } else if report.winner_planted {
                        format!("candidate {} (planted)", report.winner_id)
                    } else {
                        format!("candidate {}", report.winner_id)
                    };
                    println!("winner: {winner}");
                    println!("decision: {}", t.decision);
                    println!("phi_steps: {}", report.phi_steps);
                    println!("phi_prime_steps: {}", report.phi_prime_steps);
                    println!("e: {}", report.e);
                    println!("phi_C: {}", report.phi_c);
                    println!("bound: {}", report.bound);
                    println!("holds: {}", report.holds);
                    println!("proof:");
                    print!("{}", t.proof.serialize_steps());
                }
            }
            Ok(EXIT_OK)
        }
        SearchOutcome::Exhausted {
            total_steps,
            sweeps,
        } => {
            match format {
                TextOrJson::Json => {
                    let value = serde_json::json!({
                        "outcome": "exhausted",
                        "total_steps": total_steps,
                        "sweeps": sweeps,
                    });
                    println!("{value}");
                }
                TextOrJson::Text => {
                    println!("outcome: exhausted");
                    println!("total_steps: {total_steps}");
                    println!("sweeps: {sweeps}");
                }
            }
            Ok(EXIT_EXHAUSTED)
        }
    }
}

fn cmd_bench(seed: u64, scenarios: u32) -> Result<u8, String> {
    if scenarios < 1 {
        return Err("need at least one scenario".into());
    }
    let specs = generate_scenarios(seed, scenarios);
    let rows = run_scenarios(&specs);
    print!("{}", rows_to_csv(&rows));
    let violations = rows
        .iter()
        .filter(|r| !(r.report.holds && r.tight_holds && r.ledger_ok && r.gate_ok))
        .count();
    if violations == 0 {
        Ok(EXIT_OK)
    } else {
        eprintln!("{violations} scenario(s) violated the bound or a ledger check");
        Ok(EXIT_NEGATIVE)
    }
}

fn cmd_export_graph(
    corpus: &str,
    statement: Option<&str>,
    fuel: Option<u64>,
    format: GraphFormat,
) -> Result<u8, String> {
    let system = load_corpus(corpus)?;
    let fuel = fuel.unwrap_or(system.fuel_default);
    if fuel < 1 {
        return Err("fuel must be at least 1".into());
    }
    let graph = match statement {
        Some(text) => {
            let target = parse_statement(text)?;
            let mut run = dovesat::ProverRun::query(
                &system,
                target,
                QueryHint::Positive,
                dovesat::prover::identity_prepare(),
            );
            while run.meter().steps < fuel {
                use dovesat::prover::StepEvent;
                match run.micro_step() {
                    StepEvent::Progress => {}
                    _ => break,
                }
            }
            run.graph_snapshot()
        }
        None => dovesat::prover::saturate_to_fixpoint(&system, fuel).graph_snapshot(),
    };
    match format {
        GraphFormat::Dot => print!("{}", graph.to_dot()),
        GraphFormat::Json => print!("{}", graph.to_json_lines()),
    }
    Ok(EXIT_OK)
}

fn cmd_check_consistency(corpus: &str, fuel: Option<u64>) -> Result<u8, String> {
    let system = load_corpus(corpus)?;
    let fuel = fuel.unwrap_or(system.fuel_default);
    if fuel < 1 {
        return Err("fuel must be at least 1".into());
    }
    match bounded_consistency_probe(&system, fuel) {
        ConsistencyReport::NoContradictionFound { fuel_used } => {
            println!("outcome: no-contradiction-found");
            println!("fuel_used: {fuel_used}");
            Ok(EXIT_OK)
        }
        ConsistencyReport::ContradictionWitness {
            statement,
            proof_pos,
            proof_neg,
        } => {
            println!("outcome: contradiction");
            println!("statement: {statement}");
            println!("proof_pos:");
            print!("{}", proof_pos.serialize_steps());
            println!("proof_neg:");
            print!("{}", proof_neg.serialize_steps());
            Ok(EXIT_NEGATIVE)
        }
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    match &cli.command {
        Command::Prove {
            common,
            hint,
            format,
        } => cmd_prove(common, *hint, *format),
        Command::Degree {
            common,
            n_max,
            k_max,
            operator,
            format,
        } => cmd_degree(common, *n_max, *k_max, *operator, *format),
        Command::Search {
            common,
            plants,
            format,
        } => cmd_search(common, plants.as_deref(), *format),
        Command::Bench { seed, scenarios } => cmd_bench(*seed, *scenarios),
        Command::ExportGraph {
            corpus,
            statement,
            fuel,
            format,
        } => cmd_export_graph(corpus, statement.as_deref(), *fuel, *format),
        Command::CheckConsistency { corpus, fuel } => cmd_check_consistency(corpus, *fuel),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
