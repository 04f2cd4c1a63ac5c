//! `tuza`: exact triangle packing and covering numbers, certified
//! transversal constructions and instance generators.
//!
//! Graphs are read in the text format of `tuza_core::format` from
//! `--input` or standard input. Reports are JSON on standard output.
//! Exit codes: 0 when every asserted bound passes, 1 when a bound fails or
//! a solver gives up, 2 on usage or input errors.

mod commands;
mod report;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use tuza_core::{format, Error, Multigraph};

use commands::{GenerateArgs, Settings};

#[derive(Parser)]
#[command(name = "tuza", version, about = "Triangle packing and covering in weighted multigraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Graph file; standard input if omitted.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Skip the exponential exact solvers; bounds needing them are reported as unchecked.
    #[arg(long)]
    skip_exact: bool,
    /// Node budget for each exact search.
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Exact nu and tau with certificates.
    Solve(Common),
    /// Exact fractional optimum with primal and dual certificates.
    Lp(Common),
    /// Transversal of weight at most 2 nu* - sqrt(nu*)/4.
    Kriv(Common),
    /// Transversal of weight at most 73 nu / 25.
    Haxell(Common),
    /// Reduction engine for planar graphs: packing P and transversal C with w(C) <= 2|P|.
    Planar(Common),
    /// Print a generated graph in the text format.
    Generate {
        /// gk, random, connected, triangle-free, apex:<name>, or a name such as K5, W5, petersen, stacked:10:3.
        family: String,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        n: Option<usize>,
        /// Number of edges (random) or extra edges beyond a spanning tree (connected).
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 1)]
        mult: u64,
        /// Edge probability for triangle-free graphs.
        #[arg(long, default_value_t = 0.5)]
        p: f64,
    },
    /// Check tau >= tau* = nu* >= nu and 2 nu >= tau*, plus both transversal constructions.
    CertifyChain(Common),
}

fn read_graph(input: &Option<PathBuf>) -> Result<Multigraph, String> {
    let text = match input {
        Some(path) => std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?,
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| format!("stdin: {e}"))?;
            s
        }
    };
    format::parse(&text).map_err(|e| e.to_string())
}

fn exit_for(e: &Error) -> ExitCode {
    match e {
        Error::Parse { .. } | Error::BadParam(_) | Error::VertexOutOfRange { .. } | Error::LoopEdge(..) => {
            ExitCode::from(2)
        }
        _ => ExitCode::from(1),
    }
}

type Runner = fn(&Multigraph, &Settings) -> tuza_core::Result<report::Report>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (common, run): (Common, Runner) = match cli.command {
        Command::Generate { family, k, seed, n, m, mult, p } => {
            let args = GenerateArgs { family, k, seed, n, m, mult, p };
            return match commands::generate(&args) {
                Ok(g) => {
                    print!("{}", format::emit(&g));
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    exit_for(&e)
                }
            };
        }
        Command::Solve(c) => (c, commands::solve),
        Command::Lp(c) => (c, |g, _| commands::lp(g)),
        Command::Kriv(c) => (c, commands::kriv),
        Command::Haxell(c) => (c, commands::haxell),
        Command::Planar(c) => (c, commands::planar),
        Command::CertifyChain(c) => (c, commands::certify_chain),
    };
    let g = match read_graph(&common.input) {
        Ok(g) => g,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let settings = Settings { skip_exact: common.skip_exact, budget: common.budget };
    match run(&g, &settings) {
        Ok(r) => {
            println!("{}", serde_json::to_string_pretty(&r).expect("report serializes"));
            if !r.ok {
                eprintln!("error: a bound failed");
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_for(&e)
        }
    }
}
