mod commands;
mod error;
mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::commands::Output;

#[derive(Parser, Debug)]
#[command(
    name = "sepdp",
    version,
    about = "Exact solvers over minimal separators and potential maximal cliques"
)]
pub struct Cli {
    #[command(flatten)]
    pub opts: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Print the run report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Cap on enumerated minimal separators (default 10·n³).
    #[arg(long, global = true)]
    pub max_seps: Option<usize>,
    /// Cap on enumerated potential maximal cliques.
    #[arg(long, global = true)]
    pub max_pmcs: Option<usize>,
    /// Worker threads for the dynamic programs.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Enumerate minimal separators.
    Seps {
        file: PathBuf,
        /// List every separator.
        #[arg(long)]
        list: bool,
    },
    /// Enumerate potential maximal cliques.
    Pmcs {
        file: PathBuf,
        #[arg(long)]
        list: bool,
    },
    #[command(subcommand)]
    Solve(SolveCommand),
    #[command(subcommand)]
    Verify(VerifyCommand),
    #[command(subcommand)]
    Gen(GenCommand),
    /// Exhaustive ground truth for small instances.
    Oracle {
        problem: OracleProblem,
        file: PathBuf,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
pub enum SolveCommand {
    /// Maximum induced subgraph of treewidth at most t.
    TwSubgraph {
        #[arg(long)]
        t: usize,
        file: PathBuf,
    },
    /// Maximum independent set.
    Mis { file: PathBuf },
    /// Maximum induced forest.
    Mif { file: PathBuf },
    /// Minimum connected vertex cover.
    Cvc {
        #[arg(long, value_enum)]
        class: ClassArg,
        file: PathBuf,
    },
    /// Minimum connected feedback vertex set.
    Cfvs {
        #[arg(long, value_enum)]
        class: ClassArg,
        file: PathBuf,
    },
    /// Maximum set at pairwise distance at least d (d even).
    DistIs {
        #[arg(long)]
        d: usize,
        file: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
pub enum VerifyCommand {
    /// Lift every minimal separator of G^k (k odd) to one of G.
    Theorem1 {
        #[arg(long)]
        k: usize,
        file: PathBuf,
    },
    /// Separator growth and solution correspondence of the red-blue reduction.
    AppendixLemma { file: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum GenCommand {
    /// Random connected chordal graph as an edge list.
    Chordal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
    },
    /// Random circular-arc model as JSON.
    Arcs {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 0.3)]
        coverage: f64,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassArg {
    Chordal,
    CircularArc,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleProblem {
    Seps,
    Pmcs,
    Mis,
    Mif,
    Tw,
    Cvc,
    Cfvs,
    DistIs,
    RedBlue,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match commands::run(&cli) {
        Ok(Output::Raw(text)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Ok(Output::Report(mut report)) => {
            report.elapsed_us = start.elapsed().as_micros() as u64;
            if cli.opts.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            if report.failed_checks().is_empty() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(4)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
