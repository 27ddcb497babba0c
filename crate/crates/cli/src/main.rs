use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use jamsolve::harness::{self, SolveOptions};
use jamsolve::{Engine, Problem};

#[derive(Parser, Debug)]
#[command(
    name = "jamsolve",
    version,
    about = "Solve, verify and benchmark four Code Jam problems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve a contest input file and print one `Case #k:` line per case.
    Solve {
        problem: ProblemArg,
        /// Input file, or `-` for standard input.
        #[arg(default_value = "-")]
        input: PathBuf,
        /// Triangle solver.
        #[arg(long, value_enum, default_value_t = EngineArg::Cp)]
        engine: EngineArg,
        /// Print per-case memo table hits/misses to standard error.
        #[arg(long)]
        stats: bool,
    },
    /// Compare solvers against brute-force oracles on random instances.
    Verify {
        problem: ProblemArg,
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 2014)]
        seed: u64,
    },
    /// Time the solver on a synthetic contest-scale input.
    Bench {
        problem: ProblemArg,
        #[arg(long, value_enum, default_value_t = EngineArg::Cp)]
        engine: EngineArg,
        #[arg(long, default_value_t = 2014)]
        seed: u64,
    },
    /// Read 11 numbers from standard input and run the TPK algorithm.
    Tpk,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ProblemArg {
    Triangle,
    Welcome,
    Prisoners,
    Osmos,
}

impl From<ProblemArg> for Problem {
    fn from(p: ProblemArg) -> Problem {
        match p {
            ProblemArg::Triangle => Problem::Triangle,
            ProblemArg::Welcome => Problem::Welcome,
            ProblemArg::Prisoners => Problem::Prisoners,
            ProblemArg::Osmos => Problem::Osmos,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum EngineArg {
    Cp,
    #[value(alias = "closed-form")]
    Closed,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Engine {
        match e {
            EngineArg::Cp => Engine::Cp,
            EngineArg::Closed => Engine::ClosedForm,
        }
    }
}

const FAILURE: u8 = 1;

fn read_input(path: &PathBuf) -> std::io::Result<String> {
    if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Solve {
            problem,
            input,
            engine,
            stats,
        } => {
            let text = match read_input(&input) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: cannot read {}: {e}", input.display());
                    return ExitCode::from(FAILURE);
                }
            };
            let opts = SolveOptions {
                engine: engine.into(),
                stats,
            };
            match harness::solve_input(problem.into(), &text, opts) {
                Ok(out) => {
                    for line in &out.stats {
                        eprintln!("{line}");
                    }
                    let mut stdout = std::io::stdout().lock();
                    if stdout.write_all(out.text.as_bytes()).is_err() {
                        return ExitCode::from(FAILURE);
                    }
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(FAILURE)
                }
            }
        }
        Command::Verify {
            problem,
            trials,
            seed,
        } => {
            let report = harness::verify(problem.into(), trials as usize, seed);
            for m in &report.mismatches {
                println!("MISMATCH {m}");
            }
            println!("{report}");
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(FAILURE)
            }
        }
        Command::Bench {
            problem,
            engine,
            seed,
        } => match harness::bench(problem.into(), engine.into(), seed) {
            Ok(row) => {
                println!("{row}");
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(FAILURE)
            }
        },
        Command::Tpk => {
            let mut text = String::new();
            if let Err(e) = std::io::stdin().read_to_string(&mut text) {
                eprintln!("error: cannot read standard input: {e}");
                return ExitCode::from(FAILURE);
            }
            match harness::run_tpk(&text) {
                Ok(records) => {
                    for r in records {
                        println!("{r}");
                    }
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(FAILURE)
                }
            }
        }
    }
}
