//! The operations behind the command-line tool: solving a contest input,
//! sweeping solvers against oracles, and timing contest-scale inputs.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::gen;
use crate::io::{self, format_case, IoError};
use crate::oracles::{self, WelcomeMode};
use crate::planner;
use crate::problems::osmos::{best_osmos_plan, OsmosProblem};
use crate::problems::prisoners::{release_cost, solve_prisoners};
use crate::problems::tpk::{self, TpkRecord, INPUT_LEN};
use crate::problems::triangle::{check_answer, solve_triangle_closed_form, solve_triangle_cp};
use crate::problems::welcome::{count_tabled, solve_welcome};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Problem {
    Triangle,
    Welcome,
    Prisoners,
    Osmos,
}

impl Problem {
    pub const ALL: [Problem; 4] = [
        Problem::Triangle,
        Problem::Welcome,
        Problem::Prisoners,
        Problem::Osmos,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Problem::Triangle => "triangle",
            Problem::Welcome => "welcome",
            Problem::Prisoners => "prisoners",
            Problem::Osmos => "osmos",
        }
    }

    pub fn title(self) -> &'static str {
        match self {
            Problem::Triangle => "Triangle Areas",
            Problem::Welcome => "Welcome to Code Jam",
            Problem::Prisoners => "Bribe the Prisoners",
            Problem::Osmos => "Osmos",
        }
    }

    pub fn technique(self) -> &'static str {
        match self {
            Problem::Triangle => "constraint programming",
            Problem::Welcome | Problem::Prisoners => "dynamic programming",
            Problem::Osmos => "planning",
        }
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Problem {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Problem::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| format!("unknown problem {s:?}"))
    }
}

/// Which triangle solver to run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Engine {
    #[default]
    Cp,
    ClosedForm,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SolveOptions {
    pub engine: Engine,
    /// Collect per-case table statistics.
    pub stats: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SolveOutput {
    /// One `Case #k: ...` line per case, each newline-terminated.
    pub text: String,
    /// Per-case table statistics, when requested and the solver uses one.
    pub stats: Vec<String>,
}

/// Parses `input` fully, then solves the cases in parallel and emits them in
/// order. Nothing is produced if parsing fails.
pub fn solve_input(
    problem: Problem,
    input: &str,
    opts: SolveOptions,
) -> Result<SolveOutput, IoError> {
    let results: Vec<(String, Option<String>)> = match problem {
        Problem::Triangle => {
            let file = io::parse_triangle(input)?;
            file.cases
                .par_iter()
                .map(|c| {
                    let ans = match opts.engine {
                        Engine::Cp => solve_triangle_cp(c),
                        Engine::ClosedForm => solve_triangle_closed_form(c),
                    };
                    (ans.to_string(), None)
                })
                .collect()
        }
        Problem::Welcome => {
            let file = io::parse_welcome(input)?;
            file.cases
                .par_iter()
                .map(|c| {
                    let (count, stats) = count_tabled(c);
                    (format!("{count:04}"), Some(stats.to_string()))
                })
                .collect()
        }
        Problem::Prisoners => {
            let file = io::parse_prisoners(input)?;
            file.cases
                .par_iter()
                .map(|c| {
                    let (cost, stats) = release_cost(c);
                    (cost.to_string(), Some(stats.to_string()))
                })
                .collect()
        }
        Problem::Osmos => {
            let file = io::parse_osmos(input)?;
            file.cases
                .par_iter()
                .map(|c| (best_osmos_plan(c).cost.to_string(), None))
                .collect()
        }
    };
    let mut out = SolveOutput::default();
    for (k, (body, stats)) in results.into_iter().enumerate() {
        out.text.push_str(&format_case(k + 1, &body));
        out.text.push('\n');
        if let (true, Some(s)) = (opts.stats, stats) {
            out.stats.push(format!("Case #{}: {s}", k + 1));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub trial: usize,
    pub instance: String,
    pub detail: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "trial {}: {} :: {}",
            self.trial, self.instance, self.detail
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub problem: Problem,
    pub trials: usize,
    pub seed: u64,
    pub mismatches: Vec<Mismatch>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} trials, seed {}, {} mismatches",
            self.problem,
            self.trials,
            self.seed,
            self.mismatches.len()
        )
    }
}

/// Draws `trials` instances inside the oracle guards and compares every
/// solver path against the oracles. Same seed, same instances.
pub fn verify(problem: Problem, trials: usize, seed: u64) -> VerifyReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut mismatches = Vec::new();
    for trial in 0..trials {
        let (instance, problems) = match problem {
            Problem::Triangle => {
                let inst = gen::triangle(&mut rng, oracles::TRIANGLE_MAX_SIDE);
                (format!("{inst:?}"), check_triangle(&inst))
            }
            Problem::Welcome => {
                let inst = gen::welcome_text(&mut rng, oracles::WELCOME_MAX_ENUMERATED);
                (format!("{inst:?}"), check_welcome(&inst))
            }
            Problem::Prisoners => {
                let inst = gen::prisoners(&mut rng, 30, 6);
                (format!("{inst:?}"), check_prisoners(&inst))
            }
            Problem::Osmos => {
                let inst = gen::osmos(&mut rng, oracles::OSMOS_MAX_MOTES, oracles::OSMOS_MAX_SIZE);
                (format!("{inst:?}"), check_osmos(&inst))
            }
        };
        mismatches.extend(problems.into_iter().map(|detail| Mismatch {
            trial,
            instance: instance.clone(),
            detail,
        }));
    }
    VerifyReport {
        problem,
        trials,
        seed,
        mismatches,
    }
}

fn check_triangle(inst: &crate::problems::triangle::TriangleInstance) -> Vec<String> {
    let mut bad = Vec::new();
    let cp = solve_triangle_cp(inst);
    let closed = solve_triangle_closed_form(inst);
    let brute = match oracles::triangle_enumerate(inst) {
        Ok(b) => b,
        Err(e) => return vec![e.to_string()],
    };
    let expect = inst.a <= inst.n * inst.m;
    for (name, ans) in [("cp", &cp), ("closed-form", &closed), ("enumerate", &brute)] {
        if ans.is_feasible() != expect {
            bad.push(format!(
                "{name} feasibility {} != a <= n*m",
                ans.is_feasible()
            ));
        }
        if !check_answer(inst, ans) {
            bad.push(format!("{name} answer {ans} fails the area/bounds check"));
        }
    }
    bad
}

fn check_welcome(inst: &crate::problems::welcome::WelcomeInstance) -> Vec<String> {
    let mut bad = Vec::new();
    let body = solve_welcome(inst);
    let enumerated = oracles::welcome_bruteforce(inst, WelcomeMode::Enumerate);
    let bottom_up = oracles::welcome_bruteforce(inst, WelcomeMode::BottomUp);
    match (enumerated, bottom_up) {
        (Ok(e), Ok(b)) => {
            if e != b {
                bad.push(format!(
                    "oracle modes disagree: enumerate {e}, bottom-up {b}"
                ));
            }
            let expect = format!("{:04}", b % num_bigint::BigUint::from(10_000u32));
            if body != expect {
                bad.push(format!("solver {body} != oracle {expect}"));
            }
        }
        (Err(e), _) | (_, Err(e)) => bad.push(e.to_string()),
    }
    if body.len() != 4 || !body.bytes().all(|b| b.is_ascii_digit()) {
        bad.push(format!("output {body:?} is not four digits"));
    }
    bad
}

fn check_prisoners(inst: &crate::problems::prisoners::PrisonerInstance) -> Vec<String> {
    let dp = solve_prisoners(inst);
    match oracles::prisoners_bruteforce(inst) {
        Ok(brute) if brute == dp => vec![],
        Ok(brute) => vec![format!("dp {dp} != brute force {brute}")],
        Err(e) => vec![e.to_string()],
    }
}

/// Planner against both Osmos oracles, plus the plan contract: within the
/// limit, and replaying it reaches a final state at the reported cost.
pub fn check_osmos(inst: &crate::problems::osmos::OsmosInstance) -> Vec<String> {
    let mut bad = Vec::new();
    let problem = OsmosProblem::new(inst);
    let limit = inst.others.len() as u64;
    let plan = best_osmos_plan(inst);
    if plan.cost > limit {
        bad.push(format!("plan cost {} exceeds limit {limit}", plan.cost));
    }
    match planner::replay(&problem, &plan) {
        Ok((end, cost)) => {
            if !end.others.is_empty() {
                bad.push(format!(
                    "replayed plan {:?} leaves motes {:?}",
                    plan.steps, end.others
                ));
            }
            if cost != plan.cost {
                bad.push(format!("replayed cost {cost} != reported {}", plan.cost));
            }
        }
        Err(e) => bad.push(format!("replay failed: {e}")),
    }
    let greedy = oracles::osmos_greedy(inst);
    if greedy != plan.cost {
        bad.push(format!("planner {} != greedy {greedy}", plan.cost));
    }
    if limit <= oracles::OSMOS_MAX_LIMIT {
        match oracles::osmos_exhaustive(inst, limit) {
            Ok(Some(ex)) if ex == plan.cost => {}
            Ok(other) => bad.push(format!("planner {} != exhaustive {other:?}", plan.cost)),
            Err(e) => bad.push(e.to_string()),
        }
    }
    bad
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub problem: Problem,
    pub technique: &'static str,
    pub scale: String,
    pub cases: usize,
    pub elapsed: Duration,
}

impl fmt::Display for BenchRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<22} {:<24} {:<32} {:>9.3}s",
            self.problem.title(),
            self.technique,
            self.scale,
            self.elapsed.as_secs_f64()
        )
    }
}

/// Contest-scale synthetic input for `problem`, with a description of its
/// scale.
pub fn bench_input(problem: Problem, seed: u64) -> (String, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match problem {
        Problem::Triangle => {
            let cases: Vec<_> = (0..100)
                .map(|_| gen::triangle_large(&mut rng, 10_000, 100_000_000))
                .collect();
            (
                io::write_triangle(&cases),
                "100 cases, N,M <= 10^4, A <= 10^8".into(),
            )
        }
        Problem::Welcome => {
            let cases: Vec<_> = (0..100)
                .map(|_| gen::welcome_text_exact(&mut rng, 500))
                .collect();
            (io::write_welcome(&cases), "100 cases, |T| = 500".into())
        }
        Problem::Prisoners => {
            let cases: Vec<_> = (0..10)
                .map(|_| gen::prisoners_exact(&mut rng, 10_000, 100))
                .collect();
            (
                io::write_prisoners(&cases),
                "10 cases, P = 10^4, Q = 100".into(),
            )
        }
        Problem::Osmos => {
            let cases: Vec<_> = (0..100)
                .map(|_| gen::osmos_exact(&mut rng, 100, 100))
                .collect();
            (
                io::write_osmos(&cases),
                "100 cases, 100 motes <= 100".into(),
            )
        }
    }
}

/// Times parsing plus solving of the synthetic input.
pub fn bench(problem: Problem, engine: Engine, seed: u64) -> Result<BenchRow, IoError> {
    let (input, scale) = bench_input(problem, seed);
    let start = Instant::now();
    let out = solve_input(
        problem,
        &input,
        SolveOptions {
            engine,
            stats: false,
        },
    )?;
    let elapsed = start.elapsed();
    let technique = match (problem, engine) {
        (Problem::Triangle, Engine::ClosedForm) => "closed form",
        _ => problem.technique(),
    };
    Ok(BenchRow {
        problem,
        technique,
        scale,
        cases: out.text.lines().count(),
        elapsed,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TpkError {
    #[error(transparent)]
    Io(#[from] IoError),
    #[error("expected exactly {INPUT_LEN} numbers, found more")]
    TooMany,
}

/// Reads exactly eleven reals and returns the report lines.
pub fn run_tpk(input: &str) -> Result<Vec<TpkRecord>, TpkError> {
    let mut stream = io::TokenStream::new(input);
    let mut values = [0.0; INPUT_LEN];
    for v in values.iter_mut() {
        *v = stream.read_real()?;
    }
    if stream.next_token().is_ok() {
        return Err(TpkError::TooMany);
    }
    Ok(tpk::tpk(&values))
}
