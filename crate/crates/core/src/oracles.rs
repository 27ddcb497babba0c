//! Naive reference solvers used to cross-check the engines.
//!
//! Nothing here touches the constraint store, the tables or the planner.
//! Each oracle re-derives its answer from the problem statement by brute
//! force and refuses inputs too large for that to finish.

use num_bigint::BigUint;

use crate::problems::osmos::OsmosInstance;
use crate::problems::prisoners::PrisonerInstance;
use crate::problems::triangle::{TriangleAnswer, TriangleInstance};
use crate::problems::welcome::{WelcomeInstance, PATTERN};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("oracle guard violated: {0}")]
pub struct GuardViolation(pub String);

pub const TRIANGLE_MAX_SIDE: i64 = 12;
pub const WELCOME_MAX_ENUMERATED: usize = 25;
pub const PRISONERS_MAX_RELEASES: usize = 8;
pub const OSMOS_MAX_MOTES: usize = 6;
pub const OSMOS_MAX_SIZE: u64 = 8;
pub const OSMOS_MAX_LIMIT: u64 = 6;

/// First `(x2, y2, x3, y3)` in lexicographic order with the right doubled
/// area, vertex 1 at the origin.
pub fn triangle_enumerate(inst: &TriangleInstance) -> Result<TriangleAnswer, GuardViolation> {
    let TriangleInstance { n, m, a } = *inst;
    if n > TRIANGLE_MAX_SIDE || m > TRIANGLE_MAX_SIDE {
        return Err(GuardViolation(format!(
            "triangle sides {n}x{m} exceed {TRIANGLE_MAX_SIDE}"
        )));
    }
    for x2 in 0..=n {
        for y2 in 0..=m {
            for x3 in 0..=n {
                for y3 in 0..=m {
                    if (x2 * y3 - x3 * y2).abs() == a {
                        return Ok(TriangleAnswer::Points([0, 0, x2, y2, x3, y3]));
                    }
                }
            }
        }
    }
    Ok(TriangleAnswer::Impossible)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WelcomeMode {
    /// Walk every increasing choice of text positions, one per pattern byte.
    Enumerate,
    /// Prefix counts with arbitrary-precision integers.
    BottomUp,
}

/// Exact number of times the phrase occurs as a subsequence, no modulus.
pub fn welcome_bruteforce(
    inst: &WelcomeInstance,
    mode: WelcomeMode,
) -> Result<BigUint, GuardViolation> {
    let text = inst.text.as_bytes();
    let pat = PATTERN.as_bytes();
    match mode {
        WelcomeMode::Enumerate => {
            if text.len() > WELCOME_MAX_ENUMERATED {
                return Err(GuardViolation(format!(
                    "text length {} exceeds {WELCOME_MAX_ENUMERATED}",
                    text.len()
                )));
            }
            Ok(BigUint::from(count_embeddings(text, pat, 0, 0)))
        }
        WelcomeMode::BottomUp => {
            // counts[j] = embeddings of pat[..j] in the text read so far
            let mut counts = vec![BigUint::from(0u32); pat.len() + 1];
            counts[0] = BigUint::from(1u32);
            for &c in text {
                for j in (1..=pat.len()).rev() {
                    if pat[j - 1] == c {
                        let prev = counts[j - 1].clone();
                        counts[j] += prev;
                    }
                }
            }
            Ok(counts.pop().unwrap_or_default())
        }
    }
}

fn count_embeddings(text: &[u8], pat: &[u8], from: usize, matched: usize) -> u64 {
    if matched == pat.len() {
        return 1;
    }
    let need = pat.len() - matched;
    let mut total = 0;
    for pos in from..text.len() {
        if text.len() - pos < need {
            break;
        }
        if text[pos] == pat[matched] {
            total += count_embeddings(text, pat, pos + 1, matched + 1);
        }
    }
    total
}

pub fn welcome_bruteforce_mod(inst: &WelcomeInstance) -> u32 {
    let exact = welcome_bruteforce(inst, WelcomeMode::BottomUp).expect("bottom-up has no guard");
    let rem = exact % BigUint::from(10_000u32);
    rem.to_u32_digits().first().copied().unwrap_or(0)
}

/// Tries every release order on an explicit row of cells.
pub fn prisoners_bruteforce(inst: &PrisonerInstance) -> Result<u64, GuardViolation> {
    let free = inst.free();
    if free.len() > PRISONERS_MAX_RELEASES {
        return Err(GuardViolation(format!(
            "{} releases exceed {PRISONERS_MAX_RELEASES}",
            free.len()
        )));
    }
    // index 0 and cells+1 are walls
    let mut occupied = vec![true; inst.cells() as usize + 2];
    occupied[0] = false;
    let last = occupied.len() - 1;
    occupied[last] = false;
    let mut pending: Vec<usize> = free.iter().map(|&x| x as usize).collect();
    Ok(release_all(&mut occupied, &mut pending))
}

fn release_all(occupied: &mut [bool], pending: &mut Vec<usize>) -> u64 {
    if pending.is_empty() {
        return 0;
    }
    let mut best = u64::MAX;
    for k in 0..pending.len() {
        let cell = pending.swap_remove(k);
        occupied[cell] = false;
        let mut paid = 0;
        let mut i = cell - 1;
        while occupied[i] {
            paid += 1;
            i -= 1;
        }
        let mut i = cell + 1;
        while occupied[i] {
            paid += 1;
            i += 1;
        }
        best = best.min(paid + release_all(occupied, pending));
        occupied[cell] = true;
        pending.push(cell);
        let end = pending.len() - 1;
        pending.swap(k, end);
    }
    best
}

/// Absorb smallest-first; at every point where Armin is stuck, compare
/// removing everything left against growing with added motes and going on.
pub fn osmos_greedy(inst: &OsmosInstance) -> u64 {
    let mut motes = inst.others.clone();
    motes.sort();
    let total = motes.len() as u64;
    let mut best = total;
    let mut size = inst.armin;
    let mut added = 0u64;
    let mut i = 0;
    loop {
        while i < motes.len() && size > motes[i] {
            size += motes[i];
            i += 1;
        }
        if i == motes.len() {
            best = best.min(added);
            break;
        }
        best = best.min(added + (motes.len() - i) as u64);
        if size <= 1 || added >= best {
            break;
        }
        size += size - 1;
        added += 1;
    }
    best
}

/// Minimum cost over every absorb/remove/add sequence of cost at most
/// `limit`, or `None` when no sequence finishes within it.
pub fn osmos_exhaustive(inst: &OsmosInstance, limit: u64) -> Result<Option<u64>, GuardViolation> {
    if inst.others.len() > OSMOS_MAX_MOTES
        || inst.armin > OSMOS_MAX_SIZE
        || inst.others.iter().any(|&s| s > OSMOS_MAX_SIZE)
        || limit > OSMOS_MAX_LIMIT
    {
        return Err(GuardViolation(format!(
            "osmos instance {inst:?} with limit {limit} is outside \
             {OSMOS_MAX_MOTES} motes / size {OSMOS_MAX_SIZE} / limit {OSMOS_MAX_LIMIT}"
        )));
    }
    let mut motes = inst.others.clone();
    motes.sort();
    let mut best = None;
    explore(inst.armin, &motes, 0, limit, &mut best);
    Ok(best)
}

fn explore(armin: u64, motes: &[u64], spent: u64, limit: u64, best: &mut Option<u64>) {
    if motes.is_empty() {
        *best = Some(best.map_or(spent, |b| b.min(spent)));
        return;
    }
    let head = motes[0];
    if armin > head {
        explore(armin + head, &motes[1..], spent, limit, best);
        return;
    }
    if spent + 1 > limit {
        return;
    }
    explore(armin, &motes[..motes.len() - 1], spent + 1, limit, best);
    if armin > 1 {
        let mut grown = Vec::with_capacity(motes.len() + 1);
        grown.push(armin - 1);
        grown.extend_from_slice(motes);
        explore(armin, &grown, spent + 1, limit, best);
    }
}
