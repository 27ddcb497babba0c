//! Random instance generators for verification sweeps and benchmarks.

use rand::seq::index::sample;
use rand::Rng;

use crate::problems::osmos::OsmosInstance;
use crate::problems::prisoners::PrisonerInstance;
use crate::problems::triangle::TriangleInstance;
use crate::problems::welcome::{WelcomeInstance, PATTERN};

/// Characters of the phrase, space included.
pub const WELCOME_ALPHABET: &[u8] = b"welcomtdja ";

/// `n, m` uniform in `1..=max_side`, `a` uniform in `1..=n*m + 2` so that
/// a few infeasible targets show up.
pub fn triangle<R: Rng>(rng: &mut R, max_side: i64) -> TriangleInstance {
    let n = rng.gen_range(1..=max_side);
    let m = rng.gen_range(1..=max_side);
    let a = rng.gen_range(1..=n * m + 2);
    TriangleInstance { n, m, a }
}

/// Contest-scale triangle case: sides up to `max_side`, target up to
/// `max_area` and at most `n*m + 1`.
pub fn triangle_large<R: Rng>(rng: &mut R, max_side: i64, max_area: i64) -> TriangleInstance {
    let n = rng.gen_range(1..=max_side);
    let m = rng.gen_range(1..=max_side);
    let a = rng.gen_range(1..=(n * m + 1).min(max_area));
    TriangleInstance { n, m, a }
}

/// A text of length `0..=max_len` over the phrase's alphabet. Half of the
/// texts are uniform noise; the rest are the phrase with random letters
/// duplicated, dropped or inserted, so that non-zero counts are common.
pub fn welcome_text<R: Rng>(rng: &mut R, max_len: usize) -> WelcomeInstance {
    let len = rng.gen_range(0..=max_len);
    let text: Vec<u8> = if rng.gen_bool(0.5) {
        (0..len)
            .map(|_| WELCOME_ALPHABET[rng.gen_range(0..WELCOME_ALPHABET.len())])
            .collect()
    } else {
        let mut spare = max_len.saturating_sub(PATTERN.len());
        let mut out = Vec::with_capacity(max_len);
        for &c in PATTERN.as_bytes() {
            if rng.gen_range(0..20) == 0 {
                continue;
            }
            if spare > 0 && rng.gen_bool(0.3) {
                spare -= 1;
                if rng.gen_bool(0.5) {
                    out.push(c);
                } else {
                    out.push(WELCOME_ALPHABET[rng.gen_range(0..WELCOME_ALPHABET.len())]);
                }
            }
            out.push(c);
        }
        out.truncate(max_len);
        out
    };
    WelcomeInstance::new(String::from_utf8(text).expect("alphabet is ASCII"))
}

/// Text of exactly `len` bytes drawn from the phrase's alphabet.
pub fn welcome_text_exact<R: Rng>(rng: &mut R, len: usize) -> WelcomeInstance {
    let text: Vec<u8> = (0..len)
        .map(|_| WELCOME_ALPHABET[rng.gen_range(0..WELCOME_ALPHABET.len())])
        .collect();
    WelcomeInstance::new(String::from_utf8(text).expect("alphabet is ASCII"))
}

/// `P` uniform in `1..=max_cells`, then `0..=min(P, max_releases)` distinct
/// cells.
pub fn prisoners<R: Rng>(rng: &mut R, max_cells: i64, max_releases: usize) -> PrisonerInstance {
    let cells = rng.gen_range(1..=max_cells);
    let q = rng.gen_range(0..=max_releases.min(cells as usize));
    prisoners_exact(rng, cells, q)
}

pub fn prisoners_exact<R: Rng>(rng: &mut R, cells: i64, releases: usize) -> PrisonerInstance {
    let free = sample(rng, cells as usize, releases)
        .into_iter()
        .map(|i| i as i64 + 1)
        .collect();
    PrisonerInstance::new(cells, free).expect("sampled cells are distinct and in range")
}

/// Armin in `1..=max_size`, `0..=max_motes` passive motes in `1..=max_size`.
pub fn osmos<R: Rng>(rng: &mut R, max_motes: usize, max_size: u64) -> OsmosInstance {
    let count = rng.gen_range(0..=max_motes);
    osmos_exact(rng, count, max_size)
}

pub fn osmos_exact<R: Rng>(rng: &mut R, motes: usize, max_size: u64) -> OsmosInstance {
    let armin = rng.gen_range(1..=max_size);
    let others = (0..motes).map(|_| rng.gen_range(1..=max_size)).collect();
    OsmosInstance::new(armin, others)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generators_respect_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..500 {
            let t = triangle(&mut rng, 8);
            assert!((1..=8).contains(&t.n) && (1..=8).contains(&t.m));
            assert!(t.a >= 1 && t.a <= t.n * t.m + 2);

            let w = welcome_text(&mut rng, 25);
            assert!(w.text.len() <= 25);
            assert!(w.text.bytes().all(|b| WELCOME_ALPHABET.contains(&b)));

            let p = prisoners(&mut rng, 30, 6);
            assert!(p.free().len() <= 6 && p.cells() <= 30);

            let o = osmos(&mut rng, 6, 8);
            assert!(o.others.len() <= 6 && o.armin <= 8);
            assert!(o.others.iter().all(|&s| (1..=8).contains(&s)));
        }
    }

    #[test]
    fn seeded_generation_is_reproducible() {
        let a: Vec<_> = {
            let mut rng = ChaCha8Rng::seed_from_u64(7);
            (0..20).map(|_| osmos(&mut rng, 6, 8)).collect()
        };
        let b: Vec<_> = {
            let mut rng = ChaCha8Rng::seed_from_u64(7);
            (0..20).map(|_| osmos(&mut rng, 6, 8)).collect()
        };
        assert_eq!(a, b);
    }
}
