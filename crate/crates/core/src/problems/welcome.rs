//! Welcome to Code Jam: count the occurrences of the fixed phrase as a
//! subsequence of a text, keeping the last four digits.

use crate::tabling::{ArgKey, Evaluator, MemoTable, TableStats, TablingError};

pub const PATTERN: &str = "welcome to code jam";
pub const MODULUS: u32 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WelcomeInstance {
    pub text: String,
}

impl WelcomeInstance {
    pub fn new(text: impl Into<String>) -> Self {
        WelcomeInstance { text: text.into() }
    }
}

/// `ways(i, j)`: embeddings of the first `j` pattern bytes into the first
/// `i` text bytes, mod 10000.
struct Ways<'a> {
    text: &'a [u8],
    pattern: &'a [u8],
}

impl Ways<'_> {
    fn step<E>(
        &self,
        i: usize,
        j: usize,
        recurse: &mut dyn FnMut(usize, usize) -> Result<u32, E>,
    ) -> Result<u32, E> {
        if j == 0 {
            return Ok(1);
        }
        if i == 0 {
            return Ok(0);
        }
        if self.text[i - 1] == self.pattern[j - 1] {
            Ok((recurse(i - 1, j)? + recurse(i - 1, j - 1)?) % MODULUS)
        } else {
            recurse(i - 1, j)
        }
    }

    fn untabled(&self, i: usize, j: usize) -> u32 {
        let r: Result<u32, std::convert::Infallible> =
            self.step(i, j, &mut |i, j| Ok(self.untabled(i, j)));
        match r {
            Ok(v) => v,
        }
    }
}

impl Evaluator<ArgKey, u32> for Ways<'_> {
    fn compute(
        &self,
        key: &ArgKey,
        table: &mut MemoTable<ArgKey, u32>,
    ) -> Result<u32, TablingError> {
        let (i, j) = (key.int(0) as usize, key.int(1) as usize);
        self.step(i, j, &mut |i, j| {
            table.tabled_eval(ArgKey::new(&[i as i64, j as i64]), self)
        })
    }
}

/// Count mod 10000 through a fresh functional table, with its statistics.
pub fn count_tabled(inst: &WelcomeInstance) -> (u32, TableStats) {
    let ways = Ways {
        text: inst.text.as_bytes(),
        pattern: PATTERN.as_bytes(),
    };
    let mut table = MemoTable::functional();
    let key = ArgKey::new(&[ways.text.len() as i64, ways.pattern.len() as i64]);
    let count = table
        .tabled_eval(key, &ways)
        .expect("recursion strictly decreases i, so it is acyclic");
    (count, table.stats())
}

/// Same recurrence with no table. Exponential; for small texts only.
pub fn count_untabled(inst: &WelcomeInstance) -> u32 {
    let ways = Ways {
        text: inst.text.as_bytes(),
        pattern: PATTERN.as_bytes(),
    };
    ways.untabled(ways.text.len(), ways.pattern.len())
}

pub fn solve_welcome(inst: &WelcomeInstance) -> String {
    format!("{:04}", count_tabled(inst).0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(solve_welcome(&WelcomeInstance::new(PATTERN)), "0001");
        assert_eq!(
            solve_welcome(&WelcomeInstance::new("welcome to codejam")),
            "0000"
        );
        let doubled: String = PATTERN.chars().flat_map(|c| [c, c]).collect();
        assert_eq!(doubled.len(), 38);
        // 2^19 = 524288
        assert_eq!(solve_welcome(&WelcomeInstance::new(doubled)), "4288");
    }

    #[test]
    fn pattern_length() {
        assert_eq!(PATTERN.len(), 19);
    }

    #[test]
    fn base_cases() {
        let w = Ways {
            text: b"abc",
            pattern: PATTERN.as_bytes(),
        };
        assert_eq!(w.untabled(0, 5), 0);
        assert_eq!(w.untabled(3, 0), 1);
        assert_eq!(w.untabled(0, 0), 1);
    }

    #[test]
    fn empty_text_gives_zero() {
        assert_eq!(solve_welcome(&WelcomeInstance::new("")), "0000");
    }

    #[test]
    fn misses_bounded_by_key_space() {
        let inst = WelcomeInstance::new("wweellccoommee  ttoo  ccooddee  jjaamm");
        let (count, stats) = count_tabled(&inst);
        assert_eq!(count, 4288);
        assert!(stats.misses <= (inst.text.len() as u64 + 1) * 20);
    }
}
