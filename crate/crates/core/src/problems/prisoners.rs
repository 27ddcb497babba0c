//! Bribe the Prisoners: release a set of prisoners from a row of occupied
//! cells in the order that pays the fewest coins.
//!
//! `cost(a, b)` is the cheapest way to release every listed prisoner in
//! cells `a..=b` when exactly those cells are still a contiguous block.
//! Releasing `x` first pays `b - a` and splits the block at `x`.

use crate::tabling::{ArgKey, Deriver, MemoTable, TableStats, TablingError};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrisonerInstance {
    cells: i64,
    free: Vec<i64>,
}

impl PrisonerInstance {
    /// Sorts the release list; rejects duplicates and out-of-range cells.
    pub fn new(cells: i64, mut free: Vec<i64>) -> Result<Self, String> {
        if cells < 1 {
            return Err(format!("cell count must be positive, got {cells}"));
        }
        free.sort_unstable();
        if let Some(w) = free.windows(2).find(|w| w[0] == w[1]) {
            return Err(format!("cell {} listed twice", w[0]));
        }
        if let Some(bad) = free.iter().find(|&&x| x < 1 || x > cells) {
            return Err(format!("cell {bad} outside 1..={cells}"));
        }
        Ok(PrisonerInstance { cells, free })
    }

    pub fn cells(&self) -> i64 {
        self.cells
    }

    pub fn free(&self) -> &[i64] {
        &self.free
    }
}

struct ReleaseCost<'a> {
    free: &'a [i64],
}

impl Deriver<ArgKey, u64> for ReleaseCost<'_> {
    fn derive(
        &self,
        key: &ArgKey,
        table: &mut MemoTable<ArgKey, u64>,
        out: &mut Vec<u64>,
    ) -> Result<(), TablingError> {
        let (a, b) = (key.int(0), key.int(1));
        let start = self.free.partition_point(|&x| x < a);
        let end = self.free.partition_point(|&x| x <= b);
        if start >= end {
            out.push(0);
            return Ok(());
        }
        for &x in &self.free[start..end] {
            let left = table.min_eval(ArgKey::new(&[a, x - 1]), self)?;
            let right = table.min_eval(ArgKey::new(&[x + 1, b]), self)?;
            out.push((b - a) as u64 + left + right);
        }
        Ok(())
    }
}

pub fn release_cost(inst: &PrisonerInstance) -> (u64, TableStats) {
    let deriver = ReleaseCost { free: &inst.free };
    let mut table = MemoTable::min();
    let cost = table
        .min_eval(ArgKey::new(&[1, inst.cells]), &deriver)
        .expect("ranges shrink on every split and always have a derivation");
    (cost, table.stats())
}

pub fn solve_prisoners(inst: &PrisonerInstance) -> u64 {
    release_cost(inst).0
}
