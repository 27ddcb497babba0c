//! A deliberately small finite-domain solver.
//!
//! Variables range over integer intervals. The only constraint form is the
//! absolute cross product `|x2*y3 - x3*y2| = a`, which is all the lattice
//! triangle model needs. Propagation is bounds reasoning over interval
//! products; search is depth-first labeling, smallest domain first, values
//! ascending.

use std::fmt;

/// Largest magnitude accepted for a domain bound. Products of two such
/// values and their differences stay well inside `i128`.
pub const MAX_BOUND: i64 = 1 << 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum FdError {
    #[error("unknown variable handle {0}")]
    UnknownVar(usize),
    #[error("domain [{lo}, {hi}] must be non-empty, non-negative and at most 2^40")]
    BadDomain { lo: i64, hi: i64 },
    #[error("target {0} must be non-negative")]
    NegativeTarget(i64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IntervalDomain {
    pub lo: i64,
    pub hi: i64,
}

impl IntervalDomain {
    pub fn new(lo: i64, hi: i64) -> Self {
        IntervalDomain { lo, hi }
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    pub fn size(&self) -> u64 {
        if self.is_empty() {
            0
        } else {
            (self.hi - self.lo) as u64 + 1
        }
    }

    pub fn contains(&self, v: i64) -> bool {
        self.lo <= v && v <= self.hi
    }

    pub fn is_subset_of(&self, other: &IntervalDomain) -> bool {
        self.is_empty() || (other.lo <= self.lo && self.hi <= other.hi)
    }

    pub fn value(&self) -> Option<i64> {
        (self.lo == self.hi).then_some(self.lo)
    }
}

impl fmt::Display for IntervalDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarId(usize);

impl VarId {
    pub fn index(self) -> usize {
        self.0
    }
}

/// `|x2*y3 - x3*y2| = target`
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AbsCrossConstraint {
    pub target: i64,
    pub x2: VarId,
    pub y2: VarId,
    pub x3: VarId,
    pub y3: VarId,
}

impl AbsCrossConstraint {
    pub fn new(target: i64, [x2, y2, x3, y3]: [VarId; 4]) -> Self {
        AbsCrossConstraint {
            target,
            x2,
            y2,
            x3,
            y3,
        }
    }

    pub fn vars(&self) -> [VarId; 4] {
        [self.x2, self.y2, self.x3, self.y3]
    }

    pub fn is_satisfied_by(&self, x2: i64, y2: i64, x3: i64, y3: i64) -> bool {
        let cross = x2 as i128 * y3 as i128 - x3 as i128 * y2 as i128;
        cross.abs() == self.target as i128
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Consistent,
    Inconsistent,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub failures: u64,
}

#[derive(Debug, Clone)]
pub struct Store {
    initial: Vec<IntervalDomain>,
    domains: Vec<IntervalDomain>,
    constraints: Vec<AbsCrossConstraint>,
    failed: bool,
    stats: SearchStats,
}

impl Default for Store {
    fn default() -> Self {
        Self::new()
    }
}

impl Store {
    pub fn new() -> Self {
        Store {
            initial: Vec::new(),
            domains: Vec::new(),
            constraints: Vec::new(),
            failed: false,
            stats: SearchStats::default(),
        }
    }

    pub fn new_var(&mut self, lo: i64, hi: i64) -> Result<VarId, FdError> {
        if lo > hi || lo < 0 || hi > MAX_BOUND {
            return Err(FdError::BadDomain { lo, hi });
        }
        let d = IntervalDomain::new(lo, hi);
        self.initial.push(d);
        self.domains.push(d);
        Ok(VarId(self.domains.len() - 1))
    }

    pub fn domain(&self, v: VarId) -> IntervalDomain {
        self.domains[v.0]
    }

    pub fn initial_domain(&self, v: VarId) -> IntervalDomain {
        self.initial[v.0]
    }

    pub fn var_count(&self) -> usize {
        self.domains.len()
    }

    pub fn status(&self) -> Status {
        if self.failed {
            Status::Inconsistent
        } else {
            Status::Consistent
        }
    }

    pub fn stats(&self) -> SearchStats {
        self.stats
    }

    /// Records the constraint and propagates to a fixpoint.
    pub fn post(&mut self, c: AbsCrossConstraint) -> Result<Status, FdError> {
        if c.target < 0 {
            return Err(FdError::NegativeTarget(c.target));
        }
        if let Some(bad) = c.vars().iter().find(|v| v.0 >= self.domains.len()) {
            return Err(FdError::UnknownVar(bad.0));
        }
        self.constraints.push(c);
        if !self.failed && !propagate(&mut self.domains, &self.constraints) {
            self.failed = true;
        }
        Ok(self.status())
    }

    /// Finds an assignment to `vars` satisfying every posted constraint.
    ///
    /// The returned values follow the order of `vars`. On success the store
    /// holds the solution's singleton domains; on failure the domains are
    /// left as they were before the call.
    pub fn label(&mut self, vars: &[VarId]) -> Result<Option<Vec<i64>>, FdError> {
        if let Some(bad) = vars.iter().find(|v| v.0 >= self.domains.len()) {
            return Err(FdError::UnknownVar(bad.0));
        }
        if self.failed {
            return Ok(None);
        }
        let saved = self.domains.clone();
        let mut stats = self.stats;
        let found = dfs(&mut self.domains, &self.constraints, vars, &mut stats);
        self.stats = stats;
        if found {
            Ok(Some(vars.iter().map(|v| self.domains[v.0].lo).collect()))
        } else {
            self.domains = saved;
            Ok(None)
        }
    }
}

fn dfs(
    domains: &mut Vec<IntervalDomain>,
    constraints: &[AbsCrossConstraint],
    vars: &[VarId],
    stats: &mut SearchStats,
) -> bool {
    stats.nodes += 1;
    // smallest unbound domain, first registered on ties
    let Some(var) = vars
        .iter()
        .copied()
        .filter(|v| domains[v.0].value().is_none())
        .min_by_key(|v| (domains[v.0].size(), v.0))
    else {
        return true;
    };
    let IntervalDomain { lo, hi } = domains[var.0];
    for value in lo..=hi {
        // propagation may have already raised the lower bound past `value`
        if !domains[var.0].contains(value) {
            continue;
        }
        let snapshot = domains.clone();
        domains[var.0] = IntervalDomain::new(value, value);
        if propagate(domains, constraints) && dfs(domains, constraints, vars, stats) {
            return true;
        }
        stats.failures += 1;
        *domains = snapshot;
    }
    false
}

/// Runs every constraint until no bound moves. Returns false on a wipe-out.
pub(crate) fn propagate(
    domains: &mut [IntervalDomain],
    constraints: &[AbsCrossConstraint],
) -> bool {
    loop {
        let mut changed = false;
        for c in constraints {
            match narrow(domains, c) {
                None => return false,
                Some(moved) => changed |= moved,
            }
        }
        if !changed {
            return true;
        }
    }
}

#[derive(Clone, Copy)]
struct Range {
    lo: i128,
    hi: i128,
}

impl Range {
    fn of(d: IntervalDomain) -> Range {
        Range {
            lo: d.lo as i128,
            hi: d.hi as i128,
        }
    }

    fn mul(self, other: Range) -> Range {
        let corners = [
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        ];
        Range {
            lo: *corners.iter().min().unwrap(),
            hi: *corners.iter().max().unwrap(),
        }
    }

    fn meet(self, other: Range) -> Option<Range> {
        let r = Range {
            lo: self.lo.max(other.lo),
            hi: self.hi.min(other.hi),
        };
        (r.lo <= r.hi).then_some(r)
    }
}

/// One pass of bounds reasoning for `|p - q| = a` with `p = x2*y3`,
/// `q = x3*y2`. Returns `None` on wipe-out, else whether a bound moved.
fn narrow(domains: &mut [IntervalDomain], c: &AbsCrossConstraint) -> Option<bool> {
    let a = c.target as i128;
    let p = Range::of(domains[c.x2.0]).mul(Range::of(domains[c.y3.0]));
    let q = Range::of(domains[c.x3.0]).mul(Range::of(domains[c.y2.0]));
    let diff = Range {
        lo: p.lo - q.hi,
        hi: p.hi - q.lo,
    };

    // p - q must be a or -a; take the hull of whichever survive
    let pos = diff.meet(Range { lo: a, hi: a });
    let neg = diff.meet(Range { lo: -a, hi: -a });
    let diff = match (neg, pos) {
        (None, None) => return None,
        (Some(r), None) | (None, Some(r)) => r,
        (Some(n), Some(p)) => Range { lo: n.lo, hi: p.hi },
    };

    let p = p.meet(Range {
        lo: q.lo + diff.lo,
        hi: q.hi + diff.hi,
    })?;
    let q = q.meet(Range {
        lo: p.lo - diff.hi,
        hi: p.hi - diff.lo,
    })?;

    let mut moved = false;
    moved |= narrow_product(domains, c.x2, c.y3, p)?;
    moved |= narrow_product(domains, c.x3, c.y2, q)?;
    Some(moved)
}

/// Tightens `x` and `y` so that `x*y` can land in `target`, for
/// non-negative domains.
fn narrow_product(
    domains: &mut [IntervalDomain],
    x: VarId,
    y: VarId,
    target: Range,
) -> Option<bool> {
    let mut moved = false;
    // two rounds let the second factor see the first one's new bounds
    for _ in 0..2 {
        moved |= narrow_factor(domains, x, y, target)?;
        moved |= narrow_factor(domains, y, x, target)?;
    }
    Some(moved)
}

fn narrow_factor(
    domains: &mut [IntervalDomain],
    x: VarId,
    y: VarId,
    target: Range,
) -> Option<bool> {
    let dx = Range::of(domains[x.0]);
    let dy = Range::of(domains[y.0]);
    let mut lo = dx.lo;
    let mut hi = dx.hi;
    if target.hi < 0 {
        return None;
    }
    if target.lo > 0 {
        // x*y >= target.lo needs x >= ceil(target.lo / y.hi)
        if dy.hi == 0 {
            return None;
        }
        lo = lo.max(ceil_div(target.lo, dy.hi));
    }
    if dy.lo > 0 {
        hi = hi.min(target.hi / dy.lo);
    }
    if lo > hi {
        return None;
    }
    let moved = lo != dx.lo || hi != dx.hi;
    domains[x.0] = IntervalDomain::new(lo as i64, hi as i64);
    Some(moved)
}

fn ceil_div(n: i128, d: i128) -> i128 {
    debug_assert!(n >= 0 && d > 0);
    (n + d - 1) / d
}
