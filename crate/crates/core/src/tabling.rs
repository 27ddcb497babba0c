//! Memoization tables for recursive evaluators.
//!
//! Two policies are supported. A functional table caches the single value a
//! deterministic evaluator produces for each key. A min table caches, per
//! key, the minimum over every candidate answer a deriver produces.
//!
//! Evaluators receive the table itself so they can recurse through it:
//!
//! ```
//! use jamsolve::tabling::{ArgKey, Evaluator, MemoTable, TablingError};
//!
//! struct Fib;
//!
//! impl Evaluator<ArgKey, u64> for Fib {
//!     fn compute(&self, key: &ArgKey, table: &mut MemoTable<ArgKey, u64>) -> Result<u64, TablingError> {
//!         let n = key.int(0);
//!         if n < 2 {
//!             return Ok(n as u64);
//!         }
//!         let a = table.tabled_eval(ArgKey::new(&[n - 1]), self)?;
//!         let b = table.tabled_eval(ArgKey::new(&[n - 2]), self)?;
//!         Ok(a + b)
//!     }
//! }
//!
//! let mut table = MemoTable::functional();
//! assert_eq!(table.tabled_eval(ArgKey::new(&[50]), &Fib).unwrap(), 12_586_269_025);
//! ```

use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use smallvec::SmallVec;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TablingError {
    #[error("cyclic dependency on key {0}")]
    CyclicDependency(String),
    #[error("no derivation for key {0}")]
    NoDerivation(String),
    #[error("table policy is {actual:?}, call requires {expected:?}")]
    PolicyMismatch { expected: Policy, actual: Policy },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Policy {
    /// First computed value is final.
    Functional,
    /// Keep the minimum over all derivations.
    Min,
}

/// Canonical byte encoding of the input-mode arguments of a call.
///
/// Each integer argument is written as eight little-endian bytes, so equal
/// argument lists always produce equal keys. Up to two arguments fit without
/// heap allocation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ArgKey(SmallVec<[u8; 16]>);

impl ArgKey {
    pub fn new(args: &[i64]) -> Self {
        let mut bytes = SmallVec::with_capacity(args.len() * 8);
        for a in args {
            bytes.extend_from_slice(&a.to_le_bytes());
        }
        ArgKey(bytes)
    }

    pub fn arity(&self) -> usize {
        self.0.len() / 8
    }

    /// Decodes the `idx`-th integer argument.
    pub fn int(&self, idx: usize) -> i64 {
        let mut buf = [0u8; 8];
        buf.copy_from_slice(&self.0[idx * 8..idx * 8 + 8]);
        i64::from_le_bytes(buf)
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Debug for ArgKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let args: Vec<i64> = (0..self.arity()).map(|i| self.int(i)).collect();
        write!(f, "{args:?}")
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TableStats {
    pub hits: u64,
    pub misses: u64,
}

impl TableStats {
    pub fn calls(&self) -> u64 {
        self.hits + self.misses
    }
}

impl fmt::Display for TableStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "hits={} misses={}", self.hits, self.misses)
    }
}

/// A deterministic recursive function evaluated through a functional table.
pub trait Evaluator<K, V> {
    fn compute(&self, key: &K, table: &mut MemoTable<K, V>) -> Result<V, TablingError>;
}

/// A nondeterministic definition whose answers are aggregated by minimum.
pub trait Deriver<K, V> {
    /// Pushes every candidate answer for `key` onto `out`. Sub-answers are
    /// obtained through `table.min_eval`.
    fn derive(
        &self,
        key: &K,
        table: &mut MemoTable<K, V>,
        out: &mut Vec<V>,
    ) -> Result<(), TablingError>;
}

#[derive(Debug, Clone)]
enum Slot<V> {
    InProgress,
    Done(V),
}

#[derive(Debug, Clone)]
pub struct MemoTable<K, V> {
    entries: HashMap<K, Slot<V>>,
    policy: Policy,
    stats: TableStats,
}

impl<K, V> MemoTable<K, V>
where
    K: Eq + Hash + Clone + fmt::Debug,
    V: Clone,
{
    pub fn new(policy: Policy) -> Self {
        MemoTable {
            entries: HashMap::new(),
            policy,
            stats: TableStats::default(),
        }
    }

    pub fn functional() -> Self {
        Self::new(Policy::Functional)
    }

    pub fn min() -> Self {
        Self::new(Policy::Min)
    }

    pub fn policy(&self) -> Policy {
        self.policy
    }

    pub fn stats(&self) -> TableStats {
        self.stats
    }

    /// Number of keys with a completed answer.
    pub fn len(&self) -> usize {
        self.entries
            .values()
            .filter(|s| matches!(s, Slot::Done(_)))
            .count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, key: &K) -> Option<&V> {
        match self.entries.get(key) {
            Some(Slot::Done(v)) => Some(v),
            _ => None,
        }
    }

    fn require(&self, expected: Policy) -> Result<(), TablingError> {
        if self.policy == expected {
            Ok(())
        } else {
            Err(TablingError::PolicyMismatch {
                expected,
                actual: self.policy,
            })
        }
    }

    /// Looks up `key`, counting the access. `Ok(None)` means the caller must
    /// compute it; the key is then marked in progress.
    fn begin(&mut self, key: &K) -> Result<Option<V>, TablingError> {
        match self.entries.entry(key.clone()) {
            Entry::Occupied(e) => match e.get() {
                Slot::Done(v) => {
                    self.stats.hits += 1;
                    Ok(Some(v.clone()))
                }
                Slot::InProgress => Err(TablingError::CyclicDependency(format!("{key:?}"))),
            },
            Entry::Vacant(e) => {
                self.stats.misses += 1;
                e.insert(Slot::InProgress);
                Ok(None)
            }
        }
    }

    fn abandon(&mut self, key: &K) {
        self.entries.remove(key);
    }

    pub fn tabled_eval<E>(&mut self, key: K, evaluator: &E) -> Result<V, TablingError>
    where
        E: Evaluator<K, V> + ?Sized,
    {
        self.require(Policy::Functional)?;
        if let Some(v) = self.begin(&key)? {
            return Ok(v);
        }
        match evaluator.compute(&key, self) {
            Ok(v) => {
                self.entries.insert(key, Slot::Done(v.clone()));
                Ok(v)
            }
            Err(e) => {
                self.abandon(&key);
                Err(e)
            }
        }
    }

    pub fn min_eval<D>(&mut self, key: K, deriver: &D) -> Result<V, TablingError>
    where
        D: Deriver<K, V> + ?Sized,
        V: Ord,
    {
        self.require(Policy::Min)?;
        if let Some(v) = self.begin(&key)? {
            return Ok(v);
        }
        let mut candidates = Vec::new();
        let derived = deriver.derive(&key, self, &mut candidates);
        let best = derived.and_then(|()| {
            candidates
                .into_iter()
                .min()
                .ok_or_else(|| TablingError::NoDerivation(format!("{key:?}")))
        });
        match best {
            Ok(v) => {
                self.entries.insert(key, Slot::Done(v.clone()));
                Ok(v)
            }
            Err(e) => {
                self.abandon(&key);
                Err(e)
            }
        }
    }
}
