//! Cost-optimal plan search with a resource limit.
//!
//! The search deepens a cost bound from 0 up to the limit. Under each bound
//! it runs a depth-first search that tables every visited state with the
//! least cost spent reaching it, and skips re-entries that arrive no
//! cheaper. The first plan found under bound `b` costs exactly `b`, since
//! bound `b - 1` found nothing.
//!
//! Zero-cost actions could loop forever, so every problem declares a
//! measure on states that each zero-cost action must strictly decrease.

use std::collections::HashMap;
use std::hash::Hash;
use std::time::Instant;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PlanError {
    #[error("action {action} has negative cost {cost}")]
    NegativeCost { action: String, cost: i64 },
    #[error("zero-cost action {action} does not decrease the measure ({before} -> {after})")]
    MeasureNotDecreased {
        action: String,
        before: u64,
        after: u64,
    },
    #[error("step {step}: action {action} is not applicable")]
    NotApplicable { step: usize, action: String },
    #[error("deadline passed after {expanded} expansions")]
    DeadlineExceeded { expanded: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transition<S, A> {
    pub action: A,
    pub next: S,
    pub cost: i64,
}

pub trait SearchProblem {
    type State: Clone + Eq + Hash;
    type Action: Clone + Eq + std::fmt::Debug;

    fn initial(&self) -> Self::State;
    fn is_final(&self, state: &Self::State) -> bool;
    /// Applicable transitions, in the order the search should try them.
    fn actions(&self, state: &Self::State) -> Vec<Transition<Self::State, Self::Action>>;
    /// Well-founded measure strictly decreased by every zero-cost action.
    fn measure(&self, state: &Self::State) -> u64;
    fn limit(&self) -> u64;
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Plan<A> {
    pub steps: Vec<A>,
    pub cost: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Prune states already reached at equal or lower cost under the
    /// current bound.
    pub use_table: bool,
    /// Abandon the search once this instant has passed.
    pub deadline: Option<Instant>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            use_table: true,
            deadline: None,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub expanded: u64,
    pub pruned: u64,
    pub bounds_tried: u64,
}

pub fn best_plan<P: SearchProblem>(problem: &P) -> Result<Option<Plan<P::Action>>, PlanError> {
    best_plan_with(problem, SearchOptions::default()).map(|(plan, _)| plan)
}

pub type PlanOutcome<A> = (Option<Plan<A>>, SearchStats);

pub fn best_plan_with<P: SearchProblem>(
    problem: &P,
    options: SearchOptions,
) -> Result<PlanOutcome<P::Action>, PlanError> {
    let initial = problem.initial();
    let mut stats = SearchStats::default();
    for bound in 0..=problem.limit() {
        stats.bounds_tried += 1;
        let mut search = BoundedDfs {
            problem,
            bound,
            options,
            visited: HashMap::new(),
            path: Vec::new(),
            stats: &mut stats,
        };
        if let Some(cost) = search.run(&initial, 0)? {
            let steps = std::mem::take(&mut search.path);
            return Ok((Some(Plan { steps, cost }), stats));
        }
    }
    Ok((None, stats))
}

struct BoundedDfs<'a, P: SearchProblem> {
    problem: &'a P,
    bound: u64,
    options: SearchOptions,
    visited: HashMap<P::State, u64>,
    path: Vec<P::Action>,
    stats: &'a mut SearchStats,
}

impl<P: SearchProblem> BoundedDfs<'_, P> {
    fn run(&mut self, state: &P::State, spent: u64) -> Result<Option<u64>, PlanError> {
        if self.problem.is_final(state) {
            return Ok(Some(spent));
        }
        if self.options.use_table {
            match self.visited.get(state) {
                Some(&seen) if seen <= spent => {
                    self.stats.pruned += 1;
                    return Ok(None);
                }
                _ => {
                    self.visited.insert(state.clone(), spent);
                }
            }
        }
        self.stats.expanded += 1;
        if let Some(deadline) = self.options.deadline {
            // sample the clock every 1024 expansions
            if self.stats.expanded.is_multiple_of(1024) && Instant::now() > deadline {
                return Err(PlanError::DeadlineExceeded {
                    expanded: self.stats.expanded,
                });
            }
        }
        for t in self.problem.actions(state) {
            let cost = u64::try_from(t.cost).map_err(|_| PlanError::NegativeCost {
                action: format!("{:?}", t.action),
                cost: t.cost,
            })?;
            if cost == 0 {
                let before = self.problem.measure(state);
                let after = self.problem.measure(&t.next);
                if after >= before {
                    return Err(PlanError::MeasureNotDecreased {
                        action: format!("{:?}", t.action),
                        before,
                        after,
                    });
                }
            }
            let total = spent + cost;
            if total > self.bound {
                continue;
            }
            self.path.push(t.action);
            if let Some(found) = self.run(&t.next, total)? {
                return Ok(Some(found));
            }
            self.path.pop();
        }
        Ok(None)
    }
}

/// Re-applies `plan` from the initial state, choosing for each step the
/// first applicable transition with that action. Returns the reached state
/// and the summed cost.
pub fn replay<P: SearchProblem>(
    problem: &P,
    plan: &Plan<P::Action>,
) -> Result<(P::State, u64), PlanError> {
    let mut state = problem.initial();
    let mut cost = 0u64;
    for (step, action) in plan.steps.iter().enumerate() {
        let t = problem
            .actions(&state)
            .into_iter()
            .find(|t| &t.action == action)
            .ok_or_else(|| PlanError::NotApplicable {
                step,
                action: format!("{action:?}"),
            })?;
        cost += u64::try_from(t.cost).map_err(|_| PlanError::NegativeCost {
            action: format!("{action:?}"),
            cost: t.cost,
        })?;
        state = t.next;
    }
    Ok((state, cost))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Walk a number line from `start` to `goal`; `+1` costs 1, `+3` costs 2.
    struct Line {
        start: i64,
        goal: i64,
        limit: u64,
    }

    impl SearchProblem for Line {
        type State = i64;
        type Action = &'static str;

        fn initial(&self) -> i64 {
            self.start
        }
        fn is_final(&self, s: &i64) -> bool {
            *s == self.goal
        }
        fn actions(&self, s: &i64) -> Vec<Transition<i64, &'static str>> {
            let mut out = Vec::new();
            if *s < self.goal {
                out.push(Transition {
                    action: "step",
                    next: s + 1,
                    cost: 1,
                });
                out.push(Transition {
                    action: "jump",
                    next: s + 3,
                    cost: 2,
                });
            }
            out
        }
        fn measure(&self, _: &i64) -> u64 {
            0
        }
        fn limit(&self) -> u64 {
            self.limit
        }
    }

    #[test]
    fn already_final_gives_empty_plan() {
        let p = Line {
            start: 4,
            goal: 4,
            limit: 0,
        };
        assert_eq!(
            best_plan(&p).unwrap(),
            Some(Plan {
                steps: vec![],
                cost: 0
            })
        );
    }

    #[test]
    fn finds_cheapest_mix() {
        let p = Line {
            start: 0,
            goal: 7,
            limit: 10,
        };
        let plan = best_plan(&p).unwrap().unwrap();
        // 2 jumps + 1 step = 5 beats 7 steps
        assert_eq!(plan.cost, 5);
        assert_eq!(replay(&p, &plan).unwrap(), (7, 5));
        // ties go to the first generated action, depth-first
        assert_eq!(plan.steps, vec!["step", "jump", "jump"]);
    }

    #[test]
    fn fails_when_limit_too_small() {
        let p = Line {
            start: 0,
            goal: 7,
            limit: 4,
        };
        assert_eq!(best_plan(&p).unwrap(), None);
    }

    #[test]
    fn table_does_not_change_cost() {
        for goal in 0..12 {
            let p = Line {
                start: 0,
                goal,
                limit: 12,
            };
            let (with, s1) = best_plan_with(&p, SearchOptions::default()).unwrap();
            let (without, s2) = best_plan_with(
                &p,
                SearchOptions {
                    use_table: false,
                    ..SearchOptions::default()
                },
            )
            .unwrap();
            assert_eq!(with.map(|p| p.cost), without.map(|p| p.cost));
            assert!(s1.expanded <= s2.expanded);
        }
    }

    struct Bad {
        cost: i64,
    }

    impl SearchProblem for Bad {
        type State = u8;
        type Action = &'static str;
        fn initial(&self) -> u8 {
            0
        }
        fn is_final(&self, s: &u8) -> bool {
            *s == 9
        }
        fn actions(&self, s: &u8) -> Vec<Transition<u8, &'static str>> {
            vec![Transition {
                action: "spin",
                next: *s,
                cost: self.cost,
            }]
        }
        fn measure(&self, _: &u8) -> u64 {
            1
        }
        fn limit(&self) -> u64 {
            3
        }
    }

    #[test]
    fn usage_errors() {
        assert!(matches!(
            best_plan(&Bad { cost: -1 }),
            Err(PlanError::NegativeCost { .. })
        ));
        assert!(matches!(
            best_plan(&Bad { cost: 0 }),
            Err(PlanError::MeasureNotDecreased { .. })
        ));
        let bogus = Plan {
            steps: vec!["fly"],
            cost: 0,
        };
        assert!(matches!(
            replay(&Bad { cost: 1 }, &bogus),
            Err(PlanError::NotApplicable { step: 0, .. })
        ));
    }
}
