//! Osmos as a planning problem.
//!
//! The state is Armin's size plus the passive motes sorted ascending. Armin
//! only ever needs to absorb the smallest mote, remove the largest, or add a
//! mote of size `armin - 1` in front where it is absorbed next.

use crate::planner::{self, Plan, SearchProblem, Transition};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OsmosInstance {
    pub armin: u64,
    /// Sorted ascending.
    pub others: Vec<u64>,
}

impl OsmosInstance {
    pub fn new(armin: u64, mut others: Vec<u64>) -> Self {
        others.sort_unstable();
        OsmosInstance { armin, others }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OsmosState {
    pub armin: u64,
    pub others: Vec<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OsmosAction {
    Absorb,
    Remove,
    Add,
}

pub struct OsmosProblem {
    initial: OsmosState,
    limit: u64,
}

impl OsmosProblem {
    /// Limit is the passive-mote count: removing everything always works.
    pub fn new(inst: &OsmosInstance) -> Self {
        Self::with_limit(inst, inst.others.len() as u64)
    }

    pub fn with_limit(inst: &OsmosInstance, limit: u64) -> Self {
        let mut others = inst.others.clone();
        others.sort_unstable();
        OsmosProblem {
            initial: OsmosState {
                armin: inst.armin,
                others,
            },
            limit,
        }
    }
}

impl SearchProblem for OsmosProblem {
    type State = OsmosState;
    type Action = OsmosAction;

    fn initial(&self) -> OsmosState {
        self.initial.clone()
    }

    fn is_final(&self, state: &OsmosState) -> bool {
        state.others.is_empty()
    }

    fn actions(&self, s: &OsmosState) -> Vec<Transition<OsmosState, OsmosAction>> {
        let Some(&smallest) = s.others.first() else {
            return Vec::new();
        };
        if s.armin > smallest {
            return vec![Transition {
                action: OsmosAction::Absorb,
                next: OsmosState {
                    armin: s.armin.saturating_add(smallest),
                    others: s.others[1..].to_vec(),
                },
                cost: 0,
            }];
        }
        let mut out = vec![Transition {
            action: OsmosAction::Remove,
            next: OsmosState {
                armin: s.armin,
                others: s.others[..s.others.len() - 1].to_vec(),
            },
            cost: 1,
        }];
        // a size-0 mote is not a mote
        if s.armin > 1 {
            let mut others = Vec::with_capacity(s.others.len() + 1);
            others.push(s.armin - 1);
            others.extend_from_slice(&s.others);
            out.push(Transition {
                action: OsmosAction::Add,
                next: OsmosState {
                    armin: s.armin,
                    others,
                },
                cost: 1,
            });
        }
        out
    }

    fn measure(&self, state: &OsmosState) -> u64 {
        state.others.len() as u64
    }

    fn limit(&self) -> u64 {
        self.limit
    }
}

pub fn best_osmos_plan(inst: &OsmosInstance) -> Plan<OsmosAction> {
    planner::best_plan(&OsmosProblem::new(inst))
        .expect("osmos actions have non-negative costs and absorb shrinks the mote list")
        .expect("removing every mote fits the limit")
}

pub fn solve_osmos_plan(inst: &OsmosInstance) -> u64 {
    best_osmos_plan(inst).cost
}
