use std::cell::Cell;

use jamsolve::fd::{AbsCrossConstraint, Status, Store};
use jamsolve::io;
use jamsolve::oracles;
use jamsolve::planner::{self, SearchOptions};
use jamsolve::problems::osmos::{solve_osmos_plan, OsmosInstance, OsmosProblem};
use jamsolve::problems::prisoners::PrisonerInstance;
use jamsolve::problems::triangle::TriangleInstance;
use jamsolve::problems::welcome::{solve_welcome, WelcomeInstance};
use jamsolve::tabling::{ArgKey, Evaluator, MemoTable, TablingError};
use proptest::collection::{btree_set, vec};
use proptest::prelude::*;

fn welcome_text() -> impl Strategy<Value = String> {
    "[welcomtdja ]{0,40}"
}

fn triangle_instance() -> impl Strategy<Value = TriangleInstance> {
    (1i64..10_000, 1i64..10_000, 1i64..100_000_000).prop_map(|(n, m, a)| TriangleInstance {
        n,
        m,
        a,
    })
}

fn prisoner_instance() -> impl Strategy<Value = PrisonerInstance> {
    (1i64..200).prop_flat_map(|p| {
        btree_set(1..=p, 0..=(p as usize).min(12))
            .prop_map(move |free| PrisonerInstance::new(p, free.into_iter().collect()).unwrap())
    })
}

fn osmos_instance(motes: usize, size: u64) -> impl Strategy<Value = OsmosInstance> {
    (1..=size, vec(1..=size, 0..=motes)).prop_map(|(a, o)| OsmosInstance::new(a, o))
}

proptest! {
    #[test]
    fn case_files_round_trip(
        tri in vec(triangle_instance(), 1..5),
        texts in vec(welcome_text(), 1..5),
        pris in vec(prisoner_instance(), 1..5),
        motes in vec(osmos_instance(20, 1_000_000), 1..5),
    ) {
        prop_assert_eq!(io::parse_triangle(&io::write_triangle(&tri)).unwrap().cases, tri);
        let welcome: Vec<_> = texts.into_iter().map(WelcomeInstance::new).collect();
        prop_assert_eq!(io::parse_welcome(&io::write_welcome(&welcome)).unwrap().cases, welcome);
        prop_assert_eq!(io::parse_prisoners(&io::write_prisoners(&pris)).unwrap().cases, pris);
        prop_assert_eq!(io::parse_osmos(&io::write_osmos(&motes)).unwrap().cases, motes);
    }

    #[test]
    fn labeling_is_sound_on_wider_boxes(n in 1i64..200, m in 1i64..200, a in 0i64..40_000) {
        let mut store = Store::new();
        let vars = [
            store.new_var(0, n).unwrap(),
            store.new_var(0, m).unwrap(),
            store.new_var(0, n).unwrap(),
            store.new_var(0, m).unwrap(),
        ];
        let c = AbsCrossConstraint::new(a, vars);
        let status = store.post(c).unwrap();
        for v in vars {
            prop_assert!(store.domain(v).is_subset_of(&store.initial_domain(v)) || status == Status::Inconsistent);
        }
        let sol = store.label(&vars).unwrap();
        prop_assert_eq!(sol.is_some(), a <= n * m);
        if let Some(s) = sol {
            prop_assert!(c.is_satisfied_by(s[0], s[1], s[2], s[3]));
            prop_assert!(s[0] <= n && s[2] <= n && s[1] <= m && s[3] <= m);
        }
    }

    #[test]
    fn welcome_output_is_four_digits(text in welcome_text()) {
        let out = solve_welcome(&WelcomeInstance::new(text.clone()));
        prop_assert_eq!(out.len(), 4);
        prop_assert!(out.bytes().all(|b| b.is_ascii_digit()));
        let expect = oracles::welcome_bruteforce_mod(&WelcomeInstance::new(text));
        prop_assert_eq!(out, format!("{expect:04}"));
    }

    #[test]
    fn osmos_cost_is_between_zero_and_count(inst in osmos_instance(100, 100)) {
        let cost = solve_osmos_plan(&inst);
        prop_assert!(cost <= inst.others.len() as u64);
        prop_assert_eq!(cost, oracles::osmos_greedy(&inst));
    }

    #[test]
    fn visited_table_does_not_change_cost(inst in osmos_instance(6, 8)) {
        let problem = OsmosProblem::new(&inst);
        let (with, _) = planner::best_plan_with(&problem, SearchOptions::default()).unwrap();
        let (without, _) = planner::best_plan_with(
            &problem,
            SearchOptions { use_table: false, ..SearchOptions::default() },
        )
        .unwrap();
        prop_assert_eq!(with.map(|p| p.cost), without.map(|p| p.cost));
    }

    #[test]
    fn hits_plus_misses_counts_every_call(n in 0i64..60) {
        let calls = Cell::new(0u64);
        let eval = Counting { calls: &calls };
        let mut table = MemoTable::functional();
        calls.set(1);
        let v = table.tabled_eval(ArgKey::new(&[n]), &eval).unwrap();
        prop_assert_eq!(v, lucas(n));
        prop_assert_eq!(table.stats().calls(), calls.get());
        prop_assert_eq!(table.stats().misses, if n < 2 { 1 } else { n as u64 + 1 });
    }
}

/// Lucas numbers through the table, counting each table call made.
struct Counting<'a> {
    calls: &'a Cell<u64>,
}

impl Evaluator<ArgKey, u128> for Counting<'_> {
    fn compute(
        &self,
        key: &ArgKey,
        table: &mut MemoTable<ArgKey, u128>,
    ) -> Result<u128, TablingError> {
        let n = key.int(0);
        match n {
            0 => Ok(2),
            1 => Ok(1),
            _ => {
                self.calls.set(self.calls.get() + 2);
                Ok(table.tabled_eval(ArgKey::new(&[n - 1]), self)?
                    + table.tabled_eval(ArgKey::new(&[n - 2]), self)?)
            }
        }
    }
}

fn lucas(n: i64) -> u128 {
    let (mut a, mut b) = (2u128, 1u128);
    for _ in 0..n {
        (a, b) = (b, a + b);
    }
    a
}
