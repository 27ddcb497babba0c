//! Triangle Areas: find a lattice triangle inside `[0, n] x [0, m]` whose
//! doubled area is `a`, or report that none exists.
//!
//! One vertex can always be moved to the origin, which leaves the doubled
//! area as `|x2*y3 - x3*y2|`.

use std::fmt;

use crate::fd::{AbsCrossConstraint, Store};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TriangleInstance {
    pub n: i64,
    pub m: i64,
    pub a: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriangleAnswer {
    /// `[x1, y1, x2, y2, x3, y3]`
    Points([i64; 6]),
    Impossible,
}

impl TriangleAnswer {
    pub fn is_feasible(&self) -> bool {
        matches!(self, TriangleAnswer::Points(_))
    }
}

impl fmt::Display for TriangleAnswer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TriangleAnswer::Points([x1, y1, x2, y2, x3, y3]) => {
                write!(f, "{x1} {y1} {x2} {y2} {x3} {y3}")
            }
            TriangleAnswer::Impossible => f.write_str("IMPOSSIBLE"),
        }
    }
}

/// Twice the area of the triangle, by the shoelace formula.
pub fn doubled_area(p: &[i64; 6]) -> i128 {
    let [x1, y1, x2, y2, x3, y3] = p.map(i128::from);
    ((x2 - x1) * (y3 - y1) - (x3 - x1) * (y2 - y1)).abs()
}

/// True when `answer` is a valid reply to `inst`: every vertex is inside the
/// box and the doubled area is `a`. `Impossible` is accepted as is; whether
/// it is correct is a separate question.
pub fn check_answer(inst: &TriangleInstance, answer: &TriangleAnswer) -> bool {
    match answer {
        TriangleAnswer::Impossible => true,
        TriangleAnswer::Points(p) => {
            let in_box = p
                .chunks(2)
                .all(|v| (0..=inst.n).contains(&v[0]) && (0..=inst.m).contains(&v[1]));
            in_box && doubled_area(p) == inst.a as i128
        }
    }
}

/// Constraint model: vertex 1 at the origin, `x2, x3 in 0..=n`,
/// `y2, y3 in 0..=m`, `|x2*y3 - x3*y2| = a`, then labeling.
pub fn solve_triangle_cp(inst: &TriangleInstance) -> TriangleAnswer {
    let mut store = Store::new();
    let vars = (|| {
        let x2 = store.new_var(0, inst.n)?;
        let y2 = store.new_var(0, inst.m)?;
        let x3 = store.new_var(0, inst.n)?;
        let y3 = store.new_var(0, inst.m)?;
        let vars = [x2, y2, x3, y3];
        store.post(AbsCrossConstraint::new(inst.a, vars))?;
        Ok::<_, crate::fd::FdError>(vars)
    })();
    let Ok(vars) = vars else {
        return TriangleAnswer::Impossible;
    };
    match store.label(&vars) {
        Ok(Some(v)) => TriangleAnswer::Points([0, 0, v[0], v[1], v[2], v[3]]),
        _ => TriangleAnswer::Impossible,
    }
}

/// Constant-time construction.
pub fn solve_triangle_closed_form(inst: &TriangleInstance) -> TriangleAnswer {
    let TriangleInstance { n, m, a } = *inst;
    let area = n as i128 * m as i128;
    if a as i128 > area {
        return TriangleAnswer::Impossible;
    }
    if a as i128 == area {
        return TriangleAnswer::Points([0, 0, n, 0, 0, m]);
    }
    let (q, r) = (a / m, a % m);
    if r == 0 {
        TriangleAnswer::Points([0, 0, q, 0, 0, m])
    } else {
        TriangleAnswer::Points([q, 0, q + 1, m, 0, r])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(n: i64, m: i64, a: i64) -> TriangleInstance {
        TriangleInstance { n, m, a }
    }

    #[test]
    fn cp_examples() {
        let unit = solve_triangle_cp(&inst(1, 1, 1));
        assert!(unit.is_feasible() && check_answer(&inst(1, 1, 1), &unit));
        assert_eq!(
            solve_triangle_cp(&inst(1, 1, 3)),
            TriangleAnswer::Impossible
        );
        let five = solve_triangle_cp(&inst(3, 3, 5));
        assert!(five.is_feasible() && check_answer(&inst(3, 3, 5), &five));
        match five {
            TriangleAnswer::Points(p) => assert_eq!(&p[..2], &[0, 0]),
            TriangleAnswer::Impossible => unreachable!(),
        }
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(
            solve_triangle_closed_form(&inst(1, 1, 1)).to_string(),
            "0 0 1 0 0 1"
        );
        assert_eq!(
            solve_triangle_closed_form(&inst(3, 3, 5)).to_string(),
            "1 0 2 3 0 2"
        );
        assert_eq!(
            solve_triangle_closed_form(&inst(3, 3, 6)).to_string(),
            "0 0 2 0 0 3"
        );
        assert_eq!(
            solve_triangle_closed_form(&inst(2, 2, 5)),
            TriangleAnswer::Impossible
        );
    }

    #[test]
    fn closed_form_is_valid_everywhere_small() {
        for n in 1..=30 {
            for m in 1..=30 {
                for a in 1..=n * m + 2 {
                    let i = inst(n, m, a);
                    let ans = solve_triangle_closed_form(&i);
                    assert_eq!(ans.is_feasible(), a <= n * m);
                    assert!(check_answer(&i, &ans), "{i:?} -> {ans}");
                }
            }
        }
    }

    #[test]
    fn closed_form_handles_huge_boxes() {
        let i = inst(1_000_000_000, 1_000_000_000, 999_999_999_999_999_999);
        assert!(check_answer(&i, &solve_triangle_closed_form(&i)));
    }

    #[test]
    fn checker_rejects_bad_answers() {
        let i = inst(3, 3, 5);
        assert!(!check_answer(
            &i,
            &TriangleAnswer::Points([0, 0, 1, 0, 0, 1])
        ));
        assert!(!check_answer(
            &i,
            &TriangleAnswer::Points([0, 0, 5, 0, 0, 1])
        ));
    }
}
