//! The Trabb Pardo-Knuth algorithm: read 11 numbers, then report
//! `f(t) = sqrt(|t|) + 5t^3` for each in reverse order, flagging results
//! above 400.

use std::fmt;

pub const INPUT_LEN: usize = 11;
pub const THRESHOLD: f64 = 400.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TpkValue {
    Value(f64),
    TooLarge,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TpkRecord {
    pub index: usize,
    pub value: TpkValue,
}

impl fmt::Display for TpkRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value {
            TpkValue::Value(y) => write!(f, "{} {}", self.index, y),
            TpkValue::TooLarge => write!(f, "{} TOO LARGE", self.index),
        }
    }
}

pub fn tpk_f(t: f64) -> f64 {
    t.abs().sqrt() + 5.0 * t.powi(3)
}

pub fn tpk(values: &[f64; INPUT_LEN]) -> Vec<TpkRecord> {
    (0..INPUT_LEN)
        .rev()
        .map(|index| {
            let y = tpk_f(values[index]);
            let value = if y > THRESHOLD {
                TpkValue::TooLarge
            } else {
                TpkValue::Value(y)
            };
            TpkRecord { index, value }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_points() {
        assert_eq!(tpk_f(0.0), 0.0);
        assert_eq!(tpk_f(4.0), 322.0);
        assert!(tpk_f(5.0) > 400.0);
    }

    #[test]
    fn reverse_order_and_labels() {
        let mut input = [0.0; INPUT_LEN];
        input[0] = 4.0;
        input[10] = 5.0;
        let out = tpk(&input);
        let idx: Vec<usize> = out.iter().map(|r| r.index).collect();
        assert_eq!(idx, (0..11).rev().collect::<Vec<_>>());
        assert_eq!(out[0].to_string(), "10 TOO LARGE");
        assert_eq!(out[10].to_string(), "0 322");
        assert_eq!(out[5].to_string(), "5 0");
    }

    #[test]
    fn negative_inputs_stay_small() {
        let out = tpk(&[-100.0; INPUT_LEN]);
        assert!(out
            .iter()
            .all(|r| matches!(r.value, TpkValue::Value(y) if y < 0.0)));
    }
}
