//! The four contest problems and the TPK demo, each solved on top of one of
//! the engines.

pub mod osmos;
pub mod prisoners;
pub mod tpk;
pub mod triangle;
pub mod welcome;
