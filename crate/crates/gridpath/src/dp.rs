//! Longest-path solvers over weight oracles.

pub mod standard;
pub mod sublinear;
