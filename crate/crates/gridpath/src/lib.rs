//! Longest paths on weighted grid DAGs in sublinear auxiliary space.
//!
//! The centerpiece is a divide-and-conquer solver whose working storage is
//! a handful of block-width vectors instead of a table row: grids are
//! halved at the middle row, the middle row is cut into column slabs, and
//! each slab's entry lengths are re-encoded as edge weights of the lower
//! subproblem through a rewritten constant-time weight oracle. String
//! front ends express longest common subsequence and generalized edit
//! distance as corner-to-corner path problems on such grids.
//!
//! Space is accounted explicitly: every solver charges the bits it keeps
//! live to a [`metering::SpaceMeter`], so the sublinear bound is a
//! measurable, testable property rather than a code-reading exercise.

pub mod dp;
pub mod grid;
pub mod metering;
pub mod runner;
pub mod strings;
pub mod testing;

pub use dp::standard::{
    enumerate_paths_value, full_table, sweep_lengths, DpError, LengthVector, PathTable,
};
pub use dp::sublinear::{
    choose_block_size, combine, edit_distance, lcs_length, longest_path_lengths, RecursionConfig,
};
pub use grid::{
    contamination_threshold, negate, override_row0, pad_rows, restrict, sentinel_weight, shift,
    transpose, Edge, EdgeKind, GridShape, Weight, WeightOracle,
};
pub use metering::{Report, RunStats, SpaceMeter};
pub use runner::{run_edit_distance, run_lcs, Algorithm, RunError, RunOptions};
pub use strings::{edit_oracle, lcs_oracle, CostTable, Symbol, SymbolString};
