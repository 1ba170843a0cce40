//! Metered single-run drivers over the three solvers, shared by the CLI,
//! the benchmark harness, and the verification suites.

use std::time::Instant;

use thiserror::Error;

use crate::dp::standard::{full_table, sweep_lengths, DpError};
use crate::dp::sublinear::longest_corner_value;
use crate::grid::negate;
use crate::metering::{report, Report, RunStats, SpaceMeter, FRAME_BITS};
use crate::strings::{edit_oracle, lcs_oracle, CostTable, SymbolString};

/// Which solver carries out a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    /// Two-front sweep with `O(min(m, n))` length values of working space.
    Standard,
    /// Block-recursive solver with sublinear working space.
    Sublinear,
    /// Full-table solver; a correctness oracle with a hard size cap.
    Table,
}

impl Algorithm {
    pub fn name(&self) -> &'static str {
        match self {
            Algorithm::Standard => "standard",
            Algorithm::Sublinear => "sublinear",
            Algorithm::Table => "table",
        }
    }
}

/// Per-run knobs beyond the algorithm choice.
#[derive(Debug, Clone, Copy, Default)]
pub struct RunOptions {
    /// Force the block size instead of deriving it from the column count.
    pub block_override: Option<usize>,
    /// Run independent slabs concurrently (needs the `parallel` feature).
    pub parallel: bool,
}

#[derive(Debug, Error)]
pub enum RunError {
    #[error(transparent)]
    TooLarge(#[from] DpError),
    #[error("space accounting finished with {live_bits} bits still live")]
    MeterImbalance { live_bits: u64 },
}

fn run_oracle(
    oracle: &dyn crate::grid::WeightOracle,
    w_max: crate::grid::Weight,
    minimize: bool,
    algorithm: Algorithm,
    options: &RunOptions,
) -> Result<Report, RunError> {
    let shape = oracle.shape();
    let started = Instant::now();
    let mut meter = SpaceMeter::new();
    let mut stats = RunStats::default();

    let (value, m, n, m_hat, block) = match algorithm {
        Algorithm::Sublinear => {
            let out = longest_corner_value(
                oracle,
                w_max,
                options.block_override,
                options.parallel,
                &mut meter,
                &mut stats,
            );
            (out.value, out.m, out.n, out.m_hat, out.block)
        }
        Algorithm::Standard => {
            let lengths = sweep_lengths(oracle, shape.n..=shape.n, &mut meter);
            stats.record_leaf(0);
            (lengths.get(shape.n), shape.m, shape.n, shape.m, 0)
        }
        Algorithm::Table => {
            let table = full_table(oracle)?;
            meter.register_alloc(FRAME_BITS + table.bits());
            let corner = table.corner();
            meter.register_free(FRAME_BITS + table.bits());
            stats.record_leaf(0);
            (corner, shape.m, shape.n, shape.m, 0)
        }
    };

    if !meter.is_balanced() {
        return Err(RunError::MeterImbalance {
            live_bits: meter.current_bits(),
        });
    }
    stats.result = if minimize { -value } else { value };
    stats.elapsed = started.elapsed();
    Ok(report(&meter, &stats, m, n, m_hat, block))
}

/// Compute the LCS length of `s` and `t` with the chosen solver, returning
/// the full metered report.
pub fn run_lcs(
    s: &SymbolString,
    t: &SymbolString,
    algorithm: Algorithm,
    options: &RunOptions,
) -> Result<Report, RunError> {
    let oracle = lcs_oracle(s, t);
    let rep = run_oracle(&oracle, 1, false, algorithm, options)?;
    debug_assert!(rep.result >= 0, "LCS length cannot be negative");
    Ok(rep)
}

/// Compute the edit distance of `s` and `t` under `costs` with the chosen
/// solver. All three solvers maximize over the negated oracle, so their
/// reports are directly comparable.
pub fn run_edit_distance(
    s: &SymbolString,
    t: &SymbolString,
    costs: &CostTable,
    algorithm: Algorithm,
    options: &RunOptions,
) -> Result<Report, RunError> {
    let oracle = negate(edit_oracle(s, t, costs));
    run_oracle(&oracle, costs.max_cost(), true, algorithm, options)
}
