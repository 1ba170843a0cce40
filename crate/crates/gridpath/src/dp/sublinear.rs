//! Divide-and-conquer longest-path solver with sublinear auxiliary space.
//!
//! The solver answers a slightly generalized query: the longest-path
//! lengths from the origin to the *terminal slab* — the last block of
//! bottom-row columns. An instance whose shorter side fits twice the block
//! size is handed to the two-front sweep. Anything larger is split at the
//! middle row into block-width column slabs: for each slab, one recursive
//! call measures the lengths into the slab on the upper-left sub-grid, and
//! a second call runs on the lower-right sub-grid whose top row is rewired
//! with consecutive differences of those lengths, so its answers already
//! include the best way of arriving. Folding the per-slab sums with `max`
//! yields the terminal lengths. Only block-width vectors and constant-size
//! frames are ever live, giving the sublinear space bound that the meter
//! makes observable.

use crate::dp::standard::{sweep_lengths, LengthVector};
use crate::grid::{
    contamination_threshold, negate, override_row0, pad_rows, restrict, sentinel_weight, shift,
    transpose, Edge, GridShape, Weight, WeightOracle,
};
use crate::metering::{RunStats, SpaceMeter, FRAME_BITS, VALUE_BITS};
use crate::strings::{edit_oracle, lcs_oracle, CostTable, SymbolString};

/// Block size for a grid with column bound `n`: the column count divided
/// by `2^sqrt(log2 n)`, rounded up, never less than 1. `log2` of 0 or 1 is
/// taken as 0.
pub fn choose_block_size(n: usize) -> usize {
    let log_n = if n <= 1 { 0.0 } else { (n as f64).log2() };
    let divisor = log_n.sqrt().exp2();
    let b = ((n + 1) as f64 / divisor).ceil() as usize;
    b.max(1)
}

/// Parameters fixed at the top of a recursion and shared by every call
/// beneath it. The block size never changes as the sub-grids shrink.
#[derive(Debug, Clone, Copy)]
pub struct RecursionConfig {
    block: usize,
    sentinel: Weight,
    parallel: bool,
}

impl RecursionConfig {
    pub fn new(block: usize, sentinel: Weight) -> Self {
        assert!(block >= 1, "block size must be at least 1");
        RecursionConfig {
            block,
            sentinel,
            parallel: false,
        }
    }

    /// Opt the top-level slab loop into data-parallel execution. Takes
    /// effect only when the `parallel` feature is compiled in; metered
    /// peaks are unchanged because per-slab meters are folded in as if
    /// the slabs had run one after another.
    pub fn with_parallel(mut self, parallel: bool) -> Self {
        self.parallel = parallel;
        self
    }

    pub fn block(&self) -> usize {
        self.block
    }

    /// Instances whose shorter side is at most this are swept directly.
    pub fn base_threshold(&self) -> usize {
        2 * self.block
    }

    pub fn sentinel(&self) -> Weight {
        self.sentinel
    }

    pub fn parallel(&self) -> bool {
        self.parallel
    }
}

/// Terminal-slab start column for a grid with column bound `n`.
fn terminal_first(n: usize, block: usize) -> usize {
    ((n + 1).div_ceil(block) - 1) * block
}

/// Longest-path lengths from the origin to every terminal-slab vertex.
///
/// Requires a power-of-two row bound (callers pad once at the top; halving
/// preserves the property) with `m >= 1`. The returned vector is not
/// charged to the meter; the caller owns it and accounts for it if it is
/// retained. On return the meter is exactly as it was on entry.
pub fn longest_path_lengths(
    w: &dyn WeightOracle,
    config: &RecursionConfig,
    meter: &mut SpaceMeter,
    stats: &mut RunStats,
) -> LengthVector {
    let GridShape { m, n: _ } = w.shape();
    assert!(
        m >= 1 && m.is_power_of_two(),
        "row bound {m} is not a power of two"
    );
    let entry_bits = meter.current_bits();
    let result = solve(w, config, 0, meter, stats);
    assert_eq!(
        meter.current_bits(),
        entry_bits,
        "solver returned with unbalanced space accounting"
    );
    result
}

fn solve(
    w: &dyn WeightOracle,
    config: &RecursionConfig,
    depth: u32,
    meter: &mut SpaceMeter,
    stats: &mut RunStats,
) -> LengthVector {
    let GridShape { m, n } = w.shape();
    let block = config.block();
    let t_first = terminal_first(n, block);

    if m.min(n) <= config.base_threshold() {
        stats.record_leaf(depth);
        return sweep_lengths(w, t_first..=n, meter);
    }
    stats.record_inner(depth);

    let slabs = (n + 1).div_ceil(block);
    meter.register_alloc(FRAME_BITS);
    let mut acc = LengthVector::filled(t_first, n - t_first + 1, Weight::MIN);
    meter.register_alloc(acc.bits());

    let fold = |acc: &mut LengthVector,
                meter: &mut SpaceMeter,
                h: usize,
                upper: LengthVector,
                lower: LengthVector| {
        combine(acc, &upper, &lower, h, block);
        meter.register_free(lower.bits());
        meter.register_free(upper.bits());
    };

    #[cfg(feature = "parallel")]
    if config.parallel() && depth == 0 && slabs > 1 {
        use rayon::prelude::*;
        let pieces: Vec<(LengthVector, LengthVector, SpaceMeter, RunStats)> = (0..slabs)
            .into_par_iter()
            .map(|h| {
                let mut slab_meter = SpaceMeter::new();
                let mut slab_stats = RunStats::default();
                let (upper, lower) =
                    slab_lengths(w, config, depth, h, &mut slab_meter, &mut slab_stats);
                (upper, lower, slab_meter, slab_stats)
            })
            .collect();
        for (h, (upper, lower, slab_meter, slab_stats)) in pieces.into_iter().enumerate() {
            meter.absorb_nested(&slab_meter);
            stats.absorb(&slab_stats);
            fold(&mut acc, meter, h, upper, lower);
        }
        meter.register_free(acc.bits());
        meter.register_free(FRAME_BITS);
        return acc;
    }

    for h in 0..slabs {
        let (upper, lower) = slab_lengths(w, config, depth, h, meter, stats);
        fold(&mut acc, meter, h, upper, lower);
    }
    meter.register_free(acc.bits());
    meter.register_free(FRAME_BITS);
    acc
}

/// Solve the two subproblems for slab `h`: lengths from the origin into
/// the slab on the upper-left grid, and lengths from the slab to the
/// terminal columns on the rewired lower-right grid. Both returned vectors
/// are charged to `meter`; the caller releases them.
fn slab_lengths(
    w: &dyn WeightOracle,
    config: &RecursionConfig,
    depth: u32,
    h: usize,
    meter: &mut SpaceMeter,
    stats: &mut RunStats,
) -> (LengthVector, LengthVector) {
    let GridShape { m, n } = w.shape();
    let block = config.block();
    let half = m / 2;
    let slab_first = h * block;
    let slab_last = ((h + 1) * block - 1).min(n);

    let upper_grid = restrict(w, half, slab_last);
    let upper = solve(&upper_grid, config, depth + 1, meter, stats);
    meter.register_alloc(upper.bits());
    debug_assert_eq!(upper.first_column(), slab_first);
    debug_assert_eq!(upper.last_column(), slab_last);

    let diffs = upper.consecutive_diffs();
    let diff_bits = diffs.len() as u64 * VALUE_BITS;
    meter.register_alloc(diff_bits);
    let lower_grid = override_row0(shift(w, half, slab_first, half, n - slab_first), diffs);

    let lower = solve(&lower_grid, config, depth + 1, meter, stats);
    meter.register_alloc(lower.bits());
    // The lower grid's terminal slab must be the parent's, shifted; this
    // holds because slab_first is a multiple of the block size.
    assert_eq!(
        lower.first_column() + slab_first,
        terminal_first(n, block),
        "terminal slab misaligned between parent and shifted child"
    );

    drop(lower_grid);
    meter.register_free(diff_bits);
    (upper, lower)
}

/// Fold slab `h`'s pair of partial answers into the accumulated terminal
/// lengths: each terminal column takes the max of its current value and
/// the sum of the length into the slab's first column plus the length
/// onward from there in the shifted frame.
pub fn combine(
    acc: &mut LengthVector,
    upper: &LengthVector,
    lower: &LengthVector,
    h: usize,
    block: usize,
) {
    let anchor_column = h * block;
    assert_eq!(
        upper.first_column(),
        anchor_column,
        "slab lengths misaligned with slab {h}"
    );
    assert_eq!(
        lower.width(),
        acc.width(),
        "shifted terminal lengths do not cover the terminal slab"
    );
    assert_eq!(acc.first_column() - anchor_column, lower.first_column());
    let anchor = upper.get(anchor_column);
    for column in acc.first_column()..=acc.last_column() {
        acc.max_in(column, anchor + lower.get(column - anchor_column));
    }
}

/// Everything the corner-value pipeline decided and measured, for callers
/// that report on runs.
#[derive(Debug, Clone, Copy)]
pub struct PipelineOutcome {
    pub value: Weight,
    /// Shape after orienting the shorter side onto the rows.
    pub m: usize,
    pub n: usize,
    pub m_hat: usize,
    pub block: usize,
}

/// Longest corner-to-corner path value via the space-bounded recursion:
/// orient the shorter side onto the rows, pad rows to a power of two, run
/// the recursion, and read the answer at the last column. Degenerate
/// single-row and single-column grids are summed directly.
///
/// `w_max` bounds the genuine edge magnitudes and sizes the sentinel;
/// `block_override` substitutes for the derived block size. Panics if the
/// result is contaminated or the meter comes back unbalanced — both are
/// internal errors, not input conditions.
pub fn longest_corner_value(
    w: &dyn WeightOracle,
    w_max: Weight,
    block_override: Option<usize>,
    parallel: bool,
    meter: &mut SpaceMeter,
    stats: &mut RunStats,
) -> PipelineOutcome {
    let shape = w.shape();
    let transposed;
    let (oriented, m, n): (&dyn WeightOracle, usize, usize) = if shape.m <= shape.n {
        (w, shape.m, shape.n)
    } else {
        transposed = transpose(w);
        (&transposed, shape.n, shape.m)
    };

    let block = block_override.unwrap_or_else(|| choose_block_size(n));
    if m == 0 {
        // Single row: the one path is the row itself.
        let value = (0..n)
            .map(|j| oriented.weight(Edge::horizontal(0, j)))
            .sum();
        stats.record_leaf(0);
        return PipelineOutcome {
            value,
            m,
            n,
            m_hat: m,
            block,
        };
    }

    let m_hat = m.next_power_of_two();
    let sentinel = sentinel_weight(m_hat, n, w_max);
    let config = RecursionConfig::new(block, sentinel).with_parallel(parallel);

    let value = if m_hat == m {
        let lengths = longest_path_lengths(oriented, &config, meter, stats);
        lengths.get(n)
    } else {
        let (padded, _) = pad_rows(oriented, sentinel);
        let lengths = longest_path_lengths(&padded, &config, meter, stats);
        lengths.get(n)
    };
    assert!(
        value >= contamination_threshold(m_hat, n, w_max),
        "corner value {value} is sentinel-contaminated"
    );
    assert!(
        meter.is_balanced(),
        "meter left {} live bits",
        meter.current_bits()
    );
    PipelineOutcome {
        value,
        m,
        n,
        m_hat,
        block,
    }
}

/// Length of a longest common subsequence of `s` and `t`, computed in
/// sublinear auxiliary space.
pub fn lcs_length(s: &SymbolString, t: &SymbolString) -> usize {
    if s.is_empty() || t.is_empty() {
        return 0;
    }
    let oracle = lcs_oracle(s, t);
    let mut meter = SpaceMeter::new();
    let mut stats = RunStats::default();
    let outcome = longest_corner_value(&oracle, 1, None, false, &mut meter, &mut stats);
    debug_assert!(outcome.value >= 0);
    outcome.value as usize
}

/// Generalized edit distance between `s` and `t` under `costs`, computed
/// in sublinear auxiliary space by maximizing over the negated grid.
pub fn edit_distance(s: &SymbolString, t: &SymbolString, costs: &CostTable) -> Weight {
    let oracle = negate(edit_oracle(s, t, costs));
    let mut meter = SpaceMeter::new();
    let mut stats = RunStats::default();
    let outcome = longest_corner_value(
        &oracle,
        costs.max_cost(),
        None,
        false,
        &mut meter,
        &mut stats,
    );
    -outcome.value
}
