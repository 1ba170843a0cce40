//! Deterministic accounting of live auxiliary bits and recursion-tree
//! statistics.
//!
//! The meter is a ledger, not an allocator hook: the algorithms register
//! the bits they make live and release them when done, so the measured
//! peak is platform-independent and reproducible. Inputs are treated as
//! read-only memory and results as write-only output; neither is charged.

use std::time::Duration;

use serde::Serialize;

use crate::grid::Weight;

/// Bits charged per stored length value.
pub const VALUE_BITS: u64 = 64;

/// Fixed charge per live stack frame of the solvers: slab index, bounds,
/// oracle indices, and return linkage.
pub const FRAME_BITS: u64 = 512;

/// Ledger of live auxiliary bits with peak tracking.
#[derive(Debug, Clone, Default)]
pub struct SpaceMeter {
    current_bits: u64,
    peak_bits: u64,
}

impl SpaceMeter {
    pub fn new() -> Self {
        SpaceMeter::default()
    }

    /// Charge `bits` of newly live auxiliary storage.
    pub fn register_alloc(&mut self, bits: u64) {
        self.current_bits += bits;
        self.peak_bits = self.peak_bits.max(self.current_bits);
    }

    /// Release `bits` previously charged. Releasing more than is live is a
    /// double-free or leak in the caller's accounting and panics.
    pub fn register_free(&mut self, bits: u64) {
        assert!(
            bits <= self.current_bits,
            "meter underflow: freeing {bits} bits with only {} live",
            self.current_bits
        );
        self.current_bits -= bits;
    }

    pub fn current_bits(&self) -> u64 {
        self.current_bits
    }

    pub fn peak_bits(&self) -> u64 {
        self.peak_bits
    }

    /// Everything charged has been released.
    pub fn is_balanced(&self) -> bool {
        self.current_bits == 0
    }

    /// Fold in a meter that accounted a nested unit of work on its own,
    /// as if that work had run inline on top of the current live bits.
    /// Deterministic regardless of actual execution interleaving.
    pub fn absorb_nested(&mut self, child: &SpaceMeter) {
        self.peak_bits = self.peak_bits.max(self.current_bits + child.peak_bits);
        self.current_bits += child.current_bits;
    }
}

/// Counters describing one solver run: recursion-tree shape plus the
/// timing and result filled in by the driver.
#[derive(Debug, Clone, Default)]
pub struct RunStats {
    pub leaf_count: u64,
    pub inner_count: u64,
    pub max_depth: u32,
    pub elapsed: Duration,
    pub result: Weight,
}

impl RunStats {
    pub fn record_leaf(&mut self, depth: u32) {
        self.leaf_count += 1;
        self.max_depth = self.max_depth.max(depth);
    }

    pub fn record_inner(&mut self, _depth: u32) {
        self.inner_count += 1;
    }

    pub fn total_nodes(&self) -> u64 {
        self.leaf_count + self.inner_count
    }

    /// Fold in the counters of a nested unit of work.
    pub fn absorb(&mut self, child: &RunStats) {
        self.leaf_count += child.leaf_count;
        self.inner_count += child.inner_count;
        self.max_depth = self.max_depth.max(child.max_depth);
    }
}

/// Immutable snapshot of a completed run.
///
/// Serializes with exactly these keys: `m`, `n`, `m_hat`, `block`,
/// `result`, `peak_aux_bits`, `leaf_count`, `inner_count`, `max_depth`,
/// `elapsed_ms`.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub m: usize,
    pub n: usize,
    pub m_hat: usize,
    pub block: usize,
    pub result: Weight,
    pub peak_aux_bits: u64,
    pub leaf_count: u64,
    pub inner_count: u64,
    pub max_depth: u32,
    pub elapsed_ms: f64,
}

/// Snapshot a finished run. The meter must be balanced; an imbalance here
/// is an accounting bug in the algorithm, not in the caller.
pub fn report(
    meter: &SpaceMeter,
    stats: &RunStats,
    m: usize,
    n: usize,
    m_hat: usize,
    block: usize,
) -> Report {
    Report {
        m,
        n,
        m_hat,
        block,
        result: stats.result,
        peak_aux_bits: meter.peak_bits(),
        leaf_count: stats.leaf_count,
        inner_count: stats.inner_count,
        max_depth: stats.max_depth,
        elapsed_ms: stats.elapsed.as_secs_f64() * 1e3,
    }
}
