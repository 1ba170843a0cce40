//! Baseline longest-path solvers: the linear-working-storage sweep used as
//! the recursion base case, the full dynamic-programming table used as the
//! test-scale correctness oracle, and an exhaustive path enumerator for
//! desk-size cross-checks.

use std::ops::RangeInclusive;

use thiserror::Error;

use crate::grid::{Edge, GridShape, Weight, WeightOracle};
use crate::metering::{SpaceMeter, FRAME_BITS, VALUE_BITS};

/// Cell cap for [`full_table`]; larger instances are refused instead of
/// silently exhausting memory.
pub const FULL_TABLE_MAX_CELLS: usize = 1 << 23;

/// Shape cap per axis for [`enumerate_paths_value`].
pub const ENUMERATION_MAX_DIM: usize = 6;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DpError {
    #[error("table of {cells} cells exceeds the {limit}-cell oracle limit")]
    TableTooLarge { cells: usize, limit: usize },
    #[error("enumeration over a ({m}, {n}) grid is not tractable (max {limit} per axis)")]
    EnumerationTooLarge { m: usize, n: usize, limit: usize },
}

/// Longest-path lengths from the origin to a contiguous run of bottom-row
/// vertices, indexed by absolute column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthVector {
    offset: usize,
    values: Vec<Weight>,
}

impl LengthVector {
    pub fn new(offset: usize, values: Vec<Weight>) -> Self {
        LengthVector { offset, values }
    }

    pub fn filled(offset: usize, width: usize, value: Weight) -> Self {
        LengthVector {
            offset,
            values: vec![value; width],
        }
    }

    /// First absolute column covered.
    pub fn first_column(&self) -> usize {
        self.offset
    }

    /// Last absolute column covered.
    pub fn last_column(&self) -> usize {
        self.offset + self.values.len() - 1
    }

    pub fn width(&self) -> usize {
        self.values.len()
    }

    /// Value for absolute column `column`.
    pub fn get(&self, column: usize) -> Weight {
        self.values[column - self.offset]
    }

    pub fn set(&mut self, column: usize, value: Weight) {
        let k = column - self.offset;
        self.values[k] = value;
    }

    pub fn max_in(&mut self, column: usize, candidate: Weight) {
        let k = column - self.offset;
        self.values[k] = self.values[k].max(candidate);
    }

    pub fn values(&self) -> &[Weight] {
        &self.values
    }

    /// Differences of consecutive entries, `width() - 1` of them.
    pub fn consecutive_diffs(&self) -> Vec<Weight> {
        self.values.windows(2).map(|p| p[1] - p[0]).collect()
    }

    /// Bits this vector's payload occupies under the metering model.
    pub fn bits(&self) -> u64 {
        self.values.len() as u64 * VALUE_BITS
    }
}

/// Longest-path lengths from the origin to the bottom-row vertices in
/// `targets`, using two rotating fronts of `min(m, n) + 1` values.
///
/// The sweep runs along the longer axis so the stored front lies along the
/// shorter one: column by column when `m <= n`, row by row otherwise. Both
/// fronts plus a fixed frame are charged to `meter` for the duration and
/// released before returning; the returned vector itself is an output and
/// is charged by whoever retains it.
pub fn sweep_lengths<W: WeightOracle + ?Sized>(
    w: &W,
    targets: RangeInclusive<usize>,
    meter: &mut SpaceMeter,
) -> LengthVector {
    let GridShape { m, n } = w.shape();
    let (first, last) = (*targets.start(), *targets.end());
    assert!(first <= last, "empty target range");
    assert!(last <= n, "target column {last} outside 0..={n}");

    let front_len = m.min(n) + 1;
    let charged = FRAME_BITS + 2 * front_len as u64 * VALUE_BITS;
    meter.register_alloc(charged);

    let mut prev: Vec<Weight> = vec![0; front_len];
    let mut cur: Vec<Weight> = vec![0; front_len];
    let mut out: Vec<Weight> = Vec::with_capacity(last - first + 1);

    if m <= n {
        // Fronts are columns; walk j rightwards recording row m as each
        // target column completes.
        for i in 1..=m {
            prev[i] = prev[i - 1] + w.weight(Edge::vertical(i - 1, 0));
        }
        if first == 0 {
            out.push(prev[m]);
        }
        for j in 1..=n {
            cur[0] = prev[0] + w.weight(Edge::horizontal(0, j - 1));
            for i in 1..=m {
                let from_left = prev[i] + w.weight(Edge::horizontal(i, j - 1));
                let from_above = cur[i - 1] + w.weight(Edge::vertical(i - 1, j));
                let from_diag = prev[i - 1] + w.weight(Edge::diagonal(i - 1, j - 1));
                cur[i] = from_left.max(from_above).max(from_diag);
            }
            std::mem::swap(&mut prev, &mut cur);
            if j >= first && j <= last {
                out.push(prev[m]);
            }
        }
    } else {
        // Fronts are rows; walk i downwards and slice the final row.
        for j in 1..=n {
            prev[j] = prev[j - 1] + w.weight(Edge::horizontal(0, j - 1));
        }
        for i in 1..=m {
            cur[0] = prev[0] + w.weight(Edge::vertical(i - 1, 0));
            for j in 1..=n {
                let from_left = cur[j - 1] + w.weight(Edge::horizontal(i, j - 1));
                let from_above = prev[j] + w.weight(Edge::vertical(i - 1, j));
                let from_diag = prev[j - 1] + w.weight(Edge::diagonal(i - 1, j - 1));
                cur[j] = from_left.max(from_above).max(from_diag);
            }
            std::mem::swap(&mut prev, &mut cur);
        }
        out.extend_from_slice(&prev[first..=last]);
    }

    meter.register_free(charged);
    LengthVector::new(first, out)
}

/// Dense table of longest-path lengths from the origin to every vertex.
#[derive(Debug, Clone)]
pub struct PathTable {
    rows: usize,
    cols: usize,
    data: Vec<Weight>,
}

impl PathTable {
    pub fn get(&self, i: usize, j: usize) -> Weight {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j]
    }

    /// Value at the bottom-right corner.
    pub fn corner(&self) -> Weight {
        self.data[self.rows * self.cols - 1]
    }

    /// Bottom-row lengths over `first..=last` as a [`LengthVector`].
    pub fn bottom_slice(&self, first: usize, last: usize) -> LengthVector {
        let row = self.rows - 1;
        LengthVector::new(first, (first..=last).map(|j| self.get(row, j)).collect())
    }

    /// Bits held by the table payload.
    pub fn bits(&self) -> u64 {
        self.data.len() as u64 * VALUE_BITS
    }
}

/// Materialize the whole length table. Test-scale only; refuses instances
/// above [`FULL_TABLE_MAX_CELLS`].
pub fn full_table<W: WeightOracle + ?Sized>(w: &W) -> Result<PathTable, DpError> {
    let GridShape { m, n } = w.shape();
    let cells = (m + 1) * (n + 1);
    if cells > FULL_TABLE_MAX_CELLS {
        return Err(DpError::TableTooLarge {
            cells,
            limit: FULL_TABLE_MAX_CELLS,
        });
    }
    let cols = n + 1;
    let mut data = vec![0; cells];
    for j in 1..=n {
        data[j] = data[j - 1] + w.weight(Edge::horizontal(0, j - 1));
    }
    for i in 1..=m {
        data[i * cols] = data[(i - 1) * cols] + w.weight(Edge::vertical(i - 1, 0));
        for j in 1..=n {
            let from_left = data[i * cols + j - 1] + w.weight(Edge::horizontal(i, j - 1));
            let from_above = data[(i - 1) * cols + j] + w.weight(Edge::vertical(i - 1, j));
            let from_diag = data[(i - 1) * cols + j - 1] + w.weight(Edge::diagonal(i - 1, j - 1));
            data[i * cols + j] = from_left.max(from_above).max(from_diag);
        }
    }
    Ok(PathTable {
        rows: m + 1,
        cols,
        data,
    })
}

/// Maximum total weight over every monotone origin-to-corner path, by
/// exhaustive enumeration. Independent of the recurrence-based solvers.
pub fn enumerate_paths_value<W: WeightOracle + ?Sized>(w: &W) -> Result<Weight, DpError> {
    let GridShape { m, n } = w.shape();
    if m > ENUMERATION_MAX_DIM || n > ENUMERATION_MAX_DIM {
        return Err(DpError::EnumerationTooLarge {
            m,
            n,
            limit: ENUMERATION_MAX_DIM,
        });
    }

    fn walk<W: WeightOracle + ?Sized>(
        w: &W,
        m: usize,
        n: usize,
        i: usize,
        j: usize,
        sum: Weight,
        best: &mut Weight,
    ) {
        if i == m && j == n {
            *best = (*best).max(sum);
            return;
        }
        if j < n {
            walk(
                w,
                m,
                n,
                i,
                j + 1,
                sum + w.weight(Edge::horizontal(i, j)),
                best,
            );
        }
        if i < m {
            walk(
                w,
                m,
                n,
                i + 1,
                j,
                sum + w.weight(Edge::vertical(i, j)),
                best,
            );
        }
        if i < m && j < n {
            walk(
                w,
                m,
                n,
                i + 1,
                j + 1,
                sum + w.weight(Edge::diagonal(i, j)),
                best,
            );
        }
    }

    let mut best = Weight::MIN;
    walk(w, m, n, 0, 0, 0, &mut best);
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{contamination_threshold, sentinel_weight};
    use crate::strings::{lcs_oracle, SymbolString};
    use crate::testing::DenseOracle;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn single_vertex_table() {
        let w = DenseOracle::zeros(0, 0);
        let t = full_table(&w).unwrap();
        assert_eq!(t.corner(), 0);
    }

    #[test]
    fn one_matching_symbol() {
        let a = SymbolString::from_bytes(b"a");
        let t = full_table(&lcs_oracle(&a, &a)).unwrap();
        assert_eq!(t.corner(), 1);
    }

    #[test]
    fn all_ones_grid_prefers_axis_edges() {
        // Every edge weighs 1, so the best corner path maximizes edge
        // count: 6 axis steps beat any path shortened by diagonals.
        let w = DenseOracle::constant(3, 3, 1);
        let t = full_table(&w).unwrap();
        assert_eq!(t.corner(), 6);
        assert_eq!(enumerate_paths_value(&w).unwrap(), 6);
    }

    #[test]
    fn full_table_refuses_oversized_grids() {
        struct ZeroGrid(GridShape);
        impl WeightOracle for ZeroGrid {
            fn shape(&self) -> GridShape {
                self.0
            }
            fn weight(&self, _edge: Edge) -> Weight {
                0
            }
        }
        let big = ZeroGrid(GridShape::new(4095, 4095));
        assert!(matches!(
            full_table(&big),
            Err(DpError::TableTooLarge { .. })
        ));
    }

    #[test]
    fn diagonal_beats_two_zero_edges() {
        for (h, v, d, expect) in [(0, 0, 1, 1), (1, 1, 0, 2)] {
            let w = DenseOracle::from_fn(1, 1, |e: Edge| match e.kind {
                crate::grid::EdgeKind::Horizontal => h,
                crate::grid::EdgeKind::Vertical => v,
                crate::grid::EdgeKind::Diagonal => d,
            });
            assert_eq!(enumerate_paths_value(&w).unwrap(), expect);
        }
    }

    #[test]
    fn enumeration_matches_full_table_on_random_grids() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..100 {
            let w = DenseOracle::random(&mut rng, 4, 5, -8..=8);
            assert_eq!(
                enumerate_paths_value(&w).unwrap(),
                full_table(&w).unwrap().corner()
            );
        }
        for _ in 0..1000 {
            let m = rng.gen_range(0..=5);
            let n = rng.gen_range(0..=5);
            let w = DenseOracle::random(&mut rng, m, n, -8..=8);
            assert_eq!(
                enumerate_paths_value(&w).unwrap(),
                full_table(&w).unwrap().corner()
            );
        }
    }

    #[test]
    fn enumeration_refuses_large_shapes() {
        let w = DenseOracle::zeros(7, 2);
        assert!(matches!(
            enumerate_paths_value(&w),
            Err(DpError::EnumerationTooLarge { .. })
        ));
    }

    #[test]
    fn all_sentinel_grid_stays_below_the_threshold() {
        let sentinel = sentinel_weight(4, 4, 8);
        let w = DenseOracle::constant(4, 4, sentinel);
        let best = enumerate_paths_value(&w).unwrap();
        assert!(best < contamination_threshold(4, 4, 8));
    }

    #[test]
    fn sweep_on_a_zero_grid_is_zero() {
        let w = DenseOracle::zeros(5, 9);
        let mut meter = SpaceMeter::new();
        let lv = sweep_lengths(&w, 2..=9, &mut meter);
        assert_eq!(lv.first_column(), 2);
        assert!(lv.values().iter().all(|&v| v == 0));
        assert!(meter.is_balanced());
    }

    #[test]
    fn sweep_hits_the_known_city_pair_value() {
        let s = SymbolString::from_bytes(b"tokyo");
        let t = SymbolString::from_bytes(b"kyoto");
        let w = lcs_oracle(&s, &t);
        let mut meter = SpaceMeter::new();
        let lv = sweep_lengths(&w, 5..=5, &mut meter);
        assert_eq!(lv.values(), &[3]);
    }

    #[test]
    fn sweep_matches_the_table_bottom_row() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        let w = DenseOracle::random(&mut rng, 7, 11, -8..=8);
        let table = full_table(&w).unwrap();
        let mut meter = SpaceMeter::new();
        let lv = sweep_lengths(&w, 0..=11, &mut meter);
        assert_eq!(lv, table.bottom_slice(0, 11));
    }

    #[test]
    fn sweep_agrees_with_the_table_on_many_random_shapes() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..1000 {
            let m = rng.gen_range(0..=24);
            let n = rng.gen_range(0..=24);
            let w = DenseOracle::random(&mut rng, m, n, -8..=8);
            let table = full_table(&w).unwrap();
            let first = rng.gen_range(0..=n);
            let last = rng.gen_range(first..=n);
            let mut meter = SpaceMeter::new();
            let lv = sweep_lengths(&w, first..=last, &mut meter);
            assert_eq!(lv, table.bottom_slice(first, last));
            assert!(meter.is_balanced());
        }
    }

    #[test]
    fn sweep_peak_is_exactly_two_fronts_plus_a_frame() {
        let mut rng = ChaCha8Rng::seed_from_u64(24);
        for (m, n) in [(3usize, 17usize), (17, 3), (24, 24), (0, 5), (5, 0)] {
            let w = DenseOracle::random(&mut rng, m, n, -8..=8);
            let mut meter = SpaceMeter::new();
            let _ = sweep_lengths(&w, 0..=n, &mut meter);
            assert_eq!(
                meter.peak_bits(),
                FRAME_BITS + 2 * (m.min(n) + 1) as u64 * VALUE_BITS
            );
            assert!(meter.is_balanced());
        }
    }

    #[test]
    #[should_panic(expected = "outside")]
    fn sweep_rejects_targets_past_the_last_column() {
        let w = DenseOracle::zeros(2, 2);
        let mut meter = SpaceMeter::new();
        let _ = sweep_lengths(&w, 0..=3, &mut meter);
    }

    #[test]
    fn length_vector_diffs_telescope() {
        let lv = LengthVector::new(4, vec![3, 5, 4, 9]);
        assert_eq!(lv.consecutive_diffs(), vec![2, -1, 5]);
        assert_eq!(lv.first_column(), 4);
        assert_eq!(lv.last_column(), 7);
        assert_eq!(lv.get(6), 4);
    }
}
