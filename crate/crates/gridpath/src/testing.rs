//! Independent oracles and generators for tests and benchmarks.
//!
//! Everything here deliberately avoids the solver machinery it is used to
//! check: the reference DPs are classic textbook table fills over raw
//! slices, and the enumerators walk paths explicitly.

use std::ops::RangeInclusive;

use rand::Rng;

use crate::grid::{Edge, EdgeKind, GridShape, Weight, WeightOracle};
use crate::strings::Symbol;

/// A weight oracle backed by explicit per-edge storage. Test-scale only;
/// the solvers never materialize anything like this.
#[derive(Debug, Clone)]
pub struct DenseOracle {
    shape: GridShape,
    horizontal: Vec<Weight>, // (m + 1) x n
    vertical: Vec<Weight>,   // m x (n + 1)
    diagonal: Vec<Weight>,   // m x n
}

impl DenseOracle {
    pub fn from_fn(m: usize, n: usize, mut weight: impl FnMut(Edge) -> Weight) -> Self {
        let shape = GridShape::new(m, n);
        let mut horizontal = Vec::with_capacity((m + 1) * n);
        for i in 0..=m {
            for j in 0..n {
                horizontal.push(weight(Edge::horizontal(i, j)));
            }
        }
        let mut vertical = Vec::with_capacity(m * (n + 1));
        for i in 0..m {
            for j in 0..=n {
                vertical.push(weight(Edge::vertical(i, j)));
            }
        }
        let mut diagonal = Vec::with_capacity(m * n);
        for i in 0..m {
            for j in 0..n {
                diagonal.push(weight(Edge::diagonal(i, j)));
            }
        }
        DenseOracle {
            shape,
            horizontal,
            vertical,
            diagonal,
        }
    }

    pub fn zeros(m: usize, n: usize) -> Self {
        DenseOracle::from_fn(m, n, |_| 0)
    }

    pub fn constant(m: usize, n: usize, value: Weight) -> Self {
        DenseOracle::from_fn(m, n, |_| value)
    }

    /// Uniformly random integer weights drawn from `range`.
    pub fn random(rng: &mut impl Rng, m: usize, n: usize, range: RangeInclusive<Weight>) -> Self {
        DenseOracle::from_fn(m, n, |_| rng.gen_range(range.clone()))
    }

    /// All edges of this oracle's grid.
    pub fn shape_edges(&self) -> Vec<Edge> {
        self.shape.edges().collect()
    }
}

impl WeightOracle for DenseOracle {
    fn shape(&self) -> GridShape {
        self.shape
    }

    fn weight(&self, edge: Edge) -> Weight {
        debug_assert!(self.shape.contains_edge(edge));
        let n = self.shape.n;
        match edge.kind {
            EdgeKind::Horizontal => self.horizontal[edge.i * n + edge.j],
            EdgeKind::Vertical => self.vertical[edge.i * (n + 1) + edge.j],
            EdgeKind::Diagonal => self.diagonal[edge.i * n + edge.j],
        }
    }
}

/// `len` symbols drawn uniformly from an alphabet of size `sigma`.
pub fn random_symbols(rng: &mut impl Rng, len: usize, sigma: u32) -> Vec<Symbol> {
    (0..len).map(|_| rng.gen_range(0..sigma)).collect()
}

/// Textbook quadratic-table LCS length.
pub fn ref_lcs(a: &[Symbol], b: &[Symbol]) -> usize {
    let mut prev = vec![0usize; b.len() + 1];
    let mut cur = vec![0usize; b.len() + 1];
    for i in 1..=a.len() {
        for j in 1..=b.len() {
            cur[j] = if a[i - 1] == b[j - 1] {
                prev[j - 1] + 1
            } else {
                prev[j].max(cur[j - 1])
            };
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()]
}

/// Textbook quadratic-table edit distance with uniform operation costs.
pub fn ref_edit_distance(
    a: &[Symbol],
    b: &[Symbol],
    ins: Weight,
    del: Weight,
    sub: Weight,
) -> Weight {
    let cols = b.len() + 1;
    let mut prev: Vec<Weight> = (0..cols).map(|j| j as Weight * ins).collect();
    let mut cur = vec![0; cols];
    for i in 1..=a.len() {
        cur[0] = i as Weight * del;
        for j in 1..=b.len() {
            let subst = prev[j - 1] + if a[i - 1] == b[j - 1] { 0 } else { sub };
            cur[j] = subst.min(prev[j] + del).min(cur[j - 1] + ins);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()]
}

/// Longest-path lengths from source vertex `(si, sj)` to every vertex of
/// its lower-right rectangle, as a dense table indexed relative to the
/// source.
pub fn table_from_source<W: WeightOracle + ?Sized>(
    w: &W,
    si: usize,
    sj: usize,
) -> Vec<Vec<Weight>> {
    let GridShape { m, n } = w.shape();
    let rows = m - si + 1;
    let cols = n - sj + 1;
    let mut table = vec![vec![0; cols]; rows];
    for j in 1..cols {
        table[0][j] = table[0][j - 1] + w.weight(Edge::horizontal(si, sj + j - 1));
    }
    for i in 1..rows {
        table[i][0] = table[i - 1][0] + w.weight(Edge::vertical(si + i - 1, sj));
        for j in 1..cols {
            let left = table[i][j - 1] + w.weight(Edge::horizontal(si + i, sj + j - 1));
            let above = table[i - 1][j] + w.weight(Edge::vertical(si + i - 1, sj + j));
            let diag = table[i - 1][j - 1] + w.weight(Edge::diagonal(si + i - 1, sj + j - 1));
            table[i][j] = left.max(above).max(diag);
        }
    }
    table
}

/// Minimum total weight over every monotone origin-to-corner path, by
/// exhaustive enumeration.
pub fn enumerate_shortest<W: WeightOracle + ?Sized>(w: &W) -> Weight {
    let GridShape { m, n } = w.shape();
    assert!(m <= 6 && n <= 6, "enumeration is desk-scale only");
    let mut best = Weight::MAX;
    walk_paths(w, m, n, 0, 0, 0, &mut |sum| best = best.min(sum));
    best
}

/// Maximum total weight over monotone paths from the origin to
/// `(m, target_column)` that touch the middle row `mid_row` at some column
/// inside `window`.
///
/// A monotone path crosses any fixed row in a contiguous column interval,
/// so "touches the slab" is an interval-overlap test on the crossing.
pub fn enumerate_best_through<W: WeightOracle + ?Sized>(
    w: &W,
    mid_row: usize,
    window: RangeInclusive<usize>,
    target_column: usize,
) -> Weight {
    let GridShape { m, n } = w.shape();
    assert!(m <= 8 && n <= 8, "enumeration is desk-scale only");
    assert!(mid_row <= m && target_column <= n);
    let mut best = Weight::MIN;
    walk_to_target(
        w,
        m,
        mid_row,
        0,
        0,
        0,
        None,
        &mut |sum, crossing| {
            if let Some((lo, hi)) = crossing {
                if lo <= *window.end() && *window.start() <= hi {
                    best = best.max(sum);
                }
            }
        },
        target_column,
    );
    best
}

fn walk_paths<W: WeightOracle + ?Sized>(
    w: &W,
    m: usize,
    n: usize,
    i: usize,
    j: usize,
    sum: Weight,
    visit: &mut impl FnMut(Weight),
) {
    if i == m && j == n {
        visit(sum);
        return;
    }
    if j < n {
        walk_paths(
            w,
            m,
            n,
            i,
            j + 1,
            sum + w.weight(Edge::horizontal(i, j)),
            visit,
        );
    }
    if i < m {
        walk_paths(
            w,
            m,
            n,
            i + 1,
            j,
            sum + w.weight(Edge::vertical(i, j)),
            visit,
        );
    }
    if i < m && j < n {
        walk_paths(
            w,
            m,
            n,
            i + 1,
            j + 1,
            sum + w.weight(Edge::diagonal(i, j)),
            visit,
        );
    }
}

#[allow(clippy::too_many_arguments)]
fn walk_to_target<W: WeightOracle + ?Sized>(
    w: &W,
    m: usize,
    mid_row: usize,
    i: usize,
    j: usize,
    sum: Weight,
    crossing: Option<(usize, usize)>,
    visit: &mut impl FnMut(Weight, Option<(usize, usize)>),
    target_column: usize,
) {
    let crossing = if i == mid_row {
        match crossing {
            None => Some((j, j)),
            Some((lo, _)) => Some((lo, j)),
        }
    } else {
        crossing
    };
    if i == m && j == target_column {
        visit(sum, crossing);
        return;
    }
    let n = w.shape().n;
    if j < n && j < target_column {
        walk_to_target(
            w,
            m,
            mid_row,
            i,
            j + 1,
            sum + w.weight(Edge::horizontal(i, j)),
            crossing,
            visit,
            target_column,
        );
    }
    if i < m {
        walk_to_target(
            w,
            m,
            mid_row,
            i + 1,
            j,
            sum + w.weight(Edge::vertical(i, j)),
            crossing,
            visit,
            target_column,
        );
    }
    if i < m && j < n && j < target_column {
        walk_to_target(
            w,
            m,
            mid_row,
            i + 1,
            j + 1,
            sum + w.weight(Edge::diagonal(i, j)),
            crossing,
            visit,
            target_column,
        );
    }
}
