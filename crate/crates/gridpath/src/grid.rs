//! The weighted grid DAG and the weight-oracle abstraction.
//!
//! The graph for a shape `(m, n)` has vertices `(i, j)` with `0 <= i <= m`
//! and `0 <= j <= n`, and three edge families out of each vertex where they
//! fit: rightward (horizontal), downward (vertical), and down-right
//! (diagonal). No adjacency structure is ever materialized; all weight
//! lookups go through [`WeightOracle`], and subproblems are expressed by
//! wrapping an oracle in a combinator rather than by copying weights.

use crate::metering::VALUE_BITS;

/// Edge weights and path sums share one signed 64-bit domain.
pub type Weight = i64;

/// Largest genuine edge magnitude the path-sum arithmetic is vouched for.
///
/// Together with [`MAX_PADDED_PERIMETER`] this keeps every genuine path sum
/// below `2^41` and every sentinel-augmented sum comfortably inside `i64`:
/// a sentinel for those caps is below `2^43` in magnitude and a monotone
/// path traverses fewer than `m + n` edges.
pub const MAX_GENUINE_WEIGHT: Weight = 1 << 20;

/// Cap on `m_hat + n` for padded shapes covered by the overflow guarantee.
pub const MAX_PADDED_PERIMETER: usize = 1 << 21;

/// Grid shape: row indices run `0..=m`, column indices `0..=n`.
///
/// The grid therefore has `(m + 1) * (n + 1)` vertices and
/// `m * (n + 1) + (m + 1) * n + m * n` edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GridShape {
    pub m: usize,
    pub n: usize,
}

impl GridShape {
    pub fn new(m: usize, n: usize) -> Self {
        GridShape { m, n }
    }

    pub fn vertex_count(&self) -> usize {
        (self.m + 1) * (self.n + 1)
    }

    pub fn edge_count(&self) -> usize {
        self.m * (self.n + 1) + (self.m + 1) * self.n + self.m * self.n
    }

    /// Whether `edge` exists in a grid of this shape.
    pub fn contains_edge(&self, edge: Edge) -> bool {
        match edge.kind {
            EdgeKind::Horizontal => edge.i <= self.m && edge.j < self.n,
            EdgeKind::Vertical => edge.i < self.m && edge.j <= self.n,
            EdgeKind::Diagonal => edge.i < self.m && edge.j < self.n,
        }
    }

    /// All edges of the grid, in no particular order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let shape = *self;
        (0..=self.m).flat_map(move |i| {
            (0..=shape.n).flat_map(move |j| {
                [EdgeKind::Horizontal, EdgeKind::Vertical, EdgeKind::Diagonal]
                    .into_iter()
                    .map(move |kind| Edge { i, j, kind })
                    .filter(move |e| shape.contains_edge(*e))
            })
        })
    }
}

/// The three edge families of the grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    /// `(i, j) -> (i, j + 1)`
    Horizontal,
    /// `(i, j) -> (i + 1, j)`
    Vertical,
    /// `(i, j) -> (i + 1, j + 1)`
    Diagonal,
}

/// An edge, identified by its tail vertex and family.
///
/// Identifying edges by `(tail, kind)` instead of `(tail, head)` makes
/// malformed heads unrepresentable; validity near the borders is a shape
/// question answered by [`GridShape::contains_edge`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub i: usize,
    pub j: usize,
    pub kind: EdgeKind,
}

impl Edge {
    pub fn horizontal(i: usize, j: usize) -> Self {
        Edge {
            i,
            j,
            kind: EdgeKind::Horizontal,
        }
    }

    pub fn vertical(i: usize, j: usize) -> Self {
        Edge {
            i,
            j,
            kind: EdgeKind::Vertical,
        }
    }

    pub fn diagonal(i: usize, j: usize) -> Self {
        Edge {
            i,
            j,
            kind: EdgeKind::Diagonal,
        }
    }

    /// Head vertex of the edge.
    pub fn head(&self) -> (usize, usize) {
        match self.kind {
            EdgeKind::Horizontal => (self.i, self.j + 1),
            EdgeKind::Vertical => (self.i + 1, self.j),
            EdgeKind::Diagonal => (self.i + 1, self.j + 1),
        }
    }
}

/// A pure, constant-time map from grid edges to weights.
///
/// Implementations must be deterministic (same edge, same weight) and free
/// of shared mutable state, so oracles can be queried concurrently and
/// re-queried at will. Callers only pass edges valid for [`shape`].
///
/// [`shape`]: WeightOracle::shape
pub trait WeightOracle: Sync {
    fn shape(&self) -> GridShape;
    fn weight(&self, edge: Edge) -> Weight;
}

impl<T: WeightOracle + ?Sized> WeightOracle for &T {
    fn shape(&self) -> GridShape {
        (**self).shape()
    }

    fn weight(&self, edge: Edge) -> Weight {
        (**self).weight(edge)
    }
}

/// Upper-left restriction of an oracle; see [`restrict`].
#[derive(Debug, Clone, Copy)]
pub struct Restricted<W> {
    inner: W,
    shape: GridShape,
}

/// Restrict `w` to the sub-grid of shape `(m, n)` anchored at the origin.
///
/// Every surviving edge keeps its weight. Panics if the requested shape
/// exceeds the source shape.
pub fn restrict<W: WeightOracle>(w: W, m: usize, n: usize) -> Restricted<W> {
    let src = w.shape();
    assert!(
        m <= src.m && n <= src.n,
        "restriction ({m}, {n}) exceeds source shape ({}, {})",
        src.m,
        src.n
    );
    Restricted {
        inner: w,
        shape: GridShape::new(m, n),
    }
}

impl<W: WeightOracle> WeightOracle for Restricted<W> {
    fn shape(&self) -> GridShape {
        self.shape
    }

    fn weight(&self, edge: Edge) -> Weight {
        debug_assert!(self.shape.contains_edge(edge));
        self.inner.weight(edge)
    }
}

/// Translated sub-grid view of an oracle; see [`shift`].
#[derive(Debug, Clone, Copy)]
pub struct Shifted<W> {
    inner: W,
    di: usize,
    dj: usize,
    shape: GridShape,
}

/// View the `(m, n)`-shaped sub-grid of `w` whose origin sits at `(di, dj)`.
///
/// An edge at `(i, j)` of the view evaluates to `w`'s weight at
/// `(i + di, j + dj)`. Panics if the window hangs over the source shape.
pub fn shift<W: WeightOracle>(w: W, di: usize, dj: usize, m: usize, n: usize) -> Shifted<W> {
    let src = w.shape();
    assert!(
        di + m <= src.m && dj + n <= src.n,
        "shifted window ({di}+{m}, {dj}+{n}) exceeds source shape ({}, {})",
        src.m,
        src.n
    );
    Shifted {
        inner: w,
        di,
        dj,
        shape: GridShape::new(m, n),
    }
}

impl<W: WeightOracle> WeightOracle for Shifted<W> {
    fn shape(&self) -> GridShape {
        self.shape
    }

    fn weight(&self, edge: Edge) -> Weight {
        debug_assert!(self.shape.contains_edge(edge));
        self.inner.weight(Edge {
            i: edge.i + self.di,
            j: edge.j + self.dj,
            kind: edge.kind,
        })
    }
}

/// Oracle with rewritten top-row horizontal edges; see [`override_row0`].
#[derive(Debug, Clone)]
pub struct RowZeroOverride<W> {
    inner: W,
    diffs: Vec<Weight>,
}

/// Replace the weights of the horizontal edges `((0, j), (0, j + 1))` for
/// `j < diffs.len()` by `diffs[j]`; every other edge is untouched.
///
/// This is how entry lengths into a lower subproblem are encoded: the top
/// row carries consecutive differences of already-computed path lengths, so
/// the unique top-row path from column 0 to column `q` telescopes to the
/// length difference between the two anchor columns.
pub fn override_row0<W: WeightOracle>(w: W, diffs: Vec<Weight>) -> RowZeroOverride<W> {
    assert!(
        diffs.len() <= w.shape().n,
        "{} override entries for {} top-row horizontal edges",
        diffs.len(),
        w.shape().n
    );
    RowZeroOverride { inner: w, diffs }
}

impl<W: WeightOracle> WeightOracle for RowZeroOverride<W> {
    fn shape(&self) -> GridShape {
        self.inner.shape()
    }

    fn weight(&self, edge: Edge) -> Weight {
        if edge.kind == EdgeKind::Horizontal && edge.i == 0 && edge.j < self.diffs.len() {
            self.diffs[edge.j]
        } else {
            self.inner.weight(edge)
        }
    }
}

/// Sign-flipped oracle; see [`negate`].
#[derive(Debug, Clone, Copy)]
pub struct Negated<W> {
    inner: W,
}

/// Multiply every edge weight by -1. Longest paths under the result are
/// shortest paths under the input, which is how minimization problems ride
/// on the maximizing machinery.
pub fn negate<W: WeightOracle>(w: W) -> Negated<W> {
    Negated { inner: w }
}

impl<W: WeightOracle> WeightOracle for Negated<W> {
    fn shape(&self) -> GridShape {
        self.inner.shape()
    }

    fn weight(&self, edge: Edge) -> Weight {
        -self.inner.weight(edge)
    }
}

/// Transposed oracle; see [`transpose`].
#[derive(Debug, Clone, Copy)]
pub struct Transposed<W> {
    inner: W,
}

/// Swap the two axes: the result has shape `(n, m)`, horizontal and
/// vertical edges trade places, and diagonals map to diagonals. Corner-to-
/// corner path lengths are preserved, so callers can always orient the
/// smaller dimension onto the rows.
pub fn transpose<W: WeightOracle>(w: W) -> Transposed<W> {
    Transposed { inner: w }
}

impl<W: WeightOracle> WeightOracle for Transposed<W> {
    fn shape(&self) -> GridShape {
        let s = self.inner.shape();
        GridShape::new(s.n, s.m)
    }

    fn weight(&self, edge: Edge) -> Weight {
        let kind = match edge.kind {
            EdgeKind::Horizontal => EdgeKind::Vertical,
            EdgeKind::Vertical => EdgeKind::Horizontal,
            EdgeKind::Diagonal => EdgeKind::Diagonal,
        };
        self.inner.weight(Edge {
            i: edge.j,
            j: edge.i,
            kind,
        })
    }
}

/// Row-padded oracle; see [`pad_rows`].
#[derive(Debug, Clone, Copy)]
pub struct RowPadded<W> {
    inner: W,
    orig_m: usize,
    shape: GridShape,
    sentinel: Weight,
}

/// Pad an oracle to the next power-of-two row count `m_hat`.
///
/// Edges lying entirely within the original rows keep their weights. Every
/// dummy edge evaluates to `sentinel`, except the vertical edges of the
/// last column below the original bottom row, which evaluate to 0 so that
/// the corner value survives: the only useful continuation past the
/// original bottom-right corner is straight down, and any path that dips
/// into the dummy region elsewhere picks up at least one sentinel and drops
/// below every genuine path.
///
/// Returns the oracle together with `m_hat`. Requires `m >= 1`.
pub fn pad_rows<W: WeightOracle>(w: W, sentinel: Weight) -> (RowPadded<W>, usize) {
    let src = w.shape();
    assert!(src.m >= 1, "cannot pad an empty row range");
    let m_hat = src.m.next_power_of_two();
    let shape = GridShape::new(m_hat, src.n);
    (
        RowPadded {
            inner: w,
            orig_m: src.m,
            shape,
            sentinel,
        },
        m_hat,
    )
}

impl<W: WeightOracle> WeightOracle for RowPadded<W> {
    fn shape(&self) -> GridShape {
        self.shape
    }

    fn weight(&self, edge: Edge) -> Weight {
        debug_assert!(self.shape.contains_edge(edge));
        let head_row = edge.head().0;
        if head_row <= self.orig_m {
            self.inner.weight(edge)
        } else if edge.kind == EdgeKind::Vertical && edge.j == self.shape.n {
            0
        } else {
            self.sentinel
        }
    }
}

/// Sentinel standing in for "minus infinity" on padding edges.
///
/// Finite on purpose: all arithmetic stays ordinary two's-complement, the
/// telescoping of consecutive length differences holds verbatim, and a path
/// that touched any padding edge is detectable afterwards by thresholding.
/// `w_max` is the largest genuine `|weight|` of the oracle being padded.
pub fn sentinel_weight(m_hat: usize, n: usize, w_max: Weight) -> Weight {
    debug_assert!(w_max >= 0);
    -(2 * (m_hat + n + 2) as Weight * w_max + 1)
}

/// Values at or above this are genuine path sums; anything below passed
/// through at least one sentinel edge.
pub fn contamination_threshold(m_hat: usize, n: usize, w_max: Weight) -> Weight {
    -((m_hat + n) as Weight * w_max)
}

/// Auxiliary bits an oracle combinator holds beyond its parent: only the
/// row-zero override stores anything that grows with the problem.
pub fn oracle_overhead_bits<W>(oracle: &RowZeroOverride<W>) -> u64 {
    oracle.diffs.len() as u64 * VALUE_BITS
}
