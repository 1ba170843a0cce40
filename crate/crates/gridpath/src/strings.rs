//! Weight oracles built from string pairs: the common-subsequence scoring
//! and the generalized edit-distance scoring.

use std::fmt;
use std::sync::Arc;

use crate::grid::{Edge, EdgeKind, GridShape, Weight, WeightOracle};

/// One symbol. Bytes widen losslessly; Unicode scalar values fit as-is.
pub type Symbol = u32;

/// An indexed, immutable sequence of symbols.
///
/// Byte mode treats each input byte as one symbol. Char mode decodes UTF-8
/// up front into scalar values so that lookups stay constant-time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolString {
    symbols: Vec<Symbol>,
}

impl SymbolString {
    pub fn from_bytes(bytes: &[u8]) -> Self {
        SymbolString {
            symbols: bytes.iter().map(|&b| Symbol::from(b)).collect(),
        }
    }

    pub fn from_chars(text: &str) -> Self {
        SymbolString {
            symbols: text.chars().map(|c| c as Symbol).collect(),
        }
    }

    pub fn from_symbols(symbols: Vec<Symbol>) -> Self {
        SymbolString { symbols }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Symbol at `index` (0-based).
    pub fn get(&self, index: usize) -> Symbol {
        self.symbols[index]
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }
}

/// Common-subsequence weighting over the grid of shape `(|s|, |t|)`:
/// axis edges weigh 0 and the diagonal leaving `(i, j)` weighs 1 exactly
/// when `s[i] == t[j]`. The corner-to-corner longest path length equals
/// the length of a longest common subsequence.
pub fn lcs_oracle<'a>(s: &'a SymbolString, t: &'a SymbolString) -> LcsWeights<'a> {
    LcsWeights { s, t }
}

#[derive(Debug, Clone, Copy)]
pub struct LcsWeights<'a> {
    s: &'a SymbolString,
    t: &'a SymbolString,
}

impl WeightOracle for LcsWeights<'_> {
    fn shape(&self) -> GridShape {
        GridShape::new(self.s.len(), self.t.len())
    }

    fn weight(&self, edge: Edge) -> Weight {
        debug_assert!(self.shape().contains_edge(edge));
        match edge.kind {
            EdgeKind::Diagonal if self.s.get(edge.i) == self.t.get(edge.j) => 1,
            _ => 0,
        }
    }
}

type SymbolCostFn = Arc<dyn Fn(Symbol) -> Weight + Send + Sync>;
type PairCostFn = Arc<dyn Fn(Symbol, Symbol) -> Weight + Send + Sync>;

/// Nonnegative per-operation costs for the edit-distance weighting.
/// Matches always cost 0; substitution cost applies only to unequal pairs.
#[derive(Clone)]
pub struct CostTable {
    ins: SymbolCostFn,
    del: SymbolCostFn,
    sub: PairCostFn,
    max_cost: Weight,
}

impl fmt::Debug for CostTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CostTable")
            .field("max_cost", &self.max_cost)
            .finish()
    }
}

impl CostTable {
    /// Unit cost for every operation: the classic Levenshtein distance.
    pub fn unit() -> Self {
        CostTable::uniform(1, 1, 1)
    }

    /// Symbol-independent costs.
    pub fn uniform(ins: Weight, del: Weight, sub: Weight) -> Self {
        assert!(
            ins >= 0 && del >= 0 && sub >= 0,
            "costs must be nonnegative"
        );
        CostTable {
            ins: Arc::new(move |_| ins),
            del: Arc::new(move |_| del),
            sub: Arc::new(move |_, _| sub),
            max_cost: ins.max(del).max(sub),
        }
    }

    /// Arbitrary per-symbol cost functions. `max_cost` must bound every
    /// value the functions can return; it sizes the padding sentinel.
    pub fn from_fns(
        ins: impl Fn(Symbol) -> Weight + Send + Sync + 'static,
        del: impl Fn(Symbol) -> Weight + Send + Sync + 'static,
        sub: impl Fn(Symbol, Symbol) -> Weight + Send + Sync + 'static,
        max_cost: Weight,
    ) -> Self {
        assert!(max_cost >= 0);
        CostTable {
            ins: Arc::new(ins),
            del: Arc::new(del),
            sub: Arc::new(sub),
            max_cost,
        }
    }

    /// Byte-mode tables: 256 insertion costs, 256 deletion costs, and a
    /// row-major 256x256 substitution table. Symbols above 255 are clamped
    /// onto the last row/column.
    pub fn from_byte_tables(ins: Vec<Weight>, del: Vec<Weight>, sub: Vec<Weight>) -> Self {
        assert_eq!(ins.len(), 256);
        assert_eq!(del.len(), 256);
        assert_eq!(sub.len(), 256 * 256);
        let max_cost = ins
            .iter()
            .chain(del.iter())
            .chain(sub.iter())
            .copied()
            .max()
            .expect("tables are non-empty");
        assert!(
            ins.iter()
                .chain(del.iter())
                .chain(sub.iter())
                .all(|&c| c >= 0),
            "costs must be nonnegative"
        );
        let clamp = |sym: Symbol| (sym as usize).min(255);
        CostTable {
            ins: {
                let ins = ins.clone();
                Arc::new(move |sym| ins[clamp(sym)])
            },
            del: {
                let del = del.clone();
                Arc::new(move |sym| del[clamp(sym)])
            },
            sub: Arc::new(move |a, b| sub[clamp(a) * 256 + clamp(b)]),
            max_cost,
        }
    }

    pub fn insertion(&self, inserted: Symbol) -> Weight {
        let c = (self.ins)(inserted);
        debug_assert!(c >= 0);
        c
    }

    pub fn deletion(&self, deleted: Symbol) -> Weight {
        let c = (self.del)(deleted);
        debug_assert!(c >= 0);
        c
    }

    pub fn substitution(&self, from: Symbol, to: Symbol) -> Weight {
        if from == to {
            return 0;
        }
        let c = (self.sub)(from, to);
        debug_assert!(c >= 0);
        c
    }

    /// Bound on every cost the table can produce.
    pub fn max_cost(&self) -> Weight {
        self.max_cost
    }
}

/// Edit-distance weighting in min-plus orientation: the vertical edge
/// leaving row `i` costs deleting `s[i]`, the horizontal edge at column
/// `j` costs inserting `t[j]`, and the diagonal costs substituting (0 on a
/// match). Consumers minimize by maximizing over the negated oracle.
pub fn edit_oracle<'a>(
    s: &'a SymbolString,
    t: &'a SymbolString,
    costs: &'a CostTable,
) -> EditWeights<'a> {
    EditWeights { s, t, costs }
}

#[derive(Debug, Clone, Copy)]
pub struct EditWeights<'a> {
    s: &'a SymbolString,
    t: &'a SymbolString,
    costs: &'a CostTable,
}

impl WeightOracle for EditWeights<'_> {
    fn shape(&self) -> GridShape {
        GridShape::new(self.s.len(), self.t.len())
    }

    fn weight(&self, edge: Edge) -> Weight {
        debug_assert!(self.shape().contains_edge(edge));
        match edge.kind {
            EdgeKind::Vertical => self.costs.deletion(self.s.get(edge.i)),
            EdgeKind::Horizontal => self.costs.insertion(self.t.get(edge.j)),
            EdgeKind::Diagonal => self
                .costs
                .substitution(self.s.get(edge.i), self.t.get(edge.j)),
        }
    }
}
