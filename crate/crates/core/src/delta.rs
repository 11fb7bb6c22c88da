//! The signed term `Δ(G, A, B) = σ(G₋A)·σ(G₋B) − σ(G)·σ(G₋A₋B)`, its
//! component factorization, and the sign predicted by the A-B-path parity.
//!
//! `G₋A₋B` always means deletion of `A ∪ B`; `A` and `B` may overlap.

use std::fmt;

use num_bigint::{BigInt, Sign as BigSign};
use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::graph::{components, delete, disjoint_union, induced, Graph, VertexSet};
use crate::parity::{classify, Inconclusive, ParityClass, PathBudget};
use crate::sigma::{sigma, sigma_deleted, Count, MemoCache, SigmaCache};

/// Observed sign of an exact integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub const ALL: [Sign; 3] = [Sign::Negative, Sign::Zero, Sign::Positive];

    pub fn as_str(self) -> &'static str {
        match self {
            Sign::Negative => "Negative",
            Sign::Zero => "Zero",
            Sign::Positive => "Positive",
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Exact value of Δ.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DeltaValue(pub BigInt);

impl DeltaValue {
    /// `lhs_a·lhs_b − rhs_a·rhs_b`.
    pub fn from_products(lhs_a: &Count, lhs_b: &Count, rhs_a: &Count, rhs_b: &Count) -> Self {
        let lhs = BigInt::from_biguint(BigSign::Plus, &lhs_a.0 * &lhs_b.0);
        let rhs = BigInt::from_biguint(BigSign::Plus, &rhs_a.0 * &rhs_b.0);
        DeltaValue(lhs - rhs)
    }

    pub fn sign(&self) -> Sign {
        match self.0.sign() {
            BigSign::Minus => Sign::Negative,
            BigSign::NoSign => Sign::Zero,
            BigSign::Plus => Sign::Positive,
        }
    }

    pub fn value(&self) -> &BigInt {
        &self.0
    }
}

impl From<i64> for DeltaValue {
    fn from(v: i64) -> Self {
        DeltaValue(BigInt::from(v))
    }
}

impl fmt::Display for DeltaValue {
    /// Explicit `+` for positive values, plain `0` for zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign() {
            Sign::Positive => write!(f, "+{}", self.0),
            _ => write!(f, "{}", self.0),
        }
    }
}

/// Δ(G, A, B) from four σ evaluations sharing `cache`.
pub fn delta_sets<C: SigmaCache>(
    g: &Graph,
    a: VertexSet,
    b: VertexSet,
    cache: &mut C,
) -> DeltaValue {
    let s_a = sigma_deleted(g, a, cache);
    let s_b = sigma_deleted(g, b, cache);
    let s = sigma(g, cache);
    let s_ab = sigma_deleted(g, a.union(b), cache);
    DeltaValue::from_products(&s_a, &s_b, &s, &s_ab)
}

/// Δ(G, u, v) = Δ(G, {u}, {v}).
pub fn delta_vertices<C: SigmaCache>(g: &Graph, u: usize, v: usize, cache: &mut C) -> DeltaValue {
    assert!(u < g.n() && v < g.n(), "vertex out of range");
    delta_sets(g, VertexSet::singleton(u), VertexSet::singleton(v), cache)
}

/// Δ read off a table holding σ of every induced subgraph (see
/// [`crate::sigma::sigma_table`]).
pub fn delta_from_table(table: &[Count], n: usize, a: VertexSet, b: VertexSet) -> DeltaValue {
    let full = VertexSet::full(n).bits();
    let idx = |removed: u64| (full & !removed) as usize;
    DeltaValue::from_products(
        &table[idx(a.bits())],
        &table[idx(b.bits())],
        &table[full as usize],
        &table[idx(a.bits() | b.bits())],
    )
}

/// Split of `G` into `G^{AB}` (components meeting both `A` and `B`) and the
/// remainder `G*`, each relabeled, with the sets mapped along.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbReduction {
    pub g_ab: Graph,
    pub a_ab: VertexSet,
    pub b_ab: VertexSet,
    pub g_star: Graph,
    pub a_star: VertexSet,
    pub b_star: VertexSet,
    /// Original vertices forming `G^{AB}`.
    pub ab_vertices: VertexSet,
}

impl AbReduction {
    /// `σ(G*₋A ∪̇ G*₋B)`, evaluated on the materialized disjoint union.
    pub fn factor(&self) -> Result<Count, GraphError> {
        let left = delete(&self.g_star, self.a_star).graph;
        let right = delete(&self.g_star, self.b_star).graph;
        let union = disjoint_union(&left, &right)?;
        Ok(sigma(&union, &mut MemoCache::new()))
    }

    /// `Δ(G^{AB}, A, B)`.
    pub fn reduced_delta(&self) -> DeltaValue {
        delta_sets(&self.g_ab, self.a_ab, self.b_ab, &mut MemoCache::new())
    }

    /// Right-hand side of the factorization: `factor · Δ(G^{AB}, A, B)`.
    pub fn factored_delta(&self) -> Result<DeltaValue, GraphError> {
        let factor = self.factor()?;
        let reduced = self.reduced_delta();
        Ok(DeltaValue(
            BigInt::from_biguint(BigSign::Plus, factor.0) * reduced.0,
        ))
    }
}

pub fn reduce_to_ab_components(g: &Graph, a: VertexSet, b: VertexSet) -> AbReduction {
    let ab_vertices = components(g)
        .components
        .into_iter()
        .filter(|c| !c.is_disjoint(a) && !c.is_disjoint(b))
        .fold(VertexSet::EMPTY, VertexSet::union);
    let ab = induced(g, ab_vertices);
    let star = induced(g, g.vertices().difference(ab_vertices));
    AbReduction {
        a_ab: ab.map_set(a),
        b_ab: ab.map_set(b),
        g_ab: ab.graph,
        a_star: star.map_set(a),
        b_star: star.map_set(b),
        g_star: star.graph,
        ab_vertices,
    }
}

/// Sign predicted from the A-B-path parity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SignPrediction {
    Negative,
    Zero,
    Positive,
    NoClaim,
}

impl SignPrediction {
    /// Even ↦ Negative, Infinite ↦ Zero, Odd ↦ Positive, Mixed ↦ NoClaim.
    pub fn from_class(class: ParityClass) -> Self {
        match class {
            ParityClass::Even => SignPrediction::Negative,
            ParityClass::Infinite => SignPrediction::Zero,
            ParityClass::Odd => SignPrediction::Positive,
            ParityClass::Mixed => SignPrediction::NoClaim,
        }
    }

    /// Whether `observed` is consistent with the prediction. `None` for NoClaim.
    pub fn agrees(self, observed: Sign) -> Option<bool> {
        let expected = match self {
            SignPrediction::Negative => Sign::Negative,
            SignPrediction::Zero => Sign::Zero,
            SignPrediction::Positive => Sign::Positive,
            SignPrediction::NoClaim => return None,
        };
        Some(expected == observed)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            SignPrediction::Negative => "Negative",
            SignPrediction::Zero => "Zero",
            SignPrediction::Positive => "Positive",
            SignPrediction::NoClaim => "NoClaim",
        }
    }
}

impl fmt::Display for SignPrediction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A prediction together with the classification behind it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Prediction {
    pub sign: SignPrediction,
    pub class: Result<ParityClass, Inconclusive>,
}

impl Prediction {
    pub fn is_inconclusive(&self) -> bool {
        self.class.is_err()
    }
}

pub fn predict_sign(g: &Graph, a: VertexSet, b: VertexSet, budget: PathBudget) -> Prediction {
    let class = classify(g, a, b, budget);
    Prediction {
        sign: class.map_or(SignPrediction::NoClaim, SignPrediction::from_class),
        class,
    }
}
