//! Exact counting of independent sets.
//!
//! [`sigma`] splits the graph into connected components, multiplies their
//! counts, and inside each component branches on a maximum-degree pivot `v`:
//!
//! ```text
//! σ(G) = σ(G₋v) + σ(G₋v₋N(v))
//! ```
//!
//! Every intermediate graph is an induced subgraph of the root graph, so a
//! component is keyed by its vertex mask in root coordinates. [`sigma_naive`]
//! is the independent backtracking oracle.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul};

use dashmap::DashMap;
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::error::SigmaError;
use crate::graph::{bit, components_within, low_bits, neighborhood, Graph, VertexSet};

/// Largest graph the naive oracle accepts.
pub const ORACLE_CAP: usize = 30;

/// Number of independent sets. Always at least one.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Count(pub BigUint);

impl Count {
    pub fn one() -> Self {
        Count(BigUint::one())
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }
}

impl From<u64> for Count {
    fn from(v: u64) -> Self {
        Count(BigUint::from(v))
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Add for Count {
    type Output = Count;
    fn add(self, rhs: Count) -> Count {
        Count(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a Count> for Count {
    type Output = Count;
    fn add(self, rhs: &'a Count) -> Count {
        Count(self.0 + &rhs.0)
    }
}

impl<'a> Mul<&'a Count> for &'a Count {
    type Output = Count;
    fn mul(self, rhs: &'a Count) -> Count {
        Count(&self.0 * &rhs.0)
    }
}

impl Mul for Count {
    type Output = Count;
    fn mul(self, rhs: Count) -> Count {
        Count(self.0 * rhs.0)
    }
}

impl std::iter::Sum for Count {
    fn sum<I: Iterator<Item = Count>>(iter: I) -> Count {
        Count(iter.map(|c| c.0).sum())
    }
}

impl std::iter::Product for Count {
    fn product<I: Iterator<Item = Count>>(iter: I) -> Count {
        Count(iter.map(|c| c.0).product())
    }
}

/// Storage for component counts keyed by root-graph vertex mask.
pub trait SigmaCache {
    /// Prepares the cache for `g`. Keys are only meaningful for one graph.
    fn bind(&mut self, g: &Graph);
    fn lookup(&mut self, key: u64) -> Option<Count>;
    fn store(&mut self, key: u64, value: Count);
}

/// Single-owner memo table. Rebinding to a different graph clears it.
#[derive(Default, Debug)]
pub struct MemoCache {
    owner: Option<Graph>,
    map: HashMap<u64, Count>,
}

impl MemoCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Cached `(component mask, σ)` pairs.
    pub fn entries(&self) -> impl Iterator<Item = (VertexSet, &Count)> {
        self.map.iter().map(|(&k, v)| (VertexSet(k), v))
    }
}

impl SigmaCache for MemoCache {
    fn bind(&mut self, g: &Graph) {
        if self.owner.as_ref() != Some(g) {
            self.owner = Some(g.clone());
            self.map.clear();
        }
    }

    fn lookup(&mut self, key: u64) -> Option<Count> {
        self.map.get(&key).cloned()
    }

    fn store(&mut self, key: u64, value: Count) {
        self.map.insert(key, value);
    }
}

/// Memo table usable from many threads at once for one fixed graph.
///
/// Reads and inserts are atomic per key; two tasks may compute the same key
/// concurrently, which is harmless since both store the same value.
#[derive(Debug)]
pub struct SharedMemoCache {
    owner: Graph,
    map: DashMap<u64, Count>,
}

impl SharedMemoCache {
    pub fn new(g: &Graph) -> Self {
        SharedMemoCache {
            owner: g.clone(),
            map: DashMap::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

impl SigmaCache for &SharedMemoCache {
    fn bind(&mut self, g: &Graph) {
        assert!(
            &self.owner == g,
            "shared cache is bound to a different graph"
        );
    }

    fn lookup(&mut self, key: u64) -> Option<Count> {
        self.map.get(&key).map(|r| r.value().clone())
    }

    fn store(&mut self, key: u64, value: Count) {
        self.map.entry(key).or_insert(value);
    }
}

/// Counts independent sets by plain backtracking over vertices `0, 1, …`.
pub fn sigma_naive(g: &Graph) -> Result<Count, SigmaError> {
    if g.n() > ORACLE_CAP {
        return Err(SigmaError::OracleCapacity {
            n: g.n(),
            cap: ORACLE_CAP,
        });
    }
    fn count(g: &Graph, v: usize, blocked: u64) -> u64 {
        if v == g.n() {
            return 1;
        }
        let skip = count(g, v + 1, blocked);
        if blocked & bit(v) != 0 {
            skip
        } else {
            skip + count(g, v + 1, blocked | g.row(v))
        }
    }
    Ok(Count::from(count(g, 0, 0)))
}

/// σ(G) by component splitting and pivot branching.
pub fn sigma<C: SigmaCache>(g: &Graph, cache: &mut C) -> Count {
    sigma_induced(g, g.vertices(), cache)
}

/// σ of the subgraph induced on `keep`, without materializing it.
pub fn sigma_induced<C: SigmaCache>(g: &Graph, keep: VertexSet, cache: &mut C) -> Count {
    cache.bind(g);
    sigma_mask(g, keep.bits() & low_bits(g.n()), cache)
}

/// σ(G₋W).
pub fn sigma_deleted<C: SigmaCache>(g: &Graph, w: VertexSet, cache: &mut C) -> Count {
    sigma_induced(g, g.vertices().difference(w), cache)
}

/// σ(G) with a throwaway cache.
pub fn sigma_fresh(g: &Graph) -> Count {
    sigma(g, &mut MemoCache::new())
}

fn sigma_mask<C: SigmaCache>(g: &Graph, mask: u64, cache: &mut C) -> Count {
    if mask == 0 {
        return Count::one();
    }
    components_within(g, mask)
        .into_iter()
        .map(|c| sigma_component(g, c.bits(), cache))
        .product()
}

fn sigma_component<C: SigmaCache>(g: &Graph, comp: u64, cache: &mut C) -> Count {
    if comp.count_ones() == 1 {
        return Count::from(2);
    }
    if let Some(hit) = cache.lookup(comp) {
        return hit;
    }
    let pivot = VertexSet(comp)
        .iter()
        .max_by_key(|&v| ((g.row(v) & comp).count_ones(), std::cmp::Reverse(v)))
        .expect("component is nonempty");
    let rest = comp & !bit(pivot);
    let without = sigma_mask(g, rest, cache);
    let with = sigma_mask(g, rest & !g.row(pivot), cache);
    let total = without + with;
    cache.store(comp, total.clone());
    total
}

/// σ of every induced subgraph, indexed by vertex mask. Intended for small
/// graphs (`2^n` entries).
pub fn sigma_table<C: SigmaCache>(g: &Graph, cache: &mut C) -> Vec<Count> {
    assert!(g.n() <= 20, "sigma_table needs 2^n entries");
    (0..1u64 << g.n())
        .map(|mask| sigma_induced(g, VertexSet(mask), cache))
        .collect()
}

/// `Σ σ(G₋U₋N(W))` over independent `W ⊆ U`, which equals σ(G) for every `U`.
pub fn expansion_sum<C: SigmaCache>(g: &Graph, u: VertexSet, cache: &mut C) -> Count {
    let u = u.intersection(g.vertices());
    u.subsets()
        .filter(|&w| g.is_independent(w))
        .map(|w| sigma_deleted(g, u.union(neighborhood(g, w)), cache))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, delete, disjoint_union, path_graph};

    fn naive(g: &Graph) -> u64 {
        sigma_naive(g).unwrap().to_u64().unwrap()
    }

    fn fast(g: &Graph) -> u64 {
        sigma_fresh(g).to_u64().unwrap()
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(naive(&Graph::empty(0).unwrap()), 1);
        assert_eq!(naive(&Graph::empty(1).unwrap()), 2);
        assert_eq!(naive(&complete_graph(2)), 3);
        assert_eq!(naive(&path_graph(4)), 8);
        assert!(matches!(
            sigma_naive(&Graph::empty(31).unwrap()),
            Err(SigmaError::OracleCapacity { n: 31, cap: 30 })
        ));
    }

    #[test]
    fn engine_examples() {
        let k2 = complete_graph(2);
        assert_eq!(fast(&disjoint_union(&k2, &k2).unwrap()), 9);
        assert_eq!(fast(&cycle_graph(5)), 11);
        assert_eq!(fast(&Graph::empty(0).unwrap()), 1);
        // edgeless graph on 64 vertices: 2^64 does not fit in u64
        let big = sigma_fresh(&Graph::empty(64).unwrap());
        assert_eq!(big.0, BigUint::from(1u8) << 64);
    }

    #[test]
    fn deleted_examples() {
        let mut cache = MemoCache::new();
        let k2 = complete_graph(2);
        assert_eq!(
            sigma_deleted(&k2, VertexSet::singleton(0), &mut cache),
            Count::from(2)
        );
        let p5 = path_graph(5);
        assert_eq!(
            sigma_deleted(&p5, VertexSet::EMPTY, &mut cache),
            sigma(&p5, &mut cache)
        );
        // a–c–b labeled 0–2–1
        let p3 = Graph::from_edges(3, &[(0, 2), (2, 1)]).unwrap();
        assert_eq!(
            sigma_deleted(&p3, VertexSet::from_vertices([0, 1]), &mut cache),
            Count::from(2)
        );
    }

    #[test]
    fn expansion_examples() {
        let mut cache = MemoCache::new();
        let k2 = complete_graph(2);
        assert_eq!(
            expansion_sum(&k2, VertexSet::full(2), &mut cache),
            Count::from(3)
        );
        let c7 = cycle_graph(7);
        let s = sigma(&c7, &mut cache);
        assert_eq!(expansion_sum(&c7, VertexSet::EMPTY, &mut cache), s);
        for v in 0..7 {
            assert_eq!(expansion_sum(&c7, VertexSet::singleton(v), &mut cache), s);
        }
    }

    #[test]
    fn path_and_cycle_families_follow_fibonacci() {
        // f(0) = 1, f(1) = 2, f(n) = f(n-1) + f(n-2)
        let mut f = vec![1u64, 2];
        for i in 2..=20 {
            f.push(f[i - 1] + f[i - 2]);
        }
        for (n, &count) in f.iter().enumerate() {
            assert_eq!(naive(&path_graph(n)), count, "path {n}");
            assert_eq!(fast(&path_graph(n)), count, "path {n}");
        }
        for n in 3..=20 {
            let expected = f[n - 1] + f[n - 3];
            assert_eq!(naive(&cycle_graph(n)), expected, "cycle {n}");
            assert_eq!(fast(&cycle_graph(n)), expected, "cycle {n}");
        }
    }

    #[test]
    fn recurrence_on_every_vertex() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)])
            .unwrap();
        let total = fast(&g);
        for v in 0..6 {
            let a = fast(&delete(&g, VertexSet::singleton(v)).graph);
            let closed = VertexSet::singleton(v).union(g.adj(v));
            let b = fast(&delete(&g, closed).graph);
            assert_eq!(total, a + b);
        }
    }

    #[test]
    fn cache_rebinds_between_graphs() {
        let mut cache = MemoCache::new();
        assert_eq!(sigma(&cycle_graph(6), &mut cache), Count::from(18));
        assert!(!cache.is_empty());
        assert_eq!(sigma(&complete_graph(6), &mut cache), Count::from(7));
    }

    #[test]
    fn cached_entries_match_oracle() {
        let g = Graph::from_edges(
            8,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 7),
                (7, 4),
                (1, 5),
            ],
        )
        .unwrap();
        let mut cache = MemoCache::new();
        sigma(&g, &mut cache);
        for (mask, value) in cache.entries() {
            let sub = crate::graph::induced(&g, mask).graph;
            assert_eq!(value, &sigma_naive(&sub).unwrap(), "mask {mask:?}");
        }
    }

    #[test]
    fn shared_cache_across_threads() {
        let g = Graph::from_edges(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 7),
                (7, 8),
                (8, 9),
                (9, 0),
                (0, 5),
            ],
        )
        .unwrap();
        let expected = sigma_naive(&g).unwrap();
        let shared = SharedMemoCache::new(&g);
        std::thread::scope(|s| {
            for t in 0..4 {
                let shared = &shared;
                let g = &g;
                let expected = &expected;
                s.spawn(move || {
                    let mut handle = shared;
                    for mask in (t..1u64 << 10).step_by(4) {
                        let got = sigma_induced(g, VertexSet(mask), &mut handle);
                        let oracle =
                            sigma_naive(&crate::graph::induced(g, VertexSet(mask)).graph).unwrap();
                        assert_eq!(got, oracle);
                    }
                    assert_eq!(&sigma(g, &mut handle), expected);
                });
            }
        });
        assert!(!shared.is_empty());
    }
}
