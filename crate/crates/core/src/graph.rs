//! Compact undirected simple graphs on at most 64 vertices.
//!
//! Each vertex owns one `u64` row of neighbor bits, so deletion, neighborhood
//! and component queries are a handful of word operations. Induced subgraphs
//! are identified by the [`VertexSet`] of surviving vertices; the counting and
//! parity engines work on such masks directly and only materialize relabeled
//! graphs through [`delete`] when a caller needs a standalone value.

use std::collections::VecDeque;
use std::fmt;

use crate::error::GraphError;

/// Maximum number of vertices a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64;

#[inline(always)]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline(always)]
pub const fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A subset of the vertices of some graph, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(bit(v))
    }

    /// All vertices `0..n`.
    pub fn full(n: usize) -> Self {
        VertexSet(low_bits(n))
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        VertexSet(vs.into_iter().fold(0, |acc, v| acc | bit(v)))
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & bit(v) != 0
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= bit(v);
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Lowest vertex in the set.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Whether every member is a vertex of `g`.
    pub fn is_valid_for(self, g: &Graph) -> bool {
        self.0 & !low_bits(g.n()) == 0
    }

    pub fn iter(self) -> Members {
        Members(self.0)
    }

    /// Iterates over every subset of `self`, starting with the empty set.
    pub fn subsets(self) -> Subsets {
        Subsets {
            universe: self.0,
            next: Some(0),
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Members {}

/// Submask enumeration in ascending numeric order.
#[derive(Clone)]
pub struct Subsets {
    universe: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.next?;
        self.next = if cur == self.universe {
            None
        } else {
            // next submask above `cur`
            Some(((cur | !self.universe).wrapping_add(1)) & self.universe)
        };
        Some(VertexSet(cur))
    }
}

/// Shortest-path distance, or `Infinite` between different components.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

/// Undirected simple graph with per-vertex neighbor bitsets.
///
/// Invariants: rows are symmetric, carry no self-loops, and never mention
/// vertices `>= n`. Every constructor upholds them.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u64; MAX_VERTICES],
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::Capacity { requested: n });
        }
        Ok(Graph {
            n,
            adj: [0; MAX_VERTICES],
        })
    }

    /// Builds a graph from an edge list. Loops and repeated edges are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: u.max(v),
                    n,
                });
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            if g.has_edge(u, v) {
                return Err(GraphError::DuplicateEdge { u, v });
            }
            g.add_edge_unchecked(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, validating every invariant.
    pub fn from_adjacency(rows: &[u64]) -> Result<Self, GraphError> {
        let n = rows.len();
        let mut g = Graph::empty(n)?;
        let mask = low_bits(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(GraphError::VertexOutOfRange {
                    vertex: 63 - (row & !mask).leading_zeros() as usize,
                    n,
                });
            }
            if row & bit(v) != 0 {
                return Err(GraphError::SelfLoop { vertex: v });
            }
            g.adj[v] = row;
        }
        for u in 0..n {
            for v in VertexSet(rows[u]) {
                if rows[v] & bit(u) == 0 {
                    return Err(GraphError::Asymmetric { u, v });
                }
            }
        }
        Ok(g)
    }

    pub(crate) fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Neighbor set of `v`.
    #[inline]
    pub fn adj(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj[..self.n]
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in VertexSet(self.adj[u] & !low_bits(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    /// Whether no two members of `w` are adjacent.
    pub fn is_independent(&self, w: VertexSet) -> bool {
        w.iter().all(|v| self.adj[v] & w.0 == 0)
    }

    /// Permutes vertex labels: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal n");
        let mut g = Graph {
            n: self.n,
            adj: [0; MAX_VERTICES],
        };
        for (u, v) in self.edges() {
            g.add_edge_unchecked(perm[u], perm[v]);
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Result of [`delete`]: the induced subgraph on the survivors plus the
/// order-preserving map between old and new labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Deleted {
    pub graph: Graph,
    /// `survivors[new] = old`, ascending.
    pub survivors: Vec<usize>,
}

impl Deleted {
    /// Translates a set of original vertices into the subgraph's labels.
    /// Deleted members are dropped.
    pub fn map_set(&self, old: VertexSet) -> VertexSet {
        self.survivors
            .iter()
            .enumerate()
            .filter(|&(_, &o)| old.contains(o))
            .map(|(new, _)| new)
            .collect()
    }

    /// New label of an original vertex, if it survived.
    pub fn map_vertex(&self, old: usize) -> Option<usize> {
        self.survivors.binary_search(&old).ok()
    }
}

/// `G₋W`: removes the vertices of `w` with their incident edges and relabels
/// the survivors in ascending order.
pub fn delete(g: &Graph, w: VertexSet) -> Deleted {
    induced(g, g.vertices().difference(w))
}

/// Induced subgraph on `keep`, relabeled in ascending order.
pub fn induced(g: &Graph, keep: VertexSet) -> Deleted {
    let keep = keep.intersection(g.vertices());
    let survivors: Vec<usize> = keep.iter().collect();
    let mut h = Graph {
        n: survivors.len(),
        adj: [0; MAX_VERTICES],
    };
    for (new, &old) in survivors.iter().enumerate() {
        let row = g.adj[old] & keep.0;
        let mut mapped = 0u64;
        for (j, &o) in survivors.iter().enumerate() {
            if row & bit(o) != 0 {
                mapped |= bit(j);
            }
        }
        h.adj[new] = mapped;
    }
    Deleted {
        graph: h,
        survivors,
    }
}

/// `N_G(W)`: union of the neighbor sets of the members of `w`.
///
/// Not made disjoint from `w`; when `w` contains adjacent vertices the result
/// intersects it.
#[inline]
pub fn neighborhood(g: &Graph, w: VertexSet) -> VertexSet {
    VertexSet(w.iter().fold(0, |acc, v| acc | g.adj[v]))
}

/// Connected components of a graph, each as a vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentSplit {
    /// Ordered by ascending minimum vertex.
    pub components: Vec<VertexSet>,
}

impl ComponentSplit {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// The component containing `v`.
    pub fn component_of(&self, v: usize) -> Option<VertexSet> {
        self.components.iter().copied().find(|c| c.contains(v))
    }
}

/// Vertices reachable from `start` inside the induced subgraph on `within`.
#[inline]
pub(crate) fn reach_within(g: &Graph, start: usize, within: u64) -> u64 {
    let mut seen = bit(start);
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= g.adj[v];
        }
        next &= within & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

/// Components of the subgraph induced on `within`, ascending by minimum vertex.
pub(crate) fn components_within(g: &Graph, within: u64) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let mut rest = within;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        let comp = reach_within(g, v, within);
        out.push(VertexSet(comp));
        rest &= !comp;
    }
    out
}

pub fn components(g: &Graph) -> ComponentSplit {
    ComponentSplit {
        components: components_within(g, low_bits(g.n)),
    }
}

pub fn is_connected(g: &Graph) -> bool {
    g.n == 0 || reach_within(g, 0, low_bits(g.n)) == low_bits(g.n)
}

/// BFS distance between `u` and `v`.
pub fn distance(g: &Graph, u: usize, v: usize) -> Distance {
    assert!(u < g.n && v < g.n, "vertex out of range");
    distances_from(g, u)[v]
}

/// BFS distances from `source` to every vertex.
pub fn distances_from(g: &Graph, source: usize) -> Vec<Distance> {
    let mut dist = vec![Distance::Infinite; g.n];
    dist[source] = Distance::Finite(0);
    let mut queue = VecDeque::from([source]);
    while let Some(x) = queue.pop_front() {
        let dx = match dist[x] {
            Distance::Finite(d) => d,
            Distance::Infinite => unreachable!(),
        };
        for y in g.adj(x) {
            if dist[y] == Distance::Infinite {
                dist[y] = Distance::Finite(dx + 1);
                queue.push_back(y);
            }
        }
    }
    dist
}

/// Two-coloring with every edge bichromatic, if one exists.
///
/// Each component's lowest vertex gets color 0, so the result is deterministic.
pub fn bipartition(g: &Graph) -> Option<Vec<u8>> {
    let mut color = vec![u8::MAX; g.n];
    for root in 0..g.n {
        if color[root] != u8::MAX {
            continue;
        }
        color[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for y in g.adj(x) {
                if color[y] == u8::MAX {
                    color[y] = 1 - color[x];
                    queue.push_back(y);
                } else if color[y] == color[x] {
                    return None;
                }
            }
        }
    }
    Some(color)
}

pub fn is_bipartite(g: &Graph) -> bool {
    // Bitset BFS layering: a component is bipartite iff no edge joins two
    // vertices of the same layer parity.
    let mut rest = low_bits(g.n);
    while rest != 0 {
        let root = rest.trailing_zeros() as usize;
        let mut seen = bit(root);
        let mut frontier = seen;
        let mut parity = [bit(root), 0u64];
        let mut side = 0;
        while frontier != 0 {
            let mut next = 0u64;
            for v in VertexSet(frontier) {
                next |= g.adj[v];
            }
            side ^= 1;
            next &= !seen;
            parity[side] |= next;
            seen |= next;
            frontier = next;
        }
        for s in parity {
            for v in VertexSet(s) {
                if g.adj[v] & s != 0 {
                    return false;
                }
            }
        }
        rest &= !seen;
    }
    true
}

/// `G¹ ∪̇ G²`: vertices of `g2` are shifted above those of `g1`.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Result<Graph, GraphError> {
    let n = g1.n + g2.n;
    let mut g = Graph::empty(n)?;
    g.adj[..g1.n].copy_from_slice(&g1.adj[..g1.n]);
    for v in 0..g2.n {
        g.adj[g1.n + v] = g2.adj[v] << g1.n;
    }
    Ok(g)
}

/// Path `0 – 1 – … – (n-1)`.
pub fn path_graph(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges).expect("path fits")
}

/// Cycle on `n >= 3` vertices.
pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least three vertices");
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((n - 1, 0));
    Graph::from_edges(n, &edges).expect("cycle fits")
}

pub fn complete_graph(n: usize) -> Graph {
    let mut g = Graph::empty(n).expect("complete graph fits");
    for u in 0..n {
        g.adj[u] = low_bits(n) & !bit(u);
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k2() -> Graph {
        Graph::from_edges(2, &[(0, 1)]).unwrap()
    }

    // a–c–b with a = 0, b = 1, c = 2
    fn p3_center() -> Graph {
        Graph::from_edges(3, &[(0, 2), (2, 1)]).unwrap()
    }

    #[test]
    fn delete_examples() {
        assert_eq!(delete(&k2(), VertexSet::EMPTY).graph, k2());
        let d = delete(&k2(), VertexSet::singleton(0));
        assert_eq!(d.graph, Graph::empty(1).unwrap());
        assert_eq!(d.survivors, vec![1]);

        let d = delete(&p3_center(), VertexSet::singleton(2));
        assert_eq!(d.graph, Graph::empty(2).unwrap());
        assert_eq!(d.survivors, vec![0, 1]);

        let all = delete(&p3_center(), VertexSet::full(3));
        assert_eq!(all.graph.n(), 0);
    }

    #[test]
    fn delete_maps_sets() {
        let g = path_graph(5);
        let d = delete(&g, VertexSet::from_vertices([1, 3]));
        assert_eq!(d.survivors, vec![0, 2, 4]);
        assert_eq!(
            d.map_set(VertexSet::from_vertices([0, 1, 4])),
            VertexSet::from_vertices([0, 2])
        );
        assert_eq!(d.map_vertex(4), Some(2));
        assert_eq!(d.map_vertex(3), None);
        assert_eq!(d.graph.edge_count(), 0);
    }

    #[test]
    fn neighborhood_examples() {
        let g = p3_center();
        assert_eq!(
            neighborhood(&g, VertexSet::singleton(2)),
            VertexSet::from_vertices([0, 1])
        );
        assert_eq!(neighborhood(&g, VertexSet::EMPTY), VertexSet::EMPTY);
        assert_eq!(neighborhood(&k2(), VertexSet::full(2)), VertexSet::full(2));
    }

    #[test]
    fn component_examples() {
        let two = Graph::empty(2).unwrap();
        assert_eq!(
            components(&two).components,
            vec![VertexSet::singleton(0), VertexSet::singleton(1)]
        );
        assert_eq!(components(&k2()).components, vec![VertexSet::full(2)]);
        let g = disjoint_union(&path_graph(3), &Graph::empty(1).unwrap()).unwrap();
        assert_eq!(
            components(&g).components,
            vec![VertexSet::full(3), VertexSet::singleton(3)]
        );
    }

    #[test]
    fn distance_examples() {
        let g = p3_center();
        assert_eq!(distance(&g, 1, 1), Distance::Finite(0));
        assert_eq!(distance(&g, 0, 1), Distance::Finite(2));
        assert_eq!(
            distance(&Graph::empty(2).unwrap(), 0, 1),
            Distance::Infinite
        );
    }

    #[test]
    fn bipartition_examples() {
        assert_eq!(bipartition(&cycle_graph(4)), Some(vec![0, 1, 0, 1]));
        assert_eq!(bipartition(&cycle_graph(3)), None);
        assert_eq!(bipartition(&Graph::empty(0).unwrap()), Some(vec![]));
        assert!(is_bipartite(&cycle_graph(6)));
        assert!(!is_bipartite(&cycle_graph(5)));
    }

    #[test]
    fn disjoint_union_examples() {
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(disjoint_union(&k1, &k1).unwrap(), Graph::empty(2).unwrap());
        assert_eq!(
            disjoint_union(&Graph::empty(0).unwrap(), &k2()).unwrap(),
            k2()
        );
        assert_eq!(
            disjoint_union(&k2(), &k2()).unwrap(),
            Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap()
        );
        let big = Graph::empty(40).unwrap();
        assert!(matches!(
            disjoint_union(&big, &big),
            Err(GraphError::Capacity { requested: 80 })
        ));
    }

    #[test]
    fn constructor_rejections() {
        assert!(matches!(
            Graph::from_edges(2, &[(0, 0)]),
            Err(GraphError::SelfLoop { vertex: 0 })
        ));
        assert!(matches!(
            Graph::from_edges(2, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge { .. })
        ));
        assert!(matches!(
            Graph::from_adjacency(&[0b10, 0b00]),
            Err(GraphError::Asymmetric { u: 0, v: 1 })
        ));
        assert!(Graph::empty(65).is_err());
    }

    #[test]
    fn subsets_enumerates_all() {
        let s = VertexSet::from_vertices([1, 4, 6]);
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert_eq!(subs[0], VertexSet::EMPTY);
        assert!(subs.iter().all(|x| x.is_subset(s)));
        assert_eq!(VertexSet::EMPTY.subsets().count(), 1);
    }
}
