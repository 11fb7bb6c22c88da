//! Length parity of the family of A-B-paths.
//!
//! A path `(v₁, …, v_k)` is an A-B-path when its only vertex in `A` is `v₁`
//! and its only vertex in `B` is `v_k`. Consequences used throughout:
//!
//! * every `v ∈ A ∩ B` is an A-B-path of length 0, and no longer A-B-path
//!   starts or ends in `A ∩ B`;
//! * longer paths run from `A \ B` to `B \ A` with every internal vertex
//!   outside `A ∪ B`.
//!
//! [`classify`] enumerates these paths by DFS and stops as soon as both
//! parities have been seen.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{bipartition, bit, neighborhood, reach_within, Graph, VertexSet};

/// Classification of `P(G, A, B)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ParityClass {
    Even,
    Odd,
    Mixed,
    Infinite,
}

impl ParityClass {
    pub const ALL: [ParityClass; 4] = [
        ParityClass::Even,
        ParityClass::Odd,
        ParityClass::Mixed,
        ParityClass::Infinite,
    ];

    fn from_seen(even: bool, odd: bool) -> Self {
        match (even, odd) {
            (true, true) => ParityClass::Mixed,
            (true, false) => ParityClass::Even,
            (false, true) => ParityClass::Odd,
            (false, false) => ParityClass::Infinite,
        }
    }

    /// Even ↔ Odd; Mixed and Infinite are fixed.
    pub fn flipped(self) -> Self {
        match self {
            ParityClass::Even => ParityClass::Odd,
            ParityClass::Odd => ParityClass::Even,
            other => other,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ParityClass::Even => "Even",
            ParityClass::Odd => "Odd",
            ParityClass::Mixed => "Mixed",
            ParityClass::Infinite => "Infinite",
        }
    }
}

impl fmt::Display for ParityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Cap on the number of complete A-B-paths one classification may visit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathBudget {
    pub max_paths: u64,
}

impl PathBudget {
    pub const DEFAULT_MAX_PATHS: u64 = 1_000_000;

    pub fn new(max_paths: u64) -> Self {
        PathBudget { max_paths }
    }
}

impl Default for PathBudget {
    fn default() -> Self {
        PathBudget::new(Self::DEFAULT_MAX_PATHS)
    }
}

/// The budget ran out before the class was settled. Never a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Inconclusive {
    pub paths_seen: u64,
    pub seen_even: bool,
    pub seen_odd: bool,
}

impl fmt::Display for Inconclusive {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "path budget exhausted after {} paths (even seen: {}, odd seen: {})",
            self.paths_seen, self.seen_even, self.seen_odd
        )
    }
}

pub type Classification = Result<ParityClass, Inconclusive>;

/// Classifies `P(G, A, B)`.
pub fn classify(g: &Graph, a: VertexSet, b: VertexSet, budget: PathBudget) -> Classification {
    classify_within(g, g.vertices(), a, b, budget)
}

/// Classifies `P(G[alive], A ∩ alive, B ∩ alive)` on the induced subgraph,
/// without relabeling.
pub fn classify_within(
    g: &Graph,
    alive: VertexSet,
    a: VertexSet,
    b: VertexSet,
    budget: PathBudget,
) -> Classification {
    let alive = alive.bits() & g.vertices().bits();
    let a = a.bits() & alive;
    let b = b.bits() & alive;

    let mut search = Search {
        g,
        ends: b & !a,
        interior: alive & !(a | b),
        even: a & b != 0,
        odd: false,
        paths: (a & b).count_ones() as u64,
        budget: budget.max_paths,
    };
    for s in VertexSet(a & !b) {
        if search.even && search.odd {
            break;
        }
        if search.dfs(s, bit(s), 0).is_err() {
            return Err(Inconclusive {
                paths_seen: search.paths,
                seen_even: search.even,
                seen_odd: search.odd,
            });
        }
    }
    Ok(ParityClass::from_seen(search.even, search.odd))
}

struct Search<'g> {
    g: &'g Graph,
    ends: u64,
    interior: u64,
    even: bool,
    odd: bool,
    paths: u64,
    budget: u64,
}

struct Exhausted;

impl Search<'_> {
    /// Extends the path ending at `x` (of length `len`, vertices `visited`).
    /// `Ok` once finished or both parities are known.
    fn dfs(&mut self, x: usize, visited: u64, len: usize) -> Result<(), Exhausted> {
        let row = self.g.row(x) & !visited;
        let hits = row & self.ends;
        if hits != 0 {
            if (len + 1).is_multiple_of(2) {
                self.even = true;
            } else {
                self.odd = true;
            }
            self.paths += hits.count_ones() as u64;
            if self.even && self.odd {
                return Ok(());
            }
            if self.paths > self.budget {
                return Err(Exhausted);
            }
        }
        for y in VertexSet(row & self.interior) {
            self.dfs(y, visited | bit(y), len + 1)?;
            if self.even && self.odd {
                return Ok(());
            }
        }
        Ok(())
    }
}

/// Whether an A-B-path joins `a0` and `b0`.
///
/// Decided by reachability in the graph induced on `(V \ (A ∪ B)) ∪ {a0, b0}`;
/// endpoints in `A ∩ B` only admit the length-0 path `a0 = b0`.
pub fn has_ab_path(g: &Graph, a: VertexSet, b: VertexSet, a0: usize, b0: usize) -> bool {
    debug_assert!(a.contains(a0) && b.contains(b0));
    let both = a.intersection(b);
    if a0 == b0 {
        return true;
    }
    if both.contains(a0) || both.contains(b0) {
        return false;
    }
    let within = g.vertices().difference(a.union(b)).bits() | bit(a0) | bit(b0);
    reach_within(g, a0, within) & bit(b0) != 0
}

/// Classification through a 2-coloring; `None` if `g` is not bipartite.
///
/// In a bipartite graph every path between two fixed vertices has the parity
/// given by their colors, so each connected endpoint pair contributes one
/// parity without enumerating paths.
pub fn bipartite_shortcut(g: &Graph, a: VertexSet, b: VertexSet) -> Option<ParityClass> {
    let color = bipartition(g)?;
    let a = a.intersection(g.vertices());
    let b = b.intersection(g.vertices());
    let (mut even, mut odd) = (false, false);
    for a0 in a {
        for b0 in b {
            if !has_ab_path(g, a, b, a0, b0) {
                continue;
            }
            if color[a0] == color[b0] {
                even = true;
            } else {
                odd = true;
            }
        }
    }
    Some(ParityClass::from_seen(even, odd))
}

/// Outcome of checking the parity flip for every independent `W ⊆ A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FlipVerdict {
    /// `A` and `B` intersect, or `P(G, A, B)` is not Even/Odd.
    NotApplicable(Option<ParityClass>),
    Holds {
        class: ParityClass,
        /// A `W` realizing the flipped class.
        witness: VertexSet,
    },
    Violated {
        class: ParityClass,
        /// Subsets whose terminal family kept the original parity or became Mixed.
        violating: Vec<(VertexSet, ParityClass)>,
        /// False when no `W` realizes the flipped class.
        flipped_found: bool,
    },
    Inconclusive(Inconclusive),
}

impl FlipVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, FlipVerdict::Holds { .. })
    }

    pub fn is_violation(&self) -> bool {
        matches!(self, FlipVerdict::Violated { .. })
    }
}

/// For disjoint `A`, `B` with `P(G, A, B)` Even (Odd): every independent
/// `W ⊆ A` must leave `P(G₋A, N(W) \ A, B)` Odd (Even) or Infinite, and some
/// `W` must reach the flipped class.
pub fn parity_flip_check(g: &Graph, a: VertexSet, b: VertexSet, budget: PathBudget) -> FlipVerdict {
    if !a.is_disjoint(b) {
        return FlipVerdict::NotApplicable(None);
    }
    let class = match classify(g, a, b, budget) {
        Ok(c @ (ParityClass::Even | ParityClass::Odd)) => c,
        Ok(other) => return FlipVerdict::NotApplicable(Some(other)),
        Err(e) => return FlipVerdict::Inconclusive(e),
    };
    let survivors = g.vertices().difference(a);
    let target = class.flipped();
    let mut violating = Vec::new();
    let mut witness = None;
    for w in a.subsets().filter(|&w| g.is_independent(w)) {
        let terminals = neighborhood(g, w).intersection(survivors);
        match classify_within(g, survivors, terminals, b, budget) {
            Ok(c) if c == target => {
                witness.get_or_insert(w);
            }
            Ok(ParityClass::Infinite) => {}
            Ok(c) => violating.push((w, c)),
            Err(e) => return FlipVerdict::Inconclusive(e),
        }
    }
    match (violating.is_empty(), witness) {
        (true, Some(witness)) => FlipVerdict::Holds { class, witness },
        (_, w) => FlipVerdict::Violated {
            class,
            violating,
            flipped_found: w.is_some(),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, path_graph};

    fn set<const N: usize>(vs: [usize; N]) -> VertexSet {
        VertexSet::from_vertices(vs)
    }

    fn cls(g: &Graph, a: VertexSet, b: VertexSet) -> ParityClass {
        classify(g, a, b, PathBudget::default()).unwrap()
    }

    #[test]
    fn classify_examples() {
        let two = Graph::empty(2).unwrap();
        assert_eq!(cls(&two, set([0]), set([1])), ParityClass::Infinite);
        let k2 = complete_graph(2);
        assert_eq!(cls(&k2, set([0]), set([1])), ParityClass::Odd);
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(cls(&k1, set([0]), set([0])), ParityClass::Even);
        let c5 = cycle_graph(5);
        assert_eq!(cls(&c5, set([0]), set([1])), ParityClass::Mixed);
    }

    #[test]
    fn empty_sets_are_infinite() {
        let g = complete_graph(4);
        assert_eq!(cls(&g, VertexSet::EMPTY, set([1])), ParityClass::Infinite);
        assert_eq!(cls(&g, set([1]), VertexSet::EMPTY), ParityClass::Infinite);
    }

    #[test]
    fn internal_vertices_avoid_both_sets() {
        // 0 – 1 – 2 with A = {0, 1}, B = {2}: only the path (1, 2) qualifies
        let g = path_graph(3);
        assert_eq!(cls(&g, set([0, 1]), set([2])), ParityClass::Odd);
        // A = {0}, B = {1, 2}: only (0, 1)
        assert_eq!(cls(&g, set([0]), set([1, 2])), ParityClass::Odd);
        // overlap vertex blocks longer paths: A = {0, 1}, B = {1, 2}
        assert_eq!(cls(&g, set([0, 1]), set([1, 2])), ParityClass::Even);
    }

    #[test]
    fn shortcut_examples() {
        // a–c–b labeled 0–2–1
        let p3 = Graph::from_edges(3, &[(0, 2), (2, 1)]).unwrap();
        assert_eq!(
            bipartite_shortcut(&p3, set([0]), set([1])),
            Some(ParityClass::Even)
        );
        assert_eq!(
            bipartite_shortcut(&cycle_graph(6), set([0]), set([3])),
            Some(ParityClass::Odd)
        );
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(
            bipartite_shortcut(&star, set([1, 2]), set([0])),
            Some(ParityClass::Odd)
        );
        assert_eq!(
            bipartite_shortcut(&cycle_graph(5), set([0]), set([2])),
            None
        );
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        // antipodal vertices of C8: two paths, both of length 4
        let g = cycle_graph(8);
        let r = classify(&g, set([0]), set([4]), PathBudget::new(0));
        assert!(r.is_err(), "{r:?}");
        let ok = classify(&g, set([0]), set([4]), PathBudget::new(2));
        assert_eq!(ok, Ok(ParityClass::Even));
        // both parities appear within the first two paths
        let k5 = complete_graph(5);
        assert_eq!(
            classify(&k5, set([0]), set([1]), PathBudget::new(1)),
            Ok(ParityClass::Mixed)
        );
    }

    #[test]
    fn parity_flip_examples() {
        let p3 = Graph::from_edges(3, &[(0, 2), (2, 1)]).unwrap();
        let v = parity_flip_check(&p3, set([0]), set([1]), PathBudget::default());
        assert_eq!(
            v,
            FlipVerdict::Holds {
                class: ParityClass::Even,
                witness: set([0])
            }
        );
        let k2 = complete_graph(2);
        let v = parity_flip_check(&k2, set([0]), set([1]), PathBudget::default());
        assert_eq!(
            v,
            FlipVerdict::Holds {
                class: ParityClass::Odd,
                witness: set([0])
            }
        );
        assert_eq!(
            parity_flip_check(&cycle_graph(5), set([0]), set([1]), PathBudget::default()),
            FlipVerdict::NotApplicable(Some(ParityClass::Mixed))
        );
        assert_eq!(
            parity_flip_check(&k2, set([0]), set([0, 1]), PathBudget::default()),
            FlipVerdict::NotApplicable(None)
        );
    }
}
