//! Graph populations for sweeps.
//!
//! Exhaustive families walk every edge subset of the `C(n,2)` vertex pairs in
//! ascending mask order. Bit `k` of the mask is the `k`-th pair in graph6
//! order `(0,1), (0,2), (1,2), (0,3), …`, so a graph can be rebuilt from its
//! index alone. Random families draw from a ChaCha8 stream seeded with the
//! family seed and switched to stream `n`, which makes every `(seed, n)`
//! combination reproducible on its own.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::EnumerationError;
use crate::graph::{
    cycle_graph, distance, is_bipartite, is_connected, path_graph, Distance, Graph,
};

/// Largest `n` accepted by [`all_labeled`].
pub const LABELED_CAP: usize = 8;
/// Largest `n` accepted by [`canonical_dedup`].
pub const DEDUP_CAP: usize = 7;
/// Largest `n` for the random families.
pub const RANDOM_CAP: usize = 64;

pub const fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Vertex pairs in graph6 order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(pair_count(n));
    for j in 1..n {
        for i in 0..j {
            out.push((i, j));
        }
    }
    out
}

/// The labeled graph on `n` vertices whose edge set is `mask`.
pub fn graph_from_edge_mask(n: usize, mask: u64) -> Graph {
    debug_assert!(pair_count(n) <= 64);
    let mut g = Graph::empty(n).expect("n within capacity");
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> k & 1 == 1 {
                g.add_edge_unchecked(i, j);
            }
            k += 1;
        }
    }
    g
}

/// Inverse of [`graph_from_edge_mask`].
pub fn edge_mask(g: &Graph) -> u64 {
    let mut mask = 0u64;
    let mut k = 0;
    for j in 1..g.n() {
        for i in 0..j {
            if g.has_edge(i, j) {
                mask |= 1 << k;
            }
            k += 1;
        }
    }
    mask
}

/// Every labeled graph on `n` vertices, `2^C(n,2)` in total.
#[derive(Clone, Debug)]
pub struct LabeledGraphs {
    n: usize,
    next: u64,
    end: u64,
}

impl LabeledGraphs {
    pub fn total(&self) -> u64 {
        1u64 << pair_count(self.n)
    }
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.end {
            return None;
        }
        let g = graph_from_edge_mask(self.n, self.next);
        self.next += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for LabeledGraphs {}

pub fn all_labeled(n: usize) -> Result<LabeledGraphs, EnumerationError> {
    if n > LABELED_CAP {
        return Err(EnumerationError::TooLarge {
            n,
            cap: LABELED_CAP,
        });
    }
    Ok(LabeledGraphs {
        n,
        next: 0,
        end: 1u64 << pair_count(n),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKind {
    #[serde(rename = "all")]
    AllLabeled,
    Connected,
    Bipartite,
    #[serde(rename = "nonbipartite")]
    NonBipartite,
    #[serde(rename = "connected-nonbipartite")]
    ConnectedNonBipartite,
    Trees,
    Cycles,
    Paths,
    Unicyclic,
    BipartiteUnicyclic,
    #[serde(rename = "gnp")]
    RandomGnp,
    RandomBipartite,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 12] = [
        FamilyKind::AllLabeled,
        FamilyKind::Connected,
        FamilyKind::Bipartite,
        FamilyKind::NonBipartite,
        FamilyKind::ConnectedNonBipartite,
        FamilyKind::Trees,
        FamilyKind::Cycles,
        FamilyKind::Paths,
        FamilyKind::Unicyclic,
        FamilyKind::BipartiteUnicyclic,
        FamilyKind::RandomGnp,
        FamilyKind::RandomBipartite,
    ];

    /// Exhaustive families filter [`all_labeled`]; the others are sampled.
    pub fn is_exhaustive(self) -> bool {
        matches!(
            self,
            FamilyKind::AllLabeled
                | FamilyKind::Connected
                | FamilyKind::Bipartite
                | FamilyKind::NonBipartite
                | FamilyKind::ConnectedNonBipartite
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::AllLabeled => "all",
            FamilyKind::Connected => "connected",
            FamilyKind::Bipartite => "bipartite",
            FamilyKind::NonBipartite => "nonbipartite",
            FamilyKind::ConnectedNonBipartite => "connected-nonbipartite",
            FamilyKind::Trees => "trees",
            FamilyKind::Cycles => "cycles",
            FamilyKind::Paths => "paths",
            FamilyKind::Unicyclic => "unicyclic",
            FamilyKind::BipartiteUnicyclic => "bipartite-unicyclic",
            FamilyKind::RandomGnp => "gnp",
            FamilyKind::RandomBipartite => "random-bipartite",
        }
    }

    /// Smallest `n` the family has members for.
    pub fn min_n(self) -> usize {
        match self {
            FamilyKind::Cycles | FamilyKind::Unicyclic => 3,
            FamilyKind::BipartiteUnicyclic => 4,
            FamilyKind::ConnectedNonBipartite => 3,
            FamilyKind::Trees | FamilyKind::Paths => 1,
            _ => 0,
        }
    }

    /// The family's membership predicate.
    pub fn accepts(self, g: &Graph) -> bool {
        let n = g.n();
        let m = g.edge_count();
        match self {
            FamilyKind::AllLabeled | FamilyKind::RandomGnp => true,
            FamilyKind::Connected => is_connected(g),
            FamilyKind::Bipartite | FamilyKind::RandomBipartite => is_bipartite(g),
            FamilyKind::NonBipartite => !is_bipartite(g),
            FamilyKind::ConnectedNonBipartite => is_connected(g) && !is_bipartite(g),
            FamilyKind::Trees => n >= 1 && m == n - 1 && is_connected(g),
            FamilyKind::Paths => {
                n >= 1 && m == n - 1 && is_connected(g) && (0..n).all(|v| g.degree(v) <= 2)
            }
            FamilyKind::Cycles => n >= 3 && is_connected(g) && (0..n).all(|v| g.degree(v) == 2),
            FamilyKind::Unicyclic => n >= 3 && m == n && is_connected(g),
            FamilyKind::BipartiteUnicyclic => {
                n >= 4 && m == n && is_connected(g) && is_bipartite(g)
            }
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = EnumerationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| EnumerationError::InvalidParameter(format!("unknown family {s:?}")))
    }
}

/// A family together with its parameters for one vertex count.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphFamily {
    pub kind: FamilyKind,
    pub n: usize,
    /// Edge probability for the random families.
    pub p: f64,
    pub seed: u64,
    /// Number of samples for the random families.
    pub count: usize,
}

impl GraphFamily {
    pub fn new(kind: FamilyKind, n: usize) -> Self {
        GraphFamily {
            kind,
            n,
            p: 0.5,
            seed: 0,
            count: 1,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_count(mut self, count: usize) -> Self {
        self.count = count;
        self
    }

    pub fn with_p(mut self, p: f64) -> Self {
        self.p = p;
        self
    }

    pub fn validate(&self) -> Result<(), EnumerationError> {
        let bad = |msg: String| Err(EnumerationError::InvalidParameter(msg));
        if !(0.0..=1.0).contains(&self.p) {
            return bad(format!("edge probability {} outside [0, 1]", self.p));
        }
        if self.kind.is_exhaustive() {
            if self.n > LABELED_CAP {
                return Err(EnumerationError::TooLarge {
                    n: self.n,
                    cap: LABELED_CAP,
                });
            }
        } else if self.n > RANDOM_CAP {
            return Err(EnumerationError::TooLarge {
                n: self.n,
                cap: RANDOM_CAP,
            });
        }
        if self.n < self.kind.min_n() {
            return bad(format!(
                "{} needs n >= {}, got {}",
                self.kind,
                self.kind.min_n(),
                self.n
            ));
        }
        Ok(())
    }

    fn rng(&self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(self.n as u64);
        rng
    }

    /// Streams the family's members.
    pub fn generate(&self) -> Result<Box<dyn Iterator<Item = Graph> + Send>, EnumerationError> {
        self.validate()?;
        let kind = self.kind;
        if kind.is_exhaustive() {
            return Ok(Box::new(
                all_labeled(self.n)?.filter(move |g| kind.accepts(g)),
            ));
        }
        let n = self.n;
        let p = self.p;
        let mut rng = self.rng();
        let stream = (0..self.count).map(move |i| match kind {
            FamilyKind::Paths if i == 0 => path_graph(n),
            FamilyKind::Paths => random_relabel(&path_graph(n), &mut rng),
            FamilyKind::Cycles if i == 0 => cycle_graph(n),
            FamilyKind::Cycles => random_relabel(&cycle_graph(n), &mut rng),
            FamilyKind::Trees => random_tree(n, &mut rng),
            FamilyKind::Unicyclic => random_unicyclic(n, false, &mut rng),
            FamilyKind::BipartiteUnicyclic => random_unicyclic(n, true, &mut rng),
            FamilyKind::RandomGnp => random_gnp(n, p, &mut rng),
            FamilyKind::RandomBipartite => random_bipartite(n, p, &mut rng),
            _ => unreachable!("exhaustive families handled above"),
        });
        Ok(Box::new(stream))
    }
}

pub fn random_relabel<R: Rng>(g: &Graph, rng: &mut R) -> Graph {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(rng);
    g.relabel(&perm)
}

/// Uniform labeled tree via a random Prüfer sequence.
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Graph {
    assert!(n >= 1);
    if n <= 2 {
        return path_graph(n);
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    prufer_decode(n, &code)
}

/// Decodes a Prüfer sequence of length `n - 2`.
pub fn prufer_decode(n: usize, code: &[usize]) -> Graph {
    assert_eq!(code.len() + 2, n);
    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in code {
        let leaf = (0..n)
            .find(|&v| degree[v] == 1)
            .expect("a leaf always exists");
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, &edges).expect("Prüfer decoding yields a simple tree")
}

/// A random tree plus one random non-edge. With `even_cycle`, only non-edges
/// whose endpoints are at odd tree distance are used, closing an even cycle.
pub fn random_unicyclic<R: Rng>(n: usize, even_cycle: bool, rng: &mut R) -> Graph {
    assert!(n >= if even_cycle { 4 } else { 3 });
    loop {
        let mut g = random_tree(n, rng);
        let candidates: Vec<(usize, usize)> = pairs(n)
            .into_iter()
            .filter(|&(u, v)| !g.has_edge(u, v))
            .filter(|&(u, v)| {
                !even_cycle || matches!(distance(&g, u, v), Distance::Finite(d) if d % 2 == 1)
            })
            .collect();
        // a star has no odd-distance non-edges; draw another tree
        if let Some(&(u, v)) = candidates.choose(rng) {
            g.add_edge_unchecked(u, v);
            return g;
        }
    }
}

pub fn random_gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::empty(n).expect("n within capacity");
    for (u, v) in pairs(n) {
        if rng.gen_bool(p) {
            g.add_edge_unchecked(u, v);
        }
    }
    g
}

/// Seeded part assignment, then each cross pair is an edge with probability `p`.
pub fn random_bipartite<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let side: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    let mut g = Graph::empty(n).expect("n within capacity");
    for (u, v) in pairs(n) {
        if side[u] != side[v] && rng.gen_bool(p) {
            g.add_edge_unchecked(u, v);
        }
    }
    g
}

/// Disjoint union of 2 to 4 random `G(k, p)` blocks (at most `max_n`
/// vertices in total), randomly relabeled.
pub fn random_multi_component<R: Rng>(max_n: usize, p: f64, rng: &mut R) -> Graph {
    assert!(max_n >= 2);
    let blocks = rng.gen_range(2..=4.min(max_n));
    let mut budget = max_n;
    let mut g = Graph::empty(0).expect("empty graph");
    for i in 0..blocks {
        let reserve = blocks - i - 1;
        let size = rng.gen_range(1..=(budget - reserve).min(6));
        budget -= size;
        let block = random_gnp(size, p, rng);
        g = crate::graph::disjoint_union(&g, &block).expect("within max_n");
    }
    random_relabel(&g, rng)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Canonical form: the minimum edge mask over all `n!` relabelings.
pub struct Canonicalizer {
    n: usize,
    /// For each permutation, the image index of every pair index.
    pair_maps: Vec<Vec<u8>>,
}

impl Canonicalizer {
    pub fn new(n: usize) -> Result<Self, EnumerationError> {
        if n > DEDUP_CAP {
            return Err(EnumerationError::TooLarge { n, cap: DEDUP_CAP });
        }
        let index = |i: usize, j: usize| {
            let (i, j) = (i.min(j), i.max(j));
            j * (j - 1) / 2 + i
        };
        let pair_maps = permutations(n)
            .into_iter()
            .map(|perm| {
                pairs(n)
                    .into_iter()
                    .map(|(i, j)| index(perm[i], perm[j]) as u8)
                    .collect()
            })
            .collect();
        Ok(Canonicalizer { n, pair_maps })
    }

    pub fn canonical_mask(&self, g: &Graph) -> u64 {
        assert_eq!(g.n(), self.n);
        let mask = edge_mask(g);
        self.pair_maps
            .iter()
            .map(|map| {
                map.iter()
                    .enumerate()
                    .filter(|&(k, _)| mask >> k & 1 == 1)
                    .fold(0u64, |acc, (_, &t)| acc | 1 << t)
            })
            .min()
            .unwrap_or(0)
    }
}

/// Keeps the first member of each isomorphism class.
pub fn canonical_dedup<I>(
    stream: I,
    n: usize,
) -> Result<impl Iterator<Item = Graph>, EnumerationError>
where
    I: IntoIterator<Item = Graph>,
{
    let canon = Canonicalizer::new(n)?;
    let mut seen = HashSet::new();
    Ok(stream
        .into_iter()
        .filter(move |g| seen.insert(canon.canonical_mask(g))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::bipartition;

    #[test]
    fn serde_names_match_display() {
        for kind in FamilyKind::ALL {
            let json = serde_json::to_string(&kind).unwrap();
            assert_eq!(json, format!("\"{}\"", kind.name()));
            assert_eq!(kind.name().parse::<FamilyKind>().unwrap(), kind);
        }
    }

    #[test]
    fn labeled_counts() {
        assert_eq!(all_labeled(2).unwrap().count(), 2);
        assert_eq!(all_labeled(3).unwrap().count(), 8);
        assert_eq!(all_labeled(4).unwrap().count(), 64);
        assert_eq!(all_labeled(0).unwrap().count(), 1);
        assert!(matches!(
            all_labeled(9),
            Err(EnumerationError::TooLarge { n: 9, cap: 8 })
        ));
    }

    #[test]
    fn mask_roundtrip() {
        for mask in 0..1u64 << 10 {
            assert_eq!(edge_mask(&graph_from_edge_mask(5, mask)), mask);
        }
    }

    #[test]
    fn structured_family_examples() {
        let mut paths = GraphFamily::new(FamilyKind::Paths, 4).generate().unwrap();
        assert_eq!(paths.next().unwrap(), path_graph(4));
        let mut cycles = GraphFamily::new(FamilyKind::Cycles, 5).generate().unwrap();
        assert_eq!(cycles.next().unwrap(), cycle_graph(5));
        let trees: Vec<_> = GraphFamily::new(FamilyKind::Trees, 6)
            .with_seed(7)
            .with_count(25)
            .generate()
            .unwrap()
            .collect();
        assert_eq!(trees.len(), 25);
        for t in &trees {
            assert_eq!(t.edge_count(), 5);
            assert!(is_connected(t));
        }
    }

    #[test]
    fn invalid_parameters() {
        let f = GraphFamily::new(FamilyKind::RandomGnp, 5).with_p(1.5);
        assert!(f.generate().is_err());
        assert!(GraphFamily::new(FamilyKind::Cycles, 2).generate().is_err());
        assert!(GraphFamily::new(FamilyKind::Trees, 0).generate().is_err());
        assert!(GraphFamily::new(FamilyKind::AllLabeled, 9)
            .generate()
            .is_err());
        assert!("nope".parse::<FamilyKind>().is_err());
        assert_eq!(
            "bipartite-unicyclic".parse::<FamilyKind>().unwrap(),
            FamilyKind::BipartiteUnicyclic
        );
    }

    #[test]
    fn every_member_satisfies_its_predicate() {
        for kind in FamilyKind::ALL {
            let n = if kind.is_exhaustive() { 5 } else { 9 };
            let members: Vec<_> = GraphFamily::new(kind, n)
                .with_seed(3)
                .with_count(40)
                .with_p(0.4)
                .generate()
                .unwrap()
                .collect();
            assert!(!members.is_empty(), "{kind}");
            for g in &members {
                assert!(kind.accepts(g), "{kind}: {g:?}");
            }
        }
    }

    #[test]
    fn bipartite_families_split_correctly() {
        for g in GraphFamily::new(FamilyKind::RandomBipartite, 10)
            .with_count(50)
            .generate()
            .unwrap()
        {
            assert!(bipartition(&g).is_some());
        }
        for g in GraphFamily::new(FamilyKind::NonBipartite, 5)
            .generate()
            .unwrap()
        {
            assert!(bipartition(&g).is_none());
        }
        for g in GraphFamily::new(FamilyKind::BipartiteUnicyclic, 8)
            .with_count(50)
            .generate()
            .unwrap()
        {
            assert!(bipartition(&g).is_some());
        }
    }

    #[test]
    fn streams_are_deterministic() {
        for kind in [
            FamilyKind::Trees,
            FamilyKind::RandomGnp,
            FamilyKind::Unicyclic,
            FamilyKind::Cycles,
        ] {
            let f = GraphFamily::new(kind, 8).with_seed(11).with_count(30);
            let a: Vec<_> = f.generate().unwrap().collect();
            let b: Vec<_> = f.generate().unwrap().collect();
            assert_eq!(a, b);
            let other: Vec<_> = f.clone().with_seed(12).generate().unwrap().collect();
            if kind != FamilyKind::Cycles || a.len() > 1 {
                assert_ne!(a, other, "{kind}");
            }
        }
    }

    #[test]
    fn prufer_known_tree() {
        // code [3, 3, 3] on 5 vertices is the star centered at 3
        let t = prufer_decode(5, &[3, 3, 3]);
        assert_eq!(t.degree(3), 4);
    }

    #[test]
    fn dedup_isomorphism_classes() {
        assert_eq!(
            canonical_dedup(all_labeled(3).unwrap(), 3).unwrap().count(),
            4
        );
        assert_eq!(
            canonical_dedup(all_labeled(4).unwrap(), 4).unwrap().count(),
            11
        );
        assert_eq!(
            canonical_dedup(all_labeled(5).unwrap(), 5).unwrap().count(),
            34
        );
        let single = vec![cycle_graph(5)];
        let out: Vec<_> = canonical_dedup(single.clone(), 5).unwrap().collect();
        assert_eq!(out, single);
        assert!(canonical_dedup(Vec::new(), 8).is_err());
    }
}
