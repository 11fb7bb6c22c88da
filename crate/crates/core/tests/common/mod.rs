//! Brute-force reference implementations used by the integration tests.
//! Each works from an adjacency matrix and plain loops, sharing no code with
//! the library beyond the `Graph` accessors.

#![allow(dead_code)]

use merrifield::Graph;

pub fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.n();
    (0..n)
        .map(|u| (0..n).map(|v| g.has_edge(u, v)).collect())
        .collect()
}

/// Independent sets of the subgraph induced by `keep`, by testing every subset.
pub fn count_independent(adj: &[Vec<bool>], keep: u64) -> u64 {
    let n = adj.len();
    let verts: Vec<usize> = (0..n).filter(|&v| keep >> v & 1 == 1).collect();
    let mut count = 0;
    for s in 0u64..1 << verts.len() {
        let chosen: Vec<usize> = (0..verts.len())
            .filter(|&i| s >> i & 1 == 1)
            .map(|i| verts[i])
            .collect();
        let ok = chosen
            .iter()
            .enumerate()
            .all(|(i, &x)| chosen[i + 1..].iter().all(|&y| !adj[x][y]));
        count += ok as u64;
    }
    count
}

/// `σ(G₋A)σ(G₋B) − σ(G)σ(G₋A₋B)` from four brute-force counts.
pub fn brute_delta(adj: &[Vec<bool>], a: u64, b: u64) -> i128 {
    let full = (1u64 << adj.len()) - 1;
    let s = |removed: u64| count_independent(adj, full & !removed) as i128;
    s(a) * s(b) - s(0) * s(a | b)
}

/// Shortest-path lengths from `src` by breadth-first search; `None` if unreachable.
pub fn bfs(adj: &[Vec<bool>], src: usize) -> Vec<Option<usize>> {
    let n = adj.len();
    let mut dist = vec![None; n];
    dist[src] = Some(0);
    let mut queue = std::collections::VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        for v in 0..n {
            if adj[u][v] && dist[v].is_none() {
                dist[v] = Some(dist[u].unwrap() + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

/// `(even seen, odd seen)` over every A-B-path: length 0 for each vertex of
/// `A ∩ B`, otherwise simple paths from `A \ B` to `B \ A` whose interior
/// avoids `A ∪ B`.
pub fn path_parities(adj: &[Vec<bool>], a: u64, b: u64) -> (bool, bool) {
    let n = adj.len();
    let mut even = a & b != 0;
    let mut odd = false;
    let blocked = a | b;
    #[allow(clippy::too_many_arguments)]
    fn walk(
        adj: &[Vec<bool>],
        at: usize,
        len: usize,
        visited: &mut Vec<bool>,
        targets: u64,
        blocked: u64,
        even: &mut bool,
        odd: &mut bool,
    ) {
        for next in 0..adj.len() {
            if !adj[at][next] || visited[next] {
                continue;
            }
            if targets >> next & 1 == 1 {
                if (len + 1).is_multiple_of(2) {
                    *even = true;
                } else {
                    *odd = true;
                }
            } else if blocked >> next & 1 == 0 {
                visited[next] = true;
                walk(adj, next, len + 1, visited, targets, blocked, even, odd);
                visited[next] = false;
            }
        }
    }
    for start in (0..n).filter(|&v| (a & !b) >> v & 1 == 1) {
        let mut visited = vec![false; n];
        visited[start] = true;
        walk(
            adj,
            start,
            0,
            &mut visited,
            b & !a,
            blocked,
            &mut even,
            &mut odd,
        );
    }
    (even, odd)
}

/// One archived counterexample: graph6, the pair, their distance and Δ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixture {
    pub graph6: String,
    pub u: usize,
    pub v: usize,
    pub distance: usize,
    pub delta: i128,
}

pub fn counterexample_fixtures() -> Vec<Fixture> {
    include_str!("../fixtures/counterexamples.tsv")
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let f: Vec<&str> = l.split('\t').collect();
            Fixture {
                graph6: f[0].to_string(),
                u: f[1].parse().unwrap(),
                v: f[2].parse().unwrap(),
                distance: f[3].parse().unwrap(),
                delta: f[4].parse().unwrap(),
            }
        })
        .collect()
}
