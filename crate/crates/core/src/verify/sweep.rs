//! The sign-law sweep and the distance-parity counterexample hunt.

use super::config::{Config, PairMode};
use super::report::{Buckets, HuntLevel, HuntReport, InconclusiveCase, Law, SweepReport, Witness};
use super::shard::{fold_family, with_workers};
use super::SweepError;
use crate::delta::{delta_from_table, delta_sets, DeltaValue, Sign, SignPrediction};
use crate::format::emit_graph6;
use crate::graph::{distances_from, is_bipartite, Distance, Graph, VertexSet};
use crate::parity::{classify, PathBudget};
use crate::sigma::{sigma_table, MemoCache};

/// Sign the distance-parity rule demands for vertices at distance `d`.
pub fn distance_sign(d: Distance) -> Sign {
    match d {
        Distance::Finite(k) if k % 2 == 0 => Sign::Negative,
        Distance::Finite(_) => Sign::Positive,
        Distance::Infinite => Sign::Zero,
    }
}

fn expected_sign(p: SignPrediction) -> Sign {
    match p {
        SignPrediction::Negative => Sign::Negative,
        SignPrediction::Zero => Sign::Zero,
        SignPrediction::Positive => Sign::Positive,
        SignPrediction::NoClaim => unreachable!("no sign expected"),
    }
}

#[derive(Default)]
struct SweepAcc {
    graphs: u64,
    buckets: Buckets,
    violations: Vec<Witness>,
    inconclusive: Vec<InconclusiveCase>,
    distance_checks: u64,
}

struct Case<'g> {
    g: &'g Graph,
    a: VertexSet,
    b: VertexSet,
    delta: DeltaValue,
}

impl SweepAcc {
    fn record(&mut self, case: Case<'_>, budget: PathBudget) {
        let Case { g, a, b, delta } = case;
        let sign = delta.sign();
        match classify(g, a, b, budget) {
            Ok(class) => {
                self.buckets.add(Some(class), sign, 1);
                let predicted = SignPrediction::from_class(class);
                if predicted.agrees(sign) == Some(false) {
                    self.violations.push(Witness {
                        law: Law::SignLaw,
                        n: g.n(),
                        graph6: emit_graph6(g),
                        a: a.iter().collect(),
                        b: b.iter().collect(),
                        delta: delta.0.to_string(),
                        class: Some(class),
                        distance: None,
                        expected: expected_sign(predicted),
                        observed: sign,
                    });
                }
            }
            Err(e) => {
                self.buckets.add(None, sign, 1);
                self.inconclusive.push(InconclusiveCase {
                    n: g.n(),
                    graph6: emit_graph6(g),
                    a: a.iter().collect(),
                    b: b.iter().collect(),
                    delta: delta.0.to_string(),
                    paths_seen: e.paths_seen,
                });
            }
        }
    }

    fn visit_sets(&mut self, g: &Graph, budget: PathBudget) {
        self.graphs += 1;
        let n = g.n();
        let table = sigma_table(g, &mut MemoCache::new());
        let all = VertexSet::full(n);
        for a in all.subsets() {
            for b in all.subsets() {
                let delta = delta_from_table(&table, n, a, b);
                self.record(Case { g, a, b, delta }, budget);
            }
        }
    }

    fn visit_vertices(&mut self, g: &Graph, budget: PathBudget) {
        self.graphs += 1;
        let n = g.n();
        let bipartite = is_bipartite(g);
        let mut cache = MemoCache::new();
        for u in 0..n {
            let dist = distances_from(g, u);
            for (v, &d) in dist.iter().enumerate().skip(u) {
                let a = VertexSet::singleton(u);
                let b = VertexSet::singleton(v);
                let delta = delta_sets(g, a, b, &mut cache);
                let sign = delta.sign();
                if bipartite {
                    self.distance_checks += 1;
                    let expected = distance_sign(d);
                    if expected != sign {
                        self.violations.push(Witness {
                            law: Law::BipartiteDistance,
                            n,
                            graph6: emit_graph6(g),
                            a: vec![u],
                            b: vec![v],
                            delta: delta.0.to_string(),
                            class: None,
                            distance: Some(d.to_string()),
                            expected,
                            observed: sign,
                        });
                    }
                }
                self.record(Case { g, a, b, delta }, budget);
            }
        }
    }

    fn merge(&mut self, other: SweepAcc) {
        self.graphs += other.graphs;
        self.buckets.merge(&other.buckets);
        self.violations.extend(other.violations);
        self.inconclusive.extend(other.inconclusive);
        self.distance_checks += other.distance_checks;
    }
}

/// Checks the sign of Δ against the A-B-path parity for every graph of the
/// configured family and every `(A, B)` of the configured pair mode.
///
/// Mixed and inconclusive cases are tallied but never counted as violations.
/// In vertex mode, bipartite graphs are also checked against distance parity.
pub fn verify_sweep(config: &Config) -> Result<SweepReport, SweepError> {
    config.validate_verify()?;
    let budget = config.path_budget;
    let pairs = config.pairs;
    let total = with_workers(config.workers, || -> Result<SweepAcc, SweepError> {
        let mut total = SweepAcc::default();
        for n in config.sizes() {
            let chunks = fold_family(&config.family_for(n), |acc: &mut SweepAcc, g| match pairs {
                PairMode::Sets => acc.visit_sets(g, budget),
                PairMode::Vertices => acc.visit_vertices(g, budget),
            })?;
            for c in chunks {
                total.merge(c);
            }
        }
        Ok(total)
    })?;
    Ok(SweepReport {
        config: config.clone(),
        graphs: total.graphs,
        buckets: total.buckets,
        violations: total.violations,
        inconclusive: total.inconclusive,
        distance_checks: total.distance_checks,
    })
}

#[derive(Default)]
struct HuntAcc {
    graphs: u64,
    pairs: u64,
    adjacent_pairs: u64,
    counterexamples: Vec<Witness>,
    violations: Vec<Witness>,
}

impl HuntAcc {
    fn visit(&mut self, g: &Graph, budget: PathBudget) {
        self.graphs += 1;
        let n = g.n();
        let bipartite = is_bipartite(g);
        let mut cache = MemoCache::new();
        for u in 0..n {
            let dist = distances_from(g, u);
            for (v, &d) in dist.iter().enumerate().skip(u + 1) {
                self.pairs += 1;
                let adjacent = g.has_edge(u, v);
                self.adjacent_pairs += adjacent as u64;
                let a = VertexSet::singleton(u);
                let b = VertexSet::singleton(v);
                let delta = delta_sets(g, a, b, &mut cache);
                let expected = distance_sign(d);
                let observed = delta.sign();
                if expected == observed {
                    continue;
                }
                let law = if adjacent {
                    Law::AdjacentPositive
                } else if bipartite {
                    Law::BipartiteDistance
                } else {
                    Law::DistanceParity
                };
                let witness = Witness {
                    law,
                    n,
                    graph6: emit_graph6(g),
                    a: vec![u],
                    b: vec![v],
                    delta: delta.0.to_string(),
                    class: classify(g, a, b, budget).ok(),
                    distance: Some(d.to_string()),
                    expected,
                    observed,
                };
                if law == Law::DistanceParity {
                    self.counterexamples.push(witness);
                } else {
                    self.violations.push(witness);
                }
            }
        }
    }

    fn merge(&mut self, other: HuntAcc) {
        self.graphs += other.graphs;
        self.pairs += other.pairs;
        self.adjacent_pairs += other.adjacent_pairs;
        self.counterexamples.extend(other.counterexamples);
        self.violations.extend(other.violations);
    }
}

/// Searches ascending `n` for vertex pairs whose Δ sign contradicts the
/// parity of their distance.
///
/// Nonadjacent hits in non-bipartite graphs are counterexamples (expected to
/// exist). Hits on adjacent pairs or in bipartite graphs are violations of
/// proven cases. The search stops after the first size that yields a
/// counterexample.
pub fn hunt(config: &Config) -> Result<HuntReport, SweepError> {
    config.validate_hunt()?;
    let budget = config.path_budget;
    with_workers(config.workers, || {
        let mut levels = Vec::new();
        let mut counterexamples = Vec::new();
        let mut violations = Vec::new();
        for n in config.sizes() {
            let chunks = fold_family(&config.family_for(n), |acc: &mut HuntAcc, g| {
                acc.visit(g, budget)
            })?;
            let mut level = HuntAcc::default();
            for c in chunks {
                level.merge(c);
            }
            levels.push(HuntLevel {
                n,
                graphs: level.graphs,
                pairs: level.pairs,
                adjacent_pairs: level.adjacent_pairs,
                counterexamples: level.counterexamples.len() as u64,
            });
            let found = !level.counterexamples.is_empty();
            counterexamples.extend(level.counterexamples);
            violations.extend(level.violations);
            if found {
                break;
            }
        }
        Ok(HuntReport {
            config: config.clone(),
            levels,
            counterexamples,
            violations,
        })
    })
}
