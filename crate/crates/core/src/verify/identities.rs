//! Exhaustive and randomized checks of the counting identities and the
//! structural facts the sign law rests on.
//!
//! Every suite computes both sides through separate routes: the oracle against
//! the pivot engine, materialized deletions against induced masks, the
//! factorized form against the direct four-σ evaluation.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::config::Config;
use super::report::{IdentityReport, IdentityResult};
use super::shard::{fold_family, with_workers};
use super::SweepError;
use crate::delta::{delta_sets, reduce_to_ab_components, Sign};
use crate::enumeration::{random_multi_component, FamilyKind, GraphFamily};
use crate::format::{emit_graph6, format_vertex_list};
use crate::graph::{delete, Graph, VertexSet};
use crate::parity::{bipartite_shortcut, classify, parity_flip_check, FlipVerdict, ParityClass};
use crate::sigma::{expansion_sum, sigma, sigma_deleted, sigma_fresh, sigma_naive, MemoCache};

pub const ORACLE: &str = "oracle-equivalence";
pub const RECURRENCE: &str = "vertex-recurrence";
pub const EXPANSION: &str = "independent-subset-expansion";
pub const MONOTONE: &str = "strict-monotonicity";
pub const SYMMETRY: &str = "delta-symmetry";
pub const VANISHING: &str = "no-path-zero-delta";
pub const FLIP: &str = "parity-flip";
pub const SHORTCUT: &str = "bipartite-shortcut";
pub const FACTORIZATION: &str = "component-factorization";

const MAX_EXAMPLES: usize = 5;

#[derive(Clone, Default)]
struct Tally {
    checked: u64,
    failures: u64,
    examples: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.examples.len() < MAX_EXAMPLES {
                self.examples.push(describe());
            }
        }
    }

    fn merge(&mut self, other: Tally) {
        self.checked += other.checked;
        self.failures += other.failures;
        for e in other.examples {
            if self.examples.len() < MAX_EXAMPLES {
                self.examples.push(e);
            }
        }
    }

    fn finish(self, name: &str) -> IdentityResult {
        IdentityResult {
            name: name.to_string(),
            checked: self.checked,
            failures: self.failures,
            examples: self.examples,
        }
    }
}

const EXHAUSTIVE: [&str; 8] = [
    ORACLE, RECURRENCE, EXPANSION, MONOTONE, SYMMETRY, VANISHING, FLIP, SHORTCUT,
];

#[derive(Default)]
struct Acc {
    tallies: [Tally; 8],
}

fn describe(g: &Graph, what: String) -> String {
    format!("{} {what}", emit_graph6(g))
}

fn check_graph(acc: &mut Acc, g: &Graph, config: &Config) {
    let [oracle, recurrence, expansion, monotone, symmetry, vanishing, flip, shortcut] =
        &mut acc.tallies;
    let n = g.n();
    let all = g.vertices();
    let mut cache = MemoCache::new();
    let total = sigma(g, &mut cache);

    let naive = sigma_naive(g).expect("identity suites stay below the oracle cap");
    oracle.check(naive == total, || {
        describe(g, format!("sigma={total} naive={naive}"))
    });

    for v in 0..n {
        let without = sigma_fresh(&delete(g, VertexSet::singleton(v)).graph);
        let closed = VertexSet::singleton(v).union(g.adj(v));
        let with = sigma_fresh(&delete(g, closed).graph);
        recurrence.check(without + with == total, || describe(g, format!("v={v}")));
    }

    for u in all.subsets() {
        let lhs = expansion_sum(g, u, &mut cache);
        expansion.check(lhs == total, || {
            describe(g, format!("U={}", format_vertex_list(u)))
        });
        if !u.is_empty() {
            let smaller = sigma_deleted(g, u, &mut cache);
            monotone.check(smaller < total, || {
                describe(g, format!("W={}", format_vertex_list(u)))
            });
        }
    }

    let budget = config.path_budget;
    let bipartite = crate::graph::is_bipartite(g);
    for a in all.subsets() {
        for b in all.subsets() {
            let d_ab = delta_sets(g, a, b, &mut cache);
            let pair = || format!("A={} B={}", format_vertex_list(a), format_vertex_list(b));
            if a <= b {
                let d_ba = delta_sets(g, b, a, &mut cache);
                symmetry.check(d_ab == d_ba, || describe(g, pair()));
            }
            let class = classify(g, a, b, budget);
            if class == Ok(ParityClass::Infinite) {
                vanishing.check(d_ab.sign() == Sign::Zero, || describe(g, pair()));
            }
            if bipartite {
                if let Ok(c) = class {
                    shortcut.check(bipartite_shortcut(g, a, b) == Some(c), || {
                        describe(g, pair())
                    });
                }
            }
            if a.is_disjoint(b) && matches!(class, Ok(ParityClass::Even | ParityClass::Odd)) {
                let verdict = parity_flip_check(g, a, b, budget);
                if !matches!(verdict, FlipVerdict::Inconclusive(_)) {
                    flip.check(verdict.holds(), || {
                        describe(g, format!("{} {verdict:?}", pair()))
                    });
                }
            }
        }
    }
}

fn check_factorization(config: &Config, samples: usize) -> Tally {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut tally = Tally::default();
    for _ in 0..samples {
        let g = random_multi_component(12, config.p, &mut rng);
        let a: VertexSet = (0..g.n()).filter(|_| rng.gen_bool(0.3)).collect();
        let b: VertexSet = (0..g.n()).filter(|_| rng.gen_bool(0.3)).collect();
        let direct = delta_sets(&g, a, b, &mut MemoCache::new());
        let factored = reduce_to_ab_components(&g, a, b)
            .factored_delta()
            .expect("n <= 12 keeps the union small");
        tally.check(direct == factored, || {
            describe(
                &g,
                format!(
                    "A={} B={} direct={direct} factored={factored}",
                    format_vertex_list(a),
                    format_vertex_list(b)
                ),
            )
        });
    }
    tally
}

/// Runs every identity suite: exhaustively over all labeled graphs with at
/// most `max_n` vertices, plus `count` random multi-component graphs for the
/// factorization.
pub fn run_identities(config: &Config) -> Result<IdentityReport, SweepError> {
    config.validate_identities()?;
    with_workers(config.workers, || {
        let mut tallies: [Tally; 8] = Default::default();
        for n in 0..=config.max_n {
            let family = GraphFamily::new(FamilyKind::AllLabeled, n);
            for chunk in fold_family(&family, |acc: &mut Acc, g| check_graph(acc, g, config))? {
                for (t, c) in tallies.iter_mut().zip(chunk.tallies) {
                    t.merge(c);
                }
            }
        }
        let mut results: Vec<IdentityResult> = EXHAUSTIVE
            .iter()
            .zip(tallies)
            .map(|(name, t)| t.finish(name))
            .collect();
        results.push(check_factorization(config, config.count).finish(FACTORIZATION));
        Ok(IdentityReport {
            config: config.clone(),
            results,
        })
    })
}
