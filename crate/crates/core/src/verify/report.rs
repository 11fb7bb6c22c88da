//! Sweep reports and their line-delimited JSON / TSV renderings.
//!
//! A JSON report is a `header` record echoing the config, one record per
//! witness (violation, counterexample, inconclusive case), and a final
//! `summary` record. Nothing time-dependent is written, so equal configs give
//! equal bytes; timings go to stderr.

use std::fmt::Write as _;
use std::io::{self, Write};

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::config::{Config, OutputFormat};
use crate::delta::Sign;
use crate::parity::ParityClass;

/// The property a witness bears on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Law {
    /// Sign of Δ(G, A, B) versus the parity class of the A-B-paths.
    SignLaw,
    /// Sign of Δ(G, u, v) versus the parity of d(u, v) on a bipartite graph.
    BipartiteDistance,
    /// Δ(G, u, v) > 0 for adjacent u, v in any graph.
    AdjacentPositive,
    /// Sign of Δ(G, u, v) versus the parity of d(u, v), no restriction.
    DistanceParity,
}

/// One concrete `(G, A, B)` instance worth reporting.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub law: Law,
    pub n: usize,
    pub graph6: String,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    /// Exact Δ in decimal.
    pub delta: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<ParityClass>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distance: Option<String>,
    pub expected: Sign,
    pub observed: Sign,
}

/// A case whose path budget ran out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InconclusiveCase {
    pub n: usize,
    pub graph6: String,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub delta: String,
    pub paths_seen: u64,
}

/// Case tallies by (parity class or inconclusive, observed sign).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Buckets {
    /// Rows: Even, Odd, Mixed, Infinite, inconclusive. Columns: sign.
    counts: [[u64; 3]; 5],
}

fn class_index(class: Option<ParityClass>) -> usize {
    match class {
        Some(ParityClass::Even) => 0,
        Some(ParityClass::Odd) => 1,
        Some(ParityClass::Mixed) => 2,
        Some(ParityClass::Infinite) => 3,
        None => 4,
    }
}

fn sign_index(s: Sign) -> usize {
    match s {
        Sign::Negative => 0,
        Sign::Zero => 1,
        Sign::Positive => 2,
    }
}

const CLASS_LABELS: [&str; 5] = ["Even", "Odd", "Mixed", "Infinite", "Inconclusive"];

impl Buckets {
    #[inline]
    pub fn add(&mut self, class: Option<ParityClass>, sign: Sign, k: u64) {
        self.counts[class_index(class)][sign_index(sign)] += k;
    }

    pub fn merge(&mut self, other: &Buckets) {
        for (mine, theirs) in self.counts.iter_mut().zip(&other.counts) {
            for (m, t) in mine.iter_mut().zip(theirs) {
                *m += t;
            }
        }
    }

    pub fn get(&self, class: Option<ParityClass>, sign: Sign) -> u64 {
        self.counts[class_index(class)][sign_index(sign)]
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().flatten().sum()
    }

    /// Observed signs among Mixed cases, where no sign is predicted.
    pub fn mixed_signs(&self) -> [u64; 3] {
        self.counts[2]
    }

    fn rows(&self) -> Vec<(&'static str, Sign, u64)> {
        let mut out = Vec::new();
        for (label, row) in CLASS_LABELS.iter().zip(&self.counts) {
            for s in Sign::ALL {
                let k = row[sign_index(s)];
                if k > 0 {
                    out.push((*label, s, k));
                }
            }
        }
        out
    }

    fn to_json(self) -> Value {
        Value::Array(
            self.rows()
                .into_iter()
                .map(|(class, sign, count)| json!({"class": class, "sign": sign, "count": count}))
                .collect(),
        )
    }
}

/// Common surface of every report.
pub trait Report {
    fn command(&self) -> &'static str;
    fn config(&self) -> &Config;
    /// Witness records, in deterministic order.
    fn records(&self) -> Vec<Value>;
    fn summary(&self) -> Value;
    /// `(key, value)` rows for the TSV rendering.
    fn tsv_rows(&self) -> Vec<(String, String)>;
    fn passed(&self) -> bool;

    fn verdict(&self) -> &'static str {
        if self.passed() {
            "PASS"
        } else {
            "FAIL"
        }
    }

    fn to_json_lines(&self) -> String {
        let mut out = String::new();
        let header = json!({
            "record": "header",
            "command": self.command(),
            "seed": self.config().seed,
            "config": self.config(),
        });
        writeln!(out, "{header}").unwrap();
        for r in self.records() {
            writeln!(out, "{r}").unwrap();
        }
        let mut summary = self.summary();
        summary["record"] = json!("summary");
        summary["verdict"] = json!(self.verdict());
        writeln!(out, "{summary}").unwrap();
        out
    }

    fn to_tsv(&self) -> String {
        let c = self.config();
        let mut out = String::new();
        writeln!(out, "key\tvalue").unwrap();
        let mut rows = vec![
            ("command".to_string(), self.command().to_string()),
            ("seed".into(), c.seed.to_string()),
            ("max_n".into(), c.max_n.to_string()),
            ("pairs".into(), c.pairs.to_string()),
            ("family".into(), c.family.to_string()),
            ("p".into(), c.p.to_string()),
            ("count".into(), c.count.to_string()),
            ("path_budget".into(), c.path_budget.max_paths.to_string()),
        ];
        rows.extend(self.tsv_rows());
        rows.push(("verdict".into(), self.verdict().into()));
        for (k, v) in rows {
            writeln!(out, "{k}\t{v}").unwrap();
        }
        out
    }

    fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => self.to_json_lines(),
            OutputFormat::Tsv => self.to_tsv(),
        }
    }

    fn write_to<W: Write>(&self, format: OutputFormat, mut w: W) -> io::Result<()>
    where
        Self: Sized,
    {
        w.write_all(self.render(format).as_bytes())
    }
}

fn tagged<T: Serialize>(record: &str, value: &T) -> Value {
    let mut v = serde_json::to_value(value).expect("report records serialize");
    v["record"] = json!(record);
    v
}

/// Result of a sign-law sweep.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepReport {
    pub config: Config,
    pub graphs: u64,
    pub buckets: Buckets,
    pub violations: Vec<Witness>,
    pub inconclusive: Vec<InconclusiveCase>,
    /// Vertex-pair mode on bipartite graphs also checks distance parity.
    pub distance_checks: u64,
}

impl SweepReport {
    pub fn cases(&self) -> u64 {
        self.buckets.total()
    }
}

impl Report for SweepReport {
    fn command(&self) -> &'static str {
        "verify"
    }

    fn config(&self) -> &Config {
        &self.config
    }

    fn records(&self) -> Vec<Value> {
        self.violations
            .iter()
            .map(|w| tagged("violation", w))
            .chain(self.inconclusive.iter().map(|c| tagged("inconclusive", c)))
            .collect()
    }

    fn summary(&self) -> Value {
        let [neg, zero, pos] = self.buckets.mixed_signs();
        json!({
            "graphs": self.graphs,
            "cases": self.cases(),
            "distance_checks": self.distance_checks,
            "violations": self.violations.len(),
            "inconclusive": self.inconclusive.len(),
            "buckets": self.buckets.to_json(),
            "mixed_signs": {"Negative": neg, "Zero": zero, "Positive": pos},
        })
    }

    fn tsv_rows(&self) -> Vec<(String, String)> {
        let mut rows = vec![
            ("graphs".to_string(), self.graphs.to_string()),
            ("cases".into(), self.cases().to_string()),
            ("distance_checks".into(), self.distance_checks.to_string()),
            ("violations".into(), self.violations.len().to_string()),
            ("inconclusive".into(), self.inconclusive.len().to_string()),
        ];
        for (class, sign, k) in self.buckets.rows() {
            rows.push((format!("bucket:{class}:{sign}"), k.to_string()));
        }
        rows
    }

    fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Per-size statistics of a hunt.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HuntLevel {
    pub n: usize,
    pub graphs: u64,
    pub pairs: u64,
    pub adjacent_pairs: u64,
    pub counterexamples: u64,
}

/// Result of a counterexample hunt against the distance-parity sign rule.
#[derive(Clone, Debug, PartialEq)]
pub struct HuntReport {
    pub config: Config,
    pub levels: Vec<HuntLevel>,
    /// Nonadjacent pairs in non-bipartite graphs where the rule fails.
    pub counterexamples: Vec<Witness>,
    /// Failures of proven cases: adjacent pairs, or any pair of a bipartite graph.
    pub violations: Vec<Witness>,
}

impl Report for HuntReport {
    fn command(&self) -> &'static str {
        "hunt"
    }

    fn config(&self) -> &Config {
        &self.config
    }

    fn records(&self) -> Vec<Value> {
        self.counterexamples
            .iter()
            .map(|w| tagged("counterexample", w))
            .chain(self.violations.iter().map(|w| tagged("violation", w)))
            .collect()
    }

    fn summary(&self) -> Value {
        json!({
            "levels": self.levels,
            "counterexamples": self.counterexamples.len(),
            "violations": self.violations.len(),
            "smallest_counterexample_n": self.counterexamples.iter().map(|w| w.n).min(),
        })
    }

    fn tsv_rows(&self) -> Vec<(String, String)> {
        let mut rows = Vec::new();
        for l in &self.levels {
            rows.push((
                format!("level:{}", l.n),
                format!(
                    "graphs={} pairs={} adjacent={} counterexamples={}",
                    l.graphs, l.pairs, l.adjacent_pairs, l.counterexamples
                ),
            ));
        }
        rows.push((
            "counterexamples".into(),
            self.counterexamples.len().to_string(),
        ));
        rows.push(("violations".into(), self.violations.len().to_string()));
        for w in &self.counterexamples {
            rows.push((
                "counterexample".into(),
                format!("{}\t{:?}\t{:?}\t{}", w.graph6, w.a, w.b, w.delta),
            ));
        }
        rows
    }

    fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Pass counts for one identity suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityResult {
    pub name: String,
    pub checked: u64,
    pub failures: u64,
    /// First few failing instances, for diagnosis.
    pub examples: Vec<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdentityReport {
    pub config: Config,
    pub results: Vec<IdentityResult>,
}

impl IdentityReport {
    pub fn get(&self, name: &str) -> Option<&IdentityResult> {
        self.results.iter().find(|r| r.name == name)
    }
}

impl Report for IdentityReport {
    fn command(&self) -> &'static str {
        "identities"
    }

    fn config(&self) -> &Config {
        &self.config
    }

    fn records(&self) -> Vec<Value> {
        self.results.iter().map(|r| tagged("identity", r)).collect()
    }

    fn summary(&self) -> Value {
        json!({
            "identities": self.results.len(),
            "checked": self.results.iter().map(|r| r.checked).sum::<u64>(),
            "failures": self.results.iter().map(|r| r.failures).sum::<u64>(),
        })
    }

    fn tsv_rows(&self) -> Vec<(String, String)> {
        self.results
            .iter()
            .map(|r| {
                (
                    format!("identity:{}", r.name),
                    format!("checked={} failures={}", r.checked, r.failures),
                )
            })
            .collect()
    }

    fn passed(&self) -> bool {
        self.results.iter().all(|r| r.failures == 0)
    }
}
