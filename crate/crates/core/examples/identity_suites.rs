//! Running the identity suites: the oracle, the vertex recurrence, the
//! independent-subset expansion, monotonicity, Δ symmetry, vanishing Δ
//! without paths, the parity flip, the bipartite shortcut, and the component
//! factorization.
//!
//! cargo run --release --example identity_suites -- 4

use merrifield::verify::{run_identities, Config, OutputFormat, Report};

fn main() {
    let max_n = std::env::args()
        .nth(1)
        .map_or(4, |s| s.parse().expect("vertex count"));
    let config = Config {
        max_n,
        count: 1000,
        seed: 1,
        ..Config::default()
    };
    let report = run_identities(&config).expect("valid config");
    for r in &report.results {
        println!(
            "{:32} checked {:>8}  failures {}",
            r.name, r.checked, r.failures
        );
    }
    print!("\n{}", report.render(OutputFormat::Tsv));
}
