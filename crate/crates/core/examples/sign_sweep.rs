//! Sweeping every labeled graph and every pair of vertex sets, checking the
//! sign of Δ against the A-B-path parity.
//!
//! cargo run --release --example sign_sweep -- 5

use merrifield::verify::{verify_sweep, Config, OutputFormat, PairMode, Report};
use merrifield::{ParityClass, Sign};

fn main() {
    let max_n = std::env::args()
        .nth(1)
        .map_or(5, |s| s.parse().expect("vertex count"));

    let config = Config {
        max_n,
        pairs: PairMode::Sets,
        ..Config::default()
    };
    let report = verify_sweep(&config).expect("valid config");
    println!("{} graphs, {} (A, B) pairs", report.graphs, report.cases());
    println!(
        "{:>10} {:>12} {:>12} {:>12}",
        "paths", "negative", "zero", "positive"
    );
    for class in ParityClass::ALL {
        let row: Vec<u64> = Sign::ALL
            .iter()
            .map(|&s| report.buckets.get(Some(class), s))
            .collect();
        println!(
            "{:>10} {:>12} {:>12} {:>12}",
            class.to_string(),
            row[0],
            row[1],
            row[2]
        );
    }
    println!("violations: {}", report.violations.len());

    // the same run as a line-delimited JSON report
    let vertices = Config {
        max_n: max_n.min(5),
        pairs: PairMode::Vertices,
        family: "bipartite".parse().unwrap(),
        ..Config::default()
    };
    let report = verify_sweep(&vertices).unwrap();
    print!("\n{}", report.render(OutputFormat::Json));
}
