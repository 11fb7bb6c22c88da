//! Searching non-bipartite graphs for vertex pairs whose Δ sign does not
//! follow the parity of their distance, and re-checking each hit directly.
//!
//! cargo run --release --example counterexample_hunt

use merrifield::enumeration::FamilyKind;
use merrifield::verify::{distance_sign, hunt, Config, PairMode};
use merrifield::{delta_vertices, distance, parse_graph6, MemoCache};

fn main() {
    let config = Config {
        max_n: 8,
        pairs: PairMode::Vertices,
        family: FamilyKind::ConnectedNonBipartite,
        ..Config::default()
    };
    let report = hunt(&config).expect("valid config");
    for level in &report.levels {
        println!(
            "n={}: {} graphs, {} pairs, {} counterexamples",
            level.n, level.graphs, level.pairs, level.counterexamples
        );
    }
    println!(
        "violations on adjacent pairs or bipartite graphs: {}",
        report.violations.len()
    );

    for w in report.counterexamples.iter().take(5) {
        let g = parse_graph6(&w.graph6).unwrap();
        let (u, v) = (w.a[0], w.b[0]);
        let d = distance(&g, u, v);
        let delta = delta_vertices(&g, u, v, &mut MemoCache::new());
        println!(
            "{} u={u} v={v} distance={d} expects {} but delta={delta} ({})",
            w.graph6,
            distance_sign(d),
            delta.sign()
        );
        assert_ne!(delta.sign(), distance_sign(d));
    }
}
