//! Evaluating Δ(G, A, B) and comparing its sign with the parity of the
//! A-B-paths, plus the reduction to the components that meet both sets.
//!
//! cargo run --example delta_sign

use merrifield::{
    cycle_graph, delta_sets, delta_vertices, disjoint_union, path_graph, predict_sign,
    reduce_to_ab_components, Graph, MemoCache, PathBudget, VertexSet,
};

fn show(name: &str, g: &Graph, a: VertexSet, b: VertexSet) {
    let delta = delta_sets(g, a, b, &mut MemoCache::new());
    let prediction = predict_sign(g, a, b, PathBudget::default());
    let class = prediction
        .class
        .map_or_else(|_| "inconclusive".to_string(), |c| c.to_string());
    let verdict = match prediction.sign.agrees(delta.sign()) {
        Some(true) => "agrees",
        Some(false) => "DISAGREES",
        None => "no claim",
    };
    println!(
        "{name:28} A={a:?} B={b:?}  delta={delta:>4}  paths={class:8} predicted={:8} {verdict}",
        prediction.sign.to_string()
    );
}

fn main() {
    println!("vertex pairs on a path, sign alternates with distance:");
    let p6 = path_graph(6);
    let mut cache = MemoCache::new();
    for v in 1..6 {
        println!(
            "  delta(P6, 0, {v}) = {}",
            delta_vertices(&p6, 0, v, &mut cache)
        );
    }

    println!("\nvertex sets:");
    let s = |vs: &[usize]| VertexSet::from_vertices(vs.iter().copied());
    show("P6, ends", &p6, s(&[0]), s(&[5]));
    show("P6, shared vertex", &p6, s(&[0, 2]), s(&[2]));
    show(
        "C6, opposite pairs",
        &cycle_graph(6),
        s(&[0, 1]),
        s(&[3, 4]),
    );
    show("C5, mixed parity", &cycle_graph(5), s(&[0]), s(&[2]));
    let apart = disjoint_union(&path_graph(3), &path_graph(3)).unwrap();
    show("P3 + P3, no path", &apart, s(&[0]), s(&[4]));

    // only the components meeting both A and B decide the sign
    let g = disjoint_union(&path_graph(5), &cycle_graph(4)).unwrap();
    let (a, b) = (s(&[0, 6]), s(&[3]));
    let r = reduce_to_ab_components(&g, a, b);
    println!(
        "\nP5 + C4 with A={a:?} B={b:?}: delta={} factor={} reduced delta={} (on {:?})",
        delta_sets(&g, a, b, &mut MemoCache::new()),
        r.factor().unwrap(),
        r.reduced_delta(),
        r.ab_vertices,
    );
}
