//! Classifying the lengths of all A-B-paths as Even, Odd, Mixed or Infinite,
//! the bipartite coloring shortcut, the path budget, and the parity flip that
//! drives the induction behind the sign law.
//!
//! cargo run --example path_parity

use merrifield::parity::{bipartite_shortcut, parity_flip_check, FlipVerdict};
use merrifield::{
    bipartition, classify, complete_graph, cycle_graph, distance, path_graph, Graph, PathBudget,
    VertexSet,
};

fn main() {
    let s = |vs: &[usize]| VertexSet::from_vertices(vs.iter().copied());
    let budget = PathBudget::default();

    let cases: Vec<(&str, Graph, VertexSet, VertexSet)> = vec![
        ("P4 ends", path_graph(4), s(&[0]), s(&[3])),
        ("P4, 0 to 2", path_graph(4), s(&[0]), s(&[2])),
        ("shared vertex", path_graph(4), s(&[1]), s(&[1, 3])),
        ("C5, 0 to 2", cycle_graph(5), s(&[0]), s(&[2])),
        ("C6 halves", cycle_graph(6), s(&[0, 1]), s(&[3, 4])),
        ("edgeless", Graph::empty(3).unwrap(), s(&[0]), s(&[2])),
    ];
    for (name, g, a, b) in &cases {
        let class = classify(g, *a, *b, budget).expect("tiny graphs stay under budget");
        let shortcut =
            bipartite_shortcut(g, *a, *b).map_or("not bipartite".to_string(), |c| c.to_string());
        println!("{name:14} A={a:?} B={b:?}: {class:8} (coloring says {shortcut})");
    }

    let c8 = cycle_graph(8);
    println!(
        "\nC8: distance(0, 3) = {}, coloring = {:?}",
        distance(&c8, 0, 3),
        bipartition(&c8).unwrap()
    );

    // every path of K4,4 between the sides is odd, and there are thousands
    let edges: Vec<(usize, usize)> = (0..4).flat_map(|u| (4..8).map(move |v| (u, v))).collect();
    let k44 = Graph::from_edges(8, &edges).unwrap();
    match classify(&k44, s(&[0]), s(&[7]), PathBudget::new(20)) {
        Ok(c) => println!("K4,4 with budget 20: {c}"),
        Err(e) => println!(
            "K4,4 with budget 20: inconclusive after {} paths",
            e.paths_seen
        ),
    }
    println!(
        "K4,4 with the default budget: {}",
        classify(&k44, s(&[0]), s(&[7]), budget).unwrap()
    );
    // K8 mixes parities quickly, so it is decided long before any budget
    let k8 = complete_graph(8);
    println!(
        "K8 with budget 100: {}",
        classify(&k8, s(&[0]), s(&[7]), PathBudget::new(100)).unwrap()
    );

    println!("\nparity flip: deleting A and restarting from N(W) flips Even and Odd");
    let p5 = path_graph(5);
    for (a, b) in [
        (s(&[0]), s(&[4])),
        (s(&[0, 1]), s(&[4])),
        (s(&[1]), s(&[4])),
    ] {
        match parity_flip_check(&p5, a, b, budget) {
            FlipVerdict::Holds { class, witness } => {
                println!("  P5 A={a:?} B={b:?}: {class} flips, e.g. W={witness:?}")
            }
            other => println!("  P5 A={a:?} B={b:?}: {other:?}"),
        }
    }
}
