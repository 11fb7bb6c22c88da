//! Reading and writing graphs: graph6 strings, the edge-list text format,
//! and vertex lists.
//!
//! cargo run --example graph6_io

use merrifield::format::{
    emit_edge_list, format_vertex_list, parse_edge_list, parse_graph6_lines, parse_graph_input,
    parse_vertex_list,
};
use merrifield::{complete_graph, cycle_graph, emit_graph6, parse_graph6, path_graph, Graph};

fn main() {
    for (name, g) in [
        ("K4", complete_graph(4)),
        ("P4", path_graph(4)),
        ("C5", cycle_graph(5)),
        ("64 isolated", Graph::empty(64).unwrap()),
    ] {
        let text = emit_graph6(&g);
        assert_eq!(parse_graph6(&text).unwrap(), g);
        if text.len() > 16 {
            println!("{name:12} -> {}... ({} bytes)", &text[..8], text.len());
        } else {
            println!("{name:12} -> {text}");
        }
    }

    let g = parse_graph6("DQc").unwrap();
    println!("\nDQc has {} vertices and edges {:?}", g.n(), g.edges());
    print!("as an edge list:\n{}", emit_edge_list(&g));

    let listed = parse_edge_list("# a triangle with a tail\n4\n0 1\n1 2\n2 0\n2 3\n").unwrap();
    println!("edge list -> {}", emit_graph6(&listed));

    // format detection: digits in the first line mean an edge list
    for text in ["Ch", "0 1\n1 2\n2 3\n"] {
        println!(
            "{text:?} parses to {}",
            emit_graph6(&parse_graph_input(text).unwrap())
        );
    }

    let corpus = parse_graph6_lines(">>graph6<<A_\nBW\nCF\n").unwrap();
    println!(
        "corpus sizes: {:?}",
        corpus.iter().map(Graph::n).collect::<Vec<_>>()
    );

    let set = parse_vertex_list("3,0,2").unwrap();
    println!(
        "vertex list 3,0,2 -> {:?} -> {}",
        set,
        format_vertex_list(set)
    );

    for bad in ["A", "A`", "A__", "~?@@"] {
        println!("{bad:6} rejected: {}", parse_graph6(bad).unwrap_err());
    }
}
