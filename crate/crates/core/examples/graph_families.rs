//! Graph families: exhaustive labeled enumeration, structural filters,
//! isomorphism dedup, and seeded random samplers.
//!
//! cargo run --example graph_families

use merrifield::emit_graph6;
use merrifield::enumeration::{canonical_dedup, FamilyKind, GraphFamily};

fn main() {
    println!("labeled graphs per family:");
    for kind in [
        FamilyKind::AllLabeled,
        FamilyKind::Connected,
        FamilyKind::Bipartite,
        FamilyKind::ConnectedNonBipartite,
    ] {
        let counts: Vec<usize> = (kind.min_n().max(1)..=5)
            .map(|n| GraphFamily::new(kind, n).generate().unwrap().count())
            .collect();
        println!("  {kind:26} n={}..5: {counts:?}", kind.min_n().max(1));
    }

    let classes: Vec<usize> = (1..=6)
        .map(|n| {
            let all = GraphFamily::new(FamilyKind::AllLabeled, n)
                .generate()
                .unwrap();
            canonical_dedup(all, n).unwrap().count()
        })
        .collect();
    println!("\nisomorphism classes n=1..6: {classes:?}");

    println!("\nseeded samples (same seed, same stream):");
    for kind in [
        FamilyKind::Trees,
        FamilyKind::Cycles,
        FamilyKind::BipartiteUnicyclic,
        FamilyKind::RandomGnp,
        FamilyKind::RandomBipartite,
    ] {
        let sample = |seed| -> Vec<String> {
            GraphFamily::new(kind, 8)
                .with_seed(seed)
                .with_count(3)
                .with_p(0.4)
                .generate()
                .unwrap()
                .map(|g| emit_graph6(&g))
                .collect()
        };
        assert_eq!(sample(7), sample(7));
        println!("  {kind:22} {:?}", sample(7));
    }
}
