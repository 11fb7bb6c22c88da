//! Counting independent sets: the pivot engine, the naive oracle, caching,
//! and counts far beyond 64-bit range.
//!
//! cargo run --example count_independent_sets

use merrifield::sigma::{sigma_fresh, SharedMemoCache};
use merrifield::{
    complete_graph, cycle_graph, delete, disjoint_union, path_graph, sigma, sigma_naive, Graph,
    MemoCache, VertexSet,
};

fn main() {
    println!("paths and cycles (Fibonacci and Lucas numbers):");
    for n in 1..=10 {
        let p = sigma_fresh(&path_graph(n));
        let c = if n >= 3 {
            sigma_fresh(&cycle_graph(n)).to_string()
        } else {
            "-".into()
        };
        println!("  n={n:2}  sigma(P_n)={p:4}  sigma(C_n)={c}");
    }

    let k5 = complete_graph(5);
    println!(
        "\nsigma(K5) = {} (empty set plus 5 singletons)",
        sigma_fresh(&k5)
    );

    let c5 = cycle_graph(5);
    let naive = sigma_naive(&c5).expect("small graph");
    println!(
        "sigma(C5) = {} by the engine, {} by enumeration",
        sigma_fresh(&c5),
        naive
    );

    // components multiply
    let two = disjoint_union(&path_graph(4), &cycle_graph(5)).unwrap();
    println!(
        "sigma(P4 + C5) = {} = {} * {}",
        sigma_fresh(&two),
        sigma_fresh(&path_graph(4)),
        sigma_fresh(&c5)
    );

    // one cache serves many deletions of the same graph
    let g = cycle_graph(12);
    let mut cache = MemoCache::new();
    let total = sigma(&g, &mut cache);
    let without_0 = sigma(
        &delete(&g, VertexSet::singleton(0)).graph,
        &mut MemoCache::new(),
    );
    println!(
        "\nsigma(C12) = {total}, sigma(C12 - 0) = {without_0}, cached entries: {}",
        cache.entries().count()
    );

    // no edges: every subset is independent
    let empty = Graph::empty(64).unwrap();
    println!("sigma(64 isolated vertices) = {}", sigma_fresh(&empty));

    // a cache shared between threads
    let pair = disjoint_union(&cycle_graph(30), &path_graph(30)).unwrap();
    let shared = SharedMemoCache::new(&pair);
    let counts: Vec<String> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..4)
            .map(|_| s.spawn(|| sigma(&pair, &mut &shared).to_string()))
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    println!("sigma(C30 + P30) from 4 threads: {}", counts.join(", "));
}
