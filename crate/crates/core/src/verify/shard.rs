//! Splits a family's stream into chunks processed in parallel.
//!
//! Exhaustive families are sharded by edge-mask range; each worker rebuilds
//! its graphs from the mask index. Sampled families are generated up front
//! (they are small) and split by position. Chunk results come back in stream
//! order, so merged output does not depend on the worker count.

use rayon::prelude::*;

use crate::enumeration::{graph_from_edge_mask, pair_count, GraphFamily};
use crate::error::EnumerationError;
use crate::graph::Graph;

const MASKS_PER_CHUNK: u64 = 1 << 12;
const SAMPLES_PER_CHUNK: usize = 16;

/// Folds `visit` over every member of `family`, one accumulator per chunk.
pub fn fold_family<A, F>(family: &GraphFamily, visit: F) -> Result<Vec<A>, EnumerationError>
where
    A: Default + Send,
    F: Fn(&mut A, &Graph) + Sync,
{
    family.validate()?;
    if family.kind.is_exhaustive() {
        let n = family.n;
        let kind = family.kind;
        let total = 1u64 << pair_count(n);
        let chunks = total.div_ceil(MASKS_PER_CHUNK);
        Ok((0..chunks)
            .into_par_iter()
            .map(|c| {
                let mut acc = A::default();
                let end = ((c + 1) * MASKS_PER_CHUNK).min(total);
                for mask in c * MASKS_PER_CHUNK..end {
                    let g = graph_from_edge_mask(n, mask);
                    if kind.accepts(&g) {
                        visit(&mut acc, &g);
                    }
                }
                acc
            })
            .collect())
    } else {
        let graphs: Vec<Graph> = family.generate()?.collect();
        Ok(graphs
            .par_chunks(SAMPLES_PER_CHUNK)
            .map(|chunk| {
                let mut acc = A::default();
                for g in chunk {
                    visit(&mut acc, g);
                }
                acc
            })
            .collect())
    }
}

/// Runs `f` on a pool of `workers` threads (0 = rayon's default).
pub fn with_workers<R: Send>(workers: usize, f: impl FnOnce() -> R + Send) -> R {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("thread pool builds");
    pool.install(f)
}
