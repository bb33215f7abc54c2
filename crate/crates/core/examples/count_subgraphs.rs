//! Exact counts for a small graph: F, the per-vertex counts and the core.

use core_index::count::{core_index, core_index_bruteforce, count_containing, f_vector, subgraph_core};
use core_index::graph::{Graph, VertexSet};

fn main() -> core_index::error::Result<()> {
    // a triangle with a two-edge tail
    let g = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4)])?;
    println!("F = {}", core_index(&g));
    println!("F by brute force = {}", core_index_bruteforce(&g)?);
    for (v, f) in f_vector(&g)?.iter().enumerate() {
        println!("  vertex {v} lies in {f} connected subgraphs");
    }
    println!("core = {:?}", subgraph_core(&g)?.to_vec());
    let ends = VertexSet::from_iter([1, 4]);
    println!("subgraphs containing 1 and 4: {}", count_containing(&g, ends)?);
    Ok(())
}
