//! Reading and writing graph6 and edge lists.

use core_index::format::{from_edge_list_text, from_graph6, to_edge_list, to_graph6};

fn main() -> core_index::error::Result<()> {
    let g = from_graph6("DQc")?;
    println!("DQc has {} vertices and edges {:?}", g.n(), g.edges());
    let text = to_edge_list(&g);
    print!("as an edge list:\n{text}");
    let back = from_edge_list_text(&text)?;
    println!("round trip gives {}", to_graph6(&back));
    match from_graph6("D?{!!") {
        Err(e) => println!("bad input: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
