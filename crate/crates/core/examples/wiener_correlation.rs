//! How F and the Wiener index rank the same graphs.

use core_index::error::Guard;
use core_index::extremal::wiener_correlation;
use core_index::families::GraphClass;

fn main() -> core_index::error::Result<()> {
    for (class, n) in [(GraphClass::Trees, 7), (GraphClass::Unicyclic, 8), (GraphClass::Connected, 5)] {
        let c = wiener_correlation(class, n, Guard::Enforced, 0)?;
        println!("{class} n={n}: spearman {:?} over {} samples", c.spearman, c.samples);
        for row in &c.rows {
            println!("  {:<6} {:<10} F={:<5} W={}", row.role, row.graph.graph6, row.core_index, row.wiener);
        }
    }
    Ok(())
}
