//! The cycle against two triangles joined by a path.

use core_index::closed_forms::{cycle, dumbbell};

fn main() -> core_index::error::Result<()> {
    for n in 12..=20u64 {
        let c = cycle(n)?;
        let d = dumbbell(3, 3, n)?;
        let smaller = if c < d { "cycle" } else { "triangles" };
        println!("n = {n:>2}: cycle {c:>4}, two triangles {d:>4}, smaller: {smaller}");
    }
    Ok(())
}
