//! Closed-form values next to the engine.

use core_index::closed_forms;
use core_index::count::core_index;
use core_index::families::FamilySpec;

fn main() -> core_index::error::Result<()> {
    println!("{:>3} {:>8} {:>8} {:>10} {:>12}", "n", "path", "star", "cycle", "complete");
    for n in 3..=10u64 {
        println!(
            "{n:>3} {:>8} {:>8} {:>10} {:>12}",
            closed_forms::path(n)?,
            closed_forms::star(n)?,
            closed_forms::cycle(n)?,
            closed_forms::complete(n)?
        );
    }
    let spec = FamilySpec::Dumbbell { m1: 3, m2: 4, n: 9 };
    println!("{spec}: formula {}, engine {}", spec.expected_core_index().unwrap(), core_index(&spec.build()?));
    println!("connected labeled graphs on 1..8 vertices:");
    for k in 1..=8 {
        print!(" {}", closed_forms::connected_labeled_graphs(k)?);
    }
    println!();
    Ok(())
}
