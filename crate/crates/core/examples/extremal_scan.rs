//! Exhaustive extremes of F over a class.

use core_index::extremal::{Scan, Side};
use core_index::families::{FamilySpec, GraphClass};

fn main() -> core_index::error::Result<()> {
    let report = Scan::new(GraphClass::Unicyclic, 7)
        .expect(Side::Min, [FamilySpec::Lollipop { n: 7, g: 3 }])
        .expect(Side::Max, [FamilySpec::Pineapple { n: 7, g: 3 }])
        .run()?;
    for side in &report.sides {
        let graphs: Vec<&str> = side.extremizers.iter().map(|e| e.graph6.as_str()).collect();
        println!("{} F = {} at {:?}, as expected: {:?}", side.side, side.value, graphs, side.matches);
    }
    let trees = Scan::new(GraphClass::TreesWithPendants(3), 8).run()?;
    print!("{}", trees.to_csv()?);
    Ok(())
}
