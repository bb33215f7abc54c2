//! Named families from their text syntax.

use core_index::count::core_index;
use core_index::families::FamilySpec;
use core_index::format::to_graph6;

fn main() -> core_index::error::Result<()> {
    for text in [
        "lollipop:n=9,g=4",
        "pineapple:n=5,g=3",
        "tnk:n=7,k=3",
        "broom:k=2,l=2,d=3",
        "pnk:n=7,k=2",
        "dumbbell:m1=3,m2=3,n=8",
        "spider:l=3,q=2",
        "assembly:g=4,0=star3,2=path2",
        "union-paths:n=7,k=3",
    ] {
        let spec: FamilySpec = text.parse()?;
        let g = spec.build()?;
        let formula = spec.expected_core_index().map_or("-".into(), |f| f.to_string());
        println!("{:<32} {:<12} F = {:<6} formula {formula}", spec.to_string(), to_graph6(&g), core_index(&g));
    }
    Ok(())
}
