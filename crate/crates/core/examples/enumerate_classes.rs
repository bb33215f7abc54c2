//! Sizes of the enumerated classes at small orders.

use core_index::error::Guard;
use core_index::families::{GraphClass, IndexedClass};

fn main() -> core_index::error::Result<()> {
    let classes = ["trees", "connected", "unicyclic", "pendant-free", "two-connected", "components:2"];
    println!("{:<15} members for n = 3..6", "class");
    for name in classes {
        let class: GraphClass = name.parse()?;
        let counts: Vec<String> = (3..=6)
            .map(|n| {
                let source = class.source(n, Guard::Enforced).unwrap();
                source.iter().count().to_string()
            })
            .collect();
        println!("{name:<15} {}", counts.join(" "));
    }
    println!("unicyclic counts are representatives meeting every isomorphism class");
    Ok(())
}
