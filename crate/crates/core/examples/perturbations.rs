//! Local moves and their effect on F, singly and as a seeded campaign.

use core_index::families::FamilySpec;
use core_index::perturb::{campaign, contract_bridge, grafting, merge_paths, Perturbation};

fn main() -> core_index::error::Result<()> {
    let p4 = FamilySpec::Path { n: 4 }.build()?;
    let step = contract_bridge(&p4, 1, 2)?;
    println!("contract middle edge of P4: {} -> {} ({:?})", step.f_before, step.f_after, step.bound);

    let c3 = FamilySpec::Cycle { n: 3 }.build()?;
    let graft = grafting(&c3, 0, 1, 2)?;
    println!("graft on the triangle: {} -> {} ({:?})", graft.f_before, graft.f_after, graft.bound);
    let merge = merge_paths(&c3, 0, 1, 2, 2)?;
    println!("merge paths on the triangle: {} -> {} ({:?})", merge.f_before, merge.f_after, merge.bound);

    for p in Perturbation::ALL {
        let report = campaign(p, 100, 7, 9)?;
        println!("{p:<28} {} cases, {} failures", report.cases, report.failures.len());
    }
    Ok(())
}
