//! F of the lollipop as the cycle grows, with its peak.

use core_index::closed_forms::{lollipop, lollipop_peak_threshold, pineapple};

fn main() -> core_index::error::Result<()> {
    let n = 20;
    let peak = lollipop_peak_threshold(n)? + 1;
    println!("n = {n}, predicted peak at girth {peak}");
    for g in 3..n {
        let mark = if g == peak { " <- peak" } else { "" };
        println!("g = {g:>2}  lollipop {:>8}  pineapple {:>8}{mark}", lollipop(n, g)?, pineapple(n, g)?);
    }
    Ok(())
}
