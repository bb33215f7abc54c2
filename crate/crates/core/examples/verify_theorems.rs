//! Running registered checks with custom ranges.

use core_index::extremal::{theorems, verify_theorem, VerifyOptions};

fn main() -> core_index::error::Result<()> {
    println!("{} checks registered, e.g.", theorems().len());
    for t in theorems().iter().take(5) {
        println!("  {:<16} {}", t.id, t.summary);
    }
    let opts = VerifyOptions {
        n: Some(4..=7),
        ..VerifyOptions::default()
    };
    for id in ["thm-main-thm6", "thm-pmax-thm6"] {
        for r in verify_theorem(id, &opts)? {
            println!("{} {:?} {}: {}", if r.passed { "ok  " } else { "FAIL" }, r.params, r.theorem, r.detail);
        }
    }
    Ok(())
}
