//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//! Expected values are computed here from first principles wherever that is
//! cheap, so the library is never checked only against itself.

use std::process::{Command, ExitCode};
use std::time::Instant;

use core_index::closed_forms;
use core_index::count::{core_index, core_index_bruteforce, core_index_bruteforce_with, Count};
use core_index::error::Guard;
use core_index::extremal::{verify_theorem, wiener_correlation, Scan, Side, VerifyOptions};
use core_index::families::{graph_from_mask, FamilySpec, GraphClass, IndexedClass, LabeledGraphs};
use core_index::format::{from_graph6, to_graph6};
use core_index::graph::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c(x: u64) -> Count {
    Count::from(x)
}

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Runs checks by id and demands that every result passes.
fn all_pass(ids: &[&str], opts: &VerifyOptions) -> Result<usize, String> {
    let mut count = 0;
    for id in ids {
        let results = verify_theorem(id, opts).map_err(|e| format!("{id}: {e}"))?;
        ensure(!results.is_empty(), || format!("{id} produced no results"))?;
        for r in results {
            ensure(r.passed, || format!("{id} failed: {}", r.to_json()))?;
            count += 1;
        }
    }
    Ok(count)
}

fn range(n: std::ops::RangeInclusive<usize>) -> VerifyOptions {
    VerifyOptions {
        n: Some(n),
        ..VerifyOptions::default()
    }
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let p: f64 = rng.gen_range(0.05..0.95);
    let pairs = n * (n - 1) / 2;
    let mask = (0..pairs).fold(0u64, |m, i| if rng.gen_bool(p) { m | 1 << i } else { m });
    graph_from_mask(n, mask).unwrap()
}

fn engine_equivalence() -> Outcome {
    let mut checked = 0;
    for n in 1..=5 {
        for g in LabeledGraphs::new(n, Guard::Enforced).unwrap().iter() {
            let brute = core_index_bruteforce(&g).unwrap();
            ensure(core_index(&g) == brute, || format!("{} disagrees", to_graph6(&g)))?;
            checked += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for n in [6, 7] {
        for _ in 0..500 {
            let g = random_graph(&mut rng, n);
            let brute = core_index_bruteforce_with(&g, Guard::Lifted).unwrap();
            ensure(core_index(&g) == brute, || format!("{} disagrees", to_graph6(&g)))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} graphs agree with brute force"))
}

fn tree_bounds() -> Outcome {
    for n in 2..=9usize {
        let report = Scan::new(GraphClass::Trees, n)
            .expect(Side::Min, [FamilySpec::Path { n }])
            .expect(Side::Max, [FamilySpec::Star { n }])
            .run()
            .map_err(|e| e.to_string())?;
        let nu = n as u64;
        let lo = c(binom(nu + 1, 2));
        let hi = c((1 << (nu - 1)) + nu - 1);
        ensure(report.members == nu.pow(n as u32 - 2), || format!("n={n}: {} trees", report.members))?;
        let min = report.side(Side::Min).unwrap();
        let max = report.side(Side::Max).unwrap();
        ensure(min.value == lo && max.value == hi, || {
            format!("n={n}: extremes {}..{} vs {lo}..{hi}", min.value, max.value)
        })?;
        ensure(report.matches, || format!("n={n}: extremizers differ from path and star"))?;
        if n == 8 {
            ensure(lo == c(36) && hi == c(135), || "n=8 anchors".into())?;
        }
    }
    Ok("n = 2..9: path uniquely minimal, star uniquely maximal, n=8 gives 36 and 135".into())
}

fn tree_core() -> Outcome {
    let checks = all_pass(&["lemma-concave", "thm-score"], &range(1..=9))?;
    Ok(format!("{checks} exhaustive results over labeled trees n <= 9"))
}

fn h_sequence() -> Outcome {
    let checks = all_pass(&["h-sequence"], &range(1..=8))?;
    let connected4 = LabeledGraphs::new(4, Guard::Enforced)
        .unwrap()
        .iter()
        .filter(Graph::is_connected)
        .count();
    ensure(connected4 == 38, || format!("{connected4} connected labeled graphs on 4 vertices"))?;
    ensure(closed_forms::connected_labeled_graphs(4).unwrap() == c(38), || "h_4".into())?;
    for n in 1..=6u64 {
        let k = FamilySpec::Complete { n: n as usize }.build().unwrap();
        ensure(closed_forms::complete(n).unwrap() == core_index_bruteforce(&k).unwrap(), || {
            format!("complete graph formula at n={n}")
        })?;
    }
    Ok(format!("{checks} recurrence results, h_4 = 38, complete graphs n <= 6"))
}

fn component_extremes() -> Outcome {
    // connected labeled graph counts by direct enumeration
    let h: Vec<u64> = (0..=6)
        .map(|i| {
            if i == 0 {
                return 0;
            }
            LabeledGraphs::new(i, Guard::Enforced).unwrap().iter().filter(Graph::is_connected).count() as u64
        })
        .collect();
    let mut cases = 0;
    for n in 2..=6usize {
        for k in [2usize, 3] {
            if k > n {
                continue;
            }
            let (nu, ku) = (n as u64, k as u64);
            let top = (ku - 1) + (1..=nu - ku + 1).map(|i| binom(nu - ku + 1, i) * h[i as usize]).sum::<u64>();
            let (q, r) = (nu / ku, nu % ku);
            let bottom = r * (q + 1) + ku * q * (q + 1) / 2;
            let forest_top = (1 << (nu - ku)) + nu - 1;
            for (class, side, value, spec) in [
                (GraphClass::Components(k), Side::Max, top, FamilySpec::UnionComplete { n, k }),
                (GraphClass::Components(k), Side::Min, bottom, FamilySpec::UnionPaths { n, k }),
                (GraphClass::ForestComponents(k), Side::Min, bottom, FamilySpec::UnionPaths { n, k }),
                (GraphClass::ForestComponents(k), Side::Max, forest_top, FamilySpec::UnionStar { n, k }),
            ] {
                let report = Scan::new(class, n).expect(side, [spec.clone()]).run().map_err(|e| e.to_string())?;
                let s = report.side(side).unwrap();
                ensure(s.value == c(value), || format!("{class} n={n} {}: {} vs {value}", side.name(), s.value))?;
                ensure(s.matches == Some(true), || format!("{class} n={n} {}: extremizers differ from {spec}", side.name()))?;
                cases += 1;
            }
        }
    }
    all_pass(&["thm-con-T1", "thm-con-T2", "thm-con-T3"], &VerifyOptions::default())?;
    Ok(format!("{cases} scans match the three formulas and named unions"))
}

fn perturbations() -> Outcome {
    let opts = VerifyOptions {
        n: Some(1..=9),
        cases: 200,
        ..VerifyOptions::default()
    };
    let ids = [
        "lemma-effect-1",
        "lemma-effect-2",
        "lemma-effect-3",
        "lemma-effect-4",
        "lemma-effect-5",
        "lemma-3uni1",
        "lemma-3uni2",
    ];
    all_pass(&ids, &opts)?;
    // exact gaps on hand-checked instances
    use core_index::perturb::{contract_bridge, grafting};
    let p4 = FamilySpec::Path { n: 4 }.build().unwrap();
    let step = contract_bridge(&p4, 1, 2).map_err(|e| e.to_string())?;
    ensure(step.f_before == c(10) && step.f_after == c(11) && step.holds(), || "contract on P4".into())?;
    let k2 = FamilySpec::Path { n: 2 }.build().unwrap();
    let graft = grafting(&k2, 0, 1, 1).map_err(|e| e.to_string())?;
    ensure(graft.holds() && graft.f_before == c(11) && graft.f_after == c(10), || "graft on K2".into())?;
    let c3 = FamilySpec::Cycle { n: 3 }.build().unwrap();
    let graft = grafting(&c3, 0, 1, 2).map_err(|e| e.to_string())?;
    ensure(graft.holds() && graft.f_before.clone() - &graft.f_after == c(12), || "graft on the triangle".into())?;
    Ok(format!("{} moves x 200 random instances at n <= 9, exact gaps hold", ids.len()))
}

fn unicyclic() -> Outcome {
    for n in 4..=9usize {
        let nu = n as u64;
        let cyc = FamilySpec::Cycle { n }.build().unwrap();
        ensure(core_index(&cyc) == c(nu * nu + 1) && closed_forms::cycle(nu).unwrap() == c(nu * nu + 1), || {
            format!("cycle n={n}")
        })?;
        for g in 3..n {
            for spec in [FamilySpec::Pineapple { n, g }, FamilySpec::Lollipop { n, g }] {
                let built = spec.build().unwrap();
                let brute = core_index_bruteforce_with(&built, Guard::Lifted).unwrap();
                ensure(spec.expected_core_index() == Some(brute.clone()), || format!("{spec}: formula vs {brute}"))?;
            }
        }
    }
    let checks = all_pass(
        &["thm-main-thm1", "thm-main-thm4", "thm-main-thm3", "thm-main-thm6"],
        &range(4..=9),
    )?;
    let six = Scan::new(GraphClass::Unicyclic, 6)
        .expect(Side::Min, [FamilySpec::Cycle { n: 6 }, FamilySpec::Lollipop { n: 6, g: 3 }])
        .run()
        .map_err(|e| e.to_string())?;
    let min = six.side(Side::Min).unwrap();
    ensure(min.value == c(37) && six.matches, || format!("n=6 minimum {}", min.value))?;
    Ok(format!("formulas match brute force, {checks} per-girth and global scans, n=6 tie at 37"))
}

fn lollipop_order() -> Outcome {
    let checks = all_pass(&["thm-main-thm5"], &range(5..=100))?;
    for n in 5..=100u64 {
        let values: Vec<Count> = (3..n).map(|g| closed_forms::lollipop(n, g).unwrap()).collect();
        ensure(values.windows(2).all(|w| w[0] != w[1]), || format!("n={n}: equal neighbours"))?;
        let peak = closed_forms::lollipop_peak_threshold(n).unwrap() + 1;
        let argmax = 3 + values.iter().enumerate().max_by_key(|(_, v)| *v).unwrap().0 as u64;
        ensure(argmax == peak, || format!("n={n}: peak {argmax}, threshold says {peak}"))?;
        let gap = values.last().unwrap().clone() - &values[0];
        ensure(gap == c((n - 3) * (n - 4)), || format!("n={n}: end gap {gap}"))?;
    }
    Ok(format!("{checks} orders strictly unimodal with the predicted peak"))
}

fn pendant_extremes() -> Outcome {
    for n in 4..=9usize {
        let nu = n as u64;
        let mut specs = vec![FamilySpec::lopsided_broom(n).unwrap()];
        specs.extend((0..=n - 3).map(|k| FamilySpec::CompleteWithPendants { n, k }));
        specs.extend((2..=n.saturating_sub(3)).map(|k| FamilySpec::BalancedSpider { n, k }));
        specs.extend((2..=n - 2).map(|k| FamilySpec::balanced_broom(n, k).unwrap()));
        specs.extend((1..n).filter(|l| (n - 1) % l == 0).map(|l| FamilySpec::Spider { legs: l, leg_len: (n - 1) / l }));
        for spec in specs {
            let g = spec.build().unwrap();
            let want = if nu <= 7 { core_index_bruteforce_with(&g, Guard::Lifted).unwrap() } else { core_index(&g) };
            ensure(spec.expected_core_index() == Some(want.clone()), || format!("{spec}: formula vs {want}"))?;
        }
    }
    let mut checks = all_pass(&["thm-pmax-thm1", "thm-pmax-thm5", "thm-pmax-thm6"], &range(4..=7))?;
    checks += all_pass(&["thm-pmax-thm2", "thm-pmax-thm3", "thm-pmax-thm4"], &range(4..=9))?;
    let seven = verify_theorem("thm-pmax-thm6", &range(7..=7)).unwrap();
    ensure(seven.len() == 1 && seven[0].passed, || "one-pendant minimum at n=7".into())?;
    Ok(format!("family formulas match, {checks} pendant-count scans pass"))
}

fn pendant_free() -> Outcome {
    for n in 5..=7usize {
        let report = Scan::new(GraphClass::PendantFree, n)
            .mode("min".parse().unwrap())
            .expect(Side::Min, [FamilySpec::Cycle { n }])
            .run()
            .map_err(|e| e.to_string())?;
        let min = report.side(Side::Min).unwrap();
        let nu = n as u64;
        ensure(min.value == c(nu * nu + 1) && report.matches, || format!("n={n}: min {}", min.value))?;
    }
    let checks = all_pass(&["lemma-3cycles"], &range(6..=30))?;
    all_pass(&["thm-mainp-2", "thm-mlast", "thm-mainp-1", "cor-c33"], &VerifyOptions::default())?;
    for n in 6..=30u64 {
        let cyc = closed_forms::cycle(n).unwrap();
        let two = closed_forms::dumbbell(3, 3, n).unwrap();
        ensure((cyc < two) == (n <= 16), || format!("n={n}: crossover misplaced"))?;
    }
    ensure(closed_forms::dumbbell(3, 3, 17).unwrap() == c(289) && closed_forms::cycle(17).unwrap() == c(290), || {
        "n=17 anchors".into()
    })?;
    Ok(format!("n = 5..7 minimum n^2+1 only at the cycle; {checks} crossover results, flips after 16"))
}

fn wiener() -> Outcome {
    let w = |spec: FamilySpec| spec.build().unwrap().wiener_index().unwrap();
    ensure(w(FamilySpec::Cycle { n: 4 }) == c(8), || "W(C4)".into())?;
    ensure(w(FamilySpec::Cycle { n: 5 }) == c(15), || "W(C5)".into())?;
    ensure(w(FamilySpec::Path { n: 4 }) == c(10), || "W(P4)".into())?;
    let corr = wiener_correlation(GraphClass::Trees, 7, Guard::Enforced, 0).map_err(|e| e.to_string())?;
    let rho = corr.spearman.ok_or("no statistic")?;
    ensure(rho.is_finite(), || format!("rho = {rho}"))?;
    Ok(format!("anchors 8, 15, 10; trees n=7 give spearman {rho:.4} over {} trees", corr.samples))
}

fn format_fidelity() -> Outcome {
    let mut round = 0;
    for n in 0..=5 {
        for g in LabeledGraphs::new(n, Guard::Enforced).unwrap().iter() {
            ensure(from_graph6(&to_graph6(&g)).unwrap() == g, || format!("round trip n={n}"))?;
            round += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for n in 6..=10 {
        for _ in 0..200 {
            let g = random_graph(&mut rng, n);
            ensure(from_graph6(&to_graph6(&g)).unwrap() == g, || format!("round trip n={n}"))?;
            round += 1;
        }
    }
    let bin = env!("CARGO_BIN_EXE_coreindex");
    let code = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    let expected: [(&[&str], i32); 6] = [
        (&["compute", "--g6", "D?{"], 0),
        (&["verify", "thm-tree-F", "--n", "5"], 0),
        (&["scan", "--class", "trees", "--n", "6", "--expect", "max=path:n=6"], 1),
        (&["gen", "lollipop:n=3,g=9"], 2),
        (&["compute", "--g6", "D?{!!"], 2),
        (&["scan", "--class", "connected", "--n", "8"], 3),
    ];
    for (args, want) in expected {
        let got = code(args);
        ensure(got == Some(want), || format!("`{}` exited {got:?}, want {want}", args.join(" ")))?;
    }
    let sample = from_graph6("D?{").unwrap();
    let out = Command::new(bin).args(["compute", "--g6", "D?{", "--what", "F"]).output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    let want = format!("F: {}", core_index_bruteforce(&sample).unwrap());
    ensure(text.contains(&want), || format!("compute printed {text:?}, want {want}"))?;
    Ok(format!("{round} graphs round-trip, 6 induced exit codes honoured"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("engine equivalence", engine_equivalence),
        ("tree bounds", tree_bounds),
        ("subtree core and concavity", tree_core),
        ("h-sequence", h_sequence),
        ("component extremes", component_extremes),
        ("perturbation moves", perturbations),
        ("unicyclic formulas and extremes", unicyclic),
        ("lollipop ordering", lollipop_order),
        ("pendant-count extremes", pendant_extremes),
        ("pendant-free minimum", pendant_free),
        ("Wiener anchors", wiener),
        ("format fidelity", format_fidelity),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let result = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = started.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail} ({secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {why} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
