//! Registered checks. Each runs exhaustively (or by seeded sampling where
//! noted) over a default range of orders and yields one result per order or
//! parameter tuple.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Display;
use std::ops::RangeInclusive;
use std::sync::{Arc, Mutex};

use num_bigint::BigUint;
use num_integer::binomial;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{census, scan_value, with_workers, CheckResult, Counterexample, Extremes, Side, CHUNK, SCHEMA_VERSION};
use crate::canon::{canonical_form_unguarded, CanonicalForm};
use crate::closed_forms;
use crate::count::{core_index, core_index_bruteforce_with, count_containing_vertex, f_all_vertices_u128, Count};
use crate::error::{Error, Guard, Result};
use crate::families::{
    graph_from_mask, tree_from_prufer, Attachment, FamilySpec, GraphClass, IndexedClass, LabeledGraphs,
    TREE_GUARD,
};
use crate::graph::Graph;
use crate::perturb::{campaign, Perturbation};

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// Orders to check; each check clips this to where its statement applies.
    pub n: Option<RangeInclusive<usize>>,
    /// Restricts component or pendant counts to a single value.
    pub k: Option<usize>,
    /// Caps every range over trees.
    pub max_n_trees: Option<usize>,
    /// Randomized instances per sampled check.
    pub cases: usize,
    pub seed: u64,
    pub guard: Guard,
    pub workers: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            n: None,
            k: None,
            max_n_trees: None,
            cases: 200,
            seed: 0x5eed,
            guard: Guard::Enforced,
            workers: 0,
        }
    }
}

impl VerifyOptions {
    fn span(&self, default: RangeInclusive<usize>) -> RangeInclusive<usize> {
        match &self.n {
            Some(r) => (*r.start()).max(*default.start())..=*r.end(),
            None => default,
        }
    }

    fn tree_span(&self, default: RangeInclusive<usize>) -> RangeInclusive<usize> {
        let r = self.span(default);
        match self.max_n_trees {
            Some(m) => *r.start()..=(*r.end()).min(m),
            None => r,
        }
    }

    fn ks(&self, default: impl IntoIterator<Item = usize>) -> Vec<usize> {
        match self.k {
            Some(k) => vec![k],
            None => default.into_iter().collect(),
        }
    }
}

type Runner = fn(&VerifyOptions) -> Result<Vec<CheckResult>>;

pub struct Theorem {
    pub id: &'static str,
    pub summary: &'static str,
    run: Runner,
}

impl Theorem {
    pub fn run(&self, opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
        (self.run)(opts)
    }
}

macro_rules! registry {
    ($($id:literal => $run:ident : $summary:literal,)*) => {
        static THEOREMS: &[Theorem] = &[$(Theorem { id: $id, summary: $summary, run: $run },)*];
    };
}

registry! {
    "engines" => engines: "exact engines agree with brute force on all graphs n <= 5 and random graphs n = 6, 7",
    "h-sequence" => h_sequence: "connected labeled graph counts satisfy their recurrence and match enumeration",
    "closed-forms" => closed_forms_check: "every closed-form family value matches the engine",
    "lemma-concave" => lemma_concave: "along any two-edge path in a tree the middle vertex beats the average of its ends",
    "thm-score" => thm_score: "the subtree core of a tree is one vertex or two adjacent ones",
    "thm-tree-F" => thm_tree_f: "over trees the path is the unique minimizer and the star the unique maximizer",
    "thm-con-F" => thm_con_f: "over connected graphs the path is the unique minimizer and the complete graph the unique maximizer",
    "prop-edge-monotone" => prop_edge_monotone: "adding an edge strictly raises F; over all graphs the empty and complete graphs are extreme",
    "lemma-con-l1" => lemma_con_l1: "moving a vertex from the smaller clique of two to the larger raises F",
    "thm-con-T1" => thm_con_t1: "with k components the maximizer is a clique plus isolated vertices",
    "lemma-con-l2" => lemma_con_l2: "moving a vertex from the shorter path of two to the longer raises F",
    "thm-con-T2" => thm_con_t2: "with k components the minimizer is paths of near-equal order",
    "lemma-con-l3" => lemma_con_l3: "moving a leaf from the smaller star of two to the larger raises F",
    "thm-con-T3" => thm_con_t3: "over forests with k components the maximizer is a star plus isolated vertices",
    "lemma-effect-1" => lemma_effect_1: "contracting a bridge between non-pendants and adding a pendant raises F by an exact product",
    "lemma-effect-2" => lemma_effect_2: "contracting a bridge and adding a pendant on the lighter side raises F",
    "lemma-effect-3" => lemma_effect_3: "grafting an edge from the shorter hanging path to the longer lowers F by an exact amount",
    "lemma-effect-4" => lemma_effect_4: "moving pendants to the vertex in more connected subgraphs raises F",
    "lemma-effect-5" => lemma_effect_5: "merging two hanging paths at the lighter vertex lowers F",
    "lemma-cycle-F" => lemma_cycle_f: "cycle values of F and of the per-vertex count",
    "lemma-ucyclic1" => lemma_ucyclic1: "path attachments bound a unicyclic graph from below and star attachments from above",
    "thm-main-thm1" => thm_main_thm1: "for fixed girth the pineapple is the unique maximizer",
    "thm-main-thm2" => thm_main_thm2: "pineapple values fall strictly with girth",
    "thm-main-thm3" => thm_main_thm3: "over unicyclic graphs the triangle pineapple is the unique maximizer",
    "thm-main-thm4" => thm_main_thm4: "for fixed girth the lollipop is the unique minimizer",
    "thm-main-thm5" => thm_main_thm5: "lollipop values are strictly unimodal in the girth",
    "thm-main-thm6" => thm_main_thm6: "unicyclic minimizers: the cycle up to 5, both at 6, the triangle lollipop from 7",
    "wiener-girth" => wiener_girth: "for fixed girth the pineapple minimizes and the lollipop maximizes the Wiener index",
    "wiener-unicyclic" => wiener_unicyclic: "Wiener extremes over unicyclic graphs, with the small-order ties",
    "thm-pmax-thm1" => thm_pmax_thm1: "with k pendants the maximizer is a clique with all pendants on one vertex",
    "thm-pmax-thm2" => thm_pmax_thm2: "with n - 2 pendants the maximizer is the one-leaf double broom",
    "thm-pmax-thm3" => thm_pmax_thm3: "over trees with k leaves the balanced spider is the unique maximizer",
    "thm-pmax-thm4" => thm_pmax_thm4: "over trees with k leaves the balanced double broom is the unique minimizer",
    "thm-pmax-thm5" => thm_pmax_thm5: "over connected graphs with k pendants the balanced double broom is the unique minimizer",
    "thm-pmax-thm6" => thm_pmax_thm6: "with one pendant the triangle lollipop is the unique minimizer",
    "lemma-3cycles" => lemma_3cycles: "the cycle beats two triangles joined by a path exactly up to n = 16",
    "lemma-twocycles" => lemma_twocycles: "two cycles sharing a vertex beat the spanning cycle",
    "cor-ctwo" => cor_ctwo: "every supergraph of a spanning pair of cycles sharing a vertex beats the cycle",
    "lemma-24" => lemma_24: "in a lollipop the tail end lies in the fewest connected subgraphs",
    "lemma-3uni1" => lemma_3uni1: "gluing at the lollipop tail end gives smaller F than gluing elsewhere",
    "thm-mainp-1" => thm_mainp_1: "pendant-free graphs with a cut vertex and no spanning shared pair of cycles are minimized by two triangles joined by a path",
    "lemma-3uni2" => lemma_3uni2: "gluing at a triangle lollipop tail gives smaller F than at a long-cycle lollipop tail",
    "cor-c33" => cor_c33: "two triangles minimize F among pairs of cycles joined by a path",
    "thm-mainp-2" => thm_mainp_2: "over 2-connected graphs the cycle is the unique minimizer",
    "thm-mlast" => thm_mlast: "pendant-free minimum is the smaller of the cycle and the two-triangle value",
}

pub fn theorems() -> &'static [Theorem] {
    THEOREMS
}

pub fn theorem_ids() -> impl Iterator<Item = &'static str> {
    THEOREMS.iter().map(|t| t.id)
}

pub fn verify_theorem(id: &str, opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    THEOREMS
        .iter()
        .find(|t| t.id == id)
        .ok_or_else(|| Error::UnknownTheorem(id.to_string()))?
        .run(opts)
}

pub fn verify_all(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for t in THEOREMS {
        out.extend(t.run(opts)?);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Result plumbing
// ---------------------------------------------------------------------------

struct Check {
    id: &'static str,
    params: BTreeMap<String, String>,
}

fn check(id: &'static str, params: &[(&str, &dyn Display)]) -> Check {
    Check {
        id,
        params: params.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect(),
    }
}

impl Check {
    fn pass(self, detail: impl Into<String>) -> CheckResult {
        self.finish(true, detail.into(), None)
    }

    fn fail(self, detail: impl Into<String>, g: &Graph) -> CheckResult {
        let detail = detail.into();
        let ce = Counterexample::new(g, detail.clone());
        self.finish(false, detail, Some(ce))
    }

    fn finish(self, passed: bool, detail: String, counterexample: Option<Counterexample>) -> CheckResult {
        CheckResult {
            schema_version: SCHEMA_VERSION,
            theorem: self.id.to_string(),
            params: self.params,
            passed,
            detail,
            counterexample,
        }
    }
}

fn big(x: u64) -> Count {
    BigUint::from(x)
}

fn build_all(specs: &[FamilySpec]) -> Result<BTreeMap<CanonicalForm, (FamilySpec, Graph)>> {
    specs
        .iter()
        .map(|s| {
            let g = s.build()?;
            Ok((canonical_form_unguarded(&g), (s.clone(), g)))
        })
        .collect()
}

/// Compares one side of a census bucket with named graphs. With `exact`
/// the extremizer set must equal the named set, otherwise contain it.
fn compare(
    c: Check,
    ex: &Extremes,
    side: Side,
    expected: &[FamilySpec],
    value: Option<Count>,
    exact: bool,
) -> Result<CheckResult> {
    let found = ex.extremizers(side);
    let got = Count::from(ex.value(side));
    let any_found = || found.iter().next().expect("nonempty bucket").to_graph();
    if let Some(want) = value {
        if got != want {
            return Ok(c.fail(format!("{} is {got}, formula gives {want}", side.name()), &any_found()));
        }
    }
    let named = build_all(expected)?;
    if exact {
        if let Some(extra) = found.iter().find(|f| !named.contains_key(*f)) {
            return Ok(c.fail(
                format!("{} {got} is also attained by a graph outside the named set", side.name()),
                &extra.to_graph(),
            ));
        }
    }
    if let Some((_, (spec, g))) = named.iter().find(|(f, _)| !found.contains(*f)) {
        return Ok(c.fail(
            format!("{spec} does not attain the {} {got} (it has {})", side.name(), core_index(g)),
            g,
        ));
    }
    let names: Vec<String> = named.values().map(|(s, _)| s.to_string()).collect();
    Ok(c.pass(format!(
        "{} = {got} over {} members, attained {}by {}",
        side.name(),
        ex.count,
        if exact { "only " } else { "" },
        names.join(", ")
    )))
}

// ---------------------------------------------------------------------------
// Cached censuses
// ---------------------------------------------------------------------------

type Bucketed<K> = Arc<BTreeMap<K, Extremes>>;
type Cache<K> = Mutex<BTreeMap<usize, Bucketed<K>>>;

fn cached<K>(cache: &'static Cache<K>, n: usize, build: impl FnOnce() -> Result<BTreeMap<K, Extremes>>) -> Result<Bucketed<K>> {
    let mut map = cache.lock().unwrap_or_else(|e| e.into_inner());
    if let Some(hit) = map.get(&n) {
        return Ok(hit.clone());
    }
    let value = Arc::new(build()?);
    map.insert(n, value.clone());
    Ok(value)
}

fn merged<K>(buckets: &BTreeMap<K, Extremes>) -> Extremes {
    buckets.values().cloned().fold(Extremes::default(), Extremes::merge)
}

static TREE_CENSUS: Cache<usize> = Mutex::new(BTreeMap::new());

/// Labeled trees on `n` vertices by leaf count.
fn tree_census(n: usize, opts: &VerifyOptions) -> Result<Bucketed<usize>> {
    let source = GraphClass::Trees.source(n, opts.guard)?;
    cached(&TREE_CENSUS, n, || {
        census(&source, |g| vec![g.pendant_vertices().len()], scan_value, opts.workers)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Slot {
    Pendants(usize),
    TwoConnected,
}

static CONNECTED_CENSUS: Cache<Slot> = Mutex::new(BTreeMap::new());

/// Labeled connected graphs on `n` vertices by pendant count, plus the
/// 2-connected ones.
fn connected_census(n: usize, opts: &VerifyOptions) -> Result<Bucketed<Slot>> {
    let source = GraphClass::Connected.source(n, opts.guard)?;
    cached(&CONNECTED_CENSUS, n, || {
        census(
            &source,
            |g| {
                let mut keys = vec![Slot::Pendants(g.pendant_vertices().len())];
                if g.n() >= 3 && g.is_two_connected().unwrap_or(false) {
                    keys.push(Slot::TwoConnected);
                }
                keys
            },
            scan_value,
            opts.workers,
        )
    })
}

static UNICYCLIC_F: Cache<usize> = Mutex::new(BTreeMap::new());
static UNICYCLIC_W: Cache<usize> = Mutex::new(BTreeMap::new());

fn wiener_value(g: &Graph) -> Result<u128> {
    use num_traits::ToPrimitive;
    Ok(g.wiener_index()?.to_u128().expect("small Wiener index"))
}

/// Unicyclic graphs on `n` vertices by girth, valued by `F` or by `W`.
fn unicyclic_census(n: usize, wiener: bool, opts: &VerifyOptions) -> Result<Bucketed<usize>> {
    let source = GraphClass::Unicyclic.source(n, opts.guard)?;
    let girth = |g: &Graph| vec![g.girth().expect("unicyclic")];
    if wiener {
        cached(&UNICYCLIC_W, n, || census(&source, girth, wiener_value, opts.workers))
    } else {
        cached(&UNICYCLIC_F, n, || census(&source, girth, scan_value, opts.workers))
    }
}

// ---------------------------------------------------------------------------
// Engines and closed forms
// ---------------------------------------------------------------------------

fn engines(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for n in opts.span(1..=7) {
        let c = check("engines", &[("n", &n)]);
        let (graphs, how): (Vec<Graph>, String) = if n <= 5 {
            let all = LabeledGraphs::new(n, Guard::Enforced)?;
            (all.iter().collect(), "every labeled graph".into())
        } else {
            let count = opts.cases.max(500);
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ n as u64);
            let pairs = n * (n - 1) / 2;
            let graphs = (0..count)
                .map(|_| {
                    let p: f64 = rng.gen_range(0.0..1.0);
                    let mask = (0..pairs).fold(0u64, |m, i| if rng.gen_bool(p) { m | 1 << i } else { m });
                    graph_from_mask(n, mask)
                })
                .collect::<Result<_>>()?;
            (graphs, format!("{count} random graphs"))
        };
        let bad = graphs
            .par_iter()
            .find_first(|g| core_index_bruteforce_with(g, Guard::Lifted).ok() != Some(core_index(g)));
        out.push(match bad {
            Some(g) => c.fail("block decomposition disagrees with brute force", g),
            None => c.pass(format!("agreement on {how} ({})", graphs.len())),
        });
    }
    Ok(out)
}

fn h_sequence(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for k in opts.span(1..=8) {
        let c = check("h-sequence", &[("k", &k)]);
        let ku = k as u64;
        let pow2 = |e: u64| BigUint::from(1u32) << e;
        let lhs = big(ku) * pow2(ku * (ku - 1) / 2);
        let mut rhs = big(0);
        for i in 1..=ku {
            let rest = ku - i;
            rhs += binomial(big(ku), big(i)) * big(i) * closed_forms::connected_labeled_graphs(i)? * pow2(rest * rest.saturating_sub(1) / 2);
        }
        let h = closed_forms::connected_labeled_graphs(ku)?;
        let complete = FamilySpec::Complete { n: k }.build()?;
        if lhs != rhs {
            out.push(c.fail(format!("recurrence fails: {lhs} vs {rhs}"), &complete));
            continue;
        }
        let mut detail = format!("recurrence holds, h = {h}");
        if k <= 6 {
            let counted = LabeledGraphs::new(k, Guard::Enforced)?.iter().filter(Graph::is_connected).count();
            if big(counted as u64) != h {
                out.push(c.fail(format!("{counted} connected labeled graphs counted, sequence says {h}"), &complete));
                continue;
            }
            let brute = core_index_bruteforce_with(&complete, Guard::Lifted)?;
            let formula = closed_forms::complete(ku)?;
            if brute != formula {
                out.push(c.fail(format!("complete graph: brute force {brute}, formula {formula}"), &complete));
                continue;
            }
            detail.push_str(&format!(", matches enumeration; complete graph F = {formula} by brute force"));
        }
        out.push(c.pass(detail));
    }
    Ok(out)
}

fn families_of_order(n: usize) -> Vec<FamilySpec> {
    let mut specs = vec![
        FamilySpec::Path { n },
        FamilySpec::Star { n },
        FamilySpec::Complete { n },
    ];
    if n >= 3 {
        specs.push(FamilySpec::Cycle { n });
        for k in 0..=n - 3 {
            specs.push(FamilySpec::CompleteWithPendants { n, k });
        }
    }
    for g in 3..n {
        specs.push(FamilySpec::Pineapple { n, g });
        specs.push(FamilySpec::Lollipop { n, g });
    }
    if n >= 4 {
        specs.extend(FamilySpec::lopsided_broom(n));
        for k in 2..=n - 2 {
            specs.extend(FamilySpec::balanced_broom(n, k));
        }
        for d in 2..=n - 2 {
            for k in 1..n - d {
                specs.push(FamilySpec::DoubleBroom { k, l: n - d - k, d });
            }
        }
    }
    for k in 2..=n.saturating_sub(3) {
        specs.push(FamilySpec::BalancedSpider { n, k });
    }
    for legs in 1..n {
        if (n - 1).is_multiple_of(legs) {
            specs.push(FamilySpec::Spider { legs, leg_len: (n - 1) / legs });
        }
    }
    for m1 in 3..=n {
        for m2 in m1..=n {
            if m1 + m2 <= n + 1 {
                specs.push(FamilySpec::Dumbbell { m1, m2, n });
            }
        }
    }
    for k in 1..=n {
        specs.push(FamilySpec::UnionPaths { n, k });
        specs.push(FamilySpec::UnionComplete { n, k });
        specs.push(FamilySpec::UnionStar { n, k });
    }
    specs
}

fn closed_forms_check(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for n in opts.span(1..=9) {
        let c = check("closed-forms", &[("n", &n)]);
        let specs = families_of_order(n);
        let mut bad = None;
        for spec in &specs {
            let g = spec.build()?;
            let want = spec.expected_core_index().expect("closed form exists");
            let got = core_index(&g);
            if got != want {
                bad = Some((spec.clone(), g, got, want));
                break;
            }
        }
        out.push(match bad {
            Some((spec, g, got, want)) => c.fail(format!("{spec}: engine {got}, formula {want}"), &g),
            None => c.pass(format!("{} family members agree", specs.len())),
        });
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Trees
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Default)]
struct TreeFacts {
    trees: u64,
    /// first offending `(index, tree)` for each property
    concave: Option<(u64, Graph)>,
    core: Option<(u64, Graph)>,
    core_sizes: [u64; 2],
}

impl TreeFacts {
    fn merge(mut self, other: TreeFacts) -> TreeFacts {
        fn first(a: Option<(u64, Graph)>, b: Option<(u64, Graph)>) -> Option<(u64, Graph)> {
            match (a, b) {
                (Some(x), Some(y)) => Some(if x.0 <= y.0 { x } else { y }),
                (x, y) => x.or(y),
            }
        }
        self.trees += other.trees;
        self.concave = first(self.concave, other.concave);
        self.core = first(self.core, other.core);
        self.core_sizes[0] += other.core_sizes[0];
        self.core_sizes[1] += other.core_sizes[1];
        self
    }

    fn observe(&mut self, index: u64, t: &Graph) {
        self.trees += 1;
        let f = f_all_vertices_u128(t).expect("tree values fit");
        let n = t.n();
        if self.concave.is_none() {
            'outer: for v in 0..n {
                let nb = t.neighbors(v).to_vec();
                for (i, &a) in nb.iter().enumerate() {
                    for &b in &nb[i + 1..] {
                        if 2 * f[v] <= f[a] + f[b] {
                            self.concave = Some((index, t.clone()));
                            break 'outer;
                        }
                    }
                }
            }
        }
        let best = *f.iter().max().expect("nonempty");
        let core: Vec<usize> = (0..n).filter(|&v| f[v] == best).collect();
        match core.as_slice() {
            [_] => self.core_sizes[0] += 1,
            [a, b] if t.has_edge(*a, *b) => self.core_sizes[1] += 1,
            _ => {
                if self.core.is_none() {
                    self.core = Some((index, t.clone()));
                }
            }
        }
    }
}

static TREE_FACTS: Mutex<BTreeMap<usize, Arc<(TreeFacts, bool)>>> = Mutex::new(BTreeMap::new());

/// Local facts about `f` on every labeled tree of order `n`, or on seeded
/// random trees above the enumeration guard. The flag marks sampling.
fn tree_facts(n: usize, opts: &VerifyOptions) -> Result<Arc<(TreeFacts, bool)>> {
    let sampled = n > TREE_GUARD && opts.guard == Guard::Enforced;
    let mut map = TREE_FACTS.lock().unwrap_or_else(|e| e.into_inner());
    if !sampled {
        if let Some(hit) = map.get(&n) {
            return Ok(hit.clone());
        }
    }
    let facts = if sampled {
        if n > 64 {
            return Err(Error::TooManyVertices { n, max: 64 });
        }
        let mut facts = TreeFacts::default();
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ (n as u64) << 32);
        for i in 0..opts.cases as u64 {
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            facts.observe(i, &tree_from_prufer(n, &seq));
        }
        facts
    } else {
        let source = GraphClass::Trees.source(n, opts.guard)?;
        let len = source.len();
        with_workers(opts.workers, || {
            (0..len.div_ceil(CHUNK))
                .into_par_iter()
                .map(|c| {
                    let mut facts = TreeFacts::default();
                    for i in c * CHUNK..len.min((c + 1) * CHUNK) {
                        if let Some(t) = source.get(i) {
                            facts.observe(i, &t);
                        }
                    }
                    facts
                })
                .reduce(TreeFacts::default, TreeFacts::merge)
        })
    };
    let entry = Arc::new((facts, sampled));
    if !sampled {
        map.insert(n, entry.clone());
    }
    Ok(entry)
}

fn lemma_concave(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for n in opts.tree_span(3..=12) {
        let facts = tree_facts(n, opts)?;
        let (facts, sampled) = (&facts.0, facts.1);
        let how = if sampled { "random" } else { "labeled" };
        let c = check("lemma-concave", &[("n", &n), ("trees", &how)]);
        out.push(match &facts.concave {
            Some((_, t)) => c.fail("a two-edge path whose middle does not beat its ends", t),
            None => c.pass(format!("holds on {} {how} trees", facts.trees)),
        });
    }
    Ok(out)
}

fn thm_score(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for n in opts.tree_span(2..=12) {
        let facts = tree_facts(n, opts)?;
        let (facts, sampled) = (&facts.0, facts.1);
        let how = if sampled { "random" } else { "labeled" };
        let c = check("thm-score", &[("n", &n), ("trees", &how)]);
        out.push(match &facts.core {
            Some((_, t)) => c.fail("core is neither one vertex nor two adjacent vertices", t),
            None => c.pass(format!(
                "{} {how} trees: {} with a one-vertex core, {} with two adjacent",
                facts.trees, facts.core_sizes[0], facts.core_sizes[1]
            )),
        });
    }
    Ok(out)
}

fn thm_tree_f(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for n in opts.tree_span(2..=9) {
        let all = merged(&*tree_census(n, opts)?);
        let nu = n as u64;
        let lo = closed_forms::path(nu)?;
        let hi = closed_forms::star(nu)?;
        out.push(compare(
            check("thm-tree-F", &[("n", &n), ("side", &"min")]),
            &all,
            Side::Min,
            &[FamilySpec::Path { n }],
            Some(lo),
            true,
        )?);
        out.push(compare(
            check("thm-tree-F", &[("n", &n), ("side", &"max")]),
            &all,
            Side::Max,
            &[FamilySpec::Star { n }],
            Some(hi),
            true,
        )?);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Components
// ---------------------------------------------------------------------------

fn class_extremes(class: GraphClass, n: usize, opts: &VerifyOptions) -> Result<Option<Extremes>> {
    let source = class.source(n, opts.guard)?;
    Ok(census(&source, |_| vec![()], scan_value, opts.workers)?.remove(&()))
}

fn thm_con_f(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for n in opts.span(1..=6) {
        let all = if n == 7 {
            merged(&*connected_census(n, opts)?)
        } else {
            class_extremes(GraphClass::Connected, n, opts)?.expect("connected graphs exist")
        };
        let nu = n as u64;
        out.push(compare(
            check("thm-con-F", &[("n", &n), ("side", &"min")]),
            &all,
            Side::Min,
            &[FamilySpec::Path { n }],
            Some(closed_forms::path(nu)?),
            true,
        )?);
        out.push(compare(
            check("thm-con-F", &[("n", &n), ("side", &"max")]),
            &all,
            Side::Max,
            &[FamilySpec::Complete { n }],
            Some(closed_forms::complete(nu)?),
            true,
        )?);
    }
    Ok(out)
}

fn prop_edge_monotone(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for n in opts.span(2..=5) {
        let c = check("prop-edge-monotone", &[("n", &n)]);
        let graphs = LabeledGraphs::new(n, opts.guard)?;
        let bad = graphs.iter().find_map(|g| {
            let f = core_index(&g);
            for u in 0..n {
                for v in u + 1..n {
                    if !g.has_edge(u, v) && core_index(&g.with_edge(u, v).expect("valid pair")) <= f {
                        return Some(g);
                    }
                }
            }
            None
        });
        if let Some(g) = bad {
            out.push(c.fail("adding some edge does not raise F", &g));
            continue;
        }
        let all = class_extremes(GraphClass::All, n, opts)?.expect("graphs exist");
        let empty = FamilySpec::UnionComplete { n, k: n };
        let r = compare(c, &all, Side::Min, &[empty], Some(big(n as u64)), true)?;
        if !r.passed {
            out.push(r);
            continue;
        }
        out.push(compare(
            check("prop-edge-monotone", &[("n", &n), ("side", &"max")]),
            &all,
            Side::Max,
            &[FamilySpec::Complete { n }],
            Some(closed_forms::complete(n as u64)?),
            true,
        )?);
    }
    Ok(out)
}

/// Pairs `2 <= l <= m` with `m` in range, comparing `F(A_l + A_m)` with
/// `F(A_{l-1} + A_{m+1})` both by formula and, when small, by the engine.
fn exchange_check(
    id: &'static str,
    opts: &VerifyOptions,
    member: fn(usize) -> FamilySpec,
    formula: fn(u64) -> Result<Count>,
    gain_when_unbalanced: bool,
) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for m in opts.span(2..=10) {
        let c = check(id, &[("m", &m)]);
        let mut bad = None;
        for l in 2..=m {
            let pair = |a: usize, b: usize| -> Result<(Count, Graph)> {
                let ga = member(a).build()?;
                let gb = member(b).build()?;
                let value = formula(a as u64)? + formula(b as u64)?;
                Ok((value, ga.disjoint_union(&gb)?))
            };
            let (even, g_even) = pair(l, m)?;
            let (odd, g_odd) = pair(l - 1, m + 1)?;
            let ok = if gain_when_unbalanced { even < odd } else { even > odd };
            let engine_ok = l + m > 12 || (core_index(&g_even) == even && core_index(&g_odd) == odd);
            if !ok || !engine_ok {
                bad = Some((l, g_even));
                break;
            }
        }
        out.push(match bad {
            Some((l, g)) => c.fail(format!("fails at l = {l}"), &g),
            None => c.pass(format!("holds for 2 <= l <= {m}")),
        });
    }
    Ok(out)
}

fn lemma_con_l1(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    exchange_check("lemma-con-l1", opts, |n| FamilySpec::Complete { n }, closed_forms::complete, true)
}

fn lemma_con_l2(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    exchange_check("lemma-con-l2", opts, |n| FamilySpec::Path { n }, closed_forms::path, true)
}

fn lemma_con_l3(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    // stars on l and m vertices
    exchange_check("lemma-con-l3", opts, |n| FamilySpec::Star { n }, closed_forms::star, true)
}

type ExtremeOf = fn(&closed_forms::ComponentExtremes) -> Count;

fn component_scan(
    id: &'static str,
    opts: &VerifyOptions,
    forests: bool,
    side: Side,
    pick: fn(usize, usize) -> (FamilySpec, ExtremeOf),
) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for n in opts.span(2..=6) {
        for k in opts.ks([2, 3]) {
            if k > n {
                continue;
            }
            let class = if forests {
                GraphClass::ForestComponents(k)
            } else {
                GraphClass::Components(k)
            };
            let Some(ex) = class_extremes(class, n, opts)? else { continue };
            let (spec, value) = pick(n, k);
            let want = value(&closed_forms::component_extremes(n as u64, k as u64)?);
            out.push(compare(
                check(id, &[("n", &n), ("k", &k), ("class", &class)]),
                &ex,
                side,
                &[spec],
                Some(want),
                true,
            )?);
        }
    }
    Ok(out)
}

fn thm_con_t1(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    component_scan("thm-con-T1", opts, false, Side::Max, |n, k| {
        (FamilySpec::UnionComplete { n, k }, |e| e.max_graph.clone())
    })
}

fn thm_con_t2(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let mut out = component_scan("thm-con-T2", opts, false, Side::Min, |n, k| {
        (FamilySpec::UnionPaths { n, k }, |e| e.min_graph.clone())
    })?;
    out.extend(component_scan("thm-con-T2", opts, true, Side::Min, |n, k| {
        (FamilySpec::UnionPaths { n, k }, |e| e.min_graph.clone())
    })?);
    Ok(out)
}

fn thm_con_t3(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    component_scan("thm-con-T3", opts, true, Side::Max, |n, k| {
        (FamilySpec::UnionStar { n, k }, |e| e.max_forest.clone())
    })
}

// ---------------------------------------------------------------------------
// Perturbations
// ---------------------------------------------------------------------------

fn campaign_check(id: &'static str, p: Perturbation, opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let max_n = *opts.span(1..=9).end();
    let report = campaign(p, opts.cases, opts.seed, max_n)?;
    let c = check(id, &[("move", &p), ("cases", &opts.cases), ("max_n", &max_n), ("seed", &opts.seed)]);
    Ok(vec![match report.failures.first() {
        Some(f) => c.fail(
            format!(
                "{} of {} cases fail; first: F {} -> {} (after: {}), promised {:?}",
                report.failures.len(),
                report.cases,
                f.f_before,
                f.f_after,
                crate::format::to_graph6(&f.after),
                f.bound
            ),
            &f.before,
        ),
        None => c.pass(format!(
            "{} cases hold ({} samples rejected by preconditions, largest order {})",
            report.cases, report.rejected, report.max_order
        )),
    }])
}

fn lemma_effect_1(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    campaign_check("lemma-effect-1", Perturbation::ContractBridge, opts)
}

fn lemma_effect_2(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    campaign_check("lemma-effect-2", Perturbation::ContractBridgePendantAt, opts)
}

fn lemma_effect_3(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    campaign_check("lemma-effect-3", Perturbation::GraftEdge, opts)
}

fn lemma_effect_4(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    campaign_check("lemma-effect-4", Perturbation::MovePendants, opts)
}

fn lemma_effect_5(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    campaign_check("lemma-effect-5", Perturbation::MergePaths, opts)
}

fn lemma_3uni1(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    campaign_check("lemma-3uni1", Perturbation::ReattachLollipop, opts)
}

fn lemma_3uni2(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    campaign_check("lemma-3uni2", Perturbation::ShrinkLollipopCycle, opts)
}

// ---------------------------------------------------------------------------
// Unicyclic graphs
// ---------------------------------------------------------------------------

fn lemma_cycle_f(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for n in opts.span(3..=12) {
        let c = check("lemma-cycle-F", &[("n", &n)]);
        let g = FamilySpec::Cycle { n }.build()?;
        let nu = n as u64;
        let f = core_index(&g);
        let fv = count_containing_vertex(&g, 0)?;
        let want_f = big(nu * nu + 1);
        let want_v = closed_forms::cycle_vertex(nu)?;
        out.push(if f == want_f && fv == want_v && closed_forms::cycle(nu)? == want_f {
            c.pass(format!("F = {f}, each vertex in {fv}"))
        } else {
            c.fail(format!("F = {f} (want {want_f}), vertex count {fv} (want {want_v})"), &g)
        });
    }
    Ok(out)
}

/// The cycle in order from its least vertex, and how many vertices hang
/// from each cycle vertex.
fn unicyclic_shape(g: &Graph) -> (Vec<usize>, Vec<usize>) {
    let n = g.n();
    let mut deg = g.degrees();
    let mut on_cycle = vec![true; n];
    let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    while let Some(v) = stack.pop() {
        on_cycle[v] = false;
        for w in g.neighbors(v).iter() {
            if on_cycle[w] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    stack.push(w);
                }
            }
        }
    }
    let start = (0..n).find(|&v| on_cycle[v]).expect("unicyclic");
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = g
            .neighbors(cur)
            .iter()
            .find(|&w| on_cycle[w] && w != prev && !(order.len() == 1 && w == start))
            .expect("cycle continues");
        if next == start {
            break;
        }
        order.push(next);
        prev = cur;
        cur = next;
        if order.len() > n {
            unreachable!("cycle walk exceeded n");
        }
    }
    // a walk that returns to `start` only through its second neighbour
    let sizes = order
        .iter()
        .map(|&c| {
            let mut seen = vec![false; n];
            seen[c] = true;
            let mut stack = vec![c];
            let mut count = 0;
            while let Some(v) = stack.pop() {
                for w in g.neighbors(v).iter() {
                    if !seen[w] && !on_cycle[w] {
                        seen[w] = true;
                        count += 1;
                        stack.push(w);
                    }
                }
            }
            count
        })
        .collect();
    (order, sizes)
}

static UNICYCLIC_FORMS: Mutex<BTreeMap<usize, Arc<BTreeSet<CanonicalForm>>>> = Mutex::new(BTreeMap::new());

fn unicyclic_forms(n: usize, opts: &VerifyOptions) -> Result<Arc<BTreeSet<CanonicalForm>>> {
    let source = GraphClass::Unicyclic.source(n, opts.guard)?;
    let mut map = UNICYCLIC_FORMS.lock().unwrap_or_else(|e| e.into_inner());
    if let Some(hit) = map.get(&n) {
        return Ok(hit.clone());
    }
    let len = source.len();
    let forms = with_workers(opts.workers, || {
        (0..len.div_ceil(CHUNK))
            .into_par_iter()
            .map(|c| {
                (c * CHUNK..len.min((c + 1) * CHUNK))
                    .filter_map(|i| source.get(i))
                    .map(|g| canonical_form_unguarded(&g))
                    .collect::<BTreeSet<_>>()
            })
            .reduce(BTreeSet::new, |mut a, b| {
                a.extend(b);
                a
            })
    });
    let forms = Arc::new(forms);
    map.insert(n, forms.clone());
    Ok(forms)
}

fn lemma_ucyclic1(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for n in opts.span(4..=9) {
        let c = check("lemma-ucyclic1", &[("n", &n)]);
        let forms = unicyclic_forms(n, opts)?;
        let mut bad: Option<(String, Graph)> = None;
        let mut checked = 0;
        for form in forms.iter() {
            let g = form.to_graph();
            let (cycle, sizes) = unicyclic_shape(&g);
            if cycle.len() == n {
                continue;
            }
            checked += 1;
            let hang = |a: fn(usize) -> Attachment| FamilySpec::UnicyclicAssembly {
                g: cycle.len(),
                trees: sizes.iter().enumerate().filter(|(_, &s)| s > 0).map(|(i, &s)| (i, a(s))).collect(),
            };
            let low = hang(Attachment::Path).build()?;
            let high = hang(Attachment::Star).build()?;
            let (f, fl, fh) = (core_index(&g), core_index(&low), core_index(&high));
            let same = |h: &Graph| canonical_form_unguarded(h) == *form;
            if !(fl <= f && f <= fh) {
                bad = Some((format!("F = {f} outside [{fl}, {fh}]"), g));
            } else if (f == fl) != same(&low) {
                bad = Some(("lower bound equality does not match isomorphism".into(), g));
            } else if (f == fh) != same(&high) {
                bad = Some(("upper bound equality does not match isomorphism".into(), g));
            }
            if bad.is_some() {
                break;
            }
        }
        out.push(match bad {
            Some((why, g)) => c.fail(why, &g),
            None => c.pass(format!("sandwich holds for all {checked} non-cycle unicyclic graphs")),
        });
    }
    Ok(out)
}

fn girth_scan(
    id: &'static str,
    opts: &VerifyOptions,
    side: Side,
    family: fn(usize, usize) -> FamilySpec,
) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for n in opts.span(4..=9) {
        let by_girth = unicyclic_census(n, false, opts)?;
        for g in 3..n {
            let spec = family(n, g);
            let want = spec.expected_core_index();
            out.push(compare(
                check(id, &[("n", &n), ("g", &g)]),
                &by_girth[&g],
                side,
                &[spec],
                want,
                true,
            )?);
        }
    }
    Ok(out)
}

fn thm_main_thm1(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    girth_scan("thm-main-thm1", opts, Side::Max, |n, g| FamilySpec::Pineapple { n, g })
}

fn thm_main_thm4(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    girth_scan("thm-main-thm4", opts, Side::Min, |n, g| FamilySpec::Lollipop { n, g })
}

fn thm_main_thm2(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for n in opts.span(4..=30) {
        let nu = n as u64;
        let c = check("thm-main-thm2", &[("n", &n)]);
        let values: Vec<Count> = (3..nu).map(|g| closed_forms::pineapple(nu, g)).collect::<Result<_>>()?;
        let top = big(7) * (BigUint::from(1u32) << (nu - 3)) + big(nu);
        let bottom = big(nu * nu + 1) + binomial(big(nu - 2), big(2));
        let falling = values.windows(2).all(|w| w[0] > w[1]);
        let mut failure = None;
        if !falling {
            failure = Some("values do not fall strictly with the girth".to_string());
        } else if values[0] != top || *values.last().expect("n >= 4") != bottom {
            failure = Some(format!("range [{}, {}] differs from [{bottom}, {top}]", values.last().unwrap(), values[0]));
        } else if n <= 9 {
            for g in 3..n {
                let spec = FamilySpec::Pineapple { n, g };
                if core_index(&spec.build()?) != values[g - 3] {
                    failure = Some(format!("{spec} engine value differs from its formula"));
                    break;
                }
            }
        }
        out.push(match failure {
            Some(why) => c.fail(why, &FamilySpec::Pineapple { n, g: 3 }.build()?),
            None => c.pass(format!("strictly falling from {top} (triangle) to {bottom} (girth {})", n - 1)),
        });
    }
    Ok(out)
}

fn thm_main_thm3(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for n in opts.span(4..=9) {
        let all = merged(&*unicyclic_census(n, false, opts)?);
        let spec = FamilySpec::Pineapple { n, g: 3 };
        let want = spec.expected_core_index();
        out.push(compare(check("thm-main-thm3", &[("n", &n)]), &all, Side::Max, &[spec], want, true)?);
    }
    Ok(out)
}

fn thm_main_thm5(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for n in opts.span(5..=100) {
        let nu = n as u64;
        let c = check("thm-main-thm5", &[("n", &n)]);
        let values: Vec<Count> = (3..nu).map(|g| closed_forms::lollipop(nu, g)).collect::<Result<_>>()?;
        let peak = closed_forms::lollipop_peak_threshold(nu)? as usize + 1;
        let at = |g: usize| &values[g - 3];
        let rising = (3..peak.min(n - 1)).all(|g| at(g) < at(g + 1));
        let falling = (peak..n - 1).all(|g| at(g) > at(g + 1));
        let bottom_unique = (4..n).all(|g| at(3) < at(g));
        let gap = at(n - 1).clone() - at(3);
        let mut failure = None;
        if peak >= n {
            failure = Some(format!("predicted peak {peak} is not a valid girth"));
        } else if !rising || !falling {
            failure = Some(format!("not strictly unimodal with peak at girth {peak}"));
        } else if !bottom_unique {
            failure = Some("triangle lollipop is not the unique minimum".into());
        } else if gap != big((nu - 3) * (nu - 4)) {
            failure = Some(format!("end gap {gap} differs from (n-3)(n-4)"));
        } else if n <= 9 {
            for g in 3..n {
                let spec = FamilySpec::Lollipop { n, g };
                if core_index(&spec.build()?) != *at(g) {
                    failure = Some(format!("{spec} engine value differs from its formula"));
                    break;
                }
            }
        }
        out.push(match failure {
            Some(why) => c.fail(why, &FamilySpec::Lollipop { n, g: 3 }.build()?),
            None => c.pass(format!("peak at girth {peak} with F = {}, minimum {} at the triangle", at(peak), at(3))),
        });
    }
    Ok(out)
}

fn thm_main_thm6(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for n in opts.span(4..=9) {
        let all = merged(&*unicyclic_census(n, false, opts)?);
        let expected = match n {
            ..=5 => vec![FamilySpec::Cycle { n }],
            6 => vec![FamilySpec::Cycle { n }, FamilySpec::Lollipop { n, g: 3 }],
            _ => vec![FamilySpec::Lollipop { n, g: 3 }],
        };
        let want = expected[0].expected_core_index();
        out.push(compare(check("thm-main-thm6", &[("n", &n)]), &all, Side::Min, &expected, want, true)?);
    }
    Ok(out)
}

fn wiener_girth(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for n in opts.span(4..=9) {
        let by_girth = unicyclic_census(n, true, opts)?;
        for g in 3..n {
            let ex = &by_girth[&g];
            for (side, spec) in [
                (Side::Min, FamilySpec::Pineapple { n, g }),
                (Side::Max, FamilySpec::Lollipop { n, g }),
            ] {
                let c = check("wiener-girth", &[("n", &n), ("g", &g), ("side", &side.name())]);
                out.push(compare(c, ex, side, &[spec], None, false)?);
            }
        }
    }
    Ok(out)
}

fn wiener_unicyclic(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for n in opts.span(4..=9) {
        let all = merged(&*unicyclic_census(n, true, opts)?);
        let mut low = vec![FamilySpec::Pineapple { n, g: 3 }];
        if n <= 5 {
            low.push(FamilySpec::Cycle { n });
        }
        let mut high = vec![FamilySpec::Lollipop { n, g: 3 }];
        if n == 4 {
            high.push(FamilySpec::Cycle { n });
        }
        for (side, specs) in [(Side::Min, low), (Side::Max, high)] {
            let c = check("wiener-unicyclic", &[("n", &n), ("side", &side.name())]);
            out.push(compare(c, &all, side, &specs, None, false)?);
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Pendant vertices
// ---------------------------------------------------------------------------

fn thm_pmax_thm1(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for n in opts.span(4..=7) {
        let buckets = connected_census(n, opts)?;
        for k in opts.ks(0..=n - 3) {
            if k + 3 > n {
                continue;
            }
            let spec = FamilySpec::CompleteWithPendants { n, k };
            let want = spec.expected_core_index();
            let c = check("thm-pmax-thm1", &[("n", &n), ("k", &k)]);
            out.push(compare(c, &buckets[&Slot::Pendants(k)], Side::Max, &[spec], want, true)?);
        }
    }
    Ok(out)
}

fn thm_pmax_thm2(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    // with n - 2 pendants only two vertices remain, so every member is a tree
    let mut out = Vec::new();
    for n in opts.tree_span(4..=9) {
        let buckets = tree_census(n, opts)?;
        let spec = FamilySpec::lopsided_broom(n)?;
        let want = Some(closed_forms::double_broom_lopsided(n as u64)?);
        let c = check("thm-pmax-thm2", &[("n", &n)]);
        out.push(compare(c, &buckets[&(n - 2)], Side::Max, &[spec], want, true)?);
    }
    Ok(out)
}

fn thm_pmax_thm3(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for n in opts.tree_span(5..=9) {
        let buckets = tree_census(n, opts)?;
        for k in opts.ks(2..=n - 3) {
            if k < 2 || k + 3 > n {
                continue;
            }
            let spec = FamilySpec::BalancedSpider { n, k };
            let want = Some(closed_forms::balanced_spider(n as u64, k as u64)?);
            let c = check("thm-pmax-thm3", &[("n", &n), ("k", &k)]);
            out.push(compare(c, &buckets[&k], Side::Max, &[spec], want, true)?);
        }
    }
    Ok(out)
}

fn broom_min(id: &'static str, opts: &VerifyOptions, n: usize, buckets: &BTreeMap<usize, &Extremes>) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for k in opts.ks(2..=n - 2) {
        if k < 2 || k + 2 > n {
            continue;
        }
        let spec = FamilySpec::balanced_broom(n, k)?;
        let want = Some(closed_forms::balanced_double_broom(n as u64, k as u64)?);
        let c = check(id, &[("n", &n), ("k", &k)]);
        out.push(compare(c, buckets[&k], Side::Min, &[spec], want, true)?);
    }
    Ok(out)
}

fn thm_pmax_thm4(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for n in opts.tree_span(4..=9) {
        let census = tree_census(n, opts)?;
        let buckets = census.iter().map(|(k, e)| (*k, e)).collect();
        out.extend(broom_min("thm-pmax-thm4", opts, n, &buckets)?);
    }
    Ok(out)
}

fn thm_pmax_thm5(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for n in opts.span(4..=7) {
        let census = connected_census(n, opts)?;
        let buckets = census
            .iter()
            .filter_map(|(slot, e)| match slot {
                Slot::Pendants(k) => Some((*k, e)),
                Slot::TwoConnected => None,
            })
            .collect();
        out.extend(broom_min("thm-pmax-thm5", opts, n, &buckets)?);
    }
    Ok(out)
}

fn thm_pmax_thm6(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for n in opts.span(4..=7) {
        let buckets = connected_census(n, opts)?;
        let spec = FamilySpec::Lollipop { n, g: 3 };
        let want = spec.expected_core_index();
        let c = check("thm-pmax-thm6", &[("n", &n)]);
        out.push(compare(c, &buckets[&Slot::Pendants(1)], Side::Min, &[spec], want, true)?);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Pendant-free graphs
// ---------------------------------------------------------------------------

fn lemma_3cycles(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for n in opts.span(6..=30) {
        let nu = n as u64;
        let c = check("lemma-3cycles", &[("n", &n)]);
        let cyc = closed_forms::cycle(nu)?;
        let two = closed_forms::dumbbell(3, 3, nu)?;
        let spec = FamilySpec::Dumbbell { m1: 3, m2: 3, n };
        let g = spec.build()?;
        let cycle_smaller = cyc < two;
        let mut failure = None;
        if cycle_smaller != (n <= 16) {
            failure = Some(format!("cycle {cyc} vs two triangles {two}: comparison flips at the wrong order"));
        } else if n >= 7 && two != big((nu * nu + 17 * nu) / 2) {
            failure = Some(format!("two triangles give {two}, not (n^2 + 17n)/2"));
        } else if n <= 12 && core_index(&g) != two {
            failure = Some(format!("engine gives {} for two triangles, formula {two}", core_index(&g)));
        }
        out.push(match failure {
            Some(why) => c.fail(why, &g),
            None => c.pass(format!(
                "cycle {cyc}, two triangles {two}: the cycle is {}",
                if cycle_smaller { "smaller" } else { "larger" }
            )),
        });
    }
    Ok(out)
}

fn lemma_twocycles(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for n in opts.span(5..=15) {
        let nu = n as u64;
        for m1 in 3..=n.div_ceil(2) {
            let m2 = n + 1 - m1;
            let c = check("lemma-twocycles", &[("n", &n), ("m1", &m1), ("m2", &m2)]);
            let spec = FamilySpec::Dumbbell { m1, m2, n };
            let g = spec.build()?;
            let shared = closed_forms::two_cycles_shared(m1 as u64, m2 as u64)?;
            let cyc = closed_forms::cycle(nu)?;
            out.push(if shared <= cyc {
                c.fail(format!("shared cycles {shared} do not beat the cycle {cyc}"), &g)
            } else if n <= 12 && core_index(&g) != shared {
                c.fail(format!("engine {} differs from formula {shared}", core_index(&g)), &g)
            } else {
                c.pass(format!("{shared} > {cyc}"))
            });
        }
    }
    Ok(out)
}

fn cor_ctwo(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for n in opts.span(5..=7) {
        opts.guard.check("cor-ctwo", n, crate::families::GRAPH_GUARD)?;
        for m1 in 3..=n.div_ceil(2) {
            let m2 = n + 1 - m1;
            let c = check("cor-ctwo", &[("n", &n), ("m1", &m1), ("m2", &m2)]);
            let base = FamilySpec::Dumbbell { m1, m2, n }.build()?;
            let missing: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|&(u, v)| !base.has_edge(u, v))
                .collect();
            let floor = big((n * n + 1) as u64);
            let bad = (0u64..1 << missing.len()).into_par_iter().find_first(|&mask| {
                let mut g = base.clone();
                for (i, &(u, v)) in missing.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        g.set_edge(u, v);
                    }
                }
                core_index(&g) <= floor
            });
            out.push(match bad {
                Some(mask) => {
                    let mut g = base.clone();
                    for (i, &(u, v)) in missing.iter().enumerate() {
                        if mask >> i & 1 == 1 {
                            g.set_edge(u, v);
                        }
                    }
                    c.fail("a supergraph does not beat the cycle", &g)
                }
                None => c.pass(format!("all {} supergraphs exceed {floor}", 1u64 << missing.len())),
            });
        }
    }
    Ok(out)
}

fn lemma_24(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for n in opts.span(4..=12) {
        let c = check("lemma-24", &[("n", &n)]);
        let mut bad = None;
        for g in 3..n {
            let lol = FamilySpec::Lollipop { n, g }.build()?;
            let f: Vec<Count> = (0..n).map(|v| count_containing_vertex(&lol, v)).collect::<Result<_>>()?;
            if (0..n - 1).any(|v| f[v] <= f[n - 1]) {
                bad = Some(lol);
                break;
            }
        }
        out.push(match bad {
            Some(lol) => c.fail("some non-pendant vertex lies in no more subgraphs than the tail end", &lol),
            None => c.pass(format!("tail end is strictly least for every girth 3..{}", n - 1)),
        });
    }
    Ok(out)
}

/// `table[S]` tells whether the subgraph induced on `S` has a Hamiltonian
/// cycle (sets of fewer than three vertices never do).
fn hamiltonian_sets(g: &Graph) -> Vec<bool> {
    let n = g.n();
    let full = 1usize << n;
    // reach[S][v]: a path from min(S) through all of S ending at v
    let mut reach = vec![0u64; full];
    let mut out = vec![false; full];
    for s in 1..full {
        let low = s.trailing_zeros() as usize;
        if s == 1 << low {
            reach[s] = 1 << low;
            continue;
        }
        let mut ends = 0u64;
        for v in 0..n {
            if v == low || s >> v & 1 == 0 {
                continue;
            }
            let prev = reach[s & !(1 << v)];
            if prev & g.neighbors(v).bits() != 0 {
                ends |= 1 << v;
            }
        }
        reach[s] = ends;
        out[s] = s.count_ones() >= 3 && ends & g.neighbors(low).bits() != 0;
    }
    out
}

/// Two cycles meeting in one vertex and covering every vertex.
fn has_spanning_shared_cycles(g: &Graph) -> bool {
    let n = g.n();
    let ham = hamiltonian_sets(g);
    let all = (1usize << n) - 1;
    (0..n).any(|w| {
        let rest = all & !(1 << w);
        // enumerate subsets `a` of `rest` containing its least vertex
        let anchor = rest & rest.wrapping_neg();
        let mut a = rest;
        loop {
            if a & anchor != 0 {
                let b = rest & !a;
                if a.count_ones() >= 2 && b.count_ones() >= 2 && ham[a | 1 << w] && ham[b | 1 << w] {
                    return true;
                }
            }
            if a == 0 {
                return false;
            }
            a = (a - 1) & rest;
        }
    })
}

fn thm_mainp_1(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for n in opts.span(6..=7) {
        let c = check("thm-mainp-1", &[("n", &n)]);
        let source = GraphClass::PendantFree.source(n, opts.guard)?;
        let found = census(
            &source,
            |g| {
                if !g.cut_vertices().is_empty() && !has_spanning_shared_cycles(g) {
                    vec![()]
                } else {
                    vec![]
                }
            },
            scan_value,
            opts.workers,
        )?;
        let Some(ex) = found.get(&()) else {
            out.push(c.pass("class is empty"));
            continue;
        };
        let want = closed_forms::dumbbell(3, 3, n as u64)?;
        out.push(compare(c, ex, Side::Min, &[FamilySpec::Dumbbell { m1: 3, m2: 3, n }], Some(want), true)?);
    }
    Ok(out)
}

fn cor_c33(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for n in opts.span(6..=30) {
        let nu = n as u64;
        let c = check("cor-c33", &[("n", &n)]);
        let base = closed_forms::dumbbell(3, 3, nu)?;
        let mut failure = None;
        'pairs: for m1 in 3..=n {
            for m2 in m1..=n - m1 {
                let spec = FamilySpec::Dumbbell { m1, m2, n };
                let v = closed_forms::dumbbell(m1 as u64, m2 as u64, nu)?;
                if (v == base) != (m1 == 3 && m2 == 3) || v < base {
                    failure = Some((format!("{spec} gives {v} against {base}"), spec));
                    break 'pairs;
                }
                if n <= 10 && core_index(&spec.build()?) != v {
                    failure = Some((format!("{spec} engine differs from formula {v}"), spec));
                    break 'pairs;
                }
            }
        }
        out.push(match failure {
            Some((why, spec)) => c.fail(why, &spec.build()?),
            None => c.pass(format!("two triangles give the unique least value {base}")),
        });
    }
    Ok(out)
}

fn thm_mainp_2(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for n in opts.span(5..=7) {
        let buckets = connected_census(n, opts)?;
        let spec = FamilySpec::Cycle { n };
        let want = spec.expected_core_index();
        let c = check("thm-mainp-2", &[("n", &n)]);
        out.push(compare(c, &buckets[&Slot::TwoConnected], Side::Min, &[spec], want, true)?);
    }
    Ok(out)
}

fn thm_mlast(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for n in opts.span(4..=7) {
        let buckets = connected_census(n, opts)?;
        let nu = n as u64;
        let want = big(nu * nu + 1).min(big((nu * nu + 17 * nu) / 2));
        let expected = if n <= 16 {
            FamilySpec::Cycle { n }
        } else {
            FamilySpec::Dumbbell { m1: 3, m2: 3, n }
        };
        let c = check("thm-mlast", &[("n", &n)]);
        out.push(compare(c, &buckets[&Slot::Pendants(0)], Side::Min, &[expected], Some(want), true)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> VerifyOptions {
        VerifyOptions {
            n: Some(1..=6),
            cases: 30,
            ..VerifyOptions::default()
        }
    }

    fn all_pass(id: &str, opts: &VerifyOptions) {
        let results = verify_theorem(id, opts).unwrap();
        assert!(!results.is_empty(), "{id} produced nothing");
        for r in results {
            assert!(r.passed, "{}", r.to_json());
            assert!(r.counterexample.is_none());
        }
    }

    #[test]
    fn ids_unique() {
        let ids: BTreeSet<_> = theorem_ids().collect();
        assert_eq!(ids.len(), THEOREMS.len());
        assert!(matches!(verify_theorem("nope", &small()), Err(Error::UnknownTheorem(_))));
    }

    #[test]
    fn shape_of_lollipop() {
        let g = FamilySpec::Lollipop { n: 7, g: 4 }.build().unwrap();
        let (cycle, sizes) = unicyclic_shape(&g);
        assert_eq!(cycle.len(), 4);
        assert_eq!(sizes.iter().sum::<usize>(), 3);
        let p = FamilySpec::Pineapple { n: 6, g: 3 }.build().unwrap();
        assert_eq!(unicyclic_shape(&p).1, vec![3, 0, 0]);
    }

    #[test]
    fn shared_cycles_detected() {
        let bowtie = FamilySpec::Dumbbell { m1: 3, m2: 3, n: 5 }.build().unwrap();
        assert!(has_spanning_shared_cycles(&bowtie));
        let joined = FamilySpec::Dumbbell { m1: 3, m2: 3, n: 6 }.build().unwrap();
        assert!(!has_spanning_shared_cycles(&joined));
        assert!(!has_spanning_shared_cycles(&FamilySpec::Cycle { n: 6 }.build().unwrap()));
        let k5 = FamilySpec::Complete { n: 5 }.build().unwrap();
        assert!(has_spanning_shared_cycles(&k5));
    }

    #[test]
    fn hamiltonian_table() {
        let c5 = FamilySpec::Cycle { n: 5 }.build().unwrap();
        let ham = hamiltonian_sets(&c5);
        assert!(ham[0b11111]);
        assert!(!ham[0b01111]);
        let k4 = FamilySpec::Complete { n: 4 }.build().unwrap();
        assert!(hamiltonian_sets(&k4)[0b0111]);
    }

    #[test]
    fn small_checks_pass() {
        for id in [
            "engines",
            "h-sequence",
            "closed-forms",
            "thm-tree-F",
            "lemma-concave",
            "thm-score",
            "thm-con-F",
            "prop-edge-monotone",
            "thm-con-T1",
            "thm-con-T2",
            "thm-con-T3",
            "lemma-cycle-F",
            "lemma-ucyclic1",
            "thm-main-thm1",
            "thm-main-thm4",
            "thm-main-thm6",
            "wiener-girth",
            "wiener-unicyclic",
            "thm-pmax-thm1",
            "thm-pmax-thm4",
            "thm-pmax-thm5",
            "thm-pmax-thm6",
            "thm-mainp-1",
            "thm-mainp-2",
            "thm-mlast",
            "lemma-24",
        ] {
            all_pass(id, &small());
        }
    }

    #[test]
    fn closed_form_checks_pass() {
        let opts = VerifyOptions::default();
        for id in ["lemma-con-l1", "lemma-con-l2", "lemma-con-l3", "thm-main-thm2", "thm-main-thm5", "lemma-3cycles", "lemma-twocycles", "cor-c33"] {
            all_pass(id, &opts);
        }
    }

    #[test]
    fn crossover_reported() {
        let opts = VerifyOptions {
            n: Some(16..=17),
            ..VerifyOptions::default()
        };
        let r = verify_theorem("lemma-3cycles", &opts).unwrap();
        assert!(r[0].detail.contains("smaller") && r[1].detail.contains("larger"));
        assert!(r[1].detail.contains("289") && r[1].detail.contains("290"));
    }

    #[test]
    fn campaigns_small() {
        let opts = VerifyOptions {
            n: Some(1..=7),
            cases: 25,
            ..VerifyOptions::default()
        };
        for id in ["lemma-effect-1", "lemma-effect-2", "lemma-effect-3", "lemma-effect-4", "lemma-effect-5", "lemma-3uni1", "lemma-3uni2"] {
            all_pass(id, &opts);
        }
    }

    #[test]
    fn failed_compare_carries_counterexample() {
        let ex = class_extremes(GraphClass::Trees, 5, &VerifyOptions::default()).unwrap().unwrap();
        let r = compare(check("demo", &[]), &ex, Side::Max, &[FamilySpec::Path { n: 5 }], None, true).unwrap();
        assert!(!r.passed);
        let ce = r.counterexample.unwrap();
        let g = crate::format::from_graph6(&ce.graph6).unwrap();
        assert_eq!(core_index(&g), ce.core_index);
    }
}
