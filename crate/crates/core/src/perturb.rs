//! Local graph moves with a proven effect on the core index.
//!
//! Each move takes a base graph plus parameters, checks its preconditions by
//! counting (never trusting the caller), and returns both graphs together
//! with their core indices and the gap the move is known to produce. The
//! randomized [`campaign`] runs a move on many precondition-satisfying inputs
//! and keeps every case whose gap disagrees.
//!
//! | move | direction | gap |
//! |------|-----------|-----|
//! | contract a bridge, pendant at the merged vertex | up | exact |
//! | contract a bridge, pendant elsewhere | up | exact |
//! | graft the end edge of the shorter of two hanging paths | down | exact |
//! | move all pendants to the busier vertex | up | positive |
//! | merge two hanging paths into one | down | lower bound |
//! | glue a lollipop by its tail end instead of elsewhere | down | exact |
//! | glue by a lollipop tail with a triangle instead of a long cycle | down | lower bound |

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::count::{core_index, count_containing, count_containing_vertex, Count};
use crate::error::{Error, Result};
use crate::families::{tree_from_prufer, FamilySpec};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Perturbation {
    ContractBridge,
    ContractBridgePendantAt,
    GraftEdge,
    MovePendants,
    MergePaths,
    ReattachLollipop,
    ShrinkLollipopCycle,
}

impl Perturbation {
    pub const ALL: [Perturbation; 7] = [
        Perturbation::ContractBridge,
        Perturbation::ContractBridgePendantAt,
        Perturbation::GraftEdge,
        Perturbation::MovePendants,
        Perturbation::MergePaths,
        Perturbation::ReattachLollipop,
        Perturbation::ShrinkLollipopCycle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Perturbation::ContractBridge => "contract-bridge",
            Perturbation::ContractBridgePendantAt => "contract-bridge-pendant-at",
            Perturbation::GraftEdge => "graft-edge",
            Perturbation::MovePendants => "move-pendants",
            Perturbation::MergePaths => "merge-paths",
            Perturbation::ReattachLollipop => "reattach-lollipop",
            Perturbation::ShrinkLollipopCycle => "shrink-lollipop-cycle",
        }
    }

    /// Whether the move raises the core index.
    pub fn increases(self) -> bool {
        matches!(
            self,
            Perturbation::ContractBridge | Perturbation::ContractBridgePendantAt | Perturbation::MovePendants
        )
    }
}

impl fmt::Display for Perturbation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Perturbation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Perturbation::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::parse(0, format!("unknown perturbation `{s}`")))
    }
}

/// What the move guarantees about `|F(after) - F(before)|`, beyond its sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GapBound {
    Exact(Count),
    AtLeast(Count),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerturbationOutcome {
    pub perturbation: Perturbation,
    pub before: Graph,
    pub after: Graph,
    pub f_before: Count,
    pub f_after: Count,
    pub bound: GapBound,
}

impl PerturbationOutcome {
    fn new(perturbation: Perturbation, before: Graph, after: Graph, bound: GapBound) -> Self {
        let f_before = core_index(&before);
        let f_after = core_index(&after);
        PerturbationOutcome {
            perturbation,
            before,
            after,
            f_before,
            f_after,
            bound,
        }
    }

    /// The change in the promised direction, or `None` if it went the other
    /// way or not at all.
    pub fn gap(&self) -> Option<Count> {
        let (hi, lo) = if self.perturbation.increases() {
            (&self.f_after, &self.f_before)
        } else {
            (&self.f_before, &self.f_after)
        };
        (hi > lo).then(|| hi - lo)
    }

    /// Strict change in the promised direction, matching the bound.
    pub fn holds(&self) -> bool {
        match (self.gap(), &self.bound) {
            (Some(gap), GapBound::Exact(want)) => gap == *want,
            (Some(gap), GapBound::AtLeast(want)) => gap >= *want,
            (None, _) => false,
        }
    }
}

fn big(x: usize) -> Count {
    BigUint::from(x)
}

fn pair_count(g: &Graph, a: usize, b: usize) -> Result<Count> {
    if a == b {
        count_containing_vertex(g, a)
    } else {
        count_containing(g, [a, b].into_iter().collect())
    }
}

/// The two sides of a bridge: `(side of u, map to G ids, side of v, map)`.
fn bridge_sides(g: &Graph, u: usize, v: usize, lemma: &'static str) -> Result<(Graph, Vec<usize>, Graph, Vec<usize>)> {
    if !g.is_connected() {
        return Err(Error::precondition(lemma, "graph must be connected"));
    }
    if !g.has_edge(u, v) {
        return Err(Error::precondition(lemma, format!("{{{u}, {v}}} is not an edge")));
    }
    let cut = g.without_edge(u, v)?;
    let side_u = cut.component_of(u);
    if side_u.contains(v) {
        return Err(Error::precondition(lemma, format!("{{{u}, {v}}} is not a bridge")));
    }
    let (g1, map1) = cut.induced_subgraph(side_u);
    let (g2, map2) = cut.induced_subgraph(cut.component_of(v));
    Ok((g1, map1, g2, map2))
}

fn local(map: &[usize], v: usize) -> usize {
    map.iter().position(|&x| x == v).expect("vertex on this side")
}

/// Id of `x` after `identify_vertices(u, v)` returned merged id `w`.
fn after_merge(x: usize, v: usize, w: usize) -> usize {
    if x == v {
        w
    } else if x > v {
        x - 1
    } else {
        x
    }
}

/// Merges the ends of bridge `{u, v}` and hangs a new pendant on the merged
/// vertex. Neither end may be a pendant.
pub fn contract_bridge_add_pendant(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    let lemma = Perturbation::ContractBridge.name();
    bridge_sides(g, u, v, lemma)?;
    for end in [u, v] {
        if g.degree(end) == 1 {
            return Err(Error::precondition(lemma, format!("bridge end {end} is a pendant vertex")));
        }
    }
    let (merged, w) = g.identify_vertices(u, v)?;
    Ok(merged.add_pendant(w)?.0)
}

pub fn contract_bridge(g: &Graph, u: usize, v: usize) -> Result<PerturbationOutcome> {
    let after = contract_bridge_add_pendant(g, u, v)?;
    let (g1, m1, g2, m2) = bridge_sides(g, u, v, "")?;
    let fu = count_containing_vertex(&g1, local(&m1, u))?;
    let fv = count_containing_vertex(&g2, local(&m2, v))?;
    let gap = (fu - 1u32) * (fv - 1u32);
    Ok(PerturbationOutcome::new(
        Perturbation::ContractBridge,
        g.clone(),
        after,
        GapBound::Exact(gap),
    ))
}

/// Merges the ends of bridge `{u, v}` and hangs a new pendant on `x`, a
/// vertex on the side of `u`. Requires the `u` side to count no more
/// subgraphs through `u` than the `v` side does through `v`, and at least two
/// connected subgraphs of the `u` side through both `x` and `u`.
pub fn contract_bridge_pendant_at(g: &Graph, u: usize, v: usize, x: usize) -> Result<PerturbationOutcome> {
    let lemma = Perturbation::ContractBridgePendantAt.name();
    let (g1, m1, g2, m2) = bridge_sides(g, u, v, lemma)?;
    let (lu, lv) = (local(&m1, u), local(&m2, v));
    let Some(lx) = m1.iter().position(|&y| y == x) else {
        return Err(Error::precondition(lemma, format!("{x} is not on the side of {u}")));
    };
    let f1 = count_containing_vertex(&g1, lu)?;
    let f2 = count_containing_vertex(&g2, lv)?;
    if f1 > f2 {
        return Err(Error::precondition(
            lemma,
            format!("side of {u} counts {f1} subgraphs through it, more than {f2} through {v}"),
        ));
    }
    let fxu = pair_count(&g1, lx, lu)?;
    if fxu < big(2) {
        return Err(Error::precondition(
            lemma,
            format!("only {fxu} connected subgraph(s) of the side of {u} contain both {x} and {u}"),
        ));
    }
    let (merged, w) = g.identify_vertices(u, v)?;
    let (after, _) = merged.add_pendant(after_merge(x, v, w))?;
    let fx = count_containing_vertex(&g1, lx)?;
    // the pendant alone, with x on its side, or reaching across the merge
    let gained = fx + &fxu * (&f2 - 1u32) + 1u32;
    let lost = &f1 + &f2;
    let gap = gained - lost;
    Ok(PerturbationOutcome::new(
        Perturbation::ContractBridgePendantAt,
        g.clone(),
        after,
        GapBound::Exact(gap),
    ))
}

/// Hangs a new path of `len` edges on `v`; new vertices take the next ids in
/// order away from `v`.
pub fn attach_path(g: &Graph, v: usize, len: usize) -> Result<Graph> {
    let mut out = g.clone();
    let mut tip = v;
    for _ in 0..len {
        let (next, y) = out.add_pendant(tip)?;
        out = next;
        tip = y;
    }
    Ok(out)
}

pub fn attach_pendants(g: &Graph, v: usize, count: usize) -> Result<Graph> {
    let mut out = g.clone();
    for _ in 0..count {
        out = out.add_pendant(v)?.0;
    }
    Ok(out)
}

/// Paths hanging at `v`: each is the list of vertices from the neighbour of
/// `v` out to a pendant, through degree-2 vertices only.
pub fn hanging_paths(g: &Graph, v: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for first in g.neighbors(v).iter() {
        let mut arm = vec![first];
        let (mut prev, mut cur) = (v, first);
        loop {
            match g.degree(cur) {
                1 => {
                    out.push(arm);
                    break;
                }
                2 => {
                    let next = g.neighbors(cur).iter().find(|&y| y != prev).expect("degree two");
                    if next == v {
                        break;
                    }
                    arm.push(next);
                    prev = cur;
                    cur = next;
                }
                _ => break,
            }
        }
    }
    out
}

/// Given a graph with hanging paths of `k` and `l` edges at `v`, moves the
/// last edge of the `k` path onto the end of the `l` path. When several
/// hanging paths have the needed length they are interchangeable, and the
/// one with the smallest first vertex is used.
pub fn graft_edge(g: &Graph, v: usize, k: usize, l: usize) -> Result<Graph> {
    let lemma = Perturbation::GraftEdge.name();
    if k == 0 || k > l {
        return Err(Error::precondition(lemma, format!("need 1 <= k <= l, got k = {k}, l = {l}")));
    }
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let arms = hanging_paths(g, v);
    let p = arms
        .iter()
        .position(|a| a.len() == k)
        .ok_or_else(|| Error::precondition(lemma, format!("no hanging path of length {k} at {v}")))?;
    let q = arms
        .iter()
        .enumerate()
        .position(|(i, a)| i != p && a.len() == l)
        .ok_or_else(|| Error::precondition(lemma, format!("no second hanging path of length {l} at {v}")))?;
    if g.n() < k + l + 2 {
        return Err(Error::precondition(lemma, "the graph without the two paths must keep at least two vertices"));
    }
    let (p, q) = (&arms[p], &arms[q]);
    let before_tip = if k == 1 { v } else { p[k - 2] };
    let tip = p[k - 1];
    g.without_edge(before_tip, tip)?.with_edge(q[l - 1], tip)
}

pub fn grafting(base: &Graph, v: usize, k: usize, l: usize) -> Result<PerturbationOutcome> {
    let lemma = Perturbation::GraftEdge.name();
    if base.n() < 2 || !base.is_connected() {
        return Err(Error::precondition(lemma, "base graph must be connected with at least two vertices"));
    }
    let before = attach_path(&attach_path(base, v, k)?, v, l)?;
    let after = graft_edge(&before, v, k, l)?;
    let fv = count_containing_vertex(base, v)?;
    let gap = (fv - 1u32) * big(l - k + 1);
    Ok(PerturbationOutcome::new(Perturbation::GraftEdge, before, after, GapBound::Exact(gap)))
}

/// Compares `n1` pendants at `u` and `n2` at `v` with all `n1 + n2` at `u`,
/// where `u` lies in at least as many connected subgraphs as `v`.
pub fn move_pendants(base: &Graph, u: usize, v: usize, n1: usize, n2: usize) -> Result<PerturbationOutcome> {
    let lemma = Perturbation::MovePendants.name();
    if base.n() < 2 || !base.is_connected() {
        return Err(Error::precondition(lemma, "base graph must be connected with at least two vertices"));
    }
    if u == v {
        return Err(Error::precondition(lemma, "u and v must differ"));
    }
    if n1 == 0 || n2 == 0 {
        return Err(Error::precondition(lemma, format!("need n1, n2 >= 1, got {n1}, {n2}")));
    }
    let fu = count_containing_vertex(base, u)?;
    let fv = count_containing_vertex(base, v)?;
    if fu < fv {
        return Err(Error::precondition(
            lemma,
            format!("{u} lies in {fu} connected subgraphs, fewer than {fv} for {v}"),
        ));
    }
    let before = attach_pendants(&attach_pendants(base, u, n1)?, v, n2)?;
    let after = attach_pendants(base, u, n1 + n2)?;
    Ok(PerturbationOutcome::new(
        Perturbation::MovePendants,
        before,
        after,
        GapBound::AtLeast(BigUint::one()),
    ))
}

/// Compares paths of `l` and `k` vertices glued by an end at `u` and `v`
/// with a single path of `l + k - 1` vertices glued at `u`.
pub fn merge_paths(base: &Graph, u: usize, v: usize, l: usize, k: usize) -> Result<PerturbationOutcome> {
    let lemma = Perturbation::MergePaths.name();
    if base.n() < 3 || !base.is_connected() {
        return Err(Error::precondition(lemma, "base graph must be connected with at least three vertices"));
    }
    if u == v {
        return Err(Error::precondition(lemma, "u and v must differ"));
    }
    if l < 2 || k < 2 {
        return Err(Error::precondition(lemma, format!("need l, k >= 2, got l = {l}, k = {k}")));
    }
    let fuv = pair_count(base, u, v)?;
    if fuv < big(2) {
        return Err(Error::precondition(
            lemma,
            format!("only {fuv} connected subgraph(s) contain both {u} and {v}"),
        ));
    }
    let fu = count_containing_vertex(base, u)?;
    let fv = count_containing_vertex(base, v)?;
    if fu > fv {
        return Err(Error::precondition(
            lemma,
            format!("{u} lies in {fu} connected subgraphs, more than {fv} for {v}"),
        ));
    }
    let before = attach_path(&attach_path(base, u, l - 1)?, v, k - 1)?;
    let after = attach_path(base, u, l + k - 2)?;
    let bound = (fuv - 1u32) * big((l - 1) * (k - 1));
    Ok(PerturbationOutcome::new(Perturbation::MergePaths, before, after, GapBound::AtLeast(bound)))
}

/// Glues vertex `u` of `g` to vertex `w` of `h`; `h`'s other vertices follow
/// `g`'s in order.
pub fn glue(g: &Graph, u: usize, h: &Graph, w: usize) -> Result<Graph> {
    if w >= h.n() {
        return Err(Error::VertexOutOfRange { vertex: w, n: h.n() });
    }
    let joined = g.disjoint_union(h)?;
    Ok(joined.identify_vertices(u, g.n() + w)?.0)
}

/// Compares gluing `u` to a non-pendant vertex `w` of the lollipop with
/// `order` vertices and cycle length `girth`, against gluing `u` to the end
/// of its tail.
pub fn reattach_lollipop(base: &Graph, u: usize, order: usize, girth: usize, w: usize) -> Result<PerturbationOutcome> {
    let lemma = Perturbation::ReattachLollipop.name();
    if base.n() < 2 || !base.is_connected() {
        return Err(Error::precondition(lemma, "base graph must be connected with at least two vertices"));
    }
    if u >= base.n() {
        return Err(Error::VertexOutOfRange { vertex: u, n: base.n() });
    }
    let lollipop = FamilySpec::Lollipop { n: order, g: girth }.build()?;
    let tail_end = order - 1;
    if w >= order || w == tail_end {
        return Err(Error::precondition(lemma, format!("{w} is not a non-pendant vertex of the lollipop")));
    }
    let before = glue(base, u, &lollipop, w)?;
    let after = glue(base, u, &lollipop, tail_end)?;
    let fu = count_containing_vertex(base, u)?;
    let fw = count_containing_vertex(&lollipop, w)?;
    let ft = count_containing_vertex(&lollipop, tail_end)?;
    if fw <= ft {
        // the lollipop comparison itself failed; report it through the gap
        return Ok(PerturbationOutcome::new(
            Perturbation::ReattachLollipop,
            before,
            after,
            GapBound::AtLeast(BigUint::zero()),
        ));
    }
    let gap = (fu - 1u32) * (fw - ft);
    Ok(PerturbationOutcome::new(Perturbation::ReattachLollipop, before, after, GapBound::Exact(gap)))
}

/// Compares gluing `u` to the tail end of the lollipop with `m + 1` vertices
/// and cycle length `m` against the one with a triangle, for `m >= 4`.
pub fn shrink_lollipop_cycle(base: &Graph, u: usize, m: usize) -> Result<PerturbationOutcome> {
    let lemma = Perturbation::ShrinkLollipopCycle.name();
    if base.n() < 1 || !base.is_connected() {
        return Err(Error::precondition(lemma, "base graph must be connected"));
    }
    if m < 4 {
        return Err(Error::precondition(lemma, format!("need m >= 4, got {m}")));
    }
    if u >= base.n() {
        return Err(Error::VertexOutOfRange { vertex: u, n: base.n() });
    }
    let long = FamilySpec::Lollipop { n: m + 1, g: m }.build()?;
    let short = FamilySpec::Lollipop { n: m + 1, g: 3 }.build()?;
    let before = glue(base, u, &long, m)?;
    let after = glue(base, u, &short, m)?;
    let fu = count_containing_vertex(base, u)?;
    let slack = big(m - 4 + (m - 1) * (m - 2) / 2);
    let bound = (fu - 1u32) * slack + 1u32;
    Ok(PerturbationOutcome::new(
        Perturbation::ShrinkLollipopCycle,
        before,
        after,
        GapBound::AtLeast(bound),
    ))
}

// ---------------------------------------------------------------------------
// Randomized campaigns
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct CampaignReport {
    pub perturbation: Perturbation,
    pub seed: u64,
    pub cases: usize,
    /// Samples discarded because a precondition failed.
    pub rejected: u64,
    /// Largest graph order seen on either side.
    pub max_order: usize,
    pub failures: Vec<PerturbationOutcome>,
}

impl CampaignReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

const MAX_ATTEMPTS: u64 = 100_000;

/// Runs `cases` precondition-satisfying instances of `p` with every graph of
/// order at most `max_n`. Case `i` draws from its own stream of the root
/// seed, so results do not depend on the thread count.
pub fn campaign(p: Perturbation, cases: usize, seed: u64, max_n: usize) -> Result<CampaignReport> {
    let min_n = match p {
        Perturbation::ShrinkLollipopCycle => 5,
        Perturbation::ReattachLollipop => 5,
        Perturbation::MergePaths => 5,
        _ => 4,
    };
    if max_n < min_n || max_n > 16 {
        return Err(Error::invalid("campaign", format!("max_n must lie in {min_n}..=16 for {p}")));
    }
    let results: Vec<(u64, PerturbationOutcome)> = (0..cases)
        .into_par_iter()
        .map(|case| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(case as u64);
            let mut rejected = 0;
            loop {
                match sample(p, &mut rng, max_n) {
                    Ok(out) => return Ok((rejected, out)),
                    Err(Error::Precondition { .. }) if rejected < MAX_ATTEMPTS => rejected += 1,
                    Err(e) => return Err(e),
                }
            }
        })
        .collect::<Result<_>>()?;
    let mut report = CampaignReport {
        perturbation: p,
        seed,
        cases,
        rejected: 0,
        max_order: 0,
        failures: Vec::new(),
    };
    for (rejected, out) in results {
        report.rejected += rejected;
        report.max_order = report.max_order.max(out.before.n()).max(out.after.n());
        if !out.holds() {
            report.failures.push(out);
        }
    }
    Ok(report)
}

/// Uniform labeled tree plus each remaining pair with a random density.
pub fn random_connected(rng: &mut impl Rng, n: usize) -> Graph {
    let seq: Vec<usize> = (0..n.saturating_sub(2)).map(|_| rng.gen_range(0..n)).collect();
    let mut g = tree_from_prufer(n, &seq);
    let density: f64 = rng.gen_range(0.0..0.5);
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && rng.gen_bool(density) {
                g.set_edge(u, v);
            }
        }
    }
    g
}

fn pick(rng: &mut impl Rng, set: VertexSet) -> Option<usize> {
    set.to_vec().choose(rng).copied()
}

fn sample(p: Perturbation, rng: &mut ChaCha8Rng, max_n: usize) -> Result<PerturbationOutcome> {
    let reject = |msg: &str| Error::precondition(p.name(), msg.to_string());
    match p {
        Perturbation::ContractBridge | Perturbation::ContractBridgePendantAt => {
            let n = rng.gen_range(4..=max_n);
            let g = random_connected(rng, n);
            let bridges = g.bridges();
            let &(a, b) = bridges.choose(rng).ok_or_else(|| reject("no bridge"))?;
            let (u, v) = if rng.gen_bool(0.5) { (a, b) } else { (b, a) };
            if p == Perturbation::ContractBridge {
                return contract_bridge(&g, u, v);
            }
            let side = g.without_edge(u, v)?.component_of(u);
            let x = pick(rng, side).expect("side holds u");
            contract_bridge_pendant_at(&g, u, v, x)
        }
        Perturbation::GraftEdge => {
            let n = rng.gen_range(2..=max_n - 2);
            let g = random_connected(rng, n);
            let v = rng.gen_range(0..n);
            let k = rng.gen_range(1..=(max_n - n) / 2);
            let l = rng.gen_range(k..=max_n - n - k);
            grafting(&g, v, k, l)
        }
        Perturbation::MovePendants => {
            let n = rng.gen_range(2..=max_n - 2);
            let g = random_connected(rng, n);
            let mut u = rng.gen_range(0..n);
            let mut v = rng.gen_range(0..n);
            if count_containing_vertex(&g, u)? < count_containing_vertex(&g, v)? {
                std::mem::swap(&mut u, &mut v);
            }
            let n1 = rng.gen_range(1..=max_n - n - 1);
            let n2 = rng.gen_range(1..=max_n - n - n1);
            move_pendants(&g, u, v, n1, n2)
        }
        Perturbation::MergePaths => {
            let n = rng.gen_range(3..=max_n - 2);
            let g = random_connected(rng, n);
            let mut u = rng.gen_range(0..n);
            let mut v = rng.gen_range(0..n);
            if count_containing_vertex(&g, u)? > count_containing_vertex(&g, v)? {
                std::mem::swap(&mut u, &mut v);
            }
            let extra = max_n - n;
            let l = rng.gen_range(2..=extra);
            let k = rng.gen_range(2..=extra + 2 - l);
            merge_paths(&g, u, v, l, k)
        }
        Perturbation::ReattachLollipop => {
            let order = rng.gen_range(4..=max_n - 1);
            let girth = rng.gen_range(3..order);
            let n = rng.gen_range(2..=max_n + 1 - order);
            let g = random_connected(rng, n);
            let u = rng.gen_range(0..n);
            let w = rng.gen_range(0..order - 1);
            reattach_lollipop(&g, u, order, girth, w)
        }
        Perturbation::ShrinkLollipopCycle => {
            let m = rng.gen_range(4..=max_n - 1);
            let n = rng.gen_range(1..=max_n - m);
            let g = random_connected(rng, n);
            let u = rng.gen_range(0..n);
            shrink_lollipop_cycle(&g, u, m)
        }
    }
}
