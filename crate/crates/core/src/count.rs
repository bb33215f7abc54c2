//! Exact counting of connected subgraphs.
//!
//! A *connected subgraph* is a pair (vertex set, edge set) that is connected
//! as a graph in its own right; single vertices count, and the edge set need
//! not be induced. `F(G)` is the number of them and `f_G(S)` the number whose
//! vertex set contains `S`. Counting induced subgraphs instead would give a
//! different (and wrong) sequence: `F(C_n) = n^2 + 1` and `F(K_n) = sum
//! C(n,i) h_i` only hold for the edge-subset definition.
//!
//! Three engines compute `F`:
//!
//! * [`core_index_bruteforce`] enumerates every edge subset. A nonempty edge
//!   subset spans exactly one connected subgraph when its edges form a
//!   connected graph, and the empty subset contributes the `n` single
//!   vertices.
//! * [`core_index`] decomposes each component into blocks (maximal
//!   2-connected pieces and bridges) and runs a product DP over the rooted
//!   block-cut tree. Inside a block it sums vertex-weighted connected spanning
//!   counts over all vertex subsets.
//! * [`tree_core_index`] is the classical subtree DP for forests.

use num_bigint::BigUint;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Zero};

use crate::error::{Error, Guard, Result};
use crate::graph::{Graph, VertexSet};

/// Exact nonnegative count.
pub type Count = BigUint;

pub const BRUTEFORCE_GUARD: usize = 10;
pub const CONTAINING_GUARD: usize = 10;

/// Arithmetic used by the engines. Machine integers are tried first and the
/// computation is redone with big integers if anything overflows.
pub(crate) trait Acc:
    Clone + Zero + One + CheckedAdd + CheckedMul + CheckedSub + From<u64> + Into<BigUint>
{
}

impl Acc for u128 {}
impl Acc for BigUint {}

fn add<T: Acc>(a: &T, b: &T) -> Option<T> {
    a.checked_add(b)
}

fn mul<T: Acc>(a: &T, b: &T) -> Option<T> {
    a.checked_mul(b)
}

/// Runs `u128` first and falls back to big integers on overflow.
macro_rules! with_fallback {
    ($call:ident ( $($arg:expr),* )) => {
        match $call::<u128>($($arg),*) {
            Some(v) => BigUint::from(v),
            None => $call::<BigUint>($($arg),*).expect("big integers never overflow"),
        }
    };
}

// ---------------------------------------------------------------------------
// Brute force
// ---------------------------------------------------------------------------

/// `F(G)` by enumerating all `2^m` edge subsets. Guarded at `n <= 10`.
pub fn core_index_bruteforce(g: &Graph) -> Result<Count> {
    core_index_bruteforce_with(g, Guard::Enforced)
}

pub fn core_index_bruteforce_with(g: &Graph, guard: Guard) -> Result<Count> {
    guard.check("core_index_bruteforce", g.n(), BRUTEFORCE_GUARD)?;
    let edges = g.edges();
    let m = edges.len();
    if m >= 64 {
        return Err(Error::SizeGuard {
            operation: "core_index_bruteforce (edge count)",
            n: m,
            limit: 63,
        });
    }
    let mut total: u128 = g.n() as u128;
    let mut local = vec![0u64; g.n()];
    for mask in 1u64..(1u64 << m) {
        if edge_subset_connected(&edges, mask, &mut local) {
            total += 1;
        }
    }
    Ok(Count::from(total))
}

/// Whether the edges selected by `mask` form a connected graph on their
/// endpoints. `scratch` must have one slot per vertex.
pub(crate) fn edge_subset_connected(edges: &[(usize, usize)], mask: u64, scratch: &mut [u64]) -> bool {
    let mut touched = 0u64;
    let mut bits = mask;
    while bits != 0 {
        let i = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let (u, v) = edges[i];
        if touched >> u & 1 == 0 {
            scratch[u] = 0;
        }
        if touched >> v & 1 == 0 {
            scratch[v] = 0;
        }
        touched |= 1 << u | 1 << v;
        scratch[u] |= 1 << v;
        scratch[v] |= 1 << u;
    }
    let start = touched.trailing_zeros() as usize;
    crate::graph::reach(scratch, start, touched).bits() == touched
}

// ---------------------------------------------------------------------------
// Connected spanning subgraphs
// ---------------------------------------------------------------------------

/// Number of edge subsets `E'` with `(V, E')` connected, by deletion and
/// contraction on a multigraph copy. `0` for disconnected graphs, `1` for a
/// single vertex.
pub fn connected_spanning_count(g: &Graph) -> Count {
    if g.n() == 0 {
        return Count::zero();
    }
    let mut mg = MultiGraph::from_graph(g);
    with_fallback!(dc_count(&mut mg))
}

#[derive(Clone)]
struct MultiGraph {
    alive: Vec<usize>,
    mult: Vec<Vec<u32>>,
}

impl MultiGraph {
    fn from_graph(g: &Graph) -> Self {
        let n = g.n();
        let mut mult = vec![vec![0u32; n]; n];
        for (u, v) in g.edges() {
            mult[u][v] = 1;
            mult[v][u] = 1;
        }
        MultiGraph {
            alive: (0..n).collect(),
            mult,
        }
    }

    fn connected(&self) -> bool {
        let Some(&first) = self.alive.first() else {
            return true;
        };
        let mut seen = vec![false; self.mult.len()];
        seen[first] = true;
        let mut stack = vec![first];
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.alive {
                if !seen[w] && self.mult[u][w] > 0 {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.alive.len()
    }

    fn simple_edge_count(&self) -> usize {
        let mut c = 0;
        for (i, &u) in self.alive.iter().enumerate() {
            for &v in &self.alive[i + 1..] {
                if self.mult[u][v] > 0 {
                    c += 1;
                }
            }
        }
        c
    }

    fn degree(&self, u: usize) -> usize {
        self.alive.iter().filter(|&&w| self.mult[u][w] > 0).count()
    }

    /// Merges `v` into `u`, dropping the `u`-`v` bundle.
    fn contract(&mut self, u: usize, v: usize) {
        self.mult[u][v] = 0;
        self.mult[v][u] = 0;
        let alive = self.alive.clone();
        for &w in &alive {
            if w != u && w != v && self.mult[v][w] > 0 {
                let k = self.mult[v][w];
                self.mult[u][w] += k;
                self.mult[w][u] += k;
                self.mult[v][w] = 0;
                self.mult[w][v] = 0;
            }
        }
        self.alive.retain(|&w| w != v);
    }
}

fn pow2_minus_one<T: Acc>(k: u32) -> Option<T> {
    let mut p = T::one();
    let two = T::from(2);
    for _ in 0..k {
        p = mul(&p, &two)?;
    }
    p.checked_sub(&T::one())
}

fn dc_count<T: Acc>(mg: &mut MultiGraph) -> Option<T> {
    dc_rec(mg.clone())
}

fn dc_rec<T: Acc>(mut mg: MultiGraph) -> Option<T> {
    let mut factor = T::one();
    loop {
        if mg.alive.len() == 1 {
            return Some(factor);
        }
        if !mg.connected() {
            return Some(T::zero());
        }
        // Underlying simple graph is a tree: every bundle needs at least one edge.
        if mg.simple_edge_count() + 1 == mg.alive.len() {
            for (i, &u) in mg.alive.iter().enumerate() {
                for &v in &mg.alive[i + 1..] {
                    let k = mg.mult[u][v];
                    if k > 0 {
                        factor = mul(&factor, &pow2_minus_one::<T>(k)?)?;
                    }
                }
            }
            return Some(factor);
        }
        // A bundle at a degree-one vertex is forced: contract it.
        let leaf = mg.alive.iter().copied().find(|&u| mg.degree(u) == 1);
        if let Some(v) = leaf {
            let u = mg
                .alive
                .iter()
                .copied()
                .find(|&w| mg.mult[v][w] > 0)
                .expect("degree one");
            factor = mul(&factor, &pow2_minus_one::<T>(mg.mult[u][v])?)?;
            mg.contract(u, v);
            continue;
        }
        break;
    }
    // Branch on the heaviest bundle at the lowest-degree vertex.
    let u = *mg
        .alive
        .iter()
        .min_by_key(|&&w| mg.degree(w))
        .expect("nonempty");
    let v = mg
        .alive
        .iter()
        .copied()
        .filter(|&w| mg.mult[u][w] > 0)
        .max_by_key(|&w| mg.mult[u][w])
        .expect("connected graph on two or more vertices has an edge");
    let k = mg.mult[u][v];
    let mut deleted = mg.clone();
    deleted.mult[u][v] = 0;
    deleted.mult[v][u] = 0;
    let mut contracted = mg;
    contracted.contract(u, v);
    let d = dc_rec::<T>(deleted)?;
    let c = dc_rec::<T>(contracted)?;
    let sum = add(&d, &mul(&pow2_minus_one::<T>(k)?, &c)?)?;
    mul(&factor, &sum)
}

// ---------------------------------------------------------------------------
// Per-subset table
// ---------------------------------------------------------------------------

/// `table[S]` = number of connected spanning subgraphs of the subgraph induced
/// on the vertex subset `S` (bit `i` of `S` = local vertex `i`).
///
/// Uses the recurrence that splits off the component of the lowest vertex:
/// `2^{e(S)} = sum_{T ⊆ S, min S ∈ T} C(T) 2^{e(S \ T)}`. Cost `O(3^b)`.
fn spanning_table<T: Acc>(adj: &[u64]) -> Option<Vec<T>> {
    let b = adj.len();
    let size = 1usize << b;
    let mut edges = vec![0u32; size];
    for s in 1..size {
        let low = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        edges[s] = edges[rest] + (adj[low] & rest as u64).count_ones();
    }
    let max_e = edges[size - 1] as usize;
    let mut pow2: Vec<T> = Vec::with_capacity(max_e + 1);
    pow2.push(T::one());
    let two = T::from(2);
    for i in 1..=max_e {
        let next = mul(&pow2[i - 1], &two)?;
        pow2.push(next);
    }
    let mut table = vec![T::zero(); size];
    for s in 1..size {
        let low = s & s.wrapping_neg();
        if s == low {
            table[s] = T::one();
            continue;
        }
        let rest = s ^ low;
        let mut sum = T::zero();
        // proper subsets `sub` of `rest`; T = low | sub
        let mut sub = (rest - 1) & rest;
        loop {
            let t = low | sub;
            if !table[t].is_zero() {
                let term = mul(&table[t], &pow2[edges[s ^ t] as usize])?;
                sum = add(&sum, &term)?;
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        table[s] = pow2[edges[s] as usize].checked_sub(&sum)?;
    }
    Some(table)
}

// ---------------------------------------------------------------------------
// Block-cut engine
// ---------------------------------------------------------------------------

/// Maximal 2-connected pieces and bridges of `g`, as vertex sets.
pub(crate) fn blocks(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let adj = g.adjacency();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut out = Vec::new();
    let mut time = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut stack: Vec<(usize, usize, u64)> = vec![(root, usize::MAX, adj[root])];
        while let Some(top) = stack.last_mut() {
            let (u, parent) = (top.0, top.1);
            if top.2 != 0 {
                let w = top.2.trailing_zeros() as usize;
                top.2 &= top.2 - 1;
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    edge_stack.push((u, w));
                    stack.push((w, u, adj[w]));
                } else if disc[w] < disc[u] {
                    low[u] = low[u].min(disc[w]);
                    edge_stack.push((u, w));
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[u]);
                    if low[u] >= disc[parent] {
                        let mut set = VertexSet::EMPTY;
                        while let Some((a, b)) = edge_stack.pop() {
                            set.insert(a);
                            set.insert(b);
                            if (a, b) == (parent, u) {
                                break;
                            }
                        }
                        out.push(set);
                    }
                }
            }
        }
    }
    out
}

/// Result of the block-cut DP on one component.
struct Rooted<T> {
    /// Connected subgraphs of the component.
    total: T,
    /// Connected subgraphs of the component containing the root.
    at_root: T,
}

/// Block-cut DP on the component of `root`, with `blocks_of[v]` listing the
/// blocks (indices into `blocks`) that contain `v`.
fn rooted_component<T: Acc>(
    g: &Graph,
    blocks: &[VertexSet],
    blocks_of: &[Vec<usize>],
    root: usize,
) -> Option<Rooted<T>> {
    let adj = g.adjacency();
    // Preorder over blocks, each with the vertex through which it was entered.
    let mut order: Vec<(usize, usize)> = Vec::new();
    let mut block_seen = vec![false; blocks.len()];
    let mut stack = vec![root];
    while let Some(v) = stack.pop() {
        for &b in &blocks_of[v] {
            if block_seen[b] {
                continue;
            }
            block_seen[b] = true;
            order.push((b, v));
            stack.extend(blocks[b].iter().filter(|&w| w != v));
        }
    }

    let mut down: Vec<T> = vec![T::one(); g.n()];
    let mut hanging = T::zero();
    for &(b, p) in order.iter().rev() {
        let verts = blocks[b];
        let (with_p, without_p) = if verts.len() == 2 {
            let w = verts.difference(VertexSet::singleton(p)).min().expect("bridge");
            (add(&T::one(), &down[w])?, down[w].clone())
        } else {
            block_sums(adj, verts, p, &down)?
        };
        down[p] = mul(&down[p], &with_p)?;
        hanging = add(&hanging, &without_p)?;
    }
    Some(Rooted {
        total: add(&down[root], &hanging)?,
        at_root: down[root].clone(),
    })
}

/// For a block with entry vertex `p`, returns the weighted counts of its
/// connected subgraphs that contain `p` and that avoid `p`. A subgraph's weight
/// is the product of `down[w]` over its vertices other than `p`.
fn block_sums<T: Acc>(adj: &[u64], verts: VertexSet, p: usize, down: &[T]) -> Option<(T, T)> {
    // local index 0 is the entry vertex
    let mut local: Vec<usize> = vec![p];
    local.extend(verts.iter().filter(|&w| w != p));
    let b = local.len();
    let mut ladj = vec![0u64; b];
    for (i, &u) in local.iter().enumerate() {
        for (j, &w) in local.iter().enumerate() {
            if adj[u] >> w & 1 == 1 {
                ladj[i] |= 1 << j;
            }
        }
    }
    let table = spanning_table::<T>(&ladj)?;
    let size = 1usize << b;
    let mut weight: Vec<T> = vec![T::one(); size];
    let mut with_p = T::zero();
    let mut without_p = T::zero();
    for s in 1..size {
        let low = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        weight[s] = if low == 0 {
            weight[rest].clone()
        } else {
            mul(&weight[rest], &down[local[low]])?
        };
        if table[s].is_zero() {
            continue;
        }
        let term = mul(&table[s], &weight[s])?;
        if s & 1 == 1 {
            with_p = add(&with_p, &term)?;
        } else {
            without_p = add(&without_p, &term)?;
        }
    }
    Some((with_p, without_p))
}

struct BlockIndex {
    blocks: Vec<VertexSet>,
    blocks_of: Vec<Vec<usize>>,
}

impl BlockIndex {
    fn new(g: &Graph) -> Self {
        let blocks = blocks(g);
        let mut blocks_of = vec![Vec::new(); g.n()];
        for (i, b) in blocks.iter().enumerate() {
            for v in b.iter() {
                blocks_of[v].push(i);
            }
        }
        BlockIndex { blocks, blocks_of }
    }
}

fn core_index_generic<T: Acc>(g: &Graph) -> Option<T> {
    if g.is_forest() {
        return tree_dp::<T>(g);
    }
    let index = BlockIndex::new(g);
    let mut total = T::zero();
    for comp in g.components() {
        let root = comp.min().expect("nonempty component");
        let r = rooted_component::<T>(g, &index.blocks, &index.blocks_of, root)?;
        total = add(&total, &r.total)?;
    }
    Some(total)
}

/// Blocks larger than this make the DP slow enough that callers taking
/// untrusted input should ask first. Cost grows as `3^b` in the block order.
pub const BLOCK_GUARD: usize = 18;

/// Order of the largest block (2-connected piece or bridge) of `g`.
pub fn largest_block(g: &Graph) -> usize {
    if g.is_forest() {
        return if g.m() > 0 { 2 } else { g.n().min(1) };
    }
    blocks(g).iter().map(|b| b.len()).max().unwrap_or(g.n().min(1))
}

/// `F(G)`, the number of connected subgraphs. Sums over components for
/// disconnected input; `F` of the empty graph is `0`.
pub fn core_index(g: &Graph) -> Count {
    with_fallback!(core_index_generic(g))
}

/// `F(G)` in machine arithmetic, or `None` if it does not fit.
pub fn core_index_u128(g: &Graph) -> Option<u128> {
    core_index_generic::<u128>(g)
}

fn containing_vertex_generic<T: Acc>(g: &Graph, v: usize) -> Option<T> {
    let index = BlockIndex::new(g);
    rooted_component::<T>(g, &index.blocks, &index.blocks_of, v).map(|r| r.at_root)
}

/// `f_G(v)`: connected subgraphs containing `v`. Works at any size through the
/// block-cut DP rooted at `v`.
pub fn count_containing_vertex(g: &Graph, v: usize) -> Result<Count> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    Ok(with_fallback!(containing_vertex_generic(g, v)))
}

/// `f_G(S)`: connected subgraphs whose vertex set contains all of `S`.
/// Guarded at `n <= 10`.
pub fn count_containing(g: &Graph, set: VertexSet) -> Result<Count> {
    count_containing_with(g, set, Guard::Enforced)
}

pub fn count_containing_with(g: &Graph, set: VertexSet, guard: Guard) -> Result<Count> {
    if set.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    if let Some(bad) = set.iter().find(|&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange { vertex: bad, n: g.n() });
    }
    if set.len() == 1 {
        return count_containing_vertex(g, set.min().expect("nonempty"));
    }
    guard.check("count_containing", g.n(), CONTAINING_GUARD)?;
    Ok(with_fallback!(containing_set_generic(g, set)))
}

fn containing_set_generic<T: Acc>(g: &Graph, set: VertexSet) -> Option<T> {
    // Only the component holding the set matters.
    let first = set.min().expect("nonempty");
    let comp = g.component_of(first);
    if !set.is_subset(comp) {
        return Some(T::zero());
    }
    let (sub, map) = g.induced_subgraph(comp);
    let mut local_set = 0usize;
    for (i, &old) in map.iter().enumerate() {
        if set.contains(old) {
            local_set |= 1 << i;
        }
    }
    let table = spanning_table::<T>(sub.adjacency())?;
    let mut total = T::zero();
    for (s, c) in table.iter().enumerate() {
        if s & local_set == local_set {
            total = add(&total, c)?;
        }
    }
    Some(total)
}

// ---------------------------------------------------------------------------
// Trees
// ---------------------------------------------------------------------------

/// Children lists and a root-first order for a forest; roots are the least
/// vertex of each component.
fn forest_order(g: &Graph) -> (Vec<usize>, Vec<usize>) {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut seen = 0u64;
    for root in 0..n {
        if seen >> root & 1 == 1 {
            continue;
        }
        seen |= 1 << root;
        let start = order.len();
        order.push(root);
        let mut i = start;
        while i < order.len() {
            let u = order[i];
            for w in g.neighbors(u).iter() {
                if seen >> w & 1 == 0 {
                    seen |= 1 << w;
                    parent[w] = u;
                    order.push(w);
                }
            }
            i += 1;
        }
    }
    (order, parent)
}

fn tree_dp<T: Acc>(g: &Graph) -> Option<T> {
    let (order, parent) = forest_order(g);
    let mut down: Vec<T> = vec![T::one(); g.n()];
    let mut total = T::zero();
    for &v in order.iter().rev() {
        total = add(&total, &down[v])?;
        let p = parent[v];
        if p != usize::MAX {
            let f = add(&T::one(), &down[v])?;
            down[p] = mul(&down[p], &f)?;
        }
    }
    Some(total)
}

/// `F(T)` for a forest: every subtree is counted once at its vertex closest
/// to the root of its component.
pub fn tree_core_index(t: &Graph) -> Result<Count> {
    if !t.is_forest() {
        return Err(Error::NotAForest {
            operation: "tree_core_index",
        });
    }
    Ok(with_fallback!(tree_dp(t)))
}

fn reroot<T: Acc>(t: &Graph) -> Option<Vec<T>> {
    let n = t.n();
    let (order, parent) = forest_order(t);
    let mut down: Vec<T> = vec![T::one(); n];
    for &v in order.iter().rev() {
        let p = parent[v];
        if p != usize::MAX {
            down[p] = mul(&down[p], &add(&T::one(), &down[v])?)?;
        }
    }
    // up[v]: subgraphs containing parent(v) that avoid the subtree of v.
    let mut up: Vec<T> = vec![T::zero(); n];
    let mut f: Vec<T> = vec![T::zero(); n];
    for &v in &order {
        let above = if parent[v] == usize::MAX {
            T::one()
        } else {
            add(&T::one(), &up[v])?
        };
        f[v] = mul(&down[v], &above)?;
        let children: Vec<usize> = t.neighbors(v).iter().filter(|&c| parent[c] == v).collect();
        let k = children.len();
        // prefix[i] = prod_{j<i} (1 + down[c_j]); suffix likewise from the right
        let mut prefix = vec![T::one(); k + 1];
        for (i, &c) in children.iter().enumerate() {
            prefix[i + 1] = mul(&prefix[i], &add(&T::one(), &down[c])?)?;
        }
        let mut suffix = T::one();
        for (i, &c) in children.iter().enumerate().rev() {
            up[c] = mul(&mul(&prefix[i], &suffix)?, &above)?;
            suffix = mul(&suffix, &add(&T::one(), &down[c])?)?;
        }
    }
    Some(f)
}

/// `f_T(v)` for every vertex of a tree in one pass, by rerooting with
/// prefix and suffix products over each child list.
pub fn f_all_vertices(t: &Graph) -> Result<Vec<Count>> {
    if !t.is_tree() {
        return Err(Error::NotATree {
            operation: "f_all_vertices",
        });
    }
    Ok(match reroot::<u128>(t) {
        Some(v) => v.into_iter().map(Count::from).collect(),
        None => reroot::<BigUint>(t).expect("big integers never overflow"),
    })
}

pub(crate) fn f_all_vertices_u128(t: &Graph) -> Option<Vec<u128>> {
    reroot::<u128>(t)
}

/// Vertices maximizing `f_G(v)`; every tie is reported.
pub fn subgraph_core(g: &Graph) -> Result<VertexSet> {
    if g.n() == 0 {
        return Err(Error::TooFewVertices {
            operation: "subgraph_core",
            n: 0,
            min: 1,
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected {
            operation: "subgraph_core",
        });
    }
    let values = f_vector(g)?;
    let best = values.iter().max().expect("n >= 1");
    Ok(values
        .iter()
        .enumerate()
        .filter(|(_, f)| *f == best)
        .map(|(v, _)| v)
        .collect())
}

/// `f_G(v)` for every vertex, by rerooting on trees and block-cut DP otherwise.
pub fn f_vector(g: &Graph) -> Result<Vec<Count>> {
    if g.is_tree() {
        return f_all_vertices(g);
    }
    (0..g.n()).map(|v| count_containing_vertex(g, v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edge_list(n, e).unwrap()
    }
    fn path(n: usize) -> Graph {
        g(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>())
    }
    fn cycle(n: usize) -> Graph {
        g(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
    }
    fn star(n: usize) -> Graph {
        g(n, &(1..n).map(|i| (0, i)).collect::<Vec<_>>())
    }
    fn complete(n: usize) -> Graph {
        let mut e = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                e.push((u, v));
            }
        }
        g(n, &e)
    }
    fn c(x: u64) -> Count {
        Count::from(x)
    }

    #[test]
    fn bruteforce_examples() {
        assert_eq!(core_index_bruteforce(&cycle(3)).unwrap(), c(10));
        assert_eq!(core_index_bruteforce(&path(1)).unwrap(), c(1));
        assert_eq!(core_index_bruteforce(&complete(4)).unwrap(), c(64));
        assert!(matches!(
            core_index_bruteforce(&Graph::empty(11).unwrap()),
            Err(Error::SizeGuard { .. })
        ));
        assert_eq!(
            core_index_bruteforce_with(&Graph::empty(11).unwrap(), Guard::Lifted).unwrap(),
            c(11)
        );
    }

    #[test]
    fn spanning_examples() {
        assert_eq!(connected_spanning_count(&cycle(3)), c(4));
        assert_eq!(connected_spanning_count(&path(3)), c(1));
        assert_eq!(connected_spanning_count(&Graph::empty(2).unwrap()), c(0));
        assert_eq!(connected_spanning_count(&path(1)), c(1));
        // h_4 = 38 connected labeled graphs on 4 vertices = spanning subsets of K4
        assert_eq!(connected_spanning_count(&complete(4)), c(38));
        assert_eq!(connected_spanning_count(&complete(5)), c(728));
    }

    #[test]
    fn spanning_table_matches_deletion_contraction() {
        let k5 = complete(5);
        let table = spanning_table::<u128>(k5.adjacency()).unwrap();
        for s in 1..32u64 {
            let (sub, _) = k5.induced_subgraph(VertexSet::from_bits(s));
            assert_eq!(Count::from(table[s as usize]), connected_spanning_count(&sub));
        }
    }

    #[test]
    fn core_index_examples() {
        assert_eq!(core_index(&path(4)), c(10));
        assert_eq!(core_index(&star(4)), c(11));
        let p3p2 = path(3).disjoint_union(&path(2)).unwrap();
        assert_eq!(core_index(&p3p2), c(9));
        assert_eq!(core_index(&cycle(6)), c(37));
        assert_eq!(core_index(&complete(4)), c(64));
        assert_eq!(core_index(&Graph::empty(0).unwrap()), c(0));
    }

    #[test]
    fn big_integer_fallback() {
        let star64 = star(64);
        assert_eq!(core_index(&star64), (Count::one() << 63u32) + c(63));
    }

    #[test]
    fn tree_examples() {
        assert_eq!(tree_core_index(&path(5)).unwrap(), c(15));
        assert_eq!(tree_core_index(&star(5)).unwrap(), c(20));
        // T_{7,3}: centre 0 with three legs of two vertices
        let spider = g(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]);
        assert_eq!(tree_core_index(&spider).unwrap(), c(36));
        assert!(matches!(
            tree_core_index(&cycle(3)),
            Err(Error::NotAForest { .. })
        ));
    }

    #[test]
    fn rerooting_examples() {
        assert_eq!(f_all_vertices(&path(4)).unwrap(), vec![c(4), c(6), c(6), c(4)]);
        let s = f_all_vertices(&star(5)).unwrap();
        assert_eq!(s[0], c(16));
        assert!(s[1..].iter().all(|x| *x == c(9)));
        assert!(f_all_vertices(&cycle(4)).is_err());
        assert!(f_all_vertices(&Graph::empty(2).unwrap()).is_err());
    }

    #[test]
    fn containing_examples() {
        assert_eq!(count_containing(&cycle(5), VertexSet::singleton(2)).unwrap(), c(16));
        assert_eq!(count_containing(&path(1), VertexSet::singleton(0)).unwrap(), c(1));
        let ends = VertexSet::from_iter([0, 3]);
        assert_eq!(count_containing(&path(4), ends).unwrap(), c(1));
        assert_eq!(count_containing(&path(4), VertexSet::EMPTY), Err(Error::EmptyVertexSet));
        assert!(matches!(
            count_containing(&path(4), VertexSet::singleton(4)),
            Err(Error::VertexOutOfRange { .. })
        ));
        let pair = VertexSet::from_iter([0, 1]);
        assert!(matches!(
            count_containing(&path(11), pair),
            Err(Error::SizeGuard { .. })
        ));
        // both ends of a triangle edge: the edge alone plus the 4 spanning subgraphs
        assert_eq!(count_containing(&cycle(3), pair).unwrap(), c(5));
    }

    #[test]
    fn core_examples() {
        assert_eq!(subgraph_core(&path(4)).unwrap().to_vec(), vec![1, 2]);
        assert_eq!(subgraph_core(&star(5)).unwrap().to_vec(), vec![0]);
        assert_eq!(subgraph_core(&cycle(7)).unwrap(), VertexSet::full(7));
        assert!(subgraph_core(&Graph::empty(2).unwrap()).is_err());
    }

    #[test]
    fn blocks_of_lollipop() {
        let lolli = g(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4)]);
        let mut b: Vec<Vec<usize>> = blocks(&lolli).iter().map(|s| s.to_vec()).collect();
        b.sort();
        assert_eq!(b, vec![vec![0, 1, 2], vec![0, 3], vec![3, 4]]);
        assert_eq!(largest_block(&lolli), 3);
        assert_eq!(largest_block(&complete(6)), 6);
        assert_eq!(largest_block(&path(4)), 2);
        assert_eq!(largest_block(&g(3, &[])), 1);
    }
}
