//! Labeled simple undirected graphs on the dense vertex range `0..n`.
//!
//! Adjacency is stored as one 64-bit mask per vertex, so graphs hold at most
//! [`MAX_VERTICES`] vertices. Every exhaustive computation in this crate runs
//! far below that limit; the closed forms in [`crate::closed_forms`] are the
//! route for larger orders.

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// A subset of the vertex range of some host graph.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// All of `0..n`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<usize> = Vec::deserialize(d)?;
        if let Some(&bad) = v.iter().find(|&&x| x >= 64) {
            return Err(serde::de::Error::custom(format!("vertex {bad} out of range")));
        }
        Ok(v.into_iter().collect())
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

/// A labeled simple undirected graph on vertices `0..n`.
///
/// Values are immutable once built; the structural edits (`with_edge`,
/// `identify_vertices`, ...) return new graphs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from unordered pairs. Duplicate pairs collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from per-vertex neighbour masks. Used by decoders and
    /// enumerators that already hold a valid symmetric relation.
    pub(crate) fn from_adjacency_unchecked(adj: Vec<u64>) -> Self {
        debug_assert!(adj.len() <= MAX_VERTICES);
        debug_assert!(adj
            .iter()
            .enumerate()
            .all(|(v, &m)| m >> v & 1 == 0 && VertexSet(m).iter().all(|w| adj[w] >> v & 1 == 1)));
        Graph { n: adj.len(), adj }
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
    }

    pub(crate) fn clear_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1u64 << v);
        self.adj[v] &= !(1u64 << u);
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub(crate) fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            for v in VertexSet(self.adj[u] & !((2u64 << u) - 1)).iter() {
                out.push((u, v));
            }
        }
        out
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let mut g = self.clone();
        g.set_edge(u, v);
        Ok(g)
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let mut g = self.clone();
        g.clear_edge(u, v);
        Ok(g)
    }

    /// Vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&m| m << self.n));
        Ok(Graph { n, adj })
    }

    /// Merges `v` into `u`. Edges parallel after the merge collapse and a
    /// former `u`-`v` edge is dropped. Vertices above `v` shift down by one,
    /// so the merged vertex keeps id `min(u, v)` adjusted as returned.
    pub fn identify_vertices(&self, u: usize, v: usize) -> Result<(Graph, usize)> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::invalid("identify_vertices", "vertices must be distinct"));
        }
        let mut g = self.clone();
        let nv = g.adj[v] & !(1u64 << u);
        g.clear_edge(u, v);
        for w in VertexSet(nv).iter() {
            g.clear_edge(v, w);
            g.set_edge(u, w);
        }
        let g = g.delete_vertex(v);
        let merged = if u > v { u - 1 } else { u };
        Ok((g, merged))
    }

    /// Removes an isolated-or-not vertex and renumbers the ones above it.
    fn delete_vertex(&self, v: usize) -> Graph {
        let low = (1u64 << v) - 1;
        let adj = (0..self.n)
            .filter(|&w| w != v)
            .map(|w| {
                let m = self.adj[w] & !(1u64 << v);
                (m & low) | ((m >> 1) & !low)
            })
            .collect();
        Graph { n: self.n - 1, adj }
    }

    /// Adds a new vertex adjacent only to `v`; returns it as `n`.
    pub fn add_pendant(&self, v: usize) -> Result<(Graph, usize)> {
        self.check_vertex(v)?;
        if self.n + 1 > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n: self.n + 1,
                max: MAX_VERTICES,
            });
        }
        let mut g = self.clone();
        let y = g.n;
        g.n += 1;
        g.adj.push(0);
        g.set_edge(v, y);
        Ok((g, y))
    }

    /// The subgraph induced on `set`, renumbered in increasing order. The
    /// second value maps new ids back to old ones.
    pub fn induced_subgraph(&self, set: VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = set.intersection(self.vertices()).iter().collect();
        let adj = map
            .iter()
            .map(|&old| {
                let mut m = 0u64;
                for (i, &w) in map.iter().enumerate() {
                    if self.adj[old] >> w & 1 == 1 {
                        m |= 1 << i;
                    }
                }
                m
            })
            .collect();
        (Graph { n: map.len(), adj }, map)
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut g = Graph {
            n: self.n,
            adj: vec![0; self.n],
        };
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v]);
        }
        g
    }

    /// Vertices reachable from `start`.
    pub fn component_of(&self, start: usize) -> VertexSet {
        reach(&self.adj, start, u64::MAX)
    }

    /// Connected components, ordered by least vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices().bits();
        let mut out = Vec::new();
        while left != 0 {
            let v = left.trailing_zeros() as usize;
            let c = self.component_of(v);
            left &= !c.bits();
            out.push(c);
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    /// True for `n <= 1` as well.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_of(0) == self.vertices()
    }

    pub fn is_forest(&self) -> bool {
        self.m() + self.component_count() == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.is_connected() && self.m() + 1 == self.n
    }

    pub fn is_unicyclic(&self) -> bool {
        self.n >= 3 && self.is_connected() && self.m() == self.n
    }

    /// Edges whose removal increases the number of components.
    pub fn bridges(&self) -> Vec<(usize, usize)> {
        let lowlink = LowLink::compute(self);
        let mut out = lowlink.bridges;
        out.sort_unstable();
        out
    }

    /// Vertices whose removal increases the number of components.
    pub fn cut_vertices(&self) -> VertexSet {
        LowLink::compute(self).cut_vertices
    }

    /// Length of a shortest cycle; `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for root in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u).iter() {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Length of a longest cycle; `None` for forests.
    ///
    /// Exhaustive over simple paths, so exponential in the worst case. Fine for
    /// the desk-scale graphs this crate targets.
    pub fn circumference(&self) -> Option<usize> {
        let mut best = 0usize;
        for start in 0..self.n {
            // Cycles are enumerated with `start` as their least vertex.
            let allowed = !((2u64 << start) - 1);
            longest_cycle_from(self, start, start, allowed, 1u64 << start, 1, &mut best);
            if best == self.n {
                break;
            }
        }
        (best >= 3).then_some(best)
    }

    pub fn pendant_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    /// Connected with no cut vertex. Requires `n >= 3`.
    pub fn is_two_connected(&self) -> Result<bool> {
        if self.n < 3 {
            return Err(Error::TooFewVertices {
                operation: "is_two_connected",
                n: self.n,
                min: 3,
            });
        }
        Ok(self.is_connected() && self.cut_vertices().is_empty())
    }

    /// Sum of shortest-path distances over unordered vertex pairs.
    pub fn wiener_index(&self) -> Result<BigUint> {
        if self.n == 0 {
            return Err(Error::TooFewVertices {
                operation: "wiener_index",
                n: 0,
                min: 1,
            });
        }
        if !self.is_connected() {
            return Err(Error::Disconnected {
                operation: "wiener_index",
            });
        }
        let mut total: u64 = 0;
        for root in 0..self.n {
            let mut seen = 1u64 << root;
            let mut frontier = 1u64 << root;
            let mut d = 0u64;
            while frontier != 0 {
                d += 1;
                let mut next = 0u64;
                for u in VertexSet(frontier).iter() {
                    next |= self.adj[u];
                }
                next &= !seen;
                total += d * next.count_ones() as u64;
                seen |= next;
                frontier = next;
            }
        }
        Ok(BigUint::from(total / 2))
    }
}

/// Breadth-first reachability restricted to the vertices in `within`.
pub(crate) fn reach(adj: &[u64], start: usize, within: u64) -> VertexSet {
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            let u = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[u];
        }
        next &= within & !seen;
        seen |= next;
        frontier = next;
    }
    VertexSet(seen)
}

fn longest_cycle_from(
    g: &Graph,
    start: usize,
    at: usize,
    allowed: u64,
    used: u64,
    len: usize,
    best: &mut usize,
) {
    let nb = g.adj[at];
    if len >= 3 && nb >> start & 1 == 1 {
        *best = (*best).max(len);
    }
    let mut next = nb & allowed & !used;
    while next != 0 {
        let w = next.trailing_zeros() as usize;
        next &= next - 1;
        longest_cycle_from(g, start, w, allowed, used | 1u64 << w, len + 1, best);
    }
}

struct LowLink {
    bridges: Vec<(usize, usize)>,
    cut_vertices: VertexSet,
}

impl LowLink {
    fn compute(g: &Graph) -> Self {
        let n = g.n;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut out = LowLink {
            bridges: Vec::new(),
            cut_vertices: VertexSet::EMPTY,
        };
        let mut time = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // Iterative DFS: (vertex, parent, remaining neighbours).
            let mut stack: Vec<(usize, usize, u64)> = vec![(root, usize::MAX, g.adj[root])];
            disc[root] = time;
            low[root] = time;
            time += 1;
            let mut root_children = 0;
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
                        if u == root {
                            root_children += 1;
                        }
                        stack.push((w, u, g.adj[w]));
                    } else {
                        low[u] = low[u].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[u]);
                        if low[u] > disc[parent] {
                            out.bridges.push((parent.min(u), parent.max(u)));
                        }
                        if parent != root && low[u] >= disc[parent] {
                            out.cut_vertices.insert(parent);
                        }
                    }
                }
            }
            if root_children >= 2 {
                out.cut_vertices.insert(root);
            }
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
