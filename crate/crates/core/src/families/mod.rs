//! Named graph families with fixed vertex labelings.
//!
//! Labeling conventions, relied upon by tests that read `f` at named vertices:
//!
//! | kind | layout |
//! |------|--------|
//! | path | `0 - 1 - ... - (n-1)` |
//! | star | centre `0`, leaves `1..n` |
//! | cycle | `0 - 1 - ... - (n-1) - 0` |
//! | pineapple | cycle on `0..g`, leaves `g..n` all adjacent to `0` |
//! | lollipop | cycle on `0..g`, tail `0 - g - (g+1) - ... - (n-1)` |
//! | assembly | cycle on `0..g`, then the non-root vertices of each tree in cycle order |
//! | broom | spine `0..d`, `k` leaves on `0`, then `l` leaves on `d-1` |
//! | spider, tnk | centre `0`, legs laid out one after another, longer legs first |
//! | pnk | complete graph on `0..n-k`, pendants `n-k..n` on `0` |
//! | dumbbell | first cycle on `0..m1`, inner path vertices, second cycle; the path starts at `0` |
//! | unions | components laid out consecutively, largest first |

mod enumerate;

pub use enumerate::{
    graph_from_mask, labeled_graphs, labeled_trees, labeled_unicyclic, tree_from_prufer,
    unicyclic_representatives, ClassSource, GraphClass, IndexedClass, LabeledGraphs, LabeledTrees,
    LabeledUnicyclic, UnicyclicRepresentatives, GRAPH_GUARD, TREE_GUARD, UNICYCLIC_GUARD,
};

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::closed_forms;
use crate::count::Count;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A tree hung from one cycle vertex of a unicyclic assembly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Attachment {
    /// `k` leaves on the cycle vertex.
    Star(usize),
    /// A path of `k` new vertices starting at the cycle vertex.
    Path(usize),
}

impl Attachment {
    pub fn added_vertices(self) -> usize {
        match self {
            Attachment::Star(k) | Attachment::Path(k) => k,
        }
    }

    /// The attached tree itself, rooted at vertex `0`.
    pub fn tree(self) -> Graph {
        match self {
            Attachment::Star(k) => star_graph(k + 1),
            Attachment::Path(k) => path_graph(k + 1),
        }
    }
}

impl fmt::Display for Attachment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Attachment::Star(k) => write!(f, "star{k}"),
            Attachment::Path(k) => write!(f, "path{k}"),
        }
    }
}

/// A named family member. `Display` and `FromStr` use the `kind:key=value`
/// syntax, e.g. `lollipop:n=9,g=4`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilySpec {
    Path { n: usize },
    Star { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    Pineapple { n: usize, g: usize },
    Lollipop { n: usize, g: usize },
    /// Cycle `C_g` with trees hung from selected cycle vertices.
    UnicyclicAssembly { g: usize, trees: Vec<(usize, Attachment)> },
    /// Spine of `d` vertices with `k` leaves at one end and `l` at the other.
    DoubleBroom { k: usize, l: usize, d: usize },
    /// `k` legs on `n` vertices, as even as possible.
    BalancedSpider { n: usize, k: usize },
    /// `legs` legs of `leg_len` vertices each.
    Spider { legs: usize, leg_len: usize },
    /// Complete graph on `n - k` vertices with `k` pendants at one vertex.
    CompleteWithPendants { n: usize, k: usize },
    Dumbbell { m1: usize, m2: usize, n: usize },
    /// `k` paths of near-equal order on `n` vertices in total.
    UnionPaths { n: usize, k: usize },
    /// `K_{n-k+1}` plus `k - 1` isolated vertices.
    UnionComplete { n: usize, k: usize },
    /// Star on `n - k + 1` vertices plus `k - 1` isolated vertices.
    UnionStar { n: usize, k: usize },
}

impl FamilySpec {
    /// Double broom with one leaf at one end and `n - 3` at the other.
    pub fn lopsided_broom(n: usize) -> Result<FamilySpec> {
        if n < 4 {
            return Err(Error::invalid("broom", format!("n = {n} < 4")));
        }
        Ok(FamilySpec::DoubleBroom { k: 1, l: n - 3, d: 2 })
    }

    /// Double broom on `n` vertices whose `k` leaves are split evenly.
    pub fn balanced_broom(n: usize, k: usize) -> Result<FamilySpec> {
        if k < 2 || n < k + 2 {
            return Err(Error::invalid(
                "broom",
                format!("need 2 <= k <= n - 2, got n = {n}, k = {k}"),
            ));
        }
        Ok(FamilySpec::DoubleBroom {
            k: k / 2,
            l: k - k / 2,
            d: n - k,
        })
    }

    pub fn kind(&self) -> &'static str {
        match self {
            FamilySpec::Path { .. } => "path",
            FamilySpec::Star { .. } => "star",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::Pineapple { .. } => "pineapple",
            FamilySpec::Lollipop { .. } => "lollipop",
            FamilySpec::UnicyclicAssembly { .. } => "assembly",
            FamilySpec::DoubleBroom { .. } => "broom",
            FamilySpec::BalancedSpider { .. } => "tnk",
            FamilySpec::Spider { .. } => "spider",
            FamilySpec::CompleteWithPendants { .. } => "pnk",
            FamilySpec::Dumbbell { .. } => "dumbbell",
            FamilySpec::UnionPaths { .. } => "union-paths",
            FamilySpec::UnionComplete { .. } => "union-complete",
            FamilySpec::UnionStar { .. } => "union-star",
        }
    }

    /// Vertex count of the built graph, without building it.
    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Path { n }
            | FamilySpec::Star { n }
            | FamilySpec::Cycle { n }
            | FamilySpec::Complete { n }
            | FamilySpec::Pineapple { n, .. }
            | FamilySpec::Lollipop { n, .. }
            | FamilySpec::BalancedSpider { n, .. }
            | FamilySpec::CompleteWithPendants { n, .. }
            | FamilySpec::Dumbbell { n, .. }
            | FamilySpec::UnionPaths { n, .. }
            | FamilySpec::UnionComplete { n, .. }
            | FamilySpec::UnionStar { n, .. } => n,
            FamilySpec::UnicyclicAssembly { g, ref trees } => {
                g + trees.iter().map(|(_, t)| t.added_vertices()).sum::<usize>()
            }
            FamilySpec::DoubleBroom { k, l, d } => k + l + d,
            FamilySpec::Spider { legs, leg_len } => 1 + legs * leg_len,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let kind = self.kind();
        let fail = |msg: String| Err(Error::invalid(kind, msg));
        match *self {
            FamilySpec::Path { n } | FamilySpec::Star { n } | FamilySpec::Complete { n } if n < 1 => {
                fail("n must be at least 1".into())
            }
            FamilySpec::Cycle { n } if n < 3 => fail(format!("n = {n} < 3")),
            FamilySpec::Pineapple { n, g } | FamilySpec::Lollipop { n, g } if !(g >= 3 && g < n) => {
                fail(format!("need 3 <= g < n, got n = {n}, g = {g}"))
            }
            FamilySpec::UnicyclicAssembly { g, ref trees } => {
                if g < 3 {
                    return fail(format!("cycle length g = {g} < 3"));
                }
                let mut seen = BTreeSet::new();
                for &(at, t) in trees {
                    if at >= g {
                        return fail(format!("attachment vertex {at} is not on the cycle 0..{g}"));
                    }
                    if !seen.insert(at) {
                        return fail(format!("two trees attached at cycle vertex {at}"));
                    }
                    if t.added_vertices() == 0 {
                        return fail(format!("empty tree `{t}` at cycle vertex {at}"));
                    }
                }
                Ok(())
            }
            FamilySpec::DoubleBroom { k, l, d } if k < 1 || l < 1 || d < 2 => {
                fail(format!("need k, l >= 1 and d >= 2, got k = {k}, l = {l}, d = {d}"))
            }
            FamilySpec::BalancedSpider { n, k } if !(k >= 2 && k + 3 <= n) => {
                fail(format!("need 2 <= k <= n - 3, got n = {n}, k = {k}"))
            }
            FamilySpec::Spider { legs, leg_len } if legs < 1 || leg_len < 1 => {
                fail(format!("need l, q >= 1, got l = {legs}, q = {leg_len}"))
            }
            FamilySpec::CompleteWithPendants { n, k } if !(n >= 3 && k + 3 <= n) => {
                fail(format!("need 0 <= k <= n - 3, got n = {n}, k = {k}"))
            }
            FamilySpec::Dumbbell { m1, m2, n } if m1 < 3 || m2 < 3 || n + 1 < m1 + m2 => fail(format!(
                "need m1, m2 >= 3 and n >= m1 + m2 - 1, got m1 = {m1}, m2 = {m2}, n = {n}"
            )),
            FamilySpec::UnionPaths { n, k }
            | FamilySpec::UnionComplete { n, k }
            | FamilySpec::UnionStar { n, k }
                if !(k >= 1 && k <= n) =>
            {
                fail(format!("need 1 <= k <= n, got n = {n}, k = {k}"))
            }
            _ => Ok(()),
        }
    }

    pub fn build(&self) -> Result<Graph> {
        self.validate()?;
        let n = self.order();
        if n > crate::graph::MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: crate::graph::MAX_VERTICES,
            });
        }
        let mut edges: Vec<(usize, usize)> = Vec::new();
        match *self {
            FamilySpec::Path { n } => return Ok(path_graph(n)),
            FamilySpec::Star { n } => return Ok(star_graph(n)),
            FamilySpec::Cycle { n } => cycle_edges(&mut edges, &(0..n).collect::<Vec<_>>()),
            FamilySpec::Complete { n } => clique_edges(&mut edges, 0..n),
            FamilySpec::Pineapple { n, g } => {
                cycle_edges(&mut edges, &(0..g).collect::<Vec<_>>());
                edges.extend((g..n).map(|v| (0, v)));
            }
            FamilySpec::Lollipop { n, g } => {
                cycle_edges(&mut edges, &(0..g).collect::<Vec<_>>());
                let tail: Vec<usize> = std::iter::once(0).chain(g..n).collect();
                edges.extend(tail.windows(2).map(|w| (w[0], w[1])));
            }
            FamilySpec::UnicyclicAssembly { g, ref trees } => {
                let mut slots: Vec<Graph> = (0..g).map(|_| path_graph(1)).collect();
                for &(at, t) in trees {
                    slots[at] = t.tree();
                }
                return assemble_unicyclic(g, &slots);
            }
            FamilySpec::DoubleBroom { k, l, d } => {
                edges.extend((1..d).map(|i| (i - 1, i)));
                edges.extend((d..d + k).map(|v| (0, v)));
                edges.extend((d + k..d + k + l).map(|v| (d - 1, v)));
            }
            FamilySpec::BalancedSpider { n, k } => {
                let q = (n - 1) / k;
                let r = n - 1 - k * q;
                let lens: Vec<usize> = (0..k).map(|i| if i < r { q + 1 } else { q }).collect();
                spider_edges(&mut edges, &lens);
            }
            FamilySpec::Spider { legs, leg_len } => spider_edges(&mut edges, &vec![leg_len; legs]),
            FamilySpec::CompleteWithPendants { n, k } => {
                clique_edges(&mut edges, 0..n - k);
                edges.extend((n - k..n).map(|v| (0, v)));
            }
            FamilySpec::Dumbbell { m1, m2, n } => {
                cycle_edges(&mut edges, &(0..m1).collect::<Vec<_>>());
                if n + 1 == m1 + m2 {
                    let second: Vec<usize> = std::iter::once(0).chain(m1..n).collect();
                    cycle_edges(&mut edges, &second);
                } else {
                    let inner = n - m1 - m2;
                    let bridge: Vec<usize> = std::iter::once(0).chain(m1..=m1 + inner).collect();
                    edges.extend(bridge.windows(2).map(|w| (w[0], w[1])));
                    cycle_edges(&mut edges, &(m1 + inner..n).collect::<Vec<_>>());
                }
            }
            FamilySpec::UnionPaths { n, k } => {
                let q = n / k;
                let r = n - k * q;
                let mut start = 0;
                for i in 0..k {
                    let len = if i < r { q + 1 } else { q };
                    edges.extend((start + 1..start + len).map(|v| (v - 1, v)));
                    start += len;
                }
            }
            FamilySpec::UnionComplete { n, k } => clique_edges(&mut edges, 0..n - k + 1),
            FamilySpec::UnionStar { n, k } => edges.extend((1..n - k + 1).map(|v| (0, v))),
        }
        Graph::from_edge_list(n, &edges)
    }

    /// Closed-form core index, where the family has one.
    pub fn expected_core_index(&self) -> Option<Count> {
        self.validate().ok()?;
        let u = |x: usize| x as u64;
        let value = match *self {
            FamilySpec::Path { n } => closed_forms::path(u(n)),
            FamilySpec::Star { n } => closed_forms::star(u(n)),
            FamilySpec::Cycle { n } => closed_forms::cycle(u(n)),
            FamilySpec::Complete { n } => closed_forms::complete(u(n)),
            FamilySpec::Pineapple { n, g } => closed_forms::pineapple(u(n), u(g)),
            FamilySpec::Lollipop { n, g } => closed_forms::lollipop(u(n), u(g)),
            FamilySpec::UnicyclicAssembly { .. } => return None,
            FamilySpec::DoubleBroom { k, l, d } => closed_forms::double_broom(u(k), u(l), u(d)),
            FamilySpec::BalancedSpider { n, k } => closed_forms::balanced_spider(u(n), u(k)),
            FamilySpec::Spider { legs, leg_len } => closed_forms::spider(u(legs), u(leg_len)),
            FamilySpec::CompleteWithPendants { n, k } => closed_forms::complete_with_pendants(u(n), u(k)),
            FamilySpec::Dumbbell { m1, m2, n } => closed_forms::dumbbell(u(m1), u(m2), u(n)),
            FamilySpec::UnionPaths { n, k } => closed_forms::component_extremes(u(n), u(k)).map(|e| e.min_graph),
            FamilySpec::UnionComplete { n, k } => {
                closed_forms::component_extremes(u(n), u(k)).map(|e| e.max_graph)
            }
            FamilySpec::UnionStar { n, k } => closed_forms::component_extremes(u(n), u(k)).map(|e| e.max_forest),
        };
        value.ok()
    }

    fn params(&self) -> Vec<(&'static str, usize)> {
        match *self {
            FamilySpec::Path { n }
            | FamilySpec::Star { n }
            | FamilySpec::Cycle { n }
            | FamilySpec::Complete { n } => vec![("n", n)],
            FamilySpec::Pineapple { n, g } | FamilySpec::Lollipop { n, g } => vec![("n", n), ("g", g)],
            FamilySpec::UnicyclicAssembly { g, .. } => vec![("g", g)],
            FamilySpec::DoubleBroom { k, l, d } => vec![("k", k), ("l", l), ("d", d)],
            FamilySpec::Spider { legs, leg_len } => vec![("l", legs), ("q", leg_len)],
            FamilySpec::Dumbbell { m1, m2, n } => vec![("m1", m1), ("m2", m2), ("n", n)],
            FamilySpec::BalancedSpider { n, k }
            | FamilySpec::CompleteWithPendants { n, k }
            | FamilySpec::UnionPaths { n, k }
            | FamilySpec::UnionComplete { n, k }
            | FamilySpec::UnionStar { n, k } => vec![("n", n), ("k", k)],
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.kind())?;
        let mut parts: Vec<String> = self.params().iter().map(|(k, v)| format!("{k}={v}")).collect();
        if let FamilySpec::UnicyclicAssembly { trees, .. } = self {
            let mut sorted = trees.clone();
            sorted.sort();
            parts.extend(sorted.iter().map(|(at, t)| format!("{at}={t}")));
        }
        f.write_str(&parts.join(","))
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::parse(0, "expected `kind:key=value,...`"))?;
        let mut values: Vec<(&str, &str, usize)> = Vec::new();
        let mut offset = kind.len() + 1;
        for part in rest.split(',') {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| Error::parse(offset, format!("expected key=value, found `{part}`")))?;
            values.push((k.trim(), v.trim(), offset + k.len() + 1));
            offset += part.len() + 1;
        }
        let number = |key: &str| -> Result<usize> {
            let (_, v, at) = values
                .iter()
                .find(|(k, _, _)| *k == key)
                .ok_or_else(|| Error::parse(s.len(), format!("missing parameter `{key}` for `{kind}`")))?;
            v.parse()
                .map_err(|_| Error::parse(*at, format!("`{v}` is not a nonnegative integer")))
        };
        let allow = |keys: &[&str]| -> Result<()> {
            for (k, _, at) in &values {
                let ok = keys.contains(k) || (kind == "assembly" && k.parse::<usize>().is_ok());
                if !ok {
                    return Err(Error::parse(at - k.len() - 1, format!("unknown parameter `{k}` for `{kind}`")));
                }
            }
            Ok(())
        };
        let spec = match kind.trim() {
            "path" | "star" | "cycle" | "complete" => {
                allow(&["n"])?;
                let n = number("n")?;
                match kind.trim() {
                    "path" => FamilySpec::Path { n },
                    "star" => FamilySpec::Star { n },
                    "cycle" => FamilySpec::Cycle { n },
                    _ => FamilySpec::Complete { n },
                }
            }
            "pineapple" => {
                allow(&["n", "g"])?;
                FamilySpec::Pineapple { n: number("n")?, g: number("g")? }
            }
            "lollipop" => {
                allow(&["n", "g"])?;
                FamilySpec::Lollipop { n: number("n")?, g: number("g")? }
            }
            "broom" => {
                allow(&["k", "l", "d"])?;
                FamilySpec::DoubleBroom { k: number("k")?, l: number("l")?, d: number("d")? }
            }
            "tnk" => {
                allow(&["n", "k"])?;
                FamilySpec::BalancedSpider { n: number("n")?, k: number("k")? }
            }
            "spider" => {
                allow(&["l", "q"])?;
                FamilySpec::Spider { legs: number("l")?, leg_len: number("q")? }
            }
            "pnk" => {
                allow(&["n", "k"])?;
                FamilySpec::CompleteWithPendants { n: number("n")?, k: number("k")? }
            }
            "dumbbell" => {
                allow(&["m1", "m2", "n"])?;
                FamilySpec::Dumbbell { m1: number("m1")?, m2: number("m2")?, n: number("n")? }
            }
            "union-paths" | "union-complete" | "union-star" => {
                allow(&["n", "k"])?;
                let (n, k) = (number("n")?, number("k")?);
                match kind.trim() {
                    "union-paths" => FamilySpec::UnionPaths { n, k },
                    "union-complete" => FamilySpec::UnionComplete { n, k },
                    _ => FamilySpec::UnionStar { n, k },
                }
            }
            "assembly" => {
                allow(&["g"])?;
                let g = number("g")?;
                let mut trees = Vec::new();
                for (k, v, at) in &values {
                    let Ok(idx) = k.parse::<usize>() else { continue };
                    trees.push((idx, parse_attachment(v, *at)?));
                }
                FamilySpec::UnicyclicAssembly { g, trees }
            }
            other => return Err(Error::parse(0, format!("unknown family kind `{other}`"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

fn parse_attachment(v: &str, at: usize) -> Result<Attachment> {
    let bad = || Error::parse(at, format!("expected `star<k>` or `path<k>`, found `{v}`"));
    let (ctor, digits): (fn(usize) -> Attachment, &str) = if let Some(d) = v.strip_prefix("star") {
        (Attachment::Star, d)
    } else if let Some(d) = v.strip_prefix("path") {
        (Attachment::Path, d)
    } else {
        return Err(bad());
    };
    digits.parse().map(ctor).map_err(|_| bad())
}

fn path_graph(n: usize) -> Graph {
    let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edge_list(n, &e).expect("valid path")
}

fn star_graph(n: usize) -> Graph {
    let e: Vec<_> = (1..n).map(|i| (0, i)).collect();
    Graph::from_edge_list(n, &e).expect("valid star")
}

fn cycle_edges(edges: &mut Vec<(usize, usize)>, order: &[usize]) {
    for i in 0..order.len() {
        edges.push((order[i], order[(i + 1) % order.len()]));
    }
}

fn clique_edges(edges: &mut Vec<(usize, usize)>, range: std::ops::Range<usize>) {
    for u in range.clone() {
        for v in u + 1..range.end {
            edges.push((u, v));
        }
    }
}

fn spider_edges(edges: &mut Vec<(usize, usize)>, legs: &[usize]) {
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
}

/// Cycle `0 - 1 - ... - (g-1) - 0` with `trees[i]` identified at cycle
/// vertex `i` through its vertex `0`. Tree `i` contributes its other vertices
/// in order, after the cycle and after the trees before it.
pub fn assemble_unicyclic(g: usize, trees: &[Graph]) -> Result<Graph> {
    if g < 3 {
        return Err(Error::invalid("assemble_unicyclic", format!("cycle length g = {g} < 3")));
    }
    if trees.len() != g {
        return Err(Error::invalid(
            "assemble_unicyclic",
            format!("expected {g} trees, one per cycle vertex, got {}", trees.len()),
        ));
    }
    let mut edges = Vec::new();
    cycle_edges(&mut edges, &(0..g).collect::<Vec<_>>());
    let mut offset = g;
    for (i, t) in trees.iter().enumerate() {
        if t.n() == 0 || !t.is_tree() {
            return Err(Error::invalid(
                "assemble_unicyclic",
                format!("attachment at cycle vertex {i} is not a tree"),
            ));
        }
        let id = |v: usize| if v == 0 { i } else { offset + v - 1 };
        edges.extend(t.edges().into_iter().map(|(a, b)| (id(a), id(b))));
        offset += t.n() - 1;
    }
    Graph::from_edge_list(offset, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::count::core_index;

    fn spec(s: &str) -> FamilySpec {
        s.parse().unwrap()
    }

    #[test]
    fn lollipop_shape() {
        let g = spec("lollipop:n=5,g=3").build().unwrap();
        assert_eq!((g.n(), g.m(), g.girth()), (5, 5, Some(3)));
        assert_eq!(g.pendant_vertices().len(), 1);
        assert_eq!(g.bridges(), vec![(0, 3), (3, 4)]);
    }

    #[test]
    fn pineapple_degrees() {
        let g = spec("pineapple:n=6,g=4").build().unwrap();
        let mut d = g.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(d, vec![4, 2, 2, 2, 1, 1]);
    }

    #[test]
    fn shared_dumbbell() {
        let g = spec("dumbbell:m1=3,m2=3,n=5").build().unwrap();
        assert_eq!(g.m(), 6);
        assert_eq!(g.degrees().iter().filter(|&&d| d == 4).count(), 1);
        assert_eq!(g.pendant_vertices().len(), 0);
        let joined = spec("dumbbell:m1=3,m2=4,n=9").build().unwrap();
        assert_eq!(joined.m(), 10);
        assert_eq!(joined.bridges().len(), 3);
    }

    #[test]
    fn assembly_matches_named_families() {
        let trivial = spec("assembly:g=5").build().unwrap();
        assert_eq!(trivial, spec("cycle:n=5").build().unwrap());
        let star = spec("assembly:g=4,0=star3").build().unwrap();
        assert_eq!(star, spec("pineapple:n=7,g=4").build().unwrap());
        let path = spec("assembly:g=4,0=path3").build().unwrap();
        assert_eq!(path, spec("lollipop:n=7,g=4").build().unwrap());
        let mixed = spec("assembly:g=4,0=star3,2=path2").build().unwrap();
        assert_eq!(mixed.n(), 9);
        assert!(mixed.is_unicyclic());
    }

    #[test]
    fn assembly_rejects_bad_trees() {
        let cyc = spec("cycle:n=3").build().unwrap();
        let k1 = path_graph(1);
        assert!(assemble_unicyclic(3, &[cyc, k1.clone(), k1.clone()]).is_err());
        assert!(assemble_unicyclic(3, &[k1.clone(), k1]).is_err());
        assert!("assembly:g=3,3=star1".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn text_round_trip() {
        for s in [
            "lollipop:n=9,g=4",
            "dumbbell:m1=3,m2=3,n=8",
            "tnk:n=8,k=3",
            "broom:k=1,l=2,d=3",
            "spider:l=3,q=2",
            "pnk:n=6,k=2",
            "union-paths:n=7,k=3",
            "union-complete:n=5,k=2",
            "union-star:n=5,k=2",
            "assembly:g=4,0=star3,2=path2",
        ] {
            assert_eq!(spec(s).to_string(), s);
        }
    }

    #[test]
    fn parse_errors() {
        assert!(matches!("lollipop".parse::<FamilySpec>(), Err(Error::Parse { .. })));
        assert!(matches!("lollipop:n=9".parse::<FamilySpec>(), Err(Error::Parse { .. })));
        assert!(matches!("lollipop:n=9,g=x".parse::<FamilySpec>(), Err(Error::Parse { offset: 15, .. })));
        assert!(matches!("blob:n=3".parse::<FamilySpec>(), Err(Error::Parse { .. })));
        assert!(matches!("path:n=3,g=2".parse::<FamilySpec>(), Err(Error::Parse { .. })));
        assert!(matches!("pineapple:n=5,g=5".parse::<FamilySpec>(), Err(Error::InvalidParameter { .. })));
    }

    #[test]
    fn balanced_spider_layout() {
        let t = spec("tnk:n=8,k=3").build().unwrap();
        assert_eq!(t.degree(0), 3);
        assert_eq!(t.pendant_vertices().len(), 3);
        assert_eq!(core_index(&t), Count::from(48u32));
    }

    #[test]
    fn closed_forms_match_engine() {
        let mut specs = Vec::new();
        for n in 1..=9 {
            specs.push(FamilySpec::Path { n });
            specs.push(FamilySpec::Star { n });
            specs.push(FamilySpec::Complete { n });
            for k in 1..=n {
                specs.push(FamilySpec::UnionPaths { n, k });
                specs.push(FamilySpec::UnionComplete { n, k });
                specs.push(FamilySpec::UnionStar { n, k });
            }
        }
        for n in 3..=9 {
            specs.push(FamilySpec::Cycle { n });
            for g in 3..n {
                specs.push(FamilySpec::Pineapple { n, g });
                specs.push(FamilySpec::Lollipop { n, g });
            }
            for k in 0..=n - 3 {
                specs.push(FamilySpec::CompleteWithPendants { n, k });
            }
            for k in 2..=n.saturating_sub(3) {
                specs.push(FamilySpec::BalancedSpider { n, k });
            }
        }
        for n in 4..=9 {
            specs.push(FamilySpec::lopsided_broom(n).unwrap());
            for k in 2..=n - 2 {
                specs.push(FamilySpec::balanced_broom(n, k).unwrap());
            }
        }
        for legs in 1..=4 {
            for leg_len in 1..=2 {
                specs.push(FamilySpec::Spider { legs, leg_len });
            }
        }
        for (m1, m2) in [(3, 3), (3, 4), (4, 4), (3, 5)] {
            for n in m1 + m2 - 1..=10 {
                specs.push(FamilySpec::Dumbbell { m1, m2, n });
            }
        }
        for s in specs {
            let g = s.build().unwrap();
            assert_eq!(g.n(), s.order(), "{s}");
            assert_eq!(Some(core_index(&g)), s.expected_core_index(), "{s}");
        }
    }
}
