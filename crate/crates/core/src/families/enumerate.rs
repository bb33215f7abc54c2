//! Exhaustive enumeration of graph classes by index.
//!
//! Every enumerator maps an index range `0..len()` onto class members so that
//! scans can split the range across workers. Indices that do not decode to a
//! member return `None`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Guard, Result};
use crate::graph::Graph;

pub const TREE_GUARD: usize = 9;
pub const GRAPH_GUARD: usize = 7;
pub const UNICYCLIC_GUARD: usize = 9;

pub trait IndexedClass: Sync {
    fn order(&self) -> usize;
    fn len(&self) -> u64;
    fn get(&self, index: u64) -> Option<Graph>;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn iter(&self) -> Box<dyn Iterator<Item = Graph> + '_> {
        Box::new((0..self.len()).filter_map(move |i| self.get(i)))
    }
}

// ---------------------------------------------------------------------------
// Trees
// ---------------------------------------------------------------------------

/// Labeled trees on `0..n` in Prüfer order.
#[derive(Debug, Clone)]
pub struct LabeledTrees {
    n: usize,
}

impl LabeledTrees {
    pub fn new(n: usize, guard: Guard) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("labeled_trees", "n must be at least 1"));
        }
        guard.check("labeled_trees", n, TREE_GUARD)?;
        if n > 20 {
            return Err(Error::TooManyVertices { n, max: 20 });
        }
        Ok(LabeledTrees { n })
    }
}

impl IndexedClass for LabeledTrees {
    fn order(&self) -> usize {
        self.n
    }

    fn len(&self) -> u64 {
        if self.n <= 2 {
            1
        } else {
            (self.n as u64).pow(self.n as u32 - 2)
        }
    }

    fn get(&self, index: u64) -> Option<Graph> {
        if index >= self.len() {
            return None;
        }
        let n = self.n;
        let mut seq = [0usize; 20];
        let mut rest = index;
        for slot in seq[..n.saturating_sub(2)].iter_mut().rev() {
            *slot = (rest % n as u64) as usize;
            rest /= n as u64;
        }
        Some(tree_from_prufer(n, &seq[..n.saturating_sub(2)]))
    }
}

/// Streams all `n^{n-2}` labeled trees, guarded at `n <= 9`.
pub fn labeled_trees(n: usize) -> Result<impl Iterator<Item = Graph>> {
    let trees = LabeledTrees::new(n, Guard::Enforced)?;
    Ok((0..trees.len()).map(move |i| trees.get(i).expect("index in range")))
}

/// Decodes a Prüfer sequence of length `n - 2`.
pub fn tree_from_prufer(n: usize, seq: &[usize]) -> Graph {
    assert!(n >= 1 && seq.len() == n.saturating_sub(2));
    let mut adj = vec![0u64; n];
    if n == 1 {
        return Graph::from_adjacency_unchecked(adj);
    }
    let mut degree = vec![1u32; n];
    for &a in seq {
        degree[a] += 1;
    }
    let mut leaves: u64 = (0..n).filter(|&v| degree[v] == 1).fold(0, |m, v| m | 1 << v);
    for &a in seq {
        let leaf = leaves.trailing_zeros() as usize;
        leaves &= !(1 << leaf);
        adj[leaf] |= 1 << a;
        adj[a] |= 1 << leaf;
        degree[a] -= 1;
        if degree[a] == 1 {
            leaves |= 1 << a;
        }
    }
    let u = leaves.trailing_zeros() as usize;
    let v = 63 - leaves.leading_zeros() as usize;
    adj[u] |= 1 << v;
    adj[v] |= 1 << u;
    Graph::from_adjacency_unchecked(adj)
}

// ---------------------------------------------------------------------------
// All labeled graphs
// ---------------------------------------------------------------------------

/// All `2^{C(n,2)}` labeled graphs; bit `i` of the index selects the `i`-th
/// pair in lexicographic order.
#[derive(Debug, Clone)]
pub struct LabeledGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
}

impl LabeledGraphs {
    pub fn new(n: usize, guard: Guard) -> Result<Self> {
        guard.check("labeled_graphs", n, GRAPH_GUARD)?;
        if n > 11 {
            return Err(Error::TooManyVertices { n, max: 11 });
        }
        let mut pairs = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                pairs.push((u, v));
            }
        }
        Ok(LabeledGraphs { n, pairs })
    }
}

impl IndexedClass for LabeledGraphs {
    fn order(&self) -> usize {
        self.n
    }

    fn len(&self) -> u64 {
        1u64 << self.pairs.len()
    }

    fn get(&self, index: u64) -> Option<Graph> {
        (index < self.len()).then(|| graph_from_pairs(self.n, &self.pairs, index))
    }
}

fn graph_from_pairs(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let mut adj = vec![0u64; n];
    let mut bits = mask;
    while bits != 0 {
        let i = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let (u, v) = pairs[i];
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    Graph::from_adjacency_unchecked(adj)
}

/// The labeled graph on `n` vertices selected by an edge mask.
pub fn graph_from_mask(n: usize, mask: u64) -> Result<Graph> {
    let graphs = LabeledGraphs::new(n, Guard::Lifted)?;
    graphs
        .get(mask)
        .ok_or_else(|| Error::invalid("graph_from_mask", format!("mask {mask} has bits beyond C({n},2)")))
}

/// Streams every labeled graph accepted by `predicate`, guarded at `n <= 7`.
pub fn labeled_graphs<P>(n: usize, predicate: P) -> Result<impl Iterator<Item = Graph>>
where
    P: Fn(&Graph) -> bool,
{
    let graphs = LabeledGraphs::new(n, Guard::Enforced)?;
    Ok((0..graphs.len())
        .map(move |i| graphs.get(i).expect("index in range"))
        .filter(move |g| predicate(g)))
}

// ---------------------------------------------------------------------------
// Unicyclic graphs
// ---------------------------------------------------------------------------

/// Labeled unicyclic graphs, each produced once as a labeled tree plus the
/// largest edge of the cycle it closes.
#[derive(Debug, Clone)]
pub struct LabeledUnicyclic {
    trees: LabeledTrees,
    pairs: Vec<(usize, usize)>,
}

impl LabeledUnicyclic {
    pub fn new(n: usize, guard: Guard) -> Result<Self> {
        if n < 3 {
            return Err(Error::invalid("labeled_unicyclic", format!("n = {n} < 3")));
        }
        guard.check("labeled_unicyclic", n, UNICYCLIC_GUARD)?;
        let trees = LabeledTrees::new(n, Guard::Lifted)?;
        let pairs = LabeledGraphs::new(n, Guard::Lifted)?.pairs;
        Ok(LabeledUnicyclic { trees, pairs })
    }
}

impl IndexedClass for LabeledUnicyclic {
    fn order(&self) -> usize {
        self.trees.n
    }

    fn len(&self) -> u64 {
        self.trees.len() * self.pairs.len() as u64
    }

    fn get(&self, index: u64) -> Option<Graph> {
        let p = self.pairs.len() as u64;
        let tree = self.trees.get(index / p)?;
        let (u, v) = self.pairs[(index % p) as usize];
        if tree.has_edge(u, v) {
            return None;
        }
        // walk the tree path from v back to u
        let n = tree.n();
        let mut parent = vec![usize::MAX; n];
        let mut queue = vec![u];
        parent[u] = u;
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            i += 1;
            for y in tree.neighbors(x).iter() {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    queue.push(y);
                }
            }
        }
        let mut x = v;
        while x != u {
            let p = parent[x];
            if (p.min(x), p.max(x)) > (u, v) {
                return None;
            }
            x = p;
        }
        tree.with_edge(u, v).ok()
    }
}

pub fn labeled_unicyclic(n: usize) -> Result<impl Iterator<Item = Graph>> {
    let class = LabeledUnicyclic::new(n, Guard::Enforced)?;
    Ok((0..class.len()).filter_map(move |i| class.get(i)))
}

/// One labeled copy of every unicyclic graph (and usually several), built
/// as the cycle `0 - 1 - ... - (g-1) - 0` plus a parent pointer for every
/// other vertex. Much smaller than the labeled class, and it meets every
/// isomorphism class.
#[derive(Debug, Clone)]
pub struct UnicyclicRepresentatives {
    n: usize,
    /// `(girth, first index, count)` per girth
    blocks: Vec<(usize, u64, u64)>,
}

impl UnicyclicRepresentatives {
    pub fn new(n: usize, guard: Guard) -> Result<Self> {
        Self::with_girths(n, 3..=n, guard)
    }

    pub fn with_girths(n: usize, girths: std::ops::RangeInclusive<usize>, guard: Guard) -> Result<Self> {
        if n < 3 {
            return Err(Error::invalid("unicyclic_representatives", format!("n = {n} < 3")));
        }
        guard.check("unicyclic_representatives", n, UNICYCLIC_GUARD)?;
        if n > 16 {
            return Err(Error::TooManyVertices { n, max: 16 });
        }
        let mut blocks = Vec::new();
        let mut start = 0;
        for g in girths.filter(|&g| g >= 3 && g <= n) {
            let count = ((n - 1) as u64).pow((n - g) as u32);
            blocks.push((g, start, count));
            start += count;
        }
        Ok(UnicyclicRepresentatives { n, blocks })
    }
}

impl IndexedClass for UnicyclicRepresentatives {
    fn order(&self) -> usize {
        self.n
    }

    fn len(&self) -> u64 {
        self.blocks.last().map_or(0, |&(_, s, c)| s + c)
    }

    fn get(&self, index: u64) -> Option<Graph> {
        let &(g, start, _) = self.blocks.iter().find(|&&(_, s, c)| index >= s && index < s + c)?;
        let n = self.n;
        let mut parent = [0usize; 16];
        let mut rest = index - start;
        for v in (g..n).rev() {
            let d = (rest % (n as u64 - 1)) as usize;
            rest /= n as u64 - 1;
            parent[v] = if d < v { d } else { d + 1 };
        }
        // every pointer chain must end on the cycle
        let mut rooted: u64 = (1u64 << g) - 1;
        for v in g..n {
            let mut chain = 0u64;
            let mut x = v;
            while rooted >> x & 1 == 0 {
                if chain >> x & 1 == 1 {
                    return None;
                }
                chain |= 1 << x;
                x = parent[x];
            }
            rooted |= chain;
        }
        let mut adj = vec![0u64; n];
        let mut link = |a: usize, b: usize| {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        };
        for i in 0..g {
            link(i, (i + 1) % g);
        }
        for v in g..n {
            link(v, parent[v]);
        }
        Some(Graph::from_adjacency_unchecked(adj))
    }
}

pub fn unicyclic_representatives(n: usize) -> Result<impl Iterator<Item = Graph>> {
    let class = UnicyclicRepresentatives::new(n, Guard::Enforced)?;
    Ok((0..class.len()).filter_map(move |i| class.get(i)))
}

// ---------------------------------------------------------------------------
// Named classes
// ---------------------------------------------------------------------------

/// Graph classes that scans understand. Text names: `all`, `connected`,
/// `components:k`, `forests`, `forest-components:k`, `trees`,
/// `trees-pendants:k`, `unicyclic`, `unicyclic-girth:g`, `pendants:k`,
/// `pendant-free`, `two-connected`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GraphClass {
    All,
    Connected,
    Components(usize),
    Forests,
    ForestComponents(usize),
    Trees,
    TreesWithPendants(usize),
    Unicyclic,
    UnicyclicGirth(usize),
    /// Connected graphs with exactly `k` pendant vertices.
    ConnectedWithPendants(usize),
    /// Connected graphs with minimum degree at least two.
    PendantFree,
    TwoConnected,
}

impl GraphClass {
    pub fn accepts(&self, g: &Graph) -> bool {
        match *self {
            GraphClass::All => true,
            GraphClass::Connected => g.is_connected(),
            GraphClass::Components(k) => g.component_count() == k,
            GraphClass::Forests => g.is_forest(),
            GraphClass::ForestComponents(k) => g.is_forest() && g.component_count() == k,
            GraphClass::Trees => g.is_tree(),
            GraphClass::TreesWithPendants(k) => g.is_tree() && g.pendant_vertices().len() == k,
            GraphClass::Unicyclic => g.is_unicyclic(),
            GraphClass::UnicyclicGirth(girth) => g.is_unicyclic() && g.girth() == Some(girth),
            GraphClass::ConnectedWithPendants(k) => g.is_connected() && g.pendant_vertices().len() == k,
            GraphClass::PendantFree => g.is_connected() && g.min_degree().is_some_and(|d| d >= 2),
            GraphClass::TwoConnected => g.n() >= 3 && g.is_two_connected().unwrap_or(false),
        }
    }

    /// Whether the enumeration visits every labeled member exactly once, as
    /// opposed to a smaller set that still meets every isomorphism class.
    pub fn is_labeled(&self) -> bool {
        !matches!(self, GraphClass::Unicyclic | GraphClass::UnicyclicGirth(_))
    }

    /// Largest `n` the default guard allows for this class.
    pub fn guard_limit(&self) -> usize {
        match self {
            GraphClass::Trees | GraphClass::TreesWithPendants(_) => TREE_GUARD,
            GraphClass::Unicyclic | GraphClass::UnicyclicGirth(_) => UNICYCLIC_GUARD,
            _ => GRAPH_GUARD,
        }
    }

    pub fn source(&self, n: usize, guard: Guard) -> Result<ClassSource> {
        let inner = match *self {
            GraphClass::Trees | GraphClass::TreesWithPendants(_) => Source::Trees(LabeledTrees::new(n, guard)?),
            GraphClass::Unicyclic => Source::Unicyclic(UnicyclicRepresentatives::new(n, guard)?),
            GraphClass::UnicyclicGirth(g) => {
                Source::Unicyclic(UnicyclicRepresentatives::with_girths(n, g..=g, guard)?)
            }
            _ => Source::Graphs(LabeledGraphs::new(n, guard)?),
        };
        Ok(ClassSource { class: *self, inner })
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphClass::All => f.write_str("all"),
            GraphClass::Connected => f.write_str("connected"),
            GraphClass::Components(k) => write!(f, "components:{k}"),
            GraphClass::Forests => f.write_str("forests"),
            GraphClass::ForestComponents(k) => write!(f, "forest-components:{k}"),
            GraphClass::Trees => f.write_str("trees"),
            GraphClass::TreesWithPendants(k) => write!(f, "trees-pendants:{k}"),
            GraphClass::Unicyclic => f.write_str("unicyclic"),
            GraphClass::UnicyclicGirth(g) => write!(f, "unicyclic-girth:{g}"),
            GraphClass::ConnectedWithPendants(k) => write!(f, "pendants:{k}"),
            GraphClass::PendantFree => f.write_str("pendant-free"),
            GraphClass::TwoConnected => f.write_str("two-connected"),
        }
    }
}

impl FromStr for GraphClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, arg) = match s.split_once(':') {
            Some((a, b)) => (a, Some(b)),
            None => (s, None),
        };
        let param = || -> Result<usize> {
            let raw = arg.ok_or_else(|| Error::parse(s.len(), format!("class `{name}` needs a parameter, e.g. `{name}:2`")))?;
            raw.parse()
                .map_err(|_| Error::parse(name.len() + 1, format!("`{raw}` is not a nonnegative integer")))
        };
        let plain = |c: GraphClass| -> Result<GraphClass> {
            match arg {
                None => Ok(c),
                Some(_) => Err(Error::parse(name.len(), format!("class `{name}` takes no parameter"))),
            }
        };
        match name {
            "all" => plain(GraphClass::All),
            "connected" => plain(GraphClass::Connected),
            "components" => Ok(GraphClass::Components(param()?)),
            "forests" => plain(GraphClass::Forests),
            "forest-components" => Ok(GraphClass::ForestComponents(param()?)),
            "trees" => plain(GraphClass::Trees),
            "trees-pendants" => Ok(GraphClass::TreesWithPendants(param()?)),
            "unicyclic" => plain(GraphClass::Unicyclic),
            "unicyclic-girth" => Ok(GraphClass::UnicyclicGirth(param()?)),
            "pendants" => Ok(GraphClass::ConnectedWithPendants(param()?)),
            "pendant-free" => plain(GraphClass::PendantFree),
            "two-connected" => plain(GraphClass::TwoConnected),
            _ => Err(Error::parse(0, format!("unknown class `{name}`"))),
        }
    }
}

#[derive(Debug, Clone)]
enum Source {
    Trees(LabeledTrees),
    Graphs(LabeledGraphs),
    Unicyclic(UnicyclicRepresentatives),
}

/// A class together with the enumerator that covers it.
#[derive(Debug, Clone)]
pub struct ClassSource {
    class: GraphClass,
    inner: Source,
}

impl ClassSource {
    pub fn class(&self) -> GraphClass {
        self.class
    }

    fn raw(&self) -> &dyn IndexedClass {
        match &self.inner {
            Source::Trees(t) => t,
            Source::Graphs(g) => g,
            Source::Unicyclic(u) => u,
        }
    }
}

impl IndexedClass for ClassSource {
    fn order(&self) -> usize {
        self.raw().order()
    }

    fn len(&self) -> u64 {
        self.raw().len()
    }

    fn get(&self, index: u64) -> Option<Graph> {
        let g = self.raw().get(index)?;
        let keep = match self.class {
            // the decoder already guarantees these
            GraphClass::Trees | GraphClass::Unicyclic => true,
            GraphClass::UnicyclicGirth(_) => true,
            other => other.accepts(&g),
        };
        keep.then_some(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;
    use std::collections::BTreeSet;

    #[test]
    fn cayley_counts() {
        assert_eq!(labeled_trees(1).unwrap().count(), 1);
        assert_eq!(labeled_trees(2).unwrap().count(), 1);
        assert_eq!(labeled_trees(4).unwrap().count(), 16);
        assert_eq!(labeled_trees(5).unwrap().count(), 125);
        assert!(labeled_trees(10).is_err());
    }

    #[test]
    fn trees_are_distinct_trees() {
        let all: Vec<Graph> = labeled_trees(6).unwrap().collect();
        assert!(all.iter().all(Graph::is_tree));
        let distinct: BTreeSet<_> = all.iter().map(Graph::edges).collect();
        assert_eq!(distinct.len(), 6usize.pow(4));
        let shapes: BTreeSet<_> = labeled_trees(4).unwrap().map(|t| canonical_form(&t).unwrap()).collect();
        assert_eq!(shapes.len(), 2);
    }

    #[test]
    fn prufer_known() {
        // sequence [3, 3] on 4 vertices is the star centred at 3
        let t = tree_from_prufer(4, &[3, 3]);
        assert_eq!(t.degree(3), 3);
    }

    #[test]
    fn connected_graphs_on_four() {
        assert_eq!(labeled_graphs(4, Graph::is_connected).unwrap().count(), 38);
        assert_eq!(labeled_graphs(3, |_| true).unwrap().count(), 8);
        assert!(labeled_graphs(8, |_| true).is_err());
    }

    #[test]
    fn labeled_unicyclic_matches_filter() {
        for n in 3..=6 {
            let by_tree: BTreeSet<_> = labeled_unicyclic(n).unwrap().map(|g| g.edges()).collect();
            let by_mask: BTreeSet<_> = labeled_graphs(n, Graph::is_unicyclic).unwrap().map(|g| g.edges()).collect();
            assert_eq!(by_tree, by_mask, "n = {n}");
            assert_eq!(labeled_unicyclic(n).unwrap().count(), by_mask.len(), "no duplicates at n = {n}");
        }
    }

    #[test]
    fn representatives_meet_every_class() {
        for n in 3..=7 {
            let reps: BTreeSet<_> = unicyclic_representatives(n)
                .unwrap()
                .inspect(|g| assert!(g.is_unicyclic()))
                .map(|g| canonical_form(&g).unwrap())
                .collect();
            let labeled: BTreeSet<_> = labeled_unicyclic(n)
                .unwrap()
                .map(|g| canonical_form(&g).unwrap())
                .collect();
            assert_eq!(reps, labeled, "n = {n}");
        }
        // unlabeled unicyclic graphs: 1, 2, 5, 13, 33 for n = 3..7
        let count = |n| {
            unicyclic_representatives(n)
                .unwrap()
                .map(|g| canonical_form(&g).unwrap())
                .collect::<BTreeSet<_>>()
                .len()
        };
        assert_eq!([count(3), count(4), count(5), count(6), count(7)], [1, 2, 5, 13, 33]);
    }

    #[test]
    fn class_names_round_trip() {
        for s in [
            "all",
            "connected",
            "components:2",
            "forests",
            "forest-components:3",
            "trees",
            "trees-pendants:2",
            "unicyclic",
            "unicyclic-girth:4",
            "pendants:1",
            "pendant-free",
            "two-connected",
        ] {
            assert_eq!(s.parse::<GraphClass>().unwrap().to_string(), s);
        }
        assert!("components".parse::<GraphClass>().is_err());
        assert!("trees:3".parse::<GraphClass>().is_err());
        assert!("blob".parse::<GraphClass>().is_err());
    }

    #[test]
    fn class_source_filters() {
        let src = GraphClass::Components(2).source(4, Guard::Enforced).unwrap();
        assert!(src.iter().all(|g| g.component_count() == 2));
        let girth4 = GraphClass::UnicyclicGirth(4).source(6, Guard::Enforced).unwrap();
        assert!(girth4.iter().all(|g| g.girth() == Some(4)));
    }
}
