//! Canonical forms for small graphs.
//!
//! The canonical form is the graph6 encoding of a canonically relabeled copy,
//! so two graphs are isomorphic exactly when their forms are byte-equal. The
//! relabeling comes from an individualization-refinement search: the ordered
//! partition of the vertices is refined by neighbour counts, a vertex of the
//! first smallest non-singleton cell is individualized, and the search
//! recurses; every discrete leaf yields a labeling and the lexicographically
//! least encoding wins. Vertices of a cell that are twins of an already
//! explored vertex are skipped, because swapping twins is an automorphism that
//! fixes the current partition.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Guard, Result};
use crate::format::{from_graph6, to_graph6_bytes};
use crate::graph::Graph;

pub const CANONICAL_GUARD: usize = 12;

/// Canonical byte string of a graph (graph6 of the canonical relabeling).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }

    /// The canonical representative itself.
    pub fn to_graph(&self) -> Graph {
        from_graph6(self.as_str()).expect("canonical forms are valid graph6")
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.as_str())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for CanonicalForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_form_with(g, Guard::Enforced)
}

pub fn canonical_form_with(g: &Graph, guard: Guard) -> Result<CanonicalForm> {
    guard.check("canonical_form", g.n(), CANONICAL_GUARD)?;
    Ok(canonical_form_unguarded(g))
}

pub(crate) fn canonical_form_unguarded(g: &Graph) -> CanonicalForm {
    let (_, form) = canonical_labeling(g);
    form
}

/// `order[i]` is the vertex placed at canonical position `i`.
pub fn canonical_labeling(g: &Graph) -> (Vec<usize>, CanonicalForm) {
    let n = g.n();
    if n == 0 {
        return (Vec::new(), CanonicalForm(to_graph6_bytes(g)));
    }
    let mut search = Search {
        g,
        best: None,
    };
    let start = vec![(0..n).collect::<Vec<_>>()];
    search.explore(start);
    let (order, bytes) = search.best.expect("at least one leaf");
    (order, CanonicalForm(bytes))
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n()
        && a.m() == b.m()
        && {
            let mut da = a.degrees();
            let mut db = b.degrees();
            da.sort_unstable();
            db.sort_unstable();
            da == db
        }
        && canonical_form_unguarded(a) == canonical_form_unguarded(b)
}

type Partition = Vec<Vec<usize>>;

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<usize>, Vec<u8>)>,
}

impl Search<'_> {
    fn explore(&mut self, mut cells: Partition) {
        refine(self.g, &mut cells);
        if cells.iter().all(|c| c.len() == 1) {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let bytes = encode_in_order(self.g, &order);
            if self.best.as_ref().is_none_or(|(_, b)| bytes < *b) {
                self.best = Some((order, bytes));
            }
            return;
        }
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i)
            .expect("non-discrete partition has a large cell");
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            if tried.iter().any(|&t| twins(self.g, t, v)) {
                continue;
            }
            tried.push(v);
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(vec![v]);
            next.push(cells[target].iter().copied().filter(|&w| w != v).collect());
            next.extend_from_slice(&cells[target + 1..]);
            self.explore(next);
        }
    }
}

fn twins(g: &Graph, a: usize, b: usize) -> bool {
    let adj = g.adjacency();
    let mask = !((1u64 << a) | (1u64 << b));
    adj[a] & mask == adj[b] & mask
}

/// Splits cells by the number of neighbours in every cell until stable.
/// Subcells are ordered by their signature, which keeps the result invariant
/// under relabeling.
fn refine(g: &Graph, cells: &mut Partition) {
    let adj = g.adjacency();
    loop {
        let masks: Vec<u64> = cells
            .iter()
            .map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect();
        let mut split_any = false;
        let mut out: Partition = Vec::with_capacity(cells.len());
        for cell in cells.iter() {
            if cell.len() == 1 {
                out.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let sig = masks.iter().map(|&m| (adj[v] & m).count_ones()).collect();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let before = out.len();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    out.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
            split_any |= out.len() - before > 1;
        }
        *cells = out;
        if !split_any {
            break;
        }
    }
}

fn encode_in_order(g: &Graph, order: &[usize]) -> Vec<u8> {
    let mut pos = vec![0usize; order.len()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    to_graph6_bytes(&g.permute(&pos))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edge_list(n, e).unwrap()
    }

    #[test]
    fn relabeled_paths_agree() {
        let a = g(4, &[(0, 1), (1, 2), (2, 3)]);
        let b = g(4, &[(2, 0), (0, 3), (3, 1)]);
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
        let star = g(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_ne!(canonical_form(&a).unwrap(), canonical_form(&star).unwrap());
    }

    #[test]
    fn labeling_reproduces_form() {
        let c5 = g(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let (order, form) = canonical_labeling(&c5);
        let mut pos = vec![0; 5];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        assert_eq!(form.to_graph(), c5.permute(&pos));
    }

    #[test]
    fn size_guard() {
        let big = Graph::empty(13).unwrap();
        assert!(matches!(canonical_form(&big), Err(Error::SizeGuard { .. })));
        assert!(canonical_form_with(&big, Guard::Lifted).is_ok());
    }

    #[test]
    fn symmetric_graphs_finish() {
        let mut e = Vec::new();
        for u in 0..12 {
            for v in u + 1..12 {
                e.push((u, v));
            }
        }
        let k12 = g(12, &e);
        assert_eq!(canonical_form(&k12).unwrap().to_graph(), k12);
        let empty = Graph::empty(12).unwrap();
        assert_eq!(canonical_form(&empty).unwrap().to_graph(), empty);
    }
}
