//! Exhaustive extremal scans and the registry of verified statements.
//!
//! A scan walks every member of a [`GraphClass`] at a fixed order, computes
//! the core index of each, and keeps the extreme values with their
//! extremizers reduced to canonical forms. The index range is split into
//! chunks that workers process independently; merging chunk results is
//! associative, so the outcome does not depend on the worker count.

mod checks;
mod wiener;

pub use checks::{theorem_ids, theorems, verify_all, verify_theorem, Theorem, VerifyOptions};
pub use wiener::{spearman, wiener_correlation, WienerCorrelation, WienerRow};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::canon::{canonical_form_unguarded, CanonicalForm};
use crate::count::{core_index, core_index_u128, Count};
use crate::error::{Error, Guard, Result};
use crate::families::{ClassSource, FamilySpec, GraphClass, IndexedClass};
use crate::format::to_graph6;
use crate::graph::Graph;

/// Version of the JSON layout written by reports.
pub const SCHEMA_VERSION: u32 = 1;

/// Scans keep values in 128 bits, which holds `F` for every graph this small.
pub const SCAN_HARD_LIMIT: usize = 14;

const CHUNK: u64 = 1 << 12;

/// Runs `f` on a pool of `workers` threads, or on the global pool for `0`.
pub fn with_workers<R: Send>(workers: usize, f: impl FnOnce() -> R + Send) -> R {
    if workers == 0 {
        return f();
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("thread pool")
        .install(f)
}

/// Extreme values seen so far, with every extremizer up to isomorphism.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Extremes {
    pub count: u64,
    pub min: u128,
    pub max: u128,
    pub minimizers: BTreeSet<CanonicalForm>,
    pub maximizers: BTreeSet<CanonicalForm>,
}

impl Extremes {
    pub fn observe(&mut self, g: &Graph, value: u128) {
        if self.count == 0 {
            let form = canonical_form_unguarded(g);
            *self = Extremes {
                count: 1,
                min: value,
                max: value,
                minimizers: BTreeSet::from([form.clone()]),
                maximizers: BTreeSet::from([form]),
            };
            return;
        }
        self.count += 1;
        if value < self.min {
            self.min = value;
            self.minimizers = BTreeSet::from([canonical_form_unguarded(g)]);
        } else if value == self.min {
            self.minimizers.insert(canonical_form_unguarded(g));
        }
        if value > self.max {
            self.max = value;
            self.maximizers = BTreeSet::from([canonical_form_unguarded(g)]);
        } else if value == self.max {
            self.maximizers.insert(canonical_form_unguarded(g));
        }
    }

    pub fn merge(mut self, other: Extremes) -> Extremes {
        if other.count == 0 {
            return self;
        }
        if self.count == 0 {
            return other;
        }
        self.count += other.count;
        match other.min.cmp(&self.min) {
            std::cmp::Ordering::Less => {
                self.min = other.min;
                self.minimizers = other.minimizers;
            }
            std::cmp::Ordering::Equal => self.minimizers.extend(other.minimizers),
            std::cmp::Ordering::Greater => {}
        }
        match other.max.cmp(&self.max) {
            std::cmp::Ordering::Greater => {
                self.max = other.max;
                self.maximizers = other.maximizers;
            }
            std::cmp::Ordering::Equal => self.maximizers.extend(other.maximizers),
            std::cmp::Ordering::Less => {}
        }
        self
    }

    pub fn extremizers(&self, side: Side) -> &BTreeSet<CanonicalForm> {
        match side {
            Side::Min => &self.minimizers,
            Side::Max => &self.maximizers,
        }
    }

    pub fn value(&self, side: Side) -> u128 {
        match side {
            Side::Min => self.min,
            Side::Max => self.max,
        }
    }
}

fn merge_maps<K: Ord>(mut a: BTreeMap<K, Extremes>, b: BTreeMap<K, Extremes>) -> BTreeMap<K, Extremes> {
    for (k, e) in b {
        let slot = a.remove(&k).unwrap_or_default();
        a.insert(k, slot.merge(e));
    }
    a
}

/// `F` in 128 bits, as a scan value.
pub fn scan_value(g: &Graph) -> Result<u128> {
    core_index_u128(g).ok_or_else(|| Error::invalid("scan", "core index does not fit in 128 bits"))
}

/// Walks every member of `source`, files it under each key `keys` returns,
/// and records the extremes of `value` per key.
pub fn census<S, K, KF, VF>(source: &S, keys: KF, value: VF, workers: usize) -> Result<BTreeMap<K, Extremes>>
where
    S: IndexedClass + ?Sized,
    K: Ord + Send,
    KF: Fn(&Graph) -> Vec<K> + Sync,
    VF: Fn(&Graph) -> Result<u128> + Sync,
{
    let len = source.len();
    let chunks = len.div_ceil(CHUNK);
    with_workers(workers, || {
        (0..chunks)
            .into_par_iter()
            .map(|c| {
                let mut local: BTreeMap<K, Extremes> = BTreeMap::new();
                for i in c * CHUNK..len.min((c + 1) * CHUNK) {
                    let Some(g) = source.get(i) else { continue };
                    let ks = keys(&g);
                    if ks.is_empty() {
                        continue;
                    }
                    let f = value(&g)?;
                    for k in ks {
                        local.entry(k).or_default().observe(&g, f);
                    }
                }
                Ok(local)
            })
            .try_reduce(BTreeMap::new, |a, b| Ok(merge_maps(a, b)))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Min,
    Max,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Min => "min",
            Side::Max => "max",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Min,
    Max,
    Both,
}

impl Mode {
    pub fn sides(self) -> &'static [Side] {
        match self {
            Mode::Min => &[Side::Min],
            Mode::Max => &[Side::Max],
            Mode::Both => &[Side::Min, Side::Max],
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Min => "min",
            Mode::Max => "max",
            Mode::Both => "both",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "min" => Ok(Mode::Min),
            "max" => Ok(Mode::Max),
            "both" => Ok(Mode::Both),
            _ => Err(Error::parse(0, format!("mode must be min, max or both, got `{s}`"))),
        }
    }
}

/// A scan request. Expected families are compared to the extremizer set of
/// their side; the match requires equality up to isomorphism.
#[derive(Debug, Clone)]
pub struct Scan {
    pub class: GraphClass,
    pub n: usize,
    pub mode: Mode,
    pub expect_min: Vec<FamilySpec>,
    pub expect_max: Vec<FamilySpec>,
    pub guard: Guard,
    pub workers: usize,
}

impl Scan {
    pub fn new(class: GraphClass, n: usize) -> Self {
        Scan {
            class,
            n,
            mode: Mode::Both,
            expect_min: Vec::new(),
            expect_max: Vec::new(),
            guard: Guard::Enforced,
            workers: 0,
        }
    }

    pub fn mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    pub fn expect(mut self, side: Side, families: impl IntoIterator<Item = FamilySpec>) -> Self {
        match side {
            Side::Min => self.expect_min.extend(families),
            Side::Max => self.expect_max.extend(families),
        }
        self
    }

    pub fn guard(mut self, guard: Guard) -> Self {
        self.guard = guard;
        self
    }

    pub fn workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn source(&self) -> Result<ClassSource> {
        if self.n > SCAN_HARD_LIMIT {
            return Err(Error::TooManyVertices {
                n: self.n,
                max: SCAN_HARD_LIMIT,
            });
        }
        self.class.source(self.n, self.guard)
    }

    pub fn run(&self) -> Result<ExtremalReport> {
        let source = self.source()?;
        let found = census(&source, |_| vec![()], scan_value, self.workers)?;
        let extremes = found.into_values().next().ok_or_else(|| {
            Error::invalid("scan", format!("class `{}` has no members on {} vertices", self.class, self.n))
        })?;
        let mut sides = Vec::new();
        for &side in self.mode.sides() {
            let expected = match side {
                Side::Min => &self.expect_min,
                Side::Max => &self.expect_max,
            };
            sides.push(SideReport::new(side, &extremes, expected)?);
        }
        let matches = sides.iter().all(|s| s.matches.unwrap_or(true));
        Ok(ExtremalReport {
            schema_version: SCHEMA_VERSION,
            class: self.class.to_string(),
            n: self.n,
            enumeration: if self.class.is_labeled() { "labeled" } else { "representatives" },
            indices: source.len(),
            members: extremes.count,
            mode: self.mode.to_string(),
            sides,
            matches,
        })
    }
}

/// A graph as it appears in reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphEntry {
    pub graph6: String,
    pub edges: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
}

impl GraphEntry {
    pub fn new(g: &Graph) -> Self {
        GraphEntry {
            graph6: to_graph6(g),
            edges: g.edges(),
            family: None,
        }
    }

    fn from_form(form: &CanonicalForm) -> Self {
        GraphEntry::new(&form.to_graph())
    }
}

pub(crate) fn serialize_count<S: Serializer>(c: &Count, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&c.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SideReport {
    pub side: &'static str,
    #[serde(serialize_with = "serialize_count")]
    pub value: Count,
    pub extremizers: Vec<GraphEntry>,
    pub expected: Vec<GraphEntry>,
    /// `None` when nothing was expected.
    pub matches: Option<bool>,
}

impl SideReport {
    fn new(side: Side, extremes: &Extremes, expected: &[FamilySpec]) -> Result<Self> {
        let found = extremes.extremizers(side);
        let mut wanted = BTreeMap::new();
        for spec in expected {
            let g = spec.build()?;
            let mut entry = GraphEntry::new(&g);
            entry.family = Some(spec.to_string());
            wanted.insert(canonical_form_unguarded(&g), entry);
        }
        let matches = (!expected.is_empty()).then(|| wanted.keys().eq(found.iter()));
        Ok(SideReport {
            side: side.name(),
            value: Count::from(extremes.value(side)),
            extremizers: found.iter().map(GraphEntry::from_form).collect(),
            expected: wanted.into_values().collect(),
            matches,
        })
    }

    /// Every extremizer re-evaluates to the reported value.
    pub fn recheck(&self) -> bool {
        self.extremizers
            .iter()
            .all(|e| crate::format::from_graph6(&e.graph6).map(|g| core_index(&g)).ok() == Some(self.value.clone()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalReport {
    pub schema_version: u32,
    pub class: String,
    pub n: usize,
    /// `labeled` when every labeled member was visited, `representatives`
    /// when a smaller set meeting every isomorphism class was.
    pub enumeration: &'static str,
    /// Size of the enumerated index range.
    pub indices: u64,
    /// Members of the class among the visited graphs.
    pub members: u64,
    pub mode: String,
    pub sides: Vec<SideReport>,
    pub matches: bool,
}

impl ExtremalReport {
    pub fn side(&self, side: Side) -> Option<&SideReport> {
        self.sides.iter().find(|s| s.side == side.name())
    }

    /// JSON with keys sorted at every level.
    pub fn to_json(&self) -> String {
        sorted_json(self)
    }

    /// One row per extremizer or expected graph.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let csv_err = |e: csv::Error| Error::invalid("csv", e.to_string());
        w.write_record(["class", "n", "side", "role", "value", "graph6", "edges", "family"])
            .map_err(csv_err)?;
        for s in &self.sides {
            for (role, list) in [("extremizer", &s.extremizers), ("expected", &s.expected)] {
                for e in list {
                    let edges = e.edges.iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(" ");
                    w.write_record([
                        self.class.as_str(),
                        &self.n.to_string(),
                        s.side,
                        role,
                        &s.value.to_string(),
                        &e.graph6,
                        &edges,
                        e.family.as_deref().unwrap_or(""),
                    ])
                    .map_err(csv_err)?;
                }
            }
        }
        let bytes = w.into_inner().map_err(|e| Error::invalid("csv", e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
    }
}

pub(crate) fn sorted_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("reports serialize");
    serde_json::to_string_pretty(&v).expect("values print")
}

/// A graph that breaks a checked statement, with enough to reproduce it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub graph6: String,
    pub edges: Vec<(usize, usize)>,
    #[serde(serialize_with = "serialize_count")]
    pub core_index: Count,
    pub note: String,
}

impl Counterexample {
    pub fn new(g: &Graph, note: impl Into<String>) -> Self {
        Counterexample {
            graph6: to_graph6(g),
            edges: g.edges(),
            core_index: core_index(g),
            note: note.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub schema_version: u32,
    pub theorem: String,
    pub params: BTreeMap<String, String>,
    pub passed: bool,
    pub detail: String,
    pub counterexample: Option<Counterexample>,
}

impl CheckResult {
    pub fn to_json(&self) -> String {
        let v = serde_json::to_value(self).expect("results serialize");
        serde_json::to_string(&v).expect("values print")
    }
}
