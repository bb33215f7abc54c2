//! Rank correlation between the core index and the Wiener index over a class.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use super::{scan_value, serialize_count, with_workers, Extremes, GraphEntry, Side, CHUNK, SCHEMA_VERSION};
use crate::canon::{canonical_form_unguarded, CanonicalForm};
use crate::count::Count;
use crate::error::{Error, Guard, Result};
use crate::families::{GraphClass, IndexedClass};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WienerRow {
    /// Which extreme the graph attains, e.g. `min F`.
    pub role: String,
    #[serde(flatten)]
    pub graph: GraphEntry,
    #[serde(serialize_with = "serialize_count")]
    pub core_index: Count,
    #[serde(serialize_with = "serialize_count")]
    pub wiener: Count,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WienerCorrelation {
    pub schema_version: u32,
    pub class: String,
    pub n: usize,
    /// `labeled` or `isomorphism classes`.
    pub population: &'static str,
    pub samples: u64,
    /// Spearman's rank correlation with average ranks for ties; absent when
    /// either value is constant over the class.
    pub spearman: Option<f64>,
    pub rows: Vec<WienerRow>,
}

impl WienerCorrelation {
    pub fn to_json(&self) -> String {
        super::sorted_json(self)
    }
}

/// Spearman's rho over weighted samples `(x, y, multiplicity)`.
pub fn spearman(samples: &[(u128, u128, u64)]) -> Option<f64> {
    fn ranks(values: impl Iterator<Item = (u128, u64)>) -> BTreeMap<u128, f64> {
        let mut weight: BTreeMap<u128, u64> = BTreeMap::new();
        for (v, w) in values {
            *weight.entry(v).or_default() += w;
        }
        let mut below = 0u64;
        weight
            .into_iter()
            .map(|(v, w)| {
                let r = below as f64 + (w as f64 + 1.0) / 2.0;
                below += w;
                (v, r)
            })
            .collect()
    }
    let rx = ranks(samples.iter().map(|&(x, _, w)| (x, w)));
    let ry = ranks(samples.iter().map(|&(_, y, w)| (y, w)));
    let total: f64 = samples.iter().map(|s| s.2 as f64).sum();
    if total == 0.0 {
        return None;
    }
    let mean = (total + 1.0) / 2.0;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for &(x, y, w) in samples {
        let dx = rx[&x] - mean;
        let dy = ry[&y] - mean;
        let w = w as f64;
        sxy += w * dx * dy;
        sxx += w * dx * dx;
        syy += w * dy * dy;
    }
    if sxx == 0.0 || syy == 0.0 {
        return None;
    }
    Some(sxy / (sxx * syy).sqrt())
}

fn wiener_u128(g: &Graph) -> Result<u128> {
    Ok(g.wiener_index()?.to_u128().expect("Wiener index of a small graph fits"))
}

#[derive(Default)]
struct Tally {
    joint: BTreeMap<(u128, u128), u64>,
    classes: BTreeMap<CanonicalForm, (u128, u128)>,
    f: Extremes,
    w: Extremes,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        for (k, c) in other.joint {
            *self.joint.entry(k).or_default() += c;
        }
        self.classes.extend(other.classes);
        self.f = self.f.merge(other.f);
        self.w = self.w.merge(other.w);
        self
    }
}

/// Correlates `F` with the Wiener index over a class of connected graphs.
/// Labeled classes are weighted by labeled member; other enumerations are
/// reduced to one sample per isomorphism class.
pub fn wiener_correlation(class: GraphClass, n: usize, guard: Guard, workers: usize) -> Result<WienerCorrelation> {
    let source = class.source(n, guard)?;
    let labeled = class.is_labeled();
    let len = source.len();
    let tally = with_workers(workers, || {
        (0..len.div_ceil(CHUNK))
            .into_par_iter()
            .map(|c| {
                let mut t = Tally::default();
                for i in c * CHUNK..len.min((c + 1) * CHUNK) {
                    let Some(g) = source.get(i) else { continue };
                    if !g.is_connected() {
                        return Err(Error::Disconnected {
                            operation: "wiener_correlation",
                        });
                    }
                    let f = scan_value(&g)?;
                    let w = wiener_u128(&g)?;
                    if labeled {
                        *t.joint.entry((f, w)).or_default() += 1;
                    } else {
                        t.classes.insert(canonical_form_unguarded(&g), (f, w));
                    }
                    t.f.observe(&g, f);
                    t.w.observe(&g, w);
                }
                Ok(t)
            })
            .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))
    })?;
    let mut joint = tally.joint;
    for (_, fw) in tally.classes {
        *joint.entry(fw).or_default() += 1;
    }
    if joint.is_empty() {
        return Err(Error::invalid("wiener_correlation", format!("class `{class}` is empty at n = {n}")));
    }
    let samples: Vec<(u128, u128, u64)> = joint.iter().map(|(&(f, w), &c)| (f, w, c)).collect();
    let mut rows = Vec::new();
    for (label, ex) in [("F", &tally.f), ("W", &tally.w)] {
        for side in [Side::Min, Side::Max] {
            for form in ex.extremizers(side) {
                let g = form.to_graph();
                rows.push(WienerRow {
                    role: format!("{} {label}", side.name()),
                    graph: GraphEntry::new(&g),
                    core_index: Count::from(scan_value(&g)?),
                    wiener: Count::from(wiener_u128(&g)?),
                });
            }
        }
    }
    Ok(WienerCorrelation {
        schema_version: SCHEMA_VERSION,
        class: class.to_string(),
        n,
        population: if labeled { "labeled" } else { "isomorphism classes" },
        samples: samples.iter().map(|s| s.2).sum(),
        spearman: spearman(&samples),
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perfect_and_reversed() {
        let up = [(1, 10, 1), (2, 20, 1), (3, 30, 1)];
        assert!((spearman(&up).unwrap() - 1.0).abs() < 1e-12);
        let down = [(1, 30, 1), (2, 20, 1), (3, 10, 1)];
        assert!((spearman(&down).unwrap() + 1.0).abs() < 1e-12);
        assert_eq!(spearman(&[(1, 1, 5)]), None);
    }

    #[test]
    fn weights_equal_repetition() {
        let weighted = [(1, 3, 2), (2, 1, 1), (3, 2, 1)];
        let expanded = [(1, 3, 1), (1, 3, 1), (2, 1, 1), (3, 2, 1)];
        assert!((spearman(&weighted).unwrap() - spearman(&expanded).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn trees_seven_negative() {
        let c = wiener_correlation(GraphClass::Trees, 7, Guard::Enforced, 0).unwrap();
        assert_eq!(c.samples, 7u64.pow(5));
        let rho = c.spearman.unwrap();
        assert!(rho.is_finite() && rho < 0.0, "rho = {rho}");
        // the path has the largest W and the smallest F
        let path = crate::format::to_graph6(&crate::canon::canonical_form(&crate::families::FamilySpec::Path { n: 7 }.build().unwrap()).unwrap().to_graph());
        assert!(c.rows.iter().any(|r| r.role == "min F" && r.graph.graph6 == path));
        assert!(c.rows.iter().any(|r| r.role == "max W" && r.graph.graph6 == path));
    }

    #[test]
    fn unicyclic_classes() {
        let c = wiener_correlation(GraphClass::Unicyclic, 5, Guard::Enforced, 0).unwrap();
        assert_eq!(c.population, "isomorphism classes");
        assert_eq!(c.samples, 5);
    }

    #[test]
    fn disconnected_rejected() {
        assert!(wiener_correlation(GraphClass::All, 3, Guard::Enforced, 0).is_err());
    }
}
