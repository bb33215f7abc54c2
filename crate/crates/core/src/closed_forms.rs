//! Exact evaluators for the closed-form core indexes of named families.
//!
//! Everything is computed in big-integer arithmetic; formulas with a `/2` are
//! divided exactly and panic if the numerator is odd, which would mean a
//! transcription bug rather than a rounding issue.

use std::sync::Mutex;

use num_bigint::BigUint;
use num_integer::{binomial, Integer};
use num_traits::{One, Zero};

use crate::count::Count;
use crate::error::{Error, Result};

static CONNECTED_LABELED: Mutex<Vec<BigUint>> = Mutex::new(Vec::new());

fn big(x: u64) -> Count {
    Count::from(x)
}

fn pow2(e: u64) -> Count {
    Count::one() << e
}

fn choose(n: u64, k: u64) -> Count {
    if k > n {
        return Count::zero();
    }
    binomial(big(n), big(k))
}

fn half(x: Count) -> Count {
    let (q, r) = x.div_rem(&big(2));
    assert!(r.is_zero(), "closed form is not integral");
    q
}

fn require(ok: bool, context: &'static str, message: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::invalid(context, message()))
    }
}

/// Number of connected labeled graphs on `k` vertices, solved from
/// `k 2^{C(k,2)} = sum_i C(k,i) i h_i 2^{C(k-i,2)}` with the `i = k` term
/// isolated. Values are memoized.
pub fn connected_labeled_graphs(k: u64) -> Result<Count> {
    require(k >= 1, "connected_labeled_graphs", || "k must be at least 1".into())?;
    let mut memo = CONNECTED_LABELED.lock().unwrap_or_else(|e| e.into_inner());
    while (memo.len() as u64) < k {
        let j = memo.len() as u64 + 1;
        let mut rest = Count::zero();
        for i in 1..j {
            rest += choose(j, i) * big(i) * &memo[i as usize - 1] * pow2((j - i) * (j - i - 1) / 2);
        }
        let total = big(j) * pow2(j * (j - 1) / 2);
        let (h, r) = (total - rest).div_rem(&big(j));
        assert!(r.is_zero(), "recurrence must divide exactly");
        memo.push(h);
    }
    Ok(memo[k as usize - 1].clone())
}

/// `F(K_n) = sum_i C(n,i) h_i`.
pub fn complete(n: u64) -> Result<Count> {
    require(n >= 1, "complete", || "n must be at least 1".into())?;
    let mut total = Count::zero();
    for i in 1..=n {
        total += choose(n, i) * connected_labeled_graphs(i)?;
    }
    Ok(total)
}

/// `F(P_n) = C(n+1, 2)`, the least core index among trees.
pub fn path(n: u64) -> Result<Count> {
    require(n >= 1, "path", || "n must be at least 1".into())?;
    Ok(choose(n + 1, 2))
}

/// `F(K_{1,n-1}) = 2^{n-1} + n - 1`, the largest core index among trees.
pub fn star(n: u64) -> Result<Count> {
    require(n >= 1, "star", || "n must be at least 1".into())?;
    Ok(pow2(n - 1) + big(n - 1))
}

pub fn cycle(n: u64) -> Result<Count> {
    require(n >= 3, "cycle", || format!("n = {n} < 3"))?;
    Ok(big(n) * big(n) + 1u32)
}

/// Connected subgraphs of `C_n` through a fixed vertex: `2n + C(n-1, 2)`.
pub fn cycle_vertex(n: u64) -> Result<Count> {
    require(n >= 3, "cycle_vertex", || format!("n = {n} < 3"))?;
    Ok(big(2 * n) + choose(n - 1, 2))
}

fn girth_params(context: &'static str, n: u64, g: u64) -> Result<()> {
    require(g >= 3 && g < n, context, || {
        format!("need 3 <= g < n, got n = {n}, g = {g} (use the cycle for g = n)")
    })
}

/// Cycle `C_g` with `n - g` pendant vertices at one cycle vertex.
pub fn pineapple(n: u64, g: u64) -> Result<Count> {
    girth_params("pineapple", n, g)?;
    let head = big(n) + big(g * g) - big(g) + 1u32;
    Ok(head + (pow2(n - g) - 1u32) * (big(2 * g) + choose(g - 1, 2)))
}

/// Cycle `C_g` with a path on `n - g` further vertices hanging off one cycle vertex.
pub fn lollipop(n: u64, g: u64) -> Result<Count> {
    girth_params("lollipop", n, g)?;
    Ok(half(big(n - g) * (big(n) + big(g * g) + 3u32)) + big(g * g) + 1u32)
}

/// Largest `g` with `3g^2 - g + 2 < 2gn`. The lollipop core index increases
/// in the girth up to `g + 1` and decreases afterwards.
pub fn lollipop_peak_threshold(n: u64) -> Result<u64> {
    require(n >= 5, "lollipop_peak_threshold", || format!("n = {n} < 5"))?;
    let holds = |g: u64| 3 * g * g - g + 2 < 2 * g * n;
    let mut g = 1;
    while holds(g + 1) {
        g += 1;
    }
    Ok(g)
}

/// `K_{n-k}` with `k` pendant vertices at one of its vertices.
pub fn complete_with_pendants(n: u64, k: u64) -> Result<Count> {
    require(n >= 3 && k <= n - 3, "complete_with_pendants", || {
        format!("need 0 <= k <= n - 3, got n = {n}, k = {k}")
    })?;
    let big_part = complete(n - k)?;
    let small_part = complete(n - k - 1)?;
    Ok((pow2(k) - 1u32) * (&big_part - small_part) + big_part + big(k))
}

/// Double broom: a path on `d` vertices with `k` pendants at one end and `l`
/// at the other.
pub fn double_broom(k: u64, l: u64, d: u64) -> Result<Count> {
    require(k >= 1 && l >= 1 && d >= 2, "double_broom", || {
        format!("need k, l >= 1 and d >= 2, got k = {k}, l = {l}, d = {d}")
    })?;
    Ok(choose(d - 1, 2) + big(d - 1) * (pow2(k) + pow2(l)) + pow2(k + l) + big(k + l))
}

/// The double broom with one pendant at one end and `n - 3` at the other.
pub fn double_broom_lopsided(n: u64) -> Result<Count> {
    require(n >= 4, "double_broom_lopsided", || format!("n = {n} < 4"))?;
    Ok(big(3) * pow2(n - 3) + big(n))
}

/// Spider with `legs` legs of `leg_len` vertices each: `(q+1)^l + l q (q+1) / 2`.
pub fn spider(legs: u64, leg_len: u64) -> Result<Count> {
    require(legs >= 1 && leg_len >= 1, "spider", || {
        format!("need l, q >= 1, got l = {legs}, q = {leg_len}")
    })?;
    let q1 = big(leg_len + 1);
    Ok(num_traits::pow(q1, legs as usize) + half(big(legs * leg_len * (leg_len + 1))))
}

/// Spider on `n` vertices with `k` legs as even as possible.
pub fn balanced_spider(n: u64, k: u64) -> Result<Count> {
    require(n >= 5 && k >= 2 && k <= n - 3, "balanced_spider", || {
        format!("need 2 <= k <= n - 3, got n = {n}, k = {k}")
    })?;
    let q = (n - 1) / k;
    let r = n - 1 - k * q;
    let prod = num_traits::pow(big(q + 2), r as usize) * num_traits::pow(big(q + 1), (k - r) as usize);
    Ok(prod + half(big(q + 1) * big(q * k + 2 * r)))
}

/// Double broom on `n` vertices with `k` pendants split as evenly as possible
/// between the two ends.
pub fn balanced_double_broom(n: u64, k: u64) -> Result<Count> {
    require(k >= 2 && n >= k + 2, "balanced_double_broom", || {
        format!("need 2 <= k <= n - 2, got n = {n}, k = {k}")
    })?;
    let spine = n - k - 1;
    let ends = if k.is_multiple_of(2) {
        big(spine) * pow2(k / 2 + 1)
    } else {
        big(3 * spine) * pow2((k - 1) / 2)
    };
    Ok(ends + pow2(k) + big(k) + choose(spine, 2))
}

/// Two triangles joined by a path, `n` vertices in total: `(n^2 + 17n) / 2`.
pub fn twin_triangles(n: u64) -> Result<Count> {
    require(n >= 6, "twin_triangles", || format!("n = {n} < 6"))?;
    Ok(half(big(n * n + 17 * n)))
}

/// Lower bound `m1^2 + m2^2 + 1 + 4 m1 m2` for two cycles joined by a path.
pub fn two_cycles_lower_bound(m1: u64, m2: u64) -> Result<Count> {
    require(m1 >= 3 && m2 >= 3, "two_cycles_lower_bound", || {
        format!("cycle lengths must be at least 3, got {m1}, {m2}")
    })?;
    Ok(big(m1 * m1 + m2 * m2 + 1 + 4 * m1 * m2))
}

/// Two cycles sharing a single vertex.
pub fn two_cycles_shared(m1: u64, m2: u64) -> Result<Count> {
    require(m1 >= 3 && m2 >= 3, "two_cycles_shared", || {
        format!("cycle lengths must be at least 3, got {m1}, {m2}")
    })?;
    let f1 = cycle_vertex(m1)? - 1u32;
    let f2 = cycle_vertex(m2)? - 1u32;
    Ok(big(m1 * m1 + m2 * m2 + 1) + f1 * f2)
}

/// Cycles `C_{m1}` and `C_{m2}` joined by a path with `n - m1 - m2` inner
/// vertices, or sharing one vertex when `n = m1 + m2 - 1`.
pub fn dumbbell(m1: u64, m2: u64, n: u64) -> Result<Count> {
    require(m1 >= 3 && m2 >= 3 && n + 1 >= m1 + m2, "dumbbell", || {
        format!("need m1, m2 >= 3 and n >= m1 + m2 - 1, got m1 = {m1}, m2 = {m2}, n = {n}")
    })?;
    if n + 1 == m1 + m2 {
        return two_cycles_shared(m1, m2);
    }
    let inner = n - m1 - m2;
    let f1 = cycle_vertex(m1)?;
    let f2 = cycle_vertex(m2)?;
    let fixed = big(m1 * m1 + m2 * m2 + 2 + inner) + choose(inner, 2);
    Ok(fixed + big(inner) * (&f1 + &f2) + f1 * f2)
}

/// Extremes over graphs on `n` vertices with exactly `k` components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentExtremes {
    /// `k - 1` isolated vertices plus a complete graph.
    pub max_graph: Count,
    /// Paths of near-equal order.
    pub min_graph: Count,
    /// `k - 1` isolated vertices plus a star.
    pub max_forest: Count,
}

pub fn component_extremes(n: u64, k: u64) -> Result<ComponentExtremes> {
    require(k >= 1 && k <= n, "component_extremes", || {
        format!("need 1 <= k <= n, got n = {n}, k = {k}")
    })?;
    let q = n / k;
    let r = n - k * q;
    Ok(ComponentExtremes {
        max_graph: big(k - 1) + complete(n - k + 1)?,
        min_graph: big(r * (q + 1)) + half(big(k * q * (q + 1))),
        max_forest: pow2(n - k) + big(n - 1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: u64) -> Count {
        big(x)
    }

    #[test]
    fn connected_labeled_values() {
        let h: Vec<Count> = (1..=6).map(|k| connected_labeled_graphs(k).unwrap()).collect();
        assert_eq!(h, vec![c(1), c(1), c(4), c(38), c(728), c(26704)]);
        assert!(connected_labeled_graphs(0).is_err());
    }

    #[test]
    fn recurrence_identity() {
        for k in 1..=8u64 {
            let lhs = big(k) * pow2(k * (k - 1) / 2);
            let rhs: Count = (1..=k)
                .map(|i| {
                    choose(k, i) * big(i) * connected_labeled_graphs(i).unwrap() * pow2((k - i) * (k - i).saturating_sub(1) / 2)
                })
                .sum();
            assert_eq!(lhs, rhs, "k = {k}");
        }
    }

    #[test]
    fn simple_families() {
        assert_eq!(complete(2).unwrap(), c(3));
        assert_eq!(complete(3).unwrap(), c(10));
        assert_eq!(complete(4).unwrap(), c(64));
        assert_eq!(path(4).unwrap(), c(10));
        assert_eq!(star(4).unwrap(), c(11));
        assert_eq!(path(1).unwrap(), star(1).unwrap());
        assert_eq!(path(9).unwrap(), c(45));
        assert_eq!(cycle(4).unwrap(), c(17));
        assert_eq!(cycle(6).unwrap(), c(37));
        assert_eq!(cycle_vertex(3).unwrap(), c(7));
        assert_eq!(cycle_vertex(5).unwrap(), c(16));
        assert!(cycle(2).is_err());
        assert!(complete(0).is_err());
    }

    #[test]
    fn unicyclic_families() {
        assert_eq!(pineapple(4, 3).unwrap(), c(18));
        assert_eq!(pineapple(5, 3).unwrap(), c(33));
        for n in 4..40 {
            assert_eq!(pineapple(n, 3).unwrap(), big(7) * pow2(n - 3) + big(n));
        }
        assert_eq!(lollipop(5, 3).unwrap(), c(27));
        assert_eq!(lollipop(6, 3).unwrap(), c(37));
        for n in 4..40 {
            assert_eq!(lollipop(n, 3).unwrap(), half(big(n * n + 9 * n - 16)));
        }
        assert!(pineapple(5, 5).is_err());
        assert!(lollipop(5, 2).is_err());
    }

    #[test]
    fn pineapple_decreases_in_girth() {
        for n in 5..=30 {
            for g in 3..n - 1 {
                assert!(pineapple(n, g).unwrap() > pineapple(n, g + 1).unwrap());
            }
        }
    }

    #[test]
    fn threshold_values() {
        assert_eq!(lollipop_peak_threshold(10).unwrap(), 6);
        assert_eq!(lollipop_peak_threshold(5).unwrap(), 3);
        assert!(lollipop_peak_threshold(4).is_err());
    }

    #[test]
    fn pendant_families() {
        assert_eq!(complete_with_pendants(4, 1).unwrap(), pineapple(4, 3).unwrap());
        assert_eq!(complete_with_pendants(5, 2).unwrap(), c(33));
        assert_eq!(complete_with_pendants(6, 0).unwrap(), complete(6).unwrap());
        assert_eq!(double_broom_lopsided(5).unwrap(), c(17));
        assert_eq!(double_broom_lopsided(4).unwrap(), path(4).unwrap());
        assert_eq!(double_broom_lopsided(8).unwrap(), c(104));
        for n in 4..20 {
            assert_eq!(double_broom_lopsided(n).unwrap(), double_broom(1, n - 3, 2).unwrap());
        }
        assert_eq!(spider(3, 2).unwrap(), c(36));
        assert_eq!(balanced_spider(7, 3).unwrap(), c(36));
        assert_eq!(balanced_spider(8, 3).unwrap(), c(48));
        assert_eq!(balanced_double_broom(5, 2).unwrap(), path(5).unwrap());
        assert_eq!(balanced_double_broom(6, 2).unwrap(), path(6).unwrap());
        assert_eq!(balanced_double_broom(6, 3).unwrap(), c(24));
        for n in 4..20 {
            for k in 2..=n - 2 {
                assert_eq!(
                    balanced_double_broom(n, k).unwrap(),
                    double_broom(k / 2, k - k / 2, n - k).unwrap()
                );
            }
        }
    }

    #[test]
    fn two_cycle_values() {
        assert_eq!(twin_triangles(7).unwrap(), c(84));
        assert_eq!(twin_triangles(6).unwrap(), c(69));
        assert_eq!(twin_triangles(17).unwrap(), c(289));
        assert_eq!(cycle(17).unwrap(), c(290));
        for n in 6..=30 {
            let below = cycle(n).unwrap() < twin_triangles(n).unwrap();
            assert_eq!(below, n <= 16, "n = {n}");
        }
        assert_eq!(two_cycles_shared(3, 3).unwrap(), c(55));
        assert_eq!(two_cycles_lower_bound(3, 3).unwrap(), c(55));
        for n in 6..40 {
            assert_eq!(dumbbell(3, 3, n).unwrap(), twin_triangles(n).unwrap());
        }
        assert_eq!(dumbbell(3, 3, 5).unwrap(), c(55));
        assert!(dumbbell(3, 4, 5).is_err());
    }

    #[test]
    fn component_values() {
        let e = component_extremes(5, 2).unwrap();
        assert_eq!((e.max_graph, e.min_graph, e.max_forest), (c(65), c(9), c(12)));
        for n in 1..12 {
            let one = component_extremes(n, 1).unwrap();
            assert_eq!(one.max_graph, complete(n).unwrap());
            assert_eq!(one.min_graph, path(n).unwrap());
            assert_eq!(one.max_forest, star(n).unwrap());
            let all = component_extremes(n, n).unwrap();
            assert_eq!((all.max_graph, all.min_graph, all.max_forest), (c(n), c(n), c(n)));
        }
        assert!(component_extremes(3, 4).is_err());
    }

    #[test]
    fn large_arguments_stay_exact() {
        let k = complete(40).unwrap();
        assert!(k.bits() > 700);
        assert_eq!(star(200).unwrap(), pow2(199) + c(199));
    }
}
