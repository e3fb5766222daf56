//! Exact maximum (weight) clique and independent set search.
//!
//! Branch and bound in the style of MCQ: the candidate set is greedily
//! partitioned into independent sets, and a vertex is only expanded while the
//! weight already chosen plus the heaviest member of every class up to its own
//! can still beat the incumbent.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Add;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::bitset::VertexSet;
use crate::budget::Budget;
use crate::error::Result;
use crate::graph::Graph;

/// Non-negative vertex weight usable by the search.
pub trait Weight: Clone + Ord + Zero + for<'a> Add<&'a Self, Output = Self> {}

impl Weight for u64 {}
impl Weight for u128 {}
impl Weight for BigUint {}

struct Search<'a, W: Weight> {
    g: &'a Graph,
    weights: &'a [W],
    best_weight: W,
    best: Vec<usize>,
    stop_at: Option<W>,
    budget: &'a Budget,
}

impl<W: Weight> Search<'_, W> {
    fn done(&self) -> bool {
        matches!(&self.stop_at, Some(s) if self.best_weight >= *s)
    }

    fn expand(&mut self, current: &mut Vec<usize>, cur_w: W, mut cand: VertexSet) -> Result<()> {
        self.budget.tick()?;
        if cand.is_empty() {
            if cur_w > self.best_weight {
                self.best_weight = cur_w;
                self.best = current.clone();
            }
            return Ok(());
        }
        // greedy partition of the candidates into independent classes
        let (order, bounds) = self.color_bounds(&cand);
        for idx in (0..order.len()).rev() {
            if self.done() {
                return Ok(());
            }
            let v = order[idx];
            if cur_w.clone() + &bounds[idx] <= self.best_weight {
                return Ok(());
            }
            current.push(v);
            let next = cand.intersection(self.g.neighbors(v));
            self.expand(current, cur_w.clone() + &self.weights[v], next)?;
            current.pop();
            cand.remove(v);
        }
        Ok(())
    }

    /// Vertices in class order, each paired with the sum over classes up to
    /// its own of the heaviest weight in the class.
    fn color_bounds(&self, cand: &VertexSet) -> (Vec<usize>, Vec<W>) {
        let mut uncolored = cand.clone();
        let mut order = Vec::with_capacity(cand.len());
        let mut bounds = Vec::with_capacity(cand.len());
        let mut acc = W::zero();
        while !uncolored.is_empty() {
            let mut avail = uncolored.clone();
            let mut class = Vec::new();
            let mut heaviest = W::zero();
            while let Some(v) = avail.first() {
                class.push(v);
                uncolored.remove(v);
                avail.remove(v);
                avail.difference_with(self.g.neighbors(v));
                if self.weights[v] > heaviest {
                    heaviest = self.weights[v].clone();
                }
            }
            acc = acc + &heaviest;
            for v in class {
                order.push(v);
                bounds.push(acc.clone());
            }
        }
        (order, bounds)
    }
}

/// Heaviest clique; stops early once a clique of weight `>= stop_at` is found.
pub fn max_weight_clique<W: Weight>(
    g: &Graph,
    weights: &[W],
    stop_at: Option<W>,
    budget: &Budget,
) -> Result<(W, Vec<usize>)> {
    assert_eq!(weights.len(), g.n());
    let mut search = Search {
        g,
        weights,
        best_weight: W::zero(),
        best: Vec::new(),
        stop_at,
        budget,
    };
    // drop zero-weight vertices from the start; they never help
    let cand = VertexSet::from_iter(g.n(), (0..g.n()).filter(|&v| !weights[v].is_zero()));
    let mut current = Vec::new();
    search.expand(&mut current, W::zero(), cand)?;
    let mut best = search.best;
    best.sort_unstable();
    Ok((search.best_weight, best))
}

/// A maximum clique, or one of size `cap` if the cap is reached first.
pub fn max_clique(g: &Graph, cap: Option<usize>) -> Vec<usize> {
    let ones = vec![1u64; g.n()];
    let (_, c) = max_weight_clique(g, &ones, cap.map(|c| c as u64), &Budget::unlimited())
        .expect("unlimited budget");
    c
}

/// `ω(G)`, or `min(ω(G), cap)` with early exit. `G` is `K_r`-free iff
/// `clique_number(G, Some(r)) < r`.
pub fn clique_number(g: &Graph, cap: Option<usize>) -> usize {
    let c = max_clique(g, cap).len();
    match cap {
        Some(cap) => c.min(cap),
        None => c,
    }
}

pub fn is_kr_free(g: &Graph, r: usize) -> bool {
    clique_number(g, Some(r)) < r
}

/// Maximum-weight independent set with exact integer weights.
pub fn max_weight_independent_set<W: Weight>(g: &Graph, weights: &[W], budget: &Budget) -> Result<(W, Vec<usize>)> {
    max_weight_clique(&g.complement(), weights, None, budget)
}

pub fn max_independent_set(g: &Graph) -> Vec<usize> {
    max_clique(&g.complement(), None)
}

/// `α(G)`.
pub fn independence_number(g: &Graph) -> usize {
    max_independent_set(g).len()
}

/// Maximum-weight independent set under non-negative rational weights.
///
/// Weights are scaled to integers by the common denominator; the returned
/// weight is rescaled exactly. With `stop_above`, the search may return the
/// first set found whose weight exceeds it instead of a heaviest one.
pub fn max_weight_independent_set_rational(
    g: &Graph,
    weights: &[crate::Rational],
    stop_above: Option<&crate::Rational>,
    budget: &Budget,
) -> Result<(crate::Rational, Vec<usize>)> {
    use num_traits::ToPrimitive;
    let den = crate::rational::common_denominator(weights.iter());
    let scaled: Vec<num_bigint::BigInt> = weights
        .iter()
        .map(|w| {
            assert!(*w.numer() >= num_bigint::BigInt::zero(), "weights must be non-negative");
            w.numer() * (&den / w.denom())
        })
        .collect();
    // smallest integer strictly above the scaled threshold
    let stop: Option<num_bigint::BigInt> = stop_above.map(|t| {
        let scaled = t * crate::Rational::from_integer(den.clone());
        scaled.floor().to_integer() + num_bigint::BigInt::from(1)
    });
    let comp = g.complement();
    let small: Option<Vec<u128>> = scaled.iter().map(|x| x.to_u128()).collect();
    let fits = small
        .as_ref()
        .map(|s| s.iter().try_fold(0u128, |acc, &x| acc.checked_add(x)).is_some())
        .unwrap_or(false);
    let (num, set) = if fits {
        let stop = stop.as_ref().map(|s| s.to_u128().unwrap_or(u128::MAX));
        let (w, set) = max_weight_clique(&comp, small.as_ref().unwrap(), stop, budget)?;
        (num_bigint::BigInt::from(w), set)
    } else {
        let big: Vec<BigUint> = scaled.iter().map(|x| x.to_biguint().unwrap()).collect();
        let stop = stop.as_ref().map(|s| s.to_biguint().unwrap_or_default());
        let (w, set) = max_weight_clique(&comp, &big, stop, budget)?;
        (num_bigint::BigInt::from(w), set)
    };
    Ok((crate::Rational::new(num, den), set))
}

/// Extend an independent set greedily to a maximal one (lowest index first).
pub fn extend_to_maximal_independent(g: &Graph, set: &VertexSet) -> VertexSet {
    let mut s = set.clone();
    let mut blocked = VertexSet::new(g.n());
    for v in s.iter() {
        blocked.union_with(g.neighbors(v));
        blocked.insert(v);
    }
    for v in 0..g.n() {
        if !blocked.contains(v) {
            s.insert(v);
            blocked.insert(v);
            blocked.union_with(g.neighbors(v));
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, 5 + i));
        }
        Graph::from_edges(10, &edges).unwrap()
    }

    #[test]
    fn clique_examples() {
        assert_eq!(clique_number(&Graph::complete(5), None), 5);
        assert_eq!(clique_number(&petersen(), None), 2);
        assert_eq!(clique_number(&Graph::complete(6), Some(3)), 3);
        assert_eq!(clique_number(&Graph::empty(4), None), 1);
        assert_eq!(clique_number(&Graph::empty(0), None), 0);
    }

    #[test]
    fn independence_examples() {
        assert_eq!(independence_number(&Graph::cycle(5)), 2);
        assert_eq!(independence_number(&Graph::complete(2).blowup(3)), 3);
        assert_eq!(independence_number(&petersen()), 4);
    }

    #[test]
    fn weighted_independent_set() {
        // path a-b-c with heavy middle
        let g = Graph::path(3);
        let w = [int(1), int(3), int(1)];
        let (val, set) = max_weight_independent_set_rational(&g, &w, None, &Budget::unlimited()).unwrap();
        assert_eq!(val, int(3));
        assert_eq!(set, vec![1]);
        let w = [ratio(2, 3), ratio(1, 1), ratio(2, 3)];
        let (val, set) = max_weight_independent_set_rational(&g, &w, None, &Budget::unlimited()).unwrap();
        assert_eq!(val, ratio(4, 3));
        assert_eq!(set, vec![0, 2]);
    }

    #[test]
    fn maximal_extension() {
        let g = Graph::cycle(6);
        let s = extend_to_maximal_independent(&g, &VertexSet::from_iter(6, [1]));
        assert_eq!(s.to_vec(), vec![1, 3, 5]);
    }
}
