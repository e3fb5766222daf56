//! VC dimension of neighborhood systems, transversals and the recursive
//! coloring of dense `K_r`-free graphs with bounded VC dimension.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::bitset::VertexSet;
use crate::budget::Budget;
use crate::clique::is_kr_free;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lp::{solve_covering, verify_cover};
use crate::rational::{from_usize, ratio, to_f64};
use crate::Rational;

/// A family of subsets of `0..ground`; repeated sets are kept.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetSystem {
    pub ground: usize,
    pub sets: Vec<VertexSet>,
}

impl SetSystem {
    pub fn new(ground: usize, sets: Vec<VertexSet>) -> Self {
        assert!(sets.iter().all(|s| s.universe() == ground));
        SetSystem { ground, sets }
    }

    /// `{N(v) : v ∈ V(G)}`.
    pub fn neighborhoods(g: &Graph) -> Self {
        SetSystem {
            ground: g.n(),
            sets: (0..g.n()).map(|v| g.neighbors(v).clone()).collect(),
        }
    }

    /// Does the family realize every subset of `x` as a trace?
    pub fn shatters(&self, x: &[usize]) -> bool {
        let k = x.len();
        if k >= 32 || (1usize << k) > self.sets.len() {
            return k == 0 && !self.sets.is_empty();
        }
        let mut seen = vec![false; 1 << k];
        let mut count = 0;
        for s in &self.sets {
            let trace = x
                .iter()
                .enumerate()
                .fold(0usize, |m, (i, &e)| m | (usize::from(s.contains(e)) << i));
            if !seen[trace] {
                seen[trace] = true;
                count += 1;
            }
        }
        count == 1 << k
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VcDimension {
    pub dimension: usize,
    pub witness: Vec<usize>,
    /// `false` when the budget ran out; `dimension` is then a lower bound.
    pub complete: bool,
}

/// VC dimension by depth-first search over shattered sets in lexicographic
/// order; shattering is hereditary, so every shattered set is reached.
pub fn vc_dimension(f: &SetSystem, budget: &Budget) -> VcDimension {
    let mut distinct: Vec<&VertexSet> = f.sets.iter().collect();
    distinct.sort_by(|a, b| a.words().cmp(b.words()));
    distinct.dedup();
    // 2^d distinct traces need at least 2^d distinct sets
    let cap = if distinct.is_empty() {
        0
    } else {
        (usize::BITS - 1 - distinct.len().leading_zeros()) as usize
    };
    let mut best: Vec<usize> = Vec::new();

    fn rec(
        f: &SetSystem,
        cur: &mut Vec<usize>,
        start: usize,
        cap: usize,
        best: &mut Vec<usize>,
        budget: &Budget,
    ) -> Result<()> {
        budget.tick()?;
        if cur.len() > best.len() {
            *best = cur.clone();
        }
        if cur.len() == cap {
            return Ok(());
        }
        for e in start..f.ground {
            if cur.len() + (f.ground - e) <= best.len() {
                break;
            }
            cur.push(e);
            if f.shatters(cur) {
                rec(f, cur, e + 1, cap, best, budget)?;
            }
            cur.pop();
        }
        Ok(())
    }
    let complete = if f.sets.is_empty() {
        true
    } else {
        rec(f, &mut Vec::new(), 0, cap, &mut best, budget).is_ok()
    };
    VcDimension {
        dimension: best.len(),
        witness: best,
        complete,
    }
}

/// Exact transversal numbers of a set system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transversals {
    pub tau: usize,
    /// A minimum transversal.
    pub hitting_set: Vec<usize>,
    pub tau_star: Rational,
    /// Optimal fractional transversal, one weight per ground element.
    pub weights: Vec<Rational>,
    /// Matching fractional packing of the sets (LP dual).
    pub packing: Vec<Rational>,
}

fn min_hitting_set(f: &SetSystem, budget: &Budget) -> Result<Vec<usize>> {
    struct Search<'a> {
        f: &'a SetSystem,
        best: Vec<usize>,
        budget: &'a Budget,
    }
    impl Search<'_> {
        fn lower_bound(&self, unhit: &[usize]) -> usize {
            // sets pairwise disjoint need distinct elements
            let mut used = VertexSet::new(self.f.ground);
            let mut packed = 0;
            let mut order: Vec<usize> = unhit.to_vec();
            order.sort_by_key(|&i| self.f.sets[i].len());
            for i in order {
                if !self.f.sets[i].intersects(&used) {
                    used.union_with(&self.f.sets[i]);
                    packed += 1;
                }
            }
            packed
        }

        fn rec(&mut self, chosen: &mut Vec<usize>, hit: &VertexSet) -> Result<()> {
            self.budget.tick()?;
            let unhit: Vec<usize> = (0..self.f.sets.len())
                .filter(|&i| !self.f.sets[i].intersects(hit))
                .collect();
            if unhit.is_empty() {
                if chosen.len() < self.best.len() {
                    self.best = chosen.clone();
                }
                return Ok(());
            }
            if chosen.len() + self.lower_bound(&unhit) >= self.best.len() {
                return Ok(());
            }
            let pick = *unhit.iter().min_by_key(|&&i| self.f.sets[i].len()).unwrap();
            let mut elems = self.f.sets[pick].to_vec();
            // most frequent elements among unhit sets first
            elems.sort_by_key(|&e| core::cmp::Reverse(unhit.iter().filter(|&&i| self.f.sets[i].contains(e)).count()));
            for e in elems {
                chosen.push(e);
                let mut h = hit.clone();
                h.insert(e);
                self.rec(chosen, &h)?;
                chosen.pop();
            }
            Ok(())
        }
    }
    // greedy start gives the first upper bound
    let mut greedy = Vec::new();
    let mut hit = VertexSet::new(f.ground);
    loop {
        let unhit: Vec<usize> = (0..f.sets.len()).filter(|&i| !f.sets[i].intersects(&hit)).collect();
        if unhit.is_empty() {
            break;
        }
        let e = (0..f.ground)
            .max_by_key(|&e| (unhit.iter().filter(|&&i| f.sets[i].contains(e)).count(), core::cmp::Reverse(e)))
            .unwrap();
        greedy.push(e);
        hit.insert(e);
    }
    let mut s = Search { f, best: greedy, budget };
    s.rec(&mut Vec::new(), &VertexSet::new(f.ground))?;
    let mut best = s.best;
    best.sort_unstable();
    Ok(best)
}

/// `τ(F)` by branch and bound and `τ*(F)` by exact LP. A family containing
/// the empty set has no transversal and is rejected.
pub fn transversal_numbers(f: &SetSystem, budget: &Budget) -> Result<Transversals> {
    if let Some(i) = f.sets.iter().position(VertexSet::is_empty) {
        return Err(Error::Precondition(format!("set {i} is empty, so no transversal exists")));
    }
    let hitting_set = min_hitting_set(f, budget)?;
    let cols: Vec<Vec<usize>> = (0..f.ground)
        .map(|e| (0..f.sets.len()).filter(|&i| f.sets[i].contains(e)).collect())
        .collect();
    let sol = solve_covering(f.sets.len(), &cols, budget)?.expect("every set is nonempty");
    if !verify_cover(f.sets.len(), &cols, &sol) {
        return Err(Error::Precondition("fractional transversal failed verification".into()));
    }
    Ok(Transversals {
        tau: hitting_set.len(),
        hitting_set,
        tau_star: sol.value,
        weights: sol.primal,
        packing: sol.dual,
    })
}

/// Transversal-size bound `16·d·τ*·log(d·τ*)` under a given logarithm.
pub fn transversal_bound(d: usize, tau_star: &Rational, log: fn(f64) -> f64) -> f64 {
    let x = d as f64 * to_f64(tau_star);
    16.0 * x * log(x)
}

/// Chromatic bound `(16d/c · log(d/c))^(r-2)`; `None` (unbounded) for `c = 0`.
pub fn coloring_bound(d: usize, c: &Rational, r: usize, log: fn(f64) -> f64) -> Option<f64> {
    if c.is_zero() {
        return None;
    }
    let x = d as f64 / to_f64(c);
    Some(libm::pow(16.0 * x * log(x), (r - 2) as f64))
}

/// Per-subproblem record of the recursive coloring.
#[derive(Clone, Debug, PartialEq)]
pub struct LevelAudit {
    /// Clique-freeness order of the subproblem (`K_level`-free).
    pub level: usize,
    pub vertices: usize,
    pub vc_dimension: usize,
    pub tau: usize,
    pub tau_star: Rational,
    /// `16 d τ* ln(d τ*)` and the same with `log2`.
    pub bound_ln: f64,
    pub bound_log2: f64,
    pub colors: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct VcColoring {
    pub coloring: Vec<usize>,
    pub colors: usize,
    pub vc_dimension: usize,
    /// Top-level minimum transversal.
    pub transversal: Vec<usize>,
    /// `(16d/c·log(d/c))^(r-2)` under `ln` and `log2`; `None` when `c = 0`.
    pub bound_ln: Option<f64>,
    pub bound_log2: Option<f64>,
    pub levels: Vec<LevelAudit>,
}

impl VcColoring {
    /// Colors used are within both audited bounds (vacuous when unbounded).
    pub fn within_bounds(&self) -> bool {
        [self.bound_ln, self.bound_log2]
            .iter()
            .all(|b| b.map_or(true, |b| self.colors as f64 <= b))
    }
}

fn log2(x: f64) -> f64 {
    libm::log2(x)
}

fn ln(x: f64) -> f64 {
    libm::log(x)
}

/// Color `g[vertices]` with fresh colors starting at `next`; returns the
/// number of colors used.
fn color_rec(
    g: &Graph,
    vertices: &[usize],
    level: usize,
    coloring: &mut [usize],
    next: usize,
    levels: &mut Vec<LevelAudit>,
    budget: &Budget,
) -> Result<usize> {
    if vertices.is_empty() {
        return Ok(0);
    }
    let sub = g.induced(vertices);
    let isolated: Vec<usize> = (0..sub.n()).filter(|&v| sub.degree(v) == 0).collect();
    let active: Vec<usize> = (0..sub.n()).filter(|&v| sub.degree(v) > 0).collect();
    let mut used = 0;
    if !active.is_empty() {
        let core = sub.induced(&active);
        let f = SetSystem::neighborhoods(&core);
        let vc = vc_dimension(&f, budget);
        if !vc.complete {
            return Err(Error::BudgetExceeded);
        }
        let tr = transversal_numbers(&f, budget)?;
        let start = levels.len();
        levels.push(LevelAudit {
            level,
            vertices: core.n(),
            vc_dimension: vc.dimension,
            tau: tr.tau,
            tau_star: tr.tau_star.clone(),
            bound_ln: transversal_bound(vc.dimension, &tr.tau_star, ln),
            bound_log2: transversal_bound(vc.dimension, &tr.tau_star, log2),
            colors: 0,
        });
        let mut covered = VertexSet::new(core.n());
        for &t in &tr.hitting_set {
            let part: Vec<usize> = core.neighbors(t).difference(&covered).to_vec();
            covered.union_with(core.neighbors(t));
            if part.is_empty() {
                continue;
            }
            let original: Vec<usize> = part.iter().map(|&i| vertices[active[i]]).collect();
            if level <= 3 {
                for &v in &original {
                    coloring[v] = next + used;
                }
                used += 1;
            } else {
                used += color_rec(g, &original, level - 1, coloring, next + used, levels, budget)?;
            }
        }
        levels[start].colors = used;
    }
    if !isolated.is_empty() {
        for &i in &isolated {
            coloring[vertices[i]] = next + used;
        }
        used += 1;
    }
    Ok(used)
}

/// Proper coloring of a `K_r`-free graph with `δ(G) >= ((r-3)/(r-2) + c)n`
/// by minimum transversals of neighborhood systems: `V(G)` is covered by
/// the neighborhoods of a transversal `T`, and each piece is colored
/// recursively with a fresh palette (independent pieces when `r = 3`).
pub fn recursive_vc_coloring(g: &Graph, r: usize, c: &Rational, budget: &Budget) -> Result<VcColoring> {
    if r < 3 {
        return Err(Error::InvalidParameter("r must be at least 3".into()));
    }
    if *c < Rational::zero() {
        return Err(Error::InvalidParameter("c must be non-negative".into()));
    }
    if !is_kr_free(g, r) {
        return Err(Error::Precondition(format!("graph contains K_{r}")));
    }
    let n = g.n();
    let need = (ratio(r as i64 - 3, r as i64 - 2) + c) * from_usize(n);
    if from_usize(g.min_degree()) < need {
        return Err(Error::Precondition(format!(
            "minimum degree {} is below ((r-3)/(r-2) + c) n = {}",
            g.min_degree(),
            crate::rational::to_pq(&need)
        )));
    }
    let mut coloring = vec![usize::MAX; n];
    let mut levels = Vec::new();
    let all: Vec<usize> = (0..n).collect();
    let colors = color_rec(g, &all, r, &mut coloring, 0, &mut levels, budget)?;
    if !g.is_proper_coloring(&coloring) {
        return Err(Error::Precondition("recursive coloring is not proper".into()));
    }
    let vc = vc_dimension(&SetSystem::neighborhoods(g), budget);
    if !vc.complete {
        return Err(Error::BudgetExceeded);
    }
    let transversal = if n == 0 || g.min_degree() == 0 {
        Vec::new()
    } else {
        transversal_numbers(&SetSystem::neighborhoods(g), budget)?.hitting_set
    };
    Ok(VcColoring {
        coloring,
        colors,
        vc_dimension: vc.dimension,
        transversal,
        bound_ln: coloring_bound(vc.dimension, c, r, ln),
        bound_log2: coloring_bound(vc.dimension, c, r, log2),
        levels,
    })
}

impl Transversals {
    pub fn is_transversal(f: &SetSystem, t: &[usize]) -> bool {
        let t = VertexSet::from_iter(f.ground, t.iter().copied());
        f.sets.iter().all(|s| s.intersects(&t))
    }
}
