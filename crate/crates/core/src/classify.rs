//! Decomposition families, near-acyclicity and chromatic-threshold
//! classification.

use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::budget::Budget;
use crate::canon::{canonical_form, graph_of, trees, CanonicalForm};
use crate::coloring::{chromatic_number, color_classes, proper_colorings};
use crate::constructions::{Builder, ZykovSpec};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::ratio;
use crate::subgraph::find_subgraph_budgeted;
use crate::Rational;

fn exact_chi(h: &Graph, budget: &Budget) -> Result<usize> {
    chromatic_number(h, budget).exact().ok_or(Error::BudgetExceeded)
}

/// `M(H)`: bipartite graphs left after deleting `χ(H) - 2` color classes of
/// a proper `χ(H)`-coloring, one representative per isomorphism class, in
/// canonical labeling and canonical order.
pub fn decomposition_family(h: &Graph, budget: &Budget) -> Result<Vec<Graph>> {
    let r = exact_chi(h, budget)?;
    if r < 2 {
        return Err(Error::Precondition("decomposition family needs χ(H) >= 2".into()));
    }
    let mut forms: Vec<CanonicalForm> = Vec::new();
    for coloring in proper_colorings(h, r, budget)? {
        let classes = color_classes(h.n(), &coloring);
        for i in 0..r {
            for j in i + 1..r {
                let keep = classes[i].union(&classes[j]);
                let f = canonical_form(&h.induced_set(&keep));
                if let Err(pos) = forms.binary_search(&f) {
                    forms.insert(pos, f);
                }
            }
        }
    }
    Ok(forms.iter().map(graph_of).collect())
}

/// Partition of a near-acyclic graph into a forest and an independent set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NearAcyclicWitness {
    pub forest: Vec<usize>,
    pub independent: Vec<usize>,
}

/// Independent sets removed from an `r`-near-acyclic graph, and the witness
/// for the near-acyclic remainder. All indices refer to the input graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RNearAcyclicWitness {
    pub removed: Vec<Vec<usize>>,
    pub remainder: NearAcyclicWitness,
}

/// Check the local condition for a candidate split: `H - S` is a forest and
/// no vertex of `S` sees both color classes of one tree.
pub fn check_near_acyclic_split(h: &Graph, s: &VertexSet) -> bool {
    if !h.is_independent(s) {
        return false;
    }
    let f = s.complement();
    let forest_vertices = f.to_vec();
    let sub = h.induced(&forest_vertices);
    if !sub.is_forest() {
        return false;
    }
    let side = sub.bipartition().expect("forests are bipartite");
    let comp = sub.components();
    for x in s.iter() {
        // (component, side) pairs seen among the neighbors of x
        let mut seen: Vec<(usize, bool)> = Vec::new();
        for (i, &v) in forest_vertices.iter().enumerate() {
            if h.has_edge(x, v) {
                if seen.iter().any(|&(c, sd)| c == comp[i] && sd != side[i]) {
                    return false;
                }
                seen.push((comp[i], side[i]));
            }
        }
    }
    true
}

fn independent_sets(h: &Graph, mut visit: impl FnMut(&VertexSet) -> Result<bool>, budget: &Budget) -> Result<bool> {
    fn rec(
        h: &Graph,
        v: usize,
        cur: &mut VertexSet,
        blocked: &VertexSet,
        visit: &mut dyn FnMut(&VertexSet) -> Result<bool>,
        budget: &Budget,
    ) -> Result<bool> {
        budget.tick()?;
        if v == h.n() {
            return visit(cur);
        }
        if rec(h, v + 1, cur, blocked, visit, budget)? {
            return Ok(true);
        }
        if !blocked.contains(v) {
            cur.insert(v);
            let mut b = blocked.clone();
            b.union_with(h.neighbors(v));
            if rec(h, v + 1, cur, &b, visit, budget)? {
                return Ok(true);
            }
            cur.remove(v);
        }
        Ok(false)
    }
    let mut cur = VertexSet::new(h.n());
    rec(h, 0, &mut cur, &VertexSet::new(h.n()), &mut visit, budget)
}

/// Near-acyclic witness, or `None` when `χ(H) != 3` or exhaustive search
/// over independent sets finds no valid split.
pub fn is_near_acyclic(h: &Graph, budget: &Budget) -> Result<Option<NearAcyclicWitness>> {
    if exact_chi(h, budget)? != 3 {
        return Ok(None);
    }
    let mut found = None;
    independent_sets(
        h,
        |s| {
            if check_near_acyclic_split(h, s) {
                found = Some(NearAcyclicWitness {
                    forest: s.complement().to_vec(),
                    independent: s.to_vec(),
                });
                return Ok(true);
            }
            Ok(false)
        },
        budget,
    )?;
    Ok(found)
}

fn maximal_independent_sets(h: &Graph, budget: &Budget) -> Result<Vec<VertexSet>> {
    let mut out = Vec::new();
    independent_sets(
        h,
        |s| {
            let mut dominated = s.clone();
            for v in s.iter() {
                dominated.union_with(h.neighbors(v));
            }
            if dominated.len() == h.n() {
                out.push(s.clone());
            }
            Ok(false)
        },
        budget,
    )?;
    Ok(out)
}

/// `r`-near-acyclic witness with `r = χ(H)`, or `None`.
///
/// Removing more vertices keeps a near-acyclic split valid and cannot push
/// `χ` below 3, so only disjoint tuples of sets that are maximal independent
/// in what remains need to be tried.
pub fn is_r_near_acyclic(h: &Graph, budget: &Budget) -> Result<Option<RNearAcyclicWitness>> {
    let r = exact_chi(h, budget)?;
    if r < 3 {
        return Ok(None);
    }
    fn rec(
        h: &Graph,
        alive: &[usize],
        left: usize,
        min_first: usize,
        removed: &mut Vec<Vec<usize>>,
        budget: &Budget,
    ) -> Result<Option<RNearAcyclicWitness>> {
        let sub = h.induced(alive);
        if left == 0 {
            return Ok(is_near_acyclic(&sub, budget)?.map(|w| RNearAcyclicWitness {
                removed: removed.clone(),
                remainder: NearAcyclicWitness {
                    forest: w.forest.iter().map(|&i| alive[i]).collect(),
                    independent: w.independent.iter().map(|&i| alive[i]).collect(),
                },
            }));
        }
        for s in maximal_independent_sets(&sub, budget)? {
            let set: Vec<usize> = s.iter().map(|i| alive[i]).collect();
            // tuples are unordered: list sets by increasing smallest vertex
            if set[0] < min_first {
                continue;
            }
            let rest: Vec<usize> = alive.iter().copied().filter(|v| !set.contains(v)).collect();
            let first = set[0];
            removed.push(set);
            if let Some(w) = rec(h, &rest, left - 1, first + 1, removed, budget)? {
                return Ok(Some(w));
            }
            removed.pop();
        }
        Ok(None)
    }
    let all: Vec<usize> = (0..h.n()).collect();
    rec(h, &all, r - 3, 0, &mut Vec::new(), budget)
}

/// Result of the bounded Zykov-container search.
#[derive(Clone, Debug)]
pub enum ZykovOutcome {
    /// `H` embeds into the Zykov graph of `spec` via `embedding`.
    Found { spec: ZykovSpec, embedding: Vec<usize> },
    /// No container within the bounds; not a proof of non-membership.
    NotWithinBounds,
}

impl ZykovOutcome {
    pub fn found(&self) -> bool {
        matches!(self, ZykovOutcome::Found { .. })
    }
}

fn multisets(k: usize, len: usize) -> Vec<Vec<usize>> {
    fn rec(k: usize, len: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for i in start..k {
            cur.push(i);
            rec(k, len, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, len, 0, &mut Vec::new(), &mut out);
    out
}

/// Search for `H ⊆ Z_ℓ^{r,t}(T_1, …, T_ℓ)` with `ℓ <= max_l`, `t <= max_t`
/// and trees of at most `max_tree_size` vertices.
///
/// Containers grow monotonically in every parameter (a tree embeds in a
/// larger tree, an extra tree or larger `t` only adds vertices), so only the
/// maximal containers are tried: `ℓ = max_l`, `t = max_t`, and every
/// multiset of trees on exactly `max_tree_size` vertices.
pub fn near_acyclic_via_zykov(
    h: &Graph,
    r: usize,
    max_l: usize,
    max_t: usize,
    max_tree_size: usize,
    budget: &Budget,
) -> Result<ZykovOutcome> {
    if r < 3 || max_t == 0 {
        return Err(Error::InvalidParameter("needs r >= 3 and max_t >= 1".into()));
    }
    let shapes = if max_l == 0 { Vec::new() } else { trees(max_tree_size) };
    let choices = if max_l == 0 || shapes.is_empty() {
        vec![Vec::new()]
    } else {
        multisets(shapes.len(), max_l)
    };
    let builder = Builder::default();
    for choice in choices {
        let spec = ZykovSpec {
            r,
            t: max_t,
            trees: choice.iter().map(|&i| shapes[i].clone()).collect(),
        };
        let z = builder.zykov(&spec)?;
        if let Some(embedding) = find_subgraph_budgeted(&z, h, budget)? {
            return Ok(ZykovOutcome::Found { spec, embedding });
        }
    }
    Ok(ZykovOutcome::NotWithinBounds)
}

/// Classification of `H` by its chromatic thresholds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdReport {
    pub chi: usize,
    pub decomposition_family: Vec<Graph>,
    pub has_forest_in_m: bool,
    pub is_r_near_acyclic: bool,
    pub near_acyclic_witness: Option<RNearAcyclicWitness>,
    pub delta_chi: Rational,
    pub delta_chi_f: Rational,
    /// Set only when `H` is a clique.
    pub delta_chi_vc: Option<Rational>,
}

/// `(num_coef·r + num_off) / (den_coef·r + den_off)`.
fn frac(r: usize, a: i64, b: i64, c: i64, d: i64) -> Rational {
    let r = r as i64;
    ratio(a * r + b, c * r + d)
}

/// Classify `H` with `χ(H) = r >= 3`:
/// - no forest in `M(H)`: `δ_χ = δ_χf = (r-2)/(r-1)`;
/// - a forest but not `r`-near-acyclic: `δ_χ = (2r-5)/(2r-3)`;
/// - `r`-near-acyclic: `δ_χ = (r-3)/(r-2)`;
/// - with a forest, `δ_χf = (r-3)/(r-2)`;
/// - cliques additionally get `δ_χ^VC = (r-3)/(r-2)`.
pub fn classify(h: &Graph, budget: &Budget) -> Result<ThresholdReport> {
    let r = exact_chi(h, budget)?;
    if r <= 2 {
        return Err(Error::Precondition(alloc::format!(
            "thresholds are defined for χ(H) >= 3, got {r}"
        )));
    }
    let family = decomposition_family(h, budget)?;
    let has_forest = family.iter().any(Graph::is_forest);
    let witness = is_r_near_acyclic(h, budget)?;
    let near = witness.is_some();
    let low = frac(r, 1, -3, 1, -2);
    let mid = frac(r, 2, -5, 2, -3);
    let high = frac(r, 1, -2, 1, -1);
    let delta_chi = match (has_forest, near) {
        (false, _) => high.clone(),
        (true, true) => low.clone(),
        (true, false) => mid,
    };
    let delta_chi_f = if has_forest { low.clone() } else { high };
    let is_clique = h.edge_count() * 2 == h.n() * h.n().saturating_sub(1);
    Ok(ThresholdReport {
        chi: r,
        decomposition_family: family,
        has_forest_in_m: has_forest,
        is_r_near_acyclic: near,
        near_acyclic_witness: witness,
        delta_chi,
        delta_chi_f,
        delta_chi_vc: is_clique.then_some(low),
    })
}
