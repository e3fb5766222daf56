//! Fractional chromatic number, Kneser homomorphisms, random projections of
//! Kneser labelings and the book-based fractional coloring.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bitset::VertexSet;
use crate::budget::Budget;
use crate::clique::{extend_to_maximal_independent, max_weight_independent_set_rational};
use crate::coloring::{color_classes, dsatur_coloring};
use crate::constructions::binomial;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lp::{Lp, LpStatus};
use crate::rational::{from_usize, floor_i64};
use crate::Rational;

/// Optimal fractional coloring with a matching fractional clique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FractionalResult {
    pub value: Rational,
    /// Independent sets (sorted vertex lists) with positive weight.
    pub primal: Vec<(Vec<usize>, Rational)>,
    /// Weight per vertex; every independent set carries total weight `<= 1`.
    pub dual: Vec<Rational>,
}

fn indicator(set: &VertexSet) -> Vec<(usize, Rational)> {
    set.iter().map(|v| (v, Rational::one())).collect()
}

/// `χ_f(G)` by column generation over independent sets.
///
/// The restricted master starts from maximal extensions of a DSATUR coloring
/// and of every singleton; each round prices with an exact maximum-weight
/// independent set under the current duals and stops when no set has dual
/// weight above 1.
pub fn fractional_chromatic(g: &Graph, budget: &Budget) -> Result<FractionalResult> {
    let n = g.n();
    if n == 0 {
        return Ok(FractionalResult {
            value: Rational::zero(),
            primal: Vec::new(),
            dual: Vec::new(),
        });
    }
    let mut pool: Vec<VertexSet> = Vec::new();
    let mut seen: BTreeSet<Vec<u64>> = BTreeSet::new();
    let mut offer = |s: VertexSet, pool: &mut Vec<VertexSet>| {
        if seen.insert(s.words().to_vec()) {
            pool.push(s);
            true
        } else {
            false
        }
    };
    for class in color_classes(n, &dsatur_coloring(g)) {
        offer(extend_to_maximal_independent(g, &class), &mut pool);
    }
    for v in 0..n {
        offer(extend_to_maximal_independent(g, &VertexSet::from_iter(n, [v])), &mut pool);
    }

    let mut lp = Lp::new(vec![Rational::one(); n])?;
    // surplus columns first so set columns keep stable indices after them
    for v in 0..n {
        lp.add_column(vec![(v, -Rational::one())], Rational::zero());
    }
    let mut sets: Vec<VertexSet> = Vec::new();
    for s in pool.drain(..) {
        lp.add_column(indicator(&s), Rational::one());
        sets.push(s);
    }
    loop {
        match lp.solve(budget)? {
            LpStatus::Optimal => {}
            status => unreachable!("covering master is feasible and bounded, got {status:?}"),
        }
        let y = lp.duals();
        let (w, best) = max_weight_independent_set_rational(g, &y, None, budget)?;
        if w <= Rational::one() {
            break;
        }
        let s = extend_to_maximal_independent(g, &VertexSet::from_iter(n, best));
        if !offer(s.clone(), &mut pool) {
            // the priced set is already in the pool yet prices out; only
            // possible through a solver fault
            return Err(Error::Precondition("column generation stalled".into()));
        }
        lp.add_column(indicator(&s), Rational::one());
        sets.push(s);
    }
    let x = lp.primal();
    let primal: Vec<(Vec<usize>, Rational)> = sets
        .iter()
        .enumerate()
        .filter(|(j, _)| x[n + j].is_positive())
        .map(|(j, s)| (s.to_vec(), x[n + j].clone()))
        .collect();
    let result = FractionalResult {
        value: lp.objective(),
        primal,
        dual: lp.duals(),
    };
    verify_fractional(g, &result, budget)?;
    Ok(result)
}

/// Re-check both certificates of a [`FractionalResult`] from scratch: the
/// primal is a fractional cover by independent sets, the dual is a
/// fractional clique, and both sum to the claimed value.
pub fn verify_fractional(g: &Graph, r: &FractionalResult, budget: &Budget) -> Result<()> {
    let n = g.n();
    let fail = |m: &str| Err(Error::Precondition(format!("fractional certificate: {m}")));
    let mut cover = vec![Rational::zero(); n];
    let mut total = Rational::zero();
    for (set, w) in &r.primal {
        if w.is_negative() || set.iter().any(|&v| v >= n) {
            return fail("bad primal entry");
        }
        if !g.is_independent(&VertexSet::from_iter(n, set.iter().copied())) {
            return fail("primal set is not independent");
        }
        for &v in set {
            cover[v] += w;
        }
        total += w;
    }
    if cover.iter().any(|c| *c < Rational::one()) {
        return fail("some vertex is covered less than once");
    }
    if r.dual.len() != n || r.dual.iter().any(|y| y.is_negative()) {
        return fail("bad dual vector");
    }
    let dual_total = r.dual.iter().fold(Rational::zero(), |a, y| a + y);
    if total != r.value || dual_total != r.value {
        return fail("objective values differ");
    }
    if n > 0 {
        let (w, _) = max_weight_independent_set_rational(g, &r.dual, None, budget)?;
        if w > Rational::one() {
            return fail("dual overloads an independent set");
        }
    }
    Ok(())
}

/// A homomorphism `G -> KN(a, b)`: `b`-subsets of `0..a`, disjoint on edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KneserLabeling {
    pub a: usize,
    pub b: usize,
    /// Sorted `b`-subset per vertex.
    pub assignment: Vec<Vec<usize>>,
}

impl KneserLabeling {
    /// The identity labeling of `KN(a, b)` as built by
    /// [`crate::constructions::kneser`].
    pub fn identity(a: usize, b: usize) -> KneserLabeling {
        KneserLabeling {
            a,
            b,
            assignment: crate::constructions::subsets(a, b),
        }
    }

    pub fn verify(&self, g: &Graph) -> Result<()> {
        if self.assignment.len() != g.n() {
            return Err(Error::InvalidLabeling(format!(
                "{} sets for {} vertices",
                self.assignment.len(),
                g.n()
            )));
        }
        let mut sets = Vec::with_capacity(g.n());
        for (v, s) in self.assignment.iter().enumerate() {
            if s.len() != self.b || s.windows(2).any(|w| w[0] >= w[1]) || s.iter().any(|&x| x >= self.a) {
                return Err(Error::InvalidLabeling(format!(
                    "vertex {v} is not labelled by a sorted {}-subset of 0..{}",
                    self.b, self.a
                )));
            }
            sets.push(VertexSet::from_iter(self.a.max(1), s.iter().copied()));
        }
        for (u, v) in g.edges() {
            if sets[u].intersects(&sets[v]) {
                return Err(Error::InvalidLabeling(format!("edge {u}-{v} has intersecting sets")));
            }
        }
        Ok(())
    }

    pub fn ratio(&self) -> Rational {
        Rational::new(self.a.into(), self.b.max(1).into())
    }
}

/// Search order: each new vertex has as many earlier neighbors as possible.
fn connected_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut placed = VertexSet::new(n.max(1));
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed.contains(v))
            .max_by_key(|&v| (g.neighbors(v).intersection_len(&placed), g.degree(v), usize::MAX - v))
            .unwrap();
        placed.insert(v);
        order.push(v);
    }
    order
}

/// An `a:b`-coloring of `G`, or `None` after exhaustive search.
///
/// Labels are `u64` masks, so `a <= 64`. The first vertex of every component
/// is fixed to `{0, …, b-1}`, which loses nothing since `KN(a, b)` is
/// vertex-transitive.
pub fn kneser_homomorphism(g: &Graph, a: usize, b: usize, budget: &Budget) -> Result<Option<KneserLabeling>> {
    if a > 64 || b == 0 {
        return Err(Error::InvalidParameter("kneser_homomorphism needs 1 <= b and a <= 64".into()));
    }
    let n = g.n();
    if b > a {
        return Ok(if n == 0 { Some(KneserLabeling { a, b, assignment: Vec::new() }) } else { None });
    }
    let domain_size = binomial(a, b).unwrap_or(usize::MAX);
    if domain_size > 1 << 22 {
        return Err(Error::InvalidParameter(format!("C({a},{b}) is too large to search")));
    }
    let domain: Vec<u64> = crate::constructions::subsets(a, b)
        .iter()
        .map(|s| s.iter().fold(0u64, |m, &x| m | 1 << x))
        .collect();
    let order = connected_order(g);
    let mut first_of_component = vec![false; n];
    let comp = g.components();
    let mut seen_comp = BTreeSet::new();
    for &v in &order {
        if seen_comp.insert(comp[v]) {
            first_of_component[v] = true;
        }
    }
    let mut label = vec![0u64; n];

    fn rec(
        g: &Graph,
        depth: usize,
        order: &[usize],
        first: &[bool],
        domain: &[u64],
        label: &mut Vec<u64>,
        b: usize,
        budget: &Budget,
    ) -> Result<bool> {
        budget.tick()?;
        if depth == order.len() {
            return Ok(true);
        }
        let v = order[depth];
        let forbidden = g.neighbors(v).iter().fold(0u64, |m, w| m | label[w]);
        if first[v] {
            let s = (1u64 << b) - 1;
            if s & forbidden != 0 {
                return Ok(false);
            }
            label[v] = s;
            if rec(g, depth + 1, order, first, domain, label, b, budget)? {
                return Ok(true);
            }
            label[v] = 0;
            return Ok(false);
        }
        if (domain.len() > 0) && (64 - forbidden.count_ones() as usize) < b {
            return Ok(false);
        }
        for &s in domain {
            if s & forbidden != 0 {
                continue;
            }
            label[v] = s;
            if rec(g, depth + 1, order, first, domain, label, b, budget)? {
                return Ok(true);
            }
        }
        label[v] = 0;
        Ok(false)
    }

    if rec(g, 0, &order, &first_of_component, &domain, &mut label, b, budget)? {
        let assignment = label
            .iter()
            .map(|&m| (0..a).filter(|&x| m >> x & 1 == 1).collect())
            .collect();
        let l = KneserLabeling { a, b, assignment };
        l.verify(g)?;
        Ok(Some(l))
    } else {
        Ok(None)
    }
}

/// Outcome details of a successful projection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Projection {
    pub labeling: KneserLabeling,
    /// Draws used, including the successful one.
    pub draws: usize,
    /// Ground-set replication factor applied before sampling.
    pub replication: usize,
}

/// Project an `a:b` labeling onto `KN(m, ⌊(b/a − δ)m⌋)`.
///
/// A uniform `m`-subset `S` of the ground set is drawn; if every vertex keeps
/// more than `(b/a − δ)m` of its elements inside `S`, each label is cut to
/// its smallest `⌊(b/a − δ)m⌋` surviving elements and `S` is renumbered to
/// `0..m`. When `m` exceeds what sampling from `[a]` allows, the ground set is
/// first replicated `k` times (labels replicated alike, so `b/a` is unchanged)
/// with `k·a >= 2m`.
pub fn project_homomorphism(
    l: &KneserLabeling,
    delta: &Rational,
    m: usize,
    seed: u64,
    max_retries: usize,
) -> Result<Projection> {
    let ratio_ba = Rational::new(l.b.into(), l.a.max(1).into());
    if !delta.is_positive() || *delta >= ratio_ba {
        return Err(Error::InvalidParameter(format!("delta must lie in (0, {}/{})", l.b, l.a)));
    }
    let keep_exact = (&ratio_ba - delta) * from_usize(m);
    let keep = floor_i64(&keep_exact);
    if keep < 1 {
        return Err(Error::InvalidParameter(format!(
            "target set size floor(({}/{} - delta) m) is below 1",
            l.b, l.a
        )));
    }
    let keep = keep as usize;
    let replication = if m > l.a { (2 * m).div_ceil(l.a) } else { 1 };
    let ground = l.a * replication;
    let labels: Vec<Vec<usize>> = l
        .assignment
        .iter()
        .map(|s| {
            let mut out: Vec<usize> = (0..replication).flat_map(|c| s.iter().map(move |&x| c * l.a + x)).collect();
            out.sort_unstable();
            out
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failing = 0;
    for draw in 1..=max_retries {
        let mut sample = rand::seq::index::sample(&mut rng, ground, m).into_vec();
        sample.sort_unstable();
        let mut position = vec![usize::MAX; ground];
        for (i, &x) in sample.iter().enumerate() {
            position[x] = i;
        }
        let kept: Vec<Vec<usize>> = labels
            .iter()
            .map(|s| s.iter().filter_map(|&x| (position[x] != usize::MAX).then_some(position[x])).collect())
            .collect();
        failing = kept
            .iter()
            .filter(|k: &&Vec<usize>| from_usize(k.len()) <= keep_exact)
            .count();
        if failing == 0 {
            let assignment = kept.into_iter().map(|mut k| {
                k.truncate(keep);
                k
            });
            let labeling = KneserLabeling {
                a: m,
                b: keep,
                assignment: assignment.collect(),
            };
            return Ok(Projection {
                labeling,
                draws: draw,
                replication,
            });
        }
    }
    Err(Error::RetriesExhausted {
        retries: max_retries,
        failing,
    })
}

/// [`project_homomorphism`] followed by a homomorphism check against `g`.
pub fn project_and_verify(
    g: &Graph,
    l: &KneserLabeling,
    delta: &Rational,
    m: usize,
    seed: u64,
    max_retries: usize,
) -> Result<Projection> {
    let p = project_homomorphism(l, delta, m, seed, max_retries)?;
    p.labeling.verify(g)?;
    Ok(p)
}

/// Multi-coloring assembled from copies of `K_{r-2}[t]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BookColoring {
    /// `b` colors per vertex out of `a` used in total.
    pub labeling: KneserLabeling,
    pub copies: usize,
}

/// Every copy of `K_{parts}[t]` in `g` (not necessarily induced), each as its
/// list of parts; parts are sorted and listed by increasing first vertex.
pub fn multipartite_copies(g: &Graph, parts: usize, t: usize, budget: &Budget) -> Result<Vec<Vec<Vec<usize>>>> {
    let n = g.n();
    let mut out = Vec::new();
    if parts == 0 {
        out.push(Vec::new());
        return Ok(out);
    }
    fn t_subsets(cand: &[usize], t: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == t {
            out.push(cur.clone());
            return;
        }
        for i in start..cand.len() {
            if cand.len() - i < t - cur.len() {
                break;
            }
            cur.push(cand[i]);
            t_subsets(cand, t, i + 1, cur, out);
            cur.pop();
        }
    }
    fn rec(
        g: &Graph,
        parts: usize,
        t: usize,
        allowed: &VertexSet,
        min_first: usize,
        cur: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
        budget: &Budget,
    ) -> Result<()> {
        budget.tick()?;
        if cur.len() == parts {
            out.push(cur.clone());
            return Ok(());
        }
        let cand: Vec<usize> = allowed.iter().filter(|&v| v >= min_first).collect();
        let mut choices = Vec::new();
        for (i, &first) in cand.iter().enumerate() {
            let mut rest = Vec::new();
            t_subsets(&cand[i + 1..], t, 0, &mut vec![first], &mut rest);
            // ordering parts by first vertex makes each copy appear once
            choices.extend(rest.into_iter().map(|mut p| {
                p.sort_unstable();
                p
            }));
        }
        for part in choices {
            let mut next_allowed = allowed.clone();
            for &v in &part {
                next_allowed.intersect_with(g.neighbors(v));
            }
            let first = part[0];
            cur.push(part);
            rec(g, parts, t, &next_allowed, first + 1, cur, out, budget)?;
            cur.pop();
        }
        Ok(())
    }
    rec(g, parts, t, &VertexSet::full(n), 0, &mut Vec::new(), &mut out, budget)?;
    Ok(out)
}

/// Fractional coloring from books: for every copy `T` of `K_{r-2}[t]`, color
/// `G[N(T)]` greedily into classes `T(1), …, T(s)`; a vertex `v` receives the
/// color `(T, i)` whenever `v ∈ T(i)`. Every vertex keeps its `b` smallest
/// colors, `b` being the minimum number of colors any vertex receives.
pub fn fractional_coloring_via_books(g: &Graph, r: usize, t: usize, budget: &Budget) -> Result<BookColoring> {
    if r < 3 || t == 0 {
        return Err(Error::InvalidParameter("books need r >= 3 and t >= 1".into()));
    }
    let n = g.n();
    let copies = multipartite_copies(g, r - 2, t, budget)?;
    let mut colors_of: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut next_color = 0;
    for copy in &copies {
        let mut common = VertexSet::full(n.max(1));
        for part in copy {
            for &v in part {
                common.intersect_with(g.neighbors(v));
            }
        }
        let members = common.to_vec();
        if members.is_empty() {
            continue;
        }
        let sub = g.induced(&members);
        let coloring = dsatur_coloring(&sub);
        let classes = crate::coloring::color_count(&coloring);
        for (i, &v) in members.iter().enumerate() {
            colors_of[v].push(next_color + coloring[i]);
        }
        next_color += classes;
    }
    if let Some(v) = (0..n).find(|&v| colors_of[v].is_empty()) {
        return Err(Error::EmptyNeighborhoodCopies(v));
    }
    let b = colors_of.iter().map(Vec::len).min().unwrap_or(0);
    for list in colors_of.iter_mut() {
        list.sort_unstable();
        list.truncate(b);
    }
    let used: BTreeSet<usize> = colors_of.iter().flatten().copied().collect();
    let renumber: Vec<usize> = {
        let mut map = vec![usize::MAX; next_color];
        for (i, &c) in used.iter().enumerate() {
            map[c] = i;
        }
        map
    };
    let assignment = colors_of
        .into_iter()
        .map(|list| list.into_iter().map(|c| renumber[c]).collect())
        .collect();
    let labeling = KneserLabeling {
        a: used.len(),
        b,
        assignment,
    };
    labeling.verify(g)?;
    Ok(BookColoring {
        labeling,
        copies: copies.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clique::independence_number;
    use crate::coloring::chromatic_number;
    use crate::constructions::kneser;
    use crate::rational::ratio;
    use proptest::prelude::*;

    fn chif(g: &Graph) -> FractionalResult {
        fractional_chromatic(g, &Budget::unlimited()).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(chif(&Graph::cycle(5)).value, ratio(5, 2));
        assert_eq!(chif(&Graph::cycle(7)).value, ratio(7, 3));
        assert_eq!(chif(&Graph::complete(4)).value, ratio(4, 1));
        assert_eq!(chif(&Graph::empty(3)).value, ratio(1, 1));
        assert_eq!(chif(&Graph::empty(0)).value, ratio(0, 1));
        assert_eq!(chif(&kneser(5, 2).unwrap()).value, ratio(5, 2));
    }

    #[test]
    fn verifier_rejects_tampering() {
        let g = Graph::cycle(5);
        let mut r = chif(&g);
        r.dual[0] += ratio(1, 2);
        assert!(verify_fractional(&g, &r, &Budget::unlimited()).is_err());
    }

    #[test]
    fn homomorphisms() {
        let b = Budget::unlimited();
        let c5 = Graph::cycle(5);
        let l = kneser_homomorphism(&c5, 5, 2, &b).unwrap().unwrap();
        l.verify(&c5).unwrap();
        assert!(kneser_homomorphism(&Graph::complete(3), 5, 2, &b).unwrap().is_none());
        // KN(a, 1) = K_a
        assert!(kneser_homomorphism(&c5, 3, 1, &b).unwrap().is_some());
        assert!(kneser_homomorphism(&c5, 2, 1, &b).unwrap().is_none());
    }

    #[test]
    fn projection_errors() {
        let l = KneserLabeling::identity(10, 4);
        assert!(matches!(project_homomorphism(&l, &ratio(2, 5), 120, 0, 5), Err(Error::InvalidParameter(_))));
        assert!(matches!(project_homomorphism(&l, &ratio(0, 1), 120, 0, 5), Err(Error::InvalidParameter(_))));
        // floor((2/5 - 39/100) * 10) = 0
        assert!(matches!(project_homomorphism(&l, &ratio(39, 100), 10, 0, 5), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn projection_with_whole_ground_set() {
        // m = a forces S = [a]; keeping b - 1 elements always works
        let g = kneser(7, 3).unwrap();
        let l = KneserLabeling::identity(7, 3);
        let delta = ratio(1, 10);
        let p = project_and_verify(&g, &l, &delta, 7, 3, 1).unwrap();
        assert_eq!((p.labeling.a, p.labeling.b, p.draws), (7, 2, 1));
    }

    #[test]
    fn single_draw_success_rate() {
        // m = 2 ln n / (2 δ^2) for KN(10,4): n = 210, δ = 3/20
        let g = kneser(10, 4).unwrap();
        let l = KneserLabeling::identity(10, 4);
        let m = (2.0 * libm::log(210.0) / (2.0 * 0.15 * 0.15)) as usize + 1;
        let fails = (0..100)
            .filter(|&seed| project_and_verify(&g, &l, &ratio(3, 20), m, seed, 1).is_err())
            .count();
        assert!(fails < 50, "{fails} failures");
    }

    #[test]
    fn books_bipartite() {
        let g = crate::constructions::complete_multipartite(&[3, 3]);
        let bc = fractional_coloring_via_books(&g, 3, 1, &Budget::unlimited()).unwrap();
        bc.labeling.verify(&g).unwrap();
        assert_eq!(bc.copies, 6);
        assert!(bc.labeling.ratio() <= ratio(2, 1));
    }

    #[test]
    fn books_wheel_join() {
        let g = Graph::cycle(5).join(&Graph::complete(2));
        let bc = fractional_coloring_via_books(&g, 4, 1, &Budget::unlimited()).unwrap();
        bc.labeling.verify(&g).unwrap();
    }

    #[test]
    fn books_isolated_vertex() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            fractional_coloring_via_books(&g, 3, 1, &Budget::unlimited()),
            Err(Error::EmptyNeighborhoodCopies(3))
        );
    }

    #[test]
    fn copies_of_k2_blowup() {
        // K_2[2] = C4; K_{3,3} holds C(3,2)^2 = 9 of them
        let g = crate::constructions::complete_multipartite(&[3, 3]);
        assert_eq!(multipartite_copies(&g, 2, 2, &Budget::unlimited()).unwrap().len(), 9);
        // triangles of K4
        assert_eq!(multipartite_copies(&Graph::complete(4), 3, 1, &Budget::unlimited()).unwrap().len(), 4);
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut e = Vec::new();
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[k] {
                            e.push((u, v));
                        }
                        k += 1;
                    }
                }
                Graph::from_edges(n, &e).unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]
        #[test]
        fn sandwich(g in arb_graph(9)) {
            let f = chif(&g).value;
            let chi = chromatic_number(&g, &Budget::unlimited()).exact().unwrap();
            let alpha = independence_number(&g);
            prop_assert!(ratio(g.n() as i64, alpha as i64) <= f);
            prop_assert!(f <= ratio(chi as i64, 1));
        }

        #[test]
        fn homomorphism_bounds_fractional(g in arb_graph(7)) {
            if let Some(l) = kneser_homomorphism(&g, 5, 2, &Budget::unlimited()).unwrap() {
                prop_assert!(chif(&g).value <= l.ratio());
            }
        }
    }
}
