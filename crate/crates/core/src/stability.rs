//! Stability partitions: edit distance to multipartite templates, the
//! unique-sparse-side refinement, a seeded local-search extractor and
//! certificate verifiers for the three stability statements.
//!
//! All clause comparisons are exact. Bounds have the shape
//! `offset + coef·√β`; comparisons against them square both sides.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bitset::VertexSet;
use crate::budget::Budget;
use crate::classify::decomposition_family;
use crate::coloring::{chromatic_number, ChromaticOutcome};
use crate::constructions::{binomial, HajnalLayout, HajnalParams};
use crate::error::{Error, Result};
use crate::fractional::{fractional_chromatic, kneser_homomorphism, project_and_verify, KneserLabeling};
use crate::graph::Graph;
use crate::rational::{from_usize, int, le_sqrt_scaled, lt_sqrt_scaled, ratio, sqrt_f64, to_f64, to_pq};
use crate::subgraph::find_subgraph_budgeted;
use crate::Rational;

/// Restarts used by [`extract_partition`] and the theta verifier.
pub const DEFAULT_RESTARTS: usize = 8;
/// Draws allowed when projecting a Kneser labeling inside the clique verifier.
pub const KNESER_PROJECTION_RETRIES: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PartitionKind {
    LambdaStability,
    CliqueStability,
    ThetaStability,
}

impl PartitionKind {
    pub fn name(self) -> &'static str {
        match self {
            PartitionKind::LambdaStability => "lambda_stability",
            PartitionKind::CliqueStability => "clique_stability",
            PartitionKind::ThetaStability => "theta_stability",
        }
    }

    pub fn parse(s: &str) -> Option<PartitionKind> {
        match s {
            "lambda_stability" | "lambda" => Some(PartitionKind::LambdaStability),
            "clique_stability" | "clique" => Some(PartitionKind::CliqueStability),
            "theta_stability" | "theta" => Some(PartitionKind::ThetaStability),
            _ => None,
        }
    }
}

/// A labelled vertex partition.
///
/// For the lambda and clique kinds `special` is `A` (or `A*`) and `classes`
/// are `B_1, …, B_{r-1}`, the last one being the small class. For the theta
/// kind `special` is `S` and `classes` holds the single remainder class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    pub kind: PartitionKind,
    pub r: usize,
    pub beta: Rational,
    pub special: Vec<usize>,
    pub classes: Vec<Vec<usize>>,
    /// Vertices of `special` that did not have exactly one sparse side
    /// during refinement.
    pub residue: Vec<usize>,
}

impl Partition {
    pub fn new(kind: PartitionKind, r: usize, beta: Rational, special: Vec<usize>, classes: Vec<Vec<usize>>) -> Self {
        let mut p = Partition {
            kind,
            r,
            beta,
            special,
            classes,
            residue: Vec::new(),
        };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        self.special.sort_unstable();
        self.residue.sort_unstable();
        for c in &mut self.classes {
            c.sort_unstable();
        }
    }

    /// Disjointness, coverage of `0..n`, `r >= 3`, `β > 0` and the class
    /// count for the kind.
    pub fn validate(&self, n: usize) -> Result<()> {
        if self.r < 3 {
            return Err(Error::InvalidParameter(format!("r must be at least 3, got {}", self.r)));
        }
        if !self.beta.is_positive() {
            return Err(Error::InvalidParameter("β must be positive".into()));
        }
        let want = match self.kind {
            PartitionKind::ThetaStability => 1,
            _ => self.r - 1,
        };
        if self.classes.len() != want {
            return Err(Error::NotPartition(format!(
                "{} needs {want} classes besides the special one, got {}",
                self.kind.name(),
                self.classes.len()
            )));
        }
        let mut parts: Vec<&[usize]> = vec![&self.special];
        parts.extend(self.classes.iter().map(Vec::as_slice));
        check_partition(n, &parts)
    }
}

fn check_partition(n: usize, parts: &[&[usize]]) -> Result<()> {
    let mut seen = vec![false; n];
    for p in parts {
        for &v in p.iter() {
            if v >= n {
                return Err(Error::NotPartition(format!("vertex {v} out of range for n = {n}")));
            }
            if seen[v] {
                return Err(Error::NotPartition(format!("vertex {v} appears twice")));
            }
            seen[v] = true;
        }
    }
    if let Some(v) = seen.iter().position(|s| !s) {
        return Err(Error::NotPartition(format!("vertex {v} is not covered")));
    }
    Ok(())
}

/// `|E(G) △ E(M)|` for the complete multipartite `M` on `parts`.
pub fn edit_distance_multipartite(g: &Graph, parts: &[Vec<usize>]) -> Result<usize> {
    let refs: Vec<&[usize]> = parts.iter().map(Vec::as_slice).collect();
    check_partition(g.n(), &refs)?;
    let n = g.n();
    let mut class = vec![0; n];
    for (i, p) in parts.iter().enumerate() {
        for &v in p {
            class[v] = i;
        }
    }
    let mut internal = 0;
    for (u, v) in g.edges() {
        if class[u] == class[v] {
            internal += 1;
        }
    }
    let cross_pairs: usize = {
        let total = n * n.saturating_sub(1) / 2;
        total - parts.iter().map(|p| p.len() * p.len().saturating_sub(1) / 2).sum::<usize>()
    };
    let cross_edges = g.edge_count() - internal;
    Ok(internal + cross_pairs - cross_edges)
}

/// The upper bound `offset + coef·√β` of a clause.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bound {
    pub offset: Rational,
    pub sqrt_beta_coef: Rational,
}

impl Bound {
    pub fn plain(offset: Rational) -> Bound {
        Bound {
            offset,
            sqrt_beta_coef: Rational::zero(),
        }
    }

    pub fn sqrt_beta(coef: Rational) -> Bound {
        Bound {
            offset: Rational::zero(),
            sqrt_beta_coef: coef,
        }
    }

    /// `x <= offset + coef·√β`.
    pub fn admits(&self, x: &Rational, beta: &Rational) -> bool {
        le_sqrt_scaled(&(x - &self.offset), &self.sqrt_beta_coef, beta, &int(1))
    }

    pub fn approx(&self, beta: &Rational) -> f64 {
        to_f64(&self.offset) + to_f64(&self.sqrt_beta_coef) * sqrt_f64(beta)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClauseStatus {
    Pass,
    Fail,
    Unknown,
}

/// One checked inequality. `measured` is absent only for unknown clauses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Clause {
    pub name: String,
    pub status: ClauseStatus,
    pub measured: Option<Rational>,
    pub bound: Option<Bound>,
    pub detail: Option<String>,
}

/// A reported quantity without a verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Measurement {
    pub name: String,
    pub value: Option<Rational>,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub kind: PartitionKind,
    pub r: usize,
    pub beta: Rational,
    pub clauses: Vec<Clause>,
    pub measurements: Vec<Measurement>,
    pub notes: Vec<String>,
    pub overall: bool,
}

impl Certificate {
    fn new(kind: PartitionKind, r: usize, beta: Rational) -> Self {
        Certificate {
            kind,
            r,
            beta,
            clauses: Vec::new(),
            measurements: Vec::new(),
            notes: Vec::new(),
            overall: false,
        }
    }

    fn check(&mut self, name: String, measured: Rational, bound: Bound) {
        let ok = bound.admits(&measured, &self.beta);
        self.clauses.push(Clause {
            name,
            status: if ok { ClauseStatus::Pass } else { ClauseStatus::Fail },
            measured: Some(measured),
            bound: Some(bound),
            detail: None,
        });
    }

    fn push(&mut self, clause: Clause) {
        self.clauses.push(clause);
    }

    fn measure(&mut self, name: &str, value: Option<Rational>, detail: Option<String>) {
        self.measurements.push(Measurement {
            name: name.into(),
            value,
            detail,
        });
    }

    fn finish(mut self) -> Self {
        self.overall = self.clauses.iter().all(|c| c.status == ClauseStatus::Pass);
        self
    }

    pub fn clause(&self, name: &str) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.name == name)
    }
}

fn unknown(name: String, bound: Option<Bound>, detail: String) -> Clause {
    Clause {
        name,
        status: ClauseStatus::Unknown,
        measured: None,
        bound,
        detail: Some(detail),
    }
}

/// `β = (2r-5)/(2r-3) − δ(G)/n`, the slack of the minimum degree below the
/// threshold, or `None` when it is not positive.
pub fn beta_from_min_degree(g: &Graph, r: usize) -> Option<Rational> {
    if g.n() == 0 || r < 3 {
        return None;
    }
    let r = r as i64;
    let beta = ratio(2 * r - 5, 2 * r - 3) - Rational::new(g.min_degree().into(), g.n().into());
    beta.is_positive().then_some(beta)
}

/// The partition read off an r-Hajnal layout: the Kneser part is special,
/// the classes are the join classes, the large side and the small side.
pub fn hajnal_canonical_partition(kind: PartitionKind, r: usize, p: &HajnalParams, beta: Rational) -> Partition {
    let layout = HajnalLayout::new(r, p);
    let mut classes: Vec<Vec<usize>> = layout.join_classes.iter().map(|c| c.clone().collect()).collect();
    classes.push(layout.a().collect());
    classes.push(layout.b.clone().collect());
    Partition::new(kind, r, beta, layout.kneser.collect(), classes)
}

fn sets_of(n: usize, classes: &[Vec<usize>]) -> Vec<VertexSet> {
    classes
        .iter()
        .map(|c| VertexSet::from_iter(n.max(1), c.iter().copied()))
        .collect()
}

/// Move special vertices with exactly one sparse side.
///
/// A side `B_i` is sparse for `x` when `|N(x) ∩ B_i| < 5r√β n`. A vertex
/// sparse to exactly one `B_i` with `i <= r-2` joins that class; sparse to
/// exactly `B_{r-1}` it stays special. All other special vertices stay
/// special and are listed in `residue`. The result has the clique kind.
pub fn refine_partition(g: &Graph, p: &Partition) -> Result<Partition> {
    if p.kind == PartitionKind::ThetaStability {
        return Err(Error::Precondition("refinement needs an A, B_1, …, B_{r-1} partition".into()));
    }
    p.validate(g.n())?;
    let n = g.n();
    let k = p.r - 1;
    let sets = sets_of(n, &p.classes);
    let coef = from_usize(5 * p.r);
    let scale = from_usize(n);
    let mut classes = p.classes.clone();
    let mut special = Vec::new();
    let mut residue = Vec::new();
    for &x in &p.special {
        let sparse: Vec<usize> = (0..k)
            .filter(|&i| {
                let cnt = from_usize(g.neighbors(x).intersection_len(&sets[i]));
                lt_sqrt_scaled(&cnt, &coef, &p.beta, &scale)
            })
            .collect();
        match sparse.as_slice() {
            [i] if *i < k - 1 => classes[*i].push(x),
            [_] => special.push(x),
            _ => {
                special.push(x);
                residue.push(x);
            }
        }
    }
    let mut out = Partition {
        kind: PartitionKind::CliqueStability,
        r: p.r,
        beta: p.beta.clone(),
        special,
        classes,
        residue,
    };
    out.normalize();
    Ok(out)
}

/// Class assignment with per-vertex neighbor counts in every class.
struct Assignment<'g> {
    g: &'g Graph,
    class: Vec<usize>,
    counts: Vec<Vec<usize>>,
    sizes: Vec<usize>,
}

const UNPLACED: usize = usize::MAX;

impl<'g> Assignment<'g> {
    fn empty(g: &'g Graph, k: usize) -> Self {
        Assignment {
            g,
            class: vec![UNPLACED; g.n()],
            counts: vec![vec![0; k]; g.n()],
            sizes: vec![0; k],
        }
    }

    fn place(&mut self, v: usize, c: usize) {
        debug_assert_eq!(self.class[v], UNPLACED);
        self.class[v] = c;
        self.sizes[c] += 1;
        for u in self.g.neighbors(v).iter() {
            self.counts[u][c] += 1;
        }
    }

    fn unplace(&mut self, v: usize) {
        let c = self.class[v];
        self.class[v] = UNPLACED;
        self.sizes[c] -= 1;
        for u in self.g.neighbors(v).iter() {
            self.counts[u][c] -= 1;
        }
    }

    fn relocate(&mut self, v: usize, c: usize) {
        self.unplace(v);
        self.place(v, c);
    }

    fn fewest_neighbors(&self, v: usize) -> usize {
        let k = self.sizes.len();
        (0..k)
            .min_by_key(|&c| (self.counts[v][c], usize::MAX - self.sizes[c], c))
            .unwrap()
    }

    fn internal_edges(&self) -> usize {
        self.g
            .edges()
            .filter(|&(u, v)| self.class[u] != UNPLACED && self.class[u] == self.class[v])
            .count()
    }

    /// Single-vertex moves that strictly reduce internal edges.
    fn descend(&mut self, budget: &Budget) -> Result<()> {
        loop {
            let mut moved = false;
            for v in 0..self.g.n() {
                budget.tick()?;
                let c = self.class[v];
                if c == UNPLACED {
                    continue;
                }
                let d = (0..self.sizes.len()).min_by_key(|&d| (self.counts[v][d], d)).unwrap();
                if self.counts[v][d] < self.counts[v][c] {
                    self.relocate(v, d);
                    moved = true;
                }
            }
            if !moved {
                return Ok(());
            }
        }
    }

    /// Move vertices until every class has its target size, each time
    /// picking the move that increases the edit distance least.
    fn rebalance(&mut self, targets: &[usize]) {
        loop {
            let Some(o) = (0..targets.len()).find(|&c| self.sizes[c] > targets[c]) else {
                return;
            };
            let u = (0..targets.len()).find(|&c| self.sizes[c] < targets[c]).unwrap();
            let cost = |v: usize| -> i64 {
                let e_u = self.counts[v][u] as i64;
                let e_o = self.counts[v][o] as i64;
                let ne_u = self.sizes[u] as i64 - e_u;
                let ne_o = self.sizes[o] as i64 - 1 - e_o;
                (e_u - ne_u) - (e_o - ne_o)
            };
            let v = (0..self.g.n())
                .filter(|&v| self.class[v] == o)
                .min_by_key(|&v| (cost(v), v))
                .unwrap();
            self.relocate(v, u);
        }
    }

    fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.sizes.len()];
        for (v, &c) in self.class.iter().enumerate() {
            if c != UNPLACED {
                out[c].push(v);
            }
        }
        out
    }
}

/// Greedy placement in a seeded order followed by descent; the best of
/// `restarts` runs (fewest internal edges, then lowest run index).
fn local_search<'g>(g: &'g Graph, k: usize, seed: u64, restarts: usize, budget: &Budget) -> Result<Assignment<'g>> {
    let mut best: Option<(usize, Assignment<'g>)> = None;
    for run in 0..restarts.max(1) {
        let mut order: Vec<usize> = (0..g.n()).collect();
        if run > 0 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(run as u64);
            order.shuffle(&mut rng);
        }
        let mut a = Assignment::empty(g, k);
        for &v in &order {
            let c = a.fewest_neighbors(v);
            a.place(v, c);
        }
        a.descend(budget)?;
        let score = a.internal_edges();
        if best.as_ref().is_none_or(|(s, _)| score < *s) {
            best = Some((score, a));
        }
    }
    Ok(best.unwrap().1)
}

/// Seeded local-search extraction of an `A, B_1, …, B_{r-1}` partition,
/// followed by [`refine_partition`].
///
/// Vertices whose degree inside their class exceeds `2√β n` go to `A`;
/// then, while some class still spans an edge, the vertex of largest
/// internal degree (lowest index on ties) goes to `A`. Classes are ordered
/// by size, largest first.
pub fn extract_partition(g: &Graph, r: usize, beta: &Rational, seed: u64, budget: &Budget) -> Result<Partition> {
    extract_partition_with(g, r, beta, seed, DEFAULT_RESTARTS, budget)
}

pub fn extract_partition_with(
    g: &Graph,
    r: usize,
    beta: &Rational,
    seed: u64,
    restarts: usize,
    budget: &Budget,
) -> Result<Partition> {
    if r < 3 {
        return Err(Error::InvalidParameter(format!("r must be at least 3, got {r}")));
    }
    if !beta.is_positive() {
        return Err(Error::InvalidParameter("β must be positive".into()));
    }
    let n = g.n();
    let mut a = local_search(g, r - 1, seed, restarts, budget)?;
    let scale = from_usize(n);
    let two = int(2);
    let heavy: Vec<usize> = (0..n)
        .filter(|&v| {
            let d = from_usize(a.counts[v][a.class[v]]);
            !le_sqrt_scaled(&d, &two, beta, &scale)
        })
        .collect();
    let mut special = Vec::new();
    for v in heavy {
        a.unplace(v);
        special.push(v);
    }
    loop {
        let worst = (0..n)
            .filter(|&v| a.class[v] != UNPLACED)
            .map(|v| (a.counts[v][a.class[v]], v))
            .filter(|&(d, _)| d > 0)
            .max_by_key(|&(d, v)| (d, usize::MAX - v));
        match worst {
            Some((_, v)) => {
                a.unplace(v);
                special.push(v);
            }
            None => break,
        }
    }
    let mut classes = a.classes();
    classes.sort_by_key(|c| (usize::MAX - c.len(), c.first().copied().unwrap_or(usize::MAX)));
    let p = Partition::new(PartitionKind::LambdaStability, r, beta.clone(), special, classes);
    refine_partition(g, &p)
}

/// Template sizes with the small class at `small`: `round(n/(2r-3))` there,
/// the rest split as evenly as possible.
fn template_sizes(n: usize, r: usize, small: usize) -> Vec<usize> {
    let d = 2 * r - 3;
    let small_size = (2 * n + d) / (2 * d);
    let big = n - small_size.min(n);
    let k = r - 2;
    let mut out = Vec::with_capacity(r - 1);
    let mut j = 0;
    for i in 0..r - 1 {
        if i == small {
            out.push(small_size.min(n));
        } else {
            out.push(big / k + usize::from(j < big % k));
            j += 1;
        }
    }
    out
}

/// Edit distance to the integer-sized template `K_{r-1}(2n/(2r-3), …,
/// n/(2r-3))`: special vertices join the class where they have fewest
/// neighbors, classes are rebalanced by cheapest single moves, and the
/// minimum is taken over which class is the small one.
pub fn template_distance(g: &Graph, special: &[usize], classes: &[Vec<usize>], r: usize) -> Result<(usize, Vec<Vec<usize>>)> {
    let mut parts: Vec<&[usize]> = vec![special];
    parts.extend(classes.iter().map(Vec::as_slice));
    check_partition(g.n(), &parts)?;
    let mut best: Option<(usize, Vec<Vec<usize>>)> = None;
    for small in 0..r - 1 {
        let mut a = Assignment::empty(g, r - 1);
        for (i, c) in classes.iter().enumerate() {
            for &v in c {
                a.place(v, i);
            }
        }
        for &v in special {
            let c = (0..r - 1).min_by_key(|&c| (a.counts[v][c], c)).unwrap();
            a.place(v, c);
        }
        a.rebalance(&template_sizes(g.n(), r, small));
        let parts = a.classes();
        let d = edit_distance_multipartite(g, &parts)?;
        if best.as_ref().is_none_or(|(b, _)| d < *b) {
            best = Some((d, parts));
        }
    }
    Ok(best.unwrap())
}

fn chi_measurement(cert: &mut Certificate, name: &str, g: &Graph, budget: &Budget) {
    match chromatic_number(g, budget) {
        ChromaticOutcome::Exact { chi, .. } => cert.measure(name, Some(from_usize(chi)), None),
        ChromaticOutcome::Unknown { lower, upper, .. } => {
            cert.measure(name, None, Some(format!("budget exhausted; between {lower} and {upper}")))
        }
    }
}

fn beta_cap_measurement(cert: &mut Certificate, cap: Rational, cap_text: &str) {
    let ok = cert.beta < cap;
    let beta = cert.beta.clone();
    cert.measure(
        "beta",
        Some(beta),
        Some(format!(
            "hypothesis β < {cap_text} = {} is {}",
            to_pq(&cap),
            if ok { "met" } else { "not met" }
        )),
    );
}

fn size_clauses(cert: &mut Certificate, n: usize, p: &Partition, special_coef: Rational, small_coef: Rational, special_name: &str) {
    let r = p.r;
    let d = (2 * r - 3) as i64;
    let nn = from_usize(n);
    cert.check(
        format!("|{special_name}| bound"),
        from_usize(p.special.len()),
        Bound::sqrt_beta(&special_coef * &nn),
    );
    for (i, c) in p.classes.iter().enumerate() {
        let (center, coef) = if i + 1 < r - 1 {
            (ratio(2, d) * &nn, int(2))
        } else {
            (ratio(1, d) * &nn, small_coef.clone())
        };
        let dev = (from_usize(c.len()) - center).abs();
        cert.check(format!("|B_{}| deviation", i + 1), dev, Bound::sqrt_beta(coef * &nn));
    }
}

/// Certificate for the partition `A, B_1, …, B_{r-1}` of an `H`-free graph.
///
/// Clauses: the size bounds, the per-vertex non-neighbor bound for
/// `B_1, …, B_{r-2}`, `F`-freeness of every class for every forest `F` in
/// the decomposition family of `H`, and the edit distance to the template.
/// `χ_f(G[A])` and `χ(G[A])` are reported as measurements.
pub fn verify_lambda_stability(g: &Graph, h: &Graph, p: &Partition, budget: &Budget) -> Result<Certificate> {
    if p.kind != PartitionKind::LambdaStability {
        return Err(Error::Precondition("expected a lambda_stability partition".into()));
    }
    p.validate(g.n())?;
    let n = g.n();
    let r = p.r;
    let hn = h.n();
    let mut cert = Certificate::new(p.kind, r, p.beta.clone());
    cert.notes.push("template distance minimizes over the choice of small class only".into());
    beta_cap_measurement(&mut cert, Rational::new(1.into(), ((40 * r * hn) * (40 * r * hn)).into()), "(40r|H|)^-2");
    size_clauses(&mut cert, n, p, from_usize(7 * r * hn), from_usize(5 * r * hn), "A");

    let sets = sets_of(n, &p.classes);
    let mut worst = 0;
    let mut worst_at = None;
    for (i, c) in p.classes.iter().enumerate().take(r - 2) {
        for &v in c {
            let outside_nbrs = g.degree(v) - g.neighbors(v).intersection_len(&sets[i]);
            let non = n - c.len() - outside_nbrs;
            if non > worst || worst_at.is_none() {
                worst = non;
                worst_at = Some(v);
            }
        }
    }
    cert.check(
        "non-neighbors outside own class".into(),
        from_usize(worst),
        Bound::sqrt_beta(from_usize(5 * n)),
    );
    if let (Some(v), Some(c)) = (worst_at, cert.clauses.last_mut()) {
        c.detail = Some(format!("attained at vertex {v}"));
    }

    let family = match decomposition_family(h, budget) {
        Ok(f) => Some(f),
        Err(Error::BudgetExceeded) => None,
        Err(e) => return Err(e),
    };
    match family {
        None => cert.push(unknown("forest-freeness".into(), None, "decomposition family: budget exhausted".into())),
        Some(family) => {
            let forests: Vec<&Graph> = family.iter().filter(|f| f.is_forest()).collect();
            for (i, c) in p.classes.iter().enumerate() {
                let name = format!("B_{} forest-free", i + 1);
                let sub = g.induced(c);
                let mut found = None;
                let mut out_of_budget = false;
                for f in &forests {
                    match find_subgraph_budgeted(&sub, f, budget) {
                        Ok(Some(map)) => {
                            found = Some((f.n(), f.edge_count(), map.iter().map(|&x| c[x]).collect::<Vec<_>>()));
                            break;
                        }
                        Ok(None) => {}
                        Err(Error::BudgetExceeded) => out_of_budget = true,
                        Err(e) => return Err(e),
                    }
                }
                let clause = match (found, out_of_budget) {
                    (Some((fv, fe, map)), _) => Clause {
                        name,
                        status: ClauseStatus::Fail,
                        measured: Some(int(1)),
                        bound: Some(Bound::plain(int(0))),
                        detail: Some(format!("forest with {fv} vertices and {fe} edges embeds at {map:?}")),
                    },
                    (None, true) => unknown(name, Some(Bound::plain(int(0))), "subgraph search: budget exhausted".into()),
                    (None, false) => Clause {
                        name,
                        status: ClauseStatus::Pass,
                        measured: Some(int(0)),
                        bound: Some(Bound::plain(int(0))),
                        detail: Some(format!("{} forests checked", forests.len())),
                    },
                };
                cert.push(clause);
            }
        }
    }

    let (dist, _) = template_distance(g, &p.special, &p.classes, r)?;
    cert.check(
        "template edit distance".into(),
        from_usize(dist),
        Bound::sqrt_beta(from_usize(20 * r * hn * n * n)),
    );

    let ga = g.induced(&p.special);
    match fractional_chromatic(&ga, budget) {
        Ok(f) => cert.measure("fractional chromatic number of A", Some(f.value), None),
        Err(Error::BudgetExceeded) => cert.measure("fractional chromatic number of A", None, Some("budget exhausted".into())),
        Err(e) => return Err(e),
    }
    chi_measurement(&mut cert, "chromatic number of A", &ga, budget);
    Ok(cert.finish())
}

/// Certificate for a refined partition `A*, B*_1, …, B*_{r-1}` of a
/// `K_r`-free graph.
///
/// Clauses: the size bounds, independence of every class, `χ_f(G[A*]) <=
/// 2 + 50r³√β`, and a homomorphism `G[A*] -> KN(m, ⌊(1/2 − ε)m⌋)` with
/// `m = ⌊ln n / β⌋` and `ε = 100r³√β`. The homomorphism is sought by
/// projecting the labeling `v ↦ N(v) ∩ B*_i` and, for `m <= 64`, by direct
/// search; it is unknown when neither settles it.
pub fn verify_clique_stability(g: &Graph, p: &Partition, seed: u64, budget: &Budget) -> Result<Certificate> {
    if p.kind != PartitionKind::CliqueStability {
        return Err(Error::Precondition("expected a clique_stability partition".into()));
    }
    p.validate(g.n())?;
    let n = g.n();
    let r = p.r;
    let r3 = r * r * r;
    let mut cert = Certificate::new(p.kind, r, p.beta.clone());
    beta_cap_measurement(&mut cert, Rational::new(1.into(), (1600 * r * r * r * r).into()), "40^-2 r^-4");
    size_clauses(&mut cert, n, p, from_usize(7 * r * r), from_usize(5 * r * r), "A*");

    for (i, c) in p.classes.iter().enumerate() {
        let set = VertexSet::from_iter(n.max(1), c.iter().copied());
        let internal = g.edges().filter(|&(u, v)| set.contains(u) && set.contains(v)).count();
        let mut clause = Clause {
            name: format!("B*_{} independent", i + 1),
            status: if internal == 0 { ClauseStatus::Pass } else { ClauseStatus::Fail },
            measured: Some(from_usize(internal)),
            bound: Some(Bound::plain(int(0))),
            detail: None,
        };
        if let Some((u, v)) = g.edge_within(&set) {
            clause.detail = Some(format!("edge {u}-{v}"));
        }
        cert.push(clause);
    }

    let ga = g.induced(&p.special);
    let chif_bound = Bound {
        offset: int(2),
        sqrt_beta_coef: from_usize(50 * r3),
    };
    match fractional_chromatic(&ga, budget) {
        Ok(f) => cert.check("fractional chromatic number of A*".into(), f.value, chif_bound),
        Err(Error::BudgetExceeded) => cert.push(unknown(
            "fractional chromatic number of A*".into(),
            Some(chif_bound),
            "budget exhausted".into(),
        )),
        Err(e) => return Err(e),
    }
    let kneser = kneser_clause(g, &ga, p, seed, budget)?;
    cert.push(kneser);
    chi_measurement(&mut cert, "chromatic number of A*", &ga, budget);
    Ok(cert.finish())
}

/// `(m, k)` with `m = ⌊ln n / β⌋` and `k` the largest integer with
/// `k <= (1/2 − 100r³√β)m`.
pub fn kneser_target(n: usize, r: usize, beta: &Rational) -> (usize, i64) {
    let m = if n <= 1 {
        0
    } else {
        let v = libm::log(n as f64) / to_f64(beta);
        if v.is_finite() && v >= 0.0 { v.min(1e15) as usize } else { 0 }
    };
    let coef = from_usize(100 * r * r * r);
    let mm = from_usize(m);
    let fits = |k: i64| !lt_sqrt_scaled(&(&mm / int(2) - int(k)), &coef, beta, &mm);
    let approx = (m as f64) * (0.5 - to_f64(&coef) * sqrt_f64(beta));
    let mut k = if approx.is_finite() { approx.floor().clamp(-1e15, 1e15) as i64 } else { 0 };
    while !fits(k) {
        k -= 1;
    }
    while fits(k + 1) {
        k += 1;
    }
    (m, k)
}

/// `v ↦ the b smallest positions of N(v) ∩ B*_i`, with one class `i <= r-2`
/// per component of `G[A*]` chosen so that adjacent vertices have no common
/// neighbor there.
fn neighborhood_labeling(g: &Graph, ga: &Graph, p: &Partition) -> Option<KneserLabeling> {
    let n = g.n();
    let r = p.r;
    let sets = sets_of(n, &p.classes);
    let a = p.classes[..r - 2].iter().map(Vec::len).max().unwrap_or(0);
    let comp = ga.components();
    let comps = comp.iter().copied().max().map_or(0, |c| c + 1);
    let mut choice = vec![usize::MAX; comps];
    for (c, slot) in choice.iter_mut().enumerate() {
        let members: Vec<usize> = (0..ga.n()).filter(|&x| comp[x] == c).collect();
        let mut best: Option<(usize, usize)> = None;
        for (i, set) in sets.iter().enumerate().take(r - 2) {
            let clash = members.iter().any(|&x| {
                ga.neighbors(x).iter().any(|y| {
                    let (gx, gy) = (p.special[x], p.special[y]);
                    g.neighbors(gx).intersection(g.neighbors(gy)).intersects(set)
                })
            });
            if clash {
                continue;
            }
            let least = members
                .iter()
                .map(|&x| g.neighbors(p.special[x]).intersection_len(set))
                .min()
                .unwrap_or(0);
            if best.is_none_or(|(b, _)| least > b) {
                best = Some((least, i));
            }
        }
        *slot = best?.1;
    }
    let b = (0..ga.n())
        .map(|x| g.neighbors(p.special[x]).intersection_len(&sets[choice[comp[x]]]))
        .min()
        .unwrap_or(0);
    if b == 0 {
        return None;
    }
    let assignment = (0..ga.n())
        .map(|x| {
            let i = choice[comp[x]];
            p.classes[i]
                .iter()
                .enumerate()
                .filter(|&(_, &w)| g.has_edge(p.special[x], w))
                .map(|(pos, _)| pos)
                .take(b)
                .collect()
        })
        .collect();
    let l = KneserLabeling { a, b, assignment };
    l.verify(ga).ok().map(|_| l)
}

fn kneser_clause(g: &Graph, ga: &Graph, p: &Partition, seed: u64, budget: &Budget) -> Result<Clause> {
    let (m, k) = kneser_target(g.n(), p.r, &p.beta);
    let name = String::from("Kneser homomorphism of A*");
    let target = format!("KN({m}, {k})");
    let bound = Some(Bound::plain(from_usize(m)));
    let found = |detail: String| Clause {
        name: name.clone(),
        status: ClauseStatus::Pass,
        measured: Some(int(k)),
        bound: bound.clone(),
        detail: Some(detail),
    };
    if ga.edge_count() == 0 {
        return Ok(found("edgeless A* maps to a single Kneser vertex".into()));
    }
    if k < 1 {
        return Ok(unknown(name, bound, format!("target {target} has no usable sets")));
    }
    let k = k as usize;
    if k * 2 > m {
        return Ok(unknown(name, bound, format!("target {target} is degenerate")));
    }
    if let Some(l) = neighborhood_labeling(g, ga, p) {
        let delta = Rational::new(l.b.into(), l.a.into()) - Rational::new((k as i64).into(), (m as i64).into());
        if delta.is_positive() && m <= 1 << 20 {
            if let Ok(proj) = project_and_verify(ga, &l, &delta, m, seed, KNESER_PROJECTION_RETRIES) {
                return Ok(found(format!(
                    "projected from a {}:{} neighborhood labeling after {} draws",
                    l.a, l.b, proj.draws
                )));
            }
        }
    }
    if m <= 64 && binomial(m, k).is_some_and(|c| c <= 1 << 22) {
        return match kneser_homomorphism(ga, m, k, budget) {
            Ok(Some(_)) => Ok(found(format!("direct search into {target}"))),
            Ok(None) => Ok(Clause {
                name,
                status: ClauseStatus::Fail,
                measured: None,
                bound,
                detail: Some(format!("no homomorphism into {target}")),
            }),
            Err(Error::BudgetExceeded) => Ok(unknown(name, bound, format!("search into {target}: budget exhausted"))),
            Err(e) => Err(e),
        };
    }
    Ok(unknown(name, bound, format!("no labeling found for {target}")))
}

/// Best balanced `k`-partition found by local search, rebalanced to sizes
/// differing by at most one.
fn balanced_partition(g: &Graph, k: usize, seed: u64, budget: &Budget) -> Result<(usize, Vec<Vec<usize>>)> {
    let n = g.n();
    let targets: Vec<usize> = (0..k).map(|i| n / k + usize::from(i < n % k)).collect();
    let mut a = local_search(g, k, seed, DEFAULT_RESTARTS, budget)?;
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&c| (usize::MAX - a.sizes[c], c));
    let mut sorted_targets = vec![0; k];
    for (rank, &c) in order.iter().enumerate() {
        sorted_targets[c] = targets[rank];
    }
    a.rebalance(&sorted_targets);
    let parts = a.classes();
    Ok((edit_distance_multipartite(g, &parts)?, parts))
}

/// Certificate for a set `S` in a graph with `χ(H) = r >= 4`.
///
/// Clauses: `|S| = n/(r-2)`; the edit distance of `G − S` to a balanced
/// `(r-3)`-partite graph is at most `30r³β n'²`; deleting the edges inside
/// `S` leaves a graph within `30r³β n'²` of the `(r-2)`-partite graph on
/// those parts plus `S`. Distances come from local search, so they are
/// upper bounds on the true minima.
pub fn verify_theta_stability(g: &Graph, r: usize, beta: &Rational, s: &[usize], seed: u64, budget: &Budget) -> Result<Certificate> {
    if r < 4 {
        return Err(Error::InvalidParameter(format!("theta stability needs r >= 4, got {r}")));
    }
    if !beta.is_positive() {
        return Err(Error::InvalidParameter("β must be positive".into()));
    }
    let n = g.n();
    let s_set = VertexSet::from_iter(n.max(1), s.iter().copied());
    if s.iter().any(|&v| v >= n) || s_set.len() != s.len() {
        return Err(Error::NotPartition("S must list distinct vertices of G".into()));
    }
    let mut cert = Certificate::new(PartitionKind::ThetaStability, r, beta.clone());
    cert.notes.push("distances come from local search and bound the true minima from above".into());
    beta_cap_measurement(&mut cert, Rational::new(1.into(), (30 * r * r * r).into()), "1/(30r^3)");
    let target = Rational::new((n as i64).into(), ((r - 2) as i64).into());
    let size = from_usize(s.len());
    cert.push(Clause {
        name: "|S| = n/(r-2)".into(),
        status: if size == target { ClauseStatus::Pass } else { ClauseStatus::Fail },
        measured: Some(size),
        bound: Some(Bound::plain(target)),
        detail: None,
    });
    let rest: Vec<usize> = (0..n).filter(|&v| !s_set.contains(v)).collect();
    let gp = g.induced(&rest);
    let np = rest.len();
    let bound = Bound::plain(beta * from_usize(30 * r * r * r * np * np));
    let (dist, parts) = balanced_partition(&gp, r - 3, seed, budget)?;
    cert.check("G - S edit distance to balanced (r-3)-partite".into(), from_usize(dist), bound.clone());

    let mut full: Vec<Vec<usize>> = parts.iter().map(|c| c.iter().map(|&x| rest[x]).collect()).collect();
    full.push(s.to_vec());
    let inside_s = g.edges().filter(|&(u, v)| s_set.contains(u) && s_set.contains(v)).count();
    let hat = edit_distance_multipartite(g, &full)? - inside_s;
    cert.check("S-deleted edit distance to (r-2)-partite".into(), from_usize(hat), bound);
    cert.measure(
        "(r-2)-partite parts sizes",
        None,
        Some(format!("{:?}", full.iter().map(Vec::len).collect::<Vec<_>>())),
    );
    Ok(cert.finish())
}

/// Number of vertices whose class differs from the planted one under the
/// best matching of extracted classes to planted classes, counting special
/// vertices as misplaced.
pub fn misclassified(planted: &[Vec<usize>], extracted: &Partition) -> usize {
    let k = planted.len();
    let n: usize = planted.iter().map(Vec::len).sum();
    let mut owner = vec![usize::MAX; n];
    for (i, c) in planted.iter().enumerate() {
        for &v in c {
            owner[v] = i;
        }
    }
    let mut overlap = vec![vec![0usize; k]; extracted.classes.len()];
    for (j, c) in extracted.classes.iter().enumerate() {
        for &v in c {
            if owner[v] < k {
                overlap[j][owner[v]] += 1;
            }
        }
    }
    let mut best = 0;
    let mut perm: Vec<usize> = (0..k).collect();
    permutations(&mut perm, 0, &mut |p| {
        let agree: usize = (0..extracted.classes.len().min(k)).map(|j| overlap[j][p[j]]).sum();
        best = best.max(agree);
    });
    n - best
}

fn permutations(p: &mut Vec<usize>, at: usize, f: &mut impl FnMut(&[usize])) {
    if at == p.len() {
        f(p);
        return;
    }
    for i in at..p.len() {
        p.swap(at, i);
        permutations(p, at + 1, f);
        p.swap(at, i);
    }
}

impl Clause {
    pub fn passed(&self) -> bool {
        self.status == ClauseStatus::Pass
    }
}

/// Float rendering of a bound, for human-facing summaries only.
pub fn bound_estimate(c: &Clause, beta: &Rational) -> Option<f64> {
    c.bound.as_ref().map(|b| b.approx(beta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete_multipartite, multipartite_parts, r_hajnal};
    use proptest::prelude::*;

    fn parts_of(sizes: &[usize]) -> Vec<Vec<usize>> {
        multipartite_parts(sizes).into_iter().map(|r| r.collect()).collect()
    }

    /// Pair-by-pair count of the symmetric difference.
    fn brute_distance(g: &Graph, parts: &[Vec<usize>]) -> usize {
        let mut class = vec![0; g.n()];
        for (i, p) in parts.iter().enumerate() {
            for &v in p {
                class[v] = i;
            }
        }
        let mut d = 0;
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                if g.has_edge(u, v) != (class[u] != class[v]) {
                    d += 1;
                }
            }
        }
        d
    }

    #[test]
    fn edit_distance_examples() {
        let k33 = complete_multipartite(&[3, 3]);
        assert_eq!(edit_distance_multipartite(&k33, &parts_of(&[3, 3])).unwrap(), 0);
        let k6 = Graph::complete(6);
        assert_eq!(edit_distance_multipartite(&k6, &parts_of(&[3, 3])).unwrap(), 6);
        assert!(matches!(
            edit_distance_multipartite(&k6, &[vec![0, 1], vec![1, 2, 3, 4, 5]]),
            Err(Error::NotPartition(_))
        ));
        assert!(edit_distance_multipartite(&k6, &[vec![0, 1]]).is_err());
    }

    #[test]
    fn edit_distance_on_hajnal_canonical_parts() {
        let p = HajnalParams::new(1, 10, 2).unwrap();
        let g = r_hajnal(4, &p).unwrap();
        let beta = beta_from_min_degree(&g, 4).unwrap();
        let part = hajnal_canonical_partition(PartitionKind::LambdaStability, 4, &p, beta.clone());
        let mut parts = part.classes.clone();
        parts.push(part.special.clone());
        let d = edit_distance_multipartite(&g, &parts).unwrap();
        assert_eq!(d, brute_distance(&g, &parts));
        let n = from_usize(g.n());
        assert!(le_sqrt_scaled(&from_usize(d), &from_usize(20 * 4 * 4), &beta, &(&n * &n)));
    }

    proptest! {
        #[test]
        fn edit_distance_matches_pairwise_count(n in 1usize..14, seed in any::<u64>(), k in 1usize..4) {
            use rand::Rng;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut edges = Vec::new();
            for u in 0..n { for v in u + 1..n { if rng.gen_bool(0.5) { edges.push((u, v)); } } }
            let g = Graph::from_edges(n, &edges).unwrap();
            let mut parts = vec![Vec::new(); k];
            for v in 0..n { parts[rng.gen_range(0..k)].push(v); }
            let d = edit_distance_multipartite(&g, &parts).unwrap();
            prop_assert_eq!(d, brute_distance(&g, &parts));
            let m = complete_multipartite(&parts.iter().map(Vec::len).collect::<Vec<_>>());
            let relabeled: Vec<Vec<usize>> = parts_of(&parts.iter().map(Vec::len).collect::<Vec<_>>());
            prop_assert_eq!(edit_distance_multipartite(&m, &relabeled).unwrap(), 0);
        }
    }

    #[test]
    fn refine_without_sparse_sides_keeps_everything() {
        // K_{5,5,5} with A = {0}: 0 has 5 neighbors in each other part and
        // none in its own, so only its own part is sparse.
        let g = complete_multipartite(&[5, 5, 5]);
        let beta = Rational::new(1.into(), 1_000_000.into());
        let p = Partition::new(
            PartitionKind::LambdaStability,
            4,
            beta.clone(),
            vec![0],
            vec![vec![1, 2, 3, 4], (5..10).collect(), (10..15).collect()],
        );
        let q = refine_partition(&g, &p).unwrap();
        assert_eq!(q.classes[0], vec![0, 1, 2, 3, 4]);
        assert!(q.special.is_empty() && q.residue.is_empty());

        // β large enough that no side is ever dense: every vertex is residue.
        let p2 = Partition { beta: ratio(1, 2), ..p.clone() };
        let q2 = refine_partition(&g, &p2).unwrap();
        assert_eq!(q2.special, vec![0]);
        assert_eq!(q2.residue, vec![0]);

        // Empty A: fixed point.
        let p3 = Partition::new(PartitionKind::LambdaStability, 4, beta, vec![], parts_of(&[5, 5, 5]));
        let q3 = refine_partition(&g, &p3).unwrap();
        assert_eq!(q3.classes, p3.classes);
        assert!(q3.special.is_empty());
    }

    #[test]
    fn refine_rule_for_dense_sides() {
        // Template 2n/5, 2n/5, n/5 with n = 500 and tiny β so that
        // 5r√βn = 20 · 500 · 10^-3 = 10.
        let g = complete_multipartite(&[200, 200, 100]);
        let beta = Rational::new(1.into(), 1_000_000.into());
        let parts = parts_of(&[200, 200, 100]);
        let mut classes = parts.clone();
        let a = vec![classes[0].pop().unwrap(), classes[2].pop().unwrap()];
        let p = Partition::new(PartitionKind::LambdaStability, 4, beta, a.clone(), classes);
        let q = refine_partition(&g, &p).unwrap();
        assert_eq!(q.classes[0], parts[0]);
        assert_eq!(q.special, vec![a[1]]);
        assert!(q.residue.is_empty());
        assert_eq!(refine_partition(&g, &q).unwrap(), q);
    }

    #[test]
    fn refine_hajnal_canonical() {
        for (r, l, k, m) in [(4, 10, 1, 2), (4, 20, 1, 2), (3, 16, 2, 3), (5, 10, 1, 2)] {
            let p = HajnalParams::new(k, l, m).unwrap();
            let g = r_hajnal(r, &p).unwrap();
            let beta = beta_from_min_degree(&g, r).unwrap();
            let part = hajnal_canonical_partition(PartitionKind::LambdaStability, r, &p, beta);
            let once = refine_partition(&g, &part).unwrap();
            assert_eq!(once.special, part.special, "A* is the Kneser part");
            for c in &once.classes {
                assert!(g.is_independent(&VertexSet::from_iter(g.n(), c.iter().copied())));
            }
            assert_eq!(refine_partition(&g, &once).unwrap(), once);
        }
    }

    #[test]
    fn extract_recovers_templates() {
        let beta = ratio(1, 100);
        for sizes in [vec![4, 4, 2], vec![6, 6, 3], vec![8, 8, 8, 4], vec![24, 24, 12], vec![3, 3]] {
            let g = complete_multipartite(&sizes);
            let r = sizes.len() + 1;
            let p = extract_partition(&g, r, &beta, 7, &Budget::unlimited()).unwrap();
            assert!(p.special.is_empty(), "{sizes:?}");
            let mut got = p.classes.clone();
            got.sort();
            let mut want = parts_of(&sizes);
            want.sort();
            assert_eq!(got, want, "{sizes:?}");
        }
    }

    #[test]
    fn extract_is_deterministic_per_seed() {
        let p = HajnalParams::new(1, 10, 2).unwrap();
        let g = r_hajnal(4, &p).unwrap();
        let beta = beta_from_min_degree(&g, 4).unwrap();
        let a = extract_partition(&g, 4, &beta, 3, &Budget::unlimited()).unwrap();
        let b = extract_partition(&g, 4, &beta, 3, &Budget::unlimited()).unwrap();
        assert_eq!(a, b);
        a.validate(g.n()).unwrap();
    }

    #[test]
    fn extract_recovers_noisy_planted_template() {
        use rand::Rng;
        let sizes = [24, 24, 12];
        let planted = parts_of(&sizes);
        let base = complete_multipartite(&sizes);
        let mut total = 0;
        for seed in 0..5u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let edges: Vec<(usize, usize)> = base.edges().filter(|_| !rng.gen_bool(0.01)).collect();
            let g = Graph::from_edges(base.n(), &edges).unwrap();
            let p = extract_partition(&g, 4, &ratio(1, 1000), seed, &Budget::unlimited()).unwrap();
            total += misclassified(&planted, &p);
        }
        assert!(total * 100 <= 5 * 5 * 60, "misclassified {total} of 300");
    }

    #[test]
    fn extract_then_clique_verify_on_hajnal() {
        let p = HajnalParams::new(1, 20, 2).unwrap();
        let g = r_hajnal(4, &p).unwrap();
        let beta = beta_from_min_degree(&g, 4).unwrap();
        assert_eq!(beta, ratio(7, 110));
        let part = extract_partition(&g, 4, &beta, 1, &Budget::unlimited()).unwrap();
        let cert = verify_clique_stability(&g, &part, 1, &Budget::unlimited()).unwrap();
        for c in &cert.clauses {
            if c.name != "Kneser homomorphism of A*" {
                assert!(c.passed(), "{c:?}");
            }
        }
        // One edge inside a class flips only the independence clause.
        let (u, v) = (part.classes[0][0], part.classes[0][1]);
        let mut edges: Vec<(usize, usize)> = g.edges().collect();
        edges.push((u, v));
        let bad = Graph::from_edges(g.n(), &edges).unwrap();
        let cert2 = verify_clique_stability(&bad, &part, 1, &Budget::unlimited()).unwrap();
        for (a, b) in cert.clauses.iter().zip(&cert2.clauses) {
            if a.name == "B*_1 independent" {
                assert_eq!(b.status, ClauseStatus::Fail);
                assert_eq!(b.detail.as_deref(), Some(format!("edge {u}-{v}").as_str()));
            } else {
                assert_eq!(a.status, b.status, "{}", a.name);
            }
        }
    }

    #[test]
    fn lambda_certificates() {
        let p = HajnalParams::new(1, 20, 2).unwrap();
        let g = r_hajnal(4, &p).unwrap();
        let beta = beta_from_min_degree(&g, 4).unwrap();
        let k4 = Graph::complete(4);
        let part = hajnal_canonical_partition(PartitionKind::LambdaStability, 4, &p, beta);
        let cert = verify_lambda_stability(&g, &k4, &part, &Budget::unlimited()).unwrap();
        assert!(cert.overall, "{cert:#?}");
        // χ_f of the Kneser part KN(5,2) is 5/2.
        let chif = cert.measurements.iter().find(|m| m.name == "fractional chromatic number of A").unwrap();
        assert_eq!(chif.value, Some(ratio(5, 2)));

        // Merging the two large classes breaks the size bounds at small β.
        let mut merged = part.clone();
        merged.beta = ratio(1, 1000);
        let b2 = merged.classes.remove(1);
        merged.classes[0].extend(b2);
        merged.classes.insert(1, Vec::new());
        merged.normalize();
        let cert = verify_lambda_stability(&g, &k4, &merged, &Budget::unlimited()).unwrap();
        assert_eq!(cert.clause("|B_1| deviation").unwrap().status, ClauseStatus::Fail);
        assert_eq!(cert.clause("|B_2| deviation").unwrap().status, ClauseStatus::Fail);
        assert!(!cert.overall);

        // Template with empty A.
        let t = complete_multipartite(&[4, 4, 2]);
        let tp = Partition::new(PartitionKind::LambdaStability, 4, ratio(1, 100), vec![], parts_of(&[4, 4, 2]));
        let cert = verify_lambda_stability(&t, &k4, &tp, &Budget::unlimited()).unwrap();
        assert!(cert.overall, "{cert:#?}");
        assert_eq!(cert.clause("template edit distance").unwrap().measured, Some(int(0)));
        let chif = cert.measurements.iter().find(|m| m.name == "fractional chromatic number of A").unwrap();
        assert_eq!(chif.value, Some(int(0)));
    }

    #[test]
    fn certificate_values_recompute_from_inputs() {
        let p = HajnalParams::new(1, 10, 2).unwrap();
        let g = r_hajnal(4, &p).unwrap();
        let beta = beta_from_min_degree(&g, 4).unwrap();
        let part = refine_partition(&g, &hajnal_canonical_partition(PartitionKind::LambdaStability, 4, &p, beta)).unwrap();
        let c1 = verify_clique_stability(&g, &part, 5, &Budget::unlimited()).unwrap();
        let c2 = verify_clique_stability(&g, &part, 5, &Budget::unlimited()).unwrap();
        assert_eq!(c1, c2);
        let n = from_usize(g.n());
        let dev = (from_usize(part.classes[2].len()) - &n / int(5)).abs();
        assert_eq!(c1.clause("|B_3| deviation").unwrap().measured, Some(dev));
        assert_eq!(c1.clause("|A*| bound").unwrap().measured, Some(from_usize(part.special.len())));
        for c in &c1.clauses {
            if let (Some(m), Some(b)) = (&c.measured, &c.bound) {
                if c.status != ClauseStatus::Unknown {
                    assert_eq!(b.admits(m, &c1.beta), c.passed(), "{}", c.name);
                }
            }
        }
    }

    #[test]
    fn clique_single_vertex_special() {
        let g = complete_multipartite(&[4, 4, 3]);
        let p = Partition::new(
            PartitionKind::CliqueStability,
            4,
            Rational::new(1.into(), 100_000.into()),
            vec![10],
            vec![(0..4).collect(), (4..8).collect(), vec![8, 9]],
        );
        let cert = verify_clique_stability(&g, &p, 0, &Budget::unlimited()).unwrap();
        assert_eq!(cert.clause("fractional chromatic number of A*").unwrap().measured, Some(int(1)));
        assert!(cert.clause("Kneser homomorphism of A*").unwrap().passed());
    }

    #[test]
    fn neighborhood_labeling_and_projection() {
        // A* = C_4 over an independent B_1; consecutive cycle vertices see
        // complementary halves of B_1.
        let half = 60;
        let n_b1 = 2 * half;
        let (n_b2, n_b3) = (n_b1, 3);
        let base = 4;
        let n = base + n_b1 + n_b2 + n_b3;
        let b1: Vec<usize> = (base..base + n_b1).collect();
        let b2: Vec<usize> = (base + n_b1..base + n_b1 + n_b2).collect();
        let b3: Vec<usize> = (base + n_b1 + n_b2..n).collect();
        let mut edges = Vec::new();
        for i in 0..4 {
            edges.push((i, (i + 1) % 4));
            for j in 0..half {
                edges.push((i, b1[(i % 2) * half + j]));
            }
        }
        for &u in &b1 {
            for &v in b2.iter().chain(&b3) {
                edges.push((u, v));
            }
        }
        for &u in &b2 {
            for &v in &b3 {
                edges.push((u, v));
            }
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        let beta = Rational::new(1.into(), 1_000_000_000_000i64.into());
        let p = Partition::new(PartitionKind::CliqueStability, 4, beta.clone(), (0..4).collect(), vec![b1, b2, b3]);
        let ga = g.induced(&p.special);
        let l = neighborhood_labeling(&g, &ga, &p).unwrap();
        assert_eq!((l.a, l.b), (n_b1, half));
        let proj = project_and_verify(&ga, &l, &ratio(1, 10), 100, 9, 50).unwrap();
        assert_eq!((proj.labeling.a, proj.labeling.b), (100, 40));
        // The theorem's m = ln n / β is far beyond sampling range here.
        let (m, k) = kneser_target(n, 4, &beta);
        assert!(m > 1 << 20 && k >= 1);
        let c = kneser_clause(&g, &ga, &p, 3, &Budget::unlimited()).unwrap();
        assert_eq!(c.status, ClauseStatus::Unknown);
    }

    #[test]
    fn kneser_target_is_exact_floor() {
        let beta = Rational::new(1.into(), 10_000_000_000i64.into());
        let (m, k) = kneser_target(100, 3, &beta);
        let eps = 100.0 * 27.0 * 1e-5;
        let f = (m as f64) * (0.5 - eps);
        assert_eq!(m, (libm::log(100.0) * 1e10) as usize);
        assert!((k as f64 - f.floor()).abs() <= 1.0);
        let (_, k_big) = kneser_target(248, 3, &ratio(74, 744));
        assert!(k_big < 0);
    }

    #[test]
    fn theta_certificates() {
        // r = 4: G'' ∨ K_1[15] with G'' = C_5 ∪ K_{5,5}.
        let c5 = Graph::cycle(5);
        let k55 = complete_multipartite(&[5, 5]);
        let g2 = c5.disjoint_union(&k55);
        let g = g2.join(&Graph::empty(15));
        let s: Vec<usize> = (0..15).collect();
        let beta = ratio(1, 2000);
        let cert = verify_theta_stability(&g, 4, &beta, &s, 0, &Budget::unlimited()).unwrap();
        assert!(cert.overall, "{cert:#?}");
        assert_eq!(cert.clauses[1].measured, Some(int(0)));
        assert_eq!(cert.clauses[2].measured, Some(int(0)));

        // r = 5 on K_{10,10,10} with S a class.
        let t = complete_multipartite(&[10, 10, 10]);
        let cert = verify_theta_stability(&t, 5, &beta, &(20..30).collect::<Vec<_>>(), 0, &Budget::unlimited()).unwrap();
        assert!(cert.overall, "{cert:#?}");
        assert_eq!(cert.clauses[1].measured, Some(int(0)));

        // Wrong |S|.
        let cert = verify_theta_stability(&t, 5, &beta, &(21..30).collect::<Vec<_>>(), 0, &Budget::unlimited()).unwrap();
        assert_eq!(cert.clauses[0].status, ClauseStatus::Fail);
        assert!(!cert.overall);
    }

    #[test]
    fn template_sizes_sum_to_n() {
        for n in 0..40 {
            for r in 3..7 {
                for small in 0..r - 1 {
                    let s = template_sizes(n, r, small);
                    assert_eq!(s.iter().sum::<usize>(), n);
                    assert_eq!(s.len(), r - 1);
                }
            }
        }
        assert_eq!(template_sizes(10, 4, 2), vec![4, 4, 2]);
    }

    #[test]
    fn beta_slack() {
        let g = complete_multipartite(&[4, 4, 2]);
        assert_eq!(beta_from_min_degree(&g, 4), None);
        let p = HajnalParams::new(2, 64, 3).unwrap();
        let h = r_hajnal(3, &p).unwrap();
        assert_eq!(beta_from_min_degree(&h, 3), Some(ratio(74, 744)));
    }
}
