//! Concrete graph families: Kneser, shift, Hajnal, r-Hajnal, the bounded-VC
//! lower-bound graph, modified Zykov graphs and complete multipartite graphs.
//!
//! Ground sets are written 1-based in labels (`{1,3}`, `(2,4)`), matching the
//! usual `[n] = {1, …, n}` convention; all vertex indices stay 0-based.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::fractional::fractional_chromatic;
use crate::graph::{Graph, GraphBuilder};
use crate::Rational;

pub const DEFAULT_VERTEX_CAP: usize = 5000;

/// Size limit applied by every constructor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub vertex_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            vertex_cap: DEFAULT_VERTEX_CAP,
        }
    }
}

impl Limits {
    fn check(&self, needed: Option<usize>) -> Result<usize> {
        match needed {
            Some(n) if n <= self.vertex_cap => Ok(n),
            Some(n) => Err(Error::VertexCap {
                needed: n,
                cap: self.vertex_cap,
            }),
            None => Err(Error::VertexCap {
                needed: usize::MAX,
                cap: self.vertex_cap,
            }),
        }
    }
}

/// `C(n, k)`, or `None` on overflow.
pub fn binomial(n: usize, k: usize) -> Option<usize> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > usize::MAX as u128 {
            return None;
        }
    }
    Some(acc as usize)
}

/// All `k`-subsets of `0..n` in lexicographic order, as sorted vectors.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < n - k + i {
                break;
            }
        }
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

fn set_label(set: &[usize]) -> String {
    let inner: Vec<String> = set.iter().map(|x| format!("{}", x + 1)).collect();
    format!("{{{}}}", inner.join(","))
}

fn tuple_label(t: &[usize]) -> String {
    let inner: Vec<String> = t.iter().map(|x| format!("{}", x + 1)).collect();
    format!("({})", inner.join(","))
}

fn disjoint(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => return false,
        }
    }
    true
}

/// Parameters `(k, ℓ, m)` of a Hajnal graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HajnalParams {
    pub k: usize,
    pub l: usize,
    pub m: usize,
}

impl HajnalParams {
    pub fn new(k: usize, l: usize, m: usize) -> Result<Self> {
        let p = HajnalParams { k, l, m };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if self.k == 0 || self.l == 0 || self.m == 0 {
            return Err(Error::InvalidParameter("k, l and m must be positive".into()));
        }
        if self.l % self.ground() != 0 {
            return Err(Error::InvalidParameter(format!(
                "2m+k = {} must divide l = {}",
                self.ground(),
                self.l
            )));
        }
        Ok(())
    }

    /// Size of the Kneser ground set, `2m + k`.
    pub fn ground(&self) -> usize {
        2 * self.m + self.k
    }

    /// Triangle-freeness is only expected when `k < m`.
    pub fn triangle_free_expected(&self) -> bool {
        self.k < self.m
    }

    pub fn vertex_count(&self) -> Option<usize> {
        binomial(self.ground(), self.m)?.checked_add(self.l.checked_mul(3)?)
    }
}

/// Where each part of an (r-)Hajnal graph sits in the vertex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HajnalLayout {
    pub kneser: Range<usize>,
    /// Blocks `A_1, …, A_{2m+k}` of the large side, contiguous and in order.
    pub a_blocks: Vec<Range<usize>>,
    pub b: Range<usize>,
    /// Classes of the blown-up clique joined on for `r > 3`.
    pub join_classes: Vec<Range<usize>>,
}

impl HajnalLayout {
    pub fn new(r: usize, p: &HajnalParams) -> HajnalLayout {
        let kn = binomial(p.ground(), p.m).unwrap_or(0);
        let block = 2 * p.l / p.ground();
        let a_start = kn;
        let a_blocks = (0..p.ground())
            .map(|j| a_start + j * block..a_start + (j + 1) * block)
            .collect();
        let b = a_start + 2 * p.l..a_start + 3 * p.l;
        let base = b.end;
        let join_classes = (0..r.saturating_sub(3))
            .map(|i| base + i * 2 * p.l..base + (i + 1) * 2 * p.l)
            .collect();
        HajnalLayout {
            kneser: 0..kn,
            a_blocks,
            b,
            join_classes,
        }
    }

    pub fn a(&self) -> Range<usize> {
        self.a_blocks.first().map_or(self.b.start, |f| f.start)..self.b.start
    }
}

/// Modified Zykov graph parameters: `r >= 3`, blowup `t >= 1`, and trees
/// `T_1, …, T_ℓ`. Each tree is bipartitioned with its vertex 0 on side 0.
#[derive(Clone, Debug)]
pub struct ZykovSpec {
    pub r: usize,
    pub t: usize,
    pub trees: Vec<Graph>,
}

/// Where each part of a Zykov graph sits in the vertex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZykovLayout {
    pub trees: Vec<Range<usize>>,
    /// `hubs[I]` holds the `t` copies of `u_I`, with `I` a bitmask over trees.
    pub hubs: Vec<Range<usize>>,
    pub joined: Vec<Range<usize>>,
}

impl ZykovLayout {
    pub fn new(spec: &ZykovSpec) -> ZykovLayout {
        let mut at = 0;
        let trees = spec
            .trees
            .iter()
            .map(|t| {
                let r = at..at + t.n();
                at += t.n();
                r
            })
            .collect();
        let hubs = (0..1usize << spec.trees.len())
            .map(|_| {
                let r = at..at + spec.t;
                at += spec.t;
                r
            })
            .collect();
        let joined = (0..spec.r - 3)
            .map(|_| {
                let r = at..at + spec.t;
                at += spec.t;
                r
            })
            .collect();
        ZykovLayout { trees, hubs, joined }
    }

    pub fn total(&self) -> usize {
        self.joined
            .last()
            .or(self.hubs.last())
            .map_or(0, |r| r.end)
    }
}

impl ZykovSpec {
    pub fn validate(&self) -> Result<()> {
        if self.r < 3 || self.t == 0 {
            return Err(Error::InvalidParameter("zykov needs r >= 3 and t >= 1".into()));
        }
        for (j, t) in self.trees.iter().enumerate() {
            if t.n() == 0 || !t.is_connected() || !t.is_forest() {
                return Err(Error::InvalidParameter(format!("tree {j} is not a tree")));
            }
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> Option<usize> {
        let forest: usize = self.trees.iter().map(|t| t.n()).sum();
        let hubs = 1usize.checked_shl(self.trees.len() as u32)?.checked_mul(self.t)?;
        forest.checked_add(hubs)?.checked_add((self.r - 3).checked_mul(self.t)?)
    }
}

/// Constructors bound to a vertex cap.
#[derive(Clone, Copy, Debug, Default)]
pub struct Builder {
    pub limits: Limits,
}

impl Builder {
    pub fn new(vertex_cap: usize) -> Self {
        Builder {
            limits: Limits { vertex_cap },
        }
    }

    /// Kneser graph `KN(n, m)`: `m`-subsets of `[n]`, adjacent when disjoint.
    pub fn kneser(&self, n: usize, m: usize) -> Result<Graph> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidParameter("kneser needs n, m >= 1".into()));
        }
        self.limits.check(binomial(n, m))?;
        let sets = subsets(n, m);
        let mut b = GraphBuilder::new(sets.len());
        for i in 0..sets.len() {
            for j in i + 1..sets.len() {
                if disjoint(&sets[i], &sets[j]) {
                    b.connect(i, j);
                }
            }
        }
        Ok(b.labels(sets.iter().map(|s| set_label(s)).collect()).build())
    }

    /// Shift graph `Sh_m^k`: increasing `k`-tuples from `[m]`, with `x ~ y`
    /// when `x_i = y_{i+1}` for all `i < k` or the same with roles swapped.
    pub fn shift_graph(&self, m: usize, k: usize) -> Result<Graph> {
        if !(k >= 2 && m > k) {
            return Err(Error::InvalidParameter("shift graph needs m > k >= 2".into()));
        }
        self.limits.check(binomial(m, k))?;
        let tuples = subsets(m, k);
        let index = |t: &[usize]| tuples.binary_search_by(|x| x.as_slice().cmp(t)).ok();
        let mut b = GraphBuilder::new(tuples.len());
        for (i, y) in tuples.iter().enumerate() {
            // x = (y_2, …, y_k, z) for z > y_k
            for z in y[k - 1] + 1..m {
                let mut x: Vec<usize> = y[1..].to_vec();
                x.push(z);
                if let Some(j) = index(&x) {
                    b.connect(i, j);
                }
            }
        }
        Ok(b.labels(tuples.iter().map(|t| tuple_label(t)).collect()).build())
    }

    /// Hajnal graph `H(k, ℓ, m)`: `KN(2m+k, m)` beside `K_{2ℓ,ℓ}` on `A ∪ B`,
    /// `A` cut into blocks `A_1, …, A_{2m+k}` and each Kneser vertex `S`
    /// joined to the blocks indexed by its elements.
    pub fn hajnal(&self, p: &HajnalParams) -> Result<Graph> {
        p.validate()?;
        self.limits.check(p.vertex_count())?;
        let layout = HajnalLayout::new(3, p);
        let sets = subsets(p.ground(), p.m);
        let n = layout.b.end;
        let mut b = GraphBuilder::new(n);
        for i in 0..sets.len() {
            for j in i + 1..sets.len() {
                if disjoint(&sets[i], &sets[j]) {
                    b.connect(i, j);
                }
            }
            for &e in &sets[i] {
                for y in layout.a_blocks[e].clone() {
                    b.connect(i, y);
                }
            }
        }
        for x in layout.a() {
            for y in layout.b.clone() {
                b.connect(x, y);
            }
        }
        let mut labels: Vec<String> = sets.iter().map(|s| set_label(s)).collect();
        for (j, blk) in layout.a_blocks.iter().enumerate() {
            for (c, _) in blk.clone().enumerate() {
                labels.push(format!("A{}:{c}", j + 1));
            }
        }
        for c in 0..p.l {
            labels.push(format!("B:{c}"));
        }
        Ok(b.labels(labels).build())
    }

    /// `H_r(k, ℓ, m) = H(k, ℓ, m) ∨ K_{r-3}[2ℓ]`.
    pub fn r_hajnal(&self, r: usize, p: &HajnalParams) -> Result<Graph> {
        if r < 3 {
            return Err(Error::InvalidParameter("r-Hajnal needs r >= 3".into()));
        }
        p.validate()?;
        let extra = (r - 3).checked_mul(2 * p.l);
        self.limits
            .check(p.vertex_count().and_then(|n| n.checked_add(extra?)))?;
        let h = self.hajnal(p)?;
        if r == 3 {
            return Ok(h);
        }
        let labels = (0..(r - 3) * 2 * p.l)
            .map(|x| format!("J{}:{}", x / (2 * p.l) + 1, x % (2 * p.l)))
            .collect();
        let clique = Graph::complete(r - 3).blowup(2 * p.l).with_labels(labels);
        Ok(h.join(&clique))
    }

    /// `(Sh_m^2 ∪ isolated vertices) ∨ K_{r-3}[n/(r-2)]` on `n` vertices.
    pub fn vc_lower_bound_graph(&self, r: usize, m: usize, n: usize) -> Result<Graph> {
        if r < 4 {
            return Err(Error::InvalidParameter("needs r >= 4".into()));
        }
        if n % (r - 2) != 0 {
            return Err(Error::InvalidParameter(format!("r-2 = {} must divide n = {n}", r - 2)));
        }
        let side = n / (r - 2);
        let shift_n = binomial(m, 2).unwrap_or(usize::MAX);
        if side < shift_n {
            return Err(Error::InvalidParameter(format!(
                "n/(r-2) = {side} is smaller than C(m,2) = {shift_n}"
            )));
        }
        self.limits.check(Some(n))?;
        let sh = self.shift_graph(m, 2)?;
        let iso_labels = (0..side - shift_n).map(|i| format!("I:{i}")).collect();
        let base = sh.disjoint_union(&Graph::empty(side - shift_n).with_labels(iso_labels));
        let labels = (0..(r - 3) * side)
            .map(|x| format!("J{}:{}", x / side + 1, x % side))
            .collect();
        Ok(base.join(&Graph::complete(r - 3).blowup(side).with_labels(labels)))
    }

    /// Modified Zykov graph `Z_ℓ^{r,t}(T_1, …, T_ℓ)`.
    pub fn zykov(&self, spec: &ZykovSpec) -> Result<Graph> {
        spec.validate()?;
        if spec.trees.len() >= usize::BITS as usize {
            return Err(Error::VertexCap {
                needed: usize::MAX,
                cap: self.limits.vertex_cap,
            });
        }
        self.limits.check(spec.vertex_count())?;
        let layout = ZykovLayout::new(spec);
        let n = layout.total();
        let mut b = GraphBuilder::new(n);
        let mut labels = vec![String::new(); n];
        let mut sides: Vec<[Vec<usize>; 2]> = Vec::new();
        for (j, (t, range)) in spec.trees.iter().zip(&layout.trees).enumerate() {
            for (u, v) in t.edges() {
                b.connect(range.start + u, range.start + v);
            }
            let colors = t.bipartition().expect("trees are bipartite");
            let flip = colors[0];
            let mut side: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
            for v in 0..t.n() {
                side[(colors[v] != flip) as usize].push(range.start + v);
                labels[range.start + v] = format!("T{}:{v}", j + 1);
            }
            sides.push(side);
        }
        for (mask, hub) in layout.hubs.iter().enumerate() {
            for (c, h) in hub.clone().enumerate() {
                labels[h] = format!("S{mask}:{c}");
                for (j, side) in sides.iter().enumerate() {
                    let which = if mask >> j & 1 == 1 { 0 } else { 1 };
                    for &x in &side[which] {
                        b.connect(h, x);
                    }
                }
            }
        }
        for (j, w) in layout.joined.iter().enumerate() {
            for (c, x) in w.clone().enumerate() {
                labels[x] = format!("W{}:{c}", j + 1);
                for y in 0..n {
                    if !w.contains(&y) && !b.has_edge(x, y) {
                        b.connect(x, y);
                    }
                }
            }
        }
        Ok(b.labels(labels).build())
    }
}

/// Complete multipartite graph with parts of the given sizes, labelled
/// `P{i}:{c}`.
pub fn complete_multipartite(sizes: &[usize]) -> Graph {
    let n: usize = sizes.iter().sum();
    let mut part = Vec::with_capacity(n);
    let mut labels = Vec::with_capacity(n);
    for (i, &s) in sizes.iter().enumerate() {
        for c in 0..s {
            part.push(i);
            labels.push(format!("P{}:{c}", i + 1));
        }
    }
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if part[u] != part[v] {
                b.connect(u, v);
            }
        }
    }
    b.labels(labels).build()
}

/// Turán graph `T_{n,r}`: complete balanced `r`-partite graph.
pub fn turan(n: usize, r: usize) -> Graph {
    assert!(r >= 1);
    let sizes: Vec<usize> = (0..r).map(|i| n / r + usize::from(i < n % r)).collect();
    complete_multipartite(&sizes)
}

/// Vertex ranges of the parts of [`complete_multipartite`].
pub fn multipartite_parts(sizes: &[usize]) -> Vec<Range<usize>> {
    let mut at = 0;
    sizes
        .iter()
        .map(|&s| {
            let r = at..at + s;
            at += s;
            r
        })
        .collect()
}

pub fn kneser(n: usize, m: usize) -> Result<Graph> {
    Builder::default().kneser(n, m)
}

pub fn shift_graph(m: usize, k: usize) -> Result<Graph> {
    Builder::default().shift_graph(m, k)
}

pub fn hajnal(p: &HajnalParams) -> Result<Graph> {
    Builder::default().hajnal(p)
}

pub fn r_hajnal(r: usize, p: &HajnalParams) -> Result<Graph> {
    Builder::default().r_hajnal(r, p)
}

pub fn vc_lower_bound_graph(r: usize, m: usize, n: usize) -> Result<Graph> {
    Builder::default().vc_lower_bound_graph(r, m, n)
}

pub fn zykov(spec: &ZykovSpec) -> Result<Graph> {
    Builder::default().zykov(spec)
}

/// `χ_f(G) >= k` and girth at least `girth` (forests have infinite girth).
pub fn is_erdos_graph(g: &Graph, k: &Rational, girth: usize, budget: &Budget) -> Result<bool> {
    if g.girth().is_some_and(|c| c < girth) {
        return Ok(false);
    }
    Ok(fractional_chromatic(g, budget)?.value >= *k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clique::{clique_number, is_kr_free};
    use crate::coloring::chromatic_number;
    use crate::rational::ratio;

    fn chi(g: &Graph) -> usize {
        chromatic_number(g, &Budget::unlimited()).exact().unwrap()
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), Some(10));
        assert_eq!(binomial(8, 3), Some(56));
        assert_eq!(binomial(3, 5), Some(0));
        assert_eq!(subsets(4, 2).len(), 6);
    }

    #[test]
    fn petersen() {
        let g = kneser(5, 2).unwrap();
        assert_eq!((g.n(), g.edge_count(), g.girth()), (10, 15, Some(5)));
        assert_eq!(g.label(0), Some("{1,2}"));
    }

    #[test]
    fn kneser_degrees_and_matching() {
        for n in 2..9 {
            for m in 1..=n / 2 {
                let g = kneser(n, m).unwrap();
                let d = binomial(n - m, m).unwrap();
                assert!((0..g.n()).all(|v| g.degree(v) == d));
                if n == 2 * m {
                    assert_eq!(g.edge_count() * 2, g.n());
                }
            }
        }
        assert_eq!(kneser(6, 1).unwrap().edge_count(), 15);
    }

    #[test]
    fn kneser_vertex_cap() {
        let b = Builder::new(100);
        assert_eq!(b.kneser(10, 4), Err(Error::VertexCap { needed: 210, cap: 100 }));
    }

    #[test]
    fn shift_graph_figure() {
        let g = shift_graph(5, 2).unwrap();
        let idx = |s: &str| (0..g.n()).find(|&v| g.label(v) == Some(s)).unwrap();
        assert!(g.has_edge(idx("(1,2)"), idx("(2,3)")));
        assert!(!g.has_edge(idx("(1,2)"), idx("(1,3)")));
        assert_eq!(chi(&g), 3);
        let g8 = shift_graph(8, 2).unwrap();
        assert_eq!(clique_number(&g8, None), 2);
        assert_eq!(chi(&g8), 3);
    }

    /// Independent oracle: 3-colorability of Sh_5^2 by exhausting all 3^10
    /// assignments.
    #[test]
    fn shift_graph_brute_force_chi() {
        let g = shift_graph(5, 2).unwrap();
        let n = g.n();
        let mut two = false;
        let mut three = false;
        for code in 0..3usize.pow(n as u32) {
            let mut c = vec![0; n];
            let mut x = code;
            for slot in c.iter_mut() {
                *slot = x % 3;
                x /= 3;
            }
            if g.is_proper_coloring(&c) {
                three = true;
                if c.iter().all(|&k| k < 2) {
                    two = true;
                }
            }
        }
        assert!(three && !two);
    }

    #[test]
    fn hajnal_audit() {
        let p = HajnalParams::new(1, 10, 2).unwrap();
        let g = hajnal(&p).unwrap();
        assert_eq!(g.n(), 40);
        let lay = HajnalLayout::new(3, &p);
        for s in lay.kneser.clone() {
            let a_nbrs = lay.a().filter(|&y| g.has_edge(s, y)).count();
            assert_eq!(a_nbrs, 8);
        }
        assert_eq!(clique_number(&g, None), 2);
        assert!(HajnalParams::new(1, 9, 2).is_err());
    }

    #[test]
    fn hajnal_kneser_part_chromatic() {
        let p = HajnalParams::new(2, 16, 3).unwrap();
        let g = hajnal(&p).unwrap();
        let lay = HajnalLayout::new(3, &p);
        let kn: Vec<usize> = lay.kneser.clone().collect();
        assert_eq!(chi(&g.induced(&kn)), 4);
    }

    #[test]
    fn hajnal_triangle_free_when_k_below_m() {
        for (k, m) in [(1, 2), (1, 3), (2, 3)] {
            let ground = 2 * m + k;
            let p = HajnalParams::new(k, ground, m).unwrap();
            if p.vertex_count().unwrap() <= 300 {
                assert!(is_kr_free(&hajnal(&p).unwrap(), 3), "{k} {m}");
            }
        }
    }

    #[test]
    fn r_hajnal_audit() {
        let p = HajnalParams::new(1, 10, 2).unwrap();
        assert_eq!(r_hajnal(3, &p).unwrap(), hajnal(&p).unwrap());
        for r in 3..=5 {
            let g = r_hajnal(r, &p).unwrap();
            assert!(is_kr_free(&g, r));
            assert_eq!(clique_number(&g, None), r - 1);
            assert!(g.min_degree() >= (2 * r - 5) * p.l);
        }
        let lay = HajnalLayout::new(4, &p);
        assert_eq!(lay.join_classes, vec![40..60]);
    }

    #[test]
    fn vc_lower_bound_shape() {
        let g = vc_lower_bound_graph(4, 5, 30).unwrap();
        assert_eq!(g.n(), 30);
        assert_eq!(g.min_degree(), 15);
        assert_eq!(clique_number(&g, None), 3);
        assert!(vc_lower_bound_graph(4, 6, 20).is_err());
    }

    #[test]
    fn zykov_small_cases() {
        let edge = Graph::path(2);
        let z = zykov(&ZykovSpec { r: 3, t: 1, trees: vec![edge.clone()] }).unwrap();
        assert_eq!(z.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 3), (1, 2)]);
        assert!(crate::canon::is_isomorphic(&z, &Graph::path(4)));
        let k2 = zykov(&ZykovSpec { r: 4, t: 1, trees: vec![] }).unwrap();
        assert_eq!(k2, Graph::complete(2).with_labels(vec!["S0:0".into(), "W1:0".into()]));
        let z2 = zykov(&ZykovSpec { r: 3, t: 1, trees: vec![edge.clone(), edge] }).unwrap();
        assert_eq!(chi(&z2), 3);
    }

    #[test]
    fn zykov_structure() {
        let trees = vec![Graph::path(3), Graph::path(2), Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()];
        for r in 3..=5 {
            for t in 1..=2 {
                let spec = ZykovSpec { r, t, trees: trees.clone() };
                let z = zykov(&spec).unwrap();
                let lay = ZykovLayout::new(&spec);
                let forest: Vec<usize> = lay.trees.iter().flat_map(|x| x.clone()).collect();
                let f = z.induced(&forest);
                let expected = trees.iter().skip(1).fold(trees[0].clone().without_labels(), |a, t| a.disjoint_union(t));
                assert_eq!(f.without_labels(), expected);
                for w in &lay.joined {
                    for x in w.clone() {
                        assert_eq!(z.degree(x), z.n() - t);
                    }
                }
                assert!(is_kr_free(&z, r));
            }
        }
    }

    #[test]
    fn multipartite() {
        assert_eq!(complete_multipartite(&[1, 1, 1]).without_labels(), Graph::complete(3));
        assert_eq!(turan(9, 3).edge_count(), 27);
        let g = complete_multipartite(&[4, 4, 2]);
        assert_eq!(g.edge_count(), 16 + 8 + 8);
    }

    #[test]
    fn erdos_predicate() {
        let b = Budget::unlimited();
        assert!(is_erdos_graph(&Graph::cycle(5), &ratio(5, 2), 5, &b).unwrap());
        assert!(is_erdos_graph(&Graph::complete(4), &ratio(4, 1), 3, &b).unwrap());
        assert!(!is_erdos_graph(&Graph::cycle(6), &ratio(5, 2), 4, &b).unwrap());
    }
}
