//! Immutable simple undirected graphs with bit-row adjacency.

use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// Simple undirected graph on vertices `0..n`.
///
/// Adjacency rows are symmetric with an empty diagonal. Optional labels are
/// carried verbatim from constructors and never interpreted here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

/// Mutable staging area for a [`Graph`].
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder {
            adj: vec![VertexSet::new(n); n],
            labels: None,
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Add `uv`, rejecting loops, repeats and out-of-range endpoints.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.adj.len();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.adj[u].contains(v) {
            return Err(Error::MultiEdge(u.min(v), u.max(v)));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    /// Add `uv` if absent; panics on loops or out-of-range vertices.
    pub fn connect(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop at {u}");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.adj.len());
        self.labels = Some(labels);
        self
    }

    pub fn build(self) -> Graph {
        Graph {
            adj: self.adj,
            labels: self.labels,
        }
    }
}

impl Graph {
    pub fn empty(n: usize) -> Graph {
        GraphBuilder::new(n).build()
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut b = GraphBuilder::new(n);
        for &(u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    pub fn complete(n: usize) -> Graph {
        let mut b = GraphBuilder::new(n);
        for u in 0..n {
            for v in u + 1..n {
                b.connect(u, v);
            }
        }
        b.build()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least 3 vertices");
        let mut b = GraphBuilder::new(n);
        for i in 0..n {
            b.connect(i, (i + 1) % n);
        }
        b.build()
    }

    pub fn path(n: usize) -> Graph {
        let mut b = GraphBuilder::new(n);
        for i in 1..n {
            b.connect(i - 1, i);
        }
        b.build()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Graph {
        assert_eq!(labels.len(), self.n());
        self.labels = Some(labels);
        self
    }

    pub fn without_labels(mut self) -> Graph {
        self.labels = None;
        self
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Induced subgraph on `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let k = vertices.len();
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let mut b = GraphBuilder::new(k);
        for (i, &v) in vertices.iter().enumerate() {
            for w in self.adj[v].iter() {
                let j = pos[w];
                if j != usize::MAX && j > i {
                    b.connect(i, j);
                }
            }
        }
        if let Some(labels) = &self.labels {
            b = b.labels(vertices.iter().map(|&v| labels[v].clone()).collect());
        }
        b.build()
    }

    pub fn induced_set(&self, set: &VertexSet) -> Graph {
        self.induced(&set.to_vec())
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|v| {
                let mut row = self.adj[v].complement();
                row.remove(v);
                row
            })
            .collect();
        Graph {
            adj,
            labels: self.labels.clone(),
        }
    }

    /// Vertex-disjoint union; vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n1 = self.n();
        let mut b = GraphBuilder::new(n1 + other.n());
        for (u, v) in self.edges() {
            b.connect(u, v);
        }
        for (u, v) in other.edges() {
            b.connect(n1 + u, n1 + v);
        }
        b.labels = merge_labels(self, other);
        b.build()
    }

    /// `self ∨ other`: disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let n1 = self.n();
        let mut b = GraphBuilder::new(n1 + other.n());
        for (u, v) in self.edges() {
            b.connect(u, v);
        }
        for (u, v) in other.edges() {
            b.connect(n1 + u, n1 + v);
        }
        for u in 0..n1 {
            for v in 0..other.n() {
                b.connect(u, n1 + v);
            }
        }
        b.labels = merge_labels(self, other);
        b.build()
    }

    /// `G[s]`: every vertex becomes an independent set of `s` copies; copy
    /// `c` of vertex `v` is vertex `v * s + c`.
    pub fn blowup(&self, s: usize) -> Graph {
        assert!(s >= 1, "blowup factor must be positive");
        let n = self.n();
        let mut b = GraphBuilder::new(n * s);
        for (u, v) in self.edges() {
            for i in 0..s {
                for j in 0..s {
                    b.connect(u * s + i, v * s + j);
                }
            }
        }
        if let Some(labels) = &self.labels {
            let lab = (0..n * s)
                .map(|x| {
                    if s == 1 {
                        labels[x].clone()
                    } else {
                        alloc::format!("{}#{}", labels[x / s], x % s)
                    }
                })
                .collect();
            b = b.labels(lab);
        }
        b.build()
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| !self.adj[v].intersects(set))
    }

    /// An edge with both ends in `set`, if any.
    pub fn edge_within(&self, set: &VertexSet) -> Option<(usize, usize)> {
        for u in set.iter() {
            let mut inside = self.adj[u].intersection(set);
            inside.difference_with(&VertexSet::from_iter(self.n(), 0..=u));
            if let Some(v) = inside.first() {
                return Some((u, v));
            }
        }
        None
    }

    pub fn is_proper_coloring(&self, colors: &[usize]) -> bool {
        colors.len() == self.n() && self.edges().all(|(u, v)| colors[u] != colors[v])
    }

    /// Component index per vertex (components numbered by smallest vertex).
    pub fn components(&self) -> Vec<usize> {
        let n = self.n();
        let mut comp = vec![usize::MAX; n];
        let mut next = 0;
        let mut queue = VecDeque::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for w in self.adj[u].iter() {
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        queue.push_back(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.components().iter().all(|&c| c == 0)
    }

    pub fn is_forest(&self) -> bool {
        let comps = self.components().into_iter().max().map_or(0, |c| c + 1);
        self.edge_count() + comps == self.n()
    }

    /// Proper 2-coloring if the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.n();
        let mut side: Vec<Option<bool>> = vec![None; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for w in self.adj[u].iter() {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.unwrap_or(false)).collect())
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.n();
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.clear();
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                if let Some(b) = best {
                    if 2 * dist[u] + 1 >= b {
                        break;
                    }
                }
                for w in self.adj[u].iter() {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        if best.map_or(true, |b| len < b) {
                            best = Some(len);
                        }
                    }
                }
            }
        }
        best
    }

    /// Degeneracy ordering (repeatedly strip a minimum-degree vertex).
    pub fn degeneracy_order(&self) -> Vec<usize> {
        let n = self.n();
        let mut deg: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let mut removed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n).filter(|&v| !removed[v]).min_by_key(|&v| (deg[v], v)).unwrap();
            removed[v] = true;
            order.push(v);
            for w in self.adj[v].iter() {
                if !removed[w] {
                    deg[w] -= 1;
                }
            }
        }
        order
    }
}

fn merge_labels(a: &Graph, b: &Graph) -> Option<Vec<String>> {
    if a.labels.is_none() && b.labels.is_none() {
        return None;
    }
    let mut out = Vec::with_capacity(a.n() + b.n());
    for g in [a, b] {
        for v in 0..g.n() {
            out.push(match &g.labels {
                Some(l) => l[v].clone(),
                None => alloc::format!("{v}"),
            });
        }
    }
    Some(out)
}
