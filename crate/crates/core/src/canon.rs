//! Canonical forms for isomorphism tests on small graphs.
//!
//! Color refinement splits the vertices into an equitable partition; ties are
//! broken by individualizing each vertex of the first non-singleton cell in
//! turn. The canonical form is the lexicographically smallest adjacency
//! string over all leaves, so two graphs are isomorphic iff their forms agree.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

/// Canonical adjacency string of `g` (upper triangle, row by row) prefixed by
/// the vertex count.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub n: usize,
    pub bits: Vec<u64>,
}

/// Refine an ordered partition (cells as a vector of vertex lists) until
/// equitable; cells are split by neighbor counts into earlier cells.
fn refine(g: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let mut changed = false;
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
        let cell_of = {
            let mut c = vec![0usize; g.n()];
            for (i, cell) in cells.iter().enumerate() {
                for &v in cell {
                    c[v] = i;
                }
            }
            c
        };
        for cell in &cells {
            let before = next.len();
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut counts = vec![0usize; cells.len()];
                    for w in g.neighbors(v).iter() {
                        counts[cell_of[w]] += 1;
                    }
                    (counts, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|k| k.1).collect());
                    start = i;
                }
            }
            if next.len() - before > 1 {
                changed = true;
            }
        }
        cells = next;
        if !changed {
            return cells;
        }
    }
}

fn form_of(g: &Graph, order: &[usize]) -> CanonicalForm {
    let n = g.n();
    let total = n * n.saturating_sub(1) / 2;
    let mut bits = vec![0u64; total.div_ceil(64)];
    let mut k = 0;
    for i in 0..n {
        for j in (i + 1)..n {
            // most significant first, so lexicographic order on bits is
            // lexicographic order on the string
            if g.has_edge(order[i], order[j]) {
                bits[k / 64] |= 1u64 << (63 - k % 64);
            }
            k += 1;
        }
    }
    CanonicalForm { n, bits }
}

fn search(g: &Graph, cells: Vec<Vec<usize>>, best: &mut Option<CanonicalForm>) {
    let cells = refine(g, cells);
    let Some(pos) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let f = form_of(g, &order);
        if best.as_ref().map_or(true, |b| f < *b) {
            *best = Some(f);
        }
        return;
    };
    for &v in &cells[pos] {
        let mut next = cells.clone();
        let rest: Vec<usize> = cells[pos].iter().copied().filter(|&w| w != v).collect();
        next.splice(pos..=pos, [vec![v], rest]);
        search(g, next, best);
    }
}

/// Canonical form of `g`. Exponential in the worst case; intended for the
/// small graphs of decomposition families and tree enumeration.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    if g.n() == 0 {
        return CanonicalForm { n: 0, bits: Vec::new() };
    }
    let mut by_degree: Vec<usize> = (0..g.n()).collect();
    by_degree.sort_by_key(|&v| (g.degree(v), v));
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for v in by_degree {
        match cells.last_mut() {
            Some(c) if g.degree(c[0]) == g.degree(v) => c.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut best = None;
    search(g, cells, &mut best);
    best.unwrap()
}

/// The graph spelled out by a canonical form.
pub fn graph_of(form: &CanonicalForm) -> Graph {
    let n = form.n;
    let mut e = Vec::new();
    let mut k = 0;
    for i in 0..n {
        for j in (i + 1)..n {
            if form.bits[k / 64] >> (63 - k % 64) & 1 == 1 {
                e.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &e).expect("canonical form encodes a simple graph")
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n() && g.edge_count() == h.edge_count() && canonical_form(g) == canonical_form(h)
}

/// Nonisomorphic trees on `n` vertices, each in canonical labeling.
pub fn trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut level: Vec<CanonicalForm> = vec![canonical_form(&Graph::empty(1))];
    for size in 2..=n {
        let mut next: Vec<CanonicalForm> = Vec::new();
        for f in &level {
            let t = graph_of(f);
            for v in 0..size - 1 {
                let mut e: Vec<(usize, usize)> = t.edges().collect();
                e.push((v, size - 1));
                let grown = Graph::from_edges(size, &e).unwrap();
                let c = canonical_form(&grown);
                if !next.contains(&c) {
                    next.push(c);
                }
            }
        }
        next.sort();
        level = next;
    }
    level.iter().map(graph_of).collect()
}
