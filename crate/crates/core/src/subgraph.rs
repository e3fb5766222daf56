//! Non-induced subgraph containment.

use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::budget::Budget;
use crate::error::Result;
use crate::graph::Graph;

struct Matcher<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    order: Vec<usize>,
    map: Vec<usize>,
    used: VertexSet,
    budget: &'a Budget,
}

impl Matcher<'_> {
    fn extend(&mut self, depth: usize) -> Result<bool> {
        self.budget.tick()?;
        if depth == self.order.len() {
            return Ok(true);
        }
        let p = self.order[depth];
        let mut cand = VertexSet::full(self.host.n());
        cand.difference_with(&self.used);
        for q in self.pattern.neighbors(p).iter() {
            let img = self.map[q];
            if img != usize::MAX {
                cand.intersect_with(self.host.neighbors(img));
            }
        }
        let need = self.pattern.degree(p);
        for v in cand.iter() {
            if self.host.degree(v) < need {
                continue;
            }
            self.map[p] = v;
            self.used.insert(v);
            if self.extend(depth + 1)? {
                return Ok(true);
            }
            self.used.remove(v);
            self.map[p] = usize::MAX;
        }
        Ok(false)
    }
}

/// Search order: repeatedly take the pattern vertex with most already-placed
/// neighbors, ties by degree.
fn pattern_order(h: &Graph) -> Vec<usize> {
    let n = h.n();
    let mut placed = VertexSet::new(n);
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed.contains(v))
            .max_by_key(|&v| (h.neighbors(v).intersection_len(&placed), h.degree(v), usize::MAX - v))
            .unwrap();
        placed.insert(v);
        order.push(v);
    }
    order
}

/// An edge-preserving injection `V(pattern) -> V(host)`, if one exists.
pub fn find_subgraph_budgeted(host: &Graph, pattern: &Graph, budget: &Budget) -> Result<Option<Vec<usize>>> {
    if pattern.n() > host.n() || pattern.edge_count() > host.edge_count() {
        return Ok(None);
    }
    let mut m = Matcher {
        host,
        pattern,
        order: pattern_order(pattern),
        map: vec![usize::MAX; pattern.n()],
        used: VertexSet::new(host.n()),
        budget,
    };
    if m.extend(0)? {
        Ok(Some(m.map))
    } else {
        Ok(None)
    }
}

pub fn subgraph_contains(host: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    find_subgraph_budgeted(host, pattern, &Budget::unlimited()).expect("unlimited budget")
}

/// Check that `map` is an edge-preserving injection.
pub fn is_embedding(host: &Graph, pattern: &Graph, map: &[usize]) -> bool {
    if map.len() != pattern.n() || map.iter().any(|&v| v >= host.n()) {
        return false;
    }
    let mut seen = VertexSet::new(host.n());
    for &v in map {
        if seen.contains(v) {
            return false;
        }
        seen.insert(v);
    }
    pattern.edges().all(|(u, v)| host.has_edge(map[u], map[v]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &e).unwrap()
    }

    #[test]
    fn cycle_in_itself() {
        let c5 = Graph::cycle(5);
        let m = subgraph_contains(&c5, &c5).unwrap();
        assert!(is_embedding(&c5, &c5, &m));
    }

    #[test]
    fn petersen_has_no_triangle_but_has_c5() {
        let p = petersen();
        assert!(subgraph_contains(&p, &Graph::complete(3)).is_none());
        let m = subgraph_contains(&p, &Graph::cycle(5)).unwrap();
        assert!(is_embedding(&p, &Graph::cycle(5), &m));
        assert!(subgraph_contains(&p, &Graph::cycle(4)).is_none());
    }

    #[test]
    fn non_induced() {
        // P3 sits inside K3 even though K3 has the extra edge
        let m = subgraph_contains(&Graph::complete(3), &Graph::path(3)).unwrap();
        assert!(is_embedding(&Graph::complete(3), &Graph::path(3), &m));
    }
}
