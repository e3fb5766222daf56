//! Exact chromatic number and proper-coloring enumeration.

use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::budget::Budget;
use crate::clique::max_clique;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Result of an exact chromatic-number search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChromaticOutcome {
    /// `χ(G)` together with a proper coloring using exactly that many colors.
    Exact { chi: usize, coloring: Vec<usize> },
    /// The budget ran out; `lower <= χ(G) <= upper`, `coloring` witnesses `upper`.
    Unknown {
        lower: usize,
        upper: usize,
        coloring: Vec<usize>,
    },
}

impl ChromaticOutcome {
    pub fn exact(&self) -> Option<usize> {
        match self {
            ChromaticOutcome::Exact { chi, .. } => Some(*chi),
            ChromaticOutcome::Unknown { .. } => None,
        }
    }

    pub fn into_exact(self) -> Result<(usize, Vec<usize>)> {
        match self {
            ChromaticOutcome::Exact { chi, coloring } => Ok((chi, coloring)),
            ChromaticOutcome::Unknown { .. } => Err(Error::BudgetExceeded),
        }
    }
}

/// DSATUR greedy coloring.
pub fn dsatur_coloring(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut color = vec![usize::MAX; n];
    let mut seen: Vec<VertexSet> = vec![VertexSet::new(n.max(1)); n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v] == usize::MAX)
            .max_by_key(|&v| (seen[v].len(), g.degree(v), usize::MAX - v))
            .unwrap();
        let c = (0..n).find(|&c| !seen[v].contains(c)).unwrap();
        color[v] = c;
        for w in g.neighbors(v).iter() {
            seen[w].insert(c);
        }
    }
    color
}

pub fn color_count(coloring: &[usize]) -> usize {
    coloring.iter().copied().max().map_or(0, |m| m + 1)
}

/// Backtracking k-colorability with DSATUR vertex selection and forward
/// checking. Colors are opened in order, so color permutations are never
/// revisited.
struct KColor<'a> {
    g: &'a Graph,
    k: usize,
    color: Vec<usize>,
    // number of neighbors of v holding color c, at v * k + c
    count: Vec<u32>,
    // number of distinct colors present around v
    sat: Vec<usize>,
    budget: &'a Budget,
}

impl<'a> KColor<'a> {
    fn new(g: &'a Graph, k: usize, budget: &'a Budget) -> Self {
        KColor {
            g,
            k,
            color: vec![usize::MAX; g.n()],
            count: vec![0; g.n() * k],
            sat: vec![0; g.n()],
            budget,
        }
    }

    fn assign(&mut self, v: usize, c: usize) -> bool {
        self.color[v] = c;
        let mut ok = true;
        for w in self.g.neighbors(v).iter() {
            let slot = &mut self.count[w * self.k + c];
            *slot += 1;
            if *slot == 1 {
                self.sat[w] += 1;
                if self.sat[w] == self.k && self.color[w] == usize::MAX {
                    ok = false;
                }
            }
        }
        ok
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v];
        self.color[v] = usize::MAX;
        for w in self.g.neighbors(v).iter() {
            let slot = &mut self.count[w * self.k + c];
            *slot -= 1;
            if *slot == 0 {
                self.sat[w] -= 1;
            }
        }
    }

    fn pick(&self) -> Option<usize> {
        let mut best: Option<(usize, usize, usize)> = None;
        for v in 0..self.g.n() {
            if self.color[v] != usize::MAX {
                continue;
            }
            let key = (self.sat[v], self.g.degree(v), v);
            match best {
                Some((s, d, _)) if (s, d) >= (key.0, key.1) => {}
                _ => best = Some(key),
            }
        }
        best.map(|b| b.2)
    }

    fn solve(&mut self, used: usize, remaining: usize) -> Result<bool> {
        self.budget.tick()?;
        if remaining == 0 {
            return Ok(true);
        }
        let v = self.pick().unwrap();
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            if self.count[v * self.k + c] != 0 {
                continue;
            }
            let ok = self.assign(v, c);
            if ok && self.solve(used.max(c + 1), remaining - 1)? {
                return Ok(true);
            }
            self.unassign(v);
        }
        Ok(false)
    }
}

/// Proper `k`-coloring if one exists; `seed_clique` is pre-colored `0..`.
pub fn k_coloring(g: &Graph, k: usize, seed_clique: &[usize], budget: &Budget) -> Result<Option<Vec<usize>>> {
    let n = g.n();
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    if k == 0 || seed_clique.len() > k {
        return Ok(None);
    }
    let mut s = KColor::new(g, k, budget);
    for (c, &v) in seed_clique.iter().enumerate() {
        if !s.assign(v, c) {
            return Ok(None);
        }
    }
    if s.solve(seed_clique.len(), n - seed_clique.len())? {
        Ok(Some(s.color))
    } else {
        Ok(None)
    }
}

/// Exact `χ(G)` by clique lower bound, DSATUR upper bound and k-colorability
/// refutations in between. Never returns a wrong number: an exhausted budget
/// yields [`ChromaticOutcome::Unknown`].
pub fn chromatic_number(g: &Graph, budget: &Budget) -> ChromaticOutcome {
    let n = g.n();
    if n == 0 {
        return ChromaticOutcome::Exact {
            chi: 0,
            coloring: Vec::new(),
        };
    }
    let clique = max_clique(g, None);
    let mut best = dsatur_coloring(g);
    let upper = color_count(&best);
    let lower = clique.len();
    for k in lower..upper {
        match k_coloring(g, k, &clique, budget) {
            Ok(Some(c)) => {
                best = c;
                return ChromaticOutcome::Exact { chi: k, coloring: best };
            }
            Ok(None) => continue,
            Err(_) => {
                return ChromaticOutcome::Unknown {
                    lower: k,
                    upper,
                    coloring: best,
                }
            }
        }
    }
    ChromaticOutcome::Exact {
        chi: upper,
        coloring: best,
    }
}

/// Color classes of a coloring, indexed by color.
pub fn color_classes(n: usize, coloring: &[usize]) -> Vec<VertexSet> {
    let k = color_count(coloring);
    let mut classes = vec![VertexSet::new(n); k];
    for (v, &c) in coloring.iter().enumerate() {
        classes[c].insert(v);
    }
    classes
}

/// Every proper coloring with exactly `k` nonempty classes, each listed once
/// up to renaming of colors (colors appear in order of first use).
pub fn proper_colorings(g: &Graph, k: usize, budget: &Budget) -> Result<Vec<Vec<usize>>> {
    let n = g.n();
    let mut out = Vec::new();
    let mut color = vec![usize::MAX; n];
    fn rec(
        g: &Graph,
        k: usize,
        v: usize,
        used: usize,
        color: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        budget: &Budget,
    ) -> Result<()> {
        budget.tick()?;
        let n = g.n();
        if n - v < k - used {
            return Ok(());
        }
        if v == n {
            if used == k {
                out.push(color.clone());
            }
            return Ok(());
        }
        for c in 0..(used + 1).min(k) {
            if g.neighbors(v).iter().any(|w| w < v && color[w] == c) {
                continue;
            }
            color[v] = c;
            rec(g, k, v + 1, used.max(c + 1), color, out, budget)?;
            color[v] = usize::MAX;
        }
        Ok(())
    }
    rec(g, k, 0, 0, &mut color, &mut out, budget)?;
    Ok(out)
}
