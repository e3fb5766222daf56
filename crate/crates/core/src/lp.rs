//! Exact revised simplex over rationals.
//!
//! Solves `min c·x` subject to `Ax = b`, `x >= 0` with `b >= 0`, keeping the
//! basis inverse explicitly. Columns may be appended between solves, which is
//! what column generation needs: the current basis stays feasible and the
//! next [`Lp::solve`] resumes from it.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Var {
    Column(usize),
    Artificial(usize),
}

/// Sparse column: `(row, coefficient)` pairs.
pub type Column = Vec<(usize, Rational)>;

#[derive(Clone, Debug)]
pub struct Lp {
    b: Vec<Rational>,
    cols: Vec<Column>,
    costs: Vec<Rational>,
    basis: Vec<Var>,
    position: Vec<Option<usize>>,
    binv: Vec<Vec<Rational>>,
    xb: Vec<Rational>,
    feasible: bool,
}

// consecutive degenerate pivots before switching to Bland's rule
const DEGENERATE_STREAK: usize = 20;

impl Lp {
    pub fn new(b: Vec<Rational>) -> Result<Lp> {
        if b.iter().any(|v| v.is_negative()) {
            return Err(Error::InvalidParameter("right-hand side must be non-negative".into()));
        }
        let m = b.len();
        let mut binv = vec![vec![Rational::zero(); m]; m];
        for (i, row) in binv.iter_mut().enumerate() {
            row[i] = Rational::one();
        }
        Ok(Lp {
            xb: b.clone(),
            b,
            cols: Vec::new(),
            costs: Vec::new(),
            basis: (0..m).map(Var::Artificial).collect(),
            position: Vec::new(),
            binv,
            feasible: m == 0,
        })
    }

    pub fn rows(&self) -> usize {
        self.b.len()
    }

    pub fn columns(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &Column {
        &self.cols[j]
    }

    pub fn cost(&self, j: usize) -> &Rational {
        &self.costs[j]
    }

    pub fn add_column(&mut self, entries: Column, cost: Rational) -> usize {
        assert!(entries.iter().all(|&(i, _)| i < self.rows()));
        self.cols.push(entries);
        self.costs.push(cost);
        self.position.push(None);
        self.cols.len() - 1
    }

    fn var_cost(&self, v: Var, phase_one: bool) -> Rational {
        match (v, phase_one) {
            (Var::Artificial(_), true) => Rational::one(),
            (Var::Artificial(_), false) => Rational::zero(),
            (Var::Column(_), true) => Rational::zero(),
            (Var::Column(j), false) => self.costs[j].clone(),
        }
    }

    fn duals_for(&self, phase_one: bool) -> Vec<Rational> {
        let m = self.rows();
        let cb: Vec<Rational> = self.basis.iter().map(|&v| self.var_cost(v, phase_one)).collect();
        let mut y = vec![Rational::zero(); m];
        for (i, c) in cb.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, yk) in y.iter_mut().enumerate() {
                if !self.binv[i][k].is_zero() {
                    *yk += c * &self.binv[i][k];
                }
            }
        }
        y
    }

    fn reduced_cost(&self, j: usize, y: &[Rational], phase_one: bool) -> Rational {
        let mut d = if phase_one { Rational::zero() } else { self.costs[j].clone() };
        for (i, a) in &self.cols[j] {
            d -= &y[*i] * a;
        }
        d
    }

    fn ftran(&self, j: usize) -> Vec<Rational> {
        let m = self.rows();
        let mut out = vec![Rational::zero(); m];
        for (i, row) in self.binv.iter().enumerate() {
            let mut acc = Rational::zero();
            for (k, a) in &self.cols[j] {
                if !row[*k].is_zero() {
                    acc += &row[*k] * a;
                }
            }
            out[i] = acc;
        }
        out
    }

    fn pivot(&mut self, row: usize, j: usize, col: &[Rational]) {
        let p = col[row].clone();
        for k in 0..self.rows() {
            self.binv[row][k] /= &p;
        }
        self.xb[row] /= &p;
        let prow = self.binv[row].clone();
        let px = self.xb[row].clone();
        for i in 0..self.rows() {
            if i == row || col[i].is_zero() {
                continue;
            }
            let f = &col[i];
            for k in 0..prow.len() {
                if !prow[k].is_zero() {
                    let t = f * &prow[k];
                    self.binv[i][k] -= t;
                }
            }
            let t = f * &px;
            self.xb[i] -= t;
        }
        if let Var::Column(old) = self.basis[row] {
            self.position[old] = None;
        }
        self.basis[row] = Var::Column(j);
        self.position[j] = Some(row);
    }

    fn var_key(&self, v: Var) -> usize {
        match v {
            Var::Column(j) => j,
            Var::Artificial(i) => self.cols.len() + i,
        }
    }

    fn iterate(&mut self, phase_one: bool, budget: &Budget) -> Result<LpStatus> {
        let mut streak = 0usize;
        loop {
            budget.tick()?;
            let y = self.duals_for(phase_one);
            let bland = streak >= DEGENERATE_STREAK;
            let mut entering: Option<(usize, Rational)> = None;
            for j in 0..self.cols.len() {
                if self.position[j].is_some() {
                    continue;
                }
                let d = self.reduced_cost(j, &y, phase_one);
                if !d.is_negative() {
                    continue;
                }
                if bland {
                    entering = Some((j, d));
                    break;
                }
                if entering.as_ref().map_or(true, |(_, best)| d < *best) {
                    entering = Some((j, d));
                }
            }
            let Some((j, _)) = entering else {
                return Ok(LpStatus::Optimal);
            };
            let col = self.ftran(j);
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.rows() {
                let ratio = if col[i].is_positive() {
                    &self.xb[i] / &col[i]
                } else if !phase_one && !col[i].is_zero() && matches!(self.basis[i], Var::Artificial(_)) {
                    // a zero-level artificial leaves through a degenerate pivot
                    Rational::zero()
                } else {
                    continue;
                };
                let better = match &leave {
                    None => true,
                    Some((r, best)) => {
                        ratio < *best
                            || (ratio == *best && self.var_key(self.basis[i]) < self.var_key(self.basis[*r]))
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let Some((row, theta)) = leave else {
                return Ok(LpStatus::Unbounded);
            };
            if theta.is_zero() {
                streak += 1;
            } else {
                streak = 0;
            }
            self.pivot(row, j, &col);
        }
    }

    /// Move zero-level artificials out of the basis wherever a column allows.
    fn drive_out_artificials(&mut self) {
        for row in 0..self.rows() {
            if !matches!(self.basis[row], Var::Artificial(_)) {
                continue;
            }
            for j in 0..self.cols.len() {
                if self.position[j].is_some() {
                    continue;
                }
                let col = self.ftran(j);
                if !col[row].is_zero() {
                    self.pivot(row, j, &col);
                    break;
                }
            }
        }
    }

    fn artificial_mass(&self) -> Rational {
        self.basis
            .iter()
            .zip(&self.xb)
            .filter(|(v, _)| matches!(v, Var::Artificial(_)))
            .fold(Rational::zero(), |acc, (_, x)| acc + x)
    }

    /// Optimize from the current basis.
    pub fn solve(&mut self, budget: &Budget) -> Result<LpStatus> {
        if !self.feasible {
            self.iterate(true, budget)?;
            if !self.artificial_mass().is_zero() {
                return Ok(LpStatus::Infeasible);
            }
            self.drive_out_artificials();
            self.feasible = true;
        }
        self.iterate(false, budget)
    }

    pub fn objective(&self) -> Rational {
        self.basis
            .iter()
            .zip(&self.xb)
            .fold(Rational::zero(), |acc, (&v, x)| acc + self.var_cost(v, false) * x)
    }

    /// Value of every structural column.
    pub fn primal(&self) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); self.cols.len()];
        for (i, &v) in self.basis.iter().enumerate() {
            if let Var::Column(j) = v {
                x[j] = self.xb[i].clone();
            }
        }
        x
    }

    /// Simplex multipliers `c_B B^-1`, one per row.
    pub fn duals(&self) -> Vec<Rational> {
        self.duals_for(false)
    }
}

/// Optimum of a covering program `min Σ x_j` subject to `Σ_{j : i ∈ cols[j]} x_j >= 1`
/// for every row `i`, `x >= 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverSolution {
    pub value: Rational,
    /// One weight per input column.
    pub primal: Vec<Rational>,
    /// A feasible packing `y` with `Σ_{i ∈ cols[j]} y_i <= 1` and `Σ y = value`.
    pub dual: Vec<Rational>,
}

/// Build the covering program with surplus columns appended after `cols`.
pub fn covering_lp(rows: usize, cols: &[Vec<usize>]) -> Lp {
    let mut lp = Lp::new(vec![Rational::one(); rows]).expect("non-negative rhs");
    for c in cols {
        lp.add_column(c.iter().map(|&i| (i, Rational::one())).collect(), Rational::one());
    }
    for i in 0..rows {
        lp.add_column(vec![(i, -Rational::one())], Rational::zero());
    }
    lp
}

/// Solve a covering program exactly. Returns `None` when some row is covered
/// by no column.
pub fn solve_covering(rows: usize, cols: &[Vec<usize>], budget: &Budget) -> Result<Option<CoverSolution>> {
    let mut lp = covering_lp(rows, cols);
    match lp.solve(budget)? {
        LpStatus::Optimal => {}
        LpStatus::Infeasible => return Ok(None),
        LpStatus::Unbounded => unreachable!("covering objective is bounded below by zero"),
    }
    let mut primal = lp.primal();
    primal.truncate(cols.len());
    Ok(Some(CoverSolution {
        value: lp.objective(),
        primal,
        dual: lp.duals(),
    }))
}

/// Check primal feasibility, dual feasibility and equal objectives.
pub fn verify_cover(rows: usize, cols: &[Vec<usize>], sol: &CoverSolution) -> bool {
    if sol.primal.len() != cols.len() || sol.dual.len() != rows {
        return false;
    }
    if sol.primal.iter().chain(&sol.dual).any(|v| v.is_negative()) {
        return false;
    }
    let mut cover = vec![Rational::zero(); rows];
    for (c, x) in cols.iter().zip(&sol.primal) {
        for &i in c {
            cover[i] += x;
        }
    }
    if cover.iter().any(|c| *c < Rational::one()) {
        return false;
    }
    for c in cols {
        let load = c.iter().fold(Rational::zero(), |acc, &i| acc + &sol.dual[i]);
        if load > Rational::one() {
            return false;
        }
    }
    let p = sol.primal.iter().fold(Rational::zero(), |a, x| a + x);
    let d = sol.dual.iter().fold(Rational::zero(), |a, x| a + x);
    p == sol.value && d == sol.value
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn c5_edge_cover_by_vertices() {
        // rows are the neighborhoods of C5, columns are vertices
        let rows: Vec<Vec<usize>> = (0..5).map(|v| vec![(v + 1) % 5, (v + 4) % 5]).collect();
        let mut cols = vec![Vec::new(); 5];
        for (i, r) in rows.iter().enumerate() {
            for &v in r {
                cols[v].push(i);
            }
        }
        let sol = solve_covering(5, &cols, &Budget::unlimited()).unwrap().unwrap();
        assert_eq!(sol.value, ratio(5, 2));
        assert!(verify_cover(5, &cols, &sol));
    }

    #[test]
    fn uncovered_row_is_infeasible() {
        let cols = vec![vec![0]];
        assert!(solve_covering(2, &cols, &Budget::unlimited()).unwrap().is_none());
    }

    #[test]
    fn warm_start_after_adding_columns() {
        // cover 3 rows; first by singletons (value 3), then add the full column
        let mut cols = vec![vec![0], vec![1], vec![2]];
        let mut lp = covering_lp(3, &cols);
        assert_eq!(lp.solve(&Budget::unlimited()).unwrap(), LpStatus::Optimal);
        assert_eq!(lp.objective(), ratio(3, 1));
        lp.add_column(vec![(0, ratio(1, 1)), (1, ratio(1, 1)), (2, ratio(1, 1))], ratio(1, 1));
        cols.push(vec![0, 1, 2]);
        assert_eq!(lp.solve(&Budget::unlimited()).unwrap(), LpStatus::Optimal);
        assert_eq!(lp.objective(), ratio(1, 1));
    }

    #[test]
    fn general_equality_program() {
        // min -x0 - x1 s.t. x0 + 2 x1 + s0 = 4, 3 x0 + x1 + s1 = 6
        let mut lp = Lp::new(vec![ratio(4, 1), ratio(6, 1)]).unwrap();
        lp.add_column(vec![(0, ratio(1, 1)), (1, ratio(3, 1))], ratio(-1, 1));
        lp.add_column(vec![(0, ratio(2, 1)), (1, ratio(1, 1))], ratio(-1, 1));
        lp.add_column(vec![(0, ratio(1, 1))], ratio(0, 1));
        lp.add_column(vec![(1, ratio(1, 1))], ratio(0, 1));
        assert_eq!(lp.solve(&Budget::unlimited()).unwrap(), LpStatus::Optimal);
        // vertex (8/5, 6/5)
        assert_eq!(lp.objective(), ratio(-14, 5));
        let x = lp.primal();
        assert_eq!(x[0], ratio(8, 5));
        assert_eq!(x[1], ratio(6, 5));
    }
}
