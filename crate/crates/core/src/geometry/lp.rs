// indexed loops mirror the usual tableau notation
#![allow(clippy::needless_range_loop)]

//! Exact two-phase simplex over the rationals.
//!
//! Solves `max c.x  s.t.  A x <= b` with free variables, using Bland's
//! rule so the pivot sequence terminates and is deterministic. Problem
//! sizes here are tiny (a handful of variables, a dozen constraints), so
//! a dense tableau with `Rat` entries is the right tool.

use crate::rat::Rat;

/// `max objective . x` subject to `coeffs . x <= rhs` per row, `x` free.
#[derive(Debug, Clone)]
pub struct LpProblem {
    num_vars: usize,
    rows: Vec<(Vec<Rat>, Rat)>,
    objective: Vec<Rat>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpSolution {
    Optimal { value: Rat, point: Vec<Rat> },
    Unbounded,
    Infeasible,
}

impl LpProblem {
    pub fn new(num_vars: usize) -> Self {
        LpProblem {
            num_vars,
            rows: Vec::new(),
            objective: vec![Rat::zero(); num_vars],
        }
    }

    pub fn add_le(&mut self, coeffs: Vec<Rat>, rhs: Rat) {
        assert_eq!(coeffs.len(), self.num_vars);
        self.rows.push((coeffs, rhs));
    }

    pub fn set_objective(&mut self, objective: Vec<Rat>) {
        assert_eq!(objective.len(), self.num_vars);
        self.objective = objective;
    }

    pub fn solve(&self) -> LpSolution {
        Tableau::build(self).solve(self)
    }
}

struct Tableau {
    cols: usize,
    rows: Vec<Vec<Rat>>,
    rhs: Vec<Rat>,
    basis: Vec<usize>,
    artificial_start: usize,
}

enum Step {
    Optimal,
    Unbounded,
}

impl Tableau {
    /// Standard form: x = u - v with u, v >= 0, one slack per row, and an
    /// artificial variable wherever the slack cannot serve as the initial
    /// basis (rows whose rhs was negative before sign-flipping).
    fn build(p: &LpProblem) -> Tableau {
        let n = p.num_vars;
        let m = p.rows.len();
        let structural = 2 * n + m;
        let mut rows = Vec::with_capacity(m);
        let mut rhs = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let mut artificial_rows = Vec::new();

        for (i, (coeffs, b)) in p.rows.iter().enumerate() {
            let flip = b.is_negative();
            let sign = if flip { Rat::from_int(-1) } else { Rat::one() };
            let mut row = vec![Rat::zero(); structural];
            for (j, a) in coeffs.iter().enumerate() {
                row[j] = &sign * a;
                row[n + j] = -(&sign * a);
            }
            row[2 * n + i] = sign.clone();
            rows.push(row);
            rhs.push(&sign * b);
            if flip {
                artificial_rows.push(i);
                basis.push(usize::MAX); // patched below
            } else {
                basis.push(2 * n + i);
            }
        }

        let artificial_start = structural;
        let cols = structural + artificial_rows.len();
        for row in &mut rows {
            row.resize(cols, Rat::zero());
        }
        for (k, &i) in artificial_rows.iter().enumerate() {
            rows[i][artificial_start + k] = Rat::one();
            basis[i] = artificial_start + k;
        }

        Tableau {
            cols,
            rows,
            rhs,
            basis,
            artificial_start,
        }
    }

    fn solve(mut self, p: &LpProblem) -> LpSolution {
        let n = p.num_vars;

        if self.cols > self.artificial_start {
            let mut phase1 = vec![Rat::zero(); self.cols];
            for c in self.artificial_start..self.cols {
                phase1[c] = Rat::from_int(-1);
            }
            match self.run(&phase1) {
                Step::Unbounded => unreachable!("phase-1 objective is bounded above by 0"),
                Step::Optimal => {}
            }
            if self.objective_value(&phase1).is_negative() {
                return LpSolution::Infeasible;
            }
            self.evict_artificials();
        }

        let mut phase2 = vec![Rat::zero(); self.cols];
        for j in 0..n {
            phase2[j] = p.objective[j].clone();
            phase2[n + j] = -p.objective[j].clone();
        }
        match self.run(&phase2) {
            Step::Unbounded => LpSolution::Unbounded,
            Step::Optimal => {
                let mut point = vec![Rat::zero(); n];
                for (i, &b) in self.basis.iter().enumerate() {
                    if b < n {
                        point[b] += self.rhs[i].clone();
                    } else if b < 2 * n {
                        point[b - n] -= self.rhs[i].clone();
                    }
                }
                LpSolution::Optimal {
                    value: self.objective_value(&phase2),
                    point,
                }
            }
        }
    }

    fn objective_value(&self, cost: &[Rat]) -> Rat {
        self.basis
            .iter()
            .zip(&self.rhs)
            .map(|(&b, v)| &cost[b] * v)
            .fold(Rat::zero(), |acc, x| acc + x)
    }

    /// Bland's rule simplex on the current basis. `cost` is indexed by
    /// column; artificial columns are skipped once evicted.
    fn run(&mut self, cost: &[Rat]) -> Step {
        loop {
            let entering = (0..self.cols).find(|&j| {
                if self.cols > self.artificial_start
                    && j >= self.artificial_start
                    && cost[j].is_zero()
                {
                    // artificial column in phase 2: never re-enters
                    return false;
                }
                self.reduced_cost(cost, j).is_positive()
            });
            let Some(e) = entering else {
                return Step::Optimal;
            };

            let mut leave: Option<(usize, Rat)> = None;
            for i in 0..self.rows.len() {
                if self.rows[i][e].is_positive() {
                    let ratio = &self.rhs[i] / &self.rows[i][e];
                    let better = match &leave {
                        None => true,
                        Some((li, lr)) => {
                            ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li])
                        }
                    };
                    if better {
                        leave = Some((i, ratio));
                    }
                }
            }
            let Some((r, _)) = leave else {
                return Step::Unbounded;
            };
            self.pivot(r, e);
        }
    }

    fn reduced_cost(&self, cost: &[Rat], j: usize) -> Rat {
        let mut z = Rat::zero();
        for (i, &b) in self.basis.iter().enumerate() {
            if !cost[b].is_zero() && !self.rows[i][j].is_zero() {
                z += &cost[b] * &self.rows[i][j];
            }
        }
        &cost[j] - &z
    }

    fn pivot(&mut self, r: usize, e: usize) {
        let inv = self.rows[r][e].recip();
        for j in 0..self.cols {
            self.rows[r][j] = &self.rows[r][j] * &inv;
        }
        self.rhs[r] = &self.rhs[r] * &inv;
        for i in 0..self.rows.len() {
            if i != r && !self.rows[i][e].is_zero() {
                let factor = self.rows[i][e].clone();
                for j in 0..self.cols {
                    let delta = &factor * &self.rows[r][j];
                    self.rows[i][j] = &self.rows[i][j] - &delta;
                }
                let delta = &factor * &self.rhs[r];
                self.rhs[i] = &self.rhs[i] - &delta;
            }
        }
        self.basis[r] = e;
    }

    /// After a successful phase 1, pivot basic artificials out (or drop
    /// the redundant row when the whole non-artificial row is zero).
    fn evict_artificials(&mut self) {
        let mut i = 0;
        while i < self.rows.len() {
            if self.basis[i] >= self.artificial_start {
                if let Some(j) =
                    (0..self.artificial_start).find(|&j| !self.rows[i][j].is_zero())
                {
                    self.pivot(i, j);
                } else {
                    self.rows.remove(i);
                    self.rhs.remove(i);
                    self.basis.remove(i);
                    continue;
                }
            }
            i += 1;
        }
        for row in &mut self.rows {
            row.truncate(self.artificial_start);
        }
        self.cols = self.artificial_start;
    }
}
