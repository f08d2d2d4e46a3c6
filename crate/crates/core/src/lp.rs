//! Dense two-phase simplex over exact rationals.
//!
//! Entering and leaving variables follow Bland's smallest-index rule, so the
//! method terminates and its result depends only on the instance.

use num_traits::{Signed, Zero};

use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

/// `minimize objective . x` subject to the constraints. Variables are free
/// unless marked non-negative.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearProgram {
    num_vars: usize,
    nonneg: Vec<bool>,
    objective: Vec<Rational>,
    constraints: Vec<Constraint>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Optimal { value: Rational, x: Vec<Rational> },
    Infeasible,
    Unbounded,
}

impl LinearProgram {
    pub fn new(num_vars: usize) -> Self {
        LinearProgram {
            num_vars,
            nonneg: vec![false; num_vars],
            objective: vec![Rational::zero(); num_vars],
            constraints: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn set_nonneg(&mut self, var: usize) {
        self.nonneg[var] = true;
    }

    pub fn set_objective(&mut self, objective: Vec<Rational>) {
        assert_eq!(objective.len(), self.num_vars);
        self.objective = objective;
    }

    pub fn add_constraint(&mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) {
        assert_eq!(coeffs.len(), self.num_vars);
        self.constraints.push(Constraint {
            coeffs,
            relation,
            rhs,
        });
    }

    pub fn solve(&self) -> LpOutcome {
        Simplex::build(self).run(self)
    }
}

struct Simplex {
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    /// structural column(s) of each original variable: (positive, negative)
    var_cols: Vec<(usize, Option<usize>)>,
    num_cols: usize,
    first_artificial: usize,
}

impl Simplex {
    fn build(lp: &LinearProgram) -> Simplex {
        let mut var_cols = Vec::with_capacity(lp.num_vars);
        let mut col = 0;
        for &nn in &lp.nonneg {
            if nn {
                var_cols.push((col, None));
                col += 1;
            } else {
                var_cols.push((col, Some(col + 1)));
                col += 2;
            }
        }
        let structural = col;

        // orient rows so every right-hand side is non-negative
        let oriented: Vec<(Vec<Rational>, Relation, Rational)> = lp
            .constraints
            .iter()
            .map(|c| {
                if c.rhs.is_negative() {
                    let flipped = match c.relation {
                        Relation::Le => Relation::Ge,
                        Relation::Ge => Relation::Le,
                        Relation::Eq => Relation::Eq,
                    };
                    (c.coeffs.iter().map(|a| -a).collect(), flipped, -&c.rhs)
                } else {
                    (c.coeffs.clone(), c.relation, c.rhs.clone())
                }
            })
            .collect();

        let slack_count = oriented.iter().filter(|r| r.1 != Relation::Eq).count();
        let artificial_count = oriented.iter().filter(|r| r.1 != Relation::Le).count();
        let first_artificial = structural + slack_count;
        let num_cols = first_artificial + artificial_count;

        let mut rows = Vec::with_capacity(oriented.len());
        let mut basis = Vec::with_capacity(oriented.len());
        let (mut next_slack, mut next_art) = (structural, first_artificial);
        for (coeffs, rel, rhs) in oriented {
            let mut row = vec![Rational::zero(); num_cols + 1];
            for (k, a) in coeffs.iter().enumerate() {
                let (p, n) = var_cols[k];
                row[p] = a.clone();
                if let Some(n) = n {
                    row[n] = -a;
                }
            }
            row[num_cols] = rhs;
            match rel {
                Relation::Le => {
                    row[next_slack] = Rational::from_integer(1.into());
                    basis.push(next_slack);
                    next_slack += 1;
                }
                Relation::Ge => {
                    row[next_slack] = Rational::from_integer((-1).into());
                    next_slack += 1;
                    row[next_art] = Rational::from_integer(1.into());
                    basis.push(next_art);
                    next_art += 1;
                }
                Relation::Eq => {
                    row[next_art] = Rational::from_integer(1.into());
                    basis.push(next_art);
                    next_art += 1;
                }
            }
            rows.push(row);
        }
        Simplex {
            rows,
            basis,
            var_cols,
            num_cols,
            first_artificial,
        }
    }

    fn run(mut self, lp: &LinearProgram) -> LpOutcome {
        if self.first_artificial < self.num_cols {
            let mut cost = vec![Rational::zero(); self.num_cols];
            for c in cost.iter_mut().skip(self.first_artificial) {
                *c = Rational::from_integer(1.into());
            }
            match self.optimize(&cost, self.num_cols) {
                Some(v) if v.is_zero() => {}
                Some(_) => return LpOutcome::Infeasible,
                None => unreachable!("phase one is bounded below by zero"),
            }
            self.evict_artificials();
        }

        let mut cost = vec![Rational::zero(); self.num_cols];
        for (k, c) in lp.objective.iter().enumerate() {
            let (p, n) = self.var_cols[k];
            cost[p] = c.clone();
            if let Some(n) = n {
                cost[n] = -c;
            }
        }
        let Some(value) = self.optimize(&cost, self.first_artificial) else {
            return LpOutcome::Unbounded;
        };

        let mut col_value = vec![Rational::zero(); self.num_cols];
        for (r, &b) in self.basis.iter().enumerate() {
            col_value[b] = self.rows[r][self.num_cols].clone();
        }
        let x = self
            .var_cols
            .iter()
            .map(|&(p, n)| match n {
                Some(n) => &col_value[p] - &col_value[n],
                None => col_value[p].clone(),
            })
            .collect();
        LpOutcome::Optimal { value, x }
    }

    /// Minimizes `cost` using columns `< allowed`. Returns the optimum, or
    /// `None` when unbounded.
    fn optimize(&mut self, cost: &[Rational], allowed: usize) -> Option<Rational> {
        loop {
            let reduced = self.reduced_costs(cost);
            let Some(enter) = (0..allowed).find(|&j| reduced[j].is_negative()) else {
                let value = self
                    .basis
                    .iter()
                    .enumerate()
                    .map(|(r, &b)| &cost[b] * &self.rows[r][self.num_cols])
                    .sum();
                return Some(value);
            };
            let mut leave: Option<(usize, Rational)> = None;
            for (r, row) in self.rows.iter().enumerate() {
                if !row[enter].is_positive() {
                    continue;
                }
                let ratio = &row[self.num_cols] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((lr, best)) => {
                        ratio < *best || (ratio == *best && self.basis[r] < self.basis[*lr])
                    }
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
            let (r, _) = leave?;
            self.pivot(r, enter);
        }
    }

    fn reduced_costs(&self, cost: &[Rational]) -> Vec<Rational> {
        let mut reduced = cost[..self.num_cols].to_vec();
        for (r, &b) in self.basis.iter().enumerate() {
            if cost[b].is_zero() {
                continue;
            }
            for (j, red) in reduced.iter_mut().enumerate() {
                if !self.rows[r][j].is_zero() {
                    *red -= &cost[b] * &self.rows[r][j];
                }
            }
        }
        reduced
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        for v in self.rows[r].iter_mut() {
            if !v.is_zero() {
                *v /= &p;
            }
        }
        let pivot_row = self.rows[r].clone();
        for (k, row) in self.rows.iter_mut().enumerate() {
            if k == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (j, pv) in pivot_row.iter().enumerate() {
                if !pv.is_zero() {
                    row[j] -= &factor * pv;
                }
            }
        }
        self.basis[r] = c;
    }

    /// After a zero-cost phase one, pivots artificial variables out of the
    /// basis; rows where that is impossible are redundant and dropped.
    fn evict_artificials(&mut self) {
        let mut r = 0;
        while r < self.rows.len() {
            if self.basis[r] >= self.first_artificial {
                match (0..self.first_artificial).find(|&j| !self.rows[r][j].is_zero()) {
                    Some(j) => self.pivot(r, j),
                    None => {
                        self.rows.remove(r);
                        self.basis.remove(r);
                        continue;
                    }
                }
            }
            r += 1;
        }
    }
}
