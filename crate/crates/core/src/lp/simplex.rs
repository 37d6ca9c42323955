//! Dense two-phase primal simplex over Q with Bland's rule.

use std::cell::Cell;

use crate::algebra::rational::Rational;

thread_local! {
    static SOLVES: Cell<u64> = const { Cell::new(0) };
}

/// Number of simplex solves performed on the current thread.
pub fn solve_count() -> u64 {
    SOLVES.with(|c| c.get())
}

/// Outcome of `max c.x  s.t.  A x = b, x >= 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StandardOutcome {
    Optimal {
        x: Vec<Rational>,
        /// Multipliers `y` with `c_j - y.A_j <= 0` for every column.
        duals: Vec<Rational>,
        value: Rational,
    },
    /// `d >= 0` with `A d = 0` and `c.d > 0`.
    Unbounded {
        ray: Vec<Rational>,
    },
    Infeasible,
}

struct Tableau {
    /// `rows[i]` holds `ncols` structural entries, then `m` artificial
    /// entries, then the right-hand side.
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    ncols: usize,
    m: usize,
}

impl Tableau {
    fn rhs(&self, i: usize) -> &Rational {
        self.rows[i].last().expect("rhs column")
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        if !inv.is_one() {
            for x in self.rows[r].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        let pivot_row = std::mem::take(&mut self.rows[r]);
        let nz: Vec<usize> = (0..pivot_row.len())
            .filter(|&j| !pivot_row[j].is_zero())
            .collect();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for &j in &nz {
                let d = &f * &pivot_row[j];
                row[j] -= &d;
            }
        }
        self.rows[r] = pivot_row;
        self.basis[r] = c;
    }

    /// Reduced costs `c_j - c_B . T_j` over the allowed columns.
    fn reduced_costs(&self, cost: &[Rational], allowed: usize) -> Vec<Rational> {
        let mut red: Vec<Rational> = cost[..allowed].to_vec();
        for (i, row) in self.rows.iter().enumerate() {
            let cb = &cost[self.basis[i]];
            if cb.is_zero() {
                continue;
            }
            for (j, r) in red.iter_mut().enumerate() {
                if !row[j].is_zero() {
                    *r -= &(cb * &row[j]);
                }
            }
        }
        red
    }

    /// Runs simplex iterations for `max cost.x` restricted to columns
    /// `< allowed`. Returns the entering column of an unbounded ray, if any.
    fn optimize(&mut self, cost: &[Rational], allowed: usize) -> Option<usize> {
        loop {
            let red = self.reduced_costs(cost, allowed);
            // Bland: smallest improving index.
            let q = (0..allowed).find(|&j| red[j].is_positive() && !self.basis.contains(&j))?;
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][q];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / a;
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
            match leave {
                Some((r, _)) => self.pivot(r, q),
                None => return Some(q),
            }
        }
    }

    fn primal(&self) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); self.ncols];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < self.ncols {
                x[b] = self.rhs(i).clone();
            }
        }
        x
    }
}

/// Solves `max c.x  s.t.  A x = b, x >= 0` exactly.
pub fn solve_standard(a: &[Vec<Rational>], b: &[Rational], c: &[Rational]) -> StandardOutcome {
    SOLVES.with(|s| s.set(s.get() + 1));
    let m = a.len();
    let ncols = c.len();
    debug_assert!(a.iter().all(|r| r.len() == ncols));
    debug_assert_eq!(b.len(), m);

    // Flip rows so that b >= 0; remember the signs for the duals.
    let mut signs = vec![Rational::one(); m];
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(m);
    for i in 0..m {
        let neg = b[i].is_negative();
        let mut row: Vec<Rational> = Vec::with_capacity(ncols + m + 1);
        for v in &a[i] {
            row.push(if neg { -v } else { v.clone() });
        }
        for k in 0..m {
            row.push(if k == i {
                Rational::one()
            } else {
                Rational::zero()
            });
        }
        row.push(if neg { -&b[i] } else { b[i].clone() });
        if neg {
            signs[i] = -Rational::one();
        }
        rows.push(row);
    }
    let mut t = Tableau {
        rows,
        basis: (ncols..ncols + m).collect(),
        ncols,
        m,
    };

    // Phase I: maximize minus the sum of artificials.
    let mut phase1 = vec![Rational::zero(); ncols + m];
    for v in phase1[ncols..].iter_mut() {
        *v = -Rational::one();
    }
    t.optimize(&phase1, ncols + m);
    if (0..t.rows.len()).any(|i| t.basis[i] >= ncols && !t.rhs(i).is_zero()) {
        return StandardOutcome::Infeasible;
    }
    // Drive zero-level artificials out of the basis; drop redundant rows.
    let mut i = 0;
    while i < t.rows.len() {
        if t.basis[i] >= ncols {
            match (0..ncols).find(|&j| !t.rows[i][j].is_zero()) {
                Some(j) => {
                    t.pivot(i, j);
                    i += 1;
                }
                None => {
                    t.rows.remove(i);
                    t.basis.remove(i);
                }
            }
        } else {
            i += 1;
        }
    }

    // Phase II on structural columns only.
    let mut cost: Vec<Rational> = c.to_vec();
    cost.extend((0..m).map(|_| Rational::zero()));
    if let Some(q) = t.optimize(&cost, ncols) {
        let mut ray = vec![Rational::zero(); ncols];
        ray[q] = Rational::one();
        for (i, &bv) in t.basis.iter().enumerate() {
            if bv < ncols {
                ray[bv] = -&t.rows[i][q];
            }
        }
        return StandardOutcome::Unbounded { ray };
    }
    let x = t.primal();
    let value: Rational = x.iter().zip(c).map(|(xi, ci)| xi * ci).sum();
    let mut duals = vec![Rational::zero(); t.m];
    for (i, row) in t.rows.iter().enumerate() {
        let cb = &cost[t.basis[i]];
        if cb.is_zero() {
            continue;
        }
        for k in 0..t.m {
            let v = &row[ncols + k];
            if !v.is_zero() {
                duals[k] += &(cb * v);
            }
        }
    }
    for (d, s) in duals.iter_mut().zip(&signs) {
        *d *= s;
    }
    StandardOutcome::Optimal { x, duals, value }
}
