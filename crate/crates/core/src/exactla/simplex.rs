//! Dense two-phase simplex over exact rationals with Bland's rule.
//!
//! The only consumer is the strict-positivity question "does `A v = b` have
//! a solution with every component `> 0`?". It is posed as
//!
//! ```text
//! maximize t  subject to  A v = b,  v_i - t >= 0,  0 <= t <= 1
//! ```
//!
//! and a positive solution exists iff the optimum `t*` is positive.

use num_traits::{Signed, Zero};

use super::matrix::RatMatrix;
use super::rational::{one, zero, Rational};
use super::solve::rref;
use crate::error::Error;

/// Result of a standard-form LP `max c.x, A x = b, x >= 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal {
        x: Vec<Rational>,
        value: Rational,
        pivots: usize,
    },
    Infeasible {
        pivots: usize,
    },
    Unbounded {
        pivots: usize,
    },
}

/// Outcome of the positivity LP.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PositivityStatus {
    /// `A v = b` has no solution at all.
    Inconsistent,
    /// `A v = b` is solvable but has no solution with `v >= 0`, so the LP
    /// (which needs `v >= t >= 0`) is infeasible.
    NoNonnegativeSolution,
    /// LP optimum `t*` and the optimal `v`.
    Optimal { t_star: Rational, v: Vec<Rational> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositivityLp {
    pub status: PositivityStatus,
    pub pivots: usize,
}

impl PositivityLp {
    /// The optimal `v` when it is strictly positive.
    pub fn witness(&self) -> Option<&[Rational]> {
        match &self.status {
            PositivityStatus::Optimal { t_star, v } if t_star.is_positive() => Some(v),
            _ => None,
        }
    }

    pub fn t_star(&self) -> Option<&Rational> {
        match &self.status {
            PositivityStatus::Optimal { t_star, .. } => Some(t_star),
            _ => None,
        }
    }
}

/// A vector `v` with `a v = b` and every component strictly positive, if one
/// exists.
pub fn positive_solution(a: &RatMatrix, b: &[Rational]) -> Result<Option<Vec<Rational>>, Error> {
    Ok(positivity_lp(a, b)?.witness().map(<[Rational]>::to_vec))
}

/// Solves the capped positivity LP and reports the optimum.
pub fn positivity_lp(a: &RatMatrix, b: &[Rational]) -> Result<PositivityLp, Error> {
    if a.rows() != b.len() {
        return Err(Error::DimensionMismatch {
            expected: a.rows(),
            found: b.len(),
        });
    }
    let n = a.cols();

    // Independent rows of [A | b]; an inconsistent system has no solution.
    let mut aug = RatMatrix::zeros(a.rows(), n + 1);
    for r in 0..a.rows() {
        for c in 0..n {
            aug[(r, c)] = a[(r, c)].clone();
        }
        aug[(r, n)] = b[r].clone();
    }
    let (reduced, pivots) = rref(&aug);
    if pivots.last() == Some(&n) {
        return Ok(PositivityLp {
            status: PositivityStatus::Inconsistent,
            pivots: 0,
        });
    }
    let m = pivots.len();

    // Substitute v = s + t*1 with s >= 0, and add the cap t + r = 1.
    // Variables: s_0..s_{n-1}, t, r.
    let vars = n + 2;
    let t_col = n;
    let r_col = n + 1;
    let mut lp_a = RatMatrix::zeros(m + 1, vars);
    let mut lp_b = vec![zero(); m + 1];
    for row in 0..m {
        let mut row_sum = zero();
        for c in 0..n {
            lp_a[(row, c)] = reduced[(row, c)].clone();
            row_sum += &reduced[(row, c)];
        }
        lp_a[(row, t_col)] = row_sum;
        lp_b[row] = reduced[(row, n)].clone();
    }
    lp_a[(m, t_col)] = one();
    lp_a[(m, r_col)] = one();
    lp_b[m] = one();
    let mut objective = vec![zero(); vars];
    objective[t_col] = one();

    match maximize(&lp_a, &lp_b, &objective) {
        LpOutcome::Optimal { x, value, pivots } => {
            let t = x[t_col].clone();
            let v = (0..n).map(|i| &x[i] + &t).collect();
            Ok(PositivityLp {
                status: PositivityStatus::Optimal { t_star: value, v },
                pivots,
            })
        }
        LpOutcome::Infeasible { pivots } => Ok(PositivityLp {
            status: PositivityStatus::NoNonnegativeSolution,
            pivots,
        }),
        LpOutcome::Unbounded { .. } => unreachable!("t is capped at 1"),
    }
}

/// Two-phase dense simplex for `max c.x` subject to `a x = b`, `x >= 0`.
/// Bland's rule (lowest index entering and leaving) guarantees termination.
pub fn maximize(a: &RatMatrix, b: &[Rational], c: &[Rational]) -> LpOutcome {
    let (m, n) = (a.rows(), a.cols());
    assert_eq!(b.len(), m);
    assert_eq!(c.len(), n);

    // Tableau columns: x_0..x_{n-1}, artificials a_0..a_{m-1}, rhs.
    let width = n + m + 1;
    let rhs = n + m;
    let mut tab = RatMatrix::zeros(m, width);
    for i in 0..m {
        let flip = b[i].is_negative();
        for j in 0..n {
            tab[(i, j)] = if flip {
                -a[(i, j)].clone()
            } else {
                a[(i, j)].clone()
            };
        }
        tab[(i, n + i)] = one();
        tab[(i, rhs)] = if flip { -b[i].clone() } else { b[i].clone() };
    }
    let mut basis: Vec<usize> = (n..n + m).collect();
    let mut pivots = 0;

    // Phase 1: minimise the sum of artificials == maximise its negation.
    let mut phase1 = vec![zero(); n];
    phase1.resize(n + m, -one());
    if !run(&mut tab, &mut basis, &phase1, n + m, &mut pivots) {
        unreachable!("phase 1 is bounded");
    }
    let infeasibility: Rational = basis
        .iter()
        .enumerate()
        .filter(|(_, &v)| v >= n)
        .map(|(i, _)| tab[(i, rhs)].clone())
        .fold(zero(), |acc, x| acc + x);
    if !infeasibility.is_zero() {
        return LpOutcome::Infeasible { pivots };
    }

    // Drive zero-level artificials out of the basis where possible; rows
    // where no original column is nonzero are redundant.
    let mut redundant = vec![false; m];
    for i in 0..m {
        if basis[i] < n {
            continue;
        }
        match (0..n).find(|&j| !tab[(i, j)].is_zero()) {
            Some(j) => {
                pivot(&mut tab, &mut basis, i, j);
                pivots += 1;
            }
            None => redundant[i] = true,
        }
    }
    // Artificials never re-enter: zero their columns out of consideration.
    let mut phase2 = c.to_vec();
    phase2.extend(std::iter::repeat_n(zero(), m));
    for (i, &is_redundant) in redundant.iter().enumerate() {
        if is_redundant {
            for j in 0..width {
                tab[(i, j)] = zero();
            }
        }
    }
    if !run(&mut tab, &mut basis, &phase2, n, &mut pivots) {
        return LpOutcome::Unbounded { pivots };
    }

    let mut x = vec![zero(); n];
    for (i, &v) in basis.iter().enumerate() {
        if v < n && !redundant[i] {
            x[v] = tab[(i, rhs)].clone();
        }
    }
    let value = x.iter().zip(c).fold(zero(), |acc, (xi, ci)| acc + xi * ci);
    LpOutcome::Optimal { x, value, pivots }
}

/// Primal simplex iterations on the current basis. Only columns `< allowed`
/// may enter. Returns `false` if the objective is unbounded.
fn run(
    tab: &mut RatMatrix,
    basis: &mut [usize],
    objective: &[Rational],
    allowed: usize,
    pivots: &mut usize,
) -> bool {
    let m = tab.rows();
    let rhs = tab.cols() - 1;
    loop {
        // Reduced cost c_j - c_B B^-1 A_j; enter the lowest j with positive cost.
        let entering = (0..allowed).find(|&j| {
            if basis.contains(&j) {
                return false;
            }
            let mut reduced = objective[j].clone();
            for i in 0..m {
                let a = &tab[(i, j)];
                if !a.is_zero() {
                    reduced -= &objective[basis[i]] * a;
                }
            }
            reduced.is_positive()
        });
        let Some(j) = entering else {
            return true;
        };
        // Ratio test; ties go to the lowest basic variable index.
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..m {
            let a = &tab[(i, j)];
            if !a.is_positive() {
                continue;
            }
            let ratio = &tab[(i, rhs)] / a;
            let better = match &leave {
                None => true,
                Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        let Some((i, _)) = leave else {
            return false;
        };
        pivot(tab, basis, i, j);
        *pivots += 1;
    }
}

fn pivot(tab: &mut RatMatrix, basis: &mut [usize], row: usize, col: usize) {
    let width = tab.cols();
    let inv = tab[(row, col)].recip();
    for j in 0..width {
        tab[(row, j)] *= &inv;
    }
    for i in 0..tab.rows() {
        if i == row || tab[(i, col)].is_zero() {
            continue;
        }
        let f = tab[(i, col)].clone();
        for j in 0..width {
            if !tab[(row, j)].is_zero() {
                let delta = &f * &tab[(row, j)];
                tab[(i, j)] -= delta;
            }
        }
    }
    basis[row] = col;
}
