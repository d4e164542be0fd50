//! Ricci curvature of inner products that are diagonal in the stored basis.
//!
//! With `q_a = |x_a|^2` and the basis orthogonal, the Ricci form is
//!
//! ```text
//! ric(x_a, x_b) = -1/2 sum_{i,k} c_ai^k c_bi^k q_k / q_i
//!               + 1/4 sum_{i,j} c_ij^a c_ij^b q_a q_b / (q_i q_j)
//! ```
//!
//! which keeps every quantity rational. The Ricci endomorphism satisfies
//! `Q Ric = R`, so `Ric_ab = R_ab / q_a`.

use num_traits::{Signed, Zero};

use crate::derivations::derivation_algebra;
use crate::error::Error;
use crate::exactla::{rat, solve_affine, zero, RatMatrix, Rational};
use crate::lie::LieAlgebra;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalMetric {
    q: Vec<Rational>,
}

impl DiagonalMetric {
    pub fn new(q: Vec<Rational>) -> Result<Self, Error> {
        if q.iter().all(Signed::is_positive) {
            Ok(DiagonalMetric { q })
        } else {
            Err(Error::NonPositiveMetric)
        }
    }

    pub fn identity(n: usize) -> Self {
        DiagonalMetric {
            q: vec![rat(1, 1); n],
        }
    }

    pub fn dim(&self) -> usize {
        self.q.len()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.q
    }

    pub fn matrix(&self) -> RatMatrix {
        RatMatrix::diagonal(&self.q)
    }
}

fn check_dim(g: &LieAlgebra, metric: &DiagonalMetric) -> Result<(), Error> {
    if g.dim() == metric.dim() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected: g.dim(),
            found: metric.dim(),
        })
    }
}

/// Symmetric matrix `R_ab = ric(x_a, x_b)`.
pub fn ricci_form(g: &LieAlgebra, metric: &DiagonalMetric) -> Result<RatMatrix, Error> {
    check_dim(g, metric)?;
    let n = g.dim();
    let q = metric.entries();
    let mut r = RatMatrix::zeros(n, n);
    let half = rat(1, 2);

    // -1/2 term: for fixed i, the vectors [x_a, x_i] weighted by q.
    for i in 0..n {
        let cols: Vec<Vec<(usize, Rational)>> = (0..n).map(|a| g.basis_bracket(a, i)).collect();
        for a in 0..n {
            for b in a..n {
                let mut s = zero();
                for (k, ca) in &cols[a] {
                    for (kb, cb) in &cols[b] {
                        if k == kb {
                            s += ca * cb * &q[*k];
                        }
                    }
                }
                if !s.is_zero() {
                    let delta = &half * s / &q[i];
                    r[(a, b)] -= delta;
                }
            }
        }
    }

    // +1/4 term over ordered pairs (i, j), i.e. twice each pair i < j.
    let pairs: std::collections::BTreeSet<(usize, usize)> =
        g.triples().map(|t| (t.i, t.j)).collect();
    for (i, j) in pairs {
        let w = &half / (&q[i] * &q[j]);
        let image = g.basis_bracket(i, j);
        for (a, ca) in &image {
            for (b, cb) in &image {
                if a <= b {
                    r[(*a, *b)] += &w * ca * &q[*a] * cb * &q[*b];
                }
            }
        }
    }
    for a in 0..n {
        for b in 0..a {
            r[(a, b)] = r[(b, a)].clone();
        }
    }
    Ok(r)
}

/// `Ric = Q^{-1} R`.
pub fn ricci_endomorphism(g: &LieAlgebra, metric: &DiagonalMetric) -> Result<RatMatrix, Error> {
    let mut r = ricci_form(g, metric)?;
    let n = g.dim();
    for a in 0..n {
        for b in 0..n {
            r[(a, b)] /= &metric.entries()[a];
        }
    }
    Ok(r)
}

/// `Ric = beta Id + D` with `D` a derivation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolitonMetric {
    pub beta: Rational,
    pub derivation: RatMatrix,
}

/// Decides whether `Ric` lies in `span(Der(g) ∪ {Id})`. When `Id` is itself a
/// derivation (only for abelian `g`) `beta` is taken to be 0.
pub fn soliton_metric_check(
    g: &LieAlgebra,
    metric: &DiagonalMetric,
) -> Result<Option<SolitonMetric>, Error> {
    let ric = ricci_endomorphism(g, metric)?;
    let n = g.dim();
    let der = derivation_algebra(g);
    // Columns: derivation basis, then Id last so it becomes free when
    // dependent on Der(g).
    let mut columns: Vec<&[Rational]> = der.basis().iter().map(RatMatrix::entries).collect();
    let id = RatMatrix::identity(n);
    columns.push(id.entries());
    let mut a = RatMatrix::zeros(n * n, columns.len());
    for (c, col) in columns.iter().enumerate() {
        for (r, v) in col.iter().enumerate() {
            if !v.is_zero() {
                a[(r, c)] = v.clone();
            }
        }
    }
    let solution = solve_affine(&a, ric.entries())?;
    let Some(coeffs) = solution.particular else {
        return Ok(None);
    };
    let beta = coeffs.last().cloned().unwrap_or_else(zero);
    let derivation = ric.sub(&id.scale(&beta))?;
    Ok(Some(SolitonMetric { beta, derivation }))
}
