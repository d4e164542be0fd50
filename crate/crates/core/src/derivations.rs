//! Derivation algebras and Nikolayevsky (pre-Einstein) derivations.

use num_traits::Zero;

use crate::error::Error;
use crate::exactla::{nullspace, solve_affine, zero, RatMatrix, Rational, SparseEchelon};
use crate::lie::LieAlgebra;

/// Basis of `Der(g)` as `n x n` matrices acting on column vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationBasis {
    algebra_dim: usize,
    basis: Vec<RatMatrix>,
}

impl DerivationBasis {
    pub fn algebra_dim(&self) -> usize {
        self.algebra_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[RatMatrix] {
        &self.basis
    }

    /// Whether `m` lies in the span of the basis.
    pub fn contains(&self, m: &RatMatrix) -> bool {
        let vectors: Vec<Vec<Rational>> = self.basis.iter().map(|d| d.entries().to_vec()).collect();
        crate::exactla::in_span(&vectors, m.entries())
    }
}

// Unknown D_{r,c} (coefficient of x_r in D x_c) lives in column r*n + c.
fn var(n: usize, r: usize, c: usize) -> usize {
    r * n + c
}

/// `Der(g)`: the solution space of `D[x_i,x_j] = [D x_i, x_j] + [x_i, D x_j]`
/// in the `n^2` entries of `D`.
pub fn derivation_algebra(g: &LieAlgebra) -> DerivationBasis {
    let n = g.dim();
    let mut system = SparseEchelon::new(n * n);
    for i in 0..n {
        for j in i + 1..n {
            let xij = g.basis_bracket(i, j);
            // Component k of D[x_i,x_j] - [D x_i, x_j] - [x_i, D x_j].
            let mut rows: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); n];
            for (l, c) in &xij {
                for (k, row) in rows.iter_mut().enumerate() {
                    row.push((var(n, k, *l), c.clone()));
                }
            }
            for l in 0..n {
                for (k, c) in g.basis_bracket(l, j) {
                    rows[k].push((var(n, l, i), -c));
                }
                for (k, c) in g.basis_bracket(i, l) {
                    rows[k].push((var(n, l, j), -c));
                }
            }
            for row in rows {
                if !row.is_empty() {
                    system.insert(row);
                }
            }
        }
    }
    let basis = system
        .nullspace()
        .into_iter()
        .map(|v| RatMatrix::from_vec(n, n, v).expect("n*n unknowns"))
        .collect();
    DerivationBasis {
        algebra_dim: n,
        basis,
    }
}

/// Leibniz identity on all basis pairs.
pub fn is_derivation(g: &LieAlgebra, d: &RatMatrix) -> Result<bool, Error> {
    let n = g.dim();
    if d.rows() != n || d.cols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: d.rows().max(d.cols()),
        });
    }
    let columns: Vec<Vec<Rational>> = (0..n).map(|c| d.column(c)).collect();
    for i in 0..n {
        for j in i + 1..n {
            let xij = g.bracket(&g.basis_vector(i), &g.basis_vector(j))?;
            let lhs = d.mul_vec(&xij)?;
            let a = g.bracket(&columns[i], &g.basis_vector(j))?;
            let b = g.bracket(&g.basis_vector(i), &columns[j])?;
            if lhs
                .iter()
                .zip(a.iter().zip(&b))
                .any(|(l, (x, y))| *l != x + y)
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `(trace D / trace D^2) D` for a nonzero diagonal derivation `D`.
///
/// Diagonality stands in for semisimplicity with real eigenvalues. The
/// result is the Nikolayevsky derivation when `g` has real rank one.
pub fn nikolayevsky_rank_one(g: &LieAlgebra, d: &RatMatrix) -> Result<RatMatrix, Error> {
    if !d.is_diagonal() {
        return Err(Error::NotDiagonal);
    }
    if !is_derivation(g, d)? {
        return Err(Error::NotADerivation);
    }
    let tr_sq = d.trace_of_product(d)?;
    if tr_sq.is_zero() {
        return Err(Error::ZeroTraceSquare);
    }
    Ok(d.scale(&(d.trace() / tr_sq)))
}

/// `trace(D F) = trace(F)` for every `F` in a basis of `Der(g)`.
pub fn verify_pre_einstein(g: &LieAlgebra, d: &RatMatrix) -> Result<bool, Error> {
    verify_pre_einstein_with(&derivation_algebra(g), d)
}

/// As [`verify_pre_einstein`] with a precomputed `Der(g)`.
pub fn verify_pre_einstein_with(der: &DerivationBasis, d: &RatMatrix) -> Result<bool, Error> {
    for f in der.basis() {
        if d.trace_of_product(f)? != f.trace() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Basis of `{w : w_i + w_j = w_k for every nonzero c_ij^k}`; each `w` is the
/// diagonal of a derivation.
pub fn diagonal_derivations(g: &LieAlgebra) -> Vec<Vec<Rational>> {
    let n = g.dim();
    let triples: Vec<_> = g.triples().collect();
    if triples.is_empty() {
        return RatMatrix::identity(n).to_rows();
    }
    let mut m = RatMatrix::zeros(triples.len(), n);
    for (row, t) in triples.iter().enumerate() {
        m[(row, t.i)] += crate::exactla::one();
        m[(row, t.j)] += crate::exactla::one();
        m[(row, t.k)] -= crate::exactla::one();
    }
    nullspace(&m)
}

/// The unique diagonal `w` in the span of [`diagonal_derivations`] with
/// `sum_i w_i u_i = sum_i u_i` for every `u` in that span.
///
/// This is the pre-Einstein derivation whenever a maximal split torus of
/// `Der(g)` is diagonal in the stored basis; confirm with
/// [`verify_pre_einstein`]. Returns `None` for the zero torus.
pub fn pre_einstein_in_torus(g: &LieAlgebra) -> Option<Vec<Rational>> {
    let torus = diagonal_derivations(g);
    if torus.is_empty() {
        return None;
    }
    let s = torus.len();
    // w = sum_a coeff_a t_a, so the conditions read G coeff = (sum t_b).
    let mut gram = RatMatrix::zeros(s, s);
    let mut rhs = vec![zero(); s];
    for b in 0..s {
        rhs[b] = torus[b].iter().fold(zero(), |acc, x| acc + x);
        for a in 0..s {
            gram[(b, a)] = crate::exactla::dot(&torus[a], &torus[b]);
        }
    }
    // Gram of independent vectors is invertible.
    let coeffs = solve_affine(&gram, &rhs).ok()?.particular?;
    let n = g.dim();
    let mut w = vec![zero(); n];
    for (c, t) in coeffs.iter().zip(&torus) {
        for i in 0..n {
            w[i] += c * &t[i];
        }
    }
    Some(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{int, ints, rat};
    use crate::lie::Triple;

    fn heis3() -> LieAlgebra {
        LieAlgebra::new(3, [(Triple::one_based(1, 2, 3), int(1))]).unwrap()
    }

    #[test]
    fn heisenberg_der_is_six_dimensional() {
        // gl(2) on the generators, plus two maps into the centre.
        let der = derivation_algebra(&heis3());
        assert_eq!(der.dim(), 6);
        for d in der.basis() {
            assert!(is_derivation(&heis3(), d).unwrap());
        }
    }

    #[test]
    fn abelian_der_is_everything() {
        assert_eq!(derivation_algebra(&LieAlgebra::abelian(3)).dim(), 9);
        assert_eq!(diagonal_derivations(&LieAlgebra::abelian(3)).len(), 3);
    }

    #[test]
    fn heisenberg_torus_is_two_dimensional() {
        let torus = diagonal_derivations(&heis3());
        assert_eq!(torus.len(), 2);
        for w in &torus {
            assert_eq!(&w[0] + &w[1], w[2]);
        }
    }

    #[test]
    fn rank_one_formula_errors() {
        let g = heis3();
        assert_eq!(
            nikolayevsky_rank_one(&g, &RatMatrix::zeros(3, 3)),
            Err(Error::ZeroTraceSquare)
        );
        assert_eq!(
            nikolayevsky_rank_one(&g, &RatMatrix::identity(3)),
            Err(Error::NotADerivation)
        );
        let mut off = RatMatrix::zeros(3, 3);
        off[(2, 0)] = int(1);
        assert_eq!(nikolayevsky_rank_one(&g, &off), Err(Error::NotDiagonal));
        assert!(is_derivation(&g, &RatMatrix::identity(2)).is_err());
    }

    #[test]
    fn heisenberg_pre_einstein_from_torus() {
        // D_N = diag(2/3, 2/3, 4/3) for h_3.
        let w = pre_einstein_in_torus(&heis3()).unwrap();
        assert_eq!(w, vec![rat(2, 3), rat(2, 3), rat(4, 3)]);
        assert!(verify_pre_einstein(&heis3(), &RatMatrix::diagonal(&w)).unwrap());
        assert!(!verify_pre_einstein(&heis3(), &RatMatrix::diagonal(&ints(&[1, 1, 2]))).unwrap());
    }

    /// Dense version: apply `D -> D[x_i,x_j] - [D x_i, x_j] - [x_i, D x_j]`
    /// to each matrix unit and take the nullspace of the resulting columns.
    fn dense_der_dim(g: &LieAlgebra) -> usize {
        let n = g.dim();
        let mut m = RatMatrix::zeros(n * n * n * (n - 1) / 2, n * n);
        for r in 0..n {
            for c in 0..n {
                let mut unit = RatMatrix::zeros(n, n);
                unit[(r, c)] = int(1);
                let mut row = 0;
                for i in 0..n {
                    for j in i + 1..n {
                        let (xi, xj) = (g.basis_vector(i), g.basis_vector(j));
                        let lhs = unit.mul_vec(&g.bracket(&xi, &xj).unwrap()).unwrap();
                        let a = g.bracket(&unit.mul_vec(&xi).unwrap(), &xj).unwrap();
                        let b = g.bracket(&xi, &unit.mul_vec(&xj).unwrap()).unwrap();
                        for k in 0..n {
                            m[(row, var(n, r, c))] = &lhs[k] - &a[k] - &b[k];
                            row += 1;
                        }
                    }
                }
            }
        }
        nullspace(&m).len()
    }

    #[test]
    fn sparse_and_dense_systems_agree() {
        let algebras = [
            heis3(),
            crate::families::heisenberg(2).unwrap().0,
            crate::families::family_dim8(&int(2)).unwrap(),
            crate::families::family_dim8(&int(1)).unwrap(),
        ];
        for g in &algebras {
            assert_eq!(derivation_algebra(g).dim(), dense_der_dim(g));
        }
    }
}
