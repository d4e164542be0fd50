use std::collections::BTreeMap;

use num_traits::Zero;

use super::matrix::{vec_add, vec_scale, vec_sub, RatMatrix};
use super::rational::{one, zero, Rational};
use crate::error::Error;

/// Reduced row-echelon form and pivot columns. Row space is preserved.
pub fn rref(m: &RatMatrix) -> (RatMatrix, Vec<usize>) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            for j in c..cols {
                let tmp = a[(p, j)].clone();
                a[(p, j)] = a[(r, j)].clone();
                a[(r, j)] = tmp;
            }
        }
        let inv = a[(r, c)].recip();
        for j in c..cols {
            a[(r, j)] *= &inv;
        }
        for i in 0..rows {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let f = a[(i, c)].clone();
            for j in c..cols {
                if !a[(r, j)].is_zero() {
                    let delta = &f * &a[(r, j)];
                    a[(i, j)] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// Basis of `{x : m x = 0}`, one vector per free column (with a 1 in that
/// column).
pub fn nullspace(m: &RatMatrix) -> Vec<Vec<Rational>> {
    let (r, pivots) = rref(m);
    nullspace_from_rref(&r, &pivots)
}

fn nullspace_from_rref(r: &RatMatrix, pivots: &[usize]) -> Vec<Vec<Rational>> {
    let cols = r.cols();
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![zero(); cols];
            v[f] = one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r[(row, f)].clone();
            }
            v
        })
        .collect()
}

/// Incremental row-echelon accumulator over sparse rows.
///
/// Suited to tall, very sparse systems (such as the Leibniz conditions for
/// a derivation) where dense elimination would touch mostly zeros.
#[derive(Debug, Clone)]
pub struct SparseEchelon {
    cols: usize,
    // leading column -> row normalised so that the leading entry is 1
    rows: BTreeMap<usize, BTreeMap<usize, Rational>>,
}

impl SparseEchelon {
    pub fn new(cols: usize) -> Self {
        SparseEchelon {
            cols,
            rows: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` against the current pivots and keeps it if independent.
    /// Returns whether the rank grew.
    pub fn insert(&mut self, row: impl IntoIterator<Item = (usize, Rational)>) -> bool {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (c, v) in row {
            assert!(c < self.cols, "column {c} out of range");
            let e = acc.entry(c).or_insert_with(zero);
            *e += v;
        }
        acc.retain(|_, v| !v.is_zero());
        let mut start = 0;
        loop {
            let Some((&lead, lead_val)) = acc.range(start..).next() else {
                return false;
            };
            match self.rows.get(&lead) {
                Some(pivot_row) => {
                    let f = lead_val.clone();
                    for (c, v) in pivot_row {
                        let e = acc.entry(*c).or_insert_with(zero);
                        *e -= &f * v;
                        if e.is_zero() {
                            acc.remove(c);
                        }
                    }
                    start = lead + 1;
                }
                None => {
                    let inv = lead_val.recip();
                    for v in acc.values_mut() {
                        *v *= &inv;
                    }
                    // Earlier columns of `acc` are all zero at this point.
                    self.rows.insert(lead, acc);
                    return true;
                }
            }
        }
    }

    /// Basis of the common solution space of all inserted rows.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        // Back-substitute into fully reduced form, last pivot first.
        let mut reduced: BTreeMap<usize, BTreeMap<usize, Rational>> = BTreeMap::new();
        for (&lead, row) in self.rows.iter().rev() {
            let mut acc = row.clone();
            let later: Vec<usize> = acc.range(lead + 1..).map(|(c, _)| *c).collect();
            for c in later {
                if let Some(pivot_row) = reduced.get(&c) {
                    let f = acc[&c].clone();
                    for (cc, v) in pivot_row {
                        let e = acc.entry(*cc).or_insert_with(zero);
                        *e -= &f * v;
                        if e.is_zero() {
                            acc.remove(cc);
                        }
                    }
                }
            }
            reduced.insert(lead, acc);
        }
        (0..self.cols)
            .filter(|f| !reduced.contains_key(f))
            .map(|f| {
                let mut v = vec![zero(); self.cols];
                v[f] = one();
                for (&p, row) in &reduced {
                    if let Some(x) = row.get(&f) {
                        v[p] = -x.clone();
                    }
                }
                v
            })
            .collect()
    }
}

/// Solution set `{particular + span(nullspace_basis)}` of a linear system,
/// or an inconsistency marker.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSolutionSet {
    pub particular: Option<Vec<Rational>>,
    pub nullspace_basis: Vec<Vec<Rational>>,
}

impl AffineSolutionSet {
    pub fn is_consistent(&self) -> bool {
        self.particular.is_some()
    }

    pub fn dimension(&self) -> Option<usize> {
        self.particular.as_ref().map(|_| self.nullspace_basis.len())
    }

    /// `particular + sum coeffs[i] * nullspace_basis[i]`.
    pub fn point(&self, coeffs: &[Rational]) -> Option<Vec<Rational>> {
        let mut p = self.particular.clone()?;
        assert_eq!(coeffs.len(), self.nullspace_basis.len());
        for (c, w) in coeffs.iter().zip(&self.nullspace_basis) {
            p = vec_add(&p, &vec_scale(w, c));
        }
        Some(p)
    }

    /// Exact membership test.
    pub fn contains(&self, v: &[Rational]) -> bool {
        match &self.particular {
            None => false,
            Some(p) => p.len() == v.len() && in_span(&self.nullspace_basis, &vec_sub(v, p)),
        }
    }

    /// Bidirectional set equality: each particular lies in the other set and
    /// the direction spaces coincide.
    pub fn same_set(&self, other: &AffineSolutionSet) -> bool {
        match (&self.particular, &other.particular) {
            (None, None) => true,
            (Some(p), Some(_)) => {
                other.contains(p)
                    && other.particular.as_ref().is_some_and(|q| self.contains(q))
                    && self.nullspace_basis.len() == other.nullspace_basis.len()
                    && self
                        .nullspace_basis
                        .iter()
                        .all(|w| in_span(&other.nullspace_basis, w))
                    && other
                        .nullspace_basis
                        .iter()
                        .all(|w| in_span(&self.nullspace_basis, w))
            }
            _ => false,
        }
    }
}

/// Whether `v` is a linear combination of `basis`.
pub fn in_span(basis: &[Vec<Rational>], v: &[Rational]) -> bool {
    if v.iter().all(Zero::is_zero) {
        return true;
    }
    if basis.is_empty() {
        return false;
    }
    let a = RatMatrix::from_rows(basis.to_vec())
        .expect("ragged basis")
        .transpose();
    solve_affine(&a, v)
        .map(|s| s.is_consistent())
        .unwrap_or(false)
}

/// Exact solution set of `a x = b`.
pub fn solve_affine(a: &RatMatrix, b: &[Rational]) -> Result<AffineSolutionSet, Error> {
    if a.rows() != b.len() {
        return Err(Error::DimensionMismatch {
            expected: a.rows(),
            found: b.len(),
        });
    }
    let n = a.cols();
    let mut aug = RatMatrix::zeros(a.rows(), n + 1);
    for r in 0..a.rows() {
        for c in 0..n {
            aug[(r, c)] = a[(r, c)].clone();
        }
        aug[(r, n)] = b[r].clone();
    }
    let (r, pivots) = rref(&aug);
    let coeff_pivots: Vec<usize> = pivots.iter().copied().filter(|&p| p < n).collect();
    let coeff_part = r.block(0, r.rows(), 0, n);
    let nullspace_basis = nullspace_from_rref(&coeff_part, &coeff_pivots);
    if pivots.last() == Some(&n) {
        return Ok(AffineSolutionSet {
            particular: None,
            nullspace_basis,
        });
    }
    let mut particular = vec![zero(); n];
    for (row, &p) in coeff_pivots.iter().enumerate() {
        particular[p] = r[(row, n)].clone();
    }
    Ok(AffineSolutionSet {
        particular: Some(particular),
        nullspace_basis,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{int, ints, rat};

    #[test]
    fn rref_identity_and_rank_one() {
        let id = RatMatrix::identity(2);
        assert_eq!(rref(&id), (id.clone(), vec![0, 1]));
        let m = RatMatrix::from_i64_rows(&[&[1, 2], &[2, 4]]);
        let (r, p) = rref(&m);
        assert_eq!(r, RatMatrix::from_i64_rows(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn identity_system() {
        let s = solve_affine(&RatMatrix::identity(3), &ints(&[1, 0, 0])).unwrap();
        assert_eq!(s.particular, Some(ints(&[1, 0, 0])));
        assert!(s.nullspace_basis.is_empty());
    }

    #[test]
    fn inconsistent_system() {
        let a = RatMatrix::from_i64_rows(&[&[1, 1], &[1, 1]]);
        let s = solve_affine(&a, &ints(&[1, 2])).unwrap();
        assert!(!s.is_consistent());
        assert!(!s.contains(&ints(&[1, 0])));
    }

    #[test]
    fn dimension_mismatch() {
        assert!(solve_affine(&RatMatrix::identity(2), &ints(&[1])).is_err());
    }

    #[test]
    fn sparse_echelon_matches_dense() {
        let m = RatMatrix::from_i64_rows(&[
            &[1, 2, 0, -1, 3],
            &[2, 4, 1, 0, 0],
            &[3, 6, 1, -1, 3],
            &[0, 0, 0, 0, 0],
            &[0, 0, 2, 4, -12],
        ]);
        let mut e = SparseEchelon::new(5);
        for r in 0..m.rows() {
            e.insert(m.row(r).iter().cloned().enumerate());
        }
        assert_eq!(e.rank(), m.rank());
        assert_eq!(e.nullspace(), nullspace(&m));
        for v in e.nullspace() {
            assert!(m.mul_vec(&v).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn same_set_detects_shifted_particular() {
        let a = RatMatrix::from_i64_rows(&[&[1, 1]]);
        let s = solve_affine(&a, &[rat(1, 2)]).unwrap();
        let alt = AffineSolutionSet {
            particular: Some(vec![int(0), rat(1, 2)]),
            nullspace_basis: vec![ints(&[2, -2])],
        };
        assert!(s.same_set(&alt));
        let wrong = AffineSolutionSet {
            particular: Some(vec![int(1), rat(1, 2)]),
            nullspace_basis: vec![ints(&[1, -1])],
        };
        assert!(!s.same_set(&wrong));
    }
}
