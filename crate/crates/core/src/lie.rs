//! Lie algebras given by structure constants on an ordered basis.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::Error;
use crate::exactla::{rref, zero, RatMatrix, Rational};

/// Basis triple `(i, j, k)` naming the structure constant `c_ij^k`, stored
/// 0-based with `i < j`.
///
/// The ordering is the index-set convention: by `k`, then `i`, then `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Triple {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

impl Triple {
    pub const fn new(i: usize, j: usize, k: usize) -> Self {
        Triple { i, j, k }
    }

    /// From the 1-based labels used in print (`x_1, ..., x_n`).
    pub const fn one_based(i: usize, j: usize, k: usize) -> Self {
        Triple {
            i: i - 1,
            j: j - 1,
            k: k - 1,
        }
    }

    pub fn to_one_based(self) -> (usize, usize, usize) {
        (self.i + 1, self.j + 1, self.k + 1)
    }
}

impl Ord for Triple {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.k, self.i, self.j).cmp(&(other.k, other.i, other.j))
    }
}

impl PartialOrd for Triple {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j, k) = self.to_one_based();
        write!(f, "({i},{j},{k})")
    }
}

/// Nonzero value of `[[x_i,x_j],x_k] + [[x_j,x_k],x_i] + [[x_k,x_i],x_j]`
/// for a basis triple `i < j < k` (0-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiDefect {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub defect: Vec<Rational>,
}

impl fmt::Display for JacobiDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Jacobi fails on (x{}, x{}, x{})",
            self.i + 1,
            self.j + 1,
            self.k + 1
        )
    }
}

/// Finite-dimensional Lie algebra over Q on the basis `x_0, ..., x_{n-1}`.
///
/// Only constants with `i < j` are stored; `c_ji^k = -c_ij^k` is implied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    constants: BTreeMap<Triple, Rational>,
    // (i, j) with i < j -> [x_i, x_j] as sparse (k, c) pairs
    by_pair: BTreeMap<(usize, usize), Vec<(usize, Rational)>>,
}

impl LieAlgebra {
    /// Builds an algebra and rejects it unless the Jacobi identity holds.
    pub fn new(
        dim: usize,
        constants: impl IntoIterator<Item = (Triple, Rational)>,
    ) -> Result<Self, Error> {
        let g = Self::without_jacobi_check(dim, constants)?;
        let defects = g.jacobi_check();
        if defects.is_empty() {
            Ok(g)
        } else {
            Err(Error::JacobiViolation(defects))
        }
    }

    /// Builds a skew-symmetric bracket without checking Jacobi. Meant for
    /// diagnosing candidate structure constants.
    pub fn without_jacobi_check(
        dim: usize,
        constants: impl IntoIterator<Item = (Triple, Rational)>,
    ) -> Result<Self, Error> {
        let mut map = BTreeMap::new();
        for (t, c) in constants {
            if t.i >= dim || t.j >= dim || t.k >= dim {
                return Err(Error::IndexOutOfRange { triple: t, dim });
            }
            if t.i >= t.j {
                return Err(Error::IndexOrder { triple: t });
            }
            if c.is_zero() {
                return Err(Error::ZeroConstant { triple: t });
            }
            if map.insert(t, c).is_some() {
                return Err(Error::DuplicateTriple { triple: t });
            }
        }
        let mut by_pair: BTreeMap<(usize, usize), Vec<(usize, Rational)>> = BTreeMap::new();
        for (t, c) in &map {
            by_pair
                .entry((t.i, t.j))
                .or_default()
                .push((t.k, c.clone()));
        }
        Ok(LieAlgebra {
            dim,
            constants: map,
            by_pair,
        })
    }

    pub fn abelian(dim: usize) -> Self {
        LieAlgebra {
            dim,
            constants: BTreeMap::new(),
            by_pair: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_abelian(&self) -> bool {
        self.constants.is_empty()
    }

    /// Nonzero constants in index-set order.
    pub fn constants(&self) -> impl Iterator<Item = (&Triple, &Rational)> {
        self.constants.iter()
    }

    pub fn triples(&self) -> impl Iterator<Item = Triple> + '_ {
        self.constants.keys().copied()
    }

    /// `c_ij^k` for any `i, j`, applying skew-symmetry.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> Rational {
        match i.cmp(&j) {
            Ordering::Equal => zero(),
            Ordering::Less => self
                .constants
                .get(&Triple::new(i, j, k))
                .cloned()
                .unwrap_or_else(zero),
            Ordering::Greater => -self
                .constants
                .get(&Triple::new(j, i, k))
                .cloned()
                .unwrap_or_else(zero),
        }
    }

    /// `[x_i, x_j]` as sparse `(k, c)` pairs.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vec<(usize, Rational)> {
        match i.cmp(&j) {
            Ordering::Equal => Vec::new(),
            Ordering::Less => self.by_pair.get(&(i, j)).cloned().unwrap_or_default(),
            Ordering::Greater => self
                .by_pair
                .get(&(j, i))
                .map(|v| v.iter().map(|(k, c)| (*k, -c.clone())).collect())
                .unwrap_or_default(),
        }
    }

    /// Bilinear extension of the stored bracket.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>, Error> {
        for v in [x, y] {
            if v.len() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    found: v.len(),
                });
            }
        }
        let mut out = vec![zero(); self.dim];
        for ((i, j), terms) in &self.by_pair {
            let coeff = &x[*i] * &y[*j] - &x[*j] * &y[*i];
            if coeff.is_zero() {
                continue;
            }
            for (k, c) in terms {
                out[*k] += &coeff * c;
            }
        }
        Ok(out)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![zero(); self.dim];
        v[i] = crate::exactla::one();
        v
    }

    /// Basis triples `i < j < k` on which the Jacobi identity fails.
    pub fn jacobi_check(&self) -> Vec<JacobiDefect> {
        let n = self.dim;
        let e: Vec<Vec<Rational>> = (0..n).map(|i| self.basis_vector(i)).collect();
        let br = |a: &[Rational], b: &[Rational]| self.bracket(a, b).expect("length checked");
        let mut defects = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let xij = br(&e[i], &e[j]);
                for k in j + 1..n {
                    let t1 = br(&xij, &e[k]);
                    let t2 = br(&br(&e[j], &e[k]), &e[i]);
                    let t3 = br(&br(&e[k], &e[i]), &e[j]);
                    let sum: Vec<Rational> = (0..n).map(|a| &t1[a] + &t2[a] + &t3[a]).collect();
                    if sum.iter().any(|c| !c.is_zero()) {
                        defects.push(JacobiDefect {
                            i,
                            j,
                            k,
                            defect: sum,
                        });
                    }
                }
            }
        }
        defects
    }

    /// Matrix of `ad_x`: column `j` is `[x, x_j]`.
    pub fn ad_matrix(&self, x: &[Rational]) -> Result<RatMatrix, Error> {
        let mut m = RatMatrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.bracket(x, &self.basis_vector(j))?;
            m.set_column(j, &col);
        }
        Ok(m)
    }

    pub fn ad_rank(&self, x: &[Rational]) -> Result<usize, Error> {
        Ok(self.ad_matrix(x)?.rank())
    }

    /// Span of `[x, w]` over basis vectors `x` and `w` in `w_basis`.
    fn bracket_span(&self, w_basis: &[Vec<Rational>]) -> Subspace {
        let mut vectors = Vec::new();
        for a in 0..self.dim {
            let ea = self.basis_vector(a);
            for w in w_basis {
                vectors.push(self.bracket(&ea, w).expect("ambient dimension"));
            }
        }
        Subspace::from_spanning(self.dim, vectors)
    }

    /// `g^(1) = g`, `g^(j+1) = [g, g^(j)]`, ending at the first zero term.
    /// If the series stalls at a nonzero term the list ends there instead.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let mut series = vec![Subspace::full(self.dim)];
        loop {
            let current = series.last().expect("non-empty");
            if current.dim() == 0 {
                return series;
            }
            let next = self.bracket_span(current.basis());
            if next.dim() == current.dim() {
                return series;
            }
            series.push(next);
        }
    }

    /// `(dim g^(j) / g^(j+1))` for `j = 1..r`.
    pub fn nilpotency_type(&self) -> Result<Vec<usize>, Error> {
        let series = self.lower_central_series();
        let last = series.last().expect("non-empty").dim();
        if last != 0 {
            return Err(Error::NotNilpotent(last));
        }
        Ok(series.windows(2).map(|w| w[0].dim() - w[1].dim()).collect())
    }

    pub fn nilpotency_step(&self) -> Result<usize, Error> {
        self.nilpotency_type().map(|t| t.len())
    }

    pub fn commutator_ideal(&self) -> Subspace {
        self.bracket_span(Subspace::full(self.dim).basis())
    }

    /// `{x : [x, w] = 0 for all w in W}`.
    pub fn centralizer(&self, w: &Subspace) -> Subspace {
        // x -> [x, w] is linear in x: column a holds [x_a, w].
        let n = self.dim;
        let blocks: Vec<RatMatrix> = w
            .basis()
            .iter()
            .map(|wv| {
                let mut m = RatMatrix::zeros(n, n);
                for a in 0..n {
                    let col = self
                        .bracket(&self.basis_vector(a), wv)
                        .expect("ambient dimension");
                    m.set_column(a, &col);
                }
                m
            })
            .collect();
        if blocks.is_empty() {
            return Subspace::full(n);
        }
        let stacked = RatMatrix::vstack(&blocks).expect("equal widths");
        Subspace::from_spanning(n, crate::exactla::nullspace(&stacked))
    }

    pub fn center(&self) -> Subspace {
        self.centralizer(&Subspace::full(self.dim))
    }

    /// Whether `[V_a, V_b] ⊆ V_{a+b}` for the weight spaces of `grading`.
    pub fn verify_grading(&self, grading: &Grading) -> bool {
        grading.weights.len() == self.dim
            && self
                .constants
                .keys()
                .all(|t| grading.weights[t.i] + grading.weights[t.j] == grading.weights[t.k])
    }
}

/// Linear subspace of `Q^n`, stored by its RREF basis so equality is exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Rational>>,
}

impl Subspace {
    pub fn from_spanning(ambient_dim: usize, vectors: Vec<Vec<Rational>>) -> Self {
        if vectors.is_empty() {
            return Self::zero(ambient_dim);
        }
        let m = RatMatrix::from_rows(vectors).expect("vectors of one length");
        assert_eq!(
            m.cols(),
            ambient_dim,
            "vector length differs from ambient dimension"
        );
        let (r, pivots) = rref(&m);
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace { ambient_dim, basis }
    }

    /// Span of the given basis vectors `x_i` (0-based).
    pub fn coordinate(ambient_dim: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let vectors = indices
            .into_iter()
            .map(|i| {
                let mut v = vec![zero(); ambient_dim];
                v[i] = crate::exactla::one();
                v
            })
            .collect();
        Self::from_spanning(ambient_dim, vectors)
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self::coordinate(ambient_dim, 0..ambient_dim)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        v.len() == self.ambient_dim && crate::exactla::in_span(&self.basis, v)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }
}

/// Positive integer weight per basis vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grading {
    weights: Vec<u32>,
}

impl Grading {
    pub fn new(weights: Vec<u32>) -> Result<Self, Error> {
        if weights.contains(&0) {
            return Err(Error::InvalidGrading {
                expected: weights.len(),
                found: weights.len(),
            });
        }
        Ok(Grading { weights })
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    /// The diagonal derivation acting by `w` on the weight-`w` space.
    pub fn derivation(&self) -> RatMatrix {
        let diag: Vec<Rational> = self
            .weights
            .iter()
            .map(|&w| crate::exactla::int(i64::from(w)))
            .collect();
        RatMatrix::diagonal(&diag)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{int, ints, rat};

    fn heis3() -> LieAlgebra {
        LieAlgebra::new(3, [(Triple::one_based(1, 2, 3), int(1))]).unwrap()
    }

    #[test]
    fn triple_order_is_k_then_i_then_j() {
        let mut ts = [
            Triple::one_based(3, 5, 8),
            Triple::one_based(2, 4, 8),
            Triple::one_based(1, 2, 6),
            Triple::one_based(1, 6, 8),
        ];
        ts.sort();
        let labels: Vec<String> = ts.iter().map(ToString::to_string).collect();
        assert_eq!(labels, ["(1,2,6)", "(1,6,8)", "(2,4,8)", "(3,5,8)"]);
    }

    #[test]
    fn construction_errors() {
        let c = int(1);
        assert!(matches!(
            LieAlgebra::new(3, [(Triple::new(1, 0, 2), c.clone())]),
            Err(Error::IndexOrder { .. })
        ));
        assert!(matches!(
            LieAlgebra::new(3, [(Triple::new(0, 1, 3), c.clone())]),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            LieAlgebra::new(3, [(Triple::new(0, 1, 2), zero())]),
            Err(Error::ZeroConstant { .. })
        ));
        assert!(matches!(
            LieAlgebra::new(
                3,
                [(Triple::new(0, 1, 2), c.clone()), (Triple::new(0, 1, 2), c)]
            ),
            Err(Error::DuplicateTriple { .. })
        ));
    }

    #[test]
    fn bracket_skew_and_length_check() {
        let g = heis3();
        let x = ints(&[1, 2, 0]);
        let y = vec![rat(1, 2), int(-1), int(5)];
        let xy = g.bracket(&x, &y).unwrap();
        let yx = g.bracket(&y, &x).unwrap();
        assert_eq!(xy, ints(&[0, 0, -2]));
        assert_eq!(yx, ints(&[0, 0, 2]));
        assert!(g.bracket(&x, &x).unwrap().iter().all(Zero::is_zero));
        assert!(g.bracket(&ints(&[1]), &y).is_err());
    }

    #[test]
    fn jacobi_defect_on_perturbed_filiform() {
        // [x1,x2]=x3, [x3,x1]=x4 (stored as [x1,x3]=-x4), [x2,x3]=x4,
        // [x1,x4]=x5, plus the bad relation [x2,x4]=x3.
        // On (x1,x2,x3): [[x1,x2],x3] = 0, [[x2,x3],x1] = [x4,x1] = -x5,
        // [[x3,x1],x2] = [x4,x2] = -x3, so the defect is -x3 - x5.
        let g = LieAlgebra::without_jacobi_check(
            5,
            [
                (Triple::one_based(1, 2, 3), int(1)),
                (Triple::one_based(1, 3, 4), int(-1)),
                (Triple::one_based(2, 3, 4), int(1)),
                (Triple::one_based(1, 4, 5), int(1)),
                (Triple::one_based(2, 4, 3), int(1)),
            ],
        )
        .unwrap();
        let defects = g.jacobi_check();
        assert!(!defects.is_empty());
        let first = &defects[0];
        assert_eq!((first.i, first.j, first.k), (0, 1, 2));
        assert_eq!(first.defect, ints(&[0, 0, -1, 0, -1]));
        assert!(matches!(
            LieAlgebra::new(5, g.constants().map(|(t, c)| (*t, c.clone()))),
            Err(Error::JacobiViolation(_))
        ));
    }

    #[test]
    fn abelian_basics() {
        let g = LieAlgebra::abelian(4);
        let dims: Vec<usize> = g.lower_central_series().iter().map(Subspace::dim).collect();
        assert_eq!(dims, [4, 0]);
        assert_eq!(g.center(), Subspace::full(4));
        assert_eq!(g.nilpotency_type().unwrap(), [4]);
    }

    #[test]
    fn not_nilpotent() {
        // Affine algebra of the line: [x1,x2] = x2.
        let g = LieAlgebra::new(2, [(Triple::new(0, 1, 1), int(1))]).unwrap();
        assert_eq!(g.nilpotency_type(), Err(Error::NotNilpotent(1)));
    }

    #[test]
    fn heisenberg_invariants() {
        let g = heis3();
        assert_eq!(g.center(), Subspace::coordinate(3, [2]));
        assert_eq!(g.commutator_ideal(), Subspace::coordinate(3, [2]));
        assert_eq!(g.ad_rank(&ints(&[1, 0, 0])).unwrap(), 1);
        assert_eq!(g.ad_rank(&ints(&[0, 0, 0])).unwrap(), 0);
        assert!(g.verify_grading(&Grading::new(vec![1, 1, 2]).unwrap()));
        assert!(!g.verify_grading(&Grading::new(vec![1, 1, 1]).unwrap()));
        assert!(!g.verify_grading(&Grading::new(vec![1, 1]).unwrap()));
        assert!(Grading::new(vec![1, 0]).is_err());
    }

    #[test]
    fn subspace_equality_is_basis_independent() {
        let a = Subspace::from_spanning(3, vec![ints(&[1, 1, 0]), ints(&[0, 1, 0])]);
        let b = Subspace::coordinate(3, [0, 1]);
        assert_eq!(a, b);
        assert!(a.contains(&ints(&[5, -3, 0])));
        assert!(!a.contains(&ints(&[0, 0, 1])));
    }
}
