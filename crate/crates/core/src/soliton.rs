//! Root vectors, Gram matrices and the positive-solution soliton test for
//! algebras given in a nice basis.
//!
//! For every nonzero `c_ij^k` (`i < j`) the root vector is
//! `e_i + e_j - e_k`. When the Gram matrix `U` of these vectors has no entry
//! equal to 2, the algebra admits a nilsoliton inner product iff `U v = [1]`
//! has a solution with all entries positive.

use std::collections::BTreeSet;

use num_traits::{One, Signed};

use crate::error::Error;
use crate::exactla::{
    dot, int, positivity_lp, rat, solve_affine, AffineSolutionSet, PositivityLp, RatMatrix,
    Rational,
};
use crate::families::family_dim8;
use crate::lie::{LieAlgebra, Triple};

/// Ordered nonzero-constant triples of an algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexSet {
    dim: usize,
    triples: Vec<Triple>,
}

impl IndexSet {
    /// The triples of `g` in a caller-chosen order, which must be a
    /// permutation of the conventional one.
    pub fn from_enumeration(g: &LieAlgebra, triples: Vec<Triple>) -> Result<Self, Error> {
        let expected: BTreeSet<Triple> = g.triples().collect();
        let given: BTreeSet<Triple> = triples.iter().copied().collect();
        if expected.is_empty() {
            return Err(Error::EmptyIndexSet);
        }
        if given.len() != triples.len() || given != expected {
            return Err(Error::NotAnEnumeration);
        }
        Ok(IndexSet {
            dim: g.dim(),
            triples,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    pub fn triples(&self) -> &[Triple] {
        &self.triples
    }

    pub fn position(&self, t: Triple) -> Option<usize> {
        self.triples.iter().position(|&x| x == t)
    }

    pub fn root_vectors(&self) -> Vec<Vec<Rational>> {
        self.triples
            .iter()
            .map(|&t| root_vector(t, self.dim))
            .collect()
    }
}

/// `e_i + e_j - e_k` in `Q^n`.
pub fn root_vector(t: Triple, n: usize) -> Vec<Rational> {
    let mut v = vec![int(0); n];
    v[t.i] += int(1);
    v[t.j] += int(1);
    v[t.k] -= int(1);
    v
}

/// Nonzero constants ordered by `k`, then `i`, then `j`.
pub fn index_set(g: &LieAlgebra) -> Result<IndexSet, Error> {
    if g.is_abelian() {
        return Err(Error::EmptyIndexSet);
    }
    Ok(IndexSet {
        dim: g.dim(),
        triples: g.triples().collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramMatrix {
    pub index_set: IndexSet,
    pub u: RatMatrix,
}

impl GramMatrix {
    pub fn from_index_set(index_set: IndexSet) -> Self {
        let roots = index_set.root_vectors();
        let m = roots.len();
        let mut u = RatMatrix::zeros(m, m);
        for a in 0..m {
            for b in a..m {
                let d = dot(&roots[a], &roots[b]);
                u[(b, a)] = d.clone();
                u[(a, b)] = d;
            }
        }
        GramMatrix { index_set, u }
    }

    /// First entry equal to 2, as `(row, col)` with `row <= col`.
    pub fn entry_two(&self) -> Option<(usize, usize)> {
        let two = int(2);
        let m = self.u.rows();
        (0..m)
            .flat_map(|a| (a..m).map(move |b| (a, b)))
            .find(|&(a, b)| self.u[(a, b)] == two)
    }

    pub fn is_nice(&self) -> bool {
        self.entry_two().is_none()
    }
}

/// Gram matrix over the conventional index-set order.
pub fn gram_matrix(g: &LieAlgebra) -> Result<GramMatrix, Error> {
    Ok(GramMatrix::from_index_set(index_set(g)?))
}

/// Gram matrix over an explicit enumeration of the index set.
pub fn gram_matrix_for(g: &LieAlgebra, triples: Vec<Triple>) -> Result<GramMatrix, Error> {
    Ok(GramMatrix::from_index_set(IndexSet::from_enumeration(
        g, triples,
    )?))
}

pub fn is_nice(g: &LieAlgebra) -> Result<bool, Error> {
    Ok(gram_matrix(g)?.is_nice())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InapplicableReason {
    Abelian,
    /// `U[a][b] = 2` for the given index pair.
    GramEntryTwo {
        a: Triple,
        b: Triple,
    },
}

impl std::fmt::Display for InapplicableReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            InapplicableReason::Abelian => write!(f, "abelian"),
            InapplicableReason::GramEntryTwo { a, b } => {
                write!(f, "Gram matrix entry for {a} and {b} equals 2")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolitonVerdict {
    Soliton {
        gram: GramMatrix,
        witness: Vec<Rational>,
    },
    Nonsoliton {
        gram: GramMatrix,
        solutions: AffineSolutionSet,
        lp: PositivityLp,
    },
    Inapplicable(InapplicableReason),
}

impl SolitonVerdict {
    pub fn is_soliton(&self) -> bool {
        matches!(self, SolitonVerdict::Soliton { .. })
    }

    pub fn is_nonsoliton(&self) -> bool {
        matches!(self, SolitonVerdict::Nonsoliton { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            SolitonVerdict::Soliton { .. } => "Soliton",
            SolitonVerdict::Nonsoliton { .. } => "Nonsoliton",
            SolitonVerdict::Inapplicable(_) => "Inapplicable",
        }
    }

    pub fn gram(&self) -> Option<&GramMatrix> {
        match self {
            SolitonVerdict::Soliton { gram, .. } | SolitonVerdict::Nonsoliton { gram, .. } => {
                Some(gram)
            }
            SolitonVerdict::Inapplicable(_) => None,
        }
    }
}

/// Decides soliton existence from the Gram matrix of the stored basis.
pub fn soliton_test(g: &LieAlgebra) -> SolitonVerdict {
    match gram_matrix(g) {
        Ok(gram) => soliton_test_gram(gram),
        Err(_) => SolitonVerdict::Inapplicable(InapplicableReason::Abelian),
    }
}

/// As [`soliton_test`] on an already built Gram matrix. The verdict does not
/// depend on the enumeration order.
pub fn soliton_test_gram(gram: GramMatrix) -> SolitonVerdict {
    if let Some((a, b)) = gram.entry_two() {
        let t = gram.index_set.triples();
        return SolitonVerdict::Inapplicable(InapplicableReason::GramEntryTwo { a: t[a], b: t[b] });
    }
    let ones = vec![int(1); gram.u.rows()];
    let lp = positivity_lp(&gram.u, &ones).expect("square system");
    if let Some(w) = lp.witness() {
        let witness = w.to_vec();
        return SolitonVerdict::Soliton { gram, witness };
    }
    let solutions = solve_affine(&gram.u, &ones).expect("square system");
    SolitonVerdict::Nonsoliton {
        gram,
        solutions,
        lp,
    }
}

/// The explicit solution used to rule out solitons on the `m = 8`
/// extensions: the block system reduces to `U_8 v = (1,1,1,1,1,a,a,a)` for
/// some `0 < a < 1`, and every solution then has `v_7 = (a - 1)/3 < 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dim8Certificate {
    pub a: Rational,
    pub v0: Vec<Rational>,
    pub rhs: Vec<Rational>,
    /// Seventh component of `v0`.
    pub v7: Rational,
}

pub fn nonsoliton_certificate_dim8_extension(
    k: usize,
    a: &Rational,
) -> Result<Dim8Certificate, Error> {
    if k == 0 {
        return Err(Error::InvalidParameter("extension needs k >= 1".into()));
    }
    if !a.is_positive() || *a >= Rational::one() {
        return Err(Error::InvalidParameter(format!(
            "a must lie in (0, 1), got {a}"
        )));
    }
    let lin = |p: i64, q: i64| (int(p) * a + int(q)) / int(33);
    let v0 = vec![
        lin(7, 2),
        lin(-6, 3),
        lin(-4, 13),
        lin(-11, 11),
        lin(2, 10),
        lin(13, -1),
        lin(11, -11),
        int(0),
    ];
    let mut rhs = vec![int(1); 5];
    rhs.extend(std::iter::repeat_n(a.clone(), 3));
    let u8 = gram_matrix(&family_dim8(&int(1))?)?.u;
    let image = u8.mul_vec(&v0)?;
    assert_eq!(image, rhs, "U8 v0(a) must equal (1,1,1,1,1,a,a,a)");
    let v7 = v0[6].clone();
    debug_assert_eq!(v7, (a - int(1)) * rat(1, 3));
    Ok(Dim8Certificate {
        a: a.clone(),
        v0,
        rhs,
        v7,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rat;
    use crate::families::family_dim9;

    fn heis3() -> LieAlgebra {
        LieAlgebra::new(3, [(Triple::one_based(1, 2, 3), int(1))]).unwrap()
    }

    #[test]
    fn dim8_index_order() {
        let s = index_set(&family_dim8(&int(1)).unwrap()).unwrap();
        let labels: Vec<_> = s.triples().iter().map(|t| t.to_one_based()).collect();
        assert_eq!(
            labels,
            [
                (2, 3, 4),
                (1, 3, 5),
                (1, 2, 6),
                (2, 6, 7),
                (3, 4, 7),
                (1, 6, 8),
                (2, 4, 8),
                (3, 5, 8)
            ]
        );
    }

    #[test]
    fn dim9_ends_with_x9_targets() {
        let s = index_set(&family_dim9(&int(2)).unwrap()).unwrap();
        assert_eq!(s.len(), 10);
        assert_eq!(s.triples()[8], Triple::one_based(2, 5, 9));
        assert_eq!(s.triples()[9], Triple::one_based(3, 6, 9));
    }

    #[test]
    fn abelian_has_no_index_set() {
        assert_eq!(
            index_set(&LieAlgebra::abelian(4)),
            Err(Error::EmptyIndexSet)
        );
        assert_eq!(
            soliton_test(&LieAlgebra::abelian(4)),
            SolitonVerdict::Inapplicable(InapplicableReason::Abelian)
        );
    }

    #[test]
    fn enumeration_must_be_a_permutation() {
        let g = family_dim8(&int(1)).unwrap();
        let mut t = index_set(&g).unwrap().triples().to_vec();
        t.swap(0, 7);
        assert!(IndexSet::from_enumeration(&g, t.clone()).is_ok());
        t[0] = t[1];
        assert_eq!(
            IndexSet::from_enumeration(&g, t),
            Err(Error::NotAnEnumeration)
        );
    }

    #[test]
    fn entry_two_makes_basis_not_nice() {
        // [x1,x2]=x3, [x1,x3]=x4, [x2,x3]=x4: (1,3,4) and (2,3,4) have dot 2.
        let g = LieAlgebra::without_jacobi_check(
            4,
            [
                (Triple::one_based(1, 2, 3), int(1)),
                (Triple::one_based(1, 3, 4), int(1)),
                (Triple::one_based(2, 3, 4), int(1)),
            ],
        )
        .unwrap();
        assert!(!is_nice(&g).unwrap());
        assert!(matches!(
            soliton_test(&g),
            SolitonVerdict::Inapplicable(InapplicableReason::GramEntryTwo { .. })
        ));
        // Filiform-type [x1,x2]=x3, [x1,x3]=x4 is nice: dot product 0.
        let f = LieAlgebra::new(
            4,
            [
                (Triple::one_based(1, 2, 3), int(1)),
                (Triple::one_based(1, 3, 4), int(1)),
            ],
        )
        .unwrap();
        assert!(is_nice(&f).unwrap());
        assert_eq!(
            gram_matrix(&f).unwrap().u,
            RatMatrix::from_i64_rows(&[&[3, 0], &[0, 3]])
        );
    }

    #[test]
    fn degenerate_root_vector_is_computed_literally() {
        // [x1,x2] = x2 gives e_1, of squared length 1.
        let g = LieAlgebra::new(2, [(Triple::new(0, 1, 1), int(1))]).unwrap();
        assert_eq!(
            gram_matrix(&g).unwrap().u,
            RatMatrix::from_i64_rows(&[&[1]])
        );
    }

    #[test]
    fn heisenberg_is_soliton() {
        match soliton_test(&heis3()) {
            SolitonVerdict::Soliton { witness, .. } => assert_eq!(witness, vec![rat(1, 3)]),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn dim8_seventh_component_vanishes() {
        let SolitonVerdict::Nonsoliton { solutions, .. } =
            soliton_test(&family_dim8(&int(3)).unwrap())
        else {
            panic!("expected Nonsoliton");
        };
        assert_eq!(solutions.particular.as_ref().unwrap()[6], int(0));
        assert!(solutions.nullspace_basis.iter().all(|w| w[6] == int(0)));
    }

    #[test]
    fn certificate_values() {
        let c = nonsoliton_certificate_dim8_extension(1, &rat(1, 2)).unwrap();
        assert_eq!(c.v7, rat(-1, 6));
        let c = nonsoliton_certificate_dim8_extension(2, &rat(2, 3)).unwrap();
        assert_eq!(c.rhs[5..], [rat(2, 3), rat(2, 3), rat(2, 3)]);
        assert!(nonsoliton_certificate_dim8_extension(1, &int(1)).is_err());
        assert!(nonsoliton_certificate_dim8_extension(1, &int(0)).is_err());
        assert!(nonsoliton_certificate_dim8_extension(0, &rat(1, 2)).is_err());
    }
}
