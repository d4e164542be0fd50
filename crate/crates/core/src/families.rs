//! The one-parameter families of three-step nilpotent algebras in
//! dimensions 8 and 9, their Heisenberg extensions in dimensions `m + 2k`,
//! and the Heisenberg algebras themselves.
//!
//! The real parameter `s` enters the brackets only through `e^s`. Here it is
//! replaced by an arbitrary positive rational `q`, which keeps everything
//! exact and leaves the index set (hence Gram matrix, derivation dimension
//! and soliton verdict) unchanged.
//!
//! Extension generators `y_1..y_2k` come after `x_1..x_m` in the basis and are
//! paired as `[y_i, y_{2k+1-i}] = x_m` for `i = 1..k`, so every generator
//! occurs in exactly one bracket.

use num_traits::Signed;

use crate::error::Error;
use crate::exactla::{int, pow_i, rat, RatMatrix, Rational};
use crate::lie::{Grading, LieAlgebra, Triple};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaseFamily {
    Dim8,
    Dim9,
}

impl BaseFamily {
    pub fn from_dim(m: u32) -> Result<Self, Error> {
        match m {
            8 => Ok(BaseFamily::Dim8),
            9 => Ok(BaseFamily::Dim9),
            other => Err(Error::InvalidParameter(format!(
                "m must be 8 or 9, got {other}"
            ))),
        }
    }

    pub fn dim(self) -> usize {
        match self {
            BaseFamily::Dim8 => 8,
            BaseFamily::Dim9 => 9,
        }
    }

    /// `(i, j, k, exponent of q)` in 1-based labels.
    fn brackets(self) -> &'static [(usize, usize, usize, i32)] {
        match self {
            BaseFamily::Dim8 => &[
                (2, 3, 4, -1),
                (1, 3, 5, 1),
                (1, 2, 6, 0),
                (2, 6, 7, 1),
                (3, 4, 7, -1),
                (1, 6, 8, -1),
                (2, 4, 8, 0),
                (3, 5, 8, 1),
            ],
            BaseFamily::Dim9 => &[
                (2, 3, 4, 4),
                (1, 3, 5, -3),
                (1, 2, 6, -1),
                (2, 6, 7, -4),
                (3, 4, 7, 4),
                (1, 6, 8, 4),
                (2, 4, 8, 0),
                (3, 5, 8, -4),
                (3, 6, 9, -1),
                (2, 5, 9, 1),
            ],
        }
    }

    fn constants(self, q: &Rational) -> Vec<(Triple, Rational)> {
        self.brackets()
            .iter()
            .map(|&(i, j, k, e)| (Triple::one_based(i, j, k), pow_i(q, e)))
            .collect()
    }

    /// Step-degree derivation `diag(1,1,1,2,2,2,3,...,3)`.
    pub fn step_derivation(self) -> RatMatrix {
        let w: Vec<Rational> = (0..self.dim()).map(|i| int(1 + (i as i64) / 3)).collect();
        RatMatrix::diagonal(&w)
    }
}

fn check_q(q: &Rational) -> Result<(), Error> {
    if q.is_positive() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "q must be positive, got {q}"
        )))
    }
}

/// The 8-dimensional family with `q` in place of `e^s`.
pub fn family_dim8(q: &Rational) -> Result<LieAlgebra, Error> {
    check_q(q)?;
    LieAlgebra::new(8, BaseFamily::Dim8.constants(q))
}

/// The 9-dimensional family with `q` in place of `e^s`.
pub fn family_dim9(q: &Rational) -> Result<LieAlgebra, Error> {
    check_q(q)?;
    LieAlgebra::new(9, BaseFamily::Dim9.constants(q))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub base: BaseFamily,
    pub k: usize,
    pub q: Rational,
}

impl FamilySpec {
    pub fn new(m: u32, k: usize, q: Rational) -> Result<Self, Error> {
        let base = BaseFamily::from_dim(m)?;
        check_q(&q)?;
        Ok(FamilySpec { base, k, q })
    }

    pub fn m(&self) -> usize {
        self.base.dim()
    }

    pub fn dim(&self) -> usize {
        self.m() + 2 * self.k
    }

    /// `(m + k - 3) / (6m + 3k - 26)`.
    pub fn lambda(&self) -> Rational {
        let (m, k) = (self.m() as i64, self.k as i64);
        rat(m + k - 3, 6 * m + 3 * k - 26)
    }
}

/// An extended-family algebra together with its grading and Nikolayevsky
/// data.
#[derive(Debug, Clone)]
pub struct ExtendedFamily {
    pub spec: FamilySpec,
    pub algebra: LieAlgebra,
    /// Weights 2 on `x_1..x_3`, 3 on the `y`s, 4 on `x_4..x_6`, 6 on `x_7..x_m`.
    pub grading: Grading,
    /// `diag` of the grading weights.
    pub d_candidate: RatMatrix,
    pub lambda: Rational,
}

impl ExtendedFamily {
    /// `lambda * d_candidate`.
    pub fn nikolayevsky(&self) -> RatMatrix {
        self.d_candidate.scale(&self.lambda)
    }

    /// Basis indices (0-based) of the base ideal `span{x_1..x_m}`.
    pub fn base_indices(&self) -> std::ops::Range<usize> {
        0..self.spec.m()
    }

    /// Basis indices (0-based) of the Heisenberg ideal `span{x_m, y_1..y_2k}`.
    pub fn heisenberg_indices(&self) -> Vec<usize> {
        let m = self.spec.m();
        std::iter::once(m - 1)
            .chain(m..m + 2 * self.spec.k)
            .collect()
    }
}

pub fn family_extended(m: u32, k: usize, q: &Rational) -> Result<ExtendedFamily, Error> {
    let spec = FamilySpec::new(m, k, q.clone())?;
    let base_dim = spec.m();
    let dim = spec.dim();
    let mut constants = spec.base.constants(q);
    for i in 0..k {
        // y_{i+1} and y_{2k-i}, 0-based offsets i and 2k-1-i after x_m.
        let a = base_dim + i;
        let b = base_dim + 2 * k - 1 - i;
        constants.push((Triple::new(a, b, base_dim - 1), int(1)));
    }
    let algebra = LieAlgebra::new(dim, constants)?;
    let weights: Vec<u32> = (0..dim)
        .map(|i| match i {
            0..=2 => 2,
            3..=5 => 4,
            _ if i < base_dim => 6,
            _ => 3,
        })
        .collect();
    let grading = Grading::new(weights)?;
    let d_candidate = grading.derivation();
    let lambda = spec.lambda();
    Ok(ExtendedFamily {
        spec,
        algebra,
        grading,
        d_candidate,
        lambda,
    })
}

/// `h_{2k+1}`: generators `y_1..y_2k`, centre `z`, `[y_i, y_{2k+1-i}] = z`.
/// Returned with its Nikolayevsky derivation, `(k+1)/(k+2)` on generators and
/// twice that on `z`.
pub fn heisenberg(k: usize) -> Result<(LieAlgebra, RatMatrix), Error> {
    if k == 0 {
        return Err(Error::InvalidParameter("Heisenberg needs k >= 1".into()));
    }
    let z = 2 * k;
    let constants = (0..k).map(|i| (Triple::new(i, 2 * k - 1 - i, z), int(1)));
    let g = LieAlgebra::new(2 * k + 1, constants)?;
    let kk = k as i64;
    let gen = rat(kk + 1, kk + 2);
    let mut diag = vec![gen.clone(); 2 * k];
    diag.push(gen * int(2));
    Ok((g, RatMatrix::diagonal(&diag)))
}
