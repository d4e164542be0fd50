//! Exact-arithmetic toolkit for nilpotent Lie algebras given by rational
//! structure constants.
//!
//! Everything is computed over the rationals: derivation algebras,
//! pre-Einstein (Nikolayevsky) derivations, Gram matrices of root vectors
//! and the positive-solution test that decides whether an algebra with a
//! nice basis carries a nilsoliton inner product.
//!
//! Basis indices are 0-based throughout the API. [`Triple`] displays and
//! the text format use the conventional 1-based labels.

pub mod claims;
pub mod derivations;
pub mod error;
pub mod exactla;
pub mod families;
pub mod lie;
pub mod metric;
pub mod reference;
pub mod soliton;
pub mod textfmt;

pub use derivations::{
    derivation_algebra, diagonal_derivations, is_derivation, nikolayevsky_rank_one,
    pre_einstein_in_torus, verify_pre_einstein, DerivationBasis,
};
pub use error::Error;
pub use exactla::{rat, AffineSolutionSet, RatMatrix, Rational};
pub use families::{
    family_dim8, family_dim9, family_extended, heisenberg, BaseFamily, ExtendedFamily, FamilySpec,
};
pub use lie::{Grading, JacobiDefect, LieAlgebra, Subspace, Triple};
pub use metric::{
    ricci_endomorphism, ricci_form, soliton_metric_check, DiagonalMetric, SolitonMetric,
};
pub use soliton::{
    gram_matrix, gram_matrix_for, index_set, is_nice, nonsoliton_certificate_dim8_extension,
    soliton_test, Dim8Certificate, GramMatrix, InapplicableReason, IndexSet, SolitonVerdict,
};
pub use textfmt::{parse_algebra, serialize};
