//! Tabulated values for the dimension 8 and 9 families, kept verbatim so
//! computed results can be compared against them exactly.
//!
//! The 10x10 table for dimension 9 enumerates the index set in the order the
//! brackets are listed, with `(3,6,9)` before `(2,5,9)`. The conventional
//! order puts `(2,5,9)` first; [`DIM9_TABLE_ENUMERATION`] records the
//! tabulated order.

use crate::exactla::{ints, rat, RatMatrix, Rational};
use crate::lie::Triple;

pub const U8: [[i64; 8]; 8] = [
    [3, 1, 1, 1, 0, 0, 0, 1],
    [1, 3, 1, 0, 1, 1, 0, 0],
    [1, 1, 3, 0, 0, 0, 1, 0],
    [1, 0, 0, 3, 1, 1, 1, 0],
    [0, 1, 0, 1, 3, 0, 1, 1],
    [0, 1, 0, 1, 0, 3, 1, 1],
    [0, 0, 1, 1, 1, 1, 3, 1],
    [1, 0, 0, 0, 1, 1, 1, 3],
];

pub const U9: [[i64; 10]; 10] = [
    [3, 1, 1, 1, 0, 0, 0, 1, 1, 1],
    [1, 3, 1, 0, 1, 1, 0, 0, 1, -1],
    [1, 1, 3, 0, 0, 0, 1, 0, -1, 1],
    [1, 0, 0, 3, 1, 1, 1, 0, 1, 1],
    [0, 1, 0, 1, 3, 0, 1, 1, 1, 0],
    [0, 1, 0, 1, 0, 3, 1, 1, 1, 0],
    [0, 0, 1, 1, 1, 1, 3, 1, 0, 1],
    [1, 0, 0, 0, 1, 1, 1, 3, 1, 1],
    [1, 1, -1, 1, 1, 1, 0, 1, 3, 1],
    [1, -1, 1, 1, 0, 0, 1, 1, 1, 3],
];

/// 1-based triples in the order behind [`U9`].
pub const DIM9_TABLE_ENUMERATION: [(usize, usize, usize); 10] = [
    (2, 3, 4),
    (1, 3, 5),
    (1, 2, 6),
    (2, 6, 7),
    (3, 4, 7),
    (1, 6, 8),
    (2, 4, 8),
    (3, 5, 8),
    (3, 6, 9),
    (2, 5, 9),
];

fn square<const N: usize>(rows: &[[i64; N]; N]) -> RatMatrix {
    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    RatMatrix::from_i64_rows(&refs)
}

pub fn u8_table() -> RatMatrix {
    square(&U8)
}

pub fn u9_table() -> RatMatrix {
    square(&U9)
}

pub fn dim9_table_enumeration() -> Vec<Triple> {
    DIM9_TABLE_ENUMERATION
        .iter()
        .map(|&(i, j, k)| Triple::one_based(i, j, k))
        .collect()
}

/// Permutation taking the conventional dimension-9 order to the tabulated
/// one: `table[a][b] = conventional[p[a]][p[b]]`.
pub const DIM9_TABLE_PERMUTATION: [usize; 10] = [0, 1, 2, 3, 4, 5, 6, 7, 9, 8];

fn scaled(values: &[i64], den: i64) -> Vec<Rational> {
    values.iter().map(|&v| rat(v, den)).collect()
}

/// `{v0 + t v1}` solves `U8 v = [1]`.
pub fn dim8_solution() -> (Vec<Rational>, Vec<Vec<Rational>>) {
    (
        scaled(&[1, 1, 3, 2, 2, 2, 0, 2], 11),
        vec![ints(&[-1, 1, 0, 1, -1, -1, 0, 1])],
    )
}

/// `{v0 + s v1 + t v2}` solves `U9 v = [1]` in the tabulated enumeration.
pub fn dim9_solution() -> (Vec<Rational>, Vec<Vec<Rational>>) {
    (
        scaled(&[5, 25, 39, 18, 28, 28, 0, 18, 16, 30], 161),
        vec![
            ints(&[-1, 1, 0, 1, -1, -1, 0, 1, 0, 0]),
            ints(&[0, 1, -1, 0, 0, 0, 0, 0, -1, 1]),
        ],
    )
}

/// General solution of the first eight rows of `U9` against `[1]`, used for
/// the `m = 9` extensions.
pub fn dim9_extension_solution() -> (Vec<Rational>, Vec<Vec<Rational>>) {
    (
        scaled(&[3, -1, 3, 0, 4, 4, 0, 0, 0, 0], 11),
        vec![
            ints(&[-1, 1, 0, 1, -1, -1, 0, 1, 0, 0]),
            ints(&[-5, -2, 6, 0, -3, -3, 0, 0, 11, 0]),
            ints(&[-5, 9, -5, 0, -3, -3, 0, 0, 0, 11]),
        ],
    )
}

/// Stated Nikolayevsky scalars for the step-degree derivation.
pub fn dim8_stated_scalar() -> Rational {
    rat(5, 11)
}

pub fn dim9_stated_scalar() -> Rational {
    rat(9, 14)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_are_symmetric_with_diagonal_three() {
        for u in [u8_table(), u9_table()] {
            assert!(u.is_symmetric());
            assert!(u.diagonal_entries().iter().all(|d| *d == rat(3, 1)));
        }
        assert_eq!(u8_table().rank(), 7);
        assert_eq!(u9_table().rank(), 8);
    }

    #[test]
    fn permutation_is_an_involution() {
        let p = DIM9_TABLE_PERMUTATION;
        assert!((0..10).all(|a| p[p[a]] == a));
    }
}
