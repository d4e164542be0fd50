//! Plain-text structure-constant files.
//!
//! ```text
//! # Heisenberg algebra
//! dim 3
//! 1 2 3 1
//! ```
//!
//! The first non-comment line is `dim <n>`. Each further line is
//! `<i> <j> <k> <value>` with 1-based indices, `i < j`, and the value an
//! integer or `p/q`. `#` starts a comment. Lines end in LF.

use std::fmt::Write as _;

use crate::error::Error;
use crate::exactla::{format_rational, parse_rational, Rational};
use crate::lie::{LieAlgebra, Triple};

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

/// Whitespace-separated fields with their 1-based starting columns, after
/// stripping any comment.
fn fields(text: &str) -> Vec<(usize, &str)> {
    let body = text.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (pos, ch) in body.char_indices() {
        match (ch == ' ' || ch == '\t', start) {
            (true, Some(s)) => {
                out.push((s + 1, &body[s..pos]));
                start = None;
            }
            (false, None) => start = Some(pos),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &body[s..]));
    }
    out
}

fn parse_index(line: usize, column: usize, field: &str, dim: usize) -> Result<usize, Error> {
    let value: usize = field.parse().map_err(|_| {
        syntax(
            line,
            column,
            format!("expected a basis index, found {field:?}"),
        )
    })?;
    if value == 0 || value > dim {
        return Err(syntax(
            line,
            column,
            format!("index {value} is outside 1..={dim}"),
        ));
    }
    Ok(value - 1)
}

/// Reads a structure-constant file and validates the Jacobi identity.
pub fn parse_algebra(text: &str) -> Result<LieAlgebra, Error> {
    let mut dim: Option<usize> = None;
    let mut entries: Vec<(usize, Triple, Rational)> = Vec::new();
    for (idx, raw) in text.split('\n').enumerate() {
        let line = idx + 1;
        if let Some(col) = raw.find('\r') {
            return Err(syntax(
                line,
                col + 1,
                "carriage return; lines must end in LF",
            ));
        }
        let f = fields(raw);
        if f.is_empty() {
            continue;
        }
        let Some(n) = dim else {
            if f[0].1 != "dim" {
                return Err(syntax(line, f[0].0, "expected header `dim <n>`"));
            }
            if f.len() != 2 {
                return Err(syntax(line, f[0].0, "header must be `dim <n>`"));
            }
            let n: usize = f[1]
                .1
                .parse()
                .map_err(|_| syntax(line, f[1].0, format!("invalid dimension {:?}", f[1].1)))?;
            if n == 0 {
                return Err(syntax(line, f[1].0, "dimension must be positive"));
            }
            dim = Some(n);
            continue;
        };
        if f.len() != 4 {
            let col = f.get(4).map_or(f[f.len() - 1].0, |x| x.0);
            return Err(syntax(
                line,
                col,
                format!("expected `i j k value`, found {} field(s)", f.len()),
            ));
        }
        let i = parse_index(line, f[0].0, f[0].1, n)?;
        let j = parse_index(line, f[1].0, f[1].1, n)?;
        let k = parse_index(line, f[2].0, f[2].1, n)?;
        let value = parse_rational(f[3].1)
            .map_err(|_| syntax(line, f[3].0, format!("invalid rational {:?}", f[3].1)))?;
        let triple = Triple::new(i, j, k);
        entries.push((line, triple, value));
    }
    let Some(n) = dim else {
        return Err(syntax(1, 1, "missing header `dim <n>`"));
    };
    // Structural checks one entry at a time so errors carry a line number.
    let mut seen = std::collections::BTreeSet::new();
    for (line, t, c) in &entries {
        let at = |e: Error| Error::AtLine {
            line: *line,
            source: Box::new(e),
        };
        LieAlgebra::without_jacobi_check(n, [(*t, c.clone())]).map_err(at)?;
        if !seen.insert(*t) {
            return Err(at(Error::DuplicateTriple { triple: *t }));
        }
    }
    LieAlgebra::new(n, entries.into_iter().map(|(_, t, c)| (t, c)))
}

/// Canonical text for `g`: header, then one line per nonzero constant in
/// index-set order.
pub fn serialize(g: &LieAlgebra) -> String {
    let mut out = String::new();
    writeln!(out, "dim {}", g.dim()).unwrap();
    for (t, c) in g.constants() {
        let (i, j, k) = t.to_one_based();
        writeln!(out, "{i} {j} {k} {}", format_rational(c)).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{int, rat};
    use crate::families::{family_dim8, family_dim9, family_extended};

    #[test]
    fn heisenberg() {
        let g = parse_algebra("dim 3\n1 2 3 1\n").unwrap();
        let h = LieAlgebra::new(3, [(Triple::new(0, 1, 2), int(1))]).unwrap();
        assert_eq!(g, h);
        assert_eq!(serialize(&h), "dim 3\n1 2 3 1\n");
    }

    #[test]
    fn comments_blank_lines_and_fractions() {
        let text = "# header comment\n\ndim 4   # trailing\n  1 2 3 -3/4\n1 3 4 2 # c\n";
        let g = parse_algebra(text).unwrap();
        assert_eq!(g.constant(0, 1, 2), rat(-3, 4));
        assert_eq!(g.constant(0, 2, 3), int(2));
    }

    #[test]
    fn index_order_error() {
        let e = parse_algebra("dim 3\n1 1 2 1\n").unwrap_err();
        assert_eq!(
            e,
            Error::AtLine {
                line: 2,
                source: Box::new(Error::IndexOrder {
                    triple: Triple::new(0, 0, 1)
                })
            }
        );
    }

    #[test]
    fn syntax_errors_have_positions() {
        let e = parse_algebra("dim 3\n1 2 x 1\n").unwrap_err();
        assert!(
            matches!(
                e,
                Error::Syntax {
                    line: 2,
                    column: 5,
                    ..
                }
            ),
            "{e:?}"
        );
        let e = parse_algebra("dim 3\n1 2 3 1.5\n").unwrap_err();
        assert!(
            matches!(
                e,
                Error::Syntax {
                    line: 2,
                    column: 7,
                    ..
                }
            ),
            "{e:?}"
        );
        let e = parse_algebra("1 2 3 1\n").unwrap_err();
        assert!(
            matches!(
                e,
                Error::Syntax {
                    line: 1,
                    column: 1,
                    ..
                }
            ),
            "{e:?}"
        );
        let e = parse_algebra("dim 3\n1 2 4 1\n").unwrap_err();
        assert!(
            matches!(
                e,
                Error::Syntax {
                    line: 2,
                    column: 5,
                    ..
                }
            ),
            "{e:?}"
        );
        let e = parse_algebra("dim 3\r\n").unwrap_err();
        assert!(
            matches!(
                e,
                Error::Syntax {
                    line: 1,
                    column: 6,
                    ..
                }
            ),
            "{e:?}"
        );
        assert!(matches!(parse_algebra(""), Err(Error::Syntax { .. })));
        assert!(matches!(
            parse_algebra("dim 3\n1 2 3\n"),
            Err(Error::Syntax { .. })
        ));
    }

    #[test]
    fn duplicates_zeros_and_jacobi() {
        let e = parse_algebra("dim 3\n1 2 3 1\n1 2 3 2\n").unwrap_err();
        assert!(matches!(e, Error::AtLine { line: 3, .. }));
        let e = parse_algebra("dim 3\n1 2 3 0\n").unwrap_err();
        assert!(matches!(e, Error::AtLine { line: 2, .. }));
        let bad = "dim 5\n1 2 3 1\n1 3 4 -1\n2 3 4 1\n1 4 5 1\n2 4 3 1\n";
        assert!(matches!(parse_algebra(bad), Err(Error::JacobiViolation(_))));
    }

    #[test]
    fn families_round_trip() {
        for q in [int(1), rat(2, 3), int(5)] {
            for g in [
                family_dim8(&q).unwrap(),
                family_dim9(&q).unwrap(),
                family_extended(9, 2, &q).unwrap().algebra,
            ] {
                assert_eq!(parse_algebra(&serialize(&g)).unwrap(), g);
            }
        }
    }
}
