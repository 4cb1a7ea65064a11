//! Line-oriented text format for structure tables.
//!
//! ```text
//! # comment
//! dim N
//! degrees d1 d2 ... dN      # optional, each 0 or 1; default all 0
//! basis name1 ... nameN     # optional
//! c i j k p/q               # c^k_{ij} = p/q, 1-based indices
//! ```
//!
//! Unspecified constants are zero; the orientation not present in the file
//! is filled by the graded sign rule. Emission writes one orientation per
//! pair (i < j, plus the odd diagonal for graded tables), so emitting a
//! valid table and re-parsing reproduces it exactly.

use std::collections::BTreeSet;

use super::{Parity, StructureTable};
use crate::linalg::Rational;
use crate::{Error, Result};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parses the text format. Errors carry 1-based line numbers.
pub fn parse_table(input: &str) -> Result<StructureTable> {
    let mut dim: Option<usize> = None;
    let mut degrees: Option<Vec<Parity>> = None;
    let mut names: Option<Vec<String>> = None;
    let mut entries: Vec<(usize, usize, usize, Rational)> = Vec::new();
    let mut seen: BTreeSet<(usize, usize, usize)> = BTreeSet::new();

    for (idx, raw) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens[0] {
            "dim" => {
                if dim.is_some() {
                    return Err(parse_err(line_no, "duplicate `dim` line"));
                }
                if tokens.len() != 2 {
                    return Err(parse_err(line_no, "expected `dim N`"));
                }
                let n: usize = tokens[1]
                    .parse()
                    .map_err(|_| parse_err(line_no, format!("bad dimension `{}`", tokens[1])))?;
                if n == 0 {
                    return Err(parse_err(line_no, "dimension must be positive"));
                }
                dim = Some(n);
            }
            "degrees" => {
                let n = dim.ok_or_else(|| parse_err(line_no, "`degrees` before `dim`"))?;
                if degrees.is_some() {
                    return Err(parse_err(line_no, "duplicate `degrees` line"));
                }
                if tokens.len() != n + 1 {
                    return Err(parse_err(line_no, format!("expected {n} degrees")));
                }
                let mut d = Vec::with_capacity(n);
                for tok in &tokens[1..] {
                    let bit: u8 = tok
                        .parse()
                        .map_err(|_| parse_err(line_no, format!("bad degree `{tok}`")))?;
                    d.push(
                        Parity::from_bit(bit)
                            .map_err(|_| parse_err(line_no, format!("bad degree `{tok}`")))?,
                    );
                }
                degrees = Some(d);
            }
            "basis" => {
                let n = dim.ok_or_else(|| parse_err(line_no, "`basis` before `dim`"))?;
                if names.is_some() {
                    return Err(parse_err(line_no, "duplicate `basis` line"));
                }
                if tokens.len() != n + 1 {
                    return Err(parse_err(line_no, format!("expected {n} basis names")));
                }
                names = Some(tokens[1..].iter().map(|s| s.to_string()).collect());
            }
            "c" => {
                let n = dim.ok_or_else(|| parse_err(line_no, "`c` before `dim`"))?;
                if tokens.len() != 5 {
                    return Err(parse_err(line_no, "expected `c i j k p/q`"));
                }
                let mut idxs = [0usize; 3];
                for (slot, tok) in idxs.iter_mut().zip(&tokens[1..4]) {
                    let v: usize = tok
                        .parse()
                        .map_err(|_| parse_err(line_no, format!("bad index `{tok}`")))?;
                    if v == 0 || v > n {
                        return Err(parse_err(
                            line_no,
                            format!("index `{tok}` out of range 1..={n}"),
                        ));
                    }
                    *slot = v - 1;
                }
                let value: Rational = tokens[4]
                    .parse()
                    .map_err(|e| parse_err(line_no, format!("bad rational `{}`: {e}", tokens[4])))?;
                let key = (idxs[0], idxs[1], idxs[2]);
                if !seen.insert(key) {
                    return Err(parse_err(
                        line_no,
                        format!(
                            "duplicate constant for ({}, {}, {})",
                            idxs[0] + 1,
                            idxs[1] + 1,
                            idxs[2] + 1
                        ),
                    ));
                }
                entries.push((idxs[0], idxs[1], idxs[2], value));
            }
            other => {
                return Err(parse_err(line_no, format!("unknown directive `{other}`")));
            }
        }
    }

    let dim = dim.ok_or_else(|| parse_err(1, "missing `dim` line"))?;
    let degrees = degrees.unwrap_or_else(|| vec![Parity::Even; dim]);
    StructureTable::from_entries(dim, degrees, names, &entries)
}

/// Renders a table in the text format, writing one orientation per pair.
pub fn render_table(t: &StructureTable) -> String {
    let mut out = String::new();
    out.push_str(&format!("dim {}\n", t.dim()));
    if t.is_graded() {
        let bits: Vec<String> = t
            .degrees()
            .iter()
            .map(|d| d.as_bit().to_string())
            .collect();
        out.push_str(&format!("degrees {}\n", bits.join(" ")));
    }
    if let Some(names) = t.names() {
        out.push_str(&format!("basis {}\n", names.join(" ")));
    }
    for (i, j, v) in t.nonzero_products() {
        if i > j {
            continue;
        }
        for (k, c) in v.iter().enumerate() {
            if !c.is_zero() {
                out.push_str(&format!("c {} {} {} {}\n", i + 1, j + 1, k + 1, c));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::builtins;

    #[test]
    fn parse_sl2_by_hand() {
        let text = "\
# sl(2) in the (h, e, f) basis
dim 3
basis h e f
c 1 2 2 2
c 1 3 3 -2
c 2 3 1 1
";
        let t = parse_table(text).unwrap();
        assert_eq!(t, builtins::sl(2).unwrap());
    }

    #[test]
    fn round_trip_every_builtin() {
        for t in [
            builtins::sl(2).unwrap(),
            builtins::sl(3).unwrap(),
            builtins::gl(2).unwrap(),
            builtins::o(3).unwrap(),
            builtins::abelian(3).unwrap(),
            builtins::ccr(2).unwrap(),
            builtins::car(1).unwrap(),
        ] {
            let text = render_table(&t);
            let back = parse_table(&text).unwrap();
            assert_eq!(t, back);
        }
    }

    #[test]
    fn parse_error_carries_line_number() {
        let text = "dim 3\nc 1 2 2\n";
        match parse_table(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn out_of_range_index_rejected_with_line() {
        let text = "dim 2\nc 1 3 1 1\n";
        match parse_table(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn missing_dim_rejected() {
        assert!(parse_table("basis a b\n").is_err());
        assert!(parse_table("").is_err());
    }

    #[test]
    fn comments_and_blank_lines_ignored() {
        let text = "\n# hello\ndim 2   # trailing\n\nc 1 2 1 1/2\n";
        let t = parse_table(text).unwrap();
        assert_eq!(t.constant(0, 1, 0), Rational::new(1, 2));
    }

    #[test]
    fn explicit_both_orientations_preserved_for_validation() {
        // both orientations given, inconsistently
        let text = "dim 2\nc 1 2 1 1\nc 2 1 1 1\n";
        let t = parse_table(text).unwrap();
        assert!(!t.validate().is_empty());
    }
}
