//! Plain-text hypergraph files.
//!
//! ```text
//! # comment
//! n=5 k=2
//! 1 2
//! 2 3
//! ```
//!
//! The `n=<int> k=<int>` header is required and must precede the members.
//! Members are 1-based, space-separated, strictly increasing.

use std::fmt::Write as _;
use std::path::Path;

use super::family::Family;
use super::kset::KSet;
use crate::error::{Error, Result};

pub fn parse_family(text: &str) -> Result<Family> {
    let mut family: Option<Family> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        match family.as_mut() {
            None => {
                let (n, k) = parse_header(line).map_err(err)?;
                family = Some(Family::empty(n, k).map_err(|e| err(e.to_string()))?);
            }
            Some(f) => {
                let vertices = line
                    .split_whitespace()
                    .map(|tok| {
                        tok.parse::<u32>()
                            .map_err(|_| format!("`{tok}` is not a vertex"))
                    })
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(err)?;
                let set = KSet::from_sorted(&vertices).map_err(|e| err(e.to_string()))?;
                let fresh = f.insert(set).map_err(|e| err(e.to_string()))?;
                if !fresh {
                    return Err(err(format!("duplicate member {set}")));
                }
            }
        }
    }
    family.ok_or(Error::Parse {
        line: 0,
        message: "missing `n=<int> k=<int>` header".into(),
    })
}

fn parse_header(line: &str) -> std::result::Result<(u32, usize), String> {
    let mut n = None;
    let mut k = None;
    for tok in line.split_whitespace() {
        if let Some(v) = tok.strip_prefix("n=") {
            n = Some(v.parse::<u32>().map_err(|_| format!("bad n in `{tok}`"))?);
        } else if let Some(v) = tok.strip_prefix("k=") {
            k = Some(v.parse::<usize>().map_err(|_| format!("bad k in `{tok}`"))?);
        } else {
            return Err(format!("expected `n=<int> k=<int>` header, found `{line}`"));
        }
    }
    match (n, k) {
        (Some(n), Some(k)) => Ok((n, k)),
        _ => Err(format!("expected `n=<int> k=<int>` header, found `{line}`")),
    }
}

pub fn write_family(family: &Family) -> String {
    let mut out = format!("n={} k={}\n", family.n(), family.k());
    for s in family.iter() {
        let mut first = true;
        for v in s.iter() {
            if !first {
                out.push(' ');
            }
            first = false;
            let _ = write!(out, "{v}");
        }
        out.push('\n');
    }
    out
}

pub fn read_family_file(path: impl AsRef<Path>) -> Result<Family> {
    parse_family(&std::fs::read_to_string(path)?)
}

pub fn write_family_file(path: impl AsRef<Path>, family: &Family) -> Result<()> {
    std::fs::write(path, write_family(family))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::b_family;

    #[test]
    fn b6_round_trips_byte_identically() {
        let text = write_family(&b_family(6).unwrap());
        assert_eq!(text, "n=6 k=2\n1 2\n1 3\n1 4\n1 5\n2 3\n2 4\n");
        let parsed = parse_family(&text).unwrap();
        assert_eq!(write_family(&parsed), text);
    }

    #[test]
    fn comments_and_blank_lines() {
        let f = parse_family("# c5\n\nn=5 k=2\n1 2\n# mid\n2 3\n").unwrap();
        assert_eq!(f.len(), 2);
    }

    #[test]
    fn diagnostics_carry_line_numbers() {
        let cases = [
            ("1 2\n", 1),
            ("n=4 k=2\n1 2\n2 x\n", 3),
            ("n=4 k=2\n1 5\n", 2),
            ("n=4 k=2\n2 1\n", 2),
            ("n=4 k=2\n1 2 3\n", 2),
            ("n=4 k=2\n1 2\n1 2\n", 3),
            ("n=4\n", 1),
        ];
        for (text, line) in cases {
            match parse_family(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
        assert!(matches!(parse_family("# only\n"), Err(Error::Parse { line: 0, .. })));
    }
}
