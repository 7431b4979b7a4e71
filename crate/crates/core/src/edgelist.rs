//! Plain-text edge lists.
//!
//! ```text
//! # comment
//! 3 2
//! 0 1
//! 1 2
//! ```
//!
//! The header is `n m`, followed by exactly `m` lines `u v` with 0-indexed
//! endpoints. Blank lines and lines starting with `#` are skipped anywhere.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Writes `g` in edge-list form. Edges appear in lexicographic order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Largest vertex count accepted by [`parse_edge_list`].
pub const MAX_VERTICES: usize = 1 << 20;

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        message: "missing \"n m\" header".into(),
    })?;
    let (n, m) = parse_pair(header_line, header)?;

    // A simple graph on n vertices has at most n(n-1)/2 edges; checking this
    // first keeps a hostile header from driving a huge allocation.
    let max_edges = (n as u128) * (n as u128).saturating_sub(1) / 2;
    if m as u128 > max_edges {
        return Err(Error::Parse {
            line: header_line,
            message: format!("{m} edges cannot fit in a simple graph on {n} vertices"),
        });
    }

    if n > MAX_VERTICES {
        return Err(Error::Parse {
            line: header_line,
            message: format!("vertex count {n} exceeds the supported maximum {MAX_VERTICES}"),
        });
    }

    let mut g = Graph::empty(n);
    let mut seen = 0usize;
    for (line, body) in lines {
        if seen == m {
            return Err(Error::Parse {
                line,
                message: format!("more than the declared {m} edges"),
            });
        }
        let (u, v) = parse_pair(line, body)?;
        g.insert_edge(u, v).map_err(|e| Error::Parse {
            line,
            message: e.to_string(),
        })?;
        seen += 1;
    }
    if seen < m {
        return Err(Error::Parse {
            line: 0,
            message: format!("declared {m} edges, found {seen}"),
        });
    }
    Ok(g)
}

fn parse_pair(line: usize, body: &str) -> Result<(usize, usize)> {
    let mut fields = body.split_whitespace();
    let parse = |tok: Option<&str>| -> Result<usize> {
        let tok = tok.ok_or_else(|| Error::Parse {
            line,
            message: format!("expected two integers, got {body:?}"),
        })?;
        tok.parse::<usize>().map_err(|_| Error::Parse {
            line,
            message: format!("{tok:?} is not a non-negative integer"),
        })
    };
    let a = parse(fields.next())?;
    let b = parse(fields.next())?;
    if fields.next().is_some() {
        return Err(Error::Parse {
            line,
            message: format!("expected two integers, got {body:?}"),
        });
    }
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    #[test]
    fn writes_path() {
        let g = generate(&FamilySpec::path(3)).unwrap();
        assert_eq!(write_edge_list(&g), "3 2\n0 1\n1 2\n");
    }

    #[test]
    fn skips_comments_and_blank_lines() {
        let g = parse_edge_list("# triangle\n\n3 3\n0 1\n# middle\n1 2\n\n2 0\n").unwrap();
        assert_eq!(g, generate(&FamilySpec::complete(3)).unwrap());
    }

    #[test]
    fn empty_graph() {
        let g = parse_edge_list("0 0\n").unwrap();
        assert_eq!(g.vertex_count(), 0);
        let g = parse_edge_list("4 0").unwrap();
        assert_eq!(g.isolated_count(), 4);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_edge_list("3 2\n0 1\n1 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
        let err = parse_edge_list("3 2\n0 1\n0 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
        let err = parse_edge_list("3 1\n0 5\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
    }

    #[test]
    fn count_mismatch() {
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("3 1\n0 1\n1 2\n").is_err());
        assert!(parse_edge_list("3 4\n").is_err());
    }

    #[test]
    fn malformed_lines() {
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("# only a comment\n").is_err());
        assert!(parse_edge_list("3\n").is_err());
        assert!(parse_edge_list("3 1 7\n0 1\n").is_err());
        assert!(parse_edge_list("3 1\n0 -1\n").is_err());
        assert!(parse_edge_list("3 1\nzero one\n").is_err());
        assert!(parse_edge_list("18446744073709551615 0\n").is_err());
    }
}
