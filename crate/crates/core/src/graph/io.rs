//! Plain-text edge lists: a header line `n m`, then `m` lines `u v`
//! (0-indexed). The writer emits normalized edges (`u < v`, ascending).

use std::fmt::Write as _;

use thiserror::Error;

use super::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("expected {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: GraphError,
    },
}

fn malformed(line: usize, message: impl Into<String>) -> EdgeListError {
    EdgeListError::Malformed {
        line,
        message: message.into(),
    }
}

fn parse_pair(line_no: usize, line: &str) -> Result<(usize, usize), EdgeListError> {
    let mut fields = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize, EdgeListError> {
        let tok = fields
            .next()
            .ok_or_else(|| malformed(line_no, format!("missing {what}")))?;
        tok.parse().map_err(|_| {
            malformed(
                line_no,
                format!("{what} `{tok}` is not a non-negative integer"),
            )
        })
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if fields.next().is_some() {
        return Err(malformed(line_no, "expected exactly two fields"));
    }
    Ok((a, b))
}

/// Parses the edge-list format. Blank trailing lines are accepted; anything
/// else that does not fit the format is rejected with its 1-based line number.
pub fn read_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    let (_, header) = lines
        .next()
        .ok_or_else(|| malformed(1, "missing header `n m`"))?;
    let (n, m) = parse_pair(1, header)?;
    let mut edges = Vec::with_capacity(m);
    let mut trailing_blank = false;
    for (line_no, line) in lines {
        if line.is_empty() {
            trailing_blank = true;
            continue;
        }
        if trailing_blank {
            return Err(malformed(line_no, "content after blank line"));
        }
        if edges.len() == m {
            return Err(EdgeListError::EdgeCount {
                expected: m,
                found: m + 1,
            });
        }
        let (u, v) = parse_pair(line_no, line)?;
        let bad = if u >= n || v >= n {
            Some(GraphError::OutOfRange { u, v, n })
        } else if u == v {
            Some(GraphError::Loop(u, v))
        } else {
            None
        };
        if let Some(source) = bad {
            return Err(EdgeListError::Graph {
                line: line_no,
                source,
            });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(EdgeListError::EdgeCount {
            expected: m,
            found: edges.len(),
        });
    }
    Graph::new(n, edges).map_err(|source| EdgeListError::Graph { line: 1, source })
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.order(), g.size());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::petersen;

    #[test]
    fn round_trip() {
        let p = petersen();
        let text = write_edge_list(&p);
        assert!(text.starts_with("10 15\n0 "));
        assert_eq!(read_edge_list(&text).unwrap(), p);
    }

    #[test]
    fn rejects_with_line_numbers() {
        let err = read_edge_list("3 2\n0 1\n1 x\n").unwrap_err();
        assert!(
            matches!(err, EdgeListError::Malformed { line: 3, .. }),
            "{err}"
        );
        let err = read_edge_list("3 2\n0 1\n1 1\n").unwrap_err();
        assert!(matches!(err, EdgeListError::Graph { line: 3, .. }), "{err}");
        let err = read_edge_list("3 2\n0 1\n1 5\n").unwrap_err();
        assert!(err.to_string().contains("line 3"));
        let err = read_edge_list("3 2\n0 1\n").unwrap_err();
        assert_eq!(
            err,
            EdgeListError::EdgeCount {
                expected: 2,
                found: 1
            }
        );
        let err = read_edge_list("3 1\n0 1 2\n").unwrap_err();
        assert!(matches!(err, EdgeListError::Malformed { line: 2, .. }));
        assert!(read_edge_list("").is_err());
    }

    #[test]
    fn unnormalized_input_is_normalized() {
        let g = read_edge_list("3 2\n2 1\n1 0\n\n").unwrap();
        assert_eq!(write_edge_list(&g), "3 2\n0 1\n1 2\n");
    }
}
