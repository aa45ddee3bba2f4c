//! Text format for symmetric Tait graphs.
//!
//! ```text
//! # theta(3, 2)
//! left=2
//! axis=2
//! ledge w1 v1 +1
//! ledge v1 v2 +1
//! ledge v2 w2 +1
//! aedge w1 w2 +1
//! xedge v1 -1
//! ```
//!
//! Left vertices are `v1..vn`, axis vertices `w1..wm`. Weights are `+1`,
//! `1` or `-1`.

use std::fmt::Write as _;

use thiserror::Error;

use super::{HalfVertex, SymmetricError, SymmetricTaitGraph};
use crate::graph::Sign;

/// Upper bound on `left=` and `axis=` values.
pub const MAX_HALF_VERTICES: usize = 1 << 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymmetricParseError {
    #[error("line {line}: expected `{key}=<count>`")]
    BadHeader { line: usize, key: &'static str },
    #[error("line {line}: `{key}=` given twice")]
    DuplicateHeader { line: usize, key: &'static str },
    #[error("line {line}: `left=` and `axis=` must come before edges")]
    MissingHeader { line: usize },
    #[error("line {line}: bad vertex `{token}`")]
    BadVertex { line: usize, token: String },
    #[error("line {line}: weight must be +1 or -1, got `{token}`")]
    BadWeight { line: usize, token: String },
    #[error("line {line}: malformed line `{text}`")]
    Malformed { line: usize, text: String },
    #[error("line {line}: {source}")]
    Invalid {
        line: usize,
        #[source]
        source: SymmetricError,
    },
    #[error("missing `left=` or `axis=` header")]
    Incomplete,
}

fn parse_vertex(token: &str, line: usize) -> Result<HalfVertex, SymmetricParseError> {
    let bad = || SymmetricParseError::BadVertex {
        line,
        token: token.to_string(),
    };
    let (kind, digits) = token.split_at(token.len().min(1));
    let i: usize = digits.parse().map_err(|_| bad())?;
    if i == 0 || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    match kind {
        "v" => Ok(HalfVertex::Left(i - 1)),
        "w" => Ok(HalfVertex::Axis(i - 1)),
        _ => Err(bad()),
    }
}

fn parse_sign(token: &str, line: usize) -> Result<Sign, SymmetricParseError> {
    match token {
        "1" | "+1" => Ok(Sign::Plus),
        "-1" | "\u{2212}1" => Ok(Sign::Minus),
        _ => Err(SymmetricParseError::BadWeight {
            line,
            token: token.to_string(),
        }),
    }
}

fn header(content: &str, key: &'static str) -> Option<Option<usize>> {
    let rest = content.strip_prefix(key)?;
    let value = rest.trim_start().strip_prefix('=')?.trim();
    Some(value.parse().ok().filter(|&n| n <= MAX_HALF_VERTICES))
}

pub fn parse_symmetric(text: &str) -> Result<SymmetricTaitGraph, SymmetricParseError> {
    let mut left = None;
    let mut axis = None;
    let mut graph: Option<SymmetricTaitGraph> = None;
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        for (key, slot) in [("left", &mut left), ("axis", &mut axis)] {
            if let Some(value) = header(content, key) {
                if graph.is_some() {
                    return Err(SymmetricParseError::Malformed {
                        line,
                        text: content.to_string(),
                    });
                }
                if slot.is_some() {
                    return Err(SymmetricParseError::DuplicateHeader { line, key });
                }
                *slot = Some(value.ok_or(SymmetricParseError::BadHeader { line, key })?);
            }
        }
        if header(content, "left").is_some() || header(content, "axis").is_some() {
            continue;
        }
        if graph.is_none() {
            let (Some(n), Some(m)) = (left, axis) else {
                return Err(SymmetricParseError::MissingHeader { line });
            };
            graph = Some(
                SymmetricTaitGraph::new(n, m)
                    .map_err(|source| SymmetricParseError::Invalid { line, source })?,
            );
        }
        let g = graph.as_mut().expect("created above");
        let parts: Vec<&str> = content.split_whitespace().collect();
        let invalid = |source| SymmetricParseError::Invalid { line, source };
        match parts.as_slice() {
            ["ledge", u, v, w] => {
                let (u, v) = (parse_vertex(u, line)?, parse_vertex(v, line)?);
                g.add_left_edge(u, v, parse_sign(w, line)?)
                    .map_err(invalid)?;
            }
            ["aedge", a, b, w] => {
                let (a, b) = match (parse_vertex(a, line)?, parse_vertex(b, line)?) {
                    (HalfVertex::Axis(a), HalfVertex::Axis(b)) => (a, b),
                    _ => {
                        return Err(SymmetricParseError::Malformed {
                            line,
                            text: content.to_string(),
                        })
                    }
                };
                g.add_axis_edge(a, b, parse_sign(w, line)?)
                    .map_err(invalid)?;
            }
            ["xedge", v, w] => {
                let HalfVertex::Left(v) = parse_vertex(v, line)? else {
                    return Err(SymmetricParseError::Malformed {
                        line,
                        text: content.to_string(),
                    });
                };
                g.add_cross_edge(v, parse_sign(w, line)?).map_err(invalid)?;
            }
            _ => {
                return Err(SymmetricParseError::Malformed {
                    line,
                    text: content.to_string(),
                })
            }
        }
    }
    match (graph, left, axis) {
        (Some(g), _, _) => Ok(g),
        (None, Some(n), Some(m)) => {
            SymmetricTaitGraph::new(n, m).map_err(|source| SymmetricParseError::Invalid {
                line: last_line,
                source,
            })
        }
        _ => Err(SymmetricParseError::Incomplete),
    }
}

pub fn write_symmetric(s: &SymmetricTaitGraph) -> String {
    let mut out = format!("left={}\naxis={}\n", s.left_count(), s.axis_count());
    for e in s.left_edges() {
        let _ = writeln!(out, "ledge {} {} {}", e.u, e.v, e.sign);
    }
    for e in s.axis_edges() {
        let _ = writeln!(out, "aedge w{} w{} {}", e.a + 1, e.b + 1, e.sign);
    }
    for e in s.cross_edges() {
        let _ = writeln!(out, "xedge v{} {}", e.v + 1, e.sign);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const THETA_3_2: &str = "# theta(3, 2)\nleft=2\naxis = 2\nledge w1 v1 +1\nledge v1 v2 1\nledge v2 w2 +1\naedge w1 w2 +1 # axis\n";

    #[test]
    fn parses() {
        let s = parse_symmetric(THETA_3_2).unwrap();
        assert_eq!((s.left_count(), s.axis_count()), (2, 2));
        assert_eq!(s.left_edges().len(), 3);
        assert_eq!(s.axis_edges().len(), 1);
        assert_eq!(parse_symmetric(&write_symmetric(&s)).unwrap(), s);
    }

    #[test]
    fn header_only() {
        let s = parse_symmetric("left=0\naxis=1\n").unwrap();
        assert_eq!(s.axis_count(), 1);
    }

    #[test]
    fn errors() {
        use SymmetricParseError::*;
        assert_eq!(parse_symmetric(""), Err(Incomplete));
        assert!(matches!(
            parse_symmetric("left=1\nledge v1 w1 1"),
            Err(MissingHeader { line: 2 })
        ));
        assert!(matches!(
            parse_symmetric("left=x"),
            Err(BadHeader { line: 1, .. })
        ));
        assert!(matches!(
            parse_symmetric("left=1\nleft=2"),
            Err(DuplicateHeader { line: 2, .. })
        ));
        assert!(matches!(
            parse_symmetric("left=1\naxis=1\nledge v0 w1 1"),
            Err(BadVertex { line: 3, .. })
        ));
        assert!(matches!(
            parse_symmetric("left=1\naxis=1\nledge v1 w1 2"),
            Err(BadWeight { line: 3, .. })
        ));
        assert!(matches!(
            parse_symmetric("left=1\naxis=1\nledge v2 w1 1"),
            Err(Invalid { line: 3, .. })
        ));
        assert!(matches!(
            parse_symmetric("left=1\naxis=1\nxedge w1 1"),
            Err(Malformed { line: 3, .. })
        ));
        assert!(matches!(
            parse_symmetric("left=1\naxis=1\naedge v1 w1 1"),
            Err(Malformed { .. })
        ));
        assert!(matches!(
            parse_symmetric("left=1\naxis=0"),
            Err(Invalid { .. })
        ));
        assert!(matches!(
            parse_symmetric("left=1\naxis=1\nbogus"),
            Err(Malformed { .. })
        ));
        assert!(matches!(
            parse_symmetric("left=1\naxis=1\nledge v+1 w1 1"),
            Err(BadVertex { .. })
        ));
    }

    proptest! {
        #[test]
        fn write_then_parse(
            n in 0usize..4,
            m in 1usize..4,
            raw in prop::collection::vec((0usize..8, 0usize..8, 0u8..3, any::<bool>()), 0..10)
        ) {
            let mut s = SymmetricTaitGraph::new(n, m).unwrap();
            let vertex = |x: usize| if n > 0 && x.is_multiple_of(2) { HalfVertex::Left(x % n) } else { HalfVertex::Axis(x % m) };
            for (a, b, kind, plus) in raw {
                let sign = if plus { Sign::Plus } else { Sign::Minus };
                let _ = match kind {
                    0 => s.add_left_edge(vertex(a), vertex(b), sign),
                    1 => s.add_axis_edge(a % m, b % m, sign),
                    _ if n > 0 => s.add_cross_edge(a % n, sign),
                    _ => Ok(()),
                };
            }
            prop_assert_eq!(parse_symmetric(&write_symmetric(&s)).unwrap(), s);
        }
    }
}
