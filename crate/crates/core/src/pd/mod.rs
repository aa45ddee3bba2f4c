//! Knot diagrams given by planar-diagram (PD) codes.
//!
//! A crossing is written `X(a,b,c,d)`: the four arc labels met when going
//! counterclockwise around the crossing, starting at the incoming
//! under-strand. A knot diagram with `n` crossings has `2n` arcs and each
//! label occurs exactly twice.
//!
//! Text format: an optional `outer=<face-index>` prefix, then tuples
//! separated by commas. Whitespace is ignored, and `#` starts a comment
//! running to the end of the line. The empty diagram is the round unknot.

mod faces;
mod tait;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

pub use faces::{checkerboard, trace_faces, two_color, Dart, Face, FaceMap, Shading};
pub use tait::{
    crossing_sign, goeritz_matrix, knot_determinant, knot_report, tait_graph, tait_graphs,
    KnotReport,
};

use crate::graph::GraphError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PdError {
    #[error("malformed PD text at byte {at}: {msg}")]
    Malformed { at: usize, msg: String },
    #[error("arc label {label} occurs {count} times, expected exactly 2")]
    ArcMultiplicity { label: u64, count: usize },
    #[error("diagram is not a single knot: following the strands visits {visited} of {arcs} arcs")]
    Disconnected { visited: usize, arcs: usize },
    #[error("diagram has no crossings")]
    NoCrossings,
    #[error("face tracing found {faces} faces, a planar knot diagram with {crossings} crossings has {expected}")]
    NonPlanar {
        faces: usize,
        crossings: usize,
        expected: usize,
    },
    #[error("outer face {outer} out of range, diagram has {faces} faces")]
    OuterOutOfRange { outer: usize, faces: usize },
    #[error("faces are not two-colorable (odd cycle through face {face})")]
    OddFaceCycle { face: usize },
    #[error("face adjacency graph is disconnected (face {face} unreachable)")]
    FaceAdjacencyDisconnected { face: usize },
    #[error("the two shadings disagree: |tau| = {shaded} vs {unshaded}")]
    ShadingDisagreement { shaded: String, unshaded: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// One crossing: arc labels counterclockwise from the incoming under-strand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub arcs: [u32; 4],
}

/// A validated single-component knot diagram. Arc labels run over `1..=2n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarDiagram {
    crossings: Vec<Crossing>,
    outer: Option<usize>,
    /// For each arc (label - 1), the two darts where it ends.
    ends: Vec<[Dart; 2]>,
}

impl PlanarDiagram {
    /// Builds a diagram from raw label tuples. Labels may be any positive
    /// integers; they are renumbered to `1..=2n` preserving order.
    pub fn from_tuples(tuples: &[[u64; 4]], outer: Option<usize>) -> Result<Self, PdError> {
        let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
        for t in tuples {
            for &label in t {
                if label == 0 {
                    return Err(PdError::Malformed {
                        at: 0,
                        msg: "arc labels must be positive".into(),
                    });
                }
                *counts.entry(label).or_default() += 1;
            }
        }
        if let Some((&label, &count)) = counts.iter().find(|&(_, &c)| c != 2) {
            return Err(PdError::ArcMultiplicity { label, count });
        }
        let rank: BTreeMap<u64, u32> = counts
            .keys()
            .enumerate()
            .map(|(i, &label)| (label, i as u32 + 1))
            .collect();
        let crossings: Vec<Crossing> = tuples
            .iter()
            .map(|t| Crossing {
                arcs: t.map(|l| rank[&l]),
            })
            .collect();

        let arc_count = 2 * crossings.len();
        let mut ends: Vec<Vec<Dart>> = vec![Vec::with_capacity(2); arc_count];
        for (x, c) in crossings.iter().enumerate() {
            for (pos, &label) in c.arcs.iter().enumerate() {
                ends[label as usize - 1].push(Dart::new(x, pos));
            }
        }
        let ends: Vec<[Dart; 2]> = ends.into_iter().map(|e| [e[0], e[1]]).collect();
        let d = PlanarDiagram {
            crossings,
            outer,
            ends,
        };
        d.check_single_component()?;
        Ok(d)
    }

    /// The round unknot.
    pub fn unknot() -> Self {
        PlanarDiagram {
            crossings: Vec::new(),
            outer: None,
            ends: Vec::new(),
        }
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn edge_count(&self) -> usize {
        2 * self.crossings.len()
    }

    /// The explicitly requested unbounded face, if any.
    pub fn outer_override(&self) -> Option<usize> {
        self.outer
    }

    pub fn with_outer(mut self, outer: Option<usize>) -> Self {
        self.outer = outer;
        self
    }

    pub(crate) fn label_at(&self, d: Dart) -> u32 {
        self.crossings[d.crossing].arcs[d.position]
    }

    /// The dart at the other end of the arc leaving through `d`.
    pub(crate) fn opposite(&self, d: Dart) -> Dart {
        let [a, b] = self.ends[self.label_at(d) as usize - 1];
        if a == d {
            b
        } else {
            a
        }
    }

    fn check_single_component(&self) -> Result<(), PdError> {
        let arcs = self.edge_count();
        if arcs == 0 {
            return Ok(());
        }
        let start = Dart::new(0, 0);
        let mut seen = vec![false; arcs];
        let mut d = start;
        loop {
            seen[self.label_at(d) as usize - 1] = true;
            let o = self.opposite(d);
            d = Dart::new(o.crossing, (o.position + 2) % 4);
            if d == start {
                break;
            }
        }
        let visited = seen.iter().filter(|&&s| s).count();
        if visited == arcs {
            Ok(())
        } else {
            Err(PdError::Disconnected { visited, arcs })
        }
    }

    /// Serializes back to PD text.
    pub fn to_pd_text(&self) -> String {
        let mut out = String::new();
        if let Some(o) = self.outer {
            let _ = write!(out, "outer={o},");
        }
        for (i, c) in self.crossings.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let [a, b, cc, d] = c.arcs;
            let _ = write!(out, "X({a},{b},{cc},{d})");
        }
        out
    }
}

impl std::str::FromStr for PlanarDiagram {
    type Err = PdError;
    fn from_str(s: &str) -> Result<Self, PdError> {
        parse_pd(s)
    }
}

/// Parses PD text into a validated diagram.
pub fn parse_pd(text: &str) -> Result<PlanarDiagram, PdError> {
    let (outer, tuples) = parse_tuples(text)?;
    if tuples.is_empty() {
        return Ok(PlanarDiagram::unknot().with_outer(outer));
    }
    PlanarDiagram::from_tuples(&tuples, outer)
}

/// Syntax only: comments and whitespace dropped, tuples extracted.
fn parse_tuples(text: &str) -> Result<(Option<usize>, Vec<[u64; 4]>), PdError> {
    let compact: Vec<(usize, u8)> = text
        .lines()
        .scan(0usize, |offset, line| {
            let start = *offset;
            *offset += line.len() + 1;
            Some((start, line))
        })
        .flat_map(|(start, line)| {
            let body = line.split('#').next().unwrap_or("");
            body.bytes()
                .enumerate()
                .filter(|(_, b)| !b.is_ascii_whitespace())
                .map(move |(i, b)| (start + i, b))
        })
        .collect();
    let mut p = Cursor { s: &compact, i: 0 };

    let mut outer = None;
    if p.eat_str(b"outer=") {
        outer = Some(p.number()? as usize);
        if !p.at_end() {
            p.expect(b',')?;
        }
    }
    let mut tuples = Vec::new();
    while !p.at_end() {
        if !tuples.is_empty() {
            p.expect(b',')?;
        }
        p.expect(b'X')?;
        p.expect(b'(')?;
        let mut t = [0u64; 4];
        for (k, slot) in t.iter_mut().enumerate() {
            if k > 0 {
                if p.peek() == Some(b')') {
                    return Err(p.error("crossing tuple must have exactly 4 arc labels"));
                }
                p.expect(b',')?;
            }
            *slot = p.number()?;
        }
        if p.peek() == Some(b',') {
            return Err(p.error("crossing tuple must have exactly 4 arc labels"));
        }
        p.expect(b')')?;
        tuples.push(t);
    }
    Ok((outer, tuples))
}

struct Cursor<'a> {
    s: &'a [(usize, u8)],
    i: usize,
}

impl Cursor<'_> {
    fn at_end(&self) -> bool {
        self.i >= self.s.len()
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.i).map(|&(_, b)| b)
    }

    fn offset(&self) -> usize {
        self.s
            .get(self.i)
            .or_else(|| self.s.last())
            .map(|&(o, _)| o)
            .unwrap_or(0)
    }

    fn error(&self, msg: impl Into<String>) -> PdError {
        PdError::Malformed {
            at: self.offset(),
            msg: msg.into(),
        }
    }

    fn expect(&mut self, b: u8) -> Result<(), PdError> {
        match self.peek() {
            Some(c) if c == b => {
                self.i += 1;
                Ok(())
            }
            Some(c) => Err(self.error(format!("expected `{}`, found `{}`", b as char, c as char))),
            None => Err(self.error(format!("expected `{}`, found end of input", b as char))),
        }
    }

    fn eat_str(&mut self, lit: &[u8]) -> bool {
        let matches = lit
            .iter()
            .enumerate()
            .all(|(k, &b)| self.s.get(self.i + k).map(|&(_, c)| c) == Some(b));
        if matches {
            self.i += lit.len();
        }
        matches
    }

    fn number(&mut self) -> Result<u64, PdError> {
        let start = self.i;
        let mut value: u64 = 0;
        while let Some(c) = self.peek().filter(u8::is_ascii_digit) {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add((c - b'0') as u64))
                .ok_or_else(|| self.error("number too large"))?;
            self.i += 1;
        }
        if self.i == start {
            return Err(self.error("expected a number"));
        }
        Ok(value)
    }
}
