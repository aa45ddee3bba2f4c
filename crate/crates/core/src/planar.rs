//! Straight-line plane graphs and their medial knot diagrams.
//!
//! Every plane graph is the Tait graph of its medial diagram: one crossing
//! at the midpoint of each edge, strands running around the corners at each
//! vertex. The medial diagram is a knot exactly when the number of spanning
//! trees is odd.

use std::cmp::Ordering;

use thiserror::Error;

use crate::graph::{Sign, SignedGraph};
use crate::pd::{PdError, PlanarDiagram};

/// Direction to the other end, edge index, and whether this end is `u`.
type Incidence = ((f64, f64), usize, bool);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MedialError {
    #[error("the graph has no edges")]
    NoEdges,
    #[error("edge {0} is a self-loop")]
    Loop(usize),
    #[error("edge {0} has a weight other than +1 or -1")]
    NotUnit(usize),
    #[error("edges {0} and {1} leave a vertex in the same direction")]
    Overlap(usize, usize),
    #[error("the medial diagram has more than one component")]
    Link,
    #[error(transparent)]
    Pd(#[from] PdError),
}

/// A signed graph with a point in the plane for each vertex. Edges are drawn
/// as straight segments; the caller is responsible for them not crossing.
#[derive(Clone, Debug, PartialEq)]
pub struct PlaneGraph {
    pub graph: SignedGraph,
    pub coords: Vec<(f64, f64)>,
}

/// Counterclockwise order of directions, starting from the positive x-axis.
fn direction_cmp(a: (f64, f64), b: (f64, f64)) -> Ordering {
    let half = |(x, y): (f64, f64)| y < 0.0 || (y == 0.0 && x < 0.0);
    half(a).cmp(&half(b)).then_with(|| {
        let cross = a.0 * b.1 - a.1 * b.0;
        0.0f64.partial_cmp(&cross).unwrap_or(Ordering::Equal)
    })
}

// Ports of the crossing on edge (u, v), counterclockwise with u -> v pointing
// east: 0 = v-side left, 1 = u-side left, 2 = u-side right, 3 = v-side right.
const PORTS: usize = 4;

impl PlaneGraph {
    pub fn new(graph: SignedGraph, coords: Vec<(f64, f64)>) -> Self {
        assert_eq!(graph.vertex_count(), coords.len(), "one point per vertex");
        PlaneGraph { graph, coords }
    }

    /// The medial knot diagram. An edge of weight `+1` becomes a crossing
    /// whose corner counterclockwise of the incoming under-strand lies in a
    /// vertex region, so the vertex regions have incidence number `+1` there.
    pub fn medial_pd(&self) -> Result<PlanarDiagram, MedialError> {
        let edges = self.graph.edges();
        if edges.is_empty() {
            return Err(MedialError::NoEdges);
        }
        let mut sign = Vec::with_capacity(edges.len());
        for (i, e) in edges.iter().enumerate() {
            if e.is_loop() {
                return Err(MedialError::Loop(i));
            }
            let s = e
                .weight
                .to_integer()
                .and_then(|w| i64::try_from(w).ok())
                .and_then(Sign::from_i64);
            sign.push(s.ok_or(MedialError::NotUnit(i))?);
        }

        let mut around: Vec<Vec<Incidence>> = vec![Vec::new(); self.coords.len()];
        for (i, e) in edges.iter().enumerate() {
            let (pu, pv) = (self.coords[e.u], self.coords[e.v]);
            around[e.u].push(((pv.0 - pu.0, pv.1 - pu.1), i, true));
            around[e.v].push(((pu.0 - pv.0, pu.1 - pv.1), i, false));
        }
        let mut link = vec![usize::MAX; PORTS * edges.len()];
        for list in &mut around {
            list.sort_by(|a, b| direction_cmp(a.0, b.0));
            for w in 0..list.len() {
                let (d1, e1, u1) = list[w];
                let (d2, e2, u2) = list[(w + 1) % list.len()];
                if list.len() > 1 && direction_cmp(d1, d2) == Ordering::Equal {
                    return Err(MedialError::Overlap(e1, e2));
                }
                // counterclockwise side of e1 to clockwise side of e2
                let a = PORTS * e1 + if u1 { 1 } else { 3 };
                let b = PORTS * e2 + if u2 { 2 } else { 0 };
                link[a] = b;
                link[b] = a;
            }
        }

        // walk the single component, labelling arcs in order
        let mut label = vec![0u64; PORTS * edges.len()];
        let mut entering = vec![false; PORTS * edges.len()];
        let start = 0;
        let mut cur = start;
        let mut next_label = 1u64;
        loop {
            entering[cur] = true;
            let out = PORTS * (cur / PORTS) + (cur % PORTS + 2) % PORTS;
            let far = link[out];
            label[out] = next_label;
            label[far] = next_label;
            next_label += 1;
            cur = far;
            if cur == start || next_label > 2 * edges.len() as u64 + 1 {
                break;
            }
        }
        if next_label != 2 * edges.len() as u64 + 1 || cur != start {
            return Err(MedialError::Link);
        }

        let tuples: Vec<[u64; 4]> = (0..edges.len())
            .map(|i| {
                let under = match sign[i] {
                    Sign::Plus => [1, 3],
                    Sign::Minus => [0, 2],
                };
                let p = if entering[PORTS * i + under[0]] {
                    under[0]
                } else {
                    under[1]
                };
                std::array::from_fn(|k| label[PORTS * i + (p + k) % PORTS])
            })
            .collect();
        Ok(PlanarDiagram::from_tuples(&tuples, None)?)
    }
}
