//! Involution-symmetric Tait graphs.
//!
//! A [`SymmetricTaitGraph`] stores the left half `V_L` of the graph plus the
//! axis `V_C`; the right half `V_R` is generated by mirroring, so the
//! symmetry holds by construction. Vertex ids in the expanded graph are
//! `V_L = 0..n`, `V_C = n..n+m`, `V_R = n+m..2n+m`, with `v_i` and `v_i'`
//! at `i` and `n + m + i`.

mod text;

use std::fmt;

use num_bigint::BigUint;
use thiserror::Error;

use crate::dyadic::Dyadic;
use crate::graph::{EdgeId, GraphError, Sign, SignedGraph};

pub use text::{parse_symmetric, write_symmetric, SymmetricParseError};

/// A vertex of the stored half: `Left(i)` is `v_{i+1}`, `Axis(j)` is `w_{j+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HalfVertex {
    Left(usize),
    Axis(usize),
}

impl fmt::Display for HalfVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HalfVertex::Left(i) => write!(f, "v{}", i + 1),
            HalfVertex::Axis(j) => write!(f, "w{}", j + 1),
        }
    }
}

/// An edge of the left half; it is mirrored into the right half.
///
/// An edge between two axis vertices stands for a pair of parallel edges
/// swapped by the involution (the left copy and its mirror).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LeftEdge {
    pub u: HalfVertex,
    pub v: HalfVertex,
    pub sign: Sign,
}

/// An edge `(w_a, w_b)` lying on the axis, fixed by the involution.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AxisEdge {
    pub a: usize,
    pub b: usize,
    pub sign: Sign,
}

/// An edge `(v_i, v_i')` crossing the axis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrossEdge {
    pub v: usize,
    pub sign: Sign,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymmetricError {
    #[error("the axis needs at least one vertex")]
    EmptyAxis,
    #[error("vertex {vertex} out of range")]
    VertexOutOfRange { vertex: HalfVertex },
    #[error("edge ({u}, {v}) would be a loop fixed by the involution")]
    AxisLoop { u: HalfVertex, v: HalfVertex },
    #[error("the expanded graph is disconnected")]
    Disconnected,
    #[error("computation paths disagree: {0}")]
    Disagreement(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricTaitGraph {
    left: usize,
    axis: usize,
    left_edges: Vec<LeftEdge>,
    axis_edges: Vec<AxisEdge>,
    cross_edges: Vec<CrossEdge>,
}

impl SymmetricTaitGraph {
    pub fn new(left: usize, axis: usize) -> Result<Self, SymmetricError> {
        if axis == 0 {
            return Err(SymmetricError::EmptyAxis);
        }
        Ok(SymmetricTaitGraph {
            left,
            axis,
            left_edges: Vec::new(),
            axis_edges: Vec::new(),
            cross_edges: Vec::new(),
        })
    }

    /// Number of left vertices `n`.
    pub fn left_count(&self) -> usize {
        self.left
    }

    /// Number of axis vertices `m`.
    pub fn axis_count(&self) -> usize {
        self.axis
    }

    pub fn left_edges(&self) -> &[LeftEdge] {
        &self.left_edges
    }

    pub fn axis_edges(&self) -> &[AxisEdge] {
        &self.axis_edges
    }

    pub fn cross_edges(&self) -> &[CrossEdge] {
        &self.cross_edges
    }

    fn check(&self, x: HalfVertex) -> Result<(), SymmetricError> {
        let ok = match x {
            HalfVertex::Left(i) => i < self.left,
            HalfVertex::Axis(j) => j < self.axis,
        };
        if ok {
            Ok(())
        } else {
            Err(SymmetricError::VertexOutOfRange { vertex: x })
        }
    }

    /// Adds a left edge and, implicitly, its mirror image. Loops at a left
    /// vertex are allowed; loops at an axis vertex are not.
    pub fn add_left_edge(
        &mut self,
        u: HalfVertex,
        v: HalfVertex,
        sign: Sign,
    ) -> Result<(), SymmetricError> {
        self.check(u)?;
        self.check(v)?;
        if u == v && matches!(u, HalfVertex::Axis(_)) {
            return Err(SymmetricError::AxisLoop { u, v });
        }
        self.left_edges.push(LeftEdge { u, v, sign });
        Ok(())
    }

    pub fn add_axis_edge(&mut self, a: usize, b: usize, sign: Sign) -> Result<(), SymmetricError> {
        self.check(HalfVertex::Axis(a))?;
        self.check(HalfVertex::Axis(b))?;
        if a == b {
            return Err(SymmetricError::AxisLoop {
                u: HalfVertex::Axis(a),
                v: HalfVertex::Axis(b),
            });
        }
        self.axis_edges.push(AxisEdge { a, b, sign });
        Ok(())
    }

    pub fn add_cross_edge(&mut self, v: usize, sign: Sign) -> Result<(), SymmetricError> {
        self.check(HalfVertex::Left(v))?;
        self.cross_edges.push(CrossEdge { v, sign });
        Ok(())
    }

    fn left_id(&self, x: HalfVertex) -> usize {
        match x {
            HalfVertex::Left(i) => i,
            HalfVertex::Axis(j) => self.left + j,
        }
    }

    fn right_id(&self, x: HalfVertex) -> usize {
        match x {
            HalfVertex::Left(i) => self.left + self.axis + i,
            HalfVertex::Axis(j) => self.left + j,
        }
    }

    /// The full graph on `V_L ∪ V_C ∪ V_R`, without the connectivity check.
    fn expand_unchecked(&self) -> SignedGraph {
        let mut g = SignedGraph::new(2 * self.left + self.axis);
        for e in &self.left_edges {
            let w = e.sign.to_dyadic();
            add(&mut g, self.left_id(e.u), self.left_id(e.v), w.clone());
            add(&mut g, self.right_id(e.u), self.right_id(e.v), w);
        }
        for e in &self.axis_edges {
            add(&mut g, self.left + e.a, self.left + e.b, e.sign.to_dyadic());
        }
        for e in &self.cross_edges {
            add(&mut g, e.v, self.left + self.axis + e.v, e.sign.to_dyadic());
        }
        g
    }

    /// The full symmetric graph. Left edges appear with their mirror images;
    /// axis and cross edges appear once.
    pub fn expand(&self) -> Result<SignedGraph, SymmetricError> {
        let g = self.expand_unchecked();
        if g.is_connected() {
            Ok(g)
        } else {
            Err(SymmetricError::Disconnected)
        }
    }

    /// Checks that the expansion is connected.
    pub fn validate(&self) -> Result<(), SymmetricError> {
        self.expand().map(|_| ())
    }

    /// `G_R` with the ids of its halved axis edges. Vertices: `w_j` at `j`,
    /// `v_i'` at `m + i`.
    fn right_with_axis_ids(&self) -> (SignedGraph, Vec<EdgeId>) {
        let m = self.axis;
        let id = |x: HalfVertex| match x {
            HalfVertex::Left(i) => m + i,
            HalfVertex::Axis(j) => j,
        };
        let mut g = SignedGraph::new(m + self.left);
        for e in &self.left_edges {
            add(&mut g, id(e.u), id(e.v), e.sign.to_dyadic());
        }
        let mut halved = Vec::new();
        for e in &self.axis_edges {
            halved.push(g.edges().len());
            add(&mut g, e.a, e.b, e.sign.to_dyadic().half());
        }
        (g, halved)
    }

    /// `G_R`: the subgraph induced on `V_C ∪ V_R` with every axis edge at
    /// half weight. Cross edges have an endpoint in `V_L` and are dropped.
    pub fn g_right(&self) -> SignedGraph {
        self.right_with_axis_ids().0
    }

    /// `G_L` with the ids of the edges coming from cross edges. Vertices:
    /// `v_i` at `i`, hub `u` at `n`.
    fn left_with_cross_ids(&self) -> (SignedGraph, Vec<EdgeId>) {
        let hub = self.left;
        let mut g = SignedGraph::new(self.left + 1);
        for e in &self.left_edges {
            let w = e.sign.to_dyadic();
            match (e.u, e.v) {
                (HalfVertex::Left(a), HalfVertex::Left(b)) => add(&mut g, a, b, w),
                (HalfVertex::Left(a), HalfVertex::Axis(_))
                | (HalfVertex::Axis(_), HalfVertex::Left(a)) => add(&mut g, a, hub, w),
                (HalfVertex::Axis(_), HalfVertex::Axis(_)) => {}
            }
        }
        let mut doubled = Vec::new();
        for e in &self.cross_edges {
            doubled.push(g.edges().len());
            add(&mut g, e.v, hub, e.sign.to_dyadic().double());
        }
        (g, doubled)
    }

    /// `G_L`: the subgraph induced on `V_L` plus a hub `u` standing for the
    /// axis. A cross edge at `v_i` becomes `(u, v_i)` of twice its weight, a
    /// spoke `(v_i, w_j)` becomes `(u, v_i)` of the same weight, and edges
    /// inside the axis vanish.
    pub fn g_left(&self) -> SignedGraph {
        self.left_with_cross_ids().0
    }

    /// Tait graph of the constituent `K_ab`: `G_R` with every halved axis
    /// edge subdivided into two unit edges of its sign.
    pub fn constituent_ab(&self) -> SignedGraph {
        let (mut g, halved) = self.right_with_axis_ids();
        for e in halved {
            g = g.subdivide_edge(e).expect("axis edges are halved units");
        }
        g
    }

    /// Tait graph of the constituent `K_bc`: `G_L` with every doubled cross
    /// edge split into a pair of parallel unit edges.
    pub fn constituent_bc(&self) -> SignedGraph {
        let (mut g, doubled) = self.left_with_cross_ids();
        for e in doubled {
            g = g.split_multiedge(e).expect("cross edges are not loops");
        }
        g
    }

    /// Whether the axis carries exactly `m - 1` edges, as it does for the
    /// quotient of a strongly invertible knot (the axis edges then form a
    /// path). The product `det(K_ab) det(K_bc) = det(ϑ)` is only expected in
    /// this case.
    pub fn axis_is_path_like(&self) -> bool {
        self.axis_edges.len() + 1 == self.axis
    }

    /// Swaps the roles of `V_L` and `V_R`. The result describes the same
    /// expanded graph up to relabelling.
    pub fn mirrored_expansion(&self) -> SignedGraph {
        let n = self.left;
        let m = self.axis;
        let swap = |x: usize| {
            if x < n {
                x + n + m
            } else if x < n + m {
                x
            } else {
                x - n - m
            }
        };
        let g = self.expand_unchecked();
        let mut h = SignedGraph::new(g.vertex_count());
        for e in g.edges() {
            add(&mut h, swap(e.u), swap(e.v), e.weight.clone());
        }
        h
    }
}

fn add(g: &mut SignedGraph, u: usize, v: usize, w: Dyadic) {
    g.add_edge(u, v, w)
        .expect("ids are in range by construction");
}

/// Tree weights of the full graph, `G_L` and `G_R` from the enumeration
/// oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleTaus {
    pub tau_full: Dyadic,
    pub tau_left: Dyadic,
    pub tau_right: Dyadic,
}

/// The theta-curve determinant computed by three paths: the full graph,
/// the factorization `2^{m-1} τ(G_L) τ(G_R)`, and the constituent product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaReport {
    /// `|τ(G)|` of the expanded graph.
    pub det_full: BigUint,
    pub det_ab: BigUint,
    pub det_bc: BigUint,
    /// `2^{m-1} τ(G_L) τ(G_R)`.
    pub zy_value: Dyadic,
    pub m: usize,
    pub tau_full: Dyadic,
    pub tau_left: Dyadic,
    pub tau_right: Dyadic,
    pub tau_ab: Dyadic,
    pub tau_bc: Dyadic,
    /// `det_full == det_ab * det_bc`.
    pub product_holds: bool,
    /// `|zy_value| == det_full`.
    pub zy_holds: bool,
    pub axis_path_like: bool,
    pub oracle: Option<OracleTaus>,
}

impl ThetaReport {
    pub fn is_odd(&self) -> bool {
        self.det_full.bit(0)
    }

    /// The constituent determinants in increasing order.
    pub fn factors(&self) -> [BigUint; 2] {
        let mut f = [self.det_ab.clone(), self.det_bc.clone()];
        f.sort();
        f
    }
}

fn magnitude(v: &Dyadic, what: &str) -> Result<BigUint, SymmetricError> {
    v.to_integer()
        .map(|i| i.magnitude().clone())
        .ok_or_else(|| SymmetricError::Disagreement(format!("{what} = {v} is not an integer")))
}

/// Computes the report by reduced-Laplacian determinants. Fails if the
/// factorization disagrees with the full graph, or if the constituent
/// product fails on a path-like axis.
pub fn theta_determinant(s: &SymmetricTaitGraph) -> Result<ThetaReport, SymmetricError> {
    theta_determinant_with(s, false)
}

/// As [`theta_determinant`]; with `oracle`, the tree weights of `G`, `G_L`
/// and `G_R` are also enumerated and must match the determinants exactly.
pub fn theta_determinant_with(
    s: &SymmetricTaitGraph,
    oracle: bool,
) -> Result<ThetaReport, SymmetricError> {
    let full = s.expand()?;
    let left = s.g_left();
    let right = s.g_right();
    let tau_full = full.tree_weight().0;
    let tau_left = left.tree_weight().0;
    let tau_right = right.tree_weight().0;
    let tau_ab = s.constituent_ab().tree_weight().0;
    let tau_bc = s.constituent_bc().tree_weight().0;
    let m = s.axis_count();
    let zy_value = Dyadic::pow2(m as i32 - 1) * &tau_left * &tau_right;

    let oracle = if oracle {
        let taus = OracleTaus {
            tau_full: full.tree_weight_oracle()?.0,
            tau_left: left.tree_weight_oracle()?.0,
            tau_right: right.tree_weight_oracle()?.0,
        };
        for (name, det, brute) in [
            ("tau(G)", &tau_full, &taus.tau_full),
            ("tau(G_L)", &tau_left, &taus.tau_left),
            ("tau(G_R)", &tau_right, &taus.tau_right),
        ] {
            if det != brute {
                return Err(SymmetricError::Disagreement(format!(
                    "{name}: determinant {det}, enumeration {brute}"
                )));
            }
        }
        Some(taus)
    } else {
        None
    };

    let det_full = magnitude(&tau_full, "tau(G)")?;
    let det_ab = magnitude(&tau_ab, "tau(G_ab)")?;
    let det_bc = magnitude(&tau_bc, "tau(G_bc)")?;
    let zy_holds = zy_value == tau_full;
    let product_holds = det_full == &det_ab * &det_bc;
    let axis_path_like = s.axis_is_path_like();
    if !zy_holds {
        return Err(SymmetricError::Disagreement(format!(
            "tau(G) = {tau_full} but 2^(m-1) tau(G_L) tau(G_R) = {zy_value}"
        )));
    }
    if tau_bc != tau_left {
        return Err(SymmetricError::Disagreement(format!(
            "tau(G_bc) = {tau_bc} but tau(G_L) = {tau_left}"
        )));
    }
    if axis_path_like && !product_holds {
        return Err(SymmetricError::Disagreement(format!(
            "det = {det_full} but det(K_ab) det(K_bc) = {det_ab} * {det_bc}"
        )));
    }
    Ok(ThetaReport {
        det_full,
        det_ab,
        det_bc,
        zy_value,
        m,
        tau_full,
        tau_left,
        tau_right,
        tau_ab,
        tau_bc,
        product_holds,
        zy_holds,
        axis_path_like,
        oracle,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use HalfVertex::{Axis, Left};

    fn d(v: i64) -> Dyadic {
        Dyadic::from(v)
    }

    /// Theta graph from the (3, 2) pretzel: paths of length 3, 3 and 1
    /// between the two axis vertices.
    fn pretzel_3_2() -> SymmetricTaitGraph {
        let mut s = SymmetricTaitGraph::new(2, 2).unwrap();
        s.add_left_edge(Axis(0), Left(0), Sign::Plus).unwrap();
        s.add_left_edge(Left(0), Left(1), Sign::Plus).unwrap();
        s.add_left_edge(Left(1), Axis(1), Sign::Plus).unwrap();
        s.add_axis_edge(0, 1, Sign::Plus).unwrap();
        s
    }

    #[test]
    fn expand_layout() {
        let g = pretzel_3_2().expand().unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edges().len(), 7);
        // v1 = 0, v2 = 1, w1 = 2, w2 = 3, v1' = 4, v2' = 5
        let pairs: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u, e.v)).collect();
        assert!(pairs.contains(&(2, 0)) && pairs.contains(&(2, 4)));
        assert!(pairs.contains(&(1, 3)) && pairs.contains(&(5, 3)));
        assert!(pairs.contains(&(2, 3)));
    }

    #[test]
    fn axis_path_only() {
        let mut s = SymmetricTaitGraph::new(0, 2).unwrap();
        s.add_axis_edge(0, 1, Sign::Plus).unwrap();
        let g = s.expand().unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.tree_weight().0, d(1));
        let r = theta_determinant(&s).unwrap();
        assert_eq!(r.det_full, BigUint::from(1u32));
        assert!(r.product_holds && r.zy_holds);
        // G_R is a single half edge; K_ab a subdivided path
        let gr = s.g_right();
        assert_eq!(gr.edges().len(), 1);
        assert_eq!(gr.edges()[0].weight, Dyadic::new(1, 1));
        let ab = s.constituent_ab();
        assert_eq!(ab.vertex_count(), 3);
        assert_eq!(ab.tree_weight().abs(), d(1));
    }

    #[test]
    fn single_cross_edge() {
        let mut s = SymmetricTaitGraph::new(1, 1).unwrap();
        s.add_cross_edge(0, Sign::Plus).unwrap();
        // v1 - v1' with the axis vertex isolated: disconnected
        assert_eq!(s.expand(), Err(SymmetricError::Disconnected));
        let gl = s.g_left();
        assert_eq!(gl.edges().len(), 1);
        assert_eq!(gl.edges()[0].weight, d(2));
        assert_eq!(gl.tree_weight().0, d(2));
        let bc = s.constituent_bc();
        assert_eq!(bc.edges().len(), 2);
        assert!(bc.edges().iter().all(|e| e.weight == d(1)));
        assert_eq!(bc.tree_weight().0, d(2));
    }

    #[test]
    fn spoke_becomes_hub_edge() {
        let mut s = SymmetricTaitGraph::new(1, 1).unwrap();
        s.add_left_edge(Left(0), Axis(0), Sign::Minus).unwrap();
        let gl = s.g_left();
        assert_eq!(gl.edges().len(), 1);
        let e = &gl.edges()[0];
        assert_eq!((e.u, e.v, e.weight.clone()), (0, 1, d(-1)));
    }

    #[test]
    fn no_axis_edges_right_is_induced() {
        let mut s = SymmetricTaitGraph::new(2, 1).unwrap();
        s.add_left_edge(Left(0), Left(1), Sign::Plus).unwrap();
        s.add_left_edge(Left(1), Axis(0), Sign::Minus).unwrap();
        let gr = s.g_right();
        assert_eq!(gr.vertex_count(), 3);
        let weights: Vec<Dyadic> = gr.edges().iter().map(|e| e.weight.clone()).collect();
        assert_eq!(weights, vec![d(1), d(-1)]);
    }

    #[test]
    fn pretzel_values() {
        let s = pretzel_3_2();
        let r = theta_determinant_with(&s, true).unwrap();
        assert_eq!(r.det_full, BigUint::from(15u32));
        assert_eq!(r.factors(), [BigUint::from(3u32), BigUint::from(5u32)]);
        assert_eq!(r.det_ab, BigUint::from(5u32));
        assert_eq!(r.det_bc, BigUint::from(3u32));
        assert_eq!(r.tau_left, d(3));
        assert_eq!(r.tau_right, Dyadic::new(5, 1));
        assert!(r.is_odd() && r.axis_path_like);
    }

    #[test]
    fn mirror_is_isomorphic() {
        let s = pretzel_3_2();
        let g = s.expand().unwrap();
        let h = s.mirrored_expansion();
        assert_eq!(g.tree_weight(), h.tree_weight());
        let mut a: Vec<_> = g
            .edges()
            .iter()
            .map(|e| (e.u.min(e.v), e.u.max(e.v)))
            .collect();
        let mut b: Vec<_> = h
            .edges()
            .iter()
            .map(|e| (e.u.min(e.v), e.u.max(e.v)))
            .collect();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn swapped_axis_pair() {
        // two parallel edges w1 w2 swapped by the involution, plus one on the axis
        let mut s = SymmetricTaitGraph::new(0, 2).unwrap();
        s.add_left_edge(Axis(0), Axis(1), Sign::Plus).unwrap();
        s.add_axis_edge(0, 1, Sign::Plus).unwrap();
        let r = theta_determinant_with(&s, true).unwrap();
        assert_eq!(r.det_full, BigUint::from(3u32));
        assert_eq!(r.det_ab, BigUint::from(3u32));
        assert_eq!(r.det_bc, BigUint::from(1u32));
        assert_eq!(s.g_left().edges().len(), 0);
    }

    #[test]
    fn non_path_axis_is_reported_not_rejected() {
        let mut s = SymmetricTaitGraph::new(1, 2).unwrap();
        s.add_left_edge(Left(0), Axis(0), Sign::Plus).unwrap();
        s.add_left_edge(Left(0), Axis(1), Sign::Plus).unwrap();
        let r = theta_determinant_with(&s, true).unwrap();
        assert!(!r.axis_path_like);
        assert!(r.zy_holds);
    }

    #[test]
    fn validation() {
        assert_eq!(
            SymmetricTaitGraph::new(2, 0),
            Err(SymmetricError::EmptyAxis)
        );
        let mut s = SymmetricTaitGraph::new(1, 2).unwrap();
        assert!(matches!(
            s.add_left_edge(Left(1), Axis(0), Sign::Plus),
            Err(SymmetricError::VertexOutOfRange { .. })
        ));
        assert!(matches!(
            s.add_axis_edge(1, 1, Sign::Plus),
            Err(SymmetricError::AxisLoop { .. })
        ));
        assert!(matches!(
            s.add_left_edge(Axis(0), Axis(0), Sign::Plus),
            Err(SymmetricError::AxisLoop { .. })
        ));
        assert!(s.add_left_edge(Left(0), Left(0), Sign::Plus).is_ok());
        assert!(matches!(
            s.add_cross_edge(3, Sign::Plus),
            Err(SymmetricError::VertexOutOfRange { .. })
        ));
    }
}
