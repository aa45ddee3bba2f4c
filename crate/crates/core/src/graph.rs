//! Undirected weighted multigraphs with dyadic edge weights.
//!
//! Multi-edges and self-loops are allowed. The tree weight of a graph is the
//! sum, over spanning trees, of the product of edge weights. It is computed
//! two ways: as the determinant of a reduced Laplacian ([`SignedGraph::tree_weight`])
//! and by enumerating spanning trees ([`SignedGraph::tree_weight_oracle`]).

use std::fmt;

use thiserror::Error;

use crate::dyadic::Dyadic;
use crate::matrix::ExactMatrix;

/// Largest number of non-loop edges the enumeration oracle accepts.
pub const ORACLE_EDGE_LIMIT: usize = 24;

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range (graph has {vertex_count} vertices)")]
    VertexOutOfRange {
        vertex: VertexId,
        vertex_count: usize,
    },
    #[error("edge {edge} does not exist (graph has {edge_count} edges)")]
    MissingEdge { edge: EdgeId, edge_count: usize },
    #[error("edge {0} is a self-loop")]
    SelfLoop(EdgeId),
    #[error("edge {edge} has weight {weight}, expected +1/2 or -1/2")]
    NotHalfWeight { edge: EdgeId, weight: Dyadic },
    #[error("graph has {edges} non-loop edges; the enumeration oracle is limited to {limit}")]
    OracleLimit { edges: usize, limit: usize },
}

/// A sign `±1`, used for crossing incidence numbers and Tait-graph weights.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn to_dyadic(self) -> Dyadic {
        Dyadic::from(self.value())
    }

    pub fn from_i64(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub weight: Dyadic,
    /// Where the edge came from, e.g. the index of a diagram crossing.
    pub tag: Option<usize>,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }
}

/// The tree weight `τ(G)`: a signed exact value. Determinant APIs report
/// its absolute value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeWeight(pub Dyadic);

impl TreeWeight {
    pub fn value(&self) -> &Dyadic {
        &self.0
    }

    pub fn abs(&self) -> Dyadic {
        self.0.abs()
    }
}

impl fmt::Display for TreeWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedGraph {
    vertex_count: usize,
    edges: Vec<Edge>,
}

impl SignedGraph {
    /// A graph with `vertex_count` isolated vertices.
    ///
    /// Panics if `vertex_count` is zero.
    pub fn new(vertex_count: usize) -> Self {
        assert!(vertex_count > 0, "a graph needs at least one vertex");
        SignedGraph {
            vertex_count,
            edges: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> Result<&Edge, GraphError> {
        self.edges.get(e).ok_or(GraphError::MissingEdge {
            edge: e,
            edge_count: self.edges.len(),
        })
    }

    fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count,
            })
        }
    }

    pub fn add_edge(
        &mut self,
        u: VertexId,
        v: VertexId,
        weight: impl Into<Dyadic>,
    ) -> Result<EdgeId, GraphError> {
        self.add_tagged_edge(u, v, weight, None)
    }

    pub fn add_tagged_edge(
        &mut self,
        u: VertexId,
        v: VertexId,
        weight: impl Into<Dyadic>,
        tag: Option<usize>,
    ) -> Result<EdgeId, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.edges.push(Edge {
            u,
            v,
            weight: weight.into(),
            tag,
        });
        Ok(self.edges.len() - 1)
    }

    /// Adds a vertex and returns its id.
    pub fn add_vertex(&mut self) -> VertexId {
        self.vertex_count += 1;
        self.vertex_count - 1
    }

    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|e| e.is_loop()).count()
    }

    pub fn is_connected(&self) -> bool {
        let mut uf = UnionFind::new(self.vertex_count);
        let mut components = self.vertex_count;
        for e in &self.edges {
            if uf.union(e.u, e.v) {
                components -= 1;
            }
        }
        components == 1
    }

    /// Full Laplacian: off-diagonal `(i, j)` is minus the total weight of the
    /// edges joining `i` and `j`, each diagonal entry makes its row sum to
    /// zero. Self-loops contribute nothing.
    pub fn laplacian(&self) -> ExactMatrix {
        let mut l = ExactMatrix::zeros(self.vertex_count);
        for e in self.edges.iter().filter(|e| !e.is_loop()) {
            l[(e.u, e.v)] -= &e.weight;
            l[(e.v, e.u)] -= &e.weight;
            l[(e.u, e.u)] += &e.weight;
            l[(e.v, e.v)] += &e.weight;
        }
        l
    }

    /// The Laplacian with row and column `delete` removed.
    pub fn reduced_laplacian(&self, delete: VertexId) -> Result<ExactMatrix, GraphError> {
        self.check_vertex(delete)?;
        Ok(self.laplacian().minor(delete))
    }

    /// `τ(G)` as the determinant of the reduced Laplacian at the
    /// highest-index vertex. The value is signed; a disconnected graph gives 0.
    pub fn tree_weight(&self) -> TreeWeight {
        self.tree_weight_at(self.vertex_count - 1)
            .expect("last vertex is always in range")
    }

    /// `τ(G)` using an explicit pivot vertex for the reduced Laplacian.
    pub fn tree_weight_at(&self, delete: VertexId) -> Result<TreeWeight, GraphError> {
        Ok(TreeWeight(self.reduced_laplacian(delete)?.det()))
    }

    /// `τ(G)` by brute force: every spanning tree is enumerated and the
    /// products of its edge weights are summed. Self-loops never belong to a
    /// tree. Refuses graphs with more than [`ORACLE_EDGE_LIMIT`] non-loop edges.
    pub fn tree_weight_oracle(&self) -> Result<TreeWeight, GraphError> {
        let edges: Vec<&Edge> = self.edges.iter().filter(|e| !e.is_loop()).collect();
        if edges.len() > ORACLE_EDGE_LIMIT {
            return Err(GraphError::OracleLimit {
                edges: edges.len(),
                limit: ORACLE_EDGE_LIMIT,
            });
        }
        let mut total = Dyadic::zero();
        let mut search = TreeSearch {
            edges: &edges,
            need: self.vertex_count - 1,
            total: &mut total,
        };
        let mut uf = UnionFind::new(self.vertex_count);
        search.run(0, 0, &Dyadic::one(), &mut uf);
        Ok(TreeWeight(total))
    }

    /// Number of spanning trees, ignoring weights. Uses the Laplacian with
    /// every weight set to 1.
    pub fn spanning_tree_count(&self) -> num_bigint::BigInt {
        let mut unit = self.clone();
        for e in &mut unit.edges {
            e.weight = Dyadic::one();
        }
        unit.tree_weight()
            .0
            .to_integer()
            .expect("unit-weight tree weight is an integer")
    }

    /// Drops every self-loop. Tree weight is unchanged.
    pub fn remove_self_loops(&self) -> SignedGraph {
        SignedGraph {
            vertex_count: self.vertex_count,
            edges: self
                .edges
                .iter()
                .filter(|e| !e.is_loop())
                .cloned()
                .collect(),
        }
    }

    /// Replaces edge `e` by two parallel copies of half its weight. The
    /// first copy keeps id `e`, the second is appended. Tree weight is
    /// preserved exactly.
    pub fn split_multiedge(&self, e: EdgeId) -> Result<SignedGraph, GraphError> {
        let edge = self.edge(e)?.clone();
        if edge.is_loop() {
            return Err(GraphError::SelfLoop(e));
        }
        let mut g = self.clone();
        let half = edge.weight.half();
        g.edges[e].weight = half.clone();
        g.edges.push(Edge {
            weight: half,
            ..edge
        });
        Ok(g)
    }

    /// Subdivides an edge `(a, b)` of weight `±1/2` by a new vertex `x`
    /// into `(a, x)` and `(x, b)`, each of weight `±1` with the sign of the
    /// original. `|τ|` doubles. The first half keeps id `e`.
    pub fn subdivide_edge(&self, e: EdgeId) -> Result<SignedGraph, GraphError> {
        let edge = self.edge(e)?.clone();
        let half: Dyadic = Dyadic::new(1, 1);
        let unit = if edge.weight == half {
            Dyadic::one()
        } else if edge.weight == -&half {
            -Dyadic::one()
        } else {
            return Err(GraphError::NotHalfWeight {
                edge: e,
                weight: edge.weight,
            });
        };
        let mut g = self.clone();
        let x = g.add_vertex();
        g.edges[e] = Edge {
            u: edge.u,
            v: x,
            weight: unit.clone(),
            tag: edge.tag,
        };
        g.edges.push(Edge {
            u: x,
            v: edge.v,
            weight: unit,
            tag: edge.tag,
        });
        Ok(g)
    }

    /// Vertex-disjoint union; the vertices of `other` are shifted past ours.
    pub fn disjoint_union(&self, other: &SignedGraph) -> SignedGraph {
        let shift = self.vertex_count;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|e| Edge {
            u: e.u + shift,
            v: e.v + shift,
            ..e.clone()
        }));
        SignedGraph {
            vertex_count: self.vertex_count + other.vertex_count,
            edges,
        }
    }
}

struct TreeSearch<'a> {
    edges: &'a [&'a Edge],
    need: usize,
    total: &'a mut Dyadic,
}

impl TreeSearch<'_> {
    /// Include/exclude recursion over edges in index order, pruning any
    /// choice that closes a cycle or leaves too few edges to finish.
    fn run(&mut self, next: usize, chosen: usize, product: &Dyadic, uf: &mut UnionFind) {
        if chosen == self.need {
            *self.total += product;
            return;
        }
        if self.edges.len() - next < self.need - chosen {
            return;
        }
        let e = self.edges[next];
        let (ru, rv) = (uf.find(e.u), uf.find(e.v));
        if ru != rv {
            let mut with = uf.clone();
            with.union(ru, rv);
            self.run(next + 1, chosen + 1, &(product * &e.weight), &mut with);
        }
        self.run(next + 1, chosen, product, uf);
    }
}

#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true if `a` and `b` were in different sets.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}
