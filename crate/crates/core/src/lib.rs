//! Exact determinants of knots and simple theta curves.
//!
//! Knot determinants come from signed Tait graphs of planar-diagram codes
//! (equivalently, Goeritz matrices). Theta-curve determinants come from
//! involution-symmetric Tait graphs of strongly invertible knots, and are
//! checked against the product of the constituent knot determinants.

pub mod cli;
pub mod dyadic;
pub mod families;
pub mod fixtures;
pub mod graph;
pub mod graph_text;
pub mod matrix;
pub mod pd;
pub mod planar;
pub mod random;
pub mod symmetric;

pub use dyadic::Dyadic;
pub use graph::{Edge, GraphError, Sign, SignedGraph, TreeWeight};
pub use matrix::{det_exact, ExactMatrix};
pub use pd::{parse_pd, PlanarDiagram};
pub use symmetric::{parse_symmetric, theta_determinant, SymmetricTaitGraph, ThetaReport};
