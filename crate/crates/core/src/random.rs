//! Seeded random instances for the property suites.
//!
//! All generators take any [`Rng`]; [`seeded`] gives the reproducible
//! ChaCha stream used by the CLI and the tests.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dyadic::Dyadic;
use crate::graph::{Sign, SignedGraph};
use crate::planar::PlaneGraph;
use crate::symmetric::{HalfVertex, SymmetricTaitGraph};

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Edge weights drawn by [`random_signed_graph`]: `±1`, `±1/2`, `±2`.
pub fn weight_choices() -> [Dyadic; 6] {
    [
        Dyadic::from(1),
        Dyadic::from(-1),
        Dyadic::new(1, 1),
        Dyadic::new(-1, 1),
        Dyadic::from(2),
        Dyadic::from(-2),
    ]
}

fn random_sign<R: Rng>(rng: &mut R) -> Sign {
    if rng.gen() {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

/// A connected multigraph on `1..=max_vertices` vertices with at most
/// `max_edges` edges, weights from [`weight_choices`]. A random spanning
/// tree is laid down first; the remaining edges may be parallel edges or
/// self-loops.
pub fn random_signed_graph<R: Rng>(
    rng: &mut R,
    max_vertices: usize,
    max_edges: usize,
) -> SignedGraph {
    let n = rng.gen_range(1..=max_vertices.max(1));
    let weights = weight_choices();
    let mut g = SignedGraph::new(n);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        let w = weights.choose(rng).unwrap().clone();
        g.add_edge(order[i], parent, w).unwrap();
    }
    let total = rng.gen_range(n.saturating_sub(1)..=max_edges.max(n - 1));
    while g.edges().len() < total {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u == v && !rng.gen_bool(0.2) {
            continue;
        }
        let w = weights.choose(rng).unwrap().clone();
        g.add_edge(u, v, w).unwrap();
    }
    g
}

/// A valid symmetric graph with `0..=max_left` left and `1..=max_axis` axis
/// vertices, `±1` weights, and at most `edge_limit` non-loop edges in its
/// expansion. Edges are drawn uniformly with a random density; draws with a
/// disconnected or oversized expansion are rejected.
pub fn random_symmetric_graph<R: Rng>(
    rng: &mut R,
    max_left: usize,
    max_axis: usize,
    edge_limit: usize,
) -> SymmetricTaitGraph {
    loop {
        let n = rng.gen_range(0..=max_left);
        let m = rng.gen_range(1..=max_axis.max(1));
        let density = rng.gen_range(0.2..0.7);
        let mut s = SymmetricTaitGraph::new(n, m).unwrap();
        let half: Vec<HalfVertex> = (0..n)
            .map(HalfVertex::Left)
            .chain((0..m).map(HalfVertex::Axis))
            .collect();
        for i in 0..half.len() {
            for j in i..half.len() {
                let (a, b) = (half[i], half[j]);
                let bound = if a == b { 0.1 } else { density };
                if rng.gen_bool(bound) {
                    let _ = s.add_left_edge(a, b, random_sign(rng));
                }
            }
        }
        for a in 0..m {
            for b in a + 1..m {
                if rng.gen_bool(density) {
                    s.add_axis_edge(a, b, random_sign(rng)).unwrap();
                }
            }
        }
        for v in 0..n {
            if rng.gen_bool(density / 2.0) {
                s.add_cross_edge(v, random_sign(rng)).unwrap();
            }
        }
        let Ok(g) = s.expand() else { continue };
        if g.edges().len() - g.loop_count() <= edge_limit {
            return s;
        }
    }
}

/// A symmetric Tait graph drawn on a grid symmetric about the line `x = 0`,
/// together with its coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct KnotSample {
    pub symmetric: SymmetricTaitGraph,
    /// Positions of `v_1..v_n`, all with `x < 0`; `v_i'` sits at the mirror
    /// image.
    pub left_coords: Vec<(i32, i32)>,
    /// Positions of `w_1..w_m`, all with `x = 0`.
    pub axis_coords: Vec<(i32, i32)>,
}

fn to_f64(p: (i32, i32)) -> (f64, f64) {
    (f64::from(p.0), f64::from(p.1))
}

impl KnotSample {
    /// The expanded graph with vertices in expansion order.
    pub fn expanded_plane(&self) -> PlaneGraph {
        let g = self.symmetric.expand().expect("samples are connected");
        let coords = self
            .left_coords
            .iter()
            .chain(&self.axis_coords)
            .copied()
            .chain(self.left_coords.iter().map(|&(x, y)| (-x, y)))
            .map(to_f64)
            .collect();
        PlaneGraph::new(g, coords)
    }

    /// The Tait graph of the constituent `K_ab` with subdivision vertices at
    /// the midpoints of the axis edges.
    pub fn constituent_ab_plane(&self) -> PlaneGraph {
        let g = self.symmetric.constituent_ab();
        let mut coords: Vec<(f64, f64)> = self
            .axis_coords
            .iter()
            .copied()
            .chain(self.left_coords.iter().map(|&(x, y)| (-x, y)))
            .map(to_f64)
            .collect();
        for e in self.symmetric.axis_edges() {
            let (a, b) = (to_f64(self.axis_coords[e.a]), to_f64(self.axis_coords[e.b]));
            coords.push(((a.0 + b.0) / 2.0, (a.1 + b.1) / 2.0));
        }
        PlaneGraph::new(g, coords)
    }
}

/// A random symmetric Tait graph of a knot diagram, at most `width` columns
/// left of the axis and `height` rows.
///
/// Left vertices sit on the grid `x in -width..0`; the axis vertices are a
/// run of consecutive rows on `x = 0`, joined by a path of axis edges. The
/// candidate edges are the grid edges, one random diagonal in some cells,
/// horizontal spokes from column `-1` to the axis rows, and horizontal
/// cross edges in the rows off the axis, so the drawing is planar and
/// symmetric under `x -> -x`. Draws whose expansion is disconnected, has
/// more than `edge_limit` edges, or has an even number of spanning trees
/// (a link, not a knot) are rejected.
pub fn random_knot_symmetric<R: Rng>(
    rng: &mut R,
    width: i32,
    height: i32,
    edge_limit: usize,
) -> KnotSample {
    assert!(width >= 1 && height >= 1);
    loop {
        let y0 = rng.gen_range(0..height);
        let y1 = rng.gen_range(y0..height);
        let density = rng.gen_range(0.3..0.8);
        let mut half_edges = Vec::new();
        let mut cross_rows = Vec::new();
        for x in -width..0 {
            for y in 0..height {
                if x + 1 < 0 {
                    half_edges.push(((x, y), (x + 1, y)));
                }
                if y + 1 < height {
                    half_edges.push(((x, y), (x, y + 1)));
                }
                if x + 1 < 0 && y + 1 < height {
                    match rng.gen_range(0..4) {
                        0 => half_edges.push(((x, y), (x + 1, y + 1))),
                        1 => half_edges.push(((x + 1, y), (x, y + 1))),
                        _ => {}
                    }
                }
            }
        }
        for y in 0..height {
            if (y0..=y1).contains(&y) {
                half_edges.push(((-1, y), (0, y)));
            } else {
                cross_rows.push(y);
            }
        }
        half_edges.retain(|_| rng.gen_bool(density));
        cross_rows.retain(|_| rng.gen_bool(density));

        let mut left: BTreeMap<(i32, i32), usize> = BTreeMap::new();
        for &(a, b) in &half_edges {
            for p in [a, b] {
                if p.0 < 0 {
                    left.insert(p, 0);
                }
            }
        }
        for &y in &cross_rows {
            left.insert((-1, y), 0);
        }
        for (i, v) in left.values_mut().enumerate() {
            *v = i;
        }
        let axis_coords: Vec<(i32, i32)> = (y0..=y1).map(|y| (0, y)).collect();
        let vertex = |p: (i32, i32)| {
            if p.0 < 0 {
                HalfVertex::Left(left[&p])
            } else {
                HalfVertex::Axis((p.1 - y0) as usize)
            }
        };
        let mut s = SymmetricTaitGraph::new(left.len(), axis_coords.len()).unwrap();
        for &(a, b) in &half_edges {
            s.add_left_edge(vertex(a), vertex(b), random_sign(rng))
                .unwrap();
        }
        for j in 1..axis_coords.len() {
            s.add_axis_edge(j - 1, j, random_sign(rng)).unwrap();
        }
        for &y in &cross_rows {
            s.add_cross_edge(left[&(-1, y)], random_sign(rng)).unwrap();
        }
        let Ok(g) = s.expand() else { continue };
        if g.edges().is_empty() || g.edges().len() > edge_limit {
            continue;
        }
        if g.spanning_tree_count().bit(0) {
            return KnotSample {
                symmetric: s,
                left_coords: left.keys().copied().collect(),
                axis_coords,
            };
        }
    }
}
