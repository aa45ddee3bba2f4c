use num_bigint::BigUint;

use super::faces::{checkerboard, trace_faces, FaceMap, Shading};
use super::{PdError, PlanarDiagram};
use crate::dyadic::Dyadic;
use crate::graph::{GraphError, Sign, SignedGraph};
use crate::matrix::ExactMatrix;

/// Goeritz incidence number of a crossing relative to the shaded regions.
///
/// `+1` when the corner counterclockwise of the incoming under-strand
/// (between slots 0 and 1) is shaded, `-1` otherwise. Reversing the strand
/// orientation rotates the slots by two, which maps that corner to its
/// opposite corner of the same color, so the sign does not depend on
/// orientation. Swapping the shading negates it.
pub fn crossing_sign(faces: &FaceMap, crossing: usize, s: &Shading) -> Sign {
    if s.is_shaded(faces.corner(crossing, 0)) {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

/// The two shaded faces meeting at a crossing (possibly the same face).
fn shaded_pair(faces: &FaceMap, crossing: usize, s: &Shading) -> (usize, usize) {
    let k = if s.is_shaded(faces.corner(crossing, 0)) {
        0
    } else {
        1
    };
    (faces.corner(crossing, k), faces.corner(crossing, k + 2))
}

fn vertex_index(s: &Shading) -> Vec<Option<usize>> {
    let mut next = 0;
    s.colors()
        .iter()
        .map(|&c| {
            (c == 0).then(|| {
                next += 1;
                next - 1
            })
        })
        .collect()
}

/// The Tait graph of a shading: a vertex per shaded face (in face-id
/// order), an edge per crossing joining the shaded faces that meet there,
/// weighted by the crossing sign and tagged with the crossing index.
pub fn tait_graph(d: &PlanarDiagram, faces: &FaceMap, s: &Shading) -> SignedGraph {
    let index = vertex_index(s);
    let vertices = index.iter().flatten().count();
    let mut g = SignedGraph::new(vertices.max(1));
    for x in 0..d.crossing_count() {
        let (a, b) = shaded_pair(faces, x, s);
        let w = crossing_sign(faces, x, s).to_dyadic();
        g.add_tagged_edge(index[a].unwrap(), index[b].unwrap(), w, Some(x))
            .expect("shaded faces are vertices");
    }
    g
}

/// Tait graphs of both checkerboard shadings. The first has a vertex per
/// bounded region of the shading that leaves the outer face unshaded; the
/// second is built the same way from the complementary shading. Edges with
/// equal tags correspond to the same crossing. The crossingless unknot gives
/// a single vertex in both.
pub fn tait_graphs(d: &PlanarDiagram) -> Result<(SignedGraph, SignedGraph), PdError> {
    if d.crossing_count() == 0 {
        return Ok((SignedGraph::new(1), SignedGraph::new(1)));
    }
    let faces = trace_faces(d)?;
    let (s, t) = checkerboard(&faces)?;
    Ok((tait_graph(d, &faces, &s), tait_graph(d, &faces, &t)))
}

/// The full `(k+1) x (k+1)` Goeritz matrix over the shaded regions
/// `B_0..B_k` (in face-id order), built directly from the crossings:
/// off-diagonal entries are minus the summed incidence numbers of the
/// crossings where two regions meet, and the diagonal makes rows sum to 0.
pub fn goeritz_matrix(d: &PlanarDiagram, faces: &FaceMap, s: &Shading) -> ExactMatrix {
    let index = vertex_index(s);
    let size = index.iter().flatten().count();
    let mut q = ExactMatrix::zeros(size);
    for x in 0..d.crossing_count() {
        let (a, b) = shaded_pair(faces, x, s);
        let (i, j) = (index[a].unwrap(), index[b].unwrap());
        if i != j {
            let xi = crossing_sign(faces, x, s).to_dyadic();
            q[(i, j)] -= &xi;
            q[(j, i)] -= &xi;
        }
    }
    for i in 0..size {
        let off: Dyadic = (0..size)
            .filter(|&k| k != i)
            .map(|k| q[(i, k)].clone())
            .sum();
        q[(i, i)] = -off;
    }
    q
}

/// Determinant of a knot diagram computed three ways.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotReport {
    pub crossings: usize,
    pub faces: usize,
    /// `τ` of the Tait graph of the shading with the outer face unshaded.
    pub tau_shaded: Dyadic,
    /// `τ` of the Tait graph of the complementary shading.
    pub tau_dual: Dyadic,
    /// Determinant of the reduced Goeritz matrix of the first shading.
    pub goeritz_det: Dyadic,
    /// The pivot vertex deleted from the first Tait graph's Laplacian.
    pub pivot: usize,
    pub det: BigUint,
}

impl KnotReport {
    pub fn agree(&self) -> bool {
        self.tau_shaded.abs() == self.tau_dual.abs()
            && self.goeritz_det.abs() == self.tau_shaded.abs()
    }
}

pub(crate) fn abs_integer(v: &Dyadic) -> Option<BigUint> {
    v.to_integer().map(|i| i.magnitude().clone())
}

/// Computes the determinant from both shadings and from the Goeritz matrix.
/// `pivot` picks the vertex deleted from the first Tait graph (and the
/// matching Goeritz row and column); by default the last one.
pub fn knot_report(d: &PlanarDiagram, pivot: Option<usize>) -> Result<KnotReport, PdError> {
    if d.crossing_count() == 0 {
        if let Some(p) = pivot.filter(|&p| p > 0) {
            return Err(GraphError::VertexOutOfRange {
                vertex: p,
                vertex_count: 1,
            }
            .into());
        }
        return Ok(KnotReport {
            crossings: 0,
            faces: 2,
            tau_shaded: Dyadic::one(),
            tau_dual: Dyadic::one(),
            goeritz_det: Dyadic::one(),
            pivot: 0,
            det: BigUint::from(1u32),
        });
    }
    let faces = trace_faces(d)?;
    let (s, t) = checkerboard(&faces)?;
    let g = tait_graph(d, &faces, &s);
    let h = tait_graph(d, &faces, &t);
    let pivot = pivot.unwrap_or(g.vertex_count() - 1);
    let tau_shaded = g.tree_weight_at(pivot)?.0;
    let tau_dual = h.tree_weight().0;
    let goeritz_det = goeritz_matrix(d, &faces, &s).minor(pivot).det();
    let det = abs_integer(&tau_shaded).expect("unit weights give an integer tree weight");
    Ok(KnotReport {
        crossings: d.crossing_count(),
        faces: faces.len(),
        tau_shaded,
        tau_dual,
        goeritz_det,
        pivot,
        det,
    })
}

/// `|det|` of the knot. Both shadings are evaluated and must agree.
pub fn knot_determinant(d: &PlanarDiagram) -> Result<BigUint, PdError> {
    let r = knot_report(d, None)?;
    if r.tau_shaded.abs() != r.tau_dual.abs() {
        return Err(PdError::ShadingDisagreement {
            shaded: r.tau_shaded.abs().to_string(),
            unshaded: r.tau_dual.abs().to_string(),
        });
    }
    Ok(r.det)
}

#[cfg(test)]
mod tests {
    use super::super::parse_pd;
    use super::*;

    const TREFOIL: &str = "X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)";
    const FIGURE_EIGHT: &str = "X(8,5,1,6),X(4,1,5,2),X(2,8,3,7),X(6,4,7,3)";

    fn det(text: &str) -> u32 {
        let d = knot_determinant(&parse_pd(text).unwrap()).unwrap();
        u32::try_from(d).unwrap()
    }

    #[test]
    fn small_knots() {
        assert_eq!(det(TREFOIL), 3);
        assert_eq!(det(FIGURE_EIGHT), 5);
        assert_eq!(det(""), 1);
        assert_eq!(det("X(4,2,1,1),X(2,4,3,3)"), 1);
        assert_eq!(det("X(1,1,2,2)"), 1);
    }

    #[test]
    fn trefoil_signs_agree() {
        let d = parse_pd(TREFOIL).unwrap();
        let f = trace_faces(&d).unwrap();
        let (s, t) = checkerboard(&f).unwrap();
        let signs: Vec<Sign> = (0..3).map(|x| crossing_sign(&f, x, &s)).collect();
        assert!(signs.iter().all(|&x| x == signs[0]));
        for (x, sign) in signs.iter().enumerate() {
            assert_eq!(crossing_sign(&f, x, &t), sign.flip());
        }
    }

    #[test]
    fn trefoil_tait_graphs() {
        let (g, h) = tait_graphs(&parse_pd(TREFOIL).unwrap()).unwrap();
        // outer face is a triangle, so the bigons are shaded first
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges().len(), 3);
        assert!(g.edges().iter().all(|e| e.u != e.v));
        assert_eq!(h.vertex_count(), 2);
        assert!(h
            .edges()
            .iter()
            .all(|e| (e.u, e.v) == (0, 1) || (e.u, e.v) == (1, 0)));
        let w = &h.edges()[0].weight;
        assert!(h.edges().iter().all(|e| &e.weight == w));
        let mut tags: Vec<_> = g.edges().iter().map(|e| e.tag.unwrap()).collect();
        tags.sort();
        assert_eq!(tags, vec![0, 1, 2]);
    }

    #[test]
    fn unknot_tait_graph() {
        let (g, h) = tait_graphs(&PlanarDiagram::unknot()).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert!(g.edges().is_empty());
        assert_eq!(g.tree_weight().0, Dyadic::one());
        assert_eq!(h.vertex_count(), 1);
    }

    #[test]
    fn trefoil_goeritz() {
        let d = parse_pd(TREFOIL).unwrap();
        let f = trace_faces(&d).unwrap();
        let (_, t) = checkerboard(&f).unwrap();
        let q = goeritz_matrix(&d, &f, &t);
        let sign = crossing_sign(&f, 0, &t).value();
        let full = ExactMatrix::from_rows(&[vec![3 * sign, -3 * sign], vec![-3 * sign, 3 * sign]]);
        assert_eq!(q, full);
        assert_eq!(q.minor(1).det().abs(), Dyadic::from(3));
    }

    #[test]
    fn goeritz_is_tait_laplacian() {
        for text in [TREFOIL, FIGURE_EIGHT, "X(1,1,2,2)"] {
            let d = parse_pd(text).unwrap();
            let f = trace_faces(&d).unwrap();
            let (s, t) = checkerboard(&f).unwrap();
            for sh in [&s, &t] {
                let q = goeritz_matrix(&d, &f, sh);
                assert_eq!(q, tait_graph(&d, &f, sh).laplacian());
                for i in 0..q.dim() {
                    let row: Dyadic = q.row(i).iter().cloned().sum();
                    assert!(row.is_zero());
                }
            }
        }
    }

    #[test]
    fn pivot_override() {
        let d = parse_pd(FIGURE_EIGHT).unwrap();
        let r = knot_report(&d, Some(0)).unwrap();
        assert_eq!(r.det, BigUint::from(5u32));
        assert!(r.agree());
        assert!(knot_report(&d, Some(99)).is_err());
    }
}
