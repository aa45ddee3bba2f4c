use std::collections::VecDeque;

use super::{PdError, PlanarDiagram};

/// A half-edge: the arc leaving `crossing` through slot `position` (0..4).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart {
    pub crossing: usize,
    pub position: usize,
}

impl Dart {
    pub fn new(crossing: usize, position: usize) -> Self {
        Dart { crossing, position }
    }

    fn index(self) -> usize {
        4 * self.crossing + self.position
    }
}

/// A face of the diagram as the cyclic sequence of darts bounding it. Each
/// dart stands for the side of its arc that faces into this region.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub darts: Vec<Dart>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }
}

/// The faces of a diagram plus the lookups the shading code needs.
#[derive(Clone, Debug)]
pub struct FaceMap {
    faces: Vec<Face>,
    /// face id for every dart, indexed by `4 * crossing + position`
    dart_face: Vec<usize>,
    outer: usize,
    /// pairs of faces on the two sides of each arc
    arc_sides: Vec<(usize, usize)>,
}

impl FaceMap {
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// The unbounded face.
    pub fn outer(&self) -> usize {
        self.outer
    }

    /// The face in the corner between slots `k` and `k + 1` of a crossing.
    pub fn corner(&self, crossing: usize, k: usize) -> usize {
        self.dart_face[Dart::new(crossing, k % 4).index()]
    }

    /// For each arc, the faces on its two sides.
    pub fn arc_sides(&self) -> &[(usize, usize)] {
        &self.arc_sides
    }
}

/// Traces the faces of the underlying 4-valent plane graph.
///
/// Leaving a crossing along a dart, the walk arrives at the far end of the
/// arc and leaves again through the clockwise-previous slot. The orbits of
/// this map are the faces; a planar rotation system on `n` crossings has
/// exactly `n + 2` of them.
pub fn trace_faces(d: &PlanarDiagram) -> Result<FaceMap, PdError> {
    let n = d.crossing_count();
    if n == 0 {
        return Err(PdError::NoCrossings);
    }
    let mut dart_face = vec![usize::MAX; 4 * n];
    let mut faces = Vec::new();
    for start in 0..4 * n {
        if dart_face[start] != usize::MAX {
            continue;
        }
        let id = faces.len();
        let mut darts = Vec::new();
        let mut cur = Dart::new(start / 4, start % 4);
        while dart_face[cur.index()] == usize::MAX {
            dart_face[cur.index()] = id;
            darts.push(cur);
            let arrive = d.opposite(cur);
            cur = Dart::new(arrive.crossing, (arrive.position + 3) % 4);
        }
        faces.push(Face { darts });
    }
    if faces.len() != n + 2 {
        return Err(PdError::NonPlanar {
            faces: faces.len(),
            crossings: n,
            expected: n + 2,
        });
    }
    let outer = match d.outer_override() {
        Some(o) if o >= faces.len() => {
            return Err(PdError::OuterOutOfRange {
                outer: o,
                faces: faces.len(),
            })
        }
        Some(o) => o,
        // largest face, lowest id on ties
        None => faces
            .iter()
            .enumerate()
            .max_by(|(i, a), (j, b)| a.len().cmp(&b.len()).then(j.cmp(i)))
            .map(|(i, _)| i)
            .unwrap_or(0),
    };
    let arc_sides = d
        .ends
        .iter()
        .map(|[a, b]| (dart_face[a.index()], dart_face[b.index()]))
        .collect();
    Ok(FaceMap {
        faces,
        dart_face,
        outer,
        arc_sides,
    })
}

/// A proper two-coloring of the faces. Color 0 is shaded, color 1 unshaded.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Shading {
    colors: Vec<u8>,
}

impl Shading {
    pub fn from_colors(colors: Vec<u8>) -> Self {
        Shading { colors }
    }

    pub fn color(&self, face: usize) -> u8 {
        self.colors[face]
    }

    pub fn is_shaded(&self, face: usize) -> bool {
        self.colors[face] == 0
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn complement(&self) -> Shading {
        Shading {
            colors: self.colors.iter().map(|c| 1 - c).collect(),
        }
    }

    /// Shaded face ids in increasing order.
    pub fn shaded_faces(&self) -> Vec<usize> {
        (0..self.colors.len())
            .filter(|&f| self.is_shaded(f))
            .collect()
    }
}

/// Two-colors a graph on `count` nodes given by its edge list, giving
/// `root` color 1. Fails on an odd cycle or an unreachable node.
pub fn two_color(count: usize, edges: &[(usize, usize)], root: usize) -> Result<Shading, PdError> {
    let mut adj = vec![Vec::new(); count];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut colors = vec![u8::MAX; count];
    colors[root] = 1;
    let mut queue = VecDeque::from([root]);
    while let Some(f) = queue.pop_front() {
        for &g in &adj[f] {
            if colors[g] == u8::MAX {
                colors[g] = 1 - colors[f];
                queue.push_back(g);
            } else if colors[g] == colors[f] {
                return Err(PdError::OddFaceCycle { face: g });
            }
        }
    }
    if let Some(face) = colors.iter().position(|&c| c == u8::MAX) {
        return Err(PdError::FaceAdjacencyDisconnected { face });
    }
    Ok(Shading { colors })
}

/// The two checkerboard shadings. The first leaves the unbounded face
/// unshaded; the second is its complement.
pub fn checkerboard(faces: &FaceMap) -> Result<(Shading, Shading), PdError> {
    let s = two_color(faces.len(), faces.arc_sides(), faces.outer())?;
    let c = s.complement();
    Ok((s, c))
}

#[cfg(test)]
mod tests {
    use super::super::parse_pd;
    use super::*;

    const TREFOIL: &str = "X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)";
    const FIGURE_EIGHT: &str = "X(8,5,1,6),X(4,1,5,2),X(2,8,3,7),X(6,4,7,3)";

    #[test]
    fn face_counts() {
        for (text, n) in [
            (TREFOIL, 5),
            (FIGURE_EIGHT, 6),
            ("X(4,2,1,1),X(2,4,3,3)", 4),
        ] {
            let f = trace_faces(&parse_pd(text).unwrap()).unwrap();
            assert_eq!(f.len(), n, "{text}");
            let darts: usize = f.faces().iter().map(Face::len).sum();
            assert_eq!(darts, 4 * (n - 2));
        }
    }

    #[test]
    fn kink_faces() {
        let f = trace_faces(&parse_pd("X(1,1,2,2)").unwrap()).unwrap();
        assert_eq!(f.len(), 3);
    }

    #[test]
    fn no_crossings() {
        assert!(matches!(
            trace_faces(&PlanarDiagram::unknot()),
            Err(PdError::NoCrossings)
        ));
    }

    #[test]
    fn nonplanar_rotation_rejected() {
        // trefoil with the rotation at the last crossing reversed
        let d = parse_pd("X(1,4,2,5),X(3,6,4,1),X(5,3,6,2)").unwrap();
        assert!(matches!(trace_faces(&d), Err(PdError::NonPlanar { .. })));
    }

    #[test]
    fn trefoil_outer_is_a_triangle() {
        let f = trace_faces(&parse_pd(TREFOIL).unwrap()).unwrap();
        let mut sizes: Vec<usize> = f.faces().iter().map(Face::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![2, 2, 2, 3, 3]);
        assert_eq!(f.faces()[f.outer()].len(), 3);
    }

    #[test]
    fn outer_override_range() {
        let d = parse_pd(&format!("outer=9,{TREFOIL}")).unwrap();
        assert!(matches!(
            trace_faces(&d),
            Err(PdError::OuterOutOfRange { outer: 9, faces: 5 })
        ));
    }

    /// Every proper 2-coloring of the face-adjacency graph, by brute force.
    fn all_colorings(faces: &FaceMap) -> Vec<Vec<u8>> {
        let n = faces.len();
        (0u32..1 << n)
            .map(|mask| (0..n).map(|i| ((mask >> i) & 1) as u8).collect::<Vec<u8>>())
            .filter(|c| faces.arc_sides().iter().all(|&(a, b)| c[a] != c[b]))
            .collect()
    }

    #[test]
    fn trefoil_checkerboard_matches_enumeration() {
        let f = trace_faces(&parse_pd(TREFOIL).unwrap()).unwrap();
        let brute = all_colorings(&f);
        assert_eq!(brute.len(), 2);
        let (s, t) = checkerboard(&f).unwrap();
        assert!(brute.contains(&s.colors().to_vec()));
        assert!(brute.contains(&t.colors().to_vec()));
        assert_eq!(s.color(f.outer()), 1);
        // two bigons-and-triangle classes: 3 faces one color, 2 the other
        let shaded = s.shaded_faces().len();
        assert_eq!(shaded.min(5 - shaded), 2);
        assert_eq!(s.complement(), t);
    }

    #[test]
    fn corners_alternate() {
        let f = trace_faces(&parse_pd(FIGURE_EIGHT).unwrap()).unwrap();
        let (s, _) = checkerboard(&f).unwrap();
        for x in 0..4 {
            for k in 0..4 {
                assert_ne!(s.color(f.corner(x, k)), s.color(f.corner(x, k + 1)));
            }
        }
    }

    #[test]
    fn two_color_errors() {
        assert!(matches!(
            two_color(3, &[(0, 1), (1, 2), (2, 0)], 0),
            Err(PdError::OddFaceCycle { .. })
        ));
        assert!(matches!(
            two_color(4, &[(0, 1), (2, 3)], 0),
            Err(PdError::FaceAdjacencyDisconnected { face: 2 })
        ));
    }
}
