//! Generators for pretzel theta curves and `(2, n)` torus knots, and the
//! bundled table of theta curves through seven crossings.

use num_bigint::BigUint;
use thiserror::Error;

use crate::graph::Sign;
use crate::pd::PlanarDiagram;
use crate::symmetric::{HalfVertex, SymmetricTaitGraph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("p must be odd and at least 1, got {0}")]
    BadP(u32),
    #[error("q must be even and at least 2, got {0}")]
    BadQ(u32),
    #[error("torus knot parameter must be odd and at least 3, got {0}")]
    BadTorus(u32),
}

/// Parameters of the pretzel theta curve `θ(p, q)`: `p` odd, `q = 2k` even.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PretzelParams {
    p: u32,
    q: u32,
}

impl PretzelParams {
    pub fn new(p: u32, q: u32) -> Result<Self, FamilyError> {
        if p.is_multiple_of(2) {
            return Err(FamilyError::BadP(p));
        }
        if q < 2 || q % 2 == 1 {
            return Err(FamilyError::BadQ(q));
        }
        Ok(PretzelParams { p, q })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// `p² + pq`.
    pub fn closed_form(&self) -> BigUint {
        let (p, q) = (BigUint::from(self.p), BigUint::from(self.q));
        &p * &p + &p * &q
    }
}

/// Symmetric Tait graph of the pretzel knot `P(p, k, p)`, `q = 2k`, with the
/// axis running through the middle twist region.
///
/// With all twists vertical the Tait graph is a theta graph: two vertices
/// (the regions above and below the tangles) joined by paths of `p`, `k`
/// and `p` edges. The axis holds both poles and the `k - 1` bigons of the
/// middle column, with the middle path on it. The outer paths are swapped
/// by the involution; for `p = 1` each is a single edge between the poles.
pub fn pretzel_theta(params: PretzelParams) -> SymmetricTaitGraph {
    let left = (params.p - 1) as usize;
    let k = (params.q / 2) as usize;
    let mut s = SymmetricTaitGraph::new(left, k + 1).expect("axis is nonempty");
    let top = HalfVertex::Axis(0);
    let bottom = HalfVertex::Axis(k);
    let path: Vec<HalfVertex> = std::iter::once(top)
        .chain((0..left).map(HalfVertex::Left))
        .chain(std::iter::once(bottom))
        .collect();
    for pair in path.windows(2) {
        s.add_left_edge(pair[0], pair[1], Sign::Plus)
            .expect("in range");
    }
    for j in 0..k {
        s.add_axis_edge(j, j + 1, Sign::Plus).expect("in range");
    }
    s
}

/// The standard alternating diagram of the `(2, n)` torus knot.
pub fn torus_pd(n: u32) -> Result<PlanarDiagram, FamilyError> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(FamilyError::BadTorus(n));
    }
    let m = 2 * u64::from(n);
    let wrap = |x: u64| (x - 1) % m + 1;
    let tuples: Vec<[u64; 4]> = (0..u64::from(n))
        .map(|i| {
            let a = 2 * i + 1;
            [
                a,
                wrap(a + u64::from(n)),
                wrap(a + 1),
                wrap(a + u64::from(n) + 1),
            ]
        })
        .collect();
    Ok(PlanarDiagram::from_tuples(&tuples, None).expect("torus diagram is a knot"))
}

/// A row of the theta-curve table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRecord {
    pub theta_name: String,
    /// The three constituent knots, unknots included.
    pub constituents: Vec<String>,
    /// Constituent determinants as listed; unknots may be omitted.
    pub constituent_dets: Vec<u64>,
    pub theta_det: u64,
}

impl TableRecord {
    pub fn product(&self) -> BigUint {
        self.constituent_dets
            .iter()
            .map(|&d| BigUint::from(d))
            .product()
    }

    /// Whether the constituent determinants multiply to the theta determinant.
    pub fn holds(&self) -> bool {
        self.product() == BigUint::from(self.theta_det)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableParseError {
    #[error("line {line}: expected 4 tab-separated columns, got {got}")]
    Columns { line: usize, got: usize },
    #[error("line {line}: bad number `{text}`")]
    Number { line: usize, text: String },
    #[error("line {line}: empty field")]
    EmptyField { line: usize },
    #[error("missing header row")]
    MissingHeader,
}

const TABLE_HEADER: &str = "theta_name\tconstituents\tconstituent_dets\ttheta_det";

/// Parses the tab-separated table. The first non-comment line must be the
/// header `theta_name constituents constituent_dets theta_det`.
pub fn parse_table(text: &str) -> Result<Vec<TableRecord>, TableParseError> {
    let mut rows = Vec::new();
    let mut seen_header = false;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.trim_end_matches('\r');
        if content.trim().is_empty() || content.starts_with('#') {
            continue;
        }
        if !seen_header {
            if content.trim() != TABLE_HEADER {
                return Err(TableParseError::MissingHeader);
            }
            seen_header = true;
            continue;
        }
        let cols: Vec<&str> = content.split('\t').map(str::trim).collect();
        if cols.len() != 4 {
            return Err(TableParseError::Columns {
                line,
                got: cols.len(),
            });
        }
        if cols.iter().any(|c| c.is_empty()) {
            return Err(TableParseError::EmptyField { line });
        }
        let number = |t: &str| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| TableParseError::Number {
                    line,
                    text: t.to_string(),
                })
        };
        rows.push(TableRecord {
            theta_name: cols[0].to_string(),
            constituents: cols[1].split(',').map(|s| s.trim().to_string()).collect(),
            constituent_dets: cols[2].split(',').map(number).collect::<Result<_, _>>()?,
            theta_det: number(cols[3])?,
        });
    }
    if !seen_header {
        return Err(TableParseError::MissingHeader);
    }
    Ok(rows)
}

/// Raw text of the bundled table.
pub const TABLE_TSV: &str = include_str!("../data/moriuchi_table.tsv");

/// The 90 prime theta curves through seven crossings.
pub fn table_records() -> Vec<TableRecord> {
    parse_table(TABLE_TSV).expect("bundled table parses")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pd::knot_determinant;
    use crate::symmetric::theta_determinant_with;

    fn big(v: u32) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn params() {
        assert!(PretzelParams::new(3, 2).is_ok());
        assert_eq!(PretzelParams::new(2, 2), Err(FamilyError::BadP(2)));
        assert_eq!(PretzelParams::new(3, 3), Err(FamilyError::BadQ(3)));
        assert_eq!(PretzelParams::new(3, 0), Err(FamilyError::BadQ(0)));
        assert_eq!(PretzelParams::new(5, 4).unwrap().closed_form(), big(45));
    }

    #[test]
    fn pretzel_small() {
        for (p, q, det, lo, hi) in [(3, 2, 15, 3, 5), (1, 2, 3, 1, 3), (5, 2, 35, 5, 7)] {
            let s = pretzel_theta(PretzelParams::new(p, q).unwrap());
            let r = theta_determinant_with(&s, true).unwrap();
            assert_eq!(r.det_full, big(det), "p={p} q={q}");
            assert_eq!(r.factors(), [big(lo), big(hi)]);
            assert_eq!(s.axis_count(), q as usize / 2 + 1);
        }
    }

    #[test]
    fn torus_knots() {
        for n in [3, 5, 7, 9] {
            let d = torus_pd(n).unwrap();
            assert_eq!(d.crossing_count(), n as usize);
            assert_eq!(knot_determinant(&d).unwrap(), big(n));
        }
        assert_eq!(torus_pd(4).unwrap_err(), FamilyError::BadTorus(4));
        assert_eq!(torus_pd(1).unwrap_err(), FamilyError::BadTorus(1));
    }

    #[test]
    fn trefoil_matches_standard_code() {
        assert_eq!(
            torus_pd(3).unwrap().to_pd_text(),
            "X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)"
        );
    }

    #[test]
    fn table_rows() {
        let rows = table_records();
        assert_eq!(rows.len(), 90);
        assert!(rows.iter().all(|r| r.constituents.len() == 3));
        let find = |name: &str| rows.iter().find(|r| r.theta_name == name).unwrap();
        let r = find("6_8");
        assert_eq!(r.constituents, vec!["0_1", "4_1", "6_1"]);
        assert_eq!((r.constituent_dets.clone(), r.theta_det), (vec![5, 9], 45));
        assert_eq!(find("7_32").constituent_dets, vec![7, 11]);
        assert_eq!(find("7_32").theta_det, 77);
        let r = find("5_1");
        assert_eq!(r.constituents, vec!["0_1"; 3]);
        assert_eq!(r.theta_det, 1);
    }

    #[test]
    fn table_errors() {
        assert_eq!(parse_table(""), Err(TableParseError::MissingHeader));
        assert_eq!(parse_table("a\tb\n"), Err(TableParseError::MissingHeader));
        let h = format!("{TABLE_HEADER}\n");
        assert!(matches!(
            parse_table(&format!("{h}x\ty\n")),
            Err(TableParseError::Columns { line: 2, got: 2 })
        ));
        assert!(matches!(
            parse_table(&format!("{h}x\t0_1\t1,z\t3\n")),
            Err(TableParseError::Number { line: 2, .. })
        ));
        assert!(matches!(
            parse_table(&format!("{h}x\t\t1\t3\n")),
            Err(TableParseError::EmptyField { .. })
        ));
        let rows = parse_table(&format!("# note\n{h}t\t0_1,0_1,3_1\t1,3\t4\n")).unwrap();
        assert!(!rows[0].holds());
    }
}
