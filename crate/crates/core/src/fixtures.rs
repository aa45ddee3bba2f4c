//! Bundled diagrams and symmetric Tait graphs.

use crate::pd::{parse_pd, PlanarDiagram};
use crate::symmetric::{parse_symmetric, SymmetricTaitGraph};

/// A knot with a minimal and a non-minimal PD code.
#[derive(Clone, Copy, Debug)]
pub struct KnotFixture {
    pub name: &'static str,
    pub minimal: &'static str,
    pub nonminimal: &'static str,
}

impl KnotFixture {
    pub fn minimal_diagram(&self) -> PlanarDiagram {
        parse_pd(self.minimal).expect("bundled PD parses")
    }

    pub fn nonminimal_diagram(&self) -> PlanarDiagram {
        parse_pd(self.nonminimal).expect("bundled PD parses")
    }
}

macro_rules! knot {
    ($name:literal) => {
        KnotFixture {
            name: $name,
            minimal: include_str!(concat!("../fixtures/pd/", $name, ".pd")),
            nonminimal: include_str!(concat!("../fixtures/pd/", $name, "_nonminimal.pd")),
        }
    };
}

/// Every prime knot through seven crossings, plus the unknot.
pub const KNOTS: &[KnotFixture] = &[
    knot!("0_1"),
    knot!("3_1"),
    knot!("4_1"),
    knot!("5_1"),
    knot!("5_2"),
    knot!("6_1"),
    knot!("6_2"),
    knot!("6_3"),
    knot!("7_1"),
    knot!("7_2"),
    knot!("7_3"),
    knot!("7_4"),
    knot!("7_5"),
    knot!("7_6"),
    knot!("7_7"),
];

pub fn knot(name: &str) -> Option<&'static KnotFixture> {
    KNOTS.iter().find(|k| k.name == name)
}

/// Medial diagram of the bundled `9_48` symmetric Tait graph.
pub const KNOT_9_48: &str = include_str!("../fixtures/pd/9_48.pd");

/// Symmetric Tait graphs: pretzel instances `pretzel_<p>_<q>` and `9_48`.
pub const SYMMETRIC: &[(&str, &str)] = &[
    (
        "pretzel_1_2",
        include_str!("../fixtures/sym/pretzel_1_2.sym"),
    ),
    (
        "pretzel_3_2",
        include_str!("../fixtures/sym/pretzel_3_2.sym"),
    ),
    (
        "pretzel_3_4",
        include_str!("../fixtures/sym/pretzel_3_4.sym"),
    ),
    (
        "pretzel_5_2",
        include_str!("../fixtures/sym/pretzel_5_2.sym"),
    ),
    (
        "pretzel_7_6",
        include_str!("../fixtures/sym/pretzel_7_6.sym"),
    ),
    ("9_48", include_str!("../fixtures/sym/9_48.sym")),
];

pub fn symmetric(name: &str) -> Option<SymmetricTaitGraph> {
    SYMMETRIC
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| parse_symmetric(text).expect("bundled graph parses"))
}
