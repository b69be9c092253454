//! Shipped example data: quandles, diagrams, presentations, a pair and the
//! Z4 cocycle used for the granny and square knots.

use crate::coloring::{parse_cocycle, Cocycle};
use crate::diagram::{parse_pd, LinkDiagram, Presentation};
use crate::quandle::io::{parse_pair, parse_quandle};
use crate::quandle::{AlexanderPairTable, FiniteQuandle};

pub const TETRAHEDRON_QND: &str = include_str!("../fixtures/tetrahedron.qnd");
pub const R3_QND: &str = include_str!("../fixtures/r3.qnd");
pub const S4_4CYCLES_QND: &str = include_str!("../fixtures/s4_4cycles.qnd");
pub const TETRA_BURAU_PAIR: &str = include_str!("../fixtures/tetra_burau.pair");
pub const TETRA2_PRES: &str = include_str!("../fixtures/tetra2.pres");
pub const UNKNOT_PRES: &str = include_str!("../fixtures/unknot.pres");
pub const TREFOIL_PD: &str = include_str!("../fixtures/trefoil.pd");
pub const FIGURE8_PD: &str = include_str!("../fixtures/figure8.pd");
pub const HOPF_PD: &str = include_str!("../fixtures/hopf.pd");
pub const GRANNY_PD: &str = include_str!("../fixtures/granny.pd");
pub const SQUARE_PD: &str = include_str!("../fixtures/square.pd");
pub const THETA_Z4_COC: &str = include_str!("../fixtures/theta_z4.coc");

/// Absolute path of the fixture directory in the source tree.
pub fn dir() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

pub fn tetrahedron() -> FiniteQuandle {
    parse_quandle(TETRAHEDRON_QND).expect("tetrahedron fixture")
}

pub fn r3() -> FiniteQuandle {
    parse_quandle(R3_QND).expect("R3 fixture")
}

pub fn s4_four_cycles() -> FiniteQuandle {
    parse_quandle(S4_4CYCLES_QND).expect("4-cycle fixture")
}

pub fn tetra_burau() -> AlexanderPairTable {
    AlexanderPairTable::new(parse_pair(TETRA_BURAU_PAIR, &tetrahedron()).expect("pair fixture")).expect("valid pair")
}

pub fn tetra2() -> Presentation {
    Presentation::parse(TETRA2_PRES).expect("presentation fixture")
}

pub fn unknot() -> Presentation {
    Presentation::parse(UNKNOT_PRES).expect("unknot fixture")
}

pub fn trefoil() -> LinkDiagram {
    parse_pd(TREFOIL_PD).expect("trefoil fixture")
}

pub fn figure8() -> LinkDiagram {
    parse_pd(FIGURE8_PD).expect("figure-eight fixture")
}

pub fn hopf() -> LinkDiagram {
    parse_pd(HOPF_PD).expect("Hopf fixture")
}

pub fn granny() -> LinkDiagram {
    parse_pd(GRANNY_PD).expect("granny fixture")
}

pub fn square() -> LinkDiagram {
    parse_pd(SQUARE_PD).expect("square fixture")
}

/// The Z4 cocycle on the 4-cycle quandle found by
/// `qalex search-cocycle --quandle s4_4cycles.qnd --modulus 4
///  --filter-diagram trefoil.pd --filter-multiset e:6,u:24`.
pub fn theta_z4() -> Cocycle {
    parse_cocycle(THETA_Z4_COC, &s4_four_cycles()).expect("cocycle fixture")
}

/// All shipped diagrams with their names.
pub fn diagrams() -> Vec<(&'static str, LinkDiagram)> {
    vec![
        ("trefoil", trefoil()),
        ("figure8", figure8()),
        ("hopf", hopf()),
        ("granny", granny()),
        ("square", square()),
    ]
}
