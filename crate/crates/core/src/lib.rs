//! Quandle colorings, quandle 2-cocycle invariants and f-twisted Alexander
//! matrices of links, computed exactly over integer group rings.

pub mod coloring;
pub mod diagram;
pub mod error;
pub mod fixtures;
pub mod quandle;
pub mod ring;
pub mod twisted;
