//! Colorings, quandle 2-cocycles and cocycle invariants.

mod cocycle;
mod invariant;

pub use cocycle::{
    find_cocycle, format_cocycle, parse_cocycle, parse_cocycle_table, search_cocycles, verify_cocycle, Cocycle, CocycleParseError,
    CocycleViolation, SearchOutcome,
};
pub use invariant::{
    cocycle_invariant, component_invariant, enumerate_colorings, weight, Coloring, InvariantMultiset,
};
