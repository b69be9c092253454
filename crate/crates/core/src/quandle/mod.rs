//! Finite quandles, homomorphisms and Alexander pairs.

mod finite;
mod group;
mod hom;
pub mod io;
mod pair;

pub use finite::{verify_quandle_axioms, AxiomViolation, FiniteQuandle};
pub use group::FiniteGroup;
pub use hom::{enumerate_homs, QuandleHom};
pub use pair::{build_module_quandle, verify_alexander_pair, AlexanderPairTable, PairTables, PairViolation};
