//! Twisted Alexander matrices from Alexander pairs, and their ideals.

mod derivative;
mod moves;
mod theorem;

pub use derivative::{deficiency_bound, DerivativeContext};
pub use moves::{apply_move, MatrixMove};
pub use theorem::{
    cocycle_pair, e0_ideal, e0_multiset, ideal_multiset, multisets_differ, verify_theorem, verify_theorem_all, BlockReport, TheoremReport,
};
