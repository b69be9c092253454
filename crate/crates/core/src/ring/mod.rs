//! Exact arithmetic in `Z[A]` for finitely generated abelian `A`.

mod elem;
mod group;
mod ideal;
pub mod intmat;
mod matrix;

pub use elem::GroupRingElem;
pub use group::{AbelianGroup, GroupElem};
pub use ideal::{
    compare_laurent, elementary_ideal, ideal_contains_finite, ideal_equal_finite, ideal_key,
    laurent_divide, normalize_unit, readable_associate, principal_equal_laurent, IdealGens, IdealKey, LaurentVerdict,
    MAX_DIM,
};
pub use intmat::{hnf, kernel_mod};
pub use matrix::{RingMatrix, COFACTOR_MAX};
