//! Canonical basis columns, the closed formula `H(μ)`, the class `P*_κ`,
//! the Mullineux map, runner-swap reduction and the identity checks tying
//! them together.

mod closed_formula;
mod llt;
mod mullineux;
mod pstar;
mod reduction;
pub mod verify;

pub use closed_formula::{
    c_coeff, closed_formula_support, delta, h_vector, ClosedFormulaTerm, HVector,
};
pub use llt::{
    decomposition_column, ladder_monomial, ladder_sizes, llt_canonical, CanonicalColumn,
    LltEngine,
};
pub use mullineux::{from_good_node_word, good_addable, good_node_word, good_removable, mullineux};
pub use pstar::{pstar_contains, PStarReport, PStarViolation};
pub use reduction::{next_swap, rouquier_reduction, swap_runners_of, Reduction, SwapStep};
pub use verify::{verify_suite, VerifyMode, VerifyParams, VerifyReport};
