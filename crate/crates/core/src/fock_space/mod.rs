//! Exact Laurent polynomials and the action of `f_r`, `e_r`, their divided
//! powers, and the composites `F_{a,k}` on the Fock space.

mod laurent;
mod operators;
mod vector;

pub use laurent::Laurent;
pub use operators::{
    apply, bead_count_for, divided_power, e_step, f_operator, f_operator_labels, f_step,
    Generator,
};
pub use vector::FockVector;
pub(crate) use vector::parse_int;

pub fn gauss_factorial(k: usize) -> Laurent {
    Laurent::gauss_factorial(k)
}
