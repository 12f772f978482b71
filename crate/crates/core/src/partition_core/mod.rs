//! Partitions, abacus displays, `e`-cores and `e`-quotients, and the runner
//! order attached to an `e`-core.

mod abacus;
mod partition;
mod profile;

pub use abacus::{
    block_partitions, core_and_quotient, core_display_with_quotient, e_core, e_cores_up_to, e_weight,
    from_core_and_quotient, is_e_core, standard_display, AbacusDisplay, CoreQuotient,
};
pub use partition::{e_regular_partitions, multipartitions, partitions_of, Partition};
pub use profile::{core_profile, CoreProfile};

/// Parses a partition literal, panicking on malformed input. Meant for tests
/// and examples.
pub fn pt(s: &str) -> Partition {
    s.parse().unwrap_or_else(|e| panic!("{e}"))
}
