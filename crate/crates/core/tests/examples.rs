//! Every example under examples/ runs to completion.

#[allow(dead_code)]
mod abacus_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/abacus.rs"));
}

#[allow(dead_code)]
mod canonical_basis_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/canonical_basis.rs"));
}

#[allow(dead_code)]
mod closed_formula_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/closed_formula.rs"));
}

#[allow(dead_code)]
mod command_line_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/command_line.rs"));
}

#[allow(dead_code)]
mod fock_operators_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/fock_operators.rs"));
}

#[allow(dead_code)]
mod jantzen_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/jantzen.rs"));
}

#[allow(dead_code)]
mod littlewood_richardson_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/littlewood_richardson.rs"));
}

#[allow(dead_code)]
mod mullineux_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/mullineux.rs"));
}

#[allow(dead_code)]
mod runner_swaps_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/runner_swaps.rs"));
}

#[allow(dead_code)]
mod verify_identities_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/verify_identities.rs"));
}

#[test]
fn abacus_runs() {
    abacus_example::run_example().expect("abacus example should run");
}

#[test]
fn canonical_basis_runs() {
    canonical_basis_example::run_example().expect("canonical_basis example should run");
}

#[test]
fn closed_formula_runs() {
    closed_formula_example::run_example().expect("closed_formula example should run");
}

#[test]
fn command_line_runs() {
    command_line_example::run_example().expect("command_line example should run");
}

#[test]
fn fock_operators_runs() {
    fock_operators_example::run_example().expect("fock_operators example should run");
}

#[test]
fn jantzen_runs() {
    jantzen_example::run_example().expect("jantzen example should run");
}

#[test]
fn littlewood_richardson_runs() {
    littlewood_richardson_example::run_example().expect("littlewood_richardson example should run");
}

#[test]
fn mullineux_runs() {
    mullineux_example::run_example().expect("mullineux example should run");
}

#[test]
fn runner_swaps_runs() {
    runner_swaps_example::run_example().expect("runner_swaps example should run");
}

#[test]
fn verify_identities_runs() {
    verify_identities_example::run_example().expect("verify_identities example should run");
}
