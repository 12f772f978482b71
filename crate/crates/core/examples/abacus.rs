// Abacus displays, cores, quotients and the runner order of a core.

use fock_canon::partition_core::{core_and_quotient, core_profile, standard_display, Partition};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let lam: Partition = "8,3,2,1,1,1".parse()?;
    let (display, cq) = standard_display(&lam, 5, None);
    println!("{lam} on {} beads, weight {}", display.beads(), display.weight());
    println!("core {}, quotient {:?}", cq.core, cq.quotient.iter().map(|q| q.to_string()).collect::<Vec<_>>());
    assert_eq!(cq.core, "3,3".parse()?);

    let profile = core_profile(&cq.core, 5, None)?;
    let gaps: Vec<_> = (1..5).map(|i| profile.d(i)).collect();
    println!("chain {:?}, gaps {:?}, Rouquier: {}", profile.chain(), gaps, profile.is_rouquier());

    // swapping runners and reading the result back
    let swapped = display.swap_runners(1, 2).partition();
    println!("runners 1 and 2 swapped: {swapped} / {:?}", core_and_quotient(&swapped, 5, None).quotient);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
