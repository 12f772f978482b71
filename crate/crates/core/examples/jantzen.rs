// Induced e-sequences, the arrow relation and Jantzen sums at l = 0.

use fock_canon::canonical::LltEngine;
use fock_canon::jantzen::{arrows, block_column, induced_sequence, jantzen_sum, leq_j, leq_p};
use fock_canon::partition_core::{block_partitions, Partition};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let lam: Partition = "6,6,5,4".parse()?;
    println!("s({lam}) on 6 beads, e = 3: {:?}", induced_sequence(&lam, 3, 6)?.values);

    let e = 3;
    let core = Partition::empty();
    let block = block_partitions(&core, e, 2)?;
    for a in arrows(&"2,2,1,1".parse()?, e) {
        println!("  {} -> {} via {} sign {:+}", a.lambda, a.tau, a.sigma, a.sign());
    }

    let mut engine = LltEngine::new(e);
    let mu: Partition = "6".parse()?;
    let column = block_column(&mu, e, &engine.column(&mu)?.vector.at_one());
    for lam in block.iter().filter(|l| **l != mu) {
        let j = jantzen_sum(lam, &mu, e, 0, &column)?;
        println!(
            "  J({lam}, {mu}) = {j}, d = {}, <=_p {}, <=_J {}",
            column[lam],
            leq_p(lam, &mu, e),
            leq_j(lam, &mu, e)
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
