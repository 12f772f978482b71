// Reducing a core to Rouquier type by runner swaps, and transporting H(μ).

use fock_canon::canonical::{h_vector, pstar_contains, rouquier_reduction, swap_runners_of};
use fock_canon::fock_space::{divided_power, Generator};
use fock_canon::partition_core::{block_partitions, Partition};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let e = 4;
    let core: Partition = "1".parse()?;
    let reduction = rouquier_reduction(&core, e)?;
    println!("{core} reduces to {} in {} swaps", reduction.terminal, reduction.steps.len());

    let members: Vec<Partition> = block_partitions(&core, e, 1)?
        .into_iter()
        .filter(|mu| pstar_contains(&core, e, mu).map(|r| r.member).unwrap_or(false))
        .collect();
    println!("P*_({core}) in weight 1: {}", members.iter().map(|m| m.to_string()).collect::<Vec<_>>().join("  "));
    let mut mu = members.last().cloned().ok_or("empty")?;
    for step in &reduction.steps {
        let image = swap_runners_of(&mu, e, step.i);
        let up = divided_power(&h_vector(&mu, e).vector, Generator::F, step.r, step.k, e)?;
        assert_eq!(up, h_vector(&image, e).vector);
        println!("swap runners {},{}: f_{}^({}) H({mu}) = H({image})", step.i - 1, step.i, step.r, step.k);
        mu = image;
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
