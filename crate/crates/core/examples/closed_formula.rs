// Membership in P*_κ and the closed formula H(μ), compared with G(μ).

use fock_canon::canonical::{h_vector, pstar_contains, LltEngine};
use fock_canon::partition_core::{e_core, Partition};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let core: Partition = "3,3".parse()?;
    let mu: Partition = "8,3,2,1,1,1".parse()?;
    let report = pstar_contains(&core, 5, &mu)?;
    println!("{mu} in P*_({core}): {}", report.member);

    let h = h_vector(&mu, 5);
    for t in &h.terms {
        println!("  {} v^{} ({})", t.coefficient, t.exponent, t.lambda);
    }
    let g = LltEngine::new(5).column(&mu)?;
    assert_eq!(g.vector, h.vector);
    println!("G({mu}) = H({mu}) = {}", h.vector);

    let outside: Partition = "6,3".parse()?;
    let outside_core = e_core(&outside, 3);
    let r = pstar_contains(&outside_core, 3, &outside)?;
    println!("{outside} in P*_({outside_core}) at e = 3: {} {:?}", r.member, r.violations);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
