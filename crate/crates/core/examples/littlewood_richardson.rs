// Littlewood-Richardson coefficients, products and skew expansions.

use fock_canon::littlewood_richardson::{lr_coefficient, lr_product, lr_skew, schur_product_oracle};
use fock_canon::partition_core::Partition;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let p = |s: &str| s.parse::<Partition>();
    let c = lr_coefficient(&p("3,2,1")?, &p("2,1")?, &p("2,1")?);
    println!("c^(3,2,1)_(2,1),(2,1) = {c}");

    let product = lr_product(&p("2,1")?, &p("2")?);
    for (lam, c) in &product {
        println!("  s_(2,1) s_(2) contains {c} s_({lam})");
    }
    let oracle = schur_product_oracle(&p("2,1")?, &p("2")?, 12)?;
    assert_eq!(product.len(), oracle.len());
    for (lam, c) in &product {
        assert_eq!(oracle[lam], *c);
    }

    for (beta, c) in lr_skew(&p("3,2")?, &p("2")?) {
        println!("  s_(3,2)/(2) contains {c} s_({beta})");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
