// Chevalley generators and divided powers acting on the Fock space.

use fock_canon::fock_space::{apply, divided_power, f_operator, FockVector, Generator};
use fock_canon::partition_core::Partition;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let one = FockVector::basis("1".parse()?);
    let f1_twice = apply(&apply(&one, Generator::F, 1, 2)?, Generator::F, 1, 2)?;
    println!("f_1 f_1 (1) = {f1_twice}");
    let f1_2 = divided_power(&one, Generator::F, 1, 2, 2)?;
    println!("f_1^(2) (1) = {f1_2}");
    assert_eq!(f1_2, FockVector::basis("2,1".parse()?));

    let back = divided_power(&f1_2, Generator::E, 1, 2, 2)?;
    println!("e_1^(2) f_1^(2) (1) = {back}");

    let x = FockVector::basis(Partition::empty());
    println!("F_(1,1) on the empty partition, e = 3: {}", f_operator(&x, 0, 1, 1, 3)?);
    println!("as JSON: {}", f1_twice.to_json());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
