// Every verification mode on small bounds.

use fock_canon::canonical::{verify_suite, VerifyMode, VerifyParams};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for e in 2..=4 {
        let params = VerifyParams { max_core: 4, max_n: 9, max_weight: 3, ..VerifyParams::new(e) };
        for mode in VerifyMode::ALL {
            let report = verify_suite(mode, &params)?;
            println!("{}", report.summary());
            assert!(report.passed(), "{:?}", report.first_failure());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
