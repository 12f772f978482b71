// The LLT algorithm: all canonical basis columns of one degree.

use fock_canon::canonical::{llt_canonical, LltEngine};
use fock_canon::runner::{render_columns, Format};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cols = llt_canonical(6, 3)?;
    print!("{}", render_columns(&cols, Format::Text)?);

    let mut engine = LltEngine::new(2);
    let g = engine.column(&"4".parse()?)?;
    println!("G(4) at e = 2: {}", g.vector);
    print!("{}", render_columns(&[g], Format::Latex)?);

    // e-singular partitions index no column
    assert!(engine.column(&"1,1".parse()?).is_err());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
