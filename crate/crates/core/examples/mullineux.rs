// The Mullineux map via good nodes, and its shadow in the canonical basis.

use fock_canon::canonical::{good_node_word, mullineux, LltEngine};
use fock_canon::partition_core::{e_regular_partitions, e_weight};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let e = 3;
    let mut engine = LltEngine::new(e);
    for mu in e_regular_partitions(6, e) {
        let star = mullineux(&mu, e)?;
        assert_eq!(mullineux(&star, e)?, mu);
        // the coefficient of top degree in G(μ) sits at the conjugate of μ*
        let w = e_weight(&mu, e) as i64;
        let g = engine.column(&mu)?;
        let top: Vec<String> = g
            .vector
            .iter()
            .filter(|(_, c)| c.degree() == Some(w))
            .map(|(l, _)| l.to_string())
            .collect();
        println!("{mu} -> {star}  word {:?}  degree-{w} term at {top:?}", good_node_word(&mu, e)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
