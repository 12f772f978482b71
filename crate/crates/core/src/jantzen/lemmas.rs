//! Exhaustive checks of the structural properties of induced sequences and
//! the arrow relation. Each returns the list of failures it found.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{approx_equiv, arrows, induced_sequence, j_upper_set, leq_p, upward_moves};
use crate::error::Result;
use crate::partition_core::{AbacusDisplay, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaFailure {
    pub lemma: &'static str,
    pub detail: String,
}

fn fail(lemma: &'static str, detail: String) -> LemmaFailure {
    LemmaFailure { lemma, detail }
}

fn merged(mut a: Vec<usize>, b: impl IntoIterator<Item = usize>) -> Vec<usize> {
    a.extend(b);
    a.sort_unstable_by(|x, y| y.cmp(x));
    a
}

/// Length and runner extremes of `s(λ)`, and its behaviour under every upward move.
pub fn sequence_properties(lambda: &Partition, e: usize, t: usize) -> Result<Vec<LemmaFailure>> {
    let d = AbacusDisplay::new(lambda, e, t)?;
    let s = induced_sequence(lambda, e, t)?.values;
    let mut out = Vec::new();
    if s.len() != d.weight() {
        out.push(fail("length", format!("{lambda}: |s| = {} but weight {}", s.len(), d.weight())));
    }
    for j in 0..e {
        let runner_weight: usize = d.positions().filter(|p| p % e == j).map(|p| d.bead_weight(p)).sum();
        if runner_weight == 0 {
            continue;
        }
        let on_j: Vec<usize> = s.iter().copied().filter(|x| x % e == j).collect();
        let (max, min) = (on_j[0], on_j[on_j.len() - 1]);
        if d.largest_occupied(j) != Some(max) || d.least_vacant(j) + e != min {
            out.push(fail(
                "runner extremes",
                format!(
                    "{lambda} runner {j}: max {max}, min {min}, largest occupied {:?}, least vacant {}",
                    d.largest_occupied(j),
                    d.least_vacant(j)
                ),
            ));
        }
    }
    for m in upward_moves(lambda, e, t)? {
        let rest = induced_sequence(&m.target, e, t)?.values;
        let expect = merged(rest, (0..m.hops).map(|k| m.from - k * e));
        if expect != s {
            out.push(fail(
                "move decomposition",
                format!("{lambda} moving {} -> {}: {:?} vs {:?}", m.from, m.to, s, expect),
            ));
        }
    }
    Ok(out)
}

/// For every `μ ≥_J λ` in the block: `λ ≤_p μ` and `λ ⊴ μ`.
pub fn order_implications(block: &[Partition], e: usize) -> Vec<LemmaFailure> {
    let mut out = Vec::new();
    for lambda in block {
        for mu in j_upper_set(lambda, e) {
            if !leq_p(lambda, &mu, e) {
                out.push(fail("J implies p", format!("{lambda} <=_J {mu} but not <=_p")));
            }
            if !mu.dominates(lambda) {
                out.push(fail("J implies dominance", format!("{lambda} <=_J {mu} but not dominated")));
            }
        }
    }
    out
}

/// For `λ ≈ μ`: every arrow `λ → τ` with `τ ≉ λ` has `τ ≰_p μ`.
pub fn arrows_leave_p_interval(lambda: &Partition, mu: &Partition, e: usize) -> Vec<LemmaFailure> {
    arrows(lambda, e)
        .into_iter()
        .filter(|a| !approx_equiv(&a.tau, lambda, e) && leq_p(&a.tau, mu, e))
        .map(|a| fail("arrow leaves interval", format!("{lambda} -> {} <=_p {mu}", a.tau)))
        .collect()
}

/// Arrows `λ → τ` with `τ ≈ λ` come in pairs of opposite sign.
pub fn sign_cancellation(lambda: &Partition, e: usize) -> Vec<LemmaFailure> {
    let mut by_tau: BTreeMap<Partition, (usize, i64)> = BTreeMap::new();
    for a in arrows(lambda, e) {
        if approx_equiv(&a.tau, lambda, e) {
            let entry = by_tau.entry(a.tau.clone()).or_default();
            entry.0 += 1;
            entry.1 += a.sign();
        }
    }
    by_tau
        .into_iter()
        .filter(|(_, (count, sum))| *count != 2 || *sum != 0)
        .map(|(tau, (count, sum))| {
            fail("sign cancellation", format!("{lambda} -> {tau}: {count} arrows, signed sum {sum}"))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition_core::{block_partitions, partitions_of};

    #[test]
    fn sequences_small() {
        for n in 0..=10 {
            for lam in partitions_of(n) {
                for e in 2..=4 {
                    let t = lam.len() + e;
                    assert!(sequence_properties(&lam, e, t).unwrap().is_empty(), "{lam} e={e}");
                }
            }
        }
    }

    #[test]
    fn implications_small_block() {
        let block = block_partitions(&Partition::empty(), 2, 3).unwrap();
        assert!(order_implications(&block, 2).is_empty());
    }
}
