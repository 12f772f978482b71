//! Induced `e`-sequences, single-bead moves, the arrow relation and the
//! orders `≤_p` and `≤_J`, and the Jantzen sum `J_{λμ}`.

pub mod lemmas;

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition_core::{core_and_quotient, e_core, e_weight, AbacusDisplay, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InducedSequence {
    pub values: Vec<usize>,
    pub beads: usize,
}

/// Merge of `(a, a-e, ..., a-(w-1)e)` over the beads `a` of positive weight `w`.
pub fn induced_sequence(lambda: &Partition, e: usize, t: usize) -> Result<InducedSequence> {
    let d = AbacusDisplay::new(lambda, e, t)?;
    Ok(sequence_of(&d))
}

fn sequence_of(d: &AbacusDisplay) -> InducedSequence {
    let e = d.e();
    let mut values: Vec<usize> =
        d.positions().flat_map(|a| (0..d.bead_weight(a)).map(move |k| a - k * e)).collect();
    values.sort_unstable_by(|x, y| y.cmp(x));
    InducedSequence { values, beads: d.beads() }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BeadMove {
    pub source: Partition,
    pub target: Partition,
    pub from: usize,
    pub to: usize,
    pub hops: usize,
    pub crossings: usize,
}

fn moves_of(d: &AbacusDisplay) -> Vec<(usize, usize, AbacusDisplay)> {
    let e = d.e();
    let mut out = Vec::new();
    for a in d.positions() {
        for i in 1..=a / e {
            if !d.is_occupied(a - i * e) {
                out.push((a, i, d.move_bead(a, a - i * e)));
            }
        }
    }
    out
}

/// Every relocation of one bead `a → a - ie` to a vacant position.
pub fn upward_moves(lambda: &Partition, e: usize, t: usize) -> Result<Vec<BeadMove>> {
    let d = AbacusDisplay::new(lambda, e, t)?;
    Ok(moves_of(&d)
        .into_iter()
        .map(|(a, i, s)| BeadMove {
            source: lambda.clone(),
            target: s.partition(),
            from: a,
            to: a - i * e,
            hops: i,
            crossings: d.occupied_between(a - i * e, a),
        })
        .collect())
}

/// `λ →^σ τ`: `σ` moves the bead at `a` to `a - ie`, then `τ` moves the bead
/// at `b - ie` of `σ` to `b`, with `a < b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArrowPair {
    pub lambda: Partition,
    pub sigma: Partition,
    pub tau: Partition,
    pub i: usize,
    pub a: usize,
    pub b: usize,
    /// Occupied positions strictly between `a - ie` and `a` in `λ`.
    pub l_lambda_sigma: usize,
    /// Occupied positions strictly between `b - ie` and `b` in `τ`.
    pub l_tau_sigma: usize,
}

impl ArrowPair {
    /// `(-1)^{l_{λσ} + l_{τσ} + 1}`.
    pub fn sign(&self) -> i64 {
        if (self.l_lambda_sigma + self.l_tau_sigma).is_multiple_of(2) {
            -1
        } else {
            1
        }
    }
}

pub fn arrow_pairs(lambda: &Partition, e: usize, t: usize) -> Result<Vec<ArrowPair>> {
    let d = AbacusDisplay::new(lambda, e, t)?;
    Ok(arrows_of(lambda, &d))
}

fn arrows_of(lambda: &Partition, d: &AbacusDisplay) -> Vec<ArrowPair> {
    let e = d.e();
    let mut out = Vec::new();
    for (a, i, s) in moves_of(d) {
        let sigma = s.partition();
        let l_lambda_sigma = d.occupied_between(a - i * e, a);
        let top = s.positions().next_back().unwrap_or(0) + i * e;
        for b in a + 1..=top {
            if b < i * e || s.is_occupied(b) || !s.is_occupied(b - i * e) {
                continue;
            }
            let tau = s.move_bead(b - i * e, b);
            out.push(ArrowPair {
                lambda: lambda.clone(),
                sigma: sigma.clone(),
                tau: tau.partition(),
                i,
                a,
                b,
                l_lambda_sigma,
                l_tau_sigma: tau.occupied_between(b - i * e, b),
            });
        }
    }
    out
}

/// Arrow pairs on the standard display of `λ`.
pub fn arrows(lambda: &Partition, e: usize) -> Vec<ArrowPair> {
    let t = beads_for(&[lambda], e).expect("single partition");
    arrows_of(lambda, &AbacusDisplay::new(lambda, e, t).expect("fits"))
}

/// A bead count `l(κ) + Ne` shared by all the partitions, or `None` if their
/// cores or weights differ.
pub fn beads_for(parts: &[&Partition], e: usize) -> Option<usize> {
    let first = parts.first()?;
    let core = e_core(first, e);
    let w = e_weight(first, e);
    if parts.iter().any(|p| e_core(p, e) != core || e_weight(p, e) != w) {
        return None;
    }
    let mut n = w + 1;
    while parts.iter().any(|p| core.len() + n * e < p.len()) {
        n += 1;
    }
    Some(core.len() + n * e)
}

/// `λ ≤_p μ`: equal core and weight, and induced sequences compare termwise.
pub fn leq_p(lambda: &Partition, mu: &Partition, e: usize) -> bool {
    let Some(t) = beads_for(&[lambda, mu], e) else {
        return false;
    };
    let s = induced_sequence(lambda, e, t).expect("fits");
    let u = induced_sequence(mu, e, t).expect("fits");
    s.values.iter().zip(&u.values).all(|(x, y)| x <= y)
}

/// Every partition reachable from `λ` along arrows, `λ` included.
pub fn j_upper_set(lambda: &Partition, e: usize) -> BTreeSet<Partition> {
    let mut seen = BTreeSet::from([lambda.clone()]);
    let mut queue = VecDeque::from([lambda.clone()]);
    while let Some(x) = queue.pop_front() {
        for arrow in arrows(&x, e) {
            if seen.insert(arrow.tau.clone()) {
                queue.push_back(arrow.tau);
            }
        }
    }
    seen
}

/// `λ ≤_J μ`: `μ` is reachable from `λ` by a chain of arrows.
pub fn leq_j(lambda: &Partition, mu: &Partition, e: usize) -> bool {
    if lambda == mu {
        return true;
    }
    if beads_for(&[lambda, mu], e).is_none() || !mu.dominates(lambda) {
        return false;
    }
    let mut seen = BTreeSet::from([lambda.clone()]);
    let mut queue = VecDeque::from([lambda.clone()]);
    while let Some(x) = queue.pop_front() {
        for arrow in arrows(&x, e) {
            if &arrow.tau == mu {
                return true;
            }
            if mu.dominates(&arrow.tau) && seen.insert(arrow.tau.clone()) {
                queue.push_back(arrow.tau);
            }
        }
    }
    false
}

/// `l`-adic valuation, with `l = 0` and `l = 1` giving zero.
pub fn nu(l: u64, h: u64) -> u32 {
    if l < 2 || h == 0 {
        return 0;
    }
    let (mut h, mut k) = (h, 0);
    while h % l == 0 {
        h /= l;
        k += 1;
    }
    k
}

/// `J_{λμ} = Σ (-1)^{l_{λσ}+l_{τσ}+1}(1 + ν_l(h_{λσ})) d_{τμ}`, over the arrows
/// `λ →^σ τ`, with `d_{τμ}` looked up in `column`.
pub fn jantzen_sum(
    lambda: &Partition,
    mu: &Partition,
    e: usize,
    l: u64,
    column: &BTreeMap<Partition, BigInt>,
) -> Result<BigInt> {
    if lambda == mu {
        return Err(Error::Domain(format!("J is defined for distinct partitions, got {mu} twice")));
    }
    if beads_for(&[lambda, mu], e).is_none() {
        return Ok(BigInt::from(0));
    }
    let mut total = BigInt::from(0);
    for arrow in arrows(lambda, e) {
        let d = column.get(&arrow.tau).ok_or_else(|| {
            Error::Input(format!("column of {mu} has no entry for {}", arrow.tau))
        })?;
        let factor = arrow.sign() * (1 + i64::from(nu(l, arrow.i as u64)));
        total += d * factor;
    }
    Ok(total)
}

/// A column over the whole block of `μ`, zero where `values` has no entry.
pub fn block_column(
    mu: &Partition,
    e: usize,
    values: &BTreeMap<Partition, BigInt>,
) -> BTreeMap<Partition, BigInt> {
    let cq = core_and_quotient(mu, e, None);
    crate::partition_core::block_partitions(&cq.core, e, cq.weight())
        .expect("core of a partition")
        .into_iter()
        .map(|p| {
            let d = values.get(&p).cloned().unwrap_or_default();
            (p, d)
        })
        .collect()
}

/// `λ ≈ μ`: same core and equal quotient sizes runner by runner.
pub fn approx_equiv(lambda: &Partition, mu: &Partition, e: usize) -> bool {
    let (a, b) = (core_and_quotient(lambda, e, None), core_and_quotient(mu, e, None));
    a.core == b.core && a.quotient_sizes() == b.quotient_sizes()
}
