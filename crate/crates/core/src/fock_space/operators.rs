use super::laurent::Laurent;
use super::vector::FockVector;
use crate::error::{Error, Result};
use crate::partition_core::AbacusDisplay;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    F,
    E,
}

fn check_beads(x: &FockVector, r: usize, e: usize, t: usize) -> Result<usize> {
    if e < 2 || r >= e {
        return Err(Error::Parameter(format!("residue {r} invalid for e = {e}")));
    }
    if t < x.max_length() {
        return Err(Error::BeadCount { beads: t, length: x.max_length() });
    }
    let i = (r + t) % e;
    if i == 0 {
        return Err(Error::Parameter(format!("e = {e} divides r + t = {}", r + t)));
    }
    Ok(i)
}

/// Smallest bead count `t >= max length` with `e ∤ r + t`.
pub fn bead_count_for(x: &FockVector, r: usize, e: usize) -> usize {
    let mut t = x.max_length();
    while (r + t).is_multiple_of(e) {
        t += 1;
    }
    t
}

/// `f_r` on `t` beads: move a bead from runner `i-1` to a vacant position on
/// runner `i`, weighted by `v^{N_>}`, where `i = (r + t) mod e`.
pub fn f_step(x: &FockVector, r: usize, e: usize, t: usize) -> Result<FockVector> {
    let i = check_beads(x, r, e, t)?;
    let mut out = FockVector::zero();
    for (lam, c) in x.iter() {
        let d = AbacusDisplay::new(lam, e, t)?;
        for p in d.positions().filter(|&p| p % e == i - 1) {
            if d.is_occupied(p + 1) {
                continue;
            }
            let exp = d.beads_below(i - 1, p) as i64 - d.beads_below(i, p + 1) as i64;
            out.add_term(d.move_bead(p, p + 1).partition(), &c.shift(exp));
        }
    }
    Ok(out)
}

/// `e_r` on `t` beads: move a bead from runner `i` back to runner `i-1`,
/// weighted by `v^{-N_<}`.
pub fn e_step(x: &FockVector, r: usize, e: usize, t: usize) -> Result<FockVector> {
    let i = check_beads(x, r, e, t)?;
    let mut out = FockVector::zero();
    for (mu, c) in x.iter() {
        let d = AbacusDisplay::new(mu, e, t)?;
        for q in d.positions().filter(|&q| q % e == i) {
            if d.is_occupied(q - 1) {
                continue;
            }
            let n_less = d.beads_above(i - 1, q - 1) as i64 - d.beads_above(i, q) as i64;
            out.add_term(d.move_bead(q, q - 1).partition(), &c.shift(-n_less));
        }
    }
    Ok(out)
}

pub fn apply(x: &FockVector, which: Generator, r: usize, e: usize) -> Result<FockVector> {
    if x.is_zero() {
        return Ok(FockVector::zero());
    }
    let t = bead_count_for(x, r, e);
    match which {
        Generator::F => f_step(x, r, e, t),
        Generator::E => e_step(x, r, e, t),
    }
}

/// `f_r^{(k)}` or `e_r^{(k)}`: the `k`-th power divided by `[k]!`.
pub fn divided_power(
    x: &FockVector,
    which: Generator,
    r: usize,
    k: usize,
    e: usize,
) -> Result<FockVector> {
    let mut y = x.clone();
    for _ in 0..k {
        y = apply(&y, which, r, e)?;
    }
    if k <= 1 {
        return Ok(y);
    }
    let fact = Laurent::gauss_factorial(k);
    let mut out = FockVector::zero();
    for (lam, c) in y.iter() {
        let q = c.exact_divide(&fact).map_err(|err| {
            Error::Internal(format!("[{k}]! does not divide the coefficient of {lam}: {err}"))
        })?;
        out.add_term(lam.clone(), &q);
    }
    Ok(out)
}

/// Runner-relative labels `j` in the order the factors of `F_{a,k}` act.
pub fn f_operator_labels(a: usize, e: usize) -> Vec<usize> {
    (0..a).chain((a..e).rev()).collect()
}

/// `F_{a,k}` relative to a core of length `core_len`: the composite of
/// `𝔣_j^{(k)} = f_{j - l(κ)}^{(k)}` over [`f_operator_labels`].
pub fn f_operator(
    x: &FockVector,
    core_len: usize,
    a: usize,
    k: usize,
    e: usize,
) -> Result<FockVector> {
    if !(1..e).contains(&a) || k == 0 {
        return Err(Error::Parameter(format!("F_{{a,k}} needs 1 <= a < e and k >= 1, got a={a}, k={k}")));
    }
    let mut y = x.clone();
    for j in f_operator_labels(a, e) {
        let r = (j + e - core_len % e) % e;
        y = divided_power(&y, Generator::F, r, k, e)?;
    }
    Ok(y)
}
