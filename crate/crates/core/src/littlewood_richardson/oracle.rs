use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::partition_core::{partitions_of, Partition};

pub const DEFAULT_ORACLE_BOUND: usize = 10;

/// Kostka number `K_{λ,ν}`: semistandard tableaux of shape `λ` and content `ν`
/// (any composition), by peeling the largest entry as a horizontal strip.
pub fn kostka(shape: &Partition, content: &[usize]) -> u64 {
    let mut memo = HashMap::new();
    kostka_memo(shape, content, &mut memo)
}

fn kostka_memo(
    shape: &Partition,
    content: &[usize],
    memo: &mut HashMap<(Partition, usize), u64>,
) -> u64 {
    let Some((&last, rest)) = content.split_last() else {
        return u64::from(shape.is_empty());
    };
    if shape.size() != content.iter().sum::<usize>() || shape.len() > content.len() {
        return 0;
    }
    if let Some(&v) = memo.get(&(shape.clone(), content.len())) {
        return v;
    }
    let mut total = 0;
    for inner in horizontal_strips(shape, last) {
        total += kostka_memo(&inner, rest, memo);
    }
    memo.insert((shape.clone(), content.len()), total);
    total
}

/// All `μ ⊆ λ` with `λ/μ` a horizontal strip of `size` boxes.
fn horizontal_strips(shape: &Partition, size: usize) -> Vec<Partition> {
    let parts = shape.parts();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(parts.len());
    strips(parts, 0, size, &mut cur, &mut out);
    out
}

fn strips(parts: &[usize], i: usize, rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if i == parts.len() {
        if rest == 0 {
            out.push(Partition::from_decreasing(cur.clone()));
        }
        return;
    }
    let below = parts.get(i + 1).copied().unwrap_or(0);
    let max_remove = (parts[i] - below).min(rest);
    for r in 0..=max_remove {
        cur.push(parts[i] - r);
        strips(parts, i + 1, rest - r, cur, out);
        cur.pop();
    }
}

fn padded(p: &Partition, n: usize) -> Vec<usize> {
    (0..n).map(|i| p.part(i)).collect()
}

/// Coefficient of the monomial `x^γ` in `s_λ` (symmetric, so any ordering).
fn monomial_coefficient(shape: &Partition, exponents: &[usize]) -> u64 {
    let mut sorted: Vec<usize> = exponents.iter().copied().filter(|&x| x > 0).collect();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    kostka(shape, &sorted)
}

/// `s_α s_β` in the Schur basis, via the monomial expansion in
/// `|α| + |β|` variables and leading-monomial elimination.
pub fn schur_product_oracle(
    alpha: &Partition,
    beta: &Partition,
    bound: usize,
) -> Result<BTreeMap<Partition, u64>> {
    let n = alpha.size() + beta.size();
    if n > bound {
        return Err(Error::OracleBound { size: n, bound });
    }
    // Coefficients of the dominant monomials of the product.
    let mut product: BTreeMap<Partition, i64> = BTreeMap::new();
    for gamma in partitions_of(n) {
        let g = padded(&gamma, n.max(1));
        let mut coeff = 0u64;
        let mut split = vec![0usize; g.len()];
        loop {
            if split.iter().sum::<usize>() == alpha.size() {
                let other: Vec<usize> = g.iter().zip(&split).map(|(a, b)| a - b).collect();
                let a = monomial_coefficient(alpha, &split);
                if a > 0 {
                    coeff += a * monomial_coefficient(beta, &other);
                }
            }
            // odometer over 0 <= split <= g
            let mut k = 0;
            loop {
                if k == g.len() {
                    break;
                }
                if split[k] < g[k] {
                    split[k] += 1;
                    break;
                }
                split[k] = 0;
                k += 1;
            }
            if k == g.len() {
                break;
            }
        }
        if coeff > 0 {
            product.insert(gamma, coeff as i64);
        }
    }

    let mut result = BTreeMap::new();
    while let Some((lead, &c)) = product.iter().next_back() {
        let lead = lead.clone();
        if c < 0 {
            return Err(Error::Internal(format!("negative Schur coefficient at {lead}")));
        }
        result.insert(lead.clone(), c as u64);
        let keys: Vec<Partition> = product.keys().cloned().collect();
        for gamma in keys {
            let k = kostka(&lead, gamma.parts()) as i64;
            if k == 0 {
                continue;
            }
            let entry = product.get_mut(&gamma).expect("present");
            *entry -= c * k;
            if *entry == 0 {
                product.remove(&gamma);
            }
        }
        if product.contains_key(&lead) {
            return Err(Error::Internal(format!("elimination failed at {lead}")));
        }
    }
    Ok(result)
}
