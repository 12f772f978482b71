//! Littlewood-Richardson coefficients `c^λ_{αβ}`.
//!
//! [`lr_coefficient`] counts LR skew tableaux directly; [`schur_product_oracle`]
//! expands `s_α s_β` through monomials and re-expands in the Schur basis, and
//! exists to cross-check the former.

mod oracle;

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::partition_core::Partition;

pub use oracle::{kostka, schur_product_oracle, DEFAULT_ORACLE_BOUND};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LrQuery {
    pub outer: Partition,
    pub left: Partition,
    pub right: Partition,
}

type Memo = RwLock<HashMap<(Partition, Partition, Partition), u64>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `c^outer_{left, right}`, memoised for the life of the process.
pub fn lr_coefficient(outer: &Partition, left: &Partition, right: &Partition) -> u64 {
    if outer.size() != left.size() + right.size()
        || !outer.contains(left)
        || !outer.contains(right)
    {
        return 0;
    }
    if left.is_empty() {
        return u64::from(outer == right);
    }
    if right.is_empty() {
        return u64::from(outer == left);
    }
    let key = (outer.clone(), left.clone(), right.clone());
    if let Some(&c) = memo().read().expect("lr memo poisoned").get(&key) {
        return c;
    }
    let c = count_lr_tableaux(outer, left, right);
    memo().write().expect("lr memo poisoned").insert(key, c);
    c
}

pub fn lr(q: &LrQuery) -> u64 {
    lr_coefficient(&q.outer, &q.left, &q.right)
}

/// All `λ` with `c^λ_{αβ} > 0`, with their coefficients.
pub fn lr_product(left: &Partition, right: &Partition) -> Vec<(Partition, u64)> {
    crate::partition_core::partitions_of(left.size() + right.size())
        .into_iter()
        .filter_map(|lam| {
            let c = lr_coefficient(&lam, left, right);
            (c > 0).then_some((lam, c))
        })
        .collect()
}

/// All `β` with `c^outer_{left, β} > 0` (skew shape `outer / left`).
pub fn lr_skew(outer: &Partition, left: &Partition) -> Vec<(Partition, u64)> {
    if !outer.contains(left) {
        return Vec::new();
    }
    crate::partition_core::partitions_of(outer.size() - left.size())
        .into_iter()
        .filter_map(|beta| {
            let c = lr_coefficient(outer, left, &beta);
            (c > 0).then_some((beta, c))
        })
        .collect()
}

struct Filling<'a> {
    outer: &'a [usize],
    inner: Vec<usize>,
    content: &'a [usize],
    rows: Vec<Vec<usize>>,
    counts: Vec<usize>,
}

fn count_lr_tableaux(outer: &Partition, left: &Partition, right: &Partition) -> u64 {
    let inner: Vec<usize> = (0..outer.len()).map(|i| left.part(i)).collect();
    let rows = (0..outer.len()).map(|i| vec![0; outer.part(i) - inner[i]]).collect();
    let mut f = Filling {
        outer: outer.parts(),
        inner,
        content: right.parts(),
        rows,
        counts: vec![0; right.len()],
    };
    f.fill(0, outer.part(0))
}

impl Filling<'_> {
    /// Fills cells in reverse reading order: rows top to bottom, each row right to left.
    fn fill(&mut self, row: usize, col: usize) -> u64 {
        if row == self.outer.len() {
            return 1;
        }
        if col == self.inner[row] {
            let next = row + 1;
            return self.fill(next, self.outer.get(next).copied().unwrap_or(0));
        }
        let c = col - 1;
        let idx = c - self.inner[row];
        let upper = if c + 1 < self.outer[row] { self.rows[row][idx + 1] } else { usize::MAX };
        let lower = if row > 0 && c >= self.inner[row - 1] {
            self.rows[row - 1][c - self.inner[row - 1]] + 1
        } else {
            0
        };
        let mut total = 0;
        let top = upper.min(self.content.len().saturating_sub(1)).min(row);
        if lower > top {
            return 0;
        }
        for v in lower..=top {
            if self.counts[v] >= self.content[v] {
                continue;
            }
            if v > 0 && self.counts[v] >= self.counts[v - 1] {
                continue;
            }
            self.counts[v] += 1;
            self.rows[row][idx] = v;
            total += self.fill(row, c);
            self.counts[v] -= 1;
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition_core::pt;

    #[test]
    fn small_values() {
        assert_eq!(lr_coefficient(&pt("1"), &pt("-"), &pt("1")), 1);
        assert_eq!(lr_coefficient(&pt("3,2"), &pt("1"), &pt("1")), 0);
        assert_eq!(lr_coefficient(&pt("3,2,1"), &pt("2,1"), &pt("2,1")), 2);
        assert_eq!(lr_coefficient(&pt("4,2"), &pt("2,1"), &pt("2,1")), 1);
        assert_eq!(lr_coefficient(&pt("2,2"), &pt("3"), &pt("1")), 0);
        let big = schur_product_oracle(&pt("2,1"), &pt("3,2,1,1"), 10).unwrap();
        assert_eq!(lr_coefficient(&pt("4,3,2,1"), &pt("2,1"), &pt("3,2,1,1")), big[&pt("4,3,2,1")]);
        let oracle = schur_product_oracle(&pt("2,1"), &pt("2,1"), 10).unwrap();
        for (lam, c) in oracle {
            assert_eq!(lr_coefficient(&lam, &pt("2,1"), &pt("2,1")), c);
        }
    }

    #[test]
    fn pieri_row() {
        for n in 0..7 {
            for alpha in crate::partition_core::partitions_of(n) {
                for k in 1..4 {
                    for lam in crate::partition_core::partitions_of(n + k) {
                        let c = lr_coefficient(&lam, &alpha, &Partition::row(k));
                        let strip = lam.contains(&alpha)
                            && (0..lam.len()).all(|i| alpha.part(i) >= lam.part(i + 1));
                        assert_eq!(c, u64::from(strip), "{lam} / {alpha} row {k}");
                        let cc = lr_coefficient(&lam, &alpha, &Partition::column(k));
                        let vstrip = lam.contains(&alpha)
                            && (0..lam.len()).all(|i| lam.part(i) - alpha.part(i) <= 1);
                        assert_eq!(cc, u64::from(vstrip), "{lam} / {alpha} col {k}");
                    }
                }
            }
        }
    }
}
