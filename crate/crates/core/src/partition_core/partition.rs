use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition: a weakly decreasing sequence of positive parts.
///
/// The derived `Ord` is the lexicographic order on part sequences, which at
/// fixed size refines the dominance order.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("zero part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("parts not weakly decreasing: {parts:?}")));
        }
        Ok(Partition(parts))
    }

    /// Builds a partition from a weakly decreasing sequence, dropping trailing zeros.
    pub(crate) fn from_decreasing(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The single-row partition `(k)`.
    pub fn row(k: usize) -> Self {
        if k == 0 {
            Self::empty()
        } else {
            Partition(vec![k])
        }
    }

    /// The single-column partition `(1^k)`.
    pub fn column(k: usize) -> Self {
        Partition(vec![1; k])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-indexed), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn first_part(&self) -> usize {
        self.part(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.first_part();
        let cols = (0..width)
            .map(|c| self.0.iter().take_while(|&&p| p > c).count())
            .collect();
        Partition(cols)
    }

    /// Dominance `self ⊵ other`. Partitions of different sizes are never comparable.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let n = self.len().max(other.len());
        let (mut a, mut b) = (0usize, 0usize);
        for i in 0..n {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Young diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(o, s)| o <= s)
    }

    /// No part value is repeated `e` or more times.
    pub fn is_e_regular(&self, e: usize) -> bool {
        let mut run = 0;
        for (i, &p) in self.0.iter().enumerate() {
            if i > 0 && self.0[i - 1] == p {
                run += 1;
            } else {
                run = 1;
            }
            if run >= e {
                return false;
            }
        }
        true
    }

    /// Removes the first column (every part decreases by one).
    pub fn remove_first_column(&self) -> Partition {
        Partition::from_decreasing(self.0.iter().map(|p| p - 1).collect())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("-");
        }
        let mut first = true;
        for p in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(n, n, &mut cur, &mut out);
    out
}

fn fill(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for p in (1..=rest.min(max)).rev() {
        cur.push(p);
        fill(rest - p, p, cur, out);
        cur.pop();
    }
}

/// All `e`-regular partitions of `n`, in increasing lexicographic order.
pub fn e_regular_partitions(n: usize, e: usize) -> Vec<Partition> {
    let mut v: Vec<_> = partitions_of(n).into_iter().filter(|p| p.is_e_regular(e)).collect();
    v.reverse();
    v
}

/// All `k`-tuples of partitions with total size `n`.
pub fn multipartitions(n: usize, k: usize) -> Vec<Vec<Partition>> {
    if k == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in (0..=n).rev() {
        let heads = partitions_of(first);
        let tails = multipartitions(n - first, k - 1);
        for h in &heads {
            for t in &tails {
                let mut v = Vec::with_capacity(k);
                v.push(h.clone());
                v.extend(t.iter().cloned());
                out.push(v);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p("4").conjugate(), p("1,1,1,1"));
        assert_eq!(p("6,6,5,4").conjugate(), p("4,4,4,4,3,2"));
    }

    #[test]
    fn dominance_examples() {
        assert!(p("4").dominates(&p("2,2")));
        assert!(p("3,1").dominates(&p("3,1")));
        assert!(!p("2,2").dominates(&p("3,1")));
        assert!(!p("3").dominates(&p("1,1")));
    }

    #[test]
    fn regularity() {
        assert!(p("8,3,2,1,1,1").is_e_regular(5));
        assert!(!p("1,1").is_e_regular(2));
        assert!(Partition::empty().is_e_regular(2));
        assert!(!p("8,3,2,1,1,1").is_e_regular(3));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("-"), Partition::empty());
        assert_eq!(p("3,2,2").to_string(), "3,2,2");
        assert_eq!(Partition::empty().to_string(), "-");
        assert!("2,3".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
        assert!("x".parse::<Partition>().is_err());
    }

    #[test]
    fn counts() {
        let counts: Vec<_> = (0..10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
        // partitions of 6 into distinct parts
        assert_eq!(e_regular_partitions(6, 2).len(), 4);
        // bipartitions of 3
        assert_eq!(multipartitions(3, 2).len(), 10);
        assert_eq!(multipartitions(0, 3).len(), 1);
    }

    #[test]
    fn lex_refines_dominance() {
        for n in 1..9 {
            let ps = partitions_of(n);
            for a in &ps {
                for b in &ps {
                    if a.dominates(b) {
                        assert!(a >= b, "{a} ⊵ {b} but lex smaller");
                    }
                }
            }
        }
    }
}
