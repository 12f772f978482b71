use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::partition::Partition;
use crate::error::{Error, Result};

/// An `e`-runner abacus: position `p` lies on runner `p mod e`, row `p / e`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbacusDisplay {
    e: usize,
    occupied: BTreeSet<usize>,
}

impl AbacusDisplay {
    /// Beta-numbers `λ_i + t - i` for `1 <= i <= t`.
    pub fn new(lambda: &Partition, e: usize, t: usize) -> Result<Self> {
        if t < lambda.len() {
            return Err(Error::BeadCount { beads: t, length: lambda.len() });
        }
        let occupied = (0..t).map(|i| lambda.part(i) + t - 1 - i).collect();
        Ok(AbacusDisplay { e, occupied })
    }

    pub fn from_positions(e: usize, positions: impl IntoIterator<Item = usize>) -> Self {
        AbacusDisplay { e, occupied: positions.into_iter().collect() }
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn beads(&self) -> usize {
        self.occupied.len()
    }

    pub fn positions(&self) -> impl DoubleEndedIterator<Item = usize> + '_ {
        self.occupied.iter().copied()
    }

    pub fn is_occupied(&self, p: usize) -> bool {
        self.occupied.contains(&p)
    }

    pub fn partition(&self) -> Partition {
        let t = self.beads();
        Partition::from_decreasing(
            self.occupied.iter().rev().enumerate().map(|(i, &b)| b - (t - 1 - i)).collect(),
        )
    }

    pub fn runner_of(&self, p: usize) -> usize {
        p % self.e
    }

    /// Occupied rows on `runner`, ascending.
    pub fn runner_rows(&self, runner: usize) -> Vec<usize> {
        self.occupied.iter().filter(|&&p| p % self.e == runner).map(|p| p / self.e).collect()
    }

    pub fn runner_beads(&self, runner: usize) -> usize {
        self.occupied.iter().filter(|&&p| p % self.e == runner).count()
    }

    /// Occupied positions on `runner` strictly after `p`.
    pub fn beads_below(&self, runner: usize, p: usize) -> usize {
        self.occupied.range(p + 1..).filter(|&&q| q % self.e == runner).count()
    }

    /// Occupied positions on `runner` strictly before `p`.
    pub fn beads_above(&self, runner: usize, p: usize) -> usize {
        self.occupied.range(..p).filter(|&&q| q % self.e == runner).count()
    }

    pub fn largest_occupied(&self, runner: usize) -> Option<usize> {
        self.occupied.iter().rev().find(|&&p| p % self.e == runner).copied()
    }

    pub fn least_vacant(&self, runner: usize) -> usize {
        let mut p = runner;
        while self.is_occupied(p) {
            p += self.e;
        }
        p
    }

    /// Vacant positions above `p` on its runner.
    pub fn bead_weight(&self, p: usize) -> usize {
        let mut w = 0;
        let mut q = p;
        while q >= self.e {
            q -= self.e;
            if !self.is_occupied(q) {
                w += 1;
            }
        }
        w
    }

    pub fn weight(&self) -> usize {
        self.occupied.iter().map(|&p| self.bead_weight(p)).sum()
    }

    /// Number of occupied positions strictly between `lo` and `hi`.
    pub fn occupied_between(&self, lo: usize, hi: usize) -> usize {
        if hi <= lo + 1 {
            return 0;
        }
        self.occupied.range(lo + 1..hi).count()
    }

    pub fn move_bead(&self, from: usize, to: usize) -> AbacusDisplay {
        debug_assert!(self.is_occupied(from) && !self.is_occupied(to));
        let mut occupied = self.occupied.clone();
        occupied.remove(&from);
        occupied.insert(to);
        AbacusDisplay { e: self.e, occupied }
    }

    /// Exchanges the contents of runners `a` and `b` row by row.
    pub fn swap_runners(&self, a: usize, b: usize) -> AbacusDisplay {
        let e = self.e;
        let occupied = self
            .occupied
            .iter()
            .map(|&p| {
                let (row, r) = (p / e, p % e);
                let r = if r == a {
                    b
                } else if r == b {
                    a
                } else {
                    r
                };
                row * e + r
            })
            .collect();
        AbacusDisplay { e, occupied }
    }

    /// All beads pushed as far up their runners as they go.
    pub fn pushed_up(&self) -> AbacusDisplay {
        let e = self.e;
        let occupied = (0..e)
            .flat_map(|r| (0..self.runner_beads(r)).map(move |row| row * e + r))
            .collect();
        AbacusDisplay { e, occupied }
    }

    /// The partition read off a single runner.
    pub fn runner_partition(&self, runner: usize) -> Partition {
        let rows = self.runner_rows(runner);
        let m = rows.len();
        Partition::from_decreasing(
            rows.iter().rev().enumerate().map(|(j, &r)| r - (m - 1 - j)).collect(),
        )
    }
}

/// An `e`-core together with the `e`-quotient read on `l(core) + n·e` beads.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoreQuotient {
    pub core: Partition,
    pub quotient: Vec<Partition>,
    pub e: usize,
    /// Normalisation parameter actually used for the display.
    pub n: usize,
}

impl CoreQuotient {
    pub fn weight(&self) -> usize {
        self.quotient.iter().map(Partition::size).sum()
    }

    pub fn beads(&self) -> usize {
        self.core.len() + self.n * self.e
    }

    pub fn quotient_sizes(&self) -> Vec<usize> {
        self.quotient.iter().map(Partition::size).collect()
    }
}

pub fn e_core(lambda: &Partition, e: usize) -> Partition {
    let display = AbacusDisplay::new(lambda, e, lambda.len()).expect("length fits");
    display.pushed_up().partition()
}

pub fn is_e_core(lambda: &Partition, e: usize) -> bool {
    &e_core(lambda, e) == lambda
}

pub fn e_weight(lambda: &Partition, e: usize) -> usize {
    (lambda.size() - e_core(lambda, e).size()) / e
}

/// Smallest admissible normalisation for `lambda`, never below `floor`.
fn normalisation(lambda: &Partition, core: &Partition, e: usize, floor: usize) -> usize {
    let mut n = floor;
    while core.len() + n * e < lambda.len() {
        n += 1;
    }
    n
}

/// The display of `lambda` on `l(κ) + n·e` beads and the core/quotient read from it.
///
/// `n = None` selects `weight + 1`; any requested `n` is raised until all
/// parts fit.
pub fn standard_display(
    lambda: &Partition,
    e: usize,
    n: Option<usize>,
) -> (AbacusDisplay, CoreQuotient) {
    let core = e_core(lambda, e);
    let weight = (lambda.size() - core.size()) / e;
    let n = normalisation(lambda, &core, e, n.unwrap_or(weight + 1));
    let t = core.len() + n * e;
    let display = AbacusDisplay::new(lambda, e, t).expect("normalised");
    let quotient = (0..e).map(|r| display.runner_partition(r)).collect();
    (display, CoreQuotient { core, quotient, e, n })
}

pub fn core_and_quotient(lambda: &Partition, e: usize, n: Option<usize>) -> CoreQuotient {
    standard_display(lambda, e, n).1
}

/// Inverse of [`core_and_quotient`].
pub fn from_core_and_quotient(cq: &CoreQuotient) -> Result<Partition> {
    if cq.quotient.len() != cq.e {
        return Err(Error::Parameter(format!(
            "quotient has {} components, expected {}",
            cq.quotient.len(),
            cq.e
        )));
    }
    Ok(core_display_with_quotient(&cq.core, &cq.quotient, cq.e, cq.n)?.partition())
}

/// The display of the partition with the given core and quotient, on
/// `l(core) + n·e` beads (`n` raised as needed).
pub fn core_display_with_quotient(
    core: &Partition,
    quotient: &[Partition],
    e: usize,
    n: usize,
) -> Result<AbacusDisplay> {
    if !is_e_core(core, e) {
        return Err(Error::InvalidCore { core: core.to_string(), e });
    }
    let n = n.max(quotient.iter().map(Partition::len).max().unwrap_or(0));
    let t = core.len() + n * e;
    let core_display = AbacusDisplay::new(core, e, t)?;
    let mut positions = Vec::with_capacity(t);
    for (r, q) in quotient.iter().enumerate() {
        let m = core_display.runner_beads(r);
        debug_assert!(m >= q.len());
        for j in 0..m {
            let row = q.part(j) + m - 1 - j;
            positions.push(row * e + r);
        }
    }
    Ok(AbacusDisplay::from_positions(e, positions))
}

/// Every partition with core `core` and weight `weight`, lexicographically decreasing.
pub fn block_partitions(core: &Partition, e: usize, weight: usize) -> Result<Vec<Partition>> {
    let mut out = super::partition::multipartitions(weight, e)
        .into_iter()
        .map(|quotient| {
            core_display_with_quotient(core, &quotient, e, weight + 1).map(|d| d.partition())
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort_unstable_by(|a, b| b.cmp(a));
    Ok(out)
}

/// All `e`-cores of size at most `max_size`, ascending by size.
pub fn e_cores_up_to(e: usize, max_size: usize) -> Vec<Partition> {
    (0..=max_size)
        .flat_map(|n| super::partition::partitions_of(n).into_iter().rev())
        .filter(|p| is_e_core(p, e))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn set(d: &AbacusDisplay) -> Vec<usize> {
        d.positions().rev().collect()
    }

    #[test]
    fn blocks() {
        let b = block_partitions(&Partition::empty(), 2, 2).unwrap();
        assert_eq!(b, crate::partition_core::partitions_of(4));
        let b = block_partitions(&p("2,1"), 2, 1).unwrap();
        assert_eq!(b, vec![p("4,1"), p("2,1,1,1")]);
        assert!(b.iter().all(|l| e_core(l, 2) == p("2,1")));
    }

    #[test]
    fn to_abacus_examples() {
        let d = AbacusDisplay::new(&p("6,6,5,4"), 3, 6).unwrap();
        assert_eq!(set(&d), vec![11, 10, 8, 6, 1, 0]);
        let d = AbacusDisplay::new(&Partition::empty(), 2, 3).unwrap();
        assert_eq!(set(&d), vec![2, 1, 0]);
        let d = AbacusDisplay::new(&p("2"), 2, 2).unwrap();
        assert_eq!(set(&d), vec![3, 0]);
        assert!(matches!(
            AbacusDisplay::new(&p("2,1,1"), 2, 2),
            Err(Error::BeadCount { beads: 2, length: 3 })
        ));
    }

    #[test]
    fn from_abacus_examples() {
        let d = AbacusDisplay::from_positions(3, [11, 10, 8, 6, 1, 0]);
        assert_eq!(d.partition(), p("6,6,5,4"));
        assert_eq!(AbacusDisplay::from_positions(2, [2, 1, 0]).partition(), Partition::empty());
        assert_eq!(AbacusDisplay::from_positions(2, [5, 3, 1, 0]).partition(), p("2,1"));
    }

    #[test]
    fn core_quotient_examples() {
        let cq = core_and_quotient(&p("6,6,5,4"), 3, None);
        assert_eq!(cq.core, Partition::empty());
        assert_eq!(cq.quotient, vec![p("1"), p("2"), p("2,2")]);
        assert_eq!(cq.weight(), 7);

        let cq = core_and_quotient(&p("8,3,2,1,1,1"), 5, None);
        assert_eq!(cq.core, p("3,3"));
        assert_eq!(cq.quotient, vec![p("-"), p("1"), p("-"), p("-"), p("1")]);

        let cq = core_and_quotient(&p("4,1"), 2, None);
        assert_eq!(cq.core, p("2,1"));
        assert_eq!(cq.weight(), 1);
        let cq = core_and_quotient(&p("2,1"), 2, Some(4));
        assert_eq!(cq.weight(), 0);
        assert!(cq.quotient.iter().all(Partition::is_empty));
        assert_eq!(cq.n, 4);
    }

    #[test]
    fn inverse_reading() {
        let cq = CoreQuotient {
            core: Partition::empty(),
            quotient: vec![p("1"), p("2"), p("2,2")],
            e: 3,
            n: 1,
        };
        assert_eq!(from_core_and_quotient(&cq).unwrap(), p("6,6,5,4"));
        let cq = CoreQuotient {
            core: p("3,3"),
            quotient: vec![p("-"), p("1"), p("-"), p("-"), p("1")],
            e: 5,
            n: 1,
        };
        assert_eq!(from_core_and_quotient(&cq).unwrap(), p("8,3,2,1,1,1"));
        let cq = CoreQuotient { core: p("3,3"), quotient: vec![Partition::empty(); 5], e: 5, n: 2 };
        assert_eq!(from_core_and_quotient(&cq).unwrap(), p("3,3"));
        let bad = CoreQuotient { core: p("2"), quotient: vec![Partition::empty(); 2], e: 2, n: 1 };
        assert!(matches!(from_core_and_quotient(&bad), Err(Error::InvalidCore { .. })));
    }

    #[test]
    fn bead_weights_and_gaps() {
        let d = AbacusDisplay::new(&p("6,6,5,4"), 3, 6).unwrap();
        assert_eq!(d.bead_weight(11), 2);
        assert_eq!(d.bead_weight(6), 1);
        assert_eq!(d.bead_weight(0), 0);
        assert_eq!(d.weight(), 7);
        assert_eq!(d.least_vacant(0), 3);
        assert_eq!(d.largest_occupied(2), Some(11));
        assert_eq!(d.occupied_between(1, 8), 1);
    }

    #[test]
    fn cores() {
        assert_eq!(e_cores_up_to(2, 6), vec![p("-"), p("1"), p("2,1"), p("3,2,1")]);
        assert!(is_e_core(&p("3,3"), 5));
        assert!(!is_e_core(&p("2"), 2));
        assert_eq!(e_weight(&p("6,6,5,4"), 3), 7);
    }
}
