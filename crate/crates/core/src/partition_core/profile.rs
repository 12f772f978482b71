use serde::{Serialize, Serializer};

use super::abacus::{is_e_core, AbacusDisplay};
use super::partition::Partition;
use crate::error::{Error, Result};

/// Runner statistics of an `e`-core displayed on `l(κ) + N·e` beads.
///
/// Runners are totally ordered by `(bead count, index)`; runner 0 is always
/// the minimum and [`CoreProfile::max_runner`] the maximum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreProfile {
    core: Partition,
    e: usize,
    n_param: usize,
    counts: Vec<usize>,
    /// Runners listed from the minimum to the maximum.
    chain: Vec<usize>,
    /// Position of each runner in `chain`; this is the permutation π.
    pi: Vec<usize>,
    gaps: Vec<usize>,
}

impl CoreProfile {
    pub fn new(core: &Partition, e: usize, n: Option<usize>) -> Result<Self> {
        if e < 2 {
            return Err(Error::Parameter(format!("e must be at least 2, got {e}")));
        }
        if !is_e_core(core, e) {
            return Err(Error::InvalidCore { core: core.to_string(), e });
        }
        let n_param = n.unwrap_or(1).max(1);
        let display = AbacusDisplay::new(core, e, core.len() + n_param * e)?;
        let counts: Vec<usize> = (0..e).map(|r| display.runner_beads(r)).collect();
        let mut chain: Vec<usize> = (0..e).collect();
        chain.sort_by_key(|&i| (counts[i], i));
        let mut pi = vec![0; e];
        for (pos, &r) in chain.iter().enumerate() {
            pi[r] = pos;
        }
        let mut gaps = vec![0; e];
        for i in 1..e {
            let prev = chain[pi[i] - 1];
            gaps[i] = if prev < i {
                counts[i] - counts[prev]
            } else {
                counts[i] - counts[prev] - 1
            };
        }
        Ok(CoreProfile { core: core.clone(), e, n_param, counts, chain, pi, gaps })
    }

    pub fn core(&self) -> &Partition {
        &self.core
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn n_param(&self) -> usize {
        self.n_param
    }

    /// Bead count `n_i` on each runner.
    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn chain(&self) -> &[usize] {
        &self.chain
    }

    /// `i ⪯ j`.
    pub fn precedes_eq(&self, i: usize, j: usize) -> bool {
        self.pi[i] <= self.pi[j]
    }

    /// `i ≺ j`.
    pub fn precedes(&self, i: usize, j: usize) -> bool {
        self.pi[i] < self.pi[j]
    }

    pub fn succ(&self, i: usize) -> Option<usize> {
        self.chain.get(self.pi[i] + 1).copied()
    }

    pub fn pred(&self, i: usize) -> Option<usize> {
        self.pi[i].checked_sub(1).map(|p| self.chain[p])
    }

    /// The gap `d_i`, defined for `1 <= i < e`.
    pub fn d(&self, i: usize) -> Option<usize> {
        (1..self.e).contains(&i).then(|| self.gaps[i])
    }

    pub fn gaps(&self) -> &[usize] {
        &self.gaps[1..]
    }

    pub fn pi(&self, i: usize) -> usize {
        self.pi[i]
    }

    pub fn pi_vec(&self) -> &[usize] {
        &self.pi
    }

    pub fn max_runner(&self) -> usize {
        *self.chain.last().expect("e >= 2")
    }

    /// `Φ(i) ≡ M - i (mod e)`.
    pub fn phi(&self, i: usize) -> usize {
        (self.max_runner() + self.e - i % self.e) % self.e
    }

    /// `|{(i, j) : i < j, j ≺ i}|`.
    pub fn inversions(&self) -> usize {
        let mut count = 0;
        for i in 0..self.e {
            for j in i + 1..self.e {
                if self.precedes(j, i) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Bead counts weakly increase from left to right.
    pub fn is_rouquier(&self) -> bool {
        self.counts.windows(2).all(|w| w[0] <= w[1])
    }
}

impl Serialize for CoreProfile {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("CoreProfile", 8)?;
        st.serialize_field("n", &self.counts)?;
        st.serialize_field("d", self.gaps())?;
        st.serialize_field("pi", &self.pi)?;
        st.serialize_field("M", &self.max_runner())?;
        let phi: Vec<usize> = (0..self.e).map(|i| self.phi(i)).collect();
        st.serialize_field("phi", &phi)?;
        st.serialize_field("rouquier", &self.is_rouquier())?;
        st.serialize_field("inversions", &self.inversions())?;
        st.serialize_field("N", &self.n_param)?;
        st.end()
    }
}

pub fn core_profile(core: &Partition, e: usize, n: Option<usize>) -> Result<CoreProfile> {
    CoreProfile::new(core, e, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition_core::abacus::e_cores_up_to;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn profile_of_33_mod_5() {
        let prof = core_profile(&p("3,3"), 5, None).unwrap();
        assert_eq!(prof.gaps(), &[0, 0, 1, 0]);
        assert_eq!(prof.max_runner(), 4);
        assert_eq!(prof.pi_vec(), &[0, 1, 2, 3, 4]);
        assert!(prof.is_rouquier());
        assert_eq!(prof.inversions(), 0);
        assert_eq!(prof.d(0), None);
        assert_eq!(prof.succ(4), None);
        assert_eq!(prof.pred(0), None);
    }

    #[test]
    fn profile_of_empty_mod_2() {
        let prof = core_profile(&Partition::empty(), 2, None).unwrap();
        assert_eq!(prof.counts()[0], prof.counts()[1]);
        assert!(prof.precedes(0, 1));
        assert_eq!(prof.d(1), Some(0));
        assert!(prof.is_rouquier());
    }

    #[test]
    fn profile_of_1_mod_3() {
        // four beads {4, 2, 1, 0}: runner counts (1, 2, 1)
        let prof = core_profile(&p("1"), 3, Some(1)).unwrap();
        assert_eq!(prof.counts(), &[1, 2, 1]);
        assert_eq!(prof.chain(), &[0, 2, 1]);
        assert_eq!(prof.max_runner(), 1);
        assert_eq!(prof.gaps(), &[0, 0]);
        assert_eq!(prof.inversions(), 1);
        assert!(!prof.is_rouquier());
        assert_eq!((0..3).map(|i| prof.phi(i)).collect::<Vec<_>>(), vec![1, 0, 2]);
    }

    #[test]
    fn rejects_non_core() {
        assert!(matches!(core_profile(&p("2"), 2, None), Err(Error::InvalidCore { .. })));
    }

    #[test]
    fn json_shape() {
        let prof = core_profile(&p("3,3"), 5, None).unwrap();
        let v = serde_json::to_value(&prof).unwrap();
        assert_eq!(v["d"], serde_json::json!([0, 0, 1, 0]));
        assert_eq!(v["M"], 4);
        assert_eq!(v["N"], 1);
        assert_eq!(v["rouquier"], true);
    }

    #[test]
    fn rouquier_conditions_agree() {
        for e in 2..=5 {
            for core in e_cores_up_to(e, 10) {
                let prof = core_profile(&core, e, None).unwrap();
                let identity = (0..e).all(|i| prof.pi(i) == i);
                let succ = (0..e - 1).all(|i| prof.succ(i) == Some(i + 1));
                assert_eq!(prof.is_rouquier(), identity, "{core} e={e}");
                assert_eq!(prof.is_rouquier(), succ);
                assert_eq!(prof.is_rouquier(), prof.inversions() == 0);
                assert_eq!(prof.chain()[0], 0);
            }
        }
    }
}
