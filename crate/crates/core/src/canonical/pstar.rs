use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition_core::{core_and_quotient, core_profile, is_e_core, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "condition")]
pub enum PStarViolation {
    /// `|μ^{i^-}| + |μ^i| + |μ^{i^+}| > d_i + 1`.
    Local { i: usize, sum: usize, bound: usize },
    /// Both equalities hold for `i ≺ j` but no `i ≺ k ≺ j` has `d_k > 0`.
    Separation { i: usize, j: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PStarReport {
    pub member: bool,
    pub quotient: Vec<Partition>,
    pub violations: Vec<PStarViolation>,
}

/// Membership of `μ` in the class `P*_κ`, with every violated condition.
pub fn pstar_contains(core: &Partition, e: usize, mu: &Partition) -> Result<PStarReport> {
    if !is_e_core(core, e) {
        return Err(Error::InvalidCore { core: core.to_string(), e });
    }
    let cq = core_and_quotient(mu, e, None);
    if &cq.core != core {
        return Err(Error::Domain(format!("{mu} has {e}-core {}, not {core}", cq.core)));
    }
    let profile = core_profile(core, e, Some(cq.n))?;
    let size = |r: Option<usize>| r.map_or(0, |r| cq.quotient[r].size());
    let d = |i: usize| profile.d(i).expect("1 <= i < e");

    let mut violations = Vec::new();
    for i in 1..e {
        let sum = size(profile.pred(i)) + size(Some(i)) + size(profile.succ(i));
        if sum > d(i) + 1 {
            violations.push(PStarViolation::Local { i, sum, bound: d(i) + 1 });
        }
    }
    for i in 1..e {
        if size(profile.pred(i)) + size(Some(i)) != d(i) + 1 {
            continue;
        }
        for j in 1..e {
            if !profile.precedes(i, j) || size(Some(j)) + size(profile.succ(j)) != d(j) + 1 {
                continue;
            }
            let separated = (1..e)
                .any(|k| profile.precedes(i, k) && profile.precedes(k, j) && d(k) > 0);
            if !separated {
                violations.push(PStarViolation::Separation { i, j });
            }
        }
    }
    Ok(PStarReport { member: violations.is_empty(), quotient: cq.quotient, violations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition_core::{from_core_and_quotient, pt, CoreQuotient};

    #[test]
    fn worked_example() {
        let r = pstar_contains(&pt("3,3"), 5, &pt("8,3,2,1,1,1")).unwrap();
        assert!(r.member);
        assert_eq!(r.quotient, vec![pt("-"), pt("1"), pt("-"), pt("-"), pt("1")]);
    }

    #[test]
    fn core_itself() {
        assert!(pstar_contains(&pt("3,3"), 5, &pt("3,3")).unwrap().member);
        assert!(pstar_contains(&Partition::empty(), 2, &Partition::empty()).unwrap().member);
    }

    #[test]
    fn adjacent_nonempty_runners_violate() {
        let cq = CoreQuotient {
            core: pt("3,3"),
            quotient: vec![pt("-"), pt("1"), pt("1"), pt("-"), pt("-")],
            e: 5,
            n: 2,
        };
        let mu = from_core_and_quotient(&cq).unwrap();
        let r = pstar_contains(&pt("3,3"), 5, &mu).unwrap();
        assert!(!r.member);
        assert!(r.violations.contains(&PStarViolation::Local { i: 2, sum: 2, bound: 1 }));
    }

    #[test]
    fn errors() {
        assert!(matches!(pstar_contains(&pt("2"), 2, &pt("2")), Err(Error::InvalidCore { .. })));
        assert!(matches!(pstar_contains(&pt("1"), 2, &pt("2")), Err(Error::Domain(_))));
    }
}
