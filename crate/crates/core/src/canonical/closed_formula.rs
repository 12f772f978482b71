use std::collections::HashMap;

use serde::Serialize;

use crate::fock_space::{FockVector, Laurent};
use crate::littlewood_richardson::{lr_product, lr_skew};
use crate::partition_core::{
    core_and_quotient, core_profile, from_core_and_quotient, CoreProfile, CoreQuotient, Partition,
};

use super::pstar::pstar_contains;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedFormulaTerm {
    pub lambda: Partition,
    pub coefficient: u64,
    pub exponent: i64,
}

/// `H(μ) = Σ C_{λμ} v^{δ(λ,μ)} λ` together with its terms.
#[derive(Clone, Debug, Serialize)]
pub struct HVector {
    pub mu: Partition,
    pub e: usize,
    pub vector: FockVector,
    pub terms: Vec<ClosedFormulaTerm>,
    /// False when `μ ∉ P*_κ`; the formula is still evaluated.
    pub in_pstar: bool,
    pub n_used: usize,
}

fn profile_for(cq: &CoreQuotient) -> CoreProfile {
    core_profile(&cq.core, cq.e, Some(cq.n)).expect("core of a partition is a core")
}

/// `C_{λμ}`, by dynamic programming along the runner chain. Zero for distinct cores.
pub fn c_coeff(lambda: &Partition, mu: &Partition, e: usize) -> u64 {
    let lq = core_and_quotient(lambda, e, None);
    let mq = core_and_quotient(mu, e, None);
    if lq.core != mq.core || lq.weight() != mq.weight() {
        return 0;
    }
    let profile = profile_for(&mq);
    let max = profile.max_runner();
    // β^{j^-} -> accumulated weight
    let mut state: HashMap<Partition, u64> = HashMap::from([(Partition::empty(), 1)]);
    for &j in profile.chain() {
        let (lam_j, mu_j) = (&lq.quotient[j], &mq.quotient[j]);
        let mut next: HashMap<Partition, u64> = HashMap::new();
        for (beta_prev, w) in &state {
            for (alpha, c_mu) in lr_skew(mu_j, &beta_prev.conjugate()) {
                if j == max {
                    if &alpha == lam_j {
                        *next.entry(Partition::empty()).or_default() += w * c_mu;
                    }
                    continue;
                }
                for (beta, c_lam) in lr_skew(lam_j, &alpha) {
                    *next.entry(beta).or_default() += w * c_mu * c_lam;
                }
            }
        }
        state = next;
        if state.is_empty() {
            return 0;
        }
    }
    state.get(&Partition::empty()).copied().unwrap_or(0)
}

/// `δ(λ,μ) = Σ_{j≥1} π(j)(|μ^j| - |λ^j|)`; zero for distinct cores.
pub fn delta(lambda: &Partition, mu: &Partition, e: usize) -> i64 {
    let lq = core_and_quotient(lambda, e, None);
    let mq = core_and_quotient(mu, e, None);
    if lq.core != mq.core {
        return 0;
    }
    let profile = profile_for(&mq);
    (1..e)
        .map(|j| {
            profile.pi(j) as i64 * (mq.quotient[j].size() as i64 - lq.quotient[j].size() as i64)
        })
        .sum()
}

/// Every `λ` with `C_{λμ} ≠ 0` and its coefficient, generated directly from
/// the summation variables rather than by testing candidate quotients.
pub fn closed_formula_support(mu: &Partition, e: usize) -> Vec<(Partition, u64)> {
    let mq = core_and_quotient(mu, e, None);
    let profile = profile_for(&mq);
    let max = profile.max_runner();
    // (β^{j^-}, quotient of λ on the runners handled so far) -> weight
    type State = HashMap<(Partition, Vec<Partition>), u64>;
    let mut state: State = HashMap::from([((Partition::empty(), vec![Partition::empty(); e]), 1)]);
    for &j in profile.chain() {
        let mu_j = &mq.quotient[j];
        let mut next: State = HashMap::new();
        for ((beta_prev, lam_q), w) in &state {
            for (alpha, c_mu) in lr_skew(mu_j, &beta_prev.conjugate()) {
                if j == max {
                    let mut q = lam_q.clone();
                    q[j] = alpha;
                    *next.entry((Partition::empty(), q)).or_default() += w * c_mu;
                    continue;
                }
                let budget = mq.weight() - lam_q.iter().map(Partition::size).sum::<usize>();
                for beta_size in 0..=budget.saturating_sub(alpha.size()) {
                    for beta in crate::partition_core::partitions_of(beta_size) {
                        for (lam_j, c_lam) in lr_product(&alpha, &beta) {
                            let mut q = lam_q.clone();
                            q[j] = lam_j;
                            *next.entry((beta.clone(), q)).or_default() += w * c_mu * c_lam;
                        }
                    }
                }
            }
        }
        state = next;
    }
    let mut out: Vec<(Partition, u64)> = state
        .into_iter()
        .filter(|((beta, q), w)| {
            beta.is_empty() && *w > 0 && q.iter().map(Partition::size).sum::<usize>() == mq.weight()
        })
        .map(|((_, q), w)| {
            let cq = CoreQuotient { core: mq.core.clone(), quotient: q, e, n: mq.n };
            (from_core_and_quotient(&cq).expect("valid core"), w)
        })
        .collect();
    out.sort_by(|a, b| b.0.cmp(&a.0));
    out
}

pub fn h_vector(mu: &Partition, e: usize) -> HVector {
    let mq = core_and_quotient(mu, e, None);
    let in_pstar = pstar_contains(&mq.core, e, mu).map(|r| r.member).unwrap_or(false);
    let mut vector = FockVector::zero();
    let mut terms = Vec::new();
    for (lambda, c) in closed_formula_support(mu, e) {
        let exponent = delta(&lambda, mu, e);
        vector.add_term(lambda.clone(), &Laurent::monomial(exponent, c));
        terms.push(ClosedFormulaTerm { lambda, coefficient: c, exponent });
    }
    HVector { mu: mu.clone(), e, vector, terms, in_pstar, n_used: mq.n }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition_core::{multipartitions, pt};

    #[test]
    fn c_on_diagonal_is_one() {
        for mu in ["8,3,2,1,1,1", "4", "3,1", "2,2,1", "6,6,5,4"] {
            assert_eq!(c_coeff(&pt(mu), &pt(mu), 3), 1);
            assert_eq!(c_coeff(&pt(mu), &pt(mu), 5), 1);
        }
    }

    #[test]
    fn c_and_delta_examples() {
        let lam = pt("8,3,1,1,1,1,1");
        let mu = pt("8,3,2,1,1,1");
        let lq = core_and_quotient(&lam, 5, None);
        assert_eq!(lq.core, pt("3,3"));
        assert_eq!(lq.quotient, vec![pt("1"), pt("-"), pt("-"), pt("-"), pt("1")]);
        assert_eq!(c_coeff(&lam, &mu, 5), 1);
        assert_eq!(delta(&lam, &mu, 5), 1);
        assert_eq!(c_coeff(&pt("3"), &pt("2,1"), 2), 0);
        assert_eq!(delta(&pt("1,1"), &pt("2"), 2), 1);
        assert_eq!(delta(&mu, &mu, 5), 0);
    }

    #[test]
    fn h_examples() {
        let h = h_vector(&pt("3,3"), 5);
        assert_eq!(h.vector, FockVector::basis(pt("3,3")));
        let h = h_vector(&pt("2"), 2);
        let mut expect = FockVector::basis(pt("2"));
        expect.add_term(pt("1,1"), &Laurent::monomial(1, 1));
        assert_eq!(h.vector, expect);
        let h = h_vector(&pt("8,3,2,1,1,1"), 5);
        assert!(h.in_pstar);
        assert_eq!(h.vector.coeff(&pt("8,3,1,1,1,1,1")), Laurent::monomial(1, 1));
    }

    #[test]
    fn support_generation_matches_pointwise_c() {
        for (mu, e) in [("8,3,2,1,1,1", 5), ("4,2", 2), ("5,1", 3), ("3,3,1", 3), ("6,3", 4)] {
            let mu = pt(mu);
            let mq = core_and_quotient(&mu, e, None);
            let mut brute = Vec::new();
            for q in multipartitions(mq.weight(), e) {
                let cq = CoreQuotient { core: mq.core.clone(), quotient: q, e, n: mq.n };
                let lam = from_core_and_quotient(&cq).unwrap();
                let c = c_coeff(&lam, &mu, e);
                if c > 0 {
                    brute.push((lam, c));
                }
            }
            brute.sort_by(|a, b| b.0.cmp(&a.0));
            assert_eq!(closed_formula_support(&mu, e), brute, "mu={mu} e={e}");
        }
    }
}
