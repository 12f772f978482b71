//! Exhaustive identity checks over bounded families of partitions.
//!
//! Every mode enumerates its instances, fans them out over a worker pool and
//! collects failures in a deterministic order. A failure is report content,
//! never an error.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use super::closed_formula::{c_coeff, delta, h_vector};
use super::llt::LltEngine;
use super::mullineux::mullineux;
use super::pstar::pstar_contains;
use super::reduction::{rouquier_reduction, swap_runners_of};
use crate::error::{Error, Result};
use crate::fock_space::{divided_power, f_operator, FockVector, Generator, Laurent};
use crate::jantzen::{self, lemmas};
use crate::littlewood_richardson::{lr_coefficient, lr_product};
use crate::partition_core::{
    block_partitions, core_and_quotient, core_profile, e_cores_up_to, e_regular_partitions,
    from_core_and_quotient, standard_display, CoreProfile, CoreQuotient, Partition,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VerifyMode {
    Main1,
    Induct,
    Swap,
    Mull,
    Gap,
    Jantzen,
    Orders,
}

impl VerifyMode {
    pub const ALL: [VerifyMode; 7] = [
        VerifyMode::Main1,
        VerifyMode::Induct,
        VerifyMode::Swap,
        VerifyMode::Mull,
        VerifyMode::Gap,
        VerifyMode::Jantzen,
        VerifyMode::Orders,
    ];

    pub fn name(self) -> &'static str {
        match self {
            VerifyMode::Main1 => "main1",
            VerifyMode::Induct => "induct",
            VerifyMode::Swap => "swap",
            VerifyMode::Mull => "mull",
            VerifyMode::Gap => "gap",
            VerifyMode::Jantzen => "jantzen",
            VerifyMode::Orders => "orders",
        }
    }
}

impl fmt::Display for VerifyMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for VerifyMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        VerifyMode::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parameter(format!("unknown verification mode {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyParams {
    pub e: usize,
    /// Explicit cores; `None` takes every `e`-core of size at most `max_core`.
    pub cores: Option<Vec<Partition>>,
    pub max_core: usize,
    /// Bound on the size of the partitions checked.
    pub max_n: usize,
    pub max_weight: usize,
    /// Size bound for checks that need canonical basis columns (`mull` only).
    pub oracle_n: Option<usize>,
    pub jobs: usize,
}

impl VerifyParams {
    pub fn new(e: usize) -> Self {
        VerifyParams {
            e,
            cores: None,
            max_core: 5,
            max_n: 10,
            max_weight: usize::MAX,
            oracle_n: None,
            jobs: std::thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }

    fn core_list(&self) -> Result<Vec<Partition>> {
        match &self.cores {
            Some(cores) => {
                for k in cores {
                    core_profile(k, self.e, None)?;
                }
                Ok(cores.clone())
            }
            None => Ok(e_cores_up_to(self.e, self.max_core)),
        }
    }

    /// `(core, weight)` pairs inside the bounds.
    fn blocks(&self) -> Result<Vec<(Partition, usize)>> {
        let mut out = Vec::new();
        for core in self.core_list()? {
            let mut w = 0;
            while w <= self.max_weight && core.size() + self.e * w <= self.max_n {
                out.push((core.clone(), w));
                w += 1;
            }
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub identity: String,
    pub instance: String,
    pub lambda: Option<Partition>,
    pub expected: String,
    pub found: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
struct Outcome {
    checks: usize,
    failures: Vec<Failure>,
    internal: Vec<String>,
}

impl Outcome {
    fn check(&mut self, ok: bool, failure: impl FnOnce() -> Failure) {
        self.checks += 1;
        if !ok {
            self.failures.push(failure());
        }
    }

    fn fail(&mut self, identity: &str, instance: String, lambda: Option<Partition>, expected: String, found: String) {
        self.checks += 1;
        self.failures.push(Failure { identity: identity.into(), instance, lambda, expected, found });
    }

    fn internal(err: Error, instance: &str) -> Self {
        Outcome { internal: vec![format!("{instance}: {err}")], ..Outcome::default() }
    }

    fn merge(&mut self, other: Outcome) {
        self.checks += other.checks;
        self.failures.extend(other.failures);
        self.internal.extend(other.internal);
    }

    /// Compare two vectors coefficient by coefficient, recording the first
    /// difference.
    fn vectors(&mut self, identity: &str, instance: &str, expected: &FockVector, found: &FockVector) {
        self.checks += expected.len().max(found.len()).max(1);
        if let Some((lam, a, b)) = expected.first_difference(found) {
            self.failures.push(Failure {
                identity: identity.into(),
                instance: instance.into(),
                lambda: Some(lam),
                expected: a.to_string(),
                found: b.to_string(),
            });
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub mode: VerifyMode,
    pub e: usize,
    pub instances: usize,
    pub checks: usize,
    pub skipped: usize,
    pub failures: Vec<Failure>,
    pub internal_errors: Vec<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.internal_errors.is_empty()
    }

    pub fn first_failure(&self) -> Option<&Failure> {
        self.failures.first()
    }

    pub fn summary(&self) -> String {
        let status = if self.passed() { "pass" } else { "FAIL" };
        format!(
            "{} e={}: {status} ({} instances, {} checks, {} skipped, {} failures, {} internal errors)",
            self.mode,
            self.e,
            self.instances,
            self.checks,
            self.skipped,
            self.failures.len(),
            self.internal_errors.len()
        )
    }
}

/// Run one family of identity checks.
pub fn verify_suite(mode: VerifyMode, params: &VerifyParams) -> Result<VerifyReport> {
    if params.e < 2 {
        return Err(Error::Parameter(format!("e must be at least 2, got {}", params.e)));
    }
    if params.jobs == 0 {
        return Err(Error::Parameter("jobs must be at least 1".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(params.jobs)
        .build()
        .map_err(|err| Error::Parameter(format!("cannot start {} workers: {err}", params.jobs)))?;
    let (instances, skipped, outcome) = pool.install(|| match mode {
        VerifyMode::Main1 => main1(params),
        VerifyMode::Induct => induct(params),
        VerifyMode::Swap => swap(params),
        VerifyMode::Mull => mull(params),
        VerifyMode::Gap => gap(params),
        VerifyMode::Jantzen => jantzen_mode(params),
        VerifyMode::Orders => orders(params),
    })?;
    log::info!("{mode} e={}: {instances} instances, {} checks", params.e, outcome.checks);
    Ok(VerifyReport {
        mode,
        e: params.e,
        instances,
        checks: outcome.checks,
        skipped,
        failures: outcome.failures,
        internal_errors: outcome.internal,
    })
}

type ModeResult = Result<(usize, usize, Outcome)>;

fn pstar_members(core: &Partition, e: usize, w: usize) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    for mu in block_partitions(core, e, w)? {
        if pstar_contains(core, e, &mu)?.member {
            out.push(mu);
        }
    }
    Ok(out)
}

fn members_of_blocks(
    params: &VerifyParams,
    keep_core: impl Fn(&CoreProfile) -> bool,
) -> Result<(Vec<Partition>, usize)> {
    let mut out = Vec::new();
    let mut skipped = 0;
    for (core, w) in params.blocks()? {
        let members = pstar_members(&core, params.e, w)?;
        if keep_core(&core_profile(&core, params.e, None)?) {
            out.extend(members);
        } else {
            skipped += members.len();
        }
    }
    Ok((out, skipped))
}

fn gather(outcomes: Vec<Outcome>) -> Outcome {
    let mut total = Outcome::default();
    for o in outcomes {
        total.merge(o);
    }
    total
}

fn main1(params: &VerifyParams) -> ModeResult {
    let e = params.e;
    let (all, _) = members_of_blocks(params, |_| true)?;
    let regular: Vec<Partition> = all.into_iter().filter(|mu| mu.is_e_regular(e)).collect();
    let outcomes: Vec<Outcome> = regular
        .par_iter()
        .map_init(
            || LltEngine::new(e),
            |engine, mu| {
                let instance = format!("mu={mu}");
                match engine.column(mu) {
                    Ok(g) => {
                        let mut o = Outcome::default();
                        o.vectors("G(mu) = H(mu)", &instance, &h_vector(mu, e).vector, &g.vector);
                        o
                    }
                    Err(err) => Outcome::internal(err, &instance),
                }
            },
        )
        .collect();
    Ok((regular.len(), 0, gather(outcomes)))
}

fn with_component(cq: &CoreQuotient, j: usize, part: Partition) -> Result<Partition> {
    let mut q = cq.clone();
    q.quotient[j] = part;
    from_core_and_quotient(&q)
}

/// Bead-gap hypotheses for `F_{a,k}` on the standard display of `λ`.
fn messy_hypotheses(lambda: &Partition, e: usize, a: usize, k: usize) -> std::result::Result<(), String> {
    let (d, _) = standard_display(lambda, e, None);
    let x = |r: usize| d.least_vacant(r) as i64;
    let y = |r: usize| d.largest_occupied(r).map_or(-1, |p| p as i64);
    let e_i = e as i64;
    if let Some(u) = (0..a.saturating_sub(1)).map(y).max() {
        if x(a - 1) - u <= e_i {
            return Err(format!("hypothesis (i): x_{} = {} but occupied {u}", a - 1, x(a - 1)));
        }
    }
    if let Some(t) = (a + 1..e).map(x).min() {
        if t - y(a) <= e_i {
            return Err(format!("hypothesis (ii): y_{a} = {} but vacant {t}", y(a)));
        }
    }
    if k < 1 || (k as i64) * e_i > x(a) - y(a - 1) - 1 {
        return Err(format!("k = {k} outside 1..=(x_a - y_(a-1) - 1)/e with x_a = {}, y_(a-1) = {}", x(a), y(a - 1)));
    }
    Ok(())
}

/// `Σ_j v^j Σ c^α_{λ^{a-1}(j)} c^β_{λ^a(1^{k-j})} λ(α,β)`.
fn messy_formula(lambda: &Partition, e: usize, a: usize, k: usize) -> Result<FockVector> {
    let cq = core_and_quotient(lambda, e, None);
    let mut out = FockVector::zero();
    for j in 0..=k {
        for (alpha, c1) in lr_product(&cq.quotient[a - 1], &Partition::row(j)) {
            for (beta, c2) in lr_product(&cq.quotient[a], &Partition::column(k - j)) {
                let mut q = cq.clone();
                q.quotient[a - 1] = alpha.clone();
                q.quotient[a] = beta;
                out.add_term(from_core_and_quotient(&q)?, &Laurent::monomial(j as i64, c1 * c2));
            }
        }
    }
    Ok(out)
}

fn induct_instance(mu: &Partition, e: usize, a: usize) -> Result<Outcome> {
    let mut o = Outcome::default();
    let cq = core_and_quotient(mu, e, None);
    let instance = format!("mu={mu} a={a}");
    let tau_a = cq.quotient[a].remove_first_column();
    let k = cq.quotient[a].len();
    let tau = with_component(&cq, a, tau_a.clone())?;
    let h_tau = h_vector(&tau, e);
    for lambda in h_tau.vector.support() {
        if let Err(msg) = messy_hypotheses(lambda, e, a, k) {
            o.fail("hypotheses of F_{a,k}", instance.clone(), Some(lambda.clone()), "hold".into(), msg);
            continue;
        }
        o.checks += 1;
        let lhs = f_operator(&FockVector::basis(lambda.clone()), cq.core.len(), a, k, e)?;
        o.vectors("F_{a,k}(lambda) expansion", &format!("{instance} lambda={lambda}"), &messy_formula(lambda, e, a, k)?, &lhs);
    }
    let lhs = f_operator(&h_tau.vector, cq.core.len(), a, k, e)?;
    let mut rhs = FockVector::zero();
    for (eta, c) in lr_product(&tau_a, &Partition::column(k)) {
        let tau_eta = with_component(&cq, a, eta)?;
        o.check(pstar_contains(&cq.core, e, &tau_eta)?.member, || Failure {
            identity: "tau_eta in P*".into(),
            instance: instance.clone(),
            lambda: Some(tau_eta.clone()),
            expected: "member".into(),
            found: "not a member".into(),
        });
        rhs.add_scaled(&h_vector(&tau_eta, e).vector, &Laurent::monomial(0, c));
    }
    o.vectors("F_{a,k} H(tau) = sum c H(tau_eta)", &instance, &rhs, &lhs);
    let c = lr_coefficient(&cq.quotient[a], &tau_a, &Partition::column(k));
    o.check(c == 1, || Failure {
        identity: "H(mu) occurs once".into(),
        instance: instance.clone(),
        lambda: None,
        expected: "1".into(),
        found: c.to_string(),
    });
    Ok(o)
}

fn induct(params: &VerifyParams) -> ModeResult {
    let e = params.e;
    let (members, skipped) = members_of_blocks(params, CoreProfile::is_rouquier)?;
    let jobs: Vec<(Partition, usize)> = members
        .iter()
        .flat_map(|mu| {
            let cq = core_and_quotient(mu, e, None);
            (1..e).filter(move |&a| !cq.quotient[a].is_empty()).map(move |a| (mu.clone(), a))
        })
        .collect();
    let outcomes: Vec<Outcome> = jobs
        .par_iter()
        .map(|(mu, a)| {
            induct_instance(mu, e, *a).unwrap_or_else(|err| Outcome::internal(err, &format!("mu={mu} a={a}")))
        })
        .collect();
    Ok((jobs.len(), skipped, gather(outcomes)))
}

fn swap_instance(mu: &Partition, e: usize) -> Result<Outcome> {
    let mut o = Outcome::default();
    let core = core_and_quotient(mu, e, None).core;
    let reduction = rouquier_reduction(&core, e)?;
    let mut current = mu.clone();
    for step in &reduction.steps {
        let image = swap_runners_of(&current, e, step.i);
        let instance = format!("mu={current} core={} i={} r={} k={}", step.core, step.i, step.r, step.k);
        let member = pstar_contains(&step.swapped, e, &image).map(|r| r.member).unwrap_or(false);
        o.check(member, || Failure {
            identity: "Psi(mu) in P*".into(),
            instance: instance.clone(),
            lambda: Some(image.clone()),
            expected: "member".into(),
            found: "not a member".into(),
        });
        let h_mu = h_vector(&current, e).vector;
        let h_image = h_vector(&image, e).vector;
        let up = divided_power(&h_mu, Generator::F, step.r, step.k, e)?;
        o.vectors("f_r^(k) H(mu) = H(Psi(mu))", &instance, &h_image, &up);
        let down = divided_power(&h_image, Generator::E, step.r, step.k, e)?;
        o.vectors("e_r^(k) H(Psi(mu)) = H(mu)", &instance, &h_mu, &down);
        current = image;
    }
    Ok(o)
}

fn swap(params: &VerifyParams) -> ModeResult {
    let e = params.e;
    let (members, skipped) = members_of_blocks(params, |p| !p.is_rouquier())?;
    let outcomes: Vec<Outcome> = members
        .par_iter()
        .map(|mu| swap_instance(mu, e).unwrap_or_else(|err| Outcome::internal(err, &format!("mu={mu}"))))
        .collect();
    Ok((members.len(), skipped, gather(outcomes)))
}

/// Involution, the degree characterisation of `μ*'`, and the column identity
/// `d_{λ'μ*}(v) = v^w d_{λμ}(v^{-1})`.
fn mull_regular(mu: &Partition, e: usize, oracle: bool, engine: &mut LltEngine) -> Result<Outcome> {
    let mut o = Outcome::default();
    let instance = format!("mu={mu}");
    let star = mullineux(mu, e)?;
    let back = mullineux(&star, e)?;
    o.check(&back == mu, || Failure {
        identity: "mu** = mu".into(),
        instance: instance.clone(),
        lambda: None,
        expected: mu.to_string(),
        found: back.to_string(),
    });
    if !oracle {
        return Ok(o);
    }
    let w = core_and_quotient(mu, e, None).weight() as i64;
    let g = engine.column(mu)?.vector;
    let top: Vec<&Partition> = g.iter().filter(|(_, c)| c.degree() == Some(w)).map(|(l, _)| l).collect();
    let target = star.conjugate();
    let ok = top == [&target] && g.coeff(&target) == Laurent::monomial(w, 1);
    o.check(ok, || Failure {
        identity: "degree-w coefficient locates mu*'".into(),
        instance: instance.clone(),
        lambda: Some(target.clone()),
        expected: format!("v^{w} at {target} only"),
        found: format!("degree {w} at {:?}", top.iter().map(|p| p.to_string()).collect::<Vec<_>>()),
    });
    let g_star = engine.column(&star)?.vector;
    let mut expected = FockVector::zero();
    for (lam, c) in g.iter() {
        expected.add_term(lam.conjugate(), &c.bar().shift(w));
    }
    o.vectors("d_{lambda' mu*}(v) = v^w d_{lambda mu}(1/v)", &instance, &expected, &g_star);
    Ok(o)
}

/// The image of `μ ∈ P*_κ` under the Mullineux map, as predicted from the quotient.
fn predicted_image(cq: &CoreQuotient, profile: &CoreProfile) -> Result<Partition> {
    let e = cq.e;
    let mut quotient = vec![Partition::empty()];
    for i in 1..e {
        quotient.push(profile.succ(profile.phi(i)).map_or_else(Partition::empty, |s| cq.quotient[s].clone()));
    }
    from_core_and_quotient(&CoreQuotient { core: cq.core.conjugate(), quotient, e, n: cq.n })
}

fn mull_pstar(mu: &Partition, e: usize) -> Result<Outcome> {
    let mut o = Outcome::default();
    let instance = format!("mu={mu}");
    let cq = core_and_quotient(mu, e, None);
    let regular = mu.is_e_regular(e);
    o.check(regular == cq.quotient[0].is_empty(), || Failure {
        identity: "e-regular iff mu^0 empty".into(),
        instance: instance.clone(),
        lambda: None,
        expected: format!("regular = {}", cq.quotient[0].is_empty()),
        found: format!("regular = {regular}"),
    });
    if !regular {
        return Ok(o);
    }
    let profile = core_profile(&cq.core, e, Some(cq.n))?;
    let star = mullineux(mu, e)?;
    let predicted = predicted_image(&cq, &profile)?;
    o.check(star == predicted, || Failure {
        identity: "quotient of mu*".into(),
        instance: instance.clone(),
        lambda: None,
        expected: predicted.to_string(),
        found: star.to_string(),
    });
    let conj_core = cq.core.conjugate();
    let member = pstar_contains(&conj_core, e, &star).map(|r| r.member).unwrap_or(false);
    o.check(member, || Failure {
        identity: "mu* in P*_{kappa'}".into(),
        instance: instance.clone(),
        lambda: Some(star.clone()),
        expected: "member".into(),
        found: "not a member".into(),
    });
    let w = cq.weight() as i64;
    for term in h_vector(mu, e).terms {
        let lc = term.lambda.conjugate();
        let (c, d) = (c_coeff(&lc, &star, e), delta(&lc, &star, e));
        o.check(c == term.coefficient && d == w - term.exponent, || Failure {
            identity: "C_{lambda' mu*} = C_{lambda mu}, delta(lambda', mu*) = w - delta".into(),
            instance: instance.clone(),
            lambda: Some(term.lambda.clone()),
            expected: format!("C = {}, delta = {}", term.coefficient, w - term.exponent),
            found: format!("C = {c}, delta = {d}"),
        });
    }
    Ok(o)
}

fn mull(params: &VerifyParams) -> ModeResult {
    let e = params.e;
    let oracle_n = params.oracle_n.unwrap_or(params.max_n);
    let regular: Vec<Partition> =
        (0..=params.max_n).flat_map(|n| e_regular_partitions(n, e)).collect();
    let mut outcomes: Vec<Outcome> = regular
        .par_iter()
        .map_init(
            || LltEngine::new(e),
            |engine, mu| {
                mull_regular(mu, e, mu.size() <= oracle_n, engine)
                    .unwrap_or_else(|err| Outcome::internal(err, &format!("mu={mu}")))
            },
        )
        .collect();
    let (members, _) = members_of_blocks(params, |_| true)?;
    outcomes.extend(
        members
            .par_iter()
            .map(|mu| mull_pstar(mu, e).unwrap_or_else(|err| Outcome::internal(err, &format!("mu={mu}"))))
            .collect::<Vec<_>>(),
    );
    Ok((regular.len() + members.len(), 0, gather(outcomes)))
}

/// Bead separation in every `λ` of the closed formula.
fn gap_instance(mu: &Partition, e: usize, in_pstar: bool) -> Result<Outcome> {
    let mut o = Outcome::default();
    let instance = format!("mu={mu}");
    let mq = core_and_quotient(mu, e, None);
    let profile = core_profile(&mq.core, e, Some(mq.n))?;
    let size = |r: Option<usize>| r.map_or(0i64, |r| mq.quotient[r].size() as i64);
    let h = h_vector(mu, e);
    for term in &h.terms {
        let lam = &term.lambda;
        o.check(term.exponent >= 0 && (term.exponent == 0) == (lam == mu), || Failure {
            identity: "delta >= 0, zero only at mu".into(),
            instance: instance.clone(),
            lambda: Some(lam.clone()),
            expected: "delta > 0 off the diagonal".into(),
            found: term.exponent.to_string(),
        });
        let (d, _) = standard_display(lam, e, Some(mq.n));
        for i in 0..e {
            for j in 0..e {
                if !profile.precedes(i, j) {
                    continue;
                }
                let x = d.least_vacant(j) as i64;
                let y = d.largest_occupied(i).map_or(-1, |p| p as i64);
                if in_pstar {
                    o.check(y < x, || Failure {
                        identity: "runner separation in P*".into(),
                        instance: instance.clone(),
                        lambda: Some(lam.clone()),
                        expected: format!("occupied on {i} below vacant on {j}"),
                        found: format!("largest occupied {y}, least vacant {x}"),
                    });
                }
                let bound = if profile.succ(i) == Some(j) {
                    profile.d(j).map_or(0, |dj| dj as i64) + 1
                        - size(profile.pred(j))
                        - size(Some(j))
                        - size(profile.succ(j))
                } else {
                    let gaps: i64 = (0..e)
                        .filter(|&r| profile.precedes(i, r) && profile.precedes_eq(r, j))
                        .map(|r| profile.d(r).map_or(0, |dr| dr as i64))
                        .sum();
                    gaps + 1 - size(Some(i)) - size(profile.succ(i)) - size(Some(j)) - size(profile.succ(j))
                };
                o.check(x - y > bound * e as i64, || Failure {
                    identity: "bead gap inequality".into(),
                    instance: instance.clone(),
                    lambda: Some(lam.clone()),
                    expected: format!("x - y > {} for runners {i} < {j}", bound * e as i64),
                    found: format!("x - y = {}", x - y),
                });
            }
        }
    }
    Ok(o)
}

fn gap(params: &VerifyParams) -> ModeResult {
    let e = params.e;
    let mut jobs = Vec::new();
    for (core, w) in params.blocks()? {
        for mu in block_partitions(&core, e, w)? {
            let member = pstar_contains(&core, e, &mu)?.member;
            jobs.push((mu, member));
        }
    }
    let outcomes: Vec<Outcome> = jobs
        .par_iter()
        .map(|(mu, member)| {
            gap_instance(mu, e, *member).unwrap_or_else(|err| Outcome::internal(err, &format!("mu={mu}")))
        })
        .collect();
    Ok((jobs.len(), 0, gather(outcomes)))
}

fn at_one(g: &FockVector) -> std::collections::BTreeMap<Partition, BigInt> {
    g.at_one()
}

fn jantzen_block(core: &Partition, w: usize, e: usize, engine: &mut LltEngine) -> Result<Outcome> {
    let mut o = Outcome::default();
    let block = block_partitions(core, e, w)?;
    for mu in block.iter().filter(|p| p.is_e_regular(e)) {
        let g = engine.column(mu)?.vector;
        let column = jantzen::block_column(mu, e, &at_one(&g));
        for lam in block.iter().filter(|l| *l != mu) {
            let j = jantzen::jantzen_sum(lam, mu, e, 0, &column)?;
            let d = column[lam].clone();
            let zero = BigInt::from(0);
            o.check(d <= j && ((d == zero) == (j == zero)), || Failure {
                identity: "d <= J and (d = 0 iff J = 0)".into(),
                instance: format!("mu={mu}"),
                lambda: Some(lam.clone()),
                expected: format!("J = {j}"),
                found: format!("d = {d}"),
            });
        }
    }
    Ok(o)
}

fn jantzen_mode(params: &VerifyParams) -> ModeResult {
    let e = params.e;
    let blocks = params.blocks()?;
    let outcomes: Vec<Outcome> = blocks
        .par_iter()
        .map_init(
            || LltEngine::new(e),
            |engine, (core, w)| {
                jantzen_block(core, *w, e, engine)
                    .unwrap_or_else(|err| Outcome::internal(err, &format!("core={core} w={w}")))
            },
        )
        .collect();
    Ok((blocks.len(), 0, gather(outcomes)))
}

fn lemma_failures(o: &mut Outcome, instance: &str, failures: Vec<lemmas::LemmaFailure>) {
    o.checks += 1;
    for f in failures {
        o.failures.push(Failure {
            identity: f.lemma.into(),
            instance: instance.into(),
            lambda: None,
            expected: "holds".into(),
            found: f.detail,
        });
    }
}

fn orders_block(core: &Partition, w: usize, e: usize, engine: &mut LltEngine) -> Result<Outcome> {
    let mut o = Outcome::default();
    let instance = format!("core={core} w={w}");
    let block = block_partitions(core, e, w)?;
    let t = core.len() + (w + 1) * e;
    for lam in &block {
        lemma_failures(&mut o, &instance, lemmas::sequence_properties(lam, e, t)?);
    }
    lemma_failures(&mut o, &instance, lemmas::order_implications(&block, e));
    if !core_profile(core, e, None)?.is_rouquier() {
        return Ok(o);
    }
    let members = pstar_members(core, e, w)?;
    for lam in &members {
        lemma_failures(&mut o, &instance, lemmas::sign_cancellation(lam, e));
        for mu in members.iter().filter(|mu| jantzen::approx_equiv(lam, mu, e)) {
            lemma_failures(&mut o, &instance, lemmas::arrows_leave_p_interval(lam, mu, e));
            if lam == mu || !mu.is_e_regular(e) {
                continue;
            }
            let g = engine.column(mu)?.vector;
            let column = jantzen::block_column(mu, e, &at_one(&g));
            let j = jantzen::jantzen_sum(lam, mu, e, 0, &column)?;
            let d = column[lam].clone();
            let zero = BigInt::from(0);
            o.check(j == zero && d == zero, || Failure {
                identity: "equivalent pairs: J = 0 and d = 0".into(),
                instance: format!("mu={mu}"),
                lambda: Some(lam.clone()),
                expected: "J = 0, d = 0".into(),
                found: format!("J = {j}, d = {d}"),
            });
        }
    }
    Ok(o)
}

fn orders(params: &VerifyParams) -> ModeResult {
    let e = params.e;
    let blocks = params.blocks()?;
    let outcomes: Vec<Outcome> = blocks
        .par_iter()
        .map_init(
            || LltEngine::new(e),
            |engine, (core, w)| {
                orders_block(core, *w, e, engine)
                    .unwrap_or_else(|err| Outcome::internal(err, &format!("core={core} w={w}")))
            },
        )
        .collect();
    Ok((blocks.len(), 0, gather(outcomes)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition_core::pt;

    fn small(e: usize) -> VerifyParams {
        VerifyParams { max_core: 3, max_n: 8, max_weight: 2, jobs: 2, ..VerifyParams::new(e) }
    }

    #[test]
    fn mode_names_round_trip() {
        for m in VerifyMode::ALL {
            assert_eq!(m.name().parse::<VerifyMode>().unwrap(), m);
        }
        assert!("nope".parse::<VerifyMode>().is_err());
    }

    #[test]
    fn every_mode_passes_small() {
        for mode in VerifyMode::ALL {
            for e in 2..=3 {
                let r = verify_suite(mode, &small(e)).unwrap();
                assert!(r.passed(), "{}: {:?} {:?}", r.summary(), r.first_failure(), r.internal_errors);
            }
        }
    }

    #[test]
    fn main1_e2_up_to_8() {
        let params = VerifyParams { cores: Some(vec![Partition::empty()]), max_n: 8, ..VerifyParams::new(2) };
        let r = verify_suite(VerifyMode::Main1, &params).unwrap();
        assert!(r.passed() && r.instances > 0, "{}", r.summary());
    }

    #[test]
    fn swap_on_single_inversion() {
        let params = VerifyParams { cores: Some(vec![pt("1")]), max_n: 7, ..VerifyParams::new(3) };
        let r = verify_suite(VerifyMode::Swap, &params).unwrap();
        assert!(r.passed() && r.instances > 0, "{} {:?}", r.summary(), r.first_failure());
    }

    #[test]
    fn bad_parameters() {
        assert!(verify_suite(VerifyMode::Main1, &VerifyParams::new(1)).is_err());
        let p = VerifyParams { jobs: 0, ..VerifyParams::new(2) };
        assert!(verify_suite(VerifyMode::Main1, &p).is_err());
        let p = VerifyParams { cores: Some(vec![pt("2")]), ..VerifyParams::new(2) };
        assert!(verify_suite(VerifyMode::Main1, &p).is_err());
    }
}
