use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fock_space::{divided_power, FockVector, Generator, Laurent};
use crate::partition_core::{e_core, e_regular_partitions, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalColumn {
    pub mu: Partition,
    pub e: usize,
    pub vector: FockVector,
}

impl CanonicalColumn {
    pub fn coefficient(&self, lambda: &Partition) -> Laurent {
        self.vector.coeff(lambda)
    }
}

/// `d_{λμ}(v)`: the coefficient of `λ` in the column, zero when absent.
pub fn decomposition_column(col: &CanonicalColumn, lambda: &Partition) -> Laurent {
    col.coefficient(lambda)
}

/// Nodes of `μ` grouped by ladder `a + (e-1)b` (0-indexed row `a`, column `b`).
/// Ladder `L` consists of nodes of residue `-L mod e`.
pub fn ladder_sizes(mu: &Partition, e: usize) -> BTreeMap<usize, usize> {
    let mut out = BTreeMap::new();
    for (a, &len) in mu.parts().iter().enumerate() {
        for b in 0..len {
            *out.entry(a + (e - 1) * b).or_default() += 1;
        }
    }
    out
}

/// `A(μ)`: divided powers `f_{-L mod e}^{(k_L)}` applied to `∅` ladder by ladder.
pub fn ladder_monomial(mu: &Partition, e: usize) -> Result<FockVector> {
    let mut x = FockVector::basis(Partition::empty());
    for (ladder, k) in ladder_sizes(mu, e) {
        x = divided_power(&x, Generator::F, (e - ladder % e) % e, k, e)?;
    }
    Ok(x)
}

/// Memoised LLT columns for a fixed `e`.
#[derive(Debug, Default)]
pub struct LltEngine {
    e: usize,
    columns: HashMap<Partition, FockVector>,
}

impl LltEngine {
    pub fn new(e: usize) -> Self {
        LltEngine { e, columns: HashMap::new() }
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn with_columns(e: usize, cols: impl IntoIterator<Item = CanonicalColumn>) -> Self {
        let columns = cols.into_iter().filter(|c| c.e == e).map(|c| (c.mu, c.vector)).collect();
        LltEngine { e, columns }
    }

    pub fn cached(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&mut self, mu: &Partition) -> Result<CanonicalColumn> {
        Ok(CanonicalColumn { mu: mu.clone(), e: self.e, vector: self.vector(mu)?.clone() })
    }

    fn vector(&mut self, mu: &Partition) -> Result<&FockVector> {
        if self.e < 2 {
            return Err(Error::Parameter(format!("e must be at least 2, got {}", self.e)));
        }
        if !mu.is_e_regular(self.e) {
            return Err(Error::Domain(format!("{mu} is not {}-regular", self.e)));
        }
        if !self.columns.contains_key(mu) {
            let g = self.compute(mu)?;
            self.columns.insert(mu.clone(), g);
        }
        Ok(&self.columns[mu])
    }

    fn compute(&mut self, mu: &Partition) -> Result<FockVector> {
        let mut a = ladder_monomial(mu, self.e)?;
        if a.coeff(mu) != Laurent::one() {
            return Err(Error::Internal(format!("A({mu}) has coefficient {} at {mu}", a.coeff(mu))));
        }
        loop {
            let bad = a
                .iter()
                .rev()
                .find(|(nu, c)| *nu < mu && !c.in_v_z_v())
                .map(|(nu, c)| (nu.clone(), c.bar_symmetric_part()));
            let Some((nu, b)) = bad else { break };
            if !nu.is_e_regular(self.e) {
                return Err(Error::Internal(format!(
                    "elimination for {mu} reached {}-singular {nu}",
                    self.e
                )));
            }
            let g = self.vector(&nu)?.clone();
            a.add_scaled(&g, &-&b);
        }
        check_column(mu, self.e, &a)?;
        Ok(a)
    }
}

fn check_column(mu: &Partition, e: usize, g: &FockVector) -> Result<()> {
    let core = e_core(mu, e);
    for (lam, c) in g.iter() {
        let ok = if lam == mu {
            *c == Laurent::one()
        } else {
            c.in_v_z_v() && c.is_nonnegative() && mu.dominates(lam) && e_core(lam, e) == core
        };
        if !ok {
            return Err(Error::Internal(format!("G({mu}) has coefficient {c} at {lam}")));
        }
    }
    Ok(())
}

/// Columns `G(μ)` for every `e`-regular `μ ⊢ n`, increasing lexicographically.
pub fn llt_canonical(n: usize, e: usize) -> Result<Vec<CanonicalColumn>> {
    let mut engine = LltEngine::new(e);
    e_regular_partitions(n, e).iter().map(|mu| engine.column(mu)).collect()
}
