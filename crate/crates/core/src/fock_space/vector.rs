use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::laurent::Laurent;
use crate::error::{Error, Result};
use crate::partition_core::Partition;

/// A finite combination of partitions with Laurent-polynomial coefficients.
///
/// All partitions in the support have the same size; the empty vector has no
/// size of its own.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FockVector {
    entries: BTreeMap<Partition, Laurent>,
}

impl FockVector {
    pub fn zero() -> Self {
        FockVector::default()
    }

    pub fn basis(lambda: Partition) -> Self {
        let mut v = FockVector::zero();
        v.add_term(lambda, &Laurent::one());
        v
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Size of the partitions in the support.
    pub fn size(&self) -> Option<usize> {
        self.entries.keys().next().map(Partition::size)
    }

    pub fn max_length(&self) -> usize {
        self.entries.keys().map(Partition::len).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, lambda: Partition, c: &Laurent) {
        if c.is_zero() {
            return;
        }
        debug_assert!(
            self.size().is_none_or(|n| n == lambda.size()),
            "inhomogeneous Fock vector"
        );
        use std::collections::btree_map::Entry;
        match self.entries.entry(lambda) {
            Entry::Vacant(slot) => {
                slot.insert(c.clone());
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn coeff(&self, lambda: &Partition) -> Laurent {
        self.entries.get(lambda).cloned().unwrap_or_default()
    }

    pub fn get(&self, lambda: &Partition) -> Option<&Laurent> {
        self.entries.get(lambda)
    }

    /// Entries in increasing lexicographic order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Partition, &Laurent)> + '_ {
        self.entries.iter()
    }

    pub fn support(&self) -> impl DoubleEndedIterator<Item = &Partition> + '_ {
        self.entries.keys()
    }

    pub fn add_scaled(&mut self, other: &FockVector, c: &Laurent) {
        if c.is_zero() {
            return;
        }
        for (lam, p) in &other.entries {
            self.add_term(lam.clone(), &(p * c));
        }
    }

    pub fn add(&mut self, other: &FockVector) {
        self.add_scaled(other, &Laurent::one());
    }

    pub fn sub(&mut self, other: &FockVector) {
        self.add_scaled(other, &Laurent::from(-1));
    }

    pub fn scaled(&self, c: &Laurent) -> FockVector {
        let mut out = FockVector::zero();
        out.add_scaled(self, c);
        out
    }

    /// Coefficient-wise evaluation at `v = 1`, dropping zeros.
    pub fn at_one(&self) -> BTreeMap<Partition, BigInt> {
        self.entries
            .iter()
            .map(|(k, p)| (k.clone(), p.eval_at_one()))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    /// First partition (lexicographically largest) where `self` and `other` differ.
    pub fn first_difference(&self, other: &FockVector) -> Option<(Partition, Laurent, Laurent)> {
        let mut keys: Vec<&Partition> = self.entries.keys().chain(other.entries.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter().rev().find_map(|k| {
            let (a, b) = (self.coeff(k), other.coeff(k));
            (a != b).then(|| (k.clone(), a, b))
        })
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .entries
            .iter()
            .rev()
            .map(|(lam, p)| {
                let poly: Vec<Value> = p.terms().map(|(e, c)| json!([e, int_value(c)])).collect();
                json!({ "partition": lam.parts(), "poly": poly })
            })
            .collect();
        json!({ "n": self.size().unwrap_or(0), "entries": entries })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let wire: WireVector = serde_json::from_value(v.clone())?;
        let mut out = FockVector::zero();
        for entry in wire.entries {
            let lam = Partition::new(entry.partition)?;
            if lam.size() != wire.n {
                return Err(Error::Input(format!("partition {lam} is not of size {}", wire.n)));
            }
            let mut p = Laurent::zero();
            for (e, c) in entry.poly {
                p.add_term(e, parse_int(&c)?);
            }
            out.add_term(lam, &p);
        }
        Ok(out)
    }
}

impl Serialize for FockVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for FockVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        FockVector::from_json(&v).map_err(serde::de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct WireVector {
    n: usize,
    entries: Vec<WireEntry>,
}

#[derive(Serialize, Deserialize)]
struct WireEntry {
    partition: Vec<usize>,
    poly: Vec<(i64, Value)>,
}

/// Integers that fit in `i64` are written as JSON numbers, larger ones as strings.
pub(crate) fn int_value(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(x) => json!(x),
        None => json!(c.to_string()),
    }
}

pub(crate) fn parse_int(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| Error::Input(format!("non-integer coefficient {n}"))),
        Value::String(s) => s.parse().map_err(|_| Error::Input(format!("bad integer {s:?}"))),
        other => Err(Error::Input(format!("bad coefficient {other}"))),
    }
}

impl fmt::Display for FockVector {
    /// `(4) + v(3,1) + ...`, lexicographically largest partition first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (lam, p) in self.entries.iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if *p != Laurent::one() {
                write!(f, "({p})")?;
            }
            write!(f, "({lam})")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition_core::pt;

    #[test]
    fn cancellation_removes_entries() {
        let mut v = FockVector::basis(pt("2"));
        v.add_term(pt("1,1"), &Laurent::monomial(1, 1));
        v.add_term(pt("2"), &Laurent::from(-1));
        assert_eq!(v.len(), 1);
        assert_eq!(v.coeff(&pt("2")), Laurent::zero());
        assert_eq!(v.size(), Some(2));
    }

    #[test]
    fn json_roundtrip_and_order() {
        let mut v = FockVector::basis(pt("2"));
        v.add_term(pt("1,1"), &Laurent::from_terms([(1, 1), (-1, 2)]));
        let j = v.to_json();
        assert_eq!(j["n"], 2);
        assert_eq!(j["entries"][0]["partition"], json!([2]));
        assert_eq!(j["entries"][1]["poly"], json!([[-1, 2], [1, 1]]));
        assert_eq!(FockVector::from_json(&j).unwrap(), v);
        let big = FockVector::basis(pt("1")).scaled(&Laurent::monomial(0, BigInt::from(10).pow(30)));
        assert_eq!(FockVector::from_json(&big.to_json()).unwrap(), big);
    }

    #[test]
    fn rejects_mismatched_sizes() {
        let j = json!({"n": 3, "entries": [{"partition": [2], "poly": [[0, 1]]}]});
        assert!(FockVector::from_json(&j).is_err());
    }
}
