use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A Laurent polynomial in `v` with integer coefficients.
///
/// Zero coefficients are never stored, so equality is structural.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Laurent {
    terms: BTreeMap<i64, BigInt>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn one() -> Self {
        Laurent::monomial(0, 1)
    }

    /// `c · v^exp`.
    pub fn monomial(exp: i64, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Laurent { terms }
    }

    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut p = Laurent::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// `v ↦ v^{-1}`.
    pub fn bar(&self) -> Self {
        Laurent { terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect() }
    }

    pub fn is_bar_symmetric(&self) -> bool {
        *self == self.bar()
    }

    /// Multiplies by `v^k`.
    pub fn shift(&self, k: i64) -> Self {
        Laurent { terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Laurent::zero();
        }
        Laurent { terms: self.terms.iter().map(|(&e, x)| (e, x * c)).collect() }
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// All exponents are at least one.
    pub fn in_v_z_v(&self) -> bool {
        self.min_degree().is_none_or(|d| d >= 1)
    }

    /// All coefficients are nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Exact quotient `self / divisor`, or the remainder that blocks it.
    pub fn exact_divide(&self, divisor: &Laurent) -> Result<Laurent> {
        let (Some(dlead), Some(dlow)) = (divisor.degree(), divisor.min_degree()) else {
            return Err(Error::Parameter("division by the zero polynomial".into()));
        };
        let dwidth = dlead - dlow;
        let lead_coeff = &divisor.terms[&dlead];
        let mut rem = self.clone();
        let mut quotient = Laurent::zero();
        while let (Some(rlead), Some(rlow)) = (rem.degree(), rem.min_degree()) {
            if rlead - rlow < dwidth {
                break;
            }
            let c = &rem.terms[&rlead];
            if !(c % lead_coeff).is_zero() {
                break;
            }
            let q = Laurent::monomial(rlead - dlead, c / lead_coeff);
            rem -= &(&q * divisor);
            quotient += &q;
        }
        if rem.is_zero() {
            Ok(quotient)
        } else {
            Err(Error::NotDivisible { remainder: rem.to_string() })
        }
    }

    /// Symmetric quantum integer `[k] = (v^k - v^{-k}) / (v - v^{-1})`.
    pub fn quantum_integer(k: usize) -> Laurent {
        let k = k as i64;
        Laurent::from_terms((0..k).map(|j| (k - 1 - 2 * j, 1)))
    }

    /// `[k]! = [1][2]…[k]`.
    pub fn gauss_factorial(k: usize) -> Laurent {
        (1..=k).fold(Laurent::one(), |acc, i| &acc * &Laurent::quantum_integer(i))
    }

    /// The bar-symmetric `b` with `self - b ∈ vZ[v]`.
    pub fn bar_symmetric_part(&self) -> Laurent {
        let mut b = Laurent::zero();
        for (&e, c) in self.terms.range(..=0) {
            b.add_term(e, c.clone());
            if e < 0 {
                b.add_term(-e, c.clone());
            }
        }
        b
    }
}

impl From<i64> for Laurent {
    fn from(c: i64) -> Self {
        Laurent::monomial(0, c)
    }
}

impl AddAssign<&Laurent> for Laurent {
    fn add_assign(&mut self, rhs: &Laurent) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl SubAssign<&Laurent> for Laurent {
    fn sub_assign(&mut self, rhs: &Laurent) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, -c);
        }
    }
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent { terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect() }
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (&a, x) in &self.terms {
            for (&b, y) in &rhs.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl fmt::Display for Laurent {
    /// Descending powers, e.g. `v^2 + 3v - 1 + v^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = mag.is_one();
            match e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !unit {
                        write!(f, "{mag}")?;
                    }
                    if e == 1 {
                        f.write_str("v")?;
                    } else {
                        write!(f, "v^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(terms: &[(i64, i64)]) -> Laurent {
        Laurent::from_terms(terms.iter().copied())
    }

    #[test]
    fn bar_negates_exponents() {
        assert_eq!(poly(&[(2, 1), (1, 3)]).bar(), poly(&[(-2, 1), (-1, 3)]));
    }

    #[test]
    fn division() {
        let q = poly(&[(1, 1), (0, 2), (-1, 1)]).exact_divide(&poly(&[(0, 1), (-1, 1)])).unwrap();
        assert_eq!(q, poly(&[(0, 1), (1, 1)]));
        let err = poly(&[(1, 1), (0, 1)]).exact_divide(&poly(&[(1, 1), (0, -1)])).unwrap_err();
        assert!(matches!(err, Error::NotDivisible { ref remainder } if remainder == "2"));
        assert!(Laurent::one().exact_divide(&Laurent::zero()).is_err());
        assert_eq!(Laurent::zero().exact_divide(&poly(&[(3, 2)])).unwrap(), Laurent::zero());
    }

    #[test]
    fn gauss_factorials() {
        assert_eq!(Laurent::gauss_factorial(0), Laurent::one());
        assert_eq!(Laurent::gauss_factorial(1), Laurent::one());
        assert_eq!(Laurent::gauss_factorial(2), poly(&[(1, 1), (-1, 1)]));
        assert_eq!(Laurent::gauss_factorial(3), poly(&[(3, 1), (1, 2), (-1, 2), (-3, 1)]));
        assert_eq!(Laurent::gauss_factorial(4).eval_at_one(), BigInt::from(24));
    }

    #[test]
    fn bar_symmetric_part() {
        let c = poly(&[(-2, 3), (0, 1), (1, 5), (3, 1)]);
        let b = c.bar_symmetric_part();
        assert!(b.is_bar_symmetric());
        assert!((&c - &b).in_v_z_v());
        assert_eq!(b, poly(&[(-2, 3), (0, 1), (2, 3)]));
    }

    #[test]
    fn display() {
        assert_eq!(poly(&[(2, 1), (1, 3), (0, -1), (-1, 1)]).to_string(), "v^2 + 3v - 1 + v^-1");
        assert_eq!(poly(&[(1, -2)]).to_string(), "-2v");
        assert_eq!(Laurent::zero().to_string(), "0");
    }

    fn arb_poly() -> impl Strategy<Value = Laurent> {
        proptest::collection::vec((-4i64..5, -3i64..4), 0..5).prop_map(Laurent::from_terms)
    }

    proptest! {
        #[test]
        fn bar_is_ring_hom(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
            prop_assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
            prop_assert_eq!(a.bar().bar(), a.clone());
        }

        #[test]
        fn product_divides_back(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(prod.exact_divide(&b).unwrap(), a);
        }
    }
}
