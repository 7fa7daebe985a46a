use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::numerics::Rational;

/// Eventually periodic base-`base` expansion `0.p_1..p_s (c_1..c_m)` of a
/// number in `[0, 1]`. An empty period means the expansion terminates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExpansionRecord {
    pub base: u32,
    pub preperiod: Vec<u32>,
    pub period: Vec<u32>,
}

impl ExpansionRecord {
    /// Builds a record and reduces it to minimal preperiod and period.
    pub fn new(base: u32, preperiod: Vec<u32>, period: Vec<u32>) -> Result<Self> {
        if base < 2 {
            return Err(Error::InvalidBase(base));
        }
        if preperiod.iter().chain(&period).any(|&d| d >= base) {
            return Err(Error::InvalidArgument("digit out of range for base"));
        }
        let mut rec = ExpansionRecord { base, preperiod, period };
        rec.canonicalize();
        Ok(rec)
    }

    pub fn is_terminating(&self) -> bool {
        self.period.is_empty()
    }

    /// The other expansion of a nonzero terminating value: decrement the
    /// last digit and append an all-`(base - 1)` tail.
    pub fn alternative(&self) -> Option<ExpansionRecord> {
        if !self.is_terminating() || self.preperiod.is_empty() {
            return None;
        }
        let mut pre = self.preperiod.clone();
        // Minimal terminating expansions end in a nonzero digit.
        *pre.last_mut()? -= 1;
        let mut rec = ExpansionRecord { base: self.base, preperiod: pre, period: alloc::vec![self.base - 1] };
        rec.canonicalize();
        Some(rec)
    }

    /// Digit `k` (1-based) of the expansion.
    pub fn digit(&self, k: usize) -> u32 {
        assert!(k >= 1, "digits are numbered from 1");
        let i = k - 1;
        if i < self.preperiod.len() {
            self.preperiod[i]
        } else if self.period.is_empty() {
            0
        } else {
            self.period[(i - self.preperiod.len()) % self.period.len()]
        }
    }

    /// The exact value `(P + C / (b^m - 1)) / b^s`.
    pub fn to_rational(&self) -> Rational {
        let base = BigUint::from(self.base);
        let fold = |digits: &[u32]| {
            digits.iter().fold(BigUint::zero(), |acc, &d| acc * &base + BigUint::from(d))
        };
        let scale = base.pow(self.preperiod.len() as u32);
        let head = Rational::from_bigints(BigInt::from(fold(&self.preperiod)), BigInt::from(scale.clone()));
        if self.period.is_empty() {
            return head;
        }
        let cycle_den = base.pow(self.period.len() as u32) - BigUint::one();
        let tail = Rational::from_bigints(BigInt::from(fold(&self.period)), BigInt::from(cycle_den * scale));
        head + tail
    }

    /// Minimal period and preperiod; a `0` cycle becomes a terminating form.
    pub(crate) fn canonicalize(&mut self) {
        let len = self.period.len();
        if let Some(p) = (1..=len).find(|&p| len.is_multiple_of(p) && (p..len).all(|i| self.period[i] == self.period[i - p])) {
            self.period.truncate(p);
        }
        while let (Some(&last), Some(&tail)) = (self.preperiod.last(), self.period.last()) {
            if last != tail {
                break;
            }
            self.preperiod.pop();
            self.period.rotate_right(1);
        }
        if self.period == [0] {
            self.period.clear();
        }
        if self.period.is_empty() {
            while self.preperiod.last() == Some(&0) {
                self.preperiod.pop();
            }
        }
    }
}

/// Greedy base-`base` expansion of `x` by long division, stopping at the
/// first repeated remainder. `1` is reported as `0.(base-1)(base-1)...`.
pub fn base_expansion(x: &Rational, base: u32) -> Result<ExpansionRecord> {
    if base < 2 {
        return Err(Error::InvalidBase(base));
    }
    if !x.in_unit_interval() {
        return Err(Error::OutsideUnitInterval);
    }
    if *x == Rational::one() {
        return Ok(ExpansionRecord { base, preperiod: Vec::new(), period: alloc::vec![base - 1] });
    }
    let q = x.denom().magnitude();
    let mut r = x.numer().magnitude().clone();
    let mut seen: BTreeMap<BigUint, usize> = BTreeMap::new();
    let mut digits = Vec::new();
    while !r.is_zero() {
        if let Some(&start) = seen.get(&r) {
            let period = digits.split_off(start);
            return Ok(ExpansionRecord { base, preperiod: digits, period });
        }
        seen.insert(r.clone(), digits.len());
        let (d, rem) = (r * base).div_rem(q);
        digits.push(d.to_u32().expect("digit below base"));
        r = rem;
    }
    Ok(ExpansionRecord { base, preperiod: digits, period: Vec::new() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn rec(base: u32, pre: &[u32], per: &[u32]) -> ExpansionRecord {
        ExpansionRecord { base, preperiod: pre.to_vec(), period: per.to_vec() }
    }

    #[test]
    fn quarter_in_base_three() {
        assert_eq!(base_expansion(&Rational::new(1, 4), 3).unwrap(), rec(3, &[], &[0, 2]));
    }

    #[test]
    fn half_in_base_three() {
        assert_eq!(base_expansion(&Rational::new(1, 2), 3).unwrap(), rec(3, &[], &[1]));
    }

    #[test]
    fn zero_and_one() {
        assert_eq!(base_expansion(&Rational::zero(), 3).unwrap(), rec(3, &[], &[]));
        assert_eq!(base_expansion(&Rational::one(), 3).unwrap(), rec(3, &[], &[2]));
        assert_eq!(base_expansion(&Rational::zero(), 3).unwrap().alternative(), None);
        assert_eq!(base_expansion(&Rational::one(), 3).unwrap().alternative(), None);
    }

    #[test]
    fn preperiod_then_cycle() {
        // 1/6 = 0.1(6) in base 10
        assert_eq!(base_expansion(&Rational::new(1, 6), 10).unwrap(), rec(10, &[1], &[6]));
        // 7/12 = 0.58(3)
        assert_eq!(base_expansion(&Rational::new(7, 12), 10).unwrap(), rec(10, &[5, 8], &[3]));
    }

    #[test]
    fn terminating_has_alternative() {
        let third = base_expansion(&Rational::new(1, 3), 3).unwrap();
        assert_eq!(third, rec(3, &[1], &[]));
        assert_eq!(third.alternative(), Some(rec(3, &[0], &[2])));
        let alt = base_expansion(&Rational::new(2, 3), 3).unwrap().alternative().unwrap();
        assert_eq!(alt, rec(3, &[1], &[2]));
        assert_eq!(alt.to_rational(), Rational::new(2, 3));
    }

    #[test]
    fn errors() {
        assert_eq!(base_expansion(&Rational::new(3, 2), 3), Err(Error::OutsideUnitInterval));
        assert_eq!(base_expansion(&Rational::new(-1, 2), 3), Err(Error::OutsideUnitInterval));
        assert_eq!(base_expansion(&Rational::new(1, 2), 1), Err(Error::InvalidBase(1)));
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(ExpansionRecord::new(3, vec![2], vec![2]).unwrap(), rec(3, &[], &[2]));
        assert_eq!(ExpansionRecord::new(3, vec![0, 2], vec![0, 2, 0, 2]).unwrap(), rec(3, &[], &[0, 2]));
        assert_eq!(ExpansionRecord::new(3, vec![2, 0], vec![0]).unwrap(), rec(3, &[2], &[]));
        assert_eq!(ExpansionRecord::new(3, vec![1, 0, 2], vec![0, 2]).unwrap(), rec(3, &[1], &[0, 2]));
        assert!(ExpansionRecord::new(3, vec![3], vec![]).is_err());
    }

    #[test]
    fn digits_by_index() {
        let r = rec(10, &[5, 8], &[3]);
        assert_eq!((r.digit(1), r.digit(2), r.digit(3), r.digit(9)), (5, 8, 3, 3));
        assert_eq!(rec(3, &[1], &[]).digit(4), 0);
    }
}
