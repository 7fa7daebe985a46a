use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::expansion::ExpansionRecord;
use crate::error::{Error, Result};
use crate::generators::{digit_equivalent, step_for, FamilySpec, Step};
use crate::numerics::{ClosedInterval, Rational};

/// Base and kept digits of a family with a digit characterization.
fn digit_form(family: &FamilySpec) -> Result<(u32, Vec<u32>)> {
    family.validate()?;
    match family {
        FamilySpec::DigitSet { n, digits } => Ok((*n, digits.clone())),
        FamilySpec::Proportional { alpha } => match digit_equivalent(alpha) {
            Some(FamilySpec::DigitSet { n, digits }) => Ok((n, digits)),
            _ => Err(Error::NoDigitCharacterization),
        },
        _ => Err(Error::NoDigitCharacterization),
    }
}

/// An expansion of `x` that only uses the family's kept digits, if one exists.
///
/// Follows the digit automaton on the remainder `r` of `x = r/q`. Only a point
/// on an `n`-adic cell boundary has a choice (digit `j` then all zeros, or
/// `j - 1` then all `n - 1`); both tails are admissible because `0` and `n - 1`
/// are always kept, so the walk never branches further.
pub fn limit_witness(x: &Rational, family: &FamilySpec) -> Result<Option<ExpansionRecord>> {
    let (n, digits) = digit_form(family)?;
    if !x.in_unit_interval() {
        return Err(Error::OutsideUnitInterval);
    }
    let kept = |d: u32| digits.binary_search(&d).is_ok();
    let q = x.denom().magnitude().clone();
    let mut r = x.numer().magnitude().clone();
    let mut seen: BTreeMap<BigUint, usize> = BTreeMap::new();
    let mut out: Vec<u32> = Vec::new();
    loop {
        if r.is_zero() {
            return Ok(Some(ExpansionRecord::new(n, out, Vec::new())?));
        }
        if r == q {
            return Ok(Some(ExpansionRecord::new(n, out, alloc::vec![n - 1])?));
        }
        if let Some(&start) = seen.get(&r) {
            let period = out.split_off(start);
            return Ok(Some(ExpansionRecord::new(n, out, period)?));
        }
        seen.insert(r.clone(), out.len());
        let (j, rem) = (&r * n).div_rem(&q);
        let j = j.to_u32().expect("digit below base");
        if rem.is_zero() {
            // Boundary point j/n of the current cell.
            if kept(j) {
                out.push(j);
                r = BigUint::zero();
            } else if kept(j - 1) {
                out.push(j - 1);
                r = q.clone();
            } else {
                return Ok(None);
            }
        } else if kept(j) {
            out.push(j);
            r = rem;
        } else {
            return Ok(None);
        }
    }
}

/// Whether `x` lies in the limit set of a digit family, i.e. has at least one
/// base-`n` expansion using only kept digits. Proportional families with an
/// integer digit equivalent are accepted too.
pub fn member_limit(x: &Rational, family: &FamilySpec) -> Result<bool> {
    Ok(limit_witness(x, family)?.is_some())
}

/// Whether `x` lies in stage `k`, found by following the single cell that
/// contains `x` down the refinement tree. Endpoints of cells are never
/// removed, so hitting one settles membership for every later stage.
pub fn member_at_depth(x: &Rational, family: &FamilySpec, k: u32) -> Result<bool> {
    family.validate()?;
    if !x.in_unit_interval() {
        return Err(Error::OutsideUnitInterval);
    }
    let mut cell = ClosedInterval::unit();
    let mut length = Rational::one();
    for stage in 1..=k {
        if x == cell.a() || x == cell.b() {
            return Ok(true);
        }
        let step = step_for(family, stage, &length)?;
        cell = match &step {
            Step::Hold => cell,
            Step::Halves { child } => {
                let left_end = cell.a() + child;
                let right_start = cell.b() - child;
                if *x <= left_end {
                    ClosedInterval::new_unchecked(cell.a().clone(), left_end)
                } else if *x >= right_start {
                    ClosedInterval::new_unchecked(right_start, cell.b().clone())
                } else {
                    return Ok(false);
                }
            }
            Step::Digits { h } => {
                let FamilySpec::DigitSet { digits, .. } = family else {
                    unreachable!("digit step for a non-digit family")
                };
                let kept = |d: u32| digits.binary_search(&d).is_ok();
                let t = (x - cell.a()) / h;
                let j = t.floor().to_u32().expect("index below base");
                if t.is_integer() {
                    // On the boundary between sub-cells j - 1 and j.
                    return Ok(kept(j) || kept(j - 1));
                }
                if !kept(j) {
                    return Ok(false);
                }
                let lo = cell.a() + h * Rational::from_integer(i64::from(j));
                let hi = &lo + h;
                ClosedInterval::new_unchecked(lo, hi)
            }
        };
        length = step.child_length(&length);
    }
    Ok(cell.contains(x))
}

/// The Cantor function on the middle-thirds set: halve the `{0, 2}` ternary
/// digits of `x` and read them in base 2.
pub fn cantor_function(x: &Rational) -> Result<Rational> {
    let ternary = FamilySpec::DigitSet { n: 3, digits: alloc::vec![0, 2] };
    let witness = limit_witness(x, &ternary)?.ok_or(Error::NotInSet)?;
    let halve = |ds: &[u32]| ds.iter().map(|d| d / 2).collect::<Vec<_>>();
    let binary = ExpansionRecord::new(2, halve(&witness.preperiod), halve(&witness.period))?;
    Ok(binary.to_rational())
}
