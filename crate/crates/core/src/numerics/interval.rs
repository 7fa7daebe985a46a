use alloc::vec::Vec;
use core::cmp::Ordering;

use super::Rational;
use crate::error::{Error, Result};

/// Exact closed interval `[a, b]` with `a <= b`; `a == b` is a single point.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClosedInterval {
    a: Rational,
    b: Rational,
}

impl ClosedInterval {
    pub fn new(a: Rational, b: Rational) -> Result<Self> {
        if a > b {
            return Err(Error::InvertedInterval);
        }
        Ok(ClosedInterval { a, b })
    }

    /// Caller guarantees `a <= b`.
    pub(crate) fn new_unchecked(a: Rational, b: Rational) -> Self {
        debug_assert!(a <= b);
        ClosedInterval { a, b }
    }

    pub fn point(x: Rational) -> Self {
        ClosedInterval { a: x.clone(), b: x }
    }

    pub fn unit() -> Self {
        ClosedInterval { a: Rational::zero(), b: Rational::one() }
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn length(&self) -> Rational {
        &self.b - &self.a
    }

    pub fn midpoint(&self) -> Rational {
        (&self.a + &self.b) / Rational::from_integer(2)
    }

    pub fn is_degenerate(&self) -> bool {
        self.a == self.b
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.a <= x && x <= &self.b
    }

    pub fn contains_interval(&self, other: &ClosedInterval) -> bool {
        self.a <= other.a && other.b <= self.b
    }

    pub fn into_endpoints(self) -> (Rational, Rational) {
        (self.a, self.b)
    }
}

/// Exact open interval `(a, b)` with `a < b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OpenInterval {
    a: Rational,
    b: Rational,
}

impl OpenInterval {
    pub fn new(a: Rational, b: Rational) -> Result<Self> {
        if a >= b {
            return Err(Error::EmptyOpenInterval);
        }
        Ok(OpenInterval { a, b })
    }

    pub(crate) fn new_unchecked(a: Rational, b: Rational) -> Self {
        debug_assert!(a < b);
        OpenInterval { a, b }
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn length(&self) -> Rational {
        &self.b - &self.a
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.a < x && x < &self.b
    }

    /// True if the open interval shares no point with the closed one.
    pub fn is_disjoint_from(&self, other: &ClosedInterval) -> bool {
        other.b() <= &self.a || &self.b <= other.a()
    }
}

/// A finite union of closed intervals, kept sorted and pairwise disjoint:
/// for consecutive `I`, `J` we always have `I.b < J.a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntervalSet {
    intervals: Vec<ClosedInterval>,
}

impl IntervalSet {
    pub fn empty() -> Self {
        IntervalSet { intervals: Vec::new() }
    }

    pub fn unit() -> Self {
        IntervalSet { intervals: alloc::vec![ClosedInterval::unit()] }
    }

    /// Sorts the intervals and merges any that overlap or touch.
    pub fn normalize(mut intervals: Vec<ClosedInterval>) -> Self {
        let sorted = intervals.windows(2).all(|w| w[0].a <= w[1].a);
        if !sorted {
            intervals.sort_by(|x, y| x.a.cmp(&y.a).then_with(|| x.b.cmp(&y.b)));
        }
        let mut merged: Vec<ClosedInterval> = Vec::with_capacity(intervals.len());
        for iv in intervals {
            match merged.last_mut() {
                Some(last) if iv.a <= last.b => {
                    if iv.b > last.b {
                        last.b = iv.b;
                    }
                }
                _ => merged.push(iv),
            }
        }
        IntervalSet { intervals: merged }
    }

    /// Caller guarantees the intervals are sorted with `I.b < J.a`.
    pub(crate) fn from_sorted_disjoint(intervals: Vec<ClosedInterval>) -> Self {
        debug_assert!(intervals.windows(2).all(|w| w[0].b < w[1].a));
        IntervalSet { intervals }
    }

    pub fn intervals(&self) -> &[ClosedInterval] {
        &self.intervals
    }

    pub fn into_intervals(self) -> Vec<ClosedInterval> {
        self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn iter(&self) -> core::slice::Iter<'_, ClosedInterval> {
        self.intervals.iter()
    }

    pub fn total_length(&self) -> Rational {
        self.intervals.iter().map(ClosedInterval::length).sum()
    }

    /// Image under `x -> scale * x + shift`.
    pub fn affine_image(&self, scale: &Rational, shift: &Rational) -> Result<Self> {
        if !scale.is_positive() {
            return Err(Error::NonPositiveScale);
        }
        let intervals = self
            .intervals
            .iter()
            .map(|iv| ClosedInterval::new_unchecked(scale * &iv.a + shift, scale * &iv.b + shift))
            .collect();
        Ok(IntervalSet { intervals })
    }

    /// Binary search over the sorted intervals.
    pub fn contains_point(&self, x: &Rational) -> bool {
        self.intervals
            .binary_search_by(|iv| {
                if &iv.b < x {
                    Ordering::Less
                } else if &iv.a > x {
                    Ordering::Greater
                } else {
                    Ordering::Equal
                }
            })
            .is_ok()
    }

    /// Every interval of `self` lies inside some interval of `other`.
    pub fn is_subset_of(&self, other: &IntervalSet) -> bool {
        let mut j = 0;
        for iv in &self.intervals {
            while j < other.intervals.len() && other.intervals[j].b < iv.a {
                j += 1;
            }
            match other.intervals.get(j) {
                Some(outer) if outer.contains_interval(iv) => {}
                _ => return false,
            }
        }
        true
    }

    /// The open components of `[0, 1]` minus this set, left to right.
    /// Assumes the set lies in `[0, 1]`.
    pub fn gaps_in_unit(&self) -> Vec<OpenInterval> {
        let mut gaps = Vec::new();
        let mut cursor = Rational::zero();
        for iv in &self.intervals {
            if iv.a > cursor {
                gaps.push(OpenInterval::new_unchecked(cursor.clone(), iv.a.clone()));
            }
            cursor = iv.b.clone();
        }
        let one = Rational::one();
        if cursor < one {
            gaps.push(OpenInterval::new_unchecked(cursor, one));
        }
        gaps
    }
}

impl<'a> IntoIterator for &'a IntervalSet {
    type Item = &'a ClosedInterval;
    type IntoIter = core::slice::Iter<'a, ClosedInterval>;

    fn into_iter(self) -> Self::IntoIter {
        self.intervals.iter()
    }
}

impl FromIterator<ClosedInterval> for IntervalSet {
    fn from_iter<I: IntoIterator<Item = ClosedInterval>>(iter: I) -> Self {
        IntervalSet::normalize(iter.into_iter().collect())
    }
}
