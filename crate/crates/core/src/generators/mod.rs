//! Finite stages of the construction families.
//!
//! A stage is produced from the previous one by refining every cell. Cells are
//! kept unmerged while refining so that digit sets with adjacent kept digits
//! still subdivide the right cells; [`Construction::to_set`] normalizes.

mod family;
mod ifs;

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

pub use family::FamilySpec;
pub(crate) use family::{removed_runs, step_for, Step};
pub use ifs::{ifs_step, AffineMap, IfsMaps};

use crate::error::{Error, Result};
use crate::numerics::{ClosedInterval, IntervalSet, OpenInterval, Rational};

/// Default ceiling on enumerated depth; stage 24 of a binary family already
/// holds 2^24 intervals.
pub const DEFAULT_DEPTH_CAP: u32 = 24;

/// Lazily advanced construction: holds only the current stage.
///
/// Endpoints are stored as integer numerators over one common denominator,
/// so refining a cell is a bigint addition rather than a reduced-fraction
/// addition; fractions are only reduced when cells are read out.
#[derive(Clone, Debug)]
pub struct Construction {
    family: FamilySpec,
    stage: u32,
    cell_length: Rational,
    denom: BigUint,
    cells: Vec<(BigUint, BigUint)>,
}

impl Construction {
    pub fn new(family: FamilySpec) -> Result<Self> {
        family.validate()?;
        Ok(Construction {
            family,
            stage: 0,
            cell_length: Rational::one(),
            denom: BigUint::one(),
            cells: alloc::vec![(BigUint::zero(), BigUint::one())],
        })
    }

    pub fn family(&self) -> &FamilySpec {
        &self.family
    }

    pub fn stage(&self) -> u32 {
        self.stage
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    /// Construction cells of the current stage, left to right. Adjacent kept
    /// digits give touching cells, which [`Self::to_set`] merges.
    pub fn cells(&self) -> Vec<ClosedInterval> {
        self.cells
            .iter()
            .map(|(a, b)| ClosedInterval::new_unchecked(self.value(a), self.value(b)))
            .collect()
    }

    /// Common length of every cell in the current stage.
    pub fn cell_length(&self) -> &Rational {
        &self.cell_length
    }

    /// The current stage as a normalized set. Cells are produced in order,
    /// so only touching neighbours need merging.
    pub fn to_set(&self) -> IntervalSet {
        let mut merged: Vec<(&BigUint, &BigUint)> = Vec::with_capacity(self.cells.len());
        for (a, b) in &self.cells {
            match merged.last_mut() {
                Some(last) if a <= last.1 => last.1 = b,
                _ => merged.push((a, b)),
            }
        }
        IntervalSet::from_sorted_disjoint(
            merged
                .into_iter()
                .map(|(a, b)| ClosedInterval::new_unchecked(self.value(a), self.value(b)))
                .collect(),
        )
    }

    pub fn into_set(self) -> IntervalSet {
        self.to_set()
    }

    /// Moves to the next stage.
    pub fn advance(&mut self) -> Result<()> {
        self.refine(None)
    }

    /// Moves to the next stage and appends the open intervals removed by this
    /// step to `removed`, left to right.
    pub fn advance_recording(&mut self, removed: &mut Vec<OpenInterval>) -> Result<()> {
        self.refine(Some(removed))
    }

    pub fn advance_to(&mut self, stage: u32) -> Result<()> {
        while self.stage < stage {
            self.advance()?;
        }
        Ok(())
    }

    fn value(&self, numer: &BigUint) -> Rational {
        Rational::from_unsigned_parts(numer, &self.denom)
    }

    fn open(&self, a: &BigUint, b: &BigUint) -> OpenInterval {
        OpenInterval::new_unchecked(self.value(a), self.value(b))
    }

    /// Widens the common denominator so every offset is an integer numerator.
    fn align(&mut self, offsets: &[&Rational]) -> Vec<BigUint> {
        let mut denom = self.denom.clone();
        for off in offsets {
            denom = denom.lcm(off.denom().magnitude());
        }
        if denom != self.denom {
            let factor = &denom / &self.denom;
            for (a, b) in &mut self.cells {
                *a *= &factor;
                *b *= &factor;
            }
            self.denom = denom;
        }
        offsets
            .iter()
            .map(|off| {
                let scaled = off.numer().magnitude() * (&self.denom / off.denom().magnitude());
                scaled
            })
            .collect()
    }

    fn refine(&mut self, mut removed: Option<&mut Vec<OpenInterval>>) -> Result<()> {
        let stage = self.stage + 1;
        let step = step_for(&self.family, stage, &self.cell_length)?;
        match &step {
            Step::Hold => {}
            Step::Halves { child } => {
                let c = self.align(&[child]).pop().expect("one offset");
                let cells = core::mem::take(&mut self.cells);
                let mut next = Vec::with_capacity(cells.len() * 2);
                for (a, b) in cells {
                    let left_end = &a + &c;
                    let right_start = &b - &c;
                    if let Some(out) = removed.as_deref_mut() {
                        out.push(self.open(&left_end, &right_start));
                    }
                    next.push((a, left_end));
                    next.push((right_start, b));
                }
                self.cells = next;
            }
            Step::Digits { h } => {
                let FamilySpec::DigitSet { n, digits } = &self.family else {
                    unreachable!("digit step for a non-digit family")
                };
                let (n, digits) = (*n, digits.clone());
                let h = self.align(&[h]).pop().expect("one offset");
                let offset = |d: u32| &h * d;
                let kept: Vec<(BigUint, BigUint)> =
                    digits.iter().map(|&d| (offset(d), offset(d + 1))).collect();
                let gaps: Vec<(BigUint, BigUint)> = removed_runs(n, &digits)
                    .into_iter()
                    .map(|(s, e)| (offset(s), offset(e)))
                    .collect();
                let cells = core::mem::take(&mut self.cells);
                let mut next = Vec::with_capacity(cells.len() * kept.len());
                for (a, _) in &cells {
                    next.extend(kept.iter().map(|(lo, hi)| (a + lo, a + hi)));
                    if let Some(out) = removed.as_deref_mut() {
                        out.extend(gaps.iter().map(|(lo, hi)| self.open(&(a + lo), &(a + hi))));
                    }
                }
                self.cells = next;
            }
        }
        self.cell_length = step.child_length(&self.cell_length);
        self.stage = stage;
        Ok(())
    }
}

/// Stage `k` of the family as a normalized interval set, with the default
/// depth cap.
pub fn iterate(family: &FamilySpec, k: u32) -> Result<IntervalSet> {
    iterate_with_cap(family, k, DEFAULT_DEPTH_CAP)
}

pub fn iterate_with_cap(family: &FamilySpec, k: u32, cap: u32) -> Result<IntervalSet> {
    if k > cap {
        return Err(Error::DepthOverCap { depth: k, cap });
    }
    let mut c = Construction::new(family.clone())?;
    c.advance_to(k)?;
    Ok(c.into_set())
}

/// Every open interval removed through stage `k`, generation by generation
/// and left to right within a generation.
pub fn removed_intervals(family: &FamilySpec, k: u32) -> Result<Vec<OpenInterval>> {
    if k > DEFAULT_DEPTH_CAP {
        return Err(Error::DepthOverCap { depth: k, cap: DEFAULT_DEPTH_CAP });
    }
    let mut c = Construction::new(family.clone())?;
    let mut removed = Vec::new();
    for _ in 0..k {
        c.advance_recording(&mut removed)?;
    }
    Ok(removed)
}

/// Cell count and extreme cell lengths at one stage.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelStats {
    pub count: BigUint,
    pub min_length: Rational,
    pub max_length: Rational,
}

impl LevelStats {
    pub fn total_length(&self) -> Rational {
        &self.min_length * Rational::from_integer(num_bigint::BigInt::from(self.count.clone()))
    }
}

/// Stats for stages `0..=kmax` from the count/length recurrence; no
/// enumeration, so `kmax` is not subject to the depth cap.
pub fn level_stats_sequence(family: &FamilySpec, kmax: u32) -> Result<Vec<LevelStats>> {
    family.validate()?;
    let mut out = Vec::with_capacity(kmax as usize + 1);
    let mut count = BigUint::from(1u32);
    let mut length = Rational::one();
    out.push(LevelStats { count: count.clone(), min_length: length.clone(), max_length: length.clone() });
    for stage in 1..=kmax {
        let step = step_for(family, stage, &length)?;
        let factor: u32 = match (&step, family) {
            (Step::Hold, _) => 1,
            (Step::Halves { .. }, _) => 2,
            (Step::Digits { .. }, FamilySpec::DigitSet { digits, .. }) => digits.len() as u32,
            (Step::Digits { .. }, _) => unreachable!("digit step for a non-digit family"),
        };
        count *= factor;
        length = step.child_length(&length);
        out.push(LevelStats { count: count.clone(), min_length: length.clone(), max_length: length.clone() });
    }
    Ok(out)
}

/// Cell count and extreme lengths at stage `k`. Counts construction cells,
/// which equals the interval count of [`iterate`] unless the family keeps
/// adjacent digits.
pub fn level_stats(family: &FamilySpec, k: u32) -> Result<LevelStats> {
    let mut seq = level_stats_sequence(family, k)?;
    Ok(seq.pop().expect("sequence holds stage 0"))
}

/// The two-digit family reproducing the proportional construction with
/// middle proportion `alpha`, when one exists: base `m = 2/(1 - alpha)` must
/// be an integer of at least 3.
pub fn digit_equivalent(alpha: &Rational) -> Option<FamilySpec> {
    if !alpha.is_positive() || *alpha >= Rational::one() {
        return None;
    }
    let m = Rational::from_integer(2) / (Rational::one() - alpha);
    if !m.is_integer() {
        return None;
    }
    let m: u32 = u32::try_from(m.numer()).ok()?;
    if m < 3 {
        return None;
    }
    Some(FamilySpec::DigitSet { n: m, digits: alloc::vec![0, m - 1] })
}
