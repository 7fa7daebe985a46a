use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::numerics::Rational;

/// A construction family for Cantor-like subsets of `[0, 1]`.
///
/// The variants are plain data; every operation validates the parameters
/// first, so an out-of-range family surfaces as [`Error::InvalidFamily`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// Remove the open middle `alpha` proportion of every interval.
    Proportional { alpha: Rational },
    /// At stage `k` remove a centered open interval of length `1/n^k`.
    Power { n: u32 },
    /// Split every interval into `n` equal cells and keep those whose index
    /// is in `digits` (strictly increasing, containing `0` and `n - 1`).
    DigitSet { n: u32, digits: Vec<u32> },
    /// At stage `k` remove a centered open interval of length `lambda/3^k`.
    Lambda { lambda: Rational },
}

impl FamilySpec {
    pub fn proportional(alpha: Rational) -> Result<Self> {
        let f = FamilySpec::Proportional { alpha };
        f.validate()?;
        Ok(f)
    }

    pub fn power(n: u32) -> Result<Self> {
        let f = FamilySpec::Power { n };
        f.validate()?;
        Ok(f)
    }

    /// Digits may be given in any order; duplicates are dropped.
    pub fn digit_set(n: u32, mut digits: Vec<u32>) -> Result<Self> {
        digits.sort_unstable();
        digits.dedup();
        let f = FamilySpec::DigitSet { n, digits };
        f.validate()?;
        Ok(f)
    }

    pub fn lambda(lambda: Rational) -> Result<Self> {
        let f = FamilySpec::Lambda { lambda };
        f.validate()?;
        Ok(f)
    }

    /// The middle-thirds construction of the classical Cantor set.
    pub fn ternary() -> Self {
        FamilySpec::Proportional { alpha: Rational::new(1, 3) }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            FamilySpec::Proportional { alpha } => {
                if !alpha.is_positive() || *alpha >= Rational::one() {
                    return Err(Error::InvalidFamily("proportional alpha must lie in (0, 1)"));
                }
            }
            FamilySpec::Power { n } => {
                if *n < 2 {
                    return Err(Error::InvalidFamily("power base n must be at least 2"));
                }
            }
            FamilySpec::DigitSet { n, digits } => {
                if *n < 3 {
                    return Err(Error::InvalidFamily("digit base n must be at least 3"));
                }
                if digits.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(Error::InvalidFamily("digits must be strictly increasing"));
                }
                if digits.len() < 2 || digits.len() >= *n as usize {
                    return Err(Error::InvalidFamily("need 2 <= |digits| < n"));
                }
                if digits.first() != Some(&0) || digits.last() != Some(&(n - 1)) {
                    return Err(Error::InvalidFamily("digits must contain 0 and n - 1"));
                }
            }
            FamilySpec::Lambda { lambda } => {
                if !lambda.is_positive() || *lambda > Rational::one() {
                    return Err(Error::InvalidFamily("lambda must lie in (0, 1]"));
                }
            }
        }
        Ok(())
    }

    /// Whether the family is invariant under `x -> 1 - x`.
    pub fn is_symmetric(&self) -> bool {
        match self {
            FamilySpec::DigitSet { n, digits } => {
                digits.iter().all(|d| digits.binary_search(&(n - 1 - d)).is_ok())
            }
            _ => true,
        }
    }

    /// Short name used in serialized forms.
    pub fn kind(&self) -> &'static str {
        match self {
            FamilySpec::Proportional { .. } => "proportional",
            FamilySpec::Power { .. } => "power",
            FamilySpec::DigitSet { .. } => "digit",
            FamilySpec::Lambda { .. } => "lambda",
        }
    }
}

/// Constants for refining every cell of one stage. All cells of a stage share
/// one length, so the arithmetic that depends only on that length is done once.
#[derive(Clone, Debug)]
pub(crate) enum Step {
    /// Keep the two end pieces of the given length; the open middle goes.
    Halves { child: Rational },
    /// Cells are single points and stay as they are.
    Hold,
    /// Split into `n` cells of width `h`; keep the listed digits.
    Digits { h: Rational },
}

impl Step {
    pub(crate) fn child_length(&self, parent: &Rational) -> Rational {
        match self {
            Step::Halves { child } => child.clone(),
            Step::Hold => parent.clone(),
            Step::Digits { h } => h.clone(),
        }
    }
}

/// Step constants for producing stage `stage >= 1` from cells of length
/// `parent`. Assumes the family is valid.
pub(crate) fn step_for(family: &FamilySpec, stage: u32, parent: &Rational) -> Result<Step> {
    match family {
        FamilySpec::Proportional { alpha } => {
            let keep = (Rational::one() - alpha) / Rational::from_integer(2);
            Ok(Step::Halves { child: parent * keep })
        }
        FamilySpec::Power { n } => {
            let gap = Rational::new(1, i64::from(*n)).pow(stage);
            centered(parent, gap, stage)
        }
        FamilySpec::Lambda { lambda } => {
            let gap = lambda * Rational::new(1, 3).pow(stage);
            centered(parent, gap, stage)
        }
        FamilySpec::DigitSet { n, .. } => {
            Ok(Step::Digits { h: parent / Rational::from_integer(i64::from(*n)) })
        }
    }
}

fn centered(parent: &Rational, gap: Rational, stage: u32) -> Result<Step> {
    if parent.is_zero() {
        return Ok(Step::Hold);
    }
    if gap > *parent {
        return Err(Error::RemovalExceedsInterval { stage });
    }
    Ok(Step::Halves { child: (parent - gap) / Rational::from_integer(2) })
}

/// Maximal runs of removed digits as half-open digit ranges `[start, end)`.
pub(crate) fn removed_runs(n: u32, digits: &[u32]) -> Vec<(u32, u32)> {
    let mut runs = Vec::new();
    let mut start = None;
    for d in 0..n {
        let kept = digits.binary_search(&d).is_ok();
        match (kept, start) {
            (false, None) => start = Some(d),
            (true, Some(s)) => {
                runs.push((s, d));
                start = None;
            }
            _ => {}
        }
    }
    // n - 1 is always kept, so no run is left open.
    runs
}
