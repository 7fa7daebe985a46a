//! The indicator of `K = [0, 1] - S` for a fat Cantor-like set `S`.
//!
//! `K` is the union of the removed open intervals `E_1, E_2, ...`. Each
//! partial union `E_1 ∪ ... ∪ E_n` has a Riemann-integrable indicator `f_n`,
//! the `f_n` converge to the indicator of `K` in L1 with error equal to the
//! tail `Σ_{i>n} |E_i|`, and yet the limit is discontinuous exactly on `S`.
//! Everything here is an exact tail sum; no quadrature.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::analysis::limit_measure;
use crate::error::{Error, Result};
use crate::generators::{Construction, FamilySpec, DEFAULT_DEPTH_CAP};
use crate::numerics::{OpenInterval, Rational};

/// Removed intervals `E_1, E_2, ...` listed generation by generation, left to
/// right within each generation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RemovedSequence {
    source: FamilySpec,
    entries: Vec<OpenInterval>,
    /// `generation_ends[g - 1]` is the number of entries through generation `g`.
    generation_ends: Vec<usize>,
}

impl RemovedSequence {
    pub fn source(&self) -> &FamilySpec {
        &self.source
    }

    pub fn entries(&self) -> &[OpenInterval] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entry counts at the end of each generation: `1, 3, 7, ...` for binary
    /// families.
    pub fn generation_ends(&self) -> &[usize] {
        &self.generation_ends
    }

    /// Generation (1-based) of entry `i` (1-based).
    pub fn generation_of(&self, i: usize) -> Option<u32> {
        if i == 0 || i > self.entries.len() {
            return None;
        }
        Some(self.generation_ends.partition_point(|&end| end < i) as u32 + 1)
    }

    /// `Σ_{i <= n} |E_i|`, with `n` clamped to the available entries.
    pub fn sum_through(&self, n: usize) -> Rational {
        self.entries.iter().take(n).map(OpenInterval::length).sum()
    }

    /// Number of distinct endpoints of `E_1 ∪ ... ∪ E_n`: the points where
    /// the indicator `f_n` jumps.
    pub fn discontinuity_count(&self, n: usize) -> usize {
        let mut points = BTreeSet::new();
        for e in self.entries.iter().take(n) {
            points.insert(e.a().clone());
            points.insert(e.b().clone());
        }
        points.len()
    }
}

/// All intervals removed through `generations` construction steps.
pub fn removed_sequence(family: &FamilySpec, generations: u32) -> Result<RemovedSequence> {
    if generations == 0 {
        return Err(Error::InvalidArgument("need at least one generation"));
    }
    if generations > DEFAULT_DEPTH_CAP {
        return Err(Error::DepthOverCap { depth: generations, cap: DEFAULT_DEPTH_CAP });
    }
    let mut c = Construction::new(family.clone())?;
    let mut entries = Vec::new();
    let mut generation_ends = Vec::with_capacity(generations as usize);
    for _ in 0..generations {
        c.advance_recording(&mut entries)?;
        generation_ends.push(entries.len());
    }
    Ok(RemovedSequence { source: family.clone(), entries, generation_ends })
}

/// `∫|f_n - f| = (1 - m(S)) - Σ_{i<=n} |E_i|`, exactly.
///
/// Generations are enumerated until `n` entries exist or the construction
/// stops removing anything (the power family with base 2 does after two).
pub fn tail_measure(family: &FamilySpec, n: usize) -> Result<Rational> {
    let removed_total = Rational::one() - limit_measure(family)?;
    let mut c = Construction::new(family.clone())?;
    let mut entries = Vec::new();
    while entries.len() < n {
        if c.stage() >= DEFAULT_DEPTH_CAP {
            return Err(Error::DepthOverCap { depth: c.stage() + 1, cap: DEFAULT_DEPTH_CAP });
        }
        let before = entries.len();
        c.advance_recording(&mut entries)?;
        if entries.len() == before {
            break;
        }
    }
    let partial: Rational = entries.iter().take(n).map(OpenInterval::length).sum();
    Ok(removed_total - partial)
}

/// Measure of the discontinuity set of the indicator of `K`, and whether that
/// indicator is Riemann integrable (exactly when the measure is zero).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscontinuityReport {
    pub measure: Rational,
    pub riemann_integrable: bool,
}

pub fn discontinuity_report(family: &FamilySpec) -> Result<DiscontinuityReport> {
    let measure = limit_measure(family)?;
    let riemann_integrable = measure.is_zero();
    Ok(DiscontinuityReport { measure, riemann_integrable })
}
