use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::generators::{level_stats_sequence, FamilySpec, DEFAULT_DEPTH_CAP};
use crate::numerics::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DimensionKind {
    /// `ln(count) / ln(scale)` for a self-similar set made of `count` copies
    /// scaled down by `scale`.
    ExactSimilarity,
    /// Per-stage dilation estimates `ln(count_k) / ln(1/L_k)`.
    EstimateSequence,
}

/// A dimension value with either its exact symbolic form or the estimate
/// sequence it was read from.
#[derive(Clone, Debug, PartialEq)]
pub struct DimensionReport {
    pub kind: DimensionKind,
    pub value: f64,
    /// `(copies, scale)` for exact reports.
    pub symbolic: Option<(u32, Rational)>,
    /// `(k, d_k)` for `k = 1..`, for estimate reports.
    pub sequence: Vec<(u32, f64)>,
}

impl DimensionReport {
    fn exact(copies: u32, scale: Rational) -> Self {
        let value = libm::log(f64::from(copies)) / scale.ln();
        DimensionReport { kind: DimensionKind::ExactSimilarity, value, symbolic: Some((copies, scale)), sequence: Vec::new() }
    }

    fn estimates(sequence: Vec<(u32, f64)>) -> Self {
        let value = sequence.last().map(|&(_, d)| d).unwrap_or(f64::NAN);
        DimensionReport { kind: DimensionKind::EstimateSequence, value, symbolic: None, sequence }
    }
}

/// Dimension of the limit set from its self-similarity.
///
/// Proportional and digit families are self-similar and get exact reports.
/// The lambda family only has the first-stage dilation value, and the power
/// family the estimate sequence through [`DEFAULT_DEPTH_CAP`]; both are
/// labelled as estimates.
pub fn similarity_dimension(family: &FamilySpec) -> Result<DimensionReport> {
    family.validate()?;
    match family {
        FamilySpec::Proportional { alpha } => {
            Ok(DimensionReport::exact(2, Rational::from_integer(2) / (Rational::one() - alpha)))
        }
        FamilySpec::DigitSet { n, digits } => {
            Ok(DimensionReport::exact(digits.len() as u32, Rational::from_integer(i64::from(*n))))
        }
        FamilySpec::Lambda { lambda } => {
            let dilation = Rational::from_integer(6) / (Rational::from_integer(3) - lambda);
            Ok(DimensionReport::estimates(alloc::vec![(1, core::f64::consts::LN_2 / dilation.ln())]))
        }
        FamilySpec::Power { n: 2 } => Err(Error::DegenerateLimit),
        FamilySpec::Power { .. } => dimension_estimates(family, DEFAULT_DEPTH_CAP),
    }
}

/// `d_k = ln(count_k) / ln(1/L_k)` for `k = 1..=kmax`, where stage `k` has
/// `count_k` cells of common length `L_k`.
pub fn dimension_estimates(family: &FamilySpec, kmax: u32) -> Result<DimensionReport> {
    if kmax == 0 {
        return Err(Error::InvalidArgument("kmax must be at least 1"));
    }
    let stats = level_stats_sequence(family, kmax)?;
    let mut sequence = Vec::with_capacity(kmax as usize);
    for (k, s) in stats.iter().enumerate().skip(1) {
        if s.min_length.is_zero() {
            return Err(Error::DegenerateLimit);
        }
        let copies = Rational::from_integer(BigInt::from(s.count.clone())).ln();
        sequence.push((k as u32, copies / -s.min_length.ln()));
    }
    Ok(DimensionReport::estimates(sequence))
}
