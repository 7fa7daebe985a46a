//! Exact construction and analysis of Cantor-like subsets of `[0, 1]`.
//!
//! Every endpoint, length and measure is an exact [`Rational`]. The crate
//! covers four construction families (see [`FamilySpec`]):
//!
//! * proportional: remove a fixed middle proportion of every interval,
//! * power (Smith-Volterra-Cantor): at stage `k` remove a centered open
//!   interval of length `1/n^k`,
//! * digit set: keep the base-`n` sub-cells whose digit lies in a fixed set,
//! * lambda: at stage `k` remove a centered open interval of length `λ/3^k`.
//!
//! The crate is `no_std` and only needs `alloc`. IO, file formats and the
//! command line live in the companion `cantor-cli` crate.

#![no_std]

extern crate alloc;

pub mod analysis;
pub mod counterexample;
mod error;
pub mod generators;
pub mod numerics;

pub use analysis::{
    base_expansion, cantor_function, dimension_estimates, limit_measure, limit_witness,
    measure_at_depth, member_at_depth, member_limit, similarity_dimension, DimensionKind,
    DimensionReport, ExpansionRecord,
};
pub use counterexample::{
    discontinuity_report, removed_sequence, tail_measure, DiscontinuityReport, RemovedSequence,
};
pub use error::{Error, Result};
pub use generators::{
    digit_equivalent, ifs_step, iterate, iterate_with_cap, level_stats, level_stats_sequence,
    removed_intervals,
    AffineMap, Construction, FamilySpec, IfsMaps, LevelStats, DEFAULT_DEPTH_CAP,
};
pub use numerics::{ClosedInterval, IntervalSet, OpenInterval, Rational};
