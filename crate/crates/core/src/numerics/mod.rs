//! Exact scalars and finite unions of closed intervals.

mod interval;
mod rational;

pub use interval::{ClosedInterval, IntervalSet, OpenInterval};
pub use rational::Rational;
