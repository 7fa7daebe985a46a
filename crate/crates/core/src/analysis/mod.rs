//! Measures, dimensions, digit expansions and limit-set membership.

mod dimension;
mod expansion;
mod measure;
mod membership;

pub use dimension::{dimension_estimates, similarity_dimension, DimensionKind, DimensionReport};
pub use expansion::{base_expansion, ExpansionRecord};
pub use measure::{limit_measure, measure_at_depth};
pub use membership::{cantor_function, limit_witness, member_at_depth, member_limit};
