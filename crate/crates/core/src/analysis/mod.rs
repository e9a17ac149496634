//! Weight distributions, minimum distances and the derived codes built
//! from them.

mod distance;
mod extended;
mod trace;
mod weights;

pub use distance::{
    find_codeword_of_weight, min_distance, AnalysisBudget, DistanceBound, DistanceInfo, Provenance,
};
pub use extended::{
    extend_code, extend_distribution, extend_parameters, extended_dual, extended_dual_from,
    extended_generator_rows, ExtendedCode,
};
pub use trace::{trace_code_equals_dual, trace_vectors};
pub use weights::{
    enumerate_span, macwilliams_coefficient, macwilliams_transform, pless_fourth_moment_a3, span_codewords,
    weight_distribution_exhaustive, weight_distribution_with_workers, WeightDistribution,
    DEFAULT_ENUM_CAP,
};
