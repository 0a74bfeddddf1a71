//! Tail bounds, concentration quantities, blocking schedules and sample-size
//! thresholds for `(ε, α)`-density of stationary samples.
//!
//! Thresholds are returned as reals; callers round up.

mod blocking;
mod concentration;
mod report;
mod thresholds;

pub use blocking::{
    blocking_tail_bound, geometric_mixing, schedule_for_mixing, tail_m_dependent, BlockingSchedule,
    DependenceInputs,
};
pub use concentration::{
    estimate_concentration, moving_average_concentration, tensorized_lower,
    uniform_circle_concentration, uniform_cube_image_concentration, ConcentrationEstimate,
    ConcentrationOptions,
};
pub use report::{echo as echo_inputs, BoundKind, BoundReport};
pub use thresholds::{
    approximable_threshold, circle_arc_ratio, minimal_truncation_depth, mobius_kappa, tail_markov,
    threshold_m_dependent, threshold_markov, threshold_mobius, TruncationInputs, MOBIUS_V,
};
