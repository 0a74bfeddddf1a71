//! Points, parametric supports and Hausdorff distances.

mod hausdorff;
mod point;
mod reach;
pub mod spatial;
mod support;

pub use hausdorff::{
    epsilon_density_check, grid_bracket_with, hausdorff_between_clouds,
    hausdorff_between_clouds_with, hausdorff_to_support, hausdorff_to_support_with, Density,
    HausdorffBracket,
};
pub use point::{euclidean, squared_distance, Point, PointCloud};
pub use reach::{
    covering_number_bound, offset_reach, radius_window_check, RadiusWindow, ReachInfo,
};
pub use support::{BettiVector, SupportModel};
