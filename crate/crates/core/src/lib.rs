//! Hausdorff convergence of stationary dependent samples on compact supports.
//!
//! The crate is organised around five layers:
//!
//! * [`geometry`]: points, parametric supports, Hausdorff distances, density
//!   verdicts and reach arithmetic.
//! * [`processes`]: seeded samplers for the stationary families (Möbius chain
//!   on the circle, AR/SRE recursions, m-dependent and truncated approximable
//!   sequences).
//! * [`bounds`]: concentration estimates, blocking tail bounds and sample-size
//!   thresholds.
//! * [`topology`]: Čech complexes up to dimension two and their Betti numbers
//!   over GF(2).
//! * [`harness`]: Monte Carlo experiments and the report/CSV/SVG writers used by
//!   the `reachkit` binary.
//!
//! Data-parallel loops go through [`exec::Execution`]; with the `parallel`
//! feature disabled every path runs sequentially and produces identical output.

pub mod bounds;
pub mod error;
pub mod exec;
pub mod geometry;
pub mod harness;
pub mod processes;
pub mod rng;
pub mod stats;
pub mod topology;

pub use error::{Error, Result};
pub use exec::Execution;
pub use geometry::{Point, PointCloud, SupportModel};
