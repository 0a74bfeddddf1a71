//! Čech complexes of equal closed balls and their Betti numbers over GF(2).

mod complex;
mod homology;
mod miniball;
mod verdict;

pub use complex::{cech_complex, cech_complex_with, CechComplex, BALL_TOLERANCE};
pub use homology::{betti_numbers, boundary_ranks, second_betti};
pub use miniball::{min_enclosing_ball, MiniBall, MAX_MINIBALL_POINTS};
pub use verdict::{reconstruction_verdict, reconstruction_verdict_with, ReconstructionVerdict};
