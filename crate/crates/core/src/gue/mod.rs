//! GUE-corners reference process and distribution distances.

mod compare;
mod corners;
mod ks;

pub use compare::{compare_theorem_main, rescale, KsRow, GueComparison};
pub use corners::{corners_of, gue_matrix, hermite_density, sample_gue_corners, sample_gue_corners_batch, CornersSample};
pub use ks::{ks_distance, ks_two_sample, standard_normal_cdf, EmpiricalDistribution};
