//! Steepest-descent ingredients: constants, phase functions, the descent
//! contour and its quadrature, the normalized quantities A_M and B_M, and
//! Hermite functions.

mod bm;
mod checks;
mod constants;
mod contour;
mod engine;
mod hermite;
mod phase;

pub use bm::*;
pub use checks::*;
pub use constants::AsymptoticConstants;
pub use contour::CompositeContour;
pub use engine::DescentIntegrator;
pub use hermite::{hermite_h, psi};
pub use phase::Phase;
