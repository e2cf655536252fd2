// NaN must fail parameter checks, hence `!(x > 0.0)` rather than `x <= 0.0`.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod asymptotics;
pub mod boundary;
pub mod error;
pub mod gue;
pub mod measure;
pub mod params;
pub mod paths;
pub mod qseries;
pub mod quadrature;
pub mod signature;
pub mod symfunc;
pub mod vertex;
pub mod weights;

pub use error::{Error, Result};
pub use params::{ModelParams, SpinParams};
pub use signature::Signature;
pub use vertex::VertexType;
