use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::ModelParams;

/// Limit-shape constants for homogeneous (u, v).
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct AsymptoticConstants {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl AsymptoticConstants {
    pub fn new(params: &ModelParams) -> Result<Self> {
        if !params.is_homogeneous() {
            return Err(Error::InvalidArgument("constants need homogeneous u and v".into()));
        }
        let (s, u, v) = (params.s(), params.u, params.v);
        let a = v * (u - 1.0 / s) * (u / s - 1.0) / ((1.0 - u * v) * (1.0 - u * v / (s * s)));
        let b = (s * s - 1.0) / ((u - s) * (1.0 - s * u));
        let c = 0.5
            * (a * (1.0 / (u - s).powi(2) - s * s / (1.0 - s * u).powi(2))
                - v * v / s.powi(4) / (1.0 - u * v / (s * s)).powi(2)
                + v * v / (1.0 - u * v).powi(2));
        if !(c > 0.0) {
            return Err(Error::Numerical(format!("c = {c} is not positive")));
        }
        let d = -(2.0 * c).sqrt() / b;
        Ok(AsymptoticConstants { a, b, c, d })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_point() {
        let k = AsymptoticConstants::new(&ModelParams::new(0.5, 2.0, 0.25).unwrap()).unwrap();
        assert!((k.a - 0.357).abs() < 1e-3);
        assert!((k.b + 0.934).abs() < 1e-3);
        assert!((k.c - 0.525).abs() < 1e-3);
        assert!((k.d - 1.097).abs() < 1e-3);
    }
}
