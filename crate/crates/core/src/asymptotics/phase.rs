//! Phase functions G and g of the steepest-descent analysis.
//!
//! Both are logs of Möbius ratios normalized to 1 at z = u, so the principal
//! branch is analytic near the critical point.

use num_complex::Complex64;

use super::constants::AsymptoticConstants;
use crate::error::{Error, Result};
use crate::params::ModelParams;

#[derive(Clone, Copy, Debug)]
pub struct Phase {
    pub q: f64,
    pub s: f64,
    pub u: f64,
    pub v: f64,
    pub a: f64,
}

impl Phase {
    pub fn new(params: &ModelParams) -> Result<Self> {
        let k = AsymptoticConstants::new(params)?;
        Ok(Phase { q: params.q, s: params.s(), u: params.u, v: params.v, a: k.a })
    }

    /// ((1-sz)/(z-s)) / ((1-su)/(u-s)).
    pub fn ratio_r(&self, z: Complex64) -> Complex64 {
        let s = self.s;
        (1.0 - s * z) / (z - s) * ((self.u - s) / (1.0 - s * self.u))
    }

    /// ((1-qzv)/(1-zv)) / ((1-quv)/(1-uv)).
    pub fn ratio_e(&self, z: Complex64) -> Complex64 {
        let (q, u, v) = (self.q, self.u, self.v);
        (1.0 - q * z * v) / (1.0 - z * v) * ((1.0 - u * v) / (1.0 - q * u * v))
    }

    pub fn g(&self, z: Complex64) -> Complex64 {
        self.ratio_r(z).ln()
    }

    pub fn big_g(&self, z: Complex64) -> Complex64 {
        self.a * self.ratio_r(z).ln() + self.ratio_e(z).ln()
    }

    pub fn big_g_prime(&self, z: Complex64) -> Complex64 {
        let (q, s, v, a) = (self.q, self.s, self.v, self.a);
        a * (1.0 / q - 1.0) / ((1.0 - s * z) * (z - s)) - v * (1.0 - 1.0 / q) / ((1.0 / q - v * z) * (1.0 - v * z))
    }

    /// Fails if Im log of either ratio jumps by more than π between neighbours.
    pub fn check_branch_continuity(&self, path: &[Complex64]) -> Result<()> {
        for f in [Self::ratio_r as fn(&Self, Complex64) -> Complex64, Self::ratio_e] {
            for w in path.windows(2) {
                let jump = (f(self, w[1]).ln().im - f(self, w[0]).ln().im).abs();
                if jump > std::f64::consts::PI {
                    return Err(Error::Numerical(format!(
                        "log branch jumps by {jump} between {} and {}",
                        w[0], w[1]
                    )));
                }
            }
        }
        Ok(())
    }
}
