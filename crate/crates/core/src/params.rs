//! Model parameters. The measure lives at s = q^{-1/2}; the symmetric-function
//! layer accepts any (q, s) through [`SpinParams`].

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Generic (q, s) pair for the higher-spin weights.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpinParams {
    pub q: f64,
    pub s: f64,
}

impl SpinParams {
    pub fn new(q: f64, s: f64) -> Result<Self> {
        if !(q > 0.0 && q < 1.0) {
            return Err(Error::InvalidParams(format!("q = {q} must lie in (0,1)")));
        }
        if !s.is_finite() || s == 0.0 {
            return Err(Error::InvalidParams(format!("s = {s} must be finite and nonzero")));
        }
        Ok(SpinParams { q, s })
    }
}

#[derive(Deserialize)]
struct RawParams {
    q: f64,
    u: f64,
    v: f64,
    #[serde(default)]
    us: Option<Vec<f64>>,
    #[serde(default)]
    vs: Option<Vec<f64>>,
}

/// Ferroelectric parameters: 0 < q < 1, s = q^{-1/2}, v^{-1} > u > s > 1.
///
/// `us`/`vs` optionally override the homogeneous row and column spectral
/// parameters; entry i is used for row i (resp. column j).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawParams")]
pub struct ModelParams {
    pub q: f64,
    pub u: f64,
    pub v: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub us: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vs: Option<Vec<f64>>,
    #[serde(skip)]
    s: f64,
}

impl TryFrom<RawParams> for ModelParams {
    type Error = Error;
    fn try_from(r: RawParams) -> Result<Self> {
        let mut p = ModelParams::new(r.q, r.u, r.v)?;
        if let Some(us) = r.us {
            p = p.with_row_parameters(us)?;
        }
        if let Some(vs) = r.vs {
            p = p.with_column_parameters(vs)?;
        }
        Ok(p)
    }
}

const CHAIN: &str = "ferroelectric chain v^-1 > u > s > 1 with s = q^-1/2";

impl ModelParams {
    pub fn new(q: f64, u: f64, v: f64) -> Result<Self> {
        if !(q > 0.0 && q < 1.0) {
            return Err(Error::InvalidParams(format!("q = {q} must lie in (0,1)")));
        }
        let s = q.powf(-0.5);
        let p = ModelParams { q, u, v, us: None, vs: None, s };
        p.check_pair(u, v)?;
        Ok(p)
    }

    fn check_pair(&self, u: f64, v: f64) -> Result<()> {
        if !(u.is_finite() && v.is_finite()) {
            return Err(Error::InvalidParams(format!("{CHAIN}: non-finite u or v")));
        }
        if !(u > self.s) {
            return Err(Error::InvalidParams(format!(
                "{CHAIN}: need u > s, got u = {u}, s = {}",
                self.s
            )));
        }
        if !(v > 0.0 && u * v < 1.0) {
            return Err(Error::InvalidParams(format!(
                "{CHAIN}: need 0 < v < 1/u, got u = {u}, v = {v}"
            )));
        }
        Ok(())
    }

    pub fn with_row_parameters(mut self, us: Vec<f64>) -> Result<Self> {
        let vmax = self.column_max();
        for &u in &us {
            self.check_pair(u, vmax)?;
        }
        self.us = Some(us);
        Ok(self)
    }

    pub fn with_column_parameters(mut self, vs: Vec<f64>) -> Result<Self> {
        let umax = self.row_max();
        for &v in &vs {
            self.check_pair(umax, v)?;
        }
        self.vs = Some(vs);
        Ok(self)
    }

    fn row_max(&self) -> f64 {
        self.us
            .as_ref()
            .map_or(self.u, |v| v.iter().copied().fold(self.u, f64::max))
    }

    fn column_max(&self) -> f64 {
        self.vs
            .as_ref()
            .map_or(self.v, |v| v.iter().copied().fold(self.v, f64::max))
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn spin(&self) -> SpinParams {
        SpinParams { q: self.q, s: self.s }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.us.is_none() && self.vs.is_none()
    }

    /// Row parameters u_1..u_k (k <= length of `us` if given).
    pub fn row_parameters(&self, k: usize) -> Result<Vec<f64>> {
        match &self.us {
            None => Ok(vec![self.u; k]),
            Some(us) if us.len() >= k => Ok(us[..k].to_vec()),
            Some(us) => Err(Error::InvalidArgument(format!(
                "{k} rows requested but only {} row parameters given",
                us.len()
            ))),
        }
    }

    pub fn column_parameters(&self, m: usize) -> Result<Vec<f64>> {
        match &self.vs {
            None => Ok(vec![self.v; m]),
            Some(vs) if vs.len() >= m => Ok(vs[..m].to_vec()),
            Some(vs) => Err(Error::InvalidArgument(format!(
                "{m} columns requested but only {} column parameters given",
                vs.len()
            ))),
        }
    }

    /// |(u-s)/(1-su) * (v-s)/(1-sv)| < 1 for the homogeneous pair.
    pub fn admissibility_ratio(&self) -> f64 {
        let s = self.s;
        ((self.u - s) / (1.0 - s * self.u) * (self.v - s) / (1.0 - s * self.v)).abs()
    }
}
