use std::path::PathBuf;

use serde::{Deserialize, Serialize};
use sixvertex_core::{ModelParams, Result};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamsConfig {
    pub q: f64,
    pub u: f64,
    pub v: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub us: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vs: Option<Vec<f64>>,
}

impl Default for ParamsConfig {
    fn default() -> Self {
        ParamsConfig { q: 0.5, u: 2.0, v: 0.25, us: None, vs: None }
    }
}

impl ParamsConfig {
    pub fn build(&self) -> Result<ModelParams> {
        let mut p = ModelParams::new(self.q, self.u, self.v)?;
        if let Some(us) = &self.us {
            p = p.with_row_parameters(us.clone())?;
        }
        if let Some(vs) = &self.vs {
            p = p.with_column_parameters(vs.clone())?;
        }
        Ok(p)
    }
}

/// Everything a run depends on. Written back in full to every sidecar.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ExperimentConfig {
    pub params: ParamsConfig,
    /// Rows.
    pub k: usize,
    /// Columns for single-M runs.
    pub m: usize,
    pub m_grid: Vec<usize>,
    /// Scaled point for the A_M / B_M tables; defaults to 0 (k=1) or -1, 1 (k=2).
    pub x: Option<Vec<f64>>,
    pub tol: f64,
    pub seed: u64,
    pub n_samples: usize,
    /// Largest first part in enumeration-based suites.
    pub lambda_max: i64,
    /// Path-collection grids written by `sample`.
    pub grids: usize,
    /// Artifact threshold for the final KS distance in `gue-compare`.
    pub ks_threshold: Option<f64>,
    pub threads: Option<usize>,
    pub out: PathBuf,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            params: ParamsConfig::default(),
            k: 2,
            m: 20,
            m_grid: vec![100, 400, 1600],
            x: None,
            tol: 1e-8,
            seed: 1,
            n_samples: 1000,
            lambda_max: 6,
            grids: 3,
            ks_threshold: None,
            threads: None,
            out: PathBuf::from("out"),
        }
    }
}

impl ExperimentConfig {
    pub fn x_vector(&self) -> Vec<f64> {
        self.x.clone().unwrap_or_else(|| match self.k {
            1 => vec![0.0],
            2 => vec![-1.0, 1.0],
            k => (0..k).map(|i| i as f64 - (k as f64 - 1.0) / 2.0).collect(),
        })
    }
}
