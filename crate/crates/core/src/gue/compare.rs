//! Rescaled vertex-model arrays against the GUE-corners process.

use std::collections::HashMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::corners::sample_gue_corners_batch;
use super::ks::{ks_distance, ks_two_sample, standard_normal_cdf, EmpiricalDistribution};
use crate::asymptotics::AsymptoticConstants;
use crate::error::{Error, Result};
use crate::measure::{sample_pattern, top_row_pmf, GibbsConditional, TopRowSampler};
use crate::params::ModelParams;

#[derive(Clone, Debug, Serialize)]
pub struct KsRow {
    pub m: usize,
    /// "j.i" for Y^j_i, or "trace.j" for the row sum.
    pub coordinate: String,
    pub ks: f64,
    /// 0 for the exact-pmf comparison at k = 1.
    pub n_samples: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct GueComparison {
    pub k: usize,
    pub a: f64,
    pub d: f64,
    pub rows: Vec<KsRow>,
    /// Per coordinate: KS never rises by more than the noise band along the grid.
    pub monotone: bool,
    pub noise_band: f64,
    pub interlacing_violations: usize,
    /// Smallest pmf mass over the grid.
    pub min_mass: f64,
}

impl GueComparison {
    pub fn ks_at(&self, m: usize, coordinate: &str) -> Option<f64> {
        self.rows.iter().find(|r| r.m == m && r.coordinate == coordinate).map(|r| r.ks)
    }
}

/// Y^j_i = (λ^j_{j-i+1} - aM)/(d√M) for a pattern stored with decreasing rows,
/// so row j of the output is ascending in i.
pub fn rescale(rows: &[crate::Signature], m: usize, c: &AsymptoticConstants) -> Vec<Vec<f64>> {
    let scale = c.d * (m as f64).sqrt();
    rows.iter()
        .map(|r| r.parts().iter().rev().map(|&x| (x as f64 - c.a * m as f64) / scale).collect())
        .collect()
}

pub fn compare_theorem_main(
    k: usize,
    m_grid: &[usize],
    params: &ModelParams,
    n_samples: usize,
    seed: u64,
    tol: f64,
) -> Result<GueComparison> {
    if !(1..=3).contains(&k) {
        return Err(Error::InvalidArgument(format!("comparison supports 1 <= k <= 3, got {k}")));
    }
    let c = AsymptoticConstants::new(params)?;
    let mut rows = Vec::new();
    let mut violations = 0;
    let mut min_mass = f64::INFINITY;
    let gue = if k >= 2 { sample_gue_corners_batch(k, n_samples, seed ^ 0x6775_6500) } else { Vec::new() };
    for &m in m_grid {
        let pmf = top_row_pmf(k, m, params, tol)?;
        min_mass = min_mass.min(pmf.mass);
        if (pmf.mass - 1.0).abs() > tol.max(1e-6) {
            return Err(Error::Numerical(format!(
                "pmf mass {} at M = {m} (truncation {})",
                pmf.mass, pmf.truncation
            )));
        }
        if k == 1 {
            let pairs: Vec<(f64, f64)> = pmf
                .entries
                .iter()
                .map(|(mu, p)| (rescale(std::slice::from_ref(mu), m, &c)[0][0], p.max(0.0)))
                .collect();
            let emp = EmpiricalDistribution::from_weighted(&pairs)?;
            rows.push(KsRow { m, coordinate: "1.1".into(), ks: ks_distance(&emp, standard_normal_cdf), n_samples: 0, seed });
            continue;
        }
        let sampler = TopRowSampler::new(&pmf);
        let mut cache: HashMap<crate::Signature, GibbsConditional> = HashMap::new();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(m as u64);
        let mut ys = Vec::with_capacity(n_samples);
        for _ in 0..n_samples {
            let pat = sample_pattern(&sampler, &mut cache, params, &mut rng)?;
            if pat.violation().is_some() {
                violations += 1;
            }
            ys.push(rescale(pat.rows(), m, &c));
        }
        for j in 1..=k {
            for i in 1..=j {
                let a: Vec<f64> = ys.iter().map(|y| y[j - 1][i - 1]).collect();
                let b: Vec<f64> = gue.iter().map(|g| g.rows[j - 1][i - 1]).collect();
                let ks = ks_two_sample(&EmpiricalDistribution::from_samples(&a)?, &EmpiricalDistribution::from_samples(&b)?);
                rows.push(KsRow { m, coordinate: format!("{j}.{i}"), ks, n_samples, seed });
            }
            let a: Vec<f64> = ys.iter().map(|y| y[j - 1].iter().sum()).collect();
            let b: Vec<f64> = gue.iter().map(|g| g.rows[j - 1].iter().sum()).collect();
            let ks = ks_two_sample(&EmpiricalDistribution::from_samples(&a)?, &EmpiricalDistribution::from_samples(&b)?);
            rows.push(KsRow { m, coordinate: format!("trace.{j}"), ks, n_samples, seed });
        }
    }
    violations += gue.iter().map(|g| g.interlacing_violations()).sum::<usize>();
    // Two-sample KS fluctuates on the scale sqrt(2/n); use three of those.
    let noise_band = if k == 1 { 0.0 } else { 3.0 * (2.0 / n_samples.max(1) as f64).sqrt() };
    let mut monotone = true;
    let coords: Vec<String> = rows.iter().filter(|r| r.m == m_grid[0]).map(|r| r.coordinate.clone()).collect();
    for coord in &coords {
        let seq: Vec<f64> = rows.iter().filter(|r| &r.coordinate == coord).map(|r| r.ks).collect();
        if seq.windows(2).any(|w| w[1] > w[0] + noise_band) {
            monotone = false;
        }
    }
    Ok(GueComparison { k, a: c.a, d: c.d, rows, monotone, noise_band, interlacing_violations: violations, min_mass })
}
