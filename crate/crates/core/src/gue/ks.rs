use serde::Serialize;

use crate::error::{Error, Result};

/// A distribution on the real line with finitely many atoms, either from
/// samples (equal weights) or from an explicit pmf.
#[derive(Clone, Debug, Serialize)]
pub struct EmpiricalDistribution {
    atoms: Vec<f64>,
    /// cdf[i] = mass of atoms[..=i]
    cdf: Vec<f64>,
    pub n_samples: usize,
}

impl EmpiricalDistribution {
    pub fn from_samples(samples: &[f64]) -> Result<Self> {
        let pairs: Vec<(f64, f64)> = samples.iter().map(|&x| (x, 1.0)).collect();
        let mut d = Self::from_weighted(&pairs)?;
        d.n_samples = samples.len();
        Ok(d)
    }

    /// Negative weights are rejected; the total is normalized to 1.
    pub fn from_weighted(pairs: &[(f64, f64)]) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::InvalidArgument("empty sample".into()));
        }
        if pairs.iter().any(|p| !p.0.is_finite() || !(p.1 >= 0.0)) {
            return Err(Error::InvalidArgument("non-finite atom or negative weight".into()));
        }
        let mut v = pairs.to_vec();
        v.sort_by(|a, b| a.0.total_cmp(&b.0));
        let total: f64 = v.iter().map(|p| p.1).sum();
        if !(total > 0.0) {
            return Err(Error::InvalidArgument("zero total weight".into()));
        }
        let mut atoms: Vec<f64> = Vec::with_capacity(v.len());
        let mut cdf: Vec<f64> = Vec::with_capacity(v.len());
        let mut acc = 0.0;
        for (x, w) in v {
            acc += w / total;
            if atoms.last() == Some(&x) {
                *cdf.last_mut().unwrap() = acc;
            } else {
                atoms.push(x);
                cdf.push(acc);
            }
        }
        Ok(EmpiricalDistribution { atoms, cdf, n_samples: 0 })
    }

    pub fn cdf(&self, x: f64) -> f64 {
        let i = self.atoms.partition_point(|&a| a <= x);
        if i == 0 { 0.0 } else { self.cdf[i - 1] }
    }

    pub fn atoms(&self) -> &[f64] {
        &self.atoms
    }

    pub fn mean(&self) -> f64 {
        let mut prev = 0.0;
        self.atoms
            .iter()
            .zip(&self.cdf)
            .map(|(x, c)| {
                let w = c - prev;
                prev = *c;
                x * w
            })
            .sum()
    }
}

/// sup_x |F_emp(x) - F(x)| for a continuous reference CDF.
pub fn ks_distance(emp: &EmpiricalDistribution, reference: impl Fn(f64) -> f64) -> f64 {
    let mut prev = 0.0;
    let mut d: f64 = 0.0;
    for (&x, &c) in emp.atoms.iter().zip(&emp.cdf) {
        let f = reference(x);
        d = d.max((c - f).abs()).max((prev - f).abs());
        prev = c;
    }
    d
}

/// sup_x |F_a(x) - F_b(x)|.
pub fn ks_two_sample(a: &EmpiricalDistribution, b: &EmpiricalDistribution) -> f64 {
    let mut d: f64 = 0.0;
    for &x in a.atoms.iter().chain(&b.atoms) {
        d = d.max((a.cdf(x) - b.cdf(x)).abs());
    }
    d
}

pub fn standard_normal_cdf(x: f64) -> f64 {
    use statrs::distribution::{ContinuousCDF, Normal};
    Normal::new(0.0, 1.0).expect("valid normal").cdf(x)
}
