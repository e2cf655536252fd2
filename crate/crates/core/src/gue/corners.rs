use std::f64::consts::PI;

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Ordered eigenvalues of the leading r x r minors, r = 1..k; row r ascending.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CornersSample {
    pub rows: Vec<Vec<f64>>,
}

impl CornersSample {
    pub fn depth(&self) -> usize {
        self.rows.len()
    }

    /// Number of (r, i) with λ^{r+1}_i <= λ^r_i <= λ^{r+1}_{i+1} broken.
    pub fn interlacing_violations(&self) -> usize {
        let mut bad = 0;
        for r in 0..self.rows.len().saturating_sub(1) {
            let (lo, hi) = (&self.rows[r], &self.rows[r + 1]);
            for (i, &x) in lo.iter().enumerate() {
                if !(hi[i] <= x && x <= hi[i + 1]) {
                    bad += 1;
                }
            }
        }
        bad
    }
}

/// Hermitian matrix with density proportional to exp(-Tr X²/2): real N(0,1)
/// diagonal, complex off-diagonal with E|X_ij|² = 1.
pub fn gue_matrix<R: rand::Rng>(k: usize, rng: &mut R) -> DMatrix<Complex64> {
    let mut m = DMatrix::<Complex64>::zeros(k, k);
    let h = std::f64::consts::FRAC_1_SQRT_2;
    for i in 0..k {
        let d: f64 = StandardNormal.sample(rng);
        m[(i, i)] = Complex64::new(d, 0.0);
        for j in i + 1..k {
            let re: f64 = StandardNormal.sample(rng);
            let im: f64 = StandardNormal.sample(rng);
            let z = Complex64::new(re * h, im * h);
            m[(i, j)] = z;
            m[(j, i)] = z.conj();
        }
    }
    m
}

pub fn corners_of(m: &DMatrix<Complex64>) -> CornersSample {
    let k = m.nrows();
    let rows = (1..=k)
        .map(|r| {
            let minor = m.view((0, 0), (r, r)).into_owned();
            let mut ev: Vec<f64> = SymmetricEigen::new(minor).eigenvalues.iter().copied().collect();
            ev.sort_by(f64::total_cmp);
            ev
        })
        .collect();
    CornersSample { rows }
}

pub fn sample_gue_corners(k: usize, seed: u64) -> CornersSample {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    corners_of(&gue_matrix(k.max(1), &mut rng))
}

const BLOCK: usize = 4096;

/// `count` independent samples. Block b draws from ChaCha stream b of `seed`,
/// so the output does not depend on the number of worker threads.
pub fn sample_gue_corners_batch(k: usize, count: usize, seed: u64) -> Vec<CornersSample> {
    let blocks = count.div_ceil(BLOCK);
    (0..blocks)
        .into_par_iter()
        .map(|b| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(b as u64);
            let n = BLOCK.min(count - b * BLOCK);
            (0..n).map(|_| corners_of(&gue_matrix(k.max(1), &mut rng))).collect::<Vec<_>>()
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

/// Joint density of the ordered eigenvalues x_1 < ... < x_k of a k x k GUE
/// matrix: (2π)^{-k/2} / prod_{i<k} i! * prod_{i<j} (x_j - x_i)² * prod e^{-x_i²/2}.
pub fn hermite_density(x: &[f64]) -> f64 {
    let k = x.len();
    if x.windows(2).any(|w| !(w[0] < w[1])) {
        return 0.0;
    }
    let mut norm = (2.0 * PI).powf(-(k as f64) / 2.0);
    let mut fact = 1.0;
    for i in 1..k {
        fact *= i as f64;
        norm /= fact;
    }
    let mut v = 1.0;
    for i in 0..k {
        for j in i + 1..k {
            v *= (x[j] - x[i]).powi(2);
        }
    }
    norm * v * (-x.iter().map(|t| t * t).sum::<f64>() / 2.0).exp()
}
