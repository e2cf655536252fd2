use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::gibbs::inverse_cdf;
use super::pmf::TopRowPmf;
use crate::signature::Signature;

/// Inverse-CDF sampler over the (truncated, renormalized) pmf. Entries that
/// came out slightly negative from quadrature noise are clamped to zero.
#[derive(Clone, Debug)]
pub struct TopRowSampler {
    support: Vec<Signature>,
    cdf: Vec<f64>,
}

impl TopRowSampler {
    pub fn new(pmf: &TopRowPmf) -> Self {
        let mut acc = 0.0;
        let mut support = Vec::with_capacity(pmf.entries.len());
        let mut cdf = Vec::with_capacity(pmf.entries.len());
        for (mu, p) in &pmf.entries {
            if *p > 0.0 {
                acc += p;
                support.push(mu.clone());
                cdf.push(acc);
            }
        }
        TopRowSampler { support, cdf }
    }

    pub fn draw<R: Rng>(&self, rng: &mut R) -> &Signature {
        &self.support[inverse_cdf(&self.cdf, rng.gen::<f64>())]
    }
}

pub fn sample_top_row(pmf: &TopRowPmf, seed: u64, count: usize) -> Vec<Signature> {
    let s = TopRowSampler::new(pmf);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| s.draw(&mut rng).clone()).collect()
}
