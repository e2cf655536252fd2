//! Half-strict Gelfand-Tsetlin patterns and the conditional law of the lower
//! rows given the top row.
//!
//! Rows are stored as [`Signature`]s, i.e. in decreasing order; row j has j
//! strictly decreasing parts and row j interlaces weakly into row j+1.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::ModelParams;
use crate::paths::{Family, PathCollection};
use crate::signature::Signature;
use crate::weights::six_vertex_weights;

pub const GT_ENUMERATION_CAP: usize = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct HalfStrictGTPattern {
    rows: Vec<Signature>,
}

impl HalfStrictGTPattern {
    pub fn new(rows: Vec<Signature>) -> Result<Self> {
        let p = HalfStrictGTPattern { rows };
        if let Some(msg) = p.violation() {
            return Err(Error::InvalidArgument(msg));
        }
        Ok(p)
    }

    /// Description of the first broken invariant, if any.
    pub fn violation(&self) -> Option<String> {
        for (j, row) in self.rows.iter().enumerate() {
            if row.len() != j + 1 {
                return Some(format!("row {} has length {}", j + 1, row.len()));
            }
            if !row.is_strict() {
                return Some(format!("row {} = {row} is not strict", j + 1));
            }
            if j > 0 && !row.interlaces_over(&self.rows[j - 1]) {
                return Some(format!("row {} = {} does not interlace into {row}", j, self.rows[j - 1]));
            }
        }
        None
    }

    pub fn depth(&self) -> usize {
        self.rows.len()
    }

    /// Row j, 1-based.
    pub fn row(&self, j: usize) -> &Signature {
        &self.rows[j - 1]
    }

    pub fn rows(&self) -> &[Signature] {
        &self.rows
    }

    pub fn top(&self) -> &Signature {
        self.rows.last().expect("patterns have at least one row")
    }

    /// The path collection in P^λ_k corresponding to this pattern.
    pub fn to_paths(&self) -> Result<PathCollection> {
        let mut sections = vec![Signature::empty()];
        sections.extend(self.rows.iter().cloned());
        PathCollection::from_sections(Family::F, sections)
    }

    pub fn vertex_counts(&self) -> Result<GibbsVertexCounts> {
        let pc = self.to_paths()?;
        let width = self.top().first().max(0) as usize;
        let mut n = [0u64; 6];
        for y in 1..=pc.rows {
            for x in 1..=width {
                let v = pc.vertex(x, y);
                let i = v.six_vertex_index().ok_or_else(|| {
                    Error::InvalidVertex(format!("non six-vertex type at ({x},{y})"))
                })?;
                n[i] += 1;
            }
        }
        Ok(GibbsVertexCounts { n })
    }
}

/// Counts N1..N6 of the six vertex types in the window [1, λ_max] x [1, k],
/// in the order of [`six_vertex_weights`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GibbsVertexCounts {
    pub n: [u64; 6],
}

impl GibbsVertexCounts {
    pub fn total(&self) -> u64 {
        self.n.iter().sum()
    }

    pub fn log_weight(&self, w: &[f64; 6]) -> f64 {
        self.n.iter().zip(w).map(|(&c, &wi)| c as f64 * wi.ln()).sum()
    }
}

/// GT_λ: all half-strict patterns with top row λ.
pub fn gt_patterns(lambda: &Signature) -> Result<Vec<HalfStrictGTPattern>> {
    if !lambda.is_strict() || lambda.is_empty() || lambda.last() < 1 {
        return Err(Error::InvalidSignature(format!("top row must be strict with positive parts, got {lambda}")));
    }
    let mut out = Vec::new();
    let mut stack = vec![lambda.clone()];
    fn rec(stack: &mut Vec<Signature>, out: &mut Vec<HalfStrictGTPattern>) -> Result<()> {
        let cur = stack.last().unwrap().clone();
        if cur.len() == 1 {
            let mut rows = stack.clone();
            rows.reverse();
            out.push(HalfStrictGTPattern { rows });
            if out.len() > GT_ENUMERATION_CAP {
                return Err(Error::Budget(format!("|GT_λ| exceeds {GT_ENUMERATION_CAP}")));
            }
            return Ok(());
        }
        let p = cur.parts();
        let mut child = vec![0i64; p.len() - 1];
        fn fill(i: usize, p: &[i64], child: &mut Vec<i64>, stack: &mut Vec<Signature>, out: &mut Vec<HalfStrictGTPattern>) -> Result<()> {
            if i == child.len() {
                stack.push(Signature::from_vec_unchecked(child.clone()));
                let r = rec(stack, out);
                stack.pop();
                return r;
            }
            let hi = if i == 0 { p[0] } else { p[i].min(child[i - 1] - 1) };
            let mut c = hi;
            while c >= p[i + 1] {
                child[i] = c;
                fill(i + 1, p, child, stack, out)?;
                c -= 1;
            }
            Ok(())
        }
        fill(0, p, &mut child, stack, out)
    }
    rec(&mut stack, &mut out)?;
    out.sort();
    Ok(out)
}

/// Conditional law of the pattern given its top row: probability proportional
/// to prod w_i^{N_i} with the six-vertex weights at the row parameter u.
#[derive(Clone, Debug)]
pub struct GibbsConditional {
    pub top: Signature,
    pub patterns: Vec<HalfStrictGTPattern>,
    pub probabilities: Vec<f64>,
    cdf: Vec<f64>,
}

impl GibbsConditional {
    pub fn new(lambda: &Signature, params: &ModelParams) -> Result<Self> {
        if lambda.len() > 4 {
            return Err(Error::InvalidArgument(format!("conditional sampling supports k <= 4, got {}", lambda.len())));
        }
        if !params.is_homogeneous() {
            return Err(Error::InvalidArgument("the Gibbs conditional uses homogeneous row parameters".into()));
        }
        let w = six_vertex_weights(params, params.u);
        let patterns = gt_patterns(lambda)?;
        let logs: Vec<f64> = patterns
            .iter()
            .map(|p| p.vertex_counts().map(|c| c.log_weight(&w)))
            .collect::<Result<_>>()?;
        let mx = logs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let un: Vec<f64> = logs.iter().map(|l| (l - mx).exp()).collect();
        let total: f64 = un.iter().sum();
        let probabilities: Vec<f64> = un.iter().map(|x| x / total).collect();
        let mut acc = 0.0;
        let cdf = probabilities
            .iter()
            .map(|p| {
                acc += p;
                acc
            })
            .collect();
        Ok(GibbsConditional { top: lambda.clone(), patterns, probabilities, cdf })
    }

    pub fn sample<R: Rng>(&self, rng: &mut R) -> &HalfStrictGTPattern {
        let i = inverse_cdf(&self.cdf, rng.gen::<f64>());
        &self.patterns[i]
    }

    pub fn probability(&self, p: &HalfStrictGTPattern) -> f64 {
        self.patterns.binary_search(p).map(|i| self.probabilities[i]).unwrap_or(0.0)
    }
}

pub(crate) fn inverse_cdf(cdf: &[f64], r: f64) -> usize {
    let t = r * cdf.last().copied().unwrap_or(1.0);
    cdf.partition_point(|&c| c <= t).min(cdf.len() - 1)
}

/// One draw of the lower rows given top row λ.
pub fn conditional_lower_rows(lambda: &Signature, params: &ModelParams, seed: u64) -> Result<HalfStrictGTPattern> {
    let g = GibbsConditional::new(lambda, params)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(g.sample(&mut rng).clone())
}
