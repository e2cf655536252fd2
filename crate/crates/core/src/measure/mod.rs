//! The measure on interlacing arrays: partition function, exact top-row law,
//! samplers, and the conditional law of lower rows.

mod gibbs;
mod pmf;
mod sample;

pub use gibbs::{
    conditional_lower_rows, gt_patterns, GibbsConditional, GibbsVertexCounts, HalfStrictGTPattern,
    GT_ENUMERATION_CAP,
};
pub use pmf::{partition_z, top_row_pmf, TopRowPmf};
pub use sample::{sample_top_row, TopRowSampler};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::ModelParams;

/// A measure on N rows and M columns.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MeasureSpec {
    pub params: ModelParams,
    pub rows: usize,
    pub columns: usize,
}

impl MeasureSpec {
    pub fn new(params: ModelParams, rows: usize, columns: usize) -> Result<Self> {
        params.row_parameters(rows)?;
        params.column_parameters(columns)?;
        Ok(MeasureSpec { params, rows, columns })
    }
}

/// The measure seen by the first k rows: row parameters u_1..u_k, same columns.
pub fn project_rows(spec: &MeasureSpec, k: usize) -> Result<MeasureSpec> {
    if k == 0 || k > spec.rows {
        return Err(Error::InvalidArgument(format!("cannot project {} rows onto {k}", spec.rows)));
    }
    let mut params = spec.params.clone();
    if let Some(us) = &spec.params.us {
        params = params.with_row_parameters(us[..k].to_vec())?;
    }
    Ok(MeasureSpec { params, rows: k, columns: spec.columns })
}

/// A full sample: top row from the exact law, lower rows from the conditional.
pub fn sample_pattern<R: rand::Rng>(
    sampler: &TopRowSampler,
    conditionals: &mut std::collections::HashMap<crate::Signature, GibbsConditional>,
    params: &ModelParams,
    rng: &mut R,
) -> Result<HalfStrictGTPattern> {
    let top = sampler.draw(rng).clone();
    if !conditionals.contains_key(&top) {
        let g = GibbsConditional::new(&top, params)?;
        conditionals.insert(top.clone(), g);
    }
    Ok(conditionals[&top].sample(rng).clone())
}
