//! The boundary function f(λ; v) of the half-quadrant model: direct sum over
//! strict bottom signatures, and contour-integral representations of f and G^c.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::{ModelParams, SpinParams};
use crate::qseries::{conjugation_constant, q_pochhammer};
use crate::quadrature::{circle_nodes, tensor_sum};
use crate::signature::{strict_signatures, Signature};
use crate::symfunc::transfer::{RowKind, TransferRow};
use crate::symfunc::{chain_dp, Reach, Table};

/// Circle |z| = radius with s < radius < min |v_j|^{-1}.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct CircleContour {
    pub radius: f64,
}

impl CircleContour {
    pub fn new(radius: f64, s: f64, v: &[Complex64]) -> Result<Self> {
        let vmax = v.iter().map(|x| x.norm()).fold(0.0, f64::max);
        let upper = if vmax > 0.0 { 1.0 / vmax } else { f64::INFINITY };
        if !(radius > s && radius < upper) {
            return Err(Error::InvalidArgument(format!(
                "contour radius {radius} must lie in ({s}, {upper})"
            )));
        }
        Ok(CircleContour { radius })
    }

    /// Midpoint of the admissible radius interval (s + 1 if unbounded).
    pub fn midpoint(s: f64, v: &[Complex64]) -> Result<Self> {
        let vmax = v.iter().map(|x| x.norm()).fold(0.0, f64::max);
        let r = if vmax > 0.0 { 0.5 * (s + 1.0 / vmax) } else { s + 1.0 };
        Self::new(r, s, v)
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct ContourValue {
    pub value: Complex64,
    pub nodes: usize,
    /// |I_n - I_{n/2}| at the accepted node count.
    pub last_change: f64,
    /// Relative error estimate: the larger of the last change and the
    /// rounding floor from cancellation, over |value|.
    pub error_estimate: f64,
}

fn init_table(k: usize, upper: &[i64], lower: &[i64], q: f64, s: f64) -> Table {
    let mut t = Table::new();
    let pre = if k.is_multiple_of(2) { 1.0 } else { -1.0 } * q_pochhammer(q, q, k);
    let hi = upper.first().copied().unwrap_or(0);
    for nu in strict_signatures(k, 1, hi) {
        let p = nu.parts();
        if p.iter().zip(upper).any(|(a, b)| a > b) || p.iter().zip(lower).any(|(a, b)| a < b) {
            continue;
        }
        let val = pre * (-s).powi(nu.size() as i32);
        t.insert(p.to_vec(), Complex64::from(val));
    }
    t
}

fn gc_rows(v: &[Complex64]) -> Vec<TransferRow> {
    v.iter().map(|&x| TransferRow::new(RowKind::G, x, true)).collect()
}

/// f(λ; v_1..v_M) from its definition as a sum over strict ν with ν_N >= 1.
pub fn f_direct(lambda: &Signature, v: &[Complex64], params: &ModelParams) -> Complex64 {
    let (q, s) = (params.q, params.s());
    let k = lambda.len();
    if k == 0 {
        return Complex64::new(1.0, 0.0);
    }
    let m = v.len();
    let lower: Vec<i64> = (0..k).map(|i| lambda.parts().get(i + m).copied().unwrap_or(0)).collect();
    let init = init_table(k, lambda.parts(), &lower, q, s);
    if m == 0 {
        return init.get(lambda.parts()).copied().unwrap_or_default();
    }
    let out = chain_dp(init, &gc_rows(v), &params.spin(), Reach::Target(lambda));
    out.get(lambda.parts()).copied().unwrap_or_default()
}

/// f(λ; v) for every λ of length k with λ_1 <= cap.
pub fn f_direct_table(k: usize, v: &[Complex64], params: &ModelParams, cap: i64) -> BTreeMap<Signature, Complex64> {
    let (q, s) = (params.q, params.s());
    let init = init_table(k, &vec![cap; k], &vec![0; k], q, s);
    let out = if v.is_empty() { init } else { chain_dp(init, &gc_rows(v), &params.spin(), Reach::Cap(cap)) };
    out.into_iter().map(|(p, x)| (Signature::from_vec_unchecked(p), x)).collect()
}

/// Loosest relative accuracy a contour value is returned with.
pub const CANCELLATION_LIMIT: f64 = 1e-7;

fn adaptive_circle(
    k: usize,
    radius: f64,
    tol: f64,
    q: f64,
    single: impl Fn(usize, Complex64) -> Complex64,
) -> Result<ContourValue> {
    let n_max: usize = match k {
        0 | 1 => 1 << 16,
        2 => 2048,
        3 => 256,
        _ => 64,
    };
    let mut n = 32usize;
    let mut prev: Option<Complex64> = None;
    loop {
        let nodes = circle_nodes(radius, n);
        let cross = if k >= 2 { nodes.cross_matrix(q) } else { Vec::new() };
        let a: Vec<Vec<Complex64>> = (0..k)
            .map(|i| nodes.z.iter().zip(&nodes.w).map(|(&z, &w)| w * single(i, z)).collect())
            .collect();
        let val = tensor_sum(&a, &cross);
        // rounding floor from cancellation among the summands
        let floor = 1e-14 * a.iter().map(|r| r.iter().map(|x| x.norm()).sum::<f64>()).product::<f64>();
        if let Some(p) = prev {
            let change = (val - p).norm();
            if change <= (tol * val.norm()).max(floor) || change < 1e-300 {
                let error_estimate = change.max(floor) / val.norm();
                // near |z| = 1/v the summands dwarf the integral; refuse rather than return noise
                if error_estimate > tol.max(CANCELLATION_LIMIT) {
                    return Err(Error::Numerical(format!(
                        "cancellation on |z| = {radius} limits relative accuracy to {error_estimate:.1e}; use a radius closer to s"
                    )));
                }
                return Ok(ContourValue { value: val, nodes: n, last_change: change, error_estimate });
            }
        }
        if n >= n_max {
            return Err(Error::Numerical(format!(
                "circle quadrature did not converge with {n} nodes per variable"
            )));
        }
        prev = Some(val);
        n *= 2;
    }
}

/// f(λ; v) as a k-fold integral over |z| = R, k = len(λ), λ_k >= 1.
pub fn f_contour(
    lambda: &Signature,
    v: &[Complex64],
    params: &ModelParams,
    contour: CircleContour,
    tol: f64,
) -> Result<ContourValue> {
    let (q, s) = (params.q, params.s());
    let k = lambda.len();
    if k == 0 || lambda.last() < 1 {
        return Err(Error::InvalidArgument(format!("need λ_k >= 1, got {lambda}")));
    }
    CircleContour::new(contour.radius, s, v)?;
    let parts = lambda.parts();
    let single = |i: usize, z: Complex64| {
        let mut x = ((1.0 - s * z) / (z - s)).powi(parts[i] as i32) / (-s * (1.0 - s * z));
        for &vj in v {
            x *= (1.0 - q * z * vj) / (1.0 - z * vj);
        }
        x
    };
    let mut out = adaptive_circle(k, contour.radius, tol, q, single)?;
    out.value *= conjugation_constant(lambda, q, s) * q_pochhammer(q, q, k);
    Ok(out)
}

/// G^c_λ(v_1..v_N) = G^c_{λ/0^k} as a k-fold integral over |z| = R, N >= k, λ_k >= 1.
pub fn gc_contour(
    lambda: &Signature,
    v: &[Complex64],
    spin: &SpinParams,
    contour: CircleContour,
    tol: f64,
) -> Result<ContourValue> {
    let (q, s) = (spin.q, spin.s);
    let k = lambda.len();
    if k == 0 || lambda.last() < 1 || v.len() < k {
        return Err(Error::InvalidArgument(format!(
            "need λ_k >= 1 and at least k = {k} variables, got {lambda} with {}",
            v.len()
        )));
    }
    if s <= 1.0 {
        return Err(Error::InvalidArgument("contour formula needs s > 1".into()));
    }
    CircleContour::new(contour.radius, s, v)?;
    let parts = lambda.parts();
    let single = |i: usize, z: Complex64| {
        let mut x = ((1.0 - s * z) / (z - s)).powi(parts[i] as i32) / ((1.0 - s * z) * (z - s));
        for &vj in v {
            x *= (1.0 - q * z * vj) / (1.0 - z * vj);
        }
        x
    };
    let mut out = adaptive_circle(k, contour.radius, tol, q, single)?;
    out.value *= conjugation_constant(lambda, q, s) * q_pochhammer(q, q, k);
    Ok(out)
}
