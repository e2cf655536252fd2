//! The normalized top-row quantities A_M (vertex side) and B_M (boundary side)
//! and their Gaussian limits.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use super::constants::AsymptoticConstants;
use super::engine::DescentIntegrator;
use crate::error::{Error, Result};
use crate::params::ModelParams;
use crate::signature::Signature;
use crate::symfunc::f_eval_gauged;

pub(crate) fn binom2(k: usize) -> i32 {
    (k * k.saturating_sub(1) / 2) as i32
}

/// λ_i = floor(aM + scale √M x_{k-i+1}) for increasing x_1 < ... < x_k.
pub fn lambda_of_x(x: &[f64], m: usize, a: f64, scale: f64) -> Result<Signature> {
    if x.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::InvalidArgument(format!("x = {x:?} must be strictly increasing")));
    }
    let mf = m as f64;
    let parts: Vec<i64> = x.iter().rev().map(|&xi| (a * mf + scale * mf.sqrt() * xi).floor() as i64).collect();
    let lam = Signature::new(parts)?;
    if !lam.is_strict() || lam.last() < 1 {
        return Err(Error::InvalidArgument(format!(
            "M = {m} too small: {lam} is not strict with positive parts"
        )));
    }
    Ok(lam)
}

/// (1-q)/(1-su), (1-1/q)u/(1-su), (u-s)/(1-su).
fn typical_factors(p: &ModelParams) -> (f64, f64, f64) {
    let (q, s, u) = (p.q, p.s(), p.u);
    let den = 1.0 - s * u;
    ((1.0 - q) / den, (1.0 - 1.0 / q) * u / den, (u - s) / den)
}

/// F_μ(u,...,u) with the typical weight and M^{C(k,2)/2} divided out.
pub fn a_m(mu: &Signature, m: usize, params: &ModelParams) -> Result<f64> {
    let k = mu.len();
    let (t1, t2, rho) = typical_factors(params);
    let u = vec![Complex64::from(params.u); k];
    let fhat = f_eval_gauged(mu, &Signature::empty(), &u, &params.spin(), Complex64::from(1.0 / rho))?;
    Ok(fhat.re
        * (m as f64).powf(-(binom2(k) as f64) / 2.0)
        * t1.powi(-binom2(k + 1))
        * t2.powi(-binom2(k))
        * rho.powi(binom2(k)))
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct DescentValue {
    pub value: f64,
    pub imag: f64,
    pub nodes_per_piece: usize,
}

/// The descent-contour integral with prefactor p(z), adaptive in node count.
pub(crate) fn descent_integral(mu: &[i64], m: usize, params: &ModelParams, tol: f64) -> Result<DescentValue> {
    let k = mu.len();
    let v = vec![params.v; m];
    let n_max = match k {
        1 => 8192,
        2 => 1024,
        _ => 128,
    };
    let mut n = 32;
    let mut prev: Option<Complex64> = None;
    loop {
        let eng = DescentIntegrator::new(params.q, params.s(), params.u, &v, k, n);
        let val = eng.integral(mu);
        let floor = 1e-14 * eng.base.iter().map(|b| b.norm()).sum::<f64>().powi(k as i32);
        if let Some(p) = prev {
            let change = (val - p).norm();
            if change <= (tol * val.norm()).max(floor) {
                return Ok(DescentValue { value: val.re, imag: val.im, nodes_per_piece: n });
            }
        }
        if n >= n_max {
            return Err(Error::Numerical(format!("descent quadrature unconverged at {n} nodes")));
        }
        prev = Some(val);
        n *= 2;
    }
}

/// f(μ; v^M) times the typical weight and M^{C(k,2)/2}, divided by Z.
pub fn b_m(mu: &Signature, m: usize, params: &ModelParams, tol: f64) -> Result<DescentValue> {
    let k = mu.len();
    if k == 0 || !mu.is_strict() || mu.last() < 1 {
        return Err(Error::InvalidArgument(format!("need strict μ with μ_k >= 1, got {mu}")));
    }
    let (t1, t2, rho) = typical_factors(params);
    let pre = (m as f64).powf(binom2(k) as f64 / 2.0) * t1.powi(binom2(k + 1)) * t2.powi(binom2(k)) * rho.powi(-binom2(k));
    let mut out = descent_integral(mu.parts(), m, params, tol)?;
    out.value *= pre;
    out.imag *= pre;
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct ScaledValue {
    pub m: usize,
    pub x: Vec<f64>,
    pub lambda: Signature,
    pub value: f64,
    pub limit: f64,
    pub nodes_per_piece: usize,
}

/// d^k M^{k/2} B_M at λ_i = floor(aM + d √M x_{k-i+1}).
pub fn b_m_contour(x: &[f64], m: usize, params: &ModelParams, tol: f64) -> Result<ScaledValue> {
    let c = AsymptoticConstants::new(params)?;
    let k = x.len();
    let lambda = lambda_of_x(x, m, c.a, c.d)?;
    let b = b_m(&lambda, m, params, tol)?;
    Ok(ScaledValue {
        m,
        x: x.to_vec(),
        value: c.d.powi(k as i32) * (m as f64).powf(k as f64 / 2.0) * b.value,
        limit: b_m_limit(x, c.d),
        lambda,
        nodes_per_piece: b.nodes_per_piece,
    })
}

/// A_M at λ_i = floor(aM + √M x_{k-i+1}).
pub fn a_m_scaled(x: &[f64], m: usize, params: &ModelParams) -> Result<ScaledValue> {
    let c = AsymptoticConstants::new(params)?;
    let lambda = lambda_of_x(x, m, c.a, 1.0)?;
    Ok(ScaledValue {
        m,
        x: x.to_vec(),
        value: a_m(&lambda, m, params)?,
        limit: a_m_limit(x),
        lambda,
        nodes_per_piece: 0,
    })
}

/// prod_{i<j} (x_j - x_i)/(j - i).
pub fn a_m_limit(x: &[f64]) -> f64 {
    let mut acc = 1.0;
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            acc *= (x[j] - x[i]) / (j - i) as f64;
        }
    }
    acc
}

/// d^{-C(k,2)} (2π)^{-k/2} prod_{i<j} (x_j - x_i) prod_i e^{-x_i²/2}.
pub fn b_m_limit(x: &[f64], d: f64) -> f64 {
    let k = x.len();
    let mut acc = d.powi(-binom2(k)) * (2.0 * PI).powf(-(k as f64) / 2.0);
    for i in 0..k {
        acc *= (-x[i] * x[i] / 2.0).exp();
        for j in i + 1..k {
            acc *= x[j] - x[i];
        }
    }
    acc
}
