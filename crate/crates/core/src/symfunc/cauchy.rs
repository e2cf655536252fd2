//! Truncated checks of the Cauchy and skew Cauchy identities.

use num_complex::Complex64;
use serde::Serialize;

use super::{f_eval, f_table, gc_eval, gc_table};
use crate::error::{Error, Result};
use crate::params::SpinParams;
use crate::qseries::q_pochhammer;
use crate::signature::{signatures_bounded, Signature};

#[derive(Clone, Debug, Serialize)]
pub struct CauchyReport {
    pub lhs: [f64; 2],
    pub rhs: [f64; 2],
    pub rel_error: f64,
    /// Largest first part kept in the left-hand sum.
    pub truncation: i64,
    /// Geometric estimate of the discarded tail, relative to |rhs|.
    pub tail_estimate: f64,
    pub pass: bool,
}

const MAX_CAP: i64 = 2000;

fn rho(x: Complex64, s: f64) -> Complex64 {
    (x - s) / (1.0 - s * x)
}

/// Sums prod_{i,j} over the paired tables keyed by first part, growing the cap
/// until the tail estimate falls below `tol/10` of `scale`.
fn truncated_pair_sum(
    table_pair: impl Fn(i64) -> Vec<(i64, Complex64)>,
    r_theory: f64,
    scale: impl Fn() -> f64,
    tol: f64,
    start: i64,
) -> Result<(Complex64, i64, f64)> {
    if !(r_theory < 1.0) {
        return Err(Error::InvalidArgument(format!(
            "series ratio {r_theory} >= 1: parameters outside the convergence region"
        )));
    }
    let mut cap = start.max(6);
    loop {
        let terms = table_pair(cap);
        let mut shells = vec![0.0; cap as usize + 1];
        let mut sum = Complex64::new(0.0, 0.0);
        for (first, t) in &terms {
            shells[*first as usize] += t.norm();
            sum += t;
        }
        let c = cap as usize;
        let mut r = r_theory;
        for l in c - 2..=c {
            if shells[l - 1] > 0.0 {
                r = r.max(shells[l] / shells[l - 1]);
            }
        }
        let tail = if r < 1.0 { shells[c] * r / (1.0 - r) } else { f64::INFINITY };
        let rel_tail = tail / scale().max(f64::MIN_POSITIVE);
        if rel_tail <= tol / 10.0 {
            return Ok((sum, cap, rel_tail));
        }
        if cap >= MAX_CAP {
            return Err(Error::Budget(format!("truncation cap {MAX_CAP} reached")));
        }
        cap = (cap * 2).min(MAX_CAP);
    }
}

fn start_cap(r: f64, tol: f64) -> i64 {
    ((tol / 100.0).ln() / r.ln()).ceil().max(8.0) as i64 + 4
}

/// Σ_ν F_ν(u) G^c_ν(v) against (q;q)_N prod_i 1/(1-s u_i) prod_{i,j} (1-q u_i v_j)/(1-u_i v_j).
pub fn verify_cauchy(u: &[Complex64], v: &[Complex64], spin: &SpinParams, tol: f64) -> Result<CauchyReport> {
    let (q, s) = (spin.q, spin.s);
    let n = u.len();
    let mut rhs = Complex64::from(q_pochhammer(q, q, n));
    for &ui in u {
        rhs /= 1.0 - s * ui;
        for &vj in v {
            rhs *= (1.0 - q * ui * vj) / (1.0 - ui * vj);
        }
    }
    let r_th = u
        .iter()
        .flat_map(|&a| v.iter().map(move |&b| (rho(a, s) * rho(b, s)).norm()))
        .fold(0.0, f64::max);
    let zeros = Signature::zeros(n);
    let pair = |cap: i64| {
        let ft = f_table(&Signature::empty(), u, spin, cap);
        let gt = gc_table(&zeros, v, spin, cap);
        ft.iter()
            .filter_map(|(nu, fv)| gt.get(nu).map(|gv| (nu.first(), fv * gv)))
            .collect()
    };
    let (lhs, cap, tail) = truncated_pair_sum(pair, r_th, || rhs.norm(), tol, start_cap(r_th, tol))?;
    let rel_error = (lhs - rhs).norm() / rhs.norm();
    Ok(CauchyReport {
        lhs: [lhs.re, lhs.im],
        rhs: [rhs.re, rhs.im],
        rel_error,
        truncation: cap,
        tail_estimate: tail,
        pass: rel_error <= tol,
    })
}

/// Σ_κ G^c_{κ/λ}(v) F_{κ/ν}(u) against
/// prod_{i,j} (1-q u_i v_j)/(1-u_i v_j) Σ_μ F_{λ/μ}(u) G^c_{ν/μ}(v).
pub fn verify_skew_cauchy(
    lambda: &Signature,
    nu: &Signature,
    u: &[Complex64],
    v: &[Complex64],
    spin: &SpinParams,
    tol: f64,
) -> Result<CauchyReport> {
    if lambda.len() != nu.len() + u.len() {
        return Err(Error::InvalidArgument("need len(λ) = len(ν) + len(u)".into()));
    }
    let (q, s) = (spin.q, spin.s);
    let mut pi = Complex64::new(1.0, 0.0);
    for &ui in u {
        for &vj in v {
            pi *= (1.0 - q * ui * vj) / (1.0 - ui * vj);
        }
    }
    let mut inner = Complex64::new(0.0, 0.0);
    for mu in signatures_bounded(nu.len(), nu.first().min(lambda.first())) {
        let a = f_eval(lambda, &mu, u, spin)?;
        if a == Complex64::new(0.0, 0.0) {
            continue;
        }
        inner += a * gc_eval(nu, &mu, v, spin)?;
    }
    let rhs = pi * inner;
    let r_th = u
        .iter()
        .flat_map(|&a| v.iter().map(move |&b| (rho(a, s) * rho(b, s)).norm()))
        .fold(0.0, f64::max);
    let pair = |cap: i64| {
        let gt = gc_table(lambda, v, spin, cap);
        let ft = f_table(nu, u, spin, cap);
        gt.iter()
            .filter_map(|(k, gv)| ft.get(k).map(|fv| (k.first(), fv * gv)))
            .collect()
    };
    let start = start_cap(r_th, tol) + lambda.first().max(nu.first());
    let (lhs, cap, tail) = truncated_pair_sum(pair, r_th, || rhs.norm(), tol, start)?;
    let rel_error = (lhs - rhs).norm() / rhs.norm();
    Ok(CauchyReport {
        lhs: [lhs.re, lhs.im],
        rhs: [rhs.re, rhs.im],
        rel_error,
        truncation: cap,
        tail_estimate: tail,
        pass: rel_error <= tol,
    })
}
