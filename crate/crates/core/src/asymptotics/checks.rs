//! Numerical checks of the critical point and of descent along the contour.

use num_complex::Complex64;
use serde::Serialize;

use super::constants::AsymptoticConstants;
use super::contour::CompositeContour;
use super::phase::Phase;
use crate::error::Result;
use crate::params::ModelParams;

#[derive(Clone, Debug, Serialize)]
pub struct CriticalPointReport {
    pub big_g_at_u: f64,
    pub g_at_u: f64,
    pub big_g_prime_fd: f64,
    pub big_g_prime_closed: f64,
    pub big_g_second_fd: f64,
    pub two_c: f64,
    pub g_prime_fd: f64,
    pub b: f64,
}

fn richardson_first(f: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
    let d = |h: f64| (f(x + h) - f(x - h)) / (2.0 * h);
    (4.0 * d(h / 2.0) - d(h)) / 3.0
}

fn richardson_second(f: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
    let d = |h: f64| (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
    (4.0 * d(h / 2.0) - d(h)) / 3.0
}

pub fn critical_point_report(params: &ModelParams) -> Result<CriticalPointReport> {
    let ph = Phase::new(params)?;
    let c = AsymptoticConstants::new(params)?;
    let u = params.u;
    let big = |x: f64| ph.big_g(Complex64::from(x)).re;
    let small = |x: f64| ph.g(Complex64::from(x)).re;
    Ok(CriticalPointReport {
        big_g_at_u: ph.big_g(Complex64::from(u)).norm(),
        g_at_u: ph.g(Complex64::from(u)).norm(),
        big_g_prime_fd: richardson_first(big, u, 1e-4 * u),
        big_g_prime_closed: ph.big_g_prime(Complex64::from(u)).re,
        big_g_second_fd: richardson_second(big, u, 1e-3 * u),
        two_c: 2.0 * c.c,
        g_prime_fd: richardson_first(small, u, 1e-4 * u),
        b: c.b,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct DescentReport {
    pub points: usize,
    pub max_re_g: f64,
    pub argmax_distance_to_u: f64,
    /// max Re G over sample points with |z - u| > eps (should be negative).
    pub delta: f64,
    pub eps: f64,
    /// Fitted C1 in |G(z) - c (z-u)^2| <= C1 |z-u|^3 on the segment |t| <= eps.
    pub c1: f64,
    pub c: f64,
    /// 2 C1 eps < c.
    pub expansion_feasible: bool,
}

pub fn descent_report(params: &ModelParams, n_points: usize, eps: f64) -> Result<DescentReport> {
    let ph = Phase::new(params)?;
    let c = AsymptoticConstants::new(params)?.c;
    let u = params.u;
    let contour = CompositeContour::new(u);
    let pts = contour.sample_points(n_points);
    ph.check_branch_continuity(&pts)?;
    let mut max_re = f64::NEG_INFINITY;
    let mut arg = Complex64::from(u);
    let mut delta = f64::NEG_INFINITY;
    for &z in &pts {
        let re = ph.big_g(z).re;
        if re > max_re {
            max_re = re;
            arg = z;
        }
        if (z - u).norm() > eps {
            delta = delta.max(re);
        }
    }
    let mut c1: f64 = 0.0;
    for i in 1..=400 {
        let t = eps * i as f64 / 400.0;
        for sgn in [-1.0, 1.0] {
            let w = Complex64::new(0.0, sgn * t);
            let r = (ph.big_g(u + w) - c * w * w).norm() / t.powi(3);
            c1 = c1.max(r);
        }
    }
    Ok(DescentReport {
        points: pts.len(),
        max_re_g: max_re,
        argmax_distance_to_u: (arg - u).norm(),
        delta,
        eps,
        c1,
        c,
        expansion_feasible: 2.0 * c1 * eps < c,
    })
}
