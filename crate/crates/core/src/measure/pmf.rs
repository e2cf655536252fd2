//! Exact law of the top row λ^k of the half-quadrant model:
//! P(λ^k = μ) = F_μ(u_1..u_k) f(μ; v_1..v_M) / Z.
//!
//! f is evaluated on the steepest-descent contour (see
//! [`crate::asymptotics::DescentIntegrator`]) where the integrand is bounded
//! uniformly in μ and M, and F with the horizontal gauge 1/ρ(u), so no factor
//! ρ^{|μ|} ever has to be formed.

use std::collections::HashMap;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::asymptotics::DescentIntegrator;
use crate::error::{Error, Result};
use crate::params::ModelParams;
use crate::qseries::q_pochhammer;
use crate::signature::Signature;
use crate::symfunc::{RowKernel, RowKind, TransferRow};

#[derive(Clone, Debug, Serialize)]
pub struct TopRowPmf {
    pub k: usize,
    pub m: usize,
    /// Strict μ with μ_k >= 1 and μ_1 <= truncation, in lexicographic order.
    pub entries: Vec<(Signature, f64)>,
    pub mass: f64,
    pub truncation: i64,
    /// Geometric estimate of the mass beyond the truncation.
    pub tail_estimate: f64,
    pub nodes_per_piece: usize,
    /// Largest |p| among entries that came out negative (quadrature noise).
    pub most_negative: f64,
    pub max_imag: f64,
}

/// Z = (q;q)_k prod_i (1 - u_i/s)/(1 - s u_i) prod_{i,j} (1 - q u_i v_j)/(1 - u_i v_j).
pub fn partition_z(params: &ModelParams, k: usize, m: usize) -> Result<f64> {
    let (q, s) = (params.q, params.s());
    let us = params.row_parameters(k)?;
    let vs = params.column_parameters(m)?;
    let mut z = q_pochhammer(q, q, k);
    for &u in &us {
        z *= (1.0 - u / s) / (1.0 - s * u);
        for &v in &vs {
            z *= (1.0 - q * u * v) / (1.0 - u * v);
        }
    }
    Ok(z)
}

const MAX_TRUNCATION: i64 = 20_000;

struct Setup {
    k: usize,
    us: Vec<f64>,
    vs: Vec<f64>,
    u0: f64,
    gauge: f64,
    /// Constant relating the engine normalization at u0 to the actual rows.
    log_const: f64,
}

impl Setup {
    fn new(params: &ModelParams, k: usize, m: usize) -> Result<Self> {
        let s = params.s();
        let q = params.q;
        let us = params.row_parameters(k)?;
        let vs = params.column_parameters(m)?;
        // Centre at the largest row parameter so that the gauged F decays in every row.
        let u0 = us.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let e = |u: f64, v: f64| (1.0 - q * u * v) / (1.0 - u * v);
        let phi = |u: f64| (1.0 - s * u) / (1.0 - u / s);
        let mut log_const = 0.0;
        for &u in &us {
            log_const += (phi(u) / phi(u0)).ln();
            for &v in &vs {
                log_const += (e(u0, v) / e(u, v)).ln();
            }
        }
        Ok(Setup { k, us, vs, u0, gauge: (1.0 - s * u0) / (u0 - s), log_const })
    }

}

/// F_κ(u_1..u_j) ρ(u0)^{-|κ|} for j < k and every κ with κ_1 up to the
/// current level, grown one level at a time so each value is computed once.
/// Top-row values (j = k) are produced on demand for strict μ only.
struct FhatTable {
    kernels: Vec<RowKernel>,
    /// tables[j-1] holds signatures of length j.
    tables: Vec<HashMap<Vec<i64>, f64>>,
    level: i64,
    top: HashMap<Vec<i64>, f64>,
}

impl FhatTable {
    fn new(setup: &Setup, params: &ModelParams) -> Self {
        let spin = params.spin();
        let kernels = setup
            .us
            .iter()
            .map(|&u| {
                let row = TransferRow::new(RowKind::F, Complex64::from(u), false).with_gauge(Complex64::from(setup.gauge));
                RowKernel::new(&row, &spin)
            })
            .collect();
        FhatTable { kernels, tables: vec![HashMap::new(); setup.k - 1], level: -1, top: HashMap::new() }
    }

    /// Σ over ν ≺ κ of table(ν) times the row-j weight, with table j-1.
    fn value(&self, kappa: &[i64]) -> f64 {
        let j = kappa.len();
        let kernel = &self.kernels[j - 1];
        if j == 1 {
            return kernel.weight(&[], kappa).re;
        }
        let prev = &self.tables[j - 2];
        let mut nu = vec![0i64; j - 1];
        let mut acc = 0.0;
        fn rec(i: usize, kappa: &[i64], nu: &mut [i64], prev: &HashMap<Vec<i64>, f64>, kernel: &RowKernel, acc: &mut f64) {
            if i == nu.len() {
                if let Some(v) = prev.get(&nu[..]) {
                    *acc += v * kernel.weight(nu, kappa).re;
                }
                return;
            }
            for x in kappa[i + 1]..=kappa[i] {
                nu[i] = x;
                rec(i + 1, kappa, nu, prev, kernel, acc);
            }
        }
        rec(0, kappa, &mut nu, prev, kernel, &mut acc);
        acc
    }

    fn raise_to(&mut self, level: i64) {
        while self.level < level {
            self.level += 1;
            let l = self.level;
            for j in 1..self.kernels.len() {
                let mut fresh = Vec::new();
                let mut kappa = vec![0i64; j];
                kappa[0] = l;
                fn each(i: usize, kappa: &mut Vec<i64>, f: &mut impl FnMut(&[i64])) {
                    if i == kappa.len() {
                        f(kappa);
                        return;
                    }
                    for x in 0..=kappa[i - 1] {
                        kappa[i] = x;
                        each(i + 1, kappa, f);
                    }
                }
                each(1, &mut kappa, &mut |k| fresh.push((k.to_vec(), self.value(k))));
                self.tables[j - 1].extend(fresh);
            }
        }
    }

    fn ensure(&mut self, shell: &[(Vec<i64>, Complex64)]) {
        for (mu, _) in shell {
            if !self.top.contains_key(mu) {
                self.raise_to(mu[0]);
                let v = self.value(mu);
                self.top.insert(mu.clone(), v);
            }
        }
    }

    fn get(&self, mu: &[i64]) -> f64 {
        self.top[mu]
    }
}

/// Integrals for every strict μ with μ_1 = level, given single-variable
/// columns a_m (m = 1..=level) and the cross matrix. Batched for k <= 3.
struct ShellIntegrals {
    k: usize,
    n: usize,
    a: Vec<Vec<Complex64>>, // a[m] for m = 0..=level
    ca: Vec<Vec<Complex64>>, // (C a_m) for k = 2
    /// For k = 3: w3[m2][m3][j1] = Σ_{j2,j3} a_{m2}(j2) a_{m3}(j3) C[j1][j2] C[j1][j3] C[j2][j3], m3 < m2.
    w3: Vec<Vec<Vec<Complex64>>>,
    eng: DescentIntegrator,
}

impl ShellIntegrals {
    fn new(eng: DescentIntegrator) -> Self {
        let n = eng.len();
        ShellIntegrals { k: eng.k, n, a: Vec::new(), ca: Vec::new(), w3: Vec::new(), eng }
    }

    fn extend_to(&mut self, level: i64) {
        let n = self.n;
        while self.a.len() as i64 <= level {
            let m = self.a.len() as i64;
            let am = self.eng.single(m);
            let c = &self.eng.cross;
            if self.k == 2 {
                let v: Vec<Complex64> = (0..n)
                    .into_par_iter()
                    .map(|j| c[j * n..(j + 1) * n].iter().zip(&am).map(|(x, y)| x * y).sum())
                    .collect();
                self.ca.push(v);
            }
            if self.k == 3 {
                // B[j1][j3] = Σ_j2 a_m(j2) C[j1][j2] C[j2][j3]
                let b: Vec<Complex64> = (0..n * n)
                    .into_par_iter()
                    .map(|idx| {
                        let (j1, j3) = (idx / n, idx % n);
                        (0..n).map(|j2| am[j2] * c[j1 * n + j2] * c[j2 * n + j3]).sum()
                    })
                    .collect();
                let row: Vec<Vec<Complex64>> = (0..m as usize)
                    .into_par_iter()
                    .map(|m3| {
                        let a3 = &self.a[m3];
                        (0..n)
                            .map(|j1| (0..n).map(|j3| b[j1 * n + j3] * a3[j3] * c[j1 * n + j3]).sum())
                            .collect()
                    })
                    .collect();
                self.w3.push(row);
            }
            self.a.push(am);
        }
    }

    /// (μ, integral) for every strict μ with μ_1 = level and μ_k >= 1.
    fn shell(&mut self, level: i64) -> Vec<(Vec<i64>, Complex64)> {
        self.extend_to(level);
        let top = &self.a[level as usize];
        match self.k {
            1 => vec![(vec![level], top.iter().sum())],
            2 => (1..level)
                .rev()
                .map(|m2| {
                    let val = top.iter().zip(&self.ca[m2 as usize]).map(|(x, y)| x * y).sum();
                    (vec![level, m2], val)
                })
                .collect(),
            3 => (2..level)
                .rev()
                .flat_map(|m2| (1..m2).rev().map(move |m3| (m2, m3)))
                .map(|(m2, m3)| {
                    let w = &self.w3[m2 as usize][m3 as usize];
                    (vec![level, m2, m3], top.iter().zip(w).map(|(x, y)| x * y).sum())
                })
                .collect(),
            _ => unreachable!(),
        }
    }
}

struct Pass {
    entries: Vec<(Signature, f64)>,
    mass: f64,
    truncation: i64,
    tail: f64,
    max_imag: f64,
}

/// One sweep over shells μ_1 = k, k+1, ... at a fixed node count. Returns
/// `None` when a probability comes out below -tol or the shell masses stop
/// decaying past the median; both are how under-resolved quadrature shows up
/// at large μ.
fn run_pass(
    setup: &Setup,
    params: &ModelParams,
    n: usize,
    tol: f64,
    fhat: &mut FhatTable,
) -> Result<Option<Pass>> {
    let eng = DescentIntegrator::new(params.q, params.s(), setup.u0, &setup.vs, setup.k, n);
    let mut sh = ShellIntegrals::new(eng);
    let scale = setup.log_const.exp();
    let mut entries = Vec::new();
    let (mut mass, mut max_imag) = (0.0, 0.0f64);
    let mut shells: Vec<f64> = Vec::new();
    let mut smallest = f64::INFINITY;
    let mut level = setup.k as i64;
    loop {
        let raw = sh.shell(level);
        fhat.ensure(&raw);
        let mut shell_mass = 0.0;
        for (p, integral) in raw {
            let f = fhat.get(&p);
            let prob = f * integral.re * scale;
            if prob < -tol {
                return Ok(None);
            }
            max_imag = max_imag.max((f * integral.im * scale).abs());
            shell_mass += prob.abs();
            mass += prob;
            entries.push((Signature::from_vec_unchecked(p), prob));
        }
        shells.push(shell_mass);
        if !mass.is_finite() || mass > 1.5 {
            return Ok(None);
        }
        if mass > 0.5 {
            if shell_mass > 2.0 * smallest && shell_mass > tol / 100.0 {
                return Ok(None);
            }
            smallest = smallest.min(shell_mass);
            let l = shells.len();
            if l >= 3 {
                let r = (shells[l - 1] / shells[l - 2]).max(shells[l - 2] / shells[l - 3]);
                if r < 1.0 {
                    let tail = shells[l - 1] * r / (1.0 - r);
                    if tail < tol / 10.0 {
                        return Ok(Some(Pass { entries, mass, truncation: level, tail, max_imag }));
                    }
                }
            }
        }
        if level >= MAX_TRUNCATION {
            return Err(Error::Budget(format!("pmf truncation exceeded {MAX_TRUNCATION}")));
        }
        level += 1;
    }
}

/// Exact top-row law for k <= 3 rows and M columns, truncated where the
/// geometric tail estimate drops below tol/10. Node count doubles until two
/// successive passes agree entrywise within tol/10.
pub fn top_row_pmf(k: usize, m: usize, params: &ModelParams, tol: f64) -> Result<TopRowPmf> {
    if !(1..=3).contains(&k) {
        return Err(Error::InvalidArgument(format!("top_row_pmf supports 1 <= k <= 3, got {k}")));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument("tol must be positive".into()));
    }
    let setup = Setup::new(params, k, m)?;
    let n_max = match k {
        1 => 4096,
        2 => 1024,
        _ => 128,
    };
    let mut cache = FhatTable::new(&setup, params);
    let mut n = 32;
    let mut prev: Option<Pass> = None;
    let mut last_diff = f64::NAN;
    loop {
        let cur = run_pass(&setup, params, n, tol, &mut cache)?;
        if let (Some(c), Some(p)) = (&cur, &prev) {
            last_diff = c
                .entries
                .iter()
                .zip(&p.entries)
                .map(|(a, b)| (a.1 - b.1).abs())
                .fold(0.0, f64::max);
            if last_diff <= tol / 10.0 {
                let c = cur.unwrap();
                let most_negative =
                    c.entries.iter().map(|e| e.1).filter(|&p| p < 0.0).map(f64::abs).fold(0.0, f64::max);
                let mut entries = c.entries;
                entries.sort_by(|a, b| a.0.cmp(&b.0));
                return Ok(TopRowPmf {
                    k,
                    m,
                    entries,
                    mass: c.mass,
                    truncation: c.truncation,
                    tail_estimate: c.tail,
                    nodes_per_piece: n,
                    most_negative,
                    max_imag: c.max_imag,
                });
            }
        }
        if n >= n_max {
            return Err(Error::Numerical(format!(
                "pmf quadrature unconverged at {n} nodes per piece (last entrywise change {last_diff:e})"
            )));
        }
        prev = cur;
        n *= 2;
    }
}

impl TopRowPmf {
    pub fn probability(&self, mu: &Signature) -> f64 {
        self.entries
            .binary_search_by(|e| e.0.cmp(mu))
            .map(|i| self.entries[i].1)
            .unwrap_or(0.0)
    }
}
