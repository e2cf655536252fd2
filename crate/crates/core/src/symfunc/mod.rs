//! Spin Hall-Littlewood functions F_{λ/μ}, G_{λ/μ}, G^c_{λ/μ} by row transfer,
//! plus symmetrization and geometric closed forms and Cauchy checks.

mod cauchy;
mod geometric;
mod symmetrization;
pub mod transfer;

use std::collections::BTreeMap;

use num_complex::Complex64;

pub use cauchy::{verify_cauchy, verify_skew_cauchy, CauchyReport};
pub use geometric::{f_geometric, gc_geometric};
pub use symmetrization::{f_symmetrization, gc_symmetrization};
pub use transfer::{RowKernel, RowKind, TransferRow};

use crate::error::{Error, Result};
use crate::params::SpinParams;
use crate::signature::Signature;
use transfer::for_each_successor;

pub(crate) type Table = BTreeMap<Vec<i64>, Complex64>;

/// How far the chain may grow.
#[derive(Clone, Copy, Debug)]
pub(crate) enum Reach<'a> {
    /// Only sections that can still reach this top section.
    Target(&'a Signature),
    /// All sections with parts at most this value.
    Cap(i64),
}

/// Pushes `init` through `rows` (all of one kind) and returns the final table.
pub(crate) fn chain_dp(init: Table, rows: &[TransferRow], spin: &SpinParams, reach: Reach) -> Table {
    let mut cur = init;
    let n = rows.len();
    for (r, row) in rows.iter().enumerate() {
        let kernel = RowKernel::new(row, spin);
        let remaining = n - r - 1;
        let mut next = Table::new();
        for (kappa, &val) in &cur {
            if val == Complex64::new(0.0, 0.0) {
                continue;
            }
            let n_next = kappa.len() + usize::from(row.kind == RowKind::F);
            let (lo, hi): (Vec<i64>, Vec<i64>) = match reach {
                Reach::Target(lam) => (0..n_next)
                    .map(|i| (lam.parts().get(i + remaining).copied().unwrap_or(0), lam.parts()[i]))
                    .unzip(),
                Reach::Cap(l) => (vec![0; n_next], vec![l; n_next]),
            };
            for_each_successor(kappa, row.kind, &lo, &hi, &mut |above| {
                let wt = kernel.weight(kappa, above);
                if wt != Complex64::new(0.0, 0.0) {
                    match next.get_mut(above) {
                        Some(slot) => *slot += val * wt,
                        None => {
                            next.insert(above.to_vec(), val * wt);
                        }
                    }
                }
            });
        }
        cur = next;
    }
    cur
}

fn single(start: &Signature) -> Table {
    let mut t = Table::new();
    t.insert(start.parts().to_vec(), Complex64::new(1.0, 0.0));
    t
}

fn rows_of(kind: RowKind, spectral: &[Complex64], conjugated: bool, gauge: Complex64) -> Vec<TransferRow> {
    spectral
        .iter()
        .map(|&u| TransferRow::new(kind, u, conjugated).with_gauge(gauge))
        .collect()
}

fn eval(
    kind: RowKind,
    conjugated: bool,
    lambda: &Signature,
    mu: &Signature,
    spectral: &[Complex64],
    spin: &SpinParams,
    gauge: Complex64,
) -> Result<Complex64> {
    let expected = match kind {
        RowKind::F => mu.len() + spectral.len(),
        RowKind::G => mu.len(),
    };
    if lambda.len() != expected {
        return Err(Error::InvalidArgument(format!(
            "length mismatch: λ = {lambda}, μ = {mu}, {} spectral parameters",
            spectral.len()
        )));
    }
    if spectral.is_empty() {
        return Ok(if lambda == mu { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 0.0) });
    }
    let rows = rows_of(kind, spectral, conjugated, gauge);
    let out = chain_dp(single(mu), &rows, spin, Reach::Target(lambda));
    Ok(out.get(lambda.parts()).copied().unwrap_or_default())
}

/// F_{λ/μ}(u_1..u_n), row i carrying u_i; len(λ) = len(μ) + n.
pub fn f_eval(lambda: &Signature, mu: &Signature, spectral: &[Complex64], spin: &SpinParams) -> Result<Complex64> {
    eval(RowKind::F, false, lambda, mu, spectral, spin, Complex64::new(1.0, 0.0))
}

/// F_{λ/μ} times gauge^{|λ|-|μ|}; with gauge = (1-su)/(u-s) this stays O(1) for
/// large signatures.
pub fn f_eval_gauged(
    lambda: &Signature,
    mu: &Signature,
    spectral: &[Complex64],
    spin: &SpinParams,
    gauge: Complex64,
) -> Result<Complex64> {
    eval(RowKind::F, false, lambda, mu, spectral, spin, gauge)
}

/// G^c_{λ/μ}(v_1..v_n) with the conjugated weights; len(λ) = len(μ).
pub fn gc_eval(lambda: &Signature, mu: &Signature, spectral: &[Complex64], spin: &SpinParams) -> Result<Complex64> {
    eval(RowKind::G, true, lambda, mu, spectral, spin, Complex64::new(1.0, 0.0))
}

/// G_{λ/μ}(v_1..v_n) with the plain weights.
pub fn g_eval(lambda: &Signature, mu: &Signature, spectral: &[Complex64], spin: &SpinParams) -> Result<Complex64> {
    eval(RowKind::G, false, lambda, mu, spectral, spin, Complex64::new(1.0, 0.0))
}

fn to_signature_table(t: Table) -> BTreeMap<Signature, Complex64> {
    t.into_iter().map(|(k, v)| (Signature::from_vec_unchecked(k), v)).collect()
}

/// F_{λ/μ}(spectral) for every λ with λ_1 <= cap.
pub fn f_table(mu: &Signature, spectral: &[Complex64], spin: &SpinParams, cap: i64) -> BTreeMap<Signature, Complex64> {
    let rows = rows_of(RowKind::F, spectral, false, Complex64::new(1.0, 0.0));
    to_signature_table(chain_dp(single(mu), &rows, spin, Reach::Cap(cap)))
}

/// F_{λ/μ}(spectral) gauge^{|λ|-|μ|} for every λ with λ_1 <= cap.
pub fn f_table_gauged(
    mu: &Signature,
    spectral: &[Complex64],
    spin: &SpinParams,
    cap: i64,
    gauge: Complex64,
) -> BTreeMap<Signature, Complex64> {
    let rows = rows_of(RowKind::F, spectral, false, gauge);
    to_signature_table(chain_dp(single(mu), &rows, spin, Reach::Cap(cap)))
}

/// G^c_{λ/μ}(spectral) for every λ with λ_1 <= cap.
pub fn gc_table(mu: &Signature, spectral: &[Complex64], spin: &SpinParams, cap: i64) -> BTreeMap<Signature, Complex64> {
    let rows = rows_of(RowKind::G, spectral, true, Complex64::new(1.0, 0.0));
    to_signature_table(chain_dp(single(mu), &rows, spin, Reach::Cap(cap)))
}

pub fn real_spectral(u: &[f64]) -> Vec<Complex64> {
    u.iter().map(|&x| Complex64::from(x)).collect()
}
