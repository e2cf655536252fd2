//! Closed forms at geometric spectral parameters (u, qu, ..., q^{N-1} u).

use num_complex::Complex64;

use crate::params::SpinParams;
use crate::qseries::{multiplicity_product, q_pochhammer, q_pochhammer_c};
use crate::signature::Signature;

/// F_μ(u, qu, ..., q^{N-1}u), N = len(μ).
pub fn f_geometric(mu: &Signature, u: Complex64, spin: &SpinParams) -> Complex64 {
    let (q, s) = (spin.q, spin.s);
    let n = mu.len();
    let mut acc = Complex64::from(q_pochhammer(q, q, n));
    for (i, &m) in mu.parts().iter().enumerate() {
        let x = u * q.powi(i as i32);
        acc *= ((x - s) / (1.0 - s * x)).powi(m as i32) / (1.0 - s * x);
    }
    acc
}

/// G^c_ν(u, qu, ..., q^{N-1}u) for ν of length n.
pub fn gc_geometric(nu: &Signature, u: Complex64, big_n: usize, spin: &SpinParams) -> Complex64 {
    let (q, s) = (spin.q, spin.s);
    let n = nu.len();
    let n0 = nu.multiplicity(0);
    if big_n + n0 < n {
        return Complex64::new(0.0, 0.0);
    }
    let mut acc = Complex64::from(
        multiplicity_product(nu, q, s, 1) * q_pochhammer(q, q, big_n) * q_pochhammer(q, q, n)
            / (q_pochhammer(q, q, big_n + n0 - n) * q_pochhammer(q, q, n0)),
    );
    acc *= q_pochhammer_c(s * u, q, big_n + n0) / q_pochhammer_c(s * u, q, n);
    acc /= q_pochhammer_c(s / u, 1.0 / q, n - n0);
    for i in 0..big_n {
        let x = u * q.powi(i as i32);
        let part = nu.parts().get(i).copied().unwrap_or(0);
        acc *= ((x - s) / (1.0 - s * x)).powi(part as i32) / (1.0 - s * x);
    }
    acc
}
