//! q-Pochhammer symbols and the multiplicity products built from them.

use num_complex::Complex64;

use crate::signature::Signature;

/// (a; q)_n = prod_{i<n} (1 - a q^i); equals 1 for n = 0. Any nonzero base q.
pub fn q_pochhammer(a: f64, q: f64, n: usize) -> f64 {
    let mut acc = 1.0;
    let mut aq = a;
    for _ in 0..n {
        acc *= 1.0 - aq;
        aq *= q;
    }
    acc
}

pub fn q_pochhammer_c(a: Complex64, q: f64, n: usize) -> Complex64 {
    let mut acc = Complex64::new(1.0, 0.0);
    let mut aq = a;
    for _ in 0..n {
        acc *= 1.0 - aq;
        aq *= q;
    }
    acc
}

/// prod over the multiplicities n_k of λ (k >= min_part) of (s^2;q)_{n_k} / (q;q)_{n_k}.
pub fn multiplicity_product(lambda: &Signature, q: f64, s: f64, min_part: i64) -> f64 {
    lambda
        .multiplicities()
        .iter()
        .filter(|(&k, _)| k >= min_part)
        .map(|(_, &n)| q_pochhammer(s * s, q, n) / q_pochhammer(q, q, n))
        .product()
}

/// c(λ) over all k >= 0.
pub fn conjugation_constant(lambda: &Signature, q: f64, s: f64) -> f64 {
    multiplicity_product(lambda, q, s, 0)
}
