//! Symmetrization formulas for F_μ and G^c_ν.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::params::SpinParams;
use crate::qseries::{multiplicity_product, q_pochhammer};
use crate::signature::Signature;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    fn heap(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, cur, out);
            if k.is_multiple_of(2) {
                cur.swap(i, k - 1);
            } else {
                cur.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut cur, &mut out);
    out
}

fn check_distinct(u: &[Complex64]) -> Result<()> {
    for i in 0..u.len() {
        for j in i + 1..u.len() {
            if (u[i] - u[j]).norm() < 1e-12 * (1.0 + u[i].norm()) {
                return Err(Error::InvalidArgument(
                    "symmetrization needs pairwise distinct spectral parameters".into(),
                ));
            }
        }
    }
    if u.len() > 8 {
        return Err(Error::Budget("symmetrization limited to 8 variables".into()));
    }
    Ok(())
}

fn cross(u: &[Complex64], q: f64) -> Complex64 {
    let mut acc = Complex64::new(1.0, 0.0);
    for a in 0..u.len() {
        for b in a + 1..u.len() {
            acc *= (u[a] - q * u[b]) / (u[a] - u[b]);
        }
    }
    acc
}

fn ratio(x: Complex64, s: f64) -> Complex64 {
    (x - s) / (1.0 - s * x)
}

/// F_μ(u_1..u_N) by symmetrization over S_N, N = len(μ).
pub fn f_symmetrization(mu: &Signature, spectral: &[Complex64], spin: &SpinParams) -> Result<Complex64> {
    let n = mu.len();
    if spectral.len() != n {
        return Err(Error::InvalidArgument("need len(μ) spectral parameters".into()));
    }
    check_distinct(spectral)?;
    let (q, s) = (spin.q, spin.s);
    let mut sum = Complex64::new(0.0, 0.0);
    let mut perm_u = vec![Complex64::new(0.0, 0.0); n];
    for p in permutations(n) {
        for i in 0..n {
            perm_u[i] = spectral[p[i]];
        }
        let mut term = cross(&perm_u, q);
        for i in 0..n {
            term *= ratio(perm_u[i], s).powi(mu.parts()[i] as i32);
        }
        sum += term;
    }
    let mut pre = Complex64::from((1.0 - q).powi(n as i32));
    for &x in spectral {
        pre /= 1.0 - s * x;
    }
    Ok(pre * sum)
}

/// G^c_ν(u_1..u_N) = G^c_{ν/0^n} by symmetrization over S_N, ν of length n.
/// Vanishes when N < n - n_0.
pub fn gc_symmetrization(nu: &Signature, spectral: &[Complex64], spin: &SpinParams) -> Result<Complex64> {
    check_distinct(spectral)?;
    let (q, s) = (spin.q, spin.s);
    let big_n = spectral.len();
    let n = nu.len();
    let n0 = nu.multiplicity(0);
    if big_n + n0 < n {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let mut sum = Complex64::new(0.0, 0.0);
    let mut x = vec![Complex64::new(0.0, 0.0); big_n];
    let sq = s * q.powi(n0 as i32);
    for p in permutations(big_n) {
        for i in 0..big_n {
            x[i] = spectral[p[i]];
        }
        let mut term = cross(&x, q);
        for i in 0..n.min(big_n) {
            term *= ratio(x[i], s).powi(nu.parts()[i] as i32);
        }
        for xi in x.iter().take(n - n0) {
            term *= xi / (xi - s);
        }
        for xj in x.iter().skip(n - n0) {
            term *= 1.0 - sq * xj;
        }
        sum += term;
    }
    let mut pre = Complex64::from(
        (1.0 - q).powi(big_n as i32) * q_pochhammer(q, q, n)
            / (q_pochhammer(q, q, big_n + n0 - n) * q_pochhammer(q, q, n0))
            * multiplicity_product(nu, q, s, 1),
    );
    for &xi in spectral {
        pre /= 1.0 - s * xi;
    }
    Ok(pre * sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_count() {
        assert_eq!(permutations(4).len(), 24);
        let mut p = permutations(3);
        p.sort();
        p.dedup();
        assert_eq!(p.len(), 6);
    }

    #[test]
    fn repeated_spectral_rejected() {
        let spin = SpinParams::new(0.5, 1.5).unwrap();
        let mu = Signature::new(vec![2, 1]).unwrap();
        let u = [Complex64::from(2.0), Complex64::from(2.0)];
        assert!(f_symmetrization(&mu, &u, &spin).is_err());
    }
}
