//! Probabilists' Hermite polynomials and the Fourier-type functions ψ_n.

use std::f64::consts::PI;

use num_complex::Complex64;

/// h_n(x), monic, via h_{n+1} = x h_n - n h_{n-1}.
pub fn hermite_h(n: usize, x: f64) -> f64 {
    let (mut h0, mut h1) = (1.0, x);
    if n == 0 {
        return h0;
    }
    for m in 1..n {
        let h2 = x * h1 - m as f64 * h0;
        h0 = h1;
        h1 = h2;
    }
    h1
}

/// ψ_n(x) = (-i)^n (2π)^{-1/2} e^{-x²/2} h_n(x).
pub fn psi(n: usize, x: f64) -> Complex64 {
    let phase = match n % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, -1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, 1.0),
    };
    phase * ((-x * x / 2.0).exp() * hermite_h(n, x) / (2.0 * PI).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_degrees() {
        let x = 0.7;
        assert_eq!(hermite_h(0, x), 1.0);
        assert_eq!(hermite_h(1, x), x);
        assert!((hermite_h(2, x) - (x * x - 1.0)).abs() < 1e-15);
        assert!((hermite_h(3, x) - (x.powi(3) - 3.0 * x)).abs() < 1e-15);
        assert!((hermite_h(4, x) - (x.powi(4) - 6.0 * x * x + 3.0)).abs() < 1e-14);
    }
}
