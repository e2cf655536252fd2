//! Contour node sets and tensor-product sums used by the contour integrals.

use std::f64::consts::PI;

use gauss_quad::legendre::GaussLegendre;
use num_complex::Complex64;

/// Nodes z_j with weights already including dz / (2πi).
#[derive(Clone, Debug, Default)]
pub struct Nodes {
    pub z: Vec<Complex64>,
    pub w: Vec<Complex64>,
}

impl Nodes {
    pub fn len(&self) -> usize {
        self.z.len()
    }

    pub fn is_empty(&self) -> bool {
        self.z.is_empty()
    }

    pub fn extend(&mut self, other: Nodes) {
        self.z.extend(other.z);
        self.w.extend(other.w);
    }

    /// Row-major matrix (z_a - z_b) / (z_a - q z_b).
    pub fn cross_matrix(&self, q: f64) -> Vec<Complex64> {
        let n = self.len();
        let mut m = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                m.push((self.z[a] - self.z[b]) / (self.z[a] - q * self.z[b]));
            }
        }
        m
    }
}

/// Trapezoid rule on the positively oriented circle |z| = r.
pub fn circle_nodes(r: f64, n: usize) -> Nodes {
    let mut out = Nodes::default();
    for j in 0..n {
        let z = Complex64::from_polar(r, 2.0 * PI * j as f64 / n as f64);
        out.z.push(z);
        out.w.push(z / n as f64);
    }
    out
}

/// Gauss-Legendre pairs on [-1, 1].
pub fn legendre(n: usize) -> Vec<(f64, f64)> {
    GaussLegendre::new(n.max(2))
        .expect("degree >= 2")
        .into_node_weight_pairs()
}

/// Σ over index tuples of prod_i a[i][j_i] prod_{α<β} cross[j_α][j_β].
pub fn tensor_sum(a: &[Vec<Complex64>], cross: &[Complex64]) -> Complex64 {
    let k = a.len();
    if k == 0 {
        return Complex64::new(1.0, 0.0);
    }
    let n = a[0].len();
    match k {
        1 => a[0].iter().sum(),
        2 => {
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 0..n {
                let row = &cross[j * n..(j + 1) * n];
                let inner: Complex64 = row.iter().zip(&a[1]).map(|(c, x)| c * x).sum();
                acc += a[0][j] * inner;
            }
            acc
        }
        _ => {
            let mut idx = vec![0usize; k];
            fn rec(d: usize, partial: Complex64, a: &[Vec<Complex64>], cross: &[Complex64], n: usize, idx: &mut [usize]) -> Complex64 {
                if d == a.len() {
                    return partial;
                }
                let mut acc = Complex64::new(0.0, 0.0);
                for j in 0..n {
                    let mut p = partial * a[d][j];
                    for &prev in &idx[..d] {
                        p *= cross[prev * n + j];
                    }
                    idx[d] = j;
                    acc += rec(d + 1, p, a, cross, n, idx);
                }
                acc
            }
            rec(0, Complex64::new(1.0, 0.0), a, cross, n, &mut idx)
        }
    }
}
