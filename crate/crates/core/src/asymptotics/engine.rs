//! Quadrature on the steepest-descent contour for integrals of the form
//!
//!   ∮...∮ prod_{α<β} (z_α - z_β)/(z_α - q z_β) prod_i φ(z_i) R(z_i)^{μ_i} E(z_i)
//!
//! with φ(z) = s(1-su)/((1-sz)(1-u/s)), R(z) = ((1-sz)/(z-s)) / ((1-su)/(u-s))
//! and E(z) = prod_j ((1-q z v_j)/(1-z v_j)) / ((1-q u v_j)/(1-u v_j)).
//! On the contour |R| <= 1 and |E| <= 1, so every integrand is bounded by |φ|
//! whatever μ and the number of columns are.

use num_complex::Complex64;

use super::contour::CompositeContour;
use crate::quadrature::{tensor_sum, Nodes};

#[derive(Clone, Debug)]
pub struct DescentIntegrator {
    pub k: usize,
    pub q: f64,
    pub nodes: Nodes,
    /// ω_j φ(z_j) E(z_j)
    pub base: Vec<Complex64>,
    pub ratio: Vec<Complex64>,
    pub cross: Vec<Complex64>,
}

impl DescentIntegrator {
    /// `u` is the contour centre, `v` the column parameters, `n` nodes per piece.
    pub fn new(q: f64, s: f64, u: f64, v: &[f64], k: usize, n: usize) -> Self {
        let contour = CompositeContour::new(u);
        let sigma = 1.0 / ((v.len() as f64) + 1.0).sqrt();
        let nodes = contour.nodes(n, n, sigma);
        let phi_c = s * (1.0 - s * u) / (1.0 - u / s);
        let rho_inv = (u - s) / (1.0 - s * u);
        let e_u: Vec<f64> = v.iter().map(|&vj| (1.0 - q * u * vj) / (1.0 - u * vj)).collect();
        let homogeneous = v.windows(2).all(|w| w[0] == w[1]);
        let mut base = Vec::with_capacity(nodes.len());
        let mut ratio = Vec::with_capacity(nodes.len());
        for (&z, &w) in nodes.z.iter().zip(&nodes.w) {
            let e = if v.is_empty() {
                Complex64::new(1.0, 0.0)
            } else if homogeneous {
                ((1.0 - q * z * v[0]) / (1.0 - z * v[0]) / e_u[0]).powi(v.len() as i32)
            } else {
                v.iter()
                    .zip(&e_u)
                    .map(|(&vj, &eu)| (1.0 - q * z * vj) / (1.0 - z * vj) / eu)
                    .product()
            };
            base.push(w * phi_c / (1.0 - s * z) * e);
            ratio.push((1.0 - s * z) / (z - s) * rho_inv);
        }
        let cross = if k >= 2 { nodes.cross_matrix(q) } else { Vec::new() };
        DescentIntegrator { k, q, nodes, base, ratio, cross }
    }

    pub fn len(&self) -> usize {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        self.base.is_empty()
    }

    /// ω φ E R^m at every node.
    pub fn single(&self, m: i64) -> Vec<Complex64> {
        self.base.iter().zip(&self.ratio).map(|(b, r)| b * r.powi(m as i32)).collect()
    }

    /// Integral for one signature of length k.
    pub fn integral(&self, mu: &[i64]) -> Complex64 {
        debug_assert_eq!(mu.len(), self.k);
        let a: Vec<Vec<Complex64>> = mu.iter().map(|&m| self.single(m)).collect();
        tensor_sum(&a, &self.cross)
    }
}
