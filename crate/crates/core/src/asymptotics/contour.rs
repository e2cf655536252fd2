//! The steepest-descent contour: the segment u - 2iu .. u + 2iu followed by
//! the left half of the circle |z - u| = 2u, positively oriented.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::quadrature::{legendre, Nodes};

#[derive(Clone, Copy, Debug)]
pub struct CompositeContour {
    pub center: f64,
}

impl CompositeContour {
    pub fn new(u: f64) -> Self {
        CompositeContour { center: u }
    }

    pub fn radius(&self) -> f64 {
        2.0 * self.center
    }

    /// Gauss-Legendre nodes. On the segment z = u + i t with t = σ tan θ and θ
    /// uniform in Legendre measure, which puts node density ∝ 1/(1 + t²/σ²).
    pub fn nodes(&self, n_segment: usize, n_arc: usize, sigma: f64) -> Nodes {
        let u = self.center;
        let r = self.radius();
        let mut out = Nodes::default();
        let theta_max = (r / sigma).atan();
        for (x, wx) in legendre(n_segment) {
            let th = theta_max * x;
            let t = sigma * th.tan();
            let sec2 = 1.0 + th.tan().powi(2);
            out.z.push(Complex64::new(u, t));
            // dz/(2πi) = σ sec²θ dθ / (2π)
            out.w.push(Complex64::from(sigma * sec2 * theta_max * wx / (2.0 * PI)));
        }
        for (x, wx) in legendre(n_arc) {
            let phi = PI + 0.5 * PI * x;
            let e = Complex64::from_polar(1.0, phi);
            out.z.push(u + r * e);
            // dz/(2πi) = r e^{iφ} dφ / (2π)
            out.w.push(r * e * (0.5 * PI * wx) / (2.0 * PI));
        }
        out
    }

    /// `count` points in contour order starting at u - 2iu; u itself is included.
    pub fn sample_points(&self, count: usize) -> Vec<Complex64> {
        let u = self.center;
        let r = self.radius();
        let seg_len = 2.0 * r;
        let arc_len = PI * r;
        let total = seg_len + arc_len;
        let mut pts: Vec<Complex64> = (0..count)
            .map(|i| {
                let l = total * i as f64 / count as f64;
                if l <= seg_len {
                    Complex64::new(u, -r + l)
                } else {
                    let phi = 0.5 * PI + (l - seg_len) / r;
                    u + Complex64::from_polar(r, phi)
                }
            })
            .collect();
        if !pts.iter().any(|z| (z - u).norm() < 1e-15) {
            pts.push(Complex64::from(u));
            pts.sort_by(|a, b| {
                let key = |z: &Complex64| if (z.re - u).abs() < 1e-12 { z.im } else { f64::INFINITY };
                key(a).partial_cmp(&key(b)).unwrap()
            });
        }
        pts
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn winds_once_around_interior_points() {
        let c = CompositeContour::new(2.0);
        let nodes = c.nodes(80, 80, 0.1);
        for p in [0.0, 1.3, -1.0, 2.0 - 0.5] {
            let i: Complex64 = nodes.z.iter().zip(&nodes.w).map(|(z, w)| w / (z - p)).sum();
            assert!((i - 1.0).norm() < 1e-10, "{p}: {i}");
        }
        let out: Complex64 = nodes.z.iter().zip(&nodes.w).map(|(z, w)| w / (z - 4.0)).sum();
        assert!(out.norm() < 1e-10);
    }

    #[test]
    fn sample_points_contain_center() {
        let pts = CompositeContour::new(2.0).sample_points(1000);
        assert!(pts.iter().any(|z| (z - 2.0).norm() < 1e-15));
    }
}
