//! Higher-spin vertex weights w_u and their conjugated variant w^c_u.

use num_complex::Complex64;

use crate::params::{ModelParams, SpinParams};
use crate::qseries::q_pochhammer;
use crate::vertex::VertexType;

/// Weight evaluator with fixed (q, s), spectral parameter and conjugation flag.
#[derive(Clone, Copy, Debug)]
pub struct WeightKernel {
    pub spin: SpinParams,
    pub spectral: Complex64,
    pub conjugated: bool,
}

impl WeightKernel {
    pub fn new(spin: SpinParams, spectral: Complex64, conjugated: bool) -> Self {
        WeightKernel { spin, spectral, conjugated }
    }

    pub fn w(&self, v: VertexType) -> Complex64 {
        w(v, self.spectral, &self.spin, self.conjugated)
    }
}

/// Vertex weight. Non-conserving or non-listed vertices weigh 0.
pub fn w(v: VertexType, u: Complex64, spin: &SpinParams, conjugated: bool) -> Complex64 {
    let (q, s) = (spin.q, spin.s);
    let den = 1.0 - s * u;
    let qp = |g: u32| q.powi(g as i32);
    match (v.j1, v.j2) {
        (0, 0) if v.i1 == v.i2 => (1.0 - s * qp(v.i1) * u) / den,
        (1, 1) if v.i1 == v.i2 => (u - s * qp(v.i1)) / den,
        (0, 1) if v.i1 == v.i2 + 1 => {
            let g = v.i2;
            let c = if conjugated { 1.0 - qp(g + 1) } else { 1.0 - s * s * qp(g) };
            c * u / den
        }
        (1, 0) if v.i2 == v.i1 + 1 => {
            let g = v.i1;
            let c = if conjugated { 1.0 - s * s * qp(g) } else { 1.0 - qp(g + 1) };
            Complex64::from(c) / den
        }
        _ => Complex64::new(0.0, 0.0),
    }
}

/// w^c / w = (q;q)_{i1} (s^2;q)_{i2} / ((q;q)_{i2} (s^2;q)_{i1}).
pub fn conjugation_factor(v: VertexType, spin: &SpinParams) -> f64 {
    let (q, s2) = (spin.q, spin.s * spin.s);
    q_pochhammer(q, q, v.i1 as usize) * q_pochhammer(s2, q, v.i2 as usize)
        / (q_pochhammer(q, q, v.i2 as usize) * q_pochhammer(s2, q, v.i1 as usize))
}

/// Absolute six-vertex weights at spectral parameter u, in the order
/// (0,0;0,0), (1,1;1,1), (1,0;1,0), (0,1;0,1), (1,0;0,1), (0,1;1,0).
pub fn six_vertex_weights(params: &ModelParams, u: f64) -> [f64; 6] {
    let s = params.s();
    let den = u * s - 1.0;
    [
        1.0,
        (u - 1.0 / s) / den,
        (u / s - 1.0) / den,
        (u - s) / den,
        u * (s * s - 1.0) / den,
        (1.0 - 1.0 / (s * s)) / den,
    ]
}
