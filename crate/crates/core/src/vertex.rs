//! Vertex types (i1, j1; i2, j2): bottom, left, top, right occupancies.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Vertical occupancies are capped here.
pub const MAX_OCCUPANCY: u32 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "[u32; 4]", into = "[u32; 4]")]
pub struct VertexType {
    pub i1: u32,
    pub j1: u32,
    pub i2: u32,
    pub j2: u32,
}

impl VertexType {
    pub fn new(i1: u32, j1: u32, i2: u32, j2: u32) -> Result<Self> {
        if j1 > 1 || j2 > 1 {
            return Err(Error::InvalidVertex(format!(
                "horizontal occupancy must be 0 or 1, got ({i1},{j1};{i2},{j2})"
            )));
        }
        if i1 > MAX_OCCUPANCY || i2 > MAX_OCCUPANCY {
            return Err(Error::InvalidVertex(format!(
                "vertical occupancy above {MAX_OCCUPANCY} in ({i1},{j1};{i2},{j2})"
            )));
        }
        Ok(VertexType { i1, j1, i2, j2 })
    }

    pub const EMPTY: VertexType = VertexType { i1: 0, j1: 0, i2: 0, j2: 0 };

    pub fn conserves(&self) -> bool {
        self.i1 + self.j1 == self.i2 + self.j2
    }

    pub fn is_six_vertex(&self) -> bool {
        self.i1 <= 1 && self.i2 <= 1 && self.conserves()
    }

    /// Index 0..6 in the order (0,0;0,0), (1,1;1,1), (1,0;1,0), (0,1;0,1),
    /// (1,0;0,1), (0,1;1,0).
    pub fn six_vertex_index(&self) -> Option<usize> {
        match (self.i1, self.j1, self.i2, self.j2) {
            (0, 0, 0, 0) => Some(0),
            (1, 1, 1, 1) => Some(1),
            (1, 0, 1, 0) => Some(2),
            (0, 1, 0, 1) => Some(3),
            (1, 0, 0, 1) => Some(4),
            (0, 1, 1, 0) => Some(5),
            _ => None,
        }
    }
}

impl TryFrom<[u32; 4]> for VertexType {
    type Error = Error;
    fn try_from(a: [u32; 4]) -> Result<Self> {
        VertexType::new(a[0], a[1], a[2], a[3])
    }
}

impl From<VertexType> for [u32; 4] {
    fn from(v: VertexType) -> [u32; 4] {
        [v.i1, v.j1, v.i2, v.j2]
    }
}

/// Anisotropy Δ = (a1 a2 + b1 b2 - c1 c2) / (2 sqrt(a1 a2 b1 b2)) of six-vertex
/// weights given in the [`VertexType::six_vertex_index`] order.
pub fn delta_parameter(w: [f64; 6]) -> Result<f64> {
    if w.iter().any(|x| !(*x > 0.0) || !x.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "six-vertex weights must be positive, got {w:?}"
        )));
    }
    let (a1, a2, b1, b2, c1, c2) = (w[0], w[1], w[2], w[3], w[4], w[5]);
    Ok((a1 * a2 + b1 * b2 - c1 * c2) / (2.0 * (a1 * a2 * b1 * b2).sqrt()))
}
