//! Up-right path collections on the strip Z_{>=0} x {1..n} and their weights.
//!
//! The enumerator here works edge by edge (vertex by vertex along each row) and
//! knows nothing about interlacing; it serves as the brute-force reference for
//! the transfer-matrix evaluator in [`crate::symfunc`].

use num_bigint::{BigInt, BigUint};
use num_complex::Complex64;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::{ModelParams, SpinParams};
use crate::signature::Signature;
use crate::vertex::VertexType;
use crate::weights::w;

/// Which boundary: `F` has one path entering from the left in every row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    F,
    Gc,
}

pub const ENUMERATION_BUDGET: usize = 5_000_000;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PathCollection {
    pub family: Family,
    pub rows: usize,
    pub cols: usize,
    /// Occupied vertical edges between consecutive rows; entry 0 is the bottom
    /// boundary, entry `rows` the top.
    pub sections: Vec<Signature>,
    /// Row-major vertex types, row 0 is y = 1.
    pub grid: Vec<VertexType>,
}

impl PathCollection {
    pub fn vertex(&self, x: usize, y: usize) -> VertexType {
        if x >= self.cols || y == 0 || y > self.rows {
            return VertexType::EMPTY;
        }
        self.grid[(y - 1) * self.cols + x]
    }

    pub fn bottom(&self) -> &Signature {
        &self.sections[0]
    }

    pub fn top(&self) -> &Signature {
        &self.sections[self.rows]
    }

    /// Rebuilds the vertex grid from the cross-sections. Fails if consecutive
    /// sections are not connected by a valid row.
    pub fn from_sections(family: Family, sections: Vec<Signature>) -> Result<Self> {
        if sections.is_empty() {
            return Err(Error::InvalidArgument("no sections".into()));
        }
        let rows = sections.len() - 1;
        let cols = sections.iter().map(|s| s.first()).max().unwrap_or(0) as usize + 1;
        let occ = |s: &Signature| {
            let mut o = vec![0u32; cols];
            for &p in s.parts() {
                o[p as usize] += 1;
            }
            o
        };
        let mut grid = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            let (below, above) = (occ(&sections[r]), occ(&sections[r + 1]));
            let mut h: i64 = if family == Family::F { 1 } else { 0 };
            for x in 0..cols {
                let j2 = below[x] as i64 + h - above[x] as i64;
                if !(0..=1).contains(&j2) {
                    return Err(Error::InvalidArgument(format!(
                        "sections {} -> {} do not form a row",
                        sections[r],
                        sections[r + 1]
                    )));
                }
                grid.push(VertexType::new(below[x], h as u32, above[x], j2 as u32)?);
                h = j2;
            }
            if h != 0 {
                return Err(Error::InvalidArgument("a path leaves the window".into()));
            }
        }
        Ok(PathCollection { family, rows, cols, sections, grid })
    }

    pub fn is_six_vertex(&self) -> bool {
        self.grid.iter().all(|v| v.i1 <= 1 && v.i2 <= 1)
    }

    /// Counts of (0,1;0,1), (0,1;1,0), (1,0;0,1) vertices.
    pub fn typical_counts(&self) -> (usize, usize, usize) {
        let mut c = (0, 0, 0);
        for v in &self.grid {
            match (v.i1, v.j1, v.i2, v.j2) {
                (0, 1, 0, 1) => c.0 += 1,
                (0, 1, 1, 0) => c.1 += 1,
                (1, 0, 0, 1) => c.2 += 1,
                _ => {}
            }
        }
        c
    }
}

struct Dfs<'a, F: FnMut(&PathCollection)> {
    family: Family,
    rows: usize,
    width: usize,
    six_vertex_only: bool,
    target: Option<&'a Signature>,
    sections: Vec<Signature>,
    grid: Vec<VertexType>,
    emitted: usize,
    budget: usize,
    sink: F,
}

fn occupancy_to_signature(o: &[u32]) -> Signature {
    let mut parts = Vec::new();
    for (x, &m) in o.iter().enumerate().rev() {
        for _ in 0..m {
            parts.push(x as i64);
        }
    }
    Signature::from_vec_unchecked(parts)
}

impl<F: FnMut(&PathCollection)> Dfs<'_, F> {
    fn row(&mut self, below: Vec<u32>) -> Result<()> {
        let r = self.sections.len() - 1;
        if r == self.rows {
            if self.target.is_none_or(|t| t == self.sections.last().unwrap()) {
                self.emitted += 1;
                if self.emitted > self.budget {
                    return Err(Error::Budget(format!(
                        "more than {} path collections",
                        self.budget
                    )));
                }
                let pc = self.trimmed();
                (self.sink)(&pc);
            }
            return Ok(());
        }
        let h = if self.family == Family::F { 1 } else { 0 };
        let mut above = vec![0u32; self.width + 1];
        self.cell(&below, &mut above, 0, h)
    }

    fn cell(&mut self, below: &[u32], above: &mut Vec<u32>, x: usize, h: u32) -> Result<()> {
        if x > self.width {
            if h != 0 {
                return Ok(());
            }
            let sec = occupancy_to_signature(above);
            // paths only move right, so the i-th largest position can only grow
            if let Some(t) = self.target {
                if sec.parts().iter().zip(t.parts()).any(|(a, b)| a > b) {
                    return Ok(());
                }
            }
            self.sections.push(sec);
            let res = self.row(above.clone());
            self.sections.pop();
            return res;
        }
        let total = below[x] + h;
        for i2 in [total, total.wrapping_sub(1)] {
            if i2 > total {
                continue;
            }
            let j2 = total - i2;
            if j2 > 1 || (self.six_vertex_only && i2 > 1) || (x == self.width && j2 == 1) {
                continue;
            }
            above[x] = i2;
            self.grid.push(VertexType::new(below[x], h, i2, j2)?);
            let res = self.cell(below, above, x + 1, j2);
            self.grid.pop();
            above[x] = 0;
            res?;
        }
        Ok(())
    }

    fn trimmed(&self) -> PathCollection {
        let cols = self.sections.iter().map(|s| s.first()).max().unwrap_or(0) as usize + 1;
        let w = self.width + 1;
        let mut grid = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            grid.extend_from_slice(&self.grid[r * w..r * w + cols]);
        }
        PathCollection {
            family: self.family,
            rows: self.rows,
            cols,
            sections: self.sections.clone(),
            grid,
        }
    }
}

/// Visits every collection with `rows` rows, bottom boundary `bottom`, all
/// vertices in columns `0..=width`, optionally restricted to top boundary
/// `target` and to six-vertex configurations.
pub fn for_each_collection<F: FnMut(&PathCollection)>(
    family: Family,
    bottom: &Signature,
    rows: usize,
    width: usize,
    six_vertex_only: bool,
    target: Option<&Signature>,
    sink: F,
) -> Result<usize> {
    if bottom.first() as usize > width {
        return Ok(0);
    }
    let mut below = vec![0u32; width + 1];
    for &p in bottom.parts() {
        below[p as usize] += 1;
    }
    let mut dfs = Dfs {
        family,
        rows,
        width,
        six_vertex_only,
        target,
        sections: vec![bottom.clone()],
        grid: Vec::new(),
        emitted: 0,
        budget: ENUMERATION_BUDGET,
        sink,
    };
    dfs.row(below)?;
    Ok(dfs.emitted)
}

/// All of P_{λ/μ} for F: len(λ) = len(μ) + n.
pub fn enumerate_f_collections(
    mu: &Signature,
    lambda: &Signature,
    n: usize,
) -> Result<Vec<PathCollection>> {
    if lambda.len() != mu.len() + n {
        return Err(Error::InvalidArgument(format!(
            "len(λ) = {} must equal len(μ) + n = {}",
            lambda.len(),
            mu.len() + n
        )));
    }
    let mut out = Vec::new();
    for_each_collection(Family::F, mu, n, lambda.first() as usize, false, Some(lambda), |p| {
        out.push(p.clone())
    })?;
    Ok(out)
}

/// All collections for G^c_{λ/μ}: N paths from μ at the bottom to λ at the top.
pub fn enumerate_gc_collections(
    mu: &Signature,
    lambda: &Signature,
    n: usize,
) -> Result<Vec<PathCollection>> {
    if lambda.len() != mu.len() {
        return Err(Error::InvalidArgument("len(λ) must equal len(μ)".into()));
    }
    let mut out = Vec::new();
    for_each_collection(Family::Gc, mu, n, lambda.first() as usize, false, Some(lambda), |p| {
        out.push(p.clone())
    })?;
    Ok(out)
}

/// Product of vertex weights, row y using `spectral[y-1]`. F collections take
/// the plain weights, G^c collections the conjugated ones unless overridden.
pub fn collection_weight(pc: &PathCollection, spectral: &[Complex64], spin: &SpinParams) -> Complex64 {
    collection_weight_with(pc, spectral, spin, pc.family == Family::Gc)
}

pub fn collection_weight_with(
    pc: &PathCollection,
    spectral: &[Complex64],
    spin: &SpinParams,
    conjugated: bool,
) -> Complex64 {
    let mut acc = Complex64::new(1.0, 0.0);
    for y in 1..=pc.rows {
        let u = spectral[y - 1];
        for x in 0..pc.cols {
            acc *= w(pc.vertex(x, y), u, spin, conjugated);
        }
    }
    // columns beyond the window are (0,0;0,0) and weigh 1
    acc
}

/// Typical: F collection from the empty bottom using only (0,0;0,0),
/// (0,1;0,1), (0,1;1,0) and (1,0;0,1).
pub fn is_typical(pc: &PathCollection) -> bool {
    pc.family == Family::F
        && pc.bottom().is_empty()
        && pc.grid.iter().all(|v| {
            matches!(
                (v.i1, v.j1, v.i2, v.j2),
                (0, 0, 0, 0) | (0, 1, 0, 1) | (0, 1, 1, 0) | (1, 0, 0, 1)
            )
        })
}

fn check_strict(lambda: &Signature) -> Result<()> {
    if !lambda.is_strict() {
        return Err(Error::InvalidSignature(format!("{lambda} is not strict")));
    }
    Ok(())
}

/// |P_{λ/∅}| = prod_{i<j} (λ_i - λ_j + j - i) / (j - i).
pub fn count_collections_formula(lambda: &Signature) -> Result<BigUint> {
    check_strict(lambda)?;
    let p = lambda.parts();
    let (mut num, mut den) = (BigUint::one(), BigUint::one());
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            num *= BigUint::from((p[i] - p[j] + (j - i) as i64) as u64);
            den *= BigUint::from((j - i) as u64);
        }
    }
    debug_assert!((&num % &den).is_zero());
    Ok(num / den)
}

/// Lower bound prod_{i<j} (λ_i - λ_j - j + i) / (j - i) on the number of
/// typical collections, as (numerator, denominator).
pub fn typical_lower_bound(lambda: &Signature) -> Result<(BigInt, BigInt)> {
    check_strict(lambda)?;
    let p = lambda.parts();
    let (mut num, mut den) = (BigInt::one(), BigInt::one());
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            num *= BigInt::from(p[i] - p[j] - (j - i) as i64);
            den *= BigInt::from((j - i) as i64);
        }
    }
    Ok((num, den))
}

/// Whether `count >= num/den` for a (num, den) with den > 0.
pub fn meets_lower_bound(count: usize, bound: &(BigInt, BigInt)) -> bool {
    let (num, den) = bound;
    debug_assert!(den.is_positive());
    BigInt::from(count) * den >= *num
}

fn binom2(k: usize) -> i32 {
    (k * k.saturating_sub(1) / 2) as i32
}

/// Common weight of every typical collection in P_{λ/∅}.
pub fn typical_weight(lambda: &Signature, u: f64, params: &ModelParams) -> f64 {
    let (q, s) = (params.q, params.s());
    let k = lambda.len();
    let den = 1.0 - s * u;
    ((1.0 - q) / den).powi(binom2(k + 1))
        * ((1.0 - 1.0 / q) * u / den).powi(binom2(k))
        * ((u - s) / den).powi(lambda.size() as i32 - binom2(k))
}
