//! One-row transfer weights and interlacing successors.

use num_complex::Complex64;

use crate::params::SpinParams;
use crate::vertex::VertexType;
use crate::weights::w;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowKind {
    /// One path enters from the left; the section grows by one part.
    F,
    /// No left entry; the section keeps its length.
    G,
}

#[derive(Clone, Copy, Debug)]
pub struct TransferRow {
    pub spectral: Complex64,
    pub conjugated: bool,
    pub kind: RowKind,
    /// Extra factor per occupied horizontal edge. 1 gives the plain weight.
    pub gauge: Complex64,
}

impl TransferRow {
    pub fn new(kind: RowKind, spectral: Complex64, conjugated: bool) -> Self {
        TransferRow { spectral, conjugated, kind, gauge: Complex64::new(1.0, 0.0) }
    }

    pub fn with_gauge(mut self, gauge: Complex64) -> Self {
        self.gauge = gauge;
        self
    }

    /// Weight of the unique row configuration taking `below` to `above`
    /// (both weakly decreasing), or 0 if none exists.
    pub fn weight(&self, spin: &SpinParams, below: &[i64], above: &[i64]) -> Complex64 {
        RowKernel::new(self, spin).weight(below, above)
    }
}

const KERNEL_SIDE: usize = 9;

/// A [`TransferRow`] with the vertex weights of small occupation tabulated.
#[derive(Clone, Debug)]
pub struct RowKernel {
    row: TransferRow,
    spin: SpinParams,
    run: Complex64,
    /// Indexed by (i1, j1, i2); j2 is forced by conservation.
    table: Vec<Complex64>,
}

impl RowKernel {
    pub fn new(row: &TransferRow, spin: &SpinParams) -> Self {
        let mut table = vec![Complex64::new(0.0, 0.0); KERNEL_SIDE * 2 * KERNEL_SIDE];
        for i1 in 0..KERNEL_SIDE as u32 {
            for j1 in 0..2u32 {
                for i2 in 0..KERNEL_SIDE as u32 {
                    let j2 = i1 as i64 + j1 as i64 - i2 as i64;
                    if (0..=1).contains(&j2) {
                        let v = VertexType { i1, j1, i2, j2: j2 as u32 };
                        table[Self::index(i1, j1, i2)] = w(v, row.spectral, spin, row.conjugated);
                    }
                }
            }
        }
        let run = table[Self::index(0, 1, 0)] * row.gauge;
        RowKernel { row: *row, spin: *spin, run, table }
    }

    fn index(i1: u32, j1: u32, i2: u32) -> usize {
        (i1 as usize * 2 + j1 as usize) * KERNEL_SIDE + i2 as usize
    }

    fn vertex(&self, i1: u32, j1: u32, i2: u32, j2: u32) -> Complex64 {
        if (i1 as usize) < KERNEL_SIDE && (i2 as usize) < KERNEL_SIDE {
            self.table[Self::index(i1, j1, i2)]
        } else {
            w(VertexType { i1, j1, i2, j2 }, self.row.spectral, &self.spin, self.row.conjugated)
        }
    }

    pub fn weight(&self, below: &[i64], above: &[i64]) -> Complex64 {
        let zero = Complex64::new(0.0, 0.0);
        let wt = |i1: u32, j1: u32, i2: u32, j2: u32| self.vertex(i1, j1, i2, j2);
        let run = self.run;
        let mut acc = Complex64::new(1.0, 0.0);
        let mut h: u32 = if self.row.kind == RowKind::F { 1 } else { 0 };
        let (mut ib, mut ia) = (below.len(), above.len());
        let mut col = 0i64;
        loop {
            let c = match (ib, ia) {
                (0, 0) => break,
                (0, _) => above[ia - 1],
                (_, 0) => below[ib - 1],
                _ => below[ib - 1].min(above[ia - 1]),
            };
            if h == 1 && c > col {
                acc *= run.powi((c - col) as i32);
            }
            let mut i1 = 0u32;
            while ib > 0 && below[ib - 1] == c {
                i1 += 1;
                ib -= 1;
            }
            let mut i2 = 0u32;
            while ia > 0 && above[ia - 1] == c {
                i2 += 1;
                ia -= 1;
            }
            let j2 = i1 as i64 + h as i64 - i2 as i64;
            if !(0..=1).contains(&j2) {
                return zero;
            }
            let j2 = j2 as u32;
            acc *= wt(i1, h, i2, j2);
            if j2 == 1 {
                acc *= self.row.gauge;
            }
            h = j2;
            col = c + 1;
        }
        if h == 1 {
            return zero;
        }
        acc
    }
}

/// Calls `f` on every section reachable from `kappa` in one row of the given
/// kind, with part i confined to `[lo[i], hi[i]]`.
pub fn for_each_successor(
    kappa: &[i64],
    kind: RowKind,
    lo: &[i64],
    hi: &[i64],
    f: &mut impl FnMut(&[i64]),
) {
    let n_next = kappa.len() + usize::from(kind == RowKind::F);
    debug_assert!(lo.len() >= n_next && hi.len() >= n_next);
    let mut buf = vec![0i64; n_next];
    fn rec(
        i: usize,
        kappa: &[i64],
        lo: &[i64],
        hi: &[i64],
        buf: &mut [i64],
        f: &mut impl FnMut(&[i64]),
    ) {
        if i == buf.len() {
            f(buf);
            return;
        }
        let below = kappa.get(i).copied().unwrap_or(0);
        let start = below.max(lo[i]);
        let end = if i == 0 { hi[i] } else { hi[i].min(kappa[i - 1]) };
        let mut p = start;
        while p <= end {
            buf[i] = p;
            rec(i + 1, kappa, lo, hi, buf, f);
            p += 1;
        }
    }
    rec(0, kappa, lo, hi, &mut buf, f);
}
