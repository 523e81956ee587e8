use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::axis_phases;
use crate::spectral::{Axis, AxisTruncation, ConjugacyFlag, SpectralField};

/// Produces every `S̃^{ab}_{i,j}` for `i ≤ n`, `j ≤ m`, one grid row at a time.
///
/// `columns[(i, k)][a] = Σ_{|j'| ≤ i} μ(j', k) f̂(j', k) e^{ij'x_a}` is built
/// once (incrementally in `i`); a row of `S_{i,j}` is then
/// `S_{i,j-1} + columns[(i, j)] e^{ijy} + columns[(i, -j)] e^{-ijy}`.
pub(crate) struct PartialSumStream {
    n: usize,
    m: usize,
    nx: usize,
    ny: usize,
    columns: Vec<Complex64>,
    ey: Vec<Complex64>,
}

impl PartialSumStream {
    pub fn new(spec: &SpectralField, n: usize, m: usize, flag: ConjugacyFlag) -> Result<Self> {
        if n > spec.mx() {
            return Err(Error::Truncation {
                axis: Axis::X,
                degree: n,
                cutoff: spec.mx(),
            });
        }
        if m > spec.my() {
            return Err(Error::Truncation {
                axis: Axis::Y,
                degree: m,
                cutoff: spec.my(),
            });
        }
        let grid = spec.grid();
        let (nx, ny) = (grid.nx(), grid.ny());
        let ex = axis_phases(nx, n);
        let ey = axis_phases(ny, m);
        let wx = AxisTruncation::sharp(n).with_conjugate(flag.conj_x());
        let wy = AxisTruncation::sharp(m).with_conjugate(flag.conj_y());
        let height = 2 * m + 1;
        let mut columns = vec![Complex64::new(0.0, 0.0); (n + 1) * height * nx];
        let mut running = vec![Complex64::new(0.0, 0.0); nx];
        for kk in 0..height {
            let k = kk as i64 - m as i64;
            running
                .iter_mut()
                .for_each(|v| *v = Complex64::new(0.0, 0.0));
            for i in 0..=n {
                let ring: &[i64] = if i == 0 {
                    &[0]
                } else {
                    &[-(i as i64), i as i64]
                };
                for &j in ring {
                    let c = spec.get(j, k) * wx.weight(j) * wy.weight(k);
                    let phase = &ex[(j + n as i64) as usize * nx..][..nx];
                    for (r, p) in running.iter_mut().zip(phase) {
                        *r += c * p;
                    }
                }
                let at = (i * height + kk) * nx;
                columns[at..at + nx].copy_from_slice(&running);
            }
        }
        Ok(Self {
            n,
            m,
            nx,
            ny,
            columns,
            ey,
        })
    }

    fn column(&self, i: usize, k: i64) -> &[Complex64] {
        let kk = (k + self.m as i64) as usize;
        let at = (i * (2 * self.m + 1) + kk) * self.nx;
        &self.columns[at..at + self.nx]
    }

    /// Calls `visit(i, j, row)` with row `b` of `S̃_{i,j}` for all
    /// `i ≤ n`, `j ≤ m`, i-outer and j-inner ascending.
    pub fn for_each_in_row(&self, b: usize, mut visit: impl FnMut(usize, usize, &[Complex64])) {
        let mut row = vec![Complex64::new(0.0, 0.0); self.nx];
        for i in 0..=self.n {
            row.copy_from_slice(self.column(i, 0));
            visit(i, 0, &row);
            for j in 1..=self.m {
                let up = self.ey[(self.m + j) * self.ny + b];
                let down = self.ey[(self.m - j) * self.ny + b];
                let plus = self.column(i, j as i64);
                let minus = self.column(i, -(j as i64));
                for ((r, p), q) in row.iter_mut().zip(plus).zip(minus) {
                    *r += p * up + q * down;
                }
                visit(i, j, &row);
            }
        }
    }
}
