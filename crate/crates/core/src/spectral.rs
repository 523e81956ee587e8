//! Fourier coefficients and truncation operators on the torus.
//!
//! Every partial-sum operator here is a coefficient multiplier followed by
//! synthesis. Along one axis of degree `n` the multiplier for frequency `j` is
//!
//! * sharp truncation: `1` for `|j| <= n`, `0` beyond;
//! * modified truncation (kernel `D̄_n = (D_{n-1} + D_n)/2`): `1` for
//!   `|j| < n`, `1/2` for `|j| = n`, `0` beyond;
//! * conjugation: an extra factor `-i sign(j)` (so `j = 0` is dropped).
//!
//! Index convention: `(j, k)` is always (x-frequency, y-frequency). The
//! kernel-convolution path in [`oracle_partial_sum`] computes the same
//! operators from the closed-form kernels and is kept independent of the
//! FFT path so the two can check each other.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use rustfft::FftPlanner;

use crate::accum::{sum_complex, ComplexNeumaier};
use crate::error::{Error, Result};
use crate::grid::{axis_node, axis_phases, SampledField, TorusGrid, TORUS_AREA};
use crate::kernels::{conjugate_kernel, dirichlet, modified_dirichlet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
}

/// Selects which variables carry the `-i sign(·)` multiplier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ConjugacyFlag {
    a: u8,
    b: u8,
}

impl ConjugacyFlag {
    pub const NONE: Self = Self { a: 0, b: 0 };
    pub const X: Self = Self { a: 1, b: 0 };
    pub const Y: Self = Self { a: 0, b: 1 };
    pub const BOTH: Self = Self { a: 1, b: 1 };
    pub const ALL: [Self; 4] = [Self::NONE, Self::X, Self::Y, Self::BOTH];

    pub fn new(a: u8, b: u8) -> Result<Self> {
        if a > 1 || b > 1 {
            return Err(Error::Flag(a, b));
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> u8 {
        self.a
    }

    pub fn b(&self) -> u8 {
        self.b
    }

    pub fn conj_x(&self) -> bool {
        self.a == 1
    }

    pub fn conj_y(&self) -> bool {
        self.b == 1
    }

    /// `"ab"`, e.g. `"10"`.
    pub fn label(&self) -> String {
        format!("{}{}", self.a, self.b)
    }
}

/// One-axis truncation rule: degree, conjugation and edge halving.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AxisTruncation {
    pub degree: usize,
    pub conjugate: bool,
    pub modified: bool,
}

impl AxisTruncation {
    pub fn sharp(degree: usize) -> Self {
        Self {
            degree,
            conjugate: false,
            modified: false,
        }
    }

    pub fn conjugate(degree: usize) -> Self {
        Self {
            degree,
            conjugate: true,
            modified: false,
        }
    }

    pub fn modified(degree: usize) -> Self {
        Self {
            degree,
            conjugate: false,
            modified: true,
        }
    }

    pub fn with_conjugate(mut self, on: bool) -> Self {
        self.conjugate = on;
        self
    }

    /// Multiplier applied to frequency `j`.
    pub fn weight(&self, j: i64) -> Complex64 {
        let aj = j.unsigned_abs() as usize;
        if aj > self.degree {
            return Complex64::new(0.0, 0.0);
        }
        let w = if self.modified && aj == self.degree {
            0.5
        } else {
            1.0
        };
        if self.conjugate {
            // -i sign(j)
            Complex64::new(0.0, -(j.signum() as f64) * w)
        } else {
            Complex64::new(w, 0.0)
        }
    }

    fn check(&self, axis: Axis) -> Result<()> {
        if self.modified && self.degree == 0 {
            return Err(Error::ModifiedOrderZero(axis));
        }
        Ok(())
    }
}

/// Fourier coefficients `f̂(j, k)` for `|j| <= mx`, `|k| <= my`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralField {
    grid: TorusGrid,
    mx: usize,
    my: usize,
    coeffs: Vec<Complex64>,
}

impl SpectralField {
    /// Builds a coefficient table directly; `coeffs[(k + my) * (2mx + 1) + (j + mx)]`.
    pub fn from_coeffs(
        grid: TorusGrid,
        mx: usize,
        my: usize,
        coeffs: Vec<Complex64>,
    ) -> Result<Self> {
        check_cutoff(Axis::X, mx, grid.nx())?;
        check_cutoff(Axis::Y, my, grid.ny())?;
        let expected = (2 * mx + 1) * (2 * my + 1);
        if coeffs.len() != expected {
            return Err(Error::Length {
                expected,
                got: coeffs.len(),
            });
        }
        if let Some(index) = coeffs.iter().position(|c| !c.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        Ok(Self {
            grid,
            mx,
            my,
            coeffs,
        })
    }

    pub fn grid(&self) -> &TorusGrid {
        &self.grid
    }

    pub fn mx(&self) -> usize {
        self.mx
    }

    pub fn my(&self) -> usize {
        self.my
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    fn width(&self) -> usize {
        2 * self.mx + 1
    }

    /// Coefficient at `(j, k)`; zero outside the retained box.
    pub fn get(&self, j: i64, k: i64) -> Complex64 {
        if j.unsigned_abs() as usize > self.mx || k.unsigned_abs() as usize > self.my {
            return Complex64::new(0.0, 0.0);
        }
        let jj = (j + self.mx as i64) as usize;
        let kk = (k + self.my as i64) as usize;
        self.coeffs[kk * self.width() + jj]
    }

    /// Highest x- and y-frequencies whose coefficient exceeds `1e-11` times
    /// the largest coefficient magnitude.
    pub fn effective_degree(&self) -> (usize, usize) {
        let peak = self.coeffs.iter().fold(0.0_f64, |m, c| m.max(c.norm()));
        if peak == 0.0 {
            return (0, 0);
        }
        let floor = 1e-11 * peak;
        let mut dx = 0;
        let mut dy = 0;
        for k in -(self.my as i64)..=self.my as i64 {
            for j in -(self.mx as i64)..=self.mx as i64 {
                if self.get(j, k).norm() > floor {
                    dx = dx.max(j.unsigned_abs() as usize);
                    dy = dy.max(k.unsigned_abs() as usize);
                }
            }
        }
        (dx, dy)
    }

    /// Whether `f̂(-j,-k) = conj f̂(j,k)` holds within `tol`.
    pub fn is_hermitian(&self, tol: f64) -> bool {
        let (mx, my) = (self.mx as i64, self.my as i64);
        (-my..=my)
            .all(|k| (-mx..=mx).all(|j| (self.get(-j, -k) - self.get(j, k).conj()).norm() <= tol))
    }

    /// The band-limited function the table represents, on its own grid.
    pub fn synthesize_full(&self) -> SampledField {
        synthesize(
            self,
            AxisTruncation::sharp(self.mx),
            AxisTruncation::sharp(self.my),
        )
        .expect("full box is always within cutoffs")
    }

    /// Evaluates the truncated series at an arbitrary point.
    pub fn evaluate(&self, x: f64, y: f64) -> Complex64 {
        let (mx, my) = (self.mx as i64, self.my as i64);
        sum_complex((-my..=my).flat_map(|k| {
            (-mx..=mx).map(move |j| {
                self.get(j, k) * Complex64::new(0.0, j as f64 * x + k as f64 * y).exp()
            })
        }))
    }
}

fn check_cutoff(axis: Axis, cutoff: usize, len: usize) -> Result<()> {
    if 2 * cutoff >= len {
        return Err(Error::Aliasing { axis, cutoff, len });
    }
    Ok(())
}

#[inline]
fn parity(j: i64) -> f64 {
    if j.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Fourier coefficients of `field` up to `(mx, my)` via a 2-D FFT.
///
/// Node `a` sits at `-π + 2πa/n`, so `f̂(j,k) = (-1)^{j+k} DFT[j,k] / (nx ny)`.
pub fn coefficients(field: &SampledField, mx: usize, my: usize) -> Result<SpectralField> {
    let grid = *field.grid();
    let (nx, ny) = (grid.nx(), grid.ny());
    check_cutoff(Axis::X, mx, nx)?;
    check_cutoff(Axis::Y, my, ny)?;

    let mut planner = FftPlanner::<f64>::new();
    let row_fft = planner.plan_fft_forward(nx);
    let col_fft = planner.plan_fft_forward(ny);

    let mut data = field.values().to_vec();
    row_fft.process(&mut data);

    let width = 2 * mx + 1;
    let height = 2 * my + 1;
    let scale = 1.0 / (nx * ny) as f64;
    let mut coeffs = vec![Complex64::new(0.0, 0.0); width * height];
    let mut column = vec![Complex64::new(0.0, 0.0); ny];
    for j in -(mx as i64)..=mx as i64 {
        let col = j.rem_euclid(nx as i64) as usize;
        for (b, slot) in column.iter_mut().enumerate() {
            *slot = data[b * nx + col];
        }
        col_fft.process(&mut column);
        for k in -(my as i64)..=my as i64 {
            let row = k.rem_euclid(ny as i64) as usize;
            let idx = (k + my as i64) as usize * width + (j + mx as i64) as usize;
            coeffs[idx] = column[row] * (parity(j + k) * scale);
        }
    }
    SpectralField::from_coeffs(grid, mx, my, coeffs)
}

/// `(1/4π²) ∬ f e^{-ijx} e^{-iky}` by direct rectangle-rule quadrature.
pub fn quadrature_coefficient(field: &SampledField, j: i64, k: i64) -> Complex64 {
    let grid = field.grid();
    let xs = grid.xs();
    let ys = grid.ys();
    let mut acc = ComplexNeumaier::default();
    for (b, &y) in ys.iter().enumerate() {
        for (a, &x) in xs.iter().enumerate() {
            let phase = Complex64::new(0.0, -(j as f64 * x + k as f64 * y)).exp();
            acc.add(field.get(a, b) * phase);
        }
    }
    acc.value() * grid.cell_area() / TORUS_AREA
}

/// Synthesizes `Σ_k Σ_j w_x(j) w_y(k) f̂(j,k) e^{i(jx+ky)}` at every node.
///
/// Summation is k-outer, j-inner, both ascending, with compensated
/// accumulation; rows are processed independently so the result does not
/// depend on the thread schedule.
pub fn synthesize(
    spec: &SpectralField,
    xs: AxisTruncation,
    ys: AxisTruncation,
) -> Result<SampledField> {
    xs.check(Axis::X)?;
    ys.check(Axis::Y)?;
    if xs.degree > spec.mx {
        return Err(Error::Truncation {
            axis: Axis::X,
            degree: xs.degree,
            cutoff: spec.mx,
        });
    }
    if ys.degree > spec.my {
        return Err(Error::Truncation {
            axis: Axis::Y,
            degree: ys.degree,
            cutoff: spec.my,
        });
    }
    let grid = spec.grid;
    let (nx, ny) = (grid.nx(), grid.ny());
    let (dx, dy) = (xs.degree as i64, ys.degree as i64);
    let ex = axis_phases(nx, xs.degree);
    let ey = axis_phases(ny, ys.degree);

    // inner[k][a] = Σ_j w_x(j) f̂(j,k) e^{ijx_a}
    let mut inner = vec![Complex64::new(0.0, 0.0); (2 * ys.degree + 1) * nx];
    inner.par_chunks_mut(nx).enumerate().for_each(|(kk, out)| {
        let k = kk as i64 - dy;
        let terms: Vec<(usize, Complex64)> = (-dx..=dx)
            .map(|j| ((j + dx) as usize, spec.get(j, k) * xs.weight(j)))
            .collect();
        for (a, slot) in out.iter_mut().enumerate() {
            let mut acc = ComplexNeumaier::default();
            for &(jj, c) in &terms {
                acc.add(c * ex[jj * nx + a]);
            }
            *slot = acc.value();
        }
    });

    let wy: Vec<Complex64> = (-dy..=dy).map(|k| ys.weight(k)).collect();
    let mut values = vec![Complex64::new(0.0, 0.0); grid.len()];
    values.par_chunks_mut(nx).enumerate().for_each(|(b, row)| {
        let phases: Vec<Complex64> = (0..wy.len()).map(|kk| wy[kk] * ey[kk * ny + b]).collect();
        for (a, slot) in row.iter_mut().enumerate() {
            let mut acc = ComplexNeumaier::default();
            for (kk, p) in phases.iter().enumerate() {
                acc.add(inner[kk * nx + a] * p);
            }
            *slot = acc.value();
        }
    });
    Ok(SampledField::from_raw(grid, values))
}

/// Symmetric rectangular partial sum `S_{n,m}`.
pub fn partial_sum(spec: &SpectralField, n: usize, m: usize) -> Result<SampledField> {
    synthesize(spec, AxisTruncation::sharp(n), AxisTruncation::sharp(m))
}

/// Conjugate partial sum `S̃^{ab}_{n,m}`; flag `(0,0)` is exactly [`partial_sum`].
pub fn conjugate_partial_sum(
    spec: &SpectralField,
    n: usize,
    m: usize,
    flag: ConjugacyFlag,
) -> Result<SampledField> {
    synthesize(
        spec,
        AxisTruncation::sharp(n).with_conjugate(flag.conj_x()),
        AxisTruncation::sharp(m).with_conjugate(flag.conj_y()),
    )
}

/// Partial sum with `D̄` truncation on the selected axes and conjugation per `flag`.
pub fn modified_partial_sum(
    spec: &SpectralField,
    n: usize,
    m: usize,
    modified_x: bool,
    modified_y: bool,
    flag: ConjugacyFlag,
) -> Result<SampledField> {
    let xs = AxisTruncation {
        degree: n,
        conjugate: flag.conj_x(),
        modified: modified_x,
    };
    let ys = AxisTruncation {
        degree: m,
        conjugate: flag.conj_y(),
        modified: modified_y,
    };
    synthesize(spec, xs, ys)
}

/// Applies a one-axis truncation to every line of `field` along `axis`,
/// analysing each line with its own 1-D FFT.
pub fn axis_partial_sum(
    field: &SampledField,
    axis: Axis,
    rule: AxisTruncation,
) -> Result<SampledField> {
    rule.check(axis)?;
    let grid = *field.grid();
    let (nx, ny) = (grid.nx(), grid.ny());
    let (len, lines) = match axis {
        Axis::X => (nx, ny),
        Axis::Y => (ny, nx),
    };
    check_cutoff(axis, rule.degree, len)?;
    let fft = FftPlanner::<f64>::new().plan_fft_forward(len);
    let d = rule.degree as i64;
    let phases = axis_phases(len, rule.degree);
    let values = field.values();

    let out_lines: Vec<Vec<Complex64>> = (0..lines)
        .into_par_iter()
        .map(|line| {
            let mut buf: Vec<Complex64> = (0..len)
                .map(|t| match axis {
                    Axis::X => values[line * nx + t],
                    Axis::Y => values[t * nx + line],
                })
                .collect();
            fft.process(&mut buf);
            let scale = 1.0 / len as f64;
            let terms: Vec<Complex64> = (-d..=d)
                .map(|j| {
                    buf[j.rem_euclid(len as i64) as usize] * (parity(j) * scale) * rule.weight(j)
                })
                .collect();
            (0..len)
                .map(|t| {
                    let mut acc = ComplexNeumaier::default();
                    for (jj, c) in terms.iter().enumerate() {
                        acc.add(c * phases[jj * len + t]);
                    }
                    acc.value()
                })
                .collect()
        })
        .collect();

    let mut out = vec![Complex64::new(0.0, 0.0); grid.len()];
    for (line, vals) in out_lines.into_iter().enumerate() {
        for (t, v) in vals.into_iter().enumerate() {
            match axis {
                Axis::X => out[line * nx + t] = v,
                Axis::Y => out[t * nx + line] = v,
            }
        }
    }
    Ok(SampledField::from_raw(grid, out))
}

fn axis_kernel(rule: AxisTruncation, u: f64) -> f64 {
    let n = rule.degree;
    match (rule.conjugate, rule.modified) {
        (false, false) => dirichlet(n, u),
        (false, true) => modified_dirichlet(n, u),
        (true, false) => conjugate_kernel(n, u),
        (true, true) => 0.5 * (conjugate_kernel(n - 1, u) + conjugate_kernel(n, u)),
    }
}

/// Partial sums by direct quadrature of the kernel convolution
/// `(1/π²) ∬ f(s,t) K_x(x-s) K_y(y-t) ds dt`, with `K` one of `D`, `D̃`, `D̄`
/// per axis. Used as an independent check of the spectral path.
pub fn oracle_partial_sum(
    field: &SampledField,
    n: usize,
    m: usize,
    flag: ConjugacyFlag,
    modified_x: bool,
    modified_y: bool,
) -> Result<SampledField> {
    let grid = *field.grid();
    let (nx, ny) = (grid.nx(), grid.ny());
    if nx < 4 * (n + 1) {
        return Err(Error::Resolution {
            axis: Axis::X,
            degree: n,
            len: nx,
        });
    }
    if ny < 4 * (m + 1) {
        return Err(Error::Resolution {
            axis: Axis::Y,
            degree: m,
            len: ny,
        });
    }
    let rx = AxisTruncation {
        degree: n,
        conjugate: flag.conj_x(),
        modified: modified_x,
    };
    let ry = AxisTruncation {
        degree: m,
        conjugate: flag.conj_y(),
        modified: modified_y,
    };
    rx.check(Axis::X)?;
    ry.check(Axis::Y)?;

    // Kernel at every node offset: x_a - x_s = 2π(a - s)/n, reduced mod 2π.
    let kx: Vec<f64> = (0..nx)
        .map(|d| axis_kernel(rx, axis_node(d, nx) + PI))
        .collect();
    let ky: Vec<f64> = (0..ny)
        .map(|d| axis_kernel(ry, axis_node(d, ny) + PI))
        .collect();
    let cx = grid.hx() / PI;
    let cy = grid.hy() / PI;
    let values = field.values();

    let mut tmp = vec![Complex64::new(0.0, 0.0); grid.len()];
    tmp.par_chunks_mut(nx).enumerate().for_each(|(b, row)| {
        let src = &values[b * nx..(b + 1) * nx];
        for (a, slot) in row.iter_mut().enumerate() {
            let mut acc = ComplexNeumaier::default();
            for (s, v) in src.iter().enumerate() {
                acc.add(v * kx[(a + nx - s) % nx]);
            }
            *slot = acc.value() * cx;
        }
    });
    let mut out = vec![Complex64::new(0.0, 0.0); grid.len()];
    out.par_chunks_mut(nx).enumerate().for_each(|(b, row)| {
        for (a, slot) in row.iter_mut().enumerate() {
            let mut acc = ComplexNeumaier::default();
            for t in 0..ny {
                acc.add(tmp[t * nx + a] * ky[(b + ny - t) % ny]);
            }
            *slot = acc.value() * cy;
        }
    });
    Ok(SampledField::from_raw(grid, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{make_grid, sample};
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn coefficients_of_single_mode() {
        let g = make_grid(8, 8).unwrap();
        let f = sample(|x, y| c(0.0, x + 2.0 * y).exp(), &g).unwrap();
        let s = coefficients(&f, 2, 2).unwrap();
        for k in -2..=2 {
            for j in -2..=2 {
                let want = if (j, k) == (1, 2) { 1.0 } else { 0.0 };
                assert!((s.get(j, k) - want).norm() < 1e-12, "({j},{k})");
            }
        }
    }

    #[test]
    fn coefficients_of_cosine_and_constant() {
        let g = make_grid(8, 8).unwrap();
        let s = coefficients(&sample(|x, _| x.cos(), &g).unwrap(), 3, 3).unwrap();
        assert_abs_diff_eq!(s.get(1, 0).re, 0.5, epsilon = 1e-14);
        assert_abs_diff_eq!(s.get(-1, 0).re, 0.5, epsilon = 1e-14);
        assert!(s.get(0, 0).norm() < 1e-14);
        let s = coefficients(&sample(|_, _| 1.0, &g).unwrap(), 3, 3).unwrap();
        assert_abs_diff_eq!(s.get(0, 0).re, 1.0, epsilon = 1e-15);
        assert_eq!(s.effective_degree(), (0, 0));
    }

    #[test]
    fn coefficients_reject_aliasing_cutoff() {
        let g = make_grid(8, 8).unwrap();
        let f = SampledField::zeros(g);
        assert_eq!(
            coefficients(&f, 4, 1),
            Err(Error::Aliasing {
                axis: Axis::X,
                cutoff: 4,
                len: 8
            })
        );
        assert!(coefficients(&f, 3, 3).is_ok());
    }

    #[test]
    fn fft_coefficients_match_direct_quadrature() {
        let g = make_grid(16, 8).unwrap();
        let f = sample(
            |x, y| c((x - 0.3).exp().sin() * y.cos(), (2.0 * y + x).sin().powi(3)),
            &g,
        )
        .unwrap();
        let s = coefficients(&f, 7, 3).unwrap();
        for k in -3..=3 {
            for j in -7..=7 {
                let direct = quadrature_coefficient(&f, j, k);
                assert!((s.get(j, k) - direct).norm() < 1e-10);
            }
        }
    }

    #[test]
    fn real_field_gives_hermitian_table() {
        let g = make_grid(16, 16).unwrap();
        let f = sample(|x, y| (x + 0.2).sin().exp() * (2.0 * y).cos() + x.cos(), &g).unwrap();
        assert!(coefficients(&f, 7, 7).unwrap().is_hermitian(1e-12));
    }

    #[test]
    fn partial_sum_examples() {
        let g = make_grid(16, 16).unwrap();
        let f = sample(|x, y| x.cos() * y.cos(), &g).unwrap();
        let s = coefficients(&f, 4, 4).unwrap();
        assert!(partial_sum(&s, 1, 1).unwrap().sup_distance(&f).unwrap() < 1e-14);
        assert!(partial_sum(&s, 0, 0).unwrap().max_abs() < 1e-15);
        assert!(matches!(
            partial_sum(&s, 5, 1),
            Err(Error::Truncation { axis: Axis::X, .. })
        ));
    }

    #[test]
    fn conjugate_examples() {
        let g = make_grid(16, 16).unwrap();
        let cosx = coefficients(&sample(|x, _| x.cos(), &g).unwrap(), 3, 3).unwrap();
        let sinx = sample(|x, _| x.sin(), &g).unwrap();
        let got = conjugate_partial_sum(&cosx, 1, 0, ConjugacyFlag::X).unwrap();
        assert!(got.sup_distance(&sinx).unwrap() < 1e-14);

        let siny = coefficients(&sample(|_, y| y.sin(), &g).unwrap(), 3, 3).unwrap();
        let neg_cosy = sample(|_, y| -y.cos(), &g).unwrap();
        let got = conjugate_partial_sum(&siny, 0, 1, ConjugacyFlag::Y).unwrap();
        assert!(got.sup_distance(&neg_cosy).unwrap() < 1e-14);

        let plain = partial_sum(&cosx, 2, 3).unwrap();
        let flagged = conjugate_partial_sum(&cosx, 2, 3, ConjugacyFlag::NONE).unwrap();
        assert_eq!(plain, flagged);
    }

    #[test]
    fn modified_examples() {
        let g = make_grid(16, 16).unwrap();
        let cos2x = coefficients(&sample(|x, _| (2.0 * x).cos(), &g).unwrap(), 4, 4).unwrap();
        let half = sample(|x, _| 0.5 * (2.0 * x).cos(), &g).unwrap();
        let got = modified_partial_sum(&cos2x, 2, 0, true, false, ConjugacyFlag::NONE).unwrap();
        assert!(got.sup_distance(&half).unwrap() < 1e-14);

        let cosx_field = sample(|x, _| x.cos(), &g).unwrap();
        let cosx = coefficients(&cosx_field, 4, 4).unwrap();
        let got = modified_partial_sum(&cosx, 2, 0, true, false, ConjugacyFlag::NONE).unwrap();
        assert!(got.sup_distance(&cosx_field).unwrap() < 1e-14);

        let one = coefficients(&SampledField::constant(g, c(1.0, 0.0)), 4, 4).unwrap();
        let got = modified_partial_sum(&one, 3, 2, true, true, ConjugacyFlag::NONE).unwrap();
        assert!((got.values()[17] - 1.0).norm() < 1e-15);

        assert_eq!(
            modified_partial_sum(&one, 0, 2, true, false, ConjugacyFlag::NONE),
            Err(Error::ModifiedOrderZero(Axis::X))
        );
    }

    #[test]
    fn modified_weights_match_kernel_convolution_with_d_bar() {
        // Edge coefficient halved: convolution with D̄_2 on cos(2x).
        let g = make_grid(32, 8).unwrap();
        let f = sample(|x, _| (2.0 * x).cos(), &g).unwrap();
        let oracle = oracle_partial_sum(&f, 2, 0, ConjugacyFlag::NONE, true, false).unwrap();
        let half = sample(|x, _| 0.5 * (2.0 * x).cos(), &g).unwrap();
        assert!(oracle.sup_distance(&half).unwrap() < 1e-12);
    }

    #[test]
    fn oracle_examples() {
        let g = make_grid(16, 16).unwrap();
        let f = sample(|x, y| x.cos() * y.cos(), &g).unwrap();
        let got = oracle_partial_sum(&f, 1, 1, ConjugacyFlag::NONE, false, false).unwrap();
        assert!(got.sup_distance(&f).unwrap() < 1e-9);

        let f = sample(|x, _| x.cos(), &g).unwrap();
        let sinx = sample(|x, _| x.sin(), &g).unwrap();
        let got = oracle_partial_sum(&f, 1, 0, ConjugacyFlag::X, false, false).unwrap();
        assert!(got.sup_distance(&sinx).unwrap() < 1e-9);

        let one = SampledField::constant(g, c(1.0, 0.0));
        for n in 0..3 {
            let got = oracle_partial_sum(&one, n, 2, ConjugacyFlag::X, false, false).unwrap();
            assert!(got.max_abs() < 1e-9);
        }
        assert!(matches!(
            oracle_partial_sum(&one, 4, 0, ConjugacyFlag::NONE, false, false),
            Err(Error::Resolution { axis: Axis::X, .. })
        ));
    }

    #[test]
    fn axis_operators_compose_to_rectangular_sum() {
        let g = make_grid(16, 16).unwrap();
        let f = sample(|x, y| (x + 2.0 * y).cos() + (3.0 * x).sin() * y.sin(), &g).unwrap();
        let s = coefficients(&f, 7, 7).unwrap();
        let direct = partial_sum(&s, 2, 1).unwrap();
        let via_y = axis_partial_sum(&f, Axis::Y, AxisTruncation::sharp(1)).unwrap();
        let both = axis_partial_sum(&via_y, Axis::X, AxisTruncation::sharp(2)).unwrap();
        assert!(both.sup_distance(&direct).unwrap() < 1e-13);
    }

    #[test]
    fn evaluate_matches_synthesis_at_nodes() {
        let g = make_grid(8, 8).unwrap();
        let f = sample(|x, y| (x - y).cos() + (2.0 * y).sin(), &g).unwrap();
        let s = coefficients(&f, 3, 3).unwrap();
        let (x, y) = (g.x(3), g.y(5));
        assert!((s.evaluate(x, y) - f.get(3, 5)).norm() < 1e-13);
    }

    #[test]
    fn flag_validation() {
        assert_eq!(ConjugacyFlag::new(1, 0).unwrap(), ConjugacyFlag::X);
        assert_eq!(ConjugacyFlag::new(2, 0), Err(Error::Flag(2, 0)));
        assert_eq!(ConjugacyFlag::BOTH.label(), "11");
    }
}
