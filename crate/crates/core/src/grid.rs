//! Uniform discretization of the torus `[-π, π)²`.
//!
//! Node `j` on an axis of `n` points sits at `-π + 2πj/n`. Field values are
//! stored row-major with `y` as the outer index: `values[jy * nx + jx]`.
//! Quadrature is the plain rectangle rule, which is exact for trigonometric
//! polynomials of x-degree `< nx` and y-degree `< ny`.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::accum::sum_complex;
use crate::error::{Error, Result};

/// Area of the torus, `4π²`.
pub const TORUS_AREA: f64 = 4.0 * PI * PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TorusGrid {
    nx: usize,
    ny: usize,
}

impl TorusGrid {
    pub fn new(nx: usize, ny: usize) -> Result<Self> {
        let ok = |n: usize| n >= 4 && n.is_power_of_two();
        if !ok(nx) || !ok(ny) {
            return Err(Error::Sizing { nx, ny });
        }
        Ok(Self { nx, ny })
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn ny(&self) -> usize {
        self.ny
    }

    /// Total node count `nx * ny`.
    pub fn len(&self) -> usize {
        self.nx * self.ny
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn hx(&self) -> f64 {
        TAU / self.nx as f64
    }

    pub fn hy(&self) -> f64 {
        TAU / self.ny as f64
    }

    pub fn cell_area(&self) -> f64 {
        self.hx() * self.hy()
    }

    pub fn x(&self, jx: usize) -> f64 {
        axis_node(jx, self.nx)
    }

    pub fn y(&self, jy: usize) -> f64 {
        axis_node(jy, self.ny)
    }

    pub fn xs(&self) -> Vec<f64> {
        (0..self.nx).map(|j| self.x(j)).collect()
    }

    pub fn ys(&self) -> Vec<f64> {
        (0..self.ny).map(|j| self.y(j)).collect()
    }

    #[inline]
    pub fn index(&self, jx: usize, jy: usize) -> usize {
        jy * self.nx + jx
    }
}

pub fn make_grid(nx: usize, ny: usize) -> Result<TorusGrid> {
    TorusGrid::new(nx, ny)
}

#[inline]
pub(crate) fn axis_node(j: usize, n: usize) -> f64 {
    -PI + TAU * j as f64 / n as f64
}

/// Table of `e^{i j t_a}` for `j ∈ [-degree, degree]` and the `len` nodes
/// `t_a` of one axis, laid out as `[(j + degree) * len + a]`.
///
/// Built from the exact roots of unity: `e^{i j t_a} = (-1)^j e^{2πi ja/len}`.
pub(crate) fn axis_phases(len: usize, degree: usize) -> Vec<Complex64> {
    let roots: Vec<Complex64> = (0..len)
        .map(|r| {
            let t = TAU * r as f64 / len as f64;
            Complex64::new(t.cos(), t.sin())
        })
        .collect();
    let width = 2 * degree + 1;
    let mut table = Vec::with_capacity(width * len);
    for jj in 0..width {
        let j = jj as i64 - degree as i64;
        let sign = if j.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
        for a in 0..len {
            let r = (j * a as i64).rem_euclid(len as i64) as usize;
            table.push(roots[r] * sign);
        }
    }
    table
}

/// Complex samples of a function on a [`TorusGrid`].
#[derive(Debug, Clone, PartialEq)]
pub struct SampledField {
    grid: TorusGrid,
    values: Vec<Complex64>,
}

impl SampledField {
    /// Wraps `values` (row-major, y outer), checking length and finiteness.
    pub fn from_values(grid: TorusGrid, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::Length {
                expected: grid.len(),
                got: values.len(),
            });
        }
        if let Some(index) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        Ok(Self { grid, values })
    }

    pub fn from_real(grid: TorusGrid, values: &[f64]) -> Result<Self> {
        Self::from_values(
            grid,
            values.iter().map(|&v| Complex64::new(v, 0.0)).collect(),
        )
    }

    pub(crate) fn from_raw(grid: TorusGrid, values: Vec<Complex64>) -> Self {
        debug_assert_eq!(values.len(), grid.len());
        Self { grid, values }
    }

    pub fn constant(grid: TorusGrid, c: Complex64) -> Self {
        Self {
            grid,
            values: vec![c; grid.len()],
        }
    }

    pub fn zeros(grid: TorusGrid) -> Self {
        Self::constant(grid, Complex64::new(0.0, 0.0))
    }

    pub fn grid(&self) -> &TorusGrid {
        &self.grid
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Complex64> {
        self.values
    }

    pub fn get(&self, jx: usize, jy: usize) -> Complex64 {
        self.values[self.grid.index(jx, jy)]
    }

    pub fn row(&self, jy: usize) -> &[Complex64] {
        let nx = self.grid.nx;
        &self.values[jy * nx..(jy + 1) * nx]
    }

    pub fn real_parts(&self) -> Vec<f64> {
        self.values.iter().map(|v| v.re).collect()
    }

    pub fn abs(&self) -> Vec<f64> {
        self.values.iter().map(|v| v.norm()).collect()
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.norm()))
    }

    /// Largest imaginary part in absolute value.
    pub fn max_imag(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.im.abs()))
    }

    pub fn ensure_same_grid(&self, other: &SampledField) -> Result<()> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch(
                self.grid.nx,
                self.grid.ny,
                other.grid.nx,
                other.grid.ny,
            ));
        }
        Ok(())
    }

    /// Sup-norm distance `max |self - other|`.
    pub fn sup_distance(&self, other: &SampledField) -> Result<f64> {
        self.ensure_same_grid(other)?;
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .fold(0.0, |m, (a, b)| m.max((a - b).norm())))
    }

    pub fn scale(&self, c: Complex64) -> SampledField {
        Self::from_raw(self.grid, self.values.iter().map(|v| v * c).collect())
    }

    pub fn add(&self, other: &SampledField) -> Result<SampledField> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &SampledField) -> Result<SampledField> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn mul(&self, other: &SampledField) -> Result<SampledField> {
        self.zip_with(other, |a, b| a * b)
    }

    pub fn zip_with(
        &self,
        other: &SampledField,
        f: impl Fn(Complex64, Complex64) -> Complex64,
    ) -> Result<SampledField> {
        self.ensure_same_grid(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| f(a, b))
            .collect();
        Ok(Self::from_raw(self.grid, values))
    }

    /// Pointwise product with `g(x)`.
    pub fn mul_by_x(&self, g: impl Fn(f64) -> f64) -> SampledField {
        let gx: Vec<f64> = self.grid.xs().into_iter().map(g).collect();
        let nx = self.grid.nx;
        let values = self
            .values
            .iter()
            .enumerate()
            .map(|(i, v)| v * gx[i % nx])
            .collect();
        Self::from_raw(self.grid, values)
    }

    /// Pointwise product with `g(y)`.
    pub fn mul_by_y(&self, g: impl Fn(f64) -> f64) -> SampledField {
        let gy: Vec<f64> = self.grid.ys().into_iter().map(g).collect();
        let nx = self.grid.nx;
        let values = self
            .values
            .iter()
            .enumerate()
            .map(|(i, v)| v * gy[i / nx])
            .collect();
        Self::from_raw(self.grid, values)
    }

    /// Periodic bilinear interpolant. Points that land on a node (to 1e-9
    /// in index units) return the stored value unchanged.
    pub fn interpolate(&self, x: f64, y: f64) -> Complex64 {
        let (ax, fx) = locate(x, self.grid.nx);
        let (ay, fy) = locate(y, self.grid.ny);
        if fx == 0.0 && fy == 0.0 {
            return self.get(ax, ay);
        }
        let bx = (ax + 1) % self.grid.nx;
        let by = (ay + 1) % self.grid.ny;
        let lower = self.get(ax, ay) * (1.0 - fx) + self.get(bx, ay) * fx;
        let upper = self.get(ax, by) * (1.0 - fx) + self.get(bx, by) * fx;
        lower * (1.0 - fy) + upper * fy
    }
}

fn locate(t: f64, n: usize) -> (usize, f64) {
    let pos = (t + PI).rem_euclid(TAU) * n as f64 / TAU;
    let nearest = pos.round();
    if (pos - nearest).abs() < 1e-9 {
        return ((nearest as usize) % n, 0.0);
    }
    let base = pos.floor();
    ((base as usize) % n, pos - base)
}

/// Samples `f` at every node of `grid`.
pub fn sample<T: Into<Complex64>>(
    f: impl Fn(f64, f64) -> T,
    grid: &TorusGrid,
) -> Result<SampledField> {
    let xs = grid.xs();
    let ys = grid.ys();
    let mut values = Vec::with_capacity(grid.len());
    for (jy, &y) in ys.iter().enumerate() {
        for (jx, &x) in xs.iter().enumerate() {
            let v: Complex64 = f(x, y).into();
            if !v.is_finite() {
                return Err(Error::Sampling {
                    jx,
                    jy,
                    x,
                    y,
                    value: v.to_string(),
                });
            }
            values.push(v);
        }
    }
    Ok(SampledField::from_raw(*grid, values))
}

/// Rectangle-rule approximation of `∬_{T²} f`.
pub fn quad_integral(field: &SampledField) -> Complex64 {
    sum_complex(field.values.iter().copied()) * field.grid.cell_area()
}

/// Rectangle rule applied to a real function of the samples, `h_x h_y Σ g(v)`.
pub fn quad_map(field: &SampledField, g: impl Fn(Complex64) -> f64) -> f64 {
    crate::accum::sum_f64(field.values.iter().map(|&v| g(v))) * field.grid.cell_area()
}
