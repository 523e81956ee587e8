#![allow(dead_code)]

use dfsum_core::{coefficients, make_grid, SampledField, SpectralField, TorusGrid};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Real trigonometric polynomial with random coefficients of degree at most
/// `(dx, dy)`, sampled on `grid`.
pub fn random_poly(grid: TorusGrid, dx: usize, dy: usize, seed: u64) -> SampledField {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut terms = Vec::new();
    for j in 0..=dx as i64 {
        for k in -(dy as i64)..=dy as i64 {
            if j == 0 && k < 0 {
                continue;
            }
            let a: f64 = rng.gen_range(-1.0..1.0);
            let b: f64 = if j == 0 && k == 0 {
                0.0
            } else {
                rng.gen_range(-1.0..1.0)
            };
            terms.push((j as f64, k as f64, a, b));
        }
    }
    let mut values = Vec::with_capacity(grid.len());
    for jy in 0..grid.ny() {
        for jx in 0..grid.nx() {
            let (x, y) = (grid.x(jx), grid.y(jy));
            let v: f64 = terms
                .iter()
                .map(|&(j, k, a, b)| a * (j * x + k * y).cos() + b * (j * x + k * y).sin())
                .sum();
            values.push(Complex64::new(v, 0.0));
        }
    }
    SampledField::from_values(grid, values).unwrap()
}

pub fn random_spec(n: usize, dx: usize, dy: usize, cutoff: usize, seed: u64) -> SpectralField {
    let grid = make_grid(n, n).unwrap();
    coefficients(&random_poly(grid, dx, dy, seed), cutoff, cutoff).unwrap()
}
