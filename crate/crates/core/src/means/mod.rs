//! Logarithmic, Riesz and Fejér means of rectangular partial sums.
//!
//! The linear Nörlund logarithmic mean is
//! `t_{n,m} = (1/(l_n l_m)) Σ_{i≤n} Σ_{j≤m} S_{i,j} / ((n-i+1)(m-j+1))`
//! with `l_n = Σ_{k=1}^{n+1} 1/k`. The strong means replace `S_{i,j}` by
//! `|S̃^{ab}_{i,j} - center|` and use the Nörlund, Riesz (`1/((i+1)(j+1))`)
//! or Fejér (`1/((n+1)(m+1))`) weights.
//!
//! All partial sums needed by one mean are produced by [`PartialSumStream`],
//! which walks `(i, j)` in i-outer, j-inner ascending order and updates a
//! running row buffer one frequency ring at a time.

mod identities;
mod stream;

pub use identities::{
    decomposition_residual_1d, decomposition_residual_2d, hardy_identity_residual,
    hardy_identity_table, Decomposition2d, HardyTable, ResidualReport,
};
pub(crate) use stream::PartialSumStream;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::accum::sum_f64;
use crate::error::{Error, Result};
use crate::grid::SampledField;
use crate::spectral::{ConjugacyFlag, SpectralField};

/// `l_n = Σ_{k=1}^{n+1} 1/k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogWeights {
    pub n: usize,
    pub l: f64,
}

/// Partial harmonic sum through `n + 1` terms, compensated.
pub fn harmonic_sum(n: usize) -> LogWeights {
    LogWeights {
        n,
        l: sum_f64((1..=n + 1).map(|k| 1.0 / k as f64)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MeanFamily {
    /// Signed Nörlund logarithmic mean; as a "strong" output it yields
    /// `|t_{n,m} - center|`.
    NorlundLogLinear,
    NorlundLogStrong,
    RieszLogStrong,
    FejerStrong,
}

impl MeanFamily {
    pub fn name(&self) -> &'static str {
        match self {
            MeanFamily::NorlundLogLinear => "norlund_linear",
            MeanFamily::NorlundLogStrong => "norlund_strong",
            MeanFamily::RieszLogStrong => "riesz_strong",
            MeanFamily::FejerStrong => "fejer_strong",
        }
    }

    /// Separable weights `(w_x[i], w_y[j])` and the normalizer.
    fn weights(&self, n: usize, m: usize) -> (Vec<f64>, Vec<f64>, f64) {
        let reverse = |d: usize| {
            (0..=d)
                .map(|i| 1.0 / (d - i + 1) as f64)
                .collect::<Vec<_>>()
        };
        let forward = |d: usize| (0..=d).map(|i| 1.0 / (i + 1) as f64).collect::<Vec<_>>();
        match self {
            MeanFamily::NorlundLogLinear | MeanFamily::NorlundLogStrong => (
                reverse(n),
                reverse(m),
                harmonic_sum(n).l * harmonic_sum(m).l,
            ),
            MeanFamily::RieszLogStrong => (
                forward(n),
                forward(m),
                harmonic_sum(n).l * harmonic_sum(m).l,
            ),
            MeanFamily::FejerStrong => (
                vec![1.0; n + 1],
                vec![1.0; m + 1],
                ((n + 1) * (m + 1)) as f64,
            ),
        }
    }
}

/// Which mean to take, of which conjugate partial sums, and around what.
#[derive(Debug, Clone, Copy)]
pub struct MeanKind<'a> {
    pub family: MeanFamily,
    pub flag: ConjugacyFlag,
    /// Subtracted inside the absolute value (error means `|S_{i,j} - f|`).
    pub center: Option<&'a SampledField>,
}

impl<'a> MeanKind<'a> {
    pub fn new(family: MeanFamily) -> Self {
        Self {
            family,
            flag: ConjugacyFlag::NONE,
            center: None,
        }
    }

    pub fn with_flag(mut self, flag: ConjugacyFlag) -> Self {
        self.flag = flag;
        self
    }

    pub fn with_center(mut self, center: &'a SampledField) -> Self {
        self.center = Some(center);
        self
    }
}

#[inline]
pub(crate) fn fast_abs(z: Complex64) -> f64 {
    (z.re * z.re + z.im * z.im).sqrt()
}

/// Nörlund logarithmic mean `t_{n,m}(f)` (signed, complex).
pub fn norlund_log_mean(spec: &SpectralField, n: usize, m: usize) -> Result<SampledField> {
    linear_norlund_mean(spec, n, m, ConjugacyFlag::NONE)
}

/// Nörlund logarithmic mean of the conjugate partial sums `S̃^{ab}_{i,j}`.
pub fn linear_norlund_mean(
    spec: &SpectralField,
    n: usize,
    m: usize,
    flag: ConjugacyFlag,
) -> Result<SampledField> {
    let stream = PartialSumStream::new(spec, n, m, flag)?;
    let (wx, wy, norm) = MeanFamily::NorlundLogLinear.weights(n, m);
    let grid = *spec.grid();
    let nx = grid.nx();
    let mut values = vec![Complex64::new(0.0, 0.0); grid.len()];
    values.par_chunks_mut(nx).enumerate().for_each(|(b, row)| {
        stream.for_each_in_row(b, |i, j, s| {
            let w = wx[i] * wy[j];
            for (acc, v) in row.iter_mut().zip(s) {
                *acc += v * w;
            }
        });
        for v in row.iter_mut() {
            *v /= norm;
        }
    });
    Ok(SampledField::from_raw(grid, values))
}

/// Strong mean of the given kind; real, nonnegative output.
pub fn strong_mean(
    spec: &SpectralField,
    n: usize,
    m: usize,
    kind: &MeanKind<'_>,
) -> Result<SampledField> {
    Ok(
        strong_means(spec, n, m, kind.flag, kind.center, &[kind.family])?
            .pop()
            .expect("one family requested"),
    )
}

/// Several means of the same partial sums in one pass over `(i, j)`.
///
/// For [`MeanFamily::NorlundLogLinear`] the output is `|t_{n,m} - center|`,
/// accumulated as `|Σ w (S - center)| / (l_n l_m)` so it is bounded
/// pointwise by the strong Nörlund mean computed in the same pass.
pub fn strong_means(
    spec: &SpectralField,
    n: usize,
    m: usize,
    flag: ConjugacyFlag,
    center: Option<&SampledField>,
    families: &[MeanFamily],
) -> Result<Vec<SampledField>> {
    let grid = *spec.grid();
    if let Some(c) = center {
        if *c.grid() != grid {
            return Err(Error::GridMismatch(
                grid.nx(),
                grid.ny(),
                c.grid().nx(),
                c.grid().ny(),
            ));
        }
    }
    let stream = PartialSumStream::new(spec, n, m, flag)?;
    let nx = grid.nx();
    let plans: Vec<_> = families.iter().map(|f| f.weights(n, m)).collect();
    let zero_row = vec![Complex64::new(0.0, 0.0); nx];

    let rows: Vec<Vec<Vec<f64>>> = (0..grid.ny())
        .into_par_iter()
        .map(|b| {
            let c_row = center.map_or(zero_row.as_slice(), |c| c.row(b));
            let mut strong = vec![vec![0.0; nx]; families.len()];
            let mut linear = vec![Complex64::new(0.0, 0.0); nx];
            let mut diff = vec![0.0; nx];
            let linear_plan = families
                .iter()
                .position(|f| *f == MeanFamily::NorlundLogLinear);
            stream.for_each_in_row(b, |i, j, s| {
                for ((d, v), c) in diff.iter_mut().zip(s).zip(c_row) {
                    *d = fast_abs(v - c);
                }
                if let Some(p) = linear_plan {
                    let w = plans[p].0[i] * plans[p].1[j];
                    for ((acc, v), c) in linear.iter_mut().zip(s).zip(c_row) {
                        *acc += (v - c) * w;
                    }
                }
                for ((fam, out), (wx, wy, _)) in families.iter().zip(strong.iter_mut()).zip(&plans)
                {
                    if *fam == MeanFamily::NorlundLogLinear {
                        continue;
                    }
                    let w = wx[i] * wy[j];
                    for (acc, d) in out.iter_mut().zip(&diff) {
                        *acc += w * d;
                    }
                }
            });
            for ((fam, out), (_, _, norm)) in families.iter().zip(strong.iter_mut()).zip(&plans) {
                if *fam == MeanFamily::NorlundLogLinear {
                    for (o, l) in out.iter_mut().zip(&linear) {
                        *o = fast_abs(*l) / norm;
                    }
                } else {
                    for o in out.iter_mut() {
                        *o /= norm;
                    }
                }
            }
            strong
        })
        .collect();

    Ok((0..families.len())
        .map(|f| {
            let values = rows
                .iter()
                .flat_map(|row| row[f].iter().map(|&v| Complex64::new(v, 0.0)))
                .collect();
            SampledField::from_raw(grid, values)
        })
        .collect())
}

/// One-dimensional strong mean of a spectrum with no y-content
/// (`my = 0`); returns the `nx` samples along x.
pub fn strong_mean_1d(spec: &SpectralField, n: usize, kind: &MeanKind<'_>) -> Result<Vec<f64>> {
    if spec.my() != 0 {
        return Err(Error::NotOneDimensional(spec.my()));
    }
    let field = strong_mean(spec, n, 0, kind)?;
    Ok(field.row(0).iter().map(|v| v.re).collect())
}
