//! Double Fourier series on the torus `T² = [-π, π)²`.
//!
//! Sampled fields live on uniform power-of-two grids. From their discrete
//! Fourier coefficients the crate builds rectangular, conjugate and modified
//! partial sums, logarithmic Nörlund, Riesz and Fejér strong means, and the
//! `L_p`, `L log L` and Orlicz functionals used to measure them. A direct
//! kernel-convolution path is kept alongside the spectral one as an oracle.

mod accum;
pub mod error;
pub mod grid;
pub mod kernels;
pub mod means;
pub mod norms;
pub mod spectral;

pub use error::{Error, Result};
pub use grid::{make_grid, quad_integral, quad_map, sample, SampledField, TorusGrid, TORUS_AREA};
pub use kernels::{
    conjugate_dirichlet, dirichlet, modified_dirichlet, scan_points, KernelKind, KernelTag,
};
pub use means::{
    harmonic_sum, linear_norlund_mean, norlund_log_mean, strong_mean, strong_mean_1d, strong_means,
    LogWeights, MeanFamily, MeanKind,
};
pub use norms::{
    exceedance_measure, llogl_modular, lp_quasinorm, luxemburg_norm, ExceedanceReport,
    YoungFunction,
};
pub use spectral::{
    axis_partial_sum, coefficients, conjugate_partial_sum, modified_partial_sum,
    oracle_partial_sum, partial_sum, synthesize, Axis, AxisTruncation, ConjugacyFlag,
    SpectralField,
};
