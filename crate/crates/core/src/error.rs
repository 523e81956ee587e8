use thiserror::Error;

use crate::spectral::Axis;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("grid size {nx}x{ny} invalid: both counts must be powers of two and at least 4")]
    Sizing { nx: usize, ny: usize },

    #[error("non-finite sample {value} at node ({jx}, {jy}) = ({x}, {y})")]
    Sampling {
        jx: usize,
        jy: usize,
        x: f64,
        y: f64,
        value: String,
    },

    #[error("field has {got} values, grid expects {expected}")]
    Length { expected: usize, got: usize },

    #[error("field contains a non-finite value at flat index {index}")]
    NonFinite { index: usize },

    #[error(
        "cutoff {cutoff} on {axis:?} aliases on a grid of {len} points (need 2*cutoff < {len})"
    )]
    Aliasing {
        axis: Axis,
        cutoff: usize,
        len: usize,
    },

    #[error("degree {degree} on {axis:?} exceeds the retained cutoff {cutoff}")]
    Truncation {
        axis: Axis,
        degree: usize,
        cutoff: usize,
    },

    #[error("degree {degree} on {axis:?} too large for a {len}-point convolution (need len >= 4*(degree+1))")]
    Resolution {
        axis: Axis,
        degree: usize,
        len: usize,
    },

    #[error("conjugate Dirichlet kernel is defined for orders m >= 1, got {0}")]
    ConjugateOrder(usize),

    #[error("kernel order {0} exceeds the supported maximum 2^20")]
    KernelOrder(usize),

    #[error("modified truncation on {0:?} requires degree >= 1")]
    ModifiedOrderZero(Axis),

    #[error("cutoff {cutoff} on {axis:?} cannot hold the {needed} frequencies the product needs")]
    CutoffInsufficient {
        axis: Axis,
        needed: usize,
        cutoff: usize,
    },

    #[error("index {index} out of range 0..={degree}")]
    Index { index: usize, degree: usize },

    #[error("expected a one-dimensional spectrum (y cutoff 0), got y cutoff {0}")]
    NotOneDimensional(usize),

    #[error("operand grids differ: {0}x{1} vs {2}x{3}")]
    GridMismatch(usize, usize, usize, usize),

    #[error("exponent p must be positive, got {0}")]
    Exponent(f64),

    #[error("threshold must be positive, got {0}")]
    Threshold(f64),

    #[error("Luxemburg modular stays above 1 for every scale up to {0:e}")]
    LuxemburgDivergence(f64),

    #[error("Young function `{label}` violates {what}")]
    YoungFunction { label: String, what: &'static str },

    #[error("conjugacy flag components must be 0 or 1, got ({0}, {1})")]
    Flag(u8, u8),

    #[error("mean family {0} is not available in this operation")]
    Family(&'static str),
}
