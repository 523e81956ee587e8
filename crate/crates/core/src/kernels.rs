//! Closed-form Dirichlet-type kernels on the circle.
//!
//! All kernels are 2π-periodic; the argument is reduced to `[-π, π]` before
//! evaluation. Inside the guard band `|sin(u/2)| < 1e-9` each kernel switches
//! to its Taylor expansion around `u = 0` so grid nodes that hit the
//! removable singularity exactly get the limit value.

use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};

/// Largest supported kernel order.
pub const MAX_ORDER: usize = 1 << 20;

const GUARD: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KernelTag {
    Dirichlet,
    ConjugateDirichlet,
    ModifiedDirichlet,
}

impl KernelTag {
    pub const ALL: [KernelTag; 3] = [
        KernelTag::Dirichlet,
        KernelTag::ConjugateDirichlet,
        KernelTag::ModifiedDirichlet,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            KernelTag::Dirichlet => "dirichlet",
            KernelTag::ConjugateDirichlet => "conjugate_dirichlet",
            KernelTag::ModifiedDirichlet => "modified_dirichlet",
        }
    }
}

/// A kernel family together with a validated order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct KernelKind {
    tag: KernelTag,
    order: usize,
}

impl KernelKind {
    pub fn new(tag: KernelTag, order: usize) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::KernelOrder(order));
        }
        if tag == KernelTag::ConjugateDirichlet && order == 0 {
            return Err(Error::ConjugateOrder(0));
        }
        Ok(Self { tag, order })
    }

    pub fn tag(&self) -> KernelTag {
        self.tag
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn eval(&self, u: f64) -> f64 {
        match self.tag {
            KernelTag::Dirichlet => dirichlet(self.order, u),
            KernelTag::ConjugateDirichlet => conjugate_kernel(self.order, u),
            KernelTag::ModifiedDirichlet => modified_dirichlet(self.order, u),
        }
    }
}

fn reduce(u: f64) -> f64 {
    u - TAU * (u / TAU).round()
}

/// `D_n(u) = sin((n + 1/2)u) / (2 sin(u/2)) = 1/2 + Σ_{k=1}^{n} cos(ku)`.
pub fn dirichlet(n: usize, u: f64) -> f64 {
    let r = reduce(u);
    let s = (r / 2.0).sin();
    let nf = n as f64;
    if s.abs() < GUARD {
        // 1/2 + Σ cos(kr) ≈ n + 1/2 - r²/2 Σ k²
        let k2 = nf * (nf + 1.0) * (2.0 * nf + 1.0) / 6.0;
        return nf + 0.5 - 0.5 * r * r * k2;
    }
    ((nf + 0.5) * r).sin() / (2.0 * s)
}

/// Conjugate Dirichlet kernel
/// `D̃_m(u) = 1/(2 tan(u/2)) - cos((m + 1/2)u)/(2 sin(u/2)) = Σ_{k=1}^{m} sin(ku)`,
/// the kernel of the conjugate partial sum (multiplier `-i sign j`).
///
/// Orders start at 1; `m = 0` is rejected.
pub fn conjugate_dirichlet(m: usize, u: f64) -> Result<f64> {
    if m == 0 {
        return Err(Error::ConjugateOrder(0));
    }
    Ok(conjugate_kernel(m, u))
}

/// Same as [`conjugate_dirichlet`] but accepts `m = 0`, where the kernel is
/// the empty sum.
pub(crate) fn conjugate_kernel(m: usize, u: f64) -> f64 {
    let r = reduce(u);
    let s = (r / 2.0).sin();
    let mf = m as f64;
    if s.abs() < GUARD {
        // Σ sin(kr) ≈ r Σk - r³/6 Σk³
        let k1 = mf * (mf + 1.0) / 2.0;
        return r * k1 - r * r * r * k1 * k1 / 6.0;
    }
    // (cos(r/2) - cos((m+1/2)r)) / (2 sin(r/2)) in product form, which
    // avoids cancelling two O(1/r) terms near the origin.
    ((mf + 1.0) * r / 2.0).sin() * (mf * r / 2.0).sin() / s
}

/// Modified Dirichlet kernel `D̄_n(u) = sin(nu) / (2 tan(u/2))`, equal to
/// `(D_{n-1}(u) + D_n(u)) / 2` for `n >= 1`.
pub fn modified_dirichlet(n: usize, u: f64) -> f64 {
    if n == 0 {
        return 0.0;
    }
    let r = reduce(u);
    let s = (r / 2.0).sin();
    let nf = n as f64;
    if s.abs() < GUARD {
        // 1/2 + Σ_{k<n} cos(kr) + cos(nr)/2 ≈ n - r²/2 (Σ_{k<n} k² + n²/2)
        let k2 = (nf - 1.0) * nf * (2.0 * nf - 1.0) / 6.0 + nf * nf / 2.0;
        return nf - 0.5 * r * r * k2;
    }
    (nf * r).sin() * (r / 2.0).cos() / (2.0 * s)
}

/// Uniform scan of `samples` points over `[-π, π]`; for odd `samples` the
/// midpoint is exactly `u = 0`.
pub fn scan_points(samples: usize) -> Vec<f64> {
    if samples < 2 {
        return vec![0.0; samples];
    }
    let last = (samples - 1) as f64;
    (0..samples).map(|s| -PI + TAU * s as f64 / last).collect()
}
