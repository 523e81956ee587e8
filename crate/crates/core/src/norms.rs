//! Size functionals on sampled fields: `L_p` quasinorms, the `L log L`
//! modular, Luxemburg norms of Orlicz spaces and the exceedance measure used
//! as a convergence-in-measure metric.

use std::fmt;
use std::sync::Arc;

use crate::accum::sum_f64;
use crate::error::{Error, Result};
use crate::grid::{quad_map, SampledField, TORUS_AREA};

type Evaluator = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Convex generator `Q` of an Orlicz space. The evaluator is always applied
/// to `|u|`.
#[derive(Clone)]
pub struct YoungFunction {
    label: String,
    q: Evaluator,
}

impl fmt::Debug for YoungFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("YoungFunction")
            .field("label", &self.label)
            .finish()
    }
}

/// `log⁺ u = max(log u, 0)`.
pub fn log_plus(u: f64) -> f64 {
    if u > 1.0 {
        u.ln()
    } else {
        0.0
    }
}

impl YoungFunction {
    /// Wraps an evaluator after spot checks: `Q(0) = 0`, nonnegative and
    /// finite values, and `Q(u)/u` larger at `1e6` than at `1e-6`.
    pub fn new(
        label: impl Into<String>,
        q: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Result<Self> {
        let f = Self {
            label: label.into(),
            q: Arc::new(q),
        };
        f.validate()?;
        Ok(f)
    }

    /// `Q(u) = u log⁺ u`.
    pub fn llogl() -> Self {
        Self {
            label: "u*log+(u)".to_string(),
            q: Arc::new(|u| u * log_plus(u)),
        }
    }

    /// `c · Q`.
    pub fn scaled(&self, c: f64) -> Result<Self> {
        let q = Arc::clone(&self.q);
        Self::new(format!("{c}*{}", self.label), move |u| c * q(u))
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn eval(&self, u: f64) -> f64 {
        (self.q)(u.abs())
    }

    fn validate(&self) -> Result<()> {
        let fail = |what| {
            Err(Error::YoungFunction {
                label: self.label.clone(),
                what,
            })
        };
        if self.eval(0.0) != 0.0 {
            return fail("Q(0) = 0");
        }
        for u in [1e-6, 0.5, 1.0, 2.0, 1e6] {
            let v = self.eval(u);
            if !v.is_finite() || v < 0.0 {
                return fail("finite nonnegative values");
            }
        }
        if self.eval(1e6) / 1e6 <= self.eval(1e-6) / 1e-6 {
            return fail("Q(u)/u growing from 0 to infinity");
        }
        Ok(())
    }
}

/// Exceedance of a threshold measured by node counting.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExceedanceReport {
    pub epsilon: f64,
    /// `node_fraction · 4π²`.
    pub measure: f64,
    pub node_fraction: f64,
}

/// `(∬ |f|^p)^{1/p}` by the rectangle rule. Any `p > 0` is accepted.
pub fn lp_quasinorm(field: &SampledField, p: f64) -> Result<f64> {
    if p.is_nan() || p <= 0.0 || p.is_infinite() {
        return Err(Error::Exponent(p));
    }
    let integral = quad_map(field, |z| z.norm().powf(p));
    Ok(integral.powf(1.0 / p))
}

/// `∬ |f| log⁺|f|`.
pub fn llogl_modular(field: &SampledField) -> f64 {
    quad_map(field, |z| {
        let u = z.norm();
        u * log_plus(u)
    })
}

const LUX_REL_TOL: f64 = 1e-10;
const LUX_MAX_SCALE: f64 = 1e18;

/// `inf{k > 0 : ∬ Q(|f|/k) ≤ 1}` by bisection on `k`.
///
/// The returned `k` satisfies the modular bound; the lower end of the final
/// bracket, within relative distance `1e-10`, does not. A zero field gives 0.
pub fn luxemburg_norm(field: &SampledField, q: &YoungFunction) -> Result<f64> {
    let abs = field.abs();
    let max = abs.iter().copied().fold(0.0, f64::max);
    if max == 0.0 {
        return Ok(0.0);
    }
    let area = field.grid().cell_area();
    let modular = |k: f64| area * sum_f64(abs.iter().map(|&u| q.eval(u / k)));

    let mut hi = max;
    while modular(hi) > 1.0 {
        hi *= 2.0;
        if hi > LUX_MAX_SCALE {
            return Err(Error::LuxemburgDivergence(LUX_MAX_SCALE));
        }
    }
    let mean = area * sum_f64(abs.iter().copied()) / TORUS_AREA;
    let mut lo = (mean * 0.5).min(hi * 0.5);
    while modular(lo) <= 1.0 {
        hi = lo;
        lo *= 0.5;
        if lo < f64::MIN_POSITIVE {
            return Ok(hi);
        }
    }
    while hi - lo > LUX_REL_TOL * hi {
        let mid = 0.5 * (lo + hi);
        if modular(mid) <= 1.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

/// Fraction and measure of nodes with `|f| > epsilon`.
pub fn exceedance_measure(field: &SampledField, epsilon: f64) -> Result<ExceedanceReport> {
    if epsilon.is_nan() || epsilon <= 0.0 || epsilon.is_infinite() {
        return Err(Error::Threshold(epsilon));
    }
    let count = field.values().iter().filter(|z| z.norm() > epsilon).count();
    let node_fraction = count as f64 / field.grid().len() as f64;
    Ok(ExceedanceReport {
        epsilon,
        measure: node_fraction * TORUS_AREA,
        node_fraction,
    })
}
