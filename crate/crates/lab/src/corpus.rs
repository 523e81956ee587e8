//! Test functions on the torus.

use std::fmt;
use std::sync::Arc;

use dfsum_core::{sample, SampledField, TorusGrid};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{LabError, LabResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassTag {
    Polynomial,
    Smooth,
    Discontinuous,
    LlogLStress,
}

impl ClassTag {
    pub fn name(self) -> &'static str {
        match self {
            ClassTag::Polynomial => "polynomial",
            ClassTag::Smooth => "smooth",
            ClassTag::Discontinuous => "discontinuous",
            ClassTag::LlogLStress => "llogl_stress",
        }
    }
}

type Evaluator = Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>;

#[derive(Clone)]
pub struct TestFunction {
    pub id: String,
    pub class: ClassTag,
    pub params: Vec<(String, f64)>,
    eval: Evaluator,
}

impl fmt::Debug for TestFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TestFunction")
            .field("id", &self.id)
            .field("class", &self.class)
            .field("params", &self.params)
            .finish()
    }
}

impl TestFunction {
    pub fn new(
        id: impl Into<String>,
        class: ClassTag,
        eval: impl Fn(f64, f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        Self {
            id: id.into(),
            class,
            params: Vec::new(),
            eval: Arc::new(eval),
        }
    }

    fn with_param(mut self, name: &str, value: f64) -> Self {
        self.params.push((name.to_string(), value));
        self
    }

    pub fn eval(&self, x: f64, y: f64) -> f64 {
        (self.eval)(x, y)
    }

    pub fn sample(&self, grid: &TorusGrid) -> LabResult<SampledField> {
        Ok(sample(|x, y| self.eval(x, y), grid)?)
    }
}

/// Real trigonometric polynomial with coefficients uniform in `[-1, 1)`:
/// `Σ a_{jk} cos(jx + ky) + b_{jk} sin(jx + ky)` over `0 ≤ j ≤ dx`, `|k| ≤ dy`.
pub fn random_polynomial(id: impl Into<String>, dx: usize, dy: usize, seed: u64) -> TestFunction {
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
    TestFunction::new(id, ClassTag::Polynomial, move |x, y| {
        terms
            .iter()
            .map(|&(j, k, a, b)| {
                let t = j * x + k * y;
                a * t.cos() + b * t.sin()
            })
            .sum()
    })
    .with_param("degree_x", dx as f64)
    .with_param("degree_y", dy as f64)
    .with_param("seed", seed as f64)
}

/// `min(a, 1/(|x| + |y|))`, with the value `a` at the origin.
pub fn spike(a: f64) -> TestFunction {
    TestFunction::new(format!("spike{a}"), ClassTag::LlogLStress, move |x, y| {
        let r = x.abs() + y.abs();
        if r * a <= 1.0 {
            a
        } else {
            1.0 / r
        }
    })
    .with_param("a", a)
}

pub fn smoothed_step() -> TestFunction {
    TestFunction::new("step", ClassTag::Discontinuous, |x, y| {
        (10.0 * x.sin()).tanh() * (10.0 * y.sin()).tanh()
    })
    .with_param("sharpness", 10.0)
}

/// Default corpus: `const`, `cosx`, `cosxcosy`, `poly4`, `step`, `spike10`,
/// `spike100`.
pub fn default_corpus(seed: u64) -> Vec<TestFunction> {
    vec![
        TestFunction::new("const", ClassTag::Polynomial, |_, _| 1.0),
        TestFunction::new("cosx", ClassTag::Polynomial, |x, _| x.cos()),
        TestFunction::new("cosxcosy", ClassTag::Polynomial, |x, y| x.cos() * y.cos()),
        random_polynomial("poly4", 4, 4, seed),
        smoothed_step(),
        spike(10.0),
        spike(100.0),
    ]
}

/// Functions selectable by id but not part of `all`.
fn extra_functions() -> Vec<TestFunction> {
    vec![
        TestFunction::new("zero", ClassTag::Polynomial, |_, _| 0.0),
        TestFunction::new("cosx_plus_cosy", ClassTag::Polynomial, |x, y| {
            x.cos() + y.cos()
        }),
    ]
}

/// `count` random polynomials of degree `(degree, degree)`, ids `rpoly0..`.
pub fn polynomial_corpus(count: usize, degree: usize, seed: u64) -> Vec<TestFunction> {
    (0..count)
        .map(|i| {
            random_polynomial(
                format!("rpoly{i}"),
                degree,
                degree,
                seed.wrapping_add(i as u64),
            )
        })
        .collect()
}

/// Resolves a selection: `None` means the whole default corpus.
pub fn select(ids: Option<&[String]>, seed: u64) -> LabResult<Vec<TestFunction>> {
    let all = default_corpus(seed);
    let Some(ids) = ids else {
        return Ok(all);
    };
    let pool: Vec<TestFunction> = all.into_iter().chain(extra_functions()).collect();
    ids.iter()
        .map(|id| {
            pool.iter()
                .find(|f| &f.id == id)
                .cloned()
                .ok_or_else(|| LabError::Config(format!("unknown function id `{id}`")))
        })
        .collect()
}
