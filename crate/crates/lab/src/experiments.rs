//! Experiment drivers. Each returns a report in deterministic key order.

use dfsum_core::means::{
    decomposition_residual_1d, decomposition_residual_2d, hardy_identity_residual,
};
use dfsum_core::{
    coefficients, exceedance_measure, llogl_modular, lp_quasinorm, make_grid, sample, scan_points,
    strong_mean, strong_means, ConjugacyFlag, KernelKind, KernelTag, MeanFamily, MeanKind,
    SampledField, TorusGrid,
};

use crate::config::LabConfig;
use crate::corpus::{self, ClassTag, TestFunction};
use crate::error::LabResult;
use crate::report::{SweepReport, SweepRow};

/// Largest acceptable sup residual of an exact identity.
pub const IDENTITY_TOL: f64 = 1e-9;
/// Slack allowed in `|t_{n,m} - f| ≤ strong error mean`.
pub const DOMINATION_TOL: f64 = 1e-12;

struct RowSink<'a> {
    report: SweepReport,
    function_id: &'a str,
    grid: TorusGrid,
}

impl<'a> RowSink<'a> {
    fn new(function_id: &'a str, grid: TorusGrid) -> Self {
        Self {
            report: SweepReport::default(),
            function_id,
            grid,
        }
    }

    fn push(
        &mut self,
        n: usize,
        m: usize,
        param: String,
        metric: &str,
        value: Option<f64>,
        note: String,
    ) {
        self.report.push(SweepRow {
            function_id: self.function_id.to_string(),
            n,
            m,
            param,
            metric: metric.to_string(),
            value,
            grid_nx: self.grid.nx(),
            grid_ny: self.grid.ny(),
            note,
        });
    }

    fn value(&mut self, n: usize, m: usize, param: String, metric: &str, value: f64) {
        self.push(n, m, param, metric, Some(value), String::new());
    }

    /// Residual row checked against `tol`, or an error row.
    fn residual(
        &mut self,
        n: usize,
        m: usize,
        param: String,
        metric: &str,
        result: dfsum_core::Result<f64>,
        tol: f64,
    ) {
        match result {
            Ok(v) => {
                let note = if v <= tol { "ok" } else { "FAIL" };
                self.push(n, m, param, metric, Some(v), note.to_string());
            }
            Err(e) => self.push(n, m, param, metric, None, format!("error: {e}")),
        }
    }
}

fn identity_functions(config: &LabConfig) -> LabResult<Vec<TestFunction>> {
    let selected = corpus::select(config.funcs.as_deref(), config.seed)?;
    Ok(match config.funcs {
        Some(_) => selected,
        None => selected
            .into_iter()
            .filter(|f| f.class == ClassTag::Polynomial)
            .collect(),
    })
}

fn inner_indices(n: usize) -> Vec<usize> {
    let mut v = vec![0, n / 2, n];
    v.dedup();
    v
}

/// Residuals of the Hardy identity (all four conjugacy flags) and of the 1-D
/// and 2-D splittings, for every selected function and schedule degree.
///
/// Without an explicit selection only polynomial corpus members are used.
/// Each row is marked `ok`, `FAIL` (residual above [`IDENTITY_TOL`]) or
/// `error: ...`; degrees above `grid/4` yield error rows.
pub fn run_identity_suite(config: &LabConfig) -> LabResult<SweepReport> {
    config.validate()?;
    let n_grid = config.grid;
    let grid = make_grid(n_grid, n_grid)?;
    let line = make_grid(n_grid, 4)?;
    let cutoff = n_grid / 2 - 1;
    let mut report = SweepReport::default();

    for f in identity_functions(config)? {
        let spec = coefficients(&f.sample(&grid)?, cutoff, cutoff)?;
        let restricted = sample(|x, _| f.eval(x, 0.0), &line)?;
        let spec_1d = coefficients(&restricted, cutoff, 0)?;
        let mut sink = RowSink::new(&f.id, grid);

        for &n in &config.degrees {
            if n > n_grid / 4 {
                sink.push(
                    n,
                    n,
                    String::new(),
                    "resolution",
                    None,
                    format!("error: degree {n} exceeds grid/4 = {}", n_grid / 4),
                );
                continue;
            }
            for flag in ConjugacyFlag::ALL {
                let r = hardy_identity_residual(&spec, n, n, flag).map(|r| r.sup);
                sink.residual(
                    n,
                    n,
                    format!("flag={}", flag.label()),
                    "hardy_sup",
                    r,
                    IDENTITY_TOL,
                );
            }
            for k in 0..=n {
                let r = decomposition_residual_1d(&spec_1d, n, k).map(|r| r.sup);
                sink.residual(n, n, format!("k={k}"), "decomp1d_sup", r, IDENTITY_TOL);
            }
            for &i in &inner_indices(n) {
                for &j in &inner_indices(n) {
                    let param = format!("i={i};j={j}");
                    match decomposition_residual_2d(&spec, n, n, i, j) {
                        Ok(d) => {
                            for (metric, r) in [
                                ("factorization_sup", d.factorization),
                                ("expansion_sup", d.expansion),
                                ("i1_expansion_sup", d.i1_expansion),
                            ] {
                                sink.residual(n, n, param.clone(), metric, Ok(r.sup), IDENTITY_TOL);
                            }
                        }
                        Err(e) => sink.residual(n, n, param, "decomp2d", Err(e), IDENTITY_TOL),
                    }
                }
            }
        }
        report.extend(sink.report);
    }
    Ok(report)
}

fn max_degree(config: &LabConfig) -> usize {
    config.degrees.iter().copied().max().unwrap_or(0)
}

/// For each function and diagonal degree: the `L_p` quasinorm of the strong
/// Nörlund mean `τ_{n,n}(f)` (no centering), its ratio to
/// `llogl_modular(f) + 1`, and the running maximum of that ratio.
pub fn run_bound_sweep(config: &LabConfig) -> LabResult<SweepReport> {
    config.validate_schedule()?;
    let grid = make_grid(config.grid, config.grid)?;
    let cutoff = max_degree(config);
    let kind = MeanKind::new(MeanFamily::NorlundLogStrong);
    let mut report = SweepReport::default();

    for f in corpus::select(config.funcs.as_deref(), config.seed)? {
        let field = f.sample(&grid)?;
        let spec = coefficients(&field, cutoff, cutoff)?;
        let modular = llogl_modular(&field);
        let mut sink = RowSink::new(&f.id, grid);
        sink.value(0, 0, String::new(), "llogl_modular", modular);
        let mut running = vec![0.0_f64; config.p.len()];
        for &n in &config.degrees {
            let tau = strong_mean(&spec, n, n, &kind)?;
            for (&p, run) in config.p.iter().zip(running.iter_mut()) {
                let lp = lp_quasinorm(&tau, p)?;
                let ratio = lp / (modular + 1.0);
                *run = run.max(ratio);
                sink.value(n, n, format!("p={p}"), "lp_strong_norlund", lp);
                sink.value(n, n, format!("p={p}"), "ratio", ratio);
                sink.value(n, n, format!("p={p}"), "running_max_ratio", *run);
            }
        }
        report.extend(sink.report);
    }
    Ok(report)
}

fn exceedance(field: &SampledField, eps: f64) -> LabResult<f64> {
    Ok(exceedance_measure(field, eps)?.measure)
}

/// For each function and diagonal degree: `L_p` size and exceedance measure
/// of the strong Nörlund error mean `(1/(l_n l_m)) Σ |S_{i,j} - f| / ((n-i+1)(m-j+1))`
/// and of the linear error `|t_{n,m}(f) - f|`, plus the largest pointwise
/// excess of the latter over the former (`domination_excess`, expected ≤ 0).
pub fn run_convergence_sweep(config: &LabConfig) -> LabResult<SweepReport> {
    config.validate_schedule()?;
    let grid = make_grid(config.grid, config.grid)?;
    let cutoff = max_degree(config);
    let families = [MeanFamily::NorlundLogStrong, MeanFamily::NorlundLogLinear];
    let mut report = SweepReport::default();

    for f in corpus::select(config.funcs.as_deref(), config.seed)? {
        let field = f.sample(&grid)?;
        let spec = coefficients(&field, cutoff, cutoff)?;
        let mut sink = RowSink::new(&f.id, grid);
        for &n in &config.degrees {
            let means = strong_means(&spec, n, n, ConjugacyFlag::NONE, Some(&field), &families)?;
            let (strong, linear) = (&means[0], &means[1]);
            for &p in &config.p {
                sink.value(
                    n,
                    n,
                    format!("p={p}"),
                    "strong_error_lp",
                    lp_quasinorm(strong, p)?,
                );
                sink.value(
                    n,
                    n,
                    format!("p={p}"),
                    "linear_error_lp",
                    lp_quasinorm(linear, p)?,
                );
            }
            for &eps in &config.epsilon {
                sink.value(
                    n,
                    n,
                    format!("eps={eps}"),
                    "strong_error_exceedance",
                    exceedance(strong, eps)?,
                );
                sink.value(
                    n,
                    n,
                    format!("eps={eps}"),
                    "linear_error_exceedance",
                    exceedance(linear, eps)?,
                );
            }
            let excess = linear
                .values()
                .iter()
                .zip(strong.values())
                .map(|(l, s)| l.re - s.re)
                .fold(f64::NEG_INFINITY, f64::max);
            sink.residual(
                n,
                n,
                String::new(),
                "domination_excess",
                Ok(excess),
                DOMINATION_TOL,
            );
        }
        report.extend(sink.report);
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq)]
pub struct KernelSample {
    pub kernel: KernelTag,
    pub order: usize,
    pub u: f64,
    pub value: f64,
}

/// Samples every kernel at every configured order over a uniform scan of
/// `[-π, π]`. The conjugate kernel has no order 0 and is skipped there.
pub fn dump_kernels(config: &LabConfig) -> LabResult<Vec<KernelSample>> {
    config.validate()?;
    let us = scan_points(config.samples);
    let mut rows = Vec::new();
    for tag in KernelTag::ALL {
        for &order in &config.orders {
            if tag == KernelTag::ConjugateDirichlet && order == 0 {
                continue;
            }
            let kind = KernelKind::new(tag, order)?;
            rows.extend(us.iter().map(|&u| KernelSample {
                kernel: tag,
                order,
                u,
                value: kind.eval(u),
            }));
        }
    }
    Ok(rows)
}
