//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Run with `cargo test -p dfsum-lab --test acceptance`.

use std::f64::consts::{E, PI};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use dfsum_core::means::{
    decomposition_residual_1d, decomposition_residual_2d, hardy_identity_table,
};
use dfsum_core::{
    coefficients, dirichlet, exceedance_measure, luxemburg_norm, make_grid, modified_dirichlet,
    modified_partial_sum, oracle_partial_sum, sample, scan_points, ConjugacyFlag, KernelKind,
    KernelTag, SampledField, YoungFunction,
};
use dfsum_lab::{
    polynomial_corpus, random_polynomial, run_bound_sweep, run_convergence_sweep, LabConfig,
    SweepReport, DOMINATION_TOL,
};
use num_complex::Complex64;

const SEED: u64 = 1729;

const HARDY_TOL: f64 = 1e-9;
const HARDY_BUDGET: Duration = Duration::from_secs(60);
const DECOMP_TOL: f64 = 1e-9;
const ORACLE_TOL: f64 = 1e-8;
const KERNEL_TOL: f64 = 1e-12;
const KERNEL_POINTS: usize = 10_001;
const RATIO_SPREAD: f64 = 10.0;
const RATIO_LAST_OVER_MEDIAN: f64 = 2.0;
const RATIO_PIN_REL: f64 = 1e-8;
const STEP_EPS: f64 = 0.1;
const STEP_BUDGET: Duration = Duration::from_secs(300);
const LUX_TOL: f64 = 1e-6;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

/// Criterion 1: Hardy identity, all (n, m) ≤ (16, 16), four flags, ten random
/// polynomials of degree 8 on 128×128.
fn hardy() -> Outcome {
    let start = Instant::now();
    let grid = make_grid(128, 128).unwrap();
    let mut worst = 0.0_f64;
    for f in polynomial_corpus(10, 8, SEED) {
        let spec = coefficients(&f.sample(&grid).unwrap(), 63, 63).unwrap();
        for flag in ConjugacyFlag::ALL {
            worst = worst.max(
                hardy_identity_table(&spec, 16, 16, flag)
                    .unwrap()
                    .worst()
                    .sup,
            );
        }
    }
    let elapsed = start.elapsed();
    outcome(
        worst <= HARDY_TOL && elapsed < HARDY_BUDGET,
        format!(
            "max sup residual {worst:.3e} (tol {HARDY_TOL:e}), {:.1}s (budget 60s)",
            elapsed.as_secs_f64()
        ),
    )
}

/// Criterion 2: 1-D splitting for n ≤ 6, k ≤ n over degree-4 polynomials; 2-D
/// factorization and expansions at (4, 4), all (i, j).
fn decompositions() -> Outcome {
    let line = make_grid(64, 4).unwrap();
    let mut worst_1d = 0.0_f64;
    for s in 0..10 {
        let f = random_polynomial("p1d", 4, 0, SEED + s);
        let field = sample(|x, _| f.eval(x, 0.0), &line).unwrap();
        let spec = coefficients(&field, 31, 0).unwrap();
        for n in 0..=6 {
            for k in 0..=n {
                worst_1d = worst_1d.max(decomposition_residual_1d(&spec, n, k).unwrap().sup);
            }
        }
    }
    let grid = make_grid(64, 64).unwrap();
    let mut worst_2d = 0.0_f64;
    for f in polynomial_corpus(5, 4, SEED) {
        let spec = coefficients(&f.sample(&grid).unwrap(), 31, 31).unwrap();
        for i in 0..=4 {
            for j in 0..=4 {
                worst_2d = worst_2d.max(
                    decomposition_residual_2d(&spec, 4, 4, i, j)
                        .unwrap()
                        .worst_sup(),
                );
            }
        }
    }
    outcome(
        worst_1d <= DECOMP_TOL && worst_2d <= DECOMP_TOL,
        format!("1-d max {worst_1d:.3e}, 2-d max {worst_2d:.3e} (tol {DECOMP_TOL:e})"),
    )
}

/// Criterion 3: Spectral vs kernel-convolution partial sums on 64×64.
fn oracle() -> Outcome {
    let grid = make_grid(64, 64).unwrap();
    let degrees = [0usize, 1, 3, 5, 8];
    let mut worst = 0.0_f64;
    let mut count = 0;
    for f in polynomial_corpus(10, 8, SEED + 100) {
        let field = f.sample(&grid).unwrap();
        let spec = coefficients(&field, 31, 31).unwrap();
        for flag in ConjugacyFlag::ALL {
            for (mx, my) in [(false, false), (true, false), (false, true), (true, true)] {
                for &n in &degrees {
                    for &m in &degrees {
                        if (mx && n == 0) || (my && m == 0) {
                            continue;
                        }
                        let a = modified_partial_sum(&spec, n, m, mx, my, flag).unwrap();
                        let b = oracle_partial_sum(&field, n, m, flag, mx, my).unwrap();
                        worst = worst.max(a.sup_distance(&b).unwrap());
                        count += 1;
                    }
                }
            }
        }
    }
    outcome(
        worst <= ORACLE_TOL,
        format!("{count} comparisons, max sup {worst:.3e} (tol {ORACLE_TOL:e})"),
    )
}

/// Criterion 4: `D̄_n = (D_{n-1} + D_n)/2`, evenness of `D`, `D̄` and oddness of `D̃`.
fn kernels() -> Outcome {
    let us = scan_points(KERNEL_POINTS);
    let mut worst = 0.0_f64;
    for n in 1..=64 {
        let conj = KernelKind::new(KernelTag::ConjugateDirichlet, n).unwrap();
        for &u in &us {
            let avg = 0.5 * (dirichlet(n - 1, u) + dirichlet(n, u));
            worst = worst.max((modified_dirichlet(n, u) - avg).abs());
            worst = worst.max((dirichlet(n, u) - dirichlet(n, -u)).abs());
            worst = worst.max((modified_dirichlet(n, u) - modified_dirichlet(n, -u)).abs());
            worst = worst.max((conj.eval(u) + conj.eval(-u)).abs());
        }
    }
    outcome(
        worst <= KERNEL_TOL,
        format!(
            "{} points, n in 1..=64, max deviation {worst:.3e} (tol {KERNEL_TOL:e})",
            us.len()
        ),
    )
}

#[allow(clippy::excessive_precision)]
/// Ratio at n = m = 64 on the default configuration, recorded on the first
/// verified run: (function, p, value).
const PINNED_RATIOS: [(&str, f64, f64); 14] = [
    ("const", 0.5, 1.5585454565440443e3),
    ("const", 0.75, 1.3442487736805134e2),
    ("cosx", 0.5, 9.0262880842946390e2),
    ("cosx", 0.75, 8.1928761487455247e1),
    ("cosxcosy", 0.5, 5.2275585700486556e2),
    ("cosxcosy", 0.75, 4.9933629029768248e1),
    ("poly4", 0.5, 2.4953406697501435e1),
    ("poly4", 0.75, 2.3450781879604947e0),
    ("step", 0.5, 1.3659847946632942e3),
    ("step", 0.75, 1.1997212622566872e2),
    ("spike10", 0.5, 1.4567610665916672e2),
    ("spike10", 0.75, 1.3251526548891723e1),
    ("spike100", 0.5, 1.2114502371529642e2),
    ("spike100", 0.75, 1.1052745944006086e1),
];

/// Criterion 5: Bounded ratio of `‖τ_{n,n}(f)‖_p` to `llogl(f) + 1` over the default
/// corpus and schedule.
fn bound_probe() -> Outcome {
    let config = LabConfig::default();
    let report = run_bound_sweep(&config).unwrap();
    let mut problems = Vec::new();
    let mut widest = 0.0_f64;
    for &(id, p, pinned) in &PINNED_RATIOS {
        let ratios: Vec<f64> = report
            .series(id, &format!("p={p}"), "ratio")
            .into_iter()
            .map(|(_, v)| v)
            .collect();
        if ratios.len() != config.degrees.len() {
            problems.push(format!("{id} p={p}: {} ratios", ratios.len()));
            continue;
        }
        let max = ratios.iter().copied().fold(f64::MIN, f64::max);
        let min = ratios.iter().copied().fold(f64::MAX, f64::min);
        let mut sorted = ratios.clone();
        sorted.sort_by(f64::total_cmp);
        let median = sorted[sorted.len() / 2];
        let last = *ratios.last().unwrap();
        widest = widest.max(max / min);
        if max / min > RATIO_SPREAD || max.is_nan() {
            problems.push(format!("{id} p={p}: max/min {:.3}", max / min));
        }
        if last > RATIO_LAST_OVER_MEDIAN * median || last.is_nan() {
            problems.push(format!(
                "{id} p={p}: last {last:.4e} > 2 x median {median:.4e}"
            ));
        }
        if (last - pinned).abs() > RATIO_PIN_REL * pinned {
            problems.push(format!(
                "{id} p={p}: last {last:.16e} != pinned {pinned:.16e}"
            ));
        }
    }
    outcome(
        problems.is_empty(),
        if problems.is_empty() {
            format!("{} series, widest max/min {widest:.3} (limit {RATIO_SPREAD}), pins within {RATIO_PIN_REL:e}", PINNED_RATIOS.len())
        } else {
            problems.join("; ")
        },
    )
}

/// Criterion 6: Exceedance of the strong error mean of the smoothed step.
fn step_trend() -> Outcome {
    let config = LabConfig {
        degrees: vec![8, 16, 32, 64],
        epsilon: vec![STEP_EPS],
        p: vec![0.5],
        funcs: Some(vec!["step".into()]),
        ..LabConfig::default()
    };
    let start = Instant::now();
    let report = run_convergence_sweep(&config).unwrap();
    let elapsed = start.elapsed();
    let series: Vec<f64> = report
        .series(
            "step",
            &format!("eps={STEP_EPS}"),
            "strong_error_exceedance",
        )
        .into_iter()
        .map(|(_, v)| v)
        .collect();
    let slack = 4.0 * PI * PI * 2.0 / config.grid as f64;
    let monotone = series.windows(2).all(|w| w[1] <= w[0] + slack);
    let halved = series.len() == 4 && series[3] < 0.5 * series[0];
    let values: Vec<String> = series.iter().map(|v| format!("{v:.4}")).collect();
    outcome(
        monotone && halved && elapsed < STEP_BUDGET,
        format!(
            "measures [{}] at n=8,16,32,64, slack {slack:.4}, {:.1}s (budget 300s)",
            values.join(", "),
            elapsed.as_secs_f64()
        ),
    )
}

/// Criterion 7: `|t_{n,m}(f) - f| ≤ strong error mean` pointwise.
fn domination(report: &SweepReport) -> Outcome {
    let rows: Vec<_> = report
        .rows
        .iter()
        .filter(|r| r.metric == "domination_excess")
        .collect();
    let worst = rows
        .iter()
        .filter_map(|r| r.value)
        .fold(f64::NEG_INFINITY, f64::max);
    let expected = 7 * LabConfig::default().degrees.len();
    outcome(
        rows.len() == expected && worst <= DOMINATION_TOL,
        format!(
            "{} cells, max excess {worst:.3e} (tol {DOMINATION_TOL:e})",
            rows.len()
        ),
    )
}

/// Newton iteration on `g(v) = 4π² v ln v - 1`, then `k = e / v`.
fn luxemburg_reference() -> f64 {
    let area = 4.0 * PI * PI;
    let mut v = 1.5_f64;
    for _ in 0..60 {
        let g = area * v * v.ln() - 1.0;
        let dg = area * (v.ln() + 1.0);
        v -= g / dg;
    }
    E / v
}

/// Criterion 8: Luxemburg norm of `f ≡ e` and exceedance counting for `cos x`.
fn functionals() -> Outcome {
    let grid = make_grid(64, 64).unwrap();
    let field = SampledField::constant(grid, Complex64::new(E, 0.0));
    let k = luxemburg_norm(&field, &YoungFunction::llogl()).unwrap();
    let reference = luxemburg_reference();
    let lux_ok = (k - reference).abs() <= LUX_TOL && (k - 2.651_930_844_912_862).abs() <= LUX_TOL;

    let grid = make_grid(256, 256).unwrap();
    let cos = sample(|x, _| x.cos(), &grid).unwrap();
    let frac = exceedance_measure(&cos, 0.5).unwrap().node_fraction;
    let tol = 2.0 / grid.nx() as f64;
    let exc_ok = (frac - 2.0 / 3.0).abs() <= tol;
    outcome(
        lux_ok && exc_ok,
        format!(
            "Luxemburg {k:.12} vs root-find {reference:.12} (tol {LUX_TOL:e}); cos x > 1/2 fraction {frac:.6} vs 2/3 (tol {tol:.6})"
        ),
    )
}

type Check<'a> = Box<dyn Fn() -> Outcome + 'a>;

fn main() -> ExitCode {
    let start = Instant::now();
    let converge = run_convergence_sweep(&LabConfig::default()).unwrap();
    let checks: Vec<(&str, Check)> = vec![
        ("hardy identity table", Box::new(hardy)),
        ("partial-sum decompositions", Box::new(decompositions)),
        ("oracle equivalence", Box::new(oracle)),
        ("kernel identities", Box::new(kernels)),
        ("strong-mean bound probe", Box::new(bound_probe)),
        ("step exceedance trend", Box::new(step_trend)),
        ("pointwise domination", Box::new(|| domination(&converge))),
        ("functional correctness", Box::new(functionals)),
    ];
    let mut failed = 0;
    for (i, (name, check)) in checks.iter().enumerate() {
        let t = Instant::now();
        let o = check();
        if !o.pass {
            failed += 1;
        }
        println!(
            "[{}] criterion {} {name}: {} ({:.1}s)",
            if o.pass { "PASS" } else { "FAIL" },
            i + 1,
            o.detail,
            t.elapsed().as_secs_f64()
        );
    }
    println!(
        "acceptance: {} passed, {failed} failed, {:.1}s total",
        checks.len() - failed,
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
