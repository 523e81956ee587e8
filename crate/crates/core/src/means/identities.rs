//! Executable checks of the algebraic identities behind the logarithmic-mean
//! estimates: the summation-by-parts identity linking strong Riesz and strong
//! Fejér means, and the splitting of `S_{n-k}` into conjugate, plain and
//! modified partial sums of `f` modulated by `sin((n+1)t)` and `cos((n+1)t)`.
//!
//! Each check evaluates both sides along different computational routes and
//! reports the discrepancy.

use num_complex::Complex64;
use rayon::prelude::*;

use super::{fast_abs, harmonic_sum, strong_mean, MeanFamily, MeanKind, PartialSumStream};
use crate::error::{Error, Result};
use crate::grid::SampledField;
use crate::spectral::{
    axis_partial_sum, coefficients, conjugate_partial_sum, modified_partial_sum, partial_sum, Axis,
    AxisTruncation, ConjugacyFlag, SpectralField,
};

/// Sup-norm and `L²(T²)` size of a discrepancy field.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ResidualReport {
    pub sup: f64,
    pub l2: f64,
}

impl ResidualReport {
    pub fn between(a: &SampledField, b: &SampledField) -> Result<Self> {
        a.ensure_same_grid(b)?;
        let mut sup = 0.0_f64;
        let mut sq = 0.0;
        for (x, y) in a.values().iter().zip(b.values()) {
            let d = fast_abs(x - y);
            sup = sup.max(d);
            sq += d * d;
        }
        Ok(Self {
            sup,
            l2: (sq * a.grid().cell_area()).sqrt(),
        })
    }

    /// Componentwise maximum.
    pub fn max(self, other: Self) -> Self {
        Self {
            sup: self.sup.max(other.sup),
            l2: self.l2.max(other.l2),
        }
    }
}

fn alpha(n: usize) -> impl Fn(f64) -> f64 {
    move |t| ((n + 1) as f64 * t).sin()
}

fn beta(n: usize) -> impl Fn(f64) -> f64 {
    move |t| ((n + 1) as f64 * t).cos()
}

fn sum_fields(terms: &[SampledField]) -> Result<SampledField> {
    let mut acc = terms[0].clone();
    for t in &terms[1..] {
        acc = acc.add(t)?;
    }
    Ok(acc)
}

fn neg() -> Complex64 {
    Complex64::new(-1.0, 0.0)
}

/// `|S̃^{ab}_{i,j}|` for one grid row, point-major:
/// `[a * (n+1)(m+1) + i * (m+1) + j]`.
fn abs_table_row(stream: &PartialSumStream, b: usize, m: usize, nx: usize, n: usize) -> Vec<f64> {
    let cells = (n + 1) * (m + 1);
    let mut table = vec![0.0; cells * nx];
    stream.for_each_in_row(b, |i, j, row| {
        let c = i * (m + 1) + j;
        for (a, v) in row.iter().enumerate() {
            table[a * cells + c] = fast_abs(*v);
        }
    });
    table
}

/// Strong Fejér means `σ_{i,j}` at one point from the `|S|` table, via
/// cumulative sums (j first, then i).
fn fejer_from_table(table: &[f64], a: usize, n: usize, m: usize) -> Vec<f64> {
    let w = m + 1;
    let table = &table[a * (n + 1) * w..(a + 1) * (n + 1) * w];
    let mut cum = vec![0.0; (n + 1) * w];
    for i in 0..=n {
        let mut run = 0.0;
        for j in 0..=m {
            run += table[i * w + j];
            cum[i * w + j] = run + if i > 0 { cum[(i - 1) * w + j] } else { 0.0 };
        }
    }
    for i in 0..=n {
        for j in 0..=m {
            cum[i * w + j] /= ((i + 1) * (j + 1)) as f64;
        }
    }
    cum
}

/// Checks `l_n l_m R̃^{ab}_{n,m} = Σ_{i<n,j<m} σ̃_{i,j}/((i+2)(j+2))
/// + Σ_{j<m} σ̃_{n,j}/(j+2) + Σ_{i<n} σ̃_{i,m}/(i+2) + σ̃_{n,m}`,
/// where `σ̃` are strong Fejér means.
///
/// The left side comes from [`strong_mean`] with Riesz weights; the right
/// side from cumulative sums of `|S̃_{i,j}|`.
pub fn hardy_identity_residual(
    spec: &SpectralField,
    n: usize,
    m: usize,
    flag: ConjugacyFlag,
) -> Result<ResidualReport> {
    let riesz = strong_mean(
        spec,
        n,
        m,
        &MeanKind::new(MeanFamily::RieszLogStrong).with_flag(flag),
    )?;
    let scale = harmonic_sum(n).l * harmonic_sum(m).l;
    let lhs = riesz.scale(Complex64::new(scale, 0.0));

    let stream = PartialSumStream::new(spec, n, m, flag)?;
    let grid = *spec.grid();
    let nx = grid.nx();
    let mut rhs = vec![Complex64::new(0.0, 0.0); grid.len()];
    rhs.par_chunks_mut(nx).enumerate().for_each(|(b, out)| {
        // cum[j][a] = Σ_{s≤i, t≤j} |S̃_{s,t}|, updated in place as i advances
        let mut cum = vec![0.0; (m + 1) * nx];
        let mut run = vec![0.0; nx];
        let mut acc = vec![0.0; nx];
        stream.for_each_in_row(b, |i, j, row| {
            if j == 0 {
                run.iter_mut().for_each(|r| *r = 0.0);
            }
            let weight = match (i < n, j < m) {
                (true, true) => 1.0 / ((i + 2) * (j + 2)) as f64,
                (false, true) => 1.0 / (j + 2) as f64,
                (true, false) => 1.0 / (i + 2) as f64,
                (false, false) => 1.0,
            } / ((i + 1) * (j + 1)) as f64;
            let col = &mut cum[j * nx..(j + 1) * nx];
            for (((c, r), a), v) in col
                .iter_mut()
                .zip(run.iter_mut())
                .zip(acc.iter_mut())
                .zip(row)
            {
                *r += fast_abs(*v);
                *c += *r;
                *a += weight * *c;
            }
        });
        for (o, a) in out.iter_mut().zip(&acc) {
            *o = Complex64::new(*a, 0.0);
        }
    });
    ResidualReport::between(&lhs, &SampledField::from_raw(grid, rhs))
}

/// Hardy-identity residuals for every `(n, m)` with `n ≤ n_max`, `m ≤ m_max`.
#[derive(Debug, Clone, PartialEq)]
pub struct HardyTable {
    n_max: usize,
    m_max: usize,
    entries: Vec<ResidualReport>,
}

impl HardyTable {
    pub fn get(&self, n: usize, m: usize) -> ResidualReport {
        self.entries[n * (self.m_max + 1) + m]
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn m_max(&self) -> usize {
        self.m_max
    }

    pub fn worst(&self) -> ResidualReport {
        self.entries
            .iter()
            .fold(ResidualReport::default(), |a, &b| a.max(b))
    }
}

/// All residuals up to `(n_max, m_max)` from a single pass over the partial
/// sums. The left side accumulates `|S̃_{i,j}|/((i+1)(j+1))`; the right side
/// accumulates raw `|S̃_{i,j}|` into Fejér means first.
pub fn hardy_identity_table(
    spec: &SpectralField,
    n_max: usize,
    m_max: usize,
    flag: ConjugacyFlag,
) -> Result<HardyTable> {
    let stream = PartialSumStream::new(spec, n_max, m_max, flag)?;
    let grid = *spec.grid();
    let nx = grid.nx();
    let w = m_max + 1;
    let cells = (n_max + 1) * w;

    let per_row: Vec<(Vec<f64>, Vec<f64>)> = (0..grid.ny())
        .into_par_iter()
        .map(|b| {
            let table = abs_table_row(&stream, b, m_max, nx, n_max);
            let mut sup = vec![0.0_f64; cells];
            let mut sq = vec![0.0; cells];
            let mut lhs = vec![0.0; cells];
            let mut tri = vec![0.0; cells];
            let mut along_j = vec![0.0; cells];
            let mut along_i = vec![0.0; cells];
            for a in 0..nx {
                let point = &table[a * cells..(a + 1) * cells];
                for i in 0..=n_max {
                    let mut run = 0.0;
                    for j in 0..=m_max {
                        run += point[i * w + j] / ((i + 1) * (j + 1)) as f64;
                        lhs[i * w + j] = run + if i > 0 { lhs[(i - 1) * w + j] } else { 0.0 };
                    }
                }
                let sigma = fejer_from_table(&table, a, n_max, m_max);
                for i in 0..=n_max {
                    let mut run_t = 0.0;
                    let mut run_j = 0.0;
                    for j in 0..=m_max {
                        let s = sigma[i * w + j];
                        run_t += s / ((i + 2) * (j + 2)) as f64;
                        tri[i * w + j] = run_t + if i > 0 { tri[(i - 1) * w + j] } else { 0.0 };
                        run_j += s / (j + 2) as f64;
                        along_j[i * w + j] = run_j;
                        along_i[i * w + j] =
                            s / (i + 2) as f64 + if i > 0 { along_i[(i - 1) * w + j] } else { 0.0 };
                    }
                }
                for n in 0..=n_max {
                    for m in 0..=m_max {
                        let mut rhs = sigma[n * w + m];
                        if n > 0 && m > 0 {
                            rhs += tri[(n - 1) * w + (m - 1)];
                        }
                        if m > 0 {
                            rhs += along_j[n * w + (m - 1)];
                        }
                        if n > 0 {
                            rhs += along_i[(n - 1) * w + m];
                        }
                        let d = (lhs[n * w + m] - rhs).abs();
                        let c = n * w + m;
                        sup[c] = sup[c].max(d);
                        sq[c] += d * d;
                    }
                }
            }
            (sup, sq)
        })
        .collect();

    let mut sup = vec![0.0_f64; cells];
    let mut sq = vec![0.0; cells];
    for (s, q) in &per_row {
        for c in 0..cells {
            sup[c] = sup[c].max(s[c]);
            sq[c] += q[c];
        }
    }
    let area = grid.cell_area();
    let entries = sup
        .into_iter()
        .zip(sq)
        .map(|(s, q)| ResidualReport {
            sup: s,
            l2: (q * area).sqrt(),
        })
        .collect();
    Ok(HardyTable {
        n_max,
        m_max,
        entries,
    })
}

fn require_cutoff(axis: Axis, cutoff: usize, needed: usize) -> Result<()> {
    if cutoff < needed {
        return Err(Error::CutoffInsufficient {
            axis,
            needed,
            cutoff,
        });
    }
    Ok(())
}

/// Checks, for a one-dimensional spectrum (`my = 0`),
///
/// `S_{n-k}(f) = -α_n S̃_k(fβ_n) + β_n S̃_k(fα_n) - β_n S_k(fβ_n) - α_n S_k(fα_n) + S̄_{n+1}(f)`
///
/// with `α_n(t) = sin((n+1)t)`, `β_n(t) = cos((n+1)t)`. The products `fα_n`,
/// `fβ_n` are formed on the grid and re-analysed, so the x cutoff must hold
/// `n + deg f + 1` frequencies.
pub fn decomposition_residual_1d(
    spec: &SpectralField,
    n: usize,
    k: usize,
) -> Result<ResidualReport> {
    if spec.my() != 0 {
        return Err(Error::NotOneDimensional(spec.my()));
    }
    if k > n {
        return Err(Error::Index {
            index: k,
            degree: n,
        });
    }
    let mx = spec.mx();
    let (deg, _) = spec.effective_degree();
    require_cutoff(Axis::X, mx, n + deg + 1)?;

    let f = spec.synthesize_full();
    let fa = coefficients(&f.mul_by_x(alpha(n)), mx, 0)?;
    let fb = coefficients(&f.mul_by_x(beta(n)), mx, 0)?;

    let lhs = partial_sum(spec, n - k, 0)?;
    let terms = [
        conjugate_partial_sum(&fb, k, 0, ConjugacyFlag::X)?
            .mul_by_x(alpha(n))
            .scale(neg()),
        conjugate_partial_sum(&fa, k, 0, ConjugacyFlag::X)?.mul_by_x(beta(n)),
        partial_sum(&fb, k, 0)?.mul_by_x(beta(n)).scale(neg()),
        partial_sum(&fa, k, 0)?.mul_by_x(alpha(n)).scale(neg()),
        modified_partial_sum(spec, n + 1, 0, true, false, ConjugacyFlag::NONE)?,
    ];
    ResidualReport::between(&lhs, &sum_fields(&terms)?)
}

/// Residuals of the two-dimensional splitting at `(n, m)`, `(i, j)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Decomposition2d {
    /// `S_{n-i,m-j}` against `S_{n-i}(S_{m-j}(f; y); x)` built from 1-D line transforms.
    pub factorization: ResidualReport,
    /// `S_{n-i,m-j}` against `I_1 + I_2 + I_3 + I_4 + S̄_{n+1}(S_{m-j}(f; y); x)`.
    pub expansion: ResidualReport,
    /// `I_1 = -α_n(x) S̃_i(S_{m-j}(f; y) β_n; x)` against its five-term
    /// expansion into `S̃^{11}`, `S̃^{10}` and the x-conjugate, y-modified sum.
    pub i1_expansion: ResidualReport,
}

impl Decomposition2d {
    pub fn worst_sup(&self) -> f64 {
        self.factorization
            .sup
            .max(self.expansion.sup)
            .max(self.i1_expansion.sup)
    }
}

/// Two-dimensional counterpart of [`decomposition_residual_1d`].
///
/// Left sides and the `I_s` terms are computed with per-line 1-D transforms
/// of sampled fields; the five-term expansion of `I_1` uses 2-D coefficient
/// tables of `f β_n(x) β_m(y)`, `f β_n(x) α_m(y)` and `f β_n(x)`.
pub fn decomposition_residual_2d(
    spec: &SpectralField,
    n: usize,
    m: usize,
    i: usize,
    j: usize,
) -> Result<Decomposition2d> {
    if i > n {
        return Err(Error::Index {
            index: i,
            degree: n,
        });
    }
    if j > m {
        return Err(Error::Index {
            index: j,
            degree: m,
        });
    }
    let (mx, my) = (spec.mx(), spec.my());
    let (dx, dy) = spec.effective_degree();
    require_cutoff(Axis::X, mx, n + dx + 1)?;
    require_cutoff(Axis::Y, my, m + dy + 1)?;

    let f = spec.synthesize_full();
    let direct = partial_sum(spec, n - i, m - j)?;

    // (a) tensor factorization
    let g = axis_partial_sum(&f, Axis::Y, AxisTruncation::sharp(m - j))?;
    let composed = axis_partial_sum(&g, Axis::X, AxisTruncation::sharp(n - i))?;
    let factorization = ResidualReport::between(&direct, &composed)?;

    // (b) splitting in x of g = S_{m-j}(f; y)
    let gb = g.mul_by_x(beta(n));
    let ga = g.mul_by_x(alpha(n));
    let i1 = axis_partial_sum(&gb, Axis::X, AxisTruncation::conjugate(i))?
        .mul_by_x(alpha(n))
        .scale(neg());
    let parts = [
        i1.clone(),
        axis_partial_sum(&ga, Axis::X, AxisTruncation::conjugate(i))?.mul_by_x(beta(n)),
        axis_partial_sum(&gb, Axis::X, AxisTruncation::sharp(i))?
            .mul_by_x(beta(n))
            .scale(neg()),
        axis_partial_sum(&ga, Axis::X, AxisTruncation::sharp(i))?
            .mul_by_x(alpha(n))
            .scale(neg()),
        axis_partial_sum(&g, Axis::X, AxisTruncation::modified(n + 1))?,
    ];
    let expansion = ResidualReport::between(&direct, &sum_fields(&parts)?)?;

    // (c) five-term expansion of I_1 in y
    let hb = f.mul_by_x(beta(n));
    let s_bb = coefficients(&hb.mul_by_y(beta(m)), mx, my)?;
    let s_ba = coefficients(&hb.mul_by_y(alpha(m)), mx, my)?;
    let s_b = coefficients(&hb, mx, my)?;
    let an = alpha(n);
    let (am, bm) = (alpha(m), beta(m));
    let terms = [
        conjugate_partial_sum(&s_bb, i, j, ConjugacyFlag::BOTH)?
            .mul_by_x(&an)
            .mul_by_y(&am),
        conjugate_partial_sum(&s_ba, i, j, ConjugacyFlag::BOTH)?
            .mul_by_x(&an)
            .mul_by_y(&bm)
            .scale(neg()),
        conjugate_partial_sum(&s_bb, i, j, ConjugacyFlag::X)?
            .mul_by_x(&an)
            .mul_by_y(&bm),
        conjugate_partial_sum(&s_ba, i, j, ConjugacyFlag::X)?
            .mul_by_x(&an)
            .mul_by_y(&am),
        modified_partial_sum(&s_b, i, m + 1, false, true, ConjugacyFlag::X)?
            .mul_by_x(&an)
            .scale(neg()),
    ];
    let i1_expansion = ResidualReport::between(&i1, &sum_fields(&terms)?)?;

    Ok(Decomposition2d {
        factorization,
        expansion,
        i1_expansion,
    })
}
