//! Writing reports, kernel dumps and plots under the output directory.

use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use crate::config::{LabConfig, OutputFormat};
use crate::error::{LabError, LabResult};
use crate::experiments::KernelSample;
use crate::plot::line_plot;
use crate::report::{format_float, metadata_line, SweepReport};

fn ensure_dir(path: &Path) -> LabResult<()> {
    fs::create_dir_all(path).map_err(|e| LabError::io(path, e))
}

fn file_stem(parts: &[&str]) -> String {
    parts
        .iter()
        .filter(|p| !p.is_empty())
        .map(|p| {
            p.chars()
                .map(|c| {
                    if c.is_ascii_alphanumeric() || c == '.' || c == '-' {
                        c
                    } else {
                        '_'
                    }
                })
                .collect::<String>()
        })
        .collect::<Vec<_>>()
        .join("__")
}

/// Writes `<out>/<name>.csv` and, for `csv+plots`, one SVG per
/// `(function, metric, param)` series under `<out>/plots/<name>/`.
/// Returns the paths written.
pub fn write_report(
    report: &SweepReport,
    name: &str,
    config: &LabConfig,
) -> LabResult<Vec<PathBuf>> {
    ensure_dir(&config.out)?;
    let csv_path = config.out.join(format!("{name}.csv"));
    report.write_csv(&csv_path, config)?;
    let mut written = vec![csv_path];
    if config.format == OutputFormat::CsvPlots {
        let dir = config.out.join("plots").join(name);
        ensure_dir(&dir)?;
        let mut groups: Vec<(&str, &str, &str)> = Vec::new();
        for r in &report.rows {
            let key = (r.function_id.as_str(), r.metric.as_str(), r.param.as_str());
            if r.value.is_some() && r.n > 0 && !groups.contains(&key) {
                groups.push(key);
            }
        }
        for (function_id, metric, param) in groups {
            let series = report.series(function_id, param, metric);
            if series.len() < 2 {
                continue;
            }
            let title = format!("{function_id} {metric} {param}");
            let path = dir.join(format!("{}.svg", file_stem(&[function_id, metric, param])));
            fs::write(&path, line_plot(title.trim(), metric, &series))
                .map_err(|e| LabError::io(&path, e))?;
            written.push(path);
        }
    }
    Ok(written)
}

/// Writes `<out>/kernels.csv` with columns `kernel,order,u,value`.
pub fn write_kernels(rows: &[KernelSample], config: &LabConfig) -> LabResult<PathBuf> {
    ensure_dir(&config.out)?;
    let path = config.out.join("kernels.csv");
    let file = File::create(&path).map_err(|e| LabError::io(&path, e))?;
    let mut out = BufWriter::new(file);
    let io = |e| LabError::io(&path, e);
    writeln!(out, "{}", metadata_line(config)).map_err(io)?;
    writeln!(out, "kernel,order,u,value").map_err(io)?;
    for r in rows {
        writeln!(
            out,
            "{},{},{},{}",
            r.kernel.name(),
            r.order,
            format_float(r.u),
            format_float(r.value)
        )
        .map_err(io)?;
    }
    out.flush().map_err(io)?;
    Ok(path)
}
