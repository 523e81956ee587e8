//! Sweep reports and their CSV form.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use crate::config::LabConfig;
use crate::error::{LabError, LabResult};

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub function_id: String,
    pub n: usize,
    pub m: usize,
    /// Free-form parameter key, e.g. `p=0.5`, `eps=0.1`, `flag=10`, `i=1,j=2`.
    pub param: String,
    pub metric: String,
    /// `None` marks a row whose computation failed; see `note`.
    pub value: Option<f64>,
    pub grid_nx: usize,
    pub grid_ny: usize,
    pub note: String,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct SweepReport {
    pub rows: Vec<SweepRow>,
}

pub const HEADER: [&str; 9] = [
    "function_id",
    "n",
    "m",
    "param",
    "metric",
    "value",
    "grid_nx",
    "grid_ny",
    "note",
];

/// 17 significant digits.
pub fn format_float(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn metadata_line(config: &LabConfig) -> String {
    format!(
        "# dfsum {} config_hash={}",
        env!("CARGO_PKG_VERSION"),
        config.hash()
    )
}

impl SweepReport {
    pub fn push(&mut self, row: SweepRow) {
        self.rows.push(row);
    }

    pub fn extend(&mut self, other: SweepReport) {
        self.rows.extend(other.rows);
    }

    pub fn find(
        &self,
        function_id: &str,
        n: usize,
        param: &str,
        metric: &str,
    ) -> Option<&SweepRow> {
        self.rows.iter().find(|r| {
            r.function_id == function_id && r.n == n && r.param == param && r.metric == metric
        })
    }

    /// Values of `metric` for one function and parameter, ordered as stored.
    pub fn series(&self, function_id: &str, param: &str, metric: &str) -> Vec<(usize, f64)> {
        self.rows
            .iter()
            .filter(|r| r.function_id == function_id && r.param == param && r.metric == metric)
            .filter_map(|r| r.value.map(|v| (r.n, v)))
            .collect()
    }

    /// Rows whose note starts with `FAIL` or `error`.
    pub fn failures(&self) -> Vec<&SweepRow> {
        self.rows
            .iter()
            .filter(|r| r.note.starts_with("FAIL") || r.note.starts_with("error"))
            .collect()
    }

    /// `true` if no two rows share `(function_id, n, m, param, metric)`.
    pub fn keys_unique(&self) -> bool {
        let mut keys: Vec<_> = self
            .rows
            .iter()
            .map(|r| (&r.function_id, r.n, r.m, &r.param, &r.metric))
            .collect();
        let len = keys.len();
        keys.sort();
        keys.dedup();
        keys.len() == len
    }

    pub fn write_csv(&self, path: &Path, config: &LabConfig) -> LabResult<()> {
        let csv_err = |source| LabError::Csv {
            path: path.to_path_buf(),
            source,
        };
        let file = File::create(path).map_err(|e| LabError::io(path, e))?;
        let mut out = BufWriter::new(file);
        writeln!(out, "{}", metadata_line(config)).map_err(|e| LabError::io(path, e))?;
        let mut w = csv::Writer::from_writer(out);
        w.write_record(HEADER).map_err(csv_err)?;
        for r in &self.rows {
            let value = r.value.map(format_float).unwrap_or_default();
            w.write_record([
                r.function_id.as_str(),
                &r.n.to_string(),
                &r.m.to_string(),
                &r.param,
                &r.metric,
                &value,
                &r.grid_nx.to_string(),
                &r.grid_ny.to_string(),
                &r.note,
            ])
            .map_err(csv_err)?;
        }
        w.flush().map_err(|e| LabError::io(path, e))
    }
}
