//! Experiment configuration: defaults, flat `key=value` files, overrides.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::error::{LabError, LabResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    CsvPlots,
}

impl OutputFormat {
    pub fn name(self) -> &'static str {
        match self {
            OutputFormat::Csv => "csv",
            OutputFormat::CsvPlots => "csv+plots",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LabConfig {
    /// Grid is `grid × grid`.
    pub grid: usize,
    /// Diagonal degree schedule `n = m`.
    pub degrees: Vec<usize>,
    pub p: Vec<f64>,
    pub epsilon: Vec<f64>,
    /// `None` selects the whole default corpus.
    pub funcs: Option<Vec<String>>,
    pub out: PathBuf,
    pub format: OutputFormat,
    pub seed: u64,
    /// Kernel orders for `kernels-dump`.
    pub orders: Vec<usize>,
    /// Scan points for `kernels-dump`.
    pub samples: usize,
}

impl Default for LabConfig {
    fn default() -> Self {
        Self {
            grid: 256,
            degrees: vec![4, 8, 16, 32, 64],
            p: vec![0.5, 0.75],
            epsilon: vec![0.1, 0.05],
            funcs: None,
            out: PathBuf::from("out"),
            format: OutputFormat::Csv,
            seed: 20_240_501,
            orders: vec![0, 1, 2, 5, 8],
            samples: 257,
        }
    }
}

fn list<T: std::str::FromStr>(key: &str, value: &str) -> LabResult<Vec<T>> {
    value
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse()
                .map_err(|_| LabError::Config(format!("{key}: cannot parse `{s}`")))
        })
        .collect()
}

fn scalar<T: std::str::FromStr>(key: &str, value: &str) -> LabResult<T> {
    value
        .trim()
        .parse()
        .map_err(|_| LabError::Config(format!("{key}: cannot parse `{value}`")))
}

impl LabConfig {
    /// Applies one setting; keys match the CLI flag names.
    pub fn set(&mut self, key: &str, value: &str) -> LabResult<()> {
        match key {
            "grid" => self.grid = scalar(key, value)?,
            "degrees" => self.degrees = list(key, value)?,
            "p" => self.p = list(key, value)?,
            "epsilon" => self.epsilon = list(key, value)?,
            "funcs" => {
                self.funcs = match value.trim() {
                    "all" => None,
                    v => Some(list(key, v)?),
                }
            }
            "out" => self.out = PathBuf::from(value.trim()),
            "format" => {
                self.format = match value.trim() {
                    "csv" => OutputFormat::Csv,
                    "csv+plots" => OutputFormat::CsvPlots,
                    other => return Err(LabError::Config(format!("format: unknown `{other}`"))),
                }
            }
            "seed" => self.seed = scalar(key, value)?,
            "orders" => self.orders = list(key, value)?,
            "samples" => self.samples = scalar(key, value)?,
            other => return Err(LabError::Config(format!("unknown key `{other}`"))),
        }
        Ok(())
    }

    /// Reads `key = value` lines; blank lines and `#` comments are skipped.
    pub fn apply_text(&mut self, text: &str) -> LabResult<()> {
        for (no, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| LabError::Config(format!("line {}: expected key=value", no + 1)))?;
            self.set(key.trim(), value)?;
        }
        Ok(())
    }

    pub fn apply_file(&mut self, path: &Path) -> LabResult<()> {
        let text = std::fs::read_to_string(path).map_err(|e| LabError::io(path, e))?;
        self.apply_text(&text)
    }

    /// Checks the invariants shared by every experiment. Degrees above
    /// `grid/4` are left to the caller: the identity suite reports them per
    /// row, the sweeps reject them via [`LabConfig::validate_schedule`].
    pub fn validate(&self) -> LabResult<()> {
        if self.grid < 4 || !self.grid.is_power_of_two() {
            return Err(LabError::Config(format!(
                "grid {} must be a power of two >= 4",
                self.grid
            )));
        }
        if self.degrees.is_empty() {
            return Err(LabError::Config("degree schedule is empty".into()));
        }
        if let Some(&p) = self.p.iter().find(|&&p| !(p > 0.0 && p <= 1.0)) {
            return Err(LabError::Config(format!("p = {p} outside (0, 1]")));
        }
        if let Some(&e) = self.epsilon.iter().find(|&&e| !(e > 0.0 && e.is_finite())) {
            return Err(LabError::Config(format!("epsilon = {e} must be positive")));
        }
        if self.samples < 2 {
            return Err(LabError::Config("samples must be at least 2".into()));
        }
        Ok(())
    }

    pub fn validate_schedule(&self) -> LabResult<()> {
        self.validate()?;
        if let Some(&n) = self.degrees.iter().find(|&&n| n > self.grid / 4) {
            return Err(LabError::Config(format!(
                "degree {n} exceeds grid/4 = {}",
                self.grid / 4
            )));
        }
        Ok(())
    }

    /// Canonical text of every setting that influences the data (not `out`).
    pub fn canonical(&self) -> String {
        fn joined<T: std::fmt::Debug>(v: &[T]) -> String {
            v.iter()
                .map(|x| format!("{x:?}"))
                .collect::<Vec<_>>()
                .join(",")
        }
        let funcs = self
            .funcs
            .as_ref()
            .map_or("all".to_string(), |f| f.join(","));
        let mut s = String::new();
        let _ = writeln!(s, "grid={}", self.grid);
        let _ = writeln!(s, "degrees={}", joined(&self.degrees));
        let _ = writeln!(s, "p={}", joined(&self.p));
        let _ = writeln!(s, "epsilon={}", joined(&self.epsilon));
        let _ = writeln!(s, "funcs={funcs}");
        let _ = writeln!(s, "format={}", self.format.name());
        let _ = writeln!(s, "seed={}", self.seed);
        let _ = writeln!(s, "orders={}", joined(&self.orders));
        let _ = writeln!(s, "samples={}", self.samples);
        s
    }

    /// First 16 hex digits of the SHA-256 of [`LabConfig::canonical`].
    pub fn hash(&self) -> String {
        let digest = Sha256::digest(self.canonical().as_bytes());
        hex::encode(digest)[..16].to_string()
    }
}
