//! Run configuration: flag values override a `--config` JSON file, the
//! file overrides the `TROPNEV_SEED` environment fallback, and built-in
//! defaults close the chain.

use std::path::Path;

use serde::Deserialize;
use tropnev::quad::DEFAULT_ANGULAR_NODES;
use tropnev::{make_quadrature, SphereQuadrature};

pub const DEFAULT_GRID: &str = "1:100:50";
pub const DEFAULT_TOL: f64 = 1e-9;
pub const SEED_ENV_VAR: &str = "TROPNEV_SEED";

/// A radius grid `min:max:count[:log]`; linear spacing unless `log`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub min: f64,
    pub max: f64,
    pub count: usize,
    pub log: bool,
}

impl GridSpec {
    pub fn parse(s: &str) -> Result<GridSpec, String> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() < 3 || parts.len() > 4 {
            return Err(format!("radius grid must be min:max:count[:log], got '{s}'"));
        }
        let min: f64 = parts[0]
            .trim()
            .parse()
            .map_err(|_| format!("grid minimum '{}' is not a number", parts[0]))?;
        let max: f64 = parts[1]
            .trim()
            .parse()
            .map_err(|_| format!("grid maximum '{}' is not a number", parts[1]))?;
        let count: usize = parts[2]
            .trim()
            .parse()
            .map_err(|_| format!("grid count '{}' is not a positive integer", parts[2]))?;
        let log = match parts.get(3).map(|p| p.trim()) {
            None | Some("linear") => false,
            Some("log") => true,
            Some(other) => {
                return Err(format!("grid spacing must be 'log' or 'linear', got '{other}'"))
            }
        };
        if !min.is_finite() || min <= 0.0 {
            return Err(format!("grid minimum must be positive, got {min}"));
        }
        if !max.is_finite() || max < min {
            return Err(format!("grid maximum must be at least the minimum, got {max}"));
        }
        if count == 0 {
            return Err("grid count must be at least 1".into());
        }
        if count >= 2 && max <= min {
            return Err("a grid with several points needs max > min".into());
        }
        Ok(GridSpec {
            min,
            max,
            count,
            log,
        })
    }

    pub fn build(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.min];
        }
        (0..self.count)
            .map(|i| {
                let s = i as f64 / (self.count - 1) as f64;
                if self.log {
                    self.min * (self.max / self.min).powf(s)
                } else {
                    self.min + s * (self.max - self.min)
                }
            })
            .collect()
    }

    pub fn render(&self) -> String {
        format!(
            "{}:{}:{}:{}",
            self.min,
            self.max,
            self.count,
            if self.log { "log" } else { "linear" }
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

/// Optional `--config` file; keys mirror the flags.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    r: Option<String>,
    #[serde(rename = "K", alias = "k")]
    k: Option<usize>,
    seed: Option<u64>,
    tol: Option<f64>,
    format: Option<String>,
}

/// Resolved run configuration; `k` stays unset until the ambient
/// dimension picks the default node count.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub grid: GridSpec,
    pub k: Option<usize>,
    pub seed: u64,
    pub tol: f64,
    pub format: OutputFormat,
}

impl RunConfig {
    pub fn resolved_k(&self, dim: usize) -> usize {
        self.k
            .unwrap_or(if dim <= 1 { 2 } else { DEFAULT_ANGULAR_NODES })
    }

    pub fn quadrature(&self, dim: usize) -> Result<SphereQuadrature, String> {
        make_quadrature(dim, self.resolved_k(dim), self.seed).map_err(|e| e.to_string())
    }
}

/// Loose flag values as the argument parser hands them over.
#[derive(Debug, Default)]
pub struct ConfigInputs<'a> {
    pub r: Option<&'a str>,
    pub k: Option<usize>,
    pub seed: Option<u64>,
    pub tol: Option<f64>,
    pub format: Option<OutputFormat>,
    pub config: Option<&'a Path>,
}

pub fn resolve(inputs: ConfigInputs<'_>) -> Result<RunConfig, String> {
    let file: ConfigFile = match inputs.config {
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| format!("cannot read config file {}: {e}", p.display()))?;
            serde_json::from_str(&text).map_err(|e| format!("config file {}: {e}", p.display()))?
        }
        None => ConfigFile::default(),
    };

    let grid_src = inputs
        .r
        .map(str::to_string)
        .or(file.r)
        .unwrap_or_else(|| DEFAULT_GRID.to_string());
    let grid = GridSpec::parse(&grid_src)?;

    let k = inputs.k.or(file.k);
    if let Some(k) = k {
        if k < 2 || k % 2 != 0 {
            return Err(format!("K must be even and at least 2, got {k}"));
        }
    }

    let seed = match inputs.seed.or(file.seed) {
        Some(s) => s,
        None => match std::env::var(SEED_ENV_VAR) {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| format!("{SEED_ENV_VAR} must be an unsigned integer, got '{v}'"))?,
            Err(_) => 0,
        },
    };

    let tol = inputs.tol.or(file.tol).unwrap_or(DEFAULT_TOL);
    if !tol.is_finite() || tol <= 0.0 {
        return Err(format!("tolerance must be positive and finite, got {tol}"));
    }

    let format = match inputs.format {
        Some(f) => f,
        None => match file.format.as_deref() {
            None => OutputFormat::Csv,
            Some(s) if s.eq_ignore_ascii_case("csv") => OutputFormat::Csv,
            Some(s) if s.eq_ignore_ascii_case("json") => OutputFormat::Json,
            Some(other) => return Err(format!("format must be csv or json, got '{other}'")),
        },
    };

    Ok(RunConfig {
        grid,
        k,
        seed,
        tol,
        format,
    })
}
