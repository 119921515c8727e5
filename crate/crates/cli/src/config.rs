//! Run configuration: command-line flags over an optional `key = value`
//! file over defaults.

use std::fmt;
use std::str::FromStr;

use clap::{Args, ValueEnum};
use serde::{Deserialize, Serialize};

use qtraj_core::models::{BarrierModel, PhysicalUnits};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelName {
    Rect,
    Ahmed,
    Softstep,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

fn parse_enum<T: ValueEnum>(key: &str, value: &str) -> Result<T, CliError> {
    T::from_str(value, true)
        .map_err(|_| CliError::Validation(format!("bad value for {key}: {value}")))
}

/// Every setting that can come from a flag or the config file.
#[derive(Debug, Clone, Default, Args)]
pub struct Layer {
    #[arg(long, global = true, value_enum)]
    pub model: Option<ModelName>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub v0: Option<f64>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub a: Option<f64>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub c: Option<f64>,
    #[arg(long, global = true, allow_hyphen_values = true, conflicts_with_all = ["emin", "emax", "n"])]
    pub energy: Option<f64>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub emin: Option<f64>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub emax: Option<f64>,
    #[arg(long, global = true)]
    pub n: Option<usize>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub lambda: Option<f64>,
    #[arg(long = "alpha-min", global = true, allow_hyphen_values = true)]
    pub alpha_min: Option<f64>,
    #[arg(long = "alpha-max", global = true, allow_hyphen_values = true)]
    pub alpha_max: Option<f64>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    #[arg(long, global = true)]
    pub out: Option<String>,
    /// Quadrature tolerance (reflection, sweep) or integrator tolerance
    /// (trajectories, gamma-beta).
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub tol: Option<f64>,
    /// Launch count for `trajectories`.
    #[arg(long, global = true)]
    pub launches: Option<usize>,
    /// Sample range and count for `potential`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub xmin: Option<f64>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub xmax: Option<f64>,
    #[arg(long, global = true)]
    pub points: Option<usize>,
}

fn num<T: FromStr>(key: &str, value: &str) -> Result<T, CliError> {
    value
        .parse()
        .map_err(|_| CliError::Validation(format!("bad value for {key}: {value}")))
}

impl Layer {
    /// Parses `key = value` lines; `#` starts a comment. Keys are the flag
    /// names without the leading dashes.
    pub fn parse_file(text: &str) -> Result<Self, CliError> {
        let mut l = Layer::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                CliError::Validation(format!("config line {}: expected key = value", i + 1))
            })?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "model" => l.model = Some(parse_enum(key, value)?),
                "v0" => l.v0 = Some(num(key, value)?),
                "a" => l.a = Some(num(key, value)?),
                "c" => l.c = Some(num(key, value)?),
                "energy" => l.energy = Some(num(key, value)?),
                "emin" => l.emin = Some(num(key, value)?),
                "emax" => l.emax = Some(num(key, value)?),
                "n" => l.n = Some(num(key, value)?),
                "lambda" => l.lambda = Some(num(key, value)?),
                "alpha-min" => l.alpha_min = Some(num(key, value)?),
                "alpha-max" => l.alpha_max = Some(num(key, value)?),
                "format" => l.format = Some(parse_enum(key, value)?),
                "out" => l.out = Some(value.to_string()),
                "tol" => l.tol = Some(num(key, value)?),
                "launches" => l.launches = Some(num(key, value)?),
                "xmin" => l.xmin = Some(num(key, value)?),
                "xmax" => l.xmax = Some(num(key, value)?),
                "points" => l.points = Some(num(key, value)?),
                _ => {
                    return Err(CliError::Validation(format!(
                        "config line {}: unknown key {key}",
                        i + 1
                    )))
                }
            }
        }
        Ok(l)
    }

    /// Settings of `self`, falling back to `base` where unset.
    pub fn over(self, base: Layer) -> Layer {
        // a single energy on the command line replaces a file grid and vice versa
        let flag_grid = self.emin.is_some() || self.emax.is_some() || self.n.is_some();
        let energy = self.energy.or(if flag_grid { None } else { base.energy });
        let (emin, emax, n) = if self.energy.is_some() {
            (None, None, None)
        } else {
            (
                self.emin.or(base.emin),
                self.emax.or(base.emax),
                self.n.or(base.n),
            )
        };
        Layer {
            model: self.model.or(base.model),
            v0: self.v0.or(base.v0),
            a: self.a.or(base.a),
            c: self.c.or(base.c),
            energy,
            emin,
            emax,
            n,
            lambda: self.lambda.or(base.lambda),
            alpha_min: self.alpha_min.or(base.alpha_min),
            alpha_max: self.alpha_max.or(base.alpha_max),
            format: self.format.or(base.format),
            out: self.out.or(base.out),
            tol: self.tol.or(base.tol),
            launches: self.launches.or(base.launches),
            xmin: self.xmin.or(base.xmin),
            xmax: self.xmax.or(base.xmax),
            points: self.points.or(base.points),
        }
    }
}

/// Validated settings of one run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub model: ModelName,
    pub v0: f64,
    pub a: f64,
    pub c: f64,
    pub energies: Vec<f64>,
    pub lambda: f64,
    pub alpha_window: (f64, f64),
    pub tol: Option<f64>,
    pub launches: usize,
    pub x_range: (f64, f64),
    pub points: usize,
    pub format: Format,
    pub out: Option<String>,
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![lo];
    }
    (0..n)
        .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
        .collect()
}

fn finite(key: &str, v: f64) -> Result<f64, CliError> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(CliError::Validation(format!("{key} must be finite")))
    }
}

impl RunConfig {
    pub fn resolve(l: Layer) -> Result<Self, CliError> {
        let model = l.model.unwrap_or(ModelName::Ahmed);
        let a = finite("a", l.a.unwrap_or(1.0))?;
        // default sweep grids per model
        let (emin, emax, n) = match model {
            ModelName::Rect => (0.1, 2.2, 22),
            ModelName::Ahmed => (0.1, 2.0, 39),
            ModelName::Softstep => (0.2, 2.0, 37),
        };
        let energies = match l.energy {
            Some(e) => vec![finite("energy", e)?],
            None => {
                let lo = finite("emin", l.emin.unwrap_or(emin))?;
                let hi = finite("emax", l.emax.unwrap_or(emax))?;
                let n = l.n.unwrap_or(n);
                if n == 0 || hi < lo {
                    return Err(CliError::Validation(
                        "energy grid needs n >= 1 and emax >= emin".into(),
                    ));
                }
                linspace(lo, hi, n)
            }
        };
        if energies.iter().any(|e| !(*e > 0.0)) {
            return Err(CliError::Validation("energies must be positive".into()));
        }
        let alpha_window = (
            finite("alpha-min", l.alpha_min.unwrap_or(-12.0 * a))?,
            finite("alpha-max", l.alpha_max.unwrap_or(-4.0 * a))?,
        );
        if alpha_window.0 >= alpha_window.1 {
            return Err(CliError::Validation(
                "alpha-min must be below alpha-max".into(),
            ));
        }
        if let Some(t) = l.tol {
            if !(t > 0.0 && t < 1.0) {
                return Err(CliError::Validation("tol must lie in (0, 1)".into()));
            }
        }
        let x_range = (
            finite("xmin", l.xmin.unwrap_or(-10.0 * a))?,
            finite("xmax", l.xmax.unwrap_or(10.0 * a))?,
        );
        let points = l.points.unwrap_or(401);
        if x_range.0 >= x_range.1 || points < 2 {
            return Err(CliError::Validation(
                "potential grid needs xmin < xmax and at least 2 points".into(),
            ));
        }
        let cfg = RunConfig {
            model,
            v0: finite("v0", l.v0.unwrap_or(1.0))?,
            a,
            c: finite("c", l.c.unwrap_or(1.0))?,
            energies,
            lambda: finite("lambda", l.lambda.unwrap_or(50.0))?,
            alpha_window,
            tol: l.tol,
            launches: l.launches.unwrap_or(40),
            x_range,
            points,
            format: l.format.unwrap_or_default(),
            out: l.out,
        };
        cfg.barrier()
            .validate()
            .map_err(|e| CliError::Validation(e.to_string()))?;
        Ok(cfg)
    }

    pub fn barrier(&self) -> BarrierModel {
        let u = PhysicalUnits::default();
        match self.model {
            ModelName::Rect => BarrierModel::rectangular(self.v0, self.a, u),
            ModelName::Ahmed => BarrierModel::ahmed(self.v0, self.a, self.c, u),
            ModelName::Softstep => BarrierModel::soft_step(self.v0, self.a, u),
        }
    }
}

impl fmt::Display for RunConfig {
    /// One-line echo for the CSV comment header.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let model = match self.model {
            ModelName::Rect => "rect",
            ModelName::Ahmed => "ahmed",
            ModelName::Softstep => "softstep",
        };
        write!(f, "model={model} v0={} a={}", self.v0, self.a)?;
        if self.model == ModelName::Ahmed {
            write!(f, " c={}", self.c)?;
        }
        match self.energies.as_slice() {
            [e] => write!(f, " energy={e}")?,
            es => write!(
                f,
                " emin={} emax={} n={}",
                es[0],
                es[es.len() - 1],
                es.len()
            )?,
        }
        write!(
            f,
            " lambda={} alpha-min={} alpha-max={}",
            self.lambda, self.alpha_window.0, self.alpha_window.1
        )?;
        if let Some(t) = self.tol {
            write!(f, " tol={t}")?;
        }
        Ok(())
    }
}
