use std::f64::consts::PI;

use clap::Subcommand;

use qtraj_core::dynamics::{
    find_gamma, find_repellers, trajectory_of, IntegratorOptions, Trajectory,
};
use qtraj_core::models::{potential_at, BarrierKind, Eigenstate};
use qtraj_core::spectral::{find_nodes_of, locate_pole, PoleSearch};
use qtraj_core::tunneling::{deviation_sweep, SweepConfig};
use qtraj_core::{Cx, Error};

use crate::config::RunConfig;
use crate::output::{GammaBetaRow, Landmark, PotentialRow, ReflectionRow, TrajectoryRecord};
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Potential V(x) on the real axis.
    Potential,
    /// Classified trajectories launched on the line through the pole.
    Trajectories,
    /// Reflection record at one energy.
    Reflection,
    /// Reflection records over an energy grid.
    Sweep,
    /// Pole ordinate beta and top tunneling ordinate gamma per energy.
    GammaBeta,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Potential => "potential",
            Command::Trajectories => "trajectories",
            Command::Reflection => "reflection",
            Command::Sweep => "sweep",
            Command::GammaBeta => "gamma-beta",
        }
    }
}

pub const POTENTIAL_HEADER: &[&str] = &["x", "V"];
pub const REFLECTION_HEADER: &[&str] = &[
    "E",
    "R_ansatz",
    "R_standard",
    "deviation",
    "alpha",
    "beta",
    "quad_err",
    "diagnostic",
];
pub const GAMMA_BETA_HEADER: &[&str] = &["E", "beta", "gamma", "diagnostic"];
pub const TRAJECTORY_HEADER: &[&str] = &["kind", "id", "label", "t", "xr", "xi"];

fn numerical(e: Error) -> CliError {
    CliError::Numerical(e.to_string())
}

pub fn potential(cfg: &RunConfig) -> Result<Vec<PotentialRow>, CliError> {
    let model = cfg.barrier();
    let (lo, hi) = cfg.x_range;
    (0..cfg.points)
        .map(|i| {
            let x = lo + (hi - lo) * i as f64 / (cfg.points - 1) as f64;
            let v = potential_at(&model, Cx::new(x, 0.0)).map_err(numerical)?;
            Ok(PotentialRow { x, V: v.re })
        })
        .collect()
}

fn pole_search(cfg: &RunConfig) -> PoleSearch {
    PoleSearch {
        alpha_window: cfg.alpha_window,
        ..PoleSearch::default_for(&cfg.barrier())
    }
}

/// One row per energy; the flag reports whether any row failed.
pub fn sweep(cfg: &RunConfig) -> (Vec<ReflectionRow>, bool) {
    let model = cfg.barrier();
    let mut config = SweepConfig::default_for(&model);
    config.lambda = cfg.lambda;
    config.pole = pole_search(cfg);
    if let Some(t) = cfg.tol {
        config.quad_tol = t;
    }
    let mut failed = false;
    let rows = deviation_sweep(&model, &cfg.energies, &config)
        .into_iter()
        .map(|(e, rec)| match rec {
            Ok(r) => ReflectionRow {
                E: e,
                R_ansatz: Some(r.R_ansatz),
                R_standard: Some(r.R_standard),
                deviation: Some(r.deviation),
                alpha: Some(r.pole.alpha),
                beta: Some(r.pole.beta),
                quad_err: Some(r.quadrature_error_estimate),
                diagnostic: String::new(),
            },
            Err(err) => {
                failed = true;
                ReflectionRow {
                    E: e,
                    R_ansatz: None,
                    R_standard: None,
                    deviation: None,
                    alpha: None,
                    beta: None,
                    quad_err: None,
                    diagnostic: err.to_string(),
                }
            }
        })
        .collect();
    (rows, failed)
}

fn integrator(cfg: &RunConfig, alpha: f64) -> IntegratorOptions {
    let mut opts = IntegratorOptions::for_line(&cfg.barrier(), alpha);
    if let Some(t) = cfg.tol {
        opts.rel_tol = t;
        opts.abs_tol = 1e-2 * t;
    }
    opts
}

/// Launches used for `find_gamma` scans.
const GAMMA_SAMPLES: usize = 48;

pub fn gamma_beta(cfg: &RunConfig) -> (Vec<GammaBetaRow>, bool) {
    use rayon::prelude::*;
    let model = cfg.barrier();
    let search = pole_search(cfg);
    let rows: Vec<(GammaBetaRow, bool)> = cfg
        .energies
        .par_iter()
        .map(|&e| {
            let pole = Eigenstate::new(&model, e)
                .and_then(|st| locate_pole(&st, &search).map(|p| (st, p)));
            match pole {
                Err(err) => (
                    GammaBetaRow {
                        E: e,
                        beta: None,
                        gamma: None,
                        diagnostic: err.to_string(),
                    },
                    true,
                ),
                Ok((st, p)) => {
                    let opts = integrator(cfg, p.alpha);
                    let (gamma, diagnostic) = match find_gamma(&st, &p, &opts, GAMMA_SAMPLES) {
                        Ok(g) => (Some(g), String::new()),
                        Err(err) => (None, err.to_string()),
                    };
                    (
                        GammaBetaRow {
                            E: e,
                            beta: Some(p.beta),
                            gamma,
                            diagnostic,
                        },
                        false,
                    )
                }
            }
        })
        .collect();
    let failed = rows.iter().any(|r| r.1);
    (rows.into_iter().map(|r| r.0).collect(), failed)
}

fn xy(x: Cx) -> [f64; 2] {
    [x.re, x.im]
}

fn record(id: usize, t: &Trajectory) -> TrajectoryRecord {
    TrajectoryRecord {
        id,
        class: format!("{:?}", t.class),
        launch: xy(t.launch),
        backward_end: format!("{:?}", t.backward_end),
        forward_end: format!("{:?}", t.forward_end),
        t: t.samples.iter().map(|s| s.0).collect(),
        points: t.samples.iter().map(|s| xy(s.1)).collect(),
    }
}

/// Trajectories launched at the centres of `launches` equal cells on the
/// pole line: the full strip for periodic models, `β ± 3a` otherwise.
pub fn trajectories(cfg: &RunConfig) -> Result<(Vec<TrajectoryRecord>, Vec<Landmark>), CliError> {
    use rayon::prelude::*;
    let model = cfg.barrier();
    let energy = match cfg.energies.as_slice() {
        [e] => *e,
        _ => {
            return Err(CliError::Validation(
                "trajectories needs a single --energy".into(),
            ))
        }
    };
    let state = Eigenstate::new(&model, energy).map_err(numerical)?;
    let search = pole_search(cfg);
    let found = find_nodes_of(&state, search.window(&model), search.grid).map_err(numerical)?;
    let pole = locate_pole(&state, &search).map_err(numerical)?;
    let opts = integrator(cfg, pole.alpha);
    opts.validate(&model)
        .map_err(|e| CliError::Validation(e.to_string()))?;

    let a = model.a;
    let (lo, hi) = if model.kind.is_periodic() {
        (-PI * a, PI * a)
    } else {
        (pole.beta - 3.0 * a, pole.beta + 3.0 * a)
    };
    let n = cfg.launches;
    let launches: Vec<Cx> = (0..n)
        .map(|i| Cx::new(pole.alpha, lo + (hi - lo) * (i as f64 + 0.5) / n as f64))
        .collect();
    let records = launches
        .par_iter()
        .enumerate()
        .map(|(i, &x0)| record(i, &trajectory_of(&state, x0, &opts)))
        .collect();

    let mut landmarks = vec![Landmark {
        kind: "pole".into(),
        x: xy(pole.x()),
    }];
    for x in found
        .nodes
        .iter()
        .filter(|x| x.re >= cfg.alpha_window.0 && x.re <= cfg.alpha_window.1)
    {
        landmarks.push(Landmark {
            kind: "node".into(),
            x: xy(*x),
        });
    }
    let repellers = if model.kind == BarrierKind::Rectangular {
        find_repellers(&state, a, (-3.0 * a, 3.0 * a))
    } else {
        find_repellers(&state, 0.0, (-PI * a, PI * a))
    };
    for x in repellers.map_err(numerical)? {
        landmarks.push(Landmark {
            kind: "repeller".into(),
            x: xy(x),
        });
    }
    match find_gamma(&state, &pole, &opts, GAMMA_SAMPLES) {
        Ok(g) => landmarks.push(Landmark {
            kind: "gamma".into(),
            x: [pole.alpha, g],
        }),
        Err(Error::NoTunnelingFound) => {}
        Err(e) => return Err(numerical(e)),
    }
    Ok((records, landmarks))
}
