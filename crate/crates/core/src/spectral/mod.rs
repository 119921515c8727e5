//! Nodes of the eigenstate in the complex plane and the choice of the
//! integration pole `α + iβ`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::models::{BarrierModel, Eigenstate};
use crate::Cx;

const NEWTON_MAX_ITER: usize = 60;
const MERGE_DIST: f64 = 1e-8;
/// Acceptance threshold for a refined node, relative to the local amplitude.
const NODE_RESIDUAL: f64 = 1e-10;

/// A selected node `α + iβ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PoleLocation {
    pub alpha: f64,
    pub beta: f64,
    /// `|ψ|` at the node divided by the local amplitude scale.
    pub residual: f64,
    #[serde(rename = "E")]
    pub energy: f64,
}

impl PoleLocation {
    pub fn x(&self) -> Cx {
        Cx::new(self.alpha, self.beta)
    }
}

/// Rectangle of the complex plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Window {
    pub re: (f64, f64),
    pub im: (f64, f64),
}

impl Window {
    pub fn contains(&self, x: Cx) -> bool {
        (self.re.0..=self.re.1).contains(&x.re) && (self.im.0..=self.im.1).contains(&x.im)
    }

    /// Default search window: `Re x ∈ [-12a, -4a]`, one period (or `±3a`)
    /// in `Im x`.
    pub fn incident_side(model: &BarrierModel) -> Self {
        let a = model.a;
        let h = if model.kind.is_periodic() {
            std::f64::consts::PI * a
        } else {
            3.0 * a
        };
        Self {
            re: (-12.0 * a, -4.0 * a),
            im: (-h, h),
        }
    }
}

/// Result of a node search, with the number of seeds dropped because
/// Newton left the window or failed to converge.
#[derive(Debug, Clone, PartialEq)]
pub struct NodeSearch {
    pub nodes: Vec<Cx>,
    pub dropped: usize,
}

/// Newton iteration `x ← x − ψ/ψ'` from `seed`. Stops when the step falls
/// below `1e-14 |x|`, or when it stops shrinking once under `1e-9 |x|`
/// (the evaluation noise floor). Returns the iterate with the smallest
/// `|ψ|` and that `|ψ|/scale`.
pub fn refine_node(state: &Eigenstate, seed: Cx, scale: f64) -> Result<(Cx, f64)> {
    let mut x = seed;
    let mut best = (seed, f64::INFINITY);
    let mut last_step = f64::INFINITY;
    for _ in 0..NEWTON_MAX_ITER {
        let s = state.sample(x)?;
        let amp = s.psi.norm();
        if amp < best.1 {
            best = (x, amp);
        }
        if amp == 0.0 {
            break;
        }
        let step = s.psi / s.dpsi;
        let len = step.norm();
        if !len.is_finite() {
            return Err(Error::NewtonDivergence(seed));
        }
        let size = 1.0 + x.norm();
        if len <= 1e-14 * size || (len < 1e-9 * size && len > 0.5 * last_step) {
            let y = x - step;
            let amp = state.psi(y)?.norm();
            if amp < best.1 {
                best = (y, amp);
            }
            return Ok((best.0, best.1 / scale));
        }
        last_step = len;
        x -= step;
    }
    if best.1 == 0.0 {
        return Ok((best.0, 0.0));
    }
    Err(Error::NewtonDivergence(seed))
}

/// Grid scan of `|ψ|` over `window` for local minima, each refined by
/// Newton. Nodes closer than `1e-8` are merged.
pub fn find_nodes(
    energy: f64,
    model: &BarrierModel,
    window: Window,
    grid: (usize, usize),
) -> Result<NodeSearch> {
    let state = Eigenstate::new(model, energy)?;
    find_nodes_of(&state, window, grid)
}

pub fn find_nodes_of(
    state: &Eigenstate,
    window: Window,
    grid: (usize, usize),
) -> Result<NodeSearch> {
    let (nr, ni) = grid;
    if nr < 3 || ni < 3 {
        return Err(Error::InvalidParameters(format!(
            "node grid must be at least 3 x 3, got {nr} x {ni}"
        )));
    }
    let at = |i: usize, j: usize| {
        let u = i as f64 / (nr - 1) as f64;
        let v = j as f64 / (ni - 1) as f64;
        Cx::new(
            window.re.0 + u * (window.re.1 - window.re.0),
            window.im.0 + v * (window.im.1 - window.im.0),
        )
    };
    let mut amp = vec![f64::INFINITY; nr * ni];
    for i in 0..nr {
        for j in 0..ni {
            if let Ok(p) = state.psi(at(i, j)) {
                let m = p.norm();
                if m.is_finite() {
                    amp[i * ni + j] = m;
                }
            }
        }
    }
    let mut nodes: Vec<Cx> = Vec::new();
    let mut dropped = 0;
    for i in 0..nr {
        for j in 0..ni {
            let here = amp[i * ni + j];
            if !here.is_finite() {
                continue;
            }
            let mut is_min = true;
            let mut scale = here;
            for di in -1i64..=1 {
                for dj in -1i64..=1 {
                    let (ii, jj) = (i as i64 + di, j as i64 + dj);
                    if (di, dj) == (0, 0) || ii < 0 || jj < 0 || ii >= nr as i64 || jj >= ni as i64
                    {
                        continue;
                    }
                    let other = amp[ii as usize * ni + jj as usize];
                    if other < here {
                        is_min = false;
                    }
                    if other.is_finite() {
                        scale = scale.max(other);
                    }
                }
            }
            if !is_min {
                continue;
            }
            match refine_node(state, at(i, j), scale) {
                Ok((x, r)) if r < NODE_RESIDUAL && window.contains(x) => {
                    if !nodes.iter().any(|n| (n - x).norm() < MERGE_DIST) {
                        nodes.push(x);
                    }
                }
                Ok((x, _)) if !window.contains(x) => dropped += 1,
                _ => dropped += 1,
            }
        }
    }
    nodes.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    Ok(NodeSearch { nodes, dropped })
}

/// Folds `x_i` into `(−πa, πa]` for the periodic models.
pub fn fold_beta(beta: f64, model: &BarrierModel) -> f64 {
    match model.period() {
        Some(p) => {
            let h = p / 2.0;
            let mut b = beta - p * (beta / p).round();
            if b <= -h {
                b += p;
            }
            b
        }
        None => beta,
    }
}

/// The node with the most negative real part inside `alpha_window`.
pub fn select_integration_pole(
    nodes: &[Cx],
    state: &Eigenstate,
    alpha_window: (f64, f64),
) -> Result<PoleLocation> {
    let (lo, hi) = alpha_window;
    let best = nodes
        .iter()
        .filter(|n| n.re >= lo && n.re <= hi)
        .min_by(|a, b| a.re.total_cmp(&b.re))
        .ok_or(Error::NoPoleInWindow(lo, hi))?;
    let model = state.model();
    let beta = fold_beta(best.im, model);
    let x = Cx::new(best.re, beta);
    let s = state.sample(x)?;
    let scale = s.dpsi.norm().max(f64::MIN_POSITIVE);
    Ok(PoleLocation {
        alpha: best.re,
        beta,
        residual: s.psi.norm() / scale,
        energy: state.energy(),
    })
}

/// Search settings for the integration pole.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PoleSearch {
    pub alpha_window: (f64, f64),
    pub grid: (usize, usize),
}

impl PoleSearch {
    pub fn default_for(model: &BarrierModel) -> Self {
        let w = Window::incident_side(model);
        Self {
            alpha_window: w.re,
            grid: (200, 200),
        }
    }

    pub fn window(&self, model: &BarrierModel) -> Window {
        let base = Window::incident_side(model);
        // a half-unit margin so that nodes on the window edge are still seeded
        Window {
            re: (self.alpha_window.0 - 0.5, self.alpha_window.1 + 0.5),
            im: base.im,
        }
    }
}

/// Node search followed by pole selection.
pub fn locate_pole(state: &Eigenstate, search: &PoleSearch) -> Result<PoleLocation> {
    let found = find_nodes_of(state, search.window(state.model()), search.grid)?;
    select_integration_pole(&found.nodes, state, search.alpha_window)
}

/// `β(E)` per energy; failures are kept in place.
pub fn beta_curve(
    model: &BarrierModel,
    energies: &[f64],
    alpha_window: (f64, f64),
) -> Vec<(f64, Result<f64>)> {
    let mut search = PoleSearch::default_for(model);
    search.alpha_window = alpha_window;
    energies
        .iter()
        .map(|&e| {
            let beta = Eigenstate::new(model, e)
                .and_then(|st| locate_pole(&st, &search))
                .map(|p| p.beta);
            (e, beta)
        })
        .collect()
}
