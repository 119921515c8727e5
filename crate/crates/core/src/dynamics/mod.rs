//! Complex trajectories of the MdBB field `ẋ = (ħ/im) ψ'/ψ`: integration in
//! both time directions, classification, and the derived landmarks γ
//! (top-most tunneling launch) and repellers.

pub mod rk45;

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::models::{mdbb_velocity_guarded, BarrierKind, BarrierModel, Eigenstate};
use crate::spectral::{refine_node, PoleLocation};
use crate::Cx;
use rk45::{hermite, next_factor, trial};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IntegratorOptions {
    pub initial_step: f64,
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_time: f64,
    /// Escape threshold on `|x_r|`.
    pub escape_xr: f64,
    /// Distance from a node at which integration stops.
    pub node_guard: f64,
    pub loop_tol: f64,
    pub max_steps: usize,
}

impl IntegratorOptions {
    /// Defaults for launches on the line `Re x = alpha`.
    pub fn for_line(model: &BarrierModel, alpha: f64) -> Self {
        Self {
            initial_step: 1e-2,
            rel_tol: 1e-10,
            abs_tol: 1e-12,
            max_time: 400.0,
            escape_xr: (model.extent() + 6.0 * model.a).max(alpha.abs() + 2.0),
            node_guard: 1e-7,
            loop_tol: 1e-4,
            max_steps: 200_000,
        }
    }

    pub fn validate(&self, model: &BarrierModel) -> Result<()> {
        let positive = [
            self.initial_step,
            self.rel_tol,
            self.abs_tol,
            self.max_time,
            self.escape_xr,
            self.node_guard,
            self.loop_tol,
        ]
        .iter()
        .all(|v| *v > 0.0 && v.is_finite());
        if !positive || self.max_steps == 0 {
            return Err(Error::InvalidParameters(
                "integrator options must be positive and finite".into(),
            ));
        }
        if self.escape_xr <= model.extent() + 5.0 {
            return Err(Error::InvalidParameters(format!(
                "escape_xr = {} must exceed the barrier extent plus 5",
                self.escape_xr
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TerminalReason {
    EscapedLeft,
    EscapedRight,
    LoopClosed,
    NodeHit,
    TimedOut,
    /// Step size underflow.
    Stalled,
    /// The speed dropped to zero: the path runs into a stagnation point.
    Stagnated,
    /// The path reached a branch-cut line `x_i = ±πa` of a periodic model.
    CutCrossed,
    /// The rectangular field on the far side of `x_r = ±a` points back, so
    /// the path ends on the boundary.
    BoundaryHit,
    /// The wavefunction could not be evaluated along the path.
    EvaluationFailed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TrajectoryClass {
    Tunneled,
    Reflected,
    ClosedLoop,
    RepellerLeft,
    RepellerRight,
    Indeterminate,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Trajectory {
    /// `(t, x)` with `t < 0` for the backward half, in increasing `t`.
    pub samples: Vec<(f64, Cx)>,
    pub class: TrajectoryClass,
    pub launch: Cx,
    pub forward_end: TerminalReason,
    pub backward_end: TerminalReason,
}

impl Trajectory {
    /// How the forward-time half ended.
    pub fn terminal_reason(&self) -> TerminalReason {
        self.forward_end
    }

    /// Position where the forward half ended.
    pub fn forward_endpoint(&self) -> Cx {
        self.samples.last().map_or(self.launch, |s| s.1)
    }

    pub fn backward_endpoint(&self) -> Cx {
        self.samples.first().map_or(self.launch, |s| s.1)
    }
}

struct Half {
    points: Vec<(f64, Cx)>,
    end: TerminalReason,
}

fn strip_index(x: Cx, a: f64) -> f64 {
    ((x.im + PI * a) / (2.0 * PI * a)).floor()
}

/// Region label of the rectangular barrier: -1 left, 0 inside, 1 right.
fn rect_region(x: Cx, a: f64) -> i8 {
    if x.re < -a {
        -1
    } else if x.re > a {
        1
    } else {
        0
    }
}

/// Closest approach to `target` on one Hermite step, as `(distance, s)`.
fn closest_on_step(x0: Cx, f0: Cx, x1: Cx, f1: Cx, h: f64, target: Cx) -> (f64, f64) {
    let n = 16;
    let mut best = (f64::INFINITY, 0.0);
    for i in 0..=n {
        let s = i as f64 / n as f64;
        let d = (hermite(x0, f0, x1, f1, h, s) - target).norm();
        if d < best.0 {
            best = (d, s);
        }
    }
    // golden-section polish around the best sample
    let (mut lo, mut hi) = (
        (best.1 - 1.0 / n as f64).max(0.0),
        (best.1 + 1.0 / n as f64).min(1.0),
    );
    let g = 0.5 * (5f64.sqrt() - 1.0);
    for _ in 0..40 {
        let m1 = hi - g * (hi - lo);
        let m2 = lo + g * (hi - lo);
        let d1 = (hermite(x0, f0, x1, f1, h, m1) - target).norm();
        let d2 = (hermite(x0, f0, x1, f1, h, m2) - target).norm();
        if d1 < d2 {
            hi = m2;
        } else {
            lo = m1;
        }
    }
    let s = 0.5 * (lo + hi);
    let d = (hermite(x0, f0, x1, f1, h, s) - target).norm();
    if d < best.0 {
        (d, s)
    } else {
        best
    }
}

fn integrate_half(state: &Eigenstate, x0: Cx, sign: f64, opts: &IntegratorOptions) -> Half {
    let model = *state.model();
    let units = model.units;
    let a = model.a;
    let periodic = model.kind.is_periodic();
    let rect = model.kind == BarrierKind::Rectangular;
    let k = (2.0 * units.mass * state.energy()).sqrt() / units.hbar;
    let v_ref = units.hbar * k / units.mass;
    let mut field = |x: Cx| -> Result<Cx> {
        let s = state.sample(x)?;
        Ok(sign * mdbb_velocity_guarded(&s, &units, opts.node_guard)?)
    };

    let mut points = vec![(0.0, x0)];
    let finish = |points: Vec<(f64, Cx)>, end| Half { points, end };
    let mut x = x0;
    let mut fx = match field(x) {
        Ok(v) => v,
        Err(Error::NodeProximity(_)) => return finish(points, TerminalReason::NodeHit),
        Err(_) => return finish(points, TerminalReason::EvaluationFailed),
    };
    let dir0 = fx / fx.norm();
    let strip0 = strip_index(x0, a);
    let mut t = 0.0;
    let mut h = opts.initial_step;
    let h_min = 1e-12 * opts.initial_step.max(1.0);
    let mut left_ball = false;
    let mut accepted = 0usize;

    for _ in 0..opts.max_steps {
        if t >= opts.max_time {
            return timed_out(state, points, sign);
        }
        if h < h_min {
            return finish(points, TerminalReason::Stalled);
        }
        h = h.min(opts.max_time - t).max(h_min);
        // limit the displacement per step so that the geometry checks below
        // see the path at a useful resolution
        let hv = 0.25 / fx.norm().max(1e-300);
        let h_try = h.min(hv);
        let tr = match trial(&mut field, x, fx, h_try, opts.rel_tol, opts.abs_tol) {
            Ok(tr) => tr,
            Err(Error::NodeProximity(_)) => {
                h = 0.5 * h_try;
                if h < h_min {
                    return finish(points, TerminalReason::NodeHit);
                }
                continue;
            }
            Err(_) => {
                h = 0.5 * h_try;
                if h < h_min {
                    return finish(points, TerminalReason::EvaluationFailed);
                }
                continue;
            }
        };
        if rect {
            let from = rect_region(x, a);
            let to = rect_region(tr.x, a);
            if from != to && (tr.f.re * (to - from) as f64) < 0.0 {
                // the far side pushes back: find the boundary point and stop
                let edge = if from + to > 0 { a } else { -a };
                let s = ((edge - x.re) / (tr.x.re - x.re)).clamp(0.0, 1.0);
                let xc = hermite(x, fx, tr.x, tr.f, h_try, s);
                points.push((sign * (t + s * h_try), Cx::new(edge, xc.im)));
                return finish(points, TerminalReason::BoundaryHit);
            }
        }
        if !tr.err.is_finite() || tr.err > 1.0 {
            h = h_try * next_factor(tr.err.min(1e10));
            continue;
        }
        if periodic && strip_index(tr.x, a) != strip0 {
            if (tr.x - x).norm() > 1e-6 {
                h = 0.5 * h_try;
                continue;
            }
            points.push((sign * (t + h_try), tr.x));
            return finish(points, TerminalReason::CutCrossed);
        }

        let (x_prev, f_prev) = (x, fx);
        t += h_try;
        x = tr.x;
        fx = tr.f;
        accepted += 1;
        points.push((sign * t, x));
        h = h_try * next_factor(tr.err);

        if x.re.abs() > opts.escape_xr {
            // end exactly on the escape line
            let edge = opts.escape_xr.copysign(x.re);
            let (mut lo, mut hi) = (0.0, 1.0);
            for _ in 0..60 {
                let mid = 0.5 * (lo + hi);
                let re = hermite(x_prev, f_prev, x, fx, h_try, mid).re;
                if (re - edge) * edge.signum() < 0.0 {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            let s = 0.5 * (lo + hi);
            let xe = hermite(x_prev, f_prev, x, fx, h_try, s);
            *points.last_mut().expect("launch is stored") =
                (sign * (t - (1.0 - s) * h_try), Cx::new(edge, xe.im));
            let end = if edge > 0.0 {
                TerminalReason::EscapedRight
            } else {
                TerminalReason::EscapedLeft
            };
            return finish(points, end);
        }
        if fx.norm() < 1e-6 * v_ref {
            return finish(points, TerminalReason::Stagnated);
        }
        if fx.norm() < 1e-3 * v_ref {
            if let Some(p) = attracting_stagnation(state, x, sign, 0.05) {
                points.push((sign * t, p));
                return finish(points, TerminalReason::Stagnated);
            }
        }
        if !left_ball {
            left_ball = (x - x0).norm() > 10.0 * opts.loop_tol;
        } else if accepted >= 10 {
            let (d, s) = closest_on_step(x_prev, f_prev, x, fx, h_try, x0);
            if d < opts.loop_tol {
                // velocity direction at the closest point, by differencing
                // the interpolant
                let ds = 1e-3;
                let p1 = hermite(x_prev, f_prev, x, fx, h_try, (s + ds).min(1.0));
                let p0 = hermite(x_prev, f_prev, x, fx, h_try, (s - ds).max(0.0));
                let dir = (p1 - p0) / (p1 - p0).norm();
                let cos = (dir * dir0.conj()).re;
                if cos > (5.0f64).to_radians().cos() {
                    return finish(points, TerminalReason::LoopClosed);
                }
            }
        }
    }
    timed_out(state, points, sign)
}

/// End of a run that used up its time. A path still circling a weakly
/// attracting focus (small `Re λ`) is reported as stagnated there.
fn timed_out(state: &Eigenstate, mut points: Vec<(f64, Cx)>, sign: f64) -> Half {
    let tail = &points[points.len() * 3 / 4..];
    let centre = tail.iter().map(|p| p.1).sum::<Cx>() / tail.len() as f64;
    if let Some(p) = attracting_stagnation(state, centre, sign, 1.0) {
        if tail.iter().all(|q| (q.1 - p).norm() < 1.0) {
            let t = points.last().map_or(0.0, |q| q.0);
            points.push((t, p));
            return Half {
                points,
                end: TerminalReason::Stagnated,
            };
        }
    }
    Half {
        points,
        end: TerminalReason::TimedOut,
    }
}

/// The zero of `ψ'` near `x` if the flow in direction `sign` spirals into
/// it. Zeros of an analytic field are foci or nodes with exponent
/// `λ = (ħ/im) ψ''/ψ`, so `sign · Re λ < 0` means every nearby path
/// converges, only slowly when `Re λ` is small.
fn attracting_stagnation(state: &Eigenstate, x: Cx, sign: f64, reach: f64) -> Option<Cx> {
    let units = state.model().units;
    let mut p = x;
    for _ in 0..30 {
        let [_, d1, d2] = state.derivatives(p).ok()?;
        let step = d1 / d2;
        if !step.norm().is_finite() {
            return None;
        }
        p -= step;
        if step.norm() < 1e-13 * (1.0 + p.norm()) {
            if (p - x).norm() > reach {
                return None;
            }
            let [psi, _, d2] = state.derivatives(p).ok()?;
            let lambda = Cx::new(0.0, -units.hbar / units.mass) * d2 / psi;
            return (sign * lambda.re < 0.0).then_some(p);
        }
    }
    None
}

/// Class from the two terminal reasons.
pub fn classify_ends(backward: TerminalReason, forward: TerminalReason) -> TrajectoryClass {
    use TerminalReason::*;
    match (backward, forward) {
        (_, LoopClosed) | (LoopClosed, _) => TrajectoryClass::ClosedLoop,
        (EscapedLeft, EscapedRight) => TrajectoryClass::Tunneled,
        (EscapedLeft, EscapedLeft) => TrajectoryClass::Reflected,
        (BoundaryHit | Stagnated, EscapedLeft) => TrajectoryClass::RepellerLeft,
        (BoundaryHit | Stagnated, EscapedRight) => TrajectoryClass::RepellerRight,
        _ => TrajectoryClass::Indeterminate,
    }
}

/// Class of a terminated trajectory. The model is accepted for symmetry
/// with the other operations; the terminal reasons already encode the
/// model-specific boundary and stagnation events.
pub fn classify(traj: &Trajectory, _model: &BarrierModel) -> TrajectoryClass {
    classify_ends(traj.backward_end, traj.forward_end)
}

/// Full flow line through `x0`: backward and forward halves joined at `x0`.
pub fn integrate_trajectory(
    x0: Cx,
    energy: f64,
    model: &BarrierModel,
    opts: &IntegratorOptions,
) -> Result<Trajectory> {
    opts.validate(model)?;
    let state = Eigenstate::new(model, energy)?;
    Ok(trajectory_of(&state, x0, opts))
}

pub fn trajectory_of(state: &Eigenstate, x0: Cx, opts: &IntegratorOptions) -> Trajectory {
    let fwd = integrate_half(state, x0, 1.0, opts);
    let bwd = if fwd.end == TerminalReason::LoopClosed {
        Half {
            points: vec![(0.0, x0)],
            end: TerminalReason::LoopClosed,
        }
    } else {
        integrate_half(state, x0, -1.0, opts)
    };
    let mut samples: Vec<(f64, Cx)> = bwd.points.into_iter().skip(1).rev().collect();
    samples.extend(fwd.points);
    Trajectory {
        samples,
        class: classify_ends(bwd.end, fwd.end),
        launch: x0,
        forward_end: fwd.end,
        backward_end: bwd.end,
    }
}

/// One classified trajectory per launch, in input order.
pub fn trajectory_field(
    energy: f64,
    model: &BarrierModel,
    launches: &[Cx],
    opts: &IntegratorOptions,
) -> Result<Vec<Trajectory>> {
    opts.validate(model)?;
    let state = Eigenstate::new(model, energy)?;
    Ok(launches
        .par_iter()
        .map(|&x0| trajectory_of(&state, x0, opts))
        .collect())
}

fn tunnels(state: &Eigenstate, x: Cx, opts: &IntegratorOptions) -> bool {
    trajectory_of(state, x, opts).class == TrajectoryClass::Tunneled
}

/// Ordinate of the top-most tunneling launch on `Re x = α` below the pole:
/// a scan of `samples` launches on `(−πa, β)` followed by bisection to
/// `1e-4`.
pub fn find_gamma(
    state: &Eigenstate,
    pole: &PoleLocation,
    opts: &IntegratorOptions,
    samples: usize,
) -> Result<f64> {
    let a = state.model().a;
    let lo = -PI * a;
    let hi = pole.beta;
    if !(hi > lo) || samples < 2 {
        return Err(Error::NoTunnelingFound);
    }
    let n = samples;
    let at = |i: usize| lo + (hi - lo) * (i as f64 + 0.5) / n as f64;
    let flags: Vec<bool> = (0..n)
        .into_par_iter()
        .map(|i| tunnels(state, Cx::new(pole.alpha, at(i)), opts))
        .collect();
    let top = (0..n)
        .rev()
        .find(|&i| flags[i])
        .ok_or(Error::NoTunnelingFound)?;
    let (mut yes, mut no) = (at(top), if top + 1 < n { at(top + 1) } else { hi });
    while no - yes > 1e-4 {
        let mid = 0.5 * (yes + no);
        if tunnels(state, Cx::new(pole.alpha, mid), opts) {
            yes = mid;
        } else {
            no = mid;
        }
    }
    Ok(0.5 * (yes + no))
}

/// Repellers of the field.
///
/// Rectangular model: points on the line `x_r = boundary` where the
/// interior field switches from entering the boundary to leaving it, found
/// by scanning `x_i` over `segment` and bisecting each sign change of the
/// interior `Re ẋ`. The right-region plane wave always leaves the
/// boundary, so above such an onset trajectories run away on both sides.
///
/// Smooth models: stagnation points (zeros of `ψ'`) in the box
/// `|x_r − boundary| ≤ 3a`, `x_i ∈ segment`, kept when the field diverges
/// there.
pub fn find_repellers(state: &Eigenstate, boundary: f64, segment: (f64, f64)) -> Result<Vec<Cx>> {
    match state {
        Eigenstate::Rect(m, c) => {
            let units = m.units;
            let n = 400;
            let (lo, hi) = segment;
            let interior = |xi: f64| -> f64 {
                let j = c.jet(Cx::new(boundary, xi));
                let v = Cx::new(0.0, -units.hbar / units.mass) * j.d1 / j.v;
                // the interior points outwards (away from x_r = a) when Re v < 0
                if boundary > 0.0 {
                    v.re
                } else {
                    -v.re
                }
            };
            let mut out = Vec::new();
            let mut prev = interior(lo);
            let mut y_prev = lo;
            for i in 1..=n {
                let y = lo + (hi - lo) * i as f64 / n as f64;
                let cur = interior(y);
                if prev > 0.0 && cur < 0.0 {
                    let (mut p, mut q) = (y_prev, y);
                    for _ in 0..60 {
                        let mid = 0.5 * (p + q);
                        if interior(mid) > 0.0 {
                            p = mid;
                        } else {
                            q = mid;
                        }
                    }
                    out.push(Cx::new(boundary, 0.5 * (p + q)));
                }
                prev = cur;
                y_prev = y;
            }
            Ok(out)
        }
        _ => stagnation_points(state, boundary, segment),
    }
}

fn stagnation_points(state: &Eigenstate, center: f64, segment: (f64, f64)) -> Result<Vec<Cx>> {
    let a = state.model().a;
    let units = state.model().units;
    let (nr, ni) = (60, 60);
    let re = (center - 3.0 * a, center + 3.0 * a);
    let at = |i: usize, j: usize| {
        Cx::new(
            re.0 + (re.1 - re.0) * i as f64 / (nr - 1) as f64,
            segment.0 + (segment.1 - segment.0) * j as f64 / (ni - 1) as f64,
        )
    };
    let mut out: Vec<Cx> = Vec::new();
    for i in 0..nr {
        for j in 0..ni {
            let mut x = at(i, j);
            let mut ok = false;
            for _ in 0..40 {
                let Ok([_, d1, d2]) = state.derivatives(x) else {
                    break;
                };
                let step = d1 / d2;
                if !step.norm().is_finite() {
                    break;
                }
                x -= step;
                if step.norm() < 1e-13 * (1.0 + x.norm()) {
                    ok = true;
                    break;
                }
            }
            let inside = (re.0..=re.1).contains(&x.re) && (segment.0..=segment.1).contains(&x.im);
            if !ok || !inside || out.iter().any(|p| (p - x).norm() < 1e-7) {
                continue;
            }
            let Ok([psi, d1, d2]) = state.derivatives(x) else {
                continue;
            };
            if d1.norm() > 1e-9 * psi.norm() {
                continue;
            }
            // div of (Re ẋ, Im ẋ) is 2 Re(dẋ/dx); at ψ' = 0, dẋ/dx = (ħ/im) ψ''/ψ
            let dv = Cx::new(0.0, -units.hbar / units.mass) * d2 / psi;
            if dv.re > 0.0 {
                out.push(x);
            }
        }
    }
    out.sort_by(|p, q| p.im.total_cmp(&q.im).then(p.re.total_cmp(&q.re)));
    Ok(out)
}

/// A node refined from a guess, returned as a pole on its vertical line.
pub fn pole_near(state: &Eigenstate, guess: Cx) -> Result<PoleLocation> {
    let (x, r) = refine_node(state, guess, state.psi(guess)?.norm().max(1e-300))?;
    Ok(PoleLocation {
        alpha: x.re,
        beta: x.im,
        residual: r,
        energy: state.energy(),
    })
}
