//! Checks of a simulated trajectory against the symbolic predictions.

use filament_core::curvegeom::ArcPreservingField;
use serde::Serialize;

use crate::compiled::CompiledPoly;
use crate::error::SimError;
use crate::flow::Frame;
use crate::state::{reconstruct, CurvatureState, PlaneCurve};

/// Residuals below this RMS are never attributed to the gauge.
pub const GAUGE_FLOOR: f64 = 1e-6;
/// Share of the squared residual a rigid motion must explain to be flagged.
pub const GAUGE_SHARE: f64 = 0.9;

#[derive(Clone, Debug, Serialize)]
pub struct VelocityReport {
    /// Time spacing of the central differences.
    pub spacing: f64,
    pub samples: usize,
    pub max_residual: f64,
    pub rms_residual: f64,
    pub max_tangential: f64,
    pub max_normal: f64,
    pub rms_normal: f64,
    /// Fraction of the squared residual explained by an infinitesimal rigid
    /// motion `a + ω J γ`.
    pub rigid_fraction: f64,
}

/// Compares `∂γ/∂t`, by central differences of reconstructed curves at equal
/// labels, with `f T + g N` evaluated on the middle state.
///
/// `frames` must be equally spaced in time on a common grid; every interior
/// frame contributes. Returns [`SimError::GaugeDrift`] when the residual is
/// dominated by a rigid motion.
pub fn verify_pf_velocity(
    frames: &[Frame],
    field: &ArcPreservingField,
) -> Result<VelocityReport, SimError> {
    if frames.len() < 3 {
        return Err(SimError::InvalidConfig(format!(
            "velocity check needs at least 3 frames, got {}",
            frames.len()
        )));
    }
    let tau = frames[1].time() - frames[0].time();
    let n = frames[0].state.len();
    for w in frames.windows(2) {
        let gap = w[1].time() - w[0].time();
        if !(tau > 0.0) || (gap - tau).abs() > 1e-9 * tau.max(1.0) {
            return Err(SimError::InvalidConfig(
                "frames are not uniformly spaced in time".into(),
            ));
        }
        if w[1].state.len() != n || w[1].state.length() != w[0].state.length() {
            return Err(SimError::InvalidConfig(
                "frames live on different grids".into(),
            ));
        }
    }
    let f = CompiledPoly::new(field.f(), 0.0);
    let g = CompiledPoly::new(field.g(), 0.0);
    let top = f.max_order().max(g.max_order());
    let curves: Vec<PlaneCurve> = frames
        .iter()
        .map(|fr| reconstruct(&fr.state, fr.gauge))
        .collect();

    let mut residuals: Vec<([f64; 2], [f64; 2])> = Vec::new();
    let (mut max_t, mut max_n, mut sum_n2) = (0.0f64, 0.0f64, 0.0);
    for i in 1..frames.len() - 1 {
        let mid = &curves[i];
        let derivs = frames[i]
            .state
            .grid()
            .derivatives(frames[i].state.samples(), top);
        for j in 0..n {
            let (p, q) = (curves[i + 1].points()[j], curves[i - 1].points()[j]);
            let vel = [(p[0] - q[0]) / (2.0 * tau), (p[1] - q[1]) / (2.0 * tau)];
            let (t, nn) = (mid.tangent(j), mid.normal(j));
            let (fj, gj) = (f.eval_at(&derivs, j), g.eval_at(&derivs, j));
            let predicted = [fj * t[0] + gj * nn[0], fj * t[1] + gj * nn[1]];
            let r = [vel[0] - predicted[0], vel[1] - predicted[1]];
            let rt = r[0] * t[0] + r[1] * t[1];
            let rn = r[0] * nn[0] + r[1] * nn[1];
            max_t = max_t.max(rt.abs());
            max_n = max_n.max(rn.abs());
            sum_n2 += rn * rn;
            residuals.push((mid.points()[j], r));
        }
    }
    let count = residuals.len();
    let sum2: f64 = residuals
        .iter()
        .map(|(_, r)| r[0] * r[0] + r[1] * r[1])
        .sum();
    let rms = (sum2 / count as f64).sqrt();
    let max = residuals
        .iter()
        .map(|(_, r)| r[0].hypot(r[1]))
        .fold(0.0f64, f64::max);
    let rigid_fraction = if sum2 > 0.0 {
        1.0 - rigid_fit_remainder(&residuals) / sum2
    } else {
        0.0
    };
    let report = VelocityReport {
        spacing: tau,
        samples: count,
        max_residual: max,
        rms_residual: rms,
        max_tangential: max_t,
        max_normal: max_n,
        rms_normal: (sum_n2 / count as f64).sqrt(),
        rigid_fraction,
    };
    if rms > GAUGE_FLOOR && rigid_fraction > GAUGE_SHARE {
        return Err(SimError::GaugeDrift {
            rms,
            rigid_fraction,
        });
    }
    Ok(report)
}

/// Squared residual left after the least-squares fit `r ≈ a + ω J (p - p̄)`.
fn rigid_fit_remainder(data: &[([f64; 2], [f64; 2])]) -> f64 {
    let count = data.len() as f64;
    let mut centre = [0.0, 0.0];
    let mut mean_r = [0.0, 0.0];
    for (p, r) in data {
        centre[0] += p[0] / count;
        centre[1] += p[1] / count;
        mean_r[0] += r[0] / count;
        mean_r[1] += r[1] / count;
    }
    // With centred positions the translation and rotation decouple:
    // ω = Σ (J q)·r / Σ |q|².
    let (mut num, mut den) = (0.0, 0.0);
    for (p, r) in data {
        let q = [p[0] - centre[0], p[1] - centre[1]];
        num += -q[1] * r[0] + q[0] * r[1];
        den += q[0] * q[0] + q[1] * q[1];
    }
    let omega = if den > 0.0 { num / den } else { 0.0 };
    data.iter()
        .map(|(p, r)| {
            let q = [p[0] - centre[0], p[1] - centre[1]];
            let e0 = r[0] - mean_r[0] + omega * q[1];
            let e1 = r[1] - mean_r[1] - omega * q[0];
            e0 * e0 + e1 * e1
        })
        .sum()
}

/// `H0 = ∫ ½k²`, `H1 = ∫ (½k'² - ⅛k⁴)` and `TK = ∫ k` at one time.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Conserved {
    pub t: f64,
    pub h0: f64,
    pub h1: f64,
    pub tk: f64,
}

pub fn conserved(state: &CurvatureState) -> Conserved {
    let grid = state.grid();
    let d = grid.derivatives(state.samples(), 1);
    let h = state.spacing();
    let (mut h0, mut h1, mut tk) = (0.0, 0.0, 0.0);
    for (k, dk) in d[0].iter().zip(&d[1]) {
        h0 += 0.5 * k * k;
        h1 += 0.5 * dk * dk - 0.125 * k.powi(4);
        tk += k;
    }
    Conserved {
        t: state.time(),
        h0: h0 * h,
        h1: h1 * h,
        tk: tk * h,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConservationReport {
    pub rows: Vec<Conserved>,
    /// `max |H0(t) - H0(0)| / |H0(0)|` (absolute when `H0(0) = 0`).
    pub h0_drift: f64,
    pub h1_drift: f64,
    /// `max |TK(t) - TK(0)|`.
    pub tk_drift: f64,
}

pub fn conserved_report<'a>(
    trajectory: impl IntoIterator<Item = &'a CurvatureState>,
) -> ConservationReport {
    let rows: Vec<Conserved> = trajectory.into_iter().map(conserved).collect();
    let drift = |get: fn(&Conserved) -> f64, relative: bool| -> f64 {
        let Some(first) = rows.first() else {
            return 0.0;
        };
        let base = get(first);
        let scale = if relative && base != 0.0 {
            base.abs()
        } else {
            1.0
        };
        rows.iter()
            .map(|r| (get(r) - base).abs() / scale)
            .fold(0.0, f64::max)
    };
    ConservationReport {
        h0_drift: drift(|r| r.h0, true),
        h1_drift: drift(|r| r.h1, true),
        tk_drift: drift(|r| r.tk, false),
        rows,
    }
}
