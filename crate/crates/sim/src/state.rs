//! Periodic curvature data and the plane curves it determines.

use std::f64::consts::PI;

use filament_core::spectral::PeriodicGrid;
use rustfft::num_complex::Complex64;
use serde::Serialize;

use crate::error::SimError;

/// Smallest grid accepted by the simulator.
pub const MIN_NODES: usize = 16;

/// Curvature samples `k(s_j, t)` at `s_j = j L / N`.
#[derive(Clone, Debug, PartialEq)]
pub struct CurvatureState {
    samples: Vec<f64>,
    length: f64,
    time: f64,
}

impl CurvatureState {
    pub fn new(samples: Vec<f64>, length: f64) -> Result<Self, SimError> {
        Self::at_time(samples, length, 0.0)
    }

    pub fn at_time(samples: Vec<f64>, length: f64, time: f64) -> Result<Self, SimError> {
        let n = samples.len();
        if n < MIN_NODES || n % 2 != 0 {
            return Err(SimError::InvalidState(format!(
                "need an even number of at least {MIN_NODES} nodes, got {n}"
            )));
        }
        if !(length > 0.0) || !length.is_finite() {
            return Err(SimError::InvalidState(format!(
                "length must be positive, got {length}"
            )));
        }
        if let Some(j) = samples.iter().position(|x| !x.is_finite()) {
            return Err(SimError::InvalidState(format!("sample {j} is not finite")));
        }
        Ok(Self {
            samples,
            length,
            time,
        })
    }

    /// Samples `f(s_j)`.
    pub fn from_fn(n: usize, length: f64, f: impl Fn(f64) -> f64) -> Result<Self, SimError> {
        let h = length / n as f64;
        Self::new((0..n).map(|j| f(j as f64 * h)).collect(), length)
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    pub fn time(&self) -> f64 {
        self.time
    }

    pub fn spacing(&self) -> f64 {
        self.length / self.samples.len() as f64
    }

    pub fn nodes(&self) -> Vec<f64> {
        let h = self.spacing();
        (0..self.len()).map(|j| j as f64 * h).collect()
    }

    pub fn grid(&self) -> PeriodicGrid {
        PeriodicGrid::new(self.len(), self.length).expect("validated on construction")
    }

    /// `∫ k ds`.
    pub fn total_turning(&self) -> f64 {
        self.samples.iter().sum::<f64>() * self.spacing()
    }
}

/// Initial tangent angle and initial point of the reconstruction.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize)]
pub struct Gauge {
    pub theta0: f64,
    pub origin: [f64; 2],
}

/// Arc-length parametrized polyline sampled at the curvature nodes.
#[derive(Clone, Debug)]
pub struct PlaneCurve {
    points: Vec<[f64; 2]>,
    angles: Vec<f64>,
    end: [f64; 2],
    spacing: f64,
    gauge: Gauge,
}

impl PlaneCurve {
    /// `γ(s_j)` for `j = 0..N`.
    pub fn points(&self) -> &[[f64; 2]] {
        &self.points
    }

    /// Tangent angles `θ(s_j)`.
    pub fn angles(&self) -> &[f64] {
        &self.angles
    }

    pub fn tangent(&self, j: usize) -> [f64; 2] {
        let (s, c) = self.angles[j].sin_cos();
        [c, s]
    }

    pub fn normal(&self, j: usize) -> [f64; 2] {
        let (s, c) = self.angles[j].sin_cos();
        [-s, c]
    }

    /// `γ(L)`.
    pub fn end(&self) -> [f64; 2] {
        self.end
    }

    pub fn theta0(&self) -> f64 {
        self.gauge.theta0
    }

    pub fn origin(&self) -> [f64; 2] {
        self.gauge.origin
    }

    /// `|γ(L) - γ(0)|`.
    pub fn closure_gap(&self) -> f64 {
        let p = self.points[0];
        (self.end[0] - p[0]).hypot(self.end[1] - p[1])
    }

    /// Lengths of the chords `γ(s_{j+1}) - γ(s_j)`, closing with `γ(L)`.
    pub fn chord_lengths(&self) -> Vec<f64> {
        let mut pts = self.points.clone();
        pts.push(self.end);
        pts.windows(2)
            .map(|w| (w[1][0] - w[0][0]).hypot(w[1][1] - w[0][1]))
            .collect()
    }

    /// `max_j | |γ'(s_j)| - 1 |`, with `γ'` from 9-point finite differences
    /// of the positions (independent of the angles used to build them).
    pub fn speed_deviation(&self) -> f64 {
        let mut pts = self.points.clone();
        pts.push(self.end);
        let n = pts.len();
        const WIDTH: usize = 9;
        let mut worst = 0.0f64;
        for j in 0..n - 1 {
            let start = j.saturating_sub(WIDTH / 2).min(n - WIDTH);
            let offsets: Vec<f64> = (start..start + WIDTH)
                .map(|i| i as f64 - j as f64)
                .collect();
            let w = first_derivative_weights(&offsets);
            let (mut dx, mut dy) = (0.0, 0.0);
            for (i, wi) in w.iter().enumerate() {
                dx += wi * pts[start + i][0];
                dy += wi * pts[start + i][1];
            }
            let speed = dx.hypot(dy) / self.spacing;
            worst = worst.max((speed - 1.0).abs());
        }
        worst
    }
}

/// Fornberg weights for the first derivative at 0 on the given offsets
/// (unit spacing).
fn first_derivative_weights(x: &[f64]) -> Vec<f64> {
    let n = x.len();
    // c[i][m]: weight of node i for derivative m (m = 0, 1).
    let mut c = vec![[0.0f64; 2]; n];
    c[0][0] = 1.0;
    let mut c1 = 1.0;
    for i in 1..n {
        let mut c2 = 1.0;
        for j in 0..i {
            let c3 = x[i] - x[j];
            c2 *= c3;
            if j == i - 1 {
                c[i][1] = c1 * (c[i - 1][0] - x[i - 1] * c[i - 1][1]) / c2;
                c[i][0] = -c1 * x[i - 1] * c[i - 1][0] / c2;
            }
            c[j][1] = (x[i] * c[j][1] - c[j][0]) / c3;
            c[j][0] = x[i] * c[j][0] / c3;
        }
        c1 = c2;
    }
    c.into_iter().map(|w| w[1]).collect()
}

/// Integrates the Frenet system of a plane curve: `θ(s) = θ0 + ∫ k`,
/// `γ(s) = origin + ∫ (cos θ, sin θ)`.
///
/// With `k = m + w` (`m` the mean), `e^{iθ} = e^{iθ0} e^{ims} e^{iψ}` where
/// `ψ = ∫ w` is periodic. The trigonometric interpolant of `e^{iψ}` is
/// integrated exactly against `e^{ims}`, so the quadrature is spectrally
/// accurate whether or not the curve closes.
pub fn reconstruct(state: &CurvatureState, gauge: Gauge) -> PlaneCurve {
    let n = state.len();
    let length = state.length();
    let h = state.spacing();
    let grid = state.grid();
    let mean = state.samples().iter().sum::<f64>() / n as f64;

    let mut hat = grid.forward(state.samples());
    hat[0] = Complex64::new(0.0, 0.0);
    for (j, z) in hat.iter_mut().enumerate().skip(1) {
        *z = if grid.is_nyquist(j) {
            Complex64::new(0.0, 0.0)
        } else {
            *z / Complex64::new(0.0, grid.wavenumber(j))
        };
    }
    let mut psi = grid.inverse(hat);
    let psi0 = psi[0];
    psi.iter_mut().for_each(|p| *p -= psi0);

    let s: Vec<f64> = (0..n).map(|j| j as f64 * h).collect();
    let angles: Vec<f64> = s
        .iter()
        .zip(&psi)
        .map(|(sj, p)| gauge.theta0 + mean * sj + p)
        .collect();

    // Fourier coefficients of e^{iψ}; the Nyquist mode is split evenly
    // between ±π/h.
    let mut coeffs: Vec<Complex64> = psi.iter().map(|p| Complex64::from_polar(1.0, *p)).collect();
    let mut planner = rustfft::FftPlanner::new();
    planner.plan_fft_forward(n).process(&mut coeffs);
    let mut modes: Vec<(f64, Complex64)> = Vec::with_capacity(n + 1);
    for (j, c) in coeffs.into_iter().enumerate() {
        let c = c / n as f64;
        if grid.is_nyquist(j) {
            let xi = PI / h;
            modes.push((mean + xi, c * 0.5));
            modes.push((mean - xi, c * 0.5));
        } else {
            modes.push((mean + grid.wavenumber(j), c));
        }
    }

    let rotation = Complex64::from_polar(1.0, gauge.theta0);
    let origin = Complex64::new(gauge.origin[0], gauge.origin[1]);
    let position = |sv: f64| -> [f64; 2] {
        let integral: Complex64 = modes.iter().map(|&(w, c)| c * exp_integral(w, sv)).sum();
        let z = origin + rotation * integral;
        [z.re, z.im]
    };
    PlaneCurve {
        points: s.iter().map(|&sv| position(sv)).collect(),
        angles,
        end: position(length),
        spacing: h,
        gauge,
    }
}

/// `∫_0^s e^{iωσ} dσ`.
fn exp_integral(omega: f64, s: f64) -> Complex64 {
    let x = omega * s;
    if x.abs() < 1e-6 {
        // (e^{ix} - 1)/(iω) = s (1 + ix/2 - x²/6 - i x³/24 + ...)
        return Complex64::new(s * (1.0 - x * x / 6.0), s * (x / 2.0 - x * x * x / 24.0));
    }
    let (sin, cos) = x.sin_cos();
    Complex64::new(sin, 1.0 - cos) / omega
}
