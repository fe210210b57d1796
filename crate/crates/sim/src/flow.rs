//! Time stepping of curvature flows `k_t = a(k, k', ...)` together with the
//! rigid gauge `(θ0, origin)` of the curve.
//!
//! The linear part `Σ c_m k^(m)` of `a` is integrated exactly in Fourier
//! space (integrating factor) and the remainder by classical RK4. When the
//! remainder is a total derivative `D_s q`, it is evaluated as the spectral
//! derivative of `q`, which keeps `∫ k ds` fixed to rounding.

use filament_core::curvegeom::{pf_hierarchy, phi_hom, phi_of, ArcPreservingField};
use filament_core::spectral::PeriodicGrid;
use filament_core::{Characteristic, DiffPoly, Error};
use num_traits::ToPrimitive;
use rustfft::num_complex::Complex64;

use crate::compiled::CompiledPoly;
use crate::error::SimError;
use crate::state::{CurvatureState, Gauge};

/// Largest `dt·λ` admitted for the explicit part; RK4 is stable on the
/// imaginary axis up to `2√2`.
pub const RK4_STABILITY: f64 = 2.8;

#[derive(Clone, Debug)]
enum Nonlinear {
    Zero,
    /// `D_s q`, stored as `q`.
    Conservative(CompiledPoly),
    Direct(CompiledPoly),
}

#[derive(Clone, Debug)]
struct GaugeTerms {
    f: CompiledPoly,
    g: CompiledPoly,
    phi: CompiledPoly,
}

/// A plane curvature flow, optionally carrying the curve velocity field that
/// induces it.
#[derive(Clone, Debug)]
pub struct Flow {
    characteristic: Characteristic,
    field: Option<ArcPreservingField>,
    linear: Vec<(usize, f64)>,
    nonlinear: Nonlinear,
    remainder: CompiledPoly,
    gauge: Option<GaugeTerms>,
}

fn require_flat(p: &DiffPoly) -> Result<(), Error> {
    if p.contains_g() {
        Err(Error::NonFlat(p.clone()))
    } else {
        Ok(())
    }
}

impl Flow {
    /// Curvature-only flow; the gauge stays fixed.
    pub fn new(a: Characteristic) -> Result<Self, SimError> {
        require_flat(a.poly())?;
        let mut linear = Vec::new();
        let mut remainder = DiffPoly::zero();
        for (m, c) in a.poly().terms() {
            let term = DiffPoly::term(c.clone(), m.clone());
            match (m.degree(), m.max_order()) {
                (1, Some(order)) => linear.push((order, c.to_f64().unwrap_or(f64::NAN))),
                _ => remainder = remainder + term,
            }
        }
        let nonlinear = if remainder.is_zero() {
            Nonlinear::Zero
        } else if let Ok(q) = remainder.antiderivative() {
            Nonlinear::Conservative(CompiledPoly::new(&q, 0.0))
        } else {
            Nonlinear::Direct(CompiledPoly::new(&remainder, 0.0))
        };
        Ok(Self {
            characteristic: a,
            field: None,
            linear,
            nonlinear,
            remainder: CompiledPoly::new(&remainder, 0.0),
            gauge: None,
        })
    }

    /// The flow `k_t = v(k)` of a plane arc-length preserving field `v`,
    /// moving the curve with velocity `f T + g N`.
    pub fn from_field(v: &ArcPreservingField) -> Result<Self, SimError> {
        require_flat(v.f())?;
        require_flat(v.g())?;
        let a = phi_hom(v).at_flat();
        let mut flow = Self::new(a)?;
        flow.gauge = Some(GaugeTerms {
            f: CompiledPoly::new(v.f(), 0.0),
            g: CompiledPoly::new(v.g(), 0.0),
            phi: CompiledPoly::new(&phi_of(v.field()), 0.0),
        });
        flow.field = Some(v.clone());
        Ok(flow)
    }

    /// Level `n` of the planar filament hierarchy (`n = 0` is the PF flow,
    /// whose curvature obeys mKdV).
    pub fn hierarchy(level: usize) -> Result<Self, SimError> {
        let fields = pf_hierarchy(level)?;
        Self::from_field(&fields[level])
    }

    pub fn characteristic(&self) -> &Characteristic {
        &self.characteristic
    }

    pub fn field(&self) -> Option<&ArcPreservingField> {
        self.field.as_ref()
    }

    /// True when the nonlinear part is integrated in conservative form.
    pub fn is_conservative(&self) -> bool {
        !matches!(self.nonlinear, Nonlinear::Direct(_))
    }

    fn linear_symbol(&self, grid: &PeriodicGrid, j: usize) -> Complex64 {
        self.linear
            .iter()
            .map(|&(order, c)| grid.derivative_symbol(order, j) * c)
            .sum()
    }

    fn nonlinear_hat(&self, grid: &PeriodicGrid, k: &[f64]) -> Vec<Complex64> {
        match &self.nonlinear {
            Nonlinear::Zero => vec![Complex64::new(0.0, 0.0); k.len()],
            Nonlinear::Conservative(q) => {
                let derivs = grid.derivatives(k, q.max_order());
                let mut hat = grid.forward(&q.eval(&derivs));
                for (j, z) in hat.iter_mut().enumerate() {
                    *z *= grid.derivative_symbol(1, j);
                }
                hat
            }
            Nonlinear::Direct(p) => {
                let derivs = grid.derivatives(k, p.max_order());
                grid.forward(&p.eval(&derivs))
            }
        }
    }

    /// Rates `(dθ0/dt, d origin/dt)` from the field at `s = 0`.
    fn gauge_rate(&self, grid: &PeriodicGrid, k: &[f64], gauge: &Gauge) -> (f64, [f64; 2]) {
        let Some(terms) = &self.gauge else {
            return (0.0, [0.0, 0.0]);
        };
        let top = terms
            .f
            .max_order()
            .max(terms.g.max_order())
            .max(terms.phi.max_order());
        let derivs = grid.derivatives(k, top);
        let (f, g, phi) = (
            terms.f.eval_at(&derivs, 0),
            terms.g.eval_at(&derivs, 0),
            terms.phi.eval_at(&derivs, 0),
        );
        let (sin, cos) = gauge.theta0.sin_cos();
        (phi, [f * cos - g * sin, f * sin + g * cos])
    }
}

/// `a` evaluated on the samples, derivatives taken spectrally.
pub fn flow_rhs(a: &Characteristic, state: &CurvatureState) -> Result<Vec<f64>, SimError> {
    require_flat(a.poly())?;
    Ok(filament_core::diffalg::evaluate(
        a.poly(),
        state.samples(),
        state.spacing(),
        0.0,
    )?)
}

/// A curvature state together with its reconstruction gauge.
#[derive(Clone, Debug)]
pub struct Frame {
    pub step: usize,
    pub state: CurvatureState,
    pub gauge: Gauge,
}

impl Frame {
    pub fn new(state: CurvatureState) -> Self {
        Self {
            step: 0,
            state,
            gauge: Gauge::default(),
        }
    }

    pub fn time(&self) -> f64 {
        self.state.time()
    }
}

/// Integrating-factor RK4 for one flow on one grid with a fixed step.
#[derive(Clone, Debug)]
pub struct Integrator {
    flow: Flow,
    grid: PeriodicGrid,
    dt: f64,
    half: Vec<Complex64>,
    full: Vec<Complex64>,
}

impl Integrator {
    pub fn new(flow: Flow, n: usize, length: f64, dt: f64) -> Result<Self, SimError> {
        if !(dt > 0.0) || !dt.is_finite() {
            return Err(SimError::InvalidConfig(format!(
                "dt must be positive, got {dt}"
            )));
        }
        let grid = PeriodicGrid::new(n, length)?;
        let half: Vec<Complex64> = (0..n)
            .map(|j| (flow.linear_symbol(&grid, j) * (0.5 * dt)).exp())
            .collect();
        let full = half.iter().map(|e| e * e).collect();
        Ok(Self {
            flow,
            grid,
            dt,
            half,
            full,
        })
    }

    pub fn flow(&self) -> &Flow {
        &self.flow
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    /// Largest `dt` for which the explicit part is stable on `k`.
    pub fn stable_dt(&self, k: &[f64]) -> f64 {
        let top = self.flow.remainder.max_order();
        let derivs = self.grid.derivatives(k, top);
        let sup: Vec<f64> = derivs
            .iter()
            .map(|d| d.iter().fold(0.0f64, |m, x| m.max(x.abs())))
            .collect();
        let xi_max = std::f64::consts::PI * self.grid.len() as f64 / self.grid.length();
        let bound = self.flow.remainder.linearization_bound(&sup, xi_max);
        if bound > 0.0 {
            RK4_STABILITY / bound
        } else {
            f64::INFINITY
        }
    }

    pub fn step(&self, frame: &Frame) -> Result<Frame, SimError> {
        let k = frame.state.samples();
        if frame.state.len() != self.grid.len() {
            return Err(SimError::InvalidState(format!(
                "state has {} nodes, integrator expects {}",
                frame.state.len(),
                self.grid.len()
            )));
        }
        let limit = self.stable_dt(k);
        if self.dt > limit {
            return Err(SimError::StepTooLarge { dt: self.dt, limit });
        }
        let dt = self.dt;
        let grid = &self.grid;
        let (e1, e2) = (&self.half, &self.full);
        let v = grid.forward(k);
        let scaled = |x: &[Complex64]| -> Vec<Complex64> { x.iter().map(|z| z * dt).collect() };

        let g0 = frame.gauge;
        let shift = |g: &Gauge, rate: &(f64, [f64; 2]), tau: f64| Gauge {
            theta0: g.theta0 + tau * rate.0,
            origin: [g.origin[0] + tau * rate.1[0], g.origin[1] + tau * rate.1[1]],
        };

        let r1 = self.flow.gauge_rate(grid, k, &g0);
        let a = scaled(&self.flow.nonlinear_hat(grid, k));

        let s2: Vec<Complex64> = (0..v.len()).map(|j| e1[j] * (v[j] + a[j] * 0.5)).collect();
        let k2 = grid.inverse(s2);
        let r2 = self.flow.gauge_rate(grid, &k2, &shift(&g0, &r1, 0.5 * dt));
        let b = scaled(&self.flow.nonlinear_hat(grid, &k2));

        let s3: Vec<Complex64> = (0..v.len()).map(|j| e1[j] * v[j] + b[j] * 0.5).collect();
        let k3 = grid.inverse(s3);
        let r3 = self.flow.gauge_rate(grid, &k3, &shift(&g0, &r2, 0.5 * dt));
        let c = scaled(&self.flow.nonlinear_hat(grid, &k3));

        let s4: Vec<Complex64> = (0..v.len()).map(|j| e2[j] * v[j] + e1[j] * c[j]).collect();
        let k4 = grid.inverse(s4);
        let r4 = self.flow.gauge_rate(grid, &k4, &shift(&g0, &r3, dt));
        let d = scaled(&self.flow.nonlinear_hat(grid, &k4));

        let next: Vec<Complex64> = (0..v.len())
            .map(|j| e2[j] * v[j] + (e2[j] * a[j] + e1[j] * (b[j] + c[j]) * 2.0 + d[j]) / 6.0)
            .collect();
        let samples = grid.inverse(next);
        let step = frame.step + 1;
        let time = frame.time() + dt;
        if samples.iter().any(|x| !x.is_finite()) {
            return Err(SimError::Blowup { step, time });
        }
        let avg = |i: usize| (r1.1[i] + 2.0 * r2.1[i] + 2.0 * r3.1[i] + r4.1[i]) / 6.0;
        let gauge = Gauge {
            theta0: g0.theta0 + dt * (r1.0 + 2.0 * r2.0 + 2.0 * r3.0 + r4.0) / 6.0,
            origin: [g0.origin[0] + dt * avg(0), g0.origin[1] + dt * avg(1)],
        };
        Ok(Frame {
            step,
            state: CurvatureState::at_time(samples, frame.state.length(), time)?,
            gauge,
        })
    }

    /// Advances `steps` steps, keeping the frames for which `keep(step)`
    /// holds (the initial frame is always kept).
    pub fn run(
        &self,
        initial: Frame,
        steps: usize,
        keep: impl Fn(usize) -> bool,
    ) -> Result<Vec<Frame>, SimError> {
        let mut frames = vec![initial.clone()];
        let mut current = initial;
        for _ in 0..steps {
            current = self.step(&current)?;
            if keep(current.step) {
                frames.push(current.clone());
            }
        }
        Ok(frames)
    }
}

/// One step of the curvature-only flow `k_t = a`.
pub fn step(
    state: &CurvatureState,
    a: &Characteristic,
    dt: f64,
) -> Result<CurvatureState, SimError> {
    let integrator = Integrator::new(Flow::new(a.clone())?, state.len(), state.length(), dt)?;
    let frame = Frame {
        step: 0,
        state: state.clone(),
        gauge: Gauge::default(),
    };
    Ok(integrator.step(&frame)?.state)
}
