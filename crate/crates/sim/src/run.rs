//! Named experiments and the end-to-end simulation driver.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use filament_core::exprio::{print, print_field};
use filament_core::random;
use rand::Rng;
use serde::Serialize;

use crate::error::SimError;
use crate::flow::{Flow, Frame, Integrator};
use crate::state::{reconstruct, CurvatureState};
use crate::verify::{conserved_report, verify_pf_velocity, ConservationReport, VelocityReport};

/// Largest change of curvature still reported as stationary.
pub const STATIONARY_TOLERANCE: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Preset {
    /// `k = 2η sech(η(s - L/2))` with `η = 1`.
    Soliton,
    /// Constant curvature `2π/L`.
    Circle,
    /// Closed curve with a few random low Fourier modes on top of `2π/L`.
    RandomSmooth,
}

impl Preset {
    pub const ALL: [Preset; 3] = [Preset::Soliton, Preset::Circle, Preset::RandomSmooth];

    pub fn name(self) -> &'static str {
        match self {
            Preset::Soliton => "soliton",
            Preset::Circle => "circle",
            Preset::RandomSmooth => "random-smooth",
        }
    }

    pub fn config(self) -> RunConfig {
        let base = RunConfig {
            preset: self,
            n: 512,
            length: 40.0,
            dt: 1e-4,
            t_final: 0.5,
            seed: 0,
            level: 0,
            frames: 10,
        };
        match self {
            Preset::Soliton => base,
            Preset::Circle => RunConfig {
                n: 64,
                length: 2.0 * PI,
                dt: 1e-3,
                t_final: 1.0,
                ..base
            },
            Preset::RandomSmooth => RunConfig {
                n: 128,
                length: 2.0 * PI,
                dt: 1e-4,
                t_final: 0.2,
                ..base
            },
        }
    }

    pub fn initial_state(
        self,
        n: usize,
        length: f64,
        seed: u64,
    ) -> Result<CurvatureState, SimError> {
        match self {
            Preset::Soliton => {
                let centre = 0.5 * length;
                CurvatureState::from_fn(n, length, |s| 2.0 / (s - centre).cosh())
            }
            Preset::Circle => CurvatureState::from_fn(n, length, |_| 2.0 * PI / length),
            Preset::RandomSmooth => {
                let mut rng = random::rng(seed);
                let base = 2.0 * PI / length;
                let modes: Vec<(f64, f64, f64)> = (1..=4)
                    .map(|m| {
                        let amp = 0.3 * base / f64::from(m);
                        (
                            f64::from(m),
                            rng.gen_range(-amp..=amp),
                            rng.gen_range(-amp..=amp),
                        )
                    })
                    .collect();
                CurvatureState::from_fn(n, length, |s| {
                    let x = 2.0 * PI * s / length;
                    base + modes
                        .iter()
                        .map(|(m, a, b)| a * (m * x).cos() + b * (m * x).sin())
                        .sum::<f64>()
                })
            }
        }
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Preset {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Preset::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| {
                format!("unknown preset '{s}' (expected soliton, circle or random-smooth)")
            })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub preset: Preset,
    #[serde(rename = "N")]
    pub n: usize,
    #[serde(rename = "L")]
    pub length: f64,
    pub dt: f64,
    #[serde(rename = "T")]
    pub t_final: f64,
    pub seed: u64,
    /// Hierarchy level of the flow (`0` is the planar filament flow).
    pub level: usize,
    /// Number of recorded intervals.
    pub frames: usize,
}

impl RunConfig {
    pub fn steps(&self) -> Result<usize, SimError> {
        if !(self.dt > 0.0) || !(self.t_final >= 0.0) || !self.t_final.is_finite() {
            return Err(SimError::InvalidConfig(
                "dt must be positive and T non-negative".into(),
            ));
        }
        let steps = (self.t_final / self.dt).round();
        if (steps * self.dt - self.t_final).abs() > 1e-9 * self.t_final.max(self.dt) {
            return Err(SimError::InvalidConfig(format!(
                "T = {} is not a whole number of steps dt = {}",
                self.t_final, self.dt
            )));
        }
        Ok(steps as usize)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub steps: usize,
    #[serde(skip)]
    pub characteristic: String,
    #[serde(skip)]
    pub field: String,
    pub conservation: ConservationReport,
    pub velocity: Option<VelocityReport>,
    /// `max_j |k(s_j, T) - k(s_j, 0)|`.
    pub curvature_change: f64,
    pub stationary: bool,
    /// Largest `| |γ'| - 1 |` over the recorded curves.
    pub speed_deviation: f64,
}

#[derive(Clone, Debug)]
pub struct RunOutput {
    pub config: RunConfig,
    pub frames: Vec<Frame>,
    pub summary: Summary,
}

pub fn simulate(config: &RunConfig) -> Result<RunOutput, SimError> {
    let steps = config.steps()?;
    let flow = Flow::hierarchy(config.level)?;
    let field = flow
        .field()
        .expect("hierarchy flows carry their field")
        .clone();
    let characteristic = print(flow.characteristic().poly());
    let integrator = Integrator::new(flow, config.n, config.length, config.dt)?;
    let initial = Frame::new(
        config
            .preset
            .initial_state(config.n, config.length, config.seed)?,
    );

    let stride = (steps / config.frames.max(1)).max(1);
    // central differences over one step keep the truncation error far below the gauge floor
    let probe = 1;
    let frames = integrator.run(initial, steps, |s| {
        s % stride == 0 || s == steps || (s <= 2 * probe && s % probe == 0)
    })?;

    let velocity = if steps >= 2 {
        let triple: Vec<Frame> = frames
            .iter()
            .filter(|f| f.step <= 2 * probe && f.step % probe == 0)
            .take(3)
            .cloned()
            .collect();
        Some(verify_pf_velocity(&triple, &field)?)
    } else {
        None
    };
    let recorded: Vec<Frame> = frames
        .into_iter()
        .filter(|f| f.step % stride == 0 || f.step == steps)
        .collect();
    let conservation = conserved_report(recorded.iter().map(|f| &f.state));
    let first = recorded.first().expect("initial frame").state.samples();
    let last = recorded.last().expect("initial frame").state.samples();
    let curvature_change = first
        .iter()
        .zip(last)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    let speed_deviation = recorded
        .iter()
        .map(|f| reconstruct(&f.state, f.gauge).speed_deviation())
        .fold(0.0, f64::max);
    Ok(RunOutput {
        config: config.clone(),
        frames: recorded,
        summary: Summary {
            steps,
            characteristic,
            field: print_field(field.field()),
            conservation,
            velocity,
            curvature_change,
            stationary: curvature_change <= STATIONARY_TOLERANCE,
            speed_deviation,
        },
    })
}
