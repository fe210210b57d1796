#![allow(dead_code)]

use filament_sim::{CurvatureState, Flow, Frame, Integrator};

/// `2η sech(η(s - s0))`.
pub fn soliton(s: f64, s0: f64, eta: f64) -> f64 {
    2.0 * eta / (eta * (s - s0)).cosh()
}

/// Shortest periodic offset `s - c` on a circle of length `l`.
pub fn wrap(s: f64, c: f64, l: f64) -> f64 {
    let d = (s - c).rem_euclid(l);
    if d > 0.5 * l {
        d - l
    } else {
        d
    }
}

pub fn rms(a: &[f64], b: &[f64]) -> f64 {
    (a.iter().zip(b).map(|(x, y)| (x - y).powi(2)).sum::<f64>() / a.len() as f64).sqrt()
}

pub fn max_abs(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

/// Runs the planar filament flow and returns all frames spaced `every` steps.
pub fn run_pf(state: CurvatureState, dt: f64, steps: usize, every: usize) -> Vec<Frame> {
    let integrator =
        Integrator::new(Flow::hierarchy(0).unwrap(), state.len(), state.length(), dt).unwrap();
    integrator
        .run(Frame::new(state), steps, |s| s % every == 0)
        .unwrap()
}

/// Final frame of the planar filament flow.
pub fn final_state(state: CurvatureState, dt: f64, steps: usize) -> CurvatureState {
    run_pf(state, dt, steps, steps).pop().unwrap().state
}
