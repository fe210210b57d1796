mod common;

use std::f64::consts::PI;

use common::*;
use filament_core::exprio::parse;
use filament_core::hamiltonian::mkdv;
use filament_core::Characteristic;
use filament_sim::{flow_rhs, step, CurvatureState, Flow, Frame, Integrator, Preset, SimError};

#[test]
fn rhs_of_constant_state_vanishes() {
    let state = CurvatureState::from_fn(32, 3.0, |_| 1.7).unwrap();
    for v in flow_rhs(&mkdv(), &state).unwrap() {
        assert!(v.abs() < 1e-12);
    }
}

#[test]
fn rhs_of_translation_is_spectral_derivative() {
    let l = 5.0;
    let state = CurvatureState::from_fn(64, l, |s| (2.0 * PI * s / l).sin()).unwrap();
    let a = Characteristic::new(parse("k'").unwrap());
    let rhs = flow_rhs(&a, &state).unwrap();
    for (v, s) in rhs.iter().zip(state.nodes()) {
        assert!((v - 2.0 * PI / l * (2.0 * PI * s / l).cos()).abs() < 1e-8);
    }
}

#[test]
fn rhs_on_soliton_is_eta_squared_times_slope() {
    // k = 2η sech(η x): k''' + 3/2 k² k' = η² k', so k(s, t) = k(s + η² t).
    // The tolerance covers the periodization of the sech tails at s = 0.
    for (eta, tol) in [(1.0, 1e-5), (1.5, 1e-8)] {
        let (l, s0) = (40.0, 20.0);
        let state = CurvatureState::from_fn(512, l, |s| soliton(s, s0, eta)).unwrap();
        let rhs = flow_rhs(&mkdv(), &state).unwrap();
        for (v, s) in rhs.iter().zip(state.nodes()) {
            let x = eta * (s - s0);
            let slope = -2.0 * eta * eta * x.tanh() / x.cosh();
            assert!(
                (v - eta * eta * slope).abs() < tol,
                "{v} vs {}",
                eta * eta * slope
            );
        }
    }
}

#[test]
fn rhs_rejects_symbolic_g() {
    let state = CurvatureState::from_fn(16, 1.0, |_| 1.0).unwrap();
    let a = Characteristic::new(parse("k''' + G k'").unwrap());
    assert!(matches!(
        flow_rhs(&a, &state),
        Err(SimError::Core(filament_core::Error::NonFlat(_)))
    ));
}

#[test]
fn constant_state_is_a_fixed_point() {
    let state = CurvatureState::from_fn(16, 2.0 * PI, |_| 0.8).unwrap();
    for level in 0..3 {
        let flow = Flow::hierarchy(level).unwrap();
        let a = flow.characteristic().clone();
        let next = step(&state, &a, 1e-5).unwrap();
        assert!(max_abs(next.samples(), state.samples()) < 1e-14);
    }
}

#[test]
fn soliton_translates_left() {
    let (n, l, s0) = (512, 40.0, 20.0);
    let state = CurvatureState::from_fn(n, l, |s| soliton(s, s0, 1.0)).unwrap();
    let end = final_state(state, 1e-4, 1000);
    assert!((end.time() - 0.1).abs() < 1e-12);
    let exact: Vec<f64> = end
        .nodes()
        .iter()
        .map(|&s| soliton(s0 + wrap(s, s0 - 0.1, l), s0, 1.0))
        .collect();
    let err = max_abs(end.samples(), &exact);
    assert!(err <= 1e-4, "shape error {err}");
}

/// Planar filament flow of a random smooth closed curve up to `t = 0.2`.
/// The steps used below are small enough that `|ξ|³ dt` is moderate for
/// every mode carrying energy, where IF-RK4 is in its asymptotic regime.
fn smooth_run(dt: f64) -> Vec<f64> {
    let state = Preset::RandomSmooth.initial_state(32, 2.0 * PI, 3).unwrap();
    let steps = (0.2 / dt).round() as usize;
    final_state(state, dt, steps).samples().to_vec()
}

#[test]
fn fourth_order_in_time() {
    let reference = smooth_run(0.2 / 5120.0);
    let coarse = smooth_run(0.2 / 320.0);
    let fine = smooth_run(0.2 / 640.0);
    let ratio = rms(&coarse, &reference) / rms(&fine, &reference);
    assert!((12.0..=20.0).contains(&ratio), "error ratio {ratio}");
}

#[test]
fn richardson_order_estimate() {
    let a = smooth_run(0.2 / 320.0);
    let b = smooth_run(0.2 / 640.0);
    let c = smooth_run(0.2 / 1280.0);
    let order = (rms(&a, &b) / rms(&b, &c)).log2();
    assert!((3.5..=4.5).contains(&order), "observed order {order}");
}

#[test]
fn oversized_step_is_rejected() {
    let state = CurvatureState::from_fn(512, 40.0, |s| soliton(s, 20.0, 1.0)).unwrap();
    let integrator = Integrator::new(Flow::hierarchy(0).unwrap(), 512, 40.0, 0.1).unwrap();
    assert!(matches!(
        integrator.step(&Frame::new(state)),
        Err(SimError::StepTooLarge { .. })
    ));
}

#[test]
fn blowup_is_reported() {
    // Backward heat flow at a step the linear factor turns into overflow.
    let a = Characteristic::new(parse("-k'' + 1/1000 k^2").unwrap());
    let state = CurvatureState::from_fn(64, 1.0, |s| (2.0 * PI * s).sin()).unwrap();
    let integrator = Integrator::new(Flow::new(a).unwrap(), 64, 1.0, 1.0).unwrap();
    let result = integrator.run(Frame::new(state), 50, |_| false);
    assert!(matches!(result, Err(SimError::Blowup { .. })), "{result:?}");
}

#[test]
fn higher_flow_preserves_total_turning() {
    let state = Preset::RandomSmooth.initial_state(32, 2.0 * PI, 5).unwrap();
    let before = state.total_turning();
    let integrator = Integrator::new(Flow::hierarchy(1).unwrap(), 32, 2.0 * PI, 2e-5).unwrap();
    let frames = integrator
        .run(Frame::new(state), 100, |s| s == 100)
        .unwrap();
    let after = frames.last().unwrap().state.total_turning();
    assert!((after - before).abs() <= 1e-10);
    assert!(Flow::hierarchy(1).unwrap().is_conservative());
}
