//! Numerical companion to `filament-core`: evolves periodic curvature under
//! the planar filament hierarchy, rebuilds the moving plane curve and checks
//! the symbolic predictions (curve velocity, conservation laws).
//!
//! Space is pseudo-spectral on a uniform periodic grid; time is
//! integrating-factor RK4 with a fixed step.

pub mod compiled;
pub mod error;
pub mod flow;
pub mod output;
pub mod run;
pub mod state;
pub mod verify;

pub use error::SimError;
pub use flow::{flow_rhs, step, Flow, Frame, Integrator};
pub use run::{simulate, Preset, RunConfig, RunOutput, Summary};
pub use state::{reconstruct, CurvatureState, Gauge, PlaneCurve};
pub use verify::{
    conserved, conserved_report, verify_pf_velocity, ConservationReport, VelocityReport,
};
