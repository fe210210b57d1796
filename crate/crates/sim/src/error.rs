use thiserror::Error;

#[derive(Debug, Error)]
pub enum SimError {
    #[error(transparent)]
    Core(#[from] filament_core::Error),
    #[error("invalid curvature state: {0}")]
    InvalidState(String),
    #[error("invalid run parameters: {0}")]
    InvalidConfig(String),
    #[error("non-finite curvature after step {step} (t = {time})")]
    Blowup { step: usize, time: f64 },
    #[error(
        "time step {dt} exceeds the explicit stability limit {limit:.3e} of the nonlinear part"
    )]
    StepTooLarge { dt: f64, limit: f64 },
    #[error(
        "velocity residual (RMS {rms:.3e}) is {:.1}% explained by a rigid motion; the reconstruction gauge is inconsistent",
        100.0 * rigid_fraction
    )]
    GaugeDrift { rms: f64, rigid_fraction: f64 },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
