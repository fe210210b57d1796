use super::poly::DiffPoly;
use crate::error::Error;
use crate::spectral::PeriodicGrid;

/// Pointwise value of `p` on periodic curvature samples with spacing `h`.
///
/// Each `k^(m)` is obtained by spectral differentiation of `samples`; `G` is
/// replaced by `g_value`.
pub fn evaluate(p: &DiffPoly, samples: &[f64], h: f64, g_value: f64) -> Result<Vec<f64>, Error> {
    if samples.len() < 4 || !(h > 0.0) || !h.is_finite() {
        return Err(Error::DegenerateGrid(format!(
            "{} samples with spacing {h}",
            samples.len()
        )));
    }
    let grid = PeriodicGrid::new(samples.len(), h * samples.len() as f64)?;
    Ok(grid.evaluate(p, samples, g_value))
}
