//! Fourier differentiation on a uniform periodic grid.

use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use rustfft::num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use crate::diffalg::DiffPoly;
use crate::error::Error;

/// Uniform grid of `n` nodes on a periodic interval of length `length`,
/// with cached forward and inverse FFT plans.
#[derive(Clone)]
pub struct PeriodicGrid {
    n: usize,
    length: f64,
    forward: Arc<dyn Fft<f64>>,
    inverse: Arc<dyn Fft<f64>>,
}

impl fmt::Debug for PeriodicGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PeriodicGrid")
            .field("n", &self.n)
            .field("length", &self.length)
            .finish()
    }
}

impl PeriodicGrid {
    pub fn new(n: usize, length: f64) -> Result<Self, Error> {
        if n < 4 || !(length > 0.0) || !length.is_finite() {
            return Err(Error::DegenerateGrid(format!("n = {n}, length = {length}")));
        }
        let mut planner = FftPlanner::new();
        Ok(Self {
            n,
            length,
            forward: planner.plan_fft_forward(n),
            inverse: planner.plan_fft_inverse(n),
        })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    pub fn spacing(&self) -> f64 {
        self.length / self.n as f64
    }

    /// Node positions `s_j = j h`.
    pub fn nodes(&self) -> Vec<f64> {
        let h = self.spacing();
        (0..self.n).map(|j| j as f64 * h).collect()
    }

    /// Angular wavenumber of FFT bin `j`. The Nyquist bin of an even grid
    /// reports `+π/h`; callers decide how odd derivatives treat it.
    pub fn wavenumber(&self, j: usize) -> f64 {
        let base = 2.0 * PI / self.length;
        let signed = if j <= self.n / 2 {
            j as f64
        } else {
            j as f64 - self.n as f64
        };
        base * signed
    }

    pub fn is_nyquist(&self, j: usize) -> bool {
        self.n % 2 == 0 && j == self.n / 2
    }

    /// Fourier symbol of `d^order/ds^order` at bin `j`: `(i ξ_j)^order`,
    /// zeroed at the Nyquist bin for odd orders so real data stays real.
    pub fn derivative_symbol(&self, order: usize, j: usize) -> Complex64 {
        if order == 0 {
            return Complex64::new(1.0, 0.0);
        }
        if order % 2 == 1 && self.is_nyquist(j) {
            return Complex64::new(0.0, 0.0);
        }
        Complex64::new(0.0, self.wavenumber(j)).powu(order as u32)
    }

    pub fn forward(&self, samples: &[f64]) -> Vec<Complex64> {
        assert_eq!(samples.len(), self.n, "sample count does not match grid");
        let mut buf: Vec<Complex64> = samples.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        self.forward.process(&mut buf);
        buf
    }

    /// Inverse transform, normalized, returning the real part.
    pub fn inverse(&self, mut spectrum: Vec<Complex64>) -> Vec<f64> {
        self.inverse.process(&mut spectrum);
        let scale = 1.0 / self.n as f64;
        spectrum.into_iter().map(|z| z.re * scale).collect()
    }

    pub fn derivative(&self, samples: &[f64], order: usize) -> Vec<f64> {
        if order == 0 {
            return samples.to_vec();
        }
        let hat = self.forward(samples);
        self.apply_symbol(&hat, order)
    }

    /// `[k, k', ..., k^(max_order)]` from a single forward transform.
    pub fn derivatives(&self, samples: &[f64], max_order: usize) -> Vec<Vec<f64>> {
        let hat = self.forward(samples);
        let mut out = Vec::with_capacity(max_order + 1);
        out.push(samples.to_vec());
        for order in 1..=max_order {
            out.push(self.apply_symbol(&hat, order));
        }
        out
    }

    pub(crate) fn apply_symbol(&self, hat: &[Complex64], order: usize) -> Vec<f64> {
        let spec = hat
            .iter()
            .enumerate()
            .map(|(j, z)| z * self.derivative_symbol(order, j))
            .collect();
        self.inverse(spec)
    }

    /// Pointwise evaluation of `p` with derivatives taken spectrally.
    pub fn evaluate(&self, p: &DiffPoly, samples: &[f64], g_value: f64) -> Vec<f64> {
        let top = p.max_order().unwrap_or(0);
        let derivs = self.derivatives(samples, top);
        let mut point = vec![0.0; top + 1];
        (0..self.n)
            .map(|j| {
                for (m, d) in derivs.iter().enumerate() {
                    point[m] = d[j];
                }
                p.eval_at(g_value, &point)
            })
            .collect()
    }

    /// Trapezoidal (spectrally accurate for periodic data) integral over one period.
    pub fn integrate(&self, samples: &[f64]) -> f64 {
        samples.iter().sum::<f64>() * self.spacing()
    }
}
