//! Floating-point form of a curvature polynomial for fast pointwise evaluation.

use filament_core::DiffPoly;
use num_traits::ToPrimitive;

#[derive(Clone, Debug)]
struct Term {
    coeff: f64,
    factors: Vec<(usize, i32)>,
}

/// A [`DiffPoly`] with coefficients rounded to `f64` and `G` substituted.
#[derive(Clone, Debug)]
pub struct CompiledPoly {
    terms: Vec<Term>,
    max_order: usize,
}

impl CompiledPoly {
    pub fn new(p: &DiffPoly, g_value: f64) -> Self {
        let terms = p
            .terms()
            .map(|(m, c)| Term {
                coeff: c.to_f64().unwrap_or(f64::NAN) * g_value.powi(m.g() as i32),
                factors: m.factors().map(|(o, e)| (o, e as i32)).collect(),
            })
            .collect();
        Self {
            terms,
            max_order: p.max_order().unwrap_or(0),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest derivative order that must be supplied to the evaluators.
    pub fn max_order(&self) -> usize {
        self.max_order
    }

    /// Value at node `j`, with `derivs[m][j] = k^(m)(s_j)`.
    pub fn eval_at(&self, derivs: &[Vec<f64>], j: usize) -> f64 {
        self.terms
            .iter()
            .map(|t| {
                t.factors
                    .iter()
                    .fold(t.coeff, |acc, &(o, e)| acc * derivs[o][j].powi(e))
            })
            .sum()
    }

    pub fn eval(&self, derivs: &[Vec<f64>]) -> Vec<f64> {
        let n = derivs.first().map_or(0, Vec::len);
        (0..n).map(|j| self.eval_at(derivs, j)).collect()
    }

    /// Upper bound on the spectral radius of the linearization, given the
    /// sup norms of `k^(m)` and the largest resolved wavenumber.
    pub fn linearization_bound(&self, sup: &[f64], xi_max: f64) -> f64 {
        let mut bound = 0.0;
        for t in &self.terms {
            for (i, &(o, e)) in t.factors.iter().enumerate() {
                let mut d = t.coeff.abs() * f64::from(e) * sup[o].powi(e - 1);
                for (i2, &(o2, e2)) in t.factors.iter().enumerate() {
                    if i2 != i {
                        d *= sup[o2].powi(e2);
                    }
                }
                bound += d * xi_max.powi(o as i32);
            }
        }
        bound
    }
}
