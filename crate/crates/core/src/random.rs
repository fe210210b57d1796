//! Seeded generators of random polynomials and fields for property checks.
//!
//! All generators draw from a caller-supplied RNG; [`rng`] builds the
//! reproducible ChaCha stream used throughout the test suites.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::curvegeom::{lift, ArcPreservingField, VariationField};
use crate::diffalg::{rat, DiffPoly, Monomial};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Shape of randomly drawn polynomials.
#[derive(Clone, Copy, Debug)]
pub struct PolyShape {
    pub max_degree: u32,
    pub max_order: usize,
    pub max_terms: usize,
    /// Coefficients are drawn from `-coeff_bound..=coeff_bound` without zero.
    pub coeff_bound: i64,
    /// Probability that a term carries a factor `G`.
    pub g_probability: f64,
}

impl Default for PolyShape {
    fn default() -> Self {
        Self {
            max_degree: 4,
            max_order: 4,
            max_terms: 4,
            coeff_bound: 3,
            g_probability: 0.0,
        }
    }
}

impl PolyShape {
    pub fn small() -> Self {
        Self {
            max_degree: 3,
            max_order: 3,
            max_terms: 3,
            ..Self::default()
        }
    }

    pub fn with_g(mut self, probability: f64) -> Self {
        self.g_probability = probability;
        self
    }
}

fn coefficient<R: Rng>(rng: &mut R, bound: i64) -> i64 {
    loop {
        let c = rng.gen_range(-bound..=bound);
        if c != 0 {
            return c;
        }
    }
}

pub fn poly<R: Rng>(rng: &mut R, shape: &PolyShape) -> DiffPoly {
    let terms = rng.gen_range(1..=shape.max_terms);
    let mut out = DiffPoly::zero();
    for _ in 0..terms {
        let degree = rng.gen_range(0..=shape.max_degree);
        let factors: Vec<(usize, u32)> = (0..degree)
            .map(|_| (rng.gen_range(0..=shape.max_order), 1))
            .collect();
        let g = u32::from(rng.gen_bool(shape.g_probability));
        let c = coefficient(rng, shape.coeff_bound);
        out = out + DiffPoly::term(rat(c, 1), Monomial::from_factors(g, &factors));
    }
    out
}

/// A nonconstant polynomial with zero constant term.
pub fn poly_without_constant<R: Rng>(rng: &mut R, shape: &PolyShape) -> DiffPoly {
    loop {
        let p = poly(rng, shape).without_constant();
        if !p.is_zero() {
            return p;
        }
    }
}

/// `D_s q` for random `q`; always exact.
pub fn exact<R: Rng>(rng: &mut R, shape: &PolyShape) -> DiffPoly {
    poly_without_constant(rng, shape).total_derivative()
}

/// A single monomial with nonzero Euler derivative, hence not exact.
pub fn non_exact<R: Rng>(rng: &mut R, shape: &PolyShape) -> DiffPoly {
    loop {
        let p = poly_without_constant(
            rng,
            &PolyShape {
                max_terms: 1,
                ..*shape
            },
        );
        if !p.euler_derivative().is_zero() {
            return p;
        }
    }
}

pub fn field<R: Rng>(rng: &mut R, shape: &PolyShape) -> VariationField {
    VariationField::new(poly(rng, shape), poly(rng, shape))
}

/// A random arc-length preserving field.
///
/// The normal component is `2k'r + k r'` (so that `k g = D_s(k^2 r)`) plus a
/// random combination of odd derivatives `k^(2j+1)` (for which `k g` is
/// exact as well).
pub fn arc_field<R: Rng>(rng: &mut R, shape: &PolyShape) -> ArcPreservingField {
    let k = DiffPoly::k();
    let r = poly(rng, shape);
    let mut g = DiffPoly::int(2) * DiffPoly::kd(1) * &r + &k * r.total_derivative();
    for j in 0..=(shape.max_order.saturating_sub(1) / 2) {
        if rng.gen_bool(0.5) {
            g = g + DiffPoly::int(coefficient(rng, shape.coeff_bound)) * DiffPoly::kd(2 * j + 1);
        }
    }
    lift(&g).expect("k·g is exact by construction")
}

/// `δL/δk` for a random Lagrangian `L`; for these `k (δL/δk)'` is exact,
/// so the operator `𝒟` is defined on them.
pub fn variational<R: Rng>(rng: &mut R, shape: &PolyShape) -> DiffPoly {
    poly(rng, shape).euler_derivative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible() {
        let shape = PolyShape::default();
        let a = poly(&mut rng(7), &shape);
        let b = poly(&mut rng(7), &shape);
        assert_eq!(a, b);
    }

    #[test]
    fn shapes_respected() {
        let shape = PolyShape::default();
        let mut r = rng(1);
        for _ in 0..100 {
            let p = poly(&mut r, &shape);
            assert!(p.degree() <= shape.max_degree);
            assert!(p.max_order().unwrap_or(0) <= shape.max_order);
            assert!(!p.contains_g());
        }
    }

    #[test]
    fn generated_arc_fields_preserve_arc_length() {
        let mut r = rng(3);
        for _ in 0..20 {
            let v = arc_field(&mut r, &PolyShape::small().with_g(0.3));
            assert!(crate::curvegeom::rho_of(v.field()).is_zero());
        }
    }
}
