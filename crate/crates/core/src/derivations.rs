//! Evolutionary derivations `∂_a = Σ_m a^(m) ∂/∂k^(m)`.
//!
//! A derivation commuting with `D_s` is fixed by its value on `k`, the
//! characteristic `a`. The prolongation `a^(m)` is computed on demand up to
//! the highest order present in the argument.

use std::fmt;

use crate::diffalg::{DiffPoly, Functional};

/// The characteristic `a` of the derivation `∂_a`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Characteristic(DiffPoly);

impl Characteristic {
    pub fn new(a: DiffPoly) -> Self {
        Self(a)
    }

    pub fn zero() -> Self {
        Self(DiffPoly::zero())
    }

    pub fn poly(&self) -> &DiffPoly {
        &self.0
    }

    pub fn into_poly(self) -> DiffPoly {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// The characteristic with `G = 0`.
    pub fn at_flat(&self) -> Characteristic {
        Self(self.0.at_flat())
    }

    /// `∂_a p`.
    pub fn apply(&self, p: &DiffPoly) -> DiffPoly {
        apply(self, p)
    }
}

impl From<DiffPoly> for Characteristic {
    fn from(a: DiffPoly) -> Self {
        Self(a)
    }
}

impl fmt::Debug for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Characteristic({})", self.0)
    }
}

impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// `∂_a p = Σ_m D_s^m(a) ∂p/∂k^(m)`.
pub fn apply(a: &Characteristic, p: &DiffPoly) -> DiffPoly {
    let Some(top) = p.max_order() else {
        return DiffPoly::zero();
    };
    let mut out = DiffPoly::zero();
    let mut prolongation = a.poly().clone();
    for order in 0..=top {
        let dp = p.partial(order);
        if !dp.is_zero() {
            out = &out + &(&prolongation * &dp);
        }
        if order < top {
            prolongation = prolongation.total_derivative();
        }
    }
    out
}

/// `[∂_a, ∂_b] = ∂_{∂_a b - ∂_b a}`.
pub fn commutator(a: &Characteristic, b: &Characteristic) -> Characteristic {
    Characteristic(&apply(a, b.poly()) - &apply(b, a.poly()))
}

/// `∂_a ∫ f ds = ∫ a · δf/δk ds`.
pub fn apply_to_functional(a: &Characteristic, f: &Functional) -> Functional {
    Functional::new(a.poly() * &f.variational_derivative())
}

/// Equality in the quotient by total derivatives and constants, decided by
/// the exactness test on the difference of representatives.
pub fn functional_equal(f: &Functional, g: &Functional) -> bool {
    (f.representative() - g.representative())
        .without_constant()
        .is_exact()
}
