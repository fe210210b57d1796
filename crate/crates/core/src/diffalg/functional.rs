use std::fmt;

use super::poly::DiffPoly;

/// `∫ f ds` modulo total derivatives and constants.
///
/// Equality compares the normal forms, which are canonical representatives
/// of the quotient (see [`DiffPoly::reduce_mod_exact`]).
#[derive(Clone)]
pub struct Functional {
    representative: DiffPoly,
    normal_form: DiffPoly,
}

impl Functional {
    pub fn new(integrand: DiffPoly) -> Self {
        let normal_form = integrand.reduce_mod_exact();
        Self {
            representative: integrand,
            normal_form,
        }
    }

    pub fn zero() -> Self {
        Self::new(DiffPoly::zero())
    }

    pub fn representative(&self) -> &DiffPoly {
        &self.representative
    }

    pub fn normal_form(&self) -> &DiffPoly {
        &self.normal_form
    }

    pub fn is_zero(&self) -> bool {
        self.normal_form.is_zero()
    }

    /// `δf/δk` of the integrand; independent of the representative chosen.
    pub fn variational_derivative(&self) -> DiffPoly {
        self.representative.euler_derivative()
    }
}

impl PartialEq for Functional {
    fn eq(&self, other: &Self) -> bool {
        self.normal_form == other.normal_form
    }
}

impl Eq for Functional {}

impl fmt::Debug for Functional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Functional({})", crate::exprio::print_functional(self))
    }
}

impl From<DiffPoly> for Functional {
    fn from(p: DiffPoly) -> Self {
        Functional::new(p)
    }
}
