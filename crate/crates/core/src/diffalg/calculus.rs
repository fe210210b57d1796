//! Total derivative, variational derivative and formal antidifferentiation.
//!
//! `D_s` acts by `k^(m) -> k^(m+1)` and Leibniz; `G` is a constant. The
//! kernel of the Euler operator is `Im(D_s) + constants`, which gives the
//! exactness test. Antiderivatives are computed by peeling off the
//! highest-order variable, which must appear linearly in an exact element.

use num_bigint::BigInt;

use super::poly::DiffPoly;
use super::Rational;
use crate::error::Error;

impl DiffPoly {
    /// `D_s p`.
    pub fn total_derivative(&self) -> DiffPoly {
        let mut out = DiffPoly::zero();
        for (m, c) in self.terms() {
            for (order, e) in m.factors() {
                let mono = m.with_bump(order, -1).with_bump(order + 1, 1);
                out.add_term(mono, c * Rational::from_integer(BigInt::from(e)));
            }
        }
        out
    }

    /// `D_s^n p`.
    pub fn total_derivative_n(&self, n: usize) -> DiffPoly {
        let mut p = self.clone();
        for _ in 0..n {
            p = p.total_derivative();
        }
        p
    }

    /// Partial derivative with respect to the variable `k^(order)`.
    pub fn partial(&self, order: usize) -> DiffPoly {
        let mut out = DiffPoly::zero();
        for (m, c) in self.terms() {
            let e = m.exponent(order);
            if e > 0 {
                out.add_term(
                    m.with_bump(order, -1),
                    c * Rational::from_integer(BigInt::from(e)),
                );
            }
        }
        out
    }

    /// Variational derivative `Σ_m (-D_s)^m ∂p/∂k^(m)`.
    pub fn euler_derivative(&self) -> DiffPoly {
        let Some(top) = self.max_order() else {
            return DiffPoly::zero();
        };
        // Horner form: P_0 - D(P_1 - D(P_2 - ...)).
        let mut acc = self.partial(top);
        for order in (0..top).rev() {
            acc = &self.partial(order) - &acc.total_derivative();
        }
        acc
    }

    /// Membership in `Im(D_s)`: zero constant term and zero Euler derivative.
    pub fn is_exact(&self) -> bool {
        self.constant_part().is_zero() && self.euler_derivative().is_zero()
    }

    /// The unique `q` with `D_s q = self` and zero constant term.
    pub fn antiderivative(&self) -> Result<DiffPoly, Error> {
        if !self.constant_part().is_zero() {
            return Err(Error::not_exact(
                "polynomial with a constant term",
                self.constant_part(),
            ));
        }
        let witness = self.euler_derivative();
        if !witness.is_zero() {
            return Err(Error::not_exact("polynomial", witness));
        }
        peel(self).ok_or_else(|| Error::not_exact("polynomial", self.euler_derivative()))
    }

    /// Representative of `self` modulo `Im(D_s)` and constants in which no
    /// monomial is linear in its own highest derivative.
    ///
    /// Two polynomials differ by an exact element plus a constant iff their
    /// reductions coincide.
    pub fn reduce_mod_exact(&self) -> DiffPoly {
        let mut rem = self.without_constant();
        loop {
            let top = rem
                .terms()
                .filter_map(|(m, _)| {
                    let top = m.max_order()?;
                    (top >= 1 && m.exponent(top) == 1).then_some(top)
                })
                .max();
            let Some(n) = top else {
                return rem;
            };
            let linear = DiffPoly::from_terms(
                rem.terms()
                    .filter(|(m, _)| m.max_order() == Some(n) && m.exponent(n) == 1)
                    .map(|(m, c)| (c.clone(), m.with_bump(n, -1))),
            );
            let q0 = integrate_in(&linear, n - 1);
            rem = &rem - &q0.total_derivative();
        }
    }
}

/// Antiderivative of `coeff` with respect to the single variable `k^(order)`.
fn integrate_in(p: &DiffPoly, order: usize) -> DiffPoly {
    DiffPoly::from_terms(p.terms().map(|(m, c)| {
        let e = m.exponent(order) + 1;
        (
            c / Rational::from_integer(BigInt::from(e)),
            m.with_bump(order, 1),
        )
    }))
}

/// Antidifferentiation by repeated removal of the top-order variable.
/// Returns `None` as soon as the input is seen not to be exact.
fn peel(p: &DiffPoly) -> Option<DiffPoly> {
    let mut rem = p.clone();
    let mut acc = DiffPoly::zero();
    while !rem.is_zero() {
        let n = rem.max_order()?;
        if n == 0 || rem.degree_in(n) > 1 {
            return None;
        }
        let coeff = DiffPoly::from_terms(
            rem.terms()
                .filter(|(m, _)| m.exponent(n) == 1)
                .map(|(m, c)| (c.clone(), m.with_bump(n, -1))),
        );
        let q0 = integrate_in(&coeff, n - 1);
        rem = &rem - &q0.total_derivative();
        acc = &acc + &q0;
    }
    debug_assert!(acc.constant_part().is_zero());
    Some(acc)
}
