//! The differential algebra of curvature polynomials.
//!
//! Polynomials in `k, k', k'', ...` over `Q[G]` with exact rational
//! coefficients, the total derivative `D_s`, the Euler operator, exactness
//! and antidifferentiation, functionals, and numeric evaluation on periodic
//! samples.

mod calculus;
mod evaluate;
mod functional;
mod monomial;
mod poly;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use evaluate::evaluate;
pub use functional::Functional;
pub use monomial::Monomial;
pub use poly::DiffPoly;

/// Exact coefficient type.
pub type Rational = BigRational;

/// `n/d` in lowest terms. Panics on a zero denominator.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}
