//! Exact symbolic calculus for curvature flows of plane and space-form curves.
//!
//! * [`diffalg`]: polynomials in `k, k', k'', ...` over `Q[G]`, the total
//!   derivative, the Euler operator, exactness and antiderivatives.
//! * [`exprio`]: ASCII parser and canonical printer.
//! * [`derivations`]: evolutionary derivations `∂_a` and their commutator.
//! * [`hamiltonian`]: the mKdV bi-Hamiltonian pair, recursion operator and
//!   commuting hierarchy.
//! * [`curvegeom`]: variation fields along curves, their Lie bracket, the
//!   homomorphism into derivations and the planar filament hierarchy.
//! * [`spectral`]: periodic Fourier differentiation used to evaluate
//!   polynomials on sampled curvature.

pub mod curvegeom;
pub mod derivations;
pub mod diffalg;
pub mod error;
pub mod exprio;
pub mod hamiltonian;
pub mod random;
pub mod spectral;

pub use curvegeom::{ArcPreservingField, VariationField};
pub use derivations::Characteristic;
pub use diffalg::{DiffPoly, Functional, Monomial, Rational};
pub use error::Error;
