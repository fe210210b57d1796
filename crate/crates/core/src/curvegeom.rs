//! Variation fields `v = f T + g N` along an arc-length parametrized curve
//! with curvature `k` in the space form of curvature `G`.
//!
//! Components are curvature polynomials, so every construction here is
//! uniform in the curve. With the Frenet equations `∇_T T = kN`,
//! `∇_T N = -kT`:
//!
//! * `φ_v = g' + k f` and `ρ_v = f' - k g` are the normal and tangential
//!   components of `∇_T v`;
//! * `v(k) = φ_v' - k ρ_v + G g` and `v(p') = v(p)' + ρ_v p'` define the
//!   derivation of `v` on polynomials;
//! * `[v, w] = D_v w - D_w v` is the Lie bracket, closed on arc-length
//!   preserving fields (`ρ = 0`), and `Φ(v) = ∂_{v(k)}` maps those
//!   homomorphically into derivation fields.
//!
//! The Hamiltonian operator `π̄`, the recursion operator `ℛ̄` and the planar
//! filament hierarchy are only defined for plane curves; they reject inputs
//! containing `G`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::derivations::Characteristic;
use crate::diffalg::{DiffPoly, Functional, Rational};
use crate::error::Error;
use crate::hamiltonian::{d_dinv, DEFAULT_DEPTH_LIMIT};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct VariationField {
    f: DiffPoly,
    g: DiffPoly,
}

impl VariationField {
    pub fn new(f: DiffPoly, g: DiffPoly) -> Self {
        Self { f, g }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// The unit tangent `T`.
    pub fn tangent() -> Self {
        Self::new(DiffPoly::one(), DiffPoly::zero())
    }

    /// The unit normal `N`.
    pub fn normal() -> Self {
        Self::new(DiffPoly::zero(), DiffPoly::one())
    }

    /// Tangential component.
    pub fn f(&self) -> &DiffPoly {
        &self.f
    }

    /// Normal component.
    pub fn g(&self) -> &DiffPoly {
        &self.g
    }

    pub fn is_zero(&self) -> bool {
        self.f.is_zero() && self.g.is_zero()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.f.scale(c), self.g.scale(c))
    }

    /// Multiplies both components by a polynomial.
    pub fn mul_poly(&self, p: &DiffPoly) -> Self {
        Self::new(&self.f * p, &self.g * p)
    }

    /// `<v, w> = f_v f_w + g_v g_w`.
    pub fn inner(&self, other: &VariationField) -> DiffPoly {
        &self.f * &other.f + &self.g * &other.g
    }

    pub fn contains_g(&self) -> bool {
        self.f.contains_g() || self.g.contains_g()
    }
}

impl fmt::Debug for VariationField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VariationField({})", crate::exprio::print_field(self))
    }
}

impl fmt::Display for VariationField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::exprio::print_field(self))
    }
}

impl Add for &VariationField {
    type Output = VariationField;
    fn add(self, rhs: &VariationField) -> VariationField {
        VariationField::new(&self.f + &rhs.f, &self.g + &rhs.g)
    }
}

impl Sub for &VariationField {
    type Output = VariationField;
    fn sub(self, rhs: &VariationField) -> VariationField {
        VariationField::new(&self.f - &rhs.f, &self.g - &rhs.g)
    }
}

impl Neg for &VariationField {
    type Output = VariationField;
    fn neg(self) -> VariationField {
        VariationField::new(-&self.f, -&self.g)
    }
}

/// A field with `f = D_s^{-1}(k g)` (zero integration constant), i.e. an
/// infinitesimal deformation preserving arc length.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ArcPreservingField(VariationField);

impl ArcPreservingField {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Accepts `v` if `ρ_v = 0` and `f_v` has no constant term.
    pub fn from_field(v: VariationField) -> Option<Self> {
        (rho_of(&v).is_zero() && v.f.constant_part().is_zero()).then_some(Self(v))
    }

    pub fn field(&self) -> &VariationField {
        &self.0
    }

    pub fn into_field(self) -> VariationField {
        self.0
    }

    pub fn f(&self) -> &DiffPoly {
        &self.0.f
    }

    pub fn g(&self) -> &DiffPoly {
        &self.0.g
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self(self.0.scale(c))
    }
}

impl fmt::Debug for ArcPreservingField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ArcPreservingField({})",
            crate::exprio::print_field(&self.0)
        )
    }
}

impl fmt::Display for ArcPreservingField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl AsRef<VariationField> for ArcPreservingField {
    fn as_ref(&self) -> &VariationField {
        &self.0
    }
}

/// Normal component of `∇_T v`: `g' + k f`.
pub fn phi_of(v: &VariationField) -> DiffPoly {
    v.g.total_derivative() + DiffPoly::k() * &v.f
}

/// Tangential component of `∇_T v`: `f' - k g`.
pub fn rho_of(v: &VariationField) -> DiffPoly {
    v.f.total_derivative() - DiffPoly::k() * &v.g
}

/// `v(k) = φ_v' - k ρ_v + G g_v`.
pub fn v_of_k(v: &VariationField) -> DiffPoly {
    phi_of(v).total_derivative() - DiffPoly::k() * rho_of(v) + DiffPoly::big_g() * &v.g
}

/// The derivation of a field on polynomials, with the images of
/// `k, k', k'', ...` computed once and reused.
pub struct FieldDerivation {
    rho: DiffPoly,
    images: Vec<DiffPoly>,
}

impl FieldDerivation {
    pub fn new(v: &VariationField) -> Self {
        Self {
            rho: rho_of(v),
            images: vec![v_of_k(v)],
        }
    }

    /// Image of `k^(order)`: `v(k^(m+1)) = v(k^(m))' - ρ_v k^(m+1)`.
    pub fn image(&mut self, order: usize) -> &DiffPoly {
        while self.images.len() <= order {
            let m = self.images.len() - 1;
            let next = self.images[m].total_derivative() - &self.rho * DiffPoly::kd(m + 1);
            self.images.push(next);
        }
        &self.images[order]
    }

    pub fn apply(&mut self, p: &DiffPoly) -> DiffPoly {
        let Some(top) = p.max_order() else {
            return DiffPoly::zero();
        };
        let mut out = DiffPoly::zero();
        for order in 0..=top {
            let dp = p.partial(order);
            if !dp.is_zero() {
                out = out + self.image(order) * dp;
            }
        }
        out
    }
}

/// `v(p)`.
pub fn apply_field(v: &VariationField, p: &DiffPoly) -> DiffPoly {
    FieldDerivation::new(v).apply(p)
}

/// `D_v w = (v(f_w) - g_w φ_v) T + (v(g_w) + f_w φ_v) N`.
pub fn covariant_d(v: &VariationField, w: &VariationField) -> VariationField {
    let mut dv = FieldDerivation::new(v);
    let phi = phi_of(v);
    VariationField::new(dv.apply(&w.f) - &w.g * &phi, dv.apply(&w.g) + &w.f * &phi)
}

/// `[v, w] = D_v w - D_w v`, in the expanded component form
/// `f = v(f_w) - w(f_v) + g_v φ_w - g_w φ_v`,
/// `g = v(g_w) - w(g_v) + f_w φ_v - f_v φ_w`.
pub fn bracket(v: &VariationField, w: &VariationField) -> VariationField {
    let mut dv = FieldDerivation::new(v);
    let mut dw = FieldDerivation::new(w);
    let (phi_v, phi_w) = (phi_of(v), phi_of(w));
    let f = dv.apply(&w.f) - dw.apply(&v.f) + &v.g * &phi_w - &w.g * &phi_v;
    let g = dv.apply(&w.g) - dw.apply(&v.g) + &w.f * &phi_v - &v.f * &phi_w;
    VariationField::new(f, g)
}

/// Bracket of two arc-length preserving fields, which is again one.
pub fn bracket_arc(v: &ArcPreservingField, w: &ArcPreservingField) -> ArcPreservingField {
    let b = bracket(v.field(), w.field());
    debug_assert!(rho_of(&b).is_zero());
    ArcPreservingField(b)
}

/// The arc-length preserving field with normal component `g`.
pub fn lift(g: &DiffPoly) -> Result<ArcPreservingField, Error> {
    let kg = DiffPoly::k() * g;
    let f = kg
        .antiderivative()
        .map_err(|e| e.with_context("k·g (arc-length preservation)"))?;
    Ok(ArcPreservingField(VariationField::new(f, g.clone())))
}

/// `Φ(v) = ∂_{v(k)}`.
pub fn phi_hom(v: &ArcPreservingField) -> Characteristic {
    Characteristic::new(v_of_k(v.field()))
}

fn require_flat(p: &DiffPoly) -> Result<(), Error> {
    if p.contains_g() {
        Err(Error::NonFlat(p.clone()))
    } else {
        Ok(())
    }
}

/// `π̄(α_p) = D_s^{-1}(k p') T + p' N` (plane curves).
pub fn pibar(p: &DiffPoly) -> Result<ArcPreservingField, Error> {
    require_flat(p)?;
    lift(&p.total_derivative())
}

/// `ℛ̄(v) = D_s^{-1}(k h) T + h N` with `h = 𝒟 D_s^{-1}(g_v)` (plane curves).
pub fn rbar(v: &ArcPreservingField) -> Result<ArcPreservingField, Error> {
    require_flat(v.g())?;
    let h = d_dinv(v.g())?;
    lift(&h)
}

/// `V_0 = 1/2 k^2 T + k' N`, the planar filament field.
pub fn pf_field() -> ArcPreservingField {
    ArcPreservingField(VariationField::new(
        DiffPoly::ratio(1, 2) * DiffPoly::k().pow(2),
        DiffPoly::kd(1),
    ))
}

/// `[V_0, ..., V_n]` with `V_{j+1} = ℛ̄ V_j`, at the default depth limit.
pub fn pf_hierarchy(n: usize) -> Result<Vec<ArcPreservingField>, Error> {
    pf_hierarchy_with_limit(n, DEFAULT_DEPTH_LIMIT)
}

pub fn pf_hierarchy_with_limit(n: usize, limit: usize) -> Result<Vec<ArcPreservingField>, Error> {
    if n > limit {
        return Err(Error::DepthExceeded {
            requested: n,
            limit,
        });
    }
    let mut out = vec![pf_field()];
    for level in 1..=n {
        let next = rbar(&out[level - 1]).map_err(|e| Error::LocalityLost {
            level,
            source: Box::new(e),
        })?;
        out.push(next);
    }
    Ok(out)
}

/// `(δS)(v) = ∫ (φ_v' + G g_v) δL/δk ds` for `S = ∫ L ds`.
pub fn first_variation(lagrangian: &DiffPoly, v: &VariationField) -> Functional {
    let rate = phi_of(v).total_derivative() + DiffPoly::big_g() * &v.g;
    Functional::new(rate * lagrangian.euler_derivative())
}

/// The Hamiltonian field `π̄(dS)` of `S = ∫ L ds` (plane curves).
pub fn hamiltonian_field(lagrangian: &DiffPoly) -> Result<ArcPreservingField, Error> {
    require_flat(lagrangian)?;
    pibar(&lagrangian.euler_derivative())
}
