//! Bi-Hamiltonian structure of the mKdV equation `k_t = k''' + 3/2 k^2 k'`.
//!
//! `π0(α_p) = ∂_{D_s p}` and `π1(α_p) = ∂_{𝒟 p}` with
//! `𝒟 = D_s^3 + k' D_s^{-1} k D_s + k^2 D_s`. Every `D_s^{-1}` is resolved by
//! [`DiffPoly::antiderivative`]; a non-exact argument is an error, never a
//! nonlocal symbol.

use crate::derivations::Characteristic;
use crate::diffalg::{DiffPoly, Functional};
use crate::error::Error;

/// Default maximal hierarchy level.
pub const DEFAULT_DEPTH_LIMIT: usize = 5;

/// The one-form `α_p` with `α_p(∂_a) = ∫ a p ds`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CovectorField(pub DiffPoly);

impl CovectorField {
    pub fn new(p: DiffPoly) -> Self {
        Self(p)
    }

    /// The differential of a functional, `α_{δf/δk}`.
    pub fn differential(f: &Functional) -> Self {
        Self(f.variational_derivative())
    }

    pub fn pairing(&self, a: &Characteristic) -> Functional {
        Functional::new(a.poly() * &self.0)
    }
}

/// `H0 = ∫ 1/2 k^2 ds` and `H1 = ∫ (1/2 (k')^2 - 1/8 k^4) ds`.
#[derive(Clone, Debug)]
pub struct HamiltonianPair {
    pub h0: Functional,
    pub h1: Functional,
}

impl Default for HamiltonianPair {
    fn default() -> Self {
        let k = DiffPoly::k;
        Self {
            h0: Functional::new(DiffPoly::ratio(1, 2) * k().pow(2)),
            h1: Functional::new(
                DiffPoly::ratio(1, 2) * DiffPoly::kd(1).pow(2) - DiffPoly::ratio(1, 8) * k().pow(4),
            ),
        }
    }
}

/// `k''' + 3/2 k^2 k'`.
pub fn mkdv() -> Characteristic {
    Characteristic::new(
        DiffPoly::kd(3) + DiffPoly::ratio(3, 2) * DiffPoly::k().pow(2) * DiffPoly::kd(1),
    )
}

pub fn pi0(alpha: &CovectorField) -> Characteristic {
    Characteristic::new(alpha.0.total_derivative())
}

/// `𝒟 p = p''' + k' D_s^{-1}(k p') + k^2 p'`.
pub fn apply_d(p: &DiffPoly) -> Result<DiffPoly, Error> {
    let k = DiffPoly::k();
    let dp = p.total_derivative();
    let inner = (&k * &dp)
        .antiderivative()
        .map_err(|e| e.with_context("k·D_s(p) inside the operator 𝒟"))?;
    Ok(dp.total_derivative_n(2) + DiffPoly::kd(1) * inner + k.pow(2) * dp)
}

pub fn pi1(alpha: &CovectorField) -> Result<Characteristic, Error> {
    apply_d(&alpha.0).map(Characteristic::new)
}

/// `𝒟 D_s^{-1} g = g'' + k^2 g + k' D_s^{-1}(k g)`, without requiring `g`
/// itself to be exact.
pub(crate) fn d_dinv(g: &DiffPoly) -> Result<DiffPoly, Error> {
    let k = DiffPoly::k();
    let inner = (&k * g)
        .antiderivative()
        .map_err(|e| e.with_context("k·a inside the recursion operator"))?;
    Ok(g.total_derivative_n(2) + k.pow(2) * g + DiffPoly::kd(1) * inner)
}

/// `ℛ(∂_a) = ∂_{𝒟 D_s^{-1} a}`. The characteristic must be exact.
pub fn recursion(a: &Characteristic) -> Result<Characteristic, Error> {
    let a = a.poly();
    if !a.is_exact() {
        let witness = if a.constant_part().is_zero() {
            a.euler_derivative()
        } else {
            a.constant_part()
        };
        return Err(Error::not_exact(
            "characteristic passed to the recursion operator",
            witness,
        ));
    }
    d_dinv(a).map(Characteristic::new)
}

/// `[a_0, ..., a_n]` with `a_0 = mKdV` and `a_{j+1} = ℛ a_j`, at the default
/// depth limit.
pub fn mkdv_hierarchy(n: usize) -> Result<Vec<Characteristic>, Error> {
    mkdv_hierarchy_with_limit(n, DEFAULT_DEPTH_LIMIT)
}

pub fn mkdv_hierarchy_with_limit(n: usize, limit: usize) -> Result<Vec<Characteristic>, Error> {
    if n > limit {
        return Err(Error::DepthExceeded {
            requested: n,
            limit,
        });
    }
    let mut out = vec![mkdv()];
    for level in 1..=n {
        let next = recursion(&out[level - 1]).map_err(|e| Error::LocalityLost {
            level,
            source: Box::new(e),
        })?;
        out.push(next);
    }
    Ok(out)
}

/// `{F, G}_{π1} = ∫ [ (δf)'' (δg)' + D_s^{-1}(k (δf)') k (δg)' ] ds`.
pub fn poisson_pi1(f: &Functional, g: &Functional) -> Result<Functional, Error> {
    let k = DiffPoly::k();
    let df = f.variational_derivative();
    let dg_prime = g.variational_derivative().total_derivative();
    let df_prime = df.total_derivative();
    let nonlocal = (&k * &df_prime)
        .antiderivative()
        .map_err(|e| e.with_context("k·(δf/δk)' in the Poisson bracket"))?;
    let integrand = df_prime.total_derivative() * &dg_prime + nonlocal * k * dg_prime;
    Ok(Functional::new(integrand))
}

/// Outcome of comparing `π0(dH1)` with `π1(dH0)`.
#[derive(Clone, Debug)]
pub struct BiHamiltonianReport {
    /// `π0(dH1)`.
    pub c0: Characteristic,
    /// `π1(dH0)`.
    pub c1: Characteristic,
    /// Whether `c1` is exactly the mKdV characteristic.
    pub c1_is_mkdv: bool,
    /// `σ` with `c1 = σ c0`, if such a sign exists.
    pub sigma: Option<i32>,
}

impl BiHamiltonianReport {
    /// True when the identity holds only after flipping a sign.
    pub fn has_sign_discrepancy(&self) -> bool {
        self.sigma == Some(-1)
    }
}

pub fn check_bihamiltonian() -> BiHamiltonianReport {
    let pair = HamiltonianPair::default();
    let c0 = pi0(&CovectorField::differential(&pair.h1));
    let c1 = pi1(&CovectorField::differential(&pair.h0))
        .expect("k·k' is exact, so 𝒟(k) is always defined");
    let sigma = if c1 == c0 {
        Some(1)
    } else if c1.poly() == &-c0.poly() {
        Some(-1)
    } else {
        None
    };
    BiHamiltonianReport {
        c1_is_mkdv: c1 == mkdv(),
        c0,
        c1,
        sigma,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(m: usize) -> DiffPoly {
        DiffPoly::kd(m)
    }

    fn r(n: i64, d: i64) -> DiffPoly {
        DiffPoly::ratio(n, d)
    }

    #[test]
    fn pi0_examples() {
        assert_eq!(pi0(&CovectorField::new(k(0))).poly(), &k(1));
        assert!(pi0(&CovectorField::new(DiffPoly::one())).is_zero());
        let p = -k(2) - r(1, 2) * k(0).pow(3);
        assert_eq!(pi0(&CovectorField::new(p)).poly(), &-mkdv().into_poly());
    }

    #[test]
    fn operator_d_examples() {
        assert_eq!(apply_d(&k(0)).unwrap(), mkdv().into_poly());
        assert!(apply_d(&DiffPoly::one()).unwrap().is_zero());
        // Termwise: (k^2)''' = 2 k k''' + 6 k' k'', k' ∫ 2k^2 k' = 2/3 k^3 k',
        // k^2 (k^2)' = 2 k^3 k'.
        let expected = DiffPoly::int(2) * k(0) * k(3)
            + DiffPoly::int(6) * k(1) * k(2)
            + r(8, 3) * k(0).pow(3) * k(1);
        assert_eq!(apply_d(&k(0).pow(2)).unwrap(), expected);
        assert_eq!(
            pi1(&CovectorField::new(k(0).pow(2))).unwrap().poly(),
            &expected
        );
        assert!(pi1(&CovectorField::new(DiffPoly::zero()))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn operator_d_reports_non_exact_intermediate() {
        // k·(k')' = k k'' is not exact.
        assert!(matches!(apply_d(&k(1)), Err(Error::NotExact { .. })));
    }

    #[test]
    fn recursion_examples() {
        assert_eq!(recursion(&Characteristic::new(k(1))).unwrap(), mkdv());
        assert!(recursion(&Characteristic::zero()).unwrap().is_zero());
        match recursion(&Characteristic::new(k(0))) {
            Err(Error::NotExact { witness, context }) => {
                assert_eq!(witness, DiffPoly::one());
                assert!(context.contains("characteristic"));
            }
            other => panic!("expected NotExact, got {other:?}"),
        }
    }

    #[test]
    fn hierarchy_levels() {
        let h = mkdv_hierarchy(2).unwrap();
        assert_eq!(h.len(), 3);
        assert_eq!(h[0], mkdv());
        let expected_1 = k(5)
            + r(5, 2) * k(1).pow(3)
            + DiffPoly::int(10) * k(0) * k(1) * k(2)
            + r(5, 2) * k(0).pow(2) * k(3)
            + r(15, 8) * k(0).pow(4) * k(1);
        assert_eq!(h[1].poly(), &expected_1);
        assert_eq!(h[2].poly().max_order(), Some(7));
        let lead = crate::diffalg::Monomial::derivative(7);
        assert_eq!(h[2].poly().coeff(&lead), crate::diffalg::rat(1, 1));
    }

    #[test]
    fn hierarchy_depth_limit() {
        assert!(matches!(
            mkdv_hierarchy(6),
            Err(Error::DepthExceeded {
                requested: 6,
                limit: 5
            })
        ));
    }

    #[test]
    fn bihamiltonian_sign() {
        let report = check_bihamiltonian();
        assert!(report.c1_is_mkdv);
        assert_eq!(report.c0.poly(), &-mkdv().into_poly());
        assert_eq!(report.sigma, Some(-1));
        assert!(report.has_sign_discrepancy());
    }

    #[test]
    fn poisson_examples() {
        let pair = HamiltonianPair::default();
        assert!(poisson_pi1(&pair.h0, &pair.h0).unwrap().is_zero());
        assert!(poisson_pi1(&pair.h0, &pair.h1).unwrap().is_zero());
        let total_turning = Functional::new(k(0));
        assert!(poisson_pi1(&total_turning, &pair.h0).unwrap().is_zero());
    }

    #[test]
    fn pairing_is_bilinear() {
        let alpha = CovectorField::new(k(0) * k(2));
        let a = Characteristic::new(k(1));
        let b = Characteristic::new(k(3) + k(0).pow(2));
        let sum = Characteristic::new(a.poly() + b.poly());
        let lhs = alpha.pairing(&sum);
        let rhs = Functional::new(
            alpha.pairing(&a).representative() + alpha.pairing(&b).representative(),
        );
        assert_eq!(lhs, rhs);
    }
}
