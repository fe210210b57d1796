use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::monomial::Monomial;
use super::Rational;

/// Exact polynomial in `k, k', k'', ...` with coefficients in `Q[G]`.
///
/// Terms are kept in a `BTreeMap` keyed by [`Monomial`], so the term list is
/// canonically ordered and like terms are always merged. Zero coefficients
/// are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct DiffPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl DiffPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn int(n: i64) -> Self {
        Self::constant(Rational::from_integer(BigInt::from(n)))
    }

    /// `n/d` as a constant polynomial. Panics on `d == 0`.
    pub fn ratio(n: i64, d: i64) -> Self {
        Self::constant(super::rat(n, d))
    }

    /// The curvature `k`.
    pub fn k() -> Self {
        Self::kd(0)
    }

    /// The derivative `k^(order)`.
    pub fn kd(order: usize) -> Self {
        Self::term(Rational::one(), Monomial::derivative(order))
    }

    /// The space-form constant `G`.
    pub fn big_g() -> Self {
        Self::term(Rational::one(), Monomial::g_power(1))
    }

    pub fn term(coeff: Rational, monomial: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(monomial, coeff);
        p
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Rational, Monomial)>,
    {
        let mut p = Self::zero();
        for (c, m) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, monomial: Monomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(monomial) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, monomial: &Monomial) -> Rational {
        self.terms
            .get(monomial)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Highest derivative order of `k` present; `None` when `self` involves
    /// no curvature variable at all.
    pub fn max_order(&self) -> Option<usize> {
        self.terms.keys().filter_map(Monomial::max_order).max()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Degree in the single variable `k^(order)`.
    pub fn degree_in(&self, order: usize) -> u32 {
        self.terms
            .keys()
            .map(|m| m.exponent(order))
            .max()
            .unwrap_or(0)
    }

    pub fn contains_g(&self) -> bool {
        self.terms.keys().any(|m| m.g() > 0)
    }

    /// Part of `self` free of curvature variables (an element of `Q[G]`).
    pub fn constant_part(&self) -> DiffPoly {
        self.filter(|m| m.is_constant())
    }

    pub fn without_constant(&self) -> DiffPoly {
        self.filter(|m| !m.is_constant())
    }

    /// Substitutes `G = 0`.
    pub fn at_flat(&self) -> DiffPoly {
        self.filter(|m| m.g() == 0)
    }

    /// Coefficient of `G^j` as a `G`-free polynomial.
    pub fn g_coefficient(&self, j: u32) -> DiffPoly {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.g() == j)
                .map(|(m, c)| (c.clone(), m.without_g())),
        )
    }

    fn filter(&self, keep: impl Fn(&Monomial) -> bool) -> DiffPoly {
        DiffPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> DiffPoly {
        if c.is_zero() {
            return DiffPoly::zero();
        }
        DiffPoly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn scale_int(&self, n: i64) -> DiffPoly {
        self.scale(&Rational::from_integer(BigInt::from(n)))
    }

    pub fn mul_monomial(&self, c: &Rational, monomial: &Monomial) -> DiffPoly {
        if c.is_zero() {
            return DiffPoly::zero();
        }
        DiffPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.mul(monomial), a * c))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> DiffPoly {
        let mut result = DiffPoly::one();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Evaluates with `G = g_value` and `k^(m)` read from `derivs[m]`.
    pub fn eval_at(&self, g_value: f64, derivs: &[f64]) -> f64 {
        use num_traits::ToPrimitive;
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut v = c.to_f64().unwrap_or(f64::NAN) * g_value.powi(m.g() as i32);
                for (order, e) in m.factors() {
                    v *= derivs[order].powi(e as i32);
                }
                v
            })
            .sum()
    }
}

impl fmt::Debug for DiffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DiffPoly({})", crate::exprio::print(self))
    }
}

impl fmt::Display for DiffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::exprio::print(self))
    }
}

impl<'a> Add<&'a DiffPoly> for &'a DiffPoly {
    type Output = DiffPoly;
    fn add(self, rhs: &DiffPoly) -> DiffPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a DiffPoly> for &'a DiffPoly {
    type Output = DiffPoly;
    fn sub(self, rhs: &DiffPoly) -> DiffPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a DiffPoly> for &'a DiffPoly {
    type Output = DiffPoly;
    fn mul(self, rhs: &DiffPoly) -> DiffPoly {
        let mut out = DiffPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &DiffPoly {
    type Output = DiffPoly;
    fn neg(self) -> DiffPoly {
        DiffPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Neg for DiffPoly {
    type Output = DiffPoly;
    fn neg(self) -> DiffPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<DiffPoly> for DiffPoly {
            type Output = DiffPoly;
            fn $method(self, rhs: DiffPoly) -> DiffPoly {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a DiffPoly> for DiffPoly {
            type Output = DiffPoly;
            fn $method(self, rhs: &DiffPoly) -> DiffPoly {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<DiffPoly> for &'a DiffPoly {
            type Output = DiffPoly;
            fn $method(self, rhs: DiffPoly) -> DiffPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
