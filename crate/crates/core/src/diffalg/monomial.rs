use std::cmp::Ordering;

/// Power product `G^g · ∏ (k^(m))^(e_m)`.
///
/// `exps[m]` is the exponent of the `m`-th derivative of the curvature. The
/// vector never carries trailing zeros, so two monomials are equal exactly
/// when their `G` power and factor exponents agree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    g: u32,
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    /// The single factor `k^(order)`.
    pub fn derivative(order: usize) -> Self {
        let mut exps = vec![0; order + 1];
        exps[order] = 1;
        Self { g: 0, exps }
    }

    /// `G^power` with no curvature factors.
    pub fn g_power(power: u32) -> Self {
        Self {
            g: power,
            exps: Vec::new(),
        }
    }

    /// Builds a monomial from `(order, exponent)` pairs. Repeated orders add up.
    pub fn from_factors(g: u32, factors: &[(usize, u32)]) -> Self {
        let mut m = Self {
            g,
            exps: Vec::new(),
        };
        for &(order, e) in factors {
            m.bump(order, e as i64);
        }
        m
    }

    pub fn g(&self) -> u32 {
        self.g
    }

    pub fn exponent(&self, order: usize) -> u32 {
        self.exps.get(order).copied().unwrap_or(0)
    }

    /// Iterator over `(order, exponent)` for the nonzero curvature factors,
    /// lowest order first.
    pub fn factors(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(m, &e)| (m, e))
    }

    /// Total degree in the curvature variables (`G` is not counted).
    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// Highest derivative order present, `None` for a pure `G` power.
    pub fn max_order(&self) -> Option<usize> {
        if self.exps.is_empty() {
            None
        } else {
            Some(self.exps.len() - 1)
        }
    }

    /// True when no curvature factor is present (the monomial is `G^j`).
    pub fn is_constant(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let len = self.exps.len().max(other.exps.len());
        let exps = (0..len)
            .map(|m| self.exponent(m) + other.exponent(m))
            .collect();
        Monomial {
            g: self.g + other.g,
            exps,
        }
    }

    pub fn pow(&self, n: u32) -> Monomial {
        if n == 0 {
            return Monomial::one();
        }
        Monomial {
            g: self.g * n,
            exps: self.exps.iter().map(|e| e * n).collect(),
        }
    }

    /// Adds `delta` to the exponent of `k^(order)`.
    ///
    /// Panics if the exponent would become negative.
    pub(crate) fn bump(&mut self, order: usize, delta: i64) {
        if self.exps.len() <= order {
            if delta == 0 {
                return;
            }
            self.exps.resize(order + 1, 0);
        }
        let e = self.exps[order] as i64 + delta;
        assert!(e >= 0, "negative exponent for k^({order})");
        self.exps[order] = e as u32;
        while self.exps.last() == Some(&0) {
            self.exps.pop();
        }
    }

    pub(crate) fn with_bump(&self, order: usize, delta: i64) -> Monomial {
        let mut m = self.clone();
        m.bump(order, delta);
        m
    }

    pub(crate) fn without_g(&self) -> Monomial {
        Monomial {
            g: 0,
            exps: self.exps.clone(),
        }
    }
}

impl Ord for Monomial {
    /// Degree first, then the power of `G`, then derivative-order-major:
    /// scanning from the highest order down, a larger exponent sorts first.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.g.cmp(&other.g))
            .then_with(|| {
                let n = self.exps.len().max(other.exps.len());
                for m in (0..n).rev() {
                    let (a, b) = (self.exponent(m), other.exponent(m));
                    if a != b {
                        return b.cmp(&a);
                    }
                }
                Ordering::Equal
            })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
