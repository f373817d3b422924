//! Bookkeeping for the matrix Grassmannians
//! `Gr_{k,l} = SU(kl) / (SU(k) ⊗ SU(l))`, `gcd(k, l) = 1`, and the Thom
//! spaces of the trivial bundle `ϑ_{k,l}` of real rank `2kl` over them.
//!
//! Every bound is a strict inequality. The classification of pairs over a
//! manifold of dimension `d` holds for `d < 2·min(k, l)`; the statement
//! that stabilization `Gr_{k,l} → Gr_{km,ln}` is an isomorphism on
//! homotopy groups is only known "up to roughly `2·min(k, l)`", and that
//! fuzzy bound is not exposed: callers get the strict one.

use num_integer::Integer;
use serde::Serialize;

use crate::{bordism, Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct GrassmannPair {
    k: u32,
    l: u32,
}

impl GrassmannPair {
    pub fn new(k: u32, l: u32) -> Result<Self> {
        if k == 0 || l == 0 || k.gcd(&l) != 1 {
            return Err(Error::NotCoprime(k.into(), l.into()));
        }
        Ok(GrassmannPair { k, l })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    /// `2·min(k, l)`: manifold dimensions strictly below it are classified.
    pub fn stable_range(&self) -> u64 {
        2 * u64::from(self.k.min(self.l))
    }

    pub fn in_stable_range(&self, d: u64) -> bool {
        d < self.stable_range()
    }

    /// Real dimension of `SU(kl) / (SU(k) ⊗ SU(l))`.
    pub fn dim_gr(&self) -> u128 {
        grassmann_dimension(self.k, self.l)
    }

    /// Real rank `N = 2kl` of `ϑ_{k,l}`.
    pub fn thom_rank(&self) -> u128 {
        2 * u128::from(self.k) * u128::from(self.l)
    }

    /// True iff `gcd(km, ln) = 1`, i.e. `Gr_{k,l} → Gr_{km,ln}` is a valid
    /// stabilization.
    pub fn valid_stabilization(&self, m: u32, n: u32) -> bool {
        let km = u64::from(self.k) * u64::from(m);
        let ln = u64::from(self.l) * u64::from(n);
        m >= 1 && n >= 1 && km.gcd(&ln) == 1
    }

    pub fn thom_facts(&self, d: u32) -> ThomFacts {
        let hurewicz_ok = u128::from(d) + 1 < self.thom_rank();
        let in_stable_range = self.in_stable_range(d.into());
        ThomFacts {
            sphere_dim: u128::from(d) + self.thom_rank(),
            hurewicz_ok,
            in_stable_range,
            rank: hurewicz_ok.then(|| bordism::rank(d)),
        }
    }
}

/// `(k²l² − 1) − (k² − 1) − (l² − 1)` for any `k, l ≥ 1`.
pub fn grassmann_dimension(k: u32, l: u32) -> u128 {
    let (k2, l2) = (u128::from(k).pow(2), u128::from(l).pow(2));
    k2 * l2 + 1 - k2 - l2
}

/// Facts about `π_{d+2kl}(T(ϑ_{k,l}))`, which carries the degree-`d`
/// bordism group.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct ThomFacts {
    /// `d + 2kl`.
    pub sphere_dim: u128,
    /// Hurewicz is an isomorphism modulo finite groups: `d < 2kl − 1`.
    pub hurewicz_ok: bool,
    /// `d < 2·min(k, l)`.
    pub in_stable_range: bool,
    /// Rank of the homotopy group modulo torsion, `p′(d/2)` or 0, present
    /// whenever `hurewicz_ok`. It is the rank of `Ω^d ⊗ ℚ`; the Grassmannian
    /// `Gr_{k,l}` itself is only known to carry it when `in_stable_range`.
    pub rank: Option<u64>,
}
