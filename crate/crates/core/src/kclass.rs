//! Virtual SU-bundles over sphere products, modelled rationally by their
//! total Chern character.
//!
//! On a product of even spheres the Chern character is injective modulo
//! torsion, so a class is stored as `ch ∈ H^{even}(X; ℚ)`. Tensor product
//! is the cup product of characters, direct sum is their sum, and the
//! degree-0 coefficient is the virtual dimension. Classes of virtual
//! dimension 1 ("unit classes") form the group `(1 + K̃SU(X))^×` under
//! tensor product.

use num_integer::Integer;

use crate::cohomology::{CohClass, SphereProduct};
use crate::{Error, Result, Scalar};

#[derive(Clone, PartialEq, Debug)]
pub struct VirtualClass<S> {
    ch: CohClass<S>,
}

impl<S: Scalar> VirtualClass<S> {
    /// Wraps a Chern character. Rejects a nonzero degree-2 component.
    pub fn from_ch(ch: CohClass<S>) -> Result<Self> {
        if !ch.graded_component(2).is_zero() {
            return Err(Error::NonzeroFirstChern);
        }
        Ok(VirtualClass { ch })
    }

    /// The trivial line, `ch = 1`.
    pub fn unit(base: &SphereProduct) -> Self {
        VirtualClass { ch: CohClass::unit(base) }
    }

    /// The generator `ξ⁽ⁿ⁾` of `(1 + K̃SU(S^{2n}))^× ≅ ℤ`, with `ch = 1 + ιₙ`.
    pub fn generator_bundle(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::GeneratorDegree(n));
        }
        let base = SphereProduct::new(vec![n])?;
        let ch = CohClass::unit(&base).add(&CohClass::generator(&base, 0)?)?;
        Ok(VirtualClass { ch })
    }

    pub fn ch(&self) -> &CohClass<S> {
        &self.ch
    }

    pub fn base(&self) -> &SphereProduct {
        self.ch.base()
    }

    /// The degree-`2m` Chern character component `ch_m`.
    pub fn ch_component(&self, m: u32) -> CohClass<S> {
        self.ch.graded_component(2 * m)
    }

    pub fn virtual_dimension(&self) -> S {
        self.ch.coeff(0)
    }

    pub fn is_unit_class(&self) -> bool {
        self.virtual_dimension().is_one()
    }

    fn require_unit(&self) -> Result<()> {
        if self.is_unit_class() {
            Ok(())
        } else {
            Err(Error::NotUnitClass(format!("{:?}", self.virtual_dimension())))
        }
    }

    pub fn tensor(&self, other: &Self) -> Result<Self> {
        Ok(VirtualClass { ch: self.ch.multiply(&other.ch)? })
    }

    /// Direct sum.
    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(VirtualClass { ch: self.ch.add(&other.ch)? })
    }

    /// The additive multiple `k·ξ = ξ ⊕ … ⊕ ξ` (negative `k` allowed).
    pub fn multiple(&self, k: i64) -> Self {
        VirtualClass { ch: self.ch.scale(&S::from_i64(k)) }
    }

    /// Tensor inverse of a unit class: for `ξ = 1 + ξ̃`, returns
    /// `1 − ξ̃ + ξ̃² − …`, which terminates since `ξ̃^{r+1} = 0` on an
    /// `r`-fold product.
    pub fn inverse(&self) -> Result<Self> {
        self.require_unit()?;
        let base = self.base().clone();
        let one = CohClass::unit(&base);
        let neg_reduced = one.sub(&self.ch)?;
        let mut out = one.clone();
        let mut power = one;
        for _ in 0..base.factors() {
            power = power.multiply(&neg_reduced)?;
            if power.is_zero() {
                break;
            }
            out = out.add(&power)?;
        }
        Ok(VirtualClass { ch: out })
    }

    /// `k`-th tensor power of a unit class; negative powers go through
    /// [`VirtualClass::inverse`].
    pub fn power(&self, k: i64) -> Result<Self> {
        self.require_unit()?;
        let base_class = if k < 0 { self.inverse()? } else { self.clone() };
        let mut exp = k.unsigned_abs();
        let mut acc = VirtualClass::unit(self.base());
        let mut sq = base_class;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.tensor(&sq)?;
            }
            exp >>= 1;
            if exp > 0 {
                sq = sq.tensor(&sq)?;
            }
        }
        Ok(acc)
    }

    /// External tensor product `ξ ⊠ η` over `X × Y`.
    pub fn exterior(&self, other: &Self) -> Result<Self> {
        Ok(VirtualClass { ch: self.ch.exterior(&other.ch)? })
    }
}

/// Bézout coefficients `(u, v)` with `u·k + v·m = 1`, choosing the `u`
/// of least absolute value (the positive one on ties).
pub fn bezout(k: i64, m: i64) -> Result<(i64, i64)> {
    let eg = k.extended_gcd(&m);
    let sign = match eg.gcd {
        1 => 1,
        -1 => -1,
        _ => return Err(Error::NotCoprime(k.unsigned_abs(), m.unsigned_abs())),
    };
    // all solutions: u + t·m, v − t·k
    let (mut u, mut v) = (sign * eg.x, sign * eg.y);
    let step = m.abs();
    if step != 0 {
        let t = Integer::div_floor(&u, &step);
        u -= t * step;
        v += t * step / m * k;
        if 2 * u > step {
            u -= step;
            v += step / m * k;
        }
    }
    debug_assert_eq!(u * k + v * m, 1);
    Ok((u, v))
}

/// Recovers a unit class `ξ` from its multiples `ξ_k = k·ξ` and
/// `ξ_m = m·ξ` with `gcd(k, m) = 1`, as `u·ξ_k + v·ξ_m` for a Bézout pair.
pub fn reconstruct_unit<S: Scalar>(
    k: i64,
    m: i64,
    xi_k: &VirtualClass<S>,
    xi_m: &VirtualClass<S>,
) -> Result<VirtualClass<S>> {
    check_reconstruction_inputs(k, m, xi_k, xi_m)?;
    let (u, v) = bezout(k, m)?;
    combine(u, v, xi_k, xi_m)
}

/// [`reconstruct_unit`] with a caller-chosen Bézout pair.
pub fn reconstruct_unit_with<S: Scalar>(
    k: i64,
    m: i64,
    (u, v): (i64, i64),
    xi_k: &VirtualClass<S>,
    xi_m: &VirtualClass<S>,
) -> Result<VirtualClass<S>> {
    check_reconstruction_inputs(k, m, xi_k, xi_m)?;
    if u.checked_mul(k).zip(v.checked_mul(m)).and_then(|(a, b)| a.checked_add(b)) != Some(1) {
        return Err(Error::BadBezoutPair(format!("({u}, {v}) for ({k}, {m})")));
    }
    combine(u, v, xi_k, xi_m)
}

fn check_reconstruction_inputs<S: Scalar>(
    k: i64,
    m: i64,
    xi_k: &VirtualClass<S>,
    xi_m: &VirtualClass<S>,
) -> Result<()> {
    for n in [k, m] {
        if n <= 0 {
            return Err(Error::NonPositive(n));
        }
    }
    if k.gcd(&m) != 1 {
        return Err(Error::NotCoprime(k as u64, m as u64));
    }
    for (n, xi) in [(k, xi_k), (m, xi_m)] {
        if xi.virtual_dimension() != S::from_i64(n) {
            return Err(Error::DimensionMismatch {
                expected: n.to_string(),
                found: format!("{:?}", xi.virtual_dimension()),
            });
        }
    }
    if xi_k.multiple(m) != xi_m.multiple(k) {
        if xi_k.base() != xi_m.base() {
            return Err(Error::BaseMismatch {
                left: xi_k.base().factor_degrees().to_vec(),
                right: xi_m.base().factor_degrees().to_vec(),
            });
        }
        return Err(Error::IncompatibleMultiples);
    }
    Ok(())
}

fn combine<S: Scalar>(
    u: i64,
    v: i64,
    xi_k: &VirtualClass<S>,
    xi_m: &VirtualClass<S>,
) -> Result<VirtualClass<S>> {
    xi_k.multiple(u).add(&xi_m.multiple(v))
}
