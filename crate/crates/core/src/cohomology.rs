//! Rational cohomology of a product of even-dimensional spheres
//! `S^{2n₁} × … × S^{2n_r}`.
//!
//! The ring is exterior-like on the generators `ι_i ∈ H^{2nᵢ}`: it has the
//! basis `ι_S = Π_{i∈S} ι_i` over subsets `S ⊆ {0, …, r−1}`, with
//! `ι_S · ι_T = ι_{S∪T}` for disjoint `S, T` and `0` otherwise. All
//! generators have even degree, so no signs appear. Subsets are bitmasks
//! over factor indices (0-based).

use std::collections::BTreeMap;
use std::fmt;

use crate::{Error, Result, Scalar};

/// Maximum number of sphere factors; the ring has `2^r` basis elements.
pub const MAX_FACTORS: usize = 16;

/// Bitmask of factor indices.
pub type FactorSet = u32;

/// A product of spheres `S^{2nᵢ}`, stored as the list of `nᵢ` in factor
/// order. The empty product is the one-point space.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct SphereProduct {
    degrees: Vec<u32>,
}

impl SphereProduct {
    pub fn new(degrees: impl Into<Vec<u32>>) -> Result<Self> {
        let degrees = degrees.into();
        if let Some(&bad) = degrees.iter().find(|&&n| n < 2) {
            return Err(Error::SphereDegreeTooSmall(bad));
        }
        if degrees.len() > MAX_FACTORS {
            return Err(Error::TooManyFactors { got: degrees.len(), cap: MAX_FACTORS });
        }
        Ok(SphereProduct { degrees })
    }

    pub fn point() -> Self {
        SphereProduct::default()
    }

    /// The `nᵢ`; factor `i` is `S^{2nᵢ}`.
    pub fn factor_degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn factors(&self) -> usize {
        self.degrees.len()
    }

    /// `Σ nᵢ`, half the dimension of the manifold.
    pub fn weight(&self) -> u32 {
        self.degrees.iter().sum()
    }

    pub fn dimension(&self) -> u32 {
        2 * self.weight()
    }

    /// Mask of all factors, the index of the top class.
    pub fn top(&self) -> FactorSet {
        ((1u64 << self.degrees.len()) - 1) as FactorSet
    }

    /// Cohomological degree of `ι_S`.
    pub fn degree_of(&self, set: FactorSet) -> u32 {
        self.degrees
            .iter()
            .enumerate()
            .filter(|(i, _)| set & (1 << i) != 0)
            .map(|(_, n)| 2 * n)
            .sum()
    }

    /// `X × Y` with the factors of `other` appended.
    pub fn product(&self, other: &SphereProduct) -> Result<SphereProduct> {
        let mut degrees = self.degrees.clone();
        degrees.extend_from_slice(&other.degrees);
        SphereProduct::new(degrees)
    }
}

impl fmt::Display for SphereProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degrees.is_empty() {
            return f.write_str("pt");
        }
        for (i, n) in self.degrees.iter().enumerate() {
            if i > 0 {
                f.write_str("xS^")?;
            } else {
                f.write_str("S^")?;
            }
            write!(f, "{}", 2 * n)?;
        }
        Ok(())
    }
}

/// An element of `H^*(X; S)` for a sphere product `X`.
#[derive(Clone, PartialEq, Debug)]
pub struct CohClass<S> {
    base: SphereProduct,
    terms: BTreeMap<FactorSet, S>,
}

impl<S: Scalar> CohClass<S> {
    pub fn zero(base: &SphereProduct) -> Self {
        CohClass { base: base.clone(), terms: BTreeMap::new() }
    }

    pub fn unit(base: &SphereProduct) -> Self {
        Self::zero(base).with_term(0, S::one())
    }

    /// The generator `ι_i` of the `i`-th factor (0-based).
    pub fn generator(base: &SphereProduct, i: usize) -> Result<Self> {
        if i >= base.factors() {
            return Err(Error::FactorIndexOutOfRange { index: i, factors: base.factors() });
        }
        Ok(Self::zero(base).with_term(1 << i, S::one()))
    }

    /// The top class `ι_{0}⋯ι_{r−1}`, dual to the fundamental class.
    pub fn top_class(base: &SphereProduct) -> Self {
        Self::zero(base).with_term(base.top(), S::one())
    }

    /// Builds a class from `(subset, coefficient)` pairs, summing repeats.
    pub fn from_terms(
        base: &SphereProduct,
        terms: impl IntoIterator<Item = (FactorSet, S)>,
    ) -> Result<Self> {
        let mut out = Self::zero(base);
        for (set, c) in terms {
            if set & !base.top() != 0 {
                let index = (31 - (set & !base.top()).leading_zeros()) as usize;
                return Err(Error::FactorIndexOutOfRange { index, factors: base.factors() });
            }
            out.accumulate(set, c);
        }
        Ok(out)
    }

    fn with_term(mut self, set: FactorSet, c: S) -> Self {
        self.accumulate(set, c);
        self
    }

    fn accumulate(&mut self, set: FactorSet, c: S) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&set) {
            Some(prev) => prev + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(set, sum);
        }
    }

    pub fn base(&self) -> &SphereProduct {
        &self.base
    }

    pub fn coeff(&self, set: FactorSet) -> S {
        self.terms.get(&set).cloned().unwrap_or_else(S::zero)
    }

    /// Nonzero terms in increasing bitmask order.
    pub fn terms(&self) -> impl Iterator<Item = (FactorSet, &S)> + '_ {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_base(&self, other: &Self) -> Result<()> {
        if self.base != other.base {
            return Err(Error::BaseMismatch {
                left: self.base.degrees.clone(),
                right: other.base.degrees.clone(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_base(other)?;
        let mut out = self.clone();
        for (&set, c) in &other.terms {
            out.accumulate(set, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        CohClass {
            base: self.base.clone(),
            terms: self.terms.iter().map(|(&k, v)| (k, -v.clone())).collect(),
        }
    }

    pub fn scale(&self, q: &S) -> Self {
        if q.is_zero() {
            return Self::zero(&self.base);
        }
        CohClass {
            base: self.base.clone(),
            terms: self.terms.iter().map(|(&k, v)| (k, v.clone() * q.clone())).collect(),
        }
    }

    /// Cup product.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_base(other)?;
        let mut out = Self::zero(&self.base);
        for (&s, a) in &self.terms {
            for (&t, b) in &other.terms {
                if s & t == 0 {
                    out.accumulate(s | t, a.clone() * b.clone());
                }
            }
        }
        Ok(out)
    }

    /// The homogeneous component of cohomological degree `d`.
    pub fn graded_component(&self, d: u32) -> Self {
        CohClass {
            base: self.base.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(&set, _)| self.base.degree_of(set) == d)
                .map(|(&k, v)| (k, v.clone()))
                .collect(),
        }
    }

    /// Degrees carrying a nonzero component, ascending.
    pub fn degrees(&self) -> Vec<u32> {
        let mut ds: Vec<u32> = self.terms.keys().map(|&s| self.base.degree_of(s)).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    /// Evaluation on the fundamental class: the coefficient of the top
    /// class. The orientation is the one making `⟨ι₀⋯ι_{r−1}, [X]⟩ = 1`;
    /// use [`CohClass::pair_reversed`] for the opposite orientation.
    pub fn pair_fundamental(&self) -> S {
        self.coeff(self.base.top())
    }

    /// Evaluation on the orientation-reversed fundamental class.
    pub fn pair_reversed(&self) -> S {
        -self.pair_fundamental()
    }

    /// External product `a × b` on `X × Y`: `ι_S ⊗ ι_T` gets
    /// `coeff_a(S) · coeff_b(T)`.
    pub fn exterior(&self, other: &Self) -> Result<Self> {
        let base = self.base.product(&other.base)?;
        let shift = self.base.factors();
        let mut out = Self::zero(&base);
        for (&s, a) in &self.terms {
            for (&t, b) in &other.terms {
                out.accumulate(s | (t << shift), a.clone() * b.clone());
            }
        }
        Ok(out)
    }
}

impl<S: Scalar + fmt::Display> fmt::Display for CohClass<S> {
    /// Renders as `1 + ι1 + 2 ι1ι2` with 1-based factor labels.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (&set, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let label = monomial_label(set);
            match (label.is_empty(), c.is_one()) {
                (true, _) => write!(f, "{c}")?,
                (false, true) => f.write_str(&label)?,
                (false, false) => write!(f, "({c}) {label}")?,
            }
        }
        Ok(())
    }
}

/// `ι1ι3` for the mask `0b101`; empty for the unit.
pub fn monomial_label(set: FactorSet) -> String {
    (0..32)
        .filter(|i| set & (1 << i) != 0)
        .map(|i| format!("ι{}", i + 1))
        .collect()
}

/// Factor indices (0-based) contained in `set`.
pub fn set_members(set: FactorSet) -> Vec<usize> {
    (0..32).filter(|i| set & (1 << i) != 0).collect()
}

pub fn set_from_members(members: &[usize]) -> Result<FactorSet> {
    let mut set = 0;
    for &i in members {
        if i >= MAX_FACTORS {
            return Err(Error::FactorIndexOutOfRange { index: i, factors: MAX_FACTORS });
        }
        set |= 1 << i;
    }
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    type C = CohClass<Rational>;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn s4_cubed() -> SphereProduct {
        SphereProduct::new(vec![2, 2, 2]).unwrap()
    }

    fn one_plus_generators(base: &SphereProduct) -> C {
        (0..base.factors()).fold(C::unit(base), |acc, i| {
            let f = C::unit(base).add(&C::generator(base, i).unwrap()).unwrap();
            acc.multiply(&f).unwrap()
        })
    }

    #[test]
    fn unit_and_generators() {
        let base = s4_cubed();
        let u = C::unit(&base);
        assert_eq!(u.coeff(0), q(1));
        assert_eq!(u.graded_component(0), u);
        let g = C::generator(&base, 0).unwrap();
        assert_eq!(base.degree_of(1), 4);
        assert!(g.multiply(&g).unwrap().is_zero());
        assert!(C::generator(&base, 3).is_err());
        let all = (0..3).fold(u.clone(), |acc, i| acc.multiply(&C::generator(&base, i).unwrap()).unwrap());
        assert_eq!(all, C::top_class(&base));
    }

    #[test]
    fn two_factor_expansion() {
        let base = SphereProduct::new(vec![2, 2]).unwrap();
        let prod = one_plus_generators(&base);
        assert_eq!(prod.num_terms(), 4);
        for set in 0..4 {
            assert_eq!(prod.coeff(set), q(1));
        }
    }

    #[test]
    fn degree_eight_component_of_three_factor_expansion() {
        let base = s4_cubed();
        let full = one_plus_generators(&base);
        let ch4 = full.graded_component(8);
        let expected = C::from_terms(&base, [(0b011, q(1)), (0b101, q(1)), (0b110, q(1))]).unwrap();
        assert_eq!(ch4, expected);
        assert!(full.graded_component(6).is_zero());
        assert!(full.graded_component(7).is_zero());
    }

    #[test]
    fn pairing() {
        let base = s4_cubed();
        assert_eq!(C::top_class(&base).pair_fundamental(), q(1));
        assert_eq!(C::unit(&base).pair_fundamental(), q(0));
        assert_eq!(C::top_class(&base).scale(&q(6)).pair_fundamental(), q(6));
        assert_eq!(C::top_class(&base).pair_reversed(), q(-1));
        // point: the unit is the top class
        assert_eq!(C::unit(&SphereProduct::point()).pair_fundamental(), q(1));
    }

    #[test]
    fn base_mismatch_is_an_error() {
        let a = C::unit(&s4_cubed());
        let b = C::unit(&SphereProduct::new(vec![2, 3]).unwrap());
        assert!(matches!(a.add(&b), Err(Error::BaseMismatch { .. })));
        assert!(a.multiply(&b).is_err());
    }

    #[test]
    fn scaling_by_zero_and_cancellation() {
        let base = s4_cubed();
        let a = one_plus_generators(&base);
        assert!(a.scale(&q(0)).is_zero());
        assert!(a.sub(&a).unwrap().is_zero());
        assert!(a.multiply(&C::zero(&base)).unwrap().is_zero());
    }

    #[test]
    fn exterior_concatenates_factors() {
        let x = SphereProduct::new(vec![2]).unwrap();
        let y = SphereProduct::new(vec![3]).unwrap();
        let a = C::unit(&x).add(&C::generator(&x, 0).unwrap().scale(&q(2))).unwrap();
        let b = C::unit(&y).add(&C::generator(&y, 0).unwrap().scale(&q(5))).unwrap();
        let ab = a.exterior(&b).unwrap();
        assert_eq!(ab.base().factor_degrees(), &[2, 3]);
        assert_eq!(ab.coeff(0b11), q(10));
        assert_eq!(ab.coeff(0b10), q(5));
        assert_eq!(a.exterior(&C::unit(&SphereProduct::point())).unwrap(), a);
    }

    #[test]
    fn too_many_factors() {
        assert!(SphereProduct::new(vec![2; MAX_FACTORS]).is_ok());
        assert!(matches!(
            SphereProduct::new(vec![2; MAX_FACTORS + 1]),
            Err(Error::TooManyFactors { .. })
        ));
        assert_eq!(SphereProduct::new(vec![1]), Err(Error::SphereDegreeTooSmall(1)));
    }

    #[test]
    fn generic_over_scalars() {
        let base = SphereProduct::new(vec![2, 3]).unwrap();
        let a = CohClass::<f64>::unit(&base).add(&CohClass::generator(&base, 0).unwrap()).unwrap();
        let b = CohClass::<f64>::unit(&base).add(&CohClass::generator(&base, 1).unwrap()).unwrap();
        assert_eq!(a.multiply(&b).unwrap().pair_fundamental(), 1.0);
        let r = CohClass::<num_rational::Rational64>::top_class(&base);
        assert_eq!(r.pair_fundamental(), num_rational::Rational64::from_integer(1));
    }

    #[test]
    fn display() {
        let base = SphereProduct::new(vec![2, 2]).unwrap();
        assert_eq!(one_plus_generators(&base).to_string(), "1 + ι1 + ι2 + ι1ι2");
        assert_eq!(base.to_string(), "S^4xS^4");
    }
}
