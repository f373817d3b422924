//! The graded ring `Ω* ⊗ ℚ ≅ ℚ[t₂, t₃, …]`, `deg tₙ = 2n`.
//!
//! Elements are stored in the t-monomial basis: the partition
//! `(n₁, …, n_r)` stands for `t_{n₁}⋯t_{n_r}`, the class of
//! `S^{2n₁} × ⋯ × S^{2n_r}` with `ξ⁽ⁿ¹⁾ ⊠ ⋯ ⊠ ξ⁽ⁿʳ⁾`. Elements may mix
//! degrees. Torsion in the integral bordism groups is not modelled.
//!
//! A homogeneous element of degree `2n` is determined by its
//! characteristic numbers at the `p′(n)` ch-monomials of weight `n`; the
//! passage back to the t-basis is a lower-triangular solve against
//! [`CharMatrix`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::charnum::{ch_monomial_number, CharMatrix};
use crate::kclass::VirtualClass;
use crate::partitions::{self, Partition};
use crate::{Error, Result, Scalar};

#[derive(Clone, PartialEq, Debug)]
pub struct BordismElement<S> {
    coeffs: BTreeMap<Partition, S>,
}

impl<S: Scalar> Default for BordismElement<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> BordismElement<S> {
    pub fn zero() -> Self {
        BordismElement { coeffs: BTreeMap::new() }
    }

    /// The class of a point, `1 ∈ Ω⁰ ⊗ ℚ`.
    pub fn one() -> Self {
        Self::monomial(Partition::empty())
    }

    pub fn monomial(p: Partition) -> Self {
        Self::from_terms([(p, S::one())])
    }

    /// The generator `tₙ = [S^{2n}, ξ⁽ⁿ⁾]`.
    pub fn t(n: u32) -> Result<Self> {
        Ok(Self::monomial(Partition::single(n)?))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, S)>) -> Self {
        let mut out = Self::zero();
        for (p, c) in terms {
            out.accumulate(p, c);
        }
        out
    }

    fn accumulate(&mut self, p: Partition, c: S) {
        if c.is_zero() {
            return;
        }
        let sum = match self.coeffs.remove(&p) {
            Some(prev) => prev + c,
            None => c,
        };
        if !sum.is_zero() {
            self.coeffs.insert(p, sum);
        }
    }

    pub fn coeff(&self, p: &Partition) -> S {
        self.coeffs.get(p).cloned().unwrap_or_else(S::zero)
    }

    /// Terms ordered by degree, then by the canonical partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &S)> + '_ {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The degree-`2n` component.
    pub fn homogeneous_component(&self, n: u32) -> Self {
        BordismElement {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(p, _)| p.weight() == n)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    /// Weights `n` (half-degrees) with a nonzero component, ascending.
    pub fn weights(&self) -> Vec<u32> {
        let mut ws: Vec<u32> = self.coeffs.keys().map(Partition::weight).collect();
        ws.dedup();
        ws
    }

    pub fn scale(&self, q: &S) -> Self {
        Self::from_terms(self.coeffs.iter().map(|(p, c)| (p.clone(), c.clone() * q.clone())))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in &other.coeffs {
            out.accumulate(p.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        BordismElement {
            coeffs: self.coeffs.iter().map(|(p, c)| (p.clone(), -c.clone())).collect(),
        }
    }

    /// Product `[M, ξ] · [M′, ξ′] = [M × M′, ξ ⊠ ξ′]`; on monomials this
    /// concatenates partitions.
    pub fn multiply(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (p, a) in &self.coeffs {
            for (q, b) in &other.coeffs {
                out.accumulate(p.concat(q), a.clone() * b.clone());
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.multiply(self))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl<S: Scalar> $trait for &BordismElement<S> {
            type Output = BordismElement<S>;
            fn $method(self, rhs: Self) -> BordismElement<S> {
                BordismElement::$inner(self, rhs)
            }
        }

        impl<S: Scalar> $trait for BordismElement<S> {
            type Output = BordismElement<S>;
            fn $method(self, rhs: Self) -> BordismElement<S> {
                BordismElement::$inner(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, add);
forward_binop!(Sub, sub, sub);
forward_binop!(Mul, mul, multiply);

impl<S: Scalar> Neg for &BordismElement<S> {
    type Output = BordismElement<S>;
    fn neg(self) -> BordismElement<S> {
        BordismElement::neg(self)
    }
}

impl<S: Scalar> Neg for BordismElement<S> {
    type Output = BordismElement<S>;
    fn neg(self) -> BordismElement<S> {
        BordismElement::neg(&self)
    }
}

/// Renders as `-1/2*t6 + 3*t2^2*t4`, lower degrees first; zero is `0`.
impl<S: Scalar + fmt::Display> fmt::Display for BordismElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (p, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let mono = monomial_name(p);
            match (mono.is_empty(), c.is_one()) {
                (true, _) => write!(f, "{c}")?,
                (false, true) => f.write_str(&mono)?,
                (false, false) => write!(f, "{c}*{mono}")?,
            }
        }
        Ok(())
    }
}

/// `t2^2*t4` for the partition `(2, 2, 4)`; empty for the unit.
pub fn monomial_name(p: &Partition) -> String {
    p.multiplicities()
        .into_iter()
        .map(|(v, k)| if k == 1 { format!("t{v}") } else { format!("t{v}^{k}") })
        .collect::<Vec<_>>()
        .join("*")
}

/// Characteristic numbers at every ch-monomial of weight `n`, keyed by the
/// partitions of `n`.
#[derive(Clone, PartialEq, Debug)]
pub struct CharVector<S> {
    n: u32,
    values: BTreeMap<Partition, S>,
}

impl<S: Scalar> CharVector<S> {
    /// Requires the key set to be exactly the partitions of `n`.
    pub fn new(n: u32, values: BTreeMap<Partition, S>) -> Result<Self> {
        let expected = partitions::enumerate(n);
        if values.len() != expected.len() || !expected.iter().all(|p| values.contains_key(p)) {
            let missing: Vec<String> =
                expected.iter().filter(|p| !values.contains_key(p)).map(|p| format!("{p:?}")).collect();
            let extra: Vec<String> =
                values.keys().filter(|p| p.weight() != n).map(|p| format!("{p:?}")).collect();
            return Err(Error::MalformedCharVector {
                n,
                detail: format!("missing [{}], unexpected [{}]", missing.join(", "), extra.join(", ")),
            });
        }
        Ok(CharVector { n, values })
    }

    pub fn zeros(n: u32) -> Self {
        CharVector {
            n,
            values: partitions::enumerate(n).into_iter().map(|p| (p, S::zero())).collect(),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn get(&self, m: &Partition) -> Option<&S> {
        self.values.get(m)
    }

    /// Values in canonical partition order.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &S)> + '_ {
        self.values.iter()
    }
}

/// Characteristic numbers of the degree-`2n` component of `e`.
pub fn char_vector<S: Scalar>(e: &BordismElement<S>, n: u32) -> CharVector<S> {
    let mat = CharMatrix::new(n);
    let col_coeffs: Vec<S> = mat.order().iter().map(|p| e.coeff(p)).collect();
    let values = mat
        .order()
        .iter()
        .enumerate()
        .map(|(row, m)| {
            let v = col_coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .fold(S::zero(), |acc, (col, c)| acc + c.clone() * S::from_bigint(mat.entry(row, col)));
            (m.clone(), v)
        })
        .collect();
    CharVector { n, values }
}

/// The unique degree-`2n` element with the given characteristic numbers.
pub fn from_char_vector<S: Scalar>(v: &CharVector<S>) -> BordismElement<S> {
    let mat = CharMatrix::new(v.n);
    // Row i of the lower-triangular system: Σ_{j ≤ i} M[i][j]·c_j = v_i.
    let mut solution: Vec<S> = Vec::with_capacity(mat.size());
    for (i, m) in mat.order().iter().enumerate() {
        let mut rhs = v.values[m].clone();
        for (j, c) in solution.iter().enumerate() {
            let entry = mat.entry(i, j);
            if !entry.is_zero() && !c.is_zero() {
                rhs = rhs - S::from_bigint(entry) * c.clone();
            }
        }
        solution.push(rhs / S::from_bigint(mat.entry(i, i)));
    }
    BordismElement::from_terms(mat.order().iter().cloned().zip(solution))
}

/// Characteristic numbers of a unit class on a sphere product of weight
/// `n`: `⟨ch_{m₁}⋯ch_{m_s}(c), [X]⟩` for each partition `m` of `n`.
pub fn char_vector_of_class<S: Scalar>(c: &VirtualClass<S>) -> Result<CharVector<S>> {
    if !c.is_unit_class() {
        return Err(Error::NotUnitClass(format!("{:?}", c.virtual_dimension())));
    }
    let n = c.base().weight();
    let values = partitions::enumerate(n)
        .into_iter()
        .map(|m| ch_monomial_number(c.ch(), &m).map(|x| (m, x)))
        .collect::<Result<_>>()?;
    Ok(CharVector { n, values })
}

/// The bordism class `[X, c]` of a unit class on a sphere product.
pub fn bordism_class_of<S: Scalar>(c: &VirtualClass<S>) -> Result<BordismElement<S>> {
    Ok(from_char_vector(&char_vector_of_class(c)?))
}

/// Rank of `Ω^d ⊗ ℚ`: zero in odd degrees, `p′(d/2)` in even ones.
pub fn rank(d: u32) -> u64 {
    if d % 2 == 1 {
        0
    } else {
        partitions::p_prime(d / 2)
    }
}
