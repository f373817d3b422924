//! Characteristic numbers
//! `⟨ch_{m₁}⋯ch_{m_s}(ξ⁽ⁿ¹⁾ ⊠ ⋯ ⊠ ξ⁽ⁿʳ⁾), [S^{2n₁} × ⋯ × S^{2n_r}]⟩`
//! and the square matrix they form over the partitions of `n`.
//!
//! Since `ch(ξ⁽ⁿ¹⁾ ⊠ ⋯ ⊠ ξ⁽ⁿʳ⁾) = Π (1 + ι_i)`, the component `ch_m` is the
//! sum of all `ι_S` with `Σ_{i∈S} nᵢ = m`. Multiplying `s` such components
//! and reading off the top class counts the ways to assign every factor to
//! one of the `s` blocks so that block `j` sums to `m_j`. Blocks are
//! labelled even when parts of `m` coincide, since they are distinct
//! factors of the product. That count is [`characteristic_number`];
//! [`characteristic_number_symbolic`] performs the cohomology expansion.
//!
//! A nonzero entry forces `ν` to refine `m`, so in the canonical order the
//! matrix is lower triangular with diagonal `Π (multiplicity)!`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::cohomology::{CohClass, SphereProduct};
use crate::partitions::{self, Partition};
use crate::{Error, Rational, Result, Scalar};

/// `ch(ξ⁽ⁿ¹⁾ ⊠ ⋯ ⊠ ξ⁽ⁿʳ⁾) = (1 + ι₁) ⊗ ⋯ ⊗ (1 + ι_r)` on `S^{2n₁} × ⋯`.
pub fn ch_boxtimes_generators<S: Scalar>(nu: &Partition) -> Result<CohClass<S>> {
    let base = SphereProduct::new(nu.parts().to_vec())?;
    (0..base.factors()).try_fold(CohClass::unit(&base), |acc, i| {
        let factor = CohClass::unit(&base).add(&CohClass::generator(&base, i)?)?;
        acc.multiply(&factor)
    })
}

/// `⟨ch_{m₁}⋯ch_{m_s}(c), [X]⟩` for an arbitrary class on a sphere product.
pub fn ch_monomial_number<S: Scalar>(ch: &CohClass<S>, m: &Partition) -> Result<S> {
    let mut product = CohClass::unit(ch.base());
    for &part in m.parts() {
        product = product.multiply(&ch.graded_component(2 * part))?;
        if product.is_zero() {
            return Ok(S::zero());
        }
    }
    Ok(product.pair_fundamental())
}

/// Characteristic number of `m` on the product of generators indexed by
/// `nu`, by counting labelled block assignments.
pub fn characteristic_number(m: &Partition, nu: &Partition) -> Result<BigInt> {
    if m.weight() != nu.weight() {
        return Err(Error::WeightMismatch { left: m.weight(), right: nu.weight() });
    }
    if nu.len() < m.len() {
        return Ok(BigInt::zero());
    }
    let items: Vec<u32> = nu.parts().iter().rev().copied().collect();
    let mut memo = HashMap::new();
    Ok(count_assignments(&items, m.parts().to_vec(), &mut memo))
}

// Number of ways to drop `items` into labelled blocks with the given
// leftover capacities so that every block ends exactly full. The count is
// invariant under permuting blocks, so the memo key sorts capacities.
fn count_assignments(
    items: &[u32],
    remaining: Vec<u32>,
    memo: &mut HashMap<(usize, Vec<u32>), BigInt>,
) -> BigInt {
    let Some((&item, rest)) = items.split_first() else {
        return if remaining.iter().all(|&r| r == 0) { BigInt::one() } else { BigInt::zero() };
    };
    let left: u32 = items.iter().sum();
    let cap: u32 = remaining.iter().sum();
    if left != cap {
        return BigInt::zero();
    }
    let mut key_caps = remaining.clone();
    key_caps.sort_unstable();
    let key = (items.len(), key_caps);
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let mut total = BigInt::zero();
    for b in 0..remaining.len() {
        if remaining[b] < item {
            continue;
        }
        let mut next = remaining.clone();
        next[b] -= item;
        total += count_assignments(rest, next, memo);
    }
    memo.insert(key, total.clone());
    total
}

/// The same number, by expanding `Π_j ch_{m_j}` in the cohomology ring of
/// the sphere product and pairing with the fundamental class.
pub fn characteristic_number_symbolic(m: &Partition, nu: &Partition) -> Result<Rational> {
    if m.weight() != nu.weight() {
        return Err(Error::WeightMismatch { left: m.weight(), right: nu.weight() });
    }
    ch_monomial_number(&ch_boxtimes_generators::<Rational>(nu)?, m)
}

/// `Π (multiplicity of v in p)!` over distinct part values `v`.
pub fn multiplicity_factorial_product(p: &Partition) -> BigInt {
    p.multiplicities()
        .into_iter()
        .map(|(_, mult)| (1..=mult as u64).map(BigInt::from).product::<BigInt>())
        .product()
}

/// Square matrix of characteristic numbers over the partitions of `n`:
/// `entries[row][col] = characteristic_number(order[row], order[col])`,
/// so rows are ch-monomials and columns are sphere products.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CharMatrix {
    n: u32,
    order: Vec<Partition>,
    entries: Vec<Vec<BigInt>>,
}

impl CharMatrix {
    /// The matrix in the canonical order. `n = 0` gives `[[1]]` and `n = 1`
    /// the empty matrix.
    pub fn new(n: u32) -> Self {
        Self::build(n, partitions::enumerate(n))
    }

    /// The matrix in a caller-supplied ordering of the partitions of `n`.
    pub fn with_order(n: u32, order: Vec<Partition>) -> Result<Self> {
        let mut sorted = order.clone();
        sorted.sort();
        if sorted != partitions::enumerate(n) {
            return Err(Error::MalformedCharVector {
                n,
                detail: "order is not a permutation of the partitions of n".into(),
            });
        }
        Ok(Self::build(n, order))
    }

    fn build(n: u32, order: Vec<Partition>) -> Self {
        let entries = order
            .iter()
            .map(|m| {
                order
                    .iter()
                    .map(|nu| characteristic_number(m, nu).expect("equal weights"))
                    .collect()
            })
            .collect();
        CharMatrix { n, order, entries }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn order(&self) -> &[Partition] {
        &self.order
    }

    pub fn size(&self) -> usize {
        self.order.len()
    }

    pub fn entries(&self) -> &[Vec<BigInt>] {
        &self.entries
    }

    pub fn entry(&self, row: usize, col: usize) -> &BigInt {
        &self.entries[row][col]
    }

    /// Overwrites one entry. Only useful for exercising the verifier.
    pub fn set_entry(&mut self, row: usize, col: usize, value: BigInt) {
        self.entries[row][col] = value;
    }

    pub fn is_lower_triangular(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(i, row)| row[i + 1..].iter().all(Zero::is_zero))
    }

    pub fn diagonal_product(&self) -> BigInt {
        (0..self.size()).map(|i| self.entries[i][i].clone()).product()
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        determinant(&self.entries)
    }
}

/// Bareiss determinant of a square integer matrix.
pub fn determinant(rows: &[Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// `|det|` is independent of the order; convenience for callers that only
/// need nonsingularity.
pub fn is_nonsingular(mat: &CharMatrix) -> bool {
    !mat.determinant().abs().is_zero()
}
