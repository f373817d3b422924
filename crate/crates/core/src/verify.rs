//! Self-check suite behind the `verify` subcommand.
//!
//! Each check rebuilds the characteristic-number matrices up to `max_n`
//! and compares them with an independent route: the cohomology expansion
//! for individual entries, the refinement relation for the zero pattern,
//! the multiplicity-factorial formula for the diagonal and determinant.
//! Ring laws, basis round-trips and K-class group laws run on seeded
//! pseudo-random inputs.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::charnum::{characteristic_number_symbolic, multiplicity_factorial_product, CharMatrix};
use crate::cohomology::SphereProduct;
use crate::partitions::{self, Partition};
use crate::{bordism, BordismElement, CohClass, Error, Rational, Result, VirtualClass};

/// Largest `n` accepted by [`run`].
pub const MAX_VERIFY_N: u32 = 16;

#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    pub max_n: u32,
    pub seed: u64,
    /// Adds one to the entry `(m, ν)` of the matrix of weight `|m|` before
    /// checking, as a negative control.
    pub corrupt: Option<(Partition, Partition)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct VerifyReport {
    pub checks: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn record(&mut self, name: &str, outcome: std::result::Result<String, String>) {
        let (passed, detail) = match outcome {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        self.checks.push(CheckOutcome { name: name.to_string(), passed, detail });
    }
}

pub fn run(opts: &VerifyOptions) -> Result<VerifyReport> {
    if opts.max_n > MAX_VERIFY_N {
        return Err(Error::Parse(format!("max-n {} exceeds the cap {MAX_VERIFY_N}", opts.max_n)));
    }
    let mut matrices: Vec<CharMatrix> = (2..=opts.max_n).map(CharMatrix::new).collect();
    if let Some((m, nu)) = &opts.corrupt {
        if m.weight() != nu.weight() {
            return Err(Error::WeightMismatch { left: m.weight(), right: nu.weight() });
        }
        let Some(mat) = matrices.iter_mut().find(|mat| mat.n() == m.weight()) else {
            return Err(Error::Parse(format!("entry {m:?}, {nu:?} lies outside 2..={}", opts.max_n)));
        };
        let row = partitions::index_of(mat.order(), m).expect("m is a partition of n");
        let col = partitions::index_of(mat.order(), nu).expect("nu is a partition of n");
        let bumped = mat.entry(row, col) + BigInt::one();
        mat.set_entry(row, col, bumped);
    }

    let mut report = VerifyReport::default();
    report.record("oracle equivalence", check_oracle(&matrices));
    report.record("vanishing iff refinement", check_refinement_pattern(&matrices));
    report.record("lower triangular, diagonal = prod mult!", check_triangular(&matrices));
    report.record("determinant formula", check_determinant(&matrices));
    let mut rng = StdRng::seed_from_u64(opts.seed);
    report.record("ring laws", check_ring_laws(&mut rng, opts.max_n));
    report.record("basis round-trip", check_round_trip(&mut rng, opts.max_n));
    report.record("K-class group laws", check_group_laws(&mut rng));
    Ok(report)
}

fn pairs(mat: &CharMatrix) -> impl Iterator<Item = (usize, usize)> {
    let size = mat.size();
    (0..size).flat_map(move |i| (0..size).map(move |j| (i, j)))
}

fn check_oracle(matrices: &[CharMatrix]) -> std::result::Result<String, String> {
    let mut count = 0;
    for mat in matrices {
        for (i, j) in pairs(mat) {
            let (m, nu) = (&mat.order()[i], &mat.order()[j]);
            let symbolic = characteristic_number_symbolic(m, nu).map_err(|e| e.to_string())?;
            if symbolic != Rational::from_integer(mat.entry(i, j).clone()) {
                return Err(format!(
                    "m={m:?} nu={nu:?}: fast count {} but expansion gives {symbolic}",
                    mat.entry(i, j)
                ));
            }
            count += 1;
        }
    }
    Ok(format!("{count} entries agree"))
}

fn check_refinement_pattern(matrices: &[CharMatrix]) -> std::result::Result<String, String> {
    for mat in matrices {
        for (i, j) in pairs(mat) {
            let (m, nu) = (&mat.order()[i], &mat.order()[j]);
            let entry = mat.entry(i, j);
            if entry.is_negative() || (entry.is_positive() != nu.refines(m)) {
                return Err(format!("m={m:?} nu={nu:?}: entry {entry}, refines={}", nu.refines(m)));
            }
        }
    }
    Ok("nonzero exactly on refinements".into())
}

fn check_triangular(matrices: &[CharMatrix]) -> std::result::Result<String, String> {
    for mat in matrices {
        for (i, j) in pairs(mat) {
            let (m, nu) = (&mat.order()[i], &mat.order()[j]);
            let entry = mat.entry(i, j);
            if j > i && !entry.is_zero() {
                return Err(format!("n={}: m={m:?} nu={nu:?} above diagonal is {entry}", mat.n()));
            }
            if i == j && *entry != multiplicity_factorial_product(m) {
                return Err(format!(
                    "n={}: diagonal at {m:?} is {entry}, expected {}",
                    mat.n(),
                    multiplicity_factorial_product(m)
                ));
            }
        }
    }
    Ok(format!("{} matrices", matrices.len()))
}

fn check_determinant(matrices: &[CharMatrix]) -> std::result::Result<String, String> {
    for mat in matrices {
        let expected: BigInt = mat.order().iter().map(multiplicity_factorial_product).product();
        let det = mat.determinant();
        if det != expected || !det.is_positive() {
            return Err(format!("n={}: det {det}, expected {expected}", mat.n()));
        }
    }
    Ok("det = prod over partitions of prod mult!".into())
}

/// Random element with small integer coefficients on partitions of the
/// given weights.
pub fn random_element<R: Rng>(rng: &mut R, weights: &[u32], max_terms: usize) -> BordismElement {
    let mut terms = Vec::new();
    for &w in weights {
        let parts = partitions::enumerate(w);
        if parts.is_empty() {
            continue;
        }
        for _ in 0..rng.gen_range(0..=max_terms) {
            let p = parts[rng.gen_range(0..parts.len())].clone();
            terms.push((p, Rational::from_integer(rng.gen_range(-5i64..=5).into())));
        }
    }
    BordismElement::from_terms(terms)
}

fn check_ring_laws<R: Rng>(rng: &mut R, max_n: u32) -> std::result::Result<String, String> {
    let top = max_n.max(2);
    let one = BordismElement::one();
    for trial in 0..50 {
        let pick = |rng: &mut R| {
            let ws: Vec<u32> = (0..2).map(|_| rng.gen_range(0..=top)).collect();
            random_element(rng, &ws, 3)
        };
        let (a, b, c) = (pick(rng), pick(rng), pick(rng));
        let laws = [
            ("associativity", &(&a * &b) * &c == &a * &(&b * &c)),
            ("commutativity", &a * &b == &b * &a),
            ("distributivity", &a * &(&b + &c) == &(&a * &b) + &(&a * &c)),
            ("unit", &a * &one == a),
            ("additive inverse", (&a - &a).is_zero()),
        ];
        if let Some((law, _)) = laws.iter().find(|(_, ok)| !ok) {
            return Err(format!("{law} fails on trial {trial}: a={a}, b={b}, c={c}"));
        }
    }
    Ok("50 random triples".into())
}

fn check_round_trip<R: Rng>(rng: &mut R, max_n: u32) -> std::result::Result<String, String> {
    let mut count = 0;
    for n in 2..=max_n {
        for _ in 0..10 {
            let e = random_element(rng, &[n], 4);
            let v = bordism::char_vector(&e, n);
            let back = bordism::from_char_vector(&v);
            if back != e {
                return Err(format!("n={n}: {e} came back as {back}"));
            }
            if bordism::char_vector(&back, n) != v {
                return Err(format!("n={n}: char vector of {e} not reproduced"));
            }
            count += 1;
        }
    }
    Ok(format!("{count} elements"))
}

/// Random unit class `1 + Σ c_S ι_S` on a product of spheres.
pub fn random_unit_class<R: Rng>(rng: &mut R, degrees: &[u32]) -> VirtualClass {
    let base = SphereProduct::new(degrees.to_vec()).expect("valid degrees");
    let terms = (1..=base.top()).map(|set| {
        let num: i64 = rng.gen_range(-6..=6);
        let den: i64 = rng.gen_range(1..=4);
        (set, Rational::new(num.into(), den.into()))
    });
    let ch = CohClass::from_terms(&base, std::iter::once((0, Rational::one())).chain(terms))
        .expect("subsets within base");
    VirtualClass::from_ch(ch).expect("no degree-2 classes on these bases")
}

fn check_group_laws<R: Rng>(rng: &mut R) -> std::result::Result<String, String> {
    for trial in 0..100 {
        let r = rng.gen_range(0..=3);
        let degrees: Vec<u32> = (0..r).map(|_| rng.gen_range(2..=5)).collect();
        let a = random_unit_class(rng, &degrees);
        let b = random_unit_class(rng, &degrees);
        let unit = VirtualClass::unit(a.base());
        let inv = a.inverse().map_err(|e| e.to_string())?;
        let checks = [
            ("inverse", a.tensor(&inv).ok() == Some(unit.clone())),
            ("commutativity", a.tensor(&b).ok() == b.tensor(&a).ok()),
            (
                "power additivity",
                a.power(3).ok() == a.power(-2).and_then(|x| x.tensor(&a.power(5)?)).ok(),
            ),
        ];
        if let Some((law, _)) = checks.iter().find(|(_, ok)| !ok) {
            return Err(format!("{law} fails on trial {trial} over {degrees:?}"));
        }
    }
    Ok("100 random unit classes".into())
}
