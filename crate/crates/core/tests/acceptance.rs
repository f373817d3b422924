//! Acceptance criteria. Runs as a plain binary so every criterion prints a
//! PASS/FAIL line regardless of output capture; exits nonzero on failure.

mod common;

use std::time::{Duration, Instant};

use bordism_core::bordism::{bordism_class_of, char_vector, from_char_vector, rank};
use bordism_core::charnum::{characteristic_number, characteristic_number_symbolic, multiplicity_factorial_product, CharMatrix};
use bordism_core::cohomology::SphereProduct;
use bordism_core::kclass::{bezout, reconstruct_unit, reconstruct_unit_with};
use bordism_core::partitions::{enumerate, p_prime};
use bordism_core::verify::{random_element, random_unit_class};
use bordism_core::{BigInt, BordismElement, CohClass, GrassmannPair, Rational, VirtualClass};
use common::{generating_function, p};
use num_traits::Signed;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn t(n: u32) -> BordismElement {
    BordismElement::t(n).unwrap()
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || format!("took {elapsed:?}, limit {limit:?}"))
}

/// char_matrix(6) reproduces the worked example exactly, in < 1 s.
fn golden_table() -> Outcome {
    let start = Instant::now();
    let mat = CharMatrix::new(6);
    let det = mat.determinant();
    let elapsed = start.elapsed();
    let order = vec![p(&[2, 2, 2]), p(&[3, 3]), p(&[2, 4]), p(&[6])];
    ensure(mat.order() == order.as_slice(), || format!("order {:?}", mat.order()))?;
    let expected: Vec<Vec<BigInt>> = [[6, 0, 0, 0], [0, 2, 0, 0], [3, 0, 1, 0], [1, 1, 1, 1]]
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    ensure(mat.entries() == expected.as_slice(), || format!("entries {:?}", mat.entries()))?;
    ensure(det == BigInt::from(12), || format!("det {det}"))?;
    within(elapsed, Duration::from_secs(1))?;
    Ok(format!("det 12 in {elapsed:.2?}"))
}

/// Fast count = symbolic expansion for all pairs with n ≤ 12, in < 60 s.
fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut pairs = 0;
    for n in 0..=12 {
        let order = enumerate(n);
        for m in &order {
            for nu in &order {
                let fast = characteristic_number(m, nu).map_err(|e| e.to_string())?;
                let sym = characteristic_number_symbolic(m, nu).map_err(|e| e.to_string())?;
                ensure(Rational::from_integer(fast.clone()) == sym, || {
                    format!("m={m:?} nu={nu:?}: fast {fast}, symbolic {sym}")
                })?;
                pairs += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(60))?;
    Ok(format!("{pairs} pairs in {elapsed:.2?}"))
}

/// Lower triangular, diagonal = Π mult!, det = diagonal product > 0, n ≤ 16, < 2 min.
fn structure_theorem() -> Outcome {
    let start = Instant::now();
    for n in 2..=16 {
        let mat = CharMatrix::new(n);
        ensure(mat.is_lower_triangular(), || format!("n={n} not lower triangular"))?;
        for (i, part) in mat.order().iter().enumerate() {
            let want = multiplicity_factorial_product(part);
            ensure(*mat.entry(i, i) == want, || format!("n={n} diagonal at {part:?}: {} vs {want}", mat.entry(i, i)))?;
        }
        let det = mat.determinant();
        let diag = mat.diagonal_product();
        ensure(det == diag && det.is_positive(), || format!("n={n}: det {det}, diagonal product {diag}"))?;
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(120))?;
    Ok(format!("n = 2..=16 in {elapsed:.2?}"))
}

/// from_char_vector(char_vector(e)) = e for 100 random integer elements per degree 2n, n ∈ [2, 10].
fn basis_round_trip() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0xB0D15);
    let mut count = 0;
    for n in 2..=10 {
        for _ in 0..100 {
            let e = random_element(&mut rng, &[n], 5);
            let back = from_char_vector(&char_vector(&e, n));
            ensure(back == e, || format!("n={n}: {e} -> {back}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} elements"))
}

/// 1000 random unit classes, r ≤ 3, nᵢ ≤ 5: exact inverses, power additivity,
/// ch(ξ⁽ⁿ⁾ᵏ) = 1 + k·ιₙ.
fn group_laws() -> Outcome {
    let mut rng = StdRng::seed_from_u64(7);
    for trial in 0..1000 {
        let r = rng.gen_range(0..=3);
        let degrees: Vec<u32> = (0..r).map(|_| rng.gen_range(2..=5)).collect();
        let a = random_unit_class(&mut rng, &degrees);
        let one = VirtualClass::unit(a.base());
        let inv = a.inverse().map_err(|e| e.to_string())?;
        ensure(a.tensor(&inv).unwrap() == one, || format!("trial {trial}: a * a^-1 != 1 on {degrees:?}"))?;
        let (j, k) = (rng.gen_range(-4..=4), rng.gen_range(-4..=4));
        let lhs = a.power(j + k).unwrap();
        let rhs = a.power(j).unwrap().tensor(&a.power(k).unwrap()).unwrap();
        ensure(lhs == rhs, || format!("trial {trial}: power({j}+{k}) mismatch"))?;
    }
    for n in 2..=8 {
        let g = VirtualClass::generator_bundle(n).unwrap();
        let base = SphereProduct::new(vec![n]).unwrap();
        for k in -10..=10 {
            let want = CohClass::unit(&base).add(&CohClass::generator(&base, 0).unwrap().scale(&q(k))).unwrap();
            ensure(g.power(k).unwrap().ch() == &want, || format!("ch of power({n}, {k})"))?;
        }
    }
    Ok("1000 classes; ch(xi^k) = 1 + k iota for n <= 8, |k| <= 10".into())
}

/// [S²ⁿ, ξ⁽ⁿ⁾] = tₙ, [S²ⁿ, ξ⁽ⁿ⁾ᵏ] = k·tₙ and power transfer across ⊠ factors.
fn bordism_bridge() -> Outcome {
    for n in 2..=8 {
        let g = VirtualClass::generator_bundle(n).unwrap();
        let got = bordism_class_of(&g).map_err(|e| e.to_string())?;
        ensure(got == t(n), || format!("class of xi^({n}) is {got}"))?;
        for k in -5..=5 {
            let got = bordism_class_of(&g.power(k).unwrap()).unwrap();
            ensure(got == t(n).scale(&q(k)), || format!("class of xi^({n})^{k} is {got}"))?;
        }
    }
    let mut checked = 0;
    for m in 2..=5 {
        for n in 2..=5 {
            let (gm, gn) = (VirtualClass::generator_bundle(m).unwrap(), VirtualClass::generator_bundle(n).unwrap());
            for k in -5..=5 {
                let want = (&t(m) * &t(n)).scale(&q(k));
                let left = bordism_class_of(&gm.power(k).unwrap().exterior(&gn).unwrap()).unwrap();
                let right = bordism_class_of(&gm.exterior(&gn.power(k).unwrap()).unwrap()).unwrap();
                ensure(left == want && right == want, || {
                    format!("transfer m={m} n={n} k={k}: {left} / {right}, want {want}")
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("generators n <= 8, powers |k| <= 5, {checked} transfer cases"))
}

/// rank(2n) = p′(n) for n ≤ 20 against the generating function; odd ranks vanish;
/// thom_facts((5,7), 12).rank = 4.
fn rank_tables() -> Outcome {
    let gf = generating_function(20);
    for n in 0..=20u32 {
        ensure(rank(2 * n) == gf[n as usize] && p_prime(n) == gf[n as usize], || {
            format!("rank({}) = {}, series gives {}", 2 * n, rank(2 * n), gf[n as usize])
        })?;
        ensure(rank(2 * n + 1) == 0, || format!("rank({}) != 0", 2 * n + 1))?;
    }
    let facts = GrassmannPair::new(5, 7).unwrap().thom_facts(12);
    ensure(facts.rank == Some(4), || format!("thom_facts((5,7),12) = {facts:?}"))?;
    Ok("n <= 20; (5,7), d=12 -> rank 4".into())
}

/// reconstruct_unit(k, m, k·c, m·c) = c for 200 random coprime (k, m) ≤ 50; two Bézout
/// pairs agree.
fn bezout_reconstruction() -> Outcome {
    let mut rng = StdRng::seed_from_u64(42);
    let mut done = 0;
    while done < 200 {
        let (k, m) = (rng.gen_range(1..=50i64), rng.gen_range(1..=50i64));
        if num_integer::gcd(k, m) != 1 {
            continue;
        }
        let r = rng.gen_range(0..=3);
        let degrees: Vec<u32> = (0..r).map(|_| rng.gen_range(2..=5)).collect();
        let c = random_unit_class(&mut rng, &degrees);
        let (xi_k, xi_m) = (c.multiple(k), c.multiple(m));
        let got = reconstruct_unit(k, m, &xi_k, &xi_m).map_err(|e| e.to_string())?;
        ensure(got == c, || format!("(k, m) = ({k}, {m}) did not recover c"))?;
        let (u, v) = bezout(k, m).unwrap();
        let alt = reconstruct_unit_with(k, m, (u + m, v - k), &xi_k, &xi_m).map_err(|e| e.to_string())?;
        ensure(alt == got, || format!("(k, m) = ({k}, {m}): Bezout pairs disagree"))?;
        done += 1;
    }
    Ok("200 coprime pairs".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("golden table n=6", golden_table),
        ("oracle equivalence n<=12", oracle_equivalence),
        ("structure theorem n<=16", structure_theorem),
        ("basis round-trip n in [2,10]", basis_round_trip),
        ("K-class group laws", group_laws),
        ("bordism bridge", bordism_bridge),
        ("rank tables", rank_tables),
        ("Bezout reconstruction", bezout_reconstruction),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name}: {detail}");
            }
        }
    }
    println!("{} of {} acceptance criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
