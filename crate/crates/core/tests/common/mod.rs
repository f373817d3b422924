//! Independent oracles shared by the integration tests. Nothing here goes
//! through the library's counting or solving code.

#![allow(dead_code)]

use bordism_core::partitions::Partition;

/// Characteristic number by brute force: try every function from factor
/// indices to block labels and count those whose block sums match `m`.
pub fn brute_force_charnum(m: &[u32], nu: &[u32]) -> u64 {
    let (r, s) = (nu.len(), m.len());
    if s == 0 {
        return u64::from(r == 0);
    }
    let total = (s as u64).pow(r as u32);
    let mut count = 0;
    for code in 0..total {
        let mut sums = vec![0u32; s];
        let mut c = code;
        for &n in nu {
            sums[(c % s as u64) as usize] += n;
            c /= s as u64;
        }
        if sums == m {
            count += 1;
        }
    }
    count
}

/// Coefficients of `Π_{k≥2} 1/(1 − x^k)` up to `x^max`, by multiplying
/// out geometric series one factor at a time.
pub fn generating_function(max: usize) -> Vec<u64> {
    let mut coeffs = vec![0u64; max + 1];
    coeffs[0] = 1;
    for k in 2..=max {
        let mut next = vec![0u64; max + 1];
        for (i, &c) in coeffs.iter().enumerate() {
            let mut j = i;
            while j <= max {
                next[j] += c;
                j += k;
            }
        }
        coeffs = next;
    }
    coeffs
}

/// All partitions of `n` into parts `≥ 2`, by filtering every composition.
pub fn brute_force_partitions(n: u32) -> Vec<Vec<u32>> {
    fn rec(left: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            let mut p = acc.clone();
            p.sort_unstable();
            if !out.contains(&p) {
                out.push(p);
            }
            return;
        }
        for part in 2..=left {
            acc.push(part);
            rec(left - part, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

/// Refinement by trying every assignment of parts to blocks.
pub fn brute_force_refines(fine: &[u32], coarse: &[u32]) -> bool {
    let mut sorted = coarse.to_vec();
    sorted.sort_unstable();
    let (r, s) = (fine.len(), coarse.len());
    if s == 0 {
        return r == 0;
    }
    (0..(s as u64).pow(r as u32)).any(|code| {
        let mut sums = vec![0u32; s];
        let mut c = code;
        for &p in fine {
            sums[(c % s as u64) as usize] += p;
            c /= s as u64;
        }
        sums.sort_unstable();
        sums == sorted
    })
}

pub fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

pub fn factorial(n: u64) -> u64 {
    (1..=n).product()
}
