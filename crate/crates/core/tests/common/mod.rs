#![allow(dead_code)]

use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayfan::graded::GradedRingSpec;
use rayfan::poly::vector::{rat, IntVec, Rat, RatVec};

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

/// Random polynomial ring with `n ≤ max_n`, `s ≤ max_s` generators and
/// degree entries in `[-3, 3]`, retried until it passes positivity.
pub fn random_polynomial_ring(r: &mut ChaCha8Rng, max_n: usize, max_s: usize) -> GradedRingSpec {
    loop {
        let n = r.gen_range(1..=max_n);
        let s = r.gen_range(1..=max_s);
        let degrees: Vec<IntVec> = (0..s)
            .map(|_| (0..n).map(|_| BigInt::from(r.gen_range(-3i64..=3))).collect())
            .collect();
        if let Ok(ring) = GradedRingSpec::polynomial(degrees, n) {
            return ring;
        }
    }
}

/// Random polynomial ring in exactly `n` variables of degree.
pub fn random_ring_of_rank(r: &mut ChaCha8Rng, n: usize, max_s: usize) -> GradedRingSpec {
    loop {
        let s = r.gen_range(1..=max_s);
        let degrees: Vec<IntVec> = (0..s)
            .map(|_| (0..n).map(|_| BigInt::from(r.gen_range(-3i64..=3))).collect())
            .collect();
        if let Ok(ring) = GradedRingSpec::polynomial(degrees, n) {
            return ring;
        }
    }
}

/// Random rational with denominator at most 4.
pub fn small_rat(r: &mut ChaCha8Rng, max_num: i64) -> Rat {
    rat(r.gen_range(-max_num..=max_num), r.gen_range(1..=4))
}

/// Either a random nonnegative combination of some of the degrees
/// (coefficients in quarters) or a random rational vector.
pub fn random_point(r: &mut ChaCha8Rng, ring: &GradedRingSpec) -> RatVec {
    let n = ring.n();
    if r.gen_bool(0.7) {
        let mut p = vec![Rat::from_integer(0.into()); n];
        for d in ring.degrees() {
            let c = if r.gen_bool(0.5) { rat(0, 1) } else { rat(r.gen_range(1..=4), 4) };
            for (pi, di) in p.iter_mut().zip(d) {
                *pi += &c * Rat::from_integer(di.clone());
            }
        }
        p
    } else {
        (0..n).map(|_| small_rat(r, 3)).collect()
    }
}

/// All exponent vectors of length `s` with total degree at most `bound`.
pub fn monomials_up_to(s: usize, bound: i64) -> Vec<Vec<i64>> {
    fn go(cur: &mut Vec<i64>, i: usize, left: i64, out: &mut Vec<Vec<i64>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for k in 0..=left {
            cur[i] = k;
            go(cur, i + 1, left - k, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    go(&mut vec![0; s], 0, bound, &mut out);
    out
}
