//! Membership in the affine semigroup generated by the exponent vectors.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{GradedRingSpec, RingKind};
use crate::poly::vector::{dot, is_zero, IntVec};

/// Upper bound on the number of generators in any representation of `v`.
pub(crate) fn search_bound(ring: &GradedRingSpec, v: &[BigInt]) -> BigInt {
    dot(ring.exponent_functional(), v).max(BigInt::zero())
}

/// Coefficients `c ≥ 0` with `Σ cᵢ αᵢ = v`, if any. Exhaustive: every
/// representation uses at most `ω·v` generators for the stored functional ω.
pub(crate) fn representation(ring: &GradedRingSpec, v: &[BigInt]) -> Option<IntVec> {
    if v.len() != ring.ambient_rank() {
        return None;
    }
    if ring.kind() == RingKind::Polynomial {
        return (!v.iter().any(Signed::is_negative)).then(|| v.to_vec());
    }
    let weights: Vec<BigInt> = ring
        .exponents()
        .iter()
        .map(|a| dot(ring.exponent_functional(), a))
        .collect();
    let mut coeffs = vec![BigInt::zero(); ring.num_generators()];
    let mut dead = HashSet::new();
    search(ring, &weights, v.to_vec(), 0, &mut coeffs, &mut dead).then_some(coeffs)
}

fn search(
    ring: &GradedRingSpec,
    weights: &[BigInt],
    rest: IntVec,
    start: usize,
    coeffs: &mut [BigInt],
    dead: &mut HashSet<(usize, IntVec)>,
) -> bool {
    if is_zero(&rest) {
        return true;
    }
    if start == coeffs.len() || dead.contains(&(start, rest.clone())) {
        return false;
    }
    let budget = dot(ring.exponent_functional(), &rest);
    if budget <= BigInt::zero() {
        return false;
    }
    let alpha = &ring.exponents()[start];
    let max_c = &budget / &weights[start];
    let mut c = max_c;
    while c >= BigInt::zero() {
        let next: IntVec = rest.iter().zip(alpha).map(|(r, a)| r - &c * a).collect();
        coeffs[start] = c.clone();
        if search(ring, weights, next, start + 1, coeffs, dead) {
            return true;
        }
        c -= 1;
    }
    coeffs[start] = BigInt::zero();
    dead.insert((start, rest));
    false
}
