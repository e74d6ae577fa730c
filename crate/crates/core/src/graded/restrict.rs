//! Veronese-type subrings `A_σ = ⊕_{a∈σ} A_a` and `A_T = ⊕_{a∈T} A_a`.
//!
//! The subring is generated by monomials whose degree lies in `σ` (resp.
//! `T`). We enumerate those up to a generator-count bound, keep the
//! indecomposable ones, and add the smallest semigroup multiples of the
//! extreme rays of the restricted exponent cone so that the result has the
//! correct cone even when the bound is small. The output is marked as
//! truncated with that bound.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{GradedRingSpec, MAX_GENERATORS};
use crate::error::RingError;
use crate::poly::matrix::{rank, solve};
use crate::poly::vector::{add, is_zero, scale, to_rat, IntVec};
use crate::poly::RationalCone;

/// Largest multiple tried when lifting an extreme ray into the subring.
const RAY_MULTIPLE_LIMIT: usize = 256;

pub fn restrict_to_cone(
    ring: &GradedRingSpec,
    sigma: &RationalCone,
    bound: usize,
) -> Result<GradedRingSpec, RingError> {
    crate::poly::vector::check_len(sigma.ambient_dim(), ring.n())?;
    let g = ring.grading_map();
    let pull = |b: &IntVec| -> Result<IntVec, RingError> { Ok(g.transpose().mul_vec(b)?) };
    let k = ring.exponent_cone();
    let mut normals: Vec<IntVec> = k.facets().to_vec();
    let mut eqs: Vec<IntVec> = k.equations().to_vec();
    for f in sigma.facets() {
        normals.push(pull(f)?);
    }
    for e in sigma.equations() {
        eqs.push(pull(e)?);
    }
    let k_prime = RationalCone::from_constraints(&normals, &eqs, ring.ambient_rank())?;
    let in_sigma = |d: &IntVec| sigma.contains_int(d).unwrap_or(false);
    restrict_by(ring, &in_sigma, &k_prime, bound)
}

pub fn restrict_to_subgroup(
    ring: &GradedRingSpec,
    basis: &[IntVec],
    bound: usize,
) -> Result<GradedRingSpec, RingError> {
    let n = ring.n();
    if basis.len() != n || basis.iter().any(|b| b.len() != n) || rank(basis, n) != n {
        return Err(RingError::BadSublattice { n });
    }
    // rows of the system B c = d, with the basis vectors as columns of B
    let rows: Vec<_> = (0..n)
        .map(|i| basis.iter().map(|b| b[i].clone().into()).collect())
        .collect();
    let in_t = |d: &IntVec| {
        solve(&rows, &to_rat(d), n)
            .map(|c| c.iter().all(|x| x.is_integer()))
            .unwrap_or(false)
    };
    restrict_by(ring, &in_t, ring.exponent_cone(), bound)
}

fn restrict_by(
    ring: &GradedRingSpec,
    keep: &dyn Fn(&IntVec) -> bool,
    k_prime: &RationalCone,
    bound: usize,
) -> Result<GradedRingSpec, RingError> {
    let big_n = ring.ambient_rank();
    let mut elements: BTreeSet<IntVec> = BTreeSet::new();
    let mut frontier = vec![vec![BigInt::zero(); big_n]];
    let mut seen: BTreeSet<IntVec> = frontier.iter().cloned().collect();
    for _ in 0..bound {
        let mut next = Vec::new();
        for e in &frontier {
            for alpha in ring.exponents() {
                let e2 = add(e, alpha);
                if seen.insert(e2.clone()) {
                    next.push(e2);
                }
            }
        }
        frontier = next;
    }
    for e in seen {
        if !is_zero(&e) && keep(&ring.degree_of(&e)?) {
            elements.insert(e);
        }
    }
    let mut gens: Vec<IntVec> = elements
        .iter()
        .filter(|u| {
            !elements.iter().any(|g| {
                *g != **u && {
                    let rest: IntVec = u.iter().zip(g).map(|(x, y)| x - y).collect();
                    elements.contains(&rest)
                }
            })
        })
        .cloned()
        .collect();
    for ray in k_prime.rays() {
        let lifted = (1..=RAY_MULTIPLE_LIMIT)
            .map(|m| scale(ray, &BigInt::from(m)))
            .find(|v| ring.semigroup_contains(v) && ring.degree_of(v).map(|d| keep(&d)).unwrap_or(false));
        match lifted {
            Some(v) => {
                if !gens.contains(&v) {
                    log::debug!("adding ray multiple {v:?} beyond the enumeration bound");
                    gens.push(v);
                }
            }
            None => {
                return Err(RingError::RestrictionFailed {
                    ray: ray.clone(),
                    limit: RAY_MULTIPLE_LIMIT,
                })
            }
        }
    }
    if gens.len() > MAX_GENERATORS {
        return Err(RingError::TooManyGenerators {
            found: gens.len(),
            max: MAX_GENERATORS,
        });
    }
    gens.sort();
    let names = gens
        .iter()
        .map(|e| ring.format_monomial(&super::Monomial::new(e.clone())))
        .collect();
    GradedRingSpec::semigroup_with_truncation(
        gens,
        ring.grading_map().clone(),
        None,
        names,
        ring.ambient_names().to_vec(),
        Some(bound),
    )
}
