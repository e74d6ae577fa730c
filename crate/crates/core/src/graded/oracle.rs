//! Brute-force radical membership, independent of cones and LP.
//!
//! `x^v ∈ J_a` iff some power `x^{mv}` (`m ≥ 1`) factors as
//! `x^g · x^h` with both factors in the ring and `deg g` on the open ray
//! through `a`. For polynomial rings the factor search is exhaustive (see
//! `polynomial_witness`); for semigroup rings powers and factors are
//! enumerated up to explicit bounds. Everything here runs on machine
//! integers over explicitly enumerated monomials.

use std::collections::{BTreeSet, HashMap, HashSet};

use num_traits::ToPrimitive;

use super::{GradedRingSpec, Monomial, RingKind};
use crate::poly::vector::{clear_denominators, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBounds {
    /// Monomials are enumerated up to this many generator factors.
    pub monomial_bound: usize,
    /// Largest power `m` tried.
    pub power_bound: usize,
}

impl OracleBounds {
    pub fn uniform(bound: usize) -> Self {
        Self {
            monomial_bound: bound,
            power_bound: bound,
        }
    }
}

struct Small {
    kind: RingKind,
    degrees: Vec<Vec<i64>>,
    exponents: Vec<Vec<i64>>,
    ray: Vec<i64>,
}

fn small(ring: &GradedRingSpec, a: &[Rat]) -> Small {
    let conv = |v: &[num_bigint::BigInt]| -> Vec<i64> {
        v.iter()
            .map(|x| x.to_i64().expect("oracle inputs must fit in 64 bits"))
            .collect()
    };
    Small {
        kind: ring.kind(),
        degrees: ring.degrees().iter().map(|d| conv(d)).collect(),
        exponents: ring.exponents().iter().map(|e| conv(e)).collect(),
        ray: conv(&clear_denominators(a)),
    }
}

impl Small {
    fn on_ray(&self, d: &[i64]) -> bool {
        if self.ray.iter().all(|x| *x == 0) {
            return d.iter().all(|x| *x == 0);
        }
        // d = t·a with t > 0: all 2x2 minors vanish and the dot product is positive
        let n = d.len();
        for i in 0..n {
            for j in i + 1..n {
                if d[i] * self.ray[j] != d[j] * self.ray[i] {
                    return false;
                }
            }
        }
        d.iter().zip(&self.ray).map(|(x, y)| x * y).sum::<i64>() > 0
    }

    /// Ambient elements `Σ cᵢαᵢ` with `Σ cᵢ ≤ size`, each with its degree.
    fn elements(&self, size: usize) -> Vec<(Vec<i64>, Vec<i64>)> {
        let dim = self.exponents.first().map_or(0, Vec::len);
        let n = self.ray.len();
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        let mut frontier = vec![(vec![0i64; dim], vec![0i64; n])];
        seen.insert(vec![0i64; dim]);
        out.push(frontier[0].clone());
        for _ in 0..size {
            let mut next = Vec::new();
            for (e, d) in &frontier {
                for (alpha, deg) in self.exponents.iter().zip(&self.degrees) {
                    let e2: Vec<i64> = e.iter().zip(alpha).map(|(x, y)| x + y).collect();
                    if seen.insert(e2.clone()) {
                        let d2: Vec<i64> = d.iter().zip(deg).map(|(x, y)| x + y).collect();
                        next.push((e2.clone(), d2.clone()));
                        out.push((e2, d2));
                    }
                }
            }
            frontier = next;
        }
        out
    }

    /// Polynomial rings: a nonzero `g` supported on `support` with
    /// `deg g ∈ R>0·a`, if one exists. Then `x^g` divides `x^{m·v}` for
    /// every `v` with that support and `m = max gᵢ`.
    ///
    /// Degrees are projected along `a` to `Z^d` (`d = n − 1`); `deg g` lies
    /// on the line through `a` iff the projected sum vanishes. A minimal
    /// zero-sum multiset can be ordered so that every partial sum stays in
    /// the box of radius `d·max‖pᵢ‖∞` (Steinitz), so walking all partial
    /// sums inside that box is exhaustive. Positivity of the grading makes
    /// all such `g` point to the same side of the line.
    fn polynomial_witness(&self, support: u64) -> Option<Vec<i64>> {
        let s = self.degrees.len();
        let idx: Vec<usize> = (0..s).filter(|i| support >> i & 1 == 1).collect();
        if self.ray.iter().all(|x| *x == 0) {
            return Some(vec![0; s]);
        }
        let f = self.orthogonal_functionals();
        let proj: Vec<Vec<i64>> = self
            .degrees
            .iter()
            .map(|d| f.iter().map(|fj| dot(fj, d)).collect())
            .collect();
        let height = |g: &[i64]| -> i64 {
            (0..s).map(|i| g[i] * dot(&self.ray, &self.degrees[i])).sum()
        };
        let radius = f.len().max(1) as i64
            * idx
                .iter()
                .flat_map(|&i| proj[i].iter().map(|x| x.abs()))
                .max()
                .unwrap_or(0);
        let origin = vec![0i64; f.len()];
        let mut parent: HashMap<Vec<i64>, (Vec<i64>, usize)> = HashMap::new();
        let mut queue = std::collections::VecDeque::from([origin.clone()]);
        let mut visited: HashSet<Vec<i64>> = HashSet::from([origin.clone()]);
        while let Some(state) = queue.pop_front() {
            for &i in &idx {
                let next: Vec<i64> = state.iter().zip(&proj[i]).map(|(x, y)| x + y).collect();
                if next == origin {
                    let mut g = vec![0i64; s];
                    g[i] += 1;
                    let mut cur = state.clone();
                    while cur != origin {
                        let (prev, j) = parent[&cur].clone();
                        g[j] += 1;
                        cur = prev;
                    }
                    return (height(&g) > 0).then_some(g);
                }
                if next.iter().any(|x| x.abs() > radius) || !visited.insert(next.clone()) {
                    continue;
                }
                parent.insert(next.clone(), (state.clone(), i));
                queue.push_back(next);
            }
        }
        None
    }

    /// Independent integer functionals vanishing on `a`, chosen among
    /// `aⱼ·eₖ − aₖ·eⱼ`.
    fn orthogonal_functionals(&self) -> Vec<Vec<i64>> {
        let n = self.ray.len();
        let mut chosen: Vec<Vec<i64>> = Vec::new();
        for j in 0..n {
            for k in j + 1..n {
                let mut f = vec![0i64; n];
                f[k] = self.ray[j];
                f[j] = -self.ray[k];
                if f.iter().all(|x| *x == 0) {
                    continue;
                }
                let mut trial = chosen.clone();
                trial.push(f.clone());
                if int_rank(&trial) == trial.len() {
                    chosen = trial;
                }
            }
        }
        chosen
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Rank by fraction-free elimination.
fn int_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|x| *x as i128).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c] != 0) else { continue };
        m.swap(rank, p);
        for r in 0..m.len() {
            if r != rank && m[r][c] != 0 {
                let (a, b) = (m[rank][c], m[r][c]);
                for k in 0..cols {
                    m[r][k] = m[r][k] * a - m[rank][k] * b;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn support_of(v: &[i64]) -> u64 {
    v.iter()
        .enumerate()
        .filter(|(_, x)| **x != 0)
        .fold(0, |m, (i, _)| m | 1 << i)
}

/// Decides `x^v ∈ J_a` by exhaustive factorization search.
pub fn oracle_contains(
    ring: &GradedRingSpec,
    m: &Monomial,
    a: &[Rat],
    bounds: OracleBounds,
) -> bool {
    let sm = small(ring, a);
    let v: Vec<i64> = m
        .exponents
        .iter()
        .map(|x| x.to_i64().expect("monomial exponent fits in 64 bits"))
        .collect();
    match sm.kind {
        RingKind::Polynomial => sm.polynomial_witness(support_of(&v)).is_some(),
        RingKind::Semigroup => {
            let elems = sm.elements(bounds.power_bound * bounds.monomial_bound);
            semigroup_test(&sm, &elems, &v, bounds.power_bound)
        }
    }
}

fn semigroup_test(sm: &Small, elems: &[(Vec<i64>, Vec<i64>)], v: &[i64], power: usize) -> bool {
    let members: HashSet<&Vec<i64>> = elems.iter().map(|(e, _)| e).collect();
    let zero_ray = sm.ray.iter().all(|x| *x == 0);
    if zero_ray {
        return true;
    }
    let candidates: Vec<&Vec<i64>> = elems
        .iter()
        .filter(|(e, d)| e.iter().any(|x| *x != 0) && sm.on_ray(d))
        .map(|(e, _)| e)
        .collect();
    (1..=power as i64).any(|m| {
        candidates.iter().any(|g| {
            let h: Vec<i64> = v.iter().zip(g.iter()).map(|(x, y)| m * x - y).collect();
            members.contains(&h)
        })
    })
}

/// All monomials with at most `bound` generator factors that the search
/// places in `J_a`, trying powers up to `bound`.
pub fn brute_force_ray_ideal(ring: &GradedRingSpec, a: &[Rat], bound: usize) -> BTreeSet<Monomial> {
    brute_force_with_bounds(ring, a, OracleBounds::uniform(bound))
}

pub fn brute_force_with_bounds(
    ring: &GradedRingSpec,
    a: &[Rat],
    bounds: OracleBounds,
) -> BTreeSet<Monomial> {
    let sm = small(ring, a);
    let to_mono = |e: &[i64]| Monomial::new(e.iter().map(|x| (*x).into()).collect());
    let monomials = match sm.kind {
        RingKind::Polynomial => {
            let s = sm.degrees.len();
            let mut out = Vec::new();
            let mut cur = vec![0i64; s];
            enumerate_bounded(&mut cur, 0, bounds.monomial_bound as i64, &mut out);
            out
        }
        RingKind::Semigroup => sm
            .elements(bounds.monomial_bound)
            .into_iter()
            .map(|(e, _)| e)
            .collect(),
    };
    let elems = match sm.kind {
        RingKind::Semigroup => sm.elements(bounds.power_bound * bounds.monomial_bound),
        RingKind::Polynomial => Vec::new(),
    };
    let mut by_support: HashMap<u64, bool> = HashMap::new();
    monomials
        .into_iter()
        .filter(|v| match sm.kind {
            RingKind::Polynomial => *by_support
                .entry(support_of(v))
                .or_insert_with(|| sm.polynomial_witness(support_of(v)).is_some()),
            RingKind::Semigroup => semigroup_test(&sm, &elems, v, bounds.power_bound),
        })
        .map(|v| to_mono(&v))
        .collect()
}

fn enumerate_bounded(cur: &mut Vec<i64>, i: usize, left: i64, out: &mut Vec<Vec<i64>>) {
    if i == cur.len() {
        out.push(cur.clone());
        return;
    }
    for k in 0..=left {
        cur[i] = k;
        enumerate_bounded(cur, i + 1, left - k, out);
    }
    cur[i] = 0;
}

