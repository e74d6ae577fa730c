//! Multi-section rings `R(X; D_1, …, D_n)` of Q-divisors on complete toric
//! varieties.

mod classgroup;
mod roundtrip;

use std::collections::BTreeMap;

use log::debug;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::ToricError;
use crate::poly::lp::{maximize, LinearConstraint, LpOutcome, Relation};
use crate::poly::matrix::rank;
use crate::poly::vector::{ceil, floor, gcd_of, is_zero, IntVec, Rat};
use crate::poly::RationalCone;

pub use classgroup::{
    AMPLE_SEARCH_RADIUS, class_group, find_ample_combination, height_one_prime_data, is_factorial, AmpleCertificate,
    ClassGroupData, FactorialCertificate, HeightOnePrimeData, HeightOneReport,
};
pub use roundtrip::{demazure_roundtrip, direct_monomial_count, RoundTripReport};

/// A fan in `R^d`: primitive rays and maximal cones given as ray-index lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricVarietySpec {
    d: usize,
    rays: Vec<IntVec>,
    maximal: Vec<Vec<usize>>,
    cones: Vec<RationalCone>,
    complete: bool,
}

impl ToricVarietySpec {
    /// Validates the fan and reports every problem found, not only the first.
    pub fn new(d: usize, rays: Vec<IntVec>, maximal: Vec<Vec<usize>>) -> Result<Self, ToricError> {
        let mut problems = Vec::new();
        for (i, v) in rays.iter().enumerate() {
            if v.len() != d {
                problems.push(format!("ray {i} has length {}, expected {d}", v.len()));
            } else if is_zero(v) {
                problems.push(format!("ray {i} is zero"));
            } else if !gcd_of(v).is_one() {
                problems.push(format!("ray {i} is not primitive"));
            }
        }
        for i in 0..rays.len() {
            for j in i + 1..rays.len() {
                if rays[i] == rays[j] {
                    problems.push(format!("rays {i} and {j} coincide"));
                }
            }
        }
        for (c, idx) in maximal.iter().enumerate() {
            for &i in idx {
                if i >= rays.len() {
                    problems.push(format!("cone {c} lists ray {i}, but there are {} rays", rays.len()));
                }
            }
        }
        if !problems.is_empty() {
            return Err(ToricError::InvalidFan(problems));
        }

        let mut maximal: Vec<Vec<usize>> = maximal
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c.dedup();
                c
            })
            .collect();
        maximal.sort();
        let mut cones = Vec::with_capacity(maximal.len());
        for (c, idx) in maximal.iter().enumerate() {
            let gens: Vec<IntVec> = idx.iter().map(|&i| rays[i].clone()).collect();
            let cone = RationalCone::from_generators(&gens, d)?;
            if !cone.is_pointed() {
                problems.push(format!("cone {c} is not strongly convex"));
            } else {
                for &i in idx {
                    if !cone.rays().contains(&rays[i]) {
                        problems.push(format!("ray {i} is not an extreme ray of cone {c}"));
                    }
                }
            }
            cones.push(cone);
        }
        for i in 0..cones.len() {
            for j in i + 1..cones.len() {
                if cones[i] == cones[j] {
                    problems.push(format!("cones {i} and {j} coincide"));
                    continue;
                }
                let meet = cones[i].intersect(&cones[j])?;
                let common: Vec<IntVec> = maximal[i]
                    .iter()
                    .filter(|k| maximal[j].contains(k))
                    .map(|&k| rays[k].clone())
                    .collect();
                let expected = RationalCone::from_generators(&common, d)?;
                if meet != expected || !meet.is_face_of(&cones[i])? || !meet.is_face_of(&cones[j])? {
                    problems.push(format!("cones {i} and {j} do not meet in a common face"));
                }
            }
        }
        for i in 0..rays.len() {
            if !maximal.iter().any(|c| c.contains(&i)) {
                problems.push(format!("ray {i} lies in no maximal cone"));
            }
        }
        if !problems.is_empty() {
            return Err(ToricError::InvalidFan(problems));
        }
        let complete = is_complete(d, &cones);
        debug!("fan in R^{d}: {} rays, {} maximal cones, complete = {complete}", rays.len(), cones.len());
        Ok(Self {
            d,
            rays,
            maximal,
            cones,
            complete,
        })
    }

    pub fn from_i64(d: usize, rays: &[&[i64]], maximal: &[&[usize]]) -> Result<Self, ToricError> {
        Self::new(
            d,
            rays.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(),
            maximal.iter().map(|c| c.to_vec()).collect(),
        )
    }

    /// `P^1`: rays `1` and `-1`.
    pub fn projective_line() -> Self {
        Self::from_i64(1, &[&[1], &[-1]], &[&[0], &[1]]).expect("valid fan")
    }

    /// `P^d`: rays `e_1, …, e_d, -(e_1 + … + e_d)`.
    pub fn projective_space(d: usize) -> Self {
        let mut rays: Vec<IntVec> = (0..d)
            .map(|i| (0..d).map(|j| BigInt::from(i64::from(i == j))).collect())
            .collect();
        rays.push(vec![BigInt::from(-1); d]);
        let maximal = (0..=d).map(|skip| (0..=d).filter(|&i| i != skip).collect()).collect();
        Self::new(d, rays, maximal).expect("valid fan")
    }

    /// `P^1 × P^1`: rays `(1,0), (-1,0), (0,1), (0,-1)`.
    pub fn p1_times_p1() -> Self {
        Self::from_i64(
            2,
            &[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]],
            &[&[0, 2], &[0, 3], &[1, 2], &[1, 3]],
        )
        .expect("valid fan")
    }

    pub fn lattice_rank(&self) -> usize {
        self.d
    }

    pub fn rays(&self) -> &[IntVec] {
        &self.rays
    }

    pub fn maximal_cones(&self) -> &[Vec<usize>] {
        &self.maximal
    }

    pub fn cones(&self) -> &[RationalCone] {
        &self.cones
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Whether every maximal cone is generated by part of a lattice basis.
    pub fn is_smooth(&self) -> bool {
        self.maximal.iter().all(|idx| {
            let gens: Vec<IntVec> = idx.iter().map(|&i| self.rays[i].clone()).collect();
            if gens.len() != self.d || rank(&gens, self.d) != self.d {
                return false;
            }
            let m = crate::poly::IntMatrix::from_rows(&gens, self.d).expect("lengths checked");
            m.determinant().map(|det| det.abs().is_one()).unwrap_or(false)
        })
    }

    /// Names `P^d` or `P^1 x P^1` when the fan is one of them up to `GL_d(Z)`.
    pub fn identify(&self) -> Option<String> {
        if !self.complete || !self.is_smooth() {
            return None;
        }
        let d = self.d;
        let sum = self.rays.iter().fold(vec![BigInt::zero(); d], |acc, r| crate::poly::vector::add(&acc, r));
        if self.rays.len() == d + 1 && is_zero(&sum) && self.maximal.len() == d + 1 {
            return Some(if d == 1 { "P^1".into() } else { format!("P^{d}") });
        }
        if d == 2 && self.rays.len() == 4 && self.maximal.len() == 4 {
            let opposite = |i: usize| {
                self.rays
                    .iter()
                    .position(|r| *r == crate::poly::vector::neg(&self.rays[i]))
            };
            if (0..4).all(|i| opposite(i).is_some()) {
                return Some("P^1 x P^1".into());
            }
        }
        None
    }
}

/// A pure full-dimensional fan is complete iff every facet lies in exactly
/// two maximal cones.
fn is_complete(d: usize, cones: &[RationalCone]) -> bool {
    if d == 0 {
        return true;
    }
    if cones.is_empty() || cones.iter().any(|c| c.dim() != d) {
        return false;
    }
    let mut facets: BTreeMap<RationalCone, usize> = BTreeMap::new();
    for c in cones {
        for face in c.face_lattice() {
            if face.dim + 1 == d {
                *facets.entry(face.cone).or_default() += 1;
            }
        }
    }
    facets.values().all(|&k| k == 2)
}

/// A Q-divisor `Σ_F m_F F` on the torus-invariant primes, one coefficient per ray.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QDivisor {
    coefficients: Vec<Rat>,
}

impl QDivisor {
    pub fn new(coefficients: Vec<Rat>) -> Self {
        Self { coefficients }
    }

    pub fn from_fractions(pairs: &[(i64, i64)]) -> Self {
        Self::new(pairs.iter().map(|&(p, q)| Rat::new(p.into(), q.into())).collect())
    }

    pub fn coefficients(&self) -> &[Rat] {
        &self.coefficients
    }

    /// Numerator `p_F` of the reduced coefficient.
    pub fn numerator(&self, f: usize) -> BigInt {
        self.coefficients[f].numer().clone()
    }

    /// Denominator `q_F` of the reduced coefficient; `1` when the coefficient is zero.
    pub fn denominator(&self, f: usize) -> BigInt {
        self.coefficients[f].denom().clone()
    }

    pub fn is_integral(&self) -> bool {
        self.coefficients.iter().all(|c| c.is_integer())
    }
}

/// `R(X; D_1, …, D_n)` for a complete toric `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiSectionRingSpec {
    variety: ToricVarietySpec,
    divisors: Vec<QDivisor>,
    q: Vec<BigInt>,
}

impl MultiSectionRingSpec {
    pub fn new(variety: ToricVarietySpec, divisors: Vec<QDivisor>) -> Result<Self, ToricError> {
        let mut problems = Vec::new();
        if divisors.is_empty() {
            problems.push("at least one divisor is required".to_string());
        }
        for (i, div) in divisors.iter().enumerate() {
            if div.coefficients.len() != variety.rays.len() {
                problems.push(format!(
                    "divisor {i} has {} coefficients, expected one per ray ({})",
                    div.coefficients.len(),
                    variety.rays.len()
                ));
            }
        }
        if !variety.complete {
            problems.push("the fan is not complete".to_string());
        }
        if !problems.is_empty() {
            return Err(ToricError::InvalidDivisors(problems));
        }
        let q = (0..variety.rays.len())
            .map(|f| {
                divisors
                    .iter()
                    .fold(BigInt::one(), |acc, div| acc.lcm(&div.denominator(f)))
            })
            .collect();
        Ok(Self {
            variety,
            divisors,
            q,
        })
    }

    pub fn variety(&self) -> &ToricVarietySpec {
        &self.variety
    }

    pub fn divisors(&self) -> &[QDivisor] {
        &self.divisors
    }

    pub fn n(&self) -> usize {
        self.divisors.len()
    }

    /// `q_F`: lcm over `i` of the denominators of `m_{i,F}`.
    pub fn q(&self) -> &[BigInt] {
        &self.q
    }

    /// `m_{i,F}`.
    pub fn coefficient(&self, i: usize, f: usize) -> &Rat {
        &self.divisors[i].coefficients[f]
    }

    /// Rays with some nonzero coefficient, in order.
    pub fn relevant_rays(&self) -> Vec<usize> {
        (0..self.variety.rays.len())
            .filter(|&f| self.divisors.iter().any(|d| !d.coefficients[f].is_zero()))
            .collect()
    }

    /// `Σ_i r_i m_{i,F}` for every ray.
    pub fn combined_coefficients(&self, r: &[BigInt]) -> Result<Vec<Rat>, ToricError> {
        if r.len() != self.n() {
            return Err(ToricError::InvalidDivisors(vec![format!(
                "degree has length {}, expected {}",
                r.len(),
                self.n()
            )]));
        }
        Ok((0..self.variety.rays.len())
            .map(|f| {
                r.iter()
                    .zip(&self.divisors)
                    .fold(Rat::zero(), |acc, (ri, div)| acc + Rat::from(ri.clone()) * &div.coefficients[f])
            })
            .collect())
    }

    /// The same divisors scaled by `k`.
    pub fn scaled(&self, k: i64) -> Result<Self, ToricError> {
        let k = Rat::from(BigInt::from(k));
        let divisors = self
            .divisors
            .iter()
            .map(|d| QDivisor::new(d.coefficients.iter().map(|c| c * &k).collect()))
            .collect();
        Self::new(self.variety.clone(), divisors)
    }
}

/// `dim H^0(X, O(Σ r_i D_i))`: lattice points `u` with `⟨u, v_F⟩ ≥ -Σ r_i m_{i,F}` for all `F`.
pub fn graded_piece_dim(spec: &MultiSectionRingSpec, r: &[BigInt]) -> Result<u64, ToricError> {
    let b = spec.combined_coefficients(r)?;
    let bounds: Vec<BigInt> = b.iter().map(|x| -floor(x)).collect();
    count_points(&spec.variety.rays, &bounds, spec.variety.d).map_err(|()| ToricError::UnboundedPolytope(r.to_vec()))
}

pub fn graded_piece_dim_i64(spec: &MultiSectionRingSpec, r: &[i64]) -> Result<u64, ToricError> {
    let r: Vec<BigInt> = r.iter().map(|&x| BigInt::from(x)).collect();
    graded_piece_dim(spec, &r)
}

/// The piece of `R(X;D)_τ`: the multi-section ring piece when `r ∈ τ`, zero otherwise.
pub fn restricted_graded_piece_dim(
    spec: &MultiSectionRingSpec,
    tau: &RationalCone,
    r: &[BigInt],
) -> Result<u64, ToricError> {
    if tau.contains_int(r)? {
        graded_piece_dim(spec, r)
    } else {
        Ok(0)
    }
}

/// Counts `u ∈ Z^d` with `⟨u, v_F⟩ ≥ c_F`; `Err` when the polytope is unbounded.
fn count_points(rays: &[IntVec], bounds: &[BigInt], d: usize) -> Result<u64, ()> {
    let constraints: Vec<LinearConstraint> = rays
        .iter()
        .zip(bounds)
        .map(|(v, c)| {
            LinearConstraint::new(
                v.iter().map(|x| Rat::from(x.clone())).collect(),
                Relation::Ge,
                Rat::from(c.clone()),
            )
        })
        .collect();
    let mut lo = Vec::with_capacity(d);
    let mut hi = Vec::with_capacity(d);
    for k in 0..d {
        let mut e = vec![Rat::zero(); d];
        e[k] = Rat::one();
        let up = match maximize(&e, &constraints, d) {
            LpOutcome::Optimal { value, .. } => floor(&value),
            LpOutcome::Infeasible => return Ok(0),
            LpOutcome::Unbounded => return Err(()),
        };
        e[k] = -Rat::one();
        let down = match maximize(&e, &constraints, d) {
            LpOutcome::Optimal { value, .. } => ceil(&-value),
            LpOutcome::Infeasible => return Ok(0),
            LpOutcome::Unbounded => return Err(()),
        };
        if down > up {
            return Ok(0);
        }
        lo.push(down.to_i64().ok_or(())?);
        hi.push(up.to_i64().ok_or(())?);
    }
    let rays: Vec<Vec<i64>> = rays
        .iter()
        .map(|v| v.iter().map(|x| x.to_i64().expect("small ray")).collect())
        .collect();
    let bounds: Vec<i64> = bounds.iter().map(|c| c.to_i64().expect("small bound")).collect();
    let mut u = lo.clone();
    let mut count = 0u64;
    walk(0, &mut u, &lo, &hi, &rays, &bounds, &mut count);
    Ok(count)
}

fn walk(k: usize, u: &mut Vec<i64>, lo: &[i64], hi: &[i64], rays: &[Vec<i64>], bounds: &[i64], count: &mut u64) {
    if k == u.len() {
        let ok = rays
            .iter()
            .zip(bounds)
            .all(|(v, &c)| v.iter().zip(u.iter()).map(|(a, b)| a * b).sum::<i64>() >= c);
        if ok {
            *count += 1;
        }
        return;
    }
    for x in lo[k]..=hi[k] {
        u[k] = x;
        walk(k + 1, u, lo, hi, rays, bounds, count);
    }
}


#[cfg(test)]
mod tests {
    use super::*;

    fn half_p1xp1() -> MultiSectionRingSpec {
        MultiSectionRingSpec::new(
            ToricVarietySpec::p1_times_p1(),
            vec![
                QDivisor::from_fractions(&[(1, 2), (0, 1), (0, 1), (0, 1)]),
                QDivisor::from_fractions(&[(0, 1), (0, 1), (1, 2), (0, 1)]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn standard_fans_are_complete_and_named() {
        assert_eq!(ToricVarietySpec::projective_line().identify().as_deref(), Some("P^1"));
        assert_eq!(ToricVarietySpec::projective_space(2).identify().as_deref(), Some("P^2"));
        assert_eq!(ToricVarietySpec::p1_times_p1().identify().as_deref(), Some("P^1 x P^1"));
        assert!(ToricVarietySpec::projective_space(3).is_complete());
    }

    #[test]
    fn incomplete_and_invalid_fans() {
        let affine = ToricVarietySpec::from_i64(2, &[&[1, 0], &[0, 1]], &[&[0, 1]]).unwrap();
        assert!(!affine.is_complete());
        let err = ToricVarietySpec::from_i64(2, &[&[2, 0], &[0, 0], &[1, 0]], &[&[0, 5]]).unwrap_err();
        let ToricError::InvalidFan(problems) = err else { panic!() };
        assert_eq!(problems.len(), 3);
        let overlap =
            ToricVarietySpec::from_i64(2, &[&[1, 0], &[0, 1], &[1, 1]], &[&[0, 1], &[0, 2]]).unwrap_err();
        assert!(matches!(overlap, ToricError::InvalidFan(_)));
        let bad = MultiSectionRingSpec::new(affine, vec![QDivisor::from_fractions(&[(1, 1)])]).unwrap_err();
        let ToricError::InvalidDivisors(problems) = bad else { panic!() };
        assert_eq!(problems.len(), 2);
    }

    #[test]
    fn half_rulings_on_p1xp1() {
        let spec = half_p1xp1();
        assert_eq!(spec.q(), &[BigInt::from(2), BigInt::one(), BigInt::from(2), BigInt::one()]);
        assert_eq!(graded_piece_dim_i64(&spec, &[2, 2]).unwrap(), 4);
        assert_eq!(graded_piece_dim_i64(&spec, &[0, 0]).unwrap(), 1);
        for r1 in -3..=7i64 {
            for r2 in -3..=7i64 {
                let expected = if r1 < 0 || r2 < 0 { 0 } else { ((r1 / 2 + 1) * (r2 / 2 + 1)) as u64 };
                assert_eq!(graded_piece_dim_i64(&spec, &[r1, r2]).unwrap(), expected, "r = ({r1},{r2})");
            }
        }
    }

    #[test]
    fn point_on_p1() {
        let spec = MultiSectionRingSpec::new(
            ToricVarietySpec::projective_line(),
            vec![QDivisor::from_fractions(&[(1, 1), (0, 1)])],
        )
        .unwrap();
        assert_eq!(graded_piece_dim_i64(&spec, &[-1]).unwrap(), 0);
        assert_eq!(graded_piece_dim_i64(&spec, &[3]).unwrap(), 4);
    }

    #[test]
    fn p2_sections() {
        let spec = MultiSectionRingSpec::new(
            ToricVarietySpec::projective_space(2),
            vec![QDivisor::from_fractions(&[(0, 1), (0, 1), (1, 1)])],
        )
        .unwrap();
        for k in 0..6u64 {
            assert_eq!(graded_piece_dim_i64(&spec, &[k as i64]).unwrap(), (k + 1) * (k + 2) / 2);
        }
    }

    #[test]
    fn restricted_pieces_vanish_outside() {
        let spec = half_p1xp1();
        let tau = RationalCone::from_i64_generators(&[&[1, 0], &[1, 1]], 2).unwrap();
        let r = |a: i64, b: i64| vec![BigInt::from(a), BigInt::from(b)];
        assert_eq!(restricted_graded_piece_dim(&spec, &tau, &r(2, 2)).unwrap(), 4);
        assert_eq!(restricted_graded_piece_dim(&spec, &tau, &r(2, 3)).unwrap(), 0);
    }

    #[test]
    fn coefficient_denominators() {
        let spec = MultiSectionRingSpec::new(
            ToricVarietySpec::projective_line(),
            vec![QDivisor::from_fractions(&[(1, 3), (0, 1)]), QDivisor::from_fractions(&[(0, 1), (5, 1)])],
        )
        .unwrap();
        assert_eq!(spec.q(), &[BigInt::from(3), BigInt::one()]);
        assert_eq!(spec.divisors()[0].numerator(0), BigInt::one());
        assert!(spec.divisors()[1].is_integral());
        assert_eq!(spec.relevant_rays(), vec![0, 1]);
    }
}
