//! Zⁿ-graded monomial rings and their ray ideals.
//!
//! A ring is presented either as a polynomial ring `k[x₁,…,x_s]` with
//! `deg xᵢ = aᵢ`, or as an affine semigroup ring generated by monomials
//! `t^{αᵢ}` (αᵢ ∈ Z^N) graded through an integer map `G: Z^N → Zⁿ`. In both
//! cases the ring has an *exponent cone* `K` (the orthant, resp.
//! `cone(αᵢ)`), and every ray ideal `J_a = √I_a` is a monomial ideal
//! determined by the set of faces `F` of `K` whose image `G(F)` (an orbit
//! cone) contains `a`: a monomial lies in `J_a` iff the minimal face of `K`
//! containing its exponent is such a member face.

mod oracle;
mod restrict;
mod semigroup;

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::RingError;
use crate::poly::lp::{lp_feasible, LinearConstraint, Relation};
use crate::poly::vector::{check_len, clear_denominators, dot, is_zero, to_rat, IntVec, Rat};
use crate::poly::{IntMatrix, RationalCone};

pub use oracle::{brute_force_ray_ideal, brute_force_with_bounds, oracle_contains, OracleBounds};
pub use restrict::{restrict_to_cone, restrict_to_subgroup};

/// Generators are tracked as bit masks.
pub const MAX_GENERATORS: usize = 64;
/// Polynomial rings enumerate all `2^s` coordinate faces.
pub const MAX_POLYNOMIAL_GENERATORS: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingKind {
    Polynomial,
    Semigroup,
}

/// Subset of generator indices.
pub type GenMask = u64;

pub fn mask_indices(mask: GenMask) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

pub fn mask_of(indices: &[usize]) -> GenMask {
    indices.iter().fold(0, |m, &i| m | 1 << i)
}

/// A face of the exponent cone together with its orbit cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentFace {
    /// Generators lying on the face.
    pub mask: GenMask,
    pub dim: usize,
    /// Image of the face under the grading map.
    pub orbit_cone: RationalCone,
}

#[derive(Debug, PartialEq, Eq)]
struct RingData {
    n: usize,
    kind: RingKind,
    degrees: Vec<IntVec>,
    exponents: Vec<IntVec>,
    ambient_rank: usize,
    grading_map: IntMatrix,
    names: Vec<String>,
    ambient_names: Vec<String>,
    exponent_cone: RationalCone,
    faces: Vec<ExponentFace>,
    weight_cone: RationalCone,
    /// Integer functional, at least one on every exponent vector.
    exponent_functional: IntVec,
    /// Integer functional, at least one on every degree.
    degree_functional: IntVec,
    truncation: Option<usize>,
}

/// Immutable, cheaply clonable handle to a graded ring presentation.
#[derive(Clone, Debug)]
pub struct GradedRingSpec(Arc<RingData>);

impl PartialEq for GradedRingSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.kind == other.0.kind
                && self.0.degrees == other.0.degrees
                && self.0.exponents == other.0.exponents
                && self.0.grading_map == other.0.grading_map)
    }
}

impl Eq for GradedRingSpec {}

fn default_names(prefix: &str, count: usize) -> Vec<String> {
    (1..=count).map(|i| format!("{prefix}{i}")).collect()
}

impl GradedRingSpec {
    /// Polynomial ring with `deg xᵢ = degrees[i]`.
    pub fn polynomial(degrees: Vec<IntVec>, n: usize) -> Result<Self, RingError> {
        let s = degrees.len();
        Self::polynomial_named(degrees, n, default_names("x", s))
    }

    pub fn polynomial_i64(degrees: &[&[i64]]) -> Result<Self, RingError> {
        let n = degrees.first().map_or(0, |d| d.len());
        let d = degrees
            .iter()
            .map(|r| crate::poly::vector::int_vec(r))
            .collect();
        Self::polynomial(d, n)
    }

    pub fn polynomial_named(
        degrees: Vec<IntVec>,
        n: usize,
        names: Vec<String>,
    ) -> Result<Self, RingError> {
        let s = degrees.len();
        if s > MAX_POLYNOMIAL_GENERATORS {
            return Err(RingError::TooManyGenerators {
                found: s,
                max: MAX_POLYNOMIAL_GENERATORS,
            });
        }
        for d in &degrees {
            check_len(d.len(), n)?;
        }
        let exponents: Vec<IntVec> = (0..s)
            .map(|i| {
                let mut e = vec![BigInt::zero(); s];
                e[i] = BigInt::one();
                e
            })
            .collect();
        let grading_map = IntMatrix::from_columns(&degrees, n)?;
        let ambient_names = names.clone();
        Self::build(
            RingKind::Polynomial,
            n,
            degrees,
            exponents,
            grading_map,
            names,
            ambient_names,
            None,
        )
    }

    /// Semigroup ring generated by `t^{exponents[i]}`, graded by
    /// `grading_map` (an `n × N` matrix).
    pub fn semigroup(
        exponents: Vec<IntVec>,
        grading_map: IntMatrix,
        degrees: Option<Vec<IntVec>>,
    ) -> Result<Self, RingError> {
        let s = exponents.len();
        let names = default_names("g", s);
        let ambient = default_names("t", grading_map.cols());
        Self::semigroup_named(exponents, grading_map, degrees, names, ambient)
    }

    pub fn semigroup_named(
        exponents: Vec<IntVec>,
        grading_map: IntMatrix,
        degrees: Option<Vec<IntVec>>,
        names: Vec<String>,
        ambient_names: Vec<String>,
    ) -> Result<Self, RingError> {
        Self::semigroup_with_truncation(exponents, grading_map, degrees, names, ambient_names, None)
    }

    pub(crate) fn semigroup_with_truncation(
        exponents: Vec<IntVec>,
        grading_map: IntMatrix,
        degrees: Option<Vec<IntVec>>,
        names: Vec<String>,
        ambient_names: Vec<String>,
        truncation: Option<usize>,
    ) -> Result<Self, RingError> {
        let n = grading_map.rows();
        let big_n = grading_map.cols();
        if exponents.len() > MAX_GENERATORS {
            return Err(RingError::TooManyGenerators {
                found: exponents.len(),
                max: MAX_GENERATORS,
            });
        }
        for (i, e) in exponents.iter().enumerate() {
            check_len(e.len(), big_n)?;
            if is_zero(e) {
                return Err(RingError::ZeroExponent { index: i });
            }
        }
        let computed: Vec<IntVec> = exponents
            .iter()
            .map(|e| grading_map.mul_vec(e))
            .collect::<Result<_, _>>()?;
        if let Some(declared) = degrees {
            if declared.len() != exponents.len() {
                return Err(RingError::Poly(crate::PolyError::DimensionMismatch {
                    expected: exponents.len(),
                    found: declared.len(),
                }));
            }
            for (i, (d, c)) in declared.iter().zip(&computed).enumerate() {
                check_len(d.len(), n)?;
                if d != c {
                    return Err(RingError::DegreeMismatch { index: i });
                }
            }
        }
        Self::build(
            RingKind::Semigroup,
            n,
            computed,
            exponents,
            grading_map,
            names,
            ambient_names,
            truncation,
        )
    }

    #[allow(clippy::too_many_arguments)]
    fn build(
        kind: RingKind,
        n: usize,
        degrees: Vec<IntVec>,
        exponents: Vec<IntVec>,
        grading_map: IntMatrix,
        names: Vec<String>,
        ambient_names: Vec<String>,
        truncation: Option<usize>,
    ) -> Result<Self, RingError> {
        let s = degrees.len();
        let big_n = grading_map.cols();
        if names.len() != s {
            return Err(RingError::BadNames {
                expected: s,
                found: names.len(),
            });
        }
        if ambient_names.len() != big_n {
            return Err(RingError::BadNames {
                expected: big_n,
                found: ambient_names.len(),
            });
        }
        let degree_functional = check_positivity(&degrees, n)?;
        let exponent_functional =
            positive_functional(&exponents, big_n).ok_or(RingError::ExponentConeNotPointed)?;
        let weight_cone = RationalCone::from_generators(&degrees, n)?;
        let (exponent_cone, faces) = match kind {
            RingKind::Polynomial => {
                let k = RationalCone::orthant(s);
                let mut faces = Vec::with_capacity(1 << s);
                for mask in 0..(1u64 << s) {
                    let gens: Vec<IntVec> = mask_indices(mask)
                        .into_iter()
                        .map(|i| degrees[i].clone())
                        .collect();
                    faces.push(ExponentFace {
                        mask,
                        dim: mask.count_ones() as usize,
                        orbit_cone: RationalCone::from_generators(&gens, n)?,
                    });
                }
                (k, faces)
            }
            RingKind::Semigroup => {
                let k = RationalCone::from_generators(&exponents, big_n)?;
                let mut faces = Vec::new();
                for f in k.face_lattice() {
                    let members: Vec<usize> = (0..s)
                        .filter(|&i| f.cone.contains_int(&exponents[i]).unwrap_or(false))
                        .collect();
                    let gens: Vec<IntVec> = members.iter().map(|&i| degrees[i].clone()).collect();
                    faces.push(ExponentFace {
                        mask: mask_of(&members),
                        dim: f.dim,
                        orbit_cone: RationalCone::from_generators(&gens, n)?,
                    });
                }
                faces.sort_by_key(|f| (f.dim, f.mask));
                (k, faces)
            }
        };
        Ok(Self(Arc::new(RingData {
            n,
            kind,
            degrees,
            exponents,
            ambient_rank: big_n,
            grading_map,
            names,
            ambient_names,
            exponent_cone,
            faces,
            weight_cone,
            exponent_functional,
            degree_functional,
            truncation,
        })))
    }

    pub fn n(&self) -> usize {
        self.0.n
    }

    pub fn kind(&self) -> RingKind {
        self.0.kind
    }

    pub fn num_generators(&self) -> usize {
        self.0.degrees.len()
    }

    pub fn degrees(&self) -> &[IntVec] {
        &self.0.degrees
    }

    pub fn exponents(&self) -> &[IntVec] {
        &self.0.exponents
    }

    pub fn ambient_rank(&self) -> usize {
        self.0.ambient_rank
    }

    pub fn grading_map(&self) -> &IntMatrix {
        &self.0.grading_map
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn ambient_names(&self) -> &[String] {
        &self.0.ambient_names
    }

    pub fn exponent_cone(&self) -> &RationalCone {
        &self.0.exponent_cone
    }

    pub fn faces(&self) -> &[ExponentFace] {
        &self.0.faces
    }

    pub fn degree_functional(&self) -> &[BigInt] {
        &self.0.degree_functional
    }

    pub fn exponent_functional(&self) -> &[BigInt] {
        &self.0.exponent_functional
    }

    /// Degree bound used when this ring was produced by a truncated restriction.
    pub fn truncation(&self) -> Option<usize> {
        self.0.truncation
    }

    /// The degree cone `C(A)`.
    pub fn weight_cone(&self) -> &RationalCone {
        &self.0.weight_cone
    }

    pub fn degree_of(&self, exponent: &[BigInt]) -> Result<IntVec, RingError> {
        Ok(self.0.grading_map.mul_vec(exponent)?)
    }

    fn all_mask(&self) -> GenMask {
        let s = self.num_generators();
        if s == 64 {
            u64::MAX
        } else {
            (1u64 << s) - 1
        }
    }

    /// `J_a`, computed by the orbit-cone face criterion.
    pub fn ray_ideal(&self, a: &[Rat]) -> Result<RayIdeal, RingError> {
        check_len(a.len(), self.n())?;
        let point = clear_denominators(a);
        let members: Vec<GenMask> = self
            .faces()
            .iter()
            .filter(|f| f.orbit_cone.contains_int(&point).unwrap_or(false))
            .map(|f| f.mask)
            .collect();
        Ok(RayIdeal::from_members(self.clone(), point, members))
    }

    pub fn ray_ideal_int(&self, a: &[BigInt]) -> Result<RayIdeal, RingError> {
        self.ray_ideal(&to_rat(a))
    }

    pub fn ray_ideal_i64(&self, a: &[i64]) -> Result<RayIdeal, RingError> {
        self.ray_ideal(&crate::poly::vector::rat_vec(a))
    }

    /// Generators lying on the smallest face of `K` that contains `m`.
    pub fn support_face(&self, m: &Monomial) -> Result<GenMask, RingError> {
        self.validate_monomial(m)?;
        match self.kind() {
            RingKind::Polynomial => Ok(mask_of(
                &(0..self.num_generators())
                    .filter(|&i| !m.exponents[i].is_zero())
                    .collect::<Vec<_>>(),
            )),
            RingKind::Semigroup => {
                let face = self.exponent_cone().minimal_face(&to_rat(&m.exponents))?;
                Ok(mask_of(
                    &(0..self.num_generators())
                        .filter(|&i| face.cone.contains_int(&self.exponents()[i]).unwrap_or(false))
                        .collect::<Vec<_>>(),
                ))
            }
        }
    }

    pub fn validate_monomial(&self, m: &Monomial) -> Result<(), RingError> {
        let len = match self.kind() {
            RingKind::Polynomial => self.num_generators(),
            RingKind::Semigroup => self.ambient_rank(),
        };
        if m.exponents.len() != len {
            return Err(RingError::InvalidMonomial(format!(
                "expected {len} exponents, found {}",
                m.exponents.len()
            )));
        }
        match self.kind() {
            RingKind::Polynomial => {
                if m.exponents.iter().any(Signed::is_negative) {
                    return Err(RingError::InvalidMonomial(
                        "negative exponent".to_string(),
                    ));
                }
            }
            RingKind::Semigroup => {
                if semigroup::representation(self, &m.exponents).is_none() {
                    return Err(RingError::InvalidMonomial(format!(
                        "{} is not in the semigroup (exhaustive search up to {} generators)",
                        self.format_monomial(m),
                        semigroup::search_bound(self, &m.exponents)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Whether an ambient exponent vector is a nonnegative integer
    /// combination of the generators (exact: the search is bounded by a
    /// positive functional).
    pub fn semigroup_contains(&self, exponent: &[BigInt]) -> bool {
        semigroup::representation(self, exponent).is_some()
    }

    /// Radical membership by the face criterion.
    pub fn monomial_in_ray_ideal(&self, m: &Monomial, a: &[Rat]) -> Result<bool, RingError> {
        let face = self.support_face(m)?;
        Ok(self.ray_ideal(a)?.contains_face(face))
    }

    /// Radical membership by linear programming: is there `q > 0` and
    /// `w ∈ K` with `deg w = q·a` and `exponents(m) − w ∈ K`?
    pub fn monomial_in_ray_ideal_lp(&self, m: &Monomial, a: &[Rat]) -> Result<bool, RingError> {
        self.validate_monomial(m)?;
        check_len(a.len(), self.n())?;
        let s = self.num_generators();
        let big_n = self.ambient_rank();
        // variables: μ (s), ν (s), q
        let vars = 2 * s + 1;
        let mut cons = Vec::new();
        for row in 0..big_n {
            let mut normal = vec![Rat::zero(); vars];
            for i in 0..s {
                let e = Rat::from_integer(self.exponents()[i][row].clone());
                normal[i] = e.clone();
                normal[s + i] = e;
            }
            cons.push(LinearConstraint::new(
                normal,
                Relation::Eq,
                Rat::from_integer(m.exponents[row].clone()),
            ));
        }
        for row in 0..self.n() {
            let mut normal = vec![Rat::zero(); vars];
            for i in 0..s {
                normal[i] = Rat::from_integer(self.degrees()[i][row].clone());
            }
            normal[2 * s] = -a[row].clone();
            cons.push(LinearConstraint::new(normal, Relation::Eq, Rat::zero()));
        }
        for j in 0..2 * s {
            let mut e = vec![Rat::zero(); vars];
            e[j] = Rat::one();
            cons.push(LinearConstraint::new(e, Relation::Ge, Rat::zero()));
        }
        let mut q = vec![Rat::zero(); vars];
        q[2 * s] = Rat::one();
        cons.push(LinearConstraint::new(q, Relation::Gt, Rat::zero()));
        Ok(lp_feasible(&cons, vars).is_some())
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let names = match self.kind() {
            RingKind::Polynomial => self.names(),
            RingKind::Semigroup => self.ambient_names(),
        };
        format_power_product(names, &m.exponents)
    }

    /// Product of the generators in `mask`, written with generator names.
    pub fn format_mask(&self, mask: GenMask) -> String {
        let idx = mask_indices(mask);
        if idx.is_empty() {
            return "1".to_string();
        }
        idx.iter()
            .map(|&i| self.names()[i].as_str())
            .collect::<Vec<_>>()
            .join("*")
    }
}

fn format_power_product(names: &[String], exps: &[BigInt]) -> String {
    let parts: Vec<String> = names
        .iter()
        .zip(exps)
        .filter(|(_, e)| !e.is_zero())
        .map(|(n, e)| {
            if e.is_one() {
                n.clone()
            } else {
                format!("{n}^{e}")
            }
        })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

/// Rejects degree sets with a nonzero nonnegative combination summing to
/// zero; otherwise returns an integer functional that is ≥ 1 on every degree.
fn check_positivity(degrees: &[IntVec], n: usize) -> Result<IntVec, RingError> {
    let s = degrees.len();
    if s > 0 {
        let mut cons = Vec::new();
        for row in 0..n {
            let normal = degrees
                .iter()
                .map(|d| Rat::from_integer(d[row].clone()))
                .collect();
            cons.push(LinearConstraint::new(normal, Relation::Eq, Rat::zero()));
        }
        cons.push(LinearConstraint::new(
            vec![Rat::one(); s],
            Relation::Eq,
            Rat::one(),
        ));
        for j in 0..s {
            let mut e = vec![Rat::zero(); s];
            e[j] = Rat::one();
            cons.push(LinearConstraint::new(e, Relation::Ge, Rat::zero()));
        }
        if let Some(lambda) = lp_feasible(&cons, s) {
            return Err(RingError::NotPositive {
                combination: clear_denominators(&lambda),
            });
        }
    }
    positive_functional(degrees, n).ok_or(RingError::NotPositive {
        combination: Vec::new(),
    })
}

/// Integer `ω` with `ω·v ≥ 1` for every vector, if one exists.
pub(crate) fn positive_functional(vectors: &[IntVec], dim: usize) -> Option<IntVec> {
    let cons: Vec<LinearConstraint> = vectors
        .iter()
        .map(|v| LinearConstraint::new(to_rat(v), Relation::Ge, Rat::one()))
        .collect();
    let w = lp_feasible(&cons, dim)?;
    let l = w
        .iter()
        .fold(BigInt::one(), |l, x| num_integer::Integer::lcm(&l, x.denom()));
    let out: IntVec = w.iter().map(|x| (x * &l).to_integer()).collect();
    debug_assert!(vectors.iter().all(|v| dot(v, &out) >= BigInt::one()));
    Some(out)
}

/// Monomial of a graded ring, given by its exponent vector (ambient
/// coordinates for semigroup rings).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub exponents: IntVec,
}

impl Monomial {
    pub fn new(exponents: IntVec) -> Self {
        Self { exponents }
    }

    pub fn from_i64(exps: &[i64]) -> Self {
        Self::new(crate::poly::vector::int_vec(exps))
    }

    /// Squarefree product of the listed polynomial variables.
    pub fn squarefree(mask: GenMask, s: usize) -> Self {
        Self::new(
            (0..s)
                .map(|i| BigInt::from(mask >> i & 1))
                .collect(),
        )
    }
}

/// Containment relation between two ray ideals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdealOrder {
    Equal,
    /// strictly contained in
    LessThan,
    /// strictly contains
    GreaterThan,
    Incomparable,
}

/// `J_a`, stored canonically as the up-closed set of member faces of `K`.
#[derive(Clone, Debug)]
pub struct RayIdeal {
    ring: GradedRingSpec,
    point: IntVec,
    members: Vec<GenMask>,
    minimal: Vec<GenMask>,
}

impl PartialEq for RayIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.members == other.members
    }
}

impl Eq for RayIdeal {}

impl std::hash::Hash for RayIdeal {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl RayIdeal {
    fn from_members(ring: GradedRingSpec, point: IntVec, mut members: Vec<GenMask>) -> Self {
        members.sort_unstable();
        members.dedup();
        let minimal = members
            .iter()
            .copied()
            .filter(|&m| !members.iter().any(|&o| o != m && o & m == o))
            .collect();
        Self {
            ring,
            point,
            members,
            minimal,
        }
    }

    pub fn ring(&self) -> &GradedRingSpec {
        &self.ring
    }

    /// Primitive integer representative of the defining ray.
    pub fn point(&self) -> &[BigInt] {
        &self.point
    }

    /// All member faces (as generator masks), sorted.
    pub fn members(&self) -> &[GenMask] {
        &self.members
    }

    /// The antichain of minimal member faces.
    pub fn minimal_members(&self) -> &[GenMask] {
        &self.minimal
    }

    pub fn contains_face(&self, mask: GenMask) -> bool {
        self.members.binary_search(&mask).is_ok()
    }

    pub fn is_zero(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.contains_face(0)
    }

    /// Squarefree monomial generators (polynomial rings): one per minimal
    /// member face.
    pub fn squarefree_generators(&self) -> Option<Vec<GenMask>> {
        (self.ring.kind() == RingKind::Polynomial).then(|| self.minimal.clone())
    }

    /// Minimal primes `(xᵢ : i ∈ T)` of a polynomial-ring ray ideal: the
    /// complements of maximal non-member index sets.
    pub fn minimal_primes(&self) -> Option<Vec<GenMask>> {
        if self.ring.kind() != RingKind::Polynomial {
            return None;
        }
        if self.is_zero() || self.is_unit() {
            return Some(Vec::new());
        }
        let all = self.ring.all_mask();
        let non: Vec<GenMask> = self
            .ring
            .faces()
            .iter()
            .map(|f| f.mask)
            .filter(|m| !self.contains_face(*m))
            .collect();
        let maximal: Vec<GenMask> = non
            .iter()
            .copied()
            .filter(|&m| !non.iter().any(|&o| o != m && o & m == m))
            .collect();
        let mut primes: Vec<GenMask> = maximal.into_iter().map(|m| all & !m).collect();
        primes.sort_unstable();
        Some(primes)
    }

    /// Height of the ideal in a polynomial ring: the smallest minimal prime.
    pub fn height(&self) -> Option<usize> {
        let primes = self.minimal_primes()?;
        if self.is_unit() {
            return Some(usize::MAX);
        }
        Some(
            primes
                .iter()
                .map(|p| p.count_ones() as usize)
                .min()
                .unwrap_or(0),
        )
    }

    pub fn contains_monomial(&self, m: &Monomial) -> Result<bool, RingError> {
        Ok(self.contains_face(self.ring.support_face(m)?))
    }

    pub fn compare(&self, other: &RayIdeal) -> Result<IdealOrder, RingError> {
        ray_ideal_compare(self, other)
    }
}

impl fmt::Display for RayIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.is_unit() {
            return write!(f, "A");
        }
        let gens: Vec<String> = self
            .minimal
            .iter()
            .map(|&m| self.ring.format_mask(m))
            .collect();
        match self.ring.kind() {
            RingKind::Polynomial => write!(f, "({})", gens.join(", ")),
            RingKind::Semigroup => write!(f, "rad({})", gens.join(", ")),
        }
    }
}

/// Containment between ray ideals of the same ring, decided on member faces.
pub fn ray_ideal_compare(a: &RayIdeal, b: &RayIdeal) -> Result<IdealOrder, RingError> {
    if a.ring != b.ring {
        return Err(RingError::DifferentRings);
    }
    let a_in_b = a.members.iter().all(|m| b.contains_face(*m));
    let b_in_a = b.members.iter().all(|m| a.contains_face(*m));
    Ok(match (a_in_b, b_in_a) {
        (true, true) => IdealOrder::Equal,
        (true, false) => IdealOrder::LessThan,
        (false, true) => IdealOrder::GreaterThan,
        (false, false) => IdealOrder::Incomparable,
    })
}

impl IdealOrder {
    pub fn reverse(self) -> Self {
        match self {
            IdealOrder::LessThan => IdealOrder::GreaterThan,
            IdealOrder::GreaterThan => IdealOrder::LessThan,
            o => o,
        }
    }

    pub fn as_ordering(self) -> Option<Ordering> {
        match self {
            IdealOrder::Equal => Some(Ordering::Equal),
            IdealOrder::LessThan => Some(Ordering::Less),
            IdealOrder::GreaterThan => Some(Ordering::Greater),
            IdealOrder::Incomparable => None,
        }
    }
}
