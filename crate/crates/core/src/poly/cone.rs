//! Rational polyhedral cones with both descriptions kept in canonical form.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use log::warn;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::matrix::{project_out, rank, span_basis};
use super::vector::{
    check_len, combine, dot, dot_int_rat, is_zero, neg, primitive, IntVec, Rat,
};
use crate::error::PolyError;

/// Rational polyhedral cone `{x : f·x ≥ 0 (f ∈ facets), e·x = 0 (e ∈ equations)}`
/// `= cone(rays) + span(lineality)`.
///
/// Canonical form: lineality and equation bases are RREF rows scaled to
/// primitive integers; rays are projected orthogonally to the lineality space,
/// facets orthogonally to the equations; both are primitive and sorted. Two
/// cones are equal as sets iff they are structurally equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalCone {
    ambient_dim: usize,
    rays: Vec<IntVec>,
    lineality: Vec<IntVec>,
    facets: Vec<IntVec>,
    equations: Vec<IntVec>,
}

/// A face, identified by the facets of the parent cone vanishing on it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Face {
    pub active: Vec<usize>,
    pub dim: usize,
    pub cone: RationalCone,
}

impl RationalCone {
    /// `cone(vectors)`; zero vectors are dropped.
    pub fn from_generators(vectors: &[IntVec], ambient_dim: usize) -> Result<Self, PolyError> {
        for v in vectors {
            check_len(v.len(), ambient_dim)?;
        }
        let gens: Vec<IntVec> = vectors
            .iter()
            .filter(|v| {
                let z = is_zero(v);
                if z {
                    warn!("dropping zero generator");
                }
                !z
            })
            .map(|v| primitive(v))
            .collect();
        Ok(Self::from_clean_generators(&gens, &[], ambient_dim))
    }

    pub fn from_i64_generators(vectors: &[&[i64]], ambient_dim: usize) -> Result<Self, PolyError> {
        let v: Vec<IntVec> = vectors
            .iter()
            .map(|r| super::vector::int_vec(r))
            .collect();
        Self::from_generators(&v, ambient_dim)
    }

    /// `{x : b·x ≥ 0 for every normal b}`; an empty list gives the whole space.
    pub fn from_halfspaces(normals: &[IntVec], ambient_dim: usize) -> Result<Self, PolyError> {
        Self::from_constraints(normals, &[], ambient_dim)
    }

    pub fn from_i64_halfspaces(normals: &[&[i64]], ambient_dim: usize) -> Result<Self, PolyError> {
        let v: Vec<IntVec> = normals
            .iter()
            .map(|r| super::vector::int_vec(r))
            .collect();
        Self::from_halfspaces(&v, ambient_dim)
    }

    /// Inequalities `b·x ≥ 0` together with equalities `e·x = 0`.
    pub fn from_constraints(
        normals: &[IntVec],
        equalities: &[IntVec],
        ambient_dim: usize,
    ) -> Result<Self, PolyError> {
        for v in normals.iter().chain(equalities) {
            check_len(v.len(), ambient_dim)?;
        }
        let (lin, rays) = double_description(normals, equalities, ambient_dim);
        Ok(Self::from_clean_generators(&rays, &lin, ambient_dim))
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Self::from_clean_generators(&[], &[], ambient_dim)
    }

    pub fn whole_space(ambient_dim: usize) -> Self {
        let lin: Vec<IntVec> = (0..ambient_dim)
            .map(|i| {
                let mut e = vec![BigInt::zero(); ambient_dim];
                e[i] = BigInt::one();
                e
            })
            .collect();
        Self::from_clean_generators(&[], &lin, ambient_dim)
    }

    pub fn orthant(ambient_dim: usize) -> Self {
        let gens: Vec<IntVec> = (0..ambient_dim)
            .map(|i| {
                let mut e = vec![BigInt::zero(); ambient_dim];
                e[i] = BigInt::one();
                e
            })
            .collect();
        Self::from_clean_generators(&gens, &[], ambient_dim)
    }

    fn from_clean_generators(rays: &[IntVec], lineality: &[IntVec], ambient_dim: usize) -> Self {
        // dual cone {b : r·b ≥ 0, l·b = 0}
        let (dual_lin, dual_rays) = double_description(rays, lineality, ambient_dim);
        let equations = span_basis(&dual_lin, ambient_dim);
        let facets = canonical_rays(&dual_rays, &equations);
        // primal again from the facet description for canonical rays
        let (lin, prays) = double_description(&facets, &equations, ambient_dim);
        let lineality = span_basis(&lin, ambient_dim);
        let rays = canonical_rays(&prays, &lineality);
        Self {
            ambient_dim,
            rays,
            lineality,
            facets,
            equations,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.ambient_dim - self.equations.len()
    }

    pub fn lineality_dim(&self) -> usize {
        self.lineality.len()
    }

    /// Extreme rays modulo the lineality space.
    pub fn rays(&self) -> &[IntVec] {
        &self.rays
    }

    pub fn lineality(&self) -> &[IntVec] {
        &self.lineality
    }

    pub fn facets(&self) -> &[IntVec] {
        &self.facets
    }

    pub fn equations(&self) -> &[IntVec] {
        &self.equations
    }

    /// Rays plus both orientations of each lineality basis vector.
    pub fn generators(&self) -> Vec<IntVec> {
        let mut g = self.rays.clone();
        for l in &self.lineality {
            g.push(l.clone());
            g.push(neg(l));
        }
        g.sort();
        g
    }

    /// Facet normals plus both orientations of each equation.
    pub fn halfspaces(&self) -> Vec<IntVec> {
        let mut h = self.facets.clone();
        for e in &self.equations {
            h.push(e.clone());
            h.push(neg(e));
        }
        h.sort();
        h
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.rays.is_empty() && self.lineality.is_empty()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.equations.is_empty()
    }

    pub fn contains(&self, point: &[Rat]) -> Result<bool, PolyError> {
        check_len(point.len(), self.ambient_dim)?;
        Ok(self.equations.iter().all(|e| dot_int_rat(e, point).is_zero())
            && self
                .facets
                .iter()
                .all(|f| !dot_int_rat(f, point).is_negative()))
    }

    pub fn contains_int(&self, point: &[BigInt]) -> Result<bool, PolyError> {
        check_len(point.len(), self.ambient_dim)?;
        Ok(self.equations.iter().all(|e| dot(e, point).is_zero())
            && self.facets.iter().all(|f| !dot(f, point).is_negative()))
    }

    /// Strict on every facet and inside the linear span.
    pub fn relint_contains(&self, point: &[Rat]) -> Result<bool, PolyError> {
        check_len(point.len(), self.ambient_dim)?;
        Ok(self.equations.iter().all(|e| dot_int_rat(e, point).is_zero())
            && self
                .facets
                .iter()
                .all(|f| dot_int_rat(f, point).is_positive()))
    }

    pub fn relint_contains_int(&self, point: &[BigInt]) -> Result<bool, PolyError> {
        check_len(point.len(), self.ambient_dim)?;
        Ok(self.equations.iter().all(|e| dot(e, point).is_zero())
            && self.facets.iter().all(|f| dot(f, point).is_positive()))
    }

    pub fn contains_cone(&self, other: &RationalCone) -> bool {
        other.ambient_dim == self.ambient_dim
            && other
                .generators()
                .iter()
                .all(|g| self.contains_int(g).unwrap_or(false))
    }

    /// Sum of the extreme rays, which lies in the relative interior.
    pub fn relint_point(&self) -> IntVec {
        let mut p = vec![BigInt::zero(); self.ambient_dim];
        for r in &self.rays {
            for (x, y) in p.iter_mut().zip(r) {
                *x += y;
            }
        }
        debug_assert!(self.relint_contains_int(&p).unwrap());
        primitive(&p)
    }

    /// `count` pairwise distinct integer points of the relative interior.
    pub fn relint_points(&self, count: usize) -> Vec<IntVec> {
        let mut out: Vec<IntVec> = Vec::with_capacity(count);
        let r = self.rays.len();
        let mut j = 0usize;
        while out.len() < count {
            let mut p = vec![BigInt::zero(); self.ambient_dim];
            for (i, ray) in self.rays.iter().enumerate() {
                let w = if r > 0 && i == j % r {
                    BigInt::from(1 + j / r.max(1) + usize::from(j > 0))
                } else {
                    BigInt::one()
                };
                for (x, y) in p.iter_mut().zip(ray) {
                    *x += &w * y;
                }
            }
            if r == 1 {
                p = p.iter().map(|x| x * BigInt::from(j + 1)).collect();
            }
            if !out.contains(&p) {
                out.push(p);
            }
            j += 1;
            if r == 0 {
                break;
            }
        }
        out
    }

    fn face_from_active(&self, active: BTreeSet<usize>) -> Face {
        let mut gens: Vec<IntVec> = self
            .rays
            .iter()
            .filter(|r| active.iter().all(|&a| dot(&self.facets[a], r).is_zero()))
            .cloned()
            .collect();
        let lin_count = self.lineality.len();
        gens.extend(self.lineality.iter().cloned());
        gens.extend(self.lineality.iter().map(|l| neg(l)));
        let dim = rank(&gens, self.ambient_dim);
        let cone = if gens.is_empty() {
            Self::zero(self.ambient_dim)
        } else {
            let rays = &gens[..gens.len() - 2 * lin_count];
            Self::from_clean_generators(rays, &self.lineality, self.ambient_dim)
        };
        Face {
            active: active.into_iter().collect(),
            dim,
            cone,
        }
    }

    /// Facets vanishing on every ray of `rays` (closure of an active set).
    fn active_on(&self, rays: &[&IntVec]) -> BTreeSet<usize> {
        (0..self.facets.len())
            .filter(|&i| rays.iter().all(|r| dot(&self.facets[i], r).is_zero()))
            .collect()
    }

    /// The smallest face containing `point`.
    pub fn minimal_face(&self, point: &[Rat]) -> Result<Face, PolyError> {
        if !self.contains(point)? {
            return Err(PolyError::PointOutsideCone);
        }
        let active = (0..self.facets.len())
            .filter(|&i| dot_int_rat(&self.facets[i], point).is_zero())
            .collect();
        Ok(self.face_from_active(active))
    }

    /// All faces, each once, sorted by dimension then active set.
    pub fn face_lattice(&self) -> Vec<Face> {
        let mut seen: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        let mut queue: Vec<BTreeSet<usize>> = vec![BTreeSet::new()];
        seen.insert(BTreeSet::new());
        while let Some(active) = queue.pop() {
            let on: Vec<&IntVec> = self
                .rays
                .iter()
                .filter(|r| active.iter().all(|&a| dot(&self.facets[a], r).is_zero()))
                .collect();
            for f in 0..self.facets.len() {
                if active.contains(&f) {
                    continue;
                }
                let sub: Vec<&IntVec> = on
                    .iter()
                    .copied()
                    .filter(|r| dot(&self.facets[f], r).is_zero())
                    .collect();
                let closed = self.active_on(&sub);
                if seen.insert(closed.clone()) {
                    queue.push(closed);
                }
            }
        }
        let mut faces: Vec<Face> = seen
            .into_iter()
            .map(|a| self.face_from_active(a))
            .collect();
        faces.sort_by(|a, b| a.dim.cmp(&b.dim).then_with(|| a.active.cmp(&b.active)));
        faces
    }

    pub fn intersect(&self, other: &RationalCone) -> Result<RationalCone, PolyError> {
        check_len(other.ambient_dim, self.ambient_dim)?;
        let mut normals = self.facets.clone();
        normals.extend(other.facets.iter().cloned());
        let mut eqs = self.equations.clone();
        eqs.extend(other.equations.iter().cloned());
        Self::from_constraints(&normals, &eqs, self.ambient_dim)
    }

    /// Whether `self` is a face of `cone`: contained in it and cut out by the
    /// facets of `cone` that vanish on it.
    pub fn is_face_of(&self, cone: &RationalCone) -> Result<bool, PolyError> {
        check_len(self.ambient_dim, cone.ambient_dim)?;
        if !cone.contains_cone(self) {
            return Ok(false);
        }
        let gens = self.generators();
        let refs: Vec<&IntVec> = gens.iter().collect();
        let active = cone.active_on(&refs);
        Ok(cone.face_from_active(active).cone == *self)
    }

    /// Image under an integer linear map given by its rows.
    pub fn image(&self, rows: &[IntVec], target_dim: usize) -> Result<RationalCone, PolyError> {
        let apply = |v: &IntVec| -> Result<IntVec, PolyError> {
            rows.iter()
                .map(|r| {
                    check_len(r.len(), self.ambient_dim)?;
                    Ok(dot(r, v))
                })
                .collect()
        };
        let gens: Result<Vec<IntVec>, PolyError> = self.generators().iter().map(apply).collect();
        Self::from_generators(&gens?, target_dim)
    }
}

impl PartialOrd for RationalCone {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RationalCone {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ambient_dim
            .cmp(&other.ambient_dim)
            .then_with(|| self.dim().cmp(&other.dim()))
            .then_with(|| self.rays.cmp(&other.rays))
            .then_with(|| self.lineality.cmp(&other.lineality))
    }
}

impl fmt::Display for RationalCone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |vs: &[IntVec]| -> String {
            vs.iter()
                .map(|v| {
                    let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                    format!("({})", s.join(","))
                })
                .collect::<Vec<_>>()
                .join(" ")
        };
        if self.is_zero() {
            return write!(f, "{{0}}");
        }
        write!(f, "cone[{}]", show(&self.rays))?;
        if !self.lineality.is_empty() {
            write!(f, " + span[{}]", show(&self.lineality))?;
        }
        Ok(())
    }
}

fn canonical_rays(rays: &[IntVec], complement_of: &[IntVec]) -> Vec<IntVec> {
    let mut out: Vec<IntVec> = rays
        .iter()
        .map(|r| project_out(r, complement_of))
        .filter(|r| !is_zero(r))
        .collect();
    out.sort();
    out.dedup();
    out
}

#[derive(Clone)]
struct DdRay {
    v: IntVec,
    zeros: Vec<u64>,
}

fn bit_set(bits: &mut Vec<u64>, i: usize) {
    let w = i / 64;
    if bits.len() <= w {
        bits.resize(w + 1, 0);
    }
    bits[w] |= 1 << (i % 64);
}

fn bits_and(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

fn bits_subset(a: &[u64], b: &[u64]) -> bool {
    a.iter()
        .enumerate()
        .all(|(i, x)| x & !b.get(i).copied().unwrap_or(0) == 0)
}

/// Generators `(lineality basis, extreme rays)` of
/// `{x : a·x ≥ 0 (a ∈ ineqs), e·x = 0 (e ∈ eqs)}`, by incremental double
/// description with the combinatorial adjacency test.
pub(crate) fn double_description(
    ineqs: &[IntVec],
    eqs: &[IntVec],
    dim: usize,
) -> (Vec<IntVec>, Vec<IntVec>) {
    let mut constraints: Vec<IntVec> = Vec::new();
    for e in eqs {
        constraints.push(e.clone());
        constraints.push(neg(e));
    }
    constraints.extend(ineqs.iter().cloned());

    let mut lin: Vec<IntVec> = (0..dim)
        .map(|i| {
            let mut e = vec![BigInt::zero(); dim];
            e[i] = BigInt::one();
            e
        })
        .collect();
    let mut rays: Vec<DdRay> = Vec::new();

    for (k, a) in constraints.iter().enumerate() {
        if is_zero(a) {
            for r in rays.iter_mut() {
                bit_set(&mut r.zeros, k);
            }
            continue;
        }
        if let Some(j) = lin.iter().position(|l| !dot(a, l).is_zero()) {
            let mut l0 = lin.remove(j);
            let mut al0 = dot(a, &l0);
            if al0.is_negative() {
                l0 = neg(&l0);
                al0 = -al0;
            }
            for l in lin.iter_mut() {
                let al = dot(a, l);
                if !al.is_zero() {
                    *l = primitive(&combine(&al0, l, &al, &l0));
                }
            }
            for r in rays.iter_mut() {
                let ar = dot(a, &r.v);
                if !ar.is_zero() {
                    r.v = primitive(&combine(&al0, &r.v, &ar, &l0));
                }
                bit_set(&mut r.zeros, k);
            }
            let mut zeros = Vec::new();
            for i in 0..k {
                bit_set(&mut zeros, i);
            }
            rays.push(DdRay { v: l0, zeros });
            continue;
        }

        let signs: Vec<BigInt> = rays.iter().map(|r| dot(a, &r.v)).collect();
        let mut next: Vec<DdRay> = Vec::new();
        for (r, s) in rays.iter().zip(&signs) {
            if s.is_positive() {
                next.push(r.clone());
            } else if s.is_zero() {
                let mut r = r.clone();
                bit_set(&mut r.zeros, k);
                next.push(r);
            }
        }
        for (pi, p) in rays.iter().enumerate() {
            if !signs[pi].is_positive() {
                continue;
            }
            for (ni, n) in rays.iter().enumerate() {
                if !signs[ni].is_negative() {
                    continue;
                }
                let common = bits_and(&p.zeros, &n.zeros);
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(ri, r)| ri == pi || ri == ni || !bits_subset(&common, &r.zeros));
                if !adjacent {
                    continue;
                }
                let v = primitive(&combine(&signs[pi], &n.v, &signs[ni], &p.v));
                if is_zero(&v) {
                    continue;
                }
                let mut zeros = common;
                bit_set(&mut zeros, k);
                next.push(DdRay { v, zeros });
            }
        }
        rays = next;
    }

    let mut out: Vec<IntVec> = rays.into_iter().map(|r| r.v).collect();
    out.sort();
    out.dedup();
    (lin, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::vector::{int_vec, rat_vec};

    fn gens(v: &[&[i64]]) -> RationalCone {
        RationalCone::from_i64_generators(v, v.first().map_or(2, |r| r.len())).unwrap()
    }

    #[test]
    fn quadrant_from_three_generators() {
        let c = gens(&[&[1, 0], &[1, 1], &[0, 1]]);
        assert_eq!(c.rays(), &[int_vec(&[0, 1]), int_vec(&[1, 0])]);
        assert_eq!(c.facets(), &[int_vec(&[0, 1]), int_vec(&[1, 0])]);
        assert_eq!(c, RationalCone::orthant(2));
    }

    #[test]
    fn empty_generators_give_zero_cone() {
        let c = RationalCone::from_generators(&[], 3).unwrap();
        assert!(c.is_zero());
        assert_eq!(c.dim(), 0);
        assert_eq!(c.halfspaces().len(), 6);
        assert_eq!(span_basis(&c.halfspaces(), 3).len(), 3);
    }

    #[test]
    fn redundant_generators_removed() {
        let c = gens(&[&[3, 0], &[2, 1], &[1, 2], &[0, 3]]);
        assert_eq!(c, RationalCone::orthant(2));
    }

    #[test]
    fn from_halfspaces_examples() {
        let q = RationalCone::from_i64_halfspaces(&[&[1, 0], &[0, 1]], 2).unwrap();
        assert_eq!(q, RationalCone::orthant(2));
        let line = RationalCone::from_i64_halfspaces(&[&[1, 0], &[-1, 0]], 2).unwrap();
        assert_eq!(line.lineality_dim(), 1);
        assert_eq!(line.dim(), 1);
        assert_eq!(line.lineality(), &[int_vec(&[0, 1])]);
        let c = RationalCone::from_i64_halfspaces(&[&[1, -1], &[0, 1]], 2).unwrap();
        assert_eq!(c, gens(&[&[1, 0], &[1, 1]]));
        assert_eq!(
            RationalCone::from_halfspaces(&[], 2).unwrap(),
            RationalCone::whole_space(2)
        );
    }

    #[test]
    fn membership_and_relint() {
        let q = RationalCone::orthant(2);
        assert!(q.contains(&rat_vec(&[1, 1])).unwrap());
        assert!(q.relint_contains(&rat_vec(&[1, 1])).unwrap());
        assert!(q.contains(&rat_vec(&[1, 0])).unwrap());
        assert!(!q.relint_contains(&rat_vec(&[1, 0])).unwrap());
        let c = gens(&[&[1, 0], &[1, 1]]);
        assert!(!c.contains(&rat_vec(&[0, 1])).unwrap());
        assert!(matches!(
            q.contains(&rat_vec(&[1])),
            Err(PolyError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn minimal_faces_of_quadrant() {
        let q = RationalCone::orthant(2);
        assert_eq!(q.minimal_face(&rat_vec(&[2, 3])).unwrap().dim, 2);
        let f = q.minimal_face(&rat_vec(&[5, 0])).unwrap();
        assert_eq!(f.cone, gens(&[&[1, 0]]));
        assert_eq!(
            q.minimal_face(&rat_vec(&[-1, 0])),
            Err(PolyError::PointOutsideCone)
        );
    }

    #[test]
    fn face_counts() {
        assert_eq!(RationalCone::orthant(2).face_lattice().len(), 4);
        let square = gens(&[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]]);
        assert_eq!(square.dim(), 3);
        let faces = square.face_lattice();
        let mut by_dim = [0usize; 4];
        for f in &faces {
            by_dim[f.dim] += 1;
        }
        assert_eq!(by_dim, [1, 4, 4, 1]);
        assert_eq!(gens(&[&[1, 2]]).face_lattice().len(), 2);
        assert_eq!(RationalCone::whole_space(2).face_lattice().len(), 1);
    }

    #[test]
    fn intersections_and_faces() {
        let a = gens(&[&[1, 0], &[1, 1]]);
        let b = gens(&[&[1, 1], &[0, 1]]);
        assert_eq!(a.intersect(&b).unwrap(), gens(&[&[1, 1]]));
        assert_eq!(a.intersect(&a).unwrap(), a);
        assert!(a.is_face_of(&a).unwrap());
        assert!(!gens(&[&[1, 1]]).is_face_of(&RationalCone::orthant(2)).unwrap());
        assert!(gens(&[&[1, 0]]).is_face_of(&RationalCone::orthant(2)).unwrap());
        assert!(RationalCone::zero(2).is_face_of(&a).unwrap());
    }

    #[test]
    fn square_cone_apex_ray() {
        let square = gens(&[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]]);
        let z = square.minimal_face(&rat_vec(&[0, 1, 1, 0])).unwrap();
        assert_eq!(z.dim, 1);
        assert_eq!(z.cone, gens(&[&[0, 1, 1, 0]]));
    }

    #[test]
    fn relint_points_are_distinct_and_interior() {
        let c = gens(&[&[1, 0], &[1, 1]]);
        let pts = c.relint_points(3);
        assert_eq!(pts.len(), 3);
        for p in &pts {
            assert!(c.relint_contains_int(p).unwrap());
        }
        let ray = gens(&[&[1, 1]]);
        assert_eq!(ray.relint_points(3).len(), 3);
    }
}
