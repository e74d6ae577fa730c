//! Chamber decomposition of the degree cone and the fan of maximal ray-ideal
//! cones.
//!
//! All hyperplanes live inside `V = span C(A)`, so the construction works
//! unchanged when the degrees do not span `Qⁿ`: a hyperplane is a
//! codimension-one subspace of `V` spanned by degrees, represented by a
//! normal vector lying in `V`.

mod fan;
mod thm4;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::FanError;
use crate::graded::{GradedRingSpec, RayIdeal};
use crate::poly::lp::{lp_feasible, LinearConstraint, Relation};
use crate::poly::matrix::{nullspace, rank};
use crate::poly::vector::{neg, primitive, sign_canonical, to_rat, IntVec, Rat};
use crate::poly::RationalCone;

pub use fan::{assemble_fan, morphism_poset, ChamberFan, FanCone, FanReport, MorphismPoset};
pub use thm4::{planar_polynomial_ray_ideal_bound, theorem4_check, Theorem4Report};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    pub ambient_dim: usize,
    /// `dim C(A)`.
    pub span_dim: usize,
    /// Primitive, sign-canonical normals, sorted.
    pub normals: Vec<IntVec>,
    /// For each normal, a set of degree indices spanning its hyperplane.
    pub source_subsets: Vec<Vec<usize>>,
}

impl Arrangement {
    pub fn len(&self) -> usize {
        self.normals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.normals.is_empty()
    }
}

/// Hyperplanes of `span C(A)` spanned by subsets of the generator degrees.
pub fn build_arrangement(ring: &GradedRingSpec) -> Result<Arrangement, FanError> {
    let n = ring.n();
    let ca = ring.weight_cone();
    let k = ca.dim();
    let mut found: BTreeMap<IntVec, Vec<usize>> = BTreeMap::new();
    if k >= 2 {
        let degrees = ring.degrees();
        for subset in combinations(degrees.len(), k - 1) {
            let rows: Vec<IntVec> = subset.iter().map(|&i| degrees[i].clone()).collect();
            if rank(&rows, n) != k - 1 {
                continue;
            }
            let mut constraints = rows;
            constraints.extend(ca.equations().iter().cloned());
            let null = nullspace(&constraints, n);
            debug_assert_eq!(null.len(), 1);
            let normal = sign_canonical(&primitive(&null[0]));
            found.entry(normal).or_insert(subset);
        }
    }
    let (normals, source_subsets) = found.into_iter().unzip();
    Ok(Arrangement {
        ambient_dim: n,
        span_dim: k,
        normals,
        source_subsets,
    })
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Closure of an open sign cell of the arrangement inside `C(A)`.
#[derive(Clone, Debug)]
pub struct Chamber {
    pub cone: RationalCone,
    /// `±1` per hyperplane of the arrangement.
    pub signs: Vec<i8>,
    /// Relative-interior point at which the ideal was computed.
    pub witness: IntVec,
    pub ideal: RayIdeal,
}

pub fn chamber_decomposition(ring: &GradedRingSpec) -> Result<Vec<Chamber>, FanError> {
    let arr = build_arrangement(ring)?;
    decompose(ring, &arr)
}

pub(crate) fn decompose(ring: &GradedRingSpec, arr: &Arrangement) -> Result<Vec<Chamber>, FanError> {
    let n = ring.n();
    let ca = ring.weight_cone();
    if ca.is_zero() {
        let witness = vec![BigInt::zero(); n];
        let ideal = ring.ray_ideal_int(&witness)?;
        return Ok(vec![Chamber {
            cone: ca.clone(),
            signs: Vec::new(),
            witness,
            ideal,
        }]);
    }
    let mut base: Vec<LinearConstraint> = ca
        .facets()
        .iter()
        .map(|f| LinearConstraint::homogeneous(f, Relation::Gt))
        .collect();
    base.extend(
        ca.equations()
            .iter()
            .map(|e| LinearConstraint::homogeneous(e, Relation::Eq)),
    );
    // one strict constraint per decided hyperplane
    let signed = |signs: &[i8]| -> Vec<LinearConstraint> {
        signs
            .iter()
            .zip(&arr.normals)
            .map(|(s, f)| {
                let v = if *s > 0 { f.clone() } else { neg(f) };
                LinearConstraint::homogeneous(&v, Relation::Gt)
            })
            .collect()
    };
    let mut cells: Vec<Vec<i8>> = vec![Vec::new()];
    for _ in &arr.normals {
        let mut next = Vec::with_capacity(cells.len() * 2);
        for cell in &cells {
            for s in [1i8, -1] {
                let mut signs = cell.clone();
                signs.push(s);
                let mut cons = base.clone();
                cons.extend(signed(&signs));
                if lp_feasible(&cons, n).is_some() {
                    next.push(signs);
                }
            }
        }
        cells = next;
    }
    let mut out = Vec::with_capacity(cells.len());
    for signs in cells {
        let mut normals: Vec<IntVec> = ca.facets().to_vec();
        for (s, f) in signs.iter().zip(&arr.normals) {
            normals.push(if *s > 0 { f.clone() } else { neg(f) });
        }
        let cone = RationalCone::from_constraints(&normals, ca.equations(), n)?;
        debug_assert_eq!(cone.dim(), ca.dim());
        let witness = cone.relint_point();
        let ideal = ring.ray_ideal_int(&witness)?;
        out.push(Chamber {
            cone,
            signs,
            witness,
            ideal,
        });
    }
    out.sort_by(|a, b| a.cone.cmp(&b.cone));
    Ok(out)
}

/// `σ_J` for `J = J_a`: the intersection of the orbit cones containing `a`.
pub fn maximal_ray_ideal_cone(ring: &GradedRingSpec, a: &[Rat]) -> Result<RationalCone, FanError> {
    let j = ring.ray_ideal(a)?;
    cone_of_ideal(&j)
}

pub(crate) fn cone_of_ideal(j: &RayIdeal) -> Result<RationalCone, FanError> {
    if j.is_zero() {
        return Err(FanError::ZeroIdeal);
    }
    let ring = j.ring();
    let n = ring.n();
    // orbit cones grow with the face, so minimal members suffice
    let mut normals = Vec::new();
    let mut eqs = Vec::new();
    for face in ring.faces() {
        if j.minimal_members().contains(&face.mask) {
            normals.extend(face.orbit_cone.facets().iter().cloned());
            eqs.extend(face.orbit_cone.equations().iter().cloned());
        }
    }
    Ok(RationalCone::from_constraints(&normals, &eqs, n)?)
}

pub fn maximal_ray_ideal_cone_int(ring: &GradedRingSpec, a: &[BigInt]) -> Result<RationalCone, FanError> {
    maximal_ray_ideal_cone(ring, &to_rat(a))
}

/// Deterministic integer points of `cone`: combinations of its generators
/// with small varying coefficients.
pub(crate) fn sample_points(cone: &RationalCone, count: usize) -> Vec<IntVec> {
    let gens = cone.generators();
    let n = cone.ambient_dim();
    let mut out = Vec::with_capacity(count);
    if gens.is_empty() {
        return vec![vec![BigInt::zero(); n]];
    }
    const PRIMES: [u64; 8] = [2, 3, 5, 7, 11, 13, 17, 19];
    for j in 0..count as u64 {
        let mut p = vec![BigInt::zero(); n];
        for (i, g) in gens.iter().enumerate() {
            let c = (j * PRIMES[i % 8] + j / 7 + i as u64) % 6;
            for (x, y) in p.iter_mut().zip(g) {
                *x += BigInt::from(c) * y;
            }
        }
        out.push(p);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::vector::{int_vec, rat_vec};

    fn planar_xyz() -> GradedRingSpec {
        GradedRingSpec::polynomial_named(
            vec![int_vec(&[1, 0]), int_vec(&[1, 1]), int_vec(&[0, 1])],
            2,
            vec!["x".into(), "y".into(), "z".into()],
        )
        .unwrap()
    }

    #[test]
    fn arrangement_of_planar_xyz() {
        let arr = build_arrangement(&planar_xyz()).unwrap();
        assert_eq!(
            arr.normals,
            vec![int_vec(&[0, 1]), int_vec(&[1, -1]), int_vec(&[1, 0])]
        );
    }

    #[test]
    fn arrangement_of_five_variables() {
        let r = GradedRingSpec::polynomial_i64(&[&[1, 0], &[1, 0], &[0, 1], &[0, 1], &[1, 1]]).unwrap();
        assert_eq!(build_arrangement(&r).unwrap().len(), 3);
        let ch = chamber_decomposition(&r).unwrap();
        assert_eq!(ch.len(), 2);
        assert_eq!(ch[0].cone, RationalCone::from_i64_generators(&[&[0, 1], &[1, 1]], 2).unwrap());
        assert_eq!(ch[1].cone, RationalCone::from_i64_generators(&[&[1, 0], &[1, 1]], 2).unwrap());
    }

    #[test]
    fn single_generator() {
        let r = GradedRingSpec::polynomial_i64(&[&[1, 0]]).unwrap();
        assert!(build_arrangement(&r).unwrap().is_empty());
        let ch = chamber_decomposition(&r).unwrap();
        assert_eq!(ch.len(), 1);
        assert_eq!(ch[0].cone, RationalCone::from_i64_generators(&[&[1, 0]], 2).unwrap());
    }

    #[test]
    fn chambers_of_planar_xyz() {
        let ch = chamber_decomposition(&planar_xyz()).unwrap();
        assert_eq!(ch.len(), 2);
        let ideals: Vec<String> = ch.iter().map(|c| c.ideal.to_string()).collect();
        assert_eq!(ideals, ["(x*z, y*z)", "(x*y, x*z)"]);
    }

    #[test]
    fn maximal_cones() {
        let r = planar_xyz();
        assert_eq!(
            maximal_ray_ideal_cone(&r, &rat_vec(&[2, 1])).unwrap(),
            RationalCone::from_i64_generators(&[&[1, 0], &[1, 1]], 2).unwrap()
        );
        assert_eq!(
            maximal_ray_ideal_cone(&r, &rat_vec(&[1, 1])).unwrap(),
            RationalCone::from_i64_generators(&[&[1, 1]], 2).unwrap()
        );
        assert_eq!(maximal_ray_ideal_cone(&r, &rat_vec(&[0, 0])).unwrap(), RationalCone::zero(2));
        assert_eq!(
            maximal_ray_ideal_cone(&r, &rat_vec(&[-1, 0])),
            Err(FanError::ZeroIdeal)
        );
    }
}
