//! Realizing a polynomial ring graded by `Z^n` as a multi-section ring on the
//! toric quotient attached to a chamber.

use std::collections::HashMap;

use log::{debug, info};
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::classgroup::{find_ample_combination, AmpleCertificate, AMPLE_SEARCH_RADIUS};
use super::{graded_piece_dim, MultiSectionRingSpec, QDivisor, ToricVarietySpec};
use crate::chamber::maximal_ray_ideal_cone_int;
use crate::error::ToricError;
use crate::graded::{mask_indices, GradedRingSpec, RingKind};
use crate::poly::snf::{integer_kernel, smith_normal_form};
use crate::poly::vector::{gcd_of, IntVec, Rat};
use crate::poly::{IntMatrix, RationalCone};

#[derive(Clone, Debug)]
pub struct RoundTripReport {
    pub msr: MultiSectionRingSpec,
    /// Row `i` is the image of `e_i` in the Gale-dual lattice.
    pub gale: Vec<IntVec>,
    /// Content `c_i` of each Gale row; the ray of `x_i` is `gale[i] / c_i`.
    pub contents: Vec<BigInt>,
    /// Integer lift `W` with `Q W = I`, one row per variable.
    pub lift: Vec<IntVec>,
    pub name: Option<String>,
    pub ample: Option<AmpleCertificate>,
    pub grid_bound: i64,
    pub grid_points: usize,
    /// `(r, monomial count, lattice-point count)` where the two differ.
    pub mismatches: Vec<(Vec<i64>, u64, u64)>,
}

impl RoundTripReport {
    pub fn all_match(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Number of monomials `x^g` with `Q g = r`.
pub fn direct_monomial_count(ring: &GradedRingSpec, r: &[i64]) -> u64 {
    let degrees = small_degrees(ring);
    let omega: Vec<i64> = ring
        .degree_functional()
        .iter()
        .map(|x| x.to_i64().expect("small functional"))
        .collect();
    let mut memo = HashMap::new();
    count_from(0, r.to_vec(), &degrees, &omega, &mut memo)
}

fn small_degrees(ring: &GradedRingSpec) -> Vec<Vec<i64>> {
    ring.degrees()
        .iter()
        .map(|d| d.iter().map(|x| x.to_i64().expect("small degree")).collect())
        .collect()
}

fn count_from(
    i: usize,
    rem: Vec<i64>,
    degrees: &[Vec<i64>],
    omega: &[i64],
    memo: &mut HashMap<(usize, Vec<i64>), u64>,
) -> u64 {
    let budget: i64 = omega.iter().zip(&rem).map(|(a, b)| a * b).sum();
    if budget < 0 {
        return 0;
    }
    if i == degrees.len() {
        return u64::from(rem.iter().all(|&x| x == 0));
    }
    if let Some(&c) = memo.get(&(i, rem.clone())) {
        return c;
    }
    let mut total = 0;
    let mut cur = rem.clone();
    loop {
        total += count_from(i + 1, cur.clone(), degrees, omega, memo);
        for (c, a) in cur.iter_mut().zip(&degrees[i]) {
            *c -= a;
        }
        if omega.iter().zip(&cur).map(|(a, b)| a * b).sum::<i64>() < 0 {
            break;
        }
    }
    memo.insert((i, rem), total);
    total
}

/// Some exponent vector `g ≥ 0` with `Q g = target`, of least total degree.
fn find_monomial(degrees: &[Vec<i64>], omega: &[i64], target: &[i64]) -> Option<Vec<i64>> {
    let s = degrees.len();
    let budget: i64 = omega.iter().zip(target).map(|(a, b)| a * b).sum();
    if budget < 0 {
        return None;
    }
    let mut best: Option<Vec<i64>> = None;
    let mut g = vec![0; s];
    fn go(
        i: usize,
        rem: Vec<i64>,
        g: &mut Vec<i64>,
        degrees: &[Vec<i64>],
        omega: &[i64],
        best: &mut Option<Vec<i64>>,
    ) {
        if i == degrees.len() {
            if rem.iter().all(|&x| x == 0) {
                let better = best
                    .as_ref()
                    .is_none_or(|b| g.iter().sum::<i64>() < b.iter().sum::<i64>());
                if better {
                    *best = Some(g.clone());
                }
            }
            return;
        }
        let mut cur = rem;
        let mut k = 0;
        loop {
            g[i] = k;
            go(i + 1, cur.clone(), g, degrees, omega, best);
            for (c, a) in cur.iter_mut().zip(&degrees[i]) {
                *c -= a;
            }
            if omega.iter().zip(&cur).map(|(a, b)| a * b).sum::<i64>() < 0 {
                break;
            }
            k += 1;
        }
        g[i] = 0;
    }
    go(0, target.to_vec(), &mut g, degrees, omega, &mut best);
    best
}

/// Builds `X_σ` and `D_1, …, D_n` with `A ≅ R(X_σ; D)` and checks the graded
/// pieces on the grid `|r_i| ≤ grid_bound`.
pub fn demazure_roundtrip(
    ring: &GradedRingSpec,
    sigma: &RationalCone,
    grid_bound: i64,
) -> Result<RoundTripReport, ToricError> {
    if ring.kind() != RingKind::Polynomial {
        return Err(ToricError::NotPolynomial);
    }
    let n = ring.n();
    let s = ring.num_generators();
    let q = IntMatrix::from_columns(ring.degrees(), n)?;
    let snf = smith_normal_form(&q);
    if snf.rank != n || snf.invariant_factors.iter().any(|f| !f.is_one()) {
        return Err(ToricError::DegreeLattice(snf.invariant_factors));
    }
    if s == n {
        return Err(ToricError::ZeroDimensional);
    }
    let d = s - n;

    let describe = || format!("cone{:?}", sigma.rays().iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>());
    if sigma.ambient_dim() != n || !sigma.is_full_dimensional() {
        return Err(ToricError::NotAChamber(describe()));
    }
    let w = sigma.relint_point();
    if maximal_ray_ideal_cone_int(ring, &w)? != *sigma {
        return Err(ToricError::NotAChamber(describe()));
    }
    let ideal = ring.ray_ideal_int(&w)?;
    let primes = ideal.minimal_primes().expect("polynomial ring");
    if let Some(p) = primes.iter().find(|p| p.count_ones() < 2) {
        return Err(ToricError::HeightOne(format!("({})", ring.format_mask(*p))));
    }

    let kernel = integer_kernel(&q);
    debug_assert_eq!(kernel.len(), d);
    let gale: Vec<IntVec> = (0..s).map(|i| kernel.iter().map(|k| k[i].clone()).collect()).collect();
    let contents: Vec<BigInt> = gale.iter().map(|v| gcd_of(v)).collect();
    let rays: Vec<IntVec> = gale
        .iter()
        .zip(&contents)
        .map(|(v, c)| if c.is_zero() { v.clone() } else { v.iter().map(|x| x / c).collect() })
        .collect();
    let full = (1u64 << s) - 1;
    let cones: Vec<Vec<usize>> = ideal
        .minimal_members()
        .iter()
        .map(|&m| mask_indices(full & !m))
        .collect();
    let variety = ToricVarietySpec::new(d, rays, cones)?;
    if !variety.is_complete() {
        return Err(ToricError::Incomplete);
    }

    let degrees = small_degrees(ring);
    let omega: Vec<i64> = ring
        .degree_functional()
        .iter()
        .map(|x| x.to_i64().expect("small functional"))
        .collect();
    let fallback: Vec<IntVec> = {
        // Q R [L; 0] = I because the invariant factors are all one.
        let mut top = IntMatrix::zeros(s, n);
        for r in 0..n {
            for c in 0..n {
                top.set(r, c, snf.left.get(r, c).clone());
            }
        }
        let w = snf.right.mul(&top)?;
        (0..s).map(|i| w.row(i).to_vec()).collect()
    };
    let mut lift = fallback;
    for j in 0..n {
        let e: Vec<i64> = (0..n).map(|k| i64::from(k == j)).collect();
        if let Some(g) = find_monomial(&degrees, &omega, &e) {
            for i in 0..s {
                lift[i][j] = BigInt::from(g[i]);
            }
        }
    }
    let divisors = (0..n)
        .map(|j| {
            QDivisor::new(
                (0..s)
                    .map(|i| Rat::new(lift[i][j].clone(), contents[i].clone()))
                    .collect(),
            )
        })
        .collect();
    let msr = MultiSectionRingSpec::new(variety, divisors)?;
    let name = msr.variety().identify();
    let ample = find_ample_combination(&msr, AMPLE_SEARCH_RADIUS);
    info!("quotient of dimension {d}: {}", name.as_deref().unwrap_or("unnamed toric variety"));

    let mut mismatches = Vec::new();
    let mut grid_points = 0;
    let mut r = vec![-grid_bound; n];
    loop {
        grid_points += 1;
        let direct = direct_monomial_count(ring, &r);
        let big: Vec<BigInt> = r.iter().map(|&x| BigInt::from(x)).collect();
        let lattice = graded_piece_dim(&msr, &big)?;
        if direct != lattice {
            mismatches.push((r.clone(), direct, lattice));
        }
        let mut k = 0;
        while k < n && r[k] == grid_bound {
            r[k] = -grid_bound;
            k += 1;
        }
        if k == n {
            break;
        }
        r[k] += 1;
    }
    debug!("round trip: {grid_points} grid points, {} mismatches", mismatches.len());
    Ok(RoundTripReport {
        msr,
        gale,
        contents,
        lift,
        name,
        ample,
        grid_bound,
        grid_points,
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_rulings_from_example_ring() {
        let ring = GradedRingSpec::polynomial_i64(&[&[1, 0], &[2, 0], &[0, 1], &[0, 2]]).unwrap();
        let sigma = RationalCone::orthant(2);
        let report = demazure_roundtrip(&ring, &sigma, 4).unwrap();
        assert_eq!(report.name.as_deref(), Some("P^1 x P^1"));
        let half = Rat::new(BigInt::one(), BigInt::from(2));
        let nonzero: Vec<Vec<&Rat>> = report
            .msr
            .divisors()
            .iter()
            .map(|d| d.coefficients().iter().filter(|c| !c.is_zero()).collect())
            .collect();
        assert_eq!(nonzero, vec![vec![&half], vec![&half]]);
        assert!(report.all_match());
        assert_eq!(report.grid_points, 81);
        assert!(report.ample.is_some());
    }

    #[test]
    fn direct_counts() {
        let ring = GradedRingSpec::polynomial_i64(&[&[1, 0], &[2, 0], &[0, 1], &[0, 2]]).unwrap();
        assert_eq!(direct_monomial_count(&ring, &[2, 2]), 4);
        assert_eq!(direct_monomial_count(&ring, &[5, 3]), 6);
        assert_eq!(direct_monomial_count(&ring, &[-1, 3]), 0);
    }

    #[test]
    fn preconditions() {
        let p = GradedRingSpec::polynomial_i64(&[&[1, 0], &[0, 1]]).unwrap();
        assert_eq!(
            demazure_roundtrip(&p, &RationalCone::orthant(2), 2).unwrap_err(),
            ToricError::ZeroDimensional
        );
        let even = GradedRingSpec::polynomial_i64(&[&[2], &[2]]).unwrap();
        assert!(matches!(
            demazure_roundtrip(&even, &RationalCone::orthant(1), 2),
            Err(ToricError::DegreeLattice(_))
        ));
        // planar xyz ring: chamber cone((1,0),(1,1)) has J = (x*y, x*z) with prime (x).
        let ex = GradedRingSpec::polynomial_i64(&[&[1, 0], &[0, 1], &[1, 1]]).unwrap();
        let sigma = RationalCone::from_i64_generators(&[&[1, 0], &[1, 1]], 2).unwrap();
        assert!(matches!(demazure_roundtrip(&ex, &sigma, 2), Err(ToricError::HeightOne(_))));
        let not = RationalCone::from_i64_generators(&[&[1, 0], &[1, 2]], 2).unwrap();
        assert!(matches!(demazure_roundtrip(&ex, &not, 2), Err(ToricError::NotAChamber(_))));
    }

    #[test]
    fn projective_plane_from_standard_grading() {
        let ring = GradedRingSpec::polynomial_i64(&[&[1], &[1], &[1]]).unwrap();
        let report = demazure_roundtrip(&ring, &RationalCone::orthant(1), 6).unwrap();
        assert_eq!(report.name.as_deref(), Some("P^2"));
        assert!(report.all_match());
    }
}
