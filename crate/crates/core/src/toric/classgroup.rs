//! Height-one primes, the class group of `R(X;D)` and factoriality.

use log::{debug, warn};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::MultiSectionRingSpec;
use crate::error::ToricError;
use crate::poly::matrix::solve;
use crate::poly::snf::{integer_kernel, quotient_by_rows};
use crate::poly::vector::{dot, to_rat, IntVec, Rat};
use crate::poly::{AbelianGroup, IntMatrix};

/// Default half-width of the box searched for an ample integral combination.
pub const AMPLE_SEARCH_RADIUS: i64 = 10;
const AMPLE_SEARCH_LIMIT: usize = 200_000;

/// `Σ c_i D_i` is an ample Cartier divisor with integral local data `m_σ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmpleCertificate {
    pub combination: Vec<i64>,
    /// Integral coefficient of each ray in `Σ c_i D_i`.
    pub divisor: IntVec,
    /// `m_σ` with `⟨m_σ, v_F⟩ = -a_F` on the rays of each maximal cone.
    pub cartier_data: Vec<IntVec>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeightOnePrimeData {
    pub ray: usize,
    pub q: BigInt,
    /// `v_{Q_F}(t_i) = q_F · m_{i,F}`.
    pub valuations: IntVec,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeightOneReport {
    pub primes: Vec<HeightOnePrimeData>,
    pub ample: Option<AmpleCertificate>,
}

impl HeightOneReport {
    pub fn hypothesis_verified(&self) -> bool {
        self.ample.is_some()
    }
}

/// Checks whether the integral divisor `Σ a_F F` is ample Cartier.
fn ample_cartier_data(spec: &MultiSectionRingSpec, a: &[BigInt]) -> Option<Vec<IntVec>> {
    let x = spec.variety();
    let d = x.lattice_rank();
    let mut data = Vec::with_capacity(x.maximal_cones().len());
    for idx in x.maximal_cones() {
        let rows: Vec<_> = idx.iter().map(|&f| to_rat(&x.rays()[f])).collect();
        let rhs: Vec<Rat> = idx.iter().map(|&f| Rat::from(-&a[f])).collect();
        let m = solve(&rows, &rhs, d)?;
        if m.iter().any(|c| !c.is_integer()) {
            return None;
        }
        let m: IntVec = m.iter().map(|c| c.to_integer()).collect();
        for (f, v) in x.rays().iter().enumerate() {
            if !idx.contains(&f) && dot(&m, v) <= -&a[f] {
                return None;
            }
        }
        data.push(m);
    }
    Some(data)
}

/// Searches integer vectors `c` with `|c_i| ≤ radius`, by increasing max-norm,
/// for an ample Cartier combination `Σ c_i D_i`.
pub fn find_ample_combination(spec: &MultiSectionRingSpec, radius: i64) -> Option<AmpleCertificate> {
    let n = spec.n();
    let mut checked = 0usize;
    for rho in 1..=radius {
        let mut c = vec![-rho; n];
        loop {
            if c.iter().any(|x| x.abs() == rho) {
                checked += 1;
                if checked > AMPLE_SEARCH_LIMIT {
                    warn!("ample search stopped after {AMPLE_SEARCH_LIMIT} candidates");
                    return None;
                }
                let r: Vec<BigInt> = c.iter().map(|&x| BigInt::from(x)).collect();
                let coeffs = spec.combined_coefficients(&r).expect("length matches");
                if coeffs.iter().all(Rat::is_integer) {
                    let a: IntVec = coeffs.iter().map(|x| x.to_integer()).collect();
                    if let Some(cartier_data) = ample_cartier_data(spec, &a) {
                        debug!("ample combination {c:?}");
                        return Some(AmpleCertificate {
                            combination: c,
                            divisor: a,
                            cartier_data,
                        });
                    }
                }
            }
            let mut k = 0;
            while k < n && c[k] == rho {
                c[k] = -rho;
                k += 1;
            }
            if k == n {
                break;
            }
            c[k] += 1;
        }
    }
    None
}

/// Per-ray `q_F` and valuation rows, with the ampleness certificate when found.
pub fn height_one_prime_data(spec: &MultiSectionRingSpec) -> HeightOneReport {
    let primes = (0..spec.variety().rays().len())
        .map(|f| {
            let q = spec.q()[f].clone();
            let valuations = (0..spec.n())
                .map(|i| {
                    let v = Rat::from(q.clone()) * spec.coefficient(i, f);
                    debug_assert!(v.is_integer());
                    v.to_integer()
                })
                .collect();
            HeightOnePrimeData { ray: f, q, valuations }
        })
        .collect();
    let ample = find_ample_combination(spec, AMPLE_SEARCH_RADIUS);
    if ample.is_none() {
        warn!("no ample integral combination found; height-one prime description unverified");
    }
    HeightOneReport { primes, ample }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassGroupData {
    /// Rays `F_1, …, F_ℓ` with some nonzero coefficient.
    pub relevant: Vec<usize>,
    /// `M = ⊕ (1/q_{F_j}) Z`, recorded by the denominators.
    pub m_denominators: Vec<BigInt>,
    /// Generators `(m_{i,F_1}, …, m_{i,F_ℓ})` of `L`.
    pub l_generators: Vec<Vec<Rat>>,
    /// The same generators in the basis `1/q_{F_j}` of `M`.
    pub l_in_m: Vec<IntVec>,
    /// Generators of `L ∩ Z^ℓ` as integer vectors on the relevant rays.
    pub l_cap_z: Vec<IntVec>,
    pub class_group_x: AbelianGroup,
    /// `Cl(X)` modulo the image of `L ∩ Z^ℓ`.
    pub cokernel_of_image: AbelianGroup,
    /// `M / (L + Z^ℓ)`.
    pub m_mod_l: AbelianGroup,
    pub class_group: AbelianGroup,
    /// Free ranks (and orders, when finite) fit the four-term sequence.
    pub sequence_consistent: bool,
    /// Set when no ample integral combination was found.
    pub conditional: bool,
    pub ample: Option<AmpleCertificate>,
}

/// `Cl(R(X;D))`, presented as `Z^{rays}` modulo the valuations of the
/// homogeneous units `χ^u` and `t_i`.
pub fn class_group(spec: &MultiSectionRingSpec) -> Result<ClassGroupData, ToricError> {
    let x = spec.variety();
    let d = x.lattice_rank();
    let nrays = x.rays().len();
    let n = spec.n();
    let relevant = spec.relevant_rays();
    let ell = relevant.len();
    let q = spec.q();

    let m_denominators: Vec<BigInt> = relevant.iter().map(|&f| q[f].clone()).collect();
    let l_generators: Vec<Vec<Rat>> = (0..n)
        .map(|i| relevant.iter().map(|&f| spec.coefficient(i, f).clone()).collect())
        .collect();
    let l_in_m: Vec<IntVec> = l_generators
        .iter()
        .map(|row| {
            row.iter()
                .zip(&m_denominators)
                .map(|(m, qf)| (m * Rat::from(qf.clone())).to_integer())
                .collect()
        })
        .collect();

    // (b, y) with q_F y_F = Σ_i b_i q_F m_{i,F}, so y = Σ b_i m_i is integral.
    let mut l_cap_z = Vec::new();
    if ell > 0 {
        let mut rows = Vec::with_capacity(ell);
        for j in 0..ell {
            let mut row: IntVec = (0..n).map(|i| l_in_m[i][j].clone()).collect();
            row.extend((0..ell).map(|k| if k == j { -&m_denominators[j] } else { BigInt::zero() }));
            rows.push(row);
        }
        let m = IntMatrix::from_rows(&rows, n + ell)?;
        for v in integer_kernel(&m) {
            let y: IntVec = v[n..].to_vec();
            if y.iter().any(|c| !c.is_zero()) {
                l_cap_z.push(y);
            }
        }
    }

    let ray_rows: Vec<IntVec> = (0..d)
        .map(|k| x.rays().iter().map(|v| v[k].clone()).collect())
        .collect();
    let class_group_x = quotient_by_rows(&ray_rows, nrays);

    let mut image_rows = ray_rows.clone();
    for y in &l_cap_z {
        let mut full = vec![BigInt::zero(); nrays];
        for (j, &f) in relevant.iter().enumerate() {
            full[f] = y[j].clone();
        }
        image_rows.push(full);
    }
    let cokernel_of_image = quotient_by_rows(&image_rows, nrays);

    let mut m_rows = l_in_m.clone();
    for j in 0..ell {
        let mut row = vec![BigInt::zero(); ell];
        row[j] = m_denominators[j].clone();
        m_rows.push(row);
    }
    let m_mod_l = quotient_by_rows(&m_rows, ell);

    let mut presentation: Vec<IntVec> = ray_rows
        .iter()
        .map(|row| row.iter().zip(q).map(|(a, qf)| a * qf).collect())
        .collect();
    for i in 0..n {
        presentation.push(
            (0..nrays)
                .map(|f| (Rat::from(q[f].clone()) * spec.coefficient(i, f)).to_integer())
                .collect(),
        );
    }
    let class_group = quotient_by_rows(&presentation, nrays);

    let sequence_consistent = class_group.free_rank == cokernel_of_image.free_rank
        && m_mod_l.is_finite()
        && match (class_group.order(), cokernel_of_image.order(), m_mod_l.order()) {
            (Some(total), Some(a), Some(b)) => total == a * b,
            (None, None, _) => true,
            _ => false,
        };
    if !sequence_consistent {
        warn!("class group {class_group} does not fit the sequence with {cokernel_of_image} and {m_mod_l}");
    }

    let ample = find_ample_combination(spec, super::classgroup::AMPLE_SEARCH_RADIUS);
    let conditional = ample.is_none();
    if conditional {
        warn!("no ample integral combination found; the class group is conditional");
    }
    debug!("Cl(X) = {class_group_x}, Cl(R) = {class_group}");
    Ok(ClassGroupData {
        relevant,
        m_denominators,
        l_generators,
        l_in_m,
        l_cap_z,
        class_group_x,
        cokernel_of_image,
        m_mod_l,
        class_group,
        sequence_consistent,
        conditional,
        ample,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorialCertificate {
    pub factorial: bool,
    /// `M = L + Z^ℓ`.
    pub m_equals_l_plus_z: bool,
    /// The integral combinations `Σ b_i D_i` generate `Cl(X)`.
    pub image_generates: bool,
    /// Agreement of the criterion with triviality of the computed class group.
    pub agrees_with_class_group: bool,
    pub data: ClassGroupData,
}

pub fn is_factorial(spec: &MultiSectionRingSpec) -> Result<FactorialCertificate, ToricError> {
    let data = class_group(spec)?;
    let m_equals_l_plus_z = data.m_mod_l.is_trivial();
    let image_generates = data.cokernel_of_image.is_trivial();
    let factorial = m_equals_l_plus_z && image_generates;
    let agrees_with_class_group = factorial == data.class_group.is_trivial();
    if !agrees_with_class_group {
        warn!("factoriality criterion disagrees with Cl(R) = {}", data.class_group);
    }
    Ok(FactorialCertificate {
        factorial,
        m_equals_l_plus_z,
        image_generates,
        agrees_with_class_group,
        data,
    })
}
