//! Acceptance suite: one PASS/FAIL line per criterion, exact comparisons only.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;
use rayfan::chamber::{
    assemble_fan, chamber_decomposition, morphism_poset, planar_polynomial_ray_ideal_bound, theorem4_check,
};
use rayfan::graded::{brute_force_ray_ideal, mask_of, GenMask, GradedRingSpec, IdealOrder, Monomial, RayIdeal};
use rayfan::poly::vector::{int_vec, rat, to_rat, IntVec, Rat, RatVec};
use rayfan::poly::{IntMatrix, RationalCone};
use rayfan::toric::{
    class_group, demazure_roundtrip, direct_monomial_count, graded_piece_dim_i64, is_factorial,
    MultiSectionRingSpec, QDivisor, ToricVarietySpec,
};
use rayfan::FanError;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn masks(ideal: &RayIdeal) -> BTreeSet<GenMask> {
    ideal.minimal_members().iter().copied().collect()
}

fn gens(sets: &[&[usize]]) -> BTreeSet<GenMask> {
    sets.iter().map(|s| mask_of(s)).collect()
}

fn planar_xyz() -> GradedRingSpec {
    GradedRingSpec::polynomial_named(
        vec![int_vec(&[1, 0]), int_vec(&[1, 1]), int_vec(&[0, 1])],
        2,
        vec!["x".into(), "y".into(), "z".into()],
    )
    .unwrap()
}

fn criterion_1() -> Outcome {
    let ring = planar_xyz();
    let fan = assemble_fan(&ring).map_err(err)?;
    ensure(fan.report.all_ok(), || format!("fan verification failed: {:?}", fan.report.failures))?;
    let cone = |g: &[&[i64]]| RationalCone::from_i64_generators(g, 2).unwrap();
    let (x, y, z) = (0usize, 1usize, 2usize);
    let expected: Vec<(BTreeSet<GenMask>, RationalCone)> = vec![
        (gens(&[&[]]), RationalCone::zero(2)),
        (gens(&[&[x]]), cone(&[&[1, 0]])),
        (gens(&[&[x, z], &[y]]), cone(&[&[1, 1]])),
        (gens(&[&[z]]), cone(&[&[0, 1]])),
        (gens(&[&[x, y], &[x, z]]), cone(&[&[1, 0], &[1, 1]])),
        (gens(&[&[x, z], &[y, z]]), cone(&[&[1, 1], &[0, 1]])),
    ];
    let found: BTreeSet<(BTreeSet<GenMask>, RationalCone)> =
        fan.cones.iter().map(|c| (masks(&c.ideal), c.cone.clone())).collect();
    let want: BTreeSet<_> = expected.into_iter().collect();
    ensure(found == want, || format!("got {} (ideal, cone) pairs, not the six expected", found.len()))?;
    ensure(fan.cones.iter().all(|c| !c.ideal.is_zero()), || "a zero ideal was listed".into())?;
    let listed: Vec<String> = fan.cones.iter().map(|c| c.ideal.to_string()).collect();
    Ok(format!("ideals {}", listed.join(" ")))
}

/// Degrees sorted counter-clockwise, grouped by ray.
fn slope_groups(ring: &GradedRingSpec) -> Vec<Vec<usize>> {
    let d = ring.degrees();
    let det = |p: &IntVec, q: &IntVec| &p[0] * &q[1] - &p[1] * &q[0];
    let mut order: Vec<usize> = (0..d.len()).collect();
    order.sort_by(|&i, &j| det(&d[j], &d[i]).cmp(&BigInt::zero()));
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for i in order {
        match groups.last_mut() {
            Some(g) if det(&d[g[0]], &d[i]).is_zero() => g.push(i),
            _ => groups.push(vec![i]),
        }
    }
    groups
}

/// Minimal generators of `(x_S1) ∩ (x_S2)`.
fn intersection(s1: &[usize], s2: &[usize]) -> BTreeSet<GenMask> {
    let mut out = BTreeSet::new();
    for &j in s1 {
        if s2.contains(&j) {
            out.insert(mask_of(&[j]));
        }
    }
    for &j in s1 {
        for &k in s2 {
            if !s2.contains(&j) && !s1.contains(&k) {
                out.insert(mask_of(&[j, k]));
            }
        }
    }
    out
}

fn criterion_2() -> Outcome {
    let mut r = common::rng(22);
    let mut rings = 0;
    let mut chambers = 0;
    let mut rays = 0;
    while rings < 50 {
        let s = r.gen_range(1..=6);
        let degrees: Vec<IntVec> = (0..s)
            .map(|_| (0..2).map(|_| BigInt::from(r.gen_range(-3i64..=3))).collect())
            .collect();
        let Ok(ring) = GradedRingSpec::polynomial(degrees, 2) else { continue };
        rings += 1;
        let groups = slope_groups(&ring);
        let m = groups.len();
        let flat = |range: std::ops::Range<usize>| -> Vec<usize> { groups[range].concat() };
        let rep = |g: usize| ring.degrees()[groups[g][0]].clone();

        for g in 0..m {
            let expected = if m == 1 {
                intersection(&flat(0..1), &flat(0..1))
            } else if g == 0 {
                intersection(&flat(0..1), &flat(0..m))
            } else {
                intersection(&flat(0..g + 1), &flat(g..m))
            };
            let ideal = ring.ray_ideal_int(&rep(g)).map_err(err)?;
            ensure(masks(&ideal) == expected, || {
                format!("degrees {:?}: ray {:?} has {ideal}", ring.degrees(), rep(g))
            })?;
            rays += 1;
        }
        let mut expected_chambers = BTreeSet::new();
        for g in 0..m.saturating_sub(1) {
            let a: IntVec = rep(g).iter().zip(rep(g + 1)).map(|(p, q)| p + q).collect();
            let ideal = ring.ray_ideal_int(&a).map_err(err)?;
            let expected = intersection(&flat(0..g + 1), &flat(g + 1..m));
            ensure(masks(&ideal) == expected, || {
                format!("degrees {:?}: chamber at {a:?} has {ideal}", ring.degrees())
            })?;
            expected_chambers.insert(RationalCone::from_generators(&[rep(g), rep(g + 1)], 2).map_err(err)?);
            chambers += 1;
        }
        let found: BTreeSet<RationalCone> = chamber_decomposition(&ring)
            .map_err(err)?
            .into_iter()
            .filter(|c| c.cone.dim() == 2)
            .map(|c| c.cone)
            .collect();
        ensure(found == expected_chambers, || format!("degrees {:?}: chamber cones differ", ring.degrees()))?;
    }
    Ok(format!("{rings} degree sets, {chambers} chambers, {rays} rays"))
}

fn criterion_3() -> Outcome {
    let exps = vec![int_vec(&[1, 0, 1, 0]), int_vec(&[1, 0, 0, 1]), int_vec(&[0, 1, 1, 0]), int_vec(&[0, 1, 0, 1])];
    let g = IntMatrix::from_i64_rows(&[&[3, 1, 0, -1], &[0, 2, 0, 1]]).unwrap();
    let ring = GradedRingSpec::semigroup_named(
        exps,
        g,
        None,
        vec!["x".into(), "y".into(), "z".into(), "w".into()],
        vec!["s".into(), "t".into(), "u".into(), "v".into()],
    )
    .map_err(err)?;
    let fan = assemble_fan(&ring).map_err(err)?;
    ensure(fan.report.all_ok(), || format!("fan verification failed: {:?}", fan.report.failures))?;
    let ideals: Vec<&RayIdeal> = fan.ideals().collect();
    let distinct: BTreeSet<BTreeSet<GenMask>> = ideals.iter().map(|i| masks(i)).collect();
    ensure(ideals.iter().all(|i| !i.is_zero()), || "a zero ideal was listed".into())?;
    ensure(ideals.len() == 8 && distinct.len() == 8, || format!("{} ideals, {} distinct", ideals.len(), distinct.len()))?;
    let bound = planar_polynomial_ray_ideal_bound(3);
    ensure(ideals.len() > bound, || format!("bound {bound} not exceeded"))?;
    Ok(format!("8 distinct ray ideals > {bound} allowed for a Z^2-graded polynomial ring in 3 variables"))
}

fn criterion_4() -> Outcome {
    let mut r = common::rng(44);
    let mut checked = 0u64;
    let mut disagreements = 0u64;
    for _ in 0..200 {
        let ring = common::random_polynomial_ring(&mut r, 3, 5);
        let a = common::random_point(&mut r, &ring);
        let oracle = brute_force_ray_ideal(&ring, &a, 8);
        for e in common::monomials_up_to(ring.num_generators(), 8) {
            let m = Monomial::from_i64(&e);
            let face = ring.monomial_in_ray_ideal(&m, &a).map_err(err)?;
            checked += 1;
            if face != oracle.contains(&m) {
                disagreements += 1;
            }
        }
    }
    ensure(disagreements == 0, || format!("{disagreements} disagreements"))?;
    Ok(format!("200 specs, {checked} monomials, 0 disagreements"))
}

fn combo(a: &RatVec, b: &RatVec, s: &Rat) -> RatVec {
    a.iter().zip(b).map(|(x, y)| x + s * (y - x)).collect()
}

fn criterion_5() -> Outcome {
    let mut r = common::rng(55);
    let mut triples = 0u64;
    for _ in 0..100 {
        let ring = common::random_polynomial_ring(&mut r, 3, 5);
        let fan = assemble_fan(&ring).map_err(err)?;
        let mut points: Vec<RatVec> = fan.cones.iter().map(|c| to_rat(&c.witness)).collect();
        for _ in 0..4 {
            points.push(common::random_point(&mut r, &ring));
        }
        let ideals: Vec<RayIdeal> = points.iter().map(|p| ring.ray_ideal(p)).collect::<Result<_, _>>().map_err(err)?;
        for (a, ja) in points.iter().zip(&ideals) {
            for (b, jb) in points.iter().zip(&ideals) {
                if ja.is_zero() || a == b {
                    continue;
                }
                if !matches!(ja.compare(jb).map_err(err)?, IdealOrder::LessThan | IdealOrder::Equal) {
                    continue;
                }
                for s in [rat(1, 7), rat(1, 2), rat(5, 6)] {
                    let c = combo(a, b, &s);
                    triples += 1;
                    let jc = ring.ray_ideal(&c).map_err(err)?;
                    ensure(jc == *ja, || format!("degrees {:?}: a = {a:?}, b = {b:?}, c = {c:?}", ring.degrees()))?;
                }
            }
        }
    }
    Ok(format!("100 specs, {triples} triples with 0 != J_a ⊆ J_b, 0 violations"))
}

fn criterion_6() -> Outcome {
    let mut r = common::rng(66);
    let mut cones = 0;
    for _ in 0..100 {
        let ring = common::random_polynomial_ring(&mut r, 3, 5);
        let fan = assemble_fan(&ring).map_err(err)?;
        let rep = &fan.report;
        ensure(
            rep.face_closure && rep.unique_maximality && rep.order_reversal && rep.fan_axioms && rep.constructions_agree,
            || format!("degrees {:?}: {:?}", ring.degrees(), rep.failures),
        )?;
        ensure(rep.all_ok(), || format!("degrees {:?}: {:?}", ring.degrees(), rep.failures))?;
        cones += fan.cones.len();
    }
    Ok(format!("100 fans, {cones} cones, all checks true"))
}

fn criterion_7() -> Outcome {
    let rep = theorem4_check(&planar_xyz()).map_err(err)?;
    ensure(!rep.one_chamber && rep.consistent(), || format!("planar xyz: {rep:?}"))?;
    let (p, q) = rep.witness.clone().ok_or("no witness")?;
    let ring = planar_xyz();
    ensure(ring.ray_ideal_int(&p).map_err(err)? != ring.ray_ideal_int(&q).map_err(err)?, || "witness ideals agree".into())?;
    let axis = GradedRingSpec::polynomial_i64(&[&[1, 0], &[2, 0], &[0, 1], &[0, 3]]).map_err(err)?;
    let rep_axis = theorem4_check(&axis).map_err(err)?;
    ensure(rep_axis.one_chamber && rep_axis.consistent(), || format!("axis-only: {rep_axis:?}"))?;

    let mut r = common::rng(77);
    let mut trials = 0;
    while trials < 100 {
        let n = r.gen_range(1..=3);
        let s = r.gen_range(1..=5);
        let axis_only = r.gen_bool(0.25);
        let degrees: Vec<IntVec> = (0..s)
            .map(|_| {
                let keep = r.gen_range(0..n);
                (0..n)
                    .map(|i| if axis_only && i != keep { BigInt::zero() } else { BigInt::from(r.gen_range(0i64..=3)) })
                    .collect()
            })
            .collect();
        let Ok(ring) = GradedRingSpec::polynomial(degrees, n) else { continue };
        let rep = match theorem4_check(&ring) {
            Err(FanError::NotOrthant(_)) => continue,
            other => other.map_err(err)?,
        };
        trials += 1;
        let fan = assemble_fan(&ring).map_err(err)?;
        ensure(rep.consistent() && rep.one_chamber == (fan.maximal.len() == 1), || {
            format!("degrees {:?}: {rep:?}", ring.degrees())
        })?;
    }
    let (p, q) = rep.witness.unwrap();
    Ok(format!("planar xyz false with witness {p:?} / {q:?}; axis-only true; 100 random trials consistent"))
}

fn criterion_8() -> Outcome {
    let ring = GradedRingSpec::polynomial_i64(&[&[1, 0], &[2, 0], &[0, 1], &[0, 2]]).map_err(err)?;
    let report = demazure_roundtrip(&ring, &RationalCone::orthant(2), 10).map_err(err)?;
    ensure(report.name.as_deref() == Some("P^1 x P^1"), || format!("quotient {:?}", report.name))?;
    let half = rat(1, 2);
    for (j, d) in report.msr.divisors().iter().enumerate() {
        let nonzero: Vec<&Rat> = d.coefficients().iter().filter(|c| !c.is_zero()).collect();
        ensure(nonzero == [&half], || format!("D_{} has coefficients {:?}", j + 1, d.coefficients()))?;
    }
    ensure(report.all_match(), || format!("mismatches {:?}", report.mismatches))?;
    for r1 in -10i64..=10 {
        for r2 in -10i64..=10 {
            let expected = if r1 < 0 || r2 < 0 { 0 } else { ((r1.div_euclid(2) + 1) * (r2.div_euclid(2) + 1)) as u64 };
            let lattice = graded_piece_dim_i64(&report.msr, &[r1, r2]).map_err(err)?;
            let direct = direct_monomial_count(&ring, &[r1, r2]);
            ensure(lattice == expected && direct == expected, || {
                format!("r = ({r1},{r2}): formula {expected}, lattice {lattice}, monomials {direct}")
            })?;
        }
    }
    Ok(format!("X = P^1 x P^1, coefficients 1/2, {} grid points match", report.grid_points))
}

fn criterion_9() -> Outcome {
    let spec = |x: ToricVarietySpec, ds: &[&[(i64, i64)]]| {
        MultiSectionRingSpec::new(x, ds.iter().map(|d| QDivisor::from_fractions(d)).collect())
    };
    let cases = [
        ("half rulings", spec(ToricVarietySpec::p1_times_p1(), &[&[(1, 2), (0, 1), (0, 1), (0, 1)], &[(0, 1), (0, 1), (1, 2), (0, 1)]])),
        ("(P^1, [pt])", spec(ToricVarietySpec::projective_line(), &[&[(1, 1), (0, 1)]])),
        ("(P^1, 1/2 [pt])", spec(ToricVarietySpec::projective_line(), &[&[(1, 2), (0, 1)]])),
    ];
    let mut parts = Vec::new();
    for (name, s) in cases {
        let s = s.map_err(err)?;
        let cert = is_factorial(&s).map_err(err)?;
        ensure(cert.data.class_group.is_trivial() && cert.factorial && !cert.data.conditional, || {
            format!("{name}: Cl(R) = {}, factorial {}", cert.data.class_group, cert.factorial)
        })?;
        parts.push(format!("{name}: Cl(R) = 0"));
    }
    let ruling = spec(ToricVarietySpec::p1_times_p1(), &[&[(1, 1), (0, 1), (0, 1), (0, 1)]]).map_err(err)?;
    let data = class_group(&ruling).map_err(err)?;
    ensure(data.class_group.free_rank == 1 && data.class_group.torsion.is_empty(), || {
        format!("one ruling: Cl(R) = {}", data.class_group)
    })?;
    ensure(!is_factorial(&ruling).map_err(err)?.factorial, || "one ruling reported factorial".into())?;
    parts.push(format!("one ruling: Cl(R) = {}", data.class_group));
    Ok(parts.join("; "))
}

fn criterion_10() -> Outcome {
    let ring = GradedRingSpec::polynomial_i64(&[&[1, 0], &[1, 0], &[0, 1], &[0, 1], &[1, 1]]).map_err(err)?;
    let fan = assemble_fan(&ring).map_err(err)?;
    ensure(fan.report.all_ok(), || format!("{:?}", fan.report.failures))?;
    ensure(fan.maximal.len() == 2, || format!("{} maximal chambers", fan.maximal.len()))?;
    let diag = fan
        .index_of(&RationalCone::from_i64_generators(&[&[1, 1]], 2).unwrap())
        .ok_or("ray (1,1) is not a cone of the fan")?;
    let poset = morphism_poset(&fan);
    for &m in &fan.maximal {
        ensure(poset.edges.contains(&(m, diag)), || format!("no edge from cone {m} to the (1,1) ray"))?;
    }
    let mut points = 0;
    for cone in fan.maximal_cones() {
        let report = demazure_roundtrip(&ring, &cone.cone, 6).map_err(err)?;
        ensure(report.all_match(), || format!("{}: mismatches {:?}", cone.cone, report.mismatches))?;
        points += report.grid_points;
    }
    Ok(format!("2 chambers, edges to the (1,1) ray, {points} grid points match"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, Duration); 10] = [
        ("planar xyz golden test", criterion_1, Duration::from_secs(1)),
        ("two-ray family formulas", criterion_2, Duration::from_secs(30)),
        ("Segre semigroup golden test", criterion_3, Duration::from_secs(5)),
        ("face-criterion oracle gate", criterion_4, Duration::from_secs(300)),
        ("segment property suite", criterion_5, Duration::from_secs(120)),
        ("fan suite", criterion_6, Duration::from_secs(300)),
        ("finite-extension checker", criterion_7, Duration::from_secs(60)),
        ("weighted P^1 x P^1 round trip", criterion_8, Duration::from_secs(10)),
        ("class group suite", criterion_9, Duration::from_secs(5)),
        ("two-chamber blow-up test", criterion_10, Duration::from_secs(10)),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if elapsed > limit => Err(format!("{msg}; took {elapsed:.2?}, limit {limit:?}")),
            other => other,
        };
        match outcome {
            Ok(msg) => println!("PASS {:>2} {name} ({elapsed:.2?}): {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({elapsed:.2?}): {msg}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
