use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rayfan::chamber::assemble_fan;
use rayfan::graded::{restrict_to_cone, restrict_to_subgroup, GradedRingSpec, IdealOrder};
use rayfan::poly::vector::{dot, int_vec, rat, to_rat, IntVec, Rat, RatVec};

fn ring_strategy(max_n: usize, max_s: usize) -> impl Strategy<Value = GradedRingSpec> {
    (1..=max_n)
        .prop_flat_map(move |n| {
            prop::collection::vec(prop::collection::vec(-3i64..=3, n), 1..=max_s)
                .prop_map(move |d| (n, d))
        })
        .prop_filter_map("positivity", |(n, d)| {
            GradedRingSpec::polynomial(d.iter().map(|r| int_vec(r)).collect(), n).ok()
        })
}

fn combo(a: &[BigInt], b: &[BigInt], s: &Rat) -> RatVec {
    let one = Rat::from_integer(1.into());
    to_rat(a)
        .iter()
        .zip(to_rat(b))
        .map(|(x, y)| s * x + (&one - s) * y)
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn member_faces_are_up_closed(ring in ring_strategy(3, 5), p in prop::collection::vec(-3i64..=3, 3)) {
        let a: Vec<Rat> = p.iter().take(ring.n()).map(|x| rat(*x, 2)).collect();
        let j = ring.ray_ideal(&a).unwrap();
        let mins = j.minimal_members();
        for (x, &m) in mins.iter().enumerate() {
            for &o in &mins[x + 1..] {
                prop_assert!(m & o != m && m & o != o);
            }
        }
        for f in ring.faces() {
            let above = mins.iter().any(|&m| f.mask & m == m);
            prop_assert_eq!(above, j.contains_face(f.mask));
        }
        prop_assert_eq!(j.is_zero(), !ring.weight_cone().contains(&a).unwrap());
    }

    #[test]
    fn segment_property(ring in ring_strategy(3, 5), pick in any::<u64>(), s_num in 1i64..8) {
        let fan = assemble_fan(&ring).unwrap();
        let cones = &fan.cones;
        let a = &cones[(pick as usize) % cones.len()];
        let s = rat(s_num, 8);
        for b in cones {
            let ord = a.ideal.compare(&b.ideal).unwrap();
            if b.ideal.is_zero() || !matches!(ord, IdealOrder::LessThan | IdealOrder::Equal) {
                continue;
            }
            let c = combo(&a.witness, &b.witness, &s);
            prop_assert_eq!(ring.ray_ideal(&c).unwrap(), a.ideal.clone());
        }
    }

    #[test]
    fn line_neighbourhood_keeps_the_ideal(ring in ring_strategy(3, 5), pick in any::<u64>()) {
        let fan = assemble_fan(&ring).unwrap();
        let cone = &fan.cones[(pick as usize) % fan.cones.len()];
        if cone.cone.dim() < 2 {
            return Ok(());
        }
        let pts = cone.cone.relint_points(2);
        let (a, b) = (&pts[0], &pts[1]);
        let dir: IntVec = b.iter().zip(a).map(|(x, y)| x - y).collect();
        // largest t with b ± t·dir still in the relative interior
        let mut delta: Option<Rat> = None;
        for f in cone.cone.facets() {
            let slope = dot(f, &dir);
            if slope.is_zero() {
                continue;
            }
            let t = BigRational::new(dot(f, b), slope.abs());
            delta = Some(match delta { Some(d) if d < t => d, _ => t });
        }
        let delta = delta.unwrap_or_else(|| Rat::from_integer(1.into()));
        for k in [2i64, 4, 16] {
            for sign in [1i64, -1] {
                let t = &delta * rat(sign, k);
                let p: RatVec = to_rat(b).iter().zip(to_rat(&dir)).map(|(x, d)| x + &t * d).collect();
                prop_assert_eq!(ring.ray_ideal(&p).unwrap(), cone.ideal.clone());
            }
        }
    }

    #[test]
    fn ideals_grow_on_faces(ring in ring_strategy(3, 5)) {
        let fan = assemble_fan(&ring).unwrap();
        for sigma in &fan.cones {
            for face in sigma.cone.face_lattice() {
                for p in face.cone.relint_points(2) {
                    let j = ring.ray_ideal_int(&p).unwrap();
                    prop_assert!(matches!(
                        j.compare(&sigma.ideal).unwrap(),
                        IdealOrder::GreaterThan | IdealOrder::Equal
                    ));
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(30))]

    #[test]
    fn restriction_to_a_cone_keeps_containment(ring in ring_strategy(2, 4), pick in any::<u64>()) {
        let fan = assemble_fan(&ring).unwrap();
        let sigma = &fan.cones[(pick as usize) % fan.cones.len()];
        if sigma.cone.is_zero() {
            return Ok(());
        }
        let sub = restrict_to_cone(&ring, &sigma.cone, 4).unwrap();
        let a = sigma.cone.relint_point();
        for face in sigma.cone.face_lattice() {
            for b in face.cone.relint_points(2) {
                let whole = ring.ray_ideal_int(&a).unwrap().compare(&ring.ray_ideal_int(&b).unwrap()).unwrap();
                let part = sub.ray_ideal_int(&a).unwrap().compare(&sub.ray_ideal_int(&b).unwrap()).unwrap();
                prop_assert_eq!(whole, part);
            }
        }
    }

    #[test]
    fn restriction_to_a_sublattice_keeps_containment(
        ring in ring_strategy(2, 4),
        d in prop::collection::vec(1i64..=3, 2),
        coeffs in prop::collection::vec(prop::collection::vec(0i64..=3, 2), 4),
    ) {
        let n = ring.n();
        let basis: Vec<IntVec> = (0..n)
            .map(|i| (0..n).map(|j| BigInt::from(if i == j { d[i] } else { 0 })).collect())
            .collect();
        let sub = restrict_to_subgroup(&ring, &basis, 4).unwrap();
        prop_assert_eq!(sub.weight_cone(), ring.weight_cone());
        let pts: Vec<IntVec> = ring
            .degrees()
            .iter()
            .chain(coeffs.iter().map(|c| int_vec(&c[..n])).collect::<Vec<_>>().iter())
            .map(|p| p.iter().zip(&d).map(|(x, di)| x * BigInt::from(*di)).collect())
            .collect();
        for a in &pts {
            for b in &pts {
                let whole = ring.ray_ideal_int(a).unwrap().compare(&ring.ray_ideal_int(b).unwrap()).unwrap();
                let part = sub.ray_ideal_int(a).unwrap().compare(&sub.ray_ideal_int(b).unwrap()).unwrap();
                prop_assert_eq!(whole, part, "a={:?} b={:?}", a, b);
            }
        }
    }
}
