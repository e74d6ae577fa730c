//! Runs the bundled fixtures against their known answers.

use std::collections::BTreeSet;

use rayfan::chamber::{assemble_fan, planar_polynomial_ray_ideal_bound, theorem4_check};
use rayfan::toric::{class_group, demazure_roundtrip, graded_piece_dim_i64, is_factorial};
use serde_json::Value;

use crate::input::{parse_ring_spec, parse_toric_spec};
use crate::report::{Check, Results, SelftestResult};
use crate::CliError;

pub const FIXTURES: &[(&str, &str)] = &[
    ("planar_xyz", include_str!("../fixtures/planar_xyz.json")),
    ("segre_semigroup", include_str!("../fixtures/segre_semigroup.json")),
    ("five_variables", include_str!("../fixtures/five_variables.json")),
    ("weighted_p1xp1", include_str!("../fixtures/weighted_p1xp1.json")),
    ("p1xp1_half_rulings", include_str!("../fixtures/p1xp1_half_rulings.json")),
    ("p1_point", include_str!("../fixtures/p1_point.json")),
    ("p1_half_point", include_str!("../fixtures/p1_half_point.json")),
    ("p1xp1_ruling", include_str!("../fixtures/p1xp1_ruling.json")),
];

fn fixture(name: &str) -> Result<Value, CliError> {
    let text = FIXTURES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, t)| *t)
        .ok_or_else(|| CliError::Internal(format!("no fixture {name}")))?;
    Ok(serde_json::from_str(text)?)
}

pub fn run() -> Result<(Results, Vec<Check>), CliError> {
    let mut checks = Vec::new();

    let (ring, _) = parse_ring_spec(&fixture("planar_xyz")?)?;
    let fan = assemble_fan(&ring)?;
    checks.push(
        Check::new("planar_xyz: six ray ideals, fan verified", fan.cones.len() == 6 && fan.report.all_ok())
            .with_detail(format!("{} cones", fan.cones.len())),
    );

    let (ring, _) = parse_ring_spec(&fixture("segre_semigroup")?)?;
    let fan = assemble_fan(&ring)?;
    let distinct: BTreeSet<_> = fan.ideals().map(|j| j.members().to_vec()).collect();
    let bound = planar_polynomial_ray_ideal_bound(3);
    checks.push(
        Check::new("segre_semigroup: more ray ideals than any planar polynomial ring in 3 variables", distinct.len() > bound)
            .with_detail(format!("{} > {bound}", distinct.len())),
    );

    let (ring, _) = parse_ring_spec(&fixture("five_variables")?)?;
    let fan = assemble_fan(&ring)?;
    let thm4 = theorem4_check(&ring)?;
    checks.push(Check::new(
        "five_variables: two chambers and a non-finite morphism",
        fan.maximal.len() == 2 && thm4.consistent() && thm4.witness.is_some(),
    ));

    let (ring, _) = parse_ring_spec(&fixture("weighted_p1xp1")?)?;
    let fan = assemble_fan(&ring)?;
    let sigma = &fan.maximal_cones().next().expect("a chamber").cone;
    let rep = demazure_roundtrip(&ring, sigma, 4)?;
    checks.push(
        Check::new(
            "weighted_p1xp1: round trip gives P^1 x P^1 with matching graded pieces",
            fan.maximal.len() == 1 && rep.name.as_deref() == Some("P^1 x P^1") && rep.all_match(),
        )
        .with_detail(format!("{} grid points", rep.grid_points)),
    );

    let spec = parse_toric_spec(&fixture("p1xp1_half_rulings")?)?;
    let dim = graded_piece_dim_i64(&spec, &[2, 2])?;
    checks.push(Check::new("p1xp1_half_rulings: dim R_(2,2) = 4", dim == 4).with_detail(format!("got {dim}")));

    for name in ["p1xp1_half_rulings", "p1_point", "p1_half_point"] {
        let cert = is_factorial(&parse_toric_spec(&fixture(name)?)?)?;
        checks.push(
            Check::new(
                &format!("{name}: factorial"),
                cert.factorial && cert.data.class_group.is_trivial() && !cert.data.conditional,
            )
            .with_detail(format!("Cl = {}", cert.data.class_group)),
        );
    }

    let spec = parse_toric_spec(&fixture("p1xp1_ruling")?)?;
    let data = class_group(&spec)?;
    let cert = is_factorial(&spec)?;
    checks.push(
        Check::new(
            "p1xp1_ruling: Cl = Z, not factorial",
            data.class_group.free_rank == 1 && data.class_group.torsion.is_empty() && !cert.factorial,
        )
        .with_detail(format!("Cl = {}", data.class_group)),
    );

    let out = SelftestResult {
        fixtures: FIXTURES.len(),
        cases: checks.len(),
    };
    Ok((Results::Selftest(out), checks))
}
