//! One function per subcommand; each returns a complete report.

use std::path::{Path, PathBuf};

use log::info;
use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayfan::chamber::{assemble_fan, chamber_decomposition, build_arrangement, maximal_ray_ideal_cone, morphism_poset, theorem4_check, ChamberFan};
use rayfan::graded::{GradedRingSpec, IdealOrder};
use rayfan::poly::vector::IntVec;
use rayfan::poly::RationalCone;
use rayfan::toric::{
    class_group, demazure_roundtrip, graded_piece_dim, height_one_prime_data, is_factorial, AmpleCertificate,
    MultiSectionRingSpec, ToricVarietySpec,
};
use serde_json::Value;

use crate::input::{parse_generators, parse_point, parse_ring_spec, parse_toric_spec};
use crate::report::*;
use crate::{plot, selftest, CliError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Command {
    Chambers,
    Fan,
    Rayideal,
    Compare,
    Thm4,
    MsrDim,
    Classgroup,
    Factorial,
    Roundtrip,
    Plot2d,
    Selftest,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Chambers => "chambers",
            Command::Fan => "fan",
            Command::Rayideal => "rayideal",
            Command::Compare => "compare",
            Command::Thm4 => "thm4",
            Command::MsrDim => "msr-dim",
            Command::Classgroup => "classgroup",
            Command::Factorial => "factorial",
            Command::Roundtrip => "roundtrip",
            Command::Plot2d => "plot2d",
            Command::Selftest => "selftest",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Options {
    pub grid_bound: i64,
    pub samples: usize,
    pub seed: u64,
    pub points: Vec<String>,
    pub degree: Option<String>,
    pub chamber: Option<String>,
    pub output: Option<PathBuf>,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            grid_bound: 6,
            samples: 200,
            seed: 0,
            points: Vec::new(),
            degree: None,
            chamber: None,
            output: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Job {
    pub command: Command,
    pub input: Option<PathBuf>,
    pub options: Options,
}

pub fn read_json(path: &Path) -> Result<Value, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.display().to_string(),
        source,
    })?;
    Ok(serde_json::from_str(&text)?)
}

fn require_input(job: &Job) -> Result<Value, CliError> {
    match &job.input {
        Some(p) => read_json(p),
        None => Err(CliError::Schema(vec![format!("{} needs --input", job.command.name())])),
    }
}

pub fn run(job: &Job) -> Result<Report, CliError> {
    info!("running {}", job.command.name());
    let mut warnings = Vec::new();
    let (results, verification) = match job.command {
        Command::Selftest => selftest::run()?,
        Command::MsrDim | Command::Classgroup | Command::Factorial => {
            let spec = parse_toric_spec(&require_input(job)?)?;
            match job.command {
                Command::MsrDim => msr_dim(&spec, &job.options)?,
                Command::Classgroup => classgroup(&spec)?,
                _ => factorial(&spec)?,
            }
        }
        _ => {
            let (ring, w) = parse_ring_spec(&require_input(job)?)?;
            warnings = w;
            ring_command(job, &ring)?
        }
    };
    let conditional = match &results {
        Results::Classgroup(r) => r.conditional,
        Results::Factorial(r) => r.conditional,
        _ => false,
    };
    if conditional {
        warnings.push(format!(
            "no ample integral combination of the divisors in [-{r},{r}]^n; the class group is conditional",
            r = rayfan::toric::AMPLE_SEARCH_RADIUS
        ));
    }
    Ok(Report {
        schema: SCHEMA.to_string(),
        command: job.command.name().to_string(),
        input: job.input.as_ref().map(|p| p.display().to_string()),
        warnings,
        results,
        verification,
        timing_ms: None,
    })
}

pub fn ring_command(job: &Job, ring: &GradedRingSpec) -> Result<(Results, Vec<Check>), CliError> {
    let opts = &job.options;
    match job.command {
        Command::Chambers => chambers(ring, opts),
        Command::Fan => fan(ring, opts),
        Command::Rayideal => rayideal(ring, opts),
        Command::Compare => compare(ring, opts),
        Command::Thm4 => thm4(ring),
        Command::Roundtrip => roundtrip(ring, opts),
        Command::Plot2d => plot2d(ring, opts),
        other => Err(CliError::Schema(vec![format!("{} does not take a ring spec", other.name())])),
    }
}

fn fan_checks(fan: &ChamberFan) -> Vec<Check> {
    let r = &fan.report;
    let mut checks = vec![
        Check::new("face closure", r.face_closure),
        Check::new("unique maximality", r.unique_maximality),
        Check::new("order reversal", r.order_reversal),
        Check::new("fan axioms", r.fan_axioms),
        Check::new("coverage of C(A)", r.coverage).with_detail(format!("{} samples", r.coverage_samples)),
        Check::new("ideal constant on chambers", r.constancy),
        Check::new("sign cells agree with orbit-cone intersections", r.constructions_agree)
            .with_detail(format!("{} cells before merging", r.pre_merge_cells)),
    ];
    if !r.failures.is_empty() {
        checks.push(Check::new("no recorded failures", false).with_detail(r.failures.join("; ")));
    }
    checks
}

/// Seeded random points: each carries the ideal of the unique cone whose
/// relative interior contains it, or the zero ideal outside `C(A)`.
fn sample_check(fan: &ChamberFan, samples: usize, seed: u64) -> Result<Check, CliError> {
    let ring = &fan.ring;
    let n = ring.n();
    let mut rng: ChaCha8Rng = rand::SeedableRng::seed_from_u64(seed);
    let mut bad = Vec::new();
    for _ in 0..samples {
        let p: IntVec = if rng.gen_bool(0.75) {
            ring.degrees().iter().fold(vec![BigInt::from(0); n], |acc, d| {
                let k = BigInt::from(rng.gen_range(0i64..=3));
                acc.iter().zip(d).map(|(a, x)| a + &k * x).collect()
            })
        } else {
            (0..n).map(|_| BigInt::from(rng.gen_range(-5i64..=5))).collect()
        };
        let j = ring.ray_ideal_int(&p)?;
        let holders: Vec<_> = fan
            .cones
            .iter()
            .filter(|c| c.cone.relint_contains_int(&p).unwrap_or(false))
            .collect();
        let ok = match holders.as_slice() {
            [] => j.is_zero(),
            [c] => c.ideal == j,
            _ => false,
        };
        if !ok {
            bad.push(format!("{:?}", p.iter().map(|x| x.to_string()).collect::<Vec<_>>()));
        }
    }
    let check = Check::new("sampled points carry the ideal of their cone", bad.is_empty())
        .with_detail(format!("{samples} points, seed {seed}"));
    Ok(if bad.is_empty() { check } else { check.with_detail(format!("failed at {}", bad.join(", "))) })
}

fn cells(fan: &ChamberFan) -> Vec<CellOut> {
    fan.cones
        .iter()
        .enumerate()
        .map(|(i, c)| CellOut {
            cone: (&c.cone).into(),
            ideal: (&c.ideal).into(),
            maximal: fan.maximal.contains(&i),
        })
        .collect()
}

fn chambers(ring: &GradedRingSpec, opts: &Options) -> Result<(Results, Vec<Check>), CliError> {
    let arr = build_arrangement(ring)?;
    let chambers = chamber_decomposition(ring)?;
    let fan = assemble_fan(ring)?;
    let mut checks = fan_checks(&fan);
    checks.push(sample_check(&fan, opts.samples, opts.seed)?);
    let out = ChambersResult {
        ring: ring.into(),
        hyperplanes: arr.normals.iter().map(|v| ints(v)).collect(),
        chambers: chambers
            .iter()
            .map(|c| ChamberOut {
                cone: (&c.cone).into(),
                signs: c.signs.clone(),
                witness: ints(&c.witness),
                ideal: (&c.ideal).into(),
            })
            .collect(),
        ray_ideals: cells(&fan),
    };
    Ok((Results::Chambers(out), checks))
}

fn fan(ring: &GradedRingSpec, opts: &Options) -> Result<(Results, Vec<Check>), CliError> {
    let fan = assemble_fan(ring)?;
    let poset = morphism_poset(&fan);
    let mut checks = fan_checks(&fan);
    checks.push(sample_check(&fan, opts.samples, opts.seed)?);
    let out = FanResult {
        ring: ring.into(),
        cones: cells(&fan),
        hasse: fan.hasse.clone(),
        poset_vertices: poset.vertices,
        poset_edges: poset.edges,
        coverage_samples: fan.report.coverage_samples,
    };
    Ok((Results::Fan(out), checks))
}

fn points(opts: &Options, n: usize, count: usize) -> Result<Vec<Vec<rayfan::poly::vector::Rat>>, CliError> {
    if opts.points.len() != count {
        return Err(CliError::Schema(vec![format!(
            "expected {count} --point option(s), found {}",
            opts.points.len()
        )]));
    }
    let pts: Vec<_> = opts.points.iter().map(|p| parse_point(p)).collect::<Result<_, _>>()?;
    let bad: Vec<String> = pts
        .iter()
        .filter(|p| p.len() != n)
        .map(|p| format!("point has {} coordinates, the grading has rank {n}", p.len()))
        .collect();
    if bad.is_empty() {
        Ok(pts)
    } else {
        Err(CliError::Schema(bad))
    }
}

fn rayideal(ring: &GradedRingSpec, opts: &Options) -> Result<(Results, Vec<Check>), CliError> {
    let a = points(opts, ring.n(), 1)?.remove(0);
    let j = ring.ray_ideal(&a)?;
    let maximal_cone = if j.is_zero() { None } else { Some(maximal_ray_ideal_cone(ring, &a)?) };
    let mut checks = Vec::new();
    if let Some(sigma) = &maximal_cone {
        checks.push(Check::new("point lies in its maximal ray-ideal cone", sigma.contains(&a)?));
        let w = sigma.relint_point();
        checks.push(Check::new("ideal constant on the cone", ring.ray_ideal_int(&w)? == j));
    }
    let out = RayIdealResult {
        ring: ring.into(),
        point: fractions(&a),
        ideal: (&j).into(),
        maximal_cone: maximal_cone.as_ref().map(Into::into),
    };
    Ok((Results::Rayideal(out), checks))
}

fn compare(ring: &GradedRingSpec, opts: &Options) -> Result<(Results, Vec<Check>), CliError> {
    let mut pts = points(opts, ring.n(), 2)?;
    let b = pts.pop().unwrap();
    let a = pts.pop().unwrap();
    let ja = ring.ray_ideal(&a)?;
    let jb = ring.ray_ideal(&b)?;
    let order = ja.compare(&jb)?;
    let reverse = jb.compare(&ja)?;
    let order_name = match order {
        IdealOrder::Equal => "equal",
        IdealOrder::LessThan => "less_than",
        IdealOrder::GreaterThan => "greater_than",
        IdealOrder::Incomparable => "incomparable",
    };
    let checks = vec![Check::new("comparison is antisymmetric", reverse == order.reverse())];
    let out = CompareResult {
        ring: ring.into(),
        a: fractions(&a),
        b: fractions(&b),
        ideal_a: (&ja).into(),
        ideal_b: (&jb).into(),
        order: order_name.into(),
    };
    Ok((Results::Compare(out), checks))
}

fn thm4(ring: &GradedRingSpec) -> Result<(Results, Vec<Check>), CliError> {
    let rep = theorem4_check(ring)?;
    let checks = vec![
        Check::new("the three finite-extension conditions agree", rep.consistent()),
        Check::new("witness present exactly when there are several chambers", rep.witness.is_some() != rep.one_chamber),
    ];
    let out = Thm4Result {
        ring: ring.into(),
        one_chamber: rep.one_chamber,
        faces_are_ray_ideal_cones: rep.faces_are_ray_ideal_cones,
        finite_extension: rep.finite_extension,
        chamber_count: rep.chamber_count,
        witness: rep.witness.as_ref().map(|(p, q)| (ints(p), ints(q))),
    };
    Ok((Results::Thm4(out), checks))
}

fn variety_out(x: &ToricVarietySpec) -> VarietyOut {
    VarietyOut {
        lattice_rank: x.lattice_rank(),
        rays: x.rays().iter().map(|r| ints(r)).collect(),
        cones: x.maximal_cones().to_vec(),
        complete: x.is_complete(),
        name: x.identify(),
    }
}

fn divisors_out(spec: &MultiSectionRingSpec) -> Vec<Vec<String>> {
    spec.divisors().iter().map(|d| fractions(d.coefficients())).collect()
}

fn grid(n: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut r = vec![-bound; n];
    loop {
        out.push(r.clone());
        let mut k = 0;
        while k < n && r[k] == bound {
            r[k] = -bound;
            k += 1;
        }
        if k == n {
            return out;
        }
        r[k] += 1;
    }
}

fn msr_dim(spec: &MultiSectionRingSpec, opts: &Options) -> Result<(Results, Vec<Check>), CliError> {
    let degrees: Vec<Vec<i64>> = match &opts.degree {
        Some(s) => {
            let r: Result<Vec<i64>, _> = s.split(',').map(|x| x.trim().parse::<i64>()).collect();
            let r = r.map_err(|_| CliError::Schema(vec![format!("--degree \"{s}\" is not a list of integers")]))?;
            if r.len() != spec.n() {
                return Err(CliError::Schema(vec![format!("--degree has {} entries, expected {}", r.len(), spec.n())]));
            }
            vec![r]
        }
        None => grid(spec.n(), opts.grid_bound),
    };
    let mut dims = Vec::with_capacity(degrees.len());
    for r in degrees {
        let big: Vec<BigInt> = r.iter().map(|&x| BigInt::from(x)).collect();
        dims.push(DimOut { dim: graded_piece_dim(spec, &big)?, r });
    }
    let zero = dims.iter().find(|d| d.r.iter().all(|&x| x == 0));
    let checks = zero
        .map(|d| vec![Check::new("degree zero piece is the constants", d.dim == 1)])
        .unwrap_or_default();
    let out = MsrDimResult {
        variety: variety_out(spec.variety()),
        divisors: divisors_out(spec),
        q: ints(spec.q()),
        dims,
    };
    Ok((Results::MsrDim(out), checks))
}

fn ample_out(a: &AmpleCertificate) -> AmpleOut {
    AmpleOut {
        combination: a.combination.clone(),
        divisor: ints(&a.divisor),
        cartier_data: a.cartier_data.iter().map(|m| ints(m)).collect(),
    }
}

fn classgroup(spec: &MultiSectionRingSpec) -> Result<(Results, Vec<Check>), CliError> {
    let primes = height_one_prime_data(spec);
    let data = class_group(spec)?;
    let integral = primes
        .primes
        .iter()
        .all(|p| (0..spec.n()).all(|i| rayfan::poly::vector::Rat::from(p.valuations[i].clone()) == spec.coefficient(i, p.ray) * rayfan::poly::vector::Rat::from(p.q.clone())));
    let checks = vec![
        Check::new("valuations q_F m_(i,F) are integers", integral),
        Check::new("class group fits the four-term sequence", data.sequence_consistent),
    ];
    let out = ClassGroupResult {
        variety: variety_out(spec.variety()),
        divisors: divisors_out(spec),
        height_one_primes: primes
            .primes
            .iter()
            .map(|p| PrimeOut {
                ray: p.ray,
                q: (&p.q).into(),
                valuations: ints(&p.valuations),
            })
            .collect(),
        relevant_rays: data.relevant.clone(),
        m_denominators: ints(&data.m_denominators),
        l_generators: data.l_generators.iter().map(|r| fractions(r)).collect(),
        l_cap_z: data.l_cap_z.iter().map(|r| ints(r)).collect(),
        class_group_x: (&data.class_group_x).into(),
        cokernel_of_image: (&data.cokernel_of_image).into(),
        m_mod_l: (&data.m_mod_l).into(),
        class_group: (&data.class_group).into(),
        conditional: data.conditional,
        ample: data.ample.as_ref().map(ample_out),
    };
    Ok((Results::Classgroup(out), checks))
}

fn factorial(spec: &MultiSectionRingSpec) -> Result<(Results, Vec<Check>), CliError> {
    let cert = is_factorial(spec)?;
    let checks = vec![
        Check::new("criterion agrees with the class group", cert.agrees_with_class_group),
    ];
    let out = FactorialResult {
        factorial: cert.factorial,
        m_equals_l_plus_z: cert.m_equals_l_plus_z,
        image_generates: cert.image_generates,
        class_group: (&cert.data.class_group).into(),
        conditional: cert.data.conditional,
    };
    Ok((Results::Factorial(out), checks))
}

fn roundtrip(ring: &GradedRingSpec, opts: &Options) -> Result<(Results, Vec<Check>), CliError> {
    let chambers: Vec<RationalCone> = match &opts.chamber {
        Some(s) => {
            let gens = parse_generators(s)?;
            vec![RationalCone::from_generators(&gens, ring.n())?]
        }
        None => {
            let fan = assemble_fan(ring)?;
            fan.maximal_cones().map(|c| c.cone.clone()).collect()
        }
    };
    let explicit = opts.chamber.is_some();
    let mut runs = Vec::new();
    let mut checks = Vec::new();
    for sigma in &chambers {
        match demazure_roundtrip(ring, sigma, opts.grid_bound) {
            Ok(rep) => {
                checks.push(
                    Check::new("graded pieces match on the grid", rep.all_match())
                        .with_detail(format!("{} at {} grid points", sigma, rep.grid_points)),
                );
                runs.push(RoundTripRun {
                    chamber: sigma.into(),
                    error: None,
                    variety: Some(variety_out(rep.msr.variety())),
                    divisors: divisors_out(&rep.msr),
                    gale: rep.gale.iter().map(|r| ints(r)).collect(),
                    ample: rep.ample.as_ref().map(|a| a.combination.clone()),
                    grid_points: rep.grid_points,
                    mismatches: rep.mismatches.clone(),
                });
            }
            Err(e) if explicit => return Err(e.into()),
            Err(e) => runs.push(RoundTripRun {
                chamber: sigma.into(),
                error: Some(e.to_string()),
                variety: None,
                divisors: Vec::new(),
                gale: Vec::new(),
                ample: None,
                grid_points: 0,
                mismatches: Vec::new(),
            }),
        }
    }
    let out = RoundTripResult {
        ring: ring.into(),
        grid_bound: opts.grid_bound,
        runs,
    };
    Ok((Results::Roundtrip(out), checks))
}

fn plot2d(ring: &GradedRingSpec, opts: &Options) -> Result<(Results, Vec<Check>), CliError> {
    if ring.n() != 2 {
        return Err(CliError::Precondition(format!("plot2d needs a Z^2 grading, this ring has rank {}", ring.n())));
    }
    let svg_path = opts
        .output
        .clone()
        .ok_or_else(|| CliError::Schema(vec!["plot2d needs --output for the SVG file".into()]))?;
    let csv_path = svg_path.with_extension("csv");
    let fan = assemble_fan(ring)?;
    let drawing = plot::render(&fan);
    let write = |p: &Path, text: &str| {
        std::fs::write(p, text).map_err(|e| CliError::Internal(format!("cannot write {}: {e}", p.display())))
    };
    write(&svg_path, &drawing.svg)?;
    write(&csv_path, &drawing.csv)?;
    let checks = fan_checks(&fan);
    let out = PlotResult {
        svg: svg_path.display().to_string(),
        csv: csv_path.display().to_string(),
        sectors: drawing.sectors,
        arrows: drawing.arrows,
    };
    Ok((Results::Plot2d(out), checks))
}
