//! Fan assembly, verification and the containment order.

use std::collections::{BTreeMap, HashMap};

use super::{cone_of_ideal, decompose, build_arrangement, sample_points, Chamber};
use crate::error::FanError;
use crate::graded::{GenMask, GradedRingSpec, IdealOrder, RayIdeal};
use crate::poly::vector::IntVec;
use crate::poly::RationalCone;

/// A ray-ideal cone of the fan together with its ideal.
#[derive(Clone, Debug)]
pub struct FanCone {
    pub cone: RationalCone,
    pub ideal: RayIdeal,
    pub witness: IntVec,
}

/// Outcome of every check run by [`assemble_fan`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FanReport {
    /// Every face of a listed cone is listed, and is the maximal cone of its ideal.
    pub face_closure: bool,
    /// No two listed cones share an ideal.
    pub unique_maximality: bool,
    /// `J₁ ⊋ J₂` exactly when `σ_{J₁}` is a proper face of `σ_{J₂}`.
    pub order_reversal: bool,
    /// Pairwise intersections of maximal cones are common listed faces.
    pub fan_axioms: bool,
    /// The maximal cones cover `C(A)`.
    pub coverage: bool,
    /// Chamber ideals agree at several interior points.
    pub constancy: bool,
    /// Merged sign cells coincide with the orbit-cone intersections.
    pub constructions_agree: bool,
    pub pre_merge_cells: usize,
    pub coverage_samples: usize,
    pub failures: Vec<String>,
}

impl FanReport {
    pub fn all_ok(&self) -> bool {
        self.face_closure
            && self.unique_maximality
            && self.order_reversal
            && self.fan_axioms
            && self.coverage
            && self.constancy
            && self.constructions_agree
    }
}

#[derive(Clone, Debug)]
pub struct ChamberFan {
    pub ring: GradedRingSpec,
    /// All cones, sorted by dimension then generators.
    pub cones: Vec<FanCone>,
    /// Indices of the maximal cones.
    pub maximal: Vec<usize>,
    /// Covering pairs `(i, j)` with `J_i ⊋ J_j` (σᵢ a facet of σⱼ).
    pub hasse: Vec<(usize, usize)>,
    /// Sign cells before merging.
    pub chambers: Vec<Chamber>,
    pub report: FanReport,
}

impl ChamberFan {
    pub fn maximal_cones(&self) -> impl Iterator<Item = &FanCone> {
        self.maximal.iter().map(|&i| &self.cones[i])
    }

    /// Nonzero ray ideals, one per cone.
    pub fn ideals(&self) -> impl Iterator<Item = &RayIdeal> {
        self.cones.iter().map(|c| &c.ideal)
    }

    pub fn index_of(&self, cone: &RationalCone) -> Option<usize> {
        self.cones.iter().position(|c| c.cone == *cone)
    }
}

pub fn assemble_fan(ring: &GradedRingSpec) -> Result<ChamberFan, FanError> {
    let arr = build_arrangement(ring)?;
    let chambers = decompose(ring, &arr)?;
    let mut report = FanReport {
        pre_merge_cells: chambers.len(),
        ..Default::default()
    };
    let fail = |report: &mut FanReport, msg: String| {
        log::warn!("fan check failed: {msg}");
        report.failures.push(msg);
    };

    // merge cells by ideal
    let mut groups: BTreeMap<Vec<GenMask>, Vec<usize>> = BTreeMap::new();
    for (i, c) in chambers.iter().enumerate() {
        groups.entry(c.ideal.members().to_vec()).or_default().push(i);
    }
    report.constructions_agree = true;
    let mut maximal_cones: Vec<FanCone> = Vec::new();
    for cells in groups.values() {
        let first = &chambers[cells[0]];
        let sigma = cone_of_ideal(&first.ideal)?;
        let inside: Vec<usize> = (0..chambers.len())
            .filter(|&i| sigma.contains_cone(&chambers[i].cone))
            .collect();
        let rays: Vec<IntVec> = cells
            .iter()
            .flat_map(|&i| chambers[i].cone.generators())
            .collect();
        let hull = RationalCone::from_generators(&rays, ring.n())?;
        if inside != *cells || hull != sigma {
            report.constructions_agree = false;
            fail(
                &mut report,
                format!("cells with ideal {} do not tile its orbit-cone intersection {sigma}", first.ideal),
            );
        }
        maximal_cones.push(FanCone {
            cone: sigma,
            ideal: first.ideal.clone(),
            witness: first.witness.clone(),
        });
    }
    maximal_cones.sort_by(|a, b| a.cone.cmp(&b.cone));

    report.constancy = true;
    for c in &chambers {
        for p in c.cone.relint_points(3) {
            if ring.ray_ideal_int(&p)? != c.ideal {
                report.constancy = false;
                fail(&mut report, format!("ideal not constant on chamber {}", c.cone));
            }
        }
    }

    // close under faces
    let mut all: BTreeMap<RationalCone, FanCone> = BTreeMap::new();
    report.face_closure = true;
    for m in &maximal_cones {
        for face in m.cone.face_lattice() {
            if all.contains_key(&face.cone) {
                continue;
            }
            let w = face.cone.relint_point();
            let ideal = ring.ray_ideal_int(&w)?;
            let sigma = cone_of_ideal(&ideal)?;
            if sigma != face.cone {
                report.face_closure = false;
                fail(
                    &mut report,
                    format!("face {} of {} is not the maximal cone {sigma} of its ideal", face.cone, m.cone),
                );
            }
            all.insert(
                face.cone.clone(),
                FanCone {
                    cone: face.cone,
                    ideal,
                    witness: w,
                },
            );
        }
    }
    let cones: Vec<FanCone> = all.into_values().collect();
    let maximal: Vec<usize> = maximal_cones
        .iter()
        .map(|m| cones.iter().position(|c| c.cone == m.cone).expect("maximal cone listed"))
        .collect();

    let mut by_ideal: HashMap<&[GenMask], usize> = HashMap::new();
    report.unique_maximality = true;
    for (i, c) in cones.iter().enumerate() {
        if let Some(j) = by_ideal.insert(c.ideal.members(), i) {
            report.unique_maximality = false;
            fail(
                &mut report,
                format!("cones {} and {} share the ideal {}", cones[j].cone, c.cone, c.ideal),
            );
        }
    }

    report.order_reversal = true;
    let mut hasse = Vec::new();
    for (i, ci) in cones.iter().enumerate() {
        for (j, cj) in cones.iter().enumerate() {
            if i == j {
                continue;
            }
            let bigger = ci.ideal.compare(&cj.ideal)? == IdealOrder::GreaterThan;
            let face = ci.cone.is_face_of(&cj.cone)?;
            if bigger != face {
                report.order_reversal = false;
                fail(
                    &mut report,
                    format!("order reversal fails for {} and {}", ci.cone, cj.cone),
                );
            }
            if face && ci.cone.dim() + 1 == cj.cone.dim() {
                hasse.push((i, j));
            }
        }
    }

    report.fan_axioms = true;
    for (a, &i) in maximal.iter().enumerate() {
        for &j in &maximal[a + 1..] {
            let inter = cones[i].cone.intersect(&cones[j].cone)?;
            let ok = inter.is_face_of(&cones[i].cone)?
                && inter.is_face_of(&cones[j].cone)?
                && cones.iter().any(|c| c.cone == inter);
            if !ok {
                report.fan_axioms = false;
                fail(
                    &mut report,
                    format!("{} and {} meet in {inter}, not a common face", cones[i].cone, cones[j].cone),
                );
            }
        }
        if !cones[i].cone.is_pointed() {
            report.fan_axioms = false;
            fail(&mut report, format!("{} is not strongly convex", cones[i].cone));
        }
    }

    let ca = ring.weight_cone();
    let mut probes: Vec<IntVec> = ca.rays().to_vec();
    for c in &chambers {
        probes.extend(c.cone.face_lattice().iter().map(|f| f.cone.relint_point()));
    }
    probes.extend(sample_points(ca, 1000));
    report.coverage_samples = probes.len();
    report.coverage = true;
    for p in &probes {
        let covered = maximal
            .iter()
            .any(|&i| cones[i].cone.contains_int(p).unwrap_or(false));
        if !covered {
            report.coverage = false;
            fail(&mut report, format!("point {p:?} of C(A) is not covered"));
            break;
        }
    }

    Ok(ChamberFan {
        ring: ring.clone(),
        cones,
        maximal,
        hasse,
        chambers,
        report,
    })
}

/// Ray-ideal cones ordered by the morphisms `X_a → X_b` that exist when
/// `J_a ⊆ J_b`: an edge goes from a cone to each of its facets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismPoset {
    /// Indices into [`ChamberFan::cones`].
    pub vertices: Vec<usize>,
    /// `(from, to)` with `J_from ⊊ J_to`, covering pairs only.
    pub edges: Vec<(usize, usize)>,
}

pub fn morphism_poset(fan: &ChamberFan) -> MorphismPoset {
    let mut edges: Vec<(usize, usize)> = fan.hasse.iter().map(|&(i, j)| (j, i)).collect();
    edges.sort_unstable();
    MorphismPoset {
        vertices: (0..fan.cones.len()).collect(),
        edges,
    }
}
