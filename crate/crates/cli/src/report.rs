//! Report types. Every report serializes to JSON and parses back unchanged.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayfan::graded::{GradedRingSpec, RayIdeal, RingKind};
use rayfan::poly::vector::{format_rat, Rat};
use rayfan::poly::{AbelianGroup, RationalCone};
use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "rayfan-report/1";

/// An integer: a JSON number when it fits in `i64`, a decimal string otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Int {
    Small(i64),
    Big(String),
}

impl From<&BigInt> for Int {
    fn from(x: &BigInt) -> Self {
        x.to_i64().map_or_else(|| Int::Big(x.to_string()), Int::Small)
    }
}

pub fn ints(v: &[BigInt]) -> Vec<Int> {
    v.iter().map(Int::from).collect()
}

pub fn fractions(v: &[Rat]) -> Vec<String> {
    v.iter().map(format_rat).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub property: String,
    pub verdict: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    pub fn new(property: &str, verdict: bool) -> Self {
        Self {
            property: property.to_string(),
            verdict,
            detail: None,
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
    pub results: Results,
    pub verification: Vec<Check>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.verification.iter().all(|c| c.verdict)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Results {
    Chambers(ChambersResult),
    Fan(FanResult),
    Rayideal(RayIdealResult),
    Compare(CompareResult),
    Thm4(Thm4Result),
    MsrDim(MsrDimResult),
    Classgroup(ClassGroupResult),
    Factorial(FactorialResult),
    Roundtrip(RoundTripResult),
    Plot2d(PlotResult),
    Selftest(SelftestResult),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingOut {
    pub kind: String,
    pub n: usize,
    pub generators: Vec<String>,
    pub degrees: Vec<Vec<Int>>,
}

impl From<&GradedRingSpec> for RingOut {
    fn from(r: &GradedRingSpec) -> Self {
        Self {
            kind: match r.kind() {
                RingKind::Polynomial => "polynomial".into(),
                RingKind::Semigroup => "semigroup".into(),
            },
            n: r.n(),
            generators: r.names().to_vec(),
            degrees: r.degrees().iter().map(|d| ints(d)).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeOut {
    pub dim: usize,
    pub rays: Vec<Vec<Int>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub lineality: Vec<Vec<Int>>,
    pub display: String,
}

impl From<&RationalCone> for ConeOut {
    fn from(c: &RationalCone) -> Self {
        Self {
            dim: c.dim(),
            rays: c.rays().iter().map(|r| ints(r)).collect(),
            lineality: c.lineality().iter().map(|r| ints(r)).collect(),
            display: c.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealOut {
    pub display: String,
    /// Squarefree products of generators, one per minimal member face.
    pub generators: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub minimal_primes: Option<Vec<String>>,
    /// Absent for the unit ideal and for semigroup rings.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub height: Option<usize>,
    pub is_zero: bool,
    pub is_unit: bool,
}

impl From<&RayIdeal> for IdealOut {
    fn from(j: &RayIdeal) -> Self {
        let ring = j.ring();
        Self {
            display: j.to_string(),
            generators: j.minimal_members().iter().map(|&m| ring.format_mask(m)).collect(),
            minimal_primes: j.minimal_primes().map(|ps| {
                ps.iter()
                    .map(|&p| format!("({})", ring.format_mask(p).replace('*', ", ")))
                    .collect()
            }),
            height: j.height().filter(|_| !j.is_unit()),
            is_zero: j.is_zero(),
            is_unit: j.is_unit(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupOut {
    pub free_rank: usize,
    pub torsion: Vec<Int>,
    pub display: String,
}

impl From<&AbelianGroup> for GroupOut {
    fn from(g: &AbelianGroup) -> Self {
        Self {
            free_rank: g.free_rank,
            torsion: ints(&g.torsion),
            display: g.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChamberOut {
    pub cone: ConeOut,
    pub signs: Vec<i8>,
    pub witness: Vec<Int>,
    pub ideal: IdealOut,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellOut {
    pub cone: ConeOut,
    pub ideal: IdealOut,
    pub maximal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChambersResult {
    pub ring: RingOut,
    pub hyperplanes: Vec<Vec<Int>>,
    pub chambers: Vec<ChamberOut>,
    /// Every non-zero ray ideal with its maximal ray-ideal cone.
    pub ray_ideals: Vec<CellOut>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanResult {
    pub ring: RingOut,
    pub cones: Vec<CellOut>,
    /// `(i, j)`: cone `i` is a facet of cone `j`.
    pub hasse: Vec<(usize, usize)>,
    pub poset_vertices: Vec<usize>,
    /// `(from, to)`: morphisms from the quotient of a chamber to that of a face.
    pub poset_edges: Vec<(usize, usize)>,
    pub coverage_samples: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RayIdealResult {
    pub ring: RingOut,
    pub point: Vec<String>,
    pub ideal: IdealOut,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub maximal_cone: Option<ConeOut>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompareResult {
    pub ring: RingOut,
    pub a: Vec<String>,
    pub b: Vec<String>,
    pub ideal_a: IdealOut,
    pub ideal_b: IdealOut,
    /// `equal`, `less_than` (J_a ⊊ J_b), `greater_than` or `incomparable`.
    pub order: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Thm4Result {
    pub ring: RingOut,
    pub one_chamber: bool,
    pub faces_are_ray_ideal_cones: bool,
    pub finite_extension: bool,
    pub chamber_count: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<(Vec<Int>, Vec<Int>)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VarietyOut {
    pub lattice_rank: usize,
    pub rays: Vec<Vec<Int>>,
    pub cones: Vec<Vec<usize>>,
    pub complete: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimOut {
    pub r: Vec<i64>,
    pub dim: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MsrDimResult {
    pub variety: VarietyOut,
    pub divisors: Vec<Vec<String>>,
    pub q: Vec<Int>,
    pub dims: Vec<DimOut>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeOut {
    pub ray: usize,
    pub q: Int,
    pub valuations: Vec<Int>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AmpleOut {
    pub combination: Vec<i64>,
    pub divisor: Vec<Int>,
    pub cartier_data: Vec<Vec<Int>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassGroupResult {
    pub variety: VarietyOut,
    pub divisors: Vec<Vec<String>>,
    pub height_one_primes: Vec<PrimeOut>,
    pub relevant_rays: Vec<usize>,
    pub m_denominators: Vec<Int>,
    pub l_generators: Vec<Vec<String>>,
    pub l_cap_z: Vec<Vec<Int>>,
    pub class_group_x: GroupOut,
    pub cokernel_of_image: GroupOut,
    pub m_mod_l: GroupOut,
    pub class_group: GroupOut,
    pub conditional: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ample: Option<AmpleOut>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorialResult {
    pub factorial: bool,
    pub m_equals_l_plus_z: bool,
    pub image_generates: bool,
    pub class_group: GroupOut,
    pub conditional: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoundTripRun {
    pub chamber: ConeOut,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variety: Option<VarietyOut>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub divisors: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub gale: Vec<Vec<Int>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ample: Option<Vec<i64>>,
    pub grid_points: usize,
    /// `(r, monomial count, lattice-point count)`.
    pub mismatches: Vec<(Vec<i64>, u64, u64)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoundTripResult {
    pub ring: RingOut,
    pub grid_bound: i64,
    pub runs: Vec<RoundTripRun>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlotResult {
    pub svg: String,
    pub csv: String,
    pub sectors: usize,
    pub arrows: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelftestResult {
    pub fixtures: usize,
    pub cases: usize,
}
