//! JSON input specs. Parsing collects every violation before failing.

use log::warn;
use num_bigint::BigInt;
use rayfan::graded::GradedRingSpec;
use rayfan::poly::vector::{is_zero, parse_rat, IntVec, Rat};
use rayfan::poly::IntMatrix;
use rayfan::toric::{MultiSectionRingSpec, QDivisor, ToricVarietySpec};
use serde_json::Value;

use crate::CliError;

const RING_KEYS: &[&str] = &["kind", "names", "ambient_names", "degrees", "exponents", "grading", "description"];
const TORIC_KEYS: &[&str] = &["lattice_rank", "rays", "cones", "divisors", "description"];

struct Collector {
    errors: Vec<String>,
}

impl Collector {
    fn push(&mut self, msg: impl Into<String>) {
        self.errors.push(msg.into());
    }

    fn finish(self) -> Result<(), CliError> {
        if self.errors.is_empty() {
            Ok(())
        } else {
            Err(CliError::Schema(self.errors))
        }
    }
}

fn unknown_keys(obj: &serde_json::Map<String, Value>, allowed: &[&str], c: &mut Collector) {
    for k in obj.keys() {
        if !allowed.contains(&k.as_str()) {
            c.push(format!("unknown field \"{k}\""));
        }
    }
}

fn integer(v: &Value, at: &str, c: &mut Collector) -> Option<BigInt> {
    match v {
        Value::Number(n) if n.is_i64() => Some(BigInt::from(n.as_i64().unwrap())),
        Value::Number(n) if n.is_u64() => Some(BigInt::from(n.as_u64().unwrap())),
        Value::Number(_) => {
            c.push(format!("{at}: {v} is not an integer; only integral (hence rational) cones are in the input class"));
            None
        }
        Value::String(s) => match s.parse::<BigInt>() {
            Ok(x) => Some(x),
            Err(_) => {
                c.push(format!("{at}: \"{s}\" is not an integer"));
                None
            }
        },
        _ => {
            c.push(format!("{at}: expected an integer, found {v}"));
            None
        }
    }
}

fn int_rows(v: Option<&Value>, field: &str, c: &mut Collector) -> Option<Vec<IntVec>> {
    let Some(v) = v else {
        c.push(format!("missing field \"{field}\""));
        return None;
    };
    let Some(rows) = v.as_array() else {
        c.push(format!("\"{field}\" must be an array of integer arrays"));
        return None;
    };
    let mut out = Vec::with_capacity(rows.len());
    let mut ok = true;
    let width = rows.first().and_then(Value::as_array).map(Vec::len);
    for (i, row) in rows.iter().enumerate() {
        let Some(entries) = row.as_array() else {
            c.push(format!("{field}[{i}] must be an array"));
            ok = false;
            continue;
        };
        if let Some(w) = width.filter(|&w| w != entries.len()) {
            c.push(format!("{field}[{i}] has length {}, expected {w}", entries.len()));
            ok = false;
        }
        let parsed: Vec<Option<BigInt>> = entries
            .iter()
            .enumerate()
            .map(|(j, e)| integer(e, &format!("{field}[{i}][{j}]"), c))
            .collect();
        if parsed.iter().all(Option::is_some) {
            out.push(parsed.into_iter().map(Option::unwrap).collect());
        } else {
            ok = false;
        }
    }
    ok.then_some(out)
}

/// Row width; `int_rows` has already reported ragged rows.
fn same_width(rows: &[IntVec]) -> Option<usize> {
    rows.first().map(Vec::len)
}

fn strings(v: Option<&Value>, field: &str, c: &mut Collector) -> Option<Vec<String>> {
    let v = v?;
    match v.as_array() {
        Some(items) if items.iter().all(Value::is_string) => {
            Some(items.iter().map(|s| s.as_str().unwrap().to_string()).collect())
        }
        _ => {
            c.push(format!("\"{field}\" must be an array of strings"));
            None
        }
    }
}

/// Parses a ring spec. Zero degree rows of a polynomial ring are dropped with
/// a warning; the returned strings are those warnings.
pub fn parse_ring_spec(json: &Value) -> Result<(GradedRingSpec, Vec<String>), CliError> {
    let mut c = Collector { errors: Vec::new() };
    let Some(obj) = json.as_object() else {
        return Err(CliError::Schema(vec!["the ring spec must be a JSON object".into()]));
    };
    unknown_keys(obj, RING_KEYS, &mut c);
    let kind = obj.get("kind").and_then(Value::as_str).unwrap_or("polynomial");
    let mut warnings = Vec::new();
    let names = strings(obj.get("names"), "names", &mut c);
    match kind {
        "polynomial" => {
            for k in ["exponents", "grading", "ambient_names"] {
                if obj.contains_key(k) {
                    c.push(format!("field \"{k}\" is only allowed for kind \"semigroup\""));
                }
            }
            let degrees = int_rows(obj.get("degrees"), "degrees", &mut c);
            let n = degrees.as_deref().and_then(same_width);
            if let (Some(d), Some(names)) = (&degrees, &names) {
                if d.len() != names.len() {
                    c.push(format!("{} names for {} degrees", names.len(), d.len()));
                }
            }
            if degrees.as_ref().is_some_and(Vec::is_empty) {
                c.push("\"degrees\" must list at least one generator");
            }
            c.finish()?;
            let degrees = degrees.unwrap();
            let n = n.unwrap();
            let mut names = names.unwrap_or_else(|| default_names(degrees.len()));
            let mut kept = Vec::new();
            let mut kept_names = Vec::new();
            for (i, (d, name)) in degrees.into_iter().zip(names.drain(..)).enumerate() {
                if is_zero(&d) {
                    let msg = format!("degree row {i} ({name}) is zero and was dropped");
                    warn!("{msg}");
                    warnings.push(msg);
                } else {
                    kept.push(d);
                    kept_names.push(name);
                }
            }
            if kept.is_empty() {
                return Err(CliError::Schema(vec!["every degree row is zero".into()]));
            }
            let ring = GradedRingSpec::polynomial_named(kept, n, kept_names)?;
            Ok((ring, warnings))
        }
        "semigroup" => {
            let exps = int_rows(obj.get("exponents"), "exponents", &mut c);
            let grading = int_rows(obj.get("grading"), "grading", &mut c);
            let big_n = exps.as_deref().and_then(same_width);
            let gw = grading.as_deref().and_then(same_width);
            if let (Some(a), Some(b)) = (big_n, gw) {
                if a != b {
                    c.push(format!("grading has {b} columns but exponents have length {a}"));
                }
            }
            let degrees = match obj.get("degrees") {
                Some(v) => int_rows(Some(v), "degrees", &mut c),
                None => None,
            };
            let ambient = strings(obj.get("ambient_names"), "ambient_names", &mut c);
            if let (Some(e), Some(names)) = (&exps, &names) {
                if e.len() != names.len() {
                    c.push(format!("{} names for {} exponents", names.len(), e.len()));
                }
            }
            if let (Some(a), Some(names)) = (big_n, &ambient) {
                if a != names.len() {
                    c.push(format!("{} ambient names for rank {a}", names.len()));
                }
            }
            c.finish()?;
            let exps = exps.unwrap();
            let grading = grading.unwrap();
            let big_n = big_n.unwrap_or(0);
            let g = IntMatrix::from_rows(&grading, big_n).map_err(rayfan::RingError::from)?;
            let names = names.unwrap_or_else(|| default_names(exps.len()));
            let ambient = ambient.unwrap_or_else(|| (1..=big_n).map(|i| format!("t{i}")).collect());
            let ring = GradedRingSpec::semigroup_named(exps, g, degrees, names, ambient)?;
            Ok((ring, warnings))
        }
        "symbolic-rees" => Err(CliError::Schema(vec![
            "kind \"symbolic-rees\": symbolic Rees algebras need not be Noetherian and are outside the \
             input class; on such rings ray ideals can jump along segments, so nothing here applies"
                .into(),
        ])),
        other => Err(CliError::Schema(vec![format!(
            "unknown kind \"{other}\" (expected \"polynomial\" or \"semigroup\")"
        )])),
    }
}

fn default_names(s: usize) -> Vec<String> {
    if s <= 4 {
        ["x", "y", "z", "w"][..s].iter().map(|x| x.to_string()).collect()
    } else {
        (1..=s).map(|i| format!("x{i}")).collect()
    }
}

fn rat_entry(v: &Value, at: &str, c: &mut Collector) -> Option<Rat> {
    match v {
        Value::String(s) => match parse_rat(s) {
            Ok(r) => Some(r),
            Err(_) => {
                c.push(format!("{at}: \"{s}\" is not a fraction \"p/q\""));
                None
            }
        },
        Value::Number(n) if n.is_i64() => Some(Rat::from_integer(n.as_i64().unwrap().into())),
        _ => {
            c.push(format!("{at}: expected a fraction string \"p/q\" or an integer, found {v}"));
            None
        }
    }
}

pub fn parse_toric_spec(json: &Value) -> Result<MultiSectionRingSpec, CliError> {
    let mut c = Collector { errors: Vec::new() };
    let Some(obj) = json.as_object() else {
        return Err(CliError::Schema(vec!["the toric spec must be a JSON object".into()]));
    };
    unknown_keys(obj, TORIC_KEYS, &mut c);
    let d = match obj.get("lattice_rank").and_then(Value::as_u64) {
        Some(d) => Some(d as usize),
        None => {
            c.push("\"lattice_rank\" must be a nonnegative integer");
            None
        }
    };
    let rays = int_rows(obj.get("rays"), "rays", &mut c);
    let cones: Option<Vec<Vec<usize>>> = match obj.get("cones").and_then(Value::as_array) {
        Some(cs) => {
            let mut out = Vec::new();
            for (i, cone) in cs.iter().enumerate() {
                match cone.as_array().map(|a| a.iter().map(Value::as_u64).collect::<Option<Vec<u64>>>()) {
                    Some(Some(idx)) => out.push(idx.into_iter().map(|x| x as usize).collect()),
                    _ => c.push(format!("cones[{i}] must be an array of ray indices")),
                }
            }
            Some(out)
        }
        None => {
            c.push("\"cones\" must be an array of ray-index arrays");
            None
        }
    };
    let divisors: Option<Vec<Vec<Rat>>> = match obj.get("divisors").and_then(Value::as_array) {
        Some(ds) => {
            let mut out = Vec::new();
            for (i, d) in ds.iter().enumerate() {
                match d.as_array() {
                    Some(entries) => {
                        let parsed: Vec<Option<Rat>> = entries
                            .iter()
                            .enumerate()
                            .map(|(j, e)| rat_entry(e, &format!("divisors[{i}][{j}]"), &mut c))
                            .collect();
                        out.push(parsed.into_iter().flatten().collect());
                    }
                    None => c.push(format!("divisors[{i}] must be an array of coefficients")),
                }
            }
            Some(out)
        }
        None => {
            c.push("\"divisors\" must be an array of coefficient arrays");
            None
        }
    };
    c.finish()?;
    let variety = ToricVarietySpec::new(d.unwrap(), rays.unwrap(), cones.unwrap())?;
    let divisors = divisors.unwrap().into_iter().map(QDivisor::new).collect();
    Ok(MultiSectionRingSpec::new(variety, divisors)?)
}

/// Parses `"p/q,p/q,…"`.
pub fn parse_point(s: &str) -> Result<Vec<Rat>, CliError> {
    let mut errors = Vec::new();
    let mut out = Vec::new();
    for part in s.split(',') {
        match parse_rat(part) {
            Ok(r) => out.push(r),
            Err(_) => errors.push(format!("\"{}\" is not a fraction \"p/q\"", part.trim())),
        }
    }
    if errors.is_empty() {
        Ok(out)
    } else {
        Err(CliError::Schema(errors))
    }
}

/// Parses cone generators `"a,b;c,d"`.
pub fn parse_generators(s: &str) -> Result<Vec<IntVec>, CliError> {
    let mut errors = Vec::new();
    let mut out = Vec::new();
    for (i, part) in s.split(';').enumerate() {
        let row: Result<IntVec, _> = part.split(',').map(|x| x.trim().parse::<BigInt>()).collect();
        match row {
            Ok(r) => out.push(r),
            Err(_) => errors.push(format!("generator {i} (\"{part}\") is not a list of integers")),
        }
    }
    if errors.is_empty() {
        Ok(out)
    } else {
        Err(CliError::Schema(errors))
    }
}
