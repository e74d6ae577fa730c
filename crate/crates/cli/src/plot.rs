//! SVG picture of a fan in the plane: chambers as shaded sectors, generator
//! degrees as arrows. Floating point is used for drawing only.

use std::f64::consts::PI;
use std::fmt::Write;

use num_traits::ToPrimitive;
use rayfan::chamber::ChamberFan;
use rayfan::poly::vector::IntVec;

const SIZE: f64 = 400.0;
const RADIUS: f64 = 160.0;
const PALETTE: [&str; 6] = ["#8ecae6", "#ffb703", "#90be6d", "#f28482", "#cdb4db", "#bde0fe"];

pub struct Drawing {
    pub svg: String,
    pub csv: String,
    pub sectors: usize,
    pub arrows: usize,
}

fn to_f64(v: &IntVec) -> (f64, f64) {
    (v[0].to_f64().unwrap_or(0.0), v[1].to_f64().unwrap_or(0.0))
}

fn angle(v: &IntVec) -> f64 {
    let (x, y) = to_f64(v);
    y.atan2(x).rem_euclid(2.0 * PI)
}

/// Screen point at angle `t` on the circle of radius `r` (y axis flipped).
fn at(t: f64, r: f64) -> (f64, f64) {
    (SIZE / 2.0 + r * t.cos(), SIZE / 2.0 - r * t.sin())
}

/// Counterclockwise boundary angles of a full-dimensional planar cone,
/// or `None` for the whole plane.
fn sweep(gens: &[IntVec]) -> Option<Vec<f64>> {
    let mut ts: Vec<f64> = gens.iter().map(angle).collect();
    ts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    ts.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
    let k = ts.len();
    let gap = |i: usize| (ts[(i + 1) % k] - ts[i]).rem_euclid(2.0 * PI);
    let (start, widest) = (0..k).map(|i| (i, gap(i))).max_by(|a, b| a.1.partial_cmp(&b.1).unwrap())?;
    if widest < PI - 1e-9 {
        return None;
    }
    // the cone runs from the end of the widest gap round to its start
    let mut out: Vec<f64> = (1..=k).map(|j| ts[(start + j) % k]).collect();
    for j in 1..out.len() {
        while out[j] < out[j - 1] {
            out[j] += 2.0 * PI;
        }
    }
    Some(out)
}

pub fn render(fan: &ChamberFan) -> Drawing {
    let ring = &fan.ring;
    let mut body = String::new();
    let mut sectors = 0;
    for (k, fc) in fan.maximal_cones().enumerate() {
        let cone = &fc.cone;
        let colour = PALETTE[k % PALETTE.len()];
        if cone.dim() == 2 {
            sectors += 1;
            match sweep(&cone.generators()) {
                None => {
                    let _ = writeln!(
                        body,
                        r#"  <circle class="sector" cx="{c:.3}" cy="{c:.3}" r="{RADIUS:.3}" fill="{colour}" fill-opacity="0.5"/>"#,
                        c = SIZE / 2.0
                    );
                }
                Some(ts) => {
                    let (x0, y0) = at(ts[0], RADIUS);
                    let mut d = format!("M {:.3} {:.3} L {x0:.3} {y0:.3}", SIZE / 2.0, SIZE / 2.0);
                    for pair in ts.windows(2) {
                        // split each step so no single arc reaches a half turn
                        let mid = (pair[0] + pair[1]) / 2.0;
                        for t in [mid, pair[1]] {
                            let (x, y) = at(t, RADIUS);
                            let _ = write!(d, " A {RADIUS:.3} {RADIUS:.3} 0 0 0 {x:.3} {y:.3}");
                        }
                    }
                    d.push_str(" Z");
                    let _ = writeln!(
                        body,
                        r#"  <path class="sector" d="{d}" fill="{colour}" fill-opacity="0.5" stroke="{colour}"><title>{}</title></path>"#,
                        fc.ideal
                    );
                }
            }
        } else {
            for r in cone.generators() {
                let (x, y) = at(angle(&r), RADIUS);
                let _ = writeln!(
                    body,
                    r#"  <line class="ray" x1="{c:.3}" y1="{c:.3}" x2="{x:.3}" y2="{y:.3}" stroke="{colour}" stroke-width="3"><title>{}</title></line>"#,
                    fc.ideal,
                    c = SIZE / 2.0
                );
            }
        }
    }

    let longest = ring
        .degrees()
        .iter()
        .map(|d| {
            let (x, y) = to_f64(d);
            x.hypot(y)
        })
        .fold(0.0, f64::max);
    let scale = if longest > 0.0 { 0.9 * RADIUS / longest } else { 0.0 };
    let mut arrows = 0;
    let mut csv = String::from("generator,deg_1,deg_2\n");
    // generators of equal degree share an arrow; their labels are stacked
    let mut labelled: Vec<(IntVec, usize)> = Vec::new();
    for (name, d) in ring.names().iter().zip(ring.degrees()) {
        let _ = writeln!(csv, "{name},{},{}", d[0], d[1]);
        let (x, y) = to_f64(d);
        if x == 0.0 && y == 0.0 {
            continue;
        }
        let (ex, ey) = (SIZE / 2.0 + scale * x, SIZE / 2.0 - scale * y);
        let stack = match labelled.iter_mut().find(|(v, _)| v == d) {
            Some((_, k)) => {
                *k += 1;
                *k
            }
            None => {
                labelled.push((d.clone(), 0));
                arrows += 1;
                let _ = writeln!(
                    body,
                    r##"  <line class="degree" x1="{c:.3}" y1="{c:.3}" x2="{ex:.3}" y2="{ey:.3}" stroke="black" marker-end="url(#head)"/>"##,
                    c = SIZE / 2.0
                );
                0
            }
        };
        let ly = ey - 4.0 + 14.0 * stack as f64;
        let _ = writeln!(body, r#"  <text x="{:.3}" y="{ly:.3}" font-size="12">{name}</text>"#, ex + 4.0);
    }

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    svg.push_str(
        "  <defs><marker id=\"head\" markerWidth=\"8\" markerHeight=\"8\" refX=\"7\" refY=\"4\" orient=\"auto\">\
         <path d=\"M0,0 L8,4 L0,8 z\"/></marker></defs>\n",
    );
    svg.push_str(&body);
    svg.push_str("</svg>\n");
    Drawing { svg, csv, sectors, arrows }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: i64, y: i64) -> IntVec {
        vec![x.into(), y.into()]
    }

    #[test]
    fn sweep_orders_counterclockwise() {
        let ts = sweep(&[v(0, 1), v(1, 0)]).unwrap();
        assert!((ts[0] - 0.0).abs() < 1e-12 && (ts[1] - PI / 2.0).abs() < 1e-12);
        // wraps through angle zero
        let ts = sweep(&[v(1, -1), v(1, 1)]).unwrap();
        assert!(ts[1] > ts[0] && ts[1] - ts[0] < PI);
    }

    #[test]
    fn half_plane_and_whole_plane() {
        let ts = sweep(&[v(1, 0), v(-1, 0), v(0, 1)]).unwrap();
        assert!((ts[2] - ts[0] - PI).abs() < 1e-9);
        assert!(sweep(&[v(1, 0), v(-1, 0), v(0, 1), v(0, -1)]).is_none());
    }
}
