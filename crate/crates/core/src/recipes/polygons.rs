//! Regular polygons on the curve: vertex `k` of the `n`-gon sits at arc
//! parameter `2 omega k / n`.

use std::collections::BTreeMap;

use rug::Float;

use super::{
    arc_add, arc_halve, arc_of, arc_x_reflect, check_precision, compose, import_point, lemniscate_point, Certificate,
    CurvePoint,
};
use crate::arc_algebra::{bezout_plan, constructible_factors};
use crate::error::{Error, Result};
use crate::kernel::Scene;
use crate::numerics::{Lemniscate, LemniscatePoint, Petal};

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum NGonMode {
    /// Vertices evaluated from the lemniscatic sine.
    Numeric,
    /// Vertices produced by a construction (possibly seeded with imported points).
    Constructed,
}

/// Vertices of a regular `n`-gon on the curve, in order of arc parameter.
#[derive(Clone, Debug)]
pub struct NGon {
    pub n: u64,
    pub vertices: Vec<LemniscatePoint>,
    /// Scene points of the vertices; empty for numeric polygons.
    pub points: Vec<CurvePoint>,
    pub mode: NGonMode,
}

impl NGon {
    pub fn from_scene(scene: &Scene, n: u64, points: Vec<CurvePoint>) -> NGon {
        let vertices = points.iter().map(|p| lemniscate_point(scene, *p)).collect();
        NGon { n, vertices, points, mode: NGonMode::Constructed }
    }

    pub fn arc_params(&self, lem: &Lemniscate) -> Vec<Float> {
        self.vertices.iter().map(|v| lem.arc_param_of(v).into_inner()).collect()
    }

    /// Largest distance between vertex `k` and the parameter `2 omega k / n`.
    pub fn max_deviation(&self, lem: &Lemniscate) -> Float {
        let bits = lem.ctx().bits();
        let step = Float::with_val(bits, lem.omega() * 2u32) / self.n as f64;
        let mut worst = lem.ctx().zero();
        for (k, s) in self.arc_params(lem).iter().enumerate() {
            let target = Float::with_val(bits, &step * k as u64);
            worst = worst.max(&lem.arc_distance(s, &target).abs());
        }
        worst
    }

    /// Spread (max - min) of the consecutive arc gaps, including the closing gap.
    pub fn gap_spread(&self, lem: &Lemniscate) -> Float {
        let bits = lem.ctx().bits();
        let params = self.arc_params(lem);
        let n = params.len();
        let period = Float::with_val(bits, lem.omega() * 2u32);
        let mut gaps = Vec::with_capacity(n);
        for k in 0..n {
            let next = &params[(k + 1) % n];
            let gap = lem.arc_param(&Float::with_val(bits, next - &params[k])).into_inner();
            // a zero gap in the one-vertex case is a full turn
            gaps.push(if n == 1 { period.clone() } else { gap });
        }
        let max = gaps.iter().fold(lem.ctx().zero(), |acc, g| acc.max(g));
        let min = gaps.iter().fold(period, |acc, g| acc.min(g));
        max - min
    }
}

/// The regular `n`-gon evaluated directly from the lemniscatic sine.
pub fn numeric_ngon(n: u64, lem: &Lemniscate) -> Result<NGon> {
    if n == 0 {
        return Err(Error::Domain("a polygon needs at least one vertex".into()));
    }
    let bits = lem.ctx().bits();
    let step = Float::with_val(bits, lem.omega() * 2u32) / n as f64;
    let vertices = (0..n)
        .map(|k| lem.point_at(&lem.arc_param(&Float::with_val(bits, &step * k))))
        .collect();
    Ok(NGon { n, vertices, points: Vec::new(), mode: NGonMode::Numeric })
}

/// Outcome of a polygon recipe.
#[derive(Clone, Debug)]
pub struct PolygonRun {
    pub ngon: NGon,
    pub certificate: Certificate,
    pub warnings: Vec<String>,
}

pub(super) fn certify(scene: &Scene, lem: &Lemniscate, ngon: &NGon) -> Certificate {
    let bits = lem.ctx().bits();
    let mut cert = Certificate::default();
    let step = Float::with_val(bits, lem.omega() * 2u32) / ngon.n as f64;
    for (k, p) in ngon.points.iter().enumerate() {
        let target = lem.arc_param(&Float::with_val(bits, &step * k as u64)).into_inner();
        let err = lem.arc_distance(&arc_of(scene, lem, *p), &target).abs();
        cert.push_error(format!("vertex {k} of {} at 2 omega {k}/{}", ngon.n, ngon.n), &target, err);
        let residual = lemniscate_point(scene, *p).curve_residual();
        cert.push_error(format!("vertex {k} of {} on the curve", ngon.n), &lem.ctx().zero(), residual);
    }
    cert.push_error(format!("equal gaps of the {}-gon", ngon.n), &lem.ctx().zero(), ngon.gap_spread(lem));
    cert
}

fn scene_points(scene: &mut Scene, ngon: &NGon) -> Vec<CurvePoint> {
    if !ngon.points.is_empty() {
        return ngon.points.clone();
    }
    ngon.vertices.iter().map(|v| import_point(scene, v)).collect()
}

fn label_vertices(scene: &mut Scene, prefix: &str, points: &[CurvePoint]) {
    for (k, p) in points.iter().enumerate() {
        if scene.point(p.id).label.is_none() {
            scene.label(p.id, &format!("{prefix}{k}"));
        }
    }
}

/// Polygons that need no construction beyond the reference frame.
pub fn base_polygon(scene: &mut Scene, n: u64) -> Result<NGon> {
    let f = scene.frame()?;
    let points = match n {
        1 => vec![CurvePoint::new(f.o, Petal::Right)],
        2 => vec![CurvePoint::new(f.o, Petal::Right), CurvePoint::new(f.o, Petal::Left)],
        4 => vec![
            CurvePoint::new(f.o, Petal::Right),
            CurvePoint::new(f.i, Petal::Right),
            CurvePoint::new(f.o, Petal::Left),
            CurvePoint::new(f.i_star, Petal::Left),
        ],
        _ => return Err(Error::Domain(format!("no base polygon with {n} vertices"))),
    };
    Ok(NGon::from_scene(scene, n, points))
}

/// The `2N`-gon from an `N`-gon. Even vertices are the given ones; each odd
/// vertex is reduced by symmetry to an upper-right point at `omega j / N`,
/// which is either a given vertex, the x-mirror of one (`N` odd), or a half
/// or complementary half of a first-quadrant vertex (`N` even).
pub fn recipe_2n_gon(scene: &mut Scene, lem: &Lemniscate, ngon: &NGon) -> Result<PolygonRun> {
    check_precision(scene, lem)?;
    let n = ngon.n;
    let given = scene_points(scene, ngon);
    let f = scene.frame()?;
    let points = scene.scoped("recipe_2n_gon", |s| {
        let mut reps: BTreeMap<u64, CurvePoint> = BTreeMap::new();
        let mut out = Vec::with_capacity(2 * n as usize);
        for j in 0..2 * n {
            if j % 2 == 0 {
                out.push(given[(j / 2) as usize]);
                continue;
            }
            let (q, shifted) = (j % n, j >= n);
            let (jr, negative, shifted) = if 2 * q <= n { (q, false, shifted) } else { (n - q, true, !shifted) };
            let rep = match reps.get(&jr) {
                Some(r) => *r,
                None => {
                    let r = odd_rep(s, &given, n, jr, f.i)?;
                    reps.insert(jr, r);
                    r
                }
            };
            out.push(compose(s, rep, negative, shifted)?);
        }
        Ok(out)
    })?;
    label_vertices(scene, &format!("V{}_", 2 * n), &points);
    let ngon = NGon::from_scene(scene, 2 * n, points);
    let certificate = certify(scene, lem, &ngon);
    Ok(PolygonRun { ngon, certificate, warnings: Vec::new() })
}

// Upper-right point at omega * jr / n, jr <= n/2.
fn odd_rep(s: &mut Scene, given: &[CurvePoint], n: u64, jr: u64, tip: crate::kernel::PointId) -> Result<CurvePoint> {
    if jr == 0 {
        return Ok(given[0]);
    }
    if 2 * jr == n {
        return Ok(CurvePoint::new(tip, Petal::Right));
    }
    if jr % 2 == 0 {
        return Ok(given[(jr / 2) as usize]);
    }
    if n % 2 == 1 {
        // omega jr / n = omega - 2 omega ((n - jr)/2) / n
        return arc_x_reflect(s, given[((n - jr) / 2) as usize]);
    }
    if 4 * jr <= n {
        return arc_halve(s, given[jr as usize]);
    }
    // complementary half of the first-quadrant vertex n/2 - jr
    let base = given[(n / 2 - jr) as usize];
    let (_, complement) = super::halve_core(s, CurvePoint::new(base.id, Petal::Right))?;
    Ok(complement)
}

/// The `NM`-gon from an `N`-gon and an `M`-gon with coprime orders: with
/// `a M + b N = 1`, vertex `k` is the sum of vertex `k a mod N` and vertex
/// `k b mod M`.
pub fn recipe_nm_gon(scene: &mut Scene, lem: &Lemniscate, first: &NGon, second: &NGon) -> Result<PolygonRun> {
    check_precision(scene, lem)?;
    let plan = bezout_plan(first.n, second.n)?;
    let (n, m) = (first.n as i128, second.n as i128);
    let total = first.n * second.n;
    let pa = scene_points(scene, first);
    let pb = scene_points(scene, second);
    let points = scene.scoped("recipe_nm_gon", |s| {
        (0..total)
            .map(|k| {
                let i = (k as i128 * plan.a as i128).rem_euclid(n) as usize;
                let j = (k as i128 * plan.b as i128).rem_euclid(m) as usize;
                arc_add(s, pa[i], pb[j])
            })
            .collect::<Result<Vec<_>>>()
    })?;
    label_vertices(scene, &format!("V{total}_"), &points);
    let ngon = NGon::from_scene(scene, total, points);
    let certificate = certify(scene, lem, &ngon);
    Ok(PolygonRun { ngon, certificate, warnings: Vec::new() })
}

/// Plans and runs a construction of the regular `n`-gon: the 17-gon from
/// scratch, other Fermat-prime polygons imported numerically (with a
/// warning), coprime factors merged, then doubled up to the power of two.
pub fn construct_ngon(scene: &mut Scene, lem: &Lemniscate, n: u64) -> Result<PolygonRun> {
    check_precision(scene, lem)?;
    let (twos, primes) = constructible_factors(n).ok_or(Error::NotConstructible(n))?;
    let mut warnings = Vec::new();
    let mut current: Option<NGon> = None;
    for p in primes {
        let piece = if p == 17 {
            let run = super::recipe_seventeen_all(scene, lem)?;
            run.ngon
        } else {
            warnings.push(format!(
                "no ruler-and-compass recipe for the {p}-gon; its vertices are imported from the numeric oracle"
            ));
            numeric_ngon(p, lem)?
        };
        current = Some(match current {
            None => piece,
            Some(prev) => recipe_nm_gon(scene, lem, &prev, &piece)?.ngon,
        });
    }
    let mut doublings = twos;
    let mut ngon = match current {
        Some(g) => g,
        None if twos >= 2 => {
            doublings -= 2;
            base_polygon(scene, 4)?
        }
        None if twos == 1 => {
            doublings = 0;
            base_polygon(scene, 2)?
        }
        None => base_polygon(scene, 1)?,
    };
    for _ in 0..doublings {
        ngon = recipe_2n_gon(scene, lem, &ngon)?.ngon;
    }
    if ngon.points.is_empty() {
        let points = scene_points(scene, &ngon);
        ngon = NGon::from_scene(scene, ngon.n, points);
    }
    let certificate = certify(scene, lem, &ngon);
    Ok(PolygonRun { ngon, certificate, warnings })
}
