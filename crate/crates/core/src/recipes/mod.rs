//! Ruler-and-compass recipes for arc arithmetic and regular polygons on the curve.
//!
//! Arc parameters live in `[0, 2 omega)`: the right loop is `[0, omega)`
//! (upper half first) and the left loop is `[omega, 2 omega)`. The three
//! reflections act on parameters as
//!
//! ```text
//! through the origin:  s -> -s
//! in the x-axis:       s -> omega - s
//! in the y-axis:       s -> s + omega
//! ```
//!
//! so every parameter is `e a + k omega` with `a` in `[0, omega/2]` (an
//! upper-right point), `e = +-1` and `k` in `{0, 1}`. The core constructions
//! only ever see upper-right points; everything else is reduced to them.

mod polygons;
mod seventeen;

pub use polygons::{base_polygon, construct_ngon, numeric_ngon, recipe_2n_gon, recipe_nm_gon, NGon, NGonMode, PolygonRun};
pub use seventeen::{recipe_seventeen_all, recipe_seventeen_u, recipe_seventeen_v1};

use std::collections::BTreeMap;

use rug::Float;

use crate::arc_algebra::{self, sum_passes_tip};
use crate::error::{Error, Result};
use crate::kernel::{PointId, Scene};
use crate::numerics::{Lemniscate, LemniscatePoint, Petal, Radius};
use crate::precision::fmt_digits;

/// A scene point known to lie on the curve, with its loop tag.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct CurvePoint {
    pub id: PointId,
    pub petal: Petal,
}

impl CurvePoint {
    pub fn new(id: PointId, petal: Petal) -> Self {
        CurvePoint { id, petal }
    }
}

/// One numeric check of a construction against an independent formula.
#[derive(Clone, Debug)]
pub struct CertificateEntry {
    pub check: String,
    pub target: Float,
    pub error: Float,
}

/// The checks attached to a recipe run.
#[derive(Clone, Debug, Default)]
pub struct Certificate {
    pub entries: Vec<CertificateEntry>,
}

impl Certificate {
    pub fn push(&mut self, check: impl Into<String>, target: &Float, achieved: &Float) {
        let error = Float::with_val(target.prec(), achieved - target).abs();
        self.entries.push(CertificateEntry { check: check.into(), target: target.clone(), error });
    }

    pub fn push_error(&mut self, check: impl Into<String>, target: &Float, error: Float) {
        self.entries.push(CertificateEntry { check: check.into(), target: target.clone(), error });
    }

    pub fn extend(&mut self, other: Certificate) {
        self.entries.extend(other.entries);
    }

    pub fn max_error(&self) -> Option<&Float> {
        self.entries.iter().map(|e| &e.error).max_by(|a, b| a.partial_cmp(b).expect("finite errors"))
    }

    pub fn passes(&self, tol: &Float) -> bool {
        self.entries.iter().all(|e| e.error <= *tol)
    }

    pub fn failures(&self, tol: &Float) -> Vec<&CertificateEntry> {
        self.entries.iter().filter(|e| e.error > *tol).collect()
    }
}

/// Named outputs of a recipe and its certificate. The scene itself stays
/// with the caller.
#[derive(Clone, Debug, Default)]
pub struct RecipeResult {
    pub outputs: BTreeMap<String, PointId>,
    pub petals: BTreeMap<String, Petal>,
    pub certificate: Certificate,
}

impl RecipeResult {
    fn put(&mut self, scene: &mut Scene, name: &str, id: PointId) {
        if scene.point(id).label.is_none() {
            scene.label(id, name);
        }
        self.outputs.insert(name.to_string(), id);
    }

    fn put_curve(&mut self, scene: &mut Scene, name: &str, p: CurvePoint) {
        self.put(scene, name, p.id);
        self.petals.insert(name.to_string(), p.petal);
    }

    /// The named output as a tagged curve point.
    pub fn curve_point(&self, name: &str) -> Option<CurvePoint> {
        Some(CurvePoint::new(*self.outputs.get(name)?, *self.petals.get(name)?))
    }
}

pub(crate) fn check_precision(scene: &Scene, lem: &Lemniscate) -> Result<()> {
    if scene.ctx().digits() != lem.ctx().digits() {
        return Err(Error::Domain(format!(
            "scene works at {} digits but the evaluator at {}",
            scene.ctx().digits(),
            lem.ctx().digits()
        )));
    }
    Ok(())
}

/// Polar form of a tagged scene point.
pub fn lemniscate_point(scene: &Scene, p: CurvePoint) -> LemniscatePoint {
    let pt = scene.point(p.id);
    LemniscatePoint::from_xy(&pt.x, &pt.y, p.petal)
}

/// Canonical arc parameter of a tagged scene point.
pub fn arc_of(scene: &Scene, lem: &Lemniscate, p: CurvePoint) -> Float {
    lem.arc_param_of(&lemniscate_point(scene, p)).into_inner()
}

fn radius_of(scene: &Scene, p: PointId) -> Float {
    let pt = scene.point(p);
    Float::with_val(scene.ctx().bits(), pt.x.hypot_ref(&pt.y))
}

/// Imports an externally computed curve point.
pub fn import_point(scene: &mut Scene, p: &LemniscatePoint) -> CurvePoint {
    let (x, y) = p.xy();
    let id = scene.input(x, y);
    CurvePoint::new(id, p.petal)
}

// --- symmetries -----------------------------------------------------------

fn reflect_x(s: &mut Scene, p: CurvePoint) -> Result<CurvePoint> {
    if s.is_origin(p.id) {
        return Ok(CurvePoint::new(p.id, p.petal.flipped()));
    }
    let f = s.frame()?;
    Ok(CurvePoint::new(s.reflect_across(f.x_axis, p.id)?, p.petal))
}

fn reflect_y(s: &mut Scene, p: CurvePoint) -> Result<CurvePoint> {
    if s.is_origin(p.id) {
        return Ok(CurvePoint::new(p.id, p.petal.flipped()));
    }
    let f = s.frame()?;
    Ok(CurvePoint::new(s.reflect_across(f.y_axis, p.id)?, p.petal.flipped()))
}

fn reflect_o(s: &mut Scene, p: CurvePoint) -> Result<CurvePoint> {
    if s.is_origin(p.id) {
        return Ok(p);
    }
    let f = s.frame()?;
    Ok(CurvePoint::new(s.point_reflect(f.o, p.id)?, p.petal.flipped()))
}

/// `s = sign * a + k * omega` with the upper-right point at `a`.
#[derive(Copy, Clone, Debug)]
struct Decomposed {
    rep: CurvePoint,
    negative: bool,
    shifted: bool,
}

fn decompose(s: &mut Scene, p: CurvePoint) -> Result<Decomposed> {
    if s.is_origin(p.id) {
        let rep = CurvePoint::new(p.id, Petal::Right);
        return Ok(Decomposed { rep, negative: false, shifted: p.petal == Petal::Left });
    }
    let pt = s.point(p.id);
    let right = pt.x.is_sign_positive();
    let upper = pt.y.is_sign_positive() || s.ctx().is_negligible(&pt.y);
    let p = CurvePoint::new(p.id, if right { Petal::Right } else { Petal::Left });
    Ok(match (right, upper) {
        (true, true) => Decomposed { rep: p, negative: false, shifted: false },
        (true, false) => Decomposed { rep: reflect_x(s, p)?, negative: true, shifted: true },
        (false, true) => Decomposed { rep: reflect_y(s, p)?, negative: false, shifted: true },
        (false, false) => Decomposed { rep: reflect_o(s, p)?, negative: true, shifted: false },
    })
}

fn compose(s: &mut Scene, p: CurvePoint, negative: bool, shifted: bool) -> Result<CurvePoint> {
    let p = if negative { reflect_o(s, p)? } else { p };
    if shifted {
        reflect_y(s, p)
    } else {
        Ok(p)
    }
}

// --- core constructions on upper-right points -----------------------------

fn origin(s: &mut Scene, petal: Petal) -> Result<CurvePoint> {
    Ok(CurvePoint::new(s.frame()?.o, petal))
}

/// `2a` for the upper-right point at `a`: build `C = (r^2, 0)`, meet the
/// perpendicular bisector of `CJ` with the x-axis at `E`, then the ray to
/// `(-1, OE)` makes the angle `phi + pi/4` with the x-axis, where `phi` is the
/// polar angle of the doubled point.
fn double_core(s: &mut Scene, r: CurvePoint) -> Result<CurvePoint> {
    let f = s.frame()?;
    if s.is_origin(r.id) {
        return origin(s, Petal::Right);
    }
    if s.coincide(r.id, f.i) {
        return origin(s, Petal::Left);
    }
    s.scoped("double", |s| {
        let a1 = s.unit_on_ray(r.id)?;
        let ray = s.line_through(f.o, a1)?;
        let b1 = s.reflect_across(ray, f.i)?;
        let c = s.foot(f.x_axis, b1)?;
        let bis = s.perp_bisector(c, f.j)?;
        let e = s.intersect(bis, f.x_axis)?;
        let e = *e.first().ok_or_else(|| Error::Degenerate("bisector parallel to the x-axis".into()))?;
        // F = (-1, e); its mirror (1, -e) sits at angle phi + pi/4
        let ey = s.signed_to_y(e)?;
        let fpt = s.translate(f.i_star, f.o, ey)?;
        let fm = s.point_reflect(f.o, fpt)?;
        let g = s.unit_on_ray(fm)?;
        let g = s.reflect_across(f.eighth, g)?;
        let g = s.reflect_across(f.x_axis, g)?;
        let u = s.curve_point_on_ray(g)?;
        let petal = Petal::Right;
        if s.is_origin(u) {
            return origin(s, Petal::Left);
        }
        Ok(CurvePoint::new(u, petal))
    })
}

#[derive(Copy, Clone, PartialEq, Eq)]
enum Want {
    Sum,
    Difference,
    Both,
}

/// Sum and difference of two upper-right arcs as the roots of
/// `X^2 + B X + C`, found with the trapezium gadget on sides `-1`, `-C`
/// and base `-B`.
fn add_core(s: &mut Scene, r: CurvePoint, u: CurvePoint, want: Want) -> Result<(Option<CurvePoint>, Option<CurvePoint>)> {
    let f = s.frame()?;
    let bits = s.ctx().bits();
    let r_len = radius_of(s, r.id);
    let u_len = radius_of(s, u.id);
    let past_tip = sum_passes_tip(&r_len, &u_len, bits);
    s.scoped("add_sub", |s| {
        // (1, r^2) and (1, u^2) fix the angles alpha and beta
        let slope_point = |s: &mut Scene, p: PointId| -> Result<PointId> {
            let len = s.onto_x_axis(p)?;
            let sq = s.thales_product(len, len)?;
            let up = s.signed_to_y(sq)?;
            let level = s.parallel(f.x_axis, up)?;
            let hit = s.intersect(level, f.tangent_i)?;
            hit.first().copied().ok_or_else(|| Error::Degenerate("horizontal misses x = 1".into()))
        };
        let a1 = slope_point(s, r.id)?;
        let b1 = slope_point(s, u.id)?;
        // angle alpha - beta, then C = (1, tan(alpha - beta))
        let (half_alpha, _) = s.bisect_angle(f.o, f.i, a1)?;
        let b2 = s.reflect_across(half_alpha, b1)?;
        let ray = s.line_through(f.o, b2)?;
        let cpt = s.intersect(ray, f.tangent_i)?;
        let cpt = *cpt.first().ok_or_else(|| Error::Singularity("alpha - beta = +-pi/2".into()))?;
        // |B| = sqrt(2 sin 2alpha cos 2beta) * sec(alpha - beta)
        let double_angle = |s: &mut Scene, p: PointId| -> Result<PointId> {
            let dir = s.unit_on_ray(p)?;
            let l = s.line_through(f.o, dir)?;
            s.reflect_across(l, f.i)
        };
        let a2 = double_angle(s, a1)?;
        let b2 = double_angle(s, b1)?;
        let sin2a = s.foot(f.y_axis, a2)?;
        let sin2a = s.signed_to_x(sin2a)?;
        let sin2a = s.double_from(f.o, sin2a)?;
        let cos2b = s.foot(f.x_axis, b2)?;
        let d = s.geometric_mean(sin2a, cos2b)?;
        let d = s.signed_to_x(d)?;
        let sec = s.onto_x_axis(cpt)?;
        let minus_b = s.thales_product(d, sec)?;
        let c_level = s.foot(f.y_axis, cpt)?;
        let c_level = s.point_reflect(f.o, c_level)?;
        let minus_c = s.signed_to_x(c_level)?;
        let roots = s.rat_trapezium(f.i_star, minus_b, minus_c)?;

        let sum = if want != Want::Difference {
            Some(if s.is_origin(roots.high) {
                origin(s, Petal::Left)?
            } else {
                let t = s.curve_point_from_radius(roots.high)?;
                let t = CurvePoint::new(t, Petal::Right);
                if past_tip {
                    reflect_x(s, t)?
                } else {
                    t
                }
            })
        } else {
            None
        };
        let diff = if want != Want::Sum {
            Some(if s.is_origin(roots.low) {
                origin(s, Petal::Right)?
            } else if s.point(roots.low).x.is_sign_positive() {
                CurvePoint::new(s.curve_point_from_radius(roots.low)?, Petal::Right)
            } else {
                let v = s.point_reflect(f.o, roots.low)?;
                let v = CurvePoint::new(s.curve_point_from_radius(v)?, Petal::Right);
                reflect_o(s, v)?
            })
        } else {
            None
        };
        Ok((sum, diff))
    })
}

/// Halves the arc `s` in `(0, omega)` of a right-loop point. Returns the
/// upper-right points at `s/2` and at `omega/2 - s/2`.
///
/// With `k = sec 2phi + tan 2phi = tan(phi + pi/4)` read off the tangent
/// `x = 1`, the circle about `(-k, 0)` through `J` meets the x-axis at
/// `T = sqrt(k^2 + 1) - k`, the squared radius of the half.
fn halve_core(s: &mut Scene, u: CurvePoint) -> Result<(CurvePoint, CurvePoint)> {
    let f = s.frame()?;
    if s.is_origin(u.id) {
        return Err(Error::Domain("cannot halve at the origin (sec 2phi is unbounded)".into()));
    }
    s.scoped("halve", |s| {
        let ray = s.line_through(f.o, u.id)?;
        let twice = s.reflect_across(ray, f.i)?;
        let half = |s: &mut Scene, pole: PointId| -> Result<PointId> {
            let (bis, _) = s.bisect_angle(f.o, twice, pole)?;
            let hit = s.intersect(bis, f.tangent_i)?;
            let hit = *hit.first().ok_or_else(|| Error::Singularity("bisector parallel to x = 1".into()))?;
            let level = s.foot(f.y_axis, hit)?;
            let c = s.circle_about(f.o, level)?;
            let a = s.intersect(f.x_axis, c)?;
            let a = s.pick_max_by(&a, |p| Float::with_val(p.x.prec(), -&p.x))?;
            let c = s.circle_about(a, f.j)?;
            let t = s.intersect(f.x_axis, c)?;
            let t = s.pick_max_by(&t, |p| p.x.clone())?;
            let rho = s.sqrt_len(t)?;
            s.curve_point_from_parts(t, rho)
        };
        let first = half(s, f.j)?;
        let complement = half(s, f.j_neg)?;
        Ok((CurvePoint::new(first, Petal::Right), CurvePoint::new(complement, Petal::Right)))
    })
}

// --- general arc arithmetic -------------------------------------------------

/// `a + b`
pub(crate) fn arc_add(s: &mut Scene, a: CurvePoint, b: CurvePoint) -> Result<CurvePoint> {
    if s.is_origin(a.id) {
        return if a.petal == Petal::Left { reflect_y(s, b) } else { Ok(b) };
    }
    if s.is_origin(b.id) {
        return if b.petal == Petal::Left { reflect_y(s, a) } else { Ok(a) };
    }
    let da = decompose(s, a)?;
    let db = decompose(s, b)?;
    let shifted = da.shifted != db.shifted;
    let core = if da.negative == db.negative {
        add_core(s, da.rep, db.rep, Want::Sum)?.0
    } else {
        add_core(s, da.rep, db.rep, Want::Difference)?.1
    };
    let core = core.expect("requested root is always built");
    compose(s, core, da.negative, shifted)
}

/// `-a`
pub(crate) fn arc_neg(s: &mut Scene, a: CurvePoint) -> Result<CurvePoint> {
    reflect_o(s, a)
}

/// `a - b`
pub(crate) fn arc_sub(s: &mut Scene, a: CurvePoint, b: CurvePoint) -> Result<CurvePoint> {
    let nb = arc_neg(s, b)?;
    arc_add(s, a, nb)
}

/// `2a`
pub(crate) fn arc_double(s: &mut Scene, a: CurvePoint) -> Result<CurvePoint> {
    if s.is_origin(a.id) {
        return origin(s, Petal::Right);
    }
    let d = decompose(s, a)?;
    let twice = double_core(s, d.rep)?;
    compose(s, twice, d.negative, false)
}

/// Half of the canonical parameter, which always lands on the right loop.
pub(crate) fn arc_halve(s: &mut Scene, a: CurvePoint) -> Result<CurvePoint> {
    let f = s.frame()?;
    if s.is_origin(a.id) {
        return Ok(match a.petal {
            Petal::Right => CurvePoint::new(f.o, Petal::Right),
            Petal::Left => CurvePoint::new(f.i, Petal::Right),
        });
    }
    if s.point(a.id).x.is_sign_positive() {
        return Ok(halve_core(s, CurvePoint::new(a.id, Petal::Right))?.0);
    }
    let mirrored = reflect_y(s, a)?;
    let (_, complement) = halve_core(s, mirrored)?;
    reflect_x(s, complement)
}

pub(crate) fn arc_x_reflect(s: &mut Scene, a: CurvePoint) -> Result<CurvePoint> {
    reflect_x(s, a)
}

// --- public recipes -------------------------------------------------------

fn push_arc_check(cert: &mut Certificate, lem: &Lemniscate, name: &str, achieved: &Float, target: &Float) {
    let target = lem.arc_param(target).into_inner();
    let err = lem.arc_distance(achieved, &target).abs();
    cert.push_error(name, &target, err);
}

/// Halves the arc ending at a right-loop point `u`. Outputs `r` at half the
/// arc and `r_complement` at a quarter loop minus that.
pub fn recipe_halve(scene: &mut Scene, lem: &Lemniscate, u: CurvePoint) -> Result<RecipeResult> {
    check_precision(scene, lem)?;
    let ctx = lem.ctx().clone();
    if scene.is_origin(u.id) {
        return Err(Error::Domain("cannot halve at the origin (sec 2phi is unbounded)".into()));
    }
    if scene.point(u.id).x.is_sign_negative() {
        return Err(Error::Domain("halving expects a point on the right loop".into()));
    }
    let u = CurvePoint::new(u.id, Petal::Right);
    let (first, complement) = scene.scoped("recipe_halve", |s| halve_core(s, u))?;
    let mut out = RecipeResult::default();
    out.put_curve(scene, "u", u);
    out.put_curve(scene, "r", first);
    out.put_curve(scene, "r_complement", complement);

    let su = arc_of(scene, lem, u);
    let half = Float::with_val(ctx.bits(), &su / 2u32);
    push_arc_check(&mut out.certificate, lem, "arc(r) = arc(u)/2", &arc_of(scene, lem, first), &half);
    let comp = Float::with_val(ctx.bits(), lem.half_omega() - &half);
    push_arc_check(&mut out.certificate, lem, "arc(r') = omega/2 - arc(u)/2", &arc_of(scene, lem, complement), &comp);
    let theta = lemniscate_point(scene, u).theta;
    let roots = arc_algebra::halve_arc(&Radius::new(radius_of(scene, u.id), &ctx)?, &theta, &ctx)?;
    out.certificate.push("|r| = halving root", roots.first.value(), &radius_of(scene, first.id));
    out.certificate.push("|r'| = complementary root", roots.complement.value(), &radius_of(scene, complement.id));
    Ok(out)
}

/// Doubles the arc of `r`. Output `u`.
pub fn recipe_double(scene: &mut Scene, lem: &Lemniscate, r: CurvePoint) -> Result<RecipeResult> {
    check_precision(scene, lem)?;
    let ctx = lem.ctx().clone();
    let u = scene.scoped("recipe_double", |s| arc_double(s, r))?;
    let mut out = RecipeResult::default();
    out.put_curve(scene, "r", r);
    out.put_curve(scene, "u", u);
    let sr = arc_of(scene, lem, r);
    let target = Float::with_val(ctx.bits(), &sr * 2u32);
    push_arc_check(&mut out.certificate, lem, "arc(u) = 2 arc(r)", &arc_of(scene, lem, u), &target);
    let radius = arc_algebra::double_arc(&Radius::new(radius_of(scene, r.id), &ctx)?, &ctx)?;
    out.certificate.push("|u| = doubling formula", radius.value(), &radius_of(scene, u.id));
    Ok(out)
}

/// Sum `t` and difference `v` of the arcs of `r` and `u`.
pub fn recipe_add_sub(scene: &mut Scene, lem: &Lemniscate, r: CurvePoint, u: CurvePoint) -> Result<RecipeResult> {
    check_precision(scene, lem)?;
    let ctx = lem.ctx().clone();
    let (t, v) = scene.scoped("recipe_add_sub", |s| {
        if s.is_origin(r.id) || s.is_origin(u.id) {
            return Ok((arc_add(s, r, u)?, arc_sub(s, r, u)?));
        }
        let dr = decompose(s, r)?;
        let du = decompose(s, u)?;
        if !dr.negative && !du.negative && !dr.shifted && !du.shifted {
            let (t, v) = add_core(s, dr.rep, du.rep, Want::Both)?;
            return Ok((t.expect("sum built"), v.expect("difference built")));
        }
        Ok((arc_add(s, r, u)?, arc_sub(s, r, u)?))
    })?;
    let mut out = RecipeResult::default();
    out.put_curve(scene, "r", r);
    out.put_curve(scene, "u", u);
    out.put_curve(scene, "t", t);
    out.put_curve(scene, "v", v);
    let (sr, su) = (arc_of(scene, lem, r), arc_of(scene, lem, u));
    let sum = Float::with_val(ctx.bits(), &sr + &su);
    let diff = Float::with_val(ctx.bits(), &sr - &su);
    push_arc_check(&mut out.certificate, lem, "arc(t) = arc(r) + arc(u)", &arc_of(scene, lem, t), &sum);
    push_arc_check(&mut out.certificate, lem, "arc(v) = arc(r) - arc(u)", &arc_of(scene, lem, v), &diff);
    let closed = lem.lemniscate_sine(&lem.arc_param(&sum)).abs();
    out.certificate.push("|t| = addition formula", &closed, &radius_of(scene, t.id));
    Ok(out)
}

/// Moves the arc from `r` to `u` so that it starts at `t`: output `w` with
/// `arc(w) = arc(t) + arc(u) - arc(r)`.
pub fn recipe_transfer(scene: &mut Scene, lem: &Lemniscate, r: CurvePoint, u: CurvePoint, t: CurvePoint) -> Result<RecipeResult> {
    check_precision(scene, lem)?;
    let ctx = lem.ctx().clone();
    let w = scene.scoped("recipe_transfer", |s| {
        let d = arc_sub(s, u, r)?;
        arc_add(s, d, t)
    })?;
    let mut out = RecipeResult::default();
    for (name, p) in [("r", r), ("u", u), ("t", t), ("w", w)] {
        out.put_curve(scene, name, p);
    }
    let target = Float::with_val(ctx.bits(), arc_of(scene, lem, t) + arc_of(scene, lem, u)) - arc_of(scene, lem, r);
    push_arc_check(&mut out.certificate, lem, "arc(w) = arc(t) + arc(u) - arc(r)", &arc_of(scene, lem, w), &target);
    Ok(out)
}

/// The point `u` with `arc(u) = (arc(r) + arc(t)) / 2`.
pub fn recipe_bisect_between(scene: &mut Scene, lem: &Lemniscate, r: CurvePoint, t: CurvePoint) -> Result<RecipeResult> {
    check_precision(scene, lem)?;
    let ctx = lem.ctx().clone();
    let u = scene.scoped("recipe_bisect", |s| {
        let hr = arc_halve(s, r)?;
        let ht = arc_halve(s, t)?;
        arc_add(s, hr, ht)
    })?;
    let mut out = RecipeResult::default();
    for (name, p) in [("r", r), ("t", t), ("u", u)] {
        out.put_curve(scene, name, p);
    }
    let target = Float::with_val(ctx.bits(), arc_of(scene, lem, r) + arc_of(scene, lem, t)) / 2u32;
    push_arc_check(&mut out.certificate, lem, "arc(u) = (arc(r) + arc(t))/2", &arc_of(scene, lem, u), &target);
    Ok(out)
}

/// Short human-readable summary of a certificate.
pub fn describe(cert: &Certificate, tol: &Float) -> String {
    let worst = cert.max_error().map(|e| fmt_digits(e, 3)).unwrap_or_else(|| "-".into());
    let verdict = if cert.passes(tol) { "pass" } else { "FAIL" };
    format!("{} checks, max error {worst}: {verdict}", cert.entries.len())
}


#[cfg(test)]
mod tests;
