//! The regular 17-gon from the marked points `O`, `I`, `P`, `Q`.

use rug::Float;

use super::polygons::{NGon, PolygonRun};
use super::{arc_add, arc_double, arc_halve, arc_of, arc_x_reflect, check_precision, lemniscate_point, reflect_o, CurvePoint, RecipeResult};
use crate::complex::Complex;
use crate::division_radicals::{abel_radical_root, rewritten_u};
use crate::error::{Error, Result};
use crate::kernel::{PointId, Ratio, Scene};
use crate::numerics::{Lemniscate, Petal};

fn complex_of(scene: &Scene, p: PointId) -> Complex {
    let pt = scene.point(p);
    Complex::new(pt.x.clone(), pt.y.clone())
}

/// Constructs `U = phi(2 omega / 17)^2` as a point of the Gaussian plane from
///
/// ```text
/// U/4 = P + Q* + 3C + E r^3
/// C = (1/2) sqrt|Q| at (phi/2 - pi/2)
/// E = 8 (|P| at (theta + 3phi/4) - (1/2) sqrt|Q| at (3pi/2 - 3phi/4))
/// ```
///
/// with `P = -1/2 + i/4`, `Q = 1/4 + i`, `Q*` its mirror in the y-axis,
/// `theta = arg P`, `phi = arg Q` and `r = sqrt((1/2) sqrt|Q|)`.
pub fn recipe_seventeen_u(scene: &mut Scene, lem: &Lemniscate) -> Result<RecipeResult> {
    check_precision(scene, lem)?;
    let f = scene.frame()?;
    let mut out = RecipeResult::default();
    let named = scene.scoped("seventeen_u", |s| {
        let p = s.given(Ratio::new(-1, 2)?, Ratio::new(1, 4)?);
        let q = s.given(Ratio::new(1, 4)?, Ratio::int(1));
        let q_star = s.reflect_across(f.y_axis, q)?;
        // the lengths s = sqrt|Q|/2 and r = sqrt(s)
        let q_len = s.onto_x_axis(q)?;
        let root_q = s.sqrt_len(q_len)?;
        let half = s.midpoint(f.o, root_q)?;
        let r = s.sqrt_len(half)?;
        let s_up = s.signed_to_y(half)?;
        let r_up = s.signed_to_y(r)?;
        // directions phi/2 and 3phi/4
        let (_, dir_half) = s.bisect_angle(f.o, f.i, q)?;
        let (_, dir_three) = s.bisect_angle(f.o, dir_half, q)?;
        let a = s.rotate_by(p, dir_three)?;
        let g34 = s.point_on_ray(dir_three, half)?;
        let b = s.reflect_across(f.anti_diagonal, g34)?;
        let g12 = s.point_on_ray(dir_half, half)?;
        let g12 = s.reflect_across(f.x_axis, g12)?;
        let c = s.reflect_across(f.anti_diagonal, g12)?;
        let d = s.vec_sub(a, b)?;
        let mut e = d;
        for _ in 0..3 {
            e = s.double_from(f.o, e)?;
        }
        let er = s.scale_point_y(e, r_up)?;
        let er3 = s.scale_point_y(er, s_up)?;
        let x1 = s.vec_add(er3, c)?;
        let x2 = s.vec_add(p, c)?;
        let x3 = s.vec_add(q_star, c)?;
        let y = s.vec_add(x1, x2)?;
        let z = s.point_reflect(f.o, x3)?;
        let quarter = s.vec_sub(y, z)?;
        let half_u = s.double_from(f.o, quarter)?;
        let u = s.double_from(f.o, half_u)?;
        Ok([
            ("P", p),
            ("Q", q),
            ("Q*", q_star),
            ("S", s_up),
            ("R", r_up),
            ("A", a),
            ("B", b),
            ("C", c),
            ("D", d),
            ("E", e),
            ("Er", er),
            ("Er3", er3),
            ("U/4", quarter),
            ("U", u),
        ])
    })?;
    for (name, id) in named {
        out.put(scene, name, id);
    }
    let (quarter, u) = (out.outputs["U/4"], out.outputs["U"]);
    let ctx = lem.ctx();
    let radical = abel_radical_root(ctx)?.value;
    let gap = (&complex_of(scene, u) - &radical).abs();
    out.certificate.push_error("U = radical root of the quartic", &radical.abs(), gap);
    let rewritten = rewritten_u(ctx);
    let gap = (&complex_of(scene, quarter) - &rewritten).abs();
    out.certificate.push_error("U/4 = rewritten expression", &rewritten.abs(), gap);
    Ok(out)
}

/// Constructs the first vertex `V1` at arc `2 omega / 17` from the point `U`:
///
/// ```text
/// m = |U|,  W = -sqrt(m) e^(i arg(U)/2),  X = W - m conj(W),  Y = sqrt(X)
/// r1 = 2 Re(Y) / (1 + m)
/// ```
pub fn recipe_seventeen_v1(scene: &mut Scene, lem: &Lemniscate, u: PointId) -> Result<RecipeResult> {
    check_precision(scene, lem)?;
    let f = scene.frame()?;
    let mut out = RecipeResult::default();
    let (w, x, y, z, r1, v1) = scene.scoped("seventeen_v1", |s| {
        let m = s.onto_x_axis(u)?;
        let root_m = s.sqrt_len(m)?;
        let (_, dir) = s.bisect_angle(f.o, f.i, u)?;
        let w_pos = s.point_on_ray(dir, root_m)?;
        let w = s.point_reflect(f.o, w_pos)?;
        let w_bar = s.reflect_across(f.x_axis, w)?;
        let mw_bar = s.scale_point(w_bar, m)?;
        let x = s.vec_sub(w, mw_bar)?;
        let x_len = s.onto_x_axis(x)?;
        let root_x = s.sqrt_len(x_len)?;
        let (_, dir) = s.bisect_angle(f.o, f.i, x)?;
        let y = s.point_on_ray(dir, root_x)?;
        let c = s.circle_about(y, f.o)?;
        let hits = s.intersect(f.x_axis, c)?;
        let z = s.pick_farthest(&hits, f.o)?;
        let one_m = s.translate(m, f.o, f.i)?;
        let l = s.line_through(f.j, one_m)?;
        let par = s.parallel(l, z)?;
        let r1 = s.intersect(par, f.y_axis)?;
        let r1 = *r1.first().ok_or_else(|| Error::Degenerate("parallel misses the y-axis".into()))?;
        let r1x = s.signed_to_x(r1)?;
        let v1 = s.curve_point_from_radius(r1x)?;
        Ok((w, x, y, z, r1, v1))
    })?;
    for (name, id) in [("W", w), ("X", x), ("Y", y), ("Z", z), ("r1", r1)] {
        out.put(scene, name, id);
    }
    let v1 = CurvePoint::new(v1, Petal::Right);
    out.put_curve(scene, "V1", v1);
    let ctx = lem.ctx();
    let bits = ctx.bits();
    let arc = Float::with_val(bits, lem.omega() * 2u32) / 17u32;
    let oracle = lem.lemniscate_sine(&lem.arc_param(&arc));
    let radius = lemniscate_point(scene, v1).r;
    out.certificate.push("|V1| = phi(2 omega/17)", &oracle, &radius);
    let (_, w_num) = crate::division_radicals::w_from_u(&complex_of(scene, u));
    let x_num = &w_num - &w_num.conj().scale(&complex_of(scene, u).abs());
    let z_num = Float::with_val(bits, &x_num.sqrt().re * 2u32);
    out.certificate.push("Z = 2 Re sqrt(W - m conj W)", &z_num, &scene.point(z).x);
    let err = lem.arc_distance(&arc_of(scene, lem, v1), &arc).abs();
    out.certificate.push_error("arc(V1) = 2 omega/17", &arc, err);
    Ok(out)
}

/// All seventeen vertices: `V1` from radicals, then
///
/// ```text
/// V2 = 2 V1, V3 = V1 + V2, V4 = 2 V2, V6 = 2 V3,
/// V8 = x-mirror of V1/2, V7 = x-mirror of V3/2, V5 = 2 (x-mirror of V6),
/// V(17-k) = -Vk, V0 = O
/// ```
pub fn recipe_seventeen_all(scene: &mut Scene, lem: &Lemniscate) -> Result<PolygonRun> {
    check_precision(scene, lem)?;
    let f = scene.frame()?;
    let u_run = recipe_seventeen_u(scene, lem)?;
    let u = u_run.outputs["U"];
    let v1_run = recipe_seventeen_v1(scene, lem, u)?;
    let v1 = v1_run.curve_point("V1").expect("V1 is an output");
    let points = scene.scoped("seventeen_vertices", |s| {
        let v2 = arc_double(s, v1)?;
        let v3 = arc_add(s, v1, v2)?;
        let v4 = arc_double(s, v2)?;
        let v6 = arc_double(s, v3)?;
        let h1 = arc_halve(s, v1)?;
        let v8 = arc_x_reflect(s, h1)?;
        let h3 = arc_halve(s, v3)?;
        let v7 = arc_x_reflect(s, h3)?;
        let m6 = arc_x_reflect(s, v6)?;
        let v5 = arc_double(s, m6)?;
        let mut v = vec![CurvePoint::new(f.o, Petal::Right), v1, v2, v3, v4, v5, v6, v7, v8];
        for k in (1..=8).rev() {
            let mirrored = reflect_o(s, v[k])?;
            v.push(mirrored);
        }
        Ok(v)
    })?;
    for (k, p) in points.iter().enumerate().skip(1) {
        if scene.point(p.id).label.is_none() {
            scene.label(p.id, &format!("V{k}"));
        }
    }
    let ngon = NGon::from_scene(scene, 17, points);
    let mut certificate = u_run.certificate;
    certificate.extend(v1_run.certificate);
    certificate.extend(super::polygons::certify(scene, lem, &ngon));
    Ok(PolygonRun { ngon, certificate, warnings: Vec::new() })
}
