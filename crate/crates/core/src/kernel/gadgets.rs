//! Compound constructions built from the primitive operations.
//!
//! Points on the x-axis double as signed scalars: `(k, 0)` stands for `k`.

use rug::Float;

use super::{CircleId, LineId, PointId, Ratio, Scene};
use crate::error::{Error, Result};

/// The reference objects every construction starts from.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Frame {
    /// `(0, 0)`
    pub o: PointId,
    /// `(1, 0)`
    pub i: PointId,
    /// `(-1, 0)`
    pub i_star: PointId,
    /// `(0, 1)`
    pub j: PointId,
    /// `(0, -1)`
    pub j_neg: PointId,
    pub x_axis: LineId,
    pub y_axis: LineId,
    /// `x = 1`
    pub tangent_i: LineId,
    /// `y = x`
    pub diagonal: LineId,
    /// `y = -x`
    pub anti_diagonal: LineId,
    /// Line through the origin at angle `pi/8`.
    pub eighth: LineId,
    pub unit: CircleId,
}

/// The two points where a trapezium's diameter circle crosses the x-axis.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct RatRoots {
    pub low: PointId,
    pub high: PointId,
}

impl Scene {
    /// The reference frame, built on first use from the two marked points
    /// `O = (0, 0)` and `I = (1, 0)`.
    pub fn frame(&mut self) -> Result<Frame> {
        if let Some(f) = self.frame {
            return Ok(f);
        }
        let f = self.scoped("frame", |s| {
            let o = s.given(Ratio::int(0), Ratio::int(0));
            let i = s.given(Ratio::int(1), Ratio::int(0));
            s.label(o, "O");
            s.label(i, "I");
            let x_axis = s.line_through(o, i)?;
            let unit = s.circle_about(o, i)?;
            let ends = s.intersect(x_axis, unit)?;
            let i_star = s.pick_farthest(&ends, i)?;
            s.label(i_star, "I*");
            let a = s.circle_about(i, i_star)?;
            let b = s.circle_about(i_star, i)?;
            let apexes = s.intersect(a, b)?;
            let y_axis = s.line_through(apexes[0], apexes[1])?;
            let poles = s.intersect(y_axis, unit)?;
            let j = s.pick_max_by(&poles, |p| p.y.clone())?;
            let j_neg = s.pick_farthest(&poles, j)?;
            s.label(j, "J");
            let tangent_i = s.perpendicular(x_axis, i)?;
            let diagonal = s.perp_bisector(i, j)?;
            let anti_diagonal = s.perp_bisector(i, j_neg)?;
            let d = s.intersect(diagonal, unit)?;
            let d = s.pick_max_by(&d, |p| p.x.clone())?;
            let eighth = s.perp_bisector(i, d)?;
            Ok(Frame {
                o,
                i,
                i_star,
                j,
                j_neg,
                x_axis,
                y_axis,
                tangent_i,
                diagonal,
                anti_diagonal,
                eighth,
                unit,
            })
        })?;
        self.frame = Some(f);
        Ok(f)
    }

    fn bits(&self) -> u32 {
        self.ctx.bits()
    }

    /// `(p - origin) . (dir - origin)`
    fn along(&self, origin: PointId, dir: PointId, p: PointId) -> Float {
        let b = self.bits();
        let (o, d, p) = (self.point(origin), self.point(dir), self.point(p));
        let dx = Float::with_val(b, &d.x - &o.x);
        let dy = Float::with_val(b, &d.y - &o.y);
        let px = Float::with_val(b, &p.x - &o.x);
        let py = Float::with_val(b, &p.y - &o.y);
        dx * px + dy * py
    }

    /// `(a - origin) x (b - origin)`
    pub fn cross(&self, origin: PointId, a: PointId, b: PointId) -> Float {
        let bits = self.bits();
        let (o, a, b) = (self.point(origin), self.point(a), self.point(b));
        let ax = Float::with_val(bits, &a.x - &o.x);
        let ay = Float::with_val(bits, &a.y - &o.y);
        let bx = Float::with_val(bits, &b.x - &o.x);
        let by = Float::with_val(bits, &b.y - &o.y);
        ax * by - ay * bx
    }

    fn none(what: &str) -> Error {
        Error::Degenerate(format!("{what}: expected intersection is missing"))
    }

    /// The candidate furthest along the ray from `origin` through `dir`.
    pub fn pick_along(&self, pts: &[PointId], origin: PointId, dir: PointId) -> Result<PointId> {
        pts.iter()
            .copied()
            .max_by(|&a, &b| self.along(origin, dir, a).partial_cmp(&self.along(origin, dir, b)).expect("finite"))
            .ok_or_else(|| Self::none("pick along ray"))
    }

    pub fn pick_farthest(&self, pts: &[PointId], from: PointId) -> Result<PointId> {
        pts.iter()
            .copied()
            .max_by(|&a, &b| self.distance(a, from).partial_cmp(&self.distance(b, from)).expect("finite"))
            .ok_or_else(|| Self::none("pick farthest"))
    }

    pub fn pick_max_by(&self, pts: &[PointId], key: impl Fn(&super::Point) -> Float) -> Result<PointId> {
        pts.iter()
            .copied()
            .max_by(|&a, &b| key(self.point(a)).partial_cmp(&key(self.point(b))).expect("finite"))
            .ok_or_else(|| Self::none("pick by key"))
    }

    fn single(pts: Vec<PointId>, what: &str) -> Result<PointId> {
        pts.first().copied().ok_or_else(|| Self::none(what))
    }

    pub fn is_origin(&self, p: PointId) -> bool {
        let pt = self.point(p);
        Float::with_val(self.bits(), pt.x.hypot_ref(&pt.y)) <= *self.ctx.eps()
    }

    pub fn is_unit(&self, p: PointId) -> bool {
        let pt = self.point(p);
        self.ctx.close(&pt.x, &self.ctx.one()) && self.ctx.is_negligible(&pt.y)
    }

    /// Perpendicular bisector of `ab`, through the apexes of the two circles
    /// about `a` and `b` with radius `|ab|`.
    pub fn perp_bisector(&mut self, a: PointId, b: PointId) -> Result<LineId> {
        self.scoped("perp_bisector", |s| {
            let ca = s.circle_about(a, b)?;
            let cb = s.circle_about(b, a)?;
            let apexes = s.intersect(ca, cb)?;
            if apexes.len() != 2 {
                return Err(Self::none("perpendicular bisector"));
            }
            s.line_through(apexes[0], apexes[1])
        })
    }

    pub fn midpoint(&mut self, a: PointId, b: PointId) -> Result<PointId> {
        self.scoped("midpoint", |s| {
            let pb = s.perp_bisector(a, b)?;
            let l = s.line_through(a, b)?;
            let m = s.intersect(l, pb)?;
            Self::single(m, "midpoint")
        })
    }

    /// Line through `p` perpendicular to `l`.
    pub fn perpendicular(&mut self, l: LineId, p: PointId) -> Result<LineId> {
        self.scoped("perpendicular", |s| {
            let (a, b) = s.line(l).through;
            if s.on_line(l, p) {
                let w = if s.distance(a, p) >= s.distance(b, p) { a } else { b };
                let c = s.circle_about(p, w)?;
                let pts = s.intersect(l, c)?;
                if pts.len() != 2 {
                    return Err(Self::none("perpendicular at a point"));
                }
                return s.perp_bisector(pts[0], pts[1]);
            }
            // the witness further from the foot gives the more transversal circle
            let foot_dist = |s: &Scene, w: PointId| {
                let d = s.distance(w, p);
                let h = s.offset(l, p);
                Float::with_val(s.bits(), d.square() - h.square())
            };
            let w = if foot_dist(s, a) >= foot_dist(s, b) { a } else { b };
            let c = s.circle_about(p, w)?;
            let pts = s.intersect(l, c)?;
            match pts.len() {
                2 => s.perp_bisector(pts[0], pts[1]),
                1 => s.line_through(p, pts[0]),
                _ => Err(Self::none("perpendicular from a point")),
            }
        })
    }

    fn foot_with(&mut self, l: LineId, p: PointId) -> Result<(PointId, LineId)> {
        let perp = self.perpendicular(l, p)?;
        let f = self.intersect(l, perp)?;
        Ok((Self::single(f, "foot")?, perp))
    }

    /// Orthogonal projection of `p` onto `l`.
    pub fn foot(&mut self, l: LineId, p: PointId) -> Result<PointId> {
        if self.on_line(l, p) {
            return Ok(p);
        }
        self.scoped("foot", |s| Ok(s.foot_with(l, p)?.0))
    }

    /// Line through `p` parallel to `l` (two perpendiculars).
    pub fn parallel(&mut self, l: LineId, p: PointId) -> Result<LineId> {
        if self.on_line(l, p) {
            return Ok(l);
        }
        self.scoped("parallel", |s| {
            let perp = s.perpendicular(l, p)?;
            s.perpendicular(perp, p)
        })
    }

    /// Mirror image of `p` in `l`.
    pub fn reflect_across(&mut self, l: LineId, p: PointId) -> Result<PointId> {
        if self.on_line(l, p) {
            return Ok(p);
        }
        self.scoped("reflect", |s| {
            let (f, perp) = s.foot_with(l, p)?;
            let c = s.circle_about(f, p)?;
            let pts = s.intersect(perp, c)?;
            s.pick_farthest(&pts, p)
        })
    }

    /// `2 center - p`
    pub fn point_reflect(&mut self, center: PointId, p: PointId) -> Result<PointId> {
        if self.coincide(center, p) {
            return Ok(center);
        }
        self.scoped("point_reflect", |s| {
            let l = s.line_through(center, p)?;
            let c = s.circle_about(center, p)?;
            let pts = s.intersect(l, c)?;
            s.pick_farthest(&pts, p)
        })
    }

    /// `2 p - center`: the point twice as far out along the ray from `center`.
    pub fn double_from(&mut self, center: PointId, p: PointId) -> Result<PointId> {
        if self.coincide(center, p) {
            return Ok(center);
        }
        self.scoped("double", |s| {
            let l = s.line_through(center, p)?;
            let c = s.circle_about(p, center)?;
            let pts = s.intersect(l, c)?;
            s.pick_farthest(&pts, center)
        })
    }

    /// Internal bisector of the angle at `v` from ray `va` to ray `vb`.
    /// Returns the line and a point on the bisecting ray.
    pub fn bisect_angle(&mut self, v: PointId, a: PointId, b: PointId) -> Result<(LineId, PointId)> {
        self.scoped("bisect_angle", |s| {
            let ca = s.circle_about(v, a)?;
            let lb = s.line_through(v, b)?;
            let pts = s.intersect(lb, ca)?;
            let b1 = s.pick_along(&pts, v, b)?;
            if s.coincide(a, b1) {
                let l = s.line_through(v, a)?;
                return Ok((l, a));
            }
            let pb = s.perp_bisector(a, b1)?;
            let chord = s.line_through(a, b1)?;
            let m = Self::single(s.intersect(chord, pb)?, "chord midpoint")?;
            if !s.coincide(m, v) {
                return Ok((pb, m));
            }
            // straight angle: take the counter-clockwise side of `a`
            let pts = s.intersect(pb, ca)?;
            let dir = s.pick_max_by(&pts, |_| Float::new(2))?;
            let dir = if s.cross(v, a, dir).is_sign_positive() { dir } else { s.pick_farthest(&pts, dir)? };
            Ok((pb, dir))
        })
    }

    /// `p + (to - from)` by completing a parallelogram.
    pub fn translate(&mut self, p: PointId, from: PointId, to: PointId) -> Result<PointId> {
        if self.coincide(from, to) {
            return Ok(p);
        }
        if self.coincide(p, from) {
            return Ok(to);
        }
        self.scoped("translate", |s| {
            let l = s.line_through(from, to)?;
            if !s.on_line(l, p) {
                let l1 = s.parallel(l, p)?;
                let side = s.line_through(from, p)?;
                let l2 = s.parallel(side, to)?;
                return Self::single(s.intersect(l1, l2)?, "parallelogram corner");
            }
            // collinear: shift an off-line helper first, then translate along it
            let perp = s.perpendicular(l, from)?;
            let c = s.circle_about(from, to)?;
            let h = Self::single(s.intersect(perp, c)?, "helper point")?;
            let h2 = s.translate(h, from, to)?;
            s.translate(p, h, h2)
        })
    }

    /// `p + q`
    pub fn vec_add(&mut self, p: PointId, q: PointId) -> Result<PointId> {
        let o = self.frame()?.o;
        self.translate(p, o, q)
    }

    /// `p - q`
    pub fn vec_sub(&mut self, p: PointId, q: PointId) -> Result<PointId> {
        let o = self.frame()?.o;
        self.translate(p, q, o)
    }

    /// `(|p|, 0)`
    pub fn onto_x_axis(&mut self, p: PointId) -> Result<PointId> {
        let f = self.frame()?;
        if self.is_origin(p) {
            return Ok(f.o);
        }
        if self.on_line(f.x_axis, p) && self.point(p).x.is_sign_positive() {
            return Ok(p);
        }
        self.scoped("onto_x_axis", |s| {
            let c = s.circle_about(f.o, p)?;
            let pts = s.intersect(f.x_axis, c)?;
            s.pick_max_by(&pts, |q| q.x.clone())
        })
    }

    /// `(0, |p|)`
    pub fn onto_y_axis(&mut self, p: PointId) -> Result<PointId> {
        let f = self.frame()?;
        if self.is_origin(p) {
            return Ok(f.o);
        }
        if self.on_line(f.y_axis, p) && self.point(p).y.is_sign_positive() {
            return Ok(p);
        }
        self.scoped("onto_y_axis", |s| {
            let c = s.circle_about(f.o, p)?;
            let pts = s.intersect(f.y_axis, c)?;
            s.pick_max_by(&pts, |q| q.y.clone())
        })
    }

    /// `(k, 0)` to `(0, k)`, keeping the sign.
    pub fn signed_to_y(&mut self, p: PointId) -> Result<PointId> {
        let f = self.frame()?;
        if self.is_origin(p) {
            return Ok(f.o);
        }
        let negative = self.point(p).x.is_sign_negative();
        self.scoped("to_y_axis", |s| {
            let c = s.circle_about(f.o, p)?;
            let pts = s.intersect(f.y_axis, c)?;
            if negative {
                s.pick_max_by(&pts, |q| Float::with_val(q.y.prec(), -&q.y))
            } else {
                s.pick_max_by(&pts, |q| q.y.clone())
            }
        })
    }

    /// `(0, k)` to `(k, 0)`, keeping the sign.
    pub fn signed_to_x(&mut self, p: PointId) -> Result<PointId> {
        let f = self.frame()?;
        if self.is_origin(p) {
            return Ok(f.o);
        }
        let negative = self.point(p).y.is_sign_negative();
        self.scoped("to_x_axis", |s| {
            let c = s.circle_about(f.o, p)?;
            let pts = s.intersect(f.x_axis, c)?;
            if negative {
                s.pick_max_by(&pts, |q| Float::with_val(q.x.prec(), -&q.x))
            } else {
                s.pick_max_by(&pts, |q| q.x.clone())
            }
        })
    }

    /// Where the ray from the origin through `p` meets the unit circle.
    pub fn unit_on_ray(&mut self, p: PointId) -> Result<PointId> {
        let f = self.frame()?;
        if self.is_origin(p) {
            return Err(Error::Degenerate("the origin does not define a direction".into()));
        }
        self.scoped("unit_on_ray", |s| {
            let l = s.line_through(f.o, p)?;
            let pts = s.intersect(l, f.unit)?;
            s.pick_along(&pts, f.o, p)
        })
    }

    /// The point on the ray from the origin through `ray` at distance `|len|`.
    pub fn point_on_ray(&mut self, ray: PointId, len: PointId) -> Result<PointId> {
        let f = self.frame()?;
        if self.is_origin(len) {
            return Ok(f.o);
        }
        if self.is_origin(ray) {
            return Err(Error::Degenerate("the origin does not define a direction".into()));
        }
        self.scoped("point_on_ray", |s| {
            let c = s.circle_about(f.o, len)?;
            let l = s.line_through(f.o, ray)?;
            let pts = s.intersect(l, c)?;
            s.pick_along(&pts, f.o, ray)
        })
    }

    /// `(p q, 0)` from `(p, 0)` and `(q, 0)` by similar triangles with unit `J`.
    pub fn thales_product(&mut self, p: PointId, q: PointId) -> Result<PointId> {
        let f = self.frame()?;
        if self.is_origin(p) || self.is_origin(q) {
            return Ok(f.o);
        }
        if self.is_unit(q) {
            return Ok(p);
        }
        if self.is_unit(p) {
            return Ok(q);
        }
        self.scoped("thales_product", |s| {
            let qy = s.signed_to_y(q)?;
            let l = s.line_through(f.j, p)?;
            let par = s.parallel(l, qy)?;
            Self::single(s.intersect(par, f.x_axis)?, "product")
        })
    }

    /// `(p / q, 0)` from `(p, 0)` and `(q, 0)`.
    pub fn thales_ratio(&mut self, p: PointId, q: PointId) -> Result<PointId> {
        let f = self.frame()?;
        if self.is_origin(q) {
            return Err(Error::Singularity("division by zero length".into()));
        }
        if self.is_origin(p) {
            return Ok(f.o);
        }
        if self.is_unit(q) {
            return Ok(p);
        }
        self.scoped("thales_ratio", |s| {
            let qy = s.signed_to_y(q)?;
            let l = s.line_through(qy, p)?;
            let par = s.parallel(l, f.j)?;
            Self::single(s.intersect(par, f.x_axis)?, "ratio")
        })
    }

    /// `k p` for a point `p` and a scalar `(k, 0)`, by the homothety about the
    /// origin taking `I` to `(k, 0)`.
    pub fn scale_point(&mut self, p: PointId, k: PointId) -> Result<PointId> {
        let f = self.frame()?;
        if self.is_origin(p) || self.is_origin(k) {
            return Ok(f.o);
        }
        if self.is_unit(k) {
            return Ok(p);
        }
        if self.on_line(f.x_axis, p) {
            return self.thales_product(p, k);
        }
        self.scoped("scale_point", |s| {
            let l = s.line_through(f.i, p)?;
            let par = s.parallel(l, k)?;
            let ray = s.line_through(f.o, p)?;
            Self::single(s.intersect(par, ray)?, "scaled point")
        })
    }

    /// `k p` for a point `p` and a scalar marked on the y-axis as `(0, k)`,
    /// by the homothety about the origin taking `J` to `(0, k)`.
    pub fn scale_point_y(&mut self, p: PointId, k: PointId) -> Result<PointId> {
        let f = self.frame()?;
        if self.is_origin(p) || self.is_origin(k) {
            return Ok(f.o);
        }
        if self.coincide(k, f.j) {
            return Ok(p);
        }
        if self.on_line(f.y_axis, p) {
            let px = self.signed_to_x(p)?;
            let kx = self.signed_to_x(k)?;
            let prod = self.thales_product(px, kx)?;
            return self.signed_to_y(prod);
        }
        self.scoped("scale_point", |s| {
            let l = s.line_through(f.j, p)?;
            let par = s.parallel(l, k)?;
            let ray = s.line_through(f.o, p)?;
            Self::single(s.intersect(par, ray)?, "scaled point")
        })
    }

    /// `(0, sqrt(p q))` from positive scalars: the semicircle on the diameter
    /// from `(-p, 0)` to `(q, 0)` meets the y-axis at that height.
    pub fn geometric_mean(&mut self, p: PointId, q: PointId) -> Result<PointId> {
        let f = self.frame()?;
        if self.is_origin(p) || self.is_origin(q) {
            return Ok(f.o);
        }
        self.scoped("geometric_mean", |s| {
            let np = s.point_reflect(f.o, p)?;
            let m = s.midpoint(np, q)?;
            let c = s.circle_about(m, q)?;
            let pts = s.intersect(f.y_axis, c)?;
            s.pick_max_by(&pts, |t| t.y.clone())
        })
    }

    /// `(sqrt x, 0)` from `(x, 0)`, `x >= 0`.
    pub fn sqrt_len(&mut self, x: PointId) -> Result<PointId> {
        let f = self.frame()?;
        if self.is_origin(x) {
            return Ok(f.o);
        }
        if self.is_unit(x) {
            return Ok(f.i);
        }
        if self.point(x).x.is_sign_negative() {
            return Err(Error::Domain("square root of a negative length".into()));
        }
        self.scoped("sqrt", |s| {
            let g = s.geometric_mean(f.i, x)?;
            s.signed_to_x(g)
        })
    }

    /// Trapezium with vertical sides `a` (at the origin) and `c` (at `x = b`).
    /// The circle on the diameter from `(0, a)` to `(b, c)` crosses the x-axis
    /// at the roots of `x^2 - b x + a c`.
    pub fn rat_trapezium(&mut self, a: PointId, b: PointId, c: PointId) -> Result<RatRoots> {
        let f = self.frame()?;
        self.scoped("rat", |s| {
            let ay = s.signed_to_y(a)?;
            let cy = s.signed_to_y(c)?;
            let bc = s.translate(cy, f.o, b)?;
            if s.coincide(ay, bc) {
                return Err(Error::Degenerate("trapezium diameter has zero length".into()));
            }
            let m = s.midpoint(ay, bc)?;
            let circle = s.circle_about(m, ay)?;
            let pts = s.intersect(f.x_axis, circle)?;
            match pts[..] {
                [] => Err(Error::NoRealRoots),
                [p] => Ok(RatRoots { low: p, high: p }),
                [p, q] => Ok(RatRoots { low: p, high: q }),
                _ => unreachable!("a line meets a circle at most twice"),
            }
        })
    }

    /// Real roots of `a y^2 + b y + c`: the returned points sit at the
    /// negated roots (ascending by abscissa).
    pub fn rat_roots(&mut self, a: PointId, b: PointId, c: PointId) -> Result<RatRoots> {
        let f = self.frame()?;
        if self.is_origin(a) {
            return Err(Error::Degenerate("leading coefficient is zero".into()));
        }
        if self.is_unit(a) {
            return self.rat_trapezium(f.i, b, c);
        }
        self.scoped("rat_normalize", |s| {
            let b1 = s.thales_ratio(b, a)?;
            let c1 = s.thales_ratio(c, a)?;
            s.rat_trapezium(f.i, b1, c1)
        })
    }

    /// Rotates `p` about the origin by the polar angle of `ray`: reflect in
    /// the x-axis, then in the bisector of the angle from `I` to `ray`.
    pub fn rotate_by(&mut self, p: PointId, ray: PointId) -> Result<PointId> {
        let f = self.frame()?;
        if self.is_origin(p) {
            return Ok(f.o);
        }
        self.scoped("rotate", |s| {
            let q = s.reflect_across(f.x_axis, p)?;
            let (half, _) = s.bisect_angle(f.o, f.i, ray)?;
            s.reflect_across(half, q)
        })
    }

    /// The upper-right point of the curve at distance `|rho|` from the origin.
    /// Its polar angle is half the angle whose cosine is `rho^2`.
    pub fn curve_point_from_radius(&mut self, rho: PointId) -> Result<PointId> {
        let f = self.frame()?;
        if self.is_origin(rho) {
            return Ok(f.o);
        }
        if self.is_unit(rho) {
            return Ok(f.i);
        }
        self.scoped("fold", |s| {
            let t = s.thales_product(rho, rho)?;
            s.curve_point_from_parts(t, rho)
        })
    }

    /// Same as [`Scene::curve_point_from_radius`] when `rho^2` is already
    /// marked as `(t, 0)`.
    pub fn curve_point_from_parts(&mut self, t: PointId, rho: PointId) -> Result<PointId> {
        let f = self.frame()?;
        if self.is_origin(rho) {
            return Ok(f.o);
        }
        if self.is_unit(rho) {
            return Ok(f.i);
        }
        self.scoped("fold", |s| {
            let perp = s.perpendicular(f.x_axis, t)?;
            let lifts = s.intersect(perp, f.unit)?;
            let lift = s.pick_max_by(&lifts, |p| p.y.clone())?;
            let (bis, dir) = s.bisect_angle(f.o, f.i, lift)?;
            let c = s.circle_about(f.o, rho)?;
            let pts = s.intersect(bis, c)?;
            s.pick_along(&pts, f.o, dir)
        })
    }

    /// The right-loop point of the curve on the ray from the origin through
    /// `ray` (polar angle in `[-pi/4, pi/4]`), at distance `sqrt(cos 2 phi)`.
    pub fn curve_point_on_ray(&mut self, ray: PointId) -> Result<PointId> {
        let f = self.frame()?;
        self.scoped("curve_on_ray", |s| {
            let l = s.line_through(f.o, ray)?;
            let doubled = s.reflect_across(l, f.i)?;
            let c = s.foot(f.x_axis, doubled)?;
            if s.is_origin(c) {
                return Ok(f.o);
            }
            if s.point(c).x.is_sign_negative() {
                return Err(Error::Domain("ray misses the right loop".into()));
            }
            let u = s.sqrt_len(c)?;
            s.point_on_ray(ray, u)
        })
    }
}
