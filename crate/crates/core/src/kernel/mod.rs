//! Ruler-and-compass construction kernel.
//!
//! A [`Scene`] holds points, lines and circles in append-only lists together
//! with the log of steps that created them. The only ways to create objects
//! are marking a rational point, importing an externally supplied point,
//! drawing a line through two points, drawing a circle about a point through
//! another, and intersecting two curves. Everything else in the crate is
//! built on top of these.

mod audit;
mod gadgets;
mod geometry;

pub use audit::AuditReport;
pub use gadgets::{Frame, RatRoots};

use std::fmt;

use rug::Float;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::precision::PrecisionContext;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointId(pub usize);

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LineId(pub usize);

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CircleId(pub usize);

/// Reference to any scene object.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ObjRef {
    Point(PointId),
    Line(LineId),
    Circle(CircleId),
}

impl fmt::Display for ObjRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObjRef::Point(p) => write!(f, "P{}", p.0),
            ObjRef::Line(l) => write!(f, "L{}", l.0),
            ObjRef::Circle(c) => write!(f, "C{}", c.0),
        }
    }
}

impl std::str::FromStr for ObjRef {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Trace(format!("bad object reference {s:?}"));
        let (kind, idx) = s.split_at(1.min(s.len()));
        let idx: usize = idx.parse().map_err(|_| bad())?;
        match kind {
            "P" => Ok(ObjRef::Point(PointId(idx))),
            "L" => Ok(ObjRef::Line(LineId(idx))),
            "C" => Ok(ObjRef::Circle(CircleId(idx))),
            _ => Err(bad()),
        }
    }
}

impl From<PointId> for ObjRef {
    fn from(p: PointId) -> Self {
        ObjRef::Point(p)
    }
}

impl From<LineId> for ObjRef {
    fn from(l: LineId) -> Self {
        ObjRef::Line(l)
    }
}

impl From<CircleId> for ObjRef {
    fn from(c: CircleId) -> Self {
        ObjRef::Circle(c)
    }
}

/// A line or a circle, the two kinds of curve that can be intersected.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Curve {
    Line(LineId),
    Circle(CircleId),
}

impl From<LineId> for Curve {
    fn from(l: LineId) -> Self {
        Curve::Line(l)
    }
}

impl From<CircleId> for Curve {
    fn from(c: CircleId) -> Self {
        Curve::Circle(c)
    }
}

impl From<Curve> for ObjRef {
    fn from(c: Curve) -> Self {
        match c {
            Curve::Line(l) => ObjRef::Line(l),
            Curve::Circle(c) => ObjRef::Circle(c),
        }
    }
}

/// An exact rational coordinate.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ratio {
    pub num: i64,
    pub den: i64,
}

impl Ratio {
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::Domain("zero denominator".into()));
        }
        let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
        Ok(Ratio { num, den })
    }

    pub const fn int(v: i64) -> Self {
        Ratio { num: v, den: 1 }
    }

    pub fn to_float(self, bits: u32) -> Float {
        Float::with_val(bits, self.num) / Float::with_val(bits, self.den)
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl std::str::FromStr for Ratio {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Trace(format!("bad rational {s:?}"));
        match s.split_once('/') {
            Some((n, d)) => Ratio::new(n.trim().parse().map_err(|_| bad())?, d.trim().parse().map_err(|_| bad())?),
            None => Ok(Ratio::int(s.trim().parse().map_err(|_| bad())?)),
        }
    }
}

/// The primitive operations.
#[derive(Clone, Debug, PartialEq)]
pub enum Op {
    /// Mark a point with rational coordinates.
    Given { x: Ratio, y: Ratio },
    /// Import a point computed outside the construction.
    Input { x: Float, y: Float },
    /// Line through two distinct points.
    LineThrough,
    /// Circle about the first point passing through the second.
    CircleAbout,
    /// All real intersections of two curves, sorted by `x`, then `y`.
    Intersect,
}

impl Op {
    pub fn name(&self) -> &'static str {
        match self {
            Op::Given { .. } => "given",
            Op::Input { .. } => "input",
            Op::LineThrough => "line",
            Op::CircleAbout => "circle",
            Op::Intersect => "intersect",
        }
    }
}

/// One entry of the construction log.
#[derive(Clone, Debug, PartialEq)]
pub struct Step {
    pub op: Op,
    pub inputs: Vec<ObjRef>,
    pub outputs: Vec<ObjRef>,
    /// Slash-separated path of the gadgets and recipes that issued the step.
    pub context: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Point {
    pub x: Float,
    pub y: Float,
    pub step: Option<usize>,
    pub label: Option<String>,
}

/// A line stored in normal form `nx x + ny y = c` with `(nx, ny)` a unit vector.
#[derive(Clone, Debug, PartialEq)]
pub struct Line {
    pub through: (PointId, PointId),
    pub nx: Float,
    pub ny: Float,
    pub c: Float,
    pub step: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Circle {
    pub center: PointId,
    pub through: PointId,
    pub radius: Float,
    pub step: usize,
}

/// An append-only construction.
#[derive(Clone, Debug)]
pub struct Scene {
    ctx: PrecisionContext,
    points: Vec<Point>,
    lines: Vec<Line>,
    circles: Vec<Circle>,
    steps: Vec<Step>,
    scope: Vec<String>,
    frame: Option<Frame>,
}

impl Scene {
    pub fn new(ctx: &PrecisionContext) -> Self {
        Scene {
            ctx: ctx.clone(),
            points: Vec::new(),
            lines: Vec::new(),
            circles: Vec::new(),
            steps: Vec::new(),
            scope: Vec::new(),
            frame: None,
        }
    }

    pub fn ctx(&self) -> &PrecisionContext {
        &self.ctx
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn lines(&self) -> &[Line] {
        &self.lines
    }

    pub fn circles(&self) -> &[Circle] {
        &self.circles
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn point(&self, id: PointId) -> &Point {
        &self.points[id.0]
    }

    pub fn line(&self, id: LineId) -> &Line {
        &self.lines[id.0]
    }

    pub fn circle(&self, id: CircleId) -> &Circle {
        &self.circles[id.0]
    }

    /// Attaches a display name to a point.
    pub fn label(&mut self, id: PointId, name: &str) {
        self.points[id.0].label = Some(name.to_string());
    }

    pub fn find_label(&self, name: &str) -> Option<PointId> {
        self.points.iter().position(|p| p.label.as_deref() == Some(name)).map(PointId)
    }

    /// Runs `f` with `name` pushed on the context path recorded in each step.
    pub fn scoped<T>(&mut self, name: &str, f: impl FnOnce(&mut Scene) -> Result<T>) -> Result<T> {
        self.scope.push(name.to_string());
        let out = f(self);
        self.scope.pop();
        out
    }

    fn context(&self) -> String {
        self.scope.join("/")
    }

    fn check_point(&self, id: PointId) -> Result<()> {
        if id.0 < self.points.len() {
            Ok(())
        } else {
            Err(Error::UnknownObject(ObjRef::Point(id).to_string()))
        }
    }

    fn check_curve(&self, c: Curve) -> Result<()> {
        let ok = match c {
            Curve::Line(l) => l.0 < self.lines.len(),
            Curve::Circle(k) => k.0 < self.circles.len(),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::UnknownObject(ObjRef::from(c).to_string()))
        }
    }

    fn push_step(&mut self, op: Op, inputs: Vec<ObjRef>, outputs: Vec<ObjRef>) -> usize {
        let context = self.context();
        self.steps.push(Step { op, inputs, outputs, context });
        self.steps.len() - 1
    }

    fn push_point(&mut self, x: Float, y: Float, step: Option<usize>) -> PointId {
        self.points.push(Point { x, y, step, label: None });
        PointId(self.points.len() - 1)
    }

    /// Marks a point with rational coordinates.
    pub fn given(&mut self, x: Ratio, y: Ratio) -> PointId {
        let bits = self.ctx.bits();
        let id = PointId(self.points.len());
        let step = self.push_step(Op::Given { x, y }, vec![], vec![id.into()]);
        self.push_point(x.to_float(bits), y.to_float(bits), Some(step))
    }

    /// Imports a point computed outside the construction. The audit counts these.
    pub fn input(&mut self, x: Float, y: Float) -> PointId {
        let bits = self.ctx.bits();
        let (x, y) = (Float::with_val(bits, x), Float::with_val(bits, y));
        let id = PointId(self.points.len());
        let step = self.push_step(Op::Input { x: x.clone(), y: y.clone() }, vec![], vec![id.into()]);
        self.push_point(x, y, Some(step))
    }

    /// Adds a point with no producing step. Exists so that tests can check
    /// that the audit rejects it; never used by the construction code.
    #[doc(hidden)]
    pub fn inject_unchecked(&mut self, x: Float, y: Float) -> PointId {
        self.push_point(x, y, None)
    }

    pub fn line_through(&mut self, p: PointId, q: PointId) -> Result<LineId> {
        self.check_point(p)?;
        self.check_point(q)?;
        let (a, b) = (self.point(p), self.point(q));
        let (nx, ny, c) = geometry::line_coefficients(&a.x, &a.y, &b.x, &b.y, &self.ctx)
            .ok_or_else(|| Error::Coincidence(format!("line through {} and {}", ObjRef::Point(p), ObjRef::Point(q))))?;
        let id = LineId(self.lines.len());
        let step = self.push_step(Op::LineThrough, vec![p.into(), q.into()], vec![id.into()]);
        self.lines.push(Line { through: (p, q), nx, ny, c, step });
        Ok(id)
    }

    pub fn circle_about(&mut self, center: PointId, through: PointId) -> Result<CircleId> {
        self.check_point(center)?;
        self.check_point(through)?;
        let (a, b) = (self.point(center), self.point(through));
        let radius = geometry::distance(&a.x, &a.y, &b.x, &b.y);
        if radius <= *self.ctx.eps() {
            return Err(Error::Coincidence(format!(
                "circle about {} through {}",
                ObjRef::Point(center),
                ObjRef::Point(through)
            )));
        }
        let id = CircleId(self.circles.len());
        let step = self.push_step(Op::CircleAbout, vec![center.into(), through.into()], vec![id.into()]);
        self.circles.push(Circle { center, through, radius, step });
        Ok(id)
    }

    /// Intersects two curves. The result is empty for disjoint, parallel,
    /// concentric or identical curves, has one point for tangency (within
    /// `eps * scale^2`) and two points otherwise, ordered by `x` then `y`.
    pub fn intersect(&mut self, a: impl Into<Curve>, b: impl Into<Curve>) -> Result<Vec<PointId>> {
        let (a, b) = canonical_pair(a.into(), b.into());
        self.check_curve(a)?;
        self.check_curve(b)?;
        let coords = geometry::intersect(&self.shape(a), &self.shape(b), &self.ctx);
        let first = self.points.len();
        let outputs: Vec<ObjRef> = (0..coords.len()).map(|k| ObjRef::Point(PointId(first + k))).collect();
        let step = self.push_step(Op::Intersect, vec![a.into(), b.into()], outputs);
        Ok(coords.into_iter().map(|(x, y)| self.push_point(x, y, Some(step))).collect())
    }

    fn shape(&self, c: Curve) -> geometry::Shape {
        match c {
            Curve::Line(l) => {
                let l = self.line(l);
                geometry::Shape::Line { nx: l.nx.clone(), ny: l.ny.clone(), c: l.c.clone() }
            }
            Curve::Circle(k) => {
                let k = self.circle(k);
                let center = self.point(k.center);
                geometry::Shape::Circle { x: center.x.clone(), y: center.y.clone(), r: k.radius.clone() }
            }
        }
    }

    /// Re-executes one logged operation, returning the created objects.
    pub fn apply(&mut self, op: &Op, inputs: &[ObjRef]) -> Result<Vec<ObjRef>> {
        let point = |k: usize| match inputs.get(k) {
            Some(ObjRef::Point(p)) => Ok(*p),
            other => Err(Error::Trace(format!("{} expects a point operand, got {other:?}", op.name()))),
        };
        let curve = |k: usize| match inputs.get(k) {
            Some(ObjRef::Line(l)) => Ok(Curve::Line(*l)),
            Some(ObjRef::Circle(c)) => Ok(Curve::Circle(*c)),
            other => Err(Error::Trace(format!("intersect expects curve operands, got {other:?}"))),
        };
        Ok(match op {
            Op::Given { x, y } => vec![self.given(*x, *y).into()],
            Op::Input { x, y } => vec![self.input(x.clone(), y.clone()).into()],
            Op::LineThrough => vec![self.line_through(point(0)?, point(1)?)?.into()],
            Op::CircleAbout => vec![self.circle_about(point(0)?, point(1)?)?.into()],
            Op::Intersect => self.intersect(curve(0)?, curve(1)?)?.into_iter().map(ObjRef::from).collect(),
        })
    }

    /// Rebuilds the scene from its step log alone.
    pub fn replay(&self) -> Result<Scene> {
        let mut fresh = Scene::new(&self.ctx);
        for (k, step) in self.steps.iter().enumerate() {
            fresh.scope = vec![step.context.clone()];
            let produced = fresh.apply(&step.op, &step.inputs)?;
            if produced != step.outputs {
                return Err(Error::Trace(format!("step {k} produced {produced:?}, log says {:?}", step.outputs)));
            }
        }
        fresh.scope.clear();
        for (p, q) in fresh.points.iter_mut().zip(&self.points) {
            p.label = q.label.clone();
        }
        Ok(fresh)
    }

    /// Every point coordinate is bit-for-bit equal in both scenes.
    pub fn same_coordinates(&self, other: &Scene) -> bool {
        self.points.len() == other.points.len()
            && self.points.iter().zip(&other.points).all(|(a, b)| a.x == b.x && a.y == b.y)
    }

    pub fn audit(&self) -> AuditReport {
        audit::audit(self)
    }

    /// Distance between two points.
    pub fn distance(&self, a: PointId, b: PointId) -> Float {
        let (p, q) = (self.point(a), self.point(b));
        geometry::distance(&p.x, &p.y, &q.x, &q.y)
    }

    /// The two points coincide within `eps`.
    pub fn coincide(&self, a: PointId, b: PointId) -> bool {
        self.distance(a, b) <= *self.ctx.eps()
    }

    /// Signed distance from a point to a line (positive on the normal side).
    pub fn offset(&self, l: LineId, p: PointId) -> Float {
        let (l, p) = (self.line(l), self.point(p));
        let bits = self.ctx.bits();
        let dot = Float::with_val(bits, &l.nx * &p.x) + Float::with_val(bits, &l.ny * &p.y);
        dot - &l.c
    }

    pub fn on_line(&self, l: LineId, p: PointId) -> bool {
        self.offset(l, p).abs() <= *self.ctx.eps()
    }
}

fn canonical_pair(a: Curve, b: Curve) -> (Curve, Curve) {
    if b < a {
        (b, a)
    } else {
        (a, b)
    }
}
