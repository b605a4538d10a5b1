//! Structural and numerical checks over a whole scene.

use std::collections::BTreeMap;

use rug::Float;

use super::{ObjRef, Op, Scene};

/// Outcome of [`Scene::audit`].
#[derive(Clone, Debug, Default)]
pub struct AuditReport {
    pub passed: bool,
    pub violations: Vec<String>,
    pub total_steps: usize,
    /// Step counts per primitive operation.
    pub by_op: BTreeMap<String, usize>,
    /// Step counts keyed by the innermost gadget or recipe that issued them.
    pub by_gadget: BTreeMap<String, usize>,
    /// Points imported from outside the construction.
    pub input_points: usize,
}

pub(super) fn audit(scene: &Scene) -> AuditReport {
    let ctx = scene.ctx();
    let bits = ctx.bits();
    let eps = ctx.eps();
    let mut report = AuditReport { total_steps: scene.steps.len(), ..AuditReport::default() };
    let mut violations = Vec::new();
    let mut fail = |msg: String| violations.push(msg);

    let created_at = |obj: ObjRef| -> Option<usize> {
        match obj {
            ObjRef::Point(p) => scene.points.get(p.0).and_then(|p| p.step),
            ObjRef::Line(l) => scene.lines.get(l.0).map(|l| l.step),
            ObjRef::Circle(c) => scene.circles.get(c.0).map(|c| c.step),
        }
    };
    let produced_by = |obj: ObjRef, step: usize| scene.steps.get(step).is_some_and(|s| s.outputs.contains(&obj));

    for (i, p) in scene.points.iter().enumerate() {
        let obj = ObjRef::Point(super::PointId(i));
        match p.step {
            None => fail(format!("{obj} has no producing step")),
            Some(s) if !produced_by(obj, s) => fail(format!("{obj} claims step {s}, which does not output it")),
            _ => {}
        }
        if !p.x.is_finite() || !p.y.is_finite() {
            fail(format!("{obj} has non-finite coordinates"));
        }
    }
    for (i, l) in scene.lines.iter().enumerate() {
        let obj = ObjRef::Line(super::LineId(i));
        if !produced_by(obj, l.step) {
            fail(format!("{obj} claims step {}, which does not output it", l.step));
        }
        let norm = Float::with_val(bits, l.nx.hypot_ref(&l.ny));
        if Float::with_val(bits, norm - 1u32).abs() > *eps {
            fail(format!("{obj} normal is not a unit vector"));
        }
        for p in [l.through.0, l.through.1] {
            if !scene.on_line(super::LineId(i), p) {
                fail(format!("{obj} misses its defining point {}", ObjRef::Point(p)));
            }
        }
    }
    for (i, c) in scene.circles.iter().enumerate() {
        let obj = ObjRef::Circle(super::CircleId(i));
        if !produced_by(obj, c.step) {
            fail(format!("{obj} claims step {}, which does not output it", c.step));
        }
        let r = scene.distance(c.center, c.through);
        if Float::with_val(bits, &r - &c.radius).abs() > *eps || c.radius <= *eps {
            fail(format!("{obj} radius does not match its witness point"));
        }
    }

    for (k, step) in scene.steps.iter().enumerate() {
        *report.by_op.entry(step.op.name().to_string()).or_default() += 1;
        let gadget = step.context.rsplit('/').next().filter(|g| !g.is_empty()).unwrap_or("-");
        *report.by_gadget.entry(gadget.to_string()).or_default() += 1;
        for input in &step.inputs {
            match created_at(*input) {
                Some(s) if s < k => {}
                _ => fail(format!("step {k} uses {input}, which does not exist before it")),
            }
        }
        for output in &step.outputs {
            if created_at(*output) != Some(k) {
                fail(format!("step {k} lists {output}, which it did not create"));
            }
        }
        match &step.op {
            Op::Given { x, y } => {
                if let [ObjRef::Point(p)] = step.outputs[..] {
                    let pt = scene.point(p);
                    if pt.x != x.to_float(bits) || pt.y != y.to_float(bits) {
                        fail(format!("step {k}: given point moved"));
                    }
                }
            }
            Op::Input { .. } => report.input_points += 1,
            Op::Intersect => {
                // a tangency point may sit up to eps * radius off a circle
                let mut slack = Float::with_val(bits, 1u32);
                for input in &step.inputs {
                    if let ObjRef::Circle(c) = *input {
                        slack += &scene.circle(c).radius;
                    }
                }
                let tol = Float::with_val(bits, eps * &slack);
                for out in &step.outputs {
                    let ObjRef::Point(p) = *out else { continue };
                    for input in &step.inputs {
                        let miss = match *input {
                            ObjRef::Line(l) => scene.offset(l, p).abs(),
                            ObjRef::Circle(c) => {
                                let c = scene.circle(c);
                                Float::with_val(bits, scene.distance(c.center, p) - &c.radius).abs()
                            }
                            ObjRef::Point(_) => {
                                fail(format!("step {k} intersects a point"));
                                continue;
                            }
                        };
                        if miss > tol {
                            fail(format!("step {k}: {out} is not on {input}"));
                        }
                    }
                }
            }
            Op::LineThrough | Op::CircleAbout => {}
        }
    }
    report.violations = violations;
    report.passed = report.violations.is_empty();
    report
}
