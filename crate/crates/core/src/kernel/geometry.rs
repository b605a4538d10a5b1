//! Coordinate formulas behind the primitive operations.

use std::cmp::Ordering;

use rug::Float;

use crate::precision::PrecisionContext;

pub(crate) enum Shape {
    /// `nx x + ny y = c`
    Line { nx: Float, ny: Float, c: Float },
    Circle { x: Float, y: Float, r: Float },
}

pub(crate) fn distance(ax: &Float, ay: &Float, bx: &Float, by: &Float) -> Float {
    let p = ax.prec();
    let dx = Float::with_val(p, bx - ax);
    let dy = Float::with_val(p, by - ay);
    dx.hypot(&dy)
}

/// Unit normal form of the line through two points; `None` if they coincide.
pub(crate) fn line_coefficients(
    ax: &Float,
    ay: &Float,
    bx: &Float,
    by: &Float,
    ctx: &PrecisionContext,
) -> Option<(Float, Float, Float)> {
    let p = ctx.bits();
    let len = distance(ax, ay, bx, by);
    if len <= *ctx.eps() {
        return None;
    }
    let dx = Float::with_val(p, bx - ax) / &len;
    let dy = Float::with_val(p, by - ay) / &len;
    let nx = -dy;
    let ny = dx;
    let c = Float::with_val(p, &nx * ax) + Float::with_val(p, &ny * ay);
    Some((nx, ny, c))
}

pub(crate) fn intersect(a: &Shape, b: &Shape, ctx: &PrecisionContext) -> Vec<(Float, Float)> {
    let mut pts = match (a, b) {
        (Shape::Line { nx, ny, c }, Shape::Line { nx: mx, ny: my, c: d }) => line_line(nx, ny, c, mx, my, d, ctx),
        (Shape::Line { nx, ny, c }, Shape::Circle { x, y, r }) | (Shape::Circle { x, y, r }, Shape::Line { nx, ny, c }) => {
            line_circle(nx, ny, c, x, y, r, ctx)
        }
        (Shape::Circle { x, y, r }, Shape::Circle { x: x2, y: y2, r: r2 }) => circle_circle(x, y, r, x2, y2, r2, ctx),
    };
    pts.sort_by(|p, q| compare(p, q, ctx));
    pts
}

fn compare(p: &(Float, Float), q: &(Float, Float), ctx: &PrecisionContext) -> Ordering {
    let dx = Float::with_val(ctx.bits(), &p.0 - &q.0);
    if dx.clone().abs() > *ctx.eps() {
        return dx.partial_cmp(&0).unwrap_or(Ordering::Equal);
    }
    p.1.partial_cmp(&q.1).unwrap_or(Ordering::Equal)
}

fn line_line(nx: &Float, ny: &Float, c: &Float, mx: &Float, my: &Float, d: &Float, ctx: &PrecisionContext) -> Vec<(Float, Float)> {
    let p = ctx.bits();
    let det = Float::with_val(p, nx * my) - Float::with_val(p, ny * mx);
    if det.clone().abs() <= *ctx.eps() {
        return Vec::new();
    }
    let x = (Float::with_val(p, c * my) - Float::with_val(p, d * ny)) / &det;
    let y = (Float::with_val(p, nx * d) - Float::with_val(p, mx * c)) / &det;
    vec![(x, y)]
}

fn line_circle(nx: &Float, ny: &Float, c: &Float, cx: &Float, cy: &Float, r: &Float, ctx: &PrecisionContext) -> Vec<(Float, Float)> {
    let p = ctx.bits();
    let d = Float::with_val(p, nx * cx) + Float::with_val(p, ny * cy) - c;
    let fx = Float::with_val(p, cx - Float::with_val(p, &d * nx));
    let fy = Float::with_val(p, cy - Float::with_val(p, &d * ny));
    let r2 = Float::with_val(p, r.clone().square());
    let h2 = Float::with_val(p, &r2 - d.square());
    let threshold = Float::with_val(p, ctx.eps() * &r2);
    if h2.clone().abs() <= threshold {
        return vec![(fx, fy)];
    }
    if h2.is_sign_negative() {
        return Vec::new();
    }
    let h = h2.sqrt();
    // direction along the line
    let (dx, dy) = (Float::with_val(p, -ny), nx.clone());
    let ox = Float::with_val(p, &h * &dx);
    let oy = Float::with_val(p, &h * &dy);
    vec![
        (Float::with_val(p, &fx + &ox), Float::with_val(p, &fy + &oy)),
        (fx - ox, fy - oy),
    ]
}

fn circle_circle(
    x1: &Float,
    y1: &Float,
    r1: &Float,
    x2: &Float,
    y2: &Float,
    r2: &Float,
    ctx: &PrecisionContext,
) -> Vec<(Float, Float)> {
    let p = ctx.bits();
    let dist = distance(x1, y1, x2, y2);
    if dist <= *ctx.eps() {
        return Vec::new();
    }
    let ux = Float::with_val(p, x2 - x1) / &dist;
    let uy = Float::with_val(p, y2 - y1) / &dist;
    let r1sq = Float::with_val(p, r1.clone().square());
    let r2sq = Float::with_val(p, r2.clone().square());
    let a = (Float::with_val(p, &r1sq - &r2sq) + Float::with_val(p, dist.clone().square())) / Float::with_val(p, &dist * 2u32);
    let h2 = Float::with_val(p, &r1sq - Float::with_val(p, a.clone().square()));
    let scale = r1.clone().max(r2);
    let threshold = Float::with_val(p, ctx.eps() * scale.square());
    let bx = Float::with_val(p, x1 + Float::with_val(p, &a * &ux));
    let by = Float::with_val(p, y1 + Float::with_val(p, &a * &uy));
    if h2.clone().abs() <= threshold {
        return vec![(bx, by)];
    }
    if h2.is_sign_negative() {
        return Vec::new();
    }
    let h = h2.sqrt();
    let ox = Float::with_val(p, -Float::with_val(p, &h * &uy));
    let oy = Float::with_val(p, &h * &ux);
    vec![
        (Float::with_val(p, &bx + &ox), Float::with_val(p, &by + &oy)),
        (bx - ox, by - oy),
    ]
}
