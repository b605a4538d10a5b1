//! SVG 1.1 figures: the curve in black, construction lines and circles in
//! thin gray, labeled points as small circles. The viewport is fixed at
//! `[-2.2, 2.2]^2` so figures of different constructions line up.

use std::fmt::Write;

use crate::kernel::Scene;
use crate::numerics::{Lemniscate, LemniscatePoint};

const HALF_WIDTH: f64 = 2.2;
const PIXELS: f64 = 800.0;
const CURVE_SAMPLES: usize = 2048;

fn px(x: f64) -> f64 {
    (x + HALF_WIDTH) / (2.0 * HALF_WIDTH) * PIXELS
}

fn py(y: f64) -> f64 {
    (HALF_WIDTH - y) / (2.0 * HALF_WIDTH) * PIXELS
}

fn num(v: f64) -> String {
    // avoid "-0.0000"
    let s = format!("{v:.4}");
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        "0.0000".to_string()
    } else {
        s
    }
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Clips the line `nx x + ny y = c` to the viewport square.
fn clip_line(nx: f64, ny: f64, c: f64) -> Option<((f64, f64), (f64, f64))> {
    let h = HALF_WIDTH;
    let mut hits: Vec<(f64, f64)> = Vec::with_capacity(4);
    if ny.abs() > 1e-12 {
        for x in [-h, h] {
            let y = (c - nx * x) / ny;
            if y.abs() <= h {
                hits.push((x, y));
            }
        }
    }
    if nx.abs() > 1e-12 {
        for y in [-h, h] {
            let x = (c - ny * y) / nx;
            if x.abs() <= h {
                hits.push((x, y));
            }
        }
    }
    hits.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
    hits.dedup_by(|a, b| (a.0 - b.0).abs() < 1e-12 && (a.1 - b.1).abs() < 1e-12);
    match hits.as_slice() {
        [a, .., b] => Some((*a, *b)),
        _ => None,
    }
}

/// A figure under construction.
#[derive(Clone, Debug, Default)]
pub struct Figure {
    title: String,
    construction: String,
    polygon: String,
    points: String,
}

impl Figure {
    pub fn new(title: &str) -> Figure {
        Figure { title: title.to_string(), ..Figure::default() }
    }

    /// Adds every line and circle of the scene, and its labeled points.
    pub fn add_scene(&mut self, scene: &Scene) {
        for l in scene.lines() {
            let (nx, ny, c) = (l.nx.to_f64(), l.ny.to_f64(), l.c.to_f64());
            if let Some(((x1, y1), (x2, y2))) = clip_line(nx, ny, c) {
                let _ = writeln!(
                    self.construction,
                    r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                    num(px(x1)),
                    num(py(y1)),
                    num(px(x2)),
                    num(py(y2))
                );
            }
        }
        for k in scene.circles() {
            let center = scene.point(k.center);
            let r = k.radius.to_f64() / (2.0 * HALF_WIDTH) * PIXELS;
            let _ = writeln!(
                self.construction,
                r#"<circle cx="{}" cy="{}" r="{}"/>"#,
                num(px(center.x.to_f64())),
                num(py(center.y.to_f64())),
                num(r)
            );
        }
        for p in scene.points() {
            if let Some(label) = &p.label {
                self.add_point(p.x.to_f64(), p.y.to_f64(), label);
            }
        }
    }

    /// Adds the chords between consecutive vertices, and the vertices
    /// themselves as `V0`, `V1`, ... when `label` is set.
    pub fn add_polygon(&mut self, vertices: &[LemniscatePoint], label: bool) {
        if vertices.is_empty() {
            return;
        }
        let coords: Vec<(f64, f64)> = vertices
            .iter()
            .map(|v| {
                let (x, y) = v.xy();
                (x.to_f64(), y.to_f64())
            })
            .collect();
        let path: Vec<String> = coords.iter().map(|(x, y)| format!("{},{}", num(px(*x)), num(py(*y)))).collect();
        let _ = writeln!(self.polygon, r#"<polygon points="{}"/>"#, path.join(" "));
        if label {
            for (k, (x, y)) in coords.iter().enumerate() {
                self.add_point(*x, *y, &format!("V{k}"));
            }
        }
    }

    pub fn add_point(&mut self, x: f64, y: f64, label: &str) {
        let _ = writeln!(
            self.points,
            r#"<circle cx="{}" cy="{}" r="3"/><text x="{}" y="{}">{}</text>"#,
            num(px(x)),
            num(py(y)),
            num(px(x) + 5.0),
            num(py(y) - 5.0),
            escape(label)
        );
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{PIXELS}" height="{PIXELS}" viewBox="0 0 {PIXELS} {PIXELS}">"#
        );
        let _ = writeln!(out, "<title>{}</title>", escape(&self.title));
        let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
        let _ = writeln!(out, r##"<g stroke="#999999" stroke-width="0.5" fill="none">"##);
        out.push_str(&self.construction);
        let _ = writeln!(out, "</g>");
        let curve: Vec<String> = Lemniscate::curve_samples(CURVE_SAMPLES)
            .iter()
            .map(|(x, y)| format!("{},{}", num(px(*x)), num(py(*y))))
            .collect();
        let _ = writeln!(
            out,
            r##"<path d="M {} Z" stroke="#000000" stroke-width="1.5" fill="none"/>"##,
            curve.join(" L ")
        );
        let _ = writeln!(out, r##"<g stroke="#1f4e9c" stroke-width="1" fill="none">"##);
        out.push_str(&self.polygon);
        let _ = writeln!(out, "</g>");
        let _ = writeln!(out, r##"<g fill="#c0392b" font-family="sans-serif" font-size="11">"##);
        out.push_str(&self.points);
        let _ = writeln!(out, "</g>");
        let _ = writeln!(out, "</svg>");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clipping_axes() {
        let ((x1, y1), (x2, y2)) = clip_line(0.0, 1.0, 0.0).unwrap();
        assert_eq!((x1, y1, x2, y2), (-2.2, 0.0, 2.2, 0.0));
        assert!(clip_line(0.0, 1.0, 3.0).is_none());
        // diagonal through the corners
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let (a, b) = clip_line(s, -s, 0.0).unwrap();
        assert!((a.0 + 2.2).abs() < 1e-12 && (b.1 - 2.2).abs() < 1e-12);
    }

    #[test]
    fn rendering_is_stable() {
        let mut fig = Figure::new("a & b");
        fig.add_point(0.0, -0.0, "O");
        let a = fig.render();
        assert_eq!(a, fig.render());
        assert!(a.contains("a &amp; b"));
        assert!(a.contains(r#"cx="400.0000" cy="400.0000""#));
    }
}
