//! The `lemnisc` command line.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::Float;

use crate::arc_algebra::{self, constructible};
use crate::division_radicals::{
    abel_quartic, branch_sweep, multiset_distance, numeric_quartic_roots, phi_two_omega_17, rewritten_u,
};
use crate::error::{Error, Result};
use crate::kernel::Scene;
use crate::numerics::{Lemniscate, Radius};
use crate::precision::{fmt_digits, PrecisionContext, DEFAULT_DIGITS};
use crate::recipes::{
    self, arc_of, construct_ngon, describe, import_point, lemniscate_point, numeric_ngon, Certificate, CurvePoint,
    RecipeResult,
};
use crate::svg::Figure;
use crate::trace::TraceDocument;

/// Exit status when a certificate check misses its tolerance.
pub const EXIT_CERTIFICATE: i32 = 1;
/// Exit status for rejected input and failed operations.
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "lemnisc", version, about = "Ruler-and-compass constructions on the lemniscate of Bernoulli")]
pub struct Cli {
    /// Working precision in significant decimal digits (at least 15).
    #[arg(long, global = true, env = "LEMNISC_PRECISION", default_value_t = DEFAULT_DIGITS)]
    pub precision: u32,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Regular n-gon on the curve.
    Ngon {
        n: u64,
        /// Build the polygon with ruler and compass (default).
        #[arg(long, conflicts_with = "numeric")]
        construct: bool,
        /// Evaluate the vertices from the lemniscatic sine.
        #[arg(long)]
        numeric: bool,
        #[arg(long, value_enum, default_value_t = Format::Svg)]
        format: Format,
        /// Output file; standard output if absent.
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Arc arithmetic on points of the upper right quarter, given by radius.
    Arc {
        #[arg(value_enum)]
        op: ArcOp,
        /// Radii in [0, 1] (or arc parameters with --arc).
        #[arg(required = true, allow_negative_numbers = true)]
        args: Vec<String>,
        /// Read the arguments as arc parameters instead of radii.
        #[arg(long)]
        arc: bool,
    },
    /// Run a suite of checks against the independent oracles.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
    /// Write the JSON trace of a recipe.
    Trace {
        #[arg(value_enum)]
        recipe: TraceRecipe,
        /// Recipe arguments (radii, or the polygon order for `ngon`).
        #[arg(allow_negative_numbers = true)]
        args: Vec<String>,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Re-execute a JSON trace and check that every coordinate is reproduced.
    Replay { path: PathBuf },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Svg,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ArcOp {
    Add,
    Sub,
    Double,
    Halve,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Radicals,
    Seventeen,
    Arcs,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum TraceRecipe {
    Seventeen,
    SeventeenU,
    SeventeenV1,
    Double,
    Halve,
    AddSub,
    Ngon,
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

/// Runs a parsed command line and returns the process exit status.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut io = Io { out, err };
    match dispatch(cli, &mut io) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(io.err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn dispatch(cli: &Cli, io: &mut Io) -> Result<i32> {
    let ctx = PrecisionContext::new(cli.precision)?;
    match &cli.command {
        Command::Ngon { n, numeric, format, out, .. } => cmd_ngon(&ctx, *n, *numeric, *format, out.as_ref(), io),
        Command::Arc { op, args, arc } => cmd_arc(&ctx, *op, args, *arc, io),
        Command::Verify { suite } => cmd_verify(&ctx, *suite, io),
        Command::Trace { recipe, args, out } => cmd_trace(&ctx, *recipe, args, out.as_ref(), io),
        Command::Replay { path } => cmd_replay(path, io),
    }
}

fn emit(io: &mut Io, path: Option<&PathBuf>, text: &str) -> Result<()> {
    let io_err = |e: std::io::Error| Error::Io(e.to_string());
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display()))),
        None => io.out.write_all(text.as_bytes()).map_err(io_err),
    }
}

fn report(io: &mut Io, cert: &Certificate, ctx: &PrecisionContext) -> i32 {
    let digits = ctx.digits().min(20);
    for e in &cert.entries {
        let mark = if e.error <= *ctx.eps() { "ok" } else { "FAIL" };
        let _ = writeln!(io.err, "  [{mark}] {}: error {}", e.check, fmt_digits(&e.error, 3.max(digits / 5)));
    }
    let _ = writeln!(io.err, "certificate: {}", describe(cert, ctx.eps()));
    if cert.passes(ctx.eps()) {
        0
    } else {
        EXIT_CERTIFICATE
    }
}

fn cmd_ngon(
    ctx: &PrecisionContext,
    n: u64,
    numeric: bool,
    format: Format,
    out: Option<&PathBuf>,
    io: &mut Io,
) -> Result<i32> {
    let lem = Lemniscate::new(ctx);
    let mut scene = Scene::new(ctx);
    let (ngon, mut certificate, warnings) = if numeric {
        let ngon = numeric_ngon(n, &lem)?;
        let mut cert = Certificate::default();
        cert.push_error(format!("equal gaps of the {n}-gon"), &ctx.zero(), ngon.gap_spread(&lem));
        (ngon, cert, Vec::new())
    } else {
        if !constructible(n) {
            return Err(Error::NotConstructible(n));
        }
        let run = construct_ngon(&mut scene, &lem, n)?;
        (run.ngon, run.certificate, run.warnings)
    };
    for w in &warnings {
        let _ = writeln!(io.err, "warning: {w}");
    }
    let text = match format {
        Format::Svg => {
            let mut fig = Figure::new(&format!("regular {n}-gon on the lemniscate"));
            fig.add_scene(&scene);
            fig.add_polygon(&ngon.vertices, numeric);
            fig.render()
        }
        Format::Json => {
            let points = if ngon.points.is_empty() {
                ngon.vertices.iter().map(|v| import_point(&mut scene, v)).collect()
            } else {
                ngon.points.clone()
            };
            let outputs: BTreeMap<String, _> =
                points.iter().enumerate().map(|(k, p)| (format!("V{k}"), p.id)).collect();
            if numeric {
                certificate.push_error(format!("vertices of the {n}-gon"), &ctx.zero(), ngon.max_deviation(&lem));
            }
            TraceDocument::from_scene(&scene, &format!("ngon {n}"), &outputs, &certificate).to_json()
        }
    };
    emit(io, out, &text)?;
    if !numeric {
        let audit = scene.audit();
        let _ = writeln!(
            io.err,
            "audit: {} steps, {} imported points, {}",
            audit.total_steps,
            audit.input_points,
            if audit.passed { "pass" } else { "FAIL" }
        );
        if !audit.passed {
            for v in &audit.violations {
                let _ = writeln!(io.err, "  {v}");
            }
            return Ok(EXIT_CERTIFICATE);
        }
    }
    Ok(report(io, &certificate, ctx))
}

fn parse_points(
    scene: &mut Scene,
    lem: &Lemniscate,
    args: &[String],
    as_arc: bool,
    expected: usize,
) -> Result<Vec<CurvePoint>> {
    if args.len() != expected {
        return Err(Error::Domain(format!("expected {expected} argument(s), got {}", args.len())));
    }
    let ctx = lem.ctx();
    args.iter()
        .map(|a| {
            let v = ctx.parse(a)?;
            let point = if as_arc {
                lem.point_at(&lem.arc_param(&v))
            } else {
                let r = Radius::new(v, ctx)?;
                let s = lem.arc_length(&r);
                lem.point_at(&lem.arc_param(&s))
            };
            Ok(if point.r.is_zero() {
                CurvePoint::new(scene.frame()?.o, point.petal)
            } else {
                import_point(scene, &point)
            })
        })
        .collect()
}

fn print_outputs(io: &mut Io, scene: &Scene, lem: &Lemniscate, run: &RecipeResult, names: &[&str]) {
    let digits = lem.ctx().digits();
    for name in names {
        let Some(p) = run.curve_point(name) else { continue };
        let lp = lemniscate_point(scene, p);
        let (x, y) = lp.xy();
        let _ = writeln!(
            io.out,
            "{name}: radius {} arc {} point ({}, {})",
            fmt_digits(&lp.r, digits),
            fmt_digits(&arc_of(scene, lem, p), digits),
            fmt_digits(&x, digits),
            fmt_digits(&y, digits)
        );
    }
}

fn cmd_arc(ctx: &PrecisionContext, op: ArcOp, args: &[String], as_arc: bool, io: &mut Io) -> Result<i32> {
    let lem = Lemniscate::new(ctx);
    let mut scene = Scene::new(ctx);
    let (run, names): (RecipeResult, &[&str]) = match op {
        ArcOp::Add | ArcOp::Sub => {
            let p = parse_points(&mut scene, &lem, args, as_arc, 2)?;
            let run = recipes::recipe_add_sub(&mut scene, &lem, p[0], p[1])?;
            (run, if op == ArcOp::Add { &["t"] } else { &["v"] })
        }
        ArcOp::Double => {
            let p = parse_points(&mut scene, &lem, args, as_arc, 1)?;
            (recipes::recipe_double(&mut scene, &lem, p[0])?, &["u"])
        }
        ArcOp::Halve => {
            let p = parse_points(&mut scene, &lem, args, as_arc, 1)?;
            (recipes::recipe_halve(&mut scene, &lem, p[0])?, &["r", "r_complement"])
        }
    };
    print_outputs(io, &scene, &lem, &run, names);
    Ok(report(io, &run.certificate, ctx))
}

/// The checks behind `verify radicals`.
pub fn radicals_suite(ctx: &PrecisionContext) -> Result<Certificate> {
    let lem = Lemniscate::new(ctx);
    let mut cert = Certificate::default();
    let sweep = branch_sweep(ctx)?;
    for (k, c) in sweep.candidates.iter().enumerate() {
        cert.push_error(format!("|P(U_{k})|"), &ctx.zero(), c.residual.clone());
    }
    let radicals: Vec<_> = sweep.candidates.iter().map(|c| c.radical.value.clone()).collect();
    let numeric = numeric_quartic_roots(&abel_quartic(), ctx);
    let distance = multiset_distance(&radicals, &numeric).ok_or_else(|| Error::Consistency("root counts differ".into()))?;
    cert.push_error("radical roots = numeric roots (as a multiset)", &ctx.zero(), distance);
    let u = &sweep.candidates[sweep.selected].radical.value;
    let four = rewritten_u(ctx).scale(&ctx.real(4));
    cert.push_error("4 x rewritten expression = U", &u.abs(), (&four - u).abs());
    let r = phi_two_omega_17(ctx)?;
    let arc = Float::with_val(ctx.bits(), lem.omega() * 2u32) / 17u32;
    let oracle = lem.lemniscate_sine(&lem.arc_param(&arc));
    cert.push("r1 = phi(2 omega/17)", &oracle, &r.r1);
    cert.push("addition formula real part = r1", &r.r1, &r.addition_check.re);
    cert.push_error("addition formula imaginary part", &ctx.zero(), r.addition_check.im.clone().abs());
    Ok(cert)
}

/// The checks behind `verify arcs`: seeded random pairs through the closed
/// forms and the constructions, against the quadrature oracle.
pub fn arcs_suite(ctx: &PrecisionContext, pairs: usize, seed: u64) -> Result<Certificate> {
    let lem = Lemniscate::new(ctx);
    let bits = ctx.bits();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cert = Certificate::default();
    for k in 0..pairs {
        let r = Radius::new(ctx.real(rng.gen_range(0.05..0.95)), ctx)?;
        let u = Radius::new(ctx.real(rng.gen_range(0.05..0.95)), ctx)?;
        let (sr, su) = (lem.arc_length(&r), lem.arc_length(&u));
        let sum = Float::with_val(bits, &sr + &su);
        let diff = Float::with_val(bits, &sr - &su).abs();
        let add = arc_algebra::add_arcs(&r, &u, ctx)?;
        cert.push(format!("pair {k}: add"), &lem.lemniscate_sine(&lem.arc_param(&sum)).abs(), add.radius.value());
        let (hi, lo) = if r.value() >= u.value() { (&r, &u) } else { (&u, &r) };
        let sub = arc_algebra::sub_arcs(hi, lo, ctx)?;
        cert.push(format!("pair {k}: sub"), &lem.lemniscate_sine(&lem.arc_param(&diff)), sub.value());
        let twice = Float::with_val(bits, &sr * 2u32);
        let dbl = arc_algebra::double_arc(&r, ctx)?;
        cert.push(format!("pair {k}: double"), &lem.lemniscate_sine(&lem.arc_param(&twice)).abs(), dbl.value());

        let mut scene = Scene::new(ctx);
        let pr = import_point(&mut scene, &lem.point_at(&lem.arc_param(&sr)));
        let pu = import_point(&mut scene, &lem.point_at(&lem.arc_param(&su)));
        let run = recipes::recipe_add_sub(&mut scene, &lem, pr, pu)?;
        for e in run.certificate.entries {
            cert.push_error(format!("pair {k}: construction {}", e.check), &e.target, e.error);
        }
        let run = recipes::recipe_halve(&mut scene, &lem, pu)?;
        for e in run.certificate.entries {
            cert.push_error(format!("pair {k}: construction {}", e.check), &e.target, e.error);
        }
    }
    Ok(cert)
}

fn cmd_verify(ctx: &PrecisionContext, suite: Suite, io: &mut Io) -> Result<i32> {
    let cert = match suite {
        Suite::Radicals => radicals_suite(ctx)?,
        Suite::Arcs => arcs_suite(ctx, 20, 17)?,
        Suite::Seventeen => {
            let lem = Lemniscate::new(ctx);
            let mut scene = Scene::new(ctx);
            let run = recipes::recipe_seventeen_all(&mut scene, &lem)?;
            let audit = scene.audit();
            let _ = writeln!(
                io.out,
                "audit: {} steps, {} imported points, {}",
                audit.total_steps,
                audit.input_points,
                if audit.passed { "pass" } else { "FAIL" }
            );
            let _ = writeln!(io.out, "max vertex deviation: {}", fmt_digits(&run.ngon.max_deviation(&lem), 6));
            if !audit.passed || audit.input_points != 0 {
                report(io, &run.certificate, ctx);
                return Ok(EXIT_CERTIFICATE);
            }
            run.certificate
        }
    };
    let worst = cert.max_error().map(|e| fmt_digits(e, 6)).unwrap_or_else(|| "0".into());
    let _ = writeln!(io.out, "max error: {worst}");
    Ok(report(io, &cert, ctx))
}

fn trace_run(
    scene: &mut Scene,
    lem: &Lemniscate,
    recipe: TraceRecipe,
    args: &[String],
) -> Result<(BTreeMap<String, crate::kernel::PointId>, Certificate)> {
    let simple = |run: RecipeResult| (run.outputs, run.certificate);
    Ok(match recipe {
        TraceRecipe::Seventeen => {
            let run = recipes::recipe_seventeen_all(scene, lem)?;
            let outputs = run.ngon.points.iter().enumerate().map(|(k, p)| (format!("V{k}"), p.id)).collect();
            (outputs, run.certificate)
        }
        TraceRecipe::SeventeenU => simple(recipes::recipe_seventeen_u(scene, lem)?),
        TraceRecipe::SeventeenV1 => {
            let u = recipes::recipe_seventeen_u(scene, lem)?;
            let mut v = recipes::recipe_seventeen_v1(scene, lem, u.outputs["U"])?;
            v.certificate.entries.splice(0..0, u.certificate.entries);
            v.outputs.extend(u.outputs);
            simple(v)
        }
        TraceRecipe::Double => {
            let p = parse_points(scene, lem, args, false, 1)?;
            simple(recipes::recipe_double(scene, lem, p[0])?)
        }
        TraceRecipe::Halve => {
            let p = parse_points(scene, lem, args, false, 1)?;
            simple(recipes::recipe_halve(scene, lem, p[0])?)
        }
        TraceRecipe::AddSub => {
            let p = parse_points(scene, lem, args, false, 2)?;
            simple(recipes::recipe_add_sub(scene, lem, p[0], p[1])?)
        }
        TraceRecipe::Ngon => {
            let n: u64 = args
                .first()
                .and_then(|a| a.parse().ok())
                .ok_or_else(|| Error::Domain("ngon needs the polygon order".into()))?;
            let run = construct_ngon(scene, lem, n)?;
            let outputs = run.ngon.points.iter().enumerate().map(|(k, p)| (format!("V{k}"), p.id)).collect();
            (outputs, run.certificate)
        }
    })
}

fn cmd_trace(
    ctx: &PrecisionContext,
    recipe: TraceRecipe,
    args: &[String],
    out: Option<&PathBuf>,
    io: &mut Io,
) -> Result<i32> {
    let lem = Lemniscate::new(ctx);
    let mut scene = Scene::new(ctx);
    let (outputs, cert) = trace_run(&mut scene, &lem, recipe, args)?;
    let name = recipe.to_possible_value().expect("no skipped variants").get_name().to_string();
    let doc = TraceDocument::from_scene(&scene, &name, &outputs, &cert);
    emit(io, out, &doc.to_json())?;
    Ok(report(io, &cert, ctx))
}

fn cmd_replay(path: &PathBuf, io: &mut Io) -> Result<i32> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Trace(format!("{}: {e}", path.display())))?;
    let doc = TraceDocument::from_json(&text)?;
    let scene = doc.replay()?;
    let _ = writeln!(
        io.out,
        "replayed {} steps of {:?} at {} digits: {} points reproduced exactly",
        doc.steps.len(),
        doc.recipe,
        doc.precision,
        scene.points().len()
    );
    let ctx = scene.ctx().clone();
    let mut failed = 0;
    for check in &doc.certificate {
        let err = ctx.parse(&check.error)?;
        if err > *ctx.eps() {
            failed += 1;
            let _ = writeln!(io.err, "  [FAIL] {}: recorded error {}", check.check, check.error);
        }
    }
    let _ = writeln!(io.out, "recorded certificate: {} checks, {failed} over tolerance", doc.certificate.len());
    Ok(if failed == 0 { 0 } else { EXIT_CERTIFICATE })
}
