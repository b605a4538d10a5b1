//! C ABI for the `lemniscate` crate.
//!
//! Objects cross the boundary as opaque handles created by `*_new` or by a
//! run function and released by the matching `*_free`. Every fallible call
//! returns a [`LemnStatus`]; on failure the message is available from
//! [`lemn_last_error`] until the next failing call on the same thread.
//! Strings returned through `char **` out-parameters are owned by the caller
//! and must be released with [`lemn_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use lemniscate::kernel::Scene;
use lemniscate::numerics::{Lemniscate, Radius};
use lemniscate::recipes::{construct_ngon, numeric_ngon, Certificate, NGon};
use lemniscate::svg::Figure;
use lemniscate::trace::TraceDocument;
use lemniscate::{Error, PrecisionContext};

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum LemnStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// The requested precision is below the supported minimum.
    Precision = 2,
    /// An argument is outside the domain of the operation.
    Domain = 3,
    /// The operation hit a singular or degenerate configuration.
    Singular = 4,
    /// The polygon order is not constructible with ruler and compass.
    NotConstructible = 5,
    /// Internal cross-checks disagree.
    Consistency = 6,
    /// An index is out of range.
    OutOfRange = 7,
    /// A string argument is not valid UTF-8, or a trace is malformed.
    Parse = 8,
    /// A panic was caught at the boundary.
    Internal = 99,
}

/// Working precision and the curve evaluator.
pub struct LemnContext {
    lem: Lemniscate,
}

/// Result of a polygon run: the scene, the vertices and the certificate.
pub struct LemnRun {
    scene: Scene,
    ngon: NGon,
    certificate: Certificate,
    warnings: Vec<String>,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let clean = CString::new(msg.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = clean);
}

fn status_of(e: &Error) -> LemnStatus {
    match e {
        Error::Precision { .. } => LemnStatus::Precision,
        Error::Domain(_) | Error::Range(_) | Error::NotCoprime { .. } | Error::UnknownObject(_) => LemnStatus::Domain,
        Error::Singularity(_) | Error::Coincidence(_) | Error::NoRealRoots | Error::Degenerate(_) => {
            LemnStatus::Singular
        }
        Error::NotConstructible(_) => LemnStatus::NotConstructible,
        Error::BranchSelection(_) | Error::Consistency(_) => LemnStatus::Consistency,
        Error::Trace(_) => LemnStatus::Parse,
        Error::Io(_) => LemnStatus::Internal,
    }
}

fn guard(f: impl FnOnce() -> Result<(), (LemnStatus, String)>) -> LemnStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => LemnStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            LemnStatus::Internal
        }
    }
}

fn lib_err(e: Error) -> (LemnStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (LemnStatus, String) {
    (LemnStatus::NullArgument, format!("{what} is null"))
}

unsafe fn as_ref<'a, T>(p: *const T, what: &str) -> Result<&'a T, (LemnStatus, String)> {
    p.as_ref().ok_or_else(|| null(what))
}

fn out_string(text: String, out: *mut *mut c_char) -> Result<(), (LemnStatus, String)> {
    let c = CString::new(text).map_err(|_| (LemnStatus::Internal, "string contains a nul byte".to_string()))?;
    unsafe { *out = c.into_raw() };
    Ok(())
}

/// Message of the last failing call on this thread (empty if none). The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn lemn_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn lemn_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Creates a context working at `digits` significant digits.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for a handle.
#[no_mangle]
pub unsafe extern "C" fn lemn_context_new(digits: u32, out: *mut *mut LemnContext) -> LemnStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let ctx = PrecisionContext::new(digits).map_err(lib_err)?;
        let handle = Box::new(LemnContext { lem: Lemniscate::new(&ctx) });
        *out = Box::into_raw(handle);
        Ok(())
    })
}

/// Releases a context. Null is ignored.
///
/// # Safety
/// `ctx` must come from [`lemn_context_new`] and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn lemn_context_free(ctx: *mut LemnContext) {
    if !ctx.is_null() {
        drop(Box::from_raw(ctx));
    }
}

/// The half period `omega` as a decimal string at full precision.
///
/// # Safety
/// `ctx` must be a live context and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lemn_omega(ctx: *const LemnContext, out: *mut *mut c_char) -> LemnStatus {
    guard(|| {
        let ctx = as_ref(ctx, "ctx")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let lem = &ctx.lem;
        out_string(lemniscate::precision::fmt_digits(lem.omega(), lem.ctx().digits()), out)
    })
}

/// Arc length from the origin to radius `r` in `[0, 1]`, in double precision.
///
/// # Safety
/// `ctx` must be a live context and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lemn_arc_length(ctx: *const LemnContext, r: f64, out: *mut f64) -> LemnStatus {
    guard(|| {
        let ctx = as_ref(ctx, "ctx")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let r = Radius::from_f64(r, ctx.lem.ctx()).map_err(lib_err)?;
        *out = ctx.lem.arc_length(&r).to_f64();
        Ok(())
    })
}

/// The lemniscatic sine of the arc parameter `s`, in double precision.
///
/// # Safety
/// `ctx` must be a live context and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lemn_lemniscate_sine(ctx: *const LemnContext, s: f64, out: *mut f64) -> LemnStatus {
    guard(|| {
        let ctx = as_ref(ctx, "ctx")?;
        if out.is_null() {
            return Err(null("out"));
        }
        if !s.is_finite() {
            return Err((LemnStatus::Domain, "arc parameter is not finite".into()));
        }
        *out = ctx.lem.lemniscate_sine(&ctx.lem.arc_param_f64(s)).to_f64();
        Ok(())
    })
}

/// 1 if the regular `n`-gon on the curve is constructible, 0 otherwise.
#[no_mangle]
pub extern "C" fn lemn_constructible(n: u64) -> i32 {
    i32::from(lemniscate::arc_algebra::constructible(n))
}

/// Builds the regular `n`-gon. With `numeric` nonzero the vertices are
/// evaluated directly; otherwise they are constructed with ruler and compass.
///
/// # Safety
/// `ctx` must be a live context and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lemn_ngon(ctx: *const LemnContext, n: u64, numeric: i32, out: *mut *mut LemnRun) -> LemnStatus {
    guard(|| {
        let ctx = as_ref(ctx, "ctx")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let lem = &ctx.lem;
        let mut scene = Scene::new(lem.ctx());
        let run = if numeric != 0 {
            let ngon = numeric_ngon(n, lem).map_err(lib_err)?;
            let mut certificate = Certificate::default();
            certificate.push_error("equal gaps", &lem.ctx().zero(), ngon.gap_spread(lem));
            LemnRun { scene, ngon, certificate, warnings: Vec::new() }
        } else {
            let r = construct_ngon(&mut scene, lem, n).map_err(lib_err)?;
            LemnRun { scene, ngon: r.ngon, certificate: r.certificate, warnings: r.warnings }
        };
        *out = Box::into_raw(Box::new(run));
        Ok(())
    })
}

/// Releases a run. Null is ignored.
///
/// # Safety
/// `run` must come from this library and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn lemn_run_free(run: *mut LemnRun) {
    if !run.is_null() {
        drop(Box::from_raw(run));
    }
}

/// Number of polygon vertices in the run (0 for a null handle).
///
/// # Safety
/// `run` must be null or a live run.
#[no_mangle]
pub unsafe extern "C" fn lemn_run_vertex_count(run: *const LemnRun) -> usize {
    run.as_ref().map_or(0, |r| r.ngon.vertices.len())
}

/// Cartesian coordinates of vertex `k`, in double precision.
///
/// # Safety
/// `run` must be a live run; `x` and `y` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lemn_run_vertex(run: *const LemnRun, k: usize, x: *mut f64, y: *mut f64) -> LemnStatus {
    guard(|| {
        let run = as_ref(run, "run")?;
        if x.is_null() || y.is_null() {
            return Err(null("x or y"));
        }
        let v = run
            .ngon
            .vertices
            .get(k)
            .ok_or_else(|| (LemnStatus::OutOfRange, format!("vertex {k} of {}", run.ngon.vertices.len())))?;
        let (vx, vy) = v.xy();
        *x = vx.to_f64();
        *y = vy.to_f64();
        Ok(())
    })
}

/// Whether every certificate check of the run is within tolerance (1 or 0),
/// and the largest error seen.
///
/// # Safety
/// `run` must be a live run; `passes` and `max_error` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lemn_run_certificate(run: *const LemnRun, passes: *mut i32, max_error: *mut f64) -> LemnStatus {
    guard(|| {
        let run = as_ref(run, "run")?;
        if passes.is_null() || max_error.is_null() {
            return Err(null("passes or max_error"));
        }
        *passes = i32::from(run.certificate.passes(run.scene.ctx().eps()));
        *max_error = run.certificate.max_error().map_or(0.0, |e| e.to_f64());
        Ok(())
    })
}

/// Number of construction steps and of imported points in the run's scene.
///
/// # Safety
/// `run` must be a live run; the out-pointers valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lemn_run_audit(
    run: *const LemnRun,
    passed: *mut i32,
    steps: *mut usize,
    input_points: *mut usize,
) -> LemnStatus {
    guard(|| {
        let run = as_ref(run, "run")?;
        if passed.is_null() || steps.is_null() || input_points.is_null() {
            return Err(null("out-pointer"));
        }
        let report = run.scene.audit();
        *passed = i32::from(report.passed);
        *steps = report.total_steps;
        *input_points = report.input_points;
        Ok(())
    })
}

/// Warnings raised while planning the run, one per line.
///
/// # Safety
/// `run` must be a live run and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lemn_run_warnings(run: *const LemnRun, out: *mut *mut c_char) -> LemnStatus {
    guard(|| {
        let run = as_ref(run, "run")?;
        if out.is_null() {
            return Err(null("out"));
        }
        out_string(run.warnings.join("\n"), out)
    })
}

/// The JSON trace of the run's construction.
///
/// # Safety
/// `run` must be a live run and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lemn_run_trace_json(run: *const LemnRun, out: *mut *mut c_char) -> LemnStatus {
    guard(|| {
        let run = as_ref(run, "run")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let outputs = run.ngon.points.iter().enumerate().map(|(k, p)| (format!("V{k}"), p.id)).collect();
        let name = format!("ngon {}", run.ngon.n);
        out_string(TraceDocument::from_scene(&run.scene, &name, &outputs, &run.certificate).to_json(), out)
    })
}

/// An SVG figure of the run.
///
/// # Safety
/// `run` must be a live run and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lemn_run_svg(run: *const LemnRun, out: *mut *mut c_char) -> LemnStatus {
    guard(|| {
        let run = as_ref(run, "run")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let mut fig = Figure::new(&format!("regular {}-gon on the lemniscate", run.ngon.n));
        fig.add_scene(&run.scene);
        fig.add_polygon(&run.ngon.vertices, run.ngon.points.is_empty());
        out_string(fig.render(), out)
    })
}

/// Replays a JSON trace; succeeds only if every coordinate is reproduced
/// exactly. Writes the number of replayed steps.
///
/// # Safety
/// `json` must be a nul-terminated string and `steps` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lemn_replay_trace(json: *const c_char, steps: *mut usize) -> LemnStatus {
    guard(|| {
        if json.is_null() || steps.is_null() {
            return Err(null("json or steps"));
        }
        let text = CStr::from_ptr(json)
            .to_str()
            .map_err(|_| (LemnStatus::Parse, "trace is not valid UTF-8".to_string()))?;
        let doc = TraceDocument::from_json(text).map_err(lib_err)?;
        doc.replay().map_err(lib_err)?;
        *steps = doc.steps.len();
        Ok(())
    })
}
