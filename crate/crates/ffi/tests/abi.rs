use std::ffi::{CStr, CString};
use std::ptr;

use lemniscate_ffi::*;

fn context(digits: u32) -> *mut LemnContext {
    let mut ctx = ptr::null_mut();
    assert_eq!(unsafe { lemn_context_new(digits, &mut ctx) }, LemnStatus::Ok);
    ctx
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(lemn_last_error()) }.to_string_lossy().into_owned()
}

fn take(s: *mut std::ffi::c_char) -> String {
    let text = unsafe { CStr::from_ptr(s) }.to_string_lossy().into_owned();
    unsafe { lemn_string_free(s) };
    text
}

#[test]
fn precision_floor_is_reported() {
    let mut ctx = ptr::null_mut();
    assert_eq!(unsafe { lemn_context_new(10, &mut ctx) }, LemnStatus::Precision);
    assert!(ctx.is_null());
    assert!(last_error().contains("15"));
}

#[test]
fn omega_and_sine() {
    let ctx = context(30);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { lemn_omega(ctx, &mut s) }, LemnStatus::Ok);
    assert!(take(s).starts_with("2.62205755429211981046483958989"));
    let mut v = 0.0;
    assert_eq!(unsafe { lemn_lemniscate_sine(ctx, 1.3110287771460599, &mut v) }, LemnStatus::Ok);
    assert!((v - 1.0).abs() < 1e-12);
    assert_eq!(unsafe { lemn_arc_length(ctx, 1.5, &mut v) }, LemnStatus::Domain);
    assert_eq!(unsafe { lemn_arc_length(ctx, 0.5, ptr::null_mut()) }, LemnStatus::NullArgument);
    unsafe { lemn_context_free(ctx) };
}

#[test]
fn seventeen_gon_through_the_abi() {
    let ctx = context(30);
    let mut run = ptr::null_mut();
    assert_eq!(unsafe { lemn_ngon(ctx, 17, 0, &mut run) }, LemnStatus::Ok);
    assert_eq!(unsafe { lemn_run_vertex_count(run) }, 17);
    let (mut passes, mut worst) = (0, 1.0);
    assert_eq!(unsafe { lemn_run_certificate(run, &mut passes, &mut worst) }, LemnStatus::Ok);
    assert_eq!(passes, 1);
    assert!(worst < 1e-15);
    let (mut ok, mut steps, mut inputs) = (0, 0, 99);
    assert_eq!(unsafe { lemn_run_audit(run, &mut ok, &mut steps, &mut inputs) }, LemnStatus::Ok);
    assert_eq!((ok, inputs), (1, 0));
    let (mut x, mut y) = (0.0, 0.0);
    assert_eq!(unsafe { lemn_run_vertex(run, 17, &mut x, &mut y) }, LemnStatus::OutOfRange);

    let mut json = ptr::null_mut();
    assert_eq!(unsafe { lemn_run_trace_json(run, &mut json) }, LemnStatus::Ok);
    let text = CString::new(take(json)).unwrap();
    let mut replayed = 0;
    assert_eq!(unsafe { lemn_replay_trace(text.as_ptr(), &mut replayed) }, LemnStatus::Ok);
    assert_eq!(replayed, steps);

    let mut svg = ptr::null_mut();
    assert_eq!(unsafe { lemn_run_svg(run, &mut svg) }, LemnStatus::Ok);
    assert!(take(svg).contains("<svg"));
    unsafe {
        lemn_run_free(run);
        lemn_context_free(ctx);
    }
}

#[test]
fn nonagon_is_refused() {
    let ctx = context(20);
    let mut run = ptr::null_mut();
    assert_eq!(unsafe { lemn_ngon(ctx, 9, 0, &mut run) }, LemnStatus::NotConstructible);
    assert!(run.is_null());
    assert!(last_error().contains("9-gon"));
    assert_eq!(lemn_constructible(9), 0);
    assert_eq!(lemn_constructible(34), 1);
    unsafe { lemn_context_free(ctx) };
}

#[test]
fn numeric_polygons_and_bad_traces() {
    let ctx = context(20);
    let mut run = ptr::null_mut();
    assert_eq!(unsafe { lemn_ngon(ctx, 7, 1, &mut run) }, LemnStatus::Ok);
    assert_eq!(unsafe { lemn_run_vertex_count(run) }, 7);
    let bad = CString::new("{\"version\": \"nope\"}").unwrap();
    let mut steps = 0;
    assert_eq!(unsafe { lemn_replay_trace(bad.as_ptr(), &mut steps) }, LemnStatus::Parse);
    unsafe {
        lemn_run_free(run);
        lemn_context_free(ctx);
        lemn_run_free(ptr::null_mut());
        lemn_string_free(ptr::null_mut());
    }
}
