use rug::Float;

use super::*;
use crate::precision::PrecisionContext;

fn setup(digits: u32) -> (Scene, Lemniscate) {
    let ctx = PrecisionContext::new(digits).unwrap();
    (Scene::new(&ctx), Lemniscate::new(&ctx))
}

fn at(scene: &mut Scene, lem: &Lemniscate, s: f64) -> CurvePoint {
    let p = lem.point_at(&lem.arc_param_f64(s));
    import_point(scene, &p)
}

fn tol(lem: &Lemniscate) -> Float {
    lem.ctx().eps().clone()
}

#[test]
fn halving_then_doubling_returns_the_arc() {
    let (mut scene, lem) = setup(30);
    for s in [0.3, 0.9, 1.2, 1.7, 2.4] {
        let u = at(&mut scene, &lem, s);
        let halved = recipe_halve(&mut scene, &lem, u).unwrap();
        assert!(halved.certificate.passes(&tol(&lem)), "{}", describe(&halved.certificate, &tol(&lem)));
        let r = halved.curve_point("r").unwrap();
        let doubled = recipe_double(&mut scene, &lem, r).unwrap();
        assert!(doubled.certificate.passes(&tol(&lem)));
        let back = arc_of(&scene, &lem, doubled.curve_point("u").unwrap());
        assert!((back - s).abs() < 1e-20);
    }
}

#[test]
fn halving_at_the_origin_is_refused() {
    let (mut scene, lem) = setup(30);
    let o = scene.frame().unwrap().o;
    let err = recipe_halve(&mut scene, &lem, CurvePoint::new(o, Petal::Right)).unwrap_err();
    assert!(matches!(err, Error::Domain(_)));
}

#[test]
fn add_and_sub_cover_every_quadrant() {
    let (mut scene, lem) = setup(30);
    let samples = [0.2, 0.8, 1.1, 1.6, 2.1, 2.9, 3.5, 4.1, 4.9];
    for &a in &samples {
        for &b in &samples {
            let r = at(&mut scene, &lem, a);
            let u = at(&mut scene, &lem, b);
            let run = recipe_add_sub(&mut scene, &lem, r, u).unwrap();
            assert!(run.certificate.passes(&tol(&lem)), "{a} {b}: {}", describe(&run.certificate, &tol(&lem)));
        }
    }
}

#[test]
fn add_through_the_origin_keeps_the_loop() {
    let (mut scene, lem) = setup(30);
    let omega = lem.omega().to_f64();
    let r = at(&mut scene, &lem, 0.6 * omega);
    let u = at(&mut scene, &lem, 0.4 * omega);
    let run = recipe_add_sub(&mut scene, &lem, r, u).unwrap();
    let t = run.curve_point("t").unwrap();
    assert!(scene.is_origin(t.id));
    assert_eq!(t.petal, Petal::Left);
    assert!(run.certificate.passes(&tol(&lem)));
}

#[test]
fn transfer_and_bisect() {
    let (mut scene, lem) = setup(30);
    let r = at(&mut scene, &lem, 0.4);
    let u = at(&mut scene, &lem, 1.3);
    let t = at(&mut scene, &lem, 3.0);
    let run = recipe_transfer(&mut scene, &lem, r, u, t).unwrap();
    assert!(run.certificate.passes(&tol(&lem)));
    let run = recipe_bisect_between(&mut scene, &lem, r, t).unwrap();
    assert!(run.certificate.passes(&tol(&lem)));
}

#[test]
fn octagon_from_the_square() {
    let (mut scene, lem) = setup(30);
    let square = base_polygon(&mut scene, 4).unwrap();
    let run = recipe_2n_gon(&mut scene, &lem, &square).unwrap();
    assert_eq!(run.ngon.vertices.len(), 8);
    assert!(run.certificate.passes(&tol(&lem)), "{}", describe(&run.certificate, &tol(&lem)));
    assert!(scene.audit().passed);
}

#[test]
fn hexagon_from_a_numeric_triangle() {
    let (mut scene, lem) = setup(30);
    let triangle = numeric_ngon(3, &lem).unwrap();
    let run = recipe_2n_gon(&mut scene, &lem, &triangle).unwrap();
    assert!(run.certificate.passes(&tol(&lem)), "{}", describe(&run.certificate, &tol(&lem)));
    assert!(run.ngon.max_deviation(&lem) < 1e-20);
}

#[test]
fn seventeen_gon_from_scratch() {
    let (mut scene, lem) = setup(30);
    let run = recipe_seventeen_all(&mut scene, &lem).unwrap();
    assert!(run.certificate.passes(&tol(&lem)), "{}", describe(&run.certificate, &tol(&lem)));
    assert!(run.ngon.max_deviation(&lem) < 1e-20);
    let audit = scene.audit();
    assert!(audit.passed, "{:?}", audit.violations);
    assert_eq!(audit.input_points, 0);
}

#[test]
fn planner_refuses_the_nonagon() {
    let (mut scene, lem) = setup(30);
    assert!(matches!(construct_ngon(&mut scene, &lem, 9), Err(Error::NotConstructible(9))));
}

#[test]
fn planner_builds_the_fifteen_gon() {
    let (mut scene, lem) = setup(30);
    let run = construct_ngon(&mut scene, &lem, 15).unwrap();
    assert_eq!(run.warnings.len(), 2);
    assert!(run.certificate.passes(&tol(&lem)), "{}", describe(&run.certificate, &tol(&lem)));
}

#[test]
fn seventeen_u_intermediate_points() {
    let (mut scene, lem) = setup(30);
    let run = recipe_seventeen_u(&mut scene, &lem).unwrap();
    let s = scene.point(run.outputs["S"]);
    let expected = Float::with_val(200, 17u32).sqrt().sqrt() / 4u32;
    assert!(s.x.clone().abs() < 1e-25);
    assert!((s.y.clone() - expected).abs() < 1e-25);
    let (d, e) = (scene.point(run.outputs["D"]), scene.point(run.outputs["E"]));
    let cross = Float::with_val(200, &d.x * &e.y) - Float::with_val(200, &d.y * &e.x);
    assert!(cross.abs() < 1e-25);
    assert!((e.x.clone() - Float::with_val(200, &d.x * 8u32)).abs() < 1e-25);
}

#[test]
fn halving_the_tip() {
    let (mut scene, lem) = setup(30);
    let i = scene.frame().unwrap().i;
    let run = recipe_halve(&mut scene, &lem, CurvePoint::new(i, Petal::Right)).unwrap();
    let r = lemniscate_point(&scene, run.curve_point("r").unwrap()).r;
    let expected = (Float::with_val(200, 2u32).sqrt() - 1u32).sqrt();
    assert!((r - expected).abs() < 1e-25);
    let doubled = recipe_double(&mut scene, &lem, run.curve_point("r").unwrap()).unwrap();
    assert!(scene.coincide(doubled.outputs["u"], i));
}

#[test]
fn recipe_examples_on_seventeen_gon_vertices() {
    let (mut scene, lem) = setup(30);
    let v = numeric_ngon(17, &lem).unwrap();
    let pts: Vec<_> = v.vertices.iter().take(4).map(|p| import_point(&mut scene, p)).collect();
    let t = tol(&lem);
    let close = |scene: &Scene, p: CurvePoint, k: usize| {
        let target = v.vertices[k].xy();
        let pt = scene.point(p.id);
        (pt.x.clone() - &target.0).abs() < t && (pt.y.clone() - &target.1).abs() < t
    };
    let doubled = recipe_double(&mut scene, &lem, pts[1]).unwrap();
    assert!(close(&scene, doubled.curve_point("u").unwrap(), 2));
    let halved = recipe_halve(&mut scene, &lem, pts[2]).unwrap();
    assert!(close(&scene, halved.curve_point("r").unwrap(), 1));
    let sum = recipe_add_sub(&mut scene, &lem, pts[1], pts[2]).unwrap();
    assert!(close(&scene, sum.curve_point("t").unwrap(), 3));
    let same = recipe_add_sub(&mut scene, &lem, pts[2], pts[2]).unwrap();
    assert!(scene.is_origin(same.outputs["v"]));
    let mid = recipe_bisect_between(&mut scene, &lem, pts[0], pts[2]).unwrap();
    assert!(close(&scene, mid.curve_point("u").unwrap(), 1));
    let moved = recipe_transfer(&mut scene, &lem, pts[1], pts[3], pts[1]).unwrap();
    assert!(close(&scene, moved.curve_point("w").unwrap(), 3));
}

#[test]
fn nm_gon_needs_coprime_orders() {
    let (mut scene, lem) = setup(30);
    let a = numeric_ngon(4, &lem).unwrap();
    let b = numeric_ngon(6, &lem).unwrap();
    assert!(matches!(recipe_nm_gon(&mut scene, &lem, &a, &b), Err(Error::NotCoprime { .. })));
}
