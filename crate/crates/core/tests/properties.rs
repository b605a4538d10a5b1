use proptest::prelude::*;
use rug::Float;

use lemniscate::arc_algebra::{add_arcs, bezout_plan, double_arc, halve_arc, sub_arcs, sum_quadratic};
use lemniscate::division_radicals::{abel_quartic, abel_radical_root};
use lemniscate::kernel::{Ratio, Scene};
use lemniscate::numerics::{omega, Lemniscate, Radius};
use lemniscate::recipes::{import_point, recipe_add_sub, recipe_halve};
use lemniscate::PrecisionContext;

fn ctx() -> PrecisionContext {
    PrecisionContext::new(30).unwrap()
}

fn lem() -> &'static Lemniscate {
    use std::sync::OnceLock;
    static LEM: OnceLock<Lemniscate> = OnceLock::new();
    LEM.get_or_init(|| Lemniscate::new(&ctx()))
}

fn rad(x: f64) -> Radius {
    Radius::new(ctx().real(x), &ctx()).unwrap()
}

fn diff(a: &Float, b: &Float) -> Float {
    Float::with_val(a.prec().max(b.prec()), a - b).abs()
}

fn eps() -> Float {
    ctx().eps().clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sine_inverts_arc_length(t in 0.0f64..=1.0) {
        let lem = lem();
        let s = Float::with_val(lem.ctx().bits(), lem.half_omega() * t);
        let r = lem.lemniscate_sine(&lem.arc_param(&s));
        let back = lem.arc_length(&Radius::new(r, lem.ctx()).unwrap());
        prop_assert!(diff(&back, &s) <= eps());
    }

    #[test]
    fn sine_is_symmetric_about_the_tip(t in 0.0f64..=1.0) {
        let lem = lem();
        let s = Float::with_val(lem.ctx().bits(), lem.half_omega() * t);
        let mirror = Float::with_val(lem.ctx().bits(), lem.omega() - &s);
        let a = lem.lemniscate_sine(&lem.arc_param(&s));
        let b = lem.lemniscate_sine(&lem.arc_param(&mirror));
        prop_assert!(diff(&a, &b) <= eps());
    }

    #[test]
    fn point_at_carries_the_sine(t in 0.0f64..1.0) {
        let lem = lem();
        let s = Float::with_val(lem.ctx().bits(), lem.omega() * 2u32) * t;
        let s = lem.arc_param(&s);
        let p = lem.point_at(&s);
        prop_assert!(p.curve_residual() <= eps());
        prop_assert!(diff(&p.r, &lem.lemniscate_sine(&s).abs()) <= eps());
        prop_assert!(lem.arc_distance(&lem.arc_param_of(&p).into_inner(), s.value()).abs() <= eps());
    }

    #[test]
    fn addition_is_a_homomorphism(r in 0.0f64..=1.0, u in 0.0f64..=1.0) {
        let (c, lem) = (ctx(), lem());
        let (r, u) = (rad(r), rad(u));
        let sum = Float::with_val(c.bits(), lem.arc_length(&r) + lem.arc_length(&u));
        prop_assume!(sum <= lem.half_omega());
        let t = add_arcs(&r, &u, &c).unwrap();
        prop_assert!(!t.past_tip);
        prop_assert!(diff(&lem.arc_length(&t.radius), &sum) <= eps());
        let back = sub_arcs(&t.radius, &u, &c).unwrap();
        prop_assert!(diff(back.value(), r.value()) <= eps());
    }

    #[test]
    fn halving_factors_expand_to_the_quartic(s in 0.01f64..0.99) {
        // T^4 + (4/u^2) T^3 + 2 T^2 - (4/u^2) T + 1 from the two quadratic factors
        let (c, lem) = (ctx(), lem());
        let bits = c.bits();
        let s = Float::with_val(bits, lem.omega() * s);
        let p = lem.point_at(&lem.arc_param(&s));
        let two_phi = Float::with_val(bits, &p.theta * 2u32);
        let (sec, tan) = (two_phi.clone().cos().recip(), two_phi.tan());
        let k1 = Float::with_val(bits, &sec + &tan);
        let k2 = Float::with_val(bits, &sec - &tan);
        let cubic = Float::with_val(bits, Float::with_val(bits, &k1 + &k2) * 2u32);
        let square = Float::with_val(bits, Float::with_val(bits, &k1 * &k2) * 4u32) - 2u32;
        let four_over = Float::with_val(bits, Float::with_val(bits, p.r.clone().square()).recip() * 4u32);
        prop_assert!(diff(&cubic, &four_over) <= eps());
        prop_assert!(diff(&square, &c.real(2)) <= eps());
        let roots = halve_arc(&Radius::new(p.r.clone(), &c).unwrap(), &p.theta, &c).unwrap();
        for (root, k) in [(&roots.first, &k1), (&roots.complement, &k2)] {
            let t = Float::with_val(bits, root.value().clone().square());
            let value = Float::with_val(bits, &t * &t) + Float::with_val(bits, k * &t) * 2u32 - 1u32;
            prop_assert!(value.abs() <= eps());
        }
    }

    #[test]
    fn halving_and_doubling_round_trip(r in 0.05f64..=0.95) {
        let (c, lem) = (ctx(), lem());
        let r = rad(r);
        let s = lem.arc_length(&r);
        let u = double_arc(&r, &c).unwrap();
        let twice = Float::with_val(c.bits(), &s * 2u32);
        let theta = lem.point_at(&lem.arc_param(&twice)).theta;
        let h = halve_arc(&u, &theta, &c).unwrap();
        prop_assert!(diff(h.first.value(), r.value()) <= eps());
        let theta_r = lem.point_at(&lem.arc_param(&s)).theta;
        let h = halve_arc(&r, &theta_r, &c).unwrap();
        prop_assert!(diff(double_arc(&h.first, &c).unwrap().value(), r.value()) <= eps());
    }

    #[test]
    fn quadratic_roots_are_sum_and_difference(r in 0.01f64..0.99, u in 0.01f64..0.99) {
        let c = ctx();
        let (r, u) = (rad(r), rad(u));
        let q = sum_quadratic(&r, &u, &c).unwrap();
        prop_assert!(q.discriminant() >= -eps());
        let (hi, lo) = q.roots(&c).unwrap();
        let t = add_arcs(&r, &u, &c).unwrap().radius.into_inner();
        let v = if r.value() >= u.value() {
            sub_arcs(&r, &u, &c).unwrap().into_inner()
        } else {
            -sub_arcs(&u, &r, &c).unwrap().into_inner()
        };
        let (want_hi, want_lo) = if t >= v { (t, v) } else { (v, t) };
        prop_assert!(diff(&hi, &want_hi) <= eps());
        prop_assert!(diff(&lo, &want_lo) <= eps());
    }

    #[test]
    fn bezout_plans_satisfy_the_identity(n in 2u64..200, m in 2u64..200) {
        let g = gcd(n, m);
        match bezout_plan(n, m) {
            Ok(p) => {
                prop_assert_eq!(g, 1);
                prop_assert_eq!(p.a as i128 * m as i128 + p.b as i128 * n as i128, 1);
                prop_assert!(p.a.unsigned_abs() <= n);
            }
            Err(_) => prop_assert!(g != 1),
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn small_ratio() -> impl Strategy<Value = Ratio> {
    (-40i64..=40, 1i64..=8).prop_map(|(n, d)| Ratio::new(n, d).unwrap())
}

fn positive_ratio() -> impl Strategy<Value = Ratio> {
    (1i64..=40, 1i64..=8).prop_map(|(n, d)| Ratio::new(n, d).unwrap())
}

fn f(r: Ratio) -> Float {
    r.to_float(ctx().bits())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn thales_gadgets_multiply_and_divide(p in positive_ratio(), q in positive_ratio()) {
        let mut s = Scene::new(&ctx());
        let a = s.given(p, Ratio::int(0));
        let b = s.given(q, Ratio::int(0));
        let prod = s.thales_product(a, b).unwrap();
        prop_assert!(diff(&s.point(prod).x, &(f(p) * f(q))) <= eps());
        let ratio = s.thales_ratio(a, b).unwrap();
        prop_assert!(diff(&s.point(ratio).x, &(f(p) / f(q))) <= eps());
    }

    #[test]
    fn square_roots_and_means(p in positive_ratio(), q in positive_ratio()) {
        let mut s = Scene::new(&ctx());
        let o = s.frame().unwrap().o;
        let a = s.given(p, Ratio::int(0));
        let b = s.given(q, Ratio::int(0));
        let root = s.sqrt_len(a).unwrap();
        prop_assert!(diff(&s.point(root).x, &f(p).sqrt()) <= eps());
        let mean = s.geometric_mean(a, b).unwrap();
        let want = (f(p) * f(q)).sqrt();
        prop_assert!(diff(&s.distance(mean, o), &want) <= eps());
    }

    #[test]
    fn rat_roots_are_negated_roots(b in small_ratio(), c in small_ratio()) {
        let (bf, cf) = (f(b), f(c));
        let disc = Float::with_val(ctx().bits(), bf.clone().square() - Float::with_val(ctx().bits(), &cf * 4u32));
        prop_assume!(disc > 1e-6);
        let mut s = Scene::new(&ctx());
        let one = s.frame().unwrap().i;
        let pb = s.given(b, Ratio::int(0));
        let pc = s.given(c, Ratio::int(0));
        let r = s.rat_roots(one, pb, pc).unwrap();
        let sq = disc.sqrt();
        // roots (-b -+ sq)/2, points at their negatives
        let low = Float::with_val(ctx().bits(), &bf - &sq) / 2u32;
        let high = Float::with_val(ctx().bits(), &bf + &sq) / 2u32;
        let scale = Float::with_val(ctx().bits(), bf.clone().abs() + cf.clone().abs() + 1u32);
        let tol = Float::with_val(ctx().bits(), eps() * &scale);
        prop_assert!(diff(&s.point(r.low).x, &low) <= tol);
        prop_assert!(diff(&s.point(r.high).x, &high) <= tol);
    }

    #[test]
    fn reflections_and_midpoints(x in small_ratio(), y in small_ratio(), u in small_ratio(), v in small_ratio()) {
        let mut s = Scene::new(&ctx());
        let fr = s.frame().unwrap();
        let p = s.given(x, y);
        let q = s.given(u, v);
        prop_assume!(!s.coincide(p, q));
        let m = s.midpoint(p, q).unwrap();
        prop_assert!(diff(&s.point(m).x, &((f(x) + f(u)) / 2u32)) <= eps());
        prop_assert!(diff(&s.point(m).y, &((f(y) + f(v)) / 2u32)) <= eps());
        let l = s.line_through(p, q).unwrap();
        let o = fr.o;
        let refl = s.reflect_across(l, o).unwrap();
        // the reflection of O is twice its foot on the line
        let foot = s.foot(l, o).unwrap();
        prop_assert!(diff(&s.point(refl).x, &Float::with_val(ctx().bits(), &s.point(foot).x * 2u32)) <= eps() * 10u32);
        prop_assert!(diff(&s.point(refl).y, &Float::with_val(ctx().bits(), &s.point(foot).y * 2u32)) <= eps() * 10u32);
    }

    #[test]
    fn intersection_order_ignores_operand_order(
        x in small_ratio(), y in small_ratio(), u in small_ratio(), v in small_ratio(),
    ) {
        let mut s = Scene::new(&ctx());
        let fr = s.frame().unwrap();
        let p = s.given(x, y);
        let q = s.given(u, v);
        prop_assume!(!s.coincide(p, q));
        let l = s.line_through(p, q).unwrap();
        let c = s.circle_about(p, fr.i);
        prop_assume!(c.is_ok());
        let c = c.unwrap();
        let ab = s.intersect(l, c).unwrap();
        let ba = s.intersect(c, l).unwrap();
        prop_assert_eq!(ab.len(), ba.len());
        for (a, b) in ab.iter().zip(&ba) {
            prop_assert!(s.point(*a).x == s.point(*b).x && s.point(*a).y == s.point(*b).y);
        }
        for w in ab.windows(2) {
            prop_assert!(s.point(w[0]).x <= s.point(w[1]).x);
        }
        let again = s.replay().unwrap();
        prop_assert!(again.same_coordinates(&s));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn constructions_match_the_oracle(a in 0.01f64..0.99, b in 0.01f64..0.99) {
        let lem = lem();
        let mut scene = Scene::new(lem.ctx());
        let two = Float::with_val(lem.ctx().bits(), lem.omega() * 2u32);
        let pa = import_point(&mut scene, &lem.point_at(&lem.arc_param(&(two.clone() * a))));
        let pb = import_point(&mut scene, &lem.point_at(&lem.arc_param(&(two * b))));
        let run = recipe_add_sub(&mut scene, lem, pa, pb).unwrap();
        prop_assert!(run.certificate.passes(&eps()));
        if scene.point(pb.id).x.is_sign_positive() {
            let run = recipe_halve(&mut scene, lem, pb).unwrap();
            prop_assert!(run.certificate.passes(&eps()));
        }
        prop_assert!(scene.audit().passed);
    }
}

#[test]
fn arc_length_is_strictly_increasing() {
    let lem = Lemniscate::new(&PrecisionContext::new(15).unwrap());
    let mut prev = Float::with_val(lem.ctx().bits(), -1);
    for k in 0..=1000 {
        let r = Radius::new(lem.ctx().real(k as f64 / 1000.0), lem.ctx()).unwrap();
        let s = lem.arc_length(&r);
        assert!(s > prev, "not increasing at {k}");
        prev = s;
    }
}

#[test]
fn omega_refines_with_precision() {
    for digits in [15, 30, 40] {
        let low = PrecisionContext::new(digits).unwrap();
        let high = PrecisionContext::new(2 * digits).unwrap();
        assert!(diff(&omega(&low), &omega(&high)) < *low.eps());
    }
}

#[test]
fn radical_root_satisfies_the_quartic_at_every_precision() {
    for digits in [20, 40, 80] {
        let c = PrecisionContext::new(digits).unwrap();
        let u = abel_radical_root(&c).unwrap();
        assert!(abel_quartic().eval(&u.value).abs() < *c.eps(), "{digits} digits");
    }
}
