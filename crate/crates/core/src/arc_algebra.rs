//! Closed-form arc arithmetic on radii of the upper-right quarter.
//!
//! For radii `r = phi(a)` and `u = phi(b)`:
//!
//! ```text
//! phi(a + b) = (r sqrt(1 - u^4) + u sqrt(1 - r^4)) / (1 + r^2 u^2)
//! phi(a - b) = (r sqrt(1 - u^4) - u sqrt(1 - r^4)) / (1 + r^2 u^2)
//! phi(2a)    = 2 r sqrt(1 - r^4) / (1 + r^4)
//! ```
//!
//! The sum and difference are the two roots of `X^2 + B X + C` with
//!
//! ```text
//! tan(alpha) = r^2,  tan(beta) = u^2
//! C   = tan(alpha - beta)
//! B^2 = 2 sin(2 alpha) cos(2 beta) sec^2(alpha - beta),   B <= 0
//! ```

use rug::Float;

use crate::error::{Error, Result};
use crate::numerics::Radius;
use crate::precision::PrecisionContext;

/// Fermat primes known to exist.
pub const FERMAT_PRIMES: [u64; 5] = [3, 5, 17, 257, 65537];

/// Result of adding two quarter-loop arcs.
#[derive(Clone, Debug, PartialEq)]
pub struct ArcSum {
    /// `phi(a + b)`, always in `[0, 1]`.
    pub radius: Radius,
    /// The sum went past the tip of the loop (`a + b > omega / 2`), so the
    /// sum point lies in the lower half.
    pub past_tip: bool,
}

fn sqrt_one_minus_fourth(x: &Float, bits: u32) -> Float {
    let x4 = Float::with_val(bits, x.clone().square().square());
    Float::with_val(bits, 1 - x4).max(&Float::new(bits)).sqrt()
}

fn fagnano(r: &Radius, u: &Radius, sign: i32, ctx: &PrecisionContext) -> Float {
    let bits = ctx.bits();
    let (r, u) = (r.value(), u.value());
    let left = Float::with_val(bits, r * sqrt_one_minus_fourth(u, bits));
    let right = Float::with_val(bits, u * sqrt_one_minus_fourth(r, bits));
    let num = if sign >= 0 { left + right } else { left - right };
    let ru = Float::with_val(bits, r * u);
    let den = Float::with_val(bits, ru.square() + 1u32);
    num / den
}

/// Sign test for `a + b > omega / 2` using only the radii: the sum passes the
/// tip exactly when
///
/// ```text
/// (1 - r^2)(1 - u^2) < r^2 u^2 (1 + r^2)(1 + u^2)
/// ```
pub fn sum_passes_tip(r: &Float, u: &Float, bits: u32) -> bool {
    let r2 = Float::with_val(bits, r.clone().square());
    let u2 = Float::with_val(bits, u.clone().square());
    let lhs = Float::with_val(bits, 1 - &r2) * Float::with_val(bits, 1 - &u2);
    let rhs = Float::with_val(bits, &r2 * &u2)
        * Float::with_val(bits, 1 + &r2)
        * Float::with_val(bits, 1 + &u2);
    lhs < rhs
}

// A formula result outside [0, 1] is a range error, not bad input.
fn output_radius(v: Float, ctx: &PrecisionContext) -> Result<Radius> {
    Radius::new(v, ctx).map_err(|e| match e {
        Error::Domain(msg) => Error::Range(msg),
        other => other,
    })
}

/// `phi(a + b)` from `r = phi(a)`, `u = phi(b)`.
pub fn add_arcs(r: &Radius, u: &Radius, ctx: &PrecisionContext) -> Result<ArcSum> {
    let t = fagnano(r, u, 1, ctx);
    Ok(ArcSum {
        radius: output_radius(t, ctx)?,
        past_tip: sum_passes_tip(r.value(), u.value(), ctx.bits()),
    })
}

/// `phi(a - b)` from `r = phi(a)`, `u = phi(b)`; requires `b <= a`, i.e. `u <= r`.
pub fn sub_arcs(r: &Radius, u: &Radius, ctx: &PrecisionContext) -> Result<Radius> {
    if Float::with_val(ctx.bits(), u.value() - r.value()) > *ctx.eps() {
        return Err(Error::Domain(format!(
            "cannot subtract a longer arc (u = {} > r = {})",
            crate::precision::fmt_digits(u.value(), 12),
            crate::precision::fmt_digits(r.value(), 12)
        )));
    }
    output_radius(fagnano(r, u, -1, ctx), ctx)
}

/// `phi(2a)` from `r = phi(a)`.
pub fn double_arc(r: &Radius, ctx: &PrecisionContext) -> Result<Radius> {
    let bits = ctx.bits();
    let r = r.value();
    let num = Float::with_val(bits, r * sqrt_one_minus_fourth(r, bits)) * 2u32;
    let den = Float::with_val(bits, r.clone().square().square() + 1u32);
    output_radius(num / den, ctx)
}

/// The two radii produced by halving.
#[derive(Clone, Debug, PartialEq)]
pub struct HalvingRoots {
    /// `phi(s / 2)` where `s` is the arc of `u` within its loop.
    pub first: Radius,
    /// `phi(omega / 2 - s / 2)`, the complementary half.
    pub complement: Radius,
}

/// Halves the arc ending at the right-loop point `(u, theta_u)`.
///
/// With `T = r^2` the halving quartic factors as
///
/// ```text
/// (T^2 + 2 (sec 2phi + tan 2phi) T - 1)(T^2 + 2 (sec 2phi - tan 2phi) T - 1)
/// ```
///
/// and the positive root of each factor is taken.
pub fn halve_arc(u: &Radius, theta_u: &Float, ctx: &PrecisionContext) -> Result<HalvingRoots> {
    let bits = ctx.bits();
    let two_phi = Float::with_val(bits, theta_u * 2u32);
    let (sin2, cos2) = two_phi.sin_cos(Float::new(bits));
    let residual = Float::with_val(bits, u.value().clone().square() - &cos2).abs();
    if residual > *ctx.eps() {
        return Err(Error::Domain(format!(
            "({}, {}) is not on the right loop",
            crate::precision::fmt_digits(u.value(), 12),
            crate::precision::fmt_digits(theta_u, 12)
        )));
    }
    if cos2 <= *ctx.eps() {
        return Err(Error::Singularity("cannot halve at the origin (sec 2phi is unbounded)".into()));
    }
    let sec = Float::with_val(bits, cos2.recip_ref());
    let tan = Float::with_val(bits, &sin2 * &sec);
    let root = |k: Float| -> Result<Radius> {
        let disc = Float::with_val(bits, k.clone().square() + 1u32).sqrt();
        let t = Float::with_val(bits, disc - k);
        output_radius(t.max(&Float::new(bits)).sqrt(), ctx)
    };
    Ok(HalvingRoots {
        first: root(Float::with_val(bits, &sec + &tan))?,
        complement: root(Float::with_val(bits, &sec - &tan))?,
    })
}

/// Coefficients of `X^2 + B X + C`, whose roots are `phi(a + b)` and `phi(a - b)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SumQuadratic {
    pub b: Float,
    pub c: Float,
}

impl SumQuadratic {
    pub fn discriminant(&self) -> Float {
        let p = self.b.prec();
        Float::with_val(p, self.b.clone().square() - Float::with_val(p, &self.c * 4u32))
    }

    /// `(larger, smaller)` root; a slightly negative discriminant counts as a double root.
    pub fn roots(&self, ctx: &PrecisionContext) -> Result<(Float, Float)> {
        let bits = ctx.bits();
        let d = self.discriminant();
        if d.is_sign_negative() && d.clone().abs() > *ctx.eps() {
            return Err(Error::NoRealRoots);
        }
        let sq = d.max(&Float::new(bits)).sqrt();
        let minus_b = Float::with_val(bits, -&self.b);
        let hi = Float::with_val(bits, &minus_b + &sq) / 2u32;
        let lo = Float::with_val(bits, &minus_b - &sq) / 2u32;
        Ok((hi, lo))
    }
}

/// The sum/difference quadratic built from the angles `alpha = atan r^2`, `beta = atan u^2`.
pub fn sum_quadratic(r: &Radius, u: &Radius, ctx: &PrecisionContext) -> Result<SumQuadratic> {
    let bits = ctx.bits();
    let alpha = Float::with_val(bits, r.value().clone().square()).atan();
    let beta = Float::with_val(bits, u.value().clone().square()).atan();
    let diff = Float::with_val(bits, &alpha - &beta);
    let cos_diff = diff.clone().cos();
    if cos_diff.clone().abs() <= *ctx.eps() {
        return Err(Error::Singularity("alpha - beta = +-pi/2".into()));
    }
    let c = diff.tan();
    let sin2a = Float::with_val(bits, &alpha * 2u32).sin();
    let cos2b = Float::with_val(bits, &beta * 2u32).cos();
    let prod = Float::with_val(bits, sin2a * cos2b) * 2u32;
    let b = -(prod.max(&Float::new(bits)).sqrt() / cos_diff);
    Ok(SumQuadratic { b, c })
}

/// Gauss-Wantzel criterion: `n = 2^k p_1 ... p_j` with distinct Fermat primes.
pub fn constructible(n: u64) -> bool {
    if n == 0 {
        return false;
    }
    let mut rest = n >> n.trailing_zeros();
    for p in FERMAT_PRIMES {
        if rest % p == 0 {
            rest /= p;
            if rest % p == 0 {
                return false;
            }
        }
    }
    rest == 1
}

/// Factors `n` into its power of two and its odd Fermat-prime factors
/// (ascending). `None` when `n` is not constructible.
pub fn constructible_factors(n: u64) -> Option<(u32, Vec<u64>)> {
    if !constructible(n) {
        return None;
    }
    let twos = n.trailing_zeros();
    let rest = n >> twos;
    let primes = FERMAT_PRIMES.iter().copied().filter(|p| rest % p == 0).collect();
    Some((twos, primes))
}

/// Coefficients with `a M + b N = 1`, used to merge an N-gon and an M-gon.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct BezoutPlan {
    pub n: u64,
    pub m: u64,
    pub a: i64,
    pub b: i64,
}

/// Solves `a M + b N = 1` with `|a|` minimal, preferring `a > 0` on ties.
pub fn bezout_plan(n: u64, m: u64) -> Result<BezoutPlan> {
    if n == 0 || m == 0 {
        return Err(Error::Domain("polygon orders must be positive".into()));
    }
    let (g, x, _) = extended_gcd(m as i128, n as i128);
    if g != 1 {
        return Err(Error::NotCoprime { n, m, gcd: g as u64 });
    }
    let modulus = n as i128;
    let mut a = x.rem_euclid(modulus);
    if 2 * a > modulus {
        a -= modulus;
    }
    let b = (1 - a * m as i128) / modulus;
    Ok(BezoutPlan { n, m, a: a as i64, b: b as i64 })
}

// (g, x, y) with x a + y b = g.
fn extended_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1) = (a, b);
    let (mut x0, mut x1) = (1i128, 0i128);
    let (mut y0, mut y1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (x0, x1) = (x1, x0 - q * x1);
        (y0, y1) = (y1, y0 - q * y1);
    }
    (r0, x0, y0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::Lemniscate;

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(30).unwrap()
    }

    fn rad(v: f64, ctx: &PrecisionContext) -> Radius {
        Radius::from_f64(v, ctx).unwrap()
    }

    #[test]
    fn zero_is_neutral() {
        let c = ctx();
        let r = rad(0.37, &c);
        let s = add_arcs(&r, &rad(0.0, &c), &c).unwrap();
        assert!(c.close(s.radius.value(), r.value()));
        assert!(!s.past_tip);
        assert!(sub_arcs(&r, &r, &c).unwrap().value().clone().abs() < *c.eps());
    }

    #[test]
    fn doubling_examples() {
        let c = ctx();
        assert!(double_arc(&rad(1.0, &c), &c).unwrap().value().is_zero());
        let half = double_arc(&rad(0.5, &c), &c).unwrap();
        let expected = (15.0f64).sqrt() / 4.25;
        assert!((half.value().to_f64() - expected).abs() < 1e-15);
    }

    #[test]
    fn sum_against_arc_length() {
        let c = ctx();
        let lem = Lemniscate::new(&c);
        let (r, u) = (rad(0.6, &c), rad(0.9, &c));
        let sum = add_arcs(&r, &u, &c).unwrap();
        assert!(sum.past_tip);
        let s = Float::with_val(c.bits(), lem.arc_length(&r) + lem.arc_length(&u));
        let expected = lem.lemniscate_sine(&lem.arc_param(&s));
        assert!(c.close(sum.radius.value(), &expected));
    }

    #[test]
    fn subtraction_requires_order() {
        let c = ctx();
        assert!(matches!(sub_arcs(&rad(0.2, &c), &rad(0.5, &c), &c), Err(Error::Domain(_))));
    }

    #[test]
    fn quadratic_roots_are_sum_and_difference() {
        let c = ctx();
        let (r, u) = (rad(0.6, &c), rad(0.3, &c));
        let q = sum_quadratic(&r, &u, &c).unwrap();
        let (hi, lo) = q.roots(&c).unwrap();
        assert!(c.close(&hi, add_arcs(&r, &u, &c).unwrap().radius.value()));
        assert!(c.close(&lo, sub_arcs(&r, &u, &c).unwrap().value()));
        // u = 0 collapses to a double root at r
        let q = sum_quadratic(&r, &rad(0.0, &c), &c).unwrap();
        assert!(c.close(&q.b, &c.real(-1.2)));
        assert!(c.close(&q.c, &c.real(0.36)));
    }

    #[test]
    fn halving_inverts_doubling() {
        let c = ctx();
        let u = rad(0.7, &c);
        let theta = Float::with_val(c.bits(), u.value().clone().square()).acos() / 2u32;
        let h = halve_arc(&u, &theta, &c).unwrap();
        assert!(c.close(double_arc(&h.first, &c).unwrap().value(), u.value()));
        assert!(c.close(double_arc(&h.complement, &c).unwrap().value(), u.value()));
        assert!(h.first.value() < h.complement.value());
        assert!(matches!(
            halve_arc(&rad(0.0, &c), &(c.pi() / 4u32), &c),
            Err(Error::Singularity(_))
        ));
        assert!(matches!(halve_arc(&u, &c.zero(), &c), Err(Error::Domain(_))));
    }

    #[test]
    fn gauss_wantzel() {
        let yes = [1u64, 2, 3, 4, 5, 6, 8, 10, 12, 15, 16, 17, 20, 34, 51, 85, 255, 257, 65537];
        let no = [7u64, 9, 11, 13, 14, 18, 19, 21, 25, 27, 45, 63, 99, 1000];
        for n in yes {
            assert!(constructible(n), "{n}");
        }
        for n in no {
            assert!(!constructible(n), "{n}");
        }
        assert_eq!(constructible_factors(340), Some((2, vec![5, 17])));
    }

    #[test]
    fn bezout_minimal_coefficient() {
        let p = bezout_plan(3, 5).unwrap();
        assert_eq!((p.a, p.b), (-1, 2));
        let p = bezout_plan(2, 3).unwrap();
        assert_eq!((p.a, p.b), (1, -1));
        let p = bezout_plan(2, 17).unwrap();
        assert_eq!((p.a, p.b), (1, -8));
        assert_eq!(bezout_plan(4, 6), Err(Error::NotCoprime { n: 4, m: 6, gcd: 2 }));
    }
}
