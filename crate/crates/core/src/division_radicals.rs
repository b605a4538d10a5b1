//! Radical expressions for the division of the lemniscate into 17 equal arcs.
//!
//! The squared radius `U = phi(2 omega / 17)^2`, taken over the Gaussian
//! integers, is a root of the quartic
//!
//! ```text
//! P(z) = z^4 + (12 - 20i) z^3 - (10 - 28i) z^2 - (20 + 12i) z + 1 + 4i
//! ```
//!
//! solved by
//!
//! ```text
//! U = (-3 + 5i) - 3i rho^2 + (4 + i) rho + (-2 + i) rho^3,   rho^4 = 1 + 4i
//! ```
//!
//! and the real radius follows from `m = |U|`, `delta = arg U`:
//!
//! ```text
//! W  = -sqrt(m) e^(i delta / 2)
//! r1 = 2 Re sqrt(W - m conj(W)) / (1 + m)
//! ```

use rug::Float;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::precision::PrecisionContext;

/// `re + i im` with integer parts.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct GaussianInt {
    pub re: i64,
    pub im: i64,
}

impl GaussianInt {
    pub const fn new(re: i64, im: i64) -> Self {
        GaussianInt { re, im }
    }

    pub fn to_complex(self, prec: u32) -> Complex {
        Complex::from_i64(prec, self.re, self.im)
    }
}

/// A quartic with Gaussian-integer coefficients, stored lowest degree first.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct AbelQuartic {
    pub coeffs: [GaussianInt; 5],
}

impl AbelQuartic {
    /// `z^4 P(1/z)`: the same coefficients in reverse order.
    pub fn reversed(&self) -> AbelQuartic {
        let mut c = self.coeffs;
        c.reverse();
        AbelQuartic { coeffs: c }
    }

    pub fn eval(&self, z: &Complex) -> Complex {
        let p = z.prec();
        let mut acc = Complex::zero(p);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * z) + &c.to_complex(p);
        }
        acc
    }

    fn eval_derivative(&self, z: &Complex) -> Complex {
        let p = z.prec();
        let mut acc = Complex::zero(p);
        for (k, c) in self.coeffs.iter().enumerate().skip(1).rev() {
            let kc = GaussianInt::new(c.re * k as i64, c.im * k as i64);
            acc = &(&acc * z) + &kc.to_complex(p);
        }
        acc
    }
}

/// The quartic whose roots are the four Gaussian conjugates of `U`.
pub fn abel_quartic() -> AbelQuartic {
    AbelQuartic {
        coeffs: [
            GaussianInt::new(1, 4),
            GaussianInt::new(-20, -12),
            GaussianInt::new(-10, 28),
            GaussianInt::new(12, -20),
            GaussianInt::new(1, 0),
        ],
    }
}

/// One evaluation of the radical formula.
#[derive(Clone, Debug, PartialEq)]
pub struct RadicalValue {
    pub value: Complex,
    /// `rho = rho_0 i^branch`, where `rho_0` is the principal fourth root of `1 + 4i`.
    pub branch: u32,
    pub rho: Complex,
}

/// Evaluates the radical formula on the fourth root `rho_0 i^k`.
pub fn radical_candidate(k: u32, ctx: &PrecisionContext) -> RadicalValue {
    let p = ctx.bits();
    let rho0 = Complex::from_i64(p, 1, 4).principal_fourth_root();
    let rho = rho0.mul_i_pow(k);
    let rho2 = &rho * &rho;
    let rho3 = &rho2 * &rho;
    let terms = [
        Complex::from_i64(p, -3, 5),
        &Complex::from_i64(p, 0, -3) * &rho2,
        &Complex::from_i64(p, 4, 1) * &rho,
        &Complex::from_i64(p, -2, 1) * &rho3,
    ];
    let value = terms.iter().skip(1).fold(terms[0].clone(), |acc, t| &acc + t);
    RadicalValue { value, branch: k % 4, rho }
}

/// `(m, W)` with `m = |U|` and `W = -sqrt(m) e^(i arg(U) / 2)`.
pub fn w_from_u(u: &Complex) -> (Float, Complex) {
    let m = u.abs();
    let half_arg = u.arg() / 2u32;
    let w = -&Complex::from_polar(&m.clone().sqrt(), &half_arg);
    (m, w)
}

/// `2 Re sqrt(W - m conj(W)) / (1 + m)`
pub fn radius_from_u(u: &Complex) -> Float {
    let p = u.prec();
    let (m, w) = w_from_u(u);
    let x = &w - &w.conj().scale(&m);
    let re = Float::with_val(p, &x.sqrt().re * 2u32);
    re / Float::with_val(p, &m + 1u32)
}

/// One branch of the radical with its checks.
#[derive(Clone, Debug)]
pub struct BranchCandidate {
    pub radical: RadicalValue,
    /// `|P(U_k)|`
    pub residual: Float,
    /// Radius produced by the `W`/`m` formula for this branch.
    pub radius: Float,
}

/// All four branches and the one selected.
#[derive(Clone, Debug)]
pub struct BranchSweep {
    pub candidates: Vec<BranchCandidate>,
    pub selected: usize,
    /// How many branches pass the weaker test "P(U) = 0 and 0 < r1 < 1".
    pub weak_filter_passes: usize,
}

/// Evaluates every branch and selects the one describing the first vertex.
///
/// Every branch satisfies the quartic and yields a real radius in `(0, 1)`;
/// the four radii are those of four different vertices. The first vertex has
/// the shortest arc, hence the smallest radius, so the branch is chosen as the
/// unique root with the strictly smallest radius.
pub fn branch_sweep(ctx: &PrecisionContext) -> Result<BranchSweep> {
    let poly = abel_quartic();
    let candidates: Vec<BranchCandidate> = (0..4)
        .map(|k| {
            let radical = radical_candidate(k, ctx);
            let residual = poly.eval(&radical.value).abs();
            let radius = radius_from_u(&radical.value);
            BranchCandidate { radical, residual, radius }
        })
        .collect();
    let admissible: Vec<usize> = candidates
        .iter()
        .enumerate()
        .filter(|(_, c)| c.residual <= *ctx.eps() && c.radius > 0u32 && c.radius < 1u32)
        .map(|(i, _)| i)
        .collect();
    let weak_filter_passes = admissible.len();
    let best = admissible
        .iter()
        .copied()
        .min_by(|&a, &b| candidates[a].radius.partial_cmp(&candidates[b].radius).expect("finite radii"))
        .ok_or_else(|| Error::BranchSelection("no branch satisfies the quartic with a radius in (0, 1)".into()))?;
    let ties = admissible
        .iter()
        .filter(|&&i| ctx.close(&candidates[i].radius, &candidates[best].radius))
        .count();
    if ties != 1 {
        return Err(Error::BranchSelection(format!("{ties} branches share the smallest radius")));
    }
    Ok(BranchSweep { candidates, selected: best, weak_filter_passes })
}

/// The branch of the radical equal to `phi(2 omega / 17)^2`.
pub fn abel_radical_root(ctx: &PrecisionContext) -> Result<RadicalValue> {
    let sweep = branch_sweep(ctx)?;
    Ok(sweep.candidates[sweep.selected].radical.clone())
}

/// `U / 4` rewritten in terms of three Gaussian rationals that can be marked
/// in the plane, `P = -1/2 + i/4`, `Q = 1/4 + i`, `Q* = -1/4 + i`:
///
/// ```text
/// U/4 = P + Q* + (3/2) sqrt|Q| at (phi/2 - pi/2)
///       + 8 (|P| at (theta + 3phi/4) - (1/2) sqrt|Q| at (3pi/2 - 3phi/4)) r^3
/// ```
///
/// where `theta = arg P`, `phi = arg Q`, `r = sqrt((1/2) sqrt|Q|)` and
/// `x at y` is the complex number of modulus `x` and argument `y`.
pub fn rewritten_u(ctx: &PrecisionContext) -> Complex {
    let p = ctx.bits();
    let quarter = |re: i64, im: i64| {
        let c = Complex::from_i64(p, re, im);
        c.scale(&(ctx.one() / 4u32))
    };
    let pp = quarter(-2, 1);
    let q = quarter(1, 4);
    let q_star = quarter(-1, 4);
    let theta = pp.arg();
    let phi = q.arg();
    let root_q = q.abs().sqrt();
    let half_root_q = Float::with_val(p, &root_q / 2u32);
    let r = half_root_q.clone().sqrt();
    let pi = ctx.pi();

    let c_angle = Float::with_val(p, &phi / 2u32) - Float::with_val(p, &pi / 2u32);
    let c_modulus = Float::with_val(p, &root_q * 3u32) / 2u32;
    let c_term = Complex::from_polar(&c_modulus, &c_angle);
    let three_quarter_phi = Float::with_val(p, &phi * 3u32) / 4u32;
    let a = Complex::from_polar(&pp.abs(), &Float::with_val(p, &theta + &three_quarter_phi));
    let b_angle = Float::with_val(p, &pi * 3u32) / 2u32 - &three_quarter_phi;
    let b = Complex::from_polar(&half_root_q, &b_angle);
    let r3 = Float::with_val(p, rug::ops::Pow::pow(&r, 3u32));
    let e = (&a - &b).scale(&Float::with_val(p, &r3 * 8u32));
    let sum = &(&pp + &q_star) + &c_term;
    &sum + &e
}

/// Roots of a quartic by the Weierstrass (Durand-Kerner) iteration, refined
/// by Newton steps. Independent of the radical formula.
pub fn numeric_quartic_roots(poly: &AbelQuartic, ctx: &PrecisionContext) -> Vec<Complex> {
    let p = ctx.bits();
    let lead = poly.coeffs[4].to_complex(p);
    let seed = Complex::new(ctx.real(0.4), ctx.real(0.9));
    let mut roots: Vec<Complex> = (1..=4).map(|k| seed.powu(k)).collect();
    let tol = ctx.pow10_neg(ctx.digits() + 5);
    for _ in 0..1000 {
        let mut change = ctx.zero();
        for i in 0..4 {
            let mut den = lead.clone();
            for j in 0..4 {
                if i != j {
                    den = &den * &(&roots[i] - &roots[j]);
                }
            }
            let step = poly.eval(&roots[i]).div(&den);
            roots[i] = &roots[i] - &step;
            change = change.max(&step.abs());
        }
        if change <= tol {
            break;
        }
    }
    for z in roots.iter_mut() {
        for _ in 0..3 {
            let d = poly.eval_derivative(z);
            if d.abs().is_zero() {
                break;
            }
            *z = &*z - &poly.eval(z).div(&d);
        }
    }
    roots
}

/// Largest distance in the best greedy pairing of two root lists.
pub fn multiset_distance(a: &[Complex], b: &[Complex]) -> Option<Float> {
    if a.len() != b.len() {
        return None;
    }
    let mut unused: Vec<&Complex> = b.iter().collect();
    let mut worst: Option<Float> = None;
    for z in a {
        let (idx, d) = unused
            .iter()
            .enumerate()
            .map(|(i, w)| (i, (z - *w).abs()))
            .min_by(|x, y| x.1.partial_cmp(&y.1).expect("finite distances"))?;
        unused.swap_remove(idx);
        worst = Some(match worst {
            Some(w) => w.max(&d),
            None => d,
        });
    }
    worst
}

/// The radius of the first vertex of the regular 17-gon together with the
/// intermediate quantities of its radical expression.
#[derive(Clone, Debug)]
pub struct SeventeenRadius {
    pub u: Complex,
    pub m: Float,
    pub w: Complex,
    /// `W - m conj(W)`
    pub x: Complex,
    /// `phi(2 omega / 17)`
    pub r1: Float,
    /// The addition formula evaluated at complex arguments `a`, `conj(a)` with
    /// `phi(a)^2 = W`; its real part is `r1` and its imaginary part vanishes.
    pub addition_check: Complex,
}

/// `phi(2 omega / 17)` in radicals, cross-checked by the complex addition formula
///
/// ```text
/// phi(a + conj a) = (phi(a) sqrt(1 - phi(conj a)^4) + phi(conj a) sqrt(1 - phi(a)^4))
///                   / (1 + phi(a)^2 phi(conj a)^2)
/// ```
pub fn phi_two_omega_17(ctx: &PrecisionContext) -> Result<SeventeenRadius> {
    let p = ctx.bits();
    let u = abel_radical_root(ctx)?.value;
    let (m, w) = w_from_u(&u);
    let x = &w - &w.conj().scale(&m);
    let r1 = Float::with_val(p, &x.sqrt().re * 2u32) / Float::with_val(p, &m + 1u32);

    let phi_a = w.sqrt();
    let phi_conj = phi_a.conj();
    let one = Complex::one(p);
    let sq_a = (&one - &(&w * &w)).sqrt();
    let sq_conj = (&one - &(&w.conj() * &w.conj())).sqrt();
    let num = &(&phi_a * &sq_conj) + &(&phi_conj * &sq_a);
    let den = &one + &(&w * &w.conj());
    let addition_check = num.div(&den);
    let gap = (&addition_check - &Complex::new(r1.clone(), ctx.zero())).abs();
    if gap > *ctx.eps() {
        return Err(Error::Consistency(format!(
            "radius {} disagrees with the addition formula by {}",
            crate::precision::fmt_digits(&r1, 20),
            crate::precision::fmt_digits(&gap, 6)
        )));
    }
    Ok(SeventeenRadius { u, m, w, x, r1, addition_check })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(40).unwrap()
    }

    fn parse(ctx: &PrecisionContext, re: &str, im: &str) -> Complex {
        Complex::new(ctx.parse(re).unwrap(), ctx.parse(im).unwrap())
    }

    #[test]
    fn principal_branch_value() {
        let c = ctx();
        let u = abel_radical_root(&c).unwrap();
        assert_eq!(u.branch, 0);
        let expected = parse(&c, "0.0947840920273485841380125496611", "0.1260156262924443260249388406046");
        assert!((&u.value - &expected).abs() < 1e-29);
    }

    #[test]
    fn every_branch_solves_the_quartic() {
        let c = ctx();
        let sweep = branch_sweep(&c).unwrap();
        assert_eq!(sweep.weak_filter_passes, 4);
        for cand in &sweep.candidates {
            assert!(cand.residual < 1e-35);
        }
        let p = abel_quartic();
        let numeric = numeric_quartic_roots(&p, &c);
        let radical: Vec<Complex> = sweep.candidates.iter().map(|b| b.radical.value.clone()).collect();
        assert!(multiset_distance(&radical, &numeric).unwrap() < 1e-35);
    }

    #[test]
    fn reversed_quartic_has_reciprocal_roots() {
        let c = ctx();
        let u = abel_radical_root(&c).unwrap().value;
        let q = abel_quartic().reversed();
        assert!(q.eval(&u.recip()).abs() < 1e-30);
    }

    #[test]
    fn rewritten_form_agrees() {
        let c = ctx();
        let u = abel_radical_root(&c).unwrap().value;
        let four = rewritten_u(&c).scale(&c.real(4));
        assert!((&four - &u).abs() < 1e-38);
    }

    #[test]
    fn seventeenth_radius_and_intermediates() {
        let c = ctx();
        let s = phi_two_omega_17(&c).unwrap();
        let r1 = c.parse("0.30819824065973259952787741223660092044621836093349").unwrap();
        assert!(Float::with_val(c.bits(), &s.r1 - &r1).abs() < 1e-38);
        assert!(s.addition_check.im.clone().abs() < 1e-38);
        let m = c.parse("0.157683106803886481340664096335").unwrap();
        assert!(Float::with_val(c.bits(), &s.m - &m).abs() < 1e-29);
        let w = parse(&c, "-0.355293680517424250934621842335", "-0.177340089625185846192026076682");
        assert!((&s.w - &w).abs() < 1e-29);
    }
}
