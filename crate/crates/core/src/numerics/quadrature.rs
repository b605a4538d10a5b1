//! Composite Gauss-Legendre quadrature at arbitrary precision.

use rug::Float;

/// Gauss-Legendre nodes and weights on `[-1, 1]`, computed once per precision.
#[derive(Clone, Debug)]
pub struct GaussLegendre {
    nodes: Vec<Float>,
    weights: Vec<Float>,
}

impl GaussLegendre {
    /// Builds an `order`-point rule. Roots of `P_n` come from Newton's method
    /// started at the Tricomi approximation.
    pub fn new(order: usize, prec: u32) -> Self {
        assert!(order >= 2, "quadrature order must be at least 2");
        let n = order;
        let tol = Float::with_val(prec, Float::u_pow_u(2, prec.saturating_sub(8))).recip();
        let mut nodes = Vec::with_capacity(n);
        let mut weights = Vec::with_capacity(n);
        for i in 1..=n.div_ceil(2) {
            let guess = (std::f64::consts::PI * (i as f64 - 0.25) / (n as f64 + 0.5)).cos();
            let mut x = Float::with_val(prec, guess);
            let mut dp = Float::new(prec);
            for _ in 0..200 {
                let (p, d) = legendre(n, &x);
                let dx = Float::with_val(prec, &p / &d);
                x -= &dx;
                dp = d;
                if dx.abs() <= tol {
                    break;
                }
            }
            let (_, d) = legendre(n, &x);
            if !d.is_zero() {
                dp = d;
            }
            let one_minus = Float::with_val(prec, 1 - x.clone().square());
            let w = Float::with_val(prec, 2u32 / (one_minus * dp.square()));
            let centre = n % 2 == 1 && i == n.div_ceil(2);
            if centre {
                nodes.push(Float::new(prec));
                weights.push(w);
            } else {
                nodes.push(Float::with_val(prec, -&x));
                weights.push(w.clone());
                nodes.push(x);
                weights.push(w);
            }
        }
        GaussLegendre { nodes, weights }
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    /// Integrates `f` over `[a, b]` split into `panels` equal panels.
    pub fn integrate<F>(&self, f: &F, a: &Float, b: &Float, panels: u32) -> Float
    where
        F: Fn(&Float) -> Float,
    {
        let prec = a.prec();
        let width = Float::with_val(prec, Float::with_val(prec, b - a) / panels);
        let half = Float::with_val(prec, &width / 2u32);
        let mut total = Float::new(prec);
        for k in 0..panels {
            let lo = Float::with_val(prec, a + Float::with_val(prec, &width * k));
            let mid = Float::with_val(prec, &lo + &half);
            let mut sum = Float::new(prec);
            for (x, w) in self.nodes.iter().zip(&self.weights) {
                let t = Float::with_val(prec, &mid + Float::with_val(prec, &half * x));
                sum += Float::with_val(prec, w * f(&t));
            }
            total += sum * &half;
        }
        total
    }

    /// Doubles the panel count until two successive results agree to `tol`.
    pub fn integrate_adaptive<F>(&self, f: &F, a: &Float, b: &Float, tol: &Float) -> Float
    where
        F: Fn(&Float) -> Float,
    {
        let prec = a.prec();
        let mut panels = 1u32;
        let mut prev = self.integrate(f, a, b, panels);
        while panels < (1 << 14) {
            panels *= 2;
            let cur = self.integrate(f, a, b, panels);
            if Float::with_val(prec, &cur - &prev).abs() <= *tol {
                return cur;
            }
            prev = cur;
        }
        prev
    }
}

// (P_n(x), P_n'(x)) by the three-term recurrence.
fn legendre(n: usize, x: &Float) -> (Float, Float) {
    let prec = x.prec();
    let mut p0 = Float::with_val(prec, 1);
    let mut p1 = x.clone();
    for k in 1..n {
        let k = k as u32;
        let a = Float::with_val(prec, x * &p1) * (2 * k + 1);
        let b = Float::with_val(prec, &p0 * k);
        let p2 = Float::with_val(prec, a - b) / (k + 1);
        p0 = p1;
        p1 = p2;
    }
    let num = Float::with_val(prec, Float::with_val(prec, x * &p1) - &p0) * (n as u32);
    let den = Float::with_val(prec, x.clone().square() - 1u32);
    let d = Float::with_val(prec, num / den);
    (p1, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrates_polynomials_exactly() {
        let rule = GaussLegendre::new(8, 200);
        let a = Float::with_val(200, 0);
        let b = Float::with_val(200, 2);
        // degree 15 is the exactness limit of an 8-point rule
        let v = rule.integrate(&|x: &Float| rug::ops::Pow::pow(x.clone(), 15u32), &a, &b, 1);
        let exact = Float::with_val(200, Float::u_pow_u(2, 16)) / 16u32;
        assert!((v - exact).abs() < 1e-50);
    }

    #[test]
    fn weights_sum_to_two() {
        for n in [5, 12, 33] {
            let rule = GaussLegendre::new(n, 160);
            assert_eq!(rule.order(), n);
            let s: Float = rule.weights.iter().fold(Float::new(160), |acc, w| acc + w);
            assert!((s - 2u32).abs() < 1e-40);
        }
    }

    #[test]
    fn adaptive_matches_closed_form() {
        let rule = GaussLegendre::new(20, 200);
        let a = Float::with_val(200, 0);
        let b = Float::with_val(200, 1);
        let tol = Float::with_val(200, 1e-45);
        let v = rule.integrate_adaptive(&|x: &Float| Float::with_val(200, 1u32 + x.clone().square()).recip(), &a, &b, &tol);
        let quarter_pi = Float::with_val(200, rug::float::Constant::Pi) / 4u32;
        assert!((v - quarter_pi).abs() < 1e-44);
    }
}
