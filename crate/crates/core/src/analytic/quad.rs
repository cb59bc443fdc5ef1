//! Quadrature rules: tanh-sinh on `[0, R]` and composite Gauss–Legendre.

use serde::Serialize;

use super::real::{BigComplex, Real};

#[derive(Clone, Debug)]
pub struct QuadratureResult {
    pub value: BigComplex,
    /// Absolute bound on truncation plus discretization error.
    pub error_estimate: f64,
    pub evaluations: usize,
}

/// Plain-number summary for reports.
#[derive(Clone, Debug, Serialize)]
pub struct QuadratureSummary {
    pub re: f64,
    pub im: f64,
    pub error_estimate: f64,
    pub evaluations: usize,
}

impl QuadratureResult {
    pub fn summary(&self) -> QuadratureSummary {
        let (re, im) = self.value.to_f64();
        QuadratureSummary { re, im, error_estimate: self.error_estimate, evaluations: self.evaluations }
    }
}

/// One tanh-sinh node on `[0, R]`.
#[derive(Clone, Debug)]
pub struct Node {
    pub x: Real,
    pub ln_x: Real,
    pub weight: Real,
}

/// Tanh-sinh rule on `[0, R]` with the substitution `x = R / (1 + e^{−π sinh t})`,
/// which keeps both `x` near 0 and `R − x` near `R` free of cancellation.
///
/// Levels are nested: level `L` uses step `2^{−L}` and only odd multiples are new.
pub struct TanhSinh {
    r: Real,
    t_max: f64,
    p: usize,
    gaussian: bool,
    levels: Vec<Vec<Node>>,
}

impl TanhSinh {
    /// `left_cut` is the smallest `x` worth sampling; nodes stop once
    /// `x < left_cut` on the left or `R − x < R·2^{−p}` on the right.
    pub fn new(r: Real, left_cut: f64, p: usize) -> Self {
        let rf = r.to_f64();
        let left = (rf / left_cut).ln().max(1.0);
        let right = (p as f64 + 16.0) * std::f64::consts::LN_2;
        let t_max = (left.max(right) / std::f64::consts::PI).asinh();
        TanhSinh { r, t_max, p, gaussian: false, levels: Vec::new() }
    }

    /// Same rule with `e^{−πx²}` folded into every weight.
    pub fn with_gaussian_weight(mut self) -> Self {
        self.gaussian = true;
        self.levels.clear();
        self
    }

    pub fn upper(&self) -> &Real {
        &self.r
    }

    fn node(&self, t: f64) -> Node {
        let p = self.p;
        let t = Real::from_f64(t, p);
        let pi = Real::pi(p);
        let q = (-(&pi * &t.sinh())).exp();
        let one_q = &Real::one(p) + &q;
        let x = &self.r / &one_q;
        let mut weight = &(&(&self.r * &pi) * &(&t.cosh() * &q)) / &one_q.square();
        if self.gaussian {
            weight = &weight * &(-(&pi * &x.square())).exp();
        }
        let ln_x = &self.r.ln() - &one_q.ln();
        Node { x, ln_x, weight }
    }

    /// Nodes new at `level`; level 0 is the unit-step grid.
    pub fn level(&mut self, level: usize) -> &[Node] {
        while self.levels.len() <= level {
            let l = self.levels.len();
            let h = 0.5f64.powi(l as i32);
            let n = (self.t_max / h).ceil() as i64;
            let nodes = (-n..=n)
                .filter(|j| l == 0 || j.rem_euclid(2) == 1)
                .map(|j| self.node(j as f64 * h))
                .collect();
            self.levels.push(nodes);
        }
        &self.levels[level]
    }

    /// Integrate `f(node)` level by level until two successive estimates differ
    /// by at most `tol · Σ|w f|`, or `max_level` is exhausted.
    ///
    /// Returns `(value, |S_L − S_{L−1}|, L1 scale, evaluations, converged)`.
    pub fn integrate<F>(&mut self, max_level: usize, tol: f64, mut f: F) -> (BigComplex, f64, f64, usize, bool)
    where
        F: FnMut(&Node) -> BigComplex,
    {
        let p = self.p;
        let mut sum = BigComplex::zero(p);
        let mut abs_sum = Real::zero(p);
        let mut prev: Option<BigComplex> = None;
        let mut evals = 0;
        let mut last_diff = f64::INFINITY;
        for level in 0..=max_level {
            let h = Real::from_f64(0.5f64.powi(level as i32), p);
            let nodes: Vec<Node> = self.level(level).to_vec();
            for nd in &nodes {
                let v = f(nd).scale(&nd.weight);
                abs_sum = &abs_sum + &v.abs();
                sum = &sum + &v;
                evals += 1;
            }
            let est = sum.scale(&h);
            let scale = (&abs_sum * &h).to_f64();
            if let Some(pv) = &prev {
                last_diff = (&est - pv).abs().to_f64();
                if level >= 3 && last_diff <= tol * scale.max(f64::MIN_POSITIVE) {
                    return (est, last_diff, scale, evals, true);
                }
            }
            prev = Some(est);
        }
        let est = prev.unwrap();
        let scale = (&abs_sum * &Real::from_f64(0.5f64.powi(max_level as i32), p)).to_f64();
        (est, last_diff, scale, evals, false)
    }
}

/// Gauss–Legendre nodes and weights on `[−1, 1]`, by Newton iteration on `P_n`.
pub fn gauss_legendre(n: usize, p: usize) -> Vec<(Real, Real)> {
    let w = p + 32;
    let one = Real::one(w);
    let two = Real::from_i64(2, w);
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let guess = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut x = Real::from_f64(guess, w);
        let mut dp = Real::zero(w);
        for _ in 0..100 {
            let (pn, d) = legendre_and_derivative(n, &x);
            let step = &pn / &d;
            x = &x - &step;
            dp = d;
            if step.is_zero() || step.abs().exponent().map_or(true, |e| e < -(w as i32) + 4) {
                let (_, d) = legendre_and_derivative(n, &x);
                dp = d;
                break;
            }
        }
        let weight = &two / &(&(&one - &x.square()) * &dp.square());
        out.push((x.with_precision(p), weight.with_precision(p)));
    }
    out
}

fn legendre_and_derivative(n: usize, x: &Real) -> (Real, Real) {
    let w = x.precision();
    let mut p0 = Real::one(w);
    let mut p1 = x.clone();
    for k in 2..=n {
        let kf = Real::from_i64(k as i64, w);
        let a = Real::from_i64(2 * k as i64 - 1, w);
        let b = Real::from_i64(k as i64 - 1, w);
        let p2 = &(&(&a * x) * &p1) - &(&b * &p0);
        let p2 = &p2 / &kf;
        p0 = p1;
        p1 = p2;
    }
    let nf = Real::from_i64(n as i64, w);
    let d = &(&nf * &(&(x * &p1) - &p0)) / &(&x.square() - &Real::one(w));
    (p1, d)
}

/// Composite Gauss–Legendre nodes on `[a, b]` with panels of width `h`.
pub fn composite_gauss_legendre(a: f64, b: f64, h: f64, n: usize, p: usize) -> Vec<(Real, Real)> {
    let base = gauss_legendre(n, p);
    let panels = ((b - a) / h).round() as i64;
    let half = Real::from_f64(h / 2.0, p);
    let mut out = Vec::with_capacity(panels as usize * n);
    for j in 0..panels {
        let mid = Real::from_f64(a + (j as f64 + 0.5) * h, p);
        for (x, w) in &base {
            out.push((&mid + &(&half * x), &half * w));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_legendre_integrates_polynomials_exactly() {
        let p = 128;
        let rule = gauss_legendre(20, p);
        let sum_w: Real = rule.iter().fold(Real::zero(p), |a, (_, w)| &a + w);
        assert!((&sum_w - &Real::from_i64(2, p)).abs().to_f64() < 1e-35);
        // ∫ x^38 = 2/39 is within the exactness degree 39.
        let v = rule.iter().fold(Real::zero(p), |a, (x, w)| &a + &(w * &x.powi(38)));
        let err = &v - &(&Real::from_i64(2, p) / &Real::from_i64(39, p));
        assert!(err.abs().to_f64() < 1e-35);
    }

    #[test]
    fn tanh_sinh_handles_endpoint_singularity() {
        // ∫_0^1 x^{-1/2} dx = 2.
        let p = 128;
        let mut ts = TanhSinh::new(Real::one(p), 1e-80, p);
        let half = Real::from_f64(-0.5, p);
        let (v, err, _, _, ok) = ts.integrate(8, 1e-32, |nd| BigComplex::from_real((&half * &nd.ln_x).exp()));
        assert!(ok);
        let e = (&v.re - &Real::from_i64(2, p)).abs().to_f64();
        assert!(e < 1e-30 && err < 1e-25, "err {e} est {err}");
    }

    #[test]
    fn composite_rule_on_gaussian() {
        let p = 128;
        let rule = composite_gauss_legendre(-10.0, 10.0, 0.5, 20, p);
        let pi = Real::pi(p);
        let v = rule.iter().fold(Real::zero(p), |a, (t, w)| &a + &(w * &(-(&pi * &t.square())).exp()));
        assert!((&v - &Real::one(p)).abs().to_f64() < 1e-30);
    }
}
