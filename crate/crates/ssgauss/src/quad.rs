//! One-dimensional quadrature: adaptive Gauss–Kronrod, Gauss–Jacobi and
//! Gauss–Legendre rules, and power substitutions for integrable endpoint
//! singularities.

use crate::error::{Error, Result};
use crate::specfun::ln_gamma;
use nalgebra::DMatrix;

/// Tolerances and budget for adaptive integration.
#[derive(Clone, Copy, Debug)]
pub struct QuadratureSettings {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_subdivisions: usize,
    pub tail: TailPolicy,
}

/// How improper tails are closed out.
#[derive(Clone, Copy, Debug)]
pub enum TailPolicy {
    /// Transform or expand the tail analytically (default).
    AnalyticTail,
    /// Truncate the domain at the given length and ignore the remainder.
    Truncate(f64),
}

impl QuadratureSettings {
    pub fn new(rel_tol: f64, abs_tol: f64, max_subdivisions: usize) -> Result<Self> {
        if !(rel_tol > 0.0) || !(abs_tol > 0.0) {
            return Err(Error::domain("quadrature tolerances must be positive"));
        }
        if max_subdivisions < 1 {
            return Err(Error::domain("max_subdivisions must be at least 1"));
        }
        Ok(QuadratureSettings {
            rel_tol,
            abs_tol,
            max_subdivisions,
            tail: TailPolicy::AnalyticTail,
        })
    }
}

impl Default for QuadratureSettings {
    fn default() -> Self {
        QuadratureSettings {
            rel_tol: 1e-12,
            abs_tol: 1e-14,
            max_subdivisions: 2000,
            tail: TailPolicy::AnalyticTail,
        }
    }
}

// 15-point Kronrod extension of 7-point Gauss, positive half.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_17,
    0.207_784_955_007_898_47,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_94,
    0.417_959_183_673_469_4,
];

/// One G7-K15 panel. Returns (kronrod value, error estimate).
fn gk15<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kron = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for j in 0..7 {
        let x = h * XGK[j];
        let f1 = f(c - x);
        let f2 = f(c + x);
        kron += WGK[j] * (f1 + f2);
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    kron *= h;
    gauss *= h;
    let err = (kron - gauss).abs();
    // QUADPACK-style sharpening of the raw difference.
    let err = if err > 0.0 {
        (200.0 * err).powf(1.5).min(err).max(err * 1e-6)
    } else {
        0.0
    };
    (kron, err)
}

/// Adaptive Gauss–Kronrod on a finite interval.
///
/// Bisects the panel with the largest error estimate until the total
/// estimated error meets the tolerance or the subdivision budget runs out.
pub fn adaptive_gk<F: FnMut(f64) -> f64>(
    f: &mut F,
    a: f64,
    b: f64,
    settings: &QuadratureSettings,
) -> Result<(f64, f64)> {
    if a == b {
        return Ok((0.0, 0.0));
    }
    let (v, e) = gk15(f, a, b);
    let mut panels = vec![(a, b, v, e)];
    loop {
        let total: f64 = panels.iter().map(|p| p.2).sum();
        let err: f64 = panels.iter().map(|p| p.3).sum();
        let target = settings.abs_tol.max(settings.rel_tol * total.abs());
        if err <= target {
            return Ok((total, err));
        }
        if panels.len() >= settings.max_subdivisions {
            // Singular integrands subdivided geometrically can stall with a
            // stale worst-panel estimate; report what we have.
            return Ok((total, err));
        }
        let (idx, _) = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .3.total_cmp(&y.1 .3))
            .expect("non-empty panel list");
        let (pa, pb, _, _) = panels.swap_remove(idx);
        let mid = 0.5 * (pa + pb);
        if mid <= pa || mid >= pb {
            // Interval exhausted at machine precision.
            let (v, e) = gk15(f, pa, pb);
            panels.push((pa, pb, v, e));
            let total: f64 = panels.iter().map(|p| p.2).sum();
            let err: f64 = panels.iter().map(|p| p.3).sum();
            return Ok((total, err));
        }
        let (v1, e1) = gk15(f, pa, mid);
        let (v2, e2) = gk15(f, mid, pb);
        panels.push((pa, mid, v1, e1));
        panels.push((mid, pb, v2, e2));
    }
}

/// Integrates `f` over `[a, b]` where `f` may behave like
/// `(x-a)^{pow_a}` near `a` and `(b-x)^{pow_b}` near `b`, with the powers in
/// `(-1, 0]`. A power substitution absorbs each singular endpoint exactly and
/// the transformed integrand is handled adaptively.
pub fn integrate_power_endpoints<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    pow_a: f64,
    pow_b: f64,
    settings: &QuadratureSettings,
) -> Result<(f64, f64)> {
    if !(pow_a > -1.0) || !(pow_b > -1.0) {
        return Err(Error::domain(
            "endpoint singularity exponents must exceed -1",
        ));
    }
    if a >= b {
        return Ok((0.0, 0.0));
    }
    let mid = 0.5 * (a + b);
    // Left half: x = a + u^k, u in [0, (mid-a)^{1/k}], k = 1/(1+pow_a).
    let eval_half = |pow: f64, from_right: bool| -> Result<(f64, f64)> {
        let k = 1.0 / (1.0 + pow.min(0.0));
        let len = mid - a;
        let upper = len.powf(1.0 / k);
        let mut g = |u: f64| {
            let off = u.powf(k);
            let x = if from_right { b - off } else { a + off };
            let jac = k * u.powf(k - 1.0);
            let val = f(x) * jac;
            if val.is_finite() {
                val
            } else {
                0.0
            }
        };
        adaptive_gk(&mut g, 0.0, upper, settings)
    };
    let (lv, le) = eval_half(pow_a, false)?;
    let half = b - mid;
    let (rv, re) = {
        let k = 1.0 / (1.0 + pow_b.min(0.0));
        let upper = half.powf(1.0 / k);
        let mut g = |u: f64| {
            let x = b - u.powf(k);
            let jac = k * u.powf(k - 1.0);
            let val = f(x) * jac;
            if val.is_finite() {
                val
            } else {
                0.0
            }
        };
        adaptive_gk(&mut g, 0.0, upper, settings)?
    };
    let _ = le;
    Ok((lv + rv, le + re))
}

/// A fixed Gauss–Jacobi rule on `[0, 1]` for integrals
/// `∫₀¹ x^{exp_at_zero} (1-x)^{exp_at_one} f(x) dx`.
///
/// Nodes and weights come from the Golub–Welsch eigenvalue construction; the
/// endpoint weight is absorbed into the quadrature weights, so `f` only has
/// to be smooth.
#[derive(Clone, Debug)]
pub struct GaussJacobi {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    pub exp_at_zero: f64,
    pub exp_at_one: f64,
}

impl GaussJacobi {
    pub fn new(degree: usize, exp_at_zero: f64, exp_at_one: f64) -> Result<Self> {
        if degree < 2 {
            return Err(Error::domain("Gauss-Jacobi degree must be at least 2"));
        }
        if !(exp_at_zero > -1.0) || !(exp_at_one > -1.0) {
            return Err(Error::domain("Gauss-Jacobi exponents must exceed -1"));
        }
        // Jacobi convention: weight (1-t)^alpha (1+t)^beta on [-1, 1].
        let alpha = exp_at_one;
        let beta = exp_at_zero;
        let n = degree;
        let mut jac = DMatrix::<f64>::zeros(n, n);
        let ab = alpha + beta;
        for k in 0..n {
            let kf = k as f64;
            let denom = (2.0 * kf + ab) * (2.0 * kf + ab + 2.0);
            let diag = if k == 0 {
                (beta - alpha) / (ab + 2.0)
            } else {
                (beta * beta - alpha * alpha) / denom
            };
            jac[(k, k)] = diag;
            if k + 1 < n {
                let k1 = kf + 1.0;
                let num = 4.0 * k1 * (k1 + alpha) * (k1 + beta) * (k1 + ab);
                let den = (2.0 * k1 + ab).powi(2) * (2.0 * k1 + ab + 1.0) * (2.0 * k1 + ab - 1.0);
                let off = (num / den).sqrt();
                jac[(k, k + 1)] = off;
                jac[(k + 1, k)] = off;
            }
        }
        let eig = jac.symmetric_eigen();
        // mu0 = integral of the weight over [-1,1].
        let mu0 = ((ab + 1.0) * std::f64::consts::LN_2 + ln_gamma(alpha + 1.0)
            + ln_gamma(beta + 1.0)
            - ln_gamma(ab + 2.0))
        .exp();
        let mut pairs: Vec<(f64, f64)> = (0..n)
            .map(|j| {
                let node = eig.eigenvalues[j];
                let v0 = eig.eigenvectors[(0, j)];
                (node, mu0 * v0 * v0)
            })
            .collect();
        pairs.sort_by(|x, y| x.0.total_cmp(&y.0));
        // Map [-1,1] to [0,1]: x = (1+t)/2, absorbing the scale factor.
        let scale = 0.5f64.powf(ab + 1.0);
        let nodes = pairs.iter().map(|p| 0.5 * (1.0 + p.0)).collect();
        let weights = pairs.iter().map(|p| scale * p.1).collect();
        Ok(GaussJacobi {
            nodes,
            weights,
            exp_at_zero,
            exp_at_one,
        })
    }

    /// `∫₀¹ x^{exp_at_zero} (1-x)^{exp_at_one} f(x) dx`
    pub fn integrate_01<F: FnMut(f64) -> f64>(&self, mut f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }

    /// Same rule transplanted to `[a, b]` with the weight
    /// `(x-a)^{exp_at_zero} (b-x)^{exp_at_one}`.
    pub fn integrate<F: FnMut(f64) -> f64>(&self, a: f64, b: f64, mut f: F) -> f64 {
        let len = b - a;
        let scale = len.powf(self.exp_at_zero + self.exp_at_one + 1.0);
        scale * self.integrate_01(|x| f(a + len * x))
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }
}

/// Fixed Gauss–Legendre rule on `[0, 1]` (Jacobi with zero exponents).
#[derive(Clone, Debug)]
pub struct GaussLegendre(GaussJacobi);

impl GaussLegendre {
    pub fn new(degree: usize) -> Result<Self> {
        Ok(GaussLegendre(GaussJacobi::new(degree, 0.0, 0.0)?))
    }

    pub fn integrate<F: FnMut(f64) -> f64>(&self, a: f64, b: f64, f: F) -> f64 {
        self.0.integrate(a, b, f)
    }
}

/// Neumaier-compensated sum; used wherever a batch statistic must not depend
/// on accumulation round-off ordering.
pub fn compensated_sum<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    sum + comp
}
