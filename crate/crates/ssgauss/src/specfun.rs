//! Scalar special functions: Γ, B, the Gauss hypergeometric ₂F₁ on the
//! parameter range the covariance kernels need, the fractional-integral
//! normalizer α_H, and the tail-constant ingredient φ.
//!
//! Everything here is a pure function of its arguments; overflow-prone
//! expressions are evaluated in log domain.

use crate::error::{Error, Result};
use crate::quad::{adaptive_gk, GaussJacobi, QuadratureSettings};
use std::f64::consts::PI;

// Lanczos approximation, g = 7, 9 terms. Relative error below 1e-14 on the
// positive half-line after reflection.
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Natural log of Γ(x) for x > 0.
pub fn ln_gamma(x: f64) -> f64 {
    if x < 0.5 {
        // Reflection keeps the Lanczos sum in its accurate range.
        return (PI / (PI * x).sin()).ln() - ln_gamma(1.0 - x);
    }
    let z = x - 1.0;
    let mut acc = LANCZOS[0];
    for (k, c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (z + k as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + acc.ln()
}

/// Γ(x) for x > 0.
pub fn gamma_fn(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::domain(format!(
            "gamma_fn requires a positive argument, got {x}"
        )));
    }
    Ok(ln_gamma(x).exp())
}

/// Γ(x) for non-integer x of either sign. Internal helper for the ₂F₁
/// connection coefficients.
pub(crate) fn gamma_signed(x: f64) -> f64 {
    if x > 0.0 {
        ln_gamma(x).exp()
    } else {
        PI / ((PI * x).sin() * ln_gamma(1.0 - x).exp())
    }
}

/// B(a, b) = Γ(a)Γ(b)/Γ(a+b) for a, b > 0.
pub fn beta_fn(a: f64, b: f64) -> Result<f64> {
    if !(a > 0.0) || !(b > 0.0) {
        return Err(Error::domain(format!(
            "beta_fn requires positive arguments, got ({a}, {b})"
        )));
    }
    Ok((ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b)).exp())
}

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && (x - x.round()).abs() < 1e-12
}

/// Maclaurin series of ₂F₁, valid for |z| < 1; terminates on its own when a
/// or b is a non-positive integer.
fn hyp2f1_series(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    for k in 0..200_000u32 {
        let kf = k as f64;
        term *= (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * z;
        sum += term;
        if term == 0.0 || term.abs() < 1e-17 * sum.abs().max(1.0) {
            return Ok(sum);
        }
    }
    Err(Error::numeric(format!(
        "2F1 series failed to converge for (a={a}, b={b}, c={c}, z={z})"
    )))
}

/// Pfaff transformation: F(a,b;c;z) = (1-z)^{-a} F(a, c-b; c; z/(z-1)).
pub(crate) fn hyp2f1_pfaff(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    let w = z / (z - 1.0);
    Ok((1.0 - z).powf(-a) * hyp2f1_series(a, c - b, c, w)?)
}

/// Euler transformation composed with Pfaff; an independent route for
/// cross-checks and for degenerate parameter differences.
pub(crate) fn hyp2f1_euler_pfaff(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    Ok((1.0 - z).powf(c - a - b) * hyp2f1_pfaff(c - a, c - b, c, z)?)
}

/// Two-term connection formula in 1/(1-z); requires b - a away from the
/// integers.
pub(crate) fn hyp2f1_linear_1z(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    let w = 1.0 / (1.0 - z);
    let lg_c = ln_gamma(c);
    let t1 = (lg_c.exp() * gamma_signed(b - a)) / (gamma_signed(b) * gamma_signed(c - a))
        * (1.0 - z).powf(-a)
        * hyp2f1_series(a, c - b, a - b + 1.0, w)?;
    let t2 = (lg_c.exp() * gamma_signed(a - b)) / (gamma_signed(a) * gamma_signed(c - b))
        * (1.0 - z).powf(-b)
        * hyp2f1_series(b, c - a, b - a + 1.0, w)?;
    Ok(t1 + t2)
}

/// Euler integral fallback for z < 0 when the connection formula is
/// ill-conditioned; needs c > b > 0 (or the same after swapping a and b).
fn hyp2f1_euler_integral(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    let (a, b) = if c > b && b > 0.0 { (a, b) } else { (b, a) };
    if !(c > b && b > 0.0) {
        return Err(Error::numeric(format!(
            "2F1 outside the convergent parameter regime: (a={a}, b={b}, c={c}, z={z})"
        )));
    }
    let settings = QuadratureSettings::default();
    let f = |t: f64| t.powf(b - 1.0) * (1.0 - t).powf(c - b - 1.0) * (1.0 - z * t).powf(-a);
    let (v, _) = crate::quad::integrate_power_endpoints(
        f,
        0.0,
        1.0,
        (b - 1.0).min(0.0),
        (c - b - 1.0).min(0.0),
        &settings,
    )?;
    Ok(v / beta_fn(b, c - b)?)
}

/// Gauss hypergeometric F(a, b; c; z) for z < 1.
///
/// Series for moderate arguments, Pfaff transformation on z < 0, and the
/// 1/(1-z) connection formula (with an integral-representation fallback near
/// its degenerate cases) for large negative z.
pub fn gauss_2f1(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    if is_nonpositive_integer(c) {
        return Err(Error::domain(format!(
            "gauss_2f1 undefined for non-positive integer c = {c}"
        )));
    }
    if !(z < 1.0) {
        return Err(Error::domain(format!("gauss_2f1 requires z < 1, got {z}")));
    }
    if z == 0.0 || a == 0.0 || b == 0.0 {
        return Ok(1.0);
    }
    // Terminating series.
    if is_nonpositive_integer(a) || is_nonpositive_integer(b) {
        return hyp2f1_series(a, b, c, z);
    }
    if z > 0.0 {
        // Needed regime is z <= 0; towards z -> 1 this is best-effort.
        return hyp2f1_series(a, b, c, z);
    }
    if z >= -30.0 {
        // The Pfaff series still converges geometrically here.
        return hyp2f1_pfaff(a, b, c, z);
    }
    let frac = (b - a) - (b - a).round();
    if frac.abs() >= 0.05 {
        hyp2f1_linear_1z(a, b, c, z)
    } else {
        // Connection formula ill-conditioned; integrate instead, falling back
        // to the (slow but convergent) Pfaff series as a last resort.
        hyp2f1_euler_integral(a, b, c, z).or_else(|_| hyp2f1_pfaff(a, b, c, z))
    }
}

/// Normalizer tying the fractional-kernel process to unit-variance fBm:
/// α_H = (∫₀^∞ [(1+s)^{H-1/2} - s^{H-1/2}]² ds + 1/(2H))^{1/2}.
///
/// The integral over [0,1] splits into two exact power pieces plus a
/// Gauss–Jacobi cross term; the tail maps to [0,1] by u = 1/s, where the
/// integrand is u^{1-2H} times an analytic factor.
pub fn alpha_h(hurst: f64) -> Result<f64> {
    if !(hurst > 0.0 && hurst < 1.0) {
        return Err(Error::domain(format!(
            "alpha_h requires H in (0,1), got {hurst}"
        )));
    }
    let h = hurst;
    let nu = h - 0.5;
    let two_h = 2.0 * h;
    // [0,1]: (1+s)^{2nu} - 2 (1+s)^nu s^nu + s^{2nu}, first and last exact.
    let head = (2f64.powf(two_h) - 1.0) / two_h;
    let cross_rule = GaussJacobi::new(48, nu, 0.0)?;
    let cross = cross_rule.integrate_01(|s| (1.0 + s).powf(nu));
    let last = 1.0 / two_h;
    // Tail via u = 1/s: integrand u^{1-2H} * ((1+u)^nu - 1)^2 / u^2.
    let tail_rule = GaussJacobi::new(48, 1.0 - two_h, 0.0)?;
    let tail = tail_rule.integrate_01(|u| {
        let expm = (nu * u.ln_1p()).exp_m1();
        let r = expm / u;
        r * r
    });
    let integral = head - 2.0 * cross + last + tail;
    Ok((integral + 1.0 / two_h).sqrt())
}

/// φ(x) = x (1-x)^{(1-x)/x} / Γ(1-x)^{1/x} on (0, 1), evaluated in log
/// domain.
pub fn phi_fn(x: f64) -> Result<f64> {
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::domain(format!(
            "phi_fn requires x in (0,1), got {x}"
        )));
    }
    let log_phi = x.ln() + ((1.0 - x) / x) * (1.0 - x).ln() - ln_gamma(1.0 - x) / x;
    Ok(log_phi.exp())
}

/// Direct-arithmetic variant of [`phi_fn`]; self-consistency oracle for
/// tests.
pub(crate) fn phi_fn_direct(x: f64) -> f64 {
    x * (1.0 - x).powf((1.0 - x) / x) / ln_gamma(1.0 - x).exp().powf(1.0 / x)
}

/// Brute-force reference for α_H²: adaptive quadrature on [0, s_max] plus the
/// leading analytic tail term. Test oracle only.
#[cfg(test)]
fn alpha_h_sq_bruteforce(h: f64) -> f64 {
    let nu = h - 0.5;
    let g = |s: f64| {
        let d = (1.0 + s).powf(nu) - s.powf(nu);
        d * d
    };
    let settings = QuadratureSettings {
        max_subdivisions: 20_000,
        ..QuadratureSettings::default()
    };
    let (head, _) =
        crate::quad::integrate_power_endpoints(g, 0.0, 1.0, 2.0 * nu, 0.0, &settings).unwrap();
    let s_max = 5.0e4;
    let mut mid_f = g;
    let (mid, _) = adaptive_gk(&mut mid_f, 1.0, s_max, &settings).unwrap();
    // g(s) ~ nu^2 s^{2H-3} (1 + (nu-1)/s + ...) for large s.
    let tail = nu * nu
        * (s_max.powf(2.0 * h - 2.0) / (2.0 - 2.0 * h)
            + (nu - 1.0) * s_max.powf(2.0 * h - 3.0) / (3.0 - 2.0 * h));
    head + mid + tail + 1.0 / (2.0 * h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn gamma_basic_values() {
        assert!((gamma_fn(1.0).unwrap() - 1.0).abs() < 1e-14);
        assert!((gamma_fn(0.5).unwrap() - PI.sqrt()).abs() < 1e-13);
        let expect = 1.5 * 0.5 * PI.sqrt();
        assert!((gamma_fn(2.5).unwrap() - expect).abs() < 1e-13 * expect);
    }

    #[test]
    fn gamma_against_integral_oracle() {
        // Gamma(1/2) as the actual integral of t^{-1/2} e^{-t}.
        let s = QuadratureSettings::default();
        let (head, _) = crate::quad::integrate_power_endpoints(
            |t: f64| (-t).exp() / t.sqrt(),
            0.0,
            1.0,
            -0.5,
            0.0,
            &s,
        )
        .unwrap();
        let (tail, _) = adaptive_gk(&mut |t: f64| (-t).exp() / t.sqrt(), 1.0, 45.0, &s).unwrap();
        let oracle = head + tail;
        assert!((gamma_fn(0.5).unwrap() - oracle).abs() < 1e-11);
    }

    #[test]
    fn gamma_rejects_nonpositive() {
        assert!(gamma_fn(0.0).is_err());
        assert!(gamma_fn(-1.3).is_err());
    }

    #[test]
    fn gamma_recurrence_on_grid() {
        let mut x = 0.1;
        while x <= 10.0 {
            let lhs = gamma_fn(x + 1.0).unwrap();
            let rhs = x * gamma_fn(x).unwrap();
            assert!(
                (lhs - rhs).abs() <= 1e-11 * rhs.abs(),
                "recurrence off at x={x}"
            );
            x += 0.037;
        }
    }

    #[test]
    fn beta_values() {
        assert!((beta_fn(0.5, 1.0).unwrap() - 2.0).abs() < 1e-13);
        assert!((beta_fn(1.0, 1.0).unwrap() - 1.0).abs() < 1e-14);
        assert!((beta_fn(0.5, 0.5).unwrap() - PI).abs() < 1e-13);
        assert!(beta_fn(-0.5, 1.0).is_err());
    }

    #[test]
    fn hyp2f1_trivial_and_log_case() {
        assert_eq!(gauss_2f1(0.3, 2.0, 1.1, 0.0).unwrap(), 1.0);
        // F(1,1;2;z) = -ln(1-z)/z
        let v = gauss_2f1(1.0, 1.0, 2.0, 0.5).unwrap();
        let expect = -(0.5f64.ln()) / 0.5;
        assert!((v - expect).abs() < 1e-12);
    }

    #[test]
    fn hyp2f1_transforms_agree() {
        // Independent transformation routes at z = -3.
        let (a, b, c, z) = (0.25, 0.25, 1.25, -3.0);
        let pfaff = hyp2f1_pfaff(a, b, c, z).unwrap();
        let euler = hyp2f1_euler_pfaff(a, b, c, z).unwrap();
        let integral = hyp2f1_euler_integral(a, b, c, z).unwrap();
        assert!((pfaff - euler).abs() < 1e-9, "{pfaff} vs {euler}");
        assert!((pfaff - integral).abs() < 1e-9, "{pfaff} vs {integral}");
        // And deep into the left half line, against the integral fallback.
        let (a, b, c, z) = (-0.2, 0.2, 0.8, -250.0);
        let linear = hyp2f1_linear_1z(a, b, c, z).unwrap();
        let euler = hyp2f1_euler_integral(a, b, c, z).unwrap();
        assert!(
            (linear - euler).abs() < 1e-9 * linear.abs().max(1.0),
            "{linear} vs {euler}"
        );
    }

    #[test]
    fn hyp2f1_domain_errors() {
        assert!(gauss_2f1(0.5, 0.5, -1.0, 0.3).is_err());
        assert!(gauss_2f1(0.5, 0.5, 1.0, 1.0).is_err());
    }

    #[test]
    fn alpha_h_brownian_case_is_one() {
        assert!((alpha_h(0.5).unwrap() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn alpha_h_matches_bruteforce() {
        for &h in &[0.25, 0.75, 0.3, 0.6] {
            let fast = alpha_h(h).unwrap().powi(2);
            let brute = alpha_h_sq_bruteforce(h);
            assert!(
                (fast - brute).abs() < 1e-8 * brute,
                "H={h}: {fast} vs {brute}"
            );
        }
    }

    #[test]
    fn alpha_h_domain() {
        assert!(alpha_h(0.0).is_err());
        assert!(alpha_h(1.0).is_err());
    }

    #[test]
    fn phi_values() {
        let v = phi_fn(0.5).unwrap();
        assert!((v - 1.0 / (4.0 * PI)).abs() < 1e-14);
        // Log-domain and direct arithmetic agree.
        for &x in &[0.25, 0.1, 0.7] {
            let a = phi_fn(x).unwrap();
            let b = phi_fn_direct(x);
            assert!((a - b).abs() < 1e-12 * a.max(b));
        }
        // Finite, positive, continuous approaching 1.
        let near = [0.985, 0.99, 0.995].map(|x| phi_fn(x).unwrap());
        assert!(near.iter().all(|&v| v > 0.0 && v.is_finite()));
        assert!(near[1] < near[0] && near[2] < near[1]);
        assert!(phi_fn(1.0).is_err());
        assert!(phi_fn(0.0).is_err());
    }

    proptest! {
        #[test]
        fn gamma_recurrence_prop(x in 0.1f64..10.0) {
            let lhs = gamma_fn(x + 1.0).unwrap();
            let rhs = x * gamma_fn(x).unwrap();
            prop_assert!((lhs - rhs).abs() <= 1e-11 * rhs.abs());
        }

        #[test]
        fn beta_symmetry(a in 0.05f64..20.0, b in 0.05f64..20.0) {
            prop_assert_eq!(beta_fn(a, b).unwrap(), beta_fn(b, a).unwrap());
        }

        #[test]
        fn hyp2f1_argument_symmetry(
            a in -1.5f64..1.5,
            b in -1.5f64..1.5,
            z in -5.0f64..0.9,
        ) {
            let c = 1.75;
            let ab = gauss_2f1(a, b, c, z).unwrap();
            let ba = gauss_2f1(b, a, c, z).unwrap();
            prop_assert!((ab - ba).abs() <= 1e-12 * ab.abs().max(1.0));
        }

        #[test]
        fn alpha_h_dominates_brownian_part(h in 0.02f64..0.98) {
            // alpha_h^2 - 1/(2H) is an integral of a square.
            let v = alpha_h(h).unwrap();
            prop_assert!(v * v + 1e-12 >= 1.0 / (2.0 * h));
        }
    }
}
