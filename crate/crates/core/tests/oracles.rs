//! Cross-checks against a double-exponential rule that shares no code with
//! the adaptive Gauss–Kronrod integrator.

use std::f64::consts::PI;

use ramanujan_core::specfun::u_scaled_with;
use ramanujan_core::{epsilon_integral, j_integral, IntegralParams, Tolerance};

/// Exp-sinh rule on `[0, ∞)`: `x = exp(π/2 · sinh s)`.
fn exp_sinh(f: impl Fn(f64) -> f64) -> f64 {
    let h = 1.0 / 256.0;
    let mut sum = 0.0;
    let mut s: f64 = -5.5;
    while s <= 4.5 {
        let x = (0.5 * PI * s.sinh()).exp();
        let w = 0.5 * PI * s.cosh() * x;
        let v = f(x);
        if v.is_finite() {
            sum += w * v;
        }
        s += h;
    }
    sum * h
}

fn kummer(k: u32, z: f64) -> f64 {
    // ₁F₁(-k; 3/2; z) summed term by term
    let mut term = 1.0;
    let mut sum = 1.0;
    for r in 0..k {
        let r = f64::from(r);
        term *= (r - f64::from(k)) * z / ((r + 1.5) * (r + 1.0));
        sum += term;
    }
    sum
}

fn psi(tau: f64) -> f64 {
    (1..60).map(|m| (-PI * f64::from(m * m) * tau).exp()).sum()
}

fn rel(x: f64, y: f64) -> f64 {
    ((x - y) / y).abs()
}

#[test]
fn g2_two_pi_second_scheme() {
    let z = 2.0 * PI;
    let oracle = exp_sinh(|t| (-z * t).exp() * t * t * (1.0 + t).powf(-3.5));
    let got = u_scaled_with(2, z, Tolerance::relative(1e-13))
        .unwrap()
        .value;
    assert!(rel(got, oracle) < 1e-12, "{got} vs {oracle}");
    assert!(rel(oracle, 2.570_954_261_773_580_6e-3) < 1e-12);
}

#[test]
fn g_family_second_scheme() {
    for n in [0u32, 1, 5, 20, 41] {
        for z in [PI, 2.0 * PI, 4.0 * PI, 20.0] {
            let nf = f64::from(n);
            let oracle = exp_sinh(|t| (-z * t + nf * t.ln() - (nf + 1.5) * t.ln_1p()).exp());
            let got = u_scaled_with(n, z, Tolerance::relative(1e-13))
                .unwrap()
                .value;
            assert!(rel(got, oracle) < 1e-11, "n={n} z={z}: {got} vs {oracle}");
        }
    }
}

#[test]
fn j_integral_second_scheme() {
    for n in [0u32, 1, 2, 3, 6] {
        for a in [0.5, 1.0, 2.0] {
            let oracle = exp_sinh(|x| {
                x / (2.0 * PI * x).exp_m1()
                    * (-PI * a * x * x).exp()
                    * kummer(n, 2.0 * PI * a * x * x)
            });
            let got = j_integral(&IntegralParams::new(n, a)).unwrap().value;
            assert!(
                (got - oracle).abs() < 1e-12,
                "n={n} a={a}: {got} vs {oracle}"
            );
        }
    }
}

#[test]
fn epsilon_second_scheme() {
    for n in [1u32, 2, 4, 9, 20] {
        for a in [0.5, 2.0] {
            let sa = f64::sqrt(a);
            let nf = f64::from(n);
            let odd = n % 2 == 1;
            let integral = exp_sinh(|u| {
                let (p, q) = (psi((1.0 + u) / a), sa * psi(a * (1.0 + u)));
                let theta = if odd { q - p } else { p + q };
                theta * (nf * u.ln() - (nf + 1.5) * (2.0 + u).ln()).exp()
            });
            let oracle = integral / (4.0 * PI * a);
            let got = epsilon_integral(&IntegralParams::new(n, a)).unwrap().value;
            assert!(rel(got, oracle) < 1e-10, "n={n} a={a}: {got} vs {oracle}");
        }
    }
}
