//! Special-function building blocks.
//!
//! Everything here is either a closed form, a finite sum, or a single
//! quadrature of a positive integrand, so none of it suffers from
//! catastrophic cancellation in 64-bit arithmetic. The one exception, the
//! alternating terminating series `₂F₁(-n,1;3/2;2)`, is summed exactly in
//! rational arithmetic (see [`gauss_f`]).

mod rational;
mod scaled_u;
mod theta;

pub use rational::{gauss_f, gauss_f_recurrence, ExactRational};
pub use scaled_u::{u_scaled, u_scaled_with};
pub(crate) use theta::theta_sum;
pub use theta::{theta_psi, ThetaSum};

use std::f64::consts::{FRAC_2_SQRT_PI, PI};

use crate::error::{require_positive, Result};

/// `R(m) = Γ(m+1) / Γ(m+3/2)`.
///
/// Built from `R(0) = 2/√π` by the multiplicative recurrence
/// `R(m) = R(m-1)·m/(m+1/2)`, so there are no intermediate gamma values to
/// overflow. The loop is `O(m)`; `m = 10⁶` takes a few milliseconds.
pub fn gamma_half_ratio(m: u64) -> f64 {
    let mut r = FRAC_2_SQRT_PI;
    for j in 1..=m {
        let j = j as f64;
        r = r * j / (j + 0.5);
    }
    r
}

/// Terminating Kummer series `₁F₁(-k; 3/2; z)`, a polynomial of degree `k`.
pub fn kummer_terminating(k: u32, z: f64) -> f64 {
    let mut term = 1.0;
    let mut sum = 1.0;
    for r in 0..k {
        let r = f64::from(r);
        term *= (r - f64::from(k)) * z / ((1.5 + r) * (r + 1.0));
        sum += term;
    }
    sum
}

/// `λ(a) = 1 + e^{-3πa} + e^{-2πa}/(1 - e^{-πa})`, the majorant factor with
/// `Ψ(a) < λ(a)·e^{-πa}`.
pub fn lambda_factor(a: f64) -> Result<f64> {
    require_positive("a", a)?;
    Ok(lambda_unchecked(a))
}

pub(crate) fn lambda_unchecked(a: f64) -> f64 {
    1.0 + (-3.0 * PI * a).exp() + (-2.0 * PI * a).exp() / -(-PI * a).exp_m1()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    #[test]
    #[allow(clippy::approx_constant)]
    fn gamma_ratio_small_orders() {
        let sqrt_pi = PI.sqrt();
        assert_eq!(gamma_half_ratio(0), FRAC_2_SQRT_PI);
        assert!((gamma_half_ratio(0) - 1.1283791671).abs() < 1e-10);
        assert!((gamma_half_ratio(1) - 4.0 / (3.0 * sqrt_pi)).abs() < 1e-15);
        assert!((gamma_half_ratio(2) - 16.0 / (15.0 * sqrt_pi)).abs() < 1e-15);
        assert!((gamma_half_ratio(2) - 0.6018023).abs() < 1e-7);
    }

    #[test]
    fn gamma_ratio_recurrence_is_bitwise() {
        let mut prev = gamma_half_ratio(0);
        for m in 1..400u64 {
            let r = gamma_half_ratio(m);
            let mf = m as f64;
            assert_eq!(r, prev * mf / (mf + 0.5), "m = {m}");
            assert!(r < prev);
            prev = r;
        }
    }

    #[test]
    fn gamma_ratio_large_order_matches_asymptotic() {
        // Γ(m+1)/Γ(m+3/2) ~ m^{-1/2}(1 - 3/(8m) + ...)
        let m = 1_000_000u64;
        let r = gamma_half_ratio(m);
        let mf = m as f64;
        let asym = mf.powf(-0.5) * (1.0 - 3.0 / (8.0 * mf) + 25.0 / (128.0 * mf * mf));
        assert!(r.is_finite() && r > 0.0);
        assert!(((r - asym) / asym).abs() < 1e-10, "{r} vs {asym}");
    }

    #[test]
    fn kummer_examples() {
        assert_eq!(kummer_terminating(0, 17.5), 1.0);
        assert!((kummer_terminating(1, 2.0) + 1.0 / 3.0).abs() < 1e-15);
        assert!((kummer_terminating(2, 1.0) + 1.0 / 15.0).abs() < 1e-15);
        for k in 0..40 {
            assert_eq!(kummer_terminating(k, 0.0), 1.0);
        }
    }

    #[test]
    fn lambda_values() {
        assert_eq!(lambda_factor(50.0).unwrap(), 1.0);
        // 1 + e^{-3π} + e^{-2π}/(1 - e^{-π})
        assert!((lambda_factor(1.0).unwrap() - 1.002_032_486_617_482).abs() < 1e-14);
        assert!(matches!(lambda_factor(0.0), Err(Error::Domain(_))));
        assert!(matches!(lambda_factor(-2.0), Err(Error::Domain(_))));
    }

    #[test]
    fn lambda_majorises_theta() {
        // Beyond a ≈ 5 the two sides agree to within an ulp.
        for i in 0..=49 {
            let a = 0.1 + 0.1 * f64::from(i);
            let psi = theta_psi(a, 1e-300).unwrap();
            let lam = lambda_factor(a).unwrap();
            assert!(psi < lam * (-PI * a).exp(), "a = {a}");
            assert!(lam > 1.0);
        }
    }
}
