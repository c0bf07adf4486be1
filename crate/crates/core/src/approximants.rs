//! Closed-form approximants, remainder bounds and Ramanujan's `I(α)`.
//!
//! With `R(m) = Γ(m+1)/Γ(m+3/2)` and `F_m = ₂F₁(-m,1;3/2;2)`:
//!
//! ```text
//! J_2k   =  T_2k   + ε_2k,    4πa·T_2k   = ((1+√a)/2)·√(π/2)·R(2k)   - F_2k
//! J_2k+1 = -T_2k+1 + ε_2k+1,  4πa·T_2k+1 = ((1-√a)/2)·√(π/2)·R(2k+1) + F_2k+1
//! ```
//!
//! and `|ε_n(a)| < B_n(a)`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{require_positive, Error, Result};
use crate::quadrature::{epsilon_integral, j_integral, IntegralParams, Parity, Tolerance};
use crate::specfun::{gamma_half_ratio, gauss_f, lambda_unchecked, theta_sum, u_scaled_with};

/// Relative accuracy of the `G_n` quadratures inside the bounds.
const BOUND_REL_TOL: f64 = 1e-12;

fn require_k_positive(k: u32) -> Result<()> {
    if k == 0 {
        Err(Error::Domain("k must be a positive integer".into()))
    } else {
        Ok(())
    }
}

/// `T_2k(a)`, `k ≥ 1`.
pub fn t_even(k: u32, a: f64) -> Result<f64> {
    require_k_positive(k)?;
    require_positive("a", a)?;
    let m = 2 * k;
    let gamma_term = 0.5 * (1.0 + a.sqrt()) * (PI / 2.0).sqrt() * gamma_half_ratio(u64::from(m));
    Ok((gamma_term - gauss_f(m).to_f64()) / (4.0 * PI * a))
}

/// `T_2k+1(a)`, `k ≥ 0`. At `a = 1` the gamma term drops out and
/// `T_2k+1(1) = F_2k+1/(4π)`.
pub fn t_odd(k: u32, a: f64) -> Result<f64> {
    require_positive("a", a)?;
    let m = 2 * k + 1;
    let gamma_term = 0.5 * (1.0 - a.sqrt()) * (PI / 2.0).sqrt() * gamma_half_ratio(u64::from(m));
    Ok((gamma_term + gauss_f(m).to_f64()) / (4.0 * PI * a))
}

/// `T_n(a)` for either parity.
pub fn t_value(n: u32, a: f64) -> Result<f64> {
    match Parity::of(n) {
        Parity::Even => t_even(n / 2, a),
        Parity::Odd => t_odd(n / 2, a),
    }
}

/// Which factor stands in front of each `G_n` in the bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundForm {
    /// The theta sum `Ψ(a)` itself.
    Theta,
    /// The majorant `λ(a)·e^{-πa} > Ψ(a)`. This is the form the published
    /// tables were computed with; it is a slightly weaker valid bound.
    Majorant,
}

impl BoundForm {
    fn weight(self, a: f64) -> f64 {
        match self {
            BoundForm::Theta => theta_sum(a, 1e-3 * f64::EPSILON * (-PI * a).exp()),
            BoundForm::Majorant => lambda_unchecked(a) * (-PI * a).exp(),
        }
    }
}

/// `B_n(a) = a^{-3/4}/(4√2π) · {a^{1/4} w(a) G_n(2πa) + a^{-1/4} w(1/a) G_n(2π/a)}`
///
/// where `w` is `Ψ` or its majorant and `G_n(z) = n!·U(n+1, 1/2, z)`, so no
/// factorial is ever formed. `B_n(1/a) = a^{3/2}·B_n(a)`.
pub fn bound(n: u32, a: f64, form: BoundForm) -> Result<f64> {
    require_positive("a", a)?;
    let recip = 1.0 / a;
    let tol = Tolerance::relative(BOUND_REL_TOL);
    let g_direct = u_scaled_with(n, 2.0 * PI * a, tol)?.value;
    let g_recip = u_scaled_with(n, 2.0 * PI * recip, tol)?.value;
    let e_direct = a.powf(0.25) * form.weight(a) * g_direct;
    let e_recip = recip.powf(0.25) * form.weight(recip) * g_recip;
    Ok(a.powf(-0.75) / (4.0 * 2f64.sqrt() * PI) * (e_direct + e_recip))
}

/// Theta-form bound `B_2k(a)` on `ε_2k(a)`, `k ≥ 1`.
pub fn bound_even(k: u32, a: f64) -> Result<f64> {
    require_k_positive(k)?;
    bound(2 * k, a, BoundForm::Theta)
}

/// Theta-form bound `B_2k+1(a)` on `|ε_2k+1(a)|`, `k ≥ 0`. Not sharp
/// near `a = 1`, where `ε_2k+1` vanishes.
pub fn bound_odd(k: u32, a: f64) -> Result<f64> {
    bound(2 * k + 1, a, BoundForm::Theta)
}

/// Large-`k` estimate of `B_2k(a)`:
///
/// ```text
/// a^{-3/4} k^{-1/2}/(8√π) · {a^{1/4} λ(a) e^{-4√(πak)} + a^{-1/4} λ(1/a) e^{-4√(πk/a)}}
/// ```
///
/// Meaningful only for `π/(2k) ≪ a ≪ 2k/π`; this is not checked.
pub fn bound_asymptotic(k: u32, a: f64) -> Result<f64> {
    require_k_positive(k)?;
    require_positive("a", a)?;
    let kf = f64::from(k);
    let recip = 1.0 / a;
    let direct = a.powf(0.25) * lambda_unchecked(a) * (-4.0 * (PI * a * kf).sqrt()).exp();
    let inverse =
        recip.powf(0.25) * lambda_unchecked(recip) * (-4.0 * (PI * kf * recip).sqrt()).exp();
    Ok(a.powf(-0.75) * kf.powf(-0.5) / (8.0 * PI.sqrt()) * (direct + inverse))
}

/// Whether `a` lies in `[π/k, k]`, a conservative reading of the window in
/// which [`bound_asymptotic`] is trustworthy.
pub fn asymptotic_window_contains(k: u32, a: f64) -> bool {
    let kf = f64::from(k);
    k > 0 && a >= PI / kf && a <= kf
}

/// Evaluation mode for the DRZ approximation of `J_2k(a)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DrzMode {
    /// `-F/(4πa)·{1 - (1 + a² + 2πa/(3F))^{1/4}}`
    Closed,
    /// `1/24 + a(F/(16π) - π/(96F))`
    SmallA,
    /// `F/(4π√a)·{1 - a^{-1/2} + π/(6aF)}`
    LargeA,
}

/// DRZ approximation of `J_2k(a)` in closed form.
pub fn drz_approx(k: u32, a: f64) -> Result<f64> {
    drz_approx_with(k, a, DrzMode::Closed)
}

pub fn drz_approx_with(k: u32, a: f64, mode: DrzMode) -> Result<f64> {
    require_positive("a", a)?;
    let f = gauss_f(2 * k).to_f64();
    if f == 0.0 {
        return Err(Error::Domain(format!("F_{} vanishes", 2 * k)));
    }
    match mode {
        DrzMode::Closed => drz_closed(f, a),
        DrzMode::SmallA => Ok(1.0 / 24.0 + a * (f / (16.0 * PI) - PI / (96.0 * f))),
        DrzMode::LargeA => {
            Ok(f / (4.0 * PI * a.sqrt()) * (1.0 - a.powf(-0.5) + PI / (6.0 * a * f)))
        }
    }
}

// Every F_2k tabulated so far is positive, so the radicand check only
// fires for inputs built by hand.
fn drz_closed(f: f64, a: f64) -> Result<f64> {
    let radicand = 1.0 + a * a + 2.0 * PI * a / (3.0 * f);
    if radicand < 0.0 {
        return Err(Error::Domain(format!(
            "negative radicand {radicand} at F = {f}, a = {a}"
        )));
    }
    Ok(-f / (4.0 * PI * a) * (1.0 - radicand.powf(0.25)))
}

/// `I(α) = α^{-1/4}(1 + 4α ∫₀^∞ x e^{-αx²}/(e^{2πx}-1) dx)`, with the
/// integral taken as `J_0(α/π)`.
pub fn ramanujan_i(alpha: f64, tol: f64) -> Result<f64> {
    require_positive("alpha", alpha)?;
    let j0 = j_integral(&IntegralParams::new(0, alpha / PI).with_tol(tol))?.value;
    Ok(alpha.powf(-0.25) * (1.0 + 4.0 * alpha * j0))
}

/// Ramanujan's approximation `(1/α + 1/β + 2/3)^{1/4}`, `αβ = π²`.
pub fn ramanujan_i_approx(alpha: f64) -> Result<f64> {
    require_positive("alpha", alpha)?;
    let beta = PI * PI / alpha;
    Ok((1.0 / alpha + 1.0 / beta + 2.0 / 3.0).powf(0.25))
}

/// One verification row: `J` by quadrature, `T`, `ε`, the theta-form
/// bound, the large-`k` estimate, and `J - σT - ε`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ApproxReport {
    pub params: IntegralParams,
    pub j_quad: f64,
    pub t_value: f64,
    pub epsilon: f64,
    pub bound: f64,
    /// `None` for `n = 1`, where the estimate has `k = 0`.
    pub estimate: Option<f64>,
    pub residual: f64,
}

impl ApproxReport {
    /// Requires `n ≥ 1`.
    pub fn compute(params: &IntegralParams) -> Result<Self> {
        params.validate()?;
        let (n, a) = (params.n, params.a);
        if n == 0 {
            return Err(Error::Domain("index n must be at least 1".into()));
        }
        let j_quad = j_integral(params)?.value;
        let t_value = t_value(n, a)?;
        let epsilon = epsilon_integral(params)?.value;
        let bound = bound(n, a, BoundForm::Theta)?;
        let k = params.k();
        let estimate = if k >= 1 {
            Some(bound_asymptotic(k, a)?)
        } else {
            None
        };
        let residual = j_quad - params.parity().sign() * t_value - epsilon;
        Ok(Self {
            params: *params,
            j_quad,
            t_value,
            epsilon,
            bound,
            estimate,
            residual,
        })
    }
}
