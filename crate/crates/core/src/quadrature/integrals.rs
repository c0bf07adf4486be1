use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::{Integrator, QuadResult, Tolerance};
use crate::error::{require_positive, Result};
use crate::specfun::{gamma_half_ratio, gauss_f, kummer_terminating, theta_sum};

/// Default tolerance of every integral in the crate.
pub const DEFAULT_TOL: f64 = 1e-13;

/// Below this `x` the factor `x/(e^{2πx} - 1)` is taken from its series.
const BOSE_SERIES_CUTOFF: f64 = 1e-4;

/// Parity of the full index `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: u32) -> Self {
        if n % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// `n = 2k` or `n = 2k + 1`.
    pub fn index(self, k: u32) -> u32 {
        match self {
            Parity::Even => 2 * k,
            Parity::Odd => 2 * k + 1,
        }
    }

    /// Sign `σ` in `J_n = σ·T_n + ε_n`.
    pub fn sign(self) -> f64 {
        match self {
            Parity::Even => 1.0,
            Parity::Odd => -1.0,
        }
    }
}

impl std::str::FromStr for Parity {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "even" => Ok(Parity::Even),
            "odd" => Ok(Parity::Odd),
            other => Err(format!("parity must be `even` or `odd`, got `{other}`")),
        }
    }
}

/// One instance `J_n(a)`: full index `n`, scale `a = α/π` and tolerance.
///
/// `tol` is absolute for `J_n`, which is `O(1/24)`, and relative for the
/// exponentially small remainder `ε_n`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IntegralParams {
    pub n: u32,
    pub a: f64,
    pub tol: f64,
}

impl IntegralParams {
    pub fn new(n: u32, a: f64) -> Self {
        Self {
            n,
            a,
            tol: DEFAULT_TOL,
        }
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn parity(&self) -> Parity {
        Parity::of(self.n)
    }

    /// `k` with `n = 2k` or `n = 2k + 1`.
    pub fn k(&self) -> u32 {
        self.n / 2
    }

    pub fn validate(&self) -> Result<()> {
        require_positive("a", self.a)?;
        require_positive("tol", self.tol)
    }
}

/// `J_n(a) = ∫₀^∞ x e^{-πax²}/(e^{2πx}-1) · ₁F₁(-n; 3/2; 2πax²) dx`.
pub fn j_integral(p: &IntegralParams) -> Result<QuadResult> {
    p.validate()?;
    let (n, a) = (p.n, p.a);
    let integrand = move |x: f64| {
        let y = 2.0 * PI * x;
        let weight = if x < BOSE_SERIES_CUTOFF {
            // y/(e^y - 1) = 1 - y/2 + y²/12 - y⁴/720 + ...
            let y2 = y * y;
            (1.0 - 0.5 * y + y2 / 12.0 - y2 * y2 / 720.0) / (2.0 * PI) * (-PI * a * x * x).exp()
        } else {
            x * (-PI * a * x * x - y).exp() / -(-y).exp_m1()
        };
        if weight == 0.0 {
            return 0.0;
        }
        weight * kummer_terminating(n, 2.0 * PI * a * x * x)
    };
    Integrator::new(Tolerance::absolute(p.tol))
        .with_initial_panels(8)
        .integrate(integrand, 0.0, f64::INFINITY)
}

/// Remainder `ε_n(a)`, integrated directly over `[1, ∞)` in the shifted
/// variable `u = t - 1`:
///
/// ```text
/// ε_2k   = 1/(4πa) ∫₀^∞ {ψ + √a·φ} u^{2k}/(2+u)^{2k+3/2} du
/// ε_2k+1 = 1/(4πa) ∫₀^∞ {√a·φ - ψ} u^{2k+1}/(2+u)^{2k+5/2} du
/// ```
///
/// with `ψ = Ψ((1+u)/a)` and `φ = Ψ(a(1+u))`. Never formed as `J - T`:
/// the difference of two `O(10⁻²)` numbers carries no information once
/// `ε` drops below about `10⁻¹⁵`. At `a = 1` the odd integrand vanishes
/// identically and the result is exactly zero.
pub fn epsilon_integral(p: &IntegralParams) -> Result<QuadResult> {
    p.validate()?;
    let (n, a, tol) = (p.n, p.a, p.tol);
    let sqrt_a = a.sqrt();
    let parity = p.parity();
    // Theta sums are truncated relative to their leading term.
    let theta = move |tau: f64| theta_sum(tau, tol * 1e-2 * (-PI * tau).exp());
    let integrand = move |u: f64| {
        let kernel = (u / (2.0 + u)).powi(n as i32) * (2.0 + u).powf(-1.5);
        if kernel == 0.0 {
            return 0.0;
        }
        let t = 1.0 + u;
        let psi = theta(t / a);
        let phi = theta(a * t);
        let s = match parity {
            Parity::Even => psi + sqrt_a * phi,
            Parity::Odd => sqrt_a * phi - psi,
        };
        s * kernel
    };
    // The kernel peaks near u = √(4ka/π) once k is large.
    let scale = (2.0 * f64::from(n) * a.max(1.0 / a) / PI).sqrt().max(1.0);
    Integrator::new(Tolerance::relative(tol))
        .with_scale(scale)
        .with_initial_panels(8)
        .integrate(integrand, 0.0, f64::INFINITY)
        .map(|r| r.scaled(1.0 / (4.0 * PI * a)))
}

/// The two `[0, 1]` integrals behind the closed form of `T_n`, by
/// quadrature, with `m = 2k` (even) or `m = 2k+1` (odd):
///
/// ```text
/// ( ∫₀¹ t^{-1/2}(1-t)^m/(1+t)^{m+3/2} dt,  ∫₀¹ (1-t)^m/(1+t)^{m+3/2} dt )
/// ```
///
/// The first is computed after `t = s²` to remove the endpoint singularity.
pub fn finite_check_integrals(k: u32, parity: Parity) -> Result<(f64, f64)> {
    let m = parity.index(k) as i32;
    let tol = Tolerance::relative(1e-13);
    let first = Integrator::new(tol).integrate(
        |s: f64| {
            let t = s * s;
            2.0 * (1.0 - t).powi(m) * (1.0 + t).powf(-f64::from(m) - 1.5)
        },
        0.0,
        1.0,
    )?;
    let second = Integrator::new(tol).integrate(
        |t: f64| (1.0 - t).powi(m) * (1.0 + t).powf(-f64::from(m) - 1.5),
        0.0,
        1.0,
    )?;
    Ok((first.value, second.value))
}

/// Closed forms of [`finite_check_integrals`]:
/// `√(π/2)·R(m)` and `2F_m ∓ √(π/2)·R(m)` (minus for even `m`, plus for
/// odd), with `R(m) = Γ(m+1)/Γ(m+3/2)` and `F_m = ₂F₁(-m,1;3/2;2)`.
pub fn finite_check_closed_forms(k: u32, parity: Parity) -> (f64, f64) {
    let m = parity.index(k);
    let g = (PI / 2.0).sqrt() * gamma_half_ratio(u64::from(m));
    let f = gauss_f(m).to_f64();
    (g, 2.0 * f - parity.sign() * g)
}
