use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{require_positive, Result};

/// An evaluated theta sum `Ψ(τ) = Σ_{n≥1} e^{-πn²τ}`.
///
/// `0 < value < e^{-πτ}/(1 - e^{-πτ})`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThetaSum {
    pub tau: f64,
    pub tol: f64,
    pub value: f64,
    /// Number of terms summed.
    pub terms: u32,
}

impl ThetaSum {
    pub fn new(tau: f64, tol: f64) -> Result<Self> {
        require_positive("tau", tau)?;
        require_positive("tol", tol)?;
        let (value, terms) = theta_sum_counted(tau, tol);
        Ok(Self {
            tau,
            tol,
            value,
            terms,
        })
    }
}

/// `Ψ(τ)` to within `tol` absolute.
///
/// Summation stops before the first term with `e^{-πn²τ} < tol·(1 - e^{-πτ})`;
/// the omitted tail is majorised by that term over `1 - e^{-πτ}`.
pub fn theta_psi(tau: f64, tol: f64) -> Result<f64> {
    ThetaSum::new(tau, tol).map(|s| s.value)
}

/// Unchecked [`theta_psi`] for use inside integrands. A zero `tol` is
/// allowed; summation then runs until the terms underflow.
pub(crate) fn theta_sum(tau: f64, tol: f64) -> f64 {
    theta_sum_counted(tau, tol).0
}

fn theta_sum_counted(tau: f64, tol: f64) -> (f64, u32) {
    let cutoff = tol * -(-PI * tau).exp_m1();
    let mut sum = 0.0;
    let mut n = 1u32;
    let mut term = (-PI * tau).exp();
    loop {
        sum += term;
        let next_n = f64::from(n + 1);
        let next = (-PI * next_n * next_n * tau).exp();
        if next < cutoff || next == 0.0 {
            return (sum, n);
        }
        term = next;
        n += 1;
    }
}
