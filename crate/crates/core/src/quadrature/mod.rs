//! Adaptive Gauss–Kronrod quadrature and the integrals built on it.
//!
//! The engine bisects the panel with the largest error estimate until the
//! summed estimate meets the [`Tolerance`]. An infinite upper limit is
//! mapped onto `[0, 1)` by `t = lower + L·s/(1-s)`, with a length scale `L`
//! chosen by the caller to put the bulk of the integrand near `s = 1/2`.

mod integrals;
mod kronrod;

pub use integrals::{
    epsilon_integral, finite_check_closed_forms, finite_check_integrals, j_integral,
    IntegralParams, Parity, DEFAULT_TOL,
};

use serde::{Deserialize, Serialize};

use crate::error::{require_positive, Error, Result};
use kronrod::Panel;

/// Value, absolute error estimate and number of integrand evaluations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub evaluations: u64,
}

impl QuadResult {
    /// Multiply value and error estimate by a constant factor.
    pub fn scaled(self, factor: f64) -> Self {
        Self {
            value: self.value * factor,
            abs_error_estimate: self.abs_error_estimate * factor.abs(),
            evaluations: self.evaluations,
        }
    }
}

/// Stopping rule: the summed error estimate must not exceed
/// `max(abs, rel·|value|)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
}

impl Tolerance {
    pub fn absolute(abs: f64) -> Self {
        Self { abs, rel: 0.0 }
    }

    pub fn relative(rel: f64) -> Self {
        Self { abs: 0.0, rel }
    }

    fn target(&self, value: f64) -> f64 {
        self.abs.max(self.rel * value.abs())
    }

    fn validate(&self) -> Result<()> {
        let ok = |x: f64| x >= 0.0 && x.is_finite();
        if ok(self.abs) && ok(self.rel) && (self.abs > 0.0 || self.rel > 0.0) {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "tolerance must be non-negative with one component positive, got abs={} rel={}",
                self.abs, self.rel
            )))
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Integrator {
    tolerance: Tolerance,
    max_panels: usize,
    initial_panels: usize,
    scale: f64,
}

impl Integrator {
    pub const DEFAULT_MAX_PANELS: usize = 2000;

    pub fn new(tolerance: Tolerance) -> Self {
        Self {
            tolerance,
            max_panels: Self::DEFAULT_MAX_PANELS,
            initial_panels: 4,
            scale: 1.0,
        }
    }

    /// Length scale `L` of the map used for an infinite upper limit.
    pub fn with_scale(mut self, scale: f64) -> Self {
        self.scale = scale;
        self
    }

    pub fn with_max_panels(mut self, max_panels: usize) -> Self {
        self.max_panels = max_panels.max(1);
        self
    }

    pub fn with_initial_panels(mut self, panels: usize) -> Self {
        self.initial_panels = panels.max(1);
        self
    }

    /// `∫_lower^upper f`. `upper` may be `+∞`; `lower` must be finite.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F, lower: f64, upper: f64) -> Result<QuadResult> {
        self.tolerance.validate()?;
        require_positive("scale", self.scale)?;
        if !lower.is_finite() || upper.is_nan() || upper == f64::NEG_INFINITY {
            return Err(Error::Domain(format!(
                "integration range [{lower}, {upper}] must have a finite lower limit"
            )));
        }
        if upper == f64::INFINITY {
            let scale = self.scale;
            let mapped = |s: f64| {
                let d = 1.0 - s;
                let t = lower + scale * s / d;
                let y = f(t);
                if y == 0.0 {
                    0.0
                } else {
                    y * scale / (d * d)
                }
            };
            self.adaptive(&mapped, 0.0, 1.0)
        } else if upper < lower {
            self.adaptive(&f, upper, lower).map(|r| r.scaled(-1.0))
        } else {
            self.adaptive(&f, lower, upper)
        }
    }

    fn adaptive<F: Fn(f64) -> f64>(&self, f: &F, lo: f64, hi: f64) -> Result<QuadResult> {
        let mut evaluations = 0u64;
        let mut run = |a: f64, b: f64| -> Result<Panel> {
            evaluations += kronrod::NODES;
            kronrod::panel(f, a, b).map_err(Error::NonFinite)
        };

        let n0 = self.initial_panels.min(self.max_panels);
        let width = (hi - lo) / n0 as f64;
        let mut panels = Vec::with_capacity(self.max_panels.min(4096));
        for i in 0..n0 {
            let a = lo + width * i as f64;
            let b = if i + 1 == n0 {
                hi
            } else {
                lo + width * (i + 1) as f64
            };
            panels.push(run(a, b)?);
        }

        loop {
            let value: f64 = panels.iter().map(|p| p.value).sum();
            let error: f64 = panels.iter().map(|p| p.error).sum();
            let done = error <= self.tolerance.target(value);
            let worst = panels
                .iter()
                .enumerate()
                .fold(
                    (0, -1.0),
                    |acc, (i, p)| if p.error > acc.1 { (i, p.error) } else { acc },
                )
                .0;
            let Panel { lo: a, hi: b, .. } = panels[worst];
            let mid = 0.5 * (a + b);
            let splittable = mid > a && mid < b;
            if done || panels.len() >= self.max_panels || !splittable {
                let result = QuadResult {
                    value,
                    abs_error_estimate: error,
                    evaluations,
                };
                return if done {
                    Ok(result)
                } else {
                    Err(Error::Accuracy {
                        best: result,
                        requested: self.tolerance.target(value),
                    })
                };
            }
            let left = run(a, mid)?;
            let right = run(mid, b)?;
            panels[worst] = left;
            panels.push(right);
        }
    }
}

/// `∫_lower^upper f` to absolute tolerance `tol` with default settings.
pub fn integrate<F: Fn(f64) -> f64>(f: F, lower: f64, upper: f64, tol: f64) -> Result<QuadResult> {
    require_positive("tol", tol)?;
    Integrator::new(Tolerance::absolute(tol)).integrate(f, lower, upper)
}
