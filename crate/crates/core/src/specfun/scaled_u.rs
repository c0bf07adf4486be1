use crate::error::{require_positive, Result};
use crate::quadrature::{Integrator, QuadResult, Tolerance};

/// `G_n(z) = ∫₀^∞ e^{-zt} tⁿ (1+t)^{-n-3/2} dt = n!·U(n+1, 1/2, z)`.
///
/// The factorial is folded into the integral: `(2k)!` overflows `f64` for
/// `2k ≥ 171` while `G_{2k}` itself is tiny. `tol` is absolute.
pub fn u_scaled(n: u32, z: f64, tol: f64) -> Result<f64> {
    require_positive("tol", tol)?;
    u_scaled_with(n, z, Tolerance::absolute(tol)).map(|r| r.value)
}

/// [`u_scaled`] with an explicit tolerance and the full quadrature result.
pub fn u_scaled_with(n: u32, z: f64, tol: Tolerance) -> Result<QuadResult> {
    require_positive("z", z)?;
    // The integrand peaks near t = √(n/z) for large n and sits in a layer of
    // width 1/z at the origin for small n.
    let scale = (f64::from(n) / z).sqrt().max(1.0 / z).min(1.0e3);
    let integrand = |t: f64| {
        let decay = (-z * t).exp();
        if decay == 0.0 {
            return 0.0;
        }
        decay * (t / (1.0 + t)).powi(n as i32) * (1.0 + t).powf(-1.5)
    };
    Integrator::new(tol)
        .with_scale(scale)
        .integrate(integrand, 0.0, f64::INFINITY)
}
