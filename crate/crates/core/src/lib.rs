//! Ramanujan-type integrals
//!
//! ```text
//! J_n(a) = ∫₀^∞ x e^{-πax²} / (e^{2πx} - 1) · ₁F₁(-n; 3/2; 2πax²) dx
//! ```
//!
//! together with their closed-form approximants `T_n(a)`, the exponentially
//! small remainders `ε_n(a)`, and upper bounds `B_n(a)` on those remainders.
//!
//! The crate is organised bottom-up:
//!
//! - [`specfun`]: gamma ratios, terminating hypergeometric sums (the Gauss
//!   value `₂F₁(-n,1;3/2;2)` in exact rational arithmetic), theta sums and
//!   the factorial-scaled `U` integral.
//! - [`quadrature`]: an adaptive Gauss–Kronrod engine for finite and
//!   semi-infinite ranges, and the integrals `J_n`, `ε_n` built on it.
//! - [`approximants`]: `T_n`, `B_n`, the large-`k` estimate, Ramanujan's
//!   `I(α)` and the DRZ closed-form approximation.
//! - [`verify`]: table reproduction and the identity suite.
//!
//! Every function is pure; nothing holds shared mutable state.

pub mod approximants;
pub mod error;
pub mod quadrature;
pub mod specfun;
pub mod verify;

pub use approximants::{
    bound, bound_asymptotic, bound_even, bound_odd, drz_approx, ramanujan_i, ramanujan_i_approx,
    t_even, t_odd, ApproxReport, BoundForm, DrzMode,
};
pub use error::{Error, Result};
pub use quadrature::{
    epsilon_integral, finite_check_integrals, integrate, j_integral, IntegralParams, Integrator,
    Parity, QuadResult, Tolerance, DEFAULT_TOL,
};
pub use specfun::{
    gamma_half_ratio, gauss_f, kummer_terminating, lambda_factor, theta_psi, u_scaled,
    ExactRational, ThetaSum,
};
pub use verify::{
    check_modular, reproduce_table, run_suite, script_j, SuiteProfile, SuiteReport, TableRow,
};
