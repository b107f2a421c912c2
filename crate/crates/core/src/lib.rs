//! Numerical evaluation of the Riemann zeta function on and around the
//! critical strip, together with the machinery needed to count its zeros.
//!
//! The crate is split by role:
//!
//! * [`special`]: log-Gamma, the Riemann–Siegel theta function and the
//!   theta series `Ψ(x) = Σ e^{-n²πx}`.
//! * [`zeta`]: Euler–Maclaurin evaluation of `ζ(s)`, functional-equation
//!   reflection, trivial values and the completed function `ξ(s)` (both as a
//!   product and through its theta-series integral).
//! * [`riemann_siegel`]: `Z(t)` through the main sum plus correction terms,
//!   and contour quadrature of the integrals appearing in the Riemann–Siegel
//!   integral formula.
//! * [`zeros`]: Gram points, sign-change scanning, zero location, argument
//!   tracking and the reconciliation of the two zero counts.
//!
//! All public operations are pure functions; nothing here holds mutable
//! global state.

pub mod error;
pub mod quadrature;
pub mod riemann_siegel;
pub mod special;
pub mod summation;
pub mod zeros;
pub mod zeta;

pub use error::{Error, Result};
pub use riemann_siegel::{
    correction, f_dual_integral, f_integral, main_sum, phi_closed_form_residual,
    rs_integral_residual, two_re_decomposition, z_function, ContourConfig, ContourIntegral,
    PhiResidual, RsResidual, TwoReDecomposition, ZMethod, ZSample,
};
pub use special::{jacobi_identity_residual, log_gamma, psi, theta, ThetaExpansion};
pub use zeros::{
    arg_zeta_tracked, backlund_count, gram_point, locate_zero, omega_diagnostics,
    scan_sign_changes, verify_equality, BacklundCount, Bracket, GramPoint, OmegaSummary,
    ScanConfig, ScanOutcome, TrackedArg, VerificationReport, ZeroRecord,
};
pub use zeta::{
    functional_equation_residual, trivial_zeta_value, xi, xi_integral, zeta, zeta_reflect,
    EulerMaclaurinConfig, FunctionalResidual, XiIntegral, XiQuadratureConfig,
};

/// Complex scalar used for every point of the `s`-plane.
///
/// Public operations reject NaN and infinite components with
/// [`Error::NonFinite`].
pub type ComplexValue = num_complex::Complex64;

pub(crate) fn ensure_finite(op: &'static str, z: ComplexValue) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite { op })
    }
}

pub(crate) fn ensure_finite_real(op: &'static str, x: f64) -> Result<()> {
    if x.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite { op })
    }
}
