//! Scalar building blocks: complex log-Gamma, the Riemann–Siegel theta
//! function and the theta series `Ψ(x) = Σ_{n≥1} e^{-n²πx}`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::{ensure_finite, ensure_finite_real, ComplexValue, Error, Result};

/// `½·ln(2π)`.
const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_8;

/// Stirling-series coefficients `B_{2k} / (2k(2k-1))`, k = 1..=10.
///
/// Exact rationals from the Bernoulli numbers B2..B20 (Abramowitz & Stegun,
/// table 23.2); the first omitted term is below 1.3e-20 once `|z| ≥ 10`.
const STIRLING: [f64; 10] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
    43_867.0 / 244_188.0,
    -174_611.0 / 125_400.0,
];

/// Radius beyond which the Stirling series is used without shifting.
const STIRLING_RADIUS: f64 = 10.0;

fn stirling(z: Complex64) -> Complex64 {
    let inv = z.inv();
    let inv2 = inv * inv;
    // Horner in 1/z²
    let mut series = Complex64::new(0.0, 0.0);
    for &c in STIRLING.iter().rev() {
        series = series * inv2 + c;
    }
    (z - 0.5) * z.ln() - z + HALF_LN_TWO_PI + series * inv
}

/// Principal branch of `ln Γ(z)`.
///
/// Points with small modulus or negative real part are moved into the
/// Stirling region with `ln Γ(z) = ln Γ(z+K) − Σ_{k<K} ln(z+k)`. Using the
/// principal logarithm for every factor reproduces the principal branch
/// (cut along the negative real axis), so the imaginary part is continuous
/// along any path that avoids the cut.
pub fn log_gamma(z: ComplexValue) -> Result<ComplexValue> {
    ensure_finite("log_gamma", z)?;
    if z.im.abs() < 1e-12 && z.re < 0.5 && (z.re - z.re.round()).abs() < 1e-12 {
        return Err(Error::Pole {
            op: "log_gamma",
            at: format!("{}", z.re.round()),
        });
    }
    let mut shifted = z;
    let mut log_prod = Complex64::new(0.0, 0.0);
    while shifted.re < 0.0 || shifted.norm() < STIRLING_RADIUS {
        log_prod += shifted.ln();
        shifted += 1.0;
    }
    Ok(stirling(shifted) - log_prod)
}

/// Evaluation mode for the Riemann–Siegel theta function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ThetaExpansion {
    /// `Im ln Γ(¼ + it/2) − (t/2)·ln π`.
    #[default]
    Exact,
    /// `t/2·ln(t/2π) − t/2 − π/8` plus `order` correction terms
    /// `1/(48t)`, `7/(5760t³)`, `31/(80640t⁵)`. Only valid for `t ≥ 10`.
    Asymptotic { order: u8 },
}

/// Smallest `t` at which the asymptotic expansion is accepted.
pub const THETA_ASYMPTOTIC_MIN_T: f64 = 10.0;

/// The Riemann–Siegel theta function `θ(t) = arg[π^{-s/2} Γ(s/2)]` at
/// `s = ½ + it`, on its continuous branch with `θ(0) = 0`.
pub fn theta(t: f64, mode: ThetaExpansion) -> Result<f64> {
    ensure_finite_real("theta", t)?;
    if t < 0.0 {
        return Err(Error::Domain {
            op: "theta",
            reason: format!("t = {t} is negative"),
        });
    }
    match mode {
        ThetaExpansion::Exact => {
            let lg = log_gamma(Complex64::new(0.25, 0.5 * t))?;
            Ok(lg.im - 0.5 * t * PI.ln())
        }
        ThetaExpansion::Asymptotic { order } => {
            if order > 3 {
                return Err(Error::UnsupportedOrder(order.into()));
            }
            if t < THETA_ASYMPTOTIC_MIN_T {
                return Err(Error::Domain {
                    op: "theta",
                    reason: format!("asymptotic mode needs t >= {THETA_ASYMPTOTIC_MIN_T}, got {t}"),
                });
            }
            Ok(theta_asymptotic(t, order))
        }
    }
}

fn theta_asymptotic(t: f64, order: u8) -> f64 {
    const TERMS: [(f64, i32); 3] = [(1.0 / 48.0, 1), (7.0 / 5760.0, 3), (31.0 / 80_640.0, 5)];
    let lead = 0.5 * t * (t / (2.0 * PI)).ln() - 0.5 * t - PI / 8.0;
    TERMS
        .iter()
        .take(order as usize)
        .fold(lead, |acc, &(c, p)| acc + c / t.powi(p))
}

/// Derivative of the leading asymptotic term, `½·ln(t/2π)`.
pub(crate) fn theta_slope_estimate(t: f64) -> f64 {
    0.5 * (t / (2.0 * PI)).ln()
}

/// `Ψ(x) = Σ_{n≥1} e^{-n²πx}`, truncated once the next term drops below
/// `1e-18` of the running sum.
pub fn psi(x: f64) -> Result<f64> {
    ensure_finite_real("psi", x)?;
    if x <= 0.0 {
        return Err(Error::Domain {
            op: "psi",
            reason: format!("x = {x} must be positive"),
        });
    }
    Ok(psi_unchecked(x))
}

pub(crate) fn psi_unchecked(x: f64) -> f64 {
    let mut sum = 0.0;
    let mut n = 1.0_f64;
    loop {
        let term = (-n * n * PI * x).exp();
        sum += term;
        n += 1.0;
        let next = (-n * n * PI * x).exp();
        if next < 1e-18 * sum || next == 0.0 {
            return sum;
        }
    }
}

/// `|√x·(1 + 2Ψ(x)) − (1 + 2Ψ(1/x))|`, the residual of the Jacobi
/// transformation of `ϑ(x) = Σ_{n∈ℤ} e^{-n²πx}`.
pub fn jacobi_identity_residual(x: f64) -> Result<f64> {
    ensure_finite_real("jacobi_identity_residual", x)?;
    if x <= 0.0 {
        return Err(Error::Domain {
            op: "jacobi_identity_residual",
            reason: format!("x = {x} must be positive"),
        });
    }
    let lhs = x.sqrt() * (1.0 + 2.0 * psi_unchecked(x));
    let rhs = 1.0 + 2.0 * psi_unchecked(x.recip());
    Ok((lhs - rhs).abs())
}
