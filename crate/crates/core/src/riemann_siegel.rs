//! Critical-line machinery: `Z(t)` from the Riemann–Siegel main sum and its
//! correction terms, and contour quadrature for the integrals of the
//! Riemann–Siegel integral formula
//!
//! ```text
//! π^{-s/2}Γ(s/2)ζ(s) = π^{-s/2}Γ(s/2)·f(s) + π^{-(1-s)/2}Γ((1-s)/2)·f*(s)
//! f(s)  = ∫_{0↙1} x^{-s} e^{iπx²} / (e^{iπx} − e^{-iπx}) dx
//! f*(s) = ∫_{0↘1} x^{s-1} e^{-iπx²} / (e^{iπx} − e^{-iπx}) dx
//! ```
//!
//! Both contours are straight lines of slope ±1 crossing the real axis
//! between 0 and 1. For quadrature the line is moved right to cross at
//! `N + crossing` with `N = ⌊√(|t|/2π)⌋`, so that it runs through the saddle
//! point of the integrand; the poles at `x = 1..=N` that are swept over
//! contribute the residue sums `Σ n^{-s}` and `Σ n^{s-1}`. On the line through
//! the saddle the integrand is a damped Gaussian and no cancellation occurs.

use std::f64::consts::{FRAC_PI_4, PI, SQRT_2};

use num_complex::Complex64;
use serde::Serialize;

use crate::quadrature::integrate_doubling;
use crate::special::{theta, ThetaExpansion};
use crate::summation::{CompensatedComplexSum, CompensatedSum};
use crate::zeta::{completion_factor, zeta_with_estimate, EulerMaclaurinConfig};
use crate::{ensure_finite, ensure_finite_real, ComplexValue, Error, Result};

/// Smallest `t` accepted by the main sum (`M ≥ 1`).
pub const MAIN_SUM_MIN_T: f64 = 2.0 * PI;
/// Smallest `t` at which correction terms are evaluated.
pub const CORRECTION_MIN_T: f64 = 30.0;
/// Height from which [`ZMethod::Auto`] switches to Riemann–Siegel order 3.
pub const AUTO_RS_MIN_T: f64 = 1000.0;
/// Largest `|ℑs|` accepted by the contour integrals.
pub const CONTOUR_MAX_ABS_T: f64 = 200.0;

const CONTOUR_REL_TOL: f64 = 1e-10;
const CONTOUR_MAX_LEVELS: u32 = 12;
/// Relative to `max(1, |I|)`.
const CONTOUR_MAX_ERROR: f64 = 1e-8;

/// `2·Σ_{n=1}^{M} cos(θ(t) − t·ln n)/√n` with `M = ⌊√(t/2π)⌋`.
pub fn main_sum(t: f64) -> Result<f64> {
    ensure_finite_real("main_sum", t)?;
    if t < MAIN_SUM_MIN_T {
        return Err(Error::Domain {
            op: "main_sum",
            reason: format!("t = {t} below 2π"),
        });
    }
    let th = theta(t, ThetaExpansion::Exact)?;
    let m = (t / (2.0 * PI)).sqrt().floor() as u64;
    let sum: CompensatedSum = (1..=m)
        .map(|n| {
            let n = n as f64;
            (th - t * n.ln()).cos() / n.sqrt()
        })
        .collect();
    Ok(2.0 * sum.value())
}

/// `C₀(p) = cos(2π(p² − p − 1/16)) / cos(2πp)` for real `p`.
///
/// The ratio is entire; where `|cos 2πp| < 1e-3` (near `p = ¼` and `¾`
/// modulo ½) it is rewritten as a ratio of `sinc` functions, each expanded
/// to fourth order.
pub fn c0(p: f64) -> f64 {
    let den = (2.0 * PI * p).cos();
    if den.abs() >= 1e-3 {
        return (2.0 * PI * (p * p - p - 1.0 / 16.0)).cos() / den;
    }
    // zeros of cos 2πp sit at p0 = ¼ + k/2
    let k = ((p - 0.25) * 2.0).round();
    let p0 = 0.25 + 0.5 * k;
    let h = p - p0;
    // p² − p − 1/16 = q0 + (2p0 − 1)h + h², and at p0 the cosine vanishes:
    // numerator = cos(π/2·odd + 2π((2p0−1)h + h²)), denominator likewise
    let a = 2.0 * PI * ((2.0 * p0 - 1.0) * h + h * h);
    let b = 2.0 * PI * h;
    let q0 = p0 * p0 - p0 - 1.0 / 16.0;
    // cos(2πq0 + a) = −sin(a)·sin(2πq0) (cos(2πq0) = 0); same for the denominator
    let sin_num = (2.0 * PI * q0).sin();
    let sin_den = (2.0 * PI * p0).sin();
    let ratio = if b == 0.0 {
        // a/b as h → 0
        2.0 * p0 - 1.0
    } else {
        (a / b) * sinc4(a) / sinc4(b)
    };
    ratio * sin_num / sin_den
}

fn sinc4(x: f64) -> f64 {
    let x2 = x * x;
    1.0 - x2 / 6.0 + x2 * x2 / 120.0
}

fn c0_complex(z: Complex64) -> Complex64 {
    (2.0 * PI * (z * z - z - 1.0 / 16.0)).cos() / (2.0 * PI * z).cos()
}

const CAUCHY_RADIUS: f64 = 0.5;
const CAUCHY_NODES: usize = 64;

/// `C₀^{(k)}(p)` for k = 0..=9 from the Cauchy integral on a circle of
/// radius ½, discretised with the trapezoidal rule (nodes offset by half a
/// step so none lands on the real axis).
fn c0_derivatives(p: f64) -> [f64; 10] {
    let samples: Vec<(Complex64, Complex64)> = (0..CAUCHY_NODES)
        .map(|j| {
            let phi = 2.0 * PI * (j as f64 + 0.5) / CAUCHY_NODES as f64;
            let e = Complex64::from_polar(1.0, phi);
            (e, c0_complex(p + CAUCHY_RADIUS * e))
        })
        .collect();
    let mut out = [0.0; 10];
    let mut fact = 1.0;
    for (k, slot) in out.iter_mut().enumerate() {
        if k > 0 {
            fact *= k as f64;
        }
        let mut acc = CompensatedComplexSum::new();
        for (e, v) in &samples {
            acc.add(v * e.powi(-(k as i32)));
        }
        *slot = (acc.value() * fact / (CAUCHY_NODES as f64 * CAUCHY_RADIUS.powi(k as i32))).re;
    }
    out[0] = c0(p);
    out
}

/// The coefficient functions `C₀..C₃` at fractional part `p`.
pub fn correction_coefficients(p: f64) -> [f64; 4] {
    let d = c0_derivatives(p);
    let pi2 = PI * PI;
    let pi4 = pi2 * pi2;
    let pi6 = pi4 * pi2;
    [
        d[0],
        -d[3] / (96.0 * pi2),
        d[2] / (64.0 * pi2) + d[6] / (18_432.0 * pi4),
        -d[1] / (64.0 * pi2) - d[5] / (3840.0 * pi4) - d[9] / (5_308_416.0 * pi6),
    ]
}

/// Riemann–Siegel remainder through order `order`:
/// `(−1)^{N−1}·τ^{−1/4}·Σ_{k≤order} C_k(p)·τ^{−k/2}` with `τ = t/2π`,
/// `N = ⌊√τ⌋` and `p = √τ − N`.
pub fn correction(t: f64, order: u32) -> Result<f64> {
    ensure_finite_real("correction", t)?;
    if order > 3 {
        return Err(Error::UnsupportedOrder(order));
    }
    if t < CORRECTION_MIN_T {
        return Err(Error::Domain {
            op: "correction",
            reason: format!("t = {t} below {CORRECTION_MIN_T}"),
        });
    }
    Ok(correction_unchecked(t, order))
}

/// The correction formula without the domain check; below `t = 30` it is
/// an extrapolation.
pub(crate) fn correction_unchecked(t: f64, order: u32) -> f64 {
    let tau = t / (2.0 * PI);
    let a = tau.sqrt();
    let n = a.floor();
    let p = a - n;
    let coeffs = if order == 0 {
        [c0(p), 0.0, 0.0, 0.0]
    } else {
        correction_coefficients(p)
    };
    let step = tau.powf(-0.5);
    let mut scale = 1.0;
    let mut sum = 0.0;
    for c in coeffs.iter().take(order as usize + 1) {
        sum += c * scale;
        scale *= step;
    }
    let sign = if (n as u64) % 2 == 1 { 1.0 } else { -1.0 };
    sign * tau.powf(-0.25) * sum
}

/// How `Z(t)` is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ZMethod {
    /// Main sum plus correction terms through `order` (0..=3); `t ≥ 30`.
    RiemannSiegel { order: u32 },
    /// `Re(e^{iθ(t)}·ζ(½+it))` with Euler–Maclaurin `ζ`.
    EulerMaclaurin,
    /// Euler–Maclaurin below [`AUTO_RS_MIN_T`], Riemann–Siegel order 3 above.
    Auto,
}

impl ZMethod {
    pub fn resolve(self, t: f64) -> ZMethod {
        match self {
            ZMethod::Auto if t >= AUTO_RS_MIN_T => ZMethod::RiemannSiegel { order: 3 },
            ZMethod::Auto => ZMethod::EulerMaclaurin,
            m => m,
        }
    }

    /// Short tag used in tables: `rs` or `em`.
    pub fn tag(self) -> &'static str {
        match self {
            ZMethod::RiemannSiegel { .. } => "rs",
            ZMethod::EulerMaclaurin => "em",
            ZMethod::Auto => "auto",
        }
    }
}

/// One evaluation of `Z` on the critical line.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ZSample {
    pub t: f64,
    pub z: f64,
    pub theta: f64,
    pub zeta: ComplexValue,
    pub method: ZMethod,
    pub err_bound: f64,
}

/// Constants `c_k` in the remainder bound `|R_k(t)| ≤ c_k·t^{−(2k+3)/4}`
/// for `t ≥ 200` (Gabcke's bounds).
pub const RS_BOUND_CONSTANTS: [f64; 4] = [0.127, 0.053, 0.011, 0.031];

/// The same constants for `30 ≤ t < 200`, where Gabcke's bounds are not
/// proven and are slightly exceeded: 1.25 times the largest ratio observed
/// against Euler–Maclaurin on a grid of step 0.0137.
pub const RS_BOUND_CONSTANTS_LOW: [f64; 4] = [0.155, 0.067, 0.0145, 0.037];

/// Height separating the two constant tables.
pub const RS_BOUND_SWITCH_T: f64 = 200.0;

/// Rounding floor added to Euler–Maclaurin bounds.
const EM_ROUNDING_FLOOR: f64 = 1e-11;

pub fn rs_error_bound(t: f64, order: u32) -> f64 {
    let table = if t >= RS_BOUND_SWITCH_T {
        &RS_BOUND_CONSTANTS
    } else {
        &RS_BOUND_CONSTANTS_LOW
    };
    table[order.min(3) as usize] * t.powf(-(2.0 * order as f64 + 3.0) / 4.0)
}

/// `Z(t) = e^{iθ(t)}·ζ(½+it)`, real for real `t`.
pub fn z_function(t: f64, method: ZMethod) -> Result<ZSample> {
    ensure_finite_real("z_function", t)?;
    if t < 0.0 {
        return Err(Error::Domain {
            op: "z_function",
            reason: format!("t = {t} is negative"),
        });
    }
    let th = theta(t, ThetaExpansion::Exact)?;
    match method.resolve(t) {
        ZMethod::RiemannSiegel { order } => {
            if order > 3 {
                return Err(Error::UnsupportedOrder(order));
            }
            if t < CORRECTION_MIN_T {
                return Err(Error::Domain {
                    op: "z_function",
                    reason: format!("Riemann-Siegel needs t >= {CORRECTION_MIN_T}, got {t}"),
                });
            }
            let z = main_sum(t)? + correction(t, order)?;
            Ok(ZSample {
                t,
                z,
                theta: th,
                zeta: Complex64::from_polar(1.0, -th) * z,
                method: ZMethod::RiemannSiegel { order },
                err_bound: rs_error_bound(t, order),
            })
        }
        _ => {
            let s = Complex64::new(0.5, t);
            let zv = zeta_with_estimate(s, &EulerMaclaurinConfig::for_point(s))?;
            let rotated = Complex64::from_polar(1.0, th) * zv.value;
            if rotated.im.abs() >= 1e-9 {
                return Err(Error::Inconsistent {
                    op: "z_function",
                    reason: format!("Im(e^(i theta) zeta) = {:.3e} at t = {t}", rotated.im),
                });
            }
            Ok(ZSample {
                t,
                z: rotated.re,
                theta: th,
                zeta: zv.value,
                method: ZMethod::EulerMaclaurin,
                err_bound: zv.error_estimate + EM_ROUNDING_FLOOR,
            })
        }
    }
}

/// Line geometry and quadrature budget for the contour integrals.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ContourConfig {
    /// Fractional position in (0, 1) where the line crosses the real axis,
    /// before the shift by `N`.
    pub crossing: f64,
    /// Half-length of the integration window along the line, centred on the
    /// point nearest the saddle.
    pub half_length: f64,
    /// Initial Gauss panel count.
    pub panels: usize,
}

impl Default for ContourConfig {
    fn default() -> Self {
        Self {
            crossing: 0.5,
            half_length: 5.0,
            panels: 8,
        }
    }
}

impl ContourConfig {
    pub fn validate(&self, op: &'static str) -> Result<()> {
        if !(self.crossing > 0.0 && self.crossing < 1.0) {
            return Err(Error::InvalidConfig(format!(
                "crossing must lie in (0, 1), got {}",
                self.crossing
            )));
        }
        let distance = self.crossing.min(1.0 - self.crossing) / SQRT_2;
        if distance < 1e-3 {
            return Err(Error::PoleProximity { op, distance });
        }
        if !(self.half_length >= 4.0 && self.half_length <= 50.0) {
            return Err(Error::InvalidConfig(format!(
                "half_length must lie in [4, 50], got {}",
                self.half_length
            )));
        }
        if self.panels == 0 || self.panels > 4096 {
            return Err(Error::InvalidConfig(format!(
                "panels must lie in 1..=4096, got {}",
                self.panels
            )));
        }
        Ok(())
    }
}

/// Value of a contour integral with its quadrature diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContourIntegral {
    pub value: ComplexValue,
    pub error_estimate: f64,
    /// Number of residues picked up when shifting the line (`N`).
    pub residues: u64,
    pub panels: usize,
}

/// `1 / (e^{iπx} − e^{−iπx})` without overflow away from the real axis.
fn inv_two_i_sin(x: Complex64) -> Complex64 {
    let i = Complex64::i();
    if x.im >= 0.0 {
        (i * PI * x).exp() / ((2.0 * PI * i * x).exp() - 1.0)
    } else {
        (-i * PI * x).exp() / (1.0 - (-2.0 * PI * i * x).exp())
    }
}

struct Line {
    origin: f64,
    dir: Complex64,
    w_lo: f64,
    w_hi: f64,
}

impl Line {
    /// Line through `origin` with direction `dir`, windowed around the
    /// projection of `saddle`.
    fn around(origin: f64, dir: Complex64, saddle: Complex64, half_length: f64) -> Self {
        let w0 = ((saddle - origin) * dir.conj()).re;
        Self {
            origin,
            dir,
            w_lo: w0 - half_length,
            w_hi: w0 + half_length,
        }
    }

    /// `∫ g(x) dx` along the line in the direction of `dir`.
    fn integrate<G>(&self, g: G, panels: usize, op: &'static str) -> Result<(Complex64, f64, usize)>
    where
        G: Fn(Complex64) -> Complex64,
    {
        let h = |w: f64| g(self.origin + w * self.dir) * self.dir;
        let r = integrate_doubling(
            &h,
            self.w_lo,
            self.w_hi,
            panels,
            CONTOUR_REL_TOL,
            1e-15,
            CONTOUR_MAX_LEVELS,
        );
        if !r.converged || r.error_estimate > CONTOUR_MAX_ERROR * r.value.norm().max(1.0) {
            return Err(Error::QuadratureStall {
                op,
                estimate: r.error_estimate,
                levels: r.levels,
            });
        }
        Ok((r.value, r.error_estimate, r.panels))
    }
}

fn check_contour_domain(op: &'static str, s: ComplexValue) -> Result<()> {
    ensure_finite(op, s)?;
    if !(s.re > 0.0 && s.re < 1.0) {
        return Err(Error::Domain {
            op,
            reason: format!("Re s = {} must lie in (0, 1)", s.re),
        });
    }
    if s.im.abs() > CONTOUR_MAX_ABS_T {
        return Err(Error::Domain {
            op,
            reason: format!("|Im s| = {} exceeds {CONTOUR_MAX_ABS_T}", s.im.abs()),
        });
    }
    Ok(())
}

fn residue_count(t: f64) -> u64 {
    (t.abs() / (2.0 * PI)).sqrt().floor() as u64
}

/// Principal square root with non-negative real part.
fn saddle_root(w: Complex64) -> Complex64 {
    let r = w.sqrt();
    if r.re < 0.0 {
        -r
    } else {
        r
    }
}

/// `f(s) = ∫_{0↙1} x^{-s} e^{iπx²} / (e^{iπx} − e^{-iπx}) dx`, the line
/// running from upper right to lower left.
pub fn f_integral(s: ComplexValue, cfg: &ContourConfig) -> Result<ContourIntegral> {
    check_contour_domain("f_integral", s)?;
    cfg.validate("f_integral")?;
    let i = Complex64::i();
    let n = residue_count(s.im);
    let origin = n as f64 + cfg.crossing;
    let dir = Complex64::from_polar(1.0, FRAC_PI_4);
    let saddle = saddle_root(s / (2.0 * PI * i));
    let line = Line::around(origin, dir, saddle, cfg.half_length);
    let g = |x: Complex64| (-s * x.ln() + i * PI * x * x).exp() * inv_two_i_sin(x);
    let (upward, err, panels) = line.integrate(g, cfg.panels, "f_integral")?;
    let residues: CompensatedComplexSum = (1..=n).map(|k| (-s * (k as f64).ln()).exp()).collect();
    Ok(ContourIntegral {
        value: residues.value() - upward,
        error_estimate: err,
        residues: n,
        panels,
    })
}

/// `f*(s) = ∫_{0↘1} x^{s-1} e^{-iπx²} / (e^{iπx} − e^{-iπx}) dx`, the line
/// running from upper left to lower right. On the critical line this equals
/// `conj(f(s))`; in general `f*(s) = conj(f(1 − s̄))`.
pub fn f_dual_integral(s: ComplexValue, cfg: &ContourConfig) -> Result<ContourIntegral> {
    check_contour_domain("f_dual_integral", s)?;
    cfg.validate("f_dual_integral")?;
    let i = Complex64::i();
    let n = residue_count(s.im);
    let origin = n as f64 + cfg.crossing;
    let dir = Complex64::from_polar(1.0, -FRAC_PI_4);
    let saddle = saddle_root((s - 1.0) / (2.0 * PI * i));
    let line = Line::around(origin, dir, saddle, cfg.half_length);
    let g = |x: Complex64| ((s - 1.0) * x.ln() - i * PI * x * x).exp() * inv_two_i_sin(x);
    let (downward, err, panels) = line.integrate(g, cfg.panels, "f_dual_integral")?;
    let residues: CompensatedComplexSum = (1..=n)
        .map(|k| ((s - 1.0) * (k as f64).ln()).exp())
        .collect();
    Ok(ContourIntegral {
        value: residues.value() + downward,
        error_estimate: err,
        residues: n,
        panels,
    })
}

/// Residual of the Riemann–Siegel integral formula at `s`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RsResidual {
    /// `|π^{-s/2}Γ(s/2)ζ(s) − π^{-s/2}Γ(s/2)f(s) − π^{-(1-s)/2}Γ((1-s)/2)f*(s)|`.
    pub absolute: f64,
    /// `absolute / |π^{-s/2}Γ(s/2)|`: the same residual in units of `ζ`,
    /// which does not decay like `e^{-π|t|/4}`.
    pub scaled: f64,
}

pub fn rs_integral_residual(s: ComplexValue, cfg: &ContourConfig) -> Result<RsResidual> {
    check_contour_domain("rs_integral_residual", s)?;
    let g_s = completion_factor(s)?;
    let g_1s = completion_factor(1.0 - s)?;
    let z = zeta_with_estimate(s, &EulerMaclaurinConfig::for_point(s))?.value;
    let f = f_integral(s, cfg)?.value;
    let fd = f_dual_integral(s, cfg)?.value;
    let absolute = (g_s * z - g_s * f - g_1s * fd).norm();
    Ok(RsResidual {
        absolute,
        scaled: absolute / g_s.norm(),
    })
}

/// `Z(t)` computed directly and through `2·r·cos ω` with `r = |f(½+it)|`,
/// `ω = θ(t) + arg f(½+it)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TwoReDecomposition {
    pub t: f64,
    pub z_direct: f64,
    pub z_via_f: f64,
    pub r: f64,
    /// `θ(t)` plus the principal argument of `f(½+it)`.
    pub omega: f64,
}

impl TwoReDecomposition {
    pub fn residual(&self) -> f64 {
        (self.z_direct - self.z_via_f).abs()
    }
}

pub fn two_re_decomposition(t: f64, cfg: &ContourConfig) -> Result<TwoReDecomposition> {
    ensure_finite_real("two_re_decomposition", t)?;
    if !(0.0..=CONTOUR_MAX_ABS_T).contains(&t) {
        return Err(Error::Domain {
            op: "two_re_decomposition",
            reason: format!("t = {t} outside [0, {CONTOUR_MAX_ABS_T}]"),
        });
    }
    let direct = z_function(t, ZMethod::EulerMaclaurin)?;
    let f = f_integral(Complex64::new(0.5, t), cfg)?.value;
    let r = f.norm();
    let omega = direct.theta + f.arg();
    Ok(TwoReDecomposition {
        t,
        z_direct: direct.z,
        z_via_f: 2.0 * r * omega.cos(),
        r,
        omega,
    })
}

/// Right-hand side `1/(1 − e^{−2πiu}) − e^{πiu²}/(e^{πiu} − e^{−πiu})`.
pub fn phi_closed_form(u: ComplexValue) -> ComplexValue {
    let i = Complex64::i();
    1.0 / (1.0 - (-2.0 * PI * i * u).exp())
        - (PI * i * u * u).exp() / ((PI * i * u).exp() - (-PI * i * u).exp())
}

/// `∫_{0↖1} e^{−πix² + 2πiux} / (e^{πix} − e^{−πix}) dx`, the line of slope
/// −1 running from lower right to upper left.
///
/// The line is moved to cross at `⌊ℜu + ℑu⌋ + ½` so it passes next to the
/// saddle `x = u`; the poles swept over contribute `∓Σ e^{2πiun}`.
pub fn phi_integral(u: ComplexValue) -> Result<ContourIntegral> {
    ensure_finite("phi_integral", u)?;
    let i = Complex64::i();
    let crossing = (u.re + u.im).floor() + 0.5;
    let dir = Complex64::from_polar(1.0, 3.0 * FRAC_PI_4);
    let line = Line::around(crossing, dir, u, 6.0);
    let g = |x: Complex64| (-PI * i * x * x + 2.0 * PI * i * u * x).exp() * inv_two_i_sin(x);
    let (shifted, err, panels) = line.integrate(g, 8, "phi_integral")?;
    let k = crossing.floor() as i64;
    let mut residues = CompensatedComplexSum::new();
    let mut count = 0;
    if k >= 1 {
        for n in 1..=k {
            residues.add(-(2.0 * PI * i * u * n as f64).exp());
            count += 1;
        }
    } else {
        for n in (k + 1)..=0 {
            residues.add((2.0 * PI * i * u * n as f64).exp());
            count += 1;
        }
    }
    Ok(ContourIntegral {
        value: shifted + residues.value(),
        error_estimate: err,
        residues: count,
        panels,
    })
}

/// Minimum distance from `u` to an integer accepted by
/// [`phi_closed_form_residual`].
pub const PHI_POLE_DISTANCE: f64 = 0.05;

/// Residual of the closed form for the `0↖1` integral.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhiResidual {
    /// `|LHS − RHS|`.
    pub absolute: f64,
    /// `max(1, |first term|, |second term|)` of the closed form.
    pub scale: f64,
    /// `absolute / scale`. For `ℑ(u²)` away from zero the second term grows
    /// like `e^{−πℑ(u²)}`, beyond what an absolute bound can resolve in
    /// double precision.
    pub scaled: f64,
}

pub fn phi_closed_form_residual(u: ComplexValue) -> Result<PhiResidual> {
    ensure_finite("phi_closed_form_residual", u)?;
    let distance = (u - u.re.round()).norm();
    if distance < PHI_POLE_DISTANCE {
        return Err(Error::PoleProximity {
            op: "phi_closed_form_residual",
            distance,
        });
    }
    let i = Complex64::i();
    let lhs = phi_integral(u)?.value;
    let first = 1.0 / (1.0 - (-2.0 * PI * i * u).exp());
    let second = (PI * i * u * u).exp() / ((PI * i * u).exp() - (-PI * i * u).exp());
    let absolute = (lhs - (first - second)).norm();
    let scale = first.norm().max(second.norm()).max(1.0);
    Ok(PhiResidual {
        absolute,
        scale,
        scaled: absolute / scale,
    })
}
