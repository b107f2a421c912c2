//! Zero counting on the critical line.
//!
//! Two independent counts are reconciled:
//!
//! * `N₀(T)`: sign changes of `Z(t)` on `(0, T]`, found on a grid built from
//!   Gram points and a uniform mesh, with local refinement wherever the
//!   samples hint at a hidden pair of zeros.
//! * `N(T) = (θ(T) + arg ζ(½+iT))/π + 1`: the argument principle, with
//!   `arg ζ` tracked continuously along `2 → 2+iT → ½+iT`.
//!
//! Every sign change is a zero on the line, so `N₀ ≤ N`, and zeros off the
//! line come in symmetric pairs, so `N − N₀` is even.

use std::f64::consts::{E, PI};

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::riemann_siegel::{f_integral, z_function, ContourConfig, ZMethod};
use crate::special::{theta, theta_slope_estimate, ThetaExpansion};
use crate::zeta::{zeta_with_estimate, EulerMaclaurinConfig};
use crate::{ensure_finite_real, Error, Result};

/// Principal branch of Lambert W on `[−1/e, ∞)`.
pub fn lambert_w0(x: f64) -> Result<f64> {
    ensure_finite_real("lambert_w0", x)?;
    let branch_point = -1.0 / E;
    if x < branch_point {
        return Err(Error::Domain {
            op: "lambert_w0",
            reason: format!("x = {x} below -1/e"),
        });
    }
    if x == branch_point {
        return Ok(-1.0);
    }
    let mut w = if x < 0.0 {
        -1.0 + (2.0 * (1.0 + E * x)).sqrt()
    } else {
        (1.0 + x).ln()
    };
    for _ in 0..100 {
        let ew = w.exp();
        let f = w * ew - x;
        let wp1 = w + 1.0;
        if wp1.abs() < 1e-300 {
            break;
        }
        // Halley step
        let step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
        w -= step;
        if step.abs() <= 1e-16 * (1.0 + w.abs()) {
            return Ok(w);
        }
    }
    if (w * w.exp() - x).abs() <= 1e-14 * (1.0 + x.abs()) {
        Ok(w)
    } else {
        Err(Error::NoConvergence {
            what: "lambert_w0",
            iterations: 100,
        })
    }
}

/// The `n`-th Gram point: `θ(g) = nπ` on the increasing branch of `θ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GramPoint {
    pub n: i64,
    pub g: f64,
}

const GRAM_MAX_ITERATIONS: u32 = 50;
/// `θ` is increasing beyond its minimum at `t ≈ 6.29`.
const THETA_MINIMUM_T: f64 = 6.29;

pub fn gram_point(n: i64) -> Result<GramPoint> {
    if n < -1 {
        return Err(Error::Domain {
            op: "gram_point",
            reason: format!("n = {n} below -1"),
        });
    }
    let target = n as f64 * PI;
    let x = (8.0 * n as f64 + 1.0) / (8.0 * E);
    let mut g = 2.0 * PI * (1.0 + lambert_w0(x)?).exp();
    for _ in 0..GRAM_MAX_ITERATIONS {
        let value = theta(g, ThetaExpansion::Exact)? - target;
        if value.abs() < 1e-11 * target.abs().max(1.0) {
            return Ok(GramPoint { n, g });
        }
        let h = 1e-6 * g;
        let slope = (theta(g + h, ThetaExpansion::Exact)? - theta(g - h, ThetaExpansion::Exact)?)
            / (2.0 * h);
        let slope = if slope > 0.0 {
            slope
        } else {
            theta_slope_estimate(g).max(1e-3)
        };
        g = (g - value / slope).max(THETA_MINIMUM_T + 0.01);
    }
    Err(Error::NoConvergence {
        what: "gram_point",
        iterations: GRAM_MAX_ITERATIONS,
    })
}

/// Gram points with `t_lo < g < t_hi`.
pub fn gram_points_in(t_lo: f64, t_hi: f64) -> Result<Vec<GramPoint>> {
    let mut out = Vec::new();
    let start = if t_lo <= 17.0 {
        -1
    } else {
        // θ(t_lo)/π rounded down misses at most the first point
        (theta(t_lo, ThetaExpansion::Exact)? / PI).floor() as i64
    };
    let mut n = start;
    loop {
        let gp = gram_point(n)?;
        if gp.g >= t_hi {
            break;
        }
        if gp.g > t_lo {
            out.push(gp);
        }
        n += 1;
    }
    Ok(out)
}

/// Parameters of the sign-change scan.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScanConfig {
    /// Uniform grid points per unit `t`, merged with the Gram points.
    pub base_grid: u32,
    /// Number of 8× refinements allowed inside a suspicious window.
    pub max_depth: u32,
    pub method: ZMethod,
}

impl Default for ScanConfig {
    fn default() -> Self {
        Self {
            base_grid: 8,
            max_depth: 6,
            method: ZMethod::Auto,
        }
    }
}

/// Factor by which the sample density grows at each refinement level.
pub const REFINEMENT_FACTOR: usize = 8;
/// Grid values with `|Z|` below this are nudged off the node.
pub const TIE_THRESHOLD: f64 = 1e-12;

impl ScanConfig {
    pub fn validate(&self) -> Result<()> {
        if !(1..=1024).contains(&self.base_grid) {
            return Err(Error::InvalidConfig(format!(
                "base_grid must lie in 1..=1024, got {}",
                self.base_grid
            )));
        }
        if self.max_depth > 12 {
            return Err(Error::InvalidConfig(format!(
                "max_depth must lie in 0..=12, got {}",
                self.max_depth
            )));
        }
        Ok(())
    }
}

/// An interval across which `Z` changes sign.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
    pub z_lo: f64,
    pub z_hi: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanOutcome {
    /// Disjoint brackets in increasing order.
    pub brackets: Vec<Bracket>,
    /// Windows still suspicious after `max_depth` refinements.
    pub unresolved: Vec<(f64, f64)>,
    /// Deepest refinement level reached.
    pub depth_used: u32,
    pub evaluations: usize,
}

fn eval_nodes(ts: &[f64], method: ZMethod) -> Result<Vec<f64>> {
    ts.par_iter()
        .map(|&t| z_function(t, method).map(|s| s.z))
        .collect()
}

/// Samples `Z` on `ts` (sorted), moving nodes where `|Z|` is below the tie
/// threshold halfway towards their right neighbour (left for the last node).
fn sample(ts: &mut [f64], method: ZMethod, evaluations: &mut usize) -> Result<Vec<f64>> {
    let mut zs = eval_nodes(ts, method)?;
    *evaluations += ts.len();
    for i in 0..ts.len() {
        let mut tries = 0;
        while zs[i].abs() < TIE_THRESHOLD {
            let target = if i + 1 < ts.len() {
                ts[i + 1]
            } else {
                ts[i - 1]
            };
            ts[i] += 0.5 * (target - ts[i]);
            zs[i] = z_function(ts[i], method)?.z;
            *evaluations += 1;
            tries += 1;
            if tries > 40 {
                return Err(Error::Inconsistent {
                    op: "scan_sign_changes",
                    reason: format!("Z vanishes identically near t = {}", ts[i]),
                });
            }
        }
    }
    Ok(zs)
}

/// Whether three same-sign samples around a local minimum of `|Z|` fit a
/// parabola whose extremum crosses zero between the outer nodes.
fn hides_pair(t: [f64; 3], z: [f64; 3]) -> bool {
    if z[0].signum() != z[1].signum() || z[1].signum() != z[2].signum() {
        return false;
    }
    if !(z[1].abs() < z[0].abs() && z[1].abs() < z[2].abs()) {
        return false;
    }
    // Newton form: z0 + d1(x − t0) + d2(x − t0)(x − t1)
    let d01 = (z[1] - z[0]) / (t[1] - t[0]);
    let d12 = (z[2] - z[1]) / (t[2] - t[1]);
    let d2 = (d12 - d01) / (t[2] - t[0]);
    if d2 == 0.0 {
        return false;
    }
    // vertex of the interpolating parabola
    let b = d01 - d2 * (t[0] + t[1]);
    let x = -b / (2.0 * d2);
    if !(x > t[0] && x < t[2]) {
        return false;
    }
    let v = z[0] + d01 * (x - t[0]) + d2 * (x - t[0]) * (x - t[1]);
    v.signum() != z[1].signum()
}

fn collect(
    ts: &[f64],
    zs: &[f64],
    depth: u32,
    cfg: &ScanConfig,
    out: &mut ScanOutcome,
) -> Result<()> {
    out.depth_used = out.depth_used.max(depth);
    let mut i = 0;
    while i + 1 < ts.len() {
        if zs[i].signum() != zs[i + 1].signum() {
            out.brackets.push(Bracket {
                lo: ts[i],
                hi: ts[i + 1],
                z_lo: zs[i],
                z_hi: zs[i + 1],
            });
            i += 1;
            continue;
        }
        if i + 2 < ts.len()
            && hides_pair([ts[i], ts[i + 1], ts[i + 2]], [zs[i], zs[i + 1], zs[i + 2]])
        {
            let (lo, hi) = (ts[i], ts[i + 2]);
            if depth >= cfg.max_depth {
                out.unresolved.push((lo, hi));
            } else {
                let n = 2 * REFINEMENT_FACTOR;
                let mut fine: Vec<f64> = (0..=n)
                    .map(|k| lo + (hi - lo) * k as f64 / n as f64)
                    .collect();
                fine[0] = lo;
                fine[n] = hi;
                let mut inner = fine[1..n].to_vec();
                let inner_z = sample(&mut inner, cfg.method, &mut out.evaluations)?;
                let mut fz = Vec::with_capacity(n + 1);
                fz.push(zs[i]);
                fz.extend(inner_z);
                fz.push(zs[i + 2]);
                fine[1..n].copy_from_slice(&inner);
                collect(&fine, &fz, depth + 1, cfg, out)?;
            }
            i += 2;
            continue;
        }
        i += 1;
    }
    Ok(())
}

/// Brackets every sign change of `Z` on `[t_lo, t_hi]`.
pub fn scan_sign_changes(t_lo: f64, t_hi: f64, cfg: &ScanConfig) -> Result<ScanOutcome> {
    ensure_finite_real("scan_sign_changes", t_lo)?;
    ensure_finite_real("scan_sign_changes", t_hi)?;
    cfg.validate()?;
    if !(t_lo >= 0.0 && t_lo < t_hi) {
        return Err(Error::Domain {
            op: "scan_sign_changes",
            reason: format!("need 0 <= t_lo < t_hi, got [{t_lo}, {t_hi}]"),
        });
    }
    let steps = ((t_hi - t_lo) * cfg.base_grid as f64).ceil().max(1.0) as usize;
    let mut ts: Vec<f64> = (0..=steps)
        .map(|k| t_lo + (t_hi - t_lo) * k as f64 / steps as f64)
        .collect();
    ts[steps] = t_hi;
    ts.extend(gram_points_in(t_lo, t_hi)?.into_iter().map(|g| g.g));
    ts.sort_by(f64::total_cmp);
    let min_gap = 1e-9 * (1.0 + t_hi);
    ts.dedup_by(|b, a| (*b - *a).abs() < min_gap);

    let mut out = ScanOutcome {
        brackets: Vec::new(),
        unresolved: Vec::new(),
        depth_used: 0,
        evaluations: 0,
    };
    let zs = sample(&mut ts, cfg.method, &mut out.evaluations)?;
    collect(&ts, &zs, 0, cfg, &mut out)?;
    out.brackets.sort_by(|a, b| a.lo.total_cmp(&b.lo));
    Ok(out)
}

/// A located zero of `Z`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ZeroRecord {
    /// Ordinal among all zeros above the real axis, starting at 1.
    pub index: u64,
    pub t: f64,
    pub bracket: (f64, f64),
    /// `|Z(t)|`.
    pub residual: f64,
    pub width: f64,
    pub method: ZMethod,
}

/// Target bracket width for [`locate_zero`].
pub const ZERO_WIDTH: f64 = 1e-9;

/// Shrinks `bracket` to width `≤ 1e-9` by Illinois steps, falling back to
/// bisection whenever two steps fail to halve the interval.
pub fn locate_zero(bracket: &Bracket, index: u64, method: ZMethod) -> Result<ZeroRecord> {
    let (mut lo, mut hi) = (bracket.lo, bracket.hi);
    let mut f_lo = z_function(lo, method)?.z;
    let mut f_hi = z_function(hi, method)?.z;
    if f_lo.signum() == f_hi.signum() && f_lo != 0.0 && f_hi != 0.0 {
        return Err(Error::NoSignChange { lo, hi });
    }
    let mut last_side = 0i8;
    let mut width_two_ago = f64::INFINITY;
    let mut width_one_ago = hi - lo;
    let mut exact = None;
    let mut iterations = 0;
    while hi - lo > ZERO_WIDTH && exact.is_none() {
        iterations += 1;
        if iterations > 400 {
            return Err(Error::NoConvergence {
                what: "locate_zero",
                iterations,
            });
        }
        let width = hi - lo;
        let mut c = if width > 0.5 * width_two_ago {
            0.5 * (lo + hi)
        } else {
            (lo * f_hi - hi * f_lo) / (f_hi - f_lo)
        };
        if !(c > lo && c < hi) {
            c = 0.5 * (lo + hi);
        }
        let f_c = z_function(c, method)?.z;
        width_two_ago = width_one_ago;
        if f_c == 0.0 {
            exact = Some(c);
        } else if f_c.signum() == f_lo.signum() {
            lo = c;
            f_lo = f_c;
            if last_side == -1 {
                f_hi *= 0.5;
            }
            last_side = -1;
        } else {
            hi = c;
            f_hi = f_c;
            if last_side == 1 {
                f_lo *= 0.5;
            }
            last_side = 1;
        }
        width_one_ago = hi - lo;
    }
    let t = match exact {
        Some(c) => {
            lo = c;
            hi = c;
            c
        }
        None => {
            // interpolate with the true endpoint values
            let a = z_function(lo, method)?.z;
            let b = z_function(hi, method)?.z;
            let c = (lo * b - hi * a) / (b - a);
            if c >= lo && c <= hi {
                c
            } else {
                0.5 * (lo + hi)
            }
        }
    };
    let sample = z_function(t, method)?;
    Ok(ZeroRecord {
        index,
        t,
        bracket: (lo, hi),
        residual: sample.z.abs(),
        width: hi - lo,
        method: sample.method,
    })
}

/// Continuous `arg ζ(½+iT)` reached along `2 → 2+iT → ½+iT`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TrackedArg {
    /// Height actually used, after any shift off a zero.
    pub t: f64,
    pub arg: f64,
    /// Whether `T` was moved by `+1e-6` because `ζ(½+iT)` vanished.
    pub shifted: bool,
    pub steps: u32,
}

/// Largest `σ`-step on the horizontal leg.
pub const ARG_MAX_STEP: f64 = 0.1;
/// Smallest step before tracking gives up.
pub const ARG_MIN_STEP: f64 = 1e-9;
const ARG_SHIFT: f64 = 1e-6;
const ARG_ZERO_THRESHOLD: f64 = 1e-10;

fn zeta_at(sigma: f64, t: f64) -> Result<Complex64> {
    let s = Complex64::new(sigma, t);
    Ok(zeta_with_estimate(s, &EulerMaclaurinConfig::for_point(s))?.value)
}

/// Principal `arg(b/a)`.
fn phase_step(a: Complex64, b: Complex64) -> f64 {
    (b * a.conj()).arg()
}

pub fn arg_zeta_tracked(t: f64) -> Result<TrackedArg> {
    arg_zeta_tracked_with(t, ARG_MAX_STEP)
}

/// [`arg_zeta_tracked`] with an explicit cap on the `σ`-step.
pub fn arg_zeta_tracked_with(t: f64, max_step: f64) -> Result<TrackedArg> {
    ensure_finite_real("arg_zeta_tracked", t)?;
    if t < 0.0 {
        return Err(Error::Domain {
            op: "arg_zeta_tracked",
            reason: format!("T = {t} is negative"),
        });
    }
    if !(max_step > ARG_MIN_STEP && max_step <= 0.5) {
        return Err(Error::InvalidConfig(format!(
            "max_step must lie in ({ARG_MIN_STEP}, 0.5], got {max_step}"
        )));
    }
    if t == 0.0 {
        // passing above the pole at s = 1 turns the argument by −π
        return Ok(TrackedArg {
            t,
            arg: -PI,
            shifted: false,
            steps: 0,
        });
    }
    let mut t = t;
    let mut shifted = false;
    for _ in 0..8 {
        if zeta_at(0.5, t)?.norm() >= ARG_ZERO_THRESHOLD {
            break;
        }
        t += ARG_SHIFT;
        shifted = true;
    }
    // |ζ(2+it) − 1| ≤ ζ(2) − 1 < 1, so the principal value is continuous
    // along the vertical leg
    let mut z = zeta_at(2.0, t)?;
    let mut arg = z.arg();
    let mut sigma = 2.0;
    let mut h = max_step;
    let mut steps = 0;
    while sigma > 0.5 {
        let step = h.min(sigma - 0.5);
        let next = if step == sigma - 0.5 {
            0.5
        } else {
            sigma - step
        };
        let z_next = zeta_at(next, t)?;
        let z_mid = zeta_at(0.5 * (sigma + next), t)?;
        let d = phase_step(z, z_next);
        let d1 = phase_step(z, z_mid);
        let d2 = phase_step(z_mid, z_next);
        if d.abs() < 0.5 * PI
            && d1.abs() < 0.5 * PI
            && d2.abs() < 0.5 * PI
            && (d1 + d2 - d).abs() < 1e-9
        {
            arg += d;
            sigma = next;
            z = z_next;
            steps += 1;
            h = (2.0 * h).min(max_step);
        } else {
            h *= 0.5;
            if h < ARG_MIN_STEP {
                return Err(Error::StepCollapse { sigma, t });
            }
        }
    }
    Ok(TrackedArg {
        t,
        arg,
        shifted,
        steps,
    })
}

/// `N(T)` from the argument principle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BacklundCount {
    /// Height used (see [`TrackedArg::shifted`]).
    pub t: f64,
    pub theta: f64,
    pub arg: f64,
    /// `(θ + arg)/π + 1` before rounding.
    pub raw: f64,
    pub count: u64,
    /// `|raw − count|`.
    pub distance: f64,
    pub shifted: bool,
}

/// Largest accepted distance of the raw count from an integer.
pub const ROUNDING_TOLERANCE: f64 = 0.05;

pub fn backlund_count(t: f64) -> Result<BacklundCount> {
    let tracked = arg_zeta_tracked(t)?;
    let th = theta(tracked.t, ThetaExpansion::Exact)?;
    let raw = (th + tracked.arg) / PI + 1.0;
    let nearest = raw.round();
    let distance = (raw - nearest).abs();
    if distance >= ROUNDING_TOLERANCE || nearest < 0.0 {
        return Err(Error::RoundingAmbiguity {
            t: tracked.t,
            distance,
        });
    }
    Ok(BacklundCount {
        t: tracked.t,
        theta: th,
        arg: tracked.arg,
        raw,
        count: nearest as u64,
        distance,
        shifted: tracked.shifted,
    })
}

/// Both zero counts at one height.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    #[serde(rename = "T")]
    pub t: f64,
    pub n_argument: u64,
    pub n0_signchanges: u64,
    /// `arg ζ(½+iT)/π`.
    #[serde(rename = "s_of_T")]
    pub s_of_t: f64,
    pub equal: bool,
    /// Distance of `θ(T) + arg ζ(½+iT)` from the nearest multiple of `π`.
    pub lemma_residual: f64,
    pub refinement_depth: u32,
    /// Scans repeated with a doubled grid after a mismatch.
    pub retries: u32,
    pub unresolved: Vec<(f64, f64)>,
}

impl VerificationReport {
    /// `N − N₀` is even and non-negative.
    pub fn parity_holds(&self) -> bool {
        self.n_argument >= self.n0_signchanges
            && (self.n_argument - self.n0_signchanges).is_multiple_of(2)
    }
}

/// Rescans allowed after a count mismatch.
pub const VERIFY_RETRIES: u32 = 3;

/// Counts zeros up to `T` both ways. A mismatch is reported, never an
/// error; the scan is repeated with a doubled grid up to three times first.
pub fn verify_equality(t: f64, cfg: &ScanConfig) -> Result<VerificationReport> {
    ensure_finite_real("verify_equality", t)?;
    if t < 0.0 {
        return Err(Error::Domain {
            op: "verify_equality",
            reason: format!("T = {t} is negative"),
        });
    }
    cfg.validate()?;
    let n = backlund_count(t)?;
    let mut scan_cfg = *cfg;
    let mut retries = 0;
    let (n0, depth, unresolved) = loop {
        let (n0, depth, unresolved) = if n.t > 0.0 {
            let scan = scan_sign_changes(0.0, n.t, &scan_cfg)?;
            (scan.brackets.len() as u64, scan.depth_used, scan.unresolved)
        } else {
            (0, 0, Vec::new())
        };
        if n0 == n.count || retries >= VERIFY_RETRIES {
            break (n0, depth, unresolved);
        }
        retries += 1;
        scan_cfg.base_grid = scan_cfg.base_grid.saturating_mul(2).min(1024);
    };
    Ok(VerificationReport {
        t: n.t,
        n_argument: n.count,
        n0_signchanges: n0,
        s_of_t: n.arg / PI,
        equal: n.count == n0,
        lemma_residual: n.distance * PI,
        refinement_depth: depth,
        retries,
        unresolved,
    })
}

/// One sample of `ω(t) = θ(t) + arg f(½+it)` on its continuous branch.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OmegaSample {
    pub t: f64,
    pub omega: f64,
    /// `|f(½+it)|`.
    pub r: f64,
}

/// Empirical picture of `ω(t)` over `[t_lo, t_hi]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OmegaSummary {
    pub samples: Vec<OmegaSample>,
    /// `ω(0)`, the start of the tracked branch.
    pub omega_at_zero: f64,
    /// Whether `−3π/2 ≤ ω(0) ≤ −π/2`.
    pub omega_at_zero_in_range: bool,
    /// Earliest sampled crossing of `ω = 0` (linear interpolation).
    pub t_m: Option<f64>,
    /// Whether every sample after `t_m` has `ω > 0`.
    pub positive_after_t_m: bool,
    /// `⌊ω(t_hi)/π + ½⌋`.
    pub floor_count: i64,
    /// Sign changes of `Z` on `(0, t_hi]`.
    pub n0_signchanges: u64,
    /// Samples with `r > 1e-6` where `sign cos ω ≠ sign Z`.
    pub sign_mismatches: usize,
}

/// Spacing of the reported `ω` samples.
pub const OMEGA_SAMPLE_STEP: f64 = 0.25;

fn omega_raw(t: f64, cfg: &ContourConfig) -> Result<(Complex64, f64)> {
    let f = f_integral(Complex64::new(0.5, t), cfg)?.value;
    Ok((f, theta(t, ThetaExpansion::Exact)?))
}

pub fn omega_diagnostics(t_lo: f64, t_hi: f64, cfg: &ContourConfig) -> Result<OmegaSummary> {
    ensure_finite_real("omega_diagnostics", t_lo)?;
    ensure_finite_real("omega_diagnostics", t_hi)?;
    if !(t_lo >= 0.0 && t_lo < t_hi && t_hi <= crate::riemann_siegel::CONTOUR_MAX_ABS_T) {
        return Err(Error::Domain {
            op: "omega_diagnostics",
            reason: format!("need 0 <= t_lo < t_hi <= 200, got [{t_lo}, {t_hi}]"),
        });
    }
    // the branch is fixed at t = 0 by the principal argument of f(½)
    let (mut f, mut th) = omega_raw(0.0, cfg)?;
    let mut arg_f = f.arg();
    let omega_at_zero = th + arg_f;
    let mut t = 0.0;
    let mut samples = Vec::new();
    let mut next_out = t_lo;
    let mut h = OMEGA_SAMPLE_STEP;
    if t_lo == 0.0 {
        samples.push(OmegaSample {
            t: 0.0,
            omega: omega_at_zero,
            r: f.norm(),
        });
        next_out += OMEGA_SAMPLE_STEP;
    }
    let mut sign_mismatches = 0;
    while next_out <= t_hi + 1e-12 {
        let target = next_out.min(t_hi);
        let step = h.min(target - t);
        let t_next = if step == target - t { target } else { t + step };
        let (f_next, th_next) = omega_raw(t_next, cfg)?;
        let (f_mid, _) = omega_raw(0.5 * (t + t_next), cfg)?;
        let d = phase_step(f, f_next);
        let d1 = phase_step(f, f_mid);
        let d2 = phase_step(f_mid, f_next);
        if d.abs() < 0.5 * PI && (d1 + d2 - d).abs() < 1e-9 {
            arg_f += d;
            t = t_next;
            f = f_next;
            th = th_next;
            h = (2.0 * h).min(OMEGA_SAMPLE_STEP);
            if t == target {
                let omega = th + arg_f;
                let r = f.norm();
                if r > 1e-6 {
                    let z = z_function(t, ZMethod::EulerMaclaurin)?.z;
                    if z != 0.0 && omega.cos().signum() != z.signum() {
                        sign_mismatches += 1;
                    }
                }
                samples.push(OmegaSample { t, omega, r });
                next_out += OMEGA_SAMPLE_STEP;
            }
        } else {
            h *= 0.5;
            if h < ARG_MIN_STEP {
                return Err(Error::StepCollapse { sigma: 0.5, t });
            }
        }
    }
    let mut t_m = None;
    let mut prev: Option<OmegaSample> = None;
    let mut all = vec![OmegaSample {
        t: 0.0,
        omega: omega_at_zero,
        r: 0.0,
    }];
    all.extend(samples.iter().copied().filter(|s| s.t > 0.0));
    for s in &all {
        if let Some(p) = prev {
            if p.omega < 0.0 && s.omega >= 0.0 && t_m.is_none() {
                t_m = Some(p.t + (s.t - p.t) * (-p.omega) / (s.omega - p.omega));
            }
        }
        prev = Some(*s);
    }
    let positive_after_t_m = match t_m {
        Some(tm) => samples.iter().filter(|s| s.t > tm).all(|s| s.omega > 0.0),
        None => false,
    };
    let last = samples.last().map(|s| s.omega).unwrap_or(omega_at_zero);
    let n0 = scan_sign_changes(0.0, t_hi, &ScanConfig::default())?
        .brackets
        .len() as u64;
    Ok(OmegaSummary {
        samples,
        omega_at_zero,
        omega_at_zero_in_range: (-1.5 * PI..=-0.5 * PI).contains(&omega_at_zero),
        t_m,
        positive_after_t_m,
        floor_count: (last / PI + 0.5).floor() as i64,
        n0_signchanges: n0,
        sign_mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lambert_w_inverts() {
        for x in [-0.36, -0.3, -0.1, 0.0, 0.5, 1.0, E, 10.0, 1e3, 1e6] {
            let w = lambert_w0(x).unwrap();
            assert!((w * w.exp() - x).abs() < 1e-12 * (1.0 + x.abs()), "x = {x}");
        }
        assert_eq!(lambert_w0(E).unwrap(), 1.0);
        assert!(lambert_w0(-0.5).is_err());
    }

    #[test]
    fn gram_reference_points() {
        let refs = [
            (-1, 9.666_908_056_130_192),
            (0, 17.845_599_540_410_86),
            (1, 23.170_282_701_246_31),
            (100, 238.582_590_514_502_9),
        ];
        for (n, g) in refs {
            let gp = gram_point(n).unwrap();
            assert!((gp.g - g).abs() < 1e-9, "n = {n}: {}", gp.g);
        }
        assert!(gram_point(-2).is_err());
    }

    #[test]
    fn gram_bisection_oracle() {
        // bisection on θ(t) − nπ over the increasing branch
        for n in [-1i64, 3, 57, 999] {
            let target = n as f64 * PI;
            let (mut lo, mut hi) = (6.3f64, 1e4f64);
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if theta(mid, ThetaExpansion::Exact).unwrap() < target {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            assert!((gram_point(n).unwrap().g - lo).abs() < 1e-9, "n = {n}");
        }
    }

    #[test]
    fn gram_points_in_range_are_complete() {
        let pts = gram_points_in(20.0, 100.0).unwrap();
        assert_eq!(pts.first().unwrap().n, 1);
        for w in pts.windows(2) {
            assert_eq!(w[1].n, w[0].n + 1);
        }
        assert!(gram_point(pts.last().unwrap().n + 1).unwrap().g >= 100.0);
    }

    #[test]
    fn parabola_detector() {
        // a shallow dip that does not cross
        assert!(!hides_pair([0.0, 1.0, 2.0], [1.0, 0.5, 1.0]));
        // samples consistent with (x−0.9)(x−1.1)
        let f = |x: f64| (x - 0.9) * (x - 1.1);
        assert!(hides_pair([0.0, 1.05, 2.0], [f(0.0), f(1.05), f(2.0)]) || f(1.05) < 0.0);
        let g = |x: f64| (x - 0.95) * (x - 1.05) * 4.0;
        assert!(hides_pair([0.0, 0.8, 2.0], [g(0.0), g(0.8), g(2.0)]));
    }

    #[test]
    fn scan_examples() {
        let cfg = ScanConfig::default();
        assert!(scan_sign_changes(0.0, 10.0, &cfg)
            .unwrap()
            .brackets
            .is_empty());
        let one = scan_sign_changes(14.0, 15.0, &cfg).unwrap();
        assert_eq!(one.brackets.len(), 1);
        assert!(one.brackets[0].lo < 14.134_725 && one.brackets[0].hi > 14.134_725);
        let all = scan_sign_changes(0.0, 100.0, &cfg).unwrap();
        assert_eq!(all.brackets.len(), 29);
        assert!(all.unresolved.is_empty());
        for w in all.brackets.windows(2) {
            assert!(w[0].hi <= w[1].lo);
        }
        assert!(scan_sign_changes(5.0, 5.0, &cfg).is_err());
    }

    #[test]
    fn located_zeros_match_references() {
        let scan = scan_sign_changes(0.0, 102.0, &ScanConfig::default()).unwrap();
        let refs = [
            (1, 14.134_725_141_734_694),
            (2, 21.022_039_638_771_555),
            (3, 25.010_857_580_145_689),
            (29, 98.831_194_218_193_69),
            (30, 101.317_851_005_731_39),
        ];
        for (k, want) in refs {
            let z = locate_zero(&scan.brackets[k - 1], k as u64, ZMethod::EulerMaclaurin).unwrap();
            assert!((z.t - want).abs() < 1e-9, "zero {k}: {}", z.t);
            assert!(z.width <= ZERO_WIDTH);
            assert!(z.residual <= 1e-6);
        }
        let bad = Bracket {
            lo: 15.0,
            hi: 16.0,
            z_lo: 0.0,
            z_hi: 0.0,
        };
        assert!(matches!(
            locate_zero(&bad, 1, ZMethod::EulerMaclaurin),
            Err(Error::NoSignChange { .. })
        ));
    }

    #[test]
    fn arg_tracking_limits_and_stability() {
        assert_eq!(arg_zeta_tracked(0.0).unwrap().arg, -PI);
        let coarse = arg_zeta_tracked(100.0).unwrap();
        let fine = arg_zeta_tracked_with(100.0, 0.05).unwrap();
        assert!((coarse.arg - fine.arg).abs() < 1e-8);
        // tiny T approaches the T = 0 convention
        let small = arg_zeta_tracked(1e-3).unwrap().arg;
        assert!((small + PI).abs() < 1e-2, "{small}");
    }

    #[test]
    fn backlund_examples() {
        assert_eq!(backlund_count(10.0).unwrap().count, 0);
        assert_eq!(backlund_count(50.0).unwrap().count, 10);
        assert_eq!(backlund_count(100.0).unwrap().count, 29);
        assert_eq!(backlund_count(0.0).unwrap().count, 0);
    }

    #[test]
    fn backlund_shifts_off_a_zero() {
        let b = backlund_count(14.134_725_141_734_694).unwrap();
        assert!(b.shifted);
        assert_eq!(b.count, 1);
    }

    #[test]
    fn verify_examples() {
        let cfg = ScanConfig::default();
        let r5 = verify_equality(5.0, &cfg).unwrap();
        assert!(r5.equal && r5.n_argument == 0);
        let r100 = verify_equality(100.0, &cfg).unwrap();
        assert!(r100.equal && r100.n_argument == 29 && r100.n0_signchanges == 29);
        assert!(r100.parity_holds());
        assert!(r100.lemma_residual < 0.05 * PI);
    }

    #[test]
    fn omega_examples() {
        let s = omega_diagnostics(0.0, 40.0, &ContourConfig::default()).unwrap();
        assert!(s.omega_at_zero_in_range);
        assert_eq!(s.sign_mismatches, 0);
        assert_eq!(s.samples.first().unwrap().t, 0.0);
        assert!((s.samples.last().unwrap().t - 40.0).abs() < 1e-12);
    }
}
