//! Reference evaluation of `ζ(s)` and of the completed function
//! `ξ(s) = ½·s(s−1)·π^{-s/2}·Γ(s/2)·ζ(s)`.
//!
//! `ζ` is summed with Euler–Maclaurin for `ℜs ≥ 0` and reflected through
//! the functional equation for `ℜs < 0`. `ξ` is available both as the
//! product above and as the theta-series integral
//! `½ + ½s(s−1)∫_1^∞ Ψ(x)(x^{s/2−1} + x^{−(s+1)/2}) dx`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::quadrature::integrate_doubling;
use crate::special::{log_gamma, psi_unchecked};
use crate::summation::CompensatedComplexSum;
use crate::{ensure_finite, ComplexValue, Error, Result};

/// Bernoulli numbers `B_{2k}` for k = 0..=16 as exact fractions.
const BERNOULLI_EVEN: [(i64, i64); 17] = [
    (1, 1),
    (1, 6),
    (-1, 30),
    (1, 42),
    (-1, 30),
    (5, 66),
    (-691, 2730),
    (7, 6),
    (-3617, 510),
    (43_867, 798),
    (-174_611, 330),
    (854_513, 138),
    (-236_364_091, 2730),
    (8_553_103, 6),
    (-23_749_461_029, 870),
    (8_615_841_276_005, 14_322),
    (-7_709_321_041_217, 510),
];

/// Largest Bernoulli index accepted in [`EulerMaclaurinConfig`]; one more
/// entry is kept to estimate the truncation error.
pub const MAX_BERNOULLI_ORDER: u32 = 30;

/// Euler–Maclaurin error estimate above which a configuration is refused.
pub const EM_ERROR_LIMIT: f64 = 1e-8;

fn bernoulli_even(k: usize) -> f64 {
    let (n, d) = BERNOULLI_EVEN[k];
    n as f64 / d as f64
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EulerMaclaurinConfig {
    /// Length `N` of the direct sum.
    pub cutoff: u64,
    /// Highest Bernoulli index used; even and at most 30.
    pub bernoulli_order: u32,
}

impl EulerMaclaurinConfig {
    pub const DEFAULT_ORDER: u32 = 20;

    /// Minimum cutoff accepted at height `t`.
    pub fn min_cutoff(t: f64) -> u64 {
        (t.abs() / 2.0).ceil() as u64 + 10
    }

    /// Default configuration at `s`: `N = ⌈|ℑs|/2⌉ + 10`, Bernoulli order 20.
    pub fn for_point(s: ComplexValue) -> Self {
        Self {
            cutoff: Self::min_cutoff(s.im),
            bernoulli_order: Self::DEFAULT_ORDER,
        }
    }

    /// The stricter profile: longer direct sum and all tabulated terms.
    pub fn strict_for_point(s: ComplexValue) -> Self {
        Self {
            cutoff: Self::min_cutoff(s.im) + 20,
            bernoulli_order: MAX_BERNOULLI_ORDER,
        }
    }

    fn validate(&self, s: ComplexValue) -> Result<()> {
        if !self.bernoulli_order.is_multiple_of(2)
            || self.bernoulli_order == 0
            || self.bernoulli_order > MAX_BERNOULLI_ORDER
        {
            return Err(Error::InvalidConfig(format!(
                "bernoulli_order must be even in 2..={MAX_BERNOULLI_ORDER}, got {}",
                self.bernoulli_order
            )));
        }
        let need = Self::min_cutoff(s.im);
        if self.cutoff < need {
            return Err(Error::InvalidConfig(format!(
                "cutoff {} below {need} required at Im s = {}",
                self.cutoff, s.im
            )));
        }
        Ok(())
    }
}

/// A `ζ` value with the magnitude of the first omitted Euler–Maclaurin term.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaValue {
    pub value: ComplexValue,
    pub error_estimate: f64,
}

fn is_pole(s: ComplexValue) -> bool {
    (s - 1.0).norm() < 1e-15
}

/// `ζ(s)`: Euler–Maclaurin for `ℜs ≥ 0`, [`zeta_reflect`] for `ℜs < 0`.
pub fn zeta(s: ComplexValue, cfg: &EulerMaclaurinConfig) -> Result<ComplexValue> {
    zeta_with_estimate(s, cfg).map(|z| z.value)
}

/// [`zeta`] at the default configuration for `s`.
pub fn zeta_default(s: ComplexValue) -> Result<ComplexValue> {
    zeta(s, &EulerMaclaurinConfig::for_point(s))
}

pub fn zeta_with_estimate(s: ComplexValue, cfg: &EulerMaclaurinConfig) -> Result<ZetaValue> {
    ensure_finite("zeta", s)?;
    if is_pole(s) {
        return Err(Error::Pole {
            op: "zeta",
            at: "s = 1".into(),
        });
    }
    if s.re < 0.0 {
        return zeta_reflect_with_estimate(s);
    }
    cfg.validate(s)?;
    let z = euler_maclaurin(s, cfg);
    if z.error_estimate > EM_ERROR_LIMIT {
        return Err(Error::ConfigTooWeak {
            op: "zeta",
            estimate: z.error_estimate,
        });
    }
    Ok(z)
}

fn euler_maclaurin(s: Complex64, cfg: &EulerMaclaurinConfig) -> ZetaValue {
    let n_cut = cfg.cutoff;
    let mut acc: CompensatedComplexSum = (1..n_cut).map(|n| (-s * (n as f64).ln()).exp()).collect();
    let big_n = n_cut as f64;
    let ln_n = big_n.ln();
    let n_pow = (-s * ln_n).exp();
    acc.add(n_pow * big_n / (s - 1.0));
    acc.add(0.5 * n_pow);

    // term_k = B_{2k}/(2k)! · s(s+1)…(s+2k−2) · N^{−s−2k+1}
    let m = (cfg.bernoulli_order / 2) as usize;
    let mut factor = s / big_n * n_pow / 2.0;
    let inv_n2 = 1.0 / (big_n * big_n);
    for k in 1..=m {
        acc.add(factor * bernoulli_even(k));
        let kk = k as f64;
        factor *= (s + (2.0 * kk - 1.0)) * (s + 2.0 * kk) * inv_n2
            / ((2.0 * kk + 1.0) * (2.0 * kk + 2.0));
    }
    ZetaValue {
        value: acc.value(),
        error_estimate: (factor * bernoulli_even(m + 1)).norm(),
    }
}

/// `ln sin z`, stable for large `|ℑz|`; `None` where `sin z` is exactly 0.
fn ln_sin(z: Complex64) -> Option<Complex64> {
    let i = Complex64::i();
    if z.im > 15.0 {
        Some(-i * z + ((i * 2.0 * z).exp() - 1.0).ln() - (2.0 * i).ln())
    } else if z.im < -15.0 {
        Some(i * z + (1.0 - (-i * 2.0 * z).exp()).ln() - (2.0 * i).ln())
    } else {
        let v = z.sin();
        (v.norm() != 0.0).then(|| v.ln())
    }
}

/// `ζ(s) = π^{s−½}·Γ((1−s)/2)/Γ(s/2)·ζ(1−s)` for `ℜs < ½`.
///
/// `1/Γ(s/2)` is taken as `sin(πs/2)·Γ(1−s/2)/π`, so the negative even
/// integers give (numerically) zero instead of a Gamma pole.
pub fn zeta_reflect(s: ComplexValue) -> Result<ComplexValue> {
    zeta_reflect_with_estimate(s).map(|z| z.value)
}

fn zeta_reflect_with_estimate(s: ComplexValue) -> Result<ZetaValue> {
    ensure_finite("zeta_reflect", s)?;
    if s.re >= 0.5 {
        return Err(Error::Domain {
            op: "zeta_reflect",
            reason: format!("Re s = {} must be below 1/2", s.re),
        });
    }
    let w = 1.0 - s;
    let inner = euler_maclaurin(w, &EulerMaclaurinConfig::for_point(w));
    if inner.error_estimate > EM_ERROR_LIMIT {
        return Err(Error::ConfigTooWeak {
            op: "zeta_reflect",
            estimate: inner.error_estimate,
        });
    }
    let Some(ls) = ln_sin(PI * s / 2.0) else {
        return Ok(ZetaValue {
            value: Complex64::new(0.0, 0.0),
            error_estimate: 0.0,
        });
    };
    let log_factor =
        (s - 1.5) * PI.ln() + log_gamma((1.0 - s) / 2.0)? + log_gamma(1.0 - s / 2.0)? + ls;
    let factor = log_factor.exp();
    Ok(ZetaValue {
        value: factor * inner.value,
        error_estimate: factor.norm() * inner.error_estimate,
    })
}

/// `ζ(−n)` for `n ≥ 1`: `−B_{n+1}/(n+1)` with the convention `B₁ = −½`.
/// Zero for every even `n`.
pub fn trivial_zeta_value(n: u32) -> f64 {
    assert!(n >= 1, "trivial_zeta_value needs n >= 1");
    if n.is_multiple_of(2) {
        return 0.0;
    }
    let m = n as usize + 1; // even
    let k = m / 2;
    let b = if k < BERNOULLI_EVEN.len() {
        bernoulli_even(k)
    } else {
        // B_{2k} = (−1)^{k+1}·2·(2k)!·ζ(2k)/(2π)^{2k}
        let zeta_2k: f64 = (1..=64).map(|j| (j as f64).powi(-(m as i32))).sum();
        let ln_mag =
            std::f64::consts::LN_2 + ln_factorial(m) + zeta_2k.ln() - m as f64 * (2.0 * PI).ln();
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        sign * ln_mag.exp()
    };
    -b / m as f64
}

fn ln_factorial(m: usize) -> f64 {
    (2..=m).map(|j| (j as f64).ln()).sum()
}

/// `ξ(s) = ½·s(s−1)·π^{−s/2}·Γ(s/2)·ζ(s)`.
///
/// The removable points `s = 0` and `s = 1` return their limit `½`. Left
/// of the strip (`ℜs < 0`) the value is taken from `ξ(1−s)`, where the
/// product has no Gamma pole.
pub fn xi(s: ComplexValue) -> Result<ComplexValue> {
    ensure_finite("xi", s)?;
    if s.norm() < 1e-15 || is_pole(s) {
        return Ok(Complex64::new(0.5, 0.0));
    }
    if s.re < 0.0 || s.norm() < 1e-10 {
        return xi(1.0 - s);
    }
    let z = zeta_default(s)?;
    Ok(0.5 * s * (s - 1.0) * completion_factor(s)? * z)
}

/// `π^{−s/2}·Γ(s/2)`.
pub fn completion_factor(s: ComplexValue) -> Result<ComplexValue> {
    Ok((log_gamma(s / 2.0)? - s / 2.0 * PI.ln()).exp())
}

/// Residual of the symmetric functional equation at `s`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FunctionalResidual {
    /// `|π^{−s/2}Γ(s/2)ζ(s) − π^{−(1−s)/2}Γ((1−s)/2)ζ(1−s)|`.
    pub absolute: f64,
    /// `absolute / |π^{−s/2}Γ(s/2)|`, comparable to the error in `ζ(s)`.
    pub scaled: f64,
}

pub fn functional_equation_residual(s: ComplexValue) -> Result<FunctionalResidual> {
    ensure_finite("functional_equation_residual", s)?;
    let w = 1.0 - s;
    let g = completion_factor(s)?;
    let lhs = g * zeta_default(s)?;
    let rhs = completion_factor(w)? * zeta_default(w)?;
    let absolute = (lhs - rhs).norm();
    Ok(FunctionalResidual {
        absolute,
        scaled: absolute / g.norm(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XiQuadratureConfig {
    /// Truncation point `X` of `∫_1^∞`.
    pub upper_limit: f64,
    /// Initial number of Gauss panels on `[1, X]`.
    pub panels: usize,
}

impl Default for XiQuadratureConfig {
    fn default() -> Self {
        Self {
            upper_limit: 40.0,
            panels: 64,
        }
    }
}

/// Result of [`xi_integral`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XiIntegral {
    pub value: ComplexValue,
    /// `e^{−π·X}`, the size of the discarded tail.
    pub truncation_bound: f64,
    /// Change in `ξ` at the last panel doubling.
    pub quadrature_estimate: f64,
    pub panels: usize,
}

const XI_QUAD_TOL: f64 = 1e-10;
const XI_QUAD_MAX_LEVELS: u32 = 6;

/// `ξ(s)` from `½ + ½s(s−1)∫_1^X Ψ(x)(x^{s/2−1} + x^{−(s+1)/2}) dx`.
pub fn xi_integral(s: ComplexValue, cfg: &XiQuadratureConfig) -> Result<XiIntegral> {
    ensure_finite("xi_integral", s)?;
    if !(cfg.upper_limit >= 10.0 && cfg.upper_limit.is_finite()) || cfg.panels == 0 {
        return Err(Error::InvalidConfig(format!(
            "xi quadrature needs upper_limit >= 10 and panels > 0, got {} / {}",
            cfg.upper_limit, cfg.panels
        )));
    }
    let truncation_bound = (-PI * cfg.upper_limit).exp();
    let prefactor = 0.5 * s * (s - 1.0);
    if prefactor.norm() == 0.0 {
        return Ok(XiIntegral {
            value: Complex64::new(0.5, 0.0),
            truncation_bound,
            quadrature_estimate: 0.0,
            panels: 0,
        });
    }
    let a = s / 2.0 - 1.0;
    let b = -(s + 1.0) / 2.0;
    let integrand = |x: f64| {
        let lx = x.ln();
        psi_unchecked(x) * ((a * lx).exp() + (b * lx).exp())
    };
    let abs_tol = XI_QUAD_TOL / prefactor.norm();
    let r = integrate_doubling(
        &integrand,
        1.0,
        cfg.upper_limit,
        cfg.panels,
        0.0,
        abs_tol,
        XI_QUAD_MAX_LEVELS,
    );
    let quadrature_estimate = r.error_estimate * prefactor.norm();
    if !r.converged {
        return Err(Error::QuadratureStall {
            op: "xi_integral",
            estimate: quadrature_estimate,
            levels: r.levels,
        });
    }
    Ok(XiIntegral {
        value: 0.5 + prefactor * r.value,
        truncation_bound,
        quadrature_estimate,
        panels: r.panels,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// ζ through the alternating (eta) series: partial sums of
    /// Σ(−1)^{n−1} n^{−s} up to 10⁵ terms, accelerated by repeated averaging
    /// of consecutive partial sums (Euler transform of the tail).
    fn eta_oracle(s: Complex64) -> Complex64 {
        const N: usize = 100_000;
        const K: usize = 12;
        let mut partial = c(0.0, 0.0);
        let mut tail = Vec::with_capacity(K + 1);
        for n in 1..=N {
            let term = (-s * (n as f64).ln()).exp();
            partial += if n % 2 == 1 { term } else { -term };
            if n > N - K - 1 {
                tail.push(partial);
            }
        }
        while tail.len() > 1 {
            tail = tail.windows(2).map(|w| (w[0] + w[1]) / 2.0).collect();
        }
        let two_pow = ((1.0 - s) * std::f64::consts::LN_2).exp();
        tail[0] / (1.0 - two_pow)
    }

    /// Bernoulli numbers from Σ_{k<m} C(m+1,k)·B_k = −(m+1)·B_m in exact
    /// i128 fractions.
    fn bernoulli_oracle(m: usize) -> (i128, i128) {
        fn gcd(a: i128, b: i128) -> i128 {
            if b == 0 {
                a.abs()
            } else {
                gcd(b, a % b)
            }
        }
        fn binom(n: usize, k: usize) -> i128 {
            (0..k).fold(1i128, |acc, j| acc * (n - j) as i128 / (j + 1) as i128)
        }
        let mut b: Vec<(i128, i128)> = vec![(1, 1)];
        for j in 1..=m {
            let (mut num, mut den) = (0i128, 1i128);
            for (k, &(bn, bd)) in b.iter().enumerate() {
                let c = binom(j + 1, k);
                num = num * bd + c * bn * den;
                den *= bd;
                let g = gcd(num, den);
                num /= g;
                den /= g;
            }
            // B_j = −num/(den·(j+1))
            let (mut n2, mut d2) = (-num, den * (j as i128 + 1));
            let g = gcd(n2, d2);
            n2 /= g;
            d2 /= g;
            b.push((n2, d2));
        }
        b[m]
    }

    #[test]
    fn bernoulli_table_matches_recurrence() {
        for k in 1..=10 {
            let (n, d) = bernoulli_oracle(2 * k);
            let (tn, td) = BERNOULLI_EVEN[k];
            assert_eq!((n, d), (tn as i128, td as i128), "B_{}", 2 * k);
        }
        assert_eq!(bernoulli_oracle(1), (-1, 2));
    }

    #[test]
    fn basel_and_critical_point() {
        let z2 = zeta_default(c(2.0, 0.0)).unwrap();
        assert!((z2.re - PI * PI / 6.0).abs() < 1e-14);
        assert!(z2.im.abs() < 1e-15);
        let zh = zeta_default(c(0.5, 0.0)).unwrap();
        assert!((zh.re + 1.460_354_508_809_586_8).abs() < 1e-13);
        // three significant figures
        assert_eq!((zh.re * 100.0).round() / 100.0, -1.46);
    }

    #[test]
    fn agrees_with_eta_series_oracle() {
        for s in [c(0.5, 25.0), c(0.3, 20.0), c(0.8, 3.0)] {
            let got = zeta_default(s).unwrap();
            let want = eta_oracle(s);
            assert!((got - want).norm() < 1e-10, "s = {s}: {got} vs {want}");
        }
        // frozen 30-digit reference
        let got = zeta_default(c(0.5, 25.0)).unwrap();
        let want = c(0.004_984_593_364_035_675, -0.014_012_301_962_583_383);
        assert!((got - want).norm() < 1e-12);
    }

    #[test]
    fn reference_values_across_domain() {
        let cases = [
            (
                c(-1.0, 10.0),
                c(2.421_605_570_367_597_7, 0.070_556_292_541_848_14),
            ),
            (
                c(-5.5, 3.0),
                c(-0.069_023_255_587_797_9, -0.073_051_871_636_278_83),
            ),
            (
                c(2.0, 1000.0),
                c(0.953_262_184_346_425_2, -0.110_723_107_460_599_81),
            ),
            (
                c(0.5, 1999.0),
                c(1.527_623_836_296_393_5, -0.371_320_914_300_198_1),
            ),
        ];
        for (s, want) in cases {
            let got = zeta_default(s).unwrap();
            assert!((got - want).norm() < 1e-10, "s = {s}: {got} vs {want}");
        }
    }

    #[test]
    fn pole_and_config_errors() {
        assert!(matches!(zeta_default(c(1.0, 0.0)), Err(Error::Pole { .. })));
        let weak = EulerMaclaurinConfig {
            cutoff: 12,
            bernoulli_order: 2,
        };
        assert!(matches!(
            zeta(c(0.5, 3.0), &weak),
            Err(Error::ConfigTooWeak { .. })
        ));
        let short = EulerMaclaurinConfig {
            cutoff: 5,
            bernoulli_order: 20,
        };
        assert!(matches!(
            zeta(c(0.5, 100.0), &short),
            Err(Error::InvalidConfig(_))
        ));
        let odd = EulerMaclaurinConfig {
            cutoff: 100,
            bernoulli_order: 7,
        };
        assert!(matches!(
            zeta(c(0.5, 1.0), &odd),
            Err(Error::InvalidConfig(_))
        ));
    }

    #[test]
    fn trivial_zeros_through_reflection() {
        for k in 1..=5 {
            let s = c(-2.0 * k as f64, 0.0);
            assert!(zeta_default(s).unwrap().norm() < 1e-10, "s = {s}");
        }
        assert!(zeta_reflect(c(-2.0, 0.0)).unwrap().norm() < 1e-12);
        let m1 = zeta_reflect(c(-1.0, 0.0)).unwrap();
        assert!((m1.re + 1.0 / 12.0).abs() < 1e-12 && m1.im.abs() < 1e-12);
        let h = zeta_reflect(c(0.499_999_999, 0.0)).unwrap();
        let d = zeta_default(c(0.5, 0.0)).unwrap();
        assert!((h - d).norm() < 1e-8);
        assert!(matches!(
            zeta_reflect(c(0.7, 0.0)),
            Err(Error::Domain { .. })
        ));
    }

    #[test]
    fn trivial_values_follow_analytic_continuation() {
        assert_eq!(trivial_zeta_value(2), 0.0);
        assert!((trivial_zeta_value(1) + 1.0 / 12.0).abs() < 1e-16);
        assert!((trivial_zeta_value(3) - 1.0 / 120.0).abs() < 1e-16);
        for n in 1..=11u32 {
            let (bn, bd) = bernoulli_oracle(n as usize + 1);
            let want = -(bn as f64 / bd as f64) / (n as f64 + 1.0);
            assert!((trivial_zeta_value(n) - want).abs() <= 1e-15 * want.abs().max(1.0));
            let reflected = zeta_default(c(-(n as f64), 0.0)).unwrap().re;
            assert!(
                (reflected - want).abs() <= 1e-11 * want.abs().max(1.0),
                "n = {n}: {reflected} vs {want}"
            );
        }
        // beyond the table: ζ(−33) = −B_34/34
        let want = -(2_577_687_858_367.0 / 6.0) / 34.0;
        assert!(((trivial_zeta_value(33) - want) / want).abs() < 1e-12);
    }

    #[test]
    fn schwarz_reflection() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let s = c(rng.gen_range(-3.0..3.0), rng.gen_range(0.5..300.0));
            let a = zeta_default(s).unwrap();
            let b = zeta_default(s.conj()).unwrap();
            // the reflected branch exponentiates logs of size ~πt/4
            assert!(
                (a.conj() - b).norm() <= 1e-12 * a.norm().max(1.0),
                "s = {s}: {a} {b}"
            );
        }
    }

    #[test]
    fn functional_equation_random_strip() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..500 {
            let s = c(rng.gen_range(0.1..0.9), rng.gen_range(1.0..500.0));
            let r = functional_equation_residual(s).unwrap();
            assert!(r.absolute < 1e-9, "s = {s}");
            assert!(r.scaled < 1e-8, "s = {s}: {}", r.scaled);
        }
    }

    #[test]
    fn xi_values_and_limits() {
        let h = xi(c(0.5, 0.0)).unwrap();
        assert!((h.re - 0.497_120_778_188_314_1).abs() < 1e-13);
        assert_eq!(xi(c(0.0, 0.0)).unwrap(), c(0.5, 0.0));
        assert_eq!(xi(c(1.0, 0.0)).unwrap(), c(0.5, 0.0));
        let near_one = xi(c(1.0 + 1e-9, 0.0)).unwrap();
        assert!((near_one.re - 0.5).abs() < 1e-8);
        let a = xi(c(0.5, 14.0)).unwrap();
        let b = xi(c(0.5, -14.0)).unwrap();
        assert!((a.conj() - b).norm() < 1e-15);
        // entire: finite at the trivial zeros and the Gamma poles
        let m2 = xi(c(-2.0, 0.0)).unwrap();
        assert!((m2 - xi(c(3.0, 0.0)).unwrap()).norm() < 1e-15);
    }

    #[test]
    fn xi_is_real_on_critical_line() {
        let mut t = 0.0;
        while t <= 500.0 {
            let v = xi(c(0.5, t)).unwrap();
            assert!(v.im.abs() < 1e-10, "t = {t}: {v}");
            t += 0.5;
        }
    }

    fn grid() -> impl Iterator<Item = Complex64> {
        (0..9).flat_map(|i| (0..9).map(move |j| c(i as f64 / 8.0, 50.0 * j as f64 / 8.0)))
    }

    #[test]
    fn xi_symmetry_on_grid() {
        for s in grid() {
            let d = (xi(s).unwrap() - xi(1.0 - s).unwrap()).norm();
            assert!(d < 1e-10, "s = {s}: {d}");
        }
    }

    #[test]
    fn xi_integral_matches_product_on_grid() {
        let cfg = XiQuadratureConfig::default();
        for s in grid() {
            let r = xi_integral(s, &cfg).unwrap();
            let d = (r.value - xi(s).unwrap()).norm();
            assert!(d < 1e-8, "s = {s}: {d}");
            assert!(r.truncation_bound < 1e-50);
        }
    }

    #[test]
    fn xi_integral_examples() {
        let cfg = XiQuadratureConfig::default();
        let h = xi_integral(c(0.5, 0.0), &cfg).unwrap().value;
        assert!((h - xi(c(0.5, 0.0)).unwrap()).norm() < 1e-8);
        let s = c(0.3, 7.0);
        let a = xi_integral(s, &cfg).unwrap().value;
        let b = xi_integral(1.0 - s, &cfg).unwrap().value;
        assert!((a - b).norm() < 1e-10);
        let v = xi_integral(c(0.5, 20.0), &cfg).unwrap().value;
        assert!((v.re - xi(c(0.5, 20.0)).unwrap().re).abs() < 1e-8);
        assert!(v.im.abs() < 1e-8);
        let bad = XiQuadratureConfig {
            upper_limit: 5.0,
            panels: 64,
        };
        assert!(matches!(
            xi_integral(c(0.5, 0.0), &bad),
            Err(Error::InvalidConfig(_))
        ));
    }
}
