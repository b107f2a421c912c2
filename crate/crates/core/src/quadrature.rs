//! Composite Gauss–Legendre quadrature for complex-valued integrands on a
//! real parameter interval, with panel doubling until the estimate settles.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;

use crate::summation::CompensatedComplexSum;

/// Points per panel.
pub const GAUSS_ORDER: usize = 20;

/// Nodes and weights of the Gauss–Legendre rule on [-1, 1].
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussLegendre {
    /// Newton iteration on `P_n` from the Chebyshev-like initial guesses.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1);
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let m = n.div_ceil(2);
        for i in 0..m {
            let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre(n, x);
            if d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        Self { nodes, weights }
    }

    pub fn shared() -> &'static GaussLegendre {
        static RULE: OnceLock<GaussLegendre> = OnceLock::new();
        RULE.get_or_init(|| GaussLegendre::new(GAUSS_ORDER))
    }
}

/// `(P_n(x), P_n'(x))` by the three-term recurrence.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let n = n as f64;
    let d = n * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Value together with the sum of `|w·f|`, the scale against which
/// cancellation is judged.
#[derive(Debug, Clone, Copy)]
pub struct PanelSum {
    pub value: Complex64,
    pub abs_mass: f64,
}

pub fn composite<F>(f: &F, a: f64, b: f64, panels: usize) -> PanelSum
where
    F: Fn(f64) -> Complex64 + ?Sized,
{
    let rule = GaussLegendre::shared();
    let h = (b - a) / panels as f64;
    let mut acc = CompensatedComplexSum::new();
    let mut mass = 0.0;
    for p in 0..panels {
        let mid = a + (p as f64 + 0.5) * h;
        let half = 0.5 * h;
        for (x, w) in rule.nodes.iter().zip(&rule.weights) {
            let term = f(mid + half * x) * (w * half);
            mass += term.norm();
            acc.add(term);
        }
    }
    PanelSum {
        value: acc.value(),
        abs_mass: mass,
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Adaptive {
    pub value: Complex64,
    /// `|I_{2P} − I_P|` at the last doubling.
    pub error_estimate: f64,
    pub abs_mass: f64,
    pub panels: usize,
    pub levels: u32,
    pub converged: bool,
}

/// Doubles the panel count until successive estimates differ by at most
/// `max(abs_tol, rel_tol·|I|)`, or `max_levels` doublings have been spent.
pub fn integrate_doubling<F>(
    f: &F,
    a: f64,
    b: f64,
    start_panels: usize,
    rel_tol: f64,
    abs_tol: f64,
    max_levels: u32,
) -> Adaptive
where
    F: Fn(f64) -> Complex64 + ?Sized,
{
    let mut panels = start_panels.max(1);
    let mut prev = composite(f, a, b, panels);
    let mut levels = 0;
    loop {
        panels *= 2;
        levels += 1;
        let cur = composite(f, a, b, panels);
        let change = (cur.value - prev.value).norm();
        let target = abs_tol.max(rel_tol * cur.value.norm());
        if change <= target || levels >= max_levels {
            return Adaptive {
                value: cur.value,
                error_estimate: change,
                abs_mass: cur.abs_mass,
                panels,
                levels,
                converged: change <= target,
            };
        }
        prev = cur;
    }
}
