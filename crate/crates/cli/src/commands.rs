//! The four subcommands. Each returns the exit status it wants; output goes
//! to the writer passed in, files to the configured paths.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use critline_core::zeros::VerificationReport;
use critline_core::zeta::{zeta_with_estimate, EulerMaclaurinConfig};
use critline_core::{
    backlund_count, functional_equation_residual, jacobi_identity_residual, locate_zero,
    phi_closed_form_residual, rs_integral_residual, scan_sign_changes, two_re_decomposition,
    verify_equality, xi, z_function, ComplexValue, ZMethod, ZeroRecord,
};
use rayon::prelude::*;
use serde::Serialize;

use crate::config::{Profile, RunConfig};
use crate::format::{complex_json, csv_row, parse_complex, sci3, CSV_HEADER};
use crate::{CliError, Exit};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalMethod {
    Em,
    Rs,
}

pub fn eval(
    s_text: &str,
    method: EvalMethod,
    cfg: &RunConfig,
    out: &mut dyn Write,
) -> Result<Exit, CliError> {
    let s = parse_complex(s_text)?;
    let (zeta, err_bound, tag) = match method {
        EvalMethod::Em => {
            let em = match cfg.profile {
                Profile::Default => EulerMaclaurinConfig::for_point(s),
                Profile::Strict => EulerMaclaurinConfig::strict_for_point(s),
            };
            let z = zeta_with_estimate(s, &em)?;
            (z.value, z.error_estimate, "em")
        }
        EvalMethod::Rs => {
            if s.re != 0.5 || s.im < 30.0 {
                return Err(CliError::input(format!(
                    "--method rs needs s = 0.5 + ti with t >= 30, got {s_text}"
                )));
            }
            let z = z_function(s.im, ZMethod::RiemannSiegel { order: 3 })?;
            (z.zeta, z.err_bound, "rs")
        }
    };
    let value = serde_json::json!({
        "s": complex_json(s),
        "zeta": complex_json(zeta),
        "xi": complex_json(xi(s)?),
        "method": tag,
        "err_bound": err_bound,
        "config": cfg.to_json(),
    });
    writeln!(out, "{value}")?;
    Ok(Exit::Ok)
}

fn required<T: Clone>(value: &Option<T>, what: &str) -> Result<T, CliError> {
    value
        .clone()
        .ok_or_else(|| CliError::input(format!("missing {what} (flag or config key)")))
}

fn sidecar(path: &Path, suffix: &str) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

/// Zeros on `[from, to]` as a CSV table. Unresolved windows go to
/// `<out>.warnings`; the effective config to `<out>.config`.
pub fn zeros(cfg: &RunConfig, out: &mut dyn Write) -> Result<Exit, CliError> {
    let from = required(&cfg.from, "--from")?;
    let to = required(&cfg.to, "--to")?;
    let path = required(&cfg.out, "--out")?;
    if !(from < to) {
        return Err(CliError::input(format!(
            "--from {from} must be below --to {to}"
        )));
    }
    let method = cfg.z_method();
    if matches!(method, ZMethod::RiemannSiegel { .. }) && from < 30.0 {
        return Err(CliError::input(format!(
            "method rs needs --from >= 30, got {from}"
        )));
    }
    let scan = scan_sign_changes(from, to, &cfg.scan())?;
    let first = if from > 0.0 {
        backlund_count(from)?.count + 1
    } else {
        1
    };
    let records: Vec<ZeroRecord> = scan
        .brackets
        .par_iter()
        .enumerate()
        .map(|(k, b)| locate_zero(b, first + k as u64, method))
        .collect::<Result<_, _>>()?;

    let mut csv = String::from(CSV_HEADER);
    csv.push('\n');
    for r in &records {
        csv.push_str(&csv_row(r));
        csv.push('\n');
    }
    fs::write(&path, csv)?;
    fs::write(sidecar(&path, ".config"), cfg.render(""))?;
    let warnings = sidecar(&path, ".warnings");
    if scan.unresolved.is_empty() {
        if warnings.exists() {
            fs::remove_file(&warnings)?;
        }
    } else {
        let mut text = String::from("# windows still suspicious at max_depth\nt_lo,t_hi\n");
        for (lo, hi) in &scan.unresolved {
            text.push_str(&format!("{lo},{hi}\n"));
        }
        fs::write(&warnings, text)?;
    }
    writeln!(
        out,
        "{} zeros written to {}{}",
        records.len(),
        path.display(),
        if scan.unresolved.is_empty() {
            String::new()
        } else {
            format!(" ({} unresolved windows)", scan.unresolved.len())
        }
    )?;
    Ok(Exit::Ok)
}

/// JSON layout of the verification report. Fields after `runtime_ms` are
/// additions to the frozen schema.
#[derive(Serialize)]
struct ReportJson {
    #[serde(rename = "T")]
    t: f64,
    n_argument: u64,
    n0_signchanges: u64,
    #[serde(rename = "s_of_T")]
    s_of_t: f64,
    equal: bool,
    lemma_residual: f64,
    refinement_depth: u32,
    runtime_ms: u64,
    parity_ok: bool,
    retries: u32,
    unresolved: Vec<(f64, f64)>,
    config: serde_json::Value,
}

pub fn verify(cfg: &RunConfig, out: &mut dyn Write) -> Result<Exit, CliError> {
    let t = required(&cfg.t, "--T")?;
    let path = required(&cfg.report, "--report")?;
    let start = Instant::now();
    let r: VerificationReport = verify_equality(t, &cfg.scan())?;
    let runtime_ms = start.elapsed().as_millis() as u64;
    let json = ReportJson {
        t: r.t,
        n_argument: r.n_argument,
        n0_signchanges: r.n0_signchanges,
        s_of_t: r.s_of_t,
        equal: r.equal,
        lemma_residual: r.lemma_residual,
        refinement_depth: r.refinement_depth,
        runtime_ms,
        parity_ok: r.parity_holds(),
        retries: r.retries,
        unresolved: r.unresolved.clone(),
        config: cfg.to_json(),
    };
    let mut text =
        serde_json::to_string_pretty(&json).map_err(|e| CliError::Numeric(e.to_string()))?;
    text.push('\n');
    fs::write(&path, text)?;
    writeln!(
        out,
        "T = {}: N = {}, N0 = {}, {}",
        r.t,
        r.n_argument,
        r.n0_signchanges,
        if r.equal { "equal" } else { "MISMATCH" }
    )?;
    Ok(if r.equal { Exit::Ok } else { Exit::Mismatch })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Functional,
    Jacobi,
    ClosedForm,
    RsIntegral,
    TwoRe,
    All,
}

impl Suite {
    pub fn parse(name: &str) -> Result<Self, CliError> {
        Ok(match name {
            "functional" => Suite::Functional,
            "jacobi" => Suite::Jacobi,
            "closed_form" => Suite::ClosedForm,
            "rs_integral" => Suite::RsIntegral,
            "two_re" => Suite::TwoRe,
            "all" => Suite::All,
            _ => {
                return Err(CliError::input(format!(
                    "--suite: unknown suite `{name}` (functional, jacobi, closed_form, rs_integral, two_re, all)"
                )))
            }
        })
    }

    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

/// One checked sample: the residual that is held against the tolerance
/// and an optional companion shown for context.
struct Line {
    identity: &'static str,
    point: String,
    outcome: Result<(f64, Option<(&'static str, f64)>), String>,
    tolerance: f64,
}

fn point(s: ComplexValue) -> String {
    format!("s={}{:+}i", s.re, s.im)
}

fn functional_lines() -> Vec<Line> {
    let mut out = Vec::new();
    for sigma in [0.1, 0.3, 0.5, 0.7, 0.9] {
        for t in [1.0, 14.0, 100.0, 500.0] {
            let s = ComplexValue::new(sigma, t);
            out.push(Line {
                identity: "functional",
                point: point(s),
                outcome: functional_equation_residual(s)
                    .map(|r| (r.absolute, Some(("scaled", r.scaled))))
                    .map_err(|e| e.to_string()),
                tolerance: 1e-9,
            });
        }
    }
    out
}

fn jacobi_lines() -> Vec<Line> {
    [0.05, 0.1, 0.25, 0.5, 1.0, 2.0, 4.0, 10.0, 20.0]
        .into_iter()
        .map(|x| Line {
            identity: "jacobi",
            point: format!("x={x}"),
            outcome: jacobi_identity_residual(x)
                .map(|r| (r, None))
                .map_err(|e| e.to_string()),
            tolerance: 1e-12,
        })
        .collect()
}

fn closed_form_lines() -> Vec<Line> {
    let c = ComplexValue::new;
    [
        c(0.5, 0.0),
        c(0.5, 0.5),
        c(1.5, 0.0),
        c(-2.3, 0.0),
        c(3.7, 0.4),
        c(-0.5, -0.5),
        c(4.2, -0.3),
        c(0.25, 1.0),
        c(-3.3, 2.5),
    ]
    .into_iter()
    .map(|u| Line {
        identity: "closed_form",
        point: format!("u={}{:+}i", u.re, u.im),
        outcome: phi_closed_form_residual(u)
            .map(|r| (r.scaled, Some(("absolute", r.absolute))))
            .map_err(|e| e.to_string()),
        tolerance: 1e-8,
    })
    .collect()
}

fn rs_integral_lines(cfg: &RunConfig) -> Vec<Line> {
    let c = ComplexValue::new;
    let contour = cfg.contour();
    [
        c(0.5, 0.0),
        c(0.5, 25.0),
        c(0.5, 50.0),
        c(0.3, 20.0),
        c(0.7, 90.0),
        c(0.5, 150.0),
    ]
    .into_iter()
    .map(|s| Line {
        identity: "rs_integral",
        point: point(s),
        outcome: rs_integral_residual(s, &contour)
            .map(|r| (r.absolute, Some(("scaled", r.scaled))))
            .map_err(|e| e.to_string()),
        tolerance: 1e-7,
    })
    .collect()
}

fn two_re_lines(cfg: &RunConfig) -> Vec<Line> {
    let contour = cfg.contour();
    [0.0, 14.134_725_141_734_694, 25.0, 50.0, 100.0, 150.0, 200.0]
        .into_iter()
        .map(|t| Line {
            identity: "two_re",
            point: format!("t={t}"),
            outcome: two_re_decomposition(t, &contour)
                .map(|d| (d.residual(), Some(("z", d.z_direct))))
                .map_err(|e| e.to_string()),
            tolerance: 1e-6,
        })
        .collect()
}

pub fn identities(suite: Suite, cfg: &RunConfig, out: &mut dyn Write) -> Result<Exit, CliError> {
    write!(out, "{}", cfg.render("# "))?;
    let mut lines = Vec::new();
    if suite.includes(Suite::Functional) {
        lines.extend(functional_lines());
    }
    if suite.includes(Suite::Jacobi) {
        lines.extend(jacobi_lines());
    }
    if suite.includes(Suite::ClosedForm) {
        lines.extend(closed_form_lines());
    }
    if suite.includes(Suite::RsIntegral) {
        lines.extend(rs_integral_lines(cfg));
    }
    if suite.includes(Suite::TwoRe) {
        lines.extend(two_re_lines(cfg));
    }
    let mut all_pass = true;
    for line in &lines {
        let (verdict, detail) = match &line.outcome {
            Ok((residual, extra)) => {
                let pass = *residual < line.tolerance;
                let extra = extra
                    .map(|(name, v)| format!(" {name}={}", sci3(v)))
                    .unwrap_or_default();
                (pass, format!("residual={}{extra}", sci3(*residual)))
            }
            Err(reason) => (false, format!("error: {reason}")),
        };
        all_pass &= verdict;
        writeln!(
            out,
            "{:<12} {:<22} {} tol={:.0e} {}",
            line.identity,
            line.point,
            detail,
            line.tolerance,
            if verdict { "PASS" } else { "FAIL" }
        )?;
    }
    Ok(if all_pass { Exit::Ok } else { Exit::Mismatch })
}
