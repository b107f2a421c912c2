//! Run configuration: `key = value` files with `#` comments, overridden by
//! command-line flags.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use critline_core::{ContourConfig, ScanConfig, ZMethod};

use crate::CliError;

/// Environment variable consulted when `--config` is absent.
pub const CONFIG_ENV: &str = "ZV_CONFIG";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Profile {
    Default,
    /// Longer Euler–Maclaurin sums, Euler–Maclaurin throughout the scan and
    /// twice the starting quadrature panels.
    Strict,
}

impl Profile {
    pub fn name(self) -> &'static str {
        match self {
            Profile::Default => "default",
            Profile::Strict => "strict",
        }
    }
}

/// Which `Z` evaluator the scan uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanMethod {
    Auto,
    Em,
    Rs,
}

impl ScanMethod {
    pub fn name(self) -> &'static str {
        match self {
            ScanMethod::Auto => "auto",
            ScanMethod::Em => "em",
            ScanMethod::Rs => "rs",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub profile: Profile,
    pub base_grid: u32,
    pub max_depth: u32,
    pub method: ScanMethod,
    pub crossing: f64,
    pub half_length: f64,
    pub panels: usize,
    pub from: Option<f64>,
    pub to: Option<f64>,
    pub out: Option<PathBuf>,
    pub t: Option<f64>,
    pub report: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        let scan = ScanConfig::default();
        let contour = ContourConfig::default();
        Self {
            profile: Profile::Default,
            base_grid: scan.base_grid,
            max_depth: scan.max_depth,
            method: ScanMethod::Auto,
            crossing: contour.crossing,
            half_length: contour.half_length,
            panels: contour.panels,
            from: None,
            to: None,
            out: None,
            t: None,
            report: None,
        }
    }
}

/// Keys accepted in a config file, in echo order.
pub const KEYS: [&str; 12] = [
    "profile",
    "base_grid",
    "max_depth",
    "method",
    "crossing",
    "half_length",
    "panels",
    "from",
    "to",
    "out",
    "T",
    "report",
];

fn parse_f64(origin: &str, key: &str, value: &str) -> Result<f64, CliError> {
    value
        .parse::<f64>()
        .ok()
        .filter(|v| v.is_finite())
        .ok_or_else(|| {
            CliError::input(format!(
                "{origin}: field `{key}`: expected a finite number, got `{value}`"
            ))
        })
}

fn parse_int<T: std::str::FromStr>(origin: &str, key: &str, value: &str) -> Result<T, CliError> {
    value.parse::<T>().map_err(|_| {
        CliError::input(format!(
            "{origin}: field `{key}`: expected a non-negative integer, got `{value}`"
        ))
    })
}

fn out_of_range(origin: &str, key: &str, value: &str, range: &str) -> CliError {
    CliError::input(format!("{origin}: field `{key}`: {value} outside {range}"))
}

impl RunConfig {
    /// Sets one field from its textual form; `origin` names the file line or
    /// flag for error messages.
    pub fn set(&mut self, key: &str, value: &str, origin: &str) -> Result<(), CliError> {
        match key {
            "profile" => {
                self.profile = match value {
                    "default" => Profile::Default,
                    "strict" => Profile::Strict,
                    _ => {
                        return Err(CliError::input(format!(
                        "{origin}: field `profile`: expected `default` or `strict`, got `{value}`"
                    )))
                    }
                }
            }
            "base_grid" => {
                let v: u32 = parse_int(origin, key, value)?;
                if !(1..=1024).contains(&v) {
                    return Err(out_of_range(origin, key, value, "1..=1024"));
                }
                self.base_grid = v;
            }
            "max_depth" => {
                let v: u32 = parse_int(origin, key, value)?;
                if v > 12 {
                    return Err(out_of_range(origin, key, value, "0..=12"));
                }
                self.max_depth = v;
            }
            "method" => {
                self.method = match value {
                    "auto" => ScanMethod::Auto,
                    "em" => ScanMethod::Em,
                    "rs" => ScanMethod::Rs,
                    _ => {
                        return Err(CliError::input(format!(
                            "{origin}: field `method`: expected `auto`, `em` or `rs`, got `{value}`"
                        )))
                    }
                }
            }
            "crossing" => {
                let v = parse_f64(origin, key, value)?;
                // the line must stay 1e-3 away from the poles at 0 and 1
                let margin = 1e-3 * std::f64::consts::SQRT_2;
                if !(v >= margin && v <= 1.0 - margin) {
                    return Err(out_of_range(origin, key, value, "[0.0015, 0.9985]"));
                }
                self.crossing = v;
            }
            "half_length" => {
                let v = parse_f64(origin, key, value)?;
                if !(4.0..=50.0).contains(&v) {
                    return Err(out_of_range(origin, key, value, "[4, 50]"));
                }
                self.half_length = v;
            }
            "panels" => {
                let v: usize = parse_int(origin, key, value)?;
                if !(1..=2048).contains(&v) {
                    return Err(out_of_range(origin, key, value, "1..=2048"));
                }
                self.panels = v;
            }
            "from" | "to" | "T" => {
                let v = parse_f64(origin, key, value)?;
                if v < 0.0 {
                    return Err(out_of_range(origin, key, value, "[0, ∞)"));
                }
                match key {
                    "from" => self.from = Some(v),
                    "to" => self.to = Some(v),
                    _ => self.t = Some(v),
                }
            }
            "out" | "report" => {
                if value.is_empty() {
                    return Err(CliError::input(format!(
                        "{origin}: field `{key}`: empty path"
                    )));
                }
                let p = Some(PathBuf::from(value));
                if key == "out" {
                    self.out = p;
                } else {
                    self.report = p;
                }
            }
            _ => {
                return Err(CliError::input(format!(
                    "{origin}: unknown field `{key}` (expected one of {})",
                    KEYS.join(", ")
                )))
            }
        }
        Ok(())
    }

    /// Applies every `key = value` line of `text`.
    pub fn apply_text(&mut self, text: &str, source: &str) -> Result<(), CliError> {
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let origin = format!("{source}:{}", i + 1);
            let (key, value) = line.split_once('=').ok_or_else(|| {
                CliError::input(format!("{origin}: expected `key = value`, got `{line}`"))
            })?;
            let key = key.trim();
            if key.is_empty() {
                return Err(CliError::input(format!("{origin}: missing field name")));
            }
            self.set(key, value.trim(), &origin)?;
        }
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::input(format!("{}: cannot read config: {e}", path.display())))?;
        let mut cfg = Self::default();
        cfg.apply_text(&text, &path.display().to_string())?;
        Ok(cfg)
    }

    /// Config from `--config`, else `$ZV_CONFIG`, else defaults.
    pub fn resolve(flag: Option<&Path>) -> Result<Self, CliError> {
        match flag {
            Some(p) => Self::load(p),
            None => match std::env::var_os(CONFIG_ENV) {
                Some(p) if !p.is_empty() => Self::load(Path::new(&p)),
                _ => Ok(Self::default()),
            },
        }
    }

    pub fn z_method(&self) -> ZMethod {
        match (self.profile, self.method) {
            (Profile::Strict, ScanMethod::Auto) => ZMethod::EulerMaclaurin,
            (_, ScanMethod::Auto) => ZMethod::Auto,
            (_, ScanMethod::Em) => ZMethod::EulerMaclaurin,
            (_, ScanMethod::Rs) => ZMethod::RiemannSiegel { order: 3 },
        }
    }

    pub fn scan(&self) -> ScanConfig {
        ScanConfig {
            base_grid: self.base_grid,
            max_depth: self.max_depth,
            method: self.z_method(),
        }
    }

    pub fn contour(&self) -> ContourConfig {
        let panels = match self.profile {
            Profile::Default => self.panels,
            Profile::Strict => self.panels * 2,
        };
        ContourConfig {
            crossing: self.crossing,
            half_length: self.half_length,
            panels,
        }
    }

    /// `(key, value)` pairs in [`KEYS`] order; unset optional fields are
    /// omitted.
    pub fn entries(&self) -> Vec<(&'static str, String)> {
        let mut out = vec![
            ("profile", self.profile.name().to_string()),
            ("base_grid", self.base_grid.to_string()),
            ("max_depth", self.max_depth.to_string()),
            ("method", self.method.name().to_string()),
            ("crossing", self.crossing.to_string()),
            ("half_length", self.half_length.to_string()),
            ("panels", self.panels.to_string()),
        ];
        let opt = |v: Option<f64>| v.map(|x| x.to_string());
        for (key, value) in [
            ("from", opt(self.from)),
            ("to", opt(self.to)),
            ("out", self.out.as_ref().map(|p| p.display().to_string())),
            ("T", opt(self.t)),
            (
                "report",
                self.report.as_ref().map(|p| p.display().to_string()),
            ),
        ] {
            if let Some(v) = value {
                out.push((key, v));
            }
        }
        out
    }

    /// The effective configuration as config-file text.
    pub fn render(&self, prefix: &str) -> String {
        let mut s = String::new();
        for (k, v) in self.entries() {
            let _ = writeln!(s, "{prefix}{k} = {v}");
        }
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (k, v) in self.entries() {
            map.insert(k.to_string(), serde_json::Value::String(v));
        }
        serde_json::Value::Object(map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_file_with_comments() {
        let mut cfg = RunConfig::default();
        cfg.apply_text(
            "# scan settings\nbase_grid = 16\n\nmax_depth=3 # shallow\nprofile = strict\n",
            "run.cfg",
        )
        .unwrap();
        assert_eq!(cfg.base_grid, 16);
        assert_eq!(cfg.max_depth, 3);
        assert_eq!(cfg.profile, Profile::Strict);
        assert_eq!(cfg.z_method(), ZMethod::EulerMaclaurin);
        assert_eq!(cfg.contour().panels, 16);
    }

    #[test]
    fn errors_name_line_and_field() {
        let mut cfg = RunConfig::default();
        let err = cfg
            .apply_text("base_grid = 8\npanels = many\n", "run.cfg")
            .unwrap_err();
        let msg = err.to_string();
        assert!(
            msg.contains("run.cfg:2") && msg.contains("`panels`"),
            "{msg}"
        );
        let err = cfg.apply_text("crossing = 0.0\n", "x").unwrap_err();
        assert!(err.to_string().contains("x:1: field `crossing`"));
        let err = cfg.apply_text("colour = red\n", "x").unwrap_err();
        assert!(err.to_string().contains("unknown field `colour`"));
        let err = cfg.apply_text("just words\n", "x").unwrap_err();
        assert!(err.to_string().contains("x:1"));
    }

    #[test]
    fn render_round_trips() {
        let mut cfg = RunConfig::default();
        cfg.apply_text("T = 100\nreport = r.json\nhalf_length = 6\n", "a")
            .unwrap();
        let mut back = RunConfig::default();
        back.apply_text(&cfg.render(""), "b").unwrap();
        assert_eq!(cfg, back);
        assert!(cfg.render("# ").lines().all(|l| l.starts_with("# ")));
    }
}
