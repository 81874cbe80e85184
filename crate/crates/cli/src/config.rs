//! Sweep configuration: defaults, a plain `key=value` config file, and
//! command-line overrides. Flags win over the file, the file wins over
//! defaults.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use num_complex::Complex64;
use rindler_core::unruh::default_qr_grid;
use rindler_core::{OperatorOrdering, StateFamily};

use crate::{CliError, Result};

pub const DEFAULT_R_POINTS: usize = 50;

const KEYS: [&str; 7] = ["r_points", "qr", "ordering", "family", "out", "json", "r"];

/// Parses `re`, `re+imj`, `re-imj`, `imj`, `j`, `-j`.
pub fn parse_complex(s: &str) -> Result<Complex64> {
    let s = s.trim();
    let bad = || CliError::Usage(format!("cannot parse complex number {s:?}"));
    let num = |t: &str| -> Result<f64> {
        match t {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            _ => t.parse::<f64>().map_err(|_| bad()),
        }
    };
    let Some(body) = s.strip_suffix('j').or_else(|| s.strip_suffix('i')) else {
        return s.parse::<f64>().map(|re| Complex64::new(re, 0.0)).map_err(|_| bad());
    };
    // Split at the last sign that is not the leading one or part of an exponent.
    let split = body
        .char_indices()
        .rev()
        .find(|&(i, ch)| {
            i > 0 && (ch == '+' || ch == '-') && !matches!(body.as_bytes()[i - 1], b'e' | b'E')
        })
        .map(|(i, _)| i);
    let value = match split {
        Some(i) => Complex64::new(body[..i].parse::<f64>().map_err(|_| bad())?, num(&body[i..])?),
        None => Complex64::new(0.0, num(body)?),
    };
    if !value.re.is_finite() || !value.im.is_finite() {
        return Err(bad());
    }
    Ok(value)
}

pub fn format_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.re == 0.0 {
        format!("{}j", z.im)
    } else {
        format!("{}{:+}j", z.re, z.im)
    }
}

/// `P,Q,a1,a2,b1,b2`.
pub fn parse_family(s: &str) -> Result<StateFamily> {
    let parts: Vec<Complex64> = s.split(',').map(parse_complex).collect::<Result<_>>()?;
    let [p, q, a1, a2, b1, b2]: [Complex64; 6] = parts.try_into().map_err(|v: Vec<_>| {
        CliError::Usage(format!("family needs 6 values P,Q,a1,a2,b1,b2, got {}", v.len()))
    })?;
    Ok(StateFamily::new(p, q, a1, a2, b1, b2)?)
}

pub fn format_family(f: &StateFamily) -> String {
    f.as_array().map(format_complex).join(",")
}

pub fn parse_qr(s: &str) -> Result<f64> {
    let q: f64 = s
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("cannot parse q_R value {s:?}")))?;
    if !(0.0..=1.0).contains(&q) {
        return Err(CliError::Usage(format!("q_R = {q} outside [0, 1]")));
    }
    Ok(q)
}

pub fn parse_ordering(s: &str) -> Result<OperatorOrdering> {
    Ok(s.trim().parse::<OperatorOrdering>()?)
}

/// Contents of a `key=value` config file. Blank lines and `#` comments are
/// ignored; list values are comma separated (`family` is a single value).
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ConfigFile {
    values: BTreeMap<String, String>,
}

impl ConfigFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut values = BTreeMap::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| {
                CliError::Usage(format!("config line {}: expected key=value", n + 1))
            })?;
            let k = k.trim().replace('-', "_");
            if !KEYS.contains(&k.as_str()) {
                return Err(CliError::Usage(format!("config line {}: unknown key {k:?}", n + 1)));
            }
            values.insert(k, v.trim().to_string());
        }
        Ok(Self { values })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        Self::parse(&text)
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    fn list(&self, key: &str) -> Vec<&str> {
        self.get(key)
            .map(|v| v.split(',').map(str::trim).filter(|s| !s.is_empty()).collect())
            .unwrap_or_default()
    }
}

/// Values given on the command line; empty or `None` means "not given".
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub r_points: Option<usize>,
    pub qr: Vec<f64>,
    pub orderings: Vec<String>,
    pub family: Option<String>,
    pub out: Option<PathBuf>,
    pub json: bool,
    pub r: Option<f64>,
}

/// Resolved sweep parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub r_points: usize,
    pub qr_values: Vec<f64>,
    pub orderings: Vec<OperatorOrdering>,
    pub family: StateFamily,
    pub out: Option<PathBuf>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            r_points: DEFAULT_R_POINTS,
            qr_values: default_qr_grid(),
            orderings: vec![OperatorOrdering::physical(), OperatorOrdering::legacy_interleaved()],
            family: StateFamily::maximally_entangled(),
            out: None,
        }
    }
}

impl SweepConfig {
    pub fn resolve(file: &ConfigFile, flags: &Overrides) -> Result<Self> {
        let mut cfg = Self::default();
        if let Some(v) = file.get("r_points") {
            cfg.r_points = v
                .parse()
                .map_err(|_| CliError::Usage(format!("r_points: cannot parse {v:?}")))?;
        }
        if let Some(n) = flags.r_points {
            cfg.r_points = n;
        }
        if cfg.r_points == 0 {
            return Err(CliError::Usage("r_points must be positive".into()));
        }
        cfg.qr_values = resolve_qr(file, flags)?;
        cfg.orderings = resolve_orderings(file, flags)?;
        cfg.family = resolve_family(file, flags)?;
        cfg.out = resolve_out(file, flags);
        Ok(cfg)
    }

    /// Defaults in config-file syntax.
    pub fn defaults_text() -> String {
        let d = Self::default();
        let qr: Vec<String> = d.qr_values.iter().map(|q| q.to_string()).collect();
        let ords: Vec<String> = d.orderings.iter().map(ToString::to_string).collect();
        format!(
            "r_points={}\nqr={}\nordering={}\nfamily={}\njson=false\n",
            d.r_points,
            qr.join(","),
            ords.join(","),
            format_family(&d.family)
        )
    }
}

pub fn resolve_qr(file: &ConfigFile, flags: &Overrides) -> Result<Vec<f64>> {
    if !flags.qr.is_empty() {
        return Ok(flags.qr.clone());
    }
    let listed = file.list("qr");
    if listed.is_empty() {
        return Ok(default_qr_grid());
    }
    listed.into_iter().map(parse_qr).collect()
}

pub fn resolve_orderings(file: &ConfigFile, flags: &Overrides) -> Result<Vec<OperatorOrdering>> {
    let names: Vec<&str> = if flags.orderings.is_empty() {
        file.list("ordering")
    } else {
        flags.orderings.iter().map(String::as_str).collect()
    };
    if names.is_empty() {
        return Ok(SweepConfig::default().orderings);
    }
    names.into_iter().map(parse_ordering).collect()
}

pub fn resolve_family(file: &ConfigFile, flags: &Overrides) -> Result<StateFamily> {
    match flags.family.as_deref().or(file.get("family")) {
        Some(s) => parse_family(s),
        None => Ok(StateFamily::maximally_entangled()),
    }
}

pub fn resolve_out(file: &ConfigFile, flags: &Overrides) -> Option<PathBuf> {
    flags.out.clone().or_else(|| file.get("out").map(PathBuf::from))
}

pub fn resolve_json(file: &ConfigFile, flags: &Overrides) -> Result<bool> {
    if flags.json {
        return Ok(true);
    }
    match file.get("json") {
        None | Some("false") | Some("0") | Some("no") => Ok(false),
        Some("true") | Some("1") | Some("yes") => Ok(true),
        Some(v) => Err(CliError::Usage(format!("json: expected true/false, got {v:?}"))),
    }
}

pub fn resolve_r(file: &ConfigFile, flags: &Overrides) -> Result<Option<f64>> {
    if let Some(r) = flags.r {
        return Ok(Some(r));
    }
    file.get("r")
        .map(|v| {
            v.parse()
                .map_err(|_| CliError::Usage(format!("r: cannot parse {v:?}")))
        })
        .transpose()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_forms() {
        let c = Complex64::new;
        assert_eq!(parse_complex("0.5").unwrap(), c(0.5, 0.0));
        assert_eq!(parse_complex("-0.5").unwrap(), c(-0.5, 0.0));
        assert_eq!(parse_complex("0.6+0.8j").unwrap(), c(0.6, 0.8));
        assert_eq!(parse_complex("0.6-0.8j").unwrap(), c(0.6, -0.8));
        assert_eq!(parse_complex("-1e-3+2e-1j").unwrap(), c(-1e-3, 0.2));
        assert_eq!(parse_complex("0.8j").unwrap(), c(0.0, 0.8));
        assert_eq!(parse_complex("-j").unwrap(), c(0.0, -1.0));
        assert_eq!(parse_complex("1e-2j").unwrap(), c(0.0, 0.01));
        assert!(parse_complex("abc").is_err());
        assert!(parse_complex("1+xj").is_err());
    }

    #[test]
    fn complex_format_round_trips() {
        for z in [
            Complex64::new(0.6, -0.8),
            Complex64::new(0.0, 1.0),
            Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0),
        ] {
            assert_eq!(parse_complex(&format_complex(z)).unwrap(), z);
        }
    }

    #[test]
    fn family_parsing() {
        let f = parse_family(&format_family(&StateFamily::maximally_entangled())).unwrap();
        assert_eq!(f, StateFamily::maximally_entangled());
        assert!(parse_family("1,0,1,0,1").is_err());
        assert!(matches!(
            parse_family("1,1,1,0,1,0"),
            Err(CliError::Core(rindler_core::Error::InvalidParameter(_)))
        ));
        let f = parse_family("0.6,0.8j,1,0,0,1").unwrap();
        assert_eq!(f.q, Complex64::new(0.0, 0.8));
    }

    #[test]
    fn defaults_reproduce_reference_configuration() {
        let cfg = SweepConfig::resolve(&ConfigFile::default(), &Overrides::default()).unwrap();
        assert_eq!(cfg, SweepConfig::default());
        assert_eq!(cfg.r_points, 50);
        assert_eq!(cfg.qr_values.len(), 8);
        assert_eq!(cfg.family, StateFamily::maximally_entangled());
        // The printed defaults parse back to the same configuration.
        let file = ConfigFile::parse(&SweepConfig::defaults_text()).unwrap();
        assert_eq!(SweepConfig::resolve(&file, &Overrides::default()).unwrap(), cfg);
    }

    #[test]
    fn flags_override_file() {
        let file = ConfigFile::parse(
            "# comment\nr_points = 7\nqr = 0.5, 1\nordering=legacy-interleaved\nfamily=1,0,1,0,1,0\n",
        )
        .unwrap();
        let cfg = SweepConfig::resolve(&file, &Overrides::default()).unwrap();
        assert_eq!(cfg.r_points, 7);
        assert_eq!(cfg.qr_values, vec![0.5, 1.0]);
        assert_eq!(cfg.orderings, vec![OperatorOrdering::legacy_interleaved()]);
        assert_eq!(cfg.family, StateFamily::vacuum());

        let flags = Overrides {
            r_points: Some(3),
            qr: vec![0.3],
            orderings: vec!["physical".into(), "02134".into()],
            ..Default::default()
        };
        let cfg = SweepConfig::resolve(&file, &flags).unwrap();
        assert_eq!(cfg.r_points, 3);
        assert_eq!(cfg.qr_values, vec![0.3]);
        assert_eq!(cfg.orderings.len(), 2);
        assert_eq!(cfg.family, StateFamily::vacuum());
    }

    #[test]
    fn config_errors() {
        assert!(ConfigFile::parse("bogus=1").is_err());
        assert!(ConfigFile::parse("no equals sign").is_err());
        let file = ConfigFile::parse("qr=1.5").unwrap();
        assert!(SweepConfig::resolve(&file, &Overrides::default()).is_err());
        let file = ConfigFile::parse("r_points=0").unwrap();
        assert!(SweepConfig::resolve(&file, &Overrides::default()).is_err());
        let file = ConfigFile::parse("json=maybe").unwrap();
        assert!(resolve_json(&file, &Overrides::default()).is_err());
    }
}
