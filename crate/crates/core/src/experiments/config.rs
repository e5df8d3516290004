use std::path::PathBuf;

use serde::{Deserialize, Deserializer, Serialize};

use crate::error::{Error, Result};
use crate::oracle::DEFAULT_GUARD;

/// One campaign: which experiment, its parameters, trial count and seed.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub regime: RegimeConfig,
    #[serde(default = "default_trials")]
    pub trials: usize,
    #[serde(default)]
    pub base_seed: u64,
    #[serde(default)]
    pub thresholds: Thresholds,
    #[serde(default)]
    pub output: OutputPaths,
}

fn default_trials() -> usize {
    1
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum RegimeConfig {
    /// `RG(n, n^-α)` through the equal-size grid.
    Dense {
        n: Vec<usize>,
        #[serde(deserialize_with = "deserialize_alpha")]
        alpha: f64,
    },
    /// `RG(m²t², c·n^(-1/4))` through the equal-count grid.
    Optimal {
        grid: Vec<GridShape>,
        c: f64,
        /// Overrides the derived `d` for every shape.
        #[serde(default)]
        d: Option<usize>,
    },
    /// Sweep of `H(m, d, t)` colourings, with the oracle on small instances.
    TheoremOne {
        max_m: usize,
        max_d: usize,
        max_t: usize,
        #[serde(default = "default_oracle_vertices")]
        oracle_max_vertices: usize,
    },
}

fn default_oracle_vertices() -> usize {
    12.min(DEFAULT_GUARD)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridShape {
    pub m: usize,
    pub t: usize,
}

/// Pass-rate thresholds for the campaigns. The underlying guarantees are
/// asymptotic, so these are finite-n acceptance levels.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Thresholds {
    pub min_embed_success_rate: f64,
    pub min_deviation_pass_rate: f64,
    pub min_homomorphism_rate: f64,
}

impl Default for Thresholds {
    fn default() -> Self {
        Self {
            min_embed_success_rate: 0.90,
            min_deviation_pass_rate: 0.99,
            min_homomorphism_rate: 0.95,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputPaths {
    pub dir: PathBuf,
    /// File stem; `<dir>/<stem>.csv` and `<dir>/<stem>.json` are written.
    #[serde(default)]
    pub stem: Option<String>,
}

impl Default for OutputPaths {
    fn default() -> Self {
        Self {
            dir: PathBuf::from("results"),
            stem: None,
        }
    }
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameter(msg));
        if self.trials == 0 {
            return bad("trials must be at least 1".into());
        }
        match &self.regime {
            RegimeConfig::Dense { n, alpha } => {
                if n.is_empty() || n.contains(&0) {
                    return bad("dense regime needs a non-empty list of n >= 1".into());
                }
                if !(0.0..=0.25).contains(alpha) {
                    return bad(format!("alpha must lie in [0, 1/4], got {alpha}"));
                }
            }
            RegimeConfig::Optimal { grid, c, d } => {
                if grid.is_empty() {
                    return bad("optimal regime needs at least one (m, t) shape".into());
                }
                if let Some(shape) = grid.iter().find(|s| s.t == 0 || s.t > s.m) {
                    return bad(format!("need 1 <= t <= m, got {shape:?}"));
                }
                if !(*c > 0.0 && *c < 1.0) {
                    return bad(format!("c must lie in (0, 1), got {c}"));
                }
                if *d == Some(0) {
                    return bad("d must be at least 1".into());
                }
            }
            RegimeConfig::TheoremOne {
                max_m, max_d, max_t, ..
            } => {
                if *max_m == 0 || *max_d == 0 || *max_t == 0 {
                    return bad("theorem-one sweep bounds must be at least 1".into());
                }
            }
        }
        Ok(())
    }

    pub fn default_stem(&self) -> &'static str {
        match self.regime {
            RegimeConfig::Dense { .. } => "dense",
            RegimeConfig::Optimal { .. } => "optimal",
            RegimeConfig::TheoremOne { .. } => "theorem1",
        }
    }
}

/// Parses `"1/4"`, `"0.25"` or a bare number.
pub fn parse_alpha(text: &str) -> Result<f64> {
    let bad = || Error::InvalidParameter(format!("cannot parse exponent {text:?}"));
    let value = match text.split_once('/') {
        Some((num, den)) => {
            let num: f64 = num.trim().parse().map_err(|_| bad())?;
            let den: f64 = den.trim().parse().map_err(|_| bad())?;
            if den == 0.0 {
                return Err(bad());
            }
            num / den
        }
        None => text.trim().parse().map_err(|_| bad())?,
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(bad())
    }
}

fn deserialize_alpha<'de, D: Deserializer<'de>>(de: D) -> std::result::Result<f64, D::Error> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Number(f64),
        Text(String),
    }
    match Repr::deserialize(de)? {
        Repr::Number(x) => Ok(x),
        Repr::Text(s) => parse_alpha(&s).map_err(serde::de::Error::custom),
    }
}
