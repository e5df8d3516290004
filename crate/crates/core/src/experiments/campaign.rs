//! Seeded Monte Carlo campaigns for the two embedding regimes.
//!
//! Trials run in parallel; each trial derives its own seed from the base
//! seed, the instance size and the trial index, and rows are folded in
//! trial order, so a report depends only on its configuration.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::clique_grid::{ochi_l_upper, CliqueGrid};
use crate::colouring::{clique_number_lower_bound, verify};
use crate::embed::{check_homomorphism, colour_rgg_dense, colour_rgg_optimal, EmbedError, EmbeddingMap, Regime};
use crate::error::{Error, Result};
use crate::experiments::config::{ExperimentConfig, GridShape, RegimeConfig};
use crate::experiments::theorem_one::{run_theorem_one_suite, TheoremOneRow};
use crate::geo::{check_deviation_bounds, equal_count_partition, equal_size_partition, DenseParams, OptimalParams, PointSet};

/// Results of one campaign. `wall_time` is excluded from serialised output
/// so that replays are byte-identical.
#[derive(Clone, Debug, Serialize)]
pub struct CampaignReport<R> {
    pub schema_version: u32,
    pub config: ExperimentConfig,
    pub rows: Vec<R>,
    #[serde(skip)]
    pub wall_time: Duration,
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed for one trial, mixing the base seed with an instance key and the
/// trial index.
pub fn trial_seed(base_seed: u64, key: u64, trial: usize) -> u64 {
    splitmix64(splitmix64(splitmix64(base_seed) ^ key) ^ trial as u64)
}

fn mean(values: impl Iterator<Item = f64>) -> Option<f64> {
    let (sum, count) = values.fold((0.0, 0usize), |(s, c), x| (s + x, c + 1));
    (count > 0).then(|| sum / count as f64)
}

fn rate(hits: usize, total: usize) -> Option<f64> {
    (total > 0).then(|| hits as f64 / total as f64)
}

/// Outcome of one dense-regime trial.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DenseTrial {
    pub seed: u64,
    pub max_occupancy: usize,
    pub overflow_cells: usize,
    pub embedded: bool,
    pub homomorphism_ok: Option<bool>,
    pub verified: Option<bool>,
    pub palette: Option<usize>,
}

/// Sample, embed, colour and verify one `RG(n, n^-α)` instance.
pub fn run_dense_trial(dp: &DenseParams, seed: u64) -> Result<DenseTrial> {
    let ps = PointSet::sample(dp.n, dp.r, seed)?;
    let graph = ps.graph();
    let max_occupancy = equal_size_partition(&ps, dp.m)?
        .occupancy()
        .into_iter()
        .max()
        .unwrap_or(0);
    let mut trial = DenseTrial {
        seed,
        max_occupancy,
        overflow_cells: 0,
        embedded: false,
        homomorphism_ok: None,
        verified: None,
        palette: None,
    };
    match colour_rgg_dense(&ps, &graph, dp) {
        Ok(coloured) => {
            trial.embedded = true;
            trial.homomorphism_ok = Some(coloured.homomorphism_ok);
            trial.verified = Some(verify(&graph, &coloured.pair)?.passed());
            trial.palette = Some(coloured.palette_size());
        }
        Err(EmbedError::CellOverflow { cells, .. }) => trial.overflow_cells = cells.len(),
        Err(EmbedError::Invalid(e)) => return Err(e),
        Err(e @ EmbedError::OutsideCaseThree { .. }) => return Err(Error::InvalidParameter(e.to_string())),
    }
    Ok(trial)
}

/// One row per `n` of a dense campaign. Rates are over all trials except
/// where noted; palette statistics cover embedded trials only.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DenseRow {
    pub n: usize,
    pub alpha: f64,
    pub r: f64,
    pub t: usize,
    pub m: usize,
    pub d: usize,
    pub base_seed: u64,
    pub trials: usize,
    pub embed_success_rate: f64,
    pub mean_overflow_cells: f64,
    pub mean_max_occupancy: f64,
    /// Over embedded trials.
    pub homomorphism_rate: Option<f64>,
    /// Over embedded trials.
    pub verify_rate: Option<f64>,
    pub mean_palette: Option<f64>,
    pub max_palette: Option<usize>,
    pub min_palette: Option<usize>,
    /// Palette of the grid colouring before unused colours are dropped.
    pub declared_palette: usize,
    /// `(t(d+1) + 1)²`.
    pub palette_bound: usize,
    /// `⌈√n⌉`.
    pub palette_floor: usize,
    pub palette_over_power: Option<f64>,
    pub palette_over_sqrt_n: Option<f64>,
    pub palette_over_chromatic_floor: Option<f64>,
    pub declared_over_sqrt_n: f64,
}

impl DenseRow {
    pub fn from_trials(dp: &DenseParams, base_seed: u64, trials: &[DenseTrial]) -> Self {
        let n = dp.n as f64;
        let total = trials.len();
        let embedded: Vec<&DenseTrial> = trials.iter().filter(|t| t.embedded).collect();
        let palettes: Vec<usize> = embedded.iter().filter_map(|t| t.palette).collect();
        let mean_palette = mean(palettes.iter().map(|&p| p as f64));
        let power = n.powf(1.0 - 2.0 * dp.alpha);
        Self {
            n: dp.n,
            alpha: dp.alpha,
            r: dp.r,
            t: dp.t,
            m: dp.m,
            d: dp.d,
            base_seed,
            trials: total,
            embed_success_rate: embedded.len() as f64 / total as f64,
            mean_overflow_cells: mean(trials.iter().map(|t| t.overflow_cells as f64)).unwrap_or(0.0),
            mean_max_occupancy: mean(trials.iter().map(|t| t.max_occupancy as f64)).unwrap_or(0.0),
            homomorphism_rate: rate(
                embedded.iter().filter(|t| t.homomorphism_ok == Some(true)).count(),
                embedded.len(),
            ),
            verify_rate: rate(
                embedded.iter().filter(|t| t.verified == Some(true)).count(),
                embedded.len(),
            ),
            mean_palette,
            max_palette: palettes.iter().copied().max(),
            min_palette: palettes.iter().copied().min(),
            declared_palette: ochi_l_upper(dp.h_params()),
            palette_bound: dp.palette_bound(),
            palette_floor: clique_number_lower_bound(dp.n),
            palette_over_power: mean_palette.map(|p| p / power),
            palette_over_sqrt_n: mean_palette.map(|p| p / n.sqrt()),
            palette_over_chromatic_floor: mean_palette.map(|p| p / (3f64.sqrt() / 2.0 * power)),
            declared_over_sqrt_n: ochi_l_upper(dp.h_params()) as f64 / n.sqrt(),
        }
    }
}

pub fn run_dense_trials(dp: &DenseParams, base_seed: u64, trials: usize) -> Result<Vec<DenseTrial>> {
    (0..trials)
        .into_par_iter()
        .map(|k| run_dense_trial(dp, trial_seed(base_seed, dp.n as u64, k)))
        .collect()
}

/// Runs every `n` of a dense configuration.
pub fn run_dense_campaign(cfg: &ExperimentConfig) -> Result<CampaignReport<DenseRow>> {
    cfg.validate()?;
    let RegimeConfig::Dense { n, alpha } = &cfg.regime else {
        return Err(Error::InvalidParameter("dense campaign needs a dense configuration".into()));
    };
    let started = Instant::now();
    let mut rows = Vec::with_capacity(n.len());
    for &size in n {
        let dp = DenseParams::derive(size, *alpha)?;
        let trials = run_dense_trials(&dp, cfg.base_seed, cfg.trials)?;
        rows.push(DenseRow::from_trials(&dp, cfg.base_seed, &trials));
    }
    Ok(CampaignReport {
        schema_version: crate::io::SCHEMA_VERSION,
        config: cfg.clone(),
        rows,
        wall_time: started.elapsed(),
    })
}

/// Outcome of one optimal-regime trial.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OptimalTrial {
    pub seed: u64,
    pub y_ok: bool,
    pub x_ok: bool,
    pub max_y_dev: f64,
    pub max_x_dev: f64,
    pub homomorphism_ok: bool,
    pub verified: Option<bool>,
    pub palette: Option<usize>,
}

/// Sample `m²t²` points, partition by order statistics, check the
/// boundary bounds and the homomorphism, and colour when the grid is in
/// Case 3.
pub fn run_optimal_trial(op: &OptimalParams, seed: u64) -> Result<OptimalTrial> {
    let ps = PointSet::sample(op.n, op.r.min(std::f64::consts::SQRT_2), seed)?;
    evaluate_optimal(&ps, op, seed)
}

/// The optimal-regime checks on a given point set, e.g. a hand-placed one.
pub fn evaluate_optimal(ps: &PointSet, op: &OptimalParams, seed: u64) -> Result<OptimalTrial> {
    if ps.len() != op.n {
        return Err(Error::InvalidParameter(format!("expected {} points, got {}", op.n, ps.len())));
    }
    let graph = ps.graph();
    let cp = equal_count_partition(ps, op.m, op.t)?;
    let deviation = check_deviation_bounds(&cp)?;
    let mut trial = OptimalTrial {
        seed,
        y_ok: deviation.y_holds,
        x_ok: deviation.x_holds,
        max_y_dev: deviation.max_y_dev,
        max_x_dev: deviation.max_x_dev,
        homomorphism_ok: false,
        verified: None,
        palette: None,
    };
    if op.in_case_three() {
        let coloured = colour_rgg_optimal(ps, &graph, op).map_err(|e| match e {
            EmbedError::Invalid(e) => e,
            other => Error::InvalidParameter(other.to_string()),
        })?;
        trial.homomorphism_ok = coloured.homomorphism_ok;
        trial.verified = Some(verify(&graph, &coloured.pair)?.passed());
        trial.palette = Some(coloured.palette_size());
    } else {
        let em = EmbeddingMap::from_partition(&cp, op.h_params(), Regime::Optimal).map_err(|e| match e {
            EmbedError::Invalid(e) => e,
            other => Error::InvalidParameter(other.to_string()),
        })?;
        trial.homomorphism_ok = check_homomorphism(&graph, &em, &CliqueGrid::new(op.h_params())?).ok;
    }
    Ok(trial)
}

/// One row per `(m, t)` shape of an optimal campaign.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OptimalRow {
    pub m: usize,
    pub t: usize,
    pub n: usize,
    pub c: f64,
    pub r: f64,
    pub d: usize,
    pub base_seed: u64,
    pub trials: usize,
    /// `m > t(d+1)²`; palette columns are filled only when this holds.
    pub case_three: bool,
    pub separation_holds: bool,
    pub y_bound: f64,
    pub x_bound: f64,
    pub x_bound_vacuous: bool,
    pub y_pass_rate: f64,
    pub x_pass_rate: f64,
    pub deviation_pass_rate: f64,
    pub max_y_dev: f64,
    pub max_x_dev: f64,
    pub homomorphism_rate: f64,
    /// Homomorphism rate among trials whose boundaries met both bounds.
    pub homomorphism_rate_given_bounds: Option<f64>,
    pub verify_rate: Option<f64>,
    pub mean_palette: Option<f64>,
    pub palette_over_sqrt_n: Option<f64>,
}

impl OptimalRow {
    pub fn from_trials(op: &OptimalParams, c: f64, base_seed: u64, trials: &[OptimalTrial]) -> Self {
        let total = trials.len();
        let ln_n = (op.n as f64).ln();
        let mf = op.m as f64;
        let tf = op.t as f64;
        let x_bound = 2.0 * ln_n / (tf * mf.sqrt());
        let both: Vec<&OptimalTrial> = trials.iter().filter(|t| t.y_ok && t.x_ok).collect();
        let coloured: Vec<&OptimalTrial> = trials.iter().filter(|t| t.palette.is_some()).collect();
        let mean_palette = mean(coloured.iter().filter_map(|t| t.palette).map(|p| p as f64));
        Self {
            m: op.m,
            t: op.t,
            n: op.n,
            c,
            r: op.r,
            d: op.d,
            base_seed,
            trials: total,
            case_three: op.in_case_three(),
            separation_holds: op.separation_holds(),
            y_bound: 2.0 * ln_n / (mf * tf),
            x_bound,
            x_bound_vacuous: x_bound >= 1.0,
            y_pass_rate: trials.iter().filter(|t| t.y_ok).count() as f64 / total as f64,
            x_pass_rate: trials.iter().filter(|t| t.x_ok).count() as f64 / total as f64,
            deviation_pass_rate: both.len() as f64 / total as f64,
            max_y_dev: trials.iter().map(|t| t.max_y_dev).fold(0.0, f64::max),
            max_x_dev: trials.iter().map(|t| t.max_x_dev).fold(0.0, f64::max),
            homomorphism_rate: trials.iter().filter(|t| t.homomorphism_ok).count() as f64 / total as f64,
            homomorphism_rate_given_bounds: rate(both.iter().filter(|t| t.homomorphism_ok).count(), both.len()),
            verify_rate: rate(
                coloured.iter().filter(|t| t.verified == Some(true)).count(),
                coloured.len(),
            ),
            mean_palette,
            palette_over_sqrt_n: mean_palette.map(|p| p / (op.n as f64).sqrt()),
        }
    }
}

fn optimal_params(shape: GridShape, c: f64, d: Option<usize>) -> Result<OptimalParams> {
    let derived = OptimalParams::from_c(shape.m, shape.t, c)?;
    match d {
        Some(d) => OptimalParams::with_d(shape.m, shape.t, d, derived.r),
        None => Ok(derived),
    }
}

pub fn run_optimal_trials(op: &OptimalParams, base_seed: u64, trials: usize) -> Result<Vec<OptimalTrial>> {
    let key = ((op.m as u64) << 32) ^ op.t as u64;
    (0..trials)
        .into_par_iter()
        .map(|k| run_optimal_trial(op, trial_seed(base_seed, key, k)))
        .collect()
}

/// Runs every `(m, t)` shape of an optimal configuration.
pub fn run_optimal_campaign(cfg: &ExperimentConfig) -> Result<CampaignReport<OptimalRow>> {
    cfg.validate()?;
    let RegimeConfig::Optimal { grid, c, d } = &cfg.regime else {
        return Err(Error::InvalidParameter("optimal campaign needs an optimal configuration".into()));
    };
    let started = Instant::now();
    let mut rows = Vec::with_capacity(grid.len());
    for &shape in grid {
        let op = optimal_params(shape, *c, *d)?;
        let trials = run_optimal_trials(&op, cfg.base_seed, cfg.trials)?;
        rows.push(OptimalRow::from_trials(&op, *c, cfg.base_seed, &trials));
    }
    Ok(CampaignReport {
        schema_version: crate::io::SCHEMA_VERSION,
        config: cfg.clone(),
        rows,
        wall_time: started.elapsed(),
    })
}

/// Runs a theorem-one sweep configuration.
pub fn run_theorem_one_campaign(cfg: &ExperimentConfig) -> Result<CampaignReport<TheoremOneRow>> {
    cfg.validate()?;
    let RegimeConfig::TheoremOne {
        max_m,
        max_d,
        max_t,
        oracle_max_vertices,
    } = cfg.regime
    else {
        return Err(Error::InvalidParameter("theorem-one sweep needs a theorem_one configuration".into()));
    };
    let started = Instant::now();
    let rows = run_theorem_one_suite(max_m, max_d, max_t, oracle_max_vertices)?;
    Ok(CampaignReport {
        schema_version: crate::io::SCHEMA_VERSION,
        config: cfg.clone(),
        rows,
        wall_time: started.elapsed(),
    })
}
