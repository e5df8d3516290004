//! Seeded campaigns, their configuration and their outputs.

pub mod campaign;
pub mod config;
pub mod report;
pub mod svg;
pub mod theorem_one;

pub use campaign::{
    evaluate_optimal, run_dense_campaign, run_dense_trial, run_dense_trials, run_optimal_campaign,
    run_optimal_trial, run_optimal_trials, run_theorem_one_campaign, trial_seed, CampaignReport, DenseRow,
    DenseTrial, OptimalRow, OptimalTrial,
};
pub use config::{parse_alpha, ExperimentConfig, GridShape, OutputPaths, RegimeConfig, Thresholds};
pub use report::{emit_report, write_csv, CsvRow, ReportFormat};
pub use svg::emit_svg;
pub use theorem_one::{check_instance, run_theorem_one_suite, TheoremOneRow};
