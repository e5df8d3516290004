//! CSV and JSON emission for campaign reports.
//!
//! CSV columns follow the field order of each row type and are listed in
//! [`CsvRow::COLUMNS`]. Missing values are empty cells. Floats use Rust's
//! shortest round-trip formatting, so output bytes depend only on values.

use std::io::Write;

use serde::Serialize;

use crate::error::Result;
use crate::experiments::campaign::{CampaignReport, DenseRow, OptimalRow};
use crate::experiments::theorem_one::TheoremOneRow;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
}

/// A row with a fixed column layout, also serialisable as JSON.
pub trait CsvRow: Serialize {
    const COLUMNS: &'static [&'static str];
    fn record(&self) -> Vec<String>;
}

fn opt<T: ToString>(value: Option<T>) -> String {
    value.map_or_else(String::new, |v| v.to_string())
}

impl CsvRow for DenseRow {
    const COLUMNS: &'static [&'static str] = &[
        "n",
        "alpha",
        "r",
        "t",
        "m",
        "d",
        "base_seed",
        "trials",
        "embed_success_rate",
        "mean_overflow_cells",
        "mean_max_occupancy",
        "homomorphism_rate",
        "verify_rate",
        "mean_palette",
        "max_palette",
        "min_palette",
        "declared_palette",
        "palette_bound",
        "palette_floor",
        "palette_over_power",
        "palette_over_sqrt_n",
        "palette_over_chromatic_floor",
        "declared_over_sqrt_n",
    ];

    fn record(&self) -> Vec<String> {
        vec![
            self.n.to_string(),
            self.alpha.to_string(),
            self.r.to_string(),
            self.t.to_string(),
            self.m.to_string(),
            self.d.to_string(),
            self.base_seed.to_string(),
            self.trials.to_string(),
            self.embed_success_rate.to_string(),
            self.mean_overflow_cells.to_string(),
            self.mean_max_occupancy.to_string(),
            opt(self.homomorphism_rate),
            opt(self.verify_rate),
            opt(self.mean_palette),
            opt(self.max_palette),
            opt(self.min_palette),
            self.declared_palette.to_string(),
            self.palette_bound.to_string(),
            self.palette_floor.to_string(),
            opt(self.palette_over_power),
            opt(self.palette_over_sqrt_n),
            opt(self.palette_over_chromatic_floor),
            self.declared_over_sqrt_n.to_string(),
        ]
    }
}

impl CsvRow for OptimalRow {
    const COLUMNS: &'static [&'static str] = &[
        "m",
        "t",
        "n",
        "c",
        "r",
        "d",
        "base_seed",
        "trials",
        "case_three",
        "separation_holds",
        "y_bound",
        "x_bound",
        "x_bound_vacuous",
        "y_pass_rate",
        "x_pass_rate",
        "deviation_pass_rate",
        "max_y_dev",
        "max_x_dev",
        "homomorphism_rate",
        "homomorphism_rate_given_bounds",
        "verify_rate",
        "mean_palette",
        "palette_over_sqrt_n",
    ];

    fn record(&self) -> Vec<String> {
        vec![
            self.m.to_string(),
            self.t.to_string(),
            self.n.to_string(),
            self.c.to_string(),
            self.r.to_string(),
            self.d.to_string(),
            self.base_seed.to_string(),
            self.trials.to_string(),
            self.case_three.to_string(),
            self.separation_holds.to_string(),
            self.y_bound.to_string(),
            self.x_bound.to_string(),
            self.x_bound_vacuous.to_string(),
            self.y_pass_rate.to_string(),
            self.x_pass_rate.to_string(),
            self.deviation_pass_rate.to_string(),
            self.max_y_dev.to_string(),
            self.max_x_dev.to_string(),
            self.homomorphism_rate.to_string(),
            opt(self.homomorphism_rate_given_bounds),
            opt(self.verify_rate),
            opt(self.mean_palette),
            opt(self.palette_over_sqrt_n),
        ]
    }
}

impl CsvRow for TheoremOneRow {
    const COLUMNS: &'static [&'static str] = &[
        "m",
        "d",
        "t",
        "case",
        "formula",
        "palette",
        "proper_c1",
        "proper_c2",
        "orthogonal",
        "oracle",
        "degenerate",
        "passed",
    ];

    fn record(&self) -> Vec<String> {
        vec![
            self.m.to_string(),
            self.d.to_string(),
            self.t.to_string(),
            format!("{:?}", self.case),
            self.formula.to_string(),
            self.palette.to_string(),
            self.proper_c1.to_string(),
            self.proper_c2.to_string(),
            self.orthogonal.to_string(),
            opt(self.oracle),
            self.degenerate.to_string(),
            self.passed.to_string(),
        ]
    }
}

pub fn write_csv<R: CsvRow, W: Write>(rows: &[R], out: W) -> Result<()> {
    let mut csv = csv::Writer::from_writer(out);
    csv.write_record(R::COLUMNS)?;
    for row in rows {
        csv.write_record(row.record())?;
    }
    csv.flush()?;
    Ok(())
}

/// Writes `report` as CSV (rows only) or pretty JSON (config and rows,
/// tagged with the schema version). Wall time is never written.
pub fn emit_report<R, W>(report: &CampaignReport<R>, format: ReportFormat, mut out: W) -> Result<()>
where
    R: CsvRow,
    W: Write,
{
    match format {
        ReportFormat::Csv => write_csv(&report.rows, out),
        ReportFormat::Json => {
            serde_json::to_writer_pretty(&mut out, report)?;
            out.write_all(b"\n")?;
            Ok(())
        }
    }
}
