//! Sweep of the explicit `H(m, d, t)` colourings against `verify` and, for
//! small instances, the exhaustive oracle.

use serde::Serialize;

use crate::clique_grid::{build_h, classify_case, colour_h, ochi_h, HParams, TheoremCase};
use crate::colouring::verify;
use crate::error::Result;
use crate::oracle::Oracle;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremOneRow {
    pub m: usize,
    pub d: usize,
    pub t: usize,
    pub case: TheoremCase,
    pub formula: usize,
    pub palette: usize,
    pub proper_c1: bool,
    pub proper_c2: bool,
    pub orthogonal: bool,
    /// Exhaustive optimum, when `mt` is within the oracle limit.
    pub oracle: Option<usize>,
    /// `m <= d`: `H` is the complete graph on `mt < t(d+1)` vertices, so
    /// the formula exceeds the true optimum `mt`.
    pub degenerate: bool,
    pub passed: bool,
}

impl TheoremOneRow {
    pub fn oracle_mismatch(&self) -> bool {
        self.oracle.is_some_and(|o| o != self.formula)
    }
}

/// Evaluates one instance.
pub fn check_instance(p: HParams, oracle: Option<Oracle>) -> Result<TheoremOneRow> {
    let g = build_h(p)?;
    let pair = colour_h(p);
    let report = verify(&g, &pair)?;
    let formula = ochi_h(p);
    let n = g.n_vertices();
    let oracle_value = match oracle {
        Some(o) if n <= o.max_vertices => o.ochi(&g, n)?,
        _ => None,
    };
    let degenerate = p.m <= p.d;
    let mut row = TheoremOneRow {
        m: p.m,
        d: p.d,
        t: p.t,
        case: classify_case(p),
        formula,
        palette: pair.palette_size(),
        proper_c1: report.proper_c1,
        proper_c2: report.proper_c2,
        orthogonal: report.orthogonal,
        oracle: oracle_value,
        degenerate,
        passed: false,
    };
    row.passed = report.passed()
        && row.palette == formula
        && (!row.oracle_mismatch() || (degenerate && oracle_value == Some(n)));
    Ok(row)
}

/// All `(m, d, t)` with `1 <= m <= max_m`, `1 <= d <= max_d`,
/// `1 <= t <= max_t`, in lexicographic order. The oracle runs where
/// `mt <= oracle_max_vertices`.
pub fn run_theorem_one_suite(
    max_m: usize,
    max_d: usize,
    max_t: usize,
    oracle_max_vertices: usize,
) -> Result<Vec<TheoremOneRow>> {
    let oracle = Oracle::with_guard(oracle_max_vertices);
    let mut rows = Vec::new();
    for m in 1..=max_m {
        for d in 1..=max_d {
            for t in 1..=max_t {
                rows.push(check_instance(HParams::new(m, d, t)?, Some(oracle))?);
            }
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure_one_instance() {
        let row = check_instance(HParams::new(9, 1, 2).unwrap(), None).unwrap();
        assert!(row.passed);
        assert_eq!(row.formula, 5);
        assert_eq!(row.case, TheoremCase::Case3);
    }

    #[test]
    fn single_vertex_is_degenerate() {
        let row = check_instance(HParams::new(1, 1, 1).unwrap(), Some(Oracle::default())).unwrap();
        assert_eq!(row.formula, 2);
        assert_eq!(row.oracle, Some(1));
        assert!(row.degenerate);
        assert!(row.oracle_mismatch());
        assert!(row.passed);
    }
}
