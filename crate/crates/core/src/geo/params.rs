//! Grid parameters for the two embedding regimes.

use serde::{Deserialize, Serialize};

use crate::clique_grid::{classify_case, HParams, TheoremCase};
use crate::error::{Error, Result};

/// Parameters for the equal-size grid embedding of `RG(n, n^-α)`:
///
/// ```text
/// t = ⌈ln n⌉    m = ⌈√n / ln n⌉    l = 1/m    d = ⌈n^(1/2 − α) / ln n⌉ + 2
/// ```
///
/// chosen so that `r/l + 1 < d`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DenseParams {
    pub n: usize,
    pub alpha: f64,
    /// `n^-α`.
    pub r: f64,
    pub t: usize,
    pub m: usize,
    pub l: f64,
    pub d: usize,
}

impl DenseParams {
    /// Requires `n >= 1` and `0 <= α <= 1/4`. For `n < 3` the logarithm is
    /// floored at 1 so that the formulas stay finite.
    pub fn derive(n: usize, alpha: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("n must be at least 1".into()));
        }
        if !(0.0..=0.25).contains(&alpha) {
            return Err(Error::InvalidParameter(format!(
                "alpha must lie in [0, 1/4], got {alpha}"
            )));
        }
        let nf = n as f64;
        let ln_n = nf.ln().max(1.0);
        let t = ln_n.ceil() as usize;
        let m = (nf.sqrt() / ln_n).ceil() as usize;
        let d = (nf.powf(0.5 - alpha) / ln_n).ceil() as usize + 2;
        let r = nf.powf(-alpha);
        let p = Self {
            n,
            alpha,
            r,
            t,
            m,
            l: 1.0 / m as f64,
            d,
        };
        if !p.edge_condition_holds(r) {
            return Err(Error::InvalidParameter(format!(
                "r/l + 1 < d fails for n = {n}, alpha = {alpha}"
            )));
        }
        Ok(p)
    }

    /// Whether a graph with threshold `r` satisfies `r/l + 1 < d` on this
    /// grid, which makes every edge land in cells less than `d` apart.
    pub fn edge_condition_holds(&self, r: f64) -> bool {
        r * self.m as f64 + 1.0 < self.d as f64
    }

    pub fn h_params(&self) -> HParams {
        HParams {
            m: self.m,
            d: self.d,
            t: self.t,
        }
    }

    /// `(t(d+1) + 1)²`, the palette bound for the dense regime.
    pub fn palette_bound(&self) -> usize {
        let side = self.t * (self.d + 1) + 1;
        side * side
    }

    /// Cell capacity `t²`.
    pub fn capacity(&self) -> usize {
        self.t * self.t
    }
}

/// Parameters for the equal-count embedding with `n = m²t²` points.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct OptimalParams {
    pub n: usize,
    pub m: usize,
    pub t: usize,
    pub d: usize,
    pub r: f64,
}

fn check_threshold(r: f64) -> Result<()> {
    if r.is_finite() && r > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("threshold must be positive, got {r}")))
    }
}

fn square_count(m: usize, t: usize) -> Result<usize> {
    m.checked_mul(t)
        .and_then(|mt| mt.checked_mul(mt))
        .ok_or(Error::Overflow("m²t² exceeds the platform count"))
}

impl OptimalParams {
    /// `d = ⌊rm + 4√m·ln n / t⌋ + 1`, the smallest integer strictly above
    /// `rm + 4√m·ln n / t`. Requires `1 <= t <= m`.
    pub fn derive(m: usize, t: usize, r: f64) -> Result<Self> {
        if t == 0 || t > m {
            return Err(Error::InvalidParameter(format!(
                "need 1 <= t <= m, got m = {m}, t = {t}"
            )));
        }
        check_threshold(r)?;
        let n = square_count(m, t)?;
        let d = (r * m as f64 + separation_slack(m, t)).floor() as usize + 1;
        Ok(Self { n, m, t, d, r })
    }

    /// As [`derive`](Self::derive) with `r = c·n^(-1/4)`.
    pub fn from_c(m: usize, t: usize, c: f64) -> Result<Self> {
        let n = square_count(m, t)?;
        Self::derive(m, t, c * (n as f64).powf(-0.25))
    }

    /// Raw parameter control; no relation between `d` and `r` is enforced.
    pub fn with_d(m: usize, t: usize, d: usize, r: f64) -> Result<Self> {
        if m == 0 || t == 0 || d == 0 {
            return Err(Error::InvalidParameter(format!(
                "need m, t, d >= 1, got ({m}, {t}, {d})"
            )));
        }
        check_threshold(r)?;
        let n = square_count(m, t)?;
        Ok(Self { n, m, t, d, r })
    }

    pub fn h_params(&self) -> HParams {
        HParams {
            m: self.m,
            d: self.d,
            t: self.t,
        }
    }

    /// `m > t(d+1)²`, the condition for the square-root palette on the grid.
    pub fn in_case_three(&self) -> bool {
        classify_case(self.h_params()) == TheoremCase::Case3
    }

    /// `d > rm + 4√m·ln n / t`.
    pub fn separation_holds(&self) -> bool {
        self.d as f64 > self.r * self.m as f64 + separation_slack(self.m, self.t)
    }
}

/// `4√m·ln n / t` with `n = m²t²`.
pub fn separation_slack(m: usize, t: usize) -> f64 {
    let n = (m as f64 * t as f64).powi(2);
    4.0 * (m as f64).sqrt() * n.ln() / t as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha_range() {
        assert!(DenseParams::derive(100, -0.1).is_err());
        assert!(DenseParams::derive(100, 0.3).is_err());
        assert!(DenseParams::derive(0, 0.25).is_err());
    }

    #[test]
    fn alpha_zero_gives_d_equal_m_plus_two() {
        for n in [10, 100, 1000, 12345, 1_000_000] {
            let p = DenseParams::derive(n, 0.0).unwrap();
            assert_eq!(p.d, p.m + 2, "n = {n}");
            assert_eq!(p.r, 1.0);
        }
    }

    #[test]
    fn optimal_d_formula() {
        let p = OptimalParams::from_c(20, 5, 0.9).unwrap();
        assert_eq!(p.n, 10_000);
        assert!((p.r - 0.09).abs() < 1e-12);
        assert_eq!(p.d, 35);
        assert!(p.separation_holds());
        assert!(!p.in_case_three());
    }

    #[test]
    fn optimal_rejects_bad_shapes() {
        assert!(OptimalParams::derive(2, 3, 0.1).is_err());
        assert!(OptimalParams::derive(2, 0, 0.1).is_err());
        assert!(OptimalParams::derive(2, 1, -0.1).is_err());
        assert!(OptimalParams::with_d(9, 1, 0, 0.1).is_err());
    }
}
