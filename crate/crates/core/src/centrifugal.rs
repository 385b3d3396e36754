//! Exponential approximation of the centrifugal barrier.
//!
//! `1/r²` is replaced by
//!
//! ```text
//! (1/r0²) · [ c0 + c1/(e^{r/b} - 1) + c2/(e^{r/b} - 1)² ],   r0 = γ·b
//! ```
//!
//! which has the same functional form as the potential, so the radial equation
//! stays exactly solvable. Matching value and slope of `1/r²` at `r0` gives two
//! linear conditions on three unknowns (with `g = e^γ - 1`):
//!
//! ```text
//! c0 + c1/g + c2/g²                          = 1
//! γ · [ c1/g + (c1 + 2c2)/g² + 2c2/g³ ]      = 2
//! ```
//!
//! Case 2 and Case 3 close the system by fixing `c1 = 1` or `c2 = 1` and solving
//! both conditions. Case 1 fixes `c1 = c2 = 1` and keeps only the value
//! condition, so its slope residual is small but non-zero (≈ -7.7e-3 at γ = 1).

use serde::{Deserialize, Serialize};

use crate::error::{require_positive, Error, Result};
use crate::potential::screening_ratio;

/// Closure of the underdetermined matching system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Case {
    /// `c1 = c2 = 1`, `c0` from the value condition.
    Case1,
    /// `c1 = 1`, `(c0, c2)` from both conditions.
    Case2,
    /// `c2 = 1`, `(c0, c1)` from both conditions.
    Case3,
    /// `(0, 1, 1)`, the unshifted Greene–Aldrich form.
    Legacy,
}

impl Case {
    pub const ALL: [Case; 4] = [Case::Case1, Case::Case2, Case::Case3, Case::Legacy];

    pub fn name(&self) -> &'static str {
        match self {
            Case::Case1 => "case1",
            Case::Case2 => "case2",
            Case::Case3 => "case3",
            Case::Legacy => "legacy",
        }
    }
}

impl std::str::FromStr for Case {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "case1" | "1" => Ok(Case::Case1),
            "case2" | "2" => Ok(Case::Case2),
            "case3" | "3" => Ok(Case::Case3),
            "legacy" | "previous" => Ok(Case::Legacy),
            other => Err(format!("unknown scheme `{other}`")),
        }
    }
}

impl std::fmt::Display for Case {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// One approximation of `1/r²`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ApproxScheme {
    pub case: Case,
    pub c0: f64,
    pub c1: f64,
    pub c2: f64,
    /// Matching radius in units of the screening length, `γ = r0/b`.
    pub gamma: f64,
}

/// Residuals of the value and slope matching conditions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatchingResiduals {
    pub value: f64,
    pub slope: f64,
}

impl ApproxScheme {
    /// `r0 = γ·b`.
    pub fn matching_radius(&self, range: f64) -> f64 {
        self.gamma * range
    }

    #[inline]
    pub(crate) fn inverse_r2_at(&self, range: f64, r: f64) -> f64 {
        let v = screening_ratio(r / range);
        let r0 = self.matching_radius(range);
        (self.c0 + v * (self.c1 + self.c2 * v)) / (r0 * r0)
    }

    pub fn residuals(&self) -> MatchingResiduals {
        let g = self.gamma.exp_m1();
        let (c0, c1, c2) = (self.c0, self.c1, self.c2);
        MatchingResiduals {
            value: c0 + c1 / g + c2 / (g * g) - 1.0,
            slope: self.gamma * (c1 / g + (c1 + 2.0 * c2) / (g * g) + 2.0 * c2 / (g * g * g)) - 2.0,
        }
    }
}

/// Coefficients `(c0, c1, c2)` for a matching radius `r0 = γ·b`.
pub fn solve_coefficients(case: Case, gamma: f64) -> Result<ApproxScheme> {
    require_positive("gamma", gamma)?;
    let g = gamma.exp_m1();
    let (g1, g2, g3) = (1.0 / g, 1.0 / (g * g), 1.0 / (g * g * g));

    // value:  c0 + g1·c1 + g2·c2 = 1
    // slope:  (g1 + g2)·c1 + (2g2 + 2g3)·c2 = 2/γ
    let p1 = g1 + g2;
    let p2 = 2.0 * (g2 + g3);
    let target = 2.0 / gamma;

    let (c0, c1, c2) = match case {
        Case::Legacy => (0.0, 1.0, 1.0),
        Case::Case1 => (1.0 - g1 - g2, 1.0, 1.0),
        Case::Case2 => {
            // unknowns (c0, c2) with c1 = 1; the determinant of the 2x2 system is p2
            guard_determinant(p2)?;
            let c2 = (target - p1) / p2;
            (1.0 - g1 - g2 * c2, 1.0, c2)
        }
        Case::Case3 => {
            guard_determinant(p1)?;
            let c1 = (target - p2) / p1;
            (1.0 - g1 * c1 - g2, c1, 1.0)
        }
    };

    Ok(ApproxScheme {
        case,
        c0,
        c1,
        c2,
        gamma,
    })
}

fn guard_determinant(det: f64) -> Result<()> {
    if det.abs() < 1e-300 || !det.is_finite() {
        Err(Error::DegenerateSystem { determinant: det })
    } else {
        Ok(())
    }
}

/// The approximated `1/r²` at radius `r` for screening length `b`.
pub fn approx_inverse_r2(s: &ApproxScheme, b: f64, r: f64) -> Result<f64> {
    require_positive("b", b)?;
    require_positive("r", r)?;
    Ok(s.inverse_r2_at(b, r))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ApproximationRow {
    pub r: f64,
    pub exact: f64,
    pub approx: f64,
    pub abs_err: f64,
    pub rel_err: f64,
}

/// Exact `l(l+1)/(2r²)` barrier against its approximation on a grid
/// (`ħ = μ = 1`).
pub fn approximation_error_report(
    s: &ApproxScheme,
    b: f64,
    l: u32,
    grid: &[f64],
) -> Result<Vec<ApproximationRow>> {
    require_positive("b", b)?;
    if grid.iter().any(|r| !(*r > 0.0) || !r.is_finite()) || grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidGrid);
    }
    let weight = 0.5 * crate::potential::centrifugal_weight(l);
    Ok(grid
        .iter()
        .map(|&r| {
            let exact = weight / (r * r);
            let approx = weight * s.inverse_r2_at(b, r);
            let abs_err = (approx - exact).abs();
            let rel_err = if exact == 0.0 { 0.0 } else { abs_err / exact };
            ApproximationRow {
                r,
                exact,
                approx,
                abs_err,
                rel_err,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::E;

    #[test]
    fn case_constants() {
        let s1 = solve_coefficients(Case::Case1, 1.0).unwrap();
        assert!((s1.c0 - 0.0793264057923).abs() < 1e-12);
        assert_eq!((s1.c1, s1.c2), (1.0, 1.0));

        let s2 = solve_coefficients(Case::Case2, 1.0).unwrap();
        assert!((s2.c0 - 0.0768910877367).abs() < 1e-12);
        assert!((s2.c2 - 1.007190258153).abs() < 1e-11);
        assert_eq!(s2.c1, 1.0);

        let s3 = solve_coefficients(Case::Case3, 1.0).unwrap();
        assert!((s3.c0 - 0.0744557696812).abs() < 1e-12);
        assert!((s3.c1 - 1.0083691255228).abs() < 1e-12);
        assert_eq!(s3.c2, 1.0);

        for gamma in [0.3, 1.0, 7.5] {
            let l = solve_coefficients(Case::Legacy, gamma).unwrap();
            assert_eq!((l.c0, l.c1, l.c2), (0.0, 1.0, 1.0));
        }
    }

    #[test]
    fn case1_shift_closed_form() {
        let s = solve_coefficients(Case::Case1, 1.0).unwrap();
        let g = E - 1.0;
        assert!((s.c0 - (1.0 - 1.0 / g - 1.0 / (g * g))).abs() < 1e-13);
    }

    #[test]
    fn residuals_at_unit_gamma() {
        for case in [Case::Case2, Case::Case3] {
            let r = solve_coefficients(case, 1.0).unwrap().residuals();
            assert!(
                r.value.abs() < 1e-12 && r.slope.abs() < 1e-12,
                "{case}: {r:?}"
            );
        }
        let r = solve_coefficients(Case::Case1, 1.0).unwrap().residuals();
        assert!(r.value.abs() < 1e-12);
        // c1 = c2 = 1 leaves the slope condition unsatisfied
        assert!(
            (r.slope + 7.705232875012607e-3).abs() < 1e-12,
            "{}",
            r.slope
        );
    }

    #[test]
    fn general_gamma_residuals() {
        for gamma in [0.25, 0.5, 2.0, 3.0] {
            for case in [Case::Case2, Case::Case3] {
                let r = solve_coefficients(case, gamma).unwrap().residuals();
                assert!(
                    r.value.abs() < 1e-12 && r.slope.abs() < 1e-11,
                    "{gamma} {case}: {r:?}"
                );
            }
            let r = solve_coefficients(Case::Case1, gamma).unwrap().residuals();
            assert!(r.value.abs() < 1e-12);
        }
    }

    #[test]
    fn value_and_slope_match_by_finite_difference() {
        for case in [Case::Case2, Case::Case3] {
            let s = solve_coefficients(case, 1.0).unwrap();
            let b = 3.0;
            let r0 = s.matching_radius(b);
            let f = |r: f64| s.inverse_r2_at(b, r);
            assert!((f(r0) * r0 * r0 - 1.0).abs() < 1e-10);
            let h = 1e-5 * r0;
            let slope = (f(r0 + h) - f(r0 - h)) / (2.0 * h);
            let want = -2.0 / r0.powi(3);
            assert!(((slope - want) / want).abs() < 1e-9, "{case}");
        }
    }

    #[test]
    fn rejects_bad_gamma() {
        assert!(solve_coefficients(Case::Case1, 0.0).is_err());
        assert!(solve_coefficients(Case::Case2, -1.0).is_err());
        assert!(solve_coefficients(Case::Case3, f64::NAN).is_err());
    }

    #[test]
    fn inverse_r2_values() {
        let s = solve_coefficients(Case::Case1, 1.0).unwrap();
        assert!((approx_inverse_r2(&s, 1.0, 1.0).unwrap() - 1.0).abs() < 1e-13);
        // b → ∞ limit
        assert!((approx_inverse_r2(&s, 1e6, 1.0).unwrap() - 1.0).abs() < 1e-5);
        let legacy = solve_coefficients(Case::Legacy, 1.0).unwrap();
        let g = E - 1.0;
        let v = approx_inverse_r2(&legacy, 1.0, 1.0).unwrap();
        assert!((v - (1.0 / g + 1.0 / (g * g))).abs() < 1e-15);
        assert!((v - (1.0 - s.c0)).abs() < 1e-15);
        assert!(approx_inverse_r2(&s, 1.0, 0.0).is_err());
    }

    #[test]
    fn error_report() {
        let case1 = solve_coefficients(Case::Case1, 1.0).unwrap();
        let legacy = solve_coefficients(Case::Legacy, 1.0).unwrap();
        let grid: Vec<f64> = (1..50).map(|k| 0.5 * k as f64).collect();

        let zero = approximation_error_report(&case1, 10.0, 0, &grid).unwrap();
        assert!(zero
            .iter()
            .all(|row| row.abs_err == 0.0 && row.rel_err == 0.0));

        let b = 10.0;
        let at_r0 = approximation_error_report(&case1, b, 2, &[b]).unwrap()[0];
        assert!(at_r0.rel_err < 1e-13);
        let at_r0 = approximation_error_report(&legacy, b, 2, &[b]).unwrap()[0];
        assert!((at_r0.rel_err - case1.c0).abs() < 1e-13);

        let mut prev = f64::INFINITY;
        for b in [10.0, 40.0, 100.0] {
            let row = approximation_error_report(&case1, b, 1, &[1.0]).unwrap()[0];
            assert!(row.rel_err < prev);
            prev = row.rel_err;
        }

        assert!(approximation_error_report(&case1, 1.0, 1, &[])
            .unwrap()
            .is_empty());
        assert!(approximation_error_report(&case1, 1.0, 1, &[2.0, 1.0]).is_err());
    }
}
