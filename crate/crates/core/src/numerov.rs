//! Shooting eigensolver for the radial equation.
//!
//! The equation `u'' = (2μ/ħ²)(V_eff(r) - E) u` is integrated on a uniform grid
//! in `x = ln r` after the substitution `u = r^{1/2} w`, which gives
//!
//! ```text
//! w'' = [ r² (2μ/ħ²)(V_eff - E) + 1/4 ] w
//! ```
//!
//! without a first-derivative term, so the fourth-order Numerov scheme applies
//! directly. Near the origin `w ~ r^(s - 1/2)` is smooth in `x`, which keeps the
//! scheme at full order for any `l`.
//!
//! Solutions are shot outward from `r_min` and inward from `r_max` and matched
//! at the outer classical turning point. The number of eigenvalues below `E`
//! is `nodes_out + nodes_in + [defect < 0]`, a non-decreasing step function of
//! `E`; bisection on it isolates the `n`-th level.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::potential::{effective_potential_at, CentrifugalMode, PotentialParams};
use crate::spectrum::QuantumState;

const MAX_ITERATIONS: usize = 200;
const RESCALE: f64 = 1e150;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolverConfig {
    pub r_min: f64,
    pub r_max: f64,
    pub steps: usize,
    pub energy_bracket: (f64, f64),
    /// Bisection stops when the bracket is narrower than this (energy units).
    pub tolerance: f64,
    pub centrifugal_mode: CentrifugalMode,
}

impl SolverConfig {
    pub fn validate(&self, p: &PotentialParams, l: u32) -> Result<()> {
        if !(self.r_min > 0.0 && self.r_min < self.r_max && self.r_max.is_finite()) {
            return Err(Error::Config("need 0 < r_min < r_max"));
        }
        if self.steps < 1000 {
            return Err(Error::Config("need at least 1000 steps"));
        }
        if !(self.tolerance > 0.0) {
            return Err(Error::Config("tolerance must be positive"));
        }
        let (lo, hi) = self.energy_bracket;
        if !(lo < hi) {
            return Err(Error::Config("energy bracket must satisfy low < high"));
        }
        if hi > self.centrifugal_mode.threshold(p, l) {
            return Err(Error::Config(
                "energy bracket must lie below the continuum threshold",
            ));
        }
        Ok(())
    }

    pub fn with_steps(mut self, steps: usize) -> Self {
        self.steps = steps;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NumerovSolution {
    pub energy: f64,
    pub nodes: u32,
    /// Log-derivative mismatch at the matching point for the returned energy.
    pub residual: f64,
    pub iterations: usize,
}

/// Result of one trial integration at a fixed energy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Shot {
    pub nodes: u32,
    pub defect: f64,
    pub match_index: usize,
}

impl Shot {
    /// Number of eigenvalues strictly below the trial energy.
    pub fn count(&self) -> u32 {
        self.nodes + u32::from(self.defect < 0.0)
    }
}

/// Grid and potential tables for one `(p, l, mode)`; reusable across energies.
#[derive(Debug, Clone)]
pub struct Shooter {
    h: f64,
    /// `r² (2μ/ħ²) V_eff + 1/4`
    base: Vec<f64>,
    /// `r² (2μ/ħ²)`
    slope: Vec<f64>,
    /// `w_1 / w_0` from the regular solution `r^s (1 + c r)` at the origin.
    start_ratio: f64,
}

impl Shooter {
    pub fn new(p: &PotentialParams, l: u32, cfg: &SolverConfig) -> Result<Self> {
        cfg.validate(p, l)?;
        let n = cfg.steps;
        let h = (cfg.r_max / cfg.r_min).ln() / n as f64;
        let k = 1.0 / p.kinetic_factor();
        let mut base = Vec::with_capacity(n + 1);
        let mut slope = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let r = cfg.r_min * (h * i as f64).exp();
            let r2k = r * r * k;
            base.push(r2k * effective_potential_at(p, l, r, &cfg.centrifugal_mode) + 0.25);
            slope.push(r2k);
        }
        let strength = cfg.centrifugal_mode.origin_strength(p, l);
        let s = 0.5 + (0.25 + strength).max(0.0).sqrt();
        // r² k V_eff = strength + q r + O(r²); the 1/r term gives the first
        // Frobenius correction c = q / 2s. Without it, s-waves with s < 1 pick
        // up irregular admixture that dies off only as r^(2s-1).
        let r0 = cfg.r_min;
        let r1 = r0 * h.exp();
        let q = (base[0] - 0.25 - strength) / r0;
        let c = q / (2.0 * s);
        let start_ratio = (h * (s - 0.5)).exp() * (1.0 + c * r1) / (1.0 + c * r0);
        Ok(Self {
            h,
            base,
            slope,
            start_ratio,
        })
    }

    fn len(&self) -> usize {
        self.base.len()
    }

    /// Outer classical turning point, kept away from the grid ends.
    fn match_index(&self, energy: f64) -> usize {
        let n = self.len();
        let allowed = (0..n)
            .rev()
            .find(|&i| self.base[i] - 0.25 - energy * self.slope[i] < 0.0);
        let m = match allowed {
            Some(i) => i,
            None => (0..n)
                .min_by(|&a, &b| {
                    let fa = self.base[a] - energy * self.slope[a];
                    let fb = self.base[b] - energy * self.slope[b];
                    fa.total_cmp(&fb)
                })
                .unwrap_or(n / 2),
        };
        m.clamp(2, n - 3)
    }

    pub fn shoot(&self, energy: f64) -> Shot {
        let n = self.len();
        let h2 = self.h * self.h / 12.0;
        let t: Vec<f64> = (0..n)
            .map(|i| h2 * (self.base[i] - energy * self.slope[i]))
            .collect();
        let m = self.match_index(energy);

        // y_i = (1 - t_i) w_i obeys y_{i+1} = 2y_i - y_{i-1} + 12 t_i y_i / (1 - t_i)
        let step = |y_prev: f64, y_cur: f64, ti: f64| {
            2.0 * y_cur - y_prev + 12.0 * ti * y_cur / (1.0 - ti)
        };

        // outward, indices 0..=m+1
        let mut out = vec![0.0; m + 2];
        out[0] = 1.0 - t[0];
        out[1] = (1.0 - t[1]) * self.start_ratio;
        let mut nodes_out = 0u32;
        for i in 1..=m {
            out[i + 1] = step(out[i - 1], out[i], t[i]);
            if out[i + 1].abs() > RESCALE {
                for v in &mut out[..=i + 1] {
                    *v /= RESCALE;
                }
            }
        }
        for i in 1..=m {
            if out[i] != 0.0 && out[i - 1] != 0.0 && (out[i] > 0.0) != (out[i - 1] > 0.0) {
                nodes_out += 1;
            }
        }

        // inward, indices m-1..n-1
        let mut inn = vec![0.0; n];
        inn[n - 1] = 0.0;
        inn[n - 2] = 1.0;
        for i in (m..=n - 2).rev() {
            inn[i - 1] = step(inn[i + 1], inn[i], t[i]);
            if inn[i - 1].abs() > RESCALE {
                for v in &mut inn[i - 1..] {
                    *v /= RESCALE;
                }
            }
        }
        let mut nodes_in = 0u32;
        for i in m..n - 2 {
            if inn[i] != 0.0 && inn[i + 1] != 0.0 && (inn[i] > 0.0) != (inn[i + 1] > 0.0) {
                nodes_in += 1;
            }
        }

        let d_out = (out[m + 1] - out[m - 1]) / out[m];
        let d_in = (inn[m + 1] - inn[m - 1]) / inn[m];
        Shot {
            nodes: nodes_out + nodes_in,
            defect: (d_out - d_in) / (2.0 * self.h),
            match_index: m,
        }
    }
}

/// Bisects `cfg.energy_bracket` for the level with `st.n` nodes.
pub fn solve_eigenvalue(
    p: &PotentialParams,
    st: QuantumState,
    cfg: &SolverConfig,
) -> Result<NumerovSolution> {
    let shooter = Shooter::new(p, st.l, cfg)?;
    let (mut lo, mut hi) = cfg.energy_bracket;
    let count_lo = shooter.shoot(lo).count();
    let count_hi = shooter.shoot(hi).count();
    if !(count_lo <= st.n && count_hi > st.n) {
        return Err(Error::NoEigenvalueInBracket {
            low: lo,
            high: hi,
            target: st.n,
            count_low: count_lo,
            count_high: count_hi,
        });
    }
    let mut iterations = 0;
    while hi - lo
        > cfg
            .tolerance
            .max(4.0 * f64::EPSILON * lo.abs().max(hi.abs()))
    {
        if iterations >= MAX_ITERATIONS {
            return Err(Error::NotConverged {
                iterations,
                width: hi - lo,
            });
        }
        iterations += 1;
        let mid = 0.5 * (lo + hi);
        if shooter.shoot(mid).count() > st.n {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let energy = 0.5 * (lo + hi);
    let below = shooter.shoot(lo);
    let at = shooter.shoot(energy);
    Ok(NumerovSolution {
        energy,
        nodes: below.nodes,
        residual: at.defect.abs(),
        iterations,
    })
}

/// Domain, resolution and bracket sized from an estimate of the level.
///
/// `r_min = 1e-6·b`, or `1e-9·b` when an attractive `1/r²` core makes the
/// origin exponent `s < 1` (the start error then decays slowly or, at
/// `s = 1/2`, not at all); `r_max` puts 35 decay lengths beyond the origin (at least
/// `10·b`); the bracket starts at `[thr - 1.5β, thr - 0.5β]` for a binding
/// `β = thr - hint` and is widened until the level is inside. A hint at or
/// above the threshold falls back to `[min V_eff, thr)`.
pub fn auto_config(
    p: &PotentialParams,
    st: QuantumState,
    analytic_hint: f64,
    mode: CentrifugalMode,
) -> SolverConfig {
    let thr = mode.threshold(p, st.l);
    let r_min = if mode.origin_strength(p, st.l) < 0.0 {
        1e-9 * p.range
    } else {
        1e-6 * p.range
    };
    let binding = thr - analytic_hint;
    let mut cfg = SolverConfig {
        r_min,
        r_max: 10.0 * p.range,
        steps: 1000,
        energy_bracket: (thr - 1.0, thr - 0.5),
        tolerance: 1e-13,
        centrifugal_mode: mode,
    };
    if binding > 0.0 && binding.is_finite() {
        let kappa = (binding / p.kinetic_factor()).sqrt();
        cfg.r_max = (35.0 / kappa).max(10.0 * p.range);
    } else {
        cfg.r_max = 200.0 * p.range;
    }
    cfg.steps = default_steps(p, &cfg);
    cfg.tolerance = 1e-12 * binding.abs().max(p.energy_unit());

    let bracket = if binding > 0.0 && binding.is_finite() {
        widen_bracket(p, st, &cfg, thr, binding)
    } else {
        None
    };
    cfg.energy_bracket = bracket.unwrap_or_else(|| fallback_bracket(p, st, &cfg, thr));
    cfg
}

/// Steps scale with the number of `b`-sized cells in `x = ln r`.
fn default_steps(p: &PotentialParams, cfg: &SolverConfig) -> usize {
    let span = (cfg.r_max / cfg.r_min).ln();
    let outer = (cfg.r_max / p.range).max(1.0).ln();
    ((span + 4.0 * outer) * 1500.0).ceil().max(20_000.0) as usize
}

fn widen_bracket(
    p: &PotentialParams,
    st: QuantumState,
    cfg: &SolverConfig,
    thr: f64,
    binding: f64,
) -> Option<(f64, f64)> {
    let probe = SolverConfig {
        energy_bracket: (thr - 2.0 * binding, thr - 0.1 * binding),
        ..*cfg
    };
    let shooter = Shooter::new(p, st.l, &probe).ok()?;
    let (mut lo_gap, mut hi_gap) = (1.5 * binding, 0.5 * binding);
    for _ in 0..60 {
        let ok_lo = shooter.shoot(thr - lo_gap).count() <= st.n;
        let ok_hi = shooter.shoot(thr - hi_gap).count() > st.n;
        if ok_lo && ok_hi {
            return Some((thr - lo_gap, thr - hi_gap));
        }
        if !ok_lo {
            lo_gap *= 1.5;
        }
        if !ok_hi {
            hi_gap *= 0.5;
        }
    }
    None
}

fn fallback_bracket(
    p: &PotentialParams,
    st: QuantumState,
    cfg: &SolverConfig,
    thr: f64,
) -> (f64, f64) {
    let h = (cfg.r_max / cfg.r_min).ln() / cfg.steps as f64;
    let v_min = (0..=cfg.steps)
        .map(|i| {
            effective_potential_at(
                p,
                st.l,
                cfg.r_min * (h * i as f64).exp(),
                &cfg.centrifugal_mode,
            )
        })
        .fold(f64::INFINITY, f64::min);
    let hi = thr - 1e-14 * (thr - v_min).abs().max(f64::MIN_POSITIVE);
    (v_min.min(hi - f64::EPSILON * hi.abs().max(1.0)), hi)
}
