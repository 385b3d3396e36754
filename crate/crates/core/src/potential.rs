//! Manning–Rosen potential
//!
//! ```text
//! V(r) = (ħ²/2μb²) · [ -A·v(r) + α(α-1)·v(r)² ],   v(r) = e^{-r/b} / (1 - e^{-r/b}) = 1 / (e^{r/b} - 1)
//! ```
//!
//! `A` and `α` are dimensionless, `b` is the screening length. The potential is
//! unchanged under `α → 1 - α` because only the product `α(α-1)` enters.
//!
//! Everything here works in "model units": energies come out in whatever unit
//! `ħ²/(μ·length²)` carries. With `ħ = μ = 1` (the default) that is atomic units.

use serde::{Deserialize, Serialize};

use crate::centrifugal::ApproxScheme;
use crate::error::{require_finite, require_positive, Error, Result};

/// One Manning–Rosen problem instance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PotentialParams {
    /// Dimensionless coupling `A`.
    pub coupling: f64,
    /// Dimensionless shape parameter `α`.
    pub alpha: f64,
    /// Screening length `b`.
    pub range: f64,
    /// Particle (reduced) mass `μ`.
    pub mass: f64,
    /// Reduced Planck constant `ħ`.
    pub hbar: f64,
}

impl PotentialParams {
    pub fn new(coupling: f64, alpha: f64, range: f64, mass: f64, hbar: f64) -> Result<Self> {
        require_finite("A", coupling)?;
        require_finite("alpha", alpha)?;
        require_positive("b", range)?;
        require_positive("mass", mass)?;
        require_positive("hbar", hbar)?;
        Ok(Self {
            coupling,
            alpha,
            range,
            mass,
            hbar,
        })
    }

    /// Atomic-unit mode, `ħ = μ = 1`.
    pub fn atomic(coupling: f64, alpha: f64, range: f64) -> Result<Self> {
        Self::new(coupling, alpha, range, 1.0, 1.0)
    }

    /// Same parameters with a different coupling.
    pub fn with_coupling(mut self, coupling: f64) -> Self {
        self.coupling = coupling;
        self
    }

    pub fn with_alpha(mut self, alpha: f64) -> Self {
        self.alpha = alpha;
        self
    }

    /// `α(α-1)`, the only combination of `α` that enters the potential.
    pub fn alpha_product(&self) -> f64 {
        self.alpha * (self.alpha - 1.0)
    }

    /// `ħ²/2μ`, converts `1/length²` into energy.
    pub fn kinetic_factor(&self) -> f64 {
        self.hbar * self.hbar / (2.0 * self.mass)
    }

    /// `ħ²/(2μb²)`, the natural energy unit of the problem.
    pub fn energy_unit(&self) -> f64 {
        self.kinetic_factor() / (self.range * self.range)
    }

    /// Unchecked evaluation of V(r), for hot loops where `r > 0` is guaranteed.
    #[inline]
    pub fn potential_at(&self, r: f64) -> f64 {
        let v = screening_ratio(r / self.range);
        self.energy_unit() * v * (self.alpha_product() * v - self.coupling)
    }
}

/// `v = e^{-x}/(1 - e^{-x}) = 1/(e^x - 1)`, evaluated through `expm1` so small `x`
/// keeps full relative precision.
#[inline]
pub fn screening_ratio(x: f64) -> f64 {
    1.0 / x.exp_m1()
}

fn check_radius(r: f64) -> Result<f64> {
    require_finite("r", r)?;
    if r <= 0.0 {
        return Err(Error::Domain {
            name: "r",
            value: r,
            reason: "radius must be > 0",
        });
    }
    Ok(r)
}

/// V(r) for the Manning–Rosen potential.
pub fn mr_potential(p: &PotentialParams, r: f64) -> Result<f64> {
    check_radius(r)?;
    Ok(p.potential_at(r))
}

/// Location and depth of the interior minimum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PotentialMinimum {
    pub r0: f64,
    pub v0: f64,
}

fn minimum_log_argument(p: &PotentialParams) -> Result<f64> {
    let arg = 1.0 + 2.0 * p.alpha_product() / p.coupling;
    // A > 0 together with arg > 1 forces α(α-1) > 0, i.e. a true minimum
    if !(p.coupling > 0.0) || !(arg > 1.0) || !arg.is_finite() {
        return Err(Error::NoInteriorMinimum { log_argument: arg });
    }
    Ok(arg)
}

/// `r0 = b·ln(1 + 2α(α-1)/A)` and `V0 = V(r0)`.
///
/// `V0` is evaluated directly from the potential rather than from a closed
/// form; [`minimum_depth_closed_form`] is kept as a cross-check.
pub fn potential_minimum(p: &PotentialParams) -> Result<PotentialMinimum> {
    let arg = minimum_log_argument(p)?;
    let r0 = p.range * arg.ln();
    Ok(PotentialMinimum {
        r0,
        v0: p.potential_at(r0),
    })
}

/// `-A²ħ²/(8μb²α(α-1))`.
pub fn minimum_depth_closed_form(p: &PotentialParams) -> Result<f64> {
    minimum_log_argument(p)?;
    Ok(-p.energy_unit() * p.coupling * p.coupling / (4.0 * p.alpha_product()))
}

/// Curvature `d²V/dr²` at the minimum (the force constant):
/// `(ħ²/2μ) · A²[A + 2α(α-1)]² / (8 b⁴ [α(α-1)]³)`.
pub fn second_derivative_at_min(p: &PotentialParams) -> Result<f64> {
    minimum_log_argument(p)?;
    let a = p.coupling;
    let c = p.alpha_product();
    let b2 = p.range * p.range;
    Ok(p.kinetic_factor() * a * a * (a + 2.0 * c).powi(2) / (8.0 * b2 * b2 * c.powi(3)))
}

/// How the `l(l+1)/r²` barrier is treated.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum CentrifugalMode {
    Exact,
    Approximated(ApproxScheme),
}

impl CentrifugalMode {
    /// `1/r²`, or its approximation.
    #[inline]
    pub fn inverse_r2(&self, range: f64, r: f64) -> f64 {
        match self {
            CentrifugalMode::Exact => 1.0 / (r * r),
            CentrifugalMode::Approximated(s) => s.inverse_r2_at(range, r),
        }
    }

    /// Large-r limit of the effective potential (the continuum threshold).
    pub fn threshold(&self, p: &PotentialParams, l: u32) -> f64 {
        match self {
            CentrifugalMode::Exact => 0.0,
            CentrifugalMode::Approximated(s) => {
                let r0 = s.matching_radius(p.range);
                p.kinetic_factor() * centrifugal_weight(l) * s.c0 / (r0 * r0)
            }
        }
    }

    /// Coefficient `C` of the `1/r²` singularity of `(2μ/ħ²)·V_eff` at the origin.
    pub(crate) fn origin_strength(&self, p: &PotentialParams, l: u32) -> f64 {
        let barrier = match self {
            CentrifugalMode::Exact => 1.0,
            CentrifugalMode::Approximated(s) => s.c2 / (s.gamma * s.gamma),
        };
        p.alpha_product() + centrifugal_weight(l) * barrier
    }
}

/// `l(l+1)` as a float.
#[inline]
pub fn centrifugal_weight(l: u32) -> f64 {
    let l = f64::from(l);
    l * (l + 1.0)
}

/// `V(r) + ħ²l(l+1)/(2μ) · [1/r² or its approximation]`.
pub fn effective_potential(
    p: &PotentialParams,
    l: u32,
    r: f64,
    mode: &CentrifugalMode,
) -> Result<f64> {
    check_radius(r)?;
    Ok(effective_potential_at(p, l, r, mode))
}

#[inline]
pub(crate) fn effective_potential_at(
    p: &PotentialParams,
    l: u32,
    r: f64,
    mode: &CentrifugalMode,
) -> f64 {
    let barrier = if l == 0 {
        0.0
    } else {
        p.kinetic_factor() * centrifugal_weight(l) * mode.inverse_r2(p.range, r)
    };
    p.potential_at(r) + barrier
}
