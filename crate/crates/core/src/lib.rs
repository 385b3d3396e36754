//! Bound states of the Manning–Rosen potential
//!
//! ```text
//! V(r) = (ħ²/2μb²) [ -A v + α(α-1) v² ],   v = 1/(e^{r/b} - 1)
//! ```
//!
//! with the centrifugal barrier replaced by a Hulthén-like expansion matched
//! at `r0 = γb`. The crate provides the closed-form spectrum, normalized
//! wavefunctions, screened-Coulomb limits, an independent Numerov eigensolver
//! for the exact or approximated barrier, and molecular unit conversions.
//!
//! ```
//! use mrbound::{energy_level, solve_coefficients, Case, PotentialParams, QuantumState};
//!
//! let scheme = solve_coefficients(Case::Case1, 1.0).unwrap();
//! let p = PotentialParams::atomic(80.0, 0.75, 40.0).unwrap();
//! let st: QuantumState = "2p".parse().unwrap();
//! let e = energy_level(&p, st, &scheme).unwrap().energy;
//! assert!((e + 0.1205297).abs() < 1e-7);
//! ```

// `!(x > 0.0)` is used on purpose so NaN lands in the error branch
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod centrifugal;
pub mod error;
pub mod numerov;
pub mod potential;
pub mod quadrature;
pub mod reference;
pub mod special;
pub mod spectrum;
pub mod units;
pub mod wavefunction;

pub use centrifugal::{
    approx_inverse_r2, approximation_error_report, solve_coefficients, ApproxScheme,
    ApproximationRow, Case,
};
pub use error::{Error, Result};
pub use numerov::{auto_config, solve_eigenvalue, NumerovSolution, SolverConfig};
pub use potential::{
    effective_potential, mr_potential, potential_minimum, second_derivative_at_min,
    CentrifugalMode, PotentialMinimum, PotentialParams,
};
pub use spectrum::{
    auxiliary_quantities, coulomb_energy, critical_coupling, critical_coupling_lower_root,
    energy_level, enumerate_bound_states, epsilon_prime, hulthen_energy, hulthen_energy_screened,
    EnergySolution, QuantumState,
};
pub use units::{
    energy_scale_ev, table_energy_ev, LengthUnit, Molecule, MoleculeRegistry, UnitSystem,
};
pub use wavefunction::{
    default_grid, hulthen_wavefunction, jacobi, normalization_closed_form,
    normalization_quadrature, radial_wavefunction, RadialFunction,
};
