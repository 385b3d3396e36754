//! Closed-form bound-state energies.
//!
//! With the centrifugal barrier replaced by an [`ApproxScheme`], the radial
//! equation maps onto a hypergeometric equation in `z = e^{-r/b}` and the
//! levels are
//!
//! ```text
//! E_nl = (ħ²/2μb²) · ( -ε'² + ΔE_l )
//! ε'   = [A' - (n+1)² - (2n+1)Λ] / (2(n+1+Λ))
//! Λ    = (a - 1)/2,   a = sqrt(1 + 4β)
//! ```
//!
//! where, for a scheme `(c0, c1, c2, γ)`,
//! `A' = A - l(l+1)c1/γ²`, `β = α(α-1) + l(l+1)c2/γ²` and `ΔE_l = l(l+1)c0/γ²`.
//! For `c1 = c2 = γ = 1` (Case 1 and the legacy form) this is
//! `a = sqrt((1-2α)² + 4l(l+1))` and `A' = A - l(l+1)`.
//!
//! `ε'` is kept positive for bound states; it is the decay exponent of the
//! wavefunction in `z`, so `ε' > 0` is the bound-state criterion.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::centrifugal::ApproxScheme;
use crate::error::{require_positive, Error, Result};
use crate::potential::{centrifugal_weight, PotentialParams};

/// Radial quantum number `n` (node count) and orbital quantum number `l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QuantumState {
    pub n: u32,
    pub l: u32,
}

const ORBITAL_LETTERS: &[u8] = b"spdfghiklmnoqrtuvwxyz";

impl QuantumState {
    pub const fn new(n: u32, l: u32) -> Self {
        Self { n, l }
    }

    /// Principal quantum number `N = n + l + 1`.
    pub fn principal(&self) -> u32 {
        self.n + self.l + 1
    }

    /// Hydrogen-like label, e.g. `2p` for `n = 0, l = 1`.
    pub fn label(&self) -> String {
        match ORBITAL_LETTERS.get(self.l as usize) {
            Some(&c) => format!("{}{}", self.principal(), c as char),
            None => format!("{}[l={}]", self.principal(), self.l),
        }
    }

    pub(crate) fn weight(&self) -> f64 {
        centrifugal_weight(self.l)
    }
}

impl fmt::Display for QuantumState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl FromStr for QuantumState {
    type Err = Error;

    /// Parses `"6g"`-style labels, with `N = n + l + 1`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::StateLabel(s.to_string());
        let s = s.trim();
        let split = s.find(|c: char| !c.is_ascii_digit()).ok_or_else(bad)?;
        let (digits, letter) = s.split_at(split);
        let principal: u32 = digits.parse().map_err(|_| bad())?;
        let mut chars = letter.chars();
        let c = chars.next().ok_or_else(bad)?.to_ascii_lowercase();
        if chars.next().is_some() {
            return Err(bad());
        }
        let l = ORBITAL_LETTERS
            .iter()
            .position(|&x| x as char == c)
            .ok_or_else(bad)? as u32;
        if principal < l + 1 {
            return Err(bad());
        }
        Ok(Self::new(principal - l - 1, l))
    }
}

/// `a = sqrt((1-2α)² + 4l(l+1))` and `Λ = (a-1)/2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Auxiliary {
    pub a: f64,
    pub lambda: f64,
}

impl Auxiliary {
    /// `a = 0` puts the wavefunction exponent `2Λ+1` on the boundary of
    /// integrability.
    pub fn is_degenerate(&self) -> bool {
        self.a <= 0.0
    }
}

pub fn auxiliary_quantities(alpha: f64, l: u32) -> Auxiliary {
    let t = 1.0 - 2.0 * alpha;
    let a = (t * t + 4.0 * centrifugal_weight(l)).sqrt();
    Auxiliary {
        a,
        lambda: 0.5 * (a - 1.0),
    }
}

/// Scheme-dependent pieces of the closed form.
#[derive(Debug, Clone, Copy)]
struct Reduced {
    coupling: f64,
    lambda: f64,
    a: f64,
    shift: f64,
}

fn reduce(p: &PotentialParams, st: QuantumState, scheme: &ApproxScheme) -> Reduced {
    let w = st.weight();
    let g2 = scheme.gamma * scheme.gamma;
    let beta = p.alpha_product() + w * scheme.c2 / g2;
    let a = (1.0 + 4.0 * beta).max(0.0).sqrt();
    Reduced {
        coupling: p.coupling - w * scheme.c1 / g2,
        lambda: 0.5 * (a - 1.0),
        a,
        shift: w * scheme.c0 / g2,
    }
}

fn epsilon_from(reduced: &Reduced, n: u32) -> f64 {
    let n1 = f64::from(n) + 1.0;
    let lam = reduced.lambda;
    (reduced.coupling - n1 * n1 - (2.0 * n1 - 1.0) * lam) / (2.0 * (n1 + lam))
}

/// `ε' = [A - (n+1)² - l(l+1) - (2n+1)Λ] / (2(n+1+Λ))`; positive iff `(n, l)` is bound.
pub fn epsilon_prime(p: &PotentialParams, st: QuantumState) -> f64 {
    let aux = auxiliary_quantities(p.alpha, st.l);
    let n1 = f64::from(st.n) + 1.0;
    (p.coupling - n1 * n1 - st.weight() - (2.0 * n1 - 1.0) * aux.lambda) / (2.0 * (n1 + aux.lambda))
}

/// One bound level and the quantities that determine its wavefunction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnergySolution {
    /// Eigenvalue in model energy units.
    pub energy: f64,
    pub a: f64,
    pub lambda: f64,
    pub epsilon_prime: f64,
    pub scheme_c0: f64,
}

impl EnergySolution {
    /// `E / (ħ²/2μb²) = -ε'² + ΔE_l`.
    pub fn reduced_energy(&self, p: &PotentialParams) -> f64 {
        self.energy / p.energy_unit()
    }
}

/// Closed-form level `E_nl` for the given approximation scheme.
pub fn energy_level(
    p: &PotentialParams,
    st: QuantumState,
    scheme: &ApproxScheme,
) -> Result<EnergySolution> {
    let reduced = reduce(p, st, scheme);
    let eps = epsilon_from(&reduced, st.n);
    if !(eps > 0.0) {
        return Err(Error::Unbound {
            state: st,
            epsilon_prime: eps,
            critical_coupling: critical_coupling(st, p.alpha, scheme),
        });
    }
    Ok(EnergySolution {
        energy: p.energy_unit() * (reduced.shift - eps * eps),
        a: reduced.a,
        lambda: reduced.lambda,
        epsilon_prime: eps,
        scheme_c0: scheme.c0,
    })
}

/// Coupling `A_c` at which the binding energy `-E` of `(n, l)` vanishes.
///
/// `E = 0` means `ε' = sqrt(ΔE_l)`; solving for `A` on the bound branch gives
///
/// ```text
/// A_c = (n+1+Λ+sqrt(ΔE_l))² - Λ(Λ+1) + l(l+1)(c1 - c0)/γ²
/// ```
///
/// For `ΔE_l <= 0` the level has negative energy as soon as it is bound, and the
/// result is the coupling at which `ε'` reaches zero.
pub fn critical_coupling(st: QuantumState, alpha: f64, scheme: &ApproxScheme) -> f64 {
    critical_coupling_with_sign(st, alpha, scheme, 1.0)
}

/// The same expression with `-sqrt(ΔE_l)`, the lower root of `E(A) = 0`, where
/// `ε' = -sqrt(ΔE_l) < 0` and the state is not normalizable. Kept for
/// comparison with the form usually quoted alongside the spectrum.
pub fn critical_coupling_lower_root(st: QuantumState, alpha: f64, scheme: &ApproxScheme) -> f64 {
    critical_coupling_with_sign(st, alpha, scheme, -1.0)
}

fn critical_coupling_with_sign(
    st: QuantumState,
    alpha: f64,
    scheme: &ApproxScheme,
    sign: f64,
) -> f64 {
    // A enters the reduced problem only through A', so evaluate at A = 0
    let probe = PotentialParams {
        coupling: 0.0,
        alpha,
        range: 1.0,
        mass: 1.0,
        hbar: 1.0,
    };
    let reduced = reduce(&probe, st, scheme);
    let s = reduced.shift.max(0.0).sqrt();
    let lam = reduced.lambda;
    let n1 = f64::from(st.n) + 1.0;
    (n1 + lam + sign * s).powi(2) - lam * (lam + 1.0) - reduced.coupling - reduced.shift
}

/// All bound levels with `l <= l_max`, sorted by energy.
pub fn enumerate_bound_states(
    p: &PotentialParams,
    scheme: &ApproxScheme,
    l_max: u32,
) -> Vec<(QuantumState, EnergySolution)> {
    let mut out = Vec::new();
    for l in 0..=l_max {
        // ε' decreases monotonically in n, so the first unbound n ends the series
        for n in 0.. {
            match energy_level(p, QuantumState::new(n, l), scheme) {
                Ok(sol) => out.push((QuantumState::new(n, l), sol)),
                Err(_) => break,
            }
        }
    }
    out.sort_by(|a, b| a.1.energy.total_cmp(&b.1.energy).then(a.0.cmp(&b.0)));
    out
}

/// Hulthén limit (`α = 0` or `1`, so `Λ = l`):
///
/// ```text
/// E = -(ħ²/8μb²) [A - N²]² / N² + (ħ²/2μb²) l(l+1) c0,   N = n + l + 1
/// ```
///
/// Only the shift `c0` of the scheme enters, which is the full answer for
/// schemes with `c1 = c2 = γ = 1`.
pub fn hulthen_energy(p: &PotentialParams, st: QuantumState, scheme: &ApproxScheme) -> Result<f64> {
    let big_n = f64::from(st.principal());
    let excess = p.coupling - big_n * big_n;
    if !(excess > 0.0) {
        return Err(Error::Unbound {
            state: st,
            epsilon_prime: excess / (2.0 * big_n),
            critical_coupling: big_n * big_n
                + 2.0 * big_n * (st.weight() * scheme.c0).max(0.0).sqrt(),
        });
    }
    let unit = p.energy_unit();
    Ok(-unit * excess * excess / (4.0 * big_n * big_n) + unit * st.weight() * scheme.c0)
}

/// Screened-Coulomb (Hulthén) levels in natural units `ħ = μ = e = 1`:
///
/// ```text
/// E = -(Z²/2) [1/N - Nδ/(2Z)]² + l(l+1) c0 δ²/2
/// ```
pub fn hulthen_energy_screened(
    z: f64,
    delta: f64,
    st: QuantumState,
    scheme: &ApproxScheme,
) -> Result<f64> {
    require_positive("Z", z)?;
    require_positive("delta", delta)?;
    let eps = hulthen_epsilon(z, delta, st);
    if !(eps > 0.0) {
        let big_n = f64::from(st.principal());
        return Err(Error::Unbound {
            state: st,
            epsilon_prime: eps,
            critical_coupling: big_n * big_n,
        });
    }
    let big_n = f64::from(st.principal());
    let bracket = 1.0 / big_n - big_n * delta / (2.0 * z);
    Ok(-0.5 * z * z * bracket * bracket + 0.5 * st.weight() * scheme.c0 * delta * delta)
}

/// `ε' = (Z/δ)[1/N - Nδ/(2Z)]` for the screened-Coulomb form.
pub fn hulthen_epsilon(z: f64, delta: f64, st: QuantumState) -> f64 {
    let big_n = f64::from(st.principal());
    (z / delta) * (1.0 / big_n - big_n * delta / (2.0 * z))
}

/// Hydrogen-like levels in atomic units, `-Z²/(2N²)`.
pub fn coulomb_energy(z: f64, st: QuantumState) -> f64 {
    let big_n = f64::from(st.principal());
    -z * z / (2.0 * big_n * big_n)
}
