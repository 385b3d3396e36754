//! Jacobi polynomials and log-space Beta helpers.

use crate::error::{require_finite, Result};

/// `P_n^(a,b)(x)` by the three-term recurrence in degree.
///
/// Defined for any real parameters; orthogonality needs `a, b > -1`, which
/// is not enforced here. When a recurrence denominator vanishes (special
/// negative parameter combinations) the explicit sum is used instead.
pub fn jacobi(n: u32, a: f64, b: f64, x: f64) -> Result<f64> {
    require_finite("a", a)?;
    require_finite("b", b)?;
    require_finite("x", x)?;
    Ok(jacobi_unchecked(n, a, b, x))
}

pub(crate) fn jacobi_unchecked(n: u32, a: f64, b: f64, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = (a + 1.0) + 0.5 * (a + b + 2.0) * (x - 1.0);
    for k in 2..=n {
        let k = f64::from(k);
        let s = 2.0 * k + a + b;
        let c1 = 2.0 * k * (k + a + b) * (s - 2.0);
        if c1 == 0.0 || s - 2.0 == 0.0 || s - 1.0 == 0.0 {
            return jacobi_explicit(n, a, b, x);
        }
        let c2 = (s - 1.0) * (s * (s - 2.0) * x + a * a - b * b);
        let c3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
        let next = (c2 * cur - c3 * prev) / c1;
        prev = cur;
        cur = next;
    }
    cur
}

/// `P_n^(a,b)(x) = Σ_m C(n+a, n-m) C(n+b, m) ((x-1)/2)^m ((x+1)/2)^(n-m)`,
/// with generalized binomials built as running products.
pub(crate) fn jacobi_explicit(n: u32, a: f64, b: f64, x: f64) -> f64 {
    let half_minus = 0.5 * (x - 1.0);
    let half_plus = 0.5 * (x + 1.0);
    let mut sum = 0.0;
    for m in 0..=n {
        let c1 = gen_binomial(f64::from(n) + a, n - m);
        let c2 = gen_binomial(f64::from(n) + b, m);
        sum += c1 * c2 * half_minus.powi(m as i32) * half_plus.powi((n - m) as i32);
    }
    sum
}

fn gen_binomial(top: f64, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, j| acc * (top - f64::from(j)) / f64::from(j + 1))
}

/// `ln Γ(x)` with its sign.
pub(crate) fn ln_gamma(x: f64) -> (f64, i32) {
    libm::lgamma_r(x)
}

/// `ln B(x, y)` for positive arguments.
pub(crate) fn ln_beta(x: f64, y: f64) -> f64 {
    ln_gamma(x).0 + ln_gamma(y).0 - ln_gamma(x + y).0
}

/// Sum of `sign_i · exp(log_i)` with the largest magnitude factored out.
/// Returns `(sum, largest term magnitude)`.
pub(crate) fn signed_log_sum(terms: &[(f64, f64)]) -> (f64, f64) {
    let top = terms
        .iter()
        .map(|&(l, _)| l)
        .fold(f64::NEG_INFINITY, f64::max);
    if !top.is_finite() {
        return (0.0, 0.0);
    }
    let scaled: f64 = terms.iter().map(|&(l, s)| s * (l - top).exp()).sum();
    (scaled * top.exp(), top.exp())
}
