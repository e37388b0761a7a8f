// SPDX-License-Identifier: Apache-2.0

//! Finite-depth witnesses for how the inverse operator interacts with
//! smoothness: the divergent difference quotient of `R(sin)` at `t = 0`
//! when `a = 1/8`, and the weighted sums `Σ 2^{kℓ} jₗ` that decide whether
//! Cᵏ is preserved.

use std::f64::consts::PI;

use crate::coeffs::{growth_ratio, jacobsthal_recurrence};
use crate::error::{Error, Result};
use crate::geometry::WidthParam;

/// Extra partial-sum depth beyond `n_max` used by default.
pub const DEFAULT_EXTRA_TERMS: usize = 4;

/// One row of the difference-quotient table at `t_n = π/2ⁿ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuotientTableRow {
    pub n: u32,
    pub t_n: f64,
    /// `f(t_n)/t_n` with `f = Rₙ(sin)` summed to the requested depth.
    pub quotient: f64,
    /// Lower bound `2n/(3π)` valid at `a = 1/8`.
    pub bound: f64,
}

impl QuotientTableRow {
    pub fn satisfies_bound(&self) -> bool {
        self.quotient >= self.bound
    }
}

/// `Σ_{ℓ=0}^{n} (−1)ˡ jₗ sin((−1)ˡ 2ˡ t)`, the partial sum of `R(sin)`.
pub fn r_of_sin_partial(a: WidthParam, n: usize, t: f64) -> f64 {
    let j = jacobsthal_recurrence(a, n);
    let mut scale = 1.0;
    let mut acc = 0.0;
    for (l, &jl) in j.values.iter().enumerate() {
        let sign = if l % 2 == 0 { 1.0 } else { -1.0 };
        acc += sign * jl * (sign * scale * t).sin();
        scale *= 2.0;
    }
    acc
}

/// `Σ_{ℓ=0}^{n} (−1)ˡ jₗ cos((−1)ˡ 2ˡ t)`, the partial sum of `R(cos)`.
pub fn r_of_cos_partial(a: WidthParam, n: usize, t: f64) -> f64 {
    let j = jacobsthal_recurrence(a, n);
    let mut scale = 1.0;
    let mut acc = 0.0;
    for (l, &jl) in j.values.iter().enumerate() {
        let sign = if l % 2 == 0 { 1.0 } else { -1.0 };
        acc += sign * jl * (sign * scale * t).cos();
        scale *= 2.0;
    }
    acc
}

/// Difference quotients of `R(sin)` at `t_n = π/2ⁿ`, `n = 1..=n_max`, for any `a`.
///
/// `sin(2ˡ t_n)` vanishes for `ℓ ≥ n`, so `terms ≥ n_max` captures every
/// nonzero term.
pub fn quotient_table(a: WidthParam, n_max: u32, terms: usize) -> Result<Vec<QuotientTableRow>> {
    if terms < n_max as usize {
        return Err(Error::InsufficientTerms { needed: n_max as usize, got: terms });
    }
    Ok((1..=n_max)
        .map(|n| {
            let t_n = PI / 2f64.powi(n as i32);
            QuotientTableRow {
                n,
                t_n,
                quotient: r_of_sin_partial(a, terms, t_n) / t_n,
                bound: 2.0 * n as f64 / (3.0 * PI),
            }
        })
        .collect())
}

/// [`quotient_table`] at `a = 1/8`, where every row obeys `quotient ≥ 2n/(3π)`.
pub fn diff_quotient_table(n_max: u32, terms: usize) -> Result<Vec<QuotientTableRow>> {
    let a = WidthParam::new(0.125).expect("1/8 is a valid width parameter");
    quotient_table(a, n_max, terms)
}

/// Partial sum `Σ_{ℓ≤L} 2^{kℓ} jₗ` and the ratio `2ᵏ(a + √(a² + a))` that
/// governs it.
#[derive(Debug, Clone, PartialEq)]
pub struct CkWitness {
    pub partial_sum: f64,
    pub ratio: f64,
    /// `2^{kℓ} jₗ` for `ℓ = 0..=L`.
    pub increments: Vec<f64>,
}

impl CkWitness {
    /// Increments eventually shrink geometrically exactly when the ratio is below 1.
    pub fn converging(&self) -> bool {
        self.ratio < 1.0
    }

    pub fn last_increment(&self) -> f64 {
        *self.increments.last().expect("at least one increment")
    }

    /// First `ℓ` from which every increment stays below `tol`.
    pub fn settled_at(&self, tol: f64) -> Option<usize> {
        let tail_start = self.increments.iter().rposition(|&x| x >= tol).map_or(0, |p| p + 1);
        (tail_start < self.increments.len()).then_some(tail_start)
    }
}

/// Increments follow `bₗ = a(2·2ᵏ bₗ₋₁ + 4ᵏ bₗ₋₂)`, the recurrence of `jₗ`
/// rescaled by `2^{kℓ}`, so neither factor overflows or underflows on its own.
pub fn ck_convergence_witness(a: WidthParam, k: u32, len: usize) -> CkWitness {
    let base = 2f64.powi(k as i32);
    let a = a.value();
    let mut increments = Vec::with_capacity(len + 1);
    increments.push(1.0);
    if len >= 1 {
        increments.push(base * 2.0 * a);
    }
    for l in 2..=len {
        let next = a * (2.0 * base * increments[l - 1] + base * base * increments[l - 2]);
        increments.push(next);
    }
    CkWitness {
        partial_sum: increments.iter().sum(),
        ratio: base * growth_ratio(a),
        increments,
    }
}
