// SPDX-License-Identifier: Apache-2.0

//! Jacobsthal-type coefficients `j₀ = 1, j₁ = 2a, jₙ = a(2jₙ₋₁ + jₙ₋₂)` that
//! weight the dilations in the inverse operator, together with their growth
//! ratio and the smoothness thresholds derived from it.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::geometry::{WidthParam, MAX_WIDTH_PARAM};

/// Terms below this size end the direct summation in [`tail_sum`].
const TAIL_TERM_FLOOR: f64 = 1e-18;
/// Number of tail ratios inspected before trusting the geometric majorant.
const TAIL_RATIO_WINDOW: usize = 64;
const TAIL_MAX_TERMS: usize = 1_000_000;

/// The sequence `j₀..jₙ` for a fixed `a`.
#[derive(Debug, Clone, PartialEq)]
pub struct JacobsthalCoeffs {
    pub a: WidthParam,
    pub values: Vec<f64>,
    /// Limit of `jₗ₊₁/jₗ`, equal to `a + √(a² + a)`.
    pub ratio: f64,
}

impl JacobsthalCoeffs {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, l: usize) -> Option<f64> {
        self.values.get(l).copied()
    }

    /// Σ (−1)ˡ jₗ over the stored range. Tends to `1/(1 + a)`.
    pub fn alternating_sum(&self) -> f64 {
        self.values
            .iter()
            .enumerate()
            .map(|(l, &j)| if l % 2 == 0 { j } else { -j })
            .sum()
    }
}

fn recurrence_values(a: f64, n: usize) -> Vec<f64> {
    let mut values = Vec::with_capacity(n + 1);
    values.push(1.0);
    if n >= 1 {
        values.push(2.0 * a);
    }
    for l in 2..=n {
        let next = a * (2.0 * values[l - 1] + values[l - 2]);
        values.push(next);
    }
    values
}

/// `j₀..jₙ` from the recurrence. With `a = 0` this yields `[1, 0, 0, …]`.
pub fn jacobsthal_recurrence(a: WidthParam, n: usize) -> JacobsthalCoeffs {
    JacobsthalCoeffs {
        a,
        values: recurrence_values(a.value(), n),
        ratio: growth_ratio(a.value()),
    }
}

/// Closed form `((a+s)^{ℓ+1} − (a−s)^{ℓ+1}) / 2s` with `s = √(a² + a)`.
pub fn jacobsthal_closed(a: WidthParam, l: u32) -> Result<f64> {
    let a = a.value();
    if a == 0.0 {
        return Err(Error::DegenerateParameter);
    }
    let s = (a * a + a).sqrt();
    let e = l as i32 + 1;
    Ok(((a + s).powi(e) - (a - s).powi(e)) / (2.0 * s))
}

/// `a + √(a² + a)`, the limit of `jₗ₊₁/jₗ`. Defined for any `a ≥ 0`,
/// including the boundary `a = 1/3` where it equals 1.
pub fn growth_ratio(a: f64) -> f64 {
    debug_assert!(a >= 0.0, "growth ratio needs a >= 0");
    a + (a * a + a).sqrt()
}

/// `1/(2ᵏ(2ᵏ + 2))`: below this value the inverse operator preserves Cᵏ.
pub fn smoothness_threshold(k: u32) -> f64 {
    let p = 2f64.powi(k as i32);
    1.0 / (p * (p + 2.0))
}

/// Guaranteed smoothness order for a given `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Smoothness {
    /// Largest `k` with `a < smoothness_threshold(k)`.
    Order(u32),
    /// `a = 0`: the inverse is the identity.
    Infinite,
}

pub fn max_smoothness(a: WidthParam) -> Smoothness {
    let a = a.value();
    if a == 0.0 {
        return Smoothness::Infinite;
    }
    let mut k = 0;
    while a < smoothness_threshold(k + 1) {
        k += 1;
    }
    Smoothness::Order(k)
}

/// Threshold `1/(2ᵏ(2ᵏ+2))` as an exact rational.
pub fn threshold_rational(k: u32) -> Result<Ratio<u128>> {
    let (p, q) = pow2_pair(k)?;
    Ok(Ratio::new(1, p * q))
}

/// `√(a² + a)` at `a = smoothness_threshold(k)`, which is the rational
/// `(2ᵏ + 1)/(2ᵏ(2ᵏ + 2))`.
pub fn rational_sqrt(k: u32) -> Result<Ratio<u128>> {
    let (p, q) = pow2_pair(k)?;
    let r = Ratio::new(p + 1, p * q);
    debug_assert!({
        let a = smoothness_threshold(k);
        let approx = *r.numer() as f64 / *r.denom() as f64;
        ((a * a + a).sqrt() - approx).abs() <= 1e-14
    });
    Ok(r)
}

fn pow2_pair(k: u32) -> Result<(u128, u128)> {
    if k > 62 {
        return Err(Error::OrderTooLarge(k));
    }
    let p = 1u128 << k;
    Ok((p, p + 2))
}

/// Upper bound for `Σ_{ℓ>n} jₗ`.
///
/// Uses the geometric majorant `jₙ₊₁/(1 − r)` when every inspected tail
/// ratio `jₗ₊₁/jₗ` stays at or below `r`; otherwise sums the tail directly
/// until terms drop under 1e−18 and closes it with the same majorant.
pub fn tail_sum(a: f64, n: usize) -> Result<f64> {
    if !(0.0..MAX_WIDTH_PARAM).contains(&a) {
        return Err(Error::DivergentTail(a));
    }
    if a == 0.0 {
        return Ok(0.0);
    }
    let r = growth_ratio(a);
    let j = recurrence_values(a, n + 1 + TAIL_RATIO_WINDOW);
    let tail = &j[n + 1..];
    let majorized = tail.windows(2).all(|w| w[1] <= r * w[0]);
    if majorized {
        return Ok(j[n + 1] / (1.0 - r));
    }

    let (mut prev, mut cur) = (j[n], j[n + 1]);
    let mut sum = 0.0;
    for _ in 0..TAIL_MAX_TERMS {
        sum += cur;
        if cur < TAIL_TERM_FLOOR {
            break;
        }
        let next = a * (2.0 * cur + prev);
        prev = cur;
        cur = next;
    }
    Ok(sum + cur / (1.0 - r))
}
