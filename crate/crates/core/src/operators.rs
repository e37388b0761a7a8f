// SPDX-License-Identifier: Apache-2.0

//! The operator `T(f) = f + 2a·f(−2·) − a·f(4·)`, which sends `e^{ikt}` to
//! `γ(kt)`, and its truncated inverse
//! `Rₙ(y) = Σ_{ℓ≤n} (−1)ˡ jₗ · y((−2)ˡ·)`.
//!
//! Everything here works on sparse spectra, so every dilation is exact.
//! Samples only appear in [`cw_synthesize`].

use num_complex::Complex64;

use crate::coeffs::{jacobsthal_recurrence, tail_sum};
use crate::error::{Error, Result};
use crate::geometry::WidthParam;
use crate::spectral::{dilate, minimal_samples, synthesize, truncate, SampledLoop, SpectralSeries};

/// Amplitudes smaller than this are dropped after operator application.
pub const DEFAULT_PRUNE: f64 = 1e-15;

/// Shape parameter and truncation order of `Rₙ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OperatorConfig {
    pub a: WidthParam,
    pub n: usize,
    pub prune: f64,
}

impl OperatorConfig {
    pub fn new(a: WidthParam, n: usize) -> Self {
        OperatorConfig { a, n, prune: DEFAULT_PRUNE }
    }

    pub fn with_prune(mut self, threshold: f64) -> Self {
        self.prune = threshold;
        self
    }
}

/// `T(f) = f + 2a f₋₂ − a f₄`. The identity when `a = 0`.
pub fn apply_t(series: &SpectralSeries, a: WidthParam) -> Result<SpectralSeries> {
    let a = a.value();
    if a == 0.0 {
        return Ok(series.clone());
    }
    let mut out = series.clone();
    for (k, c) in dilate(series, -2)?.iter() {
        out.add_term(k, c * (2.0 * a));
    }
    for (k, c) in dilate(series, 4)?.iter() {
        out.add_term(k, c * -a);
    }
    Ok(out.pruned(DEFAULT_PRUNE))
}

/// `Rₙ(y) = Σ_{ℓ=0}^{n} (−1)ˡ jₗ y((−1)ˡ 2ˡ ·)`, summed in increasing `ℓ`.
pub fn apply_rn(series: &SpectralSeries, cfg: &OperatorConfig) -> Result<SpectralSeries> {
    if cfg.a.value() == 0.0 || cfg.n == 0 {
        return Ok(series.clone());
    }
    let j = jacobsthal_recurrence(cfg.a, cfg.n);
    let mut out = SpectralSeries::new();
    for (l, &jl) in j.values.iter().enumerate() {
        let factor = (-2i64).checked_pow(l as u32).ok_or(Error::IndexOverflow {
            index: series.max_abs_index() as i64,
            factor: i64::MAX,
        })?;
        let weight = if l % 2 == 0 { jl } else { -jl };
        for (k, c) in series.iter() {
            let idx = k.checked_mul(factor).ok_or(Error::IndexOverflow { index: k, factor })?;
            out.add_term(idx, c * weight);
        }
    }
    Ok(out.pruned(cfg.prune))
}

/// Bound on `‖Rₙ(T(f)) − f‖ / ‖f‖`, namely `(1 + 3a)·Σ_{ℓ>n} jₗ`.
pub fn inversion_error_bound(a: WidthParam, n: usize) -> Result<f64> {
    Ok((1.0 + 3.0 * a.value()) * tail_sum(a.value(), n)?)
}

/// Coefficients `c̃_k` of `f` in the basis `{γ(k·)}` for `|k| ≤ max_index`,
/// i.e. the Fourier coefficients of `Rₙ(f)`.
pub fn cw_coefficients(
    f: &SpectralSeries,
    cfg: &OperatorConfig,
    max_index: usize,
) -> Result<SpectralSeries> {
    Ok(truncate(&apply_rn(f, cfg)?, max_index))
}

/// Samples `Σ c̃_k γ(kt)` on a grid of `n` points.
///
/// Each `γ(k·)` has modes `k, −2k, 4k`, so `n` must exceed `8·max |k|`.
pub fn cw_synthesize(ctilde: &SpectralSeries, a: WidthParam, n: usize) -> Result<SampledLoop> {
    let needed = minimal_samples(4 * ctilde.max_abs_index());
    if n < needed {
        return Err(Error::InsufficientSamples { needed, got: n });
    }
    synthesize(&apply_t(ctilde, a)?, n)
}

/// `⟨⟨f, g⟩⟩ = ⟨Rₙ f, Rₙ g⟩`.
pub fn inner_product_r(f: &SpectralSeries, g: &SpectralSeries, cfg: &OperatorConfig) -> Result<Complex64> {
    Ok(apply_rn(f, cfg)?.inner(&apply_rn(g, cfg)?))
}

/// Spectrum of `γ(k·) = u_k + 2a u_{−2k} − a u_{4k}`.
pub fn gamma_mode(k: i64, a: WidthParam) -> Result<SpectralSeries> {
    apply_t(&SpectralSeries::mode(k, Complex64::new(1.0, 0.0)), a)
}
