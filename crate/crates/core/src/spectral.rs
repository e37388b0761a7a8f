// SPDX-License-Identifier: Apache-2.0

//! Sparse spectra of 2π-periodic complex functions and their uniformly
//! sampled counterparts.
//!
//! A [`SpectralSeries`] stores `f(t) = Σ c_k e^{ikt}` as a sparse map from
//! frequency to amplitude. The norm is the normalized L² norm
//! `‖f‖² = (1/2π)∫|f|² = Σ|c_k|²`. Dilation `f ↦ f(k·)` is an exact index
//! relabeling, so operator work never aliases; aliasing can only happen when
//! synthesizing samples, which is guarded by a Nyquist check.

use std::collections::btree_map::{self, Entry};
use std::collections::BTreeMap;
use std::f64::consts::TAU;
use std::fmt::Write as _;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Finite sparse Fourier series. Never stores an exactly-zero amplitude.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct SpectralSeries {
    terms: BTreeMap<i64, Complex64>,
}

impl SpectralSeries {
    pub fn new() -> Self {
        Self::default()
    }

    /// Single mode `c·e^{ikt}`.
    pub fn mode(k: i64, c: Complex64) -> Self {
        let mut s = Self::new();
        s.add_term(k, c);
        s
    }

    /// Builds a series from `(k, c_k)` pairs; repeated indices are summed.
    pub fn from_terms<I: IntoIterator<Item = (i64, Complex64)>>(terms: I) -> Self {
        let mut s = Self::new();
        for (k, c) in terms {
            s.add_term(k, c);
        }
        s
    }

    /// Adds `c` to the amplitude at `k`, dropping the entry if it cancels to zero.
    pub fn add_term(&mut self, k: i64, c: Complex64) {
        if c == ZERO {
            return;
        }
        match self.terms.entry(k) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let v = *e.get() + c;
                if v == ZERO {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn get(&self, k: i64) -> Complex64 {
        self.terms.get(&k).copied().unwrap_or(ZERO)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing index order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        self.terms.iter().map(|(&k, &c)| (k, c))
    }

    pub fn indices(&self) -> btree_map::Keys<'_, i64, Complex64> {
        self.terms.keys()
    }

    /// Largest `|k|` carrying a nonzero amplitude, 0 for the empty series.
    pub fn max_abs_index(&self) -> u64 {
        self.terms.keys().map(|k| k.unsigned_abs()).max().unwrap_or(0)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.terms.values().map(|c| c.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// `⟨f, g⟩ = Σ f_k · conj(g_k)`.
    pub fn inner(&self, other: &SpectralSeries) -> Complex64 {
        let (small, large, swap) = if self.len() <= other.len() {
            (self, other, false)
        } else {
            (other, self, true)
        };
        small
            .terms
            .iter()
            .filter_map(|(k, &c)| large.terms.get(k).map(|&d| if swap { d * c.conj() } else { c * d.conj() }))
            .sum()
    }

    pub fn scaled(&self, factor: Complex64) -> SpectralSeries {
        SpectralSeries::from_terms(self.iter().map(|(k, c)| (k, c * factor)))
    }

    /// Drops every amplitude with magnitude below `threshold`.
    pub fn pruned(mut self, threshold: f64) -> SpectralSeries {
        self.terms.retain(|_, c| c.norm() >= threshold);
        self
    }

    /// JSON array of `[k, re, im]` triples sorted by `k`.
    pub fn to_json(&self) -> String {
        let triples: Vec<(i64, f64, f64)> = self.iter().map(|(k, c)| (k, c.re, c.im)).collect();
        serde_json::to_string(&triples).expect("triples of numbers always serialize")
    }

    pub fn from_json(text: &str) -> Result<SpectralSeries> {
        let triples: Vec<(i64, f64, f64)> =
            serde_json::from_str(text).map_err(|e| Error::Format(format!("spectral JSON: {e}")))?;
        Ok(SpectralSeries::from_terms(
            triples.into_iter().map(|(k, re, im)| (k, Complex64::new(re, im))),
        ))
    }
}

impl FromIterator<(i64, Complex64)> for SpectralSeries {
    fn from_iter<I: IntoIterator<Item = (i64, Complex64)>>(iter: I) -> Self {
        SpectralSeries::from_terms(iter)
    }
}

impl Add for &SpectralSeries {
    type Output = SpectralSeries;

    fn add(self, rhs: &SpectralSeries) -> SpectralSeries {
        let mut out = self.clone();
        for (k, c) in rhs.iter() {
            out.add_term(k, c);
        }
        out
    }
}

impl Sub for &SpectralSeries {
    type Output = SpectralSeries;

    fn sub(self, rhs: &SpectralSeries) -> SpectralSeries {
        let mut out = self.clone();
        for (k, c) in rhs.iter() {
            out.add_term(k, -c);
        }
        out
    }
}

impl Neg for &SpectralSeries {
    type Output = SpectralSeries;

    fn neg(self) -> SpectralSeries {
        self.scaled(Complex64::new(-1.0, 0.0))
    }
}

impl Mul<Complex64> for &SpectralSeries {
    type Output = SpectralSeries;

    fn mul(self, rhs: Complex64) -> SpectralSeries {
        self.scaled(rhs)
    }
}

/// `N ≥ 2` samples of a closed curve at `t_j = 2πj/N`.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledLoop {
    samples: Vec<Complex64>,
}

impl SampledLoop {
    pub fn new(samples: Vec<Complex64>) -> Result<Self> {
        if samples.len() < 2 {
            return Err(Error::InsufficientSamples { needed: 2, got: samples.len() });
        }
        Ok(SampledLoop { samples })
    }

    /// Samples `f` on the uniform grid of size `n`.
    pub fn from_fn(n: usize, f: impl Fn(f64) -> Complex64) -> Result<Self> {
        Self::new((0..n).map(|j| f(TAU * j as f64 / n as f64)).collect())
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    pub fn into_samples(self) -> Vec<Complex64> {
        self.samples
    }

    /// Grid parameter `t_j = 2πj/N`.
    pub fn param(&self, j: usize) -> f64 {
        TAU * j as f64 / self.samples.len() as f64
    }

    /// Discrete L² norm `((1/N)Σ|f_j|²)^{1/2}`.
    pub fn rms_norm(&self) -> f64 {
        (self.samples.iter().map(|z| z.norm_sqr()).sum::<f64>() / self.len() as f64).sqrt()
    }

    /// Discrete L² distance to a loop with the same sample count.
    pub fn rms_distance(&self, other: &SampledLoop) -> f64 {
        assert_eq!(self.len(), other.len(), "loops must share a grid");
        let s: f64 = self.samples.iter().zip(&other.samples).map(|(a, b)| (a - b).norm_sqr()).sum();
        (s / self.len() as f64).sqrt()
    }

    pub fn max_distance(&self, other: &SampledLoop) -> f64 {
        assert_eq!(self.len(), other.len(), "loops must share a grid");
        self.samples.iter().zip(&other.samples).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    /// One `re,im` pair per line; row `j` is the sample at `t_j`.
    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(self.len() * 40);
        for z in &self.samples {
            let _ = writeln!(out, "{},{}", z.re, z.im);
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<SampledLoop> {
        let mut samples = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (re, im) = parse_pair(line).ok_or_else(|| Error::MalformedRow {
                line: i + 1,
                text: line.to_string(),
            })?;
            samples.push(Complex64::new(re, im));
        }
        SampledLoop::new(samples)
    }
}

pub(crate) fn parse_pair(line: &str) -> Option<(f64, f64)> {
    let mut it = line.split(',');
    let x = it.next()?.trim().parse().ok()?;
    let y = it.next()?.trim().parse().ok()?;
    if it.next().is_some() {
        return None;
    }
    Some((x, y))
}

/// `e^{2πi r/N}` for `r = 0..N`.
fn roots_of_unity(n: usize) -> Vec<Complex64> {
    (0..n).map(|r| Complex64::cis(TAU * r as f64 / n as f64)).collect()
}

/// Fourier coefficients `c_k = (1/N)Σ_j f_j e^{−ik t_j}` for `|k| ≤ m`.
///
/// Exact up to roundoff for loops bandlimited to `|k| ≤ m`; requires `N > 2m`.
pub fn analyze(lp: &SampledLoop, m: usize) -> Result<SpectralSeries> {
    let n = lp.len();
    if n <= 2 * m {
        return Err(Error::InsufficientSamples { needed: 2 * m + 1, got: n });
    }
    let roots = roots_of_unity(n);
    let inv_n = 1.0 / n as f64;
    let mut out = SpectralSeries::new();
    for k in -(m as i64)..=(m as i64) {
        // e^{-ik t_j} = roots[(-k j) mod N]
        let step = (-k).rem_euclid(n as i64) as usize;
        let mut idx = 0usize;
        let mut acc = ZERO;
        for &z in lp.samples() {
            acc += z * roots[idx];
            idx += step;
            if idx >= n {
                idx -= n;
            }
        }
        out.add_term(k, acc * inv_n);
    }
    Ok(out)
}

/// Evaluates the series on the uniform grid of size `n`; requires
/// `n > 2·max_abs_index` so that no two modes alias.
pub fn synthesize(series: &SpectralSeries, n: usize) -> Result<SampledLoop> {
    let needed = minimal_samples(series.max_abs_index());
    if n < needed {
        return Err(Error::InsufficientSamples { needed, got: n });
    }
    let roots = roots_of_unity(n);
    let mut samples = vec![ZERO; n];
    for (k, c) in series.iter() {
        let step = k.rem_euclid(n as i64) as usize;
        let mut idx = 0usize;
        for s in samples.iter_mut() {
            *s += c * roots[idx];
            idx += step;
            if idx >= n {
                idx -= n;
            }
        }
    }
    SampledLoop::new(samples)
}

/// Smallest alias-free grid for a spectrum reaching `|k| = max_index`.
pub fn minimal_samples(max_index: u64) -> usize {
    (2 * max_index as usize + 1).max(2)
}

/// Spectrum of `t ↦ f(kt)`: amplitude at `k·m` equals the input's at `m`.
pub fn dilate(series: &SpectralSeries, k: i64) -> Result<SpectralSeries> {
    if k == 0 {
        return Err(Error::ZeroDilation);
    }
    let mut out = SpectralSeries::new();
    for (m, c) in series.iter() {
        let idx = m.checked_mul(k).ok_or(Error::IndexOverflow { index: m, factor: k })?;
        out.terms.insert(idx, c);
    }
    Ok(out)
}

/// Keeps only modes with `|k| ≤ m`.
pub fn truncate(series: &SpectralSeries, m: usize) -> SpectralSeries {
    SpectralSeries {
        terms: series
            .terms
            .iter()
            .filter(|(k, _)| k.unsigned_abs() <= m as u64)
            .map(|(&k, &c)| (k, c))
            .collect(),
    }
}

/// Sample-domain dilation `f_j ↦ f_{kj mod N}`.
///
/// Matches [`dilate`] followed by [`synthesize`] only when the loop is
/// bandlimited to `|k| ≤ bandlimit` and `N > 2·|k|·bandlimit`; that condition
/// is checked.
pub fn dilate_samples(lp: &SampledLoop, k: i64, bandlimit: usize) -> Result<SampledLoop> {
    if k == 0 {
        return Err(Error::ZeroDilation);
    }
    let n = lp.len();
    let needed = minimal_samples(k.unsigned_abs() * bandlimit as u64);
    if n < needed {
        return Err(Error::InsufficientSamples { needed, got: n });
    }
    let step = k.rem_euclid(n as i64) as usize;
    let src = lp.samples();
    SampledLoop::new((0..n).map(|j| src[(j * step) % n]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{gamma_point, WidthParam};
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn assert_series_close(a: &SpectralSeries, b: &SpectralSeries, tol: f64) {
        let mut idx: Vec<i64> = a.indices().chain(b.indices()).copied().collect();
        idx.sort_unstable();
        idx.dedup();
        for k in idx {
            assert!((a.get(k) - b.get(k)).norm() <= tol, "k={k}: {} vs {}", a.get(k), b.get(k));
        }
    }

    #[test]
    fn canonical_sparsity() {
        let mut s = SpectralSeries::mode(3, c(1.0, 0.0));
        s.add_term(3, c(-1.0, 0.0));
        assert!(s.is_empty());
        let s = SpectralSeries::from_terms([(1, c(0.0, 0.0)), (2, c(1.0, 1.0))]);
        assert_eq!(s.len(), 1);
        assert_eq!(s.max_abs_index(), 2);
        assert_eq!(SpectralSeries::new().max_abs_index(), 0);
    }

    #[test]
    fn analyze_single_mode_and_constant() {
        let lp = SampledLoop::from_fn(64, Complex64::cis).unwrap();
        let s = analyze(&lp, 4).unwrap();
        assert_series_close(&s, &SpectralSeries::mode(1, c(1.0, 0.0)), 1e-14);

        let k = c(2.5, -1.0);
        let lp = SampledLoop::new(vec![k; 7]).unwrap();
        assert_series_close(&analyze(&lp, 0).unwrap(), &SpectralSeries::mode(0, k), 1e-15);
    }

    #[test]
    fn analyze_gamma() {
        let a = WidthParam::new(0.125).unwrap();
        let lp = SampledLoop::from_fn(64, |t| gamma_point(a, t)).unwrap();
        let s = analyze(&lp, 4).unwrap();
        let want = SpectralSeries::from_terms([(1, c(1.0, 0.0)), (-2, c(0.25, 0.0)), (4, c(-0.125, 0.0))]);
        assert_series_close(&s, &want, 1e-12);
    }

    #[test]
    fn analyze_needs_nyquist_margin() {
        let lp = SampledLoop::new(vec![ZERO; 8]).unwrap();
        assert_eq!(analyze(&lp, 4), Err(Error::InsufficientSamples { needed: 9, got: 8 }));
        assert!(analyze(&lp, 3).is_ok());
    }

    #[test]
    fn synthesize_examples() {
        let lp = synthesize(&SpectralSeries::mode(0, c(5.0, 0.0)), 8).unwrap();
        assert!(lp.samples().iter().all(|&z| z == c(5.0, 0.0)));

        let a = WidthParam::new(0.125).unwrap();
        let s = SpectralSeries::from_terms([(1, c(1.0, 0.0)), (-2, c(0.25, 0.0)), (4, c(-0.125, 0.0))]);
        let lp = synthesize(&s, 256).unwrap();
        for (j, z) in lp.samples().iter().enumerate() {
            assert!((z - gamma_point(a, lp.param(j))).norm() <= 1e-12);
        }

        assert_eq!(
            synthesize(&s, 8),
            Err(Error::InsufficientSamples { needed: 9, got: 8 })
        );
    }

    #[test]
    fn dilate_examples() {
        let s = dilate(&SpectralSeries::mode(1, c(1.0, 0.0)), 2).unwrap();
        assert_eq!(s, SpectralSeries::mode(2, c(1.0, 0.0)));
        let s = SpectralSeries::from_terms([(1, c(1.0, 0.0)), (3, c(0.0, 1.0))]);
        let d = dilate(&s, -2).unwrap();
        assert_eq!(d, SpectralSeries::from_terms([(-2, c(1.0, 0.0)), (-6, c(0.0, 1.0))]));
        assert_eq!(dilate(&s, 0), Err(Error::ZeroDilation));
        assert!(matches!(
            dilate(&SpectralSeries::mode(1 << 62, c(1.0, 0.0)), 4),
            Err(Error::IndexOverflow { .. })
        ));
    }

    #[test]
    fn truncate_examples() {
        let s = SpectralSeries::from_terms([(1, c(1.0, 0.0)), (5, c(2.0, 0.0))]);
        assert_eq!(truncate(&s, 4), SpectralSeries::mode(1, c(1.0, 0.0)));
        assert_eq!(truncate(&s, 5), s);
        assert_eq!(truncate(&s, 0), SpectralSeries::new());
    }

    #[test]
    fn sample_domain_dilation_fast_path() {
        let s = SpectralSeries::from_terms([(1, c(1.0, 0.5)), (-3, c(0.2, 0.0)), (2, c(0.0, -0.7))]);
        let lp = synthesize(&s, 64).unwrap();
        let fast = dilate_samples(&lp, -4, 3).unwrap();
        let slow = synthesize(&dilate(&s, -4).unwrap(), 64).unwrap();
        assert!(fast.max_distance(&slow) < 1e-12);
        assert!(dilate_samples(&lp, 8, 4).is_err());
    }

    #[test]
    fn json_format() {
        let s = SpectralSeries::from_terms([(4, c(-0.125, 0.0)), (-2, c(0.25, 1.5))]);
        assert_eq!(s.to_json(), "[[-2,0.25,1.5],[4,-0.125,0.0]]");
        assert_eq!(SpectralSeries::from_json(&s.to_json()).unwrap(), s);
        assert!(matches!(SpectralSeries::from_json("[[1,2]]"), Err(Error::Format(_))));
    }

    #[test]
    fn loop_csv_format() {
        let lp = SampledLoop::new(vec![c(0.1, -2.0), c(3.0, 1e-20)]).unwrap();
        assert_eq!(lp.to_csv(), "0.1,-2\n3,0.00000000000000000001\n");
        assert_eq!(SampledLoop::from_csv(&lp.to_csv()).unwrap(), lp);
        assert_eq!(
            SampledLoop::from_csv("1,2\nx,3\n"),
            Err(Error::MalformedRow { line: 2, text: "x,3".into() })
        );
    }

    fn arb_series(max_index: i64, max_terms: usize) -> impl Strategy<Value = SpectralSeries> {
        prop::collection::vec((-max_index..=max_index, -1.0f64..1.0, -1.0f64..1.0), 1..=max_terms)
            .prop_map(|v| v.into_iter().map(|(k, re, im)| (k, Complex64::new(re, im))).collect())
    }

    proptest! {
        #[test]
        fn analyze_inverts_synthesize(s in arb_series(9, 19), extra in 0usize..40) {
            let m = s.max_abs_index() as usize;
            let n = 2 * m + 1 + extra;
            let back = analyze(&synthesize(&s, n).unwrap(), m).unwrap();
            for k in -(m as i64)..=(m as i64) {
                prop_assert!((back.get(k) - s.get(k)).norm() <= 1e-12);
            }
        }

        #[test]
        fn sample_norm_matches_parseval(s in arb_series(12, 10)) {
            let lp = synthesize(&s, 64).unwrap();
            prop_assert!((lp.rms_norm() - s.norm()).abs() <= 1e-10);
            let back = analyze(&lp, 12).unwrap();
            prop_assert!((back.norm() - lp.rms_norm()).abs() <= 1e-10);
        }

        #[test]
        fn dilation_is_isometric_and_composes(s in arb_series(20, 12), j in prop::sample::select(vec![-4i64, -2, 2, 3, 4]), k in prop::sample::select(vec![-3i64, -2, 2, 4])) {
            let dj = dilate(&s, j).unwrap();
            prop_assert!((dj.norm() - s.norm()).abs() <= 1e-12);
            prop_assert_eq!(dilate(&dj, k).unwrap(), dilate(&s, j * k).unwrap());
        }

        #[test]
        fn truncation_error_is_tail_energy(s in arb_series(30, 20), m in 0usize..30) {
            let t = truncate(&s, m);
            let tail: f64 = s.iter().filter(|(k, _)| k.unsigned_abs() > m as u64).map(|(_, c)| c.norm_sqr()).sum();
            prop_assert!(((&s - &t).norm_sqr() - tail).abs() <= 1e-12);
        }

        #[test]
        fn analyze_and_dilate_are_linear(s in arb_series(6, 8), t in arb_series(6, 8), re in -2.0f64..2.0, im in -2.0f64..2.0) {
            let z = Complex64::new(re, im);
            let lhs = &(&s * z) + &t;
            let ls = synthesize(&s, 32).unwrap();
            let lt = synthesize(&t, 32).unwrap();
            let mixed = SampledLoop::new(ls.samples().iter().zip(lt.samples()).map(|(a, b)| a * z + b).collect()).unwrap();
            let back = analyze(&mixed, 6).unwrap();
            for k in -6..=6 {
                prop_assert!((back.get(k) - lhs.get(k)).norm() <= 1e-12);
            }
            let d1 = dilate(&lhs, -2).unwrap();
            let d2 = &(&dilate(&s, -2).unwrap() * z) + &dilate(&t, -2).unwrap();
            for k in d1.indices().chain(d2.indices()) {
                prop_assert!((d1.get(*k) - d2.get(*k)).norm() <= 1e-15);
            }
        }
    }
}
