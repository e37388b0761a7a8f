// SPDX-License-Identifier: Apache-2.0

//! C ABI over `tricontour`.
//!
//! Every fallible function returns a [`TcStatus`]; on failure a message is
//! available from [`tc_last_error_message`] on the same thread. Spectra are
//! opaque [`TcSpectrum`] handles released with [`tc_spectrum_free`]; strings
//! returned through `char **` are released with [`tc_string_free`].
//! Panics never cross the boundary and are reported as `TC_STATUS_PANIC`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use tricontour::coeffs::{growth_ratio, jacobsthal_recurrence, tail_sum};
use tricontour::geometry::{gamma_point, shape_metrics, Regime, WidthParam};
use tricontour::glyph::{transform_glyph, GlyphDocument};
use tricontour::operators::{apply_rn, apply_t, cw_coefficients, inner_product_r, OperatorConfig};
use tricontour::render::{emit_svg, RenderOptions};
use tricontour::spectral::{analyze, synthesize, SampledLoop, SpectralSeries};
use tricontour::{Complex64, Error};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InsufficientSamples = 3,
    ParseError = 4,
    Degenerate = 5,
    Overflow = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct TcComplex {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for TcComplex {
    fn from(c: Complex64) -> Self {
        TcComplex { re: c.re, im: c.im }
    }
}

impl From<TcComplex> for Complex64 {
    fn from(c: TcComplex) -> Self {
        Complex64::new(c.re, c.im)
    }
}

/// 0 circle, 1 strongly convex, 2 strictly convex, 3 self-intersecting.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct TcShapeMetrics {
    pub area: f64,
    pub perimeter: f64,
    pub iso_ratio: f64,
    pub regime: i32,
}

/// Sparse Fourier spectrum.
pub struct TcSpectrum {
    series: SpectralSeries,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(err: &Error) -> TcStatus {
    match err {
        Error::InsufficientSamples { .. } => TcStatus::InsufficientSamples,
        Error::IndexOverflow { .. } => TcStatus::Overflow,
        Error::DegenerateContour(_) => TcStatus::Degenerate,
        e if e.is_parse_error() => TcStatus::ParseError,
        _ => TcStatus::InvalidArgument,
    }
}

struct Fail(TcStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(TcStatus::NullPointer, format!("{what} is null"))
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> TcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => TcStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_string());
            set_error(format!("panic: {msg}"));
            TcStatus::Panic
        }
    }
}

unsafe fn out_ref<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or_else(|| null(what))
}

unsafe fn spectrum_ref<'a>(p: *const TcSpectrum, what: &str) -> Result<&'a SpectralSeries, Fail> {
    p.as_ref().map(|s| &s.series).ok_or_else(|| null(what))
}

unsafe fn c_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Fail(TcStatus::ParseError, format!("{what}: {e}")))
}

fn boxed(series: SpectralSeries) -> *mut TcSpectrum {
    Box::into_raw(Box::new(TcSpectrum { series }))
}

fn into_c_string(s: String) -> Result<*mut c_char, Fail> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|e| Fail(TcStatus::InvalidArgument, e.to_string()))
}

/// Message of the last failed call on this thread, or NULL.
///
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn tc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Point γₐ(t) of the constant-width curve.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tc_gamma_point(a: f64, t: f64, out: *mut TcComplex) -> TcStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        *out = gamma_point(WidthParam::new(a)?, t).into();
        Ok(())
    })
}

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tc_shape_metrics(a: f64, out: *mut TcShapeMetrics) -> TcStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let m = shape_metrics(WidthParam::new(a)?);
        *out = TcShapeMetrics {
            area: m.area,
            perimeter: m.perimeter,
            iso_ratio: m.iso_ratio,
            regime: match m.convexity {
                Regime::Circle => 0,
                Regime::StronglyConvex => 1,
                Regime::StrictlyConvex => 2,
                Regime::SelfIntersecting => 3,
            },
        };
        Ok(())
    })
}

/// Writes j₀ … j_{len−1} into `out`.
///
/// # Safety
/// `out` must be valid for `len` writes.
#[no_mangle]
pub unsafe extern "C" fn tc_jacobsthal(a: f64, len: usize, out: *mut f64) -> TcStatus {
    guard(|| {
        if len == 0 {
            return Ok(());
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let j = jacobsthal_recurrence(WidthParam::new(a)?, len);
        std::slice::from_raw_parts_mut(out, len).copy_from_slice(&j.values[..len]);
        Ok(())
    })
}

/// Limiting ratio a + √(a² + a).
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tc_growth_ratio(a: f64, out: *mut f64) -> TcStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        *out = growth_ratio(WidthParam::new(a)?.value());
        Ok(())
    })
}

/// Σ_{ℓ>n} jₗ.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tc_tail_sum(a: f64, n: usize, out: *mut f64) -> TcStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        *out = tail_sum(a, n)?;
        Ok(())
    })
}

/// Empty spectrum. Never NULL.
#[no_mangle]
pub extern "C" fn tc_spectrum_new() -> *mut TcSpectrum {
    boxed(SpectralSeries::new())
}

/// # Safety
/// `s` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tc_spectrum_free(s: *mut TcSpectrum) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Sets the amplitude at index `k` (zero removes the entry).
///
/// # Safety
/// `s` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn tc_spectrum_set(s: *mut TcSpectrum, k: i64, c: TcComplex) -> TcStatus {
    guard(|| {
        let s = out_ref(s, "spectrum")?;
        let c: Complex64 = c.into();
        if !c.re.is_finite() || !c.im.is_finite() {
            return Err(Fail(TcStatus::InvalidArgument, "amplitude is not finite".into()));
        }
        let old = s.series.get(k);
        s.series.add_term(k, -old);
        s.series.add_term(k, c);
        Ok(())
    })
}

/// # Safety
/// `s` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tc_spectrum_get(s: *const TcSpectrum, k: i64, out: *mut TcComplex) -> TcStatus {
    guard(|| {
        let s = spectrum_ref(s, "spectrum")?;
        *out_ref(out, "out")? = s.get(k).into();
        Ok(())
    })
}

/// Number of nonzero terms; 0 for NULL.
///
/// # Safety
/// `s` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn tc_spectrum_len(s: *const TcSpectrum) -> usize {
    s.as_ref().map_or(0, |s| s.series.len())
}

/// The `i`-th nonzero term in increasing index order.
///
/// # Safety
/// `s` must be a live handle; `k` and `c` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tc_spectrum_term(
    s: *const TcSpectrum,
    i: usize,
    k: *mut i64,
    c: *mut TcComplex,
) -> TcStatus {
    guard(|| {
        let s = spectrum_ref(s, "spectrum")?;
        let k = out_ref(k, "k")?;
        let c = out_ref(c, "c")?;
        let (idx, amp) = s
            .iter()
            .nth(i)
            .ok_or_else(|| Fail(TcStatus::InvalidArgument, format!("term {i} out of range ({} terms)", s.len())))?;
        *k = idx;
        *c = amp.into();
        Ok(())
    })
}

/// Parses `[[k, re, im], …]`.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tc_spectrum_from_json(json: *const c_char, out: *mut *mut TcSpectrum) -> TcStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let series = SpectralSeries::from_json(c_str(json, "json")?)?;
        *out = boxed(series);
        Ok(())
    })
}

/// # Safety
/// `s` must be a live handle; `out` valid for writes. Free the result with [`tc_string_free`].
#[no_mangle]
pub unsafe extern "C" fn tc_spectrum_to_json(s: *const TcSpectrum, out: *mut *mut c_char) -> TcStatus {
    guard(|| {
        let s = spectrum_ref(s, "spectrum")?;
        let out = out_ref(out, "out")?;
        *out = into_c_string(s.to_json())?;
        Ok(())
    })
}

/// Fourier coefficients |k| ≤ m of `n` equispaced samples.
///
/// # Safety
/// `samples` must be valid for `n` reads; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tc_analyze(
    samples: *const TcComplex,
    n: usize,
    m: usize,
    out: *mut *mut TcSpectrum,
) -> TcStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        if samples.is_null() {
            return Err(null("samples"));
        }
        let pts = std::slice::from_raw_parts(samples, n).iter().map(|&c| c.into()).collect();
        let series = analyze(&SampledLoop::new(pts)?, m)?;
        *out = boxed(series);
        Ok(())
    })
}

/// Evaluates the spectrum at `n` equispaced parameters into `out`.
///
/// # Safety
/// `s` must be a live handle; `out` valid for `n` writes.
#[no_mangle]
pub unsafe extern "C" fn tc_synthesize(s: *const TcSpectrum, n: usize, out: *mut TcComplex) -> TcStatus {
    guard(|| {
        let s = spectrum_ref(s, "spectrum")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let lp = synthesize(s, n)?;
        let dst = std::slice::from_raw_parts_mut(out, n);
        for (d, &c) in dst.iter_mut().zip(lp.samples()) {
            *d = c.into();
        }
        Ok(())
    })
}

/// f + 2a f₋₂ − a f₄.
///
/// # Safety
/// `s` must be a live handle; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tc_apply_t(s: *const TcSpectrum, a: f64, out: *mut *mut TcSpectrum) -> TcStatus {
    guard(|| {
        let s = spectrum_ref(s, "spectrum")?;
        let out = out_ref(out, "out")?;
        *out = boxed(apply_t(s, WidthParam::new(a)?)?);
        Ok(())
    })
}

/// n-term inverse series Rₙ.
///
/// # Safety
/// `s` must be a live handle; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tc_apply_rn(s: *const TcSpectrum, a: f64, n: usize, out: *mut *mut TcSpectrum) -> TcStatus {
    guard(|| {
        let s = spectrum_ref(s, "spectrum")?;
        let out = out_ref(out, "out")?;
        *out = boxed(apply_rn(s, &OperatorConfig::new(WidthParam::new(a)?, n))?);
        Ok(())
    })
}

/// Constant-width coefficients c̃_k for |k| ≤ `max_index`.
///
/// # Safety
/// `s` must be a live handle; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tc_cw_coefficients(
    s: *const TcSpectrum,
    a: f64,
    n: usize,
    max_index: usize,
    out: *mut *mut TcSpectrum,
) -> TcStatus {
    guard(|| {
        let s = spectrum_ref(s, "spectrum")?;
        let out = out_ref(out, "out")?;
        *out = boxed(cw_coefficients(s, &OperatorConfig::new(WidthParam::new(a)?, n), max_index)?);
        Ok(())
    })
}

/// ⟨Rₙ f, Rₙ g⟩.
///
/// # Safety
/// `f` and `g` must be live handles; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tc_inner_product_r(
    f: *const TcSpectrum,
    g: *const TcSpectrum,
    a: f64,
    n: usize,
    out: *mut TcComplex,
) -> TcStatus {
    guard(|| {
        let f = spectrum_ref(f, "f")?;
        let g = spectrum_ref(g, "g")?;
        let out = out_ref(out, "out")?;
        *out = inner_product_r(f, g, &OperatorConfig::new(WidthParam::new(a)?, n))?.into();
        Ok(())
    })
}

/// Runs the glyph pipeline on SVG/CSV text and renders the result as SVG.
///
/// `samples` is the output resolution per contour; it must exceed 2·2ⁿ·4m.
///
/// # Safety
/// `input` must be a NUL-terminated string; `out_svg` valid for writes.
/// Free the result with [`tc_string_free`].
#[no_mangle]
pub unsafe extern "C" fn tc_transform_svg(
    input: *const c_char,
    a: f64,
    n: usize,
    m: usize,
    samples: usize,
    out_svg: *mut *mut c_char,
) -> TcStatus {
    guard(|| {
        let text = c_str(input, "input")?;
        let out = out_ref(out_svg, "out_svg")?;
        let doc = GlyphDocument::from_text(text, None, "<input>")?.normalized()?;
        let loops = transform_glyph(&doc, WidthParam::new(a)?, n, m, samples)?;
        let opts = RenderOptions { y_up: !doc.y_down, ..RenderOptions::default() };
        *out = into_c_string(emit_svg(&loops, &opts)?)?;
        Ok(())
    })
}
