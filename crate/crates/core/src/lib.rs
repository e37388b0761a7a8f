// SPDX-License-Identifier: Apache-2.0

//! Fourier-type series whose building blocks are triangles of constant
//! width instead of circles.
//!
//! The basis curve is γ(t) = e^{it}(1 + a cos 3t − 3ia sin 3t) with
//! `a ∈ [0, 1/3)`. The operator `T(f) = f + 2a f(−2·) − a f(4·)` maps each
//! circle `e^{ikt}` to `γ(kt)`; its inverse is a series of dilations
//! weighted by a Jacobsthal-type sequence. Truncating that series and
//! applying `Rₙ ∘ T` to letterform contours produces the rough, vibrating
//! outlines this crate renders to SVG.
//!
//! Module map:
//! - [`geometry`]: γ, support function, curvature, area and perimeter.
//! - [`coeffs`]: the coefficients `jₗ`, growth ratio, smoothness thresholds.
//! - [`spectral`]: sparse spectra, sampling, analysis and dilation.
//! - [`operators`]: `T`, `Rₙ`, constant-width coefficients and inner product.
//! - [`regularity`]: difference-quotient and Cᵏ witnesses.
//! - [`glyph`], [`contour`], [`render`]: contour ingestion, pipeline, SVG.

#[cfg(test)]
macro_rules! assert_close {
    ($a:expr, $b:expr, $tol:expr) => {{
        let (a, b): (f64, f64) = ($a, $b);
        assert!((a - b).abs() <= $tol, "{} vs {} (tol {})", a, b, $tol);
    }};
}

pub mod coeffs;
pub mod contour;
pub mod error;
pub mod fixtures;
pub mod geometry;
pub mod glyph;
pub mod operators;
pub mod regularity;
pub mod render;
pub mod spectral;

pub use num_complex::Complex64;

pub use crate::coeffs::{
    growth_ratio, jacobsthal_closed, jacobsthal_recurrence, max_smoothness, rational_sqrt, smoothness_threshold,
    tail_sum, JacobsthalCoeffs, Smoothness,
};
pub use crate::contour::{normalize, resample_arclength, Contour, Orientation};
pub use crate::error::{Error, Result};
pub use crate::geometry::{
    curvature_radius, gamma_point, shape_metrics, support_function, Regime, ShapeMetrics, WidthParam,
};
pub use crate::glyph::{
    parse_points_csv, parse_svg_document, parse_svg_path, transform_glyph, truncate_glyph, GlyphDocument,
};
pub use crate::operators::{apply_rn, apply_t, cw_coefficients, cw_synthesize, inner_product_r, OperatorConfig};
pub use crate::regularity::{ck_convergence_witness, diff_quotient_table, r_of_sin_partial, QuotientTableRow};
pub use crate::render::{emit_svg, RenderOptions};
pub use crate::spectral::{analyze, dilate, synthesize, truncate, SampledLoop, SpectralSeries};
