// SPDX-License-Identifier: Apache-2.0

//! Letterform pipeline: load contours, take their truncated Fourier series
//! `L_m`, and push them through `Rₙ ∘ T`.

mod path;

use std::fs;
use std::path::Path;

use rayon::prelude::*;

pub use self::path::{parse_svg_document, parse_svg_path, BEZIER_CHORDS};
pub use crate::contour::normalize;

use crate::contour::{resample_arclength, Contour};
use crate::error::{Error, Result};
use crate::geometry::WidthParam;
use crate::operators::{apply_rn, apply_t, OperatorConfig};
use crate::spectral::{analyze, parse_pair, synthesize, SampledLoop, SpectralSeries};

/// Independent closed contours of one glyph.
#[derive(Debug, Clone, PartialEq)]
pub struct GlyphDocument {
    pub contours: Vec<Contour>,
    pub source_name: String,
    /// Coordinates follow the SVG convention (y grows downwards).
    pub y_down: bool,
}

impl GlyphDocument {
    pub fn new(contours: Vec<Contour>, source_name: impl Into<String>) -> Result<Self> {
        if contours.is_empty() {
            return Err(Error::EmptyPath);
        }
        Ok(GlyphDocument { contours, source_name: source_name.into(), y_down: false })
    }

    /// Reads `.csv` point lists, `.svg` documents, or raw path data.
    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        let ext = path.extension().map(|e| e.to_string_lossy().to_ascii_lowercase());
        Self::from_text(&text, ext.as_deref(), name)
    }

    /// Parses `text`; without a format hint the content is sniffed.
    pub fn from_text(text: &str, format: Option<&str>, name: impl Into<String>) -> Result<Self> {
        let trimmed = text.trim_start();
        let format = match format {
            Some(f @ ("csv" | "svg" | "path")) => f,
            _ if trimmed.starts_with('<') => "svg",
            _ if trimmed.starts_with(['M', 'm']) => "path",
            _ => "csv",
        };
        let (contours, y_down) = match format {
            "svg" => (parse_svg_document(text)?, true),
            "path" => (parse_svg_path(text)?, true),
            _ => (vec![parse_points_csv(text)?], false),
        };
        let mut doc = GlyphDocument::new(contours, name)?;
        doc.y_down = y_down;
        Ok(doc)
    }

    /// Every contour centred, scaled to unit radius and counterclockwise.
    ///
    /// Orientation is judged in the document's own coordinates, so a y-down
    /// source ends up clockwise on screen.
    pub fn normalized(&self) -> Result<Self> {
        Ok(GlyphDocument {
            contours: self.contours.iter().map(normalize).collect::<Result<_>>()?,
            source_name: self.source_name.clone(),
            y_down: self.y_down,
        })
    }
}

/// One `x,y` vertex per line; blank lines are skipped.
pub fn parse_points_csv(text: &str) -> Result<Contour> {
    let mut points = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let p = parse_pair(line).ok_or_else(|| Error::MalformedRow { line: i + 1, text: line.to_string() })?;
        points.push(p);
    }
    if points.len() < 3 {
        return Err(Error::TooFewPoints(points.len()));
    }
    Contour::from_xy(&points)
}

/// Fourier coefficients `|k| ≤ m` of every contour, resampled by arc length to `n` points.
pub fn glyph_spectra(doc: &GlyphDocument, m: usize, n: usize) -> Result<Vec<SpectralSeries>> {
    if n <= 2 * m {
        return Err(Error::InsufficientSamples { needed: 2 * m + 1, got: n });
    }
    doc.contours
        .par_iter()
        .map(|c| analyze(&resample_arclength(c, n)?, m))
        .collect()
}

/// Truncated Fourier series `L_m` of each contour on `n` samples.
pub fn truncate_glyph(doc: &GlyphDocument, m: usize, n: usize) -> Result<Vec<SampledLoop>> {
    glyph_spectra(doc, m, n)?
        .par_iter()
        .map(|s| synthesize(s, n))
        .collect()
}

/// Smallest grid that synthesizes `Rₙ(T(L_m))` without aliasing: `2·2ⁿ·4m + 1`.
pub fn transform_min_samples(n: usize, m: usize) -> Option<usize> {
    let reach = 1usize.checked_shl(n as u32)?.checked_mul(4)?.checked_mul(m)?;
    reach.checked_mul(2)?.checked_add(1)
}

/// `(Rₙ ∘ T)(L_m)` for each contour on `samples` points.
pub fn transform_glyph(
    doc: &GlyphDocument,
    a: WidthParam,
    n: usize,
    m: usize,
    samples: usize,
) -> Result<Vec<SampledLoop>> {
    let needed = transform_min_samples(n, m).unwrap_or(usize::MAX);
    if samples < needed {
        return Err(Error::InsufficientSamples { needed, got: samples });
    }
    let cfg = OperatorConfig::new(a, n);
    glyph_spectra(doc, m, samples)?
        .par_iter()
        .map(|s| synthesize(&apply_rn(&apply_t(s, a)?, &cfg)?, samples))
        .collect()
}
