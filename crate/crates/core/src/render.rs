// SPDX-License-Identifier: Apache-2.0

//! Deterministic SVG output.
//!
//! Loops are written in their own coordinates with fixed 6-decimal
//! formatting; a single group transform fits all of them into the canvas, so
//! the path data re-parses to the original points.

use std::fmt::Write as _;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::spectral::SampledLoop;

/// Smallest accepted `samples_out`.
pub const MIN_SAMPLES_OUT: usize = 64;

#[derive(Debug, Clone, PartialEq)]
pub struct RenderOptions {
    pub stroke_width: f64,
    pub width: f64,
    pub height: f64,
    pub margin: f64,
    /// Default synthesis grid for pipelines that feed this renderer.
    pub samples_out: usize,
    /// Flip the vertical axis so that mathematical coordinates appear upright.
    pub y_up: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions { stroke_width: 1.5, width: 512.0, height: 512.0, margin: 16.0, samples_out: 1024, y_up: true }
    }
}

impl RenderOptions {
    pub fn validate(&self) -> Result<()> {
        if self.samples_out < MIN_SAMPLES_OUT {
            return Err(Error::InsufficientSamples { needed: MIN_SAMPLES_OUT, got: self.samples_out });
        }
        let ok = |v: f64| v.is_finite() && v > 0.0;
        if !ok(self.width) || !ok(self.height) || !ok(self.stroke_width) || !(self.margin.is_finite() && self.margin >= 0.0) {
            return Err(Error::Format("canvas, stroke and margin must be positive".into()));
        }
        if 2.0 * self.margin >= self.width.min(self.height) {
            return Err(Error::Format("margin leaves no drawing area".into()));
        }
        Ok(())
    }
}

fn num(out: &mut String, v: f64) {
    let start = out.len();
    let _ = write!(out, "{v:.6}");
    if &out[start..] == "-0.000000" {
        out.replace_range(start.., "0.000000");
    }
}

/// Affine map `p ↦ s·(x, ±y) + (tx, ty)` fitting the bounding box of `points`.
fn fit(points: impl Iterator<Item = Complex64>, opts: &RenderOptions) -> (f64, f64, f64) {
    let (mut x0, mut y0, mut x1, mut y1) = (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
    for p in points {
        x0 = x0.min(p.re);
        x1 = x1.max(p.re);
        y0 = y0.min(p.im);
        y1 = y1.max(p.im);
    }
    let (bw, bh) = (x1 - x0, y1 - y0);
    let (aw, ah) = (opts.width - 2.0 * opts.margin, opts.height - 2.0 * opts.margin);
    let s = match (bw > 0.0, bh > 0.0) {
        (true, true) => (aw / bw).min(ah / bh),
        (true, false) => aw / bw,
        (false, true) => ah / bh,
        (false, false) => 1.0,
    };
    let (cx, cy) = ((x0 + x1) / 2.0, (y0 + y1) / 2.0);
    let tx = opts.width / 2.0 - s * cx;
    let ty = if opts.y_up { opts.height / 2.0 + s * cy } else { opts.height / 2.0 - s * cy };
    (s, tx, ty)
}

fn header(out: &mut String, opts: &RenderOptions, (s, tx, ty): (f64, f64, f64)) {
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"");
    num(out, opts.width);
    out.push_str("\" height=\"");
    num(out, opts.height);
    out.push_str("\" viewBox=\"0 0 ");
    num(out, opts.width);
    out.push(' ');
    num(out, opts.height);
    out.push_str("\">\n<g transform=\"matrix(");
    num(out, s);
    out.push_str(" 0 0 ");
    num(out, if opts.y_up { -s } else { s });
    out.push(' ');
    num(out, tx);
    out.push(' ');
    num(out, ty);
    out.push_str(")\" fill=\"none\" stroke=\"black\" stroke-linejoin=\"round\" stroke-width=\"");
    num(out, opts.stroke_width);
    out.push_str("\">\n");
}

fn point(out: &mut String, cmd: char, p: Complex64) {
    out.push(cmd);
    out.push(' ');
    num(out, p.re);
    out.push(' ');
    num(out, p.im);
}

/// One closed `M … L … Z` path per loop. A loop of `N` samples yields `N`
/// `L` segments, the last returning to the start point.
pub fn emit_svg(loops: &[SampledLoop], opts: &RenderOptions) -> Result<String> {
    if loops.is_empty() {
        return Err(Error::EmptyInput);
    }
    opts.validate()?;
    let transform = fit(loops.iter().flat_map(|l| l.samples().iter().copied()), opts);
    let mut out = String::with_capacity(loops.iter().map(|l| l.len() * 24).sum::<usize>() + 512);
    header(&mut out, opts, transform);
    for lp in loops {
        let s = lp.samples();
        out.push_str("<path vector-effect=\"non-scaling-stroke\" d=\"");
        point(&mut out, 'M', s[0]);
        for &p in s[1..].iter().chain(std::iter::once(&s[0])) {
            out.push(' ');
            point(&mut out, 'L', p);
        }
        out.push_str(" Z\"/>\n");
    }
    out.push_str("</g>\n</svg>\n");
    Ok(out)
}

/// Function graphs as open polylines of `(x, y)` points, with the x axis drawn.
pub fn emit_graph_svg(curves: &[Vec<(f64, f64)>], opts: &RenderOptions) -> Result<String> {
    if curves.iter().all(|c| c.len() < 2) {
        return Err(Error::EmptyInput);
    }
    opts.validate()?;
    let pts = || curves.iter().flatten().map(|&(x, y)| Complex64::new(x, y));
    let transform = fit(pts().chain(std::iter::once(Complex64::new(0.0, 0.0))), opts);
    let (xmin, xmax) = pts().fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), p| (a.min(p.re), b.max(p.re)));
    let mut out = String::new();
    header(&mut out, opts, transform);
    out.push_str("<path vector-effect=\"non-scaling-stroke\" stroke=\"gray\" d=\"");
    point(&mut out, 'M', Complex64::new(xmin, 0.0));
    out.push(' ');
    point(&mut out, 'L', Complex64::new(xmax, 0.0));
    out.push_str("\"/>\n");
    for c in curves.iter().filter(|c| c.len() >= 2) {
        out.push_str("<path vector-effect=\"non-scaling-stroke\" d=\"");
        point(&mut out, 'M', Complex64::new(c[0].0, c[0].1));
        for &(x, y) in &c[1..] {
            out.push(' ');
            point(&mut out, 'L', Complex64::new(x, y));
        }
        out.push_str("\"/>\n");
    }
    out.push_str("</g>\n</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contour::resample_arclength;
    use crate::fixtures;
    use crate::glyph::parse_svg_document;

    fn square_loop(n: usize) -> SampledLoop {
        resample_arclength(&fixtures::square(), n).unwrap()
    }

    #[test]
    fn one_loop_structure() {
        let svg = emit_svg(&[square_loop(16)], &RenderOptions::default()).unwrap();
        assert_eq!(svg.matches("<path").count(), 1);
        assert_eq!(svg.matches(" L ").count(), 16);
        assert_eq!(svg.matches('Z').count(), 1);
        assert!(roxmltree::Document::parse(&svg).is_ok());
    }

    #[test]
    fn loops_share_one_transform() {
        let svg = emit_svg(&[square_loop(16), square_loop(32)], &RenderOptions::default()).unwrap();
        assert_eq!(svg.matches("<path").count(), 2);
        assert_eq!(svg.matches("transform=").count(), 1);
    }

    #[test]
    fn deterministic() {
        let loops = [square_loop(64)];
        let opts = RenderOptions::default();
        assert_eq!(emit_svg(&loops, &opts).unwrap(), emit_svg(&loops, &opts).unwrap());
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(emit_svg(&[], &RenderOptions::default()), Err(Error::EmptyInput));
        let opts = RenderOptions { samples_out: 10, ..Default::default() };
        assert!(emit_svg(&[square_loop(8)], &opts).is_err());
        let opts = RenderOptions { width: 0.0, ..Default::default() };
        assert!(emit_svg(&[square_loop(8)], &opts).is_err());
    }

    #[test]
    fn reparses_to_same_vertices() {
        let lp = resample_arclength(&fixtures::star(5, 0.4, 1.0), 100).unwrap();
        let svg = emit_svg(std::slice::from_ref(&lp), &RenderOptions::default()).unwrap();
        let back = parse_svg_document(&svg).unwrap();
        assert_eq!(back.len(), 1);
        assert_eq!(back[0].len(), 100);
        for (a, b) in back[0].vertices().iter().zip(lp.samples()) {
            assert!((a - b).norm() <= 1e-6);
        }
    }

    #[test]
    fn fit_keeps_aspect_and_margin() {
        let opts = RenderOptions { width: 300.0, height: 100.0, margin: 10.0, ..Default::default() };
        let pts = [Complex64::new(-1.0, -1.0), Complex64::new(1.0, 1.0)];
        let (s, tx, ty) = fit(pts.into_iter(), &opts);
        assert_eq!(s, 40.0);
        assert_eq!((tx, ty), (150.0, 50.0));
    }

    #[test]
    fn graph_output() {
        let pts: Vec<(f64, f64)> = (0..50).map(|i| (i as f64 * 0.1, (i as f64 * 0.1).sin())).collect();
        let svg = emit_graph_svg(&[pts], &RenderOptions::default()).unwrap();
        assert_eq!(svg.matches("<path").count(), 2);
        assert!(!svg.contains('Z'));
    }
}
