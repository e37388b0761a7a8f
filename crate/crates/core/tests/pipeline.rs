// SPDX-License-Identifier: Apache-2.0

use std::f64::consts::TAU;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tricontour::coeffs::jacobsthal_recurrence;
use tricontour::fixtures;
use tricontour::glyph::{glyph_spectra, parse_svg_document, transform_glyph, truncate_glyph, GlyphDocument};
use tricontour::operators::inversion_error_bound;
use tricontour::render::{emit_svg, RenderOptions};
use tricontour::{Complex64, Contour, Orientation, WidthParam};

fn rng() -> ChaCha8Rng {
    let seed = std::env::var("TRICONTOUR_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(20_240_611);
    ChaCha8Rng::seed_from_u64(seed)
}

/// Star-shaped polygon with random radii, so it is simple and has nonzero area.
fn random_blob(rng: &mut ChaCha8Rng, vertices: usize) -> Contour {
    let pts = (0..vertices)
        .map(|i| {
            let t = TAU * i as f64 / vertices as f64;
            Complex64::from_polar(rng.random_range(0.5..1.5), t)
        })
        .collect();
    Contour::new(pts).unwrap()
}

fn random_doc(rng: &mut ChaCha8Rng) -> GlyphDocument {
    let count = rng.random_range(1..=3);
    let contours = (0..count)
        .map(|_| {
            let v = rng.random_range(5..40);
            let c = random_blob(rng, v);
            if rng.random::<bool>() { c.reversed() } else { c }
        })
        .collect();
    GlyphDocument::new(contours, "blob").unwrap().normalized().unwrap()
}

#[test]
fn consecutive_orders_differ_by_one_dilation() {
    let mut rng = rng();
    for _ in 0..8 {
        let doc = random_doc(&mut rng);
        let a = WidthParam::new(rng.random_range(0.01..0.3)).unwrap();
        let (m, samples) = (4, 2049);
        let norms: Vec<f64> = glyph_spectra(&doc, m, samples).unwrap().iter().map(|s| s.norm()).collect();
        let j = jacobsthal_recurrence(a, 4);
        let mut prev = transform_glyph(&doc, a, 0, m, samples).unwrap();
        for n in 0..3 {
            let next = transform_glyph(&doc, a, n + 1, m, samples).unwrap();
            for ((p, q), norm) in prev.iter().zip(&next).zip(&norms) {
                let step = p.rms_distance(q);
                let bound = j.values[n + 1] * (1.0 + 3.0 * a.value()) * norm;
                assert!(step <= bound * (1.0 + 1e-9) + 1e-12, "a={} n={n}: {step} > {bound}", a.value());
            }
            prev = next;
        }
    }
}

#[test]
fn pipeline_preserves_orientation_and_count() {
    let mut rng = rng();
    for _ in 0..8 {
        let doc = random_doc(&mut rng);
        let a = WidthParam::new(rng.random_range(0.0..0.2)).unwrap();
        let loops = transform_glyph(&doc, a, 2, 6, 512).unwrap();
        assert_eq!(loops.len(), doc.contours.len());
        for lp in &loops {
            assert_eq!(Contour::from_loop(lp).unwrap().orientation(), Orientation::CounterClockwise);
        }
    }
}

#[test]
fn rendered_output_reparses() {
    let mut rng = rng();
    let doc = random_doc(&mut rng);
    let loops = truncate_glyph(&doc, 10, 300).unwrap();
    let opts = RenderOptions::default();
    let svg = emit_svg(&loops, &opts).unwrap();
    let back = parse_svg_document(&svg).unwrap();
    assert_eq!(back.len(), loops.len());
    for (c, lp) in back.iter().zip(&loops) {
        assert_eq!(c.len(), lp.len());
    }
    assert_eq!(svg, emit_svg(&loops, &opts).unwrap());
}

#[test]
fn letterform_truncations_tighten() {
    let doc = fixtures::s_glyph().normalized().unwrap();
    let samples = 1024;
    let reference = truncate_glyph(&doc, 500, samples).unwrap();
    let errors: Vec<f64> = [4, 10, 25, 100]
        .iter()
        .map(|&m| truncate_glyph(&doc, m, samples).unwrap()[0].rms_distance(&reference[0]))
        .collect();
    assert!(errors.windows(2).all(|w| w[1] < w[0]), "{errors:?}");
}

#[test]
fn circle_transform_within_inversion_bound() {
    let doc = GlyphDocument::new(vec![fixtures::circle(256)], "circle").unwrap().normalized().unwrap();
    let a = WidthParam::new(1.0 / 24.0).unwrap();
    let (n, m) = (4, 8);
    let samples = 2 * 16 * 4 * m + 1;
    let base = truncate_glyph(&doc, m, samples).unwrap();
    let out = transform_glyph(&doc, a, n, m, samples).unwrap();
    let norm = glyph_spectra(&doc, m, samples).unwrap()[0].norm();
    let bound = inversion_error_bound(a, n).unwrap() * norm;
    let err = out[0].rms_distance(&base[0]);
    assert!(err <= bound, "{err} > {bound}");
}
