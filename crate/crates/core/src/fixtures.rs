// SPDX-License-Identifier: Apache-2.0

//! Synthetic test glyphs. The same shapes ship as files under `fixtures/`.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use num_complex::Complex64;

use crate::contour::Contour;
use crate::glyph::{parse_svg_document, GlyphDocument};

/// A serif-less capital S outlined with cubic Béziers, in SVG coordinates.
pub const S_SVG: &str = include_str!("../fixtures/s.svg");
pub const SQUARE_CSV: &str = include_str!("../fixtures/square.csv");

pub fn s_glyph() -> GlyphDocument {
    let mut doc = GlyphDocument::new(parse_svg_document(S_SVG).expect("fixture parses"), "s")
        .expect("fixture has contours");
    doc.y_down = true;
    doc
}

/// Unit square with corners `(0,0)..(1,1)`, counterclockwise.
pub fn square() -> Contour {
    Contour::from_xy(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]).expect("square")
}

/// Regular `n`-gon inscribed in the unit circle, starting at `(1, 0)`.
pub fn circle(n: usize) -> Contour {
    Contour::new((0..n).map(|j| Complex64::cis(TAU * j as f64 / n as f64)).collect()).expect("n >= 3")
}

/// Star with `points` tips at radius `outer` and notches at radius `inner`,
/// first tip pointing up.
pub fn star(points: usize, inner: f64, outer: f64) -> Contour {
    let v = (0..2 * points)
        .map(|j| {
            let r = if j % 2 == 0 { outer } else { inner };
            Complex64::from_polar(r, FRAC_PI_2 + PI * j as f64 / points as f64)
        })
        .collect();
    Contour::new(v).expect("points >= 2")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::glyph::parse_points_csv;

    #[test]
    fn files_match_generators() {
        assert_eq!(parse_points_csv(SQUARE_CSV).unwrap(), square());
        let c = parse_points_csv(include_str!("../fixtures/circle.csv")).unwrap();
        for (a, b) in c.vertices().iter().zip(circle(256).vertices()) {
            assert!((a - b).norm() < 1e-15);
        }
        let s = parse_points_csv(include_str!("../fixtures/star.csv")).unwrap();
        for (a, b) in s.vertices().iter().zip(star(5, 0.4, 1.0).vertices()) {
            assert!((a - b).norm() < 1e-15);
        }
    }

    #[test]
    fn s_outline() {
        let s = s_glyph();
        assert_eq!(s.contours.len(), 1);
        // M, 12 cubics and one line segment
        assert_eq!(s.contours[0].len(), 1 + 12 * 16 + 1);
    }
}
