// SPDX-License-Identifier: Apache-2.0

//! Closed planar polylines and their conversion to uniformly parametrized loops.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::spectral::SampledLoop;

/// Fewest output samples [`resample_arclength`] accepts.
pub const MIN_RESAMPLE: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    CounterClockwise,
    Clockwise,
}

/// Closed polyline with at least three vertices; closure is implicit.
#[derive(Debug, Clone, PartialEq)]
pub struct Contour {
    vertices: Vec<Complex64>,
}

impl Contour {
    /// A trailing vertex equal to the first one is dropped.
    pub fn new(mut vertices: Vec<Complex64>) -> Result<Self> {
        if vertices.len() > 1 && vertices.first() == vertices.last() {
            vertices.pop();
        }
        if vertices.len() < 3 {
            return Err(Error::DegenerateContour("fewer than 3 vertices"));
        }
        if vertices.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::DegenerateContour("non-finite coordinate"));
        }
        let c = Contour { vertices };
        if c.signed_area() == 0.0 {
            return Err(Error::DegenerateContour("zero signed area"));
        }
        Ok(c)
    }

    pub fn from_xy(points: &[(f64, f64)]) -> Result<Self> {
        Self::new(points.iter().map(|&(x, y)| Complex64::new(x, y)).collect())
    }

    pub fn vertices(&self) -> &[Complex64] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Shoelace area, positive for counterclockwise vertex order.
    pub fn signed_area(&self) -> f64 {
        signed_area(&self.vertices)
    }

    pub fn orientation(&self) -> Orientation {
        if self.signed_area() > 0.0 {
            Orientation::CounterClockwise
        } else {
            Orientation::Clockwise
        }
    }

    pub fn perimeter(&self) -> f64 {
        edges(&self.vertices).map(|(p, q)| (q - p).norm()).sum()
    }

    /// Vertex average.
    pub fn centroid(&self) -> Complex64 {
        self.vertices.iter().sum::<Complex64>() / self.vertices.len() as f64
    }

    /// Treats the samples of a loop as polygon vertices.
    pub fn from_loop(lp: &SampledLoop) -> Result<Self> {
        Contour::new(lp.samples().to_vec())
    }

    pub fn reversed(&self) -> Contour {
        let mut v = self.vertices.clone();
        v.reverse();
        Contour { vertices: v }
    }
}

pub(crate) fn signed_area(v: &[Complex64]) -> f64 {
    0.5 * edges(v).map(|(p, q)| p.re * q.im - q.re * p.im).sum::<f64>()
}

fn edges(v: &[Complex64]) -> impl Iterator<Item = (Complex64, Complex64)> + '_ {
    v.iter().zip(v.iter().cycle().skip(1)).map(|(&p, &q)| (p, q))
}

/// Translates the vertex centroid to the origin, scales to `max |z| = 1` and
/// makes the orientation counterclockwise.
pub fn normalize(contour: &Contour) -> Result<Contour> {
    let c = contour.centroid();
    let shifted: Vec<Complex64> = contour.vertices.iter().map(|z| z - c).collect();
    let radius = shifted.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if !(radius.is_finite() && radius > 0.0) {
        return Err(Error::DegenerateContour("all vertices coincide"));
    }
    let mut out = Contour::new(shifted.into_iter().map(|z| z / radius).collect())?;
    if out.orientation() == Orientation::Clockwise {
        out = out.reversed();
    }
    Ok(out)
}

/// `n` points equally spaced in arc length, starting at vertex 0 and
/// following the vertex order.
pub fn resample_arclength(contour: &Contour, n: usize) -> Result<SampledLoop> {
    if n < MIN_RESAMPLE {
        return Err(Error::InsufficientSamples { needed: MIN_RESAMPLE, got: n });
    }
    let v = &contour.vertices;
    if v.len() < 3 {
        return Err(Error::DegenerateContour("fewer than 3 vertices"));
    }
    // cum[i] = arc length from vertex 0 to vertex i; cum[len] = total.
    let mut cum = Vec::with_capacity(v.len() + 1);
    cum.push(0.0);
    for (p, q) in edges(v) {
        cum.push(cum.last().unwrap() + (q - p).norm());
    }
    let total = *cum.last().unwrap();
    if !(total.is_finite() && total > 0.0) {
        return Err(Error::DegenerateContour("zero length"));
    }

    let mut out = Vec::with_capacity(n);
    let mut seg = 0usize;
    for j in 0..n {
        let s = total * j as f64 / n as f64;
        while seg + 1 < v.len() && cum[seg + 1] <= s {
            seg += 1;
        }
        let p = v[seg];
        let q = v[(seg + 1) % v.len()];
        let len = cum[seg + 1] - cum[seg];
        let z = if len > 0.0 { p + (q - p) * ((s - cum[seg]) / len) } else { p };
        out.push(z);
    }
    SampledLoop::new(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::analyze;
    use std::f64::consts::{FRAC_1_SQRT_2, TAU};

    fn square() -> Contour {
        Contour::from_xy(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]).unwrap()
    }

    #[test]
    fn construction() {
        let c = Contour::from_xy(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 0.0)]).unwrap();
        assert_eq!(c.len(), 3);
        assert!(Contour::from_xy(&[(0.0, 0.0), (1.0, 0.0)]).is_err());
        assert!(Contour::from_xy(&[(0.0, 0.0), (1.0, 0.0), (2.0, 0.0)]).is_err());
        assert_eq!(square().signed_area(), 1.0);
        assert_eq!(square().orientation(), Orientation::CounterClockwise);
        assert_eq!(square().reversed().orientation(), Orientation::Clockwise);
        assert_eq!(square().perimeter(), 4.0);
    }

    #[test]
    fn normalize_square() {
        let n = normalize(&square()).unwrap();
        assert!(n.centroid().norm() < 1e-15);
        let want = [(-1.0, -1.0), (1.0, -1.0), (1.0, 1.0), (-1.0, 1.0)];
        for (z, (x, y)) in n.vertices().iter().zip(want) {
            assert!((z - Complex64::new(x, y) * FRAC_1_SQRT_2).norm() < 1e-15);
        }
        let max = n.vertices().iter().map(|z| z.norm()).fold(0.0, f64::max);
        assert!((max - 1.0).abs() < 1e-15);
    }

    #[test]
    fn normalize_idempotent_and_orients() {
        let n = normalize(&square()).unwrap();
        let again = normalize(&n).unwrap();
        for (a, b) in n.vertices().iter().zip(again.vertices()) {
            assert!((a - b).norm() <= 1e-12);
        }
        let cw = Contour::from_xy(&[(0.0, 0.0), (0.0, 1.0), (1.0, 0.0)]).unwrap();
        assert_eq!(cw.orientation(), Orientation::Clockwise);
        let n = normalize(&cw).unwrap();
        assert_eq!(n.orientation(), Orientation::CounterClockwise);
        // reversed order: third input vertex first
        let shift = Complex64::new(1.0 / 3.0, 1.0 / 3.0);
        let scale = (Complex64::new(0.0, 1.0) - shift).norm();
        assert!((n.vertices()[0] - (Complex64::new(1.0, 0.0) - shift) / scale).norm() < 1e-15);
    }

    #[test]
    fn resample_square() {
        let lp = resample_arclength(&square(), 8).unwrap();
        let want = [(0.0, 0.0), (0.5, 0.0), (1.0, 0.0), (1.0, 0.5), (1.0, 1.0), (0.5, 1.0), (0.0, 1.0), (0.0, 0.5)];
        for (z, (x, y)) in lp.samples().iter().zip(want) {
            assert!((z - Complex64::new(x, y)).norm() < 1e-15, "{z}");
        }
    }

    #[test]
    fn resample_contract() {
        let tri = Contour::from_xy(&[(0.0, 0.0), (3.0, 0.5), (1.0, 2.0)]).unwrap();
        let lp = resample_arclength(&tri, 37).unwrap();
        assert_eq!(lp.len(), 37);
        assert_eq!(lp.samples()[0], tri.vertices()[0]);
        assert_eq!(
            resample_arclength(&tri, 7),
            Err(Error::InsufficientSamples { needed: 8, got: 7 })
        );
        let dense = resample_arclength(&tri, 4000).unwrap();
        let closed_len: f64 = dense
            .samples()
            .iter()
            .zip(dense.samples().iter().cycle().skip(1))
            .map(|(p, q)| (q - p).norm())
            .sum();
        assert!((closed_len - tri.perimeter()).abs() <= tri.perimeter() / 4000.0);
    }

    #[test]
    fn resampled_polygon_dominant_mode() {
        let poly: Vec<Complex64> = (0..64).map(|j| Complex64::cis(TAU * j as f64 / 64.0)).collect();
        // brute-force DFT of the polygon's own vertices
        let oracle: Complex64 = poly
            .iter()
            .enumerate()
            .map(|(j, z)| z * Complex64::cis(-TAU * j as f64 / 64.0))
            .sum::<Complex64>()
            / 64.0;
        let lp = resample_arclength(&Contour::new(poly).unwrap(), 64).unwrap();
        let c1 = analyze(&lp, 1).unwrap().get(1);
        assert!((c1.norm() - oracle.norm()).abs() < 1e-3);
    }
}
