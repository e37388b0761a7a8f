// SPDX-License-Identifier: Apache-2.0

//! The constant-width curve γₐ and the geometry of its support function
//! `p(t) = 1 + a cos 3t`.
//!
//! γₐ(t) = e^{it}(1 + a cos 3t − 3ia sin 3t) traces a triangle of constant
//! width 2 for `a ∈ (0, 1/8]`, a circle for `a = 0` and a self-intersecting
//! curve for `a ∈ (1/8, 1/3)`.

use std::f64::consts::{PI, TAU};
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Upper (exclusive) bound on the shape parameter.
pub const MAX_WIDTH_PARAM: f64 = 1.0 / 3.0;

/// Value of `a` at which the curvature radius first touches zero.
pub const CONVEXITY_LIMIT: f64 = 1.0 / 8.0;

/// Shape parameter `a ∈ [0, 1/3)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct WidthParam(f64);

/// Convexity class of γₐ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    /// `a = 0`.
    Circle,
    /// `0 < a < 1/8`: curvature radius strictly positive.
    StronglyConvex,
    /// `a = 1/8`: curvature radius vanishes at three isolated points.
    StrictlyConvex,
    /// `1/8 < a < 1/3`.
    SelfIntersecting,
}

impl WidthParam {
    pub const ZERO: WidthParam = WidthParam(0.0);

    pub fn new(a: f64) -> Result<Self> {
        if (0.0..MAX_WIDTH_PARAM).contains(&a) {
            Ok(WidthParam(a))
        } else {
            Err(Error::InvalidWidth(a))
        }
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }

    pub fn regime(self) -> Regime {
        let a = self.0;
        if a == 0.0 {
            Regime::Circle
        } else if a < CONVEXITY_LIMIT {
            Regime::StronglyConvex
        } else if a == CONVEXITY_LIMIT {
            Regime::StrictlyConvex
        } else {
            Regime::SelfIntersecting
        }
    }
}

impl TryFrom<f64> for WidthParam {
    type Error = Error;

    fn try_from(a: f64) -> Result<Self> {
        WidthParam::new(a)
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Regime::Circle => "circle",
            Regime::StronglyConvex => "strongly convex",
            Regime::StrictlyConvex => "strictly convex",
            Regime::SelfIntersecting => "self-intersecting",
        };
        f.write_str(s)
    }
}

/// Area, perimeter and isoperimetric ratio of the body bounded by γₐ.
///
/// For [`Regime::SelfIntersecting`] the area is the algebraic value of
/// `½∫(p² − p′²)`, not the area of any region.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShapeMetrics {
    pub area: f64,
    pub perimeter: f64,
    pub iso_ratio: f64,
    pub convexity: Regime,
}

#[inline]
fn reduce(t: f64) -> f64 {
    t.rem_euclid(TAU)
}

/// `p(t) = 1 + a cos 3t`.
pub fn support_function(a: WidthParam, t: f64) -> f64 {
    1.0 + a.0 * (3.0 * reduce(t)).cos()
}

/// `p′(t) = −3a sin 3t`.
pub fn support_derivative(a: WidthParam, t: f64) -> f64 {
    -3.0 * a.0 * (3.0 * reduce(t)).sin()
}

/// Explicit parametrization γₐ(t) = e^{it}(1 + a cos 3t − 3ia sin 3t).
pub fn gamma_point(a: WidthParam, t: f64) -> Complex64 {
    let t = reduce(t);
    let (s3, c3) = (3.0 * t).sin_cos();
    Complex64::cis(t) * Complex64::new(1.0 + a.0 * c3, -3.0 * a.0 * s3)
}

/// Support-function parametrization `p(t)u(t) + p′(t)u′(t)` with `u(t) = e^{it}`.
pub fn support_form_point(a: WidthParam, t: f64) -> Complex64 {
    let u = Complex64::cis(reduce(t));
    let du = Complex64::i() * u;
    u * support_function(a, t) + du * support_derivative(a, t)
}

/// Radius of curvature `ρ = p + p″ = 1 − 8a cos 3t`.
pub fn curvature_radius(a: WidthParam, t: f64) -> f64 {
    1.0 - 8.0 * a.0 * (3.0 * reduce(t)).cos()
}

pub fn shape_metrics(a: WidthParam) -> ShapeMetrics {
    let a2 = a.0 * a.0;
    let area = PI * (1.0 - 4.0 * a2);
    let perimeter = TAU;
    ShapeMetrics {
        area,
        perimeter,
        iso_ratio: 4.0 * PI / (1.0 - 4.0 * a2),
        convexity: a.regime(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(a: f64) -> WidthParam {
        WidthParam::new(a).unwrap()
    }

    #[test]
    fn construction_bounds() {
        assert!(WidthParam::new(0.0).is_ok());
        assert!(WidthParam::new(0.333).is_ok());
        assert_eq!(WidthParam::new(1.0 / 3.0), Err(Error::InvalidWidth(1.0 / 3.0)));
        assert!(WidthParam::new(-1e-9).is_err());
        assert!(WidthParam::new(f64::NAN).is_err());
    }

    #[test]
    fn regimes() {
        assert_eq!(w(0.0).regime(), Regime::Circle);
        assert_eq!(w(1.0 / 24.0).regime(), Regime::StronglyConvex);
        assert_eq!(w(0.125).regime(), Regime::StrictlyConvex);
        assert_eq!(w(0.2).regime(), Regime::SelfIntersecting);
    }

    #[test]
    fn support_function_values() {
        assert_eq!(support_function(w(0.0), 1.7), 1.0);
        assert_close!(support_function(w(0.125), 0.0), 9.0 / 8.0, 1e-15);
        let t = PI / 3.0;
        assert_close!(
            support_function(w(0.125), t) + support_function(w(0.125), t + PI),
            2.0,
            1e-15
        );
    }

    #[test]
    fn gamma_values() {
        let a = w(0.2);
        let g = gamma_point(a, 0.0);
        assert_close!(g.re, 1.2, 1e-15);
        assert_close!(g.im, 0.0, 1e-15);
        let c = gamma_point(w(0.0), 0.8);
        assert_close!((c - Complex64::cis(0.8)).norm(), 0.0, 1e-15);
        let g = gamma_point(w(0.125), PI);
        assert_close!(g.re, -7.0 / 8.0, 1e-15);
        assert_close!(g.im, 0.0, 1e-15);
    }

    #[test]
    fn angles_reduced() {
        let a = w(0.1);
        let t = 0.37;
        assert_close!((gamma_point(a, t) - gamma_point(a, t + 10.0 * TAU)).norm(), 0.0, 1e-12);
        assert_close!((gamma_point(a, t) - gamma_point(a, t - 3.0 * TAU)).norm(), 0.0, 1e-12);
    }

    #[test]
    fn parametrizations_agree() {
        for a in [0.0, 1.0 / 24.0, 0.125, 0.2] {
            let a = w(a);
            for j in 0..4096 {
                let t = TAU * j as f64 / 4096.0;
                let d = (gamma_point(a, t) - support_form_point(a, t)).norm();
                assert!(d <= 1e-12, "a={:?} t={} d={}", a, t, d);
            }
        }
    }

    #[test]
    fn curvature_values() {
        assert_close!(curvature_radius(w(0.125), 0.0), 0.0, 1e-15);
        assert_close!(curvature_radius(w(0.125), TAU / 3.0), 0.0, 1e-14);
        assert_eq!(curvature_radius(w(0.0), 2.1), 1.0);
        assert_close!(curvature_radius(w(1.0 / 24.0), 0.0), 2.0 / 3.0, 1e-15);
    }

    #[test]
    fn metrics_examples() {
        let m = shape_metrics(w(0.0));
        assert_close!(m.area, PI, 1e-15);
        assert_close!(m.perimeter, TAU, 1e-15);
        assert_close!(m.iso_ratio, 4.0 * PI, 1e-15);
        assert_eq!(m.convexity, Regime::Circle);

        let m = shape_metrics(w(0.125));
        assert_close!(m.iso_ratio, 64.0 * PI / 15.0, 1e-12);
        assert_close!(m.iso_ratio, m.perimeter * m.perimeter / m.area, 1e-12);
        assert_eq!(m.convexity, Regime::StrictlyConvex);

        assert_eq!(shape_metrics(w(0.2)).convexity, Regime::SelfIntersecting);
    }

    #[test]
    fn iso_ratio_increasing_on_convex_range() {
        let mut prev = shape_metrics(w(0.0)).iso_ratio;
        for i in 1..=100 {
            let r = shape_metrics(w(0.125 * i as f64 / 100.0)).iso_ratio;
            assert!(r > prev);
            prev = r;
        }
    }
}
