//! Parameterized paths in the complex plane.
//!
//! A [`ComplexPath`] couples an exact geometry (piecewise-linear, or a
//! circular arc given by center/radius/angular range) with a realized
//! sample grid over the parameter interval `[0, 1]`. Arcs are evaluated
//! analytically at any parameter value, so refining a circular contour
//! never polygonalizes it.

use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

use std::f64::consts::TAU;

#[derive(Debug, Error, PartialEq)]
pub enum PathError {
    #[error("path needs at least two samples")]
    TooFewSamples,
    #[error("sample parameters must start at 0, end at 1, and increase strictly")]
    BadParameterization,
    #[error("path marked closed but endpoints differ by {0:.3e}")]
    NotClosed(f64),
}

#[derive(Debug, Clone, Serialize)]
enum Geometry {
    /// Linear interpolation between consecutive knots.
    Polyline {
        #[serde(skip)]
        knots: Vec<(f64, Complex64)>,
    },
    /// `z(t) = center + radius * exp(i * (theta0 + t * (theta1 - theta0)))`.
    Arc {
        #[serde(serialize_with = "crate::cjson::serialize")]
        center: Complex64,
        radius: f64,
        theta0: f64,
        theta1: f64,
    },
}

/// A path `t in [0, 1] -> C` with an explicit sample grid.
#[derive(Debug, Clone, Serialize)]
pub struct ComplexPath {
    geometry: Geometry,
    #[serde(serialize_with = "serialize_samples")]
    samples: Vec<(f64, Complex64)>,
    closed: bool,
}

fn serialize_samples<S: serde::Serializer>(
    v: &[(f64, Complex64)],
    s: S,
) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|(t, z)| (*t, [z.re, z.im])))
}

const CLOSURE_TOL: f64 = 1e-12;

impl ComplexPath {
    /// Piecewise-linear path through the given `(t, z)` knots.
    pub fn polyline(knots: Vec<(f64, Complex64)>) -> Result<Self, PathError> {
        check_grid(&knots)?;
        let closed = (knots[0].1 - knots[knots.len() - 1].1).norm()
            <= CLOSURE_TOL * (1.0 + knots[0].1.norm());
        Ok(Self {
            samples: knots.clone(),
            geometry: Geometry::Polyline { knots },
            closed,
        })
    }

    /// Polyline through equally spaced parameters.
    pub fn from_points(points: &[Complex64]) -> Result<Self, PathError> {
        if points.len() < 2 {
            return Err(PathError::TooFewSamples);
        }
        let n = points.len() - 1;
        Self::polyline(
            points
                .iter()
                .enumerate()
                .map(|(k, &z)| (k as f64 / n as f64, z))
                .collect(),
        )
    }

    /// Straight segment from `a` to `b`.
    pub fn segment(a: Complex64, b: Complex64, samples: usize) -> Self {
        let n = samples.max(2);
        let knots = (0..n)
            .map(|k| {
                let t = k as f64 / (n - 1) as f64;
                (t, a + (b - a) * t)
            })
            .collect();
        Self::polyline(knots).expect("segment grid is valid")
    }

    /// Full counterclockwise circle starting at `center + radius`.
    pub fn circle(center: Complex64, radius: f64, samples: usize) -> Self {
        Self::arc(center, radius, 0.0, TAU, samples)
    }

    /// Circular arc; the angular range may be negative (clockwise) or
    /// exceed a full turn.
    pub fn arc(center: Complex64, radius: f64, theta0: f64, theta1: f64, samples: usize) -> Self {
        let n = samples.max(2);
        let geometry = Geometry::Arc {
            center,
            radius,
            theta0,
            theta1,
        };
        let samples = (0..n)
            .map(|k| {
                let t = k as f64 / (n - 1) as f64;
                (t, eval_geometry(&geometry, t))
            })
            .collect();
        let closed = ((theta1 - theta0).abs() - TAU).abs() <= 1e-12;
        Self {
            geometry,
            samples,
            closed,
        }
    }

    pub fn at(&self, t: f64) -> Complex64 {
        eval_geometry(&self.geometry, t)
    }

    /// `dz/dt` at parameter `t` (one-sided at polyline knots).
    pub fn velocity(&self, t: f64) -> Complex64 {
        match &self.geometry {
            Geometry::Polyline { knots } => {
                let (i, j) = bracket(knots, t);
                let (t0, z0) = knots[i];
                let (t1, z1) = knots[j];
                (z1 - z0) / (t1 - t0)
            }
            Geometry::Arc {
                radius,
                theta0,
                theta1,
                ..
            } => {
                let span = theta1 - theta0;
                let theta = theta0 + t * span;
                Complex64::new(0.0, span * radius) * Complex64::from_polar(1.0, theta)
            }
        }
    }

    pub fn samples(&self) -> &[(f64, Complex64)] {
        &self.samples
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn start(&self) -> Complex64 {
        self.samples[0].1
    }

    pub fn end(&self) -> Complex64 {
        self.samples[self.samples.len() - 1].1
    }

    /// The same geometric image traversed backwards.
    pub fn reversed(&self) -> Self {
        let geometry = match &self.geometry {
            Geometry::Polyline { knots } => Geometry::Polyline {
                knots: knots
                    .iter()
                    .rev()
                    .map(|&(t, z)| (1.0 - t, z))
                    .collect(),
            },
            Geometry::Arc {
                center,
                radius,
                theta0,
                theta1,
            } => Geometry::Arc {
                center: *center,
                radius: *radius,
                theta0: *theta1,
                theta1: *theta0,
            },
        };
        let samples = self
            .samples
            .iter()
            .rev()
            .map(|&(t, z)| (1.0 - t, z))
            .collect();
        Self {
            geometry,
            samples,
            closed: self.closed,
        }
    }

    /// Insert `t` into the sample grid (no-op if already present).
    pub fn refine_at(&mut self, t: f64) {
        match self
            .samples
            .binary_search_by(|(s, _)| s.partial_cmp(&t).unwrap())
        {
            Ok(_) => {}
            Err(pos) => self.samples.insert(pos, (t, self.at(t))),
        }
    }

    /// Validate the sample-grid invariants, including closure when flagged.
    pub fn validate(&self) -> Result<(), PathError> {
        check_grid(&self.samples)?;
        if self.closed {
            let gap = (self.start() - self.end()).norm();
            if gap > CLOSURE_TOL * (1.0 + self.start().norm()) {
                return Err(PathError::NotClosed(gap));
            }
        }
        Ok(())
    }
}

fn check_grid(samples: &[(f64, Complex64)]) -> Result<(), PathError> {
    if samples.len() < 2 {
        return Err(PathError::TooFewSamples);
    }
    if samples[0].0 != 0.0 || samples[samples.len() - 1].0 != 1.0 {
        return Err(PathError::BadParameterization);
    }
    if samples.windows(2).any(|w| w[0].0 >= w[1].0) {
        return Err(PathError::BadParameterization);
    }
    Ok(())
}

fn bracket(knots: &[(f64, Complex64)], t: f64) -> (usize, usize) {
    debug_assert!(knots.len() >= 2);
    let n = knots.len();
    let mut lo = 0usize;
    let mut hi = n - 1;
    while hi - lo > 1 {
        let mid = (lo + hi) / 2;
        if knots[mid].0 <= t {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

fn eval_geometry(g: &Geometry, t: f64) -> Complex64 {
    match g {
        Geometry::Polyline { knots } => {
            let (i, j) = bracket(knots, t);
            let (t0, z0) = knots[i];
            let (t1, z1) = knots[j];
            z0 + (z1 - z0) * ((t - t0) / (t1 - t0))
        }
        Geometry::Arc {
            center,
            radius,
            theta0,
            theta1,
        } => center + Complex64::from_polar(*radius, theta0 + t * (theta1 - theta0)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn circle_is_exact_at_refined_parameters() {
        let p = ComplexPath::circle(c(0.0, 0.0), 2.0, 5);
        for k in 0..100 {
            let t = k as f64 / 99.0;
            assert!((p.at(t).norm() - 2.0).abs() < 1e-14);
        }
        assert!(p.is_closed());
        p.validate().unwrap();
    }

    #[test]
    fn polyline_interpolates_and_rejects_bad_grids() {
        let p = ComplexPath::from_points(&[c(0.0, 0.0), c(1.0, 0.0), c(1.0, 1.0)]).unwrap();
        assert!((p.at(0.25) - c(0.5, 0.0)).norm() < 1e-15);
        assert!((p.at(0.75) - c(1.0, 0.5)).norm() < 1e-15);
        assert!(!p.is_closed());

        assert_eq!(
            ComplexPath::polyline(vec![(0.0, c(0.0, 0.0))]).unwrap_err(),
            PathError::TooFewSamples
        );
        assert_eq!(
            ComplexPath::polyline(vec![(0.1, c(0.0, 0.0)), (1.0, c(1.0, 0.0))]).unwrap_err(),
            PathError::BadParameterization
        );
        assert_eq!(
            ComplexPath::polyline(vec![
                (0.0, c(0.0, 0.0)),
                (0.5, c(1.0, 0.0)),
                (0.5, c(2.0, 0.0)),
                (1.0, c(3.0, 0.0)),
            ])
            .unwrap_err(),
            PathError::BadParameterization
        );
    }

    #[test]
    fn reversal_flips_endpoints_and_velocity() {
        let p = ComplexPath::arc(c(1.0, 1.0), 0.5, 0.3, 2.0, 9);
        let q = p.reversed();
        assert!((p.start() - q.end()).norm() < 1e-15);
        assert!((p.end() - q.start()).norm() < 1e-15);
        let t = 0.37;
        assert!((p.velocity(t) + q.velocity(1.0 - t)).norm() < 1e-12);
    }

    #[test]
    fn refinement_keeps_grid_sorted() {
        let mut p = ComplexPath::circle(c(0.0, 0.0), 1.0, 3);
        p.refine_at(0.1);
        p.refine_at(0.9);
        p.refine_at(0.1);
        p.validate().unwrap();
        assert_eq!(p.samples().len(), 5);
    }
}
