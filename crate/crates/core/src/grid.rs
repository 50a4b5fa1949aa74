//! Probability grids for sampled curves.

use crate::error::{Error, Result};

/// A strictly increasing set of error probabilities inside `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    points: Vec<f64>,
}

impl Grid {
    pub fn from_points(points: Vec<f64>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::Domain("grid has no points".into()));
        }
        if let Some(bad) = points.iter().find(|p| !(0.0..=1.0).contains(*p)) {
            return Err(Error::Domain(format!("grid point {bad} is outside [0, 1]")));
        }
        if let Some(w) = points.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::Domain(format!(
                "grid is not strictly increasing ({} then {})",
                w[0], w[1]
            )));
        }
        Ok(Self { points })
    }

    /// `count` evenly spaced points from `min` to `max` inclusive. A single
    /// point grid is `[min]`.
    pub fn linear(min: f64, max: f64, count: usize) -> Result<Self> {
        Self::spaced(min, max, count, |a, b, f| a + (b - a) * f)
    }

    /// `count` logarithmically spaced points from `min > 0` to `max` inclusive.
    pub fn log(min: f64, max: f64, count: usize) -> Result<Self> {
        if min.is_nan() || min <= 0.0 {
            return Err(Error::Domain(format!(
                "log grid needs p-min > 0, got {min}"
            )));
        }
        Self::spaced(min, max, count, |a, b, f| {
            (a.ln() + (b.ln() - a.ln()) * f).exp()
        })
    }

    fn spaced(min: f64, max: f64, count: usize, at: impl Fn(f64, f64, f64) -> f64) -> Result<Self> {
        if count == 0 {
            return Err(Error::Domain("grid needs at least one point".into()));
        }
        if count == 1 {
            return Self::from_points(vec![min]);
        }
        let last = count - 1;
        let points = (0..count)
            .map(|i| match i {
                0 => min,
                i if i == last => max,
                i => at(min, max, i as f64 / last as f64),
            })
            .collect();
        Self::from_points(points)
    }

    /// Linear grid of 1001 points on `[0, 0.1]`.
    pub fn figure_default() -> Self {
        Self::linear(0.0, 0.1, 1001).expect("valid default grid")
    }

    /// Log grid of 500 points on `[1e-5, 0.3]`.
    pub fn dominance_default() -> Self {
        Self::log(1e-5, 0.3, 500).expect("valid default grid")
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}
