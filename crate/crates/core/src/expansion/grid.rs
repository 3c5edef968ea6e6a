use crate::error::{domain, Error, Result};
use serde::{Deserialize, Serialize};

/// Samples of a function on a strictly increasing positive grid, tagged with
/// the exponent `γ` of the measure `x^γ dx` it is measured against.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridFunction {
    pub grid: Vec<f64>,
    pub values: Vec<f64>,
    pub measure_exponent: f64,
}

impl GridFunction {
    pub fn new(grid: Vec<f64>, values: Vec<f64>, measure_exponent: f64) -> Result<Self> {
        if grid.len() != values.len() || grid.is_empty() {
            return Err(domain("grid and values must be nonempty and of equal length"));
        }
        if !(grid[0] > 0.0) || grid.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(domain("grid must be positive and strictly increasing"));
        }
        if grid.iter().chain(&values).any(|v| !v.is_finite()) {
            return Err(domain("grid function samples must be finite"));
        }
        Ok(Self { grid, values, measure_exponent })
    }

    /// `points` geometrically spaced nodes covering `[x_min, x_max]`.
    pub fn geometric_grid(x_min: f64, x_max: f64, points: usize) -> Result<Vec<f64>> {
        if !(x_min > 0.0 && x_max > x_min && x_max.is_finite()) || points < 2 {
            return Err(domain("geometric grid needs 0 < x_min < x_max and at least two points"));
        }
        let r = (x_max / x_min).ln();
        Ok((0..points)
            .map(|i| {
                if i == points - 1 {
                    x_max
                } else {
                    x_min * (r * i as f64 / (points - 1) as f64).exp()
                }
            })
            .collect())
    }

    /// Samples `f` on `grid`.
    pub fn from_fn(grid: Vec<f64>, measure_exponent: f64, f: impl Fn(f64) -> f64) -> Result<Self> {
        let values = grid.iter().map(|&x| f(x)).collect();
        Self::new(grid, values, measure_exponent)
    }

    pub fn x_min(&self) -> f64 {
        self.grid[0]
    }

    pub fn x_max(&self) -> f64 {
        *self.grid.last().unwrap()
    }

    /// Linear interpolation; points outside the grid are an error.
    pub fn interpolate(&self, x: f64) -> Result<f64> {
        let (lo, hi) = (self.x_min(), self.x_max());
        if !(x >= lo && x <= hi) {
            return Err(Error::Extrapolation { x, lo, hi });
        }
        let n = self.grid.len();
        if n == 1 {
            return Ok(self.values[0]);
        }
        let i = self.grid.partition_point(|&g| g <= x).clamp(1, n - 1);
        let (x0, x1) = (self.grid[i - 1], self.grid[i]);
        let u = (x - x0) / (x1 - x0);
        Ok(self.values[i - 1] * (1.0 - u) + self.values[i] * u)
    }

    /// Interpolation extended by zero outside the grid.
    pub fn interpolate_or_zero(&self, x: f64) -> f64 {
        self.interpolate(x).unwrap_or(0.0)
    }
}
