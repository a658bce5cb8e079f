use serde::{Deserialize, Serialize};

use crate::error::{check_len, Error, Result};

/// Axis-aligned box `[lower, upper]` of real decision variables.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchSpace {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl SearchSpace {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        if lower.is_empty() {
            return Err(Error::InvalidSpace("at least one dimension is required".into()));
        }
        if lower.len() != upper.len() {
            return Err(Error::InvalidSpace(format!(
                "bound lengths differ ({} vs {})",
                lower.len(),
                upper.len()
            )));
        }
        for (i, (lo, hi)) in lower.iter().zip(&upper).enumerate() {
            if !(lo.is_finite() && hi.is_finite()) {
                return Err(Error::InvalidSpace(format!("non-finite bound in dimension {i}")));
            }
            if lo >= hi {
                return Err(Error::InvalidSpace(format!(
                    "lower bound {lo} is not below upper bound {hi} in dimension {i}"
                )));
            }
        }
        Ok(Self { lower, upper })
    }

    /// The hypercube `[lower, upper]^dims`.
    pub fn cube(dims: usize, lower: f64, upper: f64) -> Result<Self> {
        Self::new(vec![lower; dims], vec![upper; dims])
    }

    pub fn dims(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    /// Per-coordinate widths `upper - lower`.
    pub fn widths(&self) -> Vec<f64> {
        self.lower.iter().zip(&self.upper).map(|(l, u)| u - l).collect()
    }

    /// Mean coordinate width, the length scale used for relative step sizes.
    pub fn mean_width(&self) -> f64 {
        self.widths().iter().sum::<f64>() / self.dims() as f64
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dims()
            && x.iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(v, (l, u))| *v >= *l && *v <= *u)
    }

    /// Projects `x` onto the box in place. NaN coordinates go to the lower bound.
    pub fn clamp_in_place(&self, x: &mut [f64]) {
        for (v, (l, u)) in x.iter_mut().zip(self.lower.iter().zip(&self.upper)) {
            *v = if v.is_nan() { *l } else { v.clamp(*l, *u) };
        }
    }

    /// Maps `x` into unit-box coordinates.
    pub fn normalize(&self, x: &[f64]) -> Vec<f64> {
        x.iter()
            .zip(self.lower.iter().zip(&self.upper))
            .map(|(v, (l, u))| (v - l) / (u - l))
            .collect()
    }
}

/// Coordinate-wise projection of `position` onto `space`.
pub fn clamp(position: &[f64], space: &SearchSpace) -> Result<Vec<f64>> {
    check_len("clamp", space.dims(), position.len())?;
    let mut out = position.to_vec();
    space.clamp_in_place(&mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> SearchSpace {
        SearchSpace::cube(2, -5.0, 5.0).unwrap()
    }

    #[test]
    fn degenerate_width_is_rejected() {
        assert!(matches!(
            SearchSpace::new(vec![0.0, 0.0], vec![0.0, 0.0]),
            Err(Error::InvalidSpace(_))
        ));
        assert!(SearchSpace::new(vec![1.0], vec![0.0]).is_err());
        assert!(SearchSpace::new(vec![], vec![]).is_err());
        assert!(SearchSpace::new(vec![0.0], vec![1.0, 2.0]).is_err());
    }

    #[test]
    fn clamp_projects_outside_points() {
        assert_eq!(clamp(&[7.0, -7.0], &square()).unwrap(), vec![5.0, -5.0]);
    }

    #[test]
    fn clamp_keeps_interior_and_boundary_points() {
        assert_eq!(clamp(&[1.0, 2.0], &square()).unwrap(), vec![1.0, 2.0]);
        assert_eq!(clamp(&[5.0, 5.0], &square()).unwrap(), vec![5.0, 5.0]);
    }

    #[test]
    fn clamp_rejects_wrong_length() {
        assert!(matches!(clamp(&[1.0], &square()), Err(Error::InvalidArgument(_))));
    }
}
