//! Small dense-vector helpers.

pub fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// `y += alpha * x`
pub fn axpy(y: &mut [f64], alpha: f64, x: &[f64]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += alpha * xi;
    }
}

pub fn scale(a: &[f64], s: f64) -> Vec<f64> {
    a.iter().map(|x| x * s).collect()
}

pub fn norm(a: &[f64]) -> f64 {
    a.iter().map(|x| x * x).sum::<f64>().sqrt()
}

pub fn squared_distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

pub fn distance(a: &[f64], b: &[f64]) -> f64 {
    squared_distance(a, b).sqrt()
}

pub fn chebyshev_distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

/// Arithmetic mean of a non-empty set of equal-length points.
pub fn mean_position<P: AsRef<[f64]>>(points: &[P]) -> Vec<f64> {
    let dims = points[0].as_ref().len();
    let mut m = vec![0.0; dims];
    for p in points {
        axpy(&mut m, 1.0, p.as_ref());
    }
    let n = points.len() as f64;
    m.iter_mut().for_each(|v| *v /= n);
    m
}

/// Root-mean-square distance of the points from their mean. Used as the
/// population's current length scale by operators that adapt step sizes to
/// how spread out the search is.
pub fn position_spread<P: AsRef<[f64]>>(points: &[P]) -> f64 {
    if points.len() < 2 {
        return 0.0;
    }
    let m = mean_position(points);
    let ss: f64 = points.iter().map(|p| squared_distance(p.as_ref(), &m)).sum();
    (ss / points.len() as f64).sqrt()
}

/// Per-coordinate standard deviation of the points.
pub fn coordinate_spread<P: AsRef<[f64]>>(points: &[P]) -> Vec<f64> {
    let m = mean_position(points);
    let n = points.len() as f64;
    (0..m.len())
        .map(|d| {
            let var = points.iter().map(|p| (p.as_ref()[d] - m[d]).powi(2)).sum::<f64>() / n;
            var.sqrt()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mean_and_spread() {
        let pts = vec![vec![0.0, 0.0], vec![2.0, 0.0]];
        assert_eq!(mean_position(&pts), vec![1.0, 0.0]);
        assert!((position_spread(&pts) - 1.0).abs() < 1e-15);
        assert_eq!(coordinate_spread(&pts), vec![1.0, 0.0]);
        assert_eq!(position_spread(&pts[..1]), 0.0);
    }

    #[test]
    fn distances() {
        assert_eq!(squared_distance(&[0.0, 0.0], &[3.0, 4.0]), 25.0);
        assert_eq!(distance(&[0.0, 0.0], &[3.0, 4.0]), 5.0);
        assert_eq!(chebyshev_distance(&[0.0, 0.0], &[3.0, -4.0]), 4.0);
    }
}
