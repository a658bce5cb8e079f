use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

/// The single random stream a run draws from.
///
/// Backed by ChaCha8, whose output for a given seed is fixed across platforms.
/// Draw order inside a run is: population initialization, then each iteration
/// in member order.
#[derive(Debug, Clone)]
pub struct RngStream {
    seed: u64,
    inner: ChaCha8Rng,
}

impl RngStream {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            inner: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Uniform draw on `[0, 1)`.
    pub fn uniform(&mut self) -> f64 {
        self.inner.random::<f64>()
    }

    /// Uniform draw on `[lo, hi)`.
    pub fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.uniform()
    }

    /// Uniform index in `0..n`. `n` must be positive.
    pub fn index(&mut self, n: usize) -> usize {
        debug_assert!(n > 0);
        self.inner.random_range(0..n)
    }

    /// Uniform index in `0..n` other than `exclude` (requires `n >= 2`).
    pub fn index_except(&mut self, n: usize, exclude: usize) -> usize {
        debug_assert!(n >= 2);
        let j = self.index(n - 1);
        if j >= exclude {
            j + 1
        } else {
            j
        }
    }

    pub fn bernoulli(&mut self, p: f64) -> bool {
        self.uniform() < p
    }

    pub fn normal(&mut self) -> f64 {
        StandardNormal.sample(&mut self.inner)
    }

    pub fn normal_vec(&mut self, dims: usize) -> Vec<f64> {
        (0..dims).map(|_| self.normal()).collect()
    }

    /// Direction drawn uniformly from the unit sphere.
    pub fn unit_vector(&mut self, dims: usize) -> Vec<f64> {
        loop {
            let v = self.normal_vec(dims);
            let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm > 1e-300 {
                return v.into_iter().map(|x| x / norm).collect();
            }
        }
    }
}

impl RngCore for RngStream {
    fn next_u32(&mut self) -> u32 {
        self.inner.next_u32()
    }

    fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    fn fill_bytes(&mut self, dst: &mut [u8]) {
        self.inner.fill_bytes(dst)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_sequence() {
        let mut a = RngStream::new(7);
        let mut b = RngStream::new(7);
        for _ in 0..100 {
            assert_eq!(a.uniform().to_bits(), b.uniform().to_bits());
            assert_eq!(a.normal().to_bits(), b.normal().to_bits());
            assert_eq!(a.index(13), b.index(13));
        }
    }

    #[test]
    fn different_seeds_diverge() {
        let mut a = RngStream::new(1);
        let mut b = RngStream::new(2);
        let xs: Vec<f64> = (0..8).map(|_| a.uniform()).collect();
        let ys: Vec<f64> = (0..8).map(|_| b.uniform()).collect();
        assert_ne!(xs, ys);
    }

    #[test]
    fn index_except_never_returns_excluded() {
        let mut rng = RngStream::new(3);
        for _ in 0..1000 {
            let j = rng.index_except(4, 2);
            assert!(j < 4 && j != 2);
        }
    }

    #[test]
    fn unit_vector_has_unit_norm() {
        let mut rng = RngStream::new(5);
        for d in 1..6 {
            let v = rng.unit_vector(d);
            let n: f64 = v.iter().map(|x| x * x).sum();
            assert!((n - 1.0).abs() < 1e-12);
        }
    }
}
