use metaparts::components::vector::distance;
use metaparts::components::{
    fitness_weights, hypersphere_sample, inverse_square_weights, move_toward, project_to_ball, spiral_move,
};
use metaparts::engine::{clamp, RngStream, SearchSpace};
use proptest::prelude::*;

fn point(dims: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-100.0..100.0f64, dims)
}

proptest! {
    #[test]
    fn clamp_lands_inside_and_is_idempotent(x in point(4), lo in -10.0..0.0f64, w in 0.1..20.0f64) {
        let space = SearchSpace::cube(4, lo, lo + w).unwrap();
        let y = clamp(&x, &space).unwrap();
        prop_assert!(space.contains(&y));
        prop_assert_eq!(clamp(&y, &space).unwrap(), y.clone());
        for (a, b) in x.iter().zip(&y) {
            if (lo..=lo + w).contains(a) {
                prop_assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn fitness_weights_are_positive_and_order_reversing(v in prop::collection::vec(-1e6..1e6f64, 1..20)) {
        let w = fitness_weights(&v);
        prop_assert_eq!(w.len(), v.len());
        for i in 0..v.len() {
            prop_assert!(w[i] > 0.0);
            for j in 0..v.len() {
                if v[i] < v[j] {
                    prop_assert!(w[i] > w[j]);
                }
            }
        }
    }

    #[test]
    fn inverse_square_weights_fall_with_distance(
        x in point(3),
        dir in point(3),
        near in 0.1..5.0f64,
        extra in 0.1..5.0f64,
    ) {
        let n = dir.iter().map(|d| d * d).sum::<f64>().sqrt();
        prop_assume!(n > 1e-6);
        let at = |r: f64| -> Vec<f64> { x.iter().zip(&dir).map(|(a, d)| a + r * d / n).collect() };
        // Equal values, so only distance differs.
        let w = inverse_square_weights(&x, &[at(near), at(near + extra)], &[1.0, 1.0]).unwrap();
        prop_assert!(w[0] > w[1]);
        prop_assert!(w.iter().all(|v| *v > 0.0 && v.is_finite()));
    }

    #[test]
    fn move_toward_shrinks_distance(x in point(3), t in point(3), step in 0.0..1.0f64) {
        let y = move_toward(&x, &t, step, 0.0, &mut RngStream::new(0)).unwrap();
        prop_assert!(distance(&y, &t) <= distance(&x, &t) * (1.0 - step) + 1e-9);
    }

    #[test]
    fn spiral_stays_within_starting_radius(x in point(4), t in point(4), s in 0.0..1.0f64, turns in 0.0..3.0f64) {
        let y = spiral_move(&x, &t, turns, s).unwrap();
        prop_assert!(distance(&y, &t) <= distance(&x, &t) + 1e-9);
    }

    #[test]
    fn hypersphere_draws_and_projection_stay_in_ball(c in point(5), r in 0.0..10.0f64, seed in any::<u64>(), y in point(5)) {
        let mut rng = RngStream::new(seed);
        let p = hypersphere_sample(&c, r, &mut rng).unwrap();
        prop_assert!(distance(&p, &c) <= r * (1.0 + 1e-12) + 1e-12);
        let mut q = y.clone();
        project_to_ball(&mut q, &c, r);
        prop_assert!(distance(&q, &c) <= r * (1.0 + 1e-12) + 1e-12);
        if distance(&y, &c) <= r {
            prop_assert_eq!(q, y);
        }
    }
}
