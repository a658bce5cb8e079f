//! The shared operator pool every algorithm in the roster is assembled from.
//!
//! Operators are pure apart from the [`RngStream`](crate::engine::RngStream)
//! they are handed. All of them follow the minimization convention: a lower
//! objective value is better, and wherever a positive "fitness" weight is
//! needed it comes from [`fitness_weights`].

mod accept;
mod kmeans;
mod levy;
mod moves;
mod sample;
mod schedule;
mod select;
pub mod vector;

pub use accept::{greedy_accept, probabilistic_accept};
pub use kmeans::{kmeans, kmeans_with, within_cluster_ss, Cluster, KMeansOptions, KMeansResult};
pub use levy::{levy_step, mantegna_sigma, random_walk, random_walk_within};
pub use moves::{
    crowding_term, inverse_square_weights, move_toward, recombine, scaled_move_toward, spiral_move,
    velocity_update, weighted_centroid, weighted_mean, CrowdingKernel, INVERSE_SQUARE_EPS,
};
pub use sample::{
    cone_direction, gaussian_sample, hypercube_sample, hypersphere_sample, project_to_ball, restart,
};
pub use schedule::{schedule_value, DecaySchedule, ScheduleKind};
pub use select::{
    fitness_weights, proportional_select, roulette, truncation_select, weighted_sample_distinct,
};
