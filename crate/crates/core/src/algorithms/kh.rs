use super::{coord_scale, AlgorithmParams, AlgorithmState, ParamSpec, Profile, StateLayout};
use crate::components::vector::{add, axpy, distance, sub};
use crate::components::{gaussian_sample, greedy_accept, recombine, weighted_centroid, DecaySchedule};
use crate::engine::{Budget, RngStream, StepError, StepOutcome};
use crate::error::Result;

pub(super) const PROFILE: Profile = Profile {
    summary: "Krill herd: blended pulls toward the best, own best, weighted centroid and signed neighbours, plus noise and a crossover pass.",
    population: 50,
    min_population: 2,
    population_doc: "common baseline size",
    layout: StateLayout {
        historical_bests: true,
        ..StateLayout::NONE
    },
    params: &[
        ParamSpec::real("best_start", 0.3, 0.0, 4.0, "pull toward the population best at the start"),
        ParamSpec::real("best_end", 0.9, 0.0, 4.0, "pull toward the population best at the end"),
        ParamSpec::real("own_weight", 0.3, 0.0, 4.0, "pull toward the member's own best"),
        ParamSpec::real("food_weight", 0.3, 0.0, 4.0, "pull toward the value-weighted centroid"),
        ParamSpec::real("neighbour_weight", 0.2, 0.0, 4.0, "weight of neighbour attraction and repulsion"),
        ParamSpec::real("sensing", 0.2, 0.0, 10.0, "neighbour radius as a fraction of the member's mean distance to others"),
        ParamSpec::real("noise_start", 0.5, 0.0, 10.0, "noise deviation at the start, in population spreads"),
        ParamSpec::real("noise_end", 0.0, 0.0, 10.0, "noise deviation at the end"),
        ParamSpec::real("crossover_fraction", 0.2, 0.0, 1.0, "share of members given a crossover-and-jitter trial"),
    ],
    check: None,
};

pub(super) fn init(p: &AlgorithmParams, budget: &Budget<'_>, rng: &mut RngStream) -> Result<AlgorithmState> {
    AlgorithmState::standard(&PROFILE.layout, p.population_size, budget, rng)
}

pub(super) fn step(
    p: &AlgorithmParams,
    s: &mut AlgorithmState,
    budget: &Budget<'_>,
    rng: &mut RngStream,
) -> Result<StepOutcome, StepError> {
    let n = s.population.len();
    let tau = budget.progress(&s.population);
    let snapshot = s.population.members.clone();
    let hist = s
        .historical_bests
        .clone()
        .expect("layout declares historical bests");
    let best = snapshot[s.population.best_index()].position.clone();
    let centroid = weighted_centroid(&snapshot)?;
    let values = s.population.values();
    let range = values.iter().copied().fold(f64::NEG_INFINITY, f64::max)
        - values.iter().copied().fold(f64::INFINITY, f64::min);
    let scale = coord_scale(&s.population, budget);
    let w_best = DecaySchedule::linear(p.get("best_start"), p.get("best_end")).at(tau);
    let noise = DecaySchedule::linear(p.get("noise_start"), p.get("noise_end")).at(tau) * scale;

    for i in 0..n {
        let x = &snapshot[i].position;
        let mut dx = vec![0.0; x.len()];
        axpy(&mut dx, w_best * rng.uniform(), &sub(&best, x));
        axpy(
            &mut dx,
            p.get("own_weight") * rng.uniform(),
            &sub(&hist[i].position, x),
        );
        axpy(&mut dx, p.get("food_weight") * rng.uniform(), &sub(&centroid, x));

        let dists: Vec<f64> = snapshot.iter().map(|c| distance(x, &c.position)).collect();
        let radius = p.get("sensing") * dists.iter().sum::<f64>() / (n - 1) as f64;
        let near: Vec<usize> = (0..n).filter(|&j| j != i && dists[j] < radius).collect();
        if !near.is_empty() && range > 0.0 {
            let mut acc = vec![0.0; x.len()];
            for &j in &near {
                // Better neighbours attract, worse ones repel.
                let strength = (values[i] - values[j]) / range;
                axpy(&mut acc, strength, &sub(&snapshot[j].position, x));
            }
            axpy(&mut dx, p.get("neighbour_weight") / near.len() as f64, &acc);
        }
        let y = gaussian_sample(&add(x, &dx), noise, rng)?;
        let cand = budget.evaluate(&mut s.population, y)?;
        s.remember(i, &cand);
        s.population.members[i] = cand;
    }

    let trials = (p.get("crossover_fraction") * n as f64).round() as usize;
    for _ in 0..trials {
        let i = rng.index(n);
        let j = rng.index_except(n, i);
        let child = recombine(
            &s.population.members[i].position,
            &s.population.members[j].position,
            rng,
        )?;
        let child = gaussian_sample(&child, 0.1 * scale, rng)?;
        let cand = budget.evaluate(&mut s.population, child)?;
        s.remember(i, &cand);
        let old = s.population.members[i].clone();
        s.population.members[i] = greedy_accept(old, cand)?;
    }
    Ok(StepOutcome::Continue)
}
