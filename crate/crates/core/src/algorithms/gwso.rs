use super::{coord_scale, AlgorithmParams, AlgorithmState, ParamSpec, Profile, StateLayout};
use crate::components::vector::distance;
use crate::components::{move_toward, roulette};
use crate::engine::{Budget, RngStream, StepError, StepOutcome};
use crate::error::Result;

pub(super) const PROFILE: Profile = Profile {
    summary: "Glowworm swarm: progress-weighted moves toward better neighbours inside radii that shrink when crowded.",
    population: 50,
    min_population: 1,
    population_doc: "common baseline size",
    layout: StateLayout {
        counters: true,
        ..StateLayout::NONE
    },
    params: &[
        ParamSpec::real("progress_gain", 1.0, 0.0, 100.0, "added to a member's progress value on improvement"),
        ParamSpec::real("progress_decay", 0.4, 0.0, 1.0, "fraction of progress lost on a non-improving move"),
        ParamSpec::real("initial_radius", 0.5, 1e-9, 10.0, "neighbourhood radius of width at the start; also its cap"),
        ParamSpec::real("radius_gain", 0.1, 0.0, 10.0, "radius change per missing neighbour, relative to the initial radius"),
        ParamSpec::int("desired_neighbours", 5.0, 1.0, 1000.0, "neighbour count the radius adapts toward"),
        ParamSpec::real("max_fraction", 1.0, 0.0, 4.0, "move fraction drawn from [0, this]"),
        ParamSpec::real("jitter", 0.3, 0.0, 10.0, "jitter amplitude as a fraction of the population spread"),
    ],
    check: None,
};

pub(super) fn init(p: &AlgorithmParams, budget: &Budget<'_>, rng: &mut RngStream) -> Result<AlgorithmState> {
    let mut s = AlgorithmState::standard(&PROFILE.layout, p.population_size, budget, rng)?;
    let r0 = p.get("initial_radius") * budget.space().mean_width();
    s.counters_mut().iter_mut().for_each(|c| c.radius = r0);
    Ok(s)
}

pub(super) fn step(
    p: &AlgorithmParams,
    s: &mut AlgorithmState,
    budget: &Budget<'_>,
    rng: &mut RngStream,
) -> Result<StepOutcome, StepError> {
    let n = s.population.len();
    let snapshot = s.population.members.clone();
    let counters = s.counters_mut().clone();
    let jitter = p.get("jitter") * coord_scale(&s.population, budget);
    let r_max = p.get("initial_radius") * budget.space().mean_width();
    let desired = p.count("desired_neighbours") as f64;

    for i in 0..n {
        let x = &snapshot[i].position;
        let r = counters[i].radius;
        let near: Vec<usize> = (0..n)
            .filter(|&j| j != i && distance(x, &snapshot[j].position) < r)
            .collect();
        let better: Vec<usize> = near
            .iter()
            .copied()
            .filter(|&j| snapshot[j].cost() < snapshot[i].cost())
            .collect();
        let target = if better.is_empty() {
            x.clone()
        } else {
            let w: Vec<f64> = better.iter().map(|&j| counters[j].progress + 1e-9).collect();
            snapshot[better[roulette(&w, rng)?]].position.clone()
        };
        let fraction = if better.is_empty() {
            0.0
        } else {
            rng.range(0.0, p.get("max_fraction"))
        };
        let cand = budget.evaluate(&mut s.population, move_toward(x, &target, fraction, jitter, rng)?)?;
        let improved = cand.cost() < snapshot[i].cost();
        s.population.members[i] = cand;
        let c = &mut s.counters_mut()[i];
        if improved {
            c.progress += p.get("progress_gain");
        } else {
            c.progress *= 1.0 - p.get("progress_decay");
        }
        let change = p.get("radius_gain") * r_max * (desired - near.len() as f64) / desired;
        c.radius = (r + change).clamp(1e-12 * r_max, r_max);
    }
    Ok(StepOutcome::Continue)
}
