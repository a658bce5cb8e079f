use super::{AlgorithmParams, AlgorithmState, ParamSpec, Profile, StateLayout};
use crate::components::vector::{add, axpy, sub};
use crate::components::{inverse_square_weights, truncation_select, weighted_mean, DecaySchedule};
use crate::engine::{Budget, RngStream, StepError, StepOutcome};
use crate::error::Result;

pub(super) const PROFILE: Profile = Profile {
    summary: "Charged system search: velocities driven by inverse-square attraction to better members, scheduled coefficients, elite memory.",
    population: 50,
    min_population: 2,
    population_doc: "common baseline size",
    layout: StateLayout {
        velocities: true,
        archive: true,
        ..StateLayout::NONE
    },
    params: &[
        ParamSpec::real("kv_start", 0.5, 0.0, 2.0, "velocity retention at the start"),
        ParamSpec::real("kv_end", 0.0, 0.0, 2.0, "velocity retention at the end; no momentum near the horizon"),
        ParamSpec::real("ka_start", 0.5, 0.0, 4.0, "attraction gain at the start"),
        ParamSpec::real("ka_end", 1.5, 0.0, 4.0, "attraction gain at the end; stronger intensification"),
        ParamSpec::int("memory", 3.0, 1.0, 1000.0, "elite memory size"),
        ParamSpec::real("sharpness", 10.0, 1e-6, 1e6, "multiplies squared normalized distances in the attraction law"),
    ],
    check: None,
};

pub(super) fn init(p: &AlgorithmParams, budget: &Budget<'_>, rng: &mut RngStream) -> Result<AlgorithmState> {
    AlgorithmState::standard(&PROFILE.layout, p.population_size, budget, rng)
}

/// Attraction of member `i` toward the inverse-square-weighted mean of the
/// members better than it; zero for the best member.
pub(super) fn attraction(
    i: usize,
    s: &AlgorithmState,
    budget: &Budget<'_>,
    sharpness: f64,
) -> Result<Vec<f64>> {
    let space = budget.space();
    let members = &s.population.members;
    let x = &members[i].position;
    let better: Vec<usize> = (0..members.len())
        .filter(|&j| members[j].cost() < members[i].cost())
        .collect();
    if better.is_empty() {
        return Ok(vec![0.0; x.len()]);
    }
    let k = sharpness.sqrt();
    let scaled = |p: &[f64]| space.normalize(p).into_iter().map(|v| v * k).collect::<Vec<_>>();
    let others: Vec<Vec<f64>> = better.iter().map(|&j| scaled(&members[j].position)).collect();
    let values: Vec<f64> = better.iter().map(|&j| members[j].cost()).collect();
    let w = inverse_square_weights(&scaled(x), &others, &values)?;
    let total: f64 = w.iter().sum();
    let positions: Vec<&[f64]> = better.iter().map(|&j| members[j].position.as_slice()).collect();
    let target = weighted_mean(&positions, &w)?;
    let pull = total / (1.0 + total);
    Ok(sub(&target, x).into_iter().map(|d| pull * d).collect())
}

pub(super) fn step(
    p: &AlgorithmParams,
    s: &mut AlgorithmState,
    budget: &Budget<'_>,
    rng: &mut RngStream,
) -> Result<StepOutcome, StepError> {
    let n = s.population.len();
    let tau = budget.progress(&s.population);
    let kv = DecaySchedule::linear(p.get("kv_start"), p.get("kv_end")).at(tau);
    let ka = DecaySchedule::linear(p.get("ka_start"), p.get("ka_end")).at(tau);
    let pulls: Vec<Vec<f64>> = (0..n)
        .map(|i| attraction(i, s, budget, p.get("sharpness")))
        .collect::<Result<_>>()?;

    for i in 0..n {
        let mut v: Vec<f64> = s.velocities_mut()[i]
            .iter()
            .map(|vd| kv * rng.uniform() * vd)
            .collect();
        axpy(&mut v, ka * rng.uniform(), &pulls[i]);
        let x = add(&s.population.members[i].position, &v);
        s.population.members[i] = budget.evaluate(&mut s.population, x)?;
        s.velocities_mut()[i] = v;
    }

    // Elite memory: best points seen, reinserted over worse members.
    let archive = s.archive.as_mut().expect("layout declares an archive");
    let mut pool = archive.clone();
    pool.extend(s.population.members.iter().cloned());
    let keep = truncation_select(&pool, p.count("memory").min(pool.len()))?;
    *archive = keep.into_iter().map(|j| pool[j].clone()).collect();
    let archive = archive.clone();
    let order = s.population.ranking();
    for (elite, &worst) in archive.iter().zip(order.iter().rev()) {
        let present = s.population.members.iter().any(|m| m.position == elite.position);
        if !present && elite.cost() < s.population.members[worst].cost() {
            s.population.members[worst] = elite.clone();
            s.velocities_mut()[worst].iter_mut().for_each(|v| *v = 0.0);
        }
    }
    Ok(StepOutcome::Continue)
}
