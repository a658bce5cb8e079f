use super::{coord_scale, standard_init, AlgorithmParams, AlgorithmState, ParamSpec, Profile, StateLayout};
use crate::components::{fitness_weights, gaussian_sample, move_toward};
use crate::engine::{Budget, RngStream, StepError, StepOutcome};
use crate::error::Result;

pub(super) const PROFILE: Profile = Profile {
    summary: "Water cycle: rivers flow toward the sea (best), streams toward rivers or sea in proportion to their quality, with random local moves.",
    population: 50,
    min_population: 2,
    population_doc: "common baseline size",
    layout: StateLayout::NONE,
    params: &[
        ParamSpec::int("leaders", 4.0, 1.0, 1000.0, "sea plus rivers"),
        ParamSpec::real("attraction", 2.0, 0.0, 4.0, "move fraction drawn from [0, this]"),
        ParamSpec::real("jitter_prob", 0.1, 0.0, 1.0, "chance a stream makes a random local move instead"),
        ParamSpec::real("jitter_scale", 0.5, 0.0, 10.0, "local move deviation as a fraction of the population spread"),
    ],
    check: Some(|p| {
        if p.count("leaders") < p.population_size {
            Ok(())
        } else {
            Err("leaders must be fewer than the population".into())
        }
    }),
};

pub(super) fn init(p: &AlgorithmParams, budget: &Budget<'_>, rng: &mut RngStream) -> Result<AlgorithmState> {
    standard_init(&PROFILE, p, budget, rng)
}

pub(super) fn step(
    p: &AlgorithmParams,
    s: &mut AlgorithmState,
    budget: &Budget<'_>,
    rng: &mut RngStream,
) -> Result<StepOutcome, StepError> {
    let order = s.population.ranking();
    let snapshot = s.population.members.clone();
    let k = p.count("leaders");
    let leaders = &order[..k];
    let streams = &order[k..];
    let sigma = p.get("jitter_scale") * coord_scale(&s.population, budget);
    let c = p.get("attraction");

    // Largest-remainder share of streams per leader, better leaders first.
    let w = fitness_weights(&leaders.iter().map(|&i| snapshot[i].cost()).collect::<Vec<_>>());
    let total: f64 = w.iter().sum();
    let quotas: Vec<f64> = w.iter().map(|x| x / total * streams.len() as f64).collect();
    let mut counts: Vec<usize> = quotas.iter().map(|q| q.floor() as usize).collect();
    let mut left = streams.len() - counts.iter().sum::<usize>();
    let mut by_remainder: Vec<usize> = (0..k).collect();
    by_remainder.sort_by(|&a, &b| {
        (quotas[b] - quotas[b].floor())
            .total_cmp(&(quotas[a] - quotas[a].floor()))
            .then(a.cmp(&b))
    });
    for &j in by_remainder.iter().cycle() {
        if left == 0 {
            break;
        }
        counts[j] += 1;
        left -= 1;
    }

    let mut next = 0;
    for (j, &count) in counts.iter().enumerate() {
        let target = &snapshot[leaders[j]].position;
        for &i in &streams[next..next + count] {
            let x = &snapshot[i].position;
            let y = if rng.bernoulli(p.get("jitter_prob")) {
                gaussian_sample(x, sigma, rng)?
            } else {
                move_toward(x, target, rng.range(0.0, c), 0.0, rng)?
            };
            s.population.members[i] = budget.evaluate(&mut s.population, y)?;
        }
        next += count;
    }
    let sea = &snapshot[leaders[0]].position;
    for &i in &leaders[1..] {
        let y = move_toward(&snapshot[i].position, sea, rng.range(0.0, c), 0.0, rng)?;
        s.population.members[i] = budget.evaluate(&mut s.population, y)?;
    }
    Ok(StepOutcome::Continue)
}
