use super::{standard_init, AlgorithmParams, AlgorithmState, ParamSpec, Profile, StateLayout};
use crate::components::{move_toward, restart, weighted_sample_distinct};
use crate::engine::{Budget, RngStream, StepError, StepOutcome};
use crate::error::Result;

pub(super) const PROFILE: Profile = Profile {
    summary: "Shuffled frog leaping: interleaved memeplexes; the worst of a rank-weighted subsample leaps toward its best, the global best, or restarts.",
    population: 50,
    min_population: 2,
    population_doc: "common baseline size",
    layout: StateLayout::NONE,
    params: &[
        ParamSpec::int("memeplexes", 5.0, 1.0, 1000.0, "number of interleaved sub-populations"),
        ParamSpec::int("subsample", 5.0, 2.0, 1000.0, "members drawn per leap"),
        ParamSpec::int("local_steps", 5.0, 1.0, 1000.0, "leaps per memeplex per iteration"),
    ],
    check: Some(|p| {
        if 2 * p.count("memeplexes") <= p.population_size {
            Ok(())
        } else {
            Err("each memeplex needs at least two members".into())
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
    let m = p.count("memeplexes");
    let order = s.population.ranking();
    let plexes: Vec<Vec<usize>> = (0..m)
        .map(|k| order.iter().skip(k).step_by(m).copied().collect())
        .collect();

    for plex in &plexes {
        for _ in 0..p.count("local_steps") {
            // Rank weights 2(n+1-r)/(n(n+1)) over the memeplex sorted best first.
            let mut sorted = plex.clone();
            sorted.sort_by(|&a, &b| {
                s.population.members[a]
                    .cost()
                    .total_cmp(&s.population.members[b].cost())
                    .then(a.cmp(&b))
            });
            let len = sorted.len();
            let w: Vec<f64> = (1..=len).map(|r| (len + 1 - r) as f64).collect();
            let mut pick: Vec<usize> = weighted_sample_distinct(&w, p.count("subsample").min(len), rng)?
                .into_iter()
                .map(|r| sorted[r])
                .collect();
            pick.sort_by(|&a, &b| {
                s.population.members[a]
                    .cost()
                    .total_cmp(&s.population.members[b].cost())
                    .then(a.cmp(&b))
            });
            let (best, worst) = (pick[0], pick[pick.len() - 1]);
            let x = s.population.members[worst].position.clone();
            let old = s.population.members[worst].cost();

            let y = move_toward(
                &x,
                &s.population.members[best].position.clone(),
                rng.uniform(),
                0.0,
                rng,
            )?;
            let cand = budget.evaluate(&mut s.population, y)?;
            if cand.cost() < old {
                s.population.members[worst] = cand;
                continue;
            }
            let global = s.population.members[s.population.best_index()].position.clone();
            let y = move_toward(&x, &global, rng.uniform(), 0.0, rng)?;
            let cand = budget.evaluate(&mut s.population, y)?;
            if cand.cost() < old {
                s.population.members[worst] = cand;
                continue;
            }
            let fresh = restart(budget.space(), rng);
            s.population.members[worst] = budget.evaluate(&mut s.population, fresh.position)?;
        }
    }
    Ok(StepOutcome::Continue)
}
