use super::{AlgorithmParams, AlgorithmState, ParamSpec, Profile, StateLayout};
use crate::components::vector::distance;
use crate::components::{fitness_weights, move_toward, roulette};
use crate::engine::{Budget, RngStream, StepError, StepOutcome};
use crate::error::Result;

pub(super) const PROFILE: Profile = Profile {
    summary: "Imperialist competitive: empires sized by imperialist fitness, colonies assimilate, weak empires lose colonies until one remains.",
    population: 50,
    min_population: 2,
    population_doc: "common baseline size",
    layout: StateLayout {
        groups: true,
        ..StateLayout::NONE
    },
    params: &[
        ParamSpec::int("imperialists", 5.0, 1.0, 1000.0, "initial number of empires"),
        ParamSpec::real("assimilation", 2.0, 0.0, 4.0, "move fraction toward the imperialist drawn from [0, this]"),
        ParamSpec::real("jitter", 0.3, 0.0, 10.0, "jitter as a fraction of the colony-imperialist distance"),
        ParamSpec::real("colony_weight", 0.05, 0.0, 1.0, "weight of the colonies' mean value in an empire's value"),
    ],
    check: Some(|p| {
        if p.count("imperialists") < p.population_size {
            Ok(())
        } else {
            Err("imperialists must be fewer than the population".into())
        }
    }),
};

pub(super) fn init(p: &AlgorithmParams, budget: &Budget<'_>, rng: &mut RngStream) -> Result<AlgorithmState> {
    let mut s = AlgorithmState::standard(&PROFILE.layout, p.population_size, budget, rng)?;
    let order = s.population.ranking();
    let m = p.count("imperialists");
    let values: Vec<f64> = order[..m]
        .iter()
        .map(|&i| s.population.members[i].cost())
        .collect();
    let w = fitness_weights(&values);
    let total: f64 = w.iter().sum();
    let colonies = order.len() - m;

    // Largest-remainder apportionment of colonies to empires.
    let quotas: Vec<f64> = w.iter().map(|x| x / total * colonies as f64).collect();
    let mut counts: Vec<usize> = quotas.iter().map(|q| q.floor() as usize).collect();
    let mut by_remainder: Vec<usize> = (0..m).collect();
    by_remainder.sort_by(|&a, &b| {
        (quotas[b] - quotas[b].floor())
            .total_cmp(&(quotas[a] - quotas[a].floor()))
            .then(a.cmp(&b))
    });
    let mut left = colonies - counts.iter().sum::<usize>();
    for &k in by_remainder.iter().cycle() {
        if left == 0 {
            break;
        }
        counts[k] += 1;
        left -= 1;
    }

    let mut rest: Vec<usize> = order[m..].to_vec();
    for i in (1..rest.len()).rev() {
        let j = rng.index(i + 1);
        rest.swap(i, j);
    }
    let mut deal = rest.into_iter();
    s.groups = Some(
        (0..m)
            .map(|k| {
                let mut g = vec![order[k]];
                g.extend(deal.by_ref().take(counts[k]));
                g
            })
            .collect(),
    );
    Ok(s)
}

pub(super) fn step(
    p: &AlgorithmParams,
    s: &mut AlgorithmState,
    budget: &Budget<'_>,
    rng: &mut RngStream,
) -> Result<StepOutcome, StepError> {
    let mut groups = s.groups.take().expect("layout declares groups");
    let root_dims = (budget.space().dims() as f64).sqrt();
    let result = assimilate(p, s, &mut groups, budget, rng, root_dims);
    if result.is_ok() {
        compete(p, s, &mut groups, rng)?;
    }
    let single = groups.len() == 1;
    s.groups = Some(groups);
    result?;
    Ok(if single {
        StepOutcome::Terminated
    } else {
        StepOutcome::Continue
    })
}

fn assimilate(
    p: &AlgorithmParams,
    s: &mut AlgorithmState,
    groups: &mut [Vec<usize>],
    budget: &Budget<'_>,
    rng: &mut RngStream,
    root_dims: f64,
) -> Result<(), StepError> {
    for g in groups.iter_mut() {
        let imperial = s.population.members[g[0]].position.clone();
        for &c in &g[1..] {
            let x = s.population.members[c].position.clone();
            let jitter = p.get("jitter") * distance(&x, &imperial) / root_dims;
            let y = move_toward(&x, &imperial, rng.range(0.0, p.get("assimilation")), jitter, rng)?;
            s.population.members[c] = budget.evaluate(&mut s.population, y)?;
        }
        // A colony that beats its imperialist takes over the empire.
        let mut best = 0;
        for pos in 1..g.len() {
            if s.population.members[g[pos]].cost() < s.population.members[g[best]].cost() {
                best = pos;
            }
        }
        g.swap(0, best);
    }
    Ok(())
}

fn compete(
    p: &AlgorithmParams,
    s: &AlgorithmState,
    groups: &mut Vec<Vec<usize>>,
    rng: &mut RngStream,
) -> Result<()> {
    if groups.len() < 2 {
        return Ok(());
    }
    let value = |i: usize| s.population.members[i].cost();
    let totals: Vec<f64> = groups
        .iter()
        .map(|g| {
            let colonies = &g[1..];
            let mean = if colonies.is_empty() {
                0.0
            } else {
                colonies.iter().map(|&c| value(c)).sum::<f64>() / colonies.len() as f64
            };
            value(g[0]) + p.get("colony_weight") * mean
        })
        .collect();
    let mut weakest = 0;
    for k in 1..groups.len() {
        if totals[k] > totals[weakest] {
            weakest = k;
        }
    }
    let rivals: Vec<usize> = (0..groups.len()).filter(|&k| k != weakest).collect();
    let rival_totals: Vec<f64> = rivals.iter().map(|&k| totals[k]).collect();
    let winner = rivals[roulette(&fitness_weights(&rival_totals), rng)?];

    let g = &mut groups[weakest];
    if g.len() > 1 {
        let mut worst = 1;
        for pos in 2..g.len() {
            if value(g[pos]) > value(g[worst]) {
                worst = pos;
            }
        }
        let colony = g.remove(worst);
        groups[winner].push(colony);
    }
    if groups[weakest].len() == 1 {
        let imperial = groups.remove(weakest)[0];
        let winner = if winner > weakest { winner - 1 } else { winner };
        groups[winner].push(imperial);
    }
    Ok(())
}
