use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::AlgorithmId;
use crate::error::{Error, Result};

/// One tunable parameter of an algorithm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamSpec {
    pub name: &'static str,
    pub default: f64,
    /// Inclusive lower bound.
    pub min: f64,
    /// Inclusive upper bound.
    pub max: f64,
    pub integer: bool,
    /// One-line rationale for the default.
    pub doc: &'static str,
}

impl ParamSpec {
    pub(crate) const fn real(
        name: &'static str,
        default: f64,
        min: f64,
        max: f64,
        doc: &'static str,
    ) -> Self {
        Self {
            name,
            default,
            min,
            max,
            integer: false,
            doc,
        }
    }

    pub(crate) const fn int(name: &'static str, default: f64, min: f64, max: f64, doc: &'static str) -> Self {
        Self {
            name,
            default,
            min,
            max,
            integer: true,
            doc,
        }
    }
}

/// Which optional pieces of [`AlgorithmState`](super::AlgorithmState) an
/// algorithm keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct StateLayout {
    pub velocities: bool,
    pub historical_bests: bool,
    pub counters: bool,
    pub directions: bool,
    pub groups: bool,
    pub operator_stats: bool,
    pub archive: bool,
}

impl StateLayout {
    pub(crate) const NONE: StateLayout = StateLayout {
        velocities: false,
        historical_bests: false,
        counters: false,
        directions: false,
        groups: false,
        operator_stats: false,
        archive: false,
    };
}

/// Cross-parameter constraint; the error string explains the violation.
pub type ParamCheck = fn(&AlgorithmParams) -> std::result::Result<(), String>;

/// Static description of an algorithm: defaults, bounds and state layout.
#[derive(Debug, Clone, Copy)]
pub struct Profile {
    pub summary: &'static str,
    pub population: usize,
    pub min_population: usize,
    pub population_doc: &'static str,
    pub layout: StateLayout,
    pub params: &'static [ParamSpec],
    /// Cross-parameter constraints, checked after the per-parameter ranges.
    pub check: Option<ParamCheck>,
}

/// Population size plus named numeric parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlgorithmParams {
    pub population_size: usize,
    pub values: BTreeMap<String, f64>,
}

impl AlgorithmParams {
    /// Sets a parameter by name; `population_size` is accepted too.
    /// Nothing is validated until [`make_algorithm`](super::make_algorithm).
    pub fn set(&mut self, name: &str, value: f64) -> &mut Self {
        if name == "population_size" {
            self.population_size = if value.is_finite() && value >= 0.0 {
                value.round() as usize
            } else {
                0
            };
        } else {
            self.values.insert(name.to_string(), value);
        }
        self
    }

    pub fn with(mut self, name: &str, value: f64) -> Self {
        self.set(name, value);
        self
    }

    pub fn value(&self, name: &str) -> Option<f64> {
        self.values.get(name).copied()
    }

    /// Value of a parameter known to exist after validation.
    pub(crate) fn get(&self, name: &str) -> f64 {
        self.values[name]
    }

    pub(crate) fn count(&self, name: &str) -> usize {
        self.values[name] as usize
    }
}

pub fn default_params(id: AlgorithmId) -> AlgorithmParams {
    let profile = id.profile();
    AlgorithmParams {
        population_size: profile.population,
        values: profile
            .params
            .iter()
            .map(|p| (p.name.to_string(), p.default))
            .collect(),
    }
}

/// Fills missing parameters with defaults and checks every value.
pub(crate) fn resolve(id: AlgorithmId, params: &AlgorithmParams) -> Result<AlgorithmParams> {
    let profile = id.profile();
    let bad = |name: &str, reason: String| Error::InvalidParameter {
        algorithm: id.to_string(),
        name: name.to_string(),
        reason,
    };
    if params.population_size == 0 {
        return Err(Error::InvalidArgument(format!(
            "{id}: population size must be at least 1"
        )));
    }
    if params.population_size < profile.min_population {
        return Err(bad(
            "population_size",
            format!(
                "{} is below the minimum of {}",
                params.population_size, profile.min_population
            ),
        ));
    }
    let mut out = default_params(id);
    out.population_size = params.population_size;
    for (name, &value) in &params.values {
        let Some(spec) = profile.params.iter().find(|p| p.name == name) else {
            let known: Vec<&str> = profile.params.iter().map(|p| p.name).collect();
            return Err(bad(
                name,
                format!("unknown parameter (known: {})", known.join(", ")),
            ));
        };
        if !value.is_finite() || value < spec.min || value > spec.max {
            return Err(bad(name, format!("{value} outside [{}, {}]", spec.min, spec.max)));
        }
        if spec.integer && value.fract() != 0.0 {
            return Err(bad(name, format!("{value} is not an integer")));
        }
        out.values.insert(name.clone(), value);
    }
    if let Some(check) = profile.check {
        check(&out).map_err(|reason| bad("population_size", reason))?;
    }
    Ok(out)
}

/// Markdown table of every default, one section per algorithm.
pub fn parameters_markdown() -> String {
    let mut s = String::from(
        "# Default parameters\n\n\
         Generated from the parameter tables in `crates/core/src/algorithms`; \
         a test keeps this file in sync. Lengths marked \"of width\" are fractions \
         of the mean side length of the search box; \"of spread\" means the \
         current population's RMS distance to its mean.\n",
    );
    for id in AlgorithmId::ALL {
        let p = id.profile();
        s.push_str(&format!("\n## {id}\n\n{}\n\n", p.summary));
        s.push_str("| parameter | default | range | rationale |\n|---|---|---|---|\n");
        s.push_str(&format!(
            "| population_size | {} | >= {} | {} |\n",
            p.population, p.min_population, p.population_doc
        ));
        for spec in p.params {
            s.push_str(&format!(
                "| {} | {} | [{}, {}]{} | {} |\n",
                spec.name,
                spec.default,
                spec.min,
                spec.max,
                if spec.integer { " int" } else { "" },
                spec.doc
            ));
        }
    }
    s
}
