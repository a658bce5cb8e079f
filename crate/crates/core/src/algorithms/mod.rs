//! The roster: 34 optimizers, each a composition of [`components`] operators.
//!
//! Every algorithm lives in its own file and exposes the same three items: a
//! static [`Profile`] (defaults, bounds, state layout), an `init` function
//! and a `step` function. [`AlgorithmInstance`] dispatches on
//! [`AlgorithmId`] and implements [`Optimizer`], so every algorithm runs
//! under the same [`run`](crate::engine::run) loop.
//!
//! Steps read the population as it was at the start of the iteration and
//! write members back in index order, unless the algorithm processes its
//! members sequentially (SFLA, HS, CS).
//!
//! Length scales are expressed relative to the search box ("of width") or to
//! the population's current RMS spread ("of spread"), so defaults carry over
//! between spaces of different size.
//!
//! [`components`]: crate::components

mod params;
mod state;

mod abc;
mod alo;
mod ba;
mod bbbc;
mod bbo;
mod bea;
mod bfo;
mod bso;
mod coa;
mod cro;
mod cs;
mod cso;
mod css;
mod fa;
mod foa;
mod fpa;
mod fwa;
mod ga;
mod gsa;
mod gso;
mod gwo;
mod gwso;
mod hs;
mod ica;
mod iwo;
mod kh;
mod mbo;
mod mfo;
mod pso;
mod sca;
mod sfla;
mod tlbo;
mod wca;
mod woa;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use params::{
    default_params, parameters_markdown, AlgorithmParams, ParamCheck, ParamSpec, Profile, StateLayout,
};
pub use state::{AlgorithmState, MemberCounters, OperatorStats};

use crate::components::vector::position_spread;
use crate::engine::{Budget, Optimizer, Population, RngStream, StepError, StepOutcome};
use crate::error::{Error, Result};

macro_rules! roster {
    ($($variant:ident => $name:literal, $module:ident;)*) => {
        /// Identifier of a roster algorithm.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        pub enum AlgorithmId {
            $(
                #[serde(rename = $name)]
                $variant,
            )*
        }

        impl AlgorithmId {
            /// All ids in roster order.
            pub const ALL: [AlgorithmId; 34] = [$(AlgorithmId::$variant),*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(AlgorithmId::$variant => $name,)*
                }
            }

            pub fn profile(self) -> &'static Profile {
                match self {
                    $(AlgorithmId::$variant => &$module::PROFILE,)*
                }
            }

            fn init(self, p: &AlgorithmParams, budget: &Budget<'_>, rng: &mut RngStream) -> Result<AlgorithmState> {
                match self {
                    $(AlgorithmId::$variant => $module::init(p, budget, rng),)*
                }
            }

            fn step(
                self,
                p: &AlgorithmParams,
                s: &mut AlgorithmState,
                budget: &Budget<'_>,
                rng: &mut RngStream,
            ) -> Result<StepOutcome, StepError> {
                match self {
                    $(AlgorithmId::$variant => $module::step(p, s, budget, rng),)*
                }
            }
        }

        impl FromStr for AlgorithmId {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($name => Ok(AlgorithmId::$variant),)*
                    _ => Err(Error::UnknownAlgorithm(s.to_string())),
                }
            }
        }
    };
}

roster! {
    Ga => "GA", ga;
    Pso => "PSO", pso;
    Alo => "ALO", alo;
    Abc => "ABC", abc;
    Bfo => "BFO", bfo;
    Ba => "BA", ba;
    Bea => "BeA", bea;
    BbBc => "BB-BC", bbbc;
    Bbo => "BBO", bbo;
    Bso => "BSO", bso;
    Cso => "CSO", cso;
    Css => "CSS", css;
    Cro => "CRO", cro;
    Coa => "COA", coa;
    Cs => "CS", cs;
    Fa => "FA", fa;
    Fwa => "FWA", fwa;
    Fpa => "FPA", fpa;
    Foa => "FOA", foa;
    Gwso => "GwSO", gwso;
    Gsa => "GSA", gsa;
    Gwo => "GWO", gwo;
    Gso => "GSO", gso;
    Hs => "HS", hs;
    Ica => "ICA", ica;
    Iwo => "IWO", iwo;
    Kh => "KH", kh;
    Mbo => "MBO", mbo;
    Mfo => "MFO", mfo;
    Sfla => "SFLA", sfla;
    Sca => "SCA", sca;
    Tlbo => "TLBO", tlbo;
    Wca => "WCA", wca;
    Woa => "WOA", woa;
}

impl AlgorithmId {
    pub fn summary(self) -> &'static str {
        self.profile().summary
    }

    /// Comma-separated list of every spelling, for error messages.
    pub fn valid_names() -> String {
        AlgorithmId::ALL.map(AlgorithmId::as_str).join(", ")
    }
}

impl fmt::Display for AlgorithmId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A configured algorithm. Holds no run state; see [`AlgorithmState`].
#[derive(Debug, Clone, PartialEq)]
pub struct AlgorithmInstance {
    id: AlgorithmId,
    params: AlgorithmParams,
}

/// Validates `params` against the id's table, filling unspecified
/// parameters with defaults.
pub fn make_algorithm(id: AlgorithmId, params: &AlgorithmParams) -> Result<AlgorithmInstance> {
    Ok(AlgorithmInstance {
        id,
        params: params::resolve(id, params)?,
    })
}

impl AlgorithmInstance {
    pub fn with_defaults(id: AlgorithmId) -> Self {
        make_algorithm(id, &default_params(id)).expect("defaults are valid")
    }

    pub fn id(&self) -> AlgorithmId {
        self.id
    }

    pub fn params(&self) -> &AlgorithmParams {
        &self.params
    }

    /// Optional state fields this algorithm maintains.
    pub fn layout(&self) -> StateLayout {
        self.id.profile().layout
    }
}

impl Optimizer for AlgorithmInstance {
    type State = AlgorithmState;

    fn label(&self) -> String {
        self.id.to_string()
    }

    fn initial_population_size(&self) -> usize {
        self.params.population_size
    }

    fn initialize(&self, budget: &Budget<'_>, rng: &mut RngStream) -> Result<AlgorithmState> {
        self.id.init(&self.params, budget, rng)
    }

    fn step(
        &self,
        state: &mut AlgorithmState,
        budget: &Budget<'_>,
        rng: &mut RngStream,
    ) -> Result<StepOutcome, StepError> {
        state.iteration += 1;
        self.id.step(&self.params, state, budget, rng)
    }

    fn population<'s>(&self, state: &'s AlgorithmState) -> &'s Population {
        &state.population
    }
}

/// Population spread per coordinate, floored so samplers never collapse to
/// a zero width.
fn coord_scale(pop: &Population, budget: &Budget<'_>) -> f64 {
    let space = budget.space();
    let s = position_spread(&pop.positions()) / (space.dims() as f64).sqrt();
    s.max(1e-12 * space.mean_width())
}

/// Standard initialization for algorithms with no special setup.
fn standard_init(
    profile: &Profile,
    p: &AlgorithmParams,
    budget: &Budget<'_>,
    rng: &mut RngStream,
) -> Result<AlgorithmState> {
    AlgorithmState::standard(&profile.layout, p.population_size, budget, rng)
}
