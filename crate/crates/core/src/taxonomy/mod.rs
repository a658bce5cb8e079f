//! Which recurring concepts and features each roster algorithm uses, plus
//! per-algorithm metadata.
//!
//! Concept tags name general metaheuristic ideas (hill climbing, restarts,
//! intermediate search, ...). Feature tags name finer mechanisms and family
//! resemblances (velocity, spiral trajectories, PSO-like, ...). Both are
//! fixed data; [`manifest_of`] and [`algorithms_with`] only read it.
//!
//! Classifications are stated for maximization in much of the literature;
//! nothing here depends on the direction, and the library itself minimizes.

mod data;
mod export;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use export::{export_metadata, manifests_csv, manifests_json, metadata_csv, MetadataRecord};

use crate::algorithms::AlgorithmId;
use crate::error::{Error, Result};

macro_rules! tags {
    ($(#[$meta:meta])* $ty:ident { $($variant:ident => $name:literal,)* }) => {
        $(#[$meta])*
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        pub enum $ty {
            $(
                #[serde(rename = $name)]
                $variant,
            )*
        }

        impl $ty {
            pub const ALL: &'static [$ty] = &[$($ty::$variant),*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $($ty::$variant => $name,)*
                }
            }
        }

        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.as_str())
            }
        }

        impl FromStr for $ty {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($name => Ok($ty::$variant),)*
                    _ => Err(Error::UnknownTag(s.to_string())),
                }
            }
        }
    };
}

tags! {
    /// General metaheuristic concepts.
    ConceptTag {
        HillClimbing => "hill-climbing",
        AcceptingNegativeMoves => "accepting-negative-moves",
        Restarts => "restarts",
        AdaptiveMemory => "adaptive-memory",
        PopulationBased => "population-based",
        IntermediateSearch => "intermediate-search",
        DirectionalSearch => "directional-search",
        VariableNeighbourhoodSearch => "variable-neighbourhood-search",
        SearchSpaceMapping => "search-space-mapping",
    }
}

tags! {
    /// Specific mechanisms and family resemblances.
    FeatureTag {
        UsesHistoricalBests => "uses-historical-bests",
        UsesVelocity => "uses-velocity",
        TimeDependentMoveSize => "time-dependent-move-size",
        DistanceDependentMoveSize => "distance-dependent-move-size",
        RegionBasedSampling => "region-based-sampling",
        LocalSearchHybrid => "local-search-hybrid",
        RandomRestartDiversification => "random-restart-diversification",
        RandomWalkDiversification => "random-walk-diversification",
        SpiralTrajectory => "spiral-trajectory",
        InverseSquareAttraction => "inverse-square-attraction",
        TargetPopulationBestOnly => "target-population-best-only",
        TargetFitnessInformed => "target-fitness-informed",
        TargetAllOthers => "target-all-others",
        TargetSummarized => "target-summarized",
        TargetTimeVarying => "target-time-varying",
        PsoLike => "pso-like",
        EsLike => "es-like",
        EaLike => "ea-like",
        SaLikeAcceptance => "sa-like-acceptance",
    }
}

/// Either kind of tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tag {
    Concept(ConceptTag),
    Feature(FeatureTag),
}

impl Tag {
    pub fn as_str(self) -> &'static str {
        match self {
            Tag::Concept(c) => c.as_str(),
            Tag::Feature(f) => f.as_str(),
        }
    }

    /// Every tag, concepts first.
    pub fn all() -> Vec<Tag> {
        ConceptTag::ALL
            .iter()
            .map(|c| Tag::Concept(*c))
            .chain(FeatureTag::ALL.iter().map(|f| Tag::Feature(*f)))
            .collect()
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Tag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.parse::<ConceptTag>()
            .map(Tag::Concept)
            .or_else(|_| s.parse::<FeatureTag>().map(Tag::Feature))
    }
}

impl From<ConceptTag> for Tag {
    fn from(c: ConceptTag) -> Self {
        Tag::Concept(c)
    }
}

impl From<FeatureTag> for Tag {
    fn from(f: FeatureTag) -> Self {
        Tag::Feature(f)
    }
}

/// The tags one algorithm carries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentManifest {
    pub id: AlgorithmId,
    pub concepts: BTreeSet<ConceptTag>,
    pub features: BTreeSet<FeatureTag>,
    /// How out-of-range points are brought back into the box.
    pub boundary: &'static str,
}

impl ComponentManifest {
    pub fn has(&self, tag: impl Into<Tag>) -> bool {
        match tag.into() {
            Tag::Concept(c) => self.concepts.contains(&c),
            Tag::Feature(f) => self.features.contains(&f),
        }
    }

    pub fn tags(&self) -> BTreeSet<Tag> {
        self.concepts
            .iter()
            .map(|c| Tag::Concept(*c))
            .chain(self.features.iter().map(|f| Tag::Feature(*f)))
            .collect()
    }
}

fn in_roster_order(mut ids: Vec<AlgorithmId>) -> Vec<AlgorithmId> {
    ids.sort();
    ids.dedup();
    ids
}

fn concept_members(tag: ConceptTag) -> Vec<AlgorithmId> {
    use ConceptTag as C;
    let union = |lists: &[&[AlgorithmId]]| in_roster_order(lists.concat());
    match tag {
        C::HillClimbing | C::AdaptiveMemory | C::PopulationBased => AlgorithmId::ALL.to_vec(),
        C::Restarts => data::RESTARTS.to_vec(),
        // Simulated-annealing-like acceptance plus random walks.
        C::AcceptingNegativeMoves => union(&[data::SA_LIKE, data::RANDOM_WALK]),
        // Points between existing ones, via PSO-like moves or crossover.
        C::IntermediateSearch => union(&[
            data::PSO_LIKE,
            data::EA_LIKE,
            &[
                AlgorithmId::Ga,
                AlgorithmId::Pso,
                AlgorithmId::Cro,
                AlgorithmId::Mbo,
            ],
        ]),
        C::DirectionalSearch => union(&[data::PSO_LIKE, &[AlgorithmId::Pso]]),
        C::VariableNeighbourhoodSearch => data::SPIRAL.to_vec(),
        C::SearchSpaceMapping => Vec::new(),
    }
}

/// Algorithms carrying `tag`.
pub fn algorithms_with(tag: impl Into<Tag>) -> Vec<AlgorithmId> {
    match tag.into() {
        Tag::Concept(c) => concept_members(c),
        Tag::Feature(f) => data::feature_members(f).to_vec(),
    }
}

/// Parses `tag` and returns its members.
pub fn algorithms_with_name(tag: &str) -> Result<Vec<AlgorithmId>> {
    Ok(algorithms_with(tag.parse::<Tag>()?))
}

pub fn manifest_of(id: AlgorithmId) -> ComponentManifest {
    ComponentManifest {
        id,
        concepts: ConceptTag::ALL
            .iter()
            .copied()
            .filter(|c| concept_members(*c).contains(&id))
            .collect(),
        features: FeatureTag::ALL
            .iter()
            .copied()
            .filter(|f| data::feature_members(*f).contains(&id))
            .collect(),
        boundary: "clamp",
    }
}

/// Jaccard index of the two algorithms' combined tag sets.
pub fn similarity(a: AlgorithmId, b: AlgorithmId) -> f64 {
    let (ta, tb) = (manifest_of(a).tags(), manifest_of(b).tags());
    let union = ta.union(&tb).count();
    if union == 0 {
        return 1.0;
    }
    ta.intersection(&tb).count() as f64 / union as f64
}

#[cfg(test)]
mod tests {
    use super::*;
    use AlgorithmId::*;

    #[test]
    fn vocabulary_sizes_and_round_trip() {
        assert_eq!(ConceptTag::ALL.len(), 9);
        assert_eq!(FeatureTag::ALL.len(), 19);
        for t in Tag::all() {
            assert_eq!(t.as_str().parse::<Tag>().unwrap(), t);
        }
        assert!(matches!("nope".parse::<Tag>(), Err(Error::UnknownTag(_))));
    }

    #[test]
    fn examples() {
        assert!(manifest_of(Fa).has(FeatureTag::InverseSquareAttraction));
        assert!(manifest_of(Hs).has(FeatureTag::EsLike));
        for id in AlgorithmId::ALL {
            assert!(manifest_of(id).has(ConceptTag::PopulationBased));
        }
        assert_eq!(algorithms_with(FeatureTag::SpiralTrajectory), vec![Gwo, Mfo, Woa]);
        assert_eq!(algorithms_with(ConceptTag::PopulationBased).len(), 34);
        assert!(algorithms_with(ConceptTag::SearchSpaceMapping).is_empty());
    }

    #[test]
    fn mbo_has_no_family_tag() {
        let m = manifest_of(Mbo);
        assert!(!m.has(FeatureTag::PsoLike) && !m.has(FeatureTag::EaLike) && !m.has(FeatureTag::EsLike));
    }

    #[test]
    fn similarity_properties() {
        for a in AlgorithmId::ALL {
            assert_eq!(similarity(a, a), 1.0);
            for b in AlgorithmId::ALL {
                let s = similarity(a, b);
                assert!((0.0..=1.0).contains(&s));
                assert_eq!(s, similarity(b, a));
            }
        }
        assert!(similarity(Fa, Gsa) > similarity(Fa, Ga));
    }

    #[test]
    fn similarity_hand_value() {
        // GA: the three universal concepts plus intermediate search.
        // HS: the three universal concepts plus es-like.
        assert_eq!(manifest_of(Ga).tags().len(), 4);
        assert_eq!(manifest_of(Hs).tags().len(), 4);
        assert!((similarity(Ga, Hs) - 3.0 / 5.0).abs() < 1e-15);
    }
}
