use metaparts::algorithms::{AlgorithmId, AlgorithmInstance};
use metaparts::benchmarks::Benchmark;
use metaparts::engine::{Budget, Optimizer, RngStream};
use metaparts::taxonomy::{
    algorithms_with, algorithms_with_name, export_metadata, manifest_of, ConceptTag, FeatureTag, Tag,
};

const GOLDEN: [(&str, &str); 17] = [
    ("restarts", "ABC,BFO,BeA,CS,SFLA"),
    ("sa-like-acceptance", "BA,CRO"),
    ("random-walk-diversification", "ALO,BFO,CS,GSO,KH,MBO"),
    ("spiral-trajectory", "GWO,MFO,WOA"),
    ("es-like", "BeA,HS,IWO"),
    ("ea-like", "BBO,BSO,COA,ICA,SFLA,SCA"),
    ("inverse-square-attraction", "CSS,FA,GSA"),
    ("uses-historical-bests", "PSO,KH,MFO"),
    ("time-dependent-move-size", "ABC,ALO,BB-BC,CSS,IWO,MBO"),
    ("distance-dependent-move-size", "CSS,FA,GSA"),
    ("region-based-sampling", "ALO,BA,BeA,BB-BC,FWA,GWO,WOA"),
    ("local-search-hybrid", "CSO,CRO,COA,FWA,IWO,MBO,WCA"),
    ("target-population-best-only", "BA,CSO,FOA"),
    ("target-fitness-informed", "GwSO,WCA,GWO,COA"),
    ("target-summarized", "KH,BB-BC"),
    ("target-time-varying", "MFO,WOA"),
    (
        "pso-like",
        "ABC,BeA,BA,COA,CSO,CSS,FA,FOA,FPA,GSA,GSO,GWO,GwSO,KH,MFO,TLBO,WCA,WOA",
    ),
];

fn joined(ids: &[AlgorithmId]) -> String {
    ids.iter().map(|id| id.as_str()).collect::<Vec<_>>().join(",")
}

#[test]
fn golden_sets_are_exact() {
    for (tag, expected) in GOLDEN {
        assert_eq!(joined(&algorithms_with_name(tag).unwrap()), expected, "{tag}");
    }
}

#[test]
fn universal_tags_in_every_manifest() {
    for id in AlgorithmId::ALL {
        let m = manifest_of(id);
        for c in [
            ConceptTag::HillClimbing,
            ConceptTag::AdaptiveMemory,
            ConceptTag::PopulationBased,
        ] {
            assert!(m.has(c), "{id} lacks {c}");
        }
    }
}

#[test]
fn inverse_index_matches_manifests() {
    for tag in Tag::all() {
        let members = algorithms_with(tag);
        for id in AlgorithmId::ALL {
            assert_eq!(manifest_of(id).has(tag), members.contains(&id), "{id} / {tag}");
        }
    }
}

#[test]
fn unknown_tag_is_an_error() {
    assert!(algorithms_with_name("GAO").is_err());
    assert!("Restarts".parse::<Tag>().is_err());
}

#[test]
fn feature_tags_with_velocity_or_memory_match_state() {
    let space = Benchmark::Sphere.space(2).unwrap();
    for id in AlgorithmId::ALL {
        let alg = AlgorithmInstance::with_defaults(id);
        let budget = Budget::new(&Benchmark::Sphere, &space, 10_000);
        let state = alg.initialize(&budget, &mut RngStream::new(1)).unwrap();
        let m = manifest_of(id);
        assert_eq!(
            m.has(FeatureTag::UsesVelocity),
            state.velocities.is_some(),
            "{id}"
        );
        assert_eq!(
            m.has(FeatureTag::UsesHistoricalBests),
            state.historical_bests.is_some(),
            "{id}"
        );
    }
}

#[test]
fn citation_bands_verbatim() {
    let expected = [
        ("GA", ">60000 citations"),
        ("PSO", ">50000 citations"),
        ("ALO", ">300 citations"),
        ("ABC", ">4500 citations"),
        ("BFO", ">2500 citations"),
        ("BA", ">600 citations"),
        ("BeA", ">1000 citations"),
        ("BB-BC", ">600 citations"),
        ("BBO", "~2000 citations"),
        ("BSO", ">300 citations"),
        ("CSO", "~300 citations"),
        ("CSS", "~600 citations"),
        ("CRO", ">300 citations"),
        ("COA", "~500 citations"),
        ("CS", "~3000 citations"),
        ("FA", ">2000 citations"),
        ("FWA", ">300 citations"),
        ("FPA", ">500 citations"),
        ("FOA", ">600 citations"),
        ("GwSO", ">600 citations"),
        ("GSA", ">2500 citations"),
        ("GWO", ">1000 citations"),
        ("GSO", ">500 citations"),
        ("HS", "~4000 citations"),
        ("ICA", "~1500 citations"),
        ("IWO", ">750 citations"),
        ("KH", ">600 citations"),
        ("MBO", "~400 citations"),
        ("MFO", "~250 citations"),
        ("SFLA", ">1000 citations"),
        ("SCA", ">300 citations"),
        ("TLBO", ">1000 citations"),
        ("WCA", "~250 citations"),
        ("WOA", "~250 citations"),
    ];
    let recs = export_metadata();
    assert_eq!(recs.len(), expected.len());
    for (acronym, band) in expected {
        let r = recs.iter().find(|r| r.acronym == acronym).unwrap();
        assert_eq!(r.citations, band, "{acronym}");
    }
    let gwso = recs.iter().find(|r| r.acronym == "GwSO").unwrap();
    assert!(gwso.note.is_some());
}

#[test]
fn metadata_json_keys() {
    let v = serde_json::to_value(export_metadata()).unwrap();
    let first = v[0].as_object().unwrap();
    for key in ["acronym", "name", "year", "citations", "concepts", "features"] {
        assert!(first.contains_key(key), "{key}");
    }
}
