use serde::Serialize;

use super::{data, manifest_of, ComponentManifest};
use crate::algorithms::AlgorithmId;

/// One exported metadata row. Field names are the stable export keys.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MetadataRecord {
    pub acronym: String,
    pub name: String,
    pub year: u16,
    /// Citation band, stored verbatim (">4500 citations", "~3000 citations").
    pub citations: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub concepts: Vec<String>,
    pub features: Vec<String>,
}

/// One record per algorithm, in roster order.
pub fn export_metadata() -> Vec<MetadataRecord> {
    data::METADATA
        .iter()
        .map(|row| {
            let m = manifest_of(row.id);
            MetadataRecord {
                acronym: row.id.to_string(),
                name: row.name.to_string(),
                year: row.year,
                citations: row.citations.to_string(),
                note: row.note.map(str::to_string),
                concepts: m.concepts.iter().map(|t| t.to_string()).collect(),
                features: m.features.iter().map(|t| t.to_string()).collect(),
            }
        })
        .collect()
}

fn write_csv(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

/// CSV with columns acronym, name, year, citations, note, concepts,
/// features. Tag lists are `;`-separated.
pub fn metadata_csv() -> String {
    write_csv(
        &[
            "acronym",
            "name",
            "year",
            "citations",
            "note",
            "concepts",
            "features",
        ],
        export_metadata().into_iter().map(|r| {
            vec![
                r.acronym,
                r.name,
                r.year.to_string(),
                r.citations,
                r.note.unwrap_or_default(),
                r.concepts.join(";"),
                r.features.join(";"),
            ]
        }),
    )
}

#[derive(Serialize)]
struct ManifestRecord {
    acronym: String,
    concepts: Vec<String>,
    features: Vec<String>,
    boundary: &'static str,
}

impl From<&ComponentManifest> for ManifestRecord {
    fn from(m: &ComponentManifest) -> Self {
        Self {
            acronym: m.id.to_string(),
            concepts: m.concepts.iter().map(|t| t.to_string()).collect(),
            features: m.features.iter().map(|t| t.to_string()).collect(),
            boundary: m.boundary,
        }
    }
}

/// CSV with columns acronym, concepts, features, boundary.
pub fn manifests_csv(ids: &[AlgorithmId]) -> String {
    write_csv(
        &["acronym", "concepts", "features", "boundary"],
        ids.iter().map(|id| {
            let r = ManifestRecord::from(&manifest_of(*id));
            vec![
                r.acronym,
                r.concepts.join(";"),
                r.features.join(";"),
                r.boundary.to_string(),
            ]
        }),
    )
}

/// JSON array of manifests with the same keys as [`manifests_csv`], tag
/// lists as arrays.
pub fn manifests_json(ids: &[AlgorithmId]) -> serde_json::Value {
    let records: Vec<ManifestRecord> = ids
        .iter()
        .map(|id| ManifestRecord::from(&manifest_of(*id)))
        .collect();
    serde_json::to_value(records).expect("plain records serialize")
}
