//! The documented JSON shape for analyses:
//! `{surface, morphemes:[{tape,form,category}], features:{attr:[values]}, trace:[ruleId]}`.
//!
//! Key order is canonical (struct order for analyses, alphabetical for
//! the features map), analyses are sorted by surface then trace, and
//! serialization is compact; parsing and re-serializing is
//! byte-identical.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::engine::Analysis;
use crate::grammar::Grammar;

// Fields are declared alphabetically so that re-serializing through any
// JSON representation (including serde_json::Value, whose maps sort keys)
// reproduces the bytes exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphemeJson {
    pub category: String,
    pub form: String,
    pub tape: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisJson {
    pub features: BTreeMap<String, Vec<String>>,
    pub morphemes: Vec<MorphemeJson>,
    pub surface: String,
    pub trace: Vec<String>,
}

impl AnalysisJson {
    pub fn from_analysis(g: &Grammar, a: &Analysis) -> Self {
        AnalysisJson {
            features: a.word_fs.to_pairs(&g.schema).into_iter().collect(),
            morphemes: a
                .morphemes
                .iter()
                .map(|m| MorphemeJson {
                    category: m.category.clone(),
                    form: m.form.clone(),
                    tape: m.tape_name.clone(),
                })
                .collect(),
            surface: a.surface_string(g),
            trace: a.trace.clone(),
        }
    }
}

/// Serializes analyses in canonical order as a JSON array.
pub fn analyses_to_json(g: &Grammar, analyses: &[Analysis]) -> String {
    let items: Vec<AnalysisJson> = analyses
        .iter()
        .map(|a| AnalysisJson::from_analysis(g, a))
        .collect();
    serde_json::to_string(&items).expect("analysis serialization cannot fail")
}
