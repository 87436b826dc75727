//! The bundled grammar, lexicon, and golden corpus.

use thiserror::Error;

use crate::dsl;
use crate::grammar::Grammar;

/// Bundled grammar file text (`arabic.mtg`).
pub const ARABIC_MTG: &str = include_str!("../data/arabic.mtg");
/// Bundled lexicon file text (`arabic.mtl`).
pub const ARABIC_MTL: &str = include_str!("../data/arabic.mtl");
/// Bundled golden corpus (`corpus.tsv`).
pub const CORPUS_TSV: &str = include_str!("../data/corpus.tsv");

/// Parses the bundled grammar and lexicon.
pub fn bundled_grammar() -> Grammar {
    dsl::load(ARABIC_MTG, ARABIC_MTL).expect("bundled grammar parses")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseKind {
    /// Generation: the tapes plus a measure goal yield exactly `expected`.
    Gen,
    /// Recognition: `expected` analyzes with these morphemes and exactly
    /// this measure.
    Rec,
    /// Rejection: `expected` has no analyses at all.
    Reject,
}

/// One golden case of the corpus file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenCase {
    pub kind: CaseKind,
    pub measure: String,
    /// Morpheme form per tape; `None` where no morpheme is selected.
    pub tape_forms: Vec<Option<String>>,
    pub expected: String,
    pub trace: Vec<String>,
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("corpus line {0}: {1}")]
    Malformed(usize, String),
}

/// Loads the bundled golden corpus.
pub fn load_corpus() -> Result<Vec<GoldenCase>, CorpusError> {
    parse_corpus(CORPUS_TSV)
}

/// Parses corpus text: tab-separated `direction measure tapes expected
/// trace`, `#` comments, tapes pipe-separated with empty slots for
/// unselected tapes, trace `-` for rejection cases.
pub fn parse_corpus(text: &str) -> Result<Vec<GoldenCase>, CorpusError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim_end();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 5 {
            return Err(CorpusError::Malformed(
                lineno,
                format!("expected 5 tab-separated fields, found {}", fields.len()),
            ));
        }
        let kind = match fields[0] {
            "gen" => CaseKind::Gen,
            "rec" => CaseKind::Rec,
            "reject" => CaseKind::Reject,
            other => {
                return Err(CorpusError::Malformed(
                    lineno,
                    format!("unknown direction `{other}`"),
                ))
            }
        };
        let tape_forms: Vec<Option<String>> = fields[2]
            .split('|')
            .map(|f| {
                if f.is_empty() {
                    None
                } else {
                    Some(f.to_string())
                }
            })
            .collect();
        let trace: Vec<String> = if fields[4] == "-" {
            Vec::new()
        } else {
            fields[4].split(',').map(|s| s.to_string()).collect()
        };
        out.push(GoldenCase {
            kind,
            measure: fields[1].to_string(),
            tape_forms,
            expected: fields[3].to_string(),
            trace,
        });
    }
    Ok(out)
}
