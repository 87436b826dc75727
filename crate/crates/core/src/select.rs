//! Morpheme selection by form token, filtered by goal compatibility.

use thiserror::Error;

use crate::features::FeatureStructure;
use crate::grammar::Grammar;
use crate::lexicon::LexicalEntry;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SelectError {
    #[error("no morpheme `{token}` on tape {tape_name}")]
    UnknownMorpheme { token: String, tape_name: String },
    #[error("morpheme `{token}` does not unify with the requested features")]
    Incompatible { token: String },
}

/// Resolves one optional form token per tape to lexicon entries whose
/// feature structures unify with `goal`. When several entries share a
/// token (homographs marked for different feature sets), the goal decides;
/// if more than one stays compatible, each combination is returned.
pub fn select_entries<'g>(
    g: &'g Grammar,
    tokens: &[Option<&str>],
    goal: &FeatureStructure,
) -> Result<Vec<Vec<Option<&'g LexicalEntry>>>, SelectError> {
    let mut per_tape: Vec<Vec<Option<&LexicalEntry>>> = Vec::new();
    for (tape, slot) in tokens.iter().enumerate() {
        match slot {
            None => per_tape.push(vec![None]),
            Some(token) => {
                let named: Vec<&LexicalEntry> = g
                    .entries_on(tape)
                    .filter(|e| e.form_token == *token)
                    .collect();
                if named.is_empty() {
                    return Err(SelectError::UnknownMorpheme {
                        token: token.to_string(),
                        tape_name: g.tape_names[tape].clone(),
                    });
                }
                let compatible: Vec<Option<&LexicalEntry>> = named
                    .iter()
                    .filter(|e| e.fs.unify(goal, &g.schema).is_some())
                    .map(|e| Some(*e))
                    .collect();
                if compatible.is_empty() {
                    return Err(SelectError::Incompatible {
                        token: token.to_string(),
                    });
                }
                per_tape.push(compatible);
            }
        }
    }
    // cartesian product over tapes
    let mut out: Vec<Vec<Option<&LexicalEntry>>> = vec![Vec::new()];
    for choices in per_tape {
        let mut next = Vec::new();
        for prefix in &out {
            for c in &choices {
                let mut sel = prefix.clone();
                sel.push(*c);
                next.push(sel);
            }
        }
        out = next;
    }
    Ok(out)
}
