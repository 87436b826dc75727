//! Lexical entries: a morpheme form on one tape, with category and
//! feature structure.

use crate::binding::VarSpec;
use crate::features::FeatureStructure;
use crate::symbols::Sym;

/// One element of a lexical form: a concrete symbol or a variable (the `V`
/// of forms like `'V` and `stV`, which surfaces with whatever vowel the
/// rules pin down).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormElem {
    Sym(Sym),
    Var(VarSpec),
}

/// A morpheme: its tape (0-based), form, category, and feature structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexicalEntry {
    pub tape: usize,
    pub form: Vec<FormElem>,
    pub category: String,
    pub fs: FeatureStructure,
    /// The form as written in the lexicon file, kept for display and for
    /// selecting entries by token.
    pub form_token: String,
}
