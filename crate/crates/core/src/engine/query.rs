//! Generation and recognition queries over the partition search.

use crate::binding::Binding;
use crate::features::FeatureStructure;
use crate::grammar::Grammar;
use crate::lexicon::LexicalEntry;
use crate::symbols::Sym;
use crate::tapes::{Cell, Tapes};

use super::obligation::check_obligatory;
use super::search::{enumerate_candidates, partitions};
use super::Partition;

/// A consumed morpheme, as reported in an analysis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MorphemeRef {
    pub tape: usize,
    pub tape_name: String,
    pub form: String,
    pub category: String,
}

/// One reading of a word: its surface, the morphemes consumed, the
/// unification of all entry and fired-rule feature structures, and the
/// rule trace in pair order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Analysis {
    pub surface: Vec<Sym>,
    pub morphemes: Vec<MorphemeRef>,
    pub word_fs: FeatureStructure,
    pub trace: Vec<String>,
}

impl Analysis {
    pub fn surface_string(&self, g: &Grammar) -> String {
        g.symbols.render(&self.surface)
    }

    fn sort_key(&self, g: &Grammar) -> (String, Vec<String>, Vec<MorphemeRef>, String) {
        (
            self.surface_string(g),
            self.trace.clone(),
            self.morphemes.clone(),
            self.word_fs.render(&g.schema),
        )
    }

    fn fired(&self, rule_id: &str) -> usize {
        self.trace.iter().filter(|r| *r == rule_id).count()
    }

    fn first_fired(&self, rule_id: &str) -> Option<usize> {
        self.trace.iter().position(|r| r == rule_id)
    }
}

fn morpheme_refs(g: &Grammar, selection: &[Option<&LexicalEntry>]) -> Vec<MorphemeRef> {
    selection
        .iter()
        .enumerate()
        .filter_map(|(tape, slot)| {
            slot.map(|entry| MorphemeRef {
                tape,
                tape_name: g.tape_names[tape].clone(),
                form: entry.form_token.clone(),
                category: entry.category.clone(),
            })
        })
        .collect()
}

fn entry_product(
    g: &Grammar,
    selection: &[Option<&LexicalEntry>],
) -> Option<FeatureStructure> {
    let mut fs = FeatureStructure::top();
    for entry in selection.iter().flatten() {
        fs = fs.unify(&entry.fs, &g.schema)?;
    }
    Some(fs)
}

/// Word feature structure of one partition: entry product ⊓ every fired
/// rule's fs (⊓ the goal for generation). `None` discards the analysis.
fn word_fs(
    g: &Grammar,
    base: &FeatureStructure,
    partition: &Partition,
) -> Option<FeatureStructure> {
    let mut fs = base.clone();
    for pair in &partition.pairs {
        if let Some(rule_fs) = &g.rules[pair.rule].fs {
            fs = fs.unify(rule_fs, &g.schema)?;
        }
    }
    Some(fs)
}

/// Canonical output order: by surface string, then trace, then morphemes
/// and features; duplicates collapse.
pub fn canonical_sort(g: &Grammar, analyses: &mut Vec<Analysis>) {
    analyses.sort_by_key(|a| a.sort_key(g));
    analyses.dedup();
}

fn finish(mut analyses: Vec<Analysis>, g: &Grammar) -> Vec<Analysis> {
    canonical_sort(g, &mut analyses);
    analyses
}

/// All surface realizations of the given morpheme selection that are
/// compatible with `goal`.
///
/// A rule carrying a feature structure participates only when it unifies
/// with the goal; an enabled such rule that can fire must then fire,
/// exactly once, at the leftmost position the candidates allow. Rules
/// without feature structures stay freely optional (or obligatory, for
/// `<=>`).
pub fn generate(
    g: &Grammar,
    selection: &[Option<&LexicalEntry>],
    goal: &FeatureStructure,
) -> Vec<Analysis> {
    let Some(entries_fs) = entry_product(g, selection) else {
        return Vec::new();
    };
    let Some(base_fs) = entries_fs.unify(goal, &g.schema) else {
        return Vec::new();
    };

    let mut binding = Binding::new();
    let tapes = Tapes::from_selection(g, selection, &mut binding);
    let morphemes = morpheme_refs(g, selection);

    let enabled: Vec<bool> = g
        .rules
        .iter()
        .map(|r| match &r.fs {
            None => true,
            Some(fs) => fs.unify(goal, &g.schema).is_some(),
        })
        .collect();

    let mut analyses: Vec<Analysis> = Vec::new();
    for candidate in enumerate_candidates(g, &tapes, &enabled, &binding) {
        for (partition, b) in partitions(g, &tapes, &candidate, &binding) {
            let Some(fs) = word_fs(g, &base_fs, &partition) else {
                continue;
            };
            let trace: Vec<String> =
                partition.trace(g).iter().map(|s| s.to_string()).collect();
            for (surface, b_full) in instantiate_surface(&candidate, &b) {
                // a concrete instantiation may expose an obligation the
                // symbolic check could not decide; re-verify
                let cells: Vec<Cell> = surface.iter().copied().map(Cell::Sym).collect();
                if check_obligatory(g, &partition, &tapes, &cells, &b_full).is_err() {
                    continue;
                }
                analyses.push(Analysis {
                    surface,
                    morphemes: morphemes.clone(),
                    word_fs: fs.clone(),
                    trace: trace.clone(),
                });
            }
        }
    }

    apply_goal_gate(g, &enabled, &mut analyses);
    finish(analyses, g)
}

/// Enumerates concrete surfaces for a candidate whose cells may still hold
/// free variables, extending the binding per choice.
fn instantiate_surface(cells: &[Cell], binding: &Binding) -> Vec<(Vec<Sym>, Binding)> {
    let mut done: Vec<(Vec<Sym>, Binding)> = Vec::new();
    let mut work: Vec<(Vec<Sym>, Binding, usize)> = vec![(Vec::new(), binding.clone(), 0)];
    while let Some((mut syms, b, idx)) = work.pop() {
        if idx == cells.len() {
            done.push((syms, b));
            continue;
        }
        match cells[idx].resolve(&b) {
            Some(s) => {
                syms.push(s);
                work.push((syms, b, idx + 1));
            }
            None => {
                let Cell::Var(v) = cells[idx] else { unreachable!() };
                for s in b.allowed(v).iter() {
                    let mut b2 = b.clone();
                    if b2.bind(v, s) {
                        let mut syms2 = syms.clone();
                        syms2.push(s);
                        work.push((syms2, b2, idx + 1));
                    }
                }
            }
        }
    }
    done
}

/// The generation-side selection filter for feature-carrying rules.
fn apply_goal_gate(g: &Grammar, enabled: &[bool], analyses: &mut Vec<Analysis>) {
    for (idx, rule) in g.rules.iter().enumerate() {
        let Some(rule_fs) = &rule.fs else { continue };
        if !enabled[idx] {
            continue;
        }
        let id = rule.id.as_str();
        let fires_anywhere = analyses.iter().any(|a| a.fired(id) > 0);
        analyses.retain(|a| {
            let count = a.fired(id);
            if count > 1 {
                return false;
            }
            if count == 0
                && fires_anywhere
                && rule_fs.unify(&a.word_fs, &g.schema).is_some()
            {
                return false;
            }
            true
        });
        if let Some(min_first) = analyses
            .iter()
            .filter_map(|a| a.first_fired(id))
            .min()
        {
            analyses.retain(|a| match a.first_fired(id) {
                Some(i) => i == min_first,
                None => true,
            });
        }
    }
}

/// All analyses of a surface string: every morpheme selection (at most one
/// entry per tape, any tape may stay empty) whose tapes partition onto
/// exactly this surface. Feature structures are reported as-is, disjunctive
/// values included.
pub fn recognize(g: &Grammar, surface: &[Sym]) -> Vec<Analysis> {
    let cells: Vec<Cell> = surface.iter().copied().map(Cell::Sym).collect();
    let mut analyses = Vec::new();

    for selection in selections(g) {
        let Some(entries_fs) = entry_product(g, &selection) else {
            continue;
        };
        let mut binding = Binding::new();
        let tapes = Tapes::from_selection(g, &selection, &mut binding);
        let morphemes = morpheme_refs(g, &selection);
        for (partition, _b) in partitions(g, &tapes, &cells, &binding) {
            let Some(fs) = word_fs(g, &entries_fs, &partition) else {
                continue;
            };
            analyses.push(Analysis {
                surface: surface.to_vec(),
                morphemes: morphemes.clone(),
                word_fs: fs,
                trace: partition.trace(g).iter().map(|s| s.to_string()).collect(),
            });
        }
    }
    finish(analyses, g)
}

/// Cartesian product of per-tape entry choices (including "none").
fn selections(g: &Grammar) -> Vec<Vec<Option<&LexicalEntry>>> {
    let mut out: Vec<Vec<Option<&LexicalEntry>>> = vec![Vec::new()];
    for tape in 0..g.tape_count() {
        let mut next = Vec::new();
        let choices: Vec<Option<&LexicalEntry>> = std::iter::once(None)
            .chain(g.entries_on(tape).map(Some))
            .collect();
        for prefix in &out {
            for choice in &choices {
                let mut sel = prefix.clone();
                sel.push(*choice);
                next.push(sel);
            }
        }
        out = next;
    }
    out
}
