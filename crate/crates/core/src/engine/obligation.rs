//! Obligatory-rule enforcement (condition 2).
//!
//! For every obligatory rule R and every pair P of the partition: when P's
//! lexical segments instantiate R's lex under some binding and P's
//! surroundings satisfy R's four contexts under that same binding, then
//! P's surface segment must instantiate R's surf under it too. Contexts
//! are evaluated against the full lexical tapes and the full surface
//! string at P's absolute positions.
//!
//! The trigger match may bind analysis variables that are still free (a
//! lexical-form vowel variable, say); a violation found under such an
//! extension rejects the partition as a whole. That is what blocks every
//! instantiation of a syncope-eligible form at once, while the rule's own
//! licensing, whose left surface context shares variables with lex,
//! pins the affix vowel to the stem vowel in the surviving
//! partition. The extension is discarded afterwards; a passing check
//! leaks nothing into the analysis binding.

use crate::binding::Binding;
use crate::grammar::Grammar;
use crate::pattern::RuleOp;
use crate::tapes::{Cell, Tapes};

use super::matcher::{
    instantiate_vars, match_elem, match_lex_context, match_surf_context, match_surface_at,
    Direction,
};
use super::Partition;

/// A rejected partition: which rule was violated at which pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub rule_id: String,
    pub pair_index: usize,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "obligatory rule {} violated at pair {}",
            self.rule_id, self.pair_index
        )
    }
}

/// Checks condition 2 for a partition satisfying condition 1.
pub fn check_obligatory(
    g: &Grammar,
    partition: &Partition,
    tapes: &Tapes,
    surface: &[Cell],
    binding: &Binding,
) -> Result<(), Violation> {
    for rule in &g.rules {
        if rule.op != RuleOp::Obligatory {
            continue;
        }
        for (pair_index, pair) in partition.pairs.iter().enumerate() {
            // A pair licensed by a feature-carrying rule realizes a
            // measure-specific operation; the general obligation defers to
            // it (a lengthened syllable is not a syncope target).
            if g.rules[pair.rule].fs.is_some() {
                continue;
            }
            // shape: the pair's per-tape consumption must equal the widths
            // of the rule's lex elements
            let shape_ok = rule.lex.elems.len() == tapes.tape_count()
                && (0..tapes.tape_count())
                    .all(|t| pair.consumed(t) == rule.lex.elems[t].width());
            if !shape_ok {
                continue;
            }
            let mut b = binding.clone();
            let vars = instantiate_vars(rule, &mut b);

            let mut trigger = true;
            for t in 0..tapes.tape_count() {
                let elem = &rule.lex.elems[t];
                if elem.width() == 0 {
                    continue;
                }
                let cell = &tapes.cells[t][pair.lex_starts[t]];
                if !match_elem(elem, cell, &vars, &mut b) {
                    trigger = false;
                    break;
                }
            }
            if !trigger {
                continue;
            }
            if !match_lex_context(&rule.llc, tapes, &pair.lex_starts, Direction::Left, &vars, &mut b)
                || !match_lex_context(&rule.rlc, tapes, &pair.lex_ends, Direction::Right, &vars, &mut b)
                || !match_surf_context(&rule.lsc, surface, pair.surf_start, Direction::Left, &vars, &mut b)
                || !match_surf_context(&rule.rsc, surface, pair.surf_end, Direction::Right, &vars, &mut b)
            {
                continue;
            }
            // lex and contexts hold: the surface segment must satisfy surf
            let width_ok = pair.surf_end - pair.surf_start == rule.surf.len();
            let surf_ok = width_ok
                && match_surface_at(&rule.surf, surface, pair.surf_start, &vars, &mut b)
                    .is_some();
            if !surf_ok {
                return Err(Violation {
                    rule_id: rule.id.clone(),
                    pair_index,
                });
            }
        }
    }
    Ok(())
}
