//! The directed partition search and the generation-side candidate
//! enumeration.
//!
//! Partition validity, shared with the brute-force oracle:
//!   1. every pair is licensed by a rule (lex, surf, and all four contexts
//!      match under one consistent binding);
//!   2. per tape and on the surface, pair segments concatenate to the
//!      input exactly;
//!   3. every pair consumes lexical material or emits surface material;
//!   4. two consecutive pairs may not both be all-epsilon lexical
//!      (insertion rules cannot stack at one position);
//!   5. when the grammar has an affix tape, a pair consuming stem-tape
//!      cells while unconsumed affix cells remain must consume affix cells
//!      too (affixes are prefixal; the lexicon component that would order
//!      morphemes is out of scope);
//!   6. no pair violates an obligatory rule (see `obligation`).

use crate::binding::Binding;
use crate::grammar::Grammar;
use crate::tapes::{Cell, Tapes};

use super::matcher::{
    instantiate_vars, match_lex_context, match_surf_context, match_surface_at, match_tuple_at,
    Direction,
};
use super::obligation::check_obligatory;
use super::{Pair, Partition};

/// Attempts to license one pair with `rule_idx` at the given positions.
/// Returns the pair and the extended binding.
#[allow(clippy::too_many_arguments)]
fn try_apply(
    g: &Grammar,
    rule_idx: usize,
    tapes: &Tapes,
    surface: &[Cell],
    positions: &[usize],
    spos: usize,
    binding: &Binding,
    skip_rsc: bool,
) -> Option<(Pair, Binding)> {
    let rule = &g.rules[rule_idx];
    let mut b = binding.clone();
    let vars = instantiate_vars(rule, &mut b);

    let lex_ends = match_tuple_at(&rule.lex, tapes, positions, &vars, &mut b)?;
    let surf_end = match_surface_at(&rule.surf, surface, spos, &vars, &mut b)?;

    let consumed_total: usize = (0..tapes.tape_count())
        .map(|t| lex_ends[t] - positions[t])
        .sum();
    if consumed_total == 0 && surf_end == spos {
        return None;
    }

    if !affix_order_ok(g, tapes, positions, &lex_ends) {
        return None;
    }

    if !match_lex_context(&rule.llc, tapes, positions, Direction::Left, &vars, &mut b) {
        return None;
    }
    if !match_lex_context(&rule.rlc, tapes, &lex_ends, Direction::Right, &vars, &mut b) {
        return None;
    }
    if !match_surf_context(&rule.lsc, surface, spos, Direction::Left, &vars, &mut b) {
        return None;
    }
    if !skip_rsc
        && !match_surf_context(&rule.rsc, surface, surf_end, Direction::Right, &vars, &mut b)
    {
        return None;
    }

    Some((
        Pair {
            rule: rule_idx,
            lex_starts: positions.to_vec(),
            lex_ends,
            surf_start: spos,
            surf_end,
            vars,
        },
        b,
    ))
}

/// Validity check 5: prefixal affix ordering.
pub(super) fn affix_order_ok(
    g: &Grammar,
    tapes: &Tapes,
    starts: &[usize],
    ends: &[usize],
) -> bool {
    let Some(affix) = g.affix_tape() else {
        return true;
    };
    let consumed_stem = (0..tapes.tape_count()).any(|t| t != affix && ends[t] > starts[t]);
    let affix_remaining = starts[affix] < tapes.len(affix);
    let consumed_affix = ends[affix] > starts[affix];
    !(consumed_stem && affix_remaining && !consumed_affix)
}

/// All partitions of `(tapes, surface)` satisfying the validity conditions,
/// each with the binding its licensing accumulated. The surface may contain
/// unbound variable cells (generation hands candidate surfaces in here);
/// recognition passes concrete cells.
pub fn partitions(
    g: &Grammar,
    tapes: &Tapes,
    surface: &[Cell],
    binding: &Binding,
) -> Vec<(Partition, Binding)> {
    let mut out = Vec::new();
    let positions = vec![0usize; tapes.tape_count()];
    let mut pairs: Vec<Pair> = Vec::new();
    descend(
        g, tapes, surface, &positions, 0, binding, &mut pairs, false, &mut out,
    );
    out
}

#[allow(clippy::too_many_arguments)]
fn descend(
    g: &Grammar,
    tapes: &Tapes,
    surface: &[Cell],
    positions: &[usize],
    spos: usize,
    binding: &Binding,
    pairs: &mut Vec<Pair>,
    last_eps_lex: bool,
    out: &mut Vec<(Partition, Binding)>,
) {
    let done = (0..tapes.tape_count()).all(|t| positions[t] == tapes.len(t)) && spos == surface.len();
    if done {
        let partition = Partition { pairs: pairs.clone() };
        if check_obligatory(g, &partition, tapes, surface, binding).is_ok() {
            out.push((partition, binding.clone()));
        }
        return;
    }

    for rule_idx in 0..g.rules.len() {
        if g.rules[rule_idx].is_epsilon_lex() && last_eps_lex {
            continue;
        }
        if let Some((pair, b)) = try_apply(
            g, rule_idx, tapes, surface, positions, spos, binding, false,
        ) {
            let eps = pair.consumed_total() == 0;
            let new_positions = pair.lex_ends.clone();
            let new_spos = pair.surf_end;
            pairs.push(pair);
            descend(
                g, tapes, surface, &new_positions, new_spos, &b, pairs, eps, out,
            );
            pairs.pop();
        }
    }
}

/// Generation-side enumeration of candidate surfaces for the given tapes,
/// using only `enabled` rules. Right surface contexts cannot be checked
/// while the surface is still growing, so candidates over-approximate; the
/// caller verifies each through `partitions`. Emitted cells are bound
/// symbols where the licensing pinned them and shared variable cells where
/// it did not.
pub fn enumerate_candidates(
    g: &Grammar,
    tapes: &Tapes,
    enabled: &[bool],
    binding: &Binding,
) -> Vec<Vec<Cell>> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    let positions = vec![0usize; tapes.tape_count()];
    let base_vars = binding.len();
    expand(
        g, tapes, enabled, &positions, Vec::new(), binding, false, base_vars, &mut seen, &mut out,
    );
    out
}

/// Resolves a candidate's cells: bound cells become symbols, free tape
/// variables stay as shared cells (verification re-derives their value),
/// and free rule-scoped variables, unknown to the base binding,
/// are enumerated over their allowed sets.
fn materialize(
    surface: &[Cell],
    binding: &Binding,
    base_vars: usize,
    seen: &mut std::collections::HashSet<Vec<super::Token>>,
    out: &mut Vec<Vec<Cell>>,
) {
    for (i, cell) in surface.iter().enumerate() {
        if let Cell::Var(v) = cell {
            if binding.resolve(*v).is_none() && binding.repr(*v).0 as usize >= base_vars {
                for s in binding.allowed(*v).iter() {
                    let mut b = binding.clone();
                    if b.bind(*v, s) {
                        let mut next = surface.to_vec();
                        next[i] = Cell::Sym(s);
                        materialize(&next, &b, base_vars, seen, out);
                    }
                }
                return;
            }
        }
    }
    let key: Vec<super::Token> = surface
        .iter()
        .map(|c| match c.resolve(binding) {
            Some(s) => super::Token::S(s),
            None => match c {
                Cell::Var(v) => super::Token::Free(binding.repr(*v).0),
                Cell::Sym(_) => unreachable!(),
            },
        })
        .collect();
    if seen.insert(key) {
        let resolved: Vec<Cell> = surface
            .iter()
            .map(|c| match c.resolve(binding) {
                Some(s) => Cell::Sym(s),
                None => match c {
                    // normalize to the representative, which at this point
                    // is always one of the base binding's tape variables
                    Cell::Var(v) => Cell::Var(binding.repr(*v)),
                    Cell::Sym(_) => unreachable!(),
                },
            })
            .collect();
        out.push(resolved);
    }
}

#[allow(clippy::too_many_arguments)]
fn expand(
    g: &Grammar,
    tapes: &Tapes,
    enabled: &[bool],
    positions: &[usize],
    surface: Vec<Cell>,
    binding: &Binding,
    last_eps_lex: bool,
    base_vars: usize,
    seen: &mut std::collections::HashSet<Vec<super::Token>>,
    out: &mut Vec<Vec<Cell>>,
) {
    let done = (0..tapes.tape_count()).all(|t| positions[t] == tapes.len(t));
    if done {
        materialize(&surface, binding, base_vars, seen, out);
        // insertion rules may still extend the surface past the last
        // consuming pair, so keep expanding
    }

    for rule_idx in 0..g.rules.len() {
        if !enabled[rule_idx] {
            continue;
        }
        let rule = &g.rules[rule_idx];
        if rule.is_epsilon_lex() && last_eps_lex {
            continue;
        }
        let mut b = binding.clone();
        let vars = instantiate_vars(rule, &mut b);
        let Some(lex_ends) = match_tuple_at(&rule.lex, tapes, positions, &vars, &mut b) else {
            continue;
        };
        let consumed: usize = (0..tapes.tape_count()).map(|t| lex_ends[t] - positions[t]).sum();
        if consumed == 0 && rule.surf.is_empty() {
            continue;
        }
        if !affix_order_ok(g, tapes, positions, &lex_ends) {
            continue;
        }
        if !match_lex_context(&rule.llc, tapes, positions, Direction::Left, &vars, &mut b) {
            continue;
        }
        if !match_lex_context(&rule.rlc, tapes, &lex_ends, Direction::Right, &vars, &mut b) {
            continue;
        }
        if !match_surf_context(&rule.lsc, &surface, surface.len(), Direction::Left, &vars, &mut b) {
            continue;
        }
        // rsc deferred to verification
        let mut new_surface = surface.clone();
        let mut emit_ok = true;
        for elem in &rule.surf.elems {
            match elem {
                crate::pattern::PatElem::Sym(s) => new_surface.push(Cell::Sym(*s)),
                crate::pattern::PatElem::Var(i) => {
                    let v = vars[*i];
                    match b.resolve(v) {
                        Some(s) => new_surface.push(Cell::Sym(s)),
                        None => new_surface.push(Cell::Var(b.repr(v))),
                    }
                }
                _ => {
                    emit_ok = false;
                }
            }
        }
        if !emit_ok {
            continue;
        }
        let eps = consumed == 0;
        expand(
            g, tapes, enabled, &lex_ends, new_surface, &b, eps, base_vars, seen, out,
        );
    }
}
