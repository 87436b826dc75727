//! Exhaustive-enumeration oracle for the partition search.
//!
//! Instead of driving the search by rule matching, this enumerates every
//! segmentation of the input outright, every per-pair segment length
//! combination up to a bound, and keeps a segmentation exactly when each
//! segment is licensed by some rule and the whole passes the same validity
//! conditions the engine enforces. On small inputs its result set must
//! equal `partitions`; the two share the matching primitives but nothing
//! of the search strategy.

use crate::binding::Binding;
use crate::grammar::Grammar;
use crate::tapes::{Cell, Tapes};

use super::matcher::{
    instantiate_vars, match_lex_context, match_surf_context, match_surface_at, match_tuple_at,
    Direction,
};
use super::obligation::check_obligatory;
use super::search::affix_order_ok;
use super::{EngineError, Pair, Partition, BRUTE_FORCE_MAX_LEN};

/// Enumerates all valid partitions of `(tapes, surface)` with per-pair
/// segment lengths bounded by `max_seg` (default: the longest lex or surf
/// segment any rule mentions). Inputs longer than
/// [`BRUTE_FORCE_MAX_LEN`](super::BRUTE_FORCE_MAX_LEN) per tape are
/// rejected.
pub fn brute_force_partitions(
    g: &Grammar,
    tapes: &Tapes,
    surface: &[Cell],
    max_seg: Option<usize>,
    binding: &Binding,
) -> Result<Vec<(Partition, Binding)>, EngineError> {
    if tapes.max_len() > BRUTE_FORCE_MAX_LEN || surface.len() > BRUTE_FORCE_MAX_LEN {
        return Err(EngineError::BoundExceeded(BRUTE_FORCE_MAX_LEN));
    }
    let bound = max_seg.unwrap_or_else(|| g.max_surf_width().max(1));
    let mut out = Vec::new();
    let positions = vec![0usize; tapes.tape_count()];
    let mut pairs = Vec::new();
    enumerate(
        g, tapes, surface, &positions, 0, bound, binding, &mut pairs, &mut out,
    );
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn enumerate(
    g: &Grammar,
    tapes: &Tapes,
    surface: &[Cell],
    positions: &[usize],
    spos: usize,
    bound: usize,
    binding: &Binding,
    pairs: &mut Vec<Pair>,
    out: &mut Vec<(Partition, Binding)>,
) {
    let tapes_done = (0..tapes.tape_count()).all(|t| positions[t] == tapes.len(t));
    if tapes_done && spos == surface.len() {
        let partition = Partition { pairs: pairs.clone() };
        if partition_valid(g, tapes, &partition)
            && check_obligatory(g, &partition, tapes, surface, binding).is_ok()
        {
            out.push((partition, binding.clone()));
        }
        return;
    }

    // every combination of per-tape and surface segment lengths
    let n = tapes.tape_count();
    let mut lens = vec![0usize; n + 1];
    loop {
        let all_zero = lens.iter().all(|&l| l == 0);
        let fits = (0..n).all(|t| positions[t] + lens[t] <= tapes.len(t))
            && spos + lens[n] <= surface.len();
        if !all_zero && fits {
            let ends: Vec<usize> = (0..n).map(|t| positions[t] + lens[t]).collect();
            let surf_end = spos + lens[n];
            for rule_idx in 0..g.rules.len() {
                if let Some(b) = licenses(
                    g, rule_idx, tapes, surface, positions, &ends, spos, surf_end, binding,
                ) {
                    pairs.push(Pair {
                        rule: rule_idx,
                        lex_starts: positions.to_vec(),
                        lex_ends: ends.clone(),
                        surf_start: spos,
                        surf_end,
                        vars: Vec::new(),
                    });
                    enumerate(g, tapes, surface, &ends, surf_end, bound, &b, pairs, out);
                    pairs.pop();
                }
            }
        }
        // odometer over segment lengths
        let mut i = 0;
        loop {
            if i > n {
                return;
            }
            lens[i] += 1;
            if lens[i] <= bound {
                break;
            }
            lens[i] = 0;
            i += 1;
        }
    }
}

/// Does `rule_idx` license exactly this segmentation slice?
#[allow(clippy::too_many_arguments)]
fn licenses(
    g: &Grammar,
    rule_idx: usize,
    tapes: &Tapes,
    surface: &[Cell],
    starts: &[usize],
    ends: &[usize],
    surf_start: usize,
    surf_end: usize,
    binding: &Binding,
) -> Option<Binding> {
    let rule = &g.rules[rule_idx];
    if rule.lex.elems.len() != tapes.tape_count() {
        return None;
    }
    // the rule must consume exactly the chosen segment widths
    for t in 0..tapes.tape_count() {
        if rule.lex.elems[t].width() != ends[t] - starts[t] {
            return None;
        }
    }
    if rule.surf.len() != surf_end - surf_start {
        return None;
    }
    let mut b = binding.clone();
    let vars = instantiate_vars(rule, &mut b);
    let lex_ends = match_tuple_at(&rule.lex, tapes, starts, &vars, &mut b)?;
    debug_assert_eq!(&lex_ends, ends);
    match_surface_at(&rule.surf, surface, surf_start, &vars, &mut b)?;
    if !match_lex_context(&rule.llc, tapes, starts, Direction::Left, &vars, &mut b)
        || !match_lex_context(&rule.rlc, tapes, ends, Direction::Right, &vars, &mut b)
        || !match_surf_context(&rule.lsc, surface, surf_start, Direction::Left, &vars, &mut b)
        || !match_surf_context(&rule.rsc, surface, surf_end, Direction::Right, &vars, &mut b)
    {
        return None;
    }
    Some(b)
}

/// The non-obligation validity conditions, checked flat over a complete
/// segmentation (the engine enforces these during its search instead).
fn partition_valid(g: &Grammar, tapes: &Tapes, partition: &Partition) -> bool {
    let mut prev_eps = false;
    for pair in &partition.pairs {
        let consumed = pair.consumed_total();
        if consumed == 0 && pair.surf_end == pair.surf_start {
            return false;
        }
        let eps = consumed == 0;
        if eps && prev_eps {
            return false;
        }
        prev_eps = eps;
        if !affix_order_ok(g, tapes, &pair.lex_starts, &pair.lex_ends) {
            return false;
        }
    }
    true
}
