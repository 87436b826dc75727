//! Element and context matching under a binding.

use crate::binding::{Binding, VarId};
use crate::pattern::{LexContext, PatElem, Rule, SurfContext, SurfacePattern, TuplePattern};
use crate::tapes::{Cell, Tapes};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Left,
    Right,
}

/// Instantiates a rule's variables as fresh instances in `binding`.
pub fn instantiate_vars(rule: &Rule, binding: &mut Binding) -> Vec<VarId> {
    rule.vars.iter().map(|spec| binding.fresh(spec)).collect()
}

/// Matches one width-1 pattern element against one cell.
pub fn match_elem(elem: &PatElem, cell: &Cell, vars: &[VarId], binding: &mut Binding) -> bool {
    match (elem, cell) {
        (PatElem::Any, _) => true,
        (PatElem::Sym(s), Cell::Sym(c)) => s == c,
        (PatElem::Sym(s), Cell::Var(v)) => binding.bind(*v, *s),
        (PatElem::Var(i), Cell::Sym(c)) => binding.bind(vars[*i], *c),
        (PatElem::Var(i), Cell::Var(v)) => binding.unify_vars(vars[*i], *v),
        (PatElem::Epsilon, _) => unreachable!("epsilon consumes no cell"),
    }
}

/// Matches a surface pattern against `cells[start..]`, returning the end
/// position on success.
pub fn match_surface_at(
    pattern: &SurfacePattern,
    cells: &[Cell],
    start: usize,
    vars: &[VarId],
    binding: &mut Binding,
) -> Option<usize> {
    if start + pattern.len() > cells.len() {
        return None;
    }
    for (i, elem) in pattern.elems.iter().enumerate() {
        if !match_elem(elem, &cells[start + i], vars, binding) {
            return None;
        }
    }
    Some(start + pattern.len())
}

/// Matches a lex tuple at the given per-tape positions, returning the new
/// positions on success.
pub fn match_tuple_at(
    tuple: &TuplePattern,
    tapes: &Tapes,
    positions: &[usize],
    vars: &[VarId],
    binding: &mut Binding,
) -> Option<Vec<usize>> {
    if tuple.elems.len() != tapes.tape_count() {
        return None;
    }
    let mut ends = positions.to_vec();
    for (t, elem) in tuple.elems.iter().enumerate() {
        if elem.width() == 0 {
            continue;
        }
        let pos = ends[t];
        if pos >= tapes.len(t) {
            return None;
        }
        if !match_elem(elem, &tapes.cells[t][pos], vars, binding) {
            return None;
        }
        ends[t] = pos + 1;
    }
    Some(ends)
}

/// Matches a lexical context against the tapes at `positions`. For
/// `Direction::Left` the tuple sequence sits immediately to the left of
/// the positions (last tuple adjacent); for `Direction::Right` it sits
/// immediately to the right (first tuple adjacent). The wildcard context
/// is always satisfied and consumes nothing. Per-tape cursors advance
/// independently, so an epsilon element leaves its tape unconstrained.
pub fn match_lex_context(
    ctx: &LexContext,
    tapes: &Tapes,
    positions: &[usize],
    direction: Direction,
    vars: &[VarId],
    binding: &mut Binding,
) -> bool {
    let tuples = match ctx {
        LexContext::Always => return true,
        LexContext::Tuples(ts) => ts,
    };
    if tuples.iter().any(|t| t.elems.len() != tapes.tape_count()) {
        return false;
    }
    match direction {
        Direction::Right => {
            let mut cursors = positions.to_vec();
            for tuple in tuples {
                for (t, elem) in tuple.elems.iter().enumerate() {
                    if elem.width() == 0 {
                        continue;
                    }
                    if cursors[t] >= tapes.len(t) {
                        return false;
                    }
                    if !match_elem(elem, &tapes.cells[t][cursors[t]], vars, binding) {
                        return false;
                    }
                    cursors[t] += 1;
                }
            }
            true
        }
        Direction::Left => {
            let mut cursors = positions.to_vec();
            for tuple in tuples.iter().rev() {
                for (t, elem) in tuple.elems.iter().enumerate() {
                    if elem.width() == 0 {
                        continue;
                    }
                    if cursors[t] == 0 {
                        return false;
                    }
                    cursors[t] -= 1;
                    if !match_elem(elem, &tapes.cells[t][cursors[t]], vars, binding) {
                        return false;
                    }
                }
            }
            true
        }
    }
}

/// Matches a surface context against `cells` at `pos`: leftward the
/// pattern ends at `pos`, rightward it starts there.
pub fn match_surf_context(
    ctx: &SurfContext,
    cells: &[Cell],
    pos: usize,
    direction: Direction,
    vars: &[VarId],
    binding: &mut Binding,
) -> bool {
    let pattern = match ctx {
        SurfContext::Always => return true,
        SurfContext::Pattern(p) => p,
    };
    match direction {
        Direction::Right => match_surface_at(pattern, cells, pos, vars, binding).is_some(),
        Direction::Left => {
            if pos < pattern.len() {
                return false;
            }
            match_surface_at(pattern, cells, pos - pattern.len(), vars, binding).is_some()
        }
    }
}
