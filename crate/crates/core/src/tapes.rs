//! Lexical tape configurations.
//!
//! A tape configuration holds one symbol sequence per lexical tape. Cells
//! are either concrete symbols or variables: a lexical form like `'V`
//! contributes an unbound vowel variable that the rules pin down during
//! matching. When a morpheme boundary symbol (`+`) is declared, tape
//! assembly appends it after every selected morpheme's form.

use crate::binding::{Binding, VarId};
use crate::grammar::Grammar;
use crate::lexicon::{FormElem, LexicalEntry};
use crate::symbols::Sym;

/// One tape cell: a concrete symbol or a (possibly unbound) variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cell {
    Sym(Sym),
    Var(VarId),
}

impl Cell {
    pub fn resolve(&self, binding: &Binding) -> Option<Sym> {
        match self {
            Cell::Sym(s) => Some(*s),
            Cell::Var(v) => binding.resolve(*v),
        }
    }
}

/// The n lexical tapes of one query.
#[derive(Debug, Clone, Default)]
pub struct Tapes {
    pub cells: Vec<Vec<Cell>>,
}

impl Tapes {
    /// Assembles tapes from one optional entry per tape, interning form
    /// variables into `binding`.
    pub fn from_selection(
        g: &Grammar,
        selection: &[Option<&LexicalEntry>],
        binding: &mut Binding,
    ) -> Tapes {
        let boundary = g.boundary();
        let mut cells = vec![Vec::new(); g.tape_count()];
        for (tape, slot) in selection.iter().enumerate() {
            if let Some(entry) = slot {
                for elem in &entry.form {
                    match elem {
                        FormElem::Sym(s) => cells[tape].push(Cell::Sym(*s)),
                        FormElem::Var(spec) => cells[tape].push(Cell::Var(binding.fresh(spec))),
                    }
                }
                if let Some(b) = boundary {
                    cells[tape].push(Cell::Sym(b));
                }
            }
        }
        Tapes { cells }
    }

    /// Tapes of concrete symbols, for direct queries and tests.
    pub fn from_syms(tapes: Vec<Vec<Sym>>) -> Tapes {
        Tapes {
            cells: tapes
                .into_iter()
                .map(|t| t.into_iter().map(Cell::Sym).collect())
                .collect(),
        }
    }

    pub fn tape_count(&self) -> usize {
        self.cells.len()
    }

    pub fn len(&self, tape: usize) -> usize {
        self.cells[tape].len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.iter().all(|t| t.is_empty())
    }

    pub fn max_len(&self) -> usize {
        self.cells.iter().map(|t| t.len()).max().unwrap_or(0)
    }
}

/// Splits a surface string into declared symbols by longest match.
pub fn parse_surface(g: &Grammar, text: &str) -> Result<Vec<Sym>, String> {
    let mut out = Vec::new();
    let mut rest = text;
    'outer: while !rest.is_empty() {
        let mut len = rest.len().min(8);
        while len > 0 {
            if rest.is_char_boundary(len) {
                if let Some(s) = g.symbols.lookup(&rest[..len]) {
                    out.push(s);
                    rest = &rest[len..];
                    continue 'outer;
                }
            }
            len -= 1;
        }
        return Err(format!("undeclared symbol at `{rest}`"));
    }
    Ok(out)
}
