//! The two-level interpreter.
//!
//! Given lexical tapes and a surface string, the engine searches for
//! partitions of the two into rule-licensed pairs. A lexical string maps
//! to a surface string iff (1) the two can be partitioned into pairs of
//! lexical-surface subsequences, each licensed by a rule, and (2) no
//! partition violates an obligatory rule. Generation enumerates candidate
//! surfaces from the tapes; recognition enumerates morpheme selections for
//! a given surface. Both directions share the partition search, and an
//! exhaustive brute-force enumeration of segmentations doubles as a
//! testing oracle for it.

mod brute;
mod matcher;
mod obligation;
mod query;
mod search;

pub use brute::brute_force_partitions;
pub use matcher::{match_lex_context, match_surf_context, Direction};
pub use obligation::{check_obligatory, Violation};
pub use query::{canonical_sort, generate, recognize, Analysis, MorphemeRef};
pub use search::partitions;

use thiserror::Error;

use crate::binding::Binding;
use crate::grammar::Grammar;
use crate::symbols::Sym;
use crate::tapes::Tapes;

/// Hard cap on per-tape input length for the brute-force oracle.
pub const BRUTE_FORCE_MAX_LEN: usize = 12;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EngineError {
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("input exceeds {0} symbols per tape")]
    BoundExceeded(usize),
}

/// One rule-licensed slice of the partition: per-tape lexical spans plus a
/// surface span, with the rule application's variable instances.
#[derive(Debug, Clone)]
pub struct Pair {
    /// Index into `grammar.rules`.
    pub rule: usize,
    pub lex_starts: Vec<usize>,
    pub lex_ends: Vec<usize>,
    pub surf_start: usize,
    pub surf_end: usize,
    /// Variable instances for this application, indexed like `rule.vars`.
    pub vars: Vec<crate::binding::VarId>,
}

impl Pair {
    pub fn consumed(&self, tape: usize) -> usize {
        self.lex_ends[tape] - self.lex_starts[tape]
    }

    pub fn consumed_total(&self) -> usize {
        (0..self.lex_starts.len()).map(|t| self.consumed(t)).sum()
    }
}

/// An ordered sequence of pairs covering the whole input.
#[derive(Debug, Clone, Default)]
pub struct Partition {
    pub pairs: Vec<Pair>,
}

impl Partition {
    pub fn trace<'g>(&self, g: &'g Grammar) -> Vec<&'g str> {
        self.pairs.iter().map(|p| g.rules[p.rule].id.as_str()).collect()
    }
}

/// A cell of a resolved partition: a concrete symbol or a canonical
/// free-variable ordinal (numbered by first occurrence).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Token {
    S(Sym),
    Free(u32),
}

/// A partition resolved against its binding, in a canonical form that
/// supports set comparison across search strategies.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ResolvedPartition {
    pub pairs: Vec<(String, Vec<Vec<Token>>, Vec<Token>)>,
}

/// Canonicalizes a partition: every cell resolved under `binding`, free
/// variables numbered by first occurrence.
pub fn resolve_partition(
    g: &Grammar,
    partition: &Partition,
    tapes: &Tapes,
    surface: &[crate::tapes::Cell],
    binding: &Binding,
) -> ResolvedPartition {
    let mut free_order: Vec<u32> = Vec::new();
    let mut token = |cell: &crate::tapes::Cell| -> Token {
        match cell.resolve(binding) {
            Some(s) => Token::S(s),
            None => {
                let rep = match cell {
                    crate::tapes::Cell::Var(v) => binding.repr(*v).0,
                    crate::tapes::Cell::Sym(_) => unreachable!(),
                };
                let ord = match free_order.iter().position(|&r| r == rep) {
                    Some(i) => i,
                    None => {
                        free_order.push(rep);
                        free_order.len() - 1
                    }
                };
                Token::Free(ord as u32)
            }
        }
    };
    let pairs = partition
        .pairs
        .iter()
        .map(|p| {
            let lex: Vec<Vec<Token>> = (0..tapes.tape_count())
                .map(|t| {
                    tapes.cells[t][p.lex_starts[t]..p.lex_ends[t]]
                        .iter()
                        .map(&mut token)
                        .collect()
                })
                .collect();
            let surf: Vec<Token> = surface[p.surf_start..p.surf_end].iter().map(&mut token).collect();
            (g.rules[p.rule].id.clone(), lex, surf)
        })
        .collect();
    ResolvedPartition { pairs }
}
