//! Rule patterns: surface patterns, lexical tuple patterns, contexts, and
//! the two-level rule itself.
//!
//! A rule relates a lexical form (an n-tuple, one element per lexical tape)
//! to a surface form inside four contexts:
//!
//! ```text
//!   llc   lex   rlc        (lexical side, n-tuples)
//!   lsc   surf  rsc        (surface side, symbol strings)
//! ```
//!
//! `*` as an entire context is the empty context, always satisfied. Inside a
//! context tuple, `*` matches any single symbol and `0` constrains nothing
//! on that tape. The optional operator (`=>`) lets lex surface as surf in
//! the given context; the obligatory operator (`<=>`) additionally demands
//! that wherever lex occurs in the given context the surface must satisfy
//! surf.

use std::collections::HashMap;

use crate::binding::VarSpec;
use crate::features::FeatureStructure;
use crate::symbols::Sym;

/// One element of a pattern. `Var` indexes the owning rule's variable
/// table; repeated uses of one variable inside a rule share the index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PatElem {
    Sym(Sym),
    Var(usize),
    Epsilon,
    /// `*` inside a context tuple: any single symbol, unconstrained.
    Any,
}

impl PatElem {
    /// Symbols consumed on the tape this element matches against.
    pub fn width(&self) -> usize {
        match self {
            PatElem::Epsilon => 0,
            _ => 1,
        }
    }
}

/// A per-tape tuple of elements; arity equals the grammar's tape count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TuplePattern {
    pub elems: Vec<PatElem>,
}

impl TuplePattern {
    pub fn is_all_epsilon(&self) -> bool {
        self.elems.iter().all(|e| matches!(e, PatElem::Epsilon))
    }
}

/// A surface segment pattern: a (possibly empty) sequence of symbols and
/// variables. The empty pattern is the epsilon surface segment.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SurfacePattern {
    pub elems: Vec<PatElem>,
}

impl SurfacePattern {
    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }
}

/// A lexical context: `*` (always satisfied) or a sequence of tuples read
/// outward-in on the left side and inward-out on the right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LexContext {
    Always,
    Tuples(Vec<TuplePattern>),
}

/// A surface context: `*` or a fixed symbol/variable sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SurfContext {
    Always,
    Pattern(SurfacePattern),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleOp {
    /// `=>`: lex may surface as surf in the given context.
    Optional,
    /// `<=>`: additionally, when lex appears in the given context the
    /// surface must satisfy surf.
    Obligatory,
}

/// A multi-tape two-level rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    pub id: String,
    pub op: RuleOp,
    pub lsc: SurfContext,
    pub surf: SurfacePattern,
    pub rsc: SurfContext,
    pub llc: LexContext,
    pub lex: TuplePattern,
    pub rlc: LexContext,
    pub fs: Option<FeatureStructure>,
    /// Rule-scoped variables; every application instantiates them fresh.
    pub vars: Vec<VarSpec>,
    pub var_names: HashMap<String, usize>,
    /// `where: X != s` constraints, kept for printing (they are already
    /// folded into the specs' allowed sets).
    pub inequalities: Vec<(String, Sym)>,
}

impl Rule {
    /// Maximum number of surface symbols one application can emit.
    pub fn surf_width(&self) -> usize {
        self.surf.len()
    }

    /// True when lex consumes nothing on any tape (an insertion rule).
    pub fn is_epsilon_lex(&self) -> bool {
        self.lex.is_all_epsilon()
    }
}
