//! Alphabets and symbol classes.
//!
//! Every symbol used in rules, lexicon entries, or input strings must be
//! declared exactly once in the grammar's alphabet. The token `0` is the
//! reserved epsilon marker and can never be declared as a symbol or placed
//! in a class. Classes are named sets of symbols; a class name doubles as
//! the constraint for variables whose base letter matches it (`C1` and `C3`
//! both range over the class named `C`).

use std::collections::HashMap;
use std::fmt;

/// Reserved epsilon token in the external DSL.
pub const EPSILON_TOKEN: &str = "0";

/// Reserved wildcard token (empty context / don't-care tuple element).
pub const WILDCARD_TOKEN: &str = "*";

/// Interned symbol identifier; index into the grammar's [`SymbolTable`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sym(pub u16);

/// A set of symbols, stored as a bitmask over the symbol table.
///
/// Tables are capped at 64 symbols, which is plenty for a transliterated
/// phonology plus structural markers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SymSet(u64);

impl SymSet {
    pub const EMPTY: SymSet = SymSet(0);

    pub fn singleton(s: Sym) -> Self {
        SymSet(1u64 << s.0)
    }

    pub fn contains(&self, s: Sym) -> bool {
        self.0 & (1u64 << s.0) != 0
    }

    pub fn insert(&mut self, s: Sym) {
        self.0 |= 1u64 << s.0;
    }

    pub fn remove(&mut self, s: Sym) {
        self.0 &= !(1u64 << s.0);
    }

    pub fn intersect(&self, other: &SymSet) -> SymSet {
        SymSet(self.0 & other.0)
    }

    pub fn minus(&self, other: &SymSet) -> SymSet {
        SymSet(self.0 & !other.0)
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(&self) -> impl Iterator<Item = Sym> + '_ {
        (0..64u16).map(Sym).filter(move |s| self.contains(*s))
    }

    /// The sole member, if the set is a singleton.
    pub fn only(&self) -> Option<Sym> {
        if self.len() == 1 {
            self.iter().next()
        } else {
            None
        }
    }
}

/// A named, non-empty set of declared symbols.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolClass {
    pub name: String,
    pub members: SymSet,
}

/// The declared alphabet plus its classes.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SymbolTable {
    names: Vec<String>,
    index: HashMap<String, Sym>,
    classes: Vec<SymbolClass>,
    class_index: HashMap<String, usize>,
}

impl SymbolTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Declares a symbol. Fails on duplicates, on the reserved tokens, and
    /// when the 64-symbol cap is hit.
    pub fn declare(&mut self, token: &str) -> Result<Sym, String> {
        if token == EPSILON_TOKEN || token == WILDCARD_TOKEN {
            return Err(format!("token `{token}` is reserved and cannot be declared"));
        }
        if self.index.contains_key(token) {
            return Err(format!("symbol `{token}` declared more than once"));
        }
        if self.names.len() >= 64 {
            return Err("alphabet exceeds 64 symbols".to_string());
        }
        let id = Sym(self.names.len() as u16);
        self.names.push(token.to_string());
        self.index.insert(token.to_string(), id);
        Ok(id)
    }

    pub fn lookup(&self, token: &str) -> Option<Sym> {
        self.index.get(token).copied()
    }

    pub fn name(&self, s: Sym) -> &str {
        &self.names[s.0 as usize]
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// All declared symbols.
    pub fn universe(&self) -> SymSet {
        let mut set = SymSet::EMPTY;
        for i in 0..self.names.len() {
            set.insert(Sym(i as u16));
        }
        set
    }

    /// Declares a class. Class names must not collide with symbol names or
    /// other classes, and the member set must be non-empty.
    pub fn declare_class(&mut self, name: &str, members: SymSet) -> Result<usize, String> {
        if self.index.contains_key(name) {
            return Err(format!("class name `{name}` collides with a symbol"));
        }
        if self.class_index.contains_key(name) {
            return Err(format!("class `{name}` declared more than once"));
        }
        if members.is_empty() {
            return Err(format!("class `{name}` is empty"));
        }
        let idx = self.classes.len();
        self.classes.push(SymbolClass {
            name: name.to_string(),
            members,
        });
        self.class_index.insert(name.to_string(), idx);
        Ok(idx)
    }

    pub fn class(&self, name: &str) -> Option<&SymbolClass> {
        self.class_index.get(name).map(|&i| &self.classes[i])
    }

    pub fn classes(&self) -> &[SymbolClass] {
        &self.classes
    }

    /// Renders a symbol sequence with no separators (surface strings).
    pub fn render(&self, syms: &[Sym]) -> String {
        syms.iter().map(|s| self.name(*s)).collect()
    }
}

impl fmt::Display for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}
