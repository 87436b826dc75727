//! Variables and consistent bindings.
//!
//! Variables carry an optional class constraint plus a set of excluded
//! symbols; a variable with both denotes (class minus exclusions), and a
//! variable with exclusions only ranges over every declared symbol except
//! the excluded ones (the `X != +` case).
//!
//! A [`Binding`] owns every variable instance live in one query: variables
//! from lexical entry forms are interned once per analysis, and each rule
//! application gets fresh instances of the rule's variables. Repeated use
//! of one variable therefore unifies, while distinct applications of the
//! same rule do not interfere. Variable-variable links are supported
//! (rule variables unify with unbound lexical-form variables); resolution
//! follows links to a representative.

use crate::symbols::{Sym, SymSet, SymbolTable};

/// Index of a variable instance inside a [`Binding`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VarId(pub u32);

/// Static description of a variable as written in a rule or lexical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarSpec {
    pub name: String,
    /// Allowed symbols after applying class and exclusion constraints.
    pub allowed: SymSet,
}

impl VarSpec {
    /// Builds a spec from an optional class member set and exclusions,
    /// against the declared universe.
    pub fn new(name: &str, class: Option<SymSet>, exclusions: SymSet, table: &SymbolTable) -> Self {
        let base = class.unwrap_or_else(|| table.universe());
        VarSpec {
            name: name.to_string(),
            allowed: base.minus(&exclusions),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Slot {
    Free,
    Bound(Sym),
    Linked(VarId),
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct VarState {
    name: String,
    allowed: SymSet,
    slot: Slot,
}

/// A consistent assignment of symbols to variable instances.
///
/// Cloning is cheap enough for backtracking search (a binding rarely holds
/// more than a few dozen variables).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Binding {
    vars: Vec<VarState>,
}

impl Binding {
    pub fn new() -> Self {
        Self::default()
    }

    /// Creates a fresh unbound variable instance.
    pub fn fresh(&mut self, spec: &VarSpec) -> VarId {
        let id = VarId(self.vars.len() as u32);
        self.vars.push(VarState {
            name: spec.name.clone(),
            allowed: spec.allowed,
            slot: Slot::Free,
        });
        id
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn name(&self, v: VarId) -> &str {
        &self.vars[v.0 as usize].name
    }

    /// Follows links to the representative variable.
    pub fn repr(&self, v: VarId) -> VarId {
        let mut cur = v;
        loop {
            match self.vars[cur.0 as usize].slot {
                Slot::Linked(next) => cur = next,
                _ => return cur,
            }
        }
    }

    /// The symbol a variable resolves to, if bound.
    pub fn resolve(&self, v: VarId) -> Option<Sym> {
        match self.vars[self.repr(v).0 as usize].slot {
            Slot::Bound(s) => Some(s),
            _ => None,
        }
    }

    /// Symbols the (possibly linked) variable may still take.
    pub fn allowed(&self, v: VarId) -> SymSet {
        let r = self.repr(v);
        match self.vars[r.0 as usize].slot {
            Slot::Bound(s) => SymSet::singleton(s),
            _ => self.vars[r.0 as usize].allowed,
        }
    }

    /// Binds `v` to `s`. Succeeds if `v` is unbound and `s` satisfies its
    /// constraints, or if `v` already resolves to exactly `s`.
    pub fn bind(&mut self, v: VarId, s: Sym) -> bool {
        let r = self.repr(v);
        match self.vars[r.0 as usize].slot {
            Slot::Bound(existing) => existing == s,
            Slot::Free => {
                if self.vars[r.0 as usize].allowed.contains(s) {
                    self.vars[r.0 as usize].slot = Slot::Bound(s);
                    true
                } else {
                    false
                }
            }
            Slot::Linked(_) => unreachable!("repr returned a link"),
        }
    }

    /// Unifies two variables: afterwards they resolve identically and their
    /// allowed sets are intersected. Fails when the intersection is empty
    /// or the variables are bound to different symbols.
    pub fn unify_vars(&mut self, a: VarId, b: VarId) -> bool {
        let ra = self.repr(a);
        let rb = self.repr(b);
        if ra == rb {
            return true;
        }
        match (
            self.vars[ra.0 as usize].slot.clone(),
            self.vars[rb.0 as usize].slot.clone(),
        ) {
            (Slot::Bound(x), Slot::Bound(y)) => x == y,
            (Slot::Bound(x), Slot::Free) => {
                if self.vars[rb.0 as usize].allowed.contains(x) {
                    self.vars[rb.0 as usize].slot = Slot::Linked(ra);
                    true
                } else {
                    false
                }
            }
            (Slot::Free, Slot::Bound(y)) => {
                if self.vars[ra.0 as usize].allowed.contains(y) {
                    self.vars[ra.0 as usize].slot = Slot::Linked(rb);
                    true
                } else {
                    false
                }
            }
            (Slot::Free, Slot::Free) => {
                let merged = self.vars[ra.0 as usize]
                    .allowed
                    .intersect(&self.vars[rb.0 as usize].allowed);
                if merged.is_empty() {
                    return false;
                }
                self.vars[rb.0 as usize].allowed = merged;
                self.vars[ra.0 as usize].slot = Slot::Linked(rb);
                true
            }
            _ => unreachable!("repr returned a link"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table() -> (SymbolTable, Sym, Sym, Sym) {
        let mut t = SymbolTable::new();
        let u = t.declare("u").unwrap();
        let i = t.declare("i").unwrap();
        let plus = t.declare("+").unwrap();
        let mut vowels = SymSet::EMPTY;
        vowels.insert(u);
        vowels.insert(i);
        t.declare_class("V", vowels).unwrap();
        (t, u, i, plus)
    }

    #[test]
    fn fresh_bind_and_rebind() {
        let (t, u, i, _) = table();
        let spec = VarSpec::new("V", Some(t.class("V").unwrap().members), SymSet::EMPTY, &t);
        let mut b = Binding::new();
        let v = b.fresh(&spec);
        assert!(b.bind(v, u), "fresh assignment");
        assert!(b.bind(v, u), "consistent re-binding");
        assert!(!b.bind(v, i), "clash");
        assert_eq!(b.resolve(v), Some(u));
    }

    #[test]
    fn class_constraint_enforced() {
        let (t, _, _, plus) = table();
        let spec = VarSpec::new("V", Some(t.class("V").unwrap().members), SymSet::EMPTY, &t);
        let mut b = Binding::new();
        let v = b.fresh(&spec);
        assert!(!b.bind(v, plus), "+ is not a vowel");
    }

    #[test]
    fn exclusion_without_class() {
        let (t, u, _, plus) = table();
        let spec = VarSpec::new("X", None, SymSet::singleton(plus), &t);
        let mut b = Binding::new();
        let x = b.fresh(&spec);
        assert!(!b.bind(x, plus));
        let x2 = b.fresh(&spec);
        assert!(b.bind(x2, u));
    }

    #[test]
    fn var_var_unification() {
        let (t, u, i, _) = table();
        let vowel = VarSpec::new("V", Some(t.class("V").unwrap().members), SymSet::EMPTY, &t);
        let any = VarSpec::new("A", None, SymSet::EMPTY, &t);
        let mut b = Binding::new();
        let v = b.fresh(&vowel);
        let a = b.fresh(&any);
        assert!(b.unify_vars(a, v));
        // binding one side resolves the other
        assert!(b.bind(a, u));
        assert_eq!(b.resolve(v), Some(u));
        assert!(!b.bind(v, i));
    }

    #[test]
    fn linked_free_vars_intersect_allowed_sets() {
        let (t, u, i, plus) = table();
        let vowel = VarSpec::new("V", Some(t.class("V").unwrap().members), SymSet::EMPTY, &t);
        let not_i = VarSpec::new("W", None, SymSet::singleton(i), &t);
        let mut b = Binding::new();
        let v = b.fresh(&vowel);
        let w = b.fresh(&not_i);
        assert!(b.unify_vars(v, w));
        assert!(!b.bind(w, i), "i excluded on one side");
        assert!(!b.bind(w, plus), "+ outside the vowel class");
        assert!(b.bind(w, u));
        assert_eq!(b.resolve(v), Some(u));
    }
}
