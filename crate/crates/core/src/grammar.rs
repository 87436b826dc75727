//! The grammar: tapes, alphabet, classes, feature schema, rules, lexicon.

use crate::features::FeatureSchema;
use crate::lexicon::LexicalEntry;
use crate::pattern::{LexContext, PatElem, Rule, RuleOp, SurfContext};
use crate::symbols::SymbolTable;

/// A validated multi-tape two-level grammar plus its lexicon.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Grammar {
    pub tape_names: Vec<String>,
    pub symbols: SymbolTable,
    pub schema: FeatureSchema,
    pub rules: Vec<Rule>,
    pub lexicon: Vec<LexicalEntry>,
}

/// A validation finding, tied to the rule or entry it concerns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub context: String,
    pub message: String,
}

impl std::fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.context, self.message)
    }
}

impl Grammar {
    pub fn tape_count(&self) -> usize {
        self.tape_names.len()
    }

    /// The optional prefix-morpheme tape, identified by its declared name.
    /// Recognition treats its entry as optional, and partitions must not
    /// consume stem-tape material while unconsumed affix material remains
    /// unless the same pair consumes affix material too.
    pub fn affix_tape(&self) -> Option<usize> {
        self.tape_names.iter().position(|n| n == "affix")
    }

    /// The morpheme boundary symbol, when the grammar declares one. Tape
    /// assembly appends it after every selected morpheme's form.
    pub fn boundary(&self) -> Option<crate::symbols::Sym> {
        self.symbols.lookup("+")
    }

    pub fn rule_by_id(&self, id: &str) -> Option<&Rule> {
        self.rules.iter().find(|r| r.id == id)
    }

    /// Longest surface segment any rule can emit; the brute-force search
    /// uses it as the default per-pair segment bound.
    pub fn max_surf_width(&self) -> usize {
        self.rules.iter().map(|r| r.surf_width()).max().unwrap_or(0)
    }

    /// Checks the structural invariants the parser cannot enforce locally.
    /// An empty list means the grammar is well-formed.
    pub fn validate(&self) -> Vec<Diagnostic> {
        let mut out = Vec::new();
        let n = self.tape_count();

        let mut seen_ids: Vec<&str> = Vec::new();
        for rule in &self.rules {
            let ctx = format!("rule {}", rule.id);
            if seen_ids.contains(&rule.id.as_str()) {
                out.push(Diagnostic {
                    context: ctx.clone(),
                    message: "duplicate rule id".into(),
                });
            }
            seen_ids.push(&rule.id);

            if rule.lex.elems.len() != n {
                out.push(Diagnostic {
                    context: ctx.clone(),
                    message: format!(
                        "lex tuple has {} elements, grammar declares {} tapes",
                        rule.lex.elems.len(),
                        n
                    ),
                });
            }
            for (label, lc) in [("llc", &rule.llc), ("rlc", &rule.rlc)] {
                if let LexContext::Tuples(tuples) = lc {
                    for t in tuples {
                        if t.elems.len() != n {
                            out.push(Diagnostic {
                                context: ctx.clone(),
                                message: format!(
                                    "{label} tuple has {} elements, grammar declares {} tapes",
                                    t.elems.len(),
                                    n
                                ),
                            });
                        }
                    }
                }
            }

            if rule.op == RuleOp::Obligatory && rule.is_epsilon_lex() {
                out.push(Diagnostic {
                    context: ctx.clone(),
                    message: "obligatory rule has an all-epsilon lex".into(),
                });
            }

            // `*` is not a surface-pattern element, and epsilon inside lex
            // surfaces only as the empty segment (already canonicalized).
            let surf_positions = [
                ("surf", &rule.surf),
                // contexts share the surface element grammar
            ];
            for (label, sp) in surf_positions {
                if sp.elems.iter().any(|e| matches!(e, PatElem::Any)) {
                    out.push(Diagnostic {
                        context: ctx.clone(),
                        message: format!("{label} may not contain `*`"),
                    });
                }
            }
            for (label, sc) in [("lsc", &rule.lsc), ("rsc", &rule.rsc)] {
                if let SurfContext::Pattern(sp) = sc {
                    if sp
                        .elems
                        .iter()
                        .any(|e| matches!(e, PatElem::Any | PatElem::Epsilon))
                    {
                        out.push(Diagnostic {
                            context: ctx.clone(),
                            message: format!("{label} may not contain `*` or `0`"),
                        });
                    }
                }
            }

            for spec in &rule.vars {
                if spec.allowed.is_empty() {
                    out.push(Diagnostic {
                        context: ctx.clone(),
                        message: format!(
                            "variable {} has no possible value (incompatible class and exclusions)",
                            spec.name
                        ),
                    });
                }
            }
        }

        for (i, entry) in self.lexicon.iter().enumerate() {
            let ctx = format!("lexicon entry {} ({})", i + 1, entry.form_token);
            if entry.tape >= n {
                out.push(Diagnostic {
                    context: ctx.clone(),
                    message: format!(
                        "tape {} out of range for a {}-tape grammar",
                        entry.tape + 1,
                        n
                    ),
                });
            }
            for elem in &entry.form {
                if let crate::lexicon::FormElem::Var(spec) = elem {
                    if spec.allowed.is_empty() {
                        out.push(Diagnostic {
                            context: ctx.clone(),
                            message: format!("form variable {} has no possible value", spec.name),
                        });
                    }
                }
            }
        }

        out
    }

    /// Lexicon entries sitting on `tape`.
    pub fn entries_on(&self, tape: usize) -> impl Iterator<Item = &LexicalEntry> {
        self.lexicon.iter().filter(move |e| e.tape == tape)
    }
}

#[cfg(test)]
mod tests {
    use crate::dsl;

    const BASE: &str = "TAPES\na b c d\n\nALPHABET\nx y u i\n\nCLASSES\nV = u i\n\nRULES\n";

    #[test]
    fn entry_on_out_of_range_tape_is_diagnosed() {
        let mut g = dsl::parse_grammar(BASE).unwrap();
        dsl::parse_lexicon_into(&mut g, "LEXICON\n5 x stem\n").unwrap();
        let diags = g.validate();
        assert_eq!(diags.len(), 1);
        assert!(diags[0].message.contains("tape 5 out of range"));
    }

    #[test]
    fn variable_with_no_possible_value_is_diagnosed() {
        let text = format!(
            "{BASE}rule R1 =>\nlsc: *\nsurf: V\nrsc: *\nllc: *\nlex: (V, 0, 0, 0)\nrlc: *\nwhere: V != u, V != i\n"
        );
        let g = dsl::parse_grammar(&text).unwrap();
        let diags = g.validate();
        assert_eq!(diags.len(), 1);
        assert!(diags[0].message.contains("no possible value"));
    }

    #[test]
    fn obligatory_rule_with_empty_lex_is_diagnosed() {
        let text = format!(
            "{BASE}rule R1 <=>\nlsc: *\nsurf: x\nrsc: *\nllc: *\nlex: (0, 0, 0, 0)\nrlc: *\n"
        );
        let g = dsl::parse_grammar(&text).unwrap();
        let diags = g.validate();
        assert!(diags.iter().any(|d| d.message.contains("all-epsilon lex")));
    }
}
