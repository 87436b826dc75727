//! The line-oriented grammar/lexicon DSL.
//!
//! A grammar file (`.mtg`) holds the sections `TAPES`, `ALPHABET`,
//! `CLASSES`, `FEATURES` and `RULES`, in that order; a lexicon file
//! (`.mtl`) holds a `LEXICON` section. `#` starts a line comment. Files
//! are UTF-8; the glottal stop is written `'`.
//!
//! Rules are blocks of the form
//!
//! ```text
//! rule R6 <=>
//! lsc: C1 V
//! surf: C
//! rsc: C2 V1 C3
//! llc: *
//! lex: (sm, C, V, 0)
//! rlc: *
//! fs: measure=2,5
//! where: X != +
//! ```
//!
//! Tuple elements are comma-separated inside parentheses; surface symbols
//! are space-separated; `*` alone denotes the always-satisfied context;
//! `0` is epsilon. Variables begin with a capital letter; numbered
//! variables (`C1`, `V1`) are distinct variables sharing the base class of
//! their letter, and variables with no class of their own (like `X`) range
//! over all symbols minus any `where:` exclusions.
//!
//! Lexicon lines read `<tape> <form> <category> [attr=v1,v2; ...]`, e.g.
//! `4 stV verb_affix [measure=10]`. A capital letter inside a form is a
//! variable carried into matching.

use std::collections::HashMap;

use crate::binding::VarSpec;
use crate::features::{FeatureSchema, FeatureStructure};
use crate::grammar::Grammar;
use crate::lexicon::{FormElem, LexicalEntry};
use crate::pattern::{
    LexContext, PatElem, Rule, RuleOp, SurfContext, SurfacePattern, TuplePattern,
};
use crate::symbols::{SymSet, EPSILON_TOKEN, WILDCARD_TOKEN};

/// A parse failure, reported with its 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

const SECTIONS: [&str; 6] = ["TAPES", "ALPHABET", "CLASSES", "FEATURES", "RULES", "LEXICON"];

struct Parser<'a> {
    grammar: &'a mut Grammar,
    errors: Vec<ParseError>,
}

/// Work-in-progress rule block; variable specs are finalized when the
/// block closes, after all `where:` lines are known.
struct RuleDraft {
    line: usize,
    id: String,
    op: RuleOp,
    fields: HashMap<&'static str, (usize, String)>,
    var_order: Vec<String>,
    exclusions: Vec<(String, String, usize)>,
}

impl<'a> Parser<'a> {
    fn err(&mut self, line: usize, message: impl Into<String>) {
        self.errors.push(ParseError {
            line,
            message: message.into(),
        });
    }

    fn run(&mut self, text: &str, allowed_sections: &[&str]) {
        let mut section: Option<&'static str> = None;
        let mut draft: Option<RuleDraft> = None;

        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = match raw.find('#') {
                Some(i) => &raw[..i],
                None => raw,
            }
            .trim();
            if line.is_empty() {
                continue;
            }

            if let Some(&sec) = SECTIONS.iter().find(|&&s| s == line) {
                if let Some(d) = draft.take() {
                    self.close_rule(d);
                }
                if !allowed_sections.contains(&sec) {
                    self.err(lineno, format!("section {sec} not allowed in this file"));
                }
                section = Some(sec);
                continue;
            }

            match section {
                None => self.err(lineno, "content before any section header"),
                Some("TAPES") => {
                    for name in line.split_whitespace() {
                        if self.grammar.tape_names.iter().any(|n| n == name) {
                            self.err(lineno, format!("tape `{name}` declared twice"));
                        } else {
                            self.grammar.tape_names.push(name.to_string());
                        }
                    }
                }
                Some("ALPHABET") => {
                    for tok in line.split_whitespace() {
                        if let Err(e) = self.grammar.symbols.declare(tok) {
                            self.err(lineno, e);
                        }
                    }
                }
                Some("CLASSES") => self.parse_class_line(line, lineno),
                Some("FEATURES") => self.parse_feature_line(line, lineno),
                Some("RULES") => {
                    if let Some(rest) = line.strip_prefix("rule ") {
                        if let Some(d) = draft.take() {
                            self.close_rule(d);
                        }
                        draft = self.open_rule(rest, lineno);
                    } else if let Some(d) = draft.as_mut() {
                        if let Some((key, value)) = line.split_once(':') {
                            let key = key.trim();
                            let known: Option<&'static str> =
                                ["lsc", "surf", "rsc", "llc", "lex", "rlc", "fs", "where"]
                                    .iter()
                                    .find(|&&k| k == key)
                                    .copied();
                            match known {
                                Some("where") => {
                                    let v = value.trim().to_string();
                                    Self::parse_where(&v, lineno, d, &mut self.errors);
                                }
                                Some(k) => {
                                    if d.fields.contains_key(k) {
                                        self.err(lineno, format!("duplicate `{k}:` line"));
                                    }
                                    d.fields.insert(k, (lineno, value.trim().to_string()));
                                }
                                None => self.err(lineno, format!("unknown rule field `{key}`")),
                            }
                        } else {
                            self.err(lineno, "expected `field: value` inside a rule block");
                        }
                    } else {
                        self.err(lineno, "expected `rule <id> <op>` to open a rule block");
                    }
                }
                Some("LEXICON") => self.parse_lexicon_line(line, lineno),
                Some(_) => unreachable!(),
            }
        }
        if let Some(d) = draft.take() {
            self.close_rule(d);
        }
    }

    fn parse_class_line(&mut self, line: &str, lineno: usize) {
        let Some((name, members)) = line.split_once('=') else {
            self.err(lineno, "expected `Name = sym sym ...`");
            return;
        };
        let name = name.trim();
        let mut set = SymSet::EMPTY;
        for tok in members.split_whitespace() {
            if tok == EPSILON_TOKEN {
                self.err(lineno, "epsilon `0` can never be a class member");
                continue;
            }
            match self.grammar.symbols.lookup(tok) {
                Some(s) => set.insert(s),
                None => self.err(lineno, format!("undeclared symbol `{tok}` in class {name}")),
            }
        }
        if let Err(e) = self.grammar.symbols.declare_class(name, set) {
            self.err(lineno, e);
        }
    }

    fn parse_feature_line(&mut self, line: &str, lineno: usize) {
        let Some((name, values)) = line.split_once('=') else {
            self.err(lineno, "expected `attr = v1 v2 ...`");
            return;
        };
        let vals: Vec<&str> = values.split_whitespace().collect();
        if let Err(e) = self.grammar.schema.declare(name.trim(), &vals) {
            self.err(lineno, e.to_string());
        }
    }

    fn open_rule(&mut self, header: &str, lineno: usize) -> Option<RuleDraft> {
        let mut parts = header.split_whitespace();
        let id = parts.next().unwrap_or_default().to_string();
        let op = match parts.next() {
            Some("=>") => RuleOp::Optional,
            Some("<=>") => RuleOp::Obligatory,
            other => {
                self.err(
                    lineno,
                    format!("expected operator `=>` or `<=>`, found {:?}", other.unwrap_or("")),
                );
                return None;
            }
        };
        if id.is_empty() {
            self.err(lineno, "rule id missing");
            return None;
        }
        Some(RuleDraft {
            line: lineno,
            id,
            op,
            fields: HashMap::new(),
            var_order: Vec::new(),
            exclusions: Vec::new(),
        })
    }

    fn parse_where(value: &str, lineno: usize, d: &mut RuleDraft, errors: &mut Vec<ParseError>) {
        for item in value.split(',') {
            let Some((var, sym)) = item.split_once("!=") else {
                errors.push(ParseError {
                    line: lineno,
                    message: format!("expected `Var != sym` in where clause, found `{item}`"),
                });
                continue;
            };
            d.exclusions
                .push((var.trim().to_string(), sym.trim().to_string(), lineno));
        }
    }

    /// Registers a variable occurrence in the draft, returning its index.
    fn var_index(d: &mut RuleDraft, name: &str) -> usize {
        if let Some(i) = d.var_order.iter().position(|n| n == name) {
            i
        } else {
            d.var_order.push(name.to_string());
            d.var_order.len() - 1
        }
    }

    fn is_variable(token: &str) -> bool {
        token
            .chars()
            .next()
            .map(|c| c.is_ascii_uppercase())
            .unwrap_or(false)
    }

    fn surf_elem(&mut self, d: &mut RuleDraft, tok: &str, lineno: usize) -> Option<PatElem> {
        if tok == WILDCARD_TOKEN {
            self.err(lineno, "`*` may only stand alone as an entire context");
            None
        } else if Self::is_variable(tok) {
            Some(PatElem::Var(Self::var_index(d, tok)))
        } else {
            match self.grammar.symbols.lookup(tok) {
                Some(s) => Some(PatElem::Sym(s)),
                None => {
                    self.err(lineno, format!("undeclared symbol `{tok}`"));
                    None
                }
            }
        }
    }

    /// Parses a surface pattern: `0` alone is the empty segment.
    fn parse_surface(&mut self, d: &mut RuleDraft, value: &str, lineno: usize) -> SurfacePattern {
        let toks: Vec<&str> = value.split_whitespace().collect();
        if toks == [EPSILON_TOKEN] {
            return SurfacePattern::default();
        }
        let mut elems = Vec::new();
        for tok in toks {
            if tok == EPSILON_TOKEN {
                self.err(lineno, "epsilon may only appear as the sole surface element");
                continue;
            }
            if let Some(e) = self.surf_elem(d, tok, lineno) {
                elems.push(e);
            }
        }
        SurfacePattern { elems }
    }

    fn parse_surf_context(&mut self, d: &mut RuleDraft, value: &str, lineno: usize) -> SurfContext {
        if value == WILDCARD_TOKEN {
            SurfContext::Always
        } else {
            SurfContext::Pattern(self.parse_surface(d, value, lineno))
        }
    }

    /// Parses `(a, B, 0, *) (c, d, 0, 0)` into a tuple sequence.
    fn parse_tuples(
        &mut self,
        d: &mut RuleDraft,
        value: &str,
        lineno: usize,
        allow_wildcard_elem: bool,
    ) -> Vec<TuplePattern> {
        let mut tuples = Vec::new();
        let mut rest = value.trim();
        while !rest.is_empty() {
            if !rest.starts_with('(') {
                self.err(lineno, format!("expected `(` to open a tuple, found `{rest}`"));
                return tuples;
            }
            let Some(close) = rest.find(')') else {
                self.err(lineno, "unclosed tuple");
                return tuples;
            };
            let inner = &rest[1..close];
            let mut elems = Vec::new();
            for tok in inner.split(',') {
                let tok = tok.trim();
                if tok == EPSILON_TOKEN {
                    elems.push(PatElem::Epsilon);
                } else if tok == WILDCARD_TOKEN {
                    if allow_wildcard_elem {
                        elems.push(PatElem::Any);
                    } else {
                        self.err(lineno, "`*` is not allowed as a tuple element inside lex");
                    }
                } else if Self::is_variable(tok) {
                    elems.push(PatElem::Var(Self::var_index(d, tok)));
                } else {
                    match self.grammar.symbols.lookup(tok) {
                        Some(s) => elems.push(PatElem::Sym(s)),
                        None => self.err(lineno, format!("undeclared symbol `{tok}`")),
                    }
                }
            }
            tuples.push(TuplePattern { elems });
            rest = rest[close + 1..].trim_start();
        }
        tuples
    }

    fn parse_lex_context(&mut self, d: &mut RuleDraft, value: &str, lineno: usize) -> LexContext {
        if value == WILDCARD_TOKEN {
            LexContext::Always
        } else {
            LexContext::Tuples(self.parse_tuples(d, value, lineno, true))
        }
    }

    /// The base class of a variable: its name minus any trailing digits,
    /// looked up among the declared classes.
    fn var_spec(&self, name: &str, exclusions: SymSet) -> VarSpec {
        let base = name.trim_end_matches(|c: char| c.is_ascii_digit());
        let class = self.grammar.symbols.class(base).map(|c| c.members);
        VarSpec::new(name, class, exclusions, &self.grammar.symbols)
    }

    fn close_rule(&mut self, mut d: RuleDraft) {
        let mut missing = Vec::new();
        for key in ["lsc", "surf", "rsc", "llc", "lex", "rlc"] {
            if !d.fields.contains_key(key) {
                missing.push(key);
            }
        }
        if !missing.is_empty() {
            self.err(
                d.line,
                format!("rule {} is missing fields: {}", d.id, missing.join(", ")),
            );
            return;
        }

        let take = |d: &mut RuleDraft, k: &str| d.fields.remove(k).unwrap();

        let (l, v) = take(&mut d, "lsc");
        let lsc = self.parse_surf_context(&mut d, &v, l);
        let (l, v) = take(&mut d, "surf");
        let surf = self.parse_surface(&mut d, &v, l);
        let (l, v) = take(&mut d, "rsc");
        let rsc = self.parse_surf_context(&mut d, &v, l);
        let (l, v) = take(&mut d, "llc");
        let llc = self.parse_lex_context(&mut d, &v, l);
        let (l, v) = take(&mut d, "rlc");
        let rlc = self.parse_lex_context(&mut d, &v, l);

        let (lex_line, v) = take(&mut d, "lex");
        let mut lex_tuples = self.parse_tuples(&mut d, &v, lex_line, false);
        let lex = match lex_tuples.len() {
            1 => lex_tuples.remove(0),
            n => {
                self.err(lex_line, format!("lex must be exactly one tuple, found {n}"));
                return;
            }
        };
        if lex.elems.len() != self.grammar.tape_count() {
            self.err(
                lex_line,
                format!(
                    "lex tuple has {} elements, grammar declares {} tapes",
                    lex.elems.len(),
                    self.grammar.tape_count()
                ),
            );
        }

        let fs = match d.fields.remove("fs") {
            Some((l, v)) => match parse_fs(&v, &self.grammar.schema) {
                Ok(fs) => Some(fs),
                Err(msg) => {
                    self.err(l, msg);
                    None
                }
            },
            None => None,
        };

        // Fold where-clause exclusions into the variable specs.
        let mut inequalities = Vec::new();
        let mut excl_sets: HashMap<String, SymSet> = HashMap::new();
        for (var, sym_tok, lineno) in std::mem::take(&mut d.exclusions) {
            match self.grammar.symbols.lookup(&sym_tok) {
                Some(s) => {
                    excl_sets.entry(var.clone()).or_insert(SymSet::EMPTY).insert(s);
                    inequalities.push((var.clone(), s));
                    // mentioning a variable only in `where:` still declares it
                    Self::var_index(&mut d, &var);
                }
                None => self.err(lineno, format!("undeclared symbol `{sym_tok}` in where clause")),
            }
        }

        let vars: Vec<VarSpec> = d
            .var_order
            .iter()
            .map(|name| {
                let excl = excl_sets.get(name).copied().unwrap_or(SymSet::EMPTY);
                self.var_spec(name, excl)
            })
            .collect();
        let var_names = d
            .var_order
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect();

        if self.grammar.rules.iter().any(|r| r.id == d.id) {
            self.err(d.line, format!("duplicate rule id {}", d.id));
            return;
        }

        self.grammar.rules.push(Rule {
            id: d.id,
            op: d.op,
            lsc,
            surf,
            rsc,
            llc,
            lex,
            rlc,
            fs,
            vars,
            var_names,
            inequalities,
        });
    }

    fn parse_lexicon_line(&mut self, line: &str, lineno: usize) {
        // <tape> <form> <category> [fs]
        let (head, fs_part) = match line.find('[') {
            Some(i) => (line[..i].trim(), Some(line[i..].trim())),
            None => (line, None),
        };
        let parts: Vec<&str> = head.split_whitespace().collect();
        if parts.len() != 3 {
            self.err(lineno, "expected `<tape> <form> <category> [fs]`");
            return;
        }
        let tape: usize = match parts[0].parse::<usize>() {
            Ok(t) if t >= 1 => t - 1,
            _ => {
                self.err(lineno, format!("bad tape index `{}`", parts[0]));
                return;
            }
        };
        let form = match self.tokenize_form(parts[1], lineno) {
            Some(f) => f,
            None => return,
        };
        let fs = match fs_part {
            Some(text) => {
                let inner = text
                    .strip_prefix('[')
                    .and_then(|t| t.strip_suffix(']'))
                    .unwrap_or(text);
                match parse_fs(inner, &self.grammar.schema) {
                    Ok(fs) => fs,
                    Err(msg) => {
                        self.err(lineno, msg);
                        return;
                    }
                }
            }
            None => FeatureStructure::top(),
        };
        self.grammar.lexicon.push(LexicalEntry {
            tape,
            form,
            category: parts[2].to_string(),
            fs,
            form_token: parts[1].to_string(),
        });
    }

    /// Splits a concatenated form token (`smsmsx`, `'V`, `stV`) into
    /// symbols and variables by longest declared-symbol match.
    fn tokenize_form(&mut self, token: &str, lineno: usize) -> Option<Vec<FormElem>> {
        let mut out = Vec::new();
        let mut rest = token;
        'outer: while !rest.is_empty() {
            let first = rest.chars().next().unwrap();
            if first.is_ascii_uppercase() {
                let end = rest
                    .char_indices()
                    .skip(1)
                    .find(|(_, c)| !c.is_ascii_digit())
                    .map(|(i, _)| i)
                    .unwrap_or(rest.len());
                let name = &rest[..end];
                out.push(FormElem::Var(self.var_spec(name, SymSet::EMPTY)));
                rest = &rest[end..];
                continue;
            }
            let mut len = rest.len().min(8);
            while len > 0 {
                if rest.is_char_boundary(len) {
                    if let Some(s) = self.grammar.symbols.lookup(&rest[..len]) {
                        out.push(FormElem::Sym(s));
                        rest = &rest[len..];
                        continue 'outer;
                    }
                }
                len -= 1;
            }
            self.err(
                lineno,
                format!("form `{token}` contains no declared symbol at `{rest}`"),
            );
            return None;
        }
        Some(out)
    }
}

/// Parses `attr=v1,v2; attr2=v3` against the schema.
fn parse_fs(text: &str, schema: &FeatureSchema) -> Result<FeatureStructure, String> {
    let mut pairs: Vec<(String, Vec<String>)> = Vec::new();
    for item in text.split(';') {
        let item = item.trim();
        if item.is_empty() {
            continue;
        }
        let Some((attr, values)) = item.split_once('=') else {
            return Err(format!("expected `attr=v1,v2`, found `{item}`"));
        };
        pairs.push((
            attr.trim().to_string(),
            values.split(',').map(|v| v.trim().to_string()).collect(),
        ));
    }
    let borrowed: Vec<(&str, Vec<&str>)> = pairs
        .iter()
        .map(|(a, vs)| (a.as_str(), vs.iter().map(|v| v.as_str()).collect()))
        .collect();
    let slices: Vec<(&str, &[&str])> = borrowed.iter().map(|(a, vs)| (*a, vs.as_slice())).collect();
    FeatureStructure::build(schema, &slices).map_err(|e| e.to_string())
}

/// Parses a grammar file (`TAPES` through `RULES`; a `LEXICON` section is
/// accepted too so self-contained files work).
pub fn parse_grammar(text: &str) -> Result<Grammar, Vec<ParseError>> {
    let mut grammar = Grammar::default();
    let mut p = Parser {
        grammar: &mut grammar,
        errors: Vec::new(),
    };
    p.run(text, &SECTIONS);
    let errors = std::mem::take(&mut p.errors);
    if errors.is_empty() {
        Ok(grammar)
    } else {
        Err(errors)
    }
}

/// Parses a lexicon file into an already-parsed grammar.
pub fn parse_lexicon_into(grammar: &mut Grammar, text: &str) -> Result<(), Vec<ParseError>> {
    let mut p = Parser {
        grammar,
        errors: Vec::new(),
    };
    p.run(text, &["LEXICON"]);
    let errors = std::mem::take(&mut p.errors);
    if errors.is_empty() {
        Ok(())
    } else {
        Err(errors)
    }
}

/// Parses a grammar file and a lexicon file together.
pub fn load(mtg: &str, mtl: &str) -> Result<Grammar, Vec<ParseError>> {
    let mut grammar = parse_grammar(mtg)?;
    parse_lexicon_into(&mut grammar, mtl)?;
    Ok(grammar)
}

fn print_elem(g: &Grammar, rule: &Rule, e: &PatElem) -> String {
    match e {
        PatElem::Sym(s) => g.symbols.name(*s).to_string(),
        PatElem::Var(i) => rule
            .var_names
            .iter()
            .find(|(_, idx)| **idx == *i)
            .map(|(n, _)| n.clone())
            .unwrap_or_else(|| format!("V{i}")),
        PatElem::Epsilon => EPSILON_TOKEN.to_string(),
        PatElem::Any => WILDCARD_TOKEN.to_string(),
    }
}

fn print_surface(g: &Grammar, rule: &Rule, sp: &SurfacePattern) -> String {
    if sp.is_empty() {
        EPSILON_TOKEN.to_string()
    } else {
        sp.elems
            .iter()
            .map(|e| print_elem(g, rule, e))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn print_surf_context(g: &Grammar, rule: &Rule, sc: &SurfContext) -> String {
    match sc {
        SurfContext::Always => WILDCARD_TOKEN.to_string(),
        SurfContext::Pattern(sp) => print_surface(g, rule, sp),
    }
}

fn print_tuple(g: &Grammar, rule: &Rule, t: &TuplePattern) -> String {
    let inner = t
        .elems
        .iter()
        .map(|e| print_elem(g, rule, e))
        .collect::<Vec<_>>()
        .join(", ");
    format!("({inner})")
}

fn print_lex_context(g: &Grammar, rule: &Rule, lc: &LexContext) -> String {
    match lc {
        LexContext::Always => WILDCARD_TOKEN.to_string(),
        LexContext::Tuples(ts) => ts
            .iter()
            .map(|t| print_tuple(g, rule, t))
            .collect::<Vec<_>>()
            .join(" "),
    }
}

/// Canonical printer for the grammar sections. `parse ∘ print ∘ parse`
/// is `parse` on every well-formed file.
pub fn print_grammar(g: &Grammar) -> String {
    let mut out = String::new();
    out.push_str("TAPES\n");
    out.push_str(&g.tape_names.join(" "));
    out.push_str("\n\nALPHABET\n");
    let syms: Vec<&str> = (0..g.symbols.len())
        .map(|i| g.symbols.name(crate::symbols::Sym(i as u16)))
        .collect();
    out.push_str(&syms.join(" "));
    out.push('\n');

    if !g.symbols.classes().is_empty() {
        out.push_str("\nCLASSES\n");
        for class in g.symbols.classes() {
            let members: Vec<&str> = class.members.iter().map(|s| g.symbols.name(s)).collect();
            out.push_str(&format!("{} = {}\n", class.name, members.join(" ")));
        }
    }

    if !g.schema.is_empty() {
        out.push_str("\nFEATURES\n");
        for (id, name) in g.schema.iter() {
            let domain: Vec<&str> = g.schema.domain(id).iter().map(|s| s.as_str()).collect();
            out.push_str(&format!("{} = {}\n", name, domain.join(" ")));
        }
    }

    out.push_str("\nRULES\n");
    for rule in &g.rules {
        let op = match rule.op {
            RuleOp::Optional => "=>",
            RuleOp::Obligatory => "<=>",
        };
        out.push_str(&format!("\nrule {} {}\n", rule.id, op));
        out.push_str(&format!("lsc: {}\n", print_surf_context(g, rule, &rule.lsc)));
        out.push_str(&format!("surf: {}\n", print_surface(g, rule, &rule.surf)));
        out.push_str(&format!("rsc: {}\n", print_surf_context(g, rule, &rule.rsc)));
        out.push_str(&format!("llc: {}\n", print_lex_context(g, rule, &rule.llc)));
        out.push_str(&format!("lex: {}\n", print_tuple(g, rule, &rule.lex)));
        out.push_str(&format!("rlc: {}\n", print_lex_context(g, rule, &rule.rlc)));
        if let Some(fs) = &rule.fs {
            let body = fs
                .to_pairs(&g.schema)
                .into_iter()
                .map(|(a, vs)| format!("{}={}", a, vs.join(",")))
                .collect::<Vec<_>>()
                .join("; ");
            out.push_str(&format!("fs: {body}\n"));
        }
        if !rule.inequalities.is_empty() {
            let body = rule
                .inequalities
                .iter()
                .map(|(v, s)| format!("{} != {}", v, g.symbols.name(*s)))
                .collect::<Vec<_>>()
                .join(", ");
            out.push_str(&format!("where: {body}\n"));
        }
    }
    out
}

/// Canonical printer for the lexicon section.
pub fn print_lexicon(g: &Grammar) -> String {
    let mut out = String::from("LEXICON\n");
    for entry in &g.lexicon {
        let fs = if entry.fs.is_top() {
            String::new()
        } else {
            let body = entry
                .fs
                .to_pairs(&g.schema)
                .into_iter()
                .map(|(a, vs)| format!("{}={}", a, vs.join(",")))
                .collect::<Vec<_>>()
                .join("; ");
            format!(" [{body}]")
        };
        out.push_str(&format!(
            "{} {} {}{}\n",
            entry.tape + 1,
            entry.form_token,
            entry.category,
            fs
        ));
    }
    out
}
