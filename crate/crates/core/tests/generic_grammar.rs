//! The engine on a grammar unlike the bundled one: a single lexical tape,
//! multi-tuple contexts, an obligatory voicing alternation, and an
//! obligatory deletion. Exercises machinery the Arabic grammar leaves
//! untouched (context sequences of several tuples, grammars with no affix
//! tape, obligatory rules with empty surf).

use mtmorph::binding::Binding;
use mtmorph::corpus;
use mtmorph::dsl;
use mtmorph::engine::{brute_force_partitions, generate, partitions, resolve_partition};
use mtmorph::features::FeatureStructure;
use mtmorph::grammar::Grammar;
use mtmorph::symbols::Sym;
use mtmorph::tapes::{Cell, Tapes};

const GRAMMAR: &str = "\
TAPES
lex

ALPHABET
a t d p

CLASSES
V = a

RULES

rule ID-a =>
lsc: *
surf: a
rsc: *
llc: *
lex: (a)
rlc: *

rule ID-t =>
lsc: *
surf: t
rsc: *
llc: *
lex: (t)
rlc: *

rule ID-p =>
lsc: *
surf: p
rsc: *
llc: *
lex: (p)
rlc: *

# t voices between vowels, obligatorily
rule VOICE <=>
lsc: *
surf: d
rsc: *
llc: (V)
lex: (t)
rlc: (V)

# p drops after the two-symbol sequence a t, obligatorily
rule PDROP <=>
lsc: *
surf: 0
rsc: *
llc: (a) (t)
lex: (p)
rlc: *
";

fn grammar() -> Grammar {
    let g = dsl::parse_grammar(GRAMMAR).unwrap();
    assert!(g.validate().is_empty());
    g
}

fn tape(g: &Grammar, s: &str) -> Tapes {
    let syms: Vec<Sym> = s
        .chars()
        .map(|c| g.symbols.lookup(&c.to_string()).unwrap())
        .collect();
    Tapes::from_syms(vec![syms])
}

/// All surfaces the grammar relates to the given lexical string, found by
/// probing every candidate string up to one symbol longer than the input
/// through the partition search.
fn surfaces_for(g: &Grammar, lexical: &str) -> Vec<String> {
    let tapes = tape(g, lexical);
    let mut out = Vec::new();
    for candidate in all_strings(g, lexical.len() + 1) {
        let cells: Vec<Cell> = candidate.iter().copied().map(Cell::Sym).collect();
        if !partitions(g, &tapes, &cells, &Binding::new()).is_empty() {
            out.push(g.symbols.render(&candidate));
        }
    }
    out.sort();
    out
}

/// Every string over the alphabet up to the given length.
fn all_strings(g: &Grammar, max_len: usize) -> Vec<Vec<Sym>> {
    let alphabet: Vec<Sym> = (0..g.symbols.len() as u16).map(Sym).collect();
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for prefix in &frontier {
            for s in &alphabet {
                let mut w = prefix.clone();
                w.push(*s);
                next.push(w);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

#[test]
fn intervocalic_t_must_voice() {
    let g = grammar();
    assert_eq!(surfaces_for(&g, "ata"), vec!["ada"]);
    // word-initial and word-final t stay voiceless
    assert_eq!(surfaces_for(&g, "ta"), vec!["ta"]);
    assert_eq!(surfaces_for(&g, "at"), vec!["at"]);
}

#[test]
fn p_must_drop_after_the_two_tuple_left_context() {
    let g = grammar();
    // llc (a) (t): the column written first sits further left
    assert_eq!(surfaces_for(&g, "atp"), vec!["at"]);
    // a single t to the left is not enough
    assert_eq!(surfaces_for(&g, "tp"), vec!["tp"]);
    // and the mirror order does not trigger it
    assert_eq!(surfaces_for(&g, "tap"), vec!["tap"]);
}

#[test]
fn alternations_compose() {
    let g = grammar();
    // voicing feeds nothing here; both rules apply in one word
    assert_eq!(surfaces_for(&g, "atatp"), vec!["adat"]);
}

#[test]
fn brute_force_agrees_on_the_generic_grammar() {
    let g = grammar();
    for lexical in ["ata", "atp", "tp", "tap", "atatp", "pppp", ""] {
        let tapes = tape(&g, lexical);
        for candidate in all_strings(&g, lexical.len() + 1) {
            let cells: Vec<Cell> = candidate.iter().copied().map(Cell::Sym).collect();
            let binding = Binding::new();
            let engine: std::collections::BTreeSet<_> =
                partitions(&g, &tapes, &cells, &binding)
                    .iter()
                    .map(|(p, b)| resolve_partition(&g, p, &tapes, &cells, b))
                    .collect();
            let brute: std::collections::BTreeSet<_> =
                brute_force_partitions(&g, &tapes, &cells, None, &binding)
                    .unwrap()
                    .iter()
                    .map(|(p, b)| resolve_partition(&g, p, &tapes, &cells, b))
                    .collect();
            assert_eq!(engine, brute, "{lexical} vs {:?}", g.symbols.render(&candidate));
        }
    }
}

#[test]
fn the_engine_generate_api_requires_a_lexicon_selection() {
    // the bundled grammar still drives the public generate; raw-tape use
    // goes through partitions, as above
    let g = corpus::bundled_grammar();
    let goal = FeatureStructure::top();
    let analyses = generate(&g, &[None, None, None, None], &goal);
    assert_eq!(analyses.len(), 1, "empty selection has only the empty analysis");
}

#[test]
fn full_query_api_works_on_a_one_tape_grammar() {
    let mut g = dsl::parse_grammar(GRAMMAR).unwrap();
    dsl::parse_lexicon_into(&mut g, "LEXICON\n1 atatp stem\n1 ta stem\n").unwrap();
    assert!(g.validate().is_empty());

    // generation end to end: candidates, verification, obligations
    let entry = g.lexicon.iter().find(|e| e.form_token == "atatp").unwrap();
    let analyses = generate(&g, &[Some(entry)], &FeatureStructure::top());
    let surfaces: Vec<String> = analyses.iter().map(|a| a.surface_string(&g)).collect();
    assert_eq!(surfaces, vec!["adat"]);
    assert_eq!(
        analyses[0].trace,
        vec!["ID-a", "VOICE", "ID-a", "ID-t", "PDROP"]
    );

    // recognition picks the right entry back out
    let surface: Vec<Sym> = "adat"
        .chars()
        .map(|c| g.symbols.lookup(&c.to_string()).unwrap())
        .collect();
    let back = mtmorph::engine::recognize(&g, &surface);
    assert_eq!(back.len(), 1);
    assert_eq!(back[0].morphemes[0].form, "atatp");

    // the unvoiced and undropped strings are not words of the grammar
    for bad in ["atat", "adatp", "atatp"] {
        let s: Vec<Sym> = bad
            .chars()
            .map(|c| g.symbols.lookup(&c.to_string()).unwrap())
            .collect();
        assert!(
            mtmorph::engine::recognize(&g, &s).is_empty(),
            "{bad} should not analyze"
        );
    }
}
