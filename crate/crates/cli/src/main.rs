//! Command-line front end for the mtmorph engine.
//!
//! Exit codes follow one contract across subcommands: 0 when the query
//! produced a non-empty result (or validation found nothing), 1 when the
//! result is empty (no analyses, a diagnostic, or oracle disagreement),
//! and 2 on configuration errors (bad paths, unparsable grammars, unknown
//! morphemes, values outside a feature domain).

use std::collections::BTreeMap;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use mtmorph::corpus::{self, CaseKind};
use mtmorph::dsl;
use mtmorph::engine::{canonical_sort, generate, recognize, Analysis};
use mtmorph::features::FeatureStructure;
use mtmorph::grammar::Grammar;
use mtmorph::prosody::{oracle_measure, Phonology, ORACLE_MEASURES};
use mtmorph::select::select_entries;
use mtmorph::serialize::analyses_to_json;
use mtmorph::tapes::parse_surface;

#[derive(Debug, Parser)]
#[command(
    name = "mtmorph",
    about = "Bidirectional multi-tape two-level morphology",
    version
)]
struct Cli {
    /// Grammar file (.mtg); defaults to the bundled Arabic grammar.
    #[arg(long, global = true)]
    grammar: Option<String>,
    /// Lexicon file (.mtl); defaults to the bundled Arabic lexicon.
    #[arg(long, global = true)]
    lexicon: Option<String>,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Batch file for `analyze`: one surface form per line, results in
    /// input order.
    #[arg(long, global = true)]
    batch: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate surface forms from selected morphemes under a feature goal.
    Generate(GenerateArgs),
    /// Analyze a surface form into morphemes, features, and a rule trace.
    Analyze {
        /// Surface form (omit only with --batch).
        surface: Option<String>,
    },
    /// Validate the grammar and lexicon; prints diagnostics.
    Validate,
    /// Derive a measure prosodically and compare with the rule engine.
    Oracle {
        /// Verbal measure (1, 2, 3, or 8).
        measure: String,
    },
}

#[derive(Debug, Args)]
struct GenerateArgs {
    /// Verbal measure goal, e.g. `--measure 2`.
    #[arg(long)]
    measure: Option<String>,
    /// Extra feature goals, `attr=v1,v2`; repeatable.
    #[arg(long = "features")]
    features: Vec<String>,
    /// Pattern morpheme (defaults to the only compatible entry).
    #[arg(long)]
    pattern: Option<String>,
    /// Root morpheme (defaults to the only compatible entry).
    #[arg(long)]
    root: Option<String>,
    /// Vocalism morpheme (defaults to the only compatible entry).
    #[arg(long)]
    vocalism: Option<String>,
    /// Affix morpheme (none when omitted).
    #[arg(long)]
    affix: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    if cli.batch.is_some() && !matches!(cli.command, Command::Analyze { .. }) {
        return Err("--batch only applies to analyze".into());
    }
    let grammar = load_grammar(cli.grammar.as_deref(), cli.lexicon.as_deref())?;
    match cli.command {
        Command::Generate(args) => cmd_generate(&grammar, &args, cli.format),
        Command::Analyze { surface } => match (&cli.batch, surface) {
            (Some(path), None) => cmd_analyze_batch(&grammar, path, cli.format),
            (None, Some(s)) => cmd_analyze(&grammar, &s, cli.format),
            (Some(_), Some(_)) => Err("give either a surface form or --batch, not both".into()),
            (None, None) => Err("analyze needs a surface form or --batch".into()),
        },
        Command::Validate => cmd_validate(&grammar),
        Command::Oracle { measure } => cmd_oracle(&grammar, &measure),
    }
}

fn load_grammar(grammar: Option<&str>, lexicon: Option<&str>) -> Result<Grammar, String> {
    let mtg = match grammar {
        Some(path) => {
            std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?
        }
        None => corpus::ARABIC_MTG.to_string(),
    };
    let mtl = match lexicon {
        Some(path) => {
            std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?
        }
        None => corpus::ARABIC_MTL.to_string(),
    };
    dsl::load(&mtg, &mtl).map_err(|errs| {
        errs.iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join("; ")
    })
}

fn build_goal(g: &Grammar, args: &GenerateArgs) -> Result<FeatureStructure, String> {
    let mut pairs: Vec<(String, Vec<String>)> = Vec::new();
    if let Some(m) = &args.measure {
        pairs.push(("measure".into(), vec![m.clone()]));
    }
    for item in &args.features {
        let (attr, values) = item
            .split_once('=')
            .ok_or_else(|| format!("expected attr=v1,v2 in --features, found `{item}`"))?;
        pairs.push((
            attr.trim().to_string(),
            values.split(',').map(|v| v.trim().to_string()).collect(),
        ));
    }
    let mut goal = FeatureStructure::top();
    for (attr, values) in &pairs {
        let refs: Vec<&str> = values.iter().map(|v| v.as_str()).collect();
        let fs = FeatureStructure::build(&g.schema, &[(attr.as_str(), refs.as_slice())])
            .map_err(|e| match e {
                mtmorph::features::FeatureError::ValueOutsideDomain { attr, value } => {
                    format!("value {value} outside domain of {attr}")
                }
                other => other.to_string(),
            })?;
        goal = goal
            .unify(&fs, &g.schema)
            .ok_or_else(|| format!("feature goals for {attr} are contradictory"))?;
    }
    Ok(goal)
}

/// Resolves the per-tape morpheme tokens: named flags select entries by
/// form; a stem tape with no flag defaults to its only goal-compatible
/// entry; the affix tape stays empty unless named.
fn resolve_tokens(
    g: &Grammar,
    args: &GenerateArgs,
    goal: &FeatureStructure,
) -> Result<Vec<Option<String>>, String> {
    let flags: [(&str, &Option<String>); 4] = [
        ("pattern", &args.pattern),
        ("root", &args.root),
        ("vocalism", &args.vocalism),
        ("affix", &args.affix),
    ];
    let affix_tape = g.affix_tape();
    let mut tokens: Vec<Option<String>> = vec![None; g.tape_count()];
    for (name, value) in flags {
        if let Some(token) = value {
            let tape = g
                .tape_names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| format!("grammar has no tape named {name}"))?;
            tokens[tape] = Some(token.clone());
        }
    }
    for (tape, token) in tokens.iter_mut().enumerate() {
        if token.is_some() || Some(tape) == affix_tape {
            continue;
        }
        let mut compatible: Vec<&str> = g
            .entries_on(tape)
            .filter(|e| e.fs.unify(goal, &g.schema).is_some())
            .map(|e| e.form_token.as_str())
            .collect();
        compatible.dedup();
        match compatible.as_slice() {
            [] => {
                return Err(format!(
                    "no {} morpheme is compatible with the goal",
                    g.tape_names[tape]
                ))
            }
            [only] => *token = Some(only.to_string()),
            _ => {
                return Err(format!(
                    "ambiguous {} morpheme; name one of: {}",
                    g.tape_names[tape],
                    compatible.join(", ")
                ))
            }
        }
    }
    Ok(tokens)
}

fn run_generation(
    g: &Grammar,
    tokens: &[Option<String>],
    goal: &FeatureStructure,
) -> Result<Vec<Analysis>, String> {
    let refs: Vec<Option<&str>> = tokens.iter().map(|t| t.as_deref()).collect();
    let selections = select_entries(g, &refs, goal).map_err(|e| e.to_string())?;
    let mut analyses = Vec::new();
    for sel in &selections {
        analyses.extend(generate(g, sel, goal));
    }
    canonical_sort(g, &mut analyses);
    Ok(analyses)
}

fn cmd_generate(g: &Grammar, args: &GenerateArgs, format: Format) -> Result<ExitCode, String> {
    let goal = build_goal(g, args)?;
    let analyses = run_generation(g, &resolve_tokens(g, args, &goal)?, &goal)?;
    print_analyses(g, &analyses, format);
    Ok(exit_for(&analyses))
}

fn cmd_analyze(g: &Grammar, surface: &str, format: Format) -> Result<ExitCode, String> {
    let syms = parse_surface(g, surface)?;
    let analyses = recognize(g, &syms);
    print_analyses(g, &analyses, format);
    Ok(exit_for(&analyses))
}

/// Batch analysis: lines are parsed up front (any bad line is a
/// configuration error), evaluated on worker threads, and printed in
/// input order.
fn cmd_analyze_batch(g: &Grammar, path: &str, format: Format) -> Result<ExitCode, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?;
    let lines: Vec<&str> = text.lines().collect();
    let mut parsed = Vec::with_capacity(lines.len());
    for (i, line) in lines.iter().enumerate() {
        parsed.push(parse_surface(g, line.trim()).map_err(|e| format!("line {}: {e}", i + 1))?);
    }

    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(8);
    let chunk = parsed.len().div_ceil(workers.max(1)).max(1);
    let mut results: Vec<Vec<Analysis>> = Vec::new();
    std::thread::scope(|scope| {
        let handles: Vec<_> = parsed
            .chunks(chunk)
            .map(|slice| scope.spawn(move || slice.iter().map(|s| recognize(g, s)).collect::<Vec<_>>()))
            .collect();
        for h in handles {
            results.extend(h.join().expect("batch worker panicked"));
        }
    });

    let mut any_empty = false;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    for (line, analyses) in lines.iter().zip(&results) {
        any_empty |= analyses.is_empty();
        match format {
            Format::Json => writeln!(out, "{}", analyses_to_json(g, analyses)).unwrap(),
            Format::Text => {
                writeln!(out, "> {line}").unwrap();
                write_text(&mut out, g, analyses);
            }
        }
    }
    Ok(ExitCode::from(u8::from(any_empty)))
}

fn cmd_validate(g: &Grammar) -> Result<ExitCode, String> {
    let diagnostics = g.validate();
    for d in &diagnostics {
        println!("{d}");
    }
    Ok(ExitCode::from(u8::from(!diagnostics.is_empty())))
}

fn cmd_oracle(g: &Grammar, measure: &str) -> Result<ExitCode, String> {
    if !ORACLE_MEASURES.contains(&measure) {
        return Err(format!(
            "measure {measure} has no prosodic derivation here (supported: {})",
            ORACLE_MEASURES.join(", ")
        ));
    }
    let ph = Phonology::from_classes(&g.symbols, "C", "V")
        .ok_or("grammar lacks the C and V classes the oracle needs")?;
    let case = corpus::load_corpus()
        .map_err(|e| e.to_string())?
        .into_iter()
        .find(|c| c.kind == CaseKind::Gen && c.measure == measure)
        .ok_or_else(|| format!("no corpus case for measure {measure}"))?;

    let root_tok = case.tape_forms[1].as_deref().ok_or("corpus case lacks a root")?;
    let voc_tok = case.tape_forms[2].as_deref().ok_or("corpus case lacks a vocalism")?;
    let root = parse_surface(g, root_tok)?;
    let vocalism = parse_surface(g, voc_tok)?;
    let t = g.symbols.lookup("t").ok_or("grammar does not declare `t`")?;

    let derived = oracle_measure(&ph, measure, &root, &vocalism, t).map_err(|e| e.to_string())?;
    let derived_str = g.symbols.render(&derived);

    let goal = FeatureStructure::build(&g.schema, &[("measure", &[measure])])
        .map_err(|e| e.to_string())?;
    let tokens: Vec<Option<String>> = case.tape_forms.clone();
    let analyses = run_generation(g, &tokens, &goal)?;
    let agree = analyses.len() == 1 && analyses[0].surface_string(g) == derived_str;

    println!("{derived_str} {}", if agree { "agree" } else { "disagree" });
    Ok(ExitCode::from(u8::from(!agree)))
}

fn exit_for(analyses: &[Analysis]) -> ExitCode {
    ExitCode::from(u8::from(analyses.is_empty()))
}

fn print_analyses(g: &Grammar, analyses: &[Analysis], format: Format) {
    match format {
        Format::Json => println!("{}", analyses_to_json(g, analyses)),
        Format::Text => {
            let stdout = std::io::stdout();
            let mut out = stdout.lock();
            write_text(&mut out, g, analyses);
        }
    }
}

fn write_text(out: &mut impl Write, g: &Grammar, analyses: &[Analysis]) {
    for a in analyses {
        let morphemes = if a.morphemes.is_empty() {
            "-".to_string()
        } else {
            a.morphemes
                .iter()
                .map(|m| format!("{}:{}", m.tape_name, m.form))
                .collect::<Vec<_>>()
                .join(" ")
        };
        let features: BTreeMap<String, Vec<String>> =
            a.word_fs.to_pairs(&g.schema).into_iter().collect();
        let feature_str = if features.is_empty() {
            "[]".to_string()
        } else {
            let parts: Vec<String> = features
                .iter()
                .map(|(k, vs)| format!("{}={}", k, vs.join(",")))
                .collect();
            format!("[{}]", parts.join("; "))
        };
        let trace = if a.trace.is_empty() {
            "-".to_string()
        } else {
            a.trace.join(",")
        };
        writeln!(
            out,
            "{}\t{}\t{}\t{}",
            a.surface_string(g),
            morphemes,
            feature_str,
            trace
        )
        .unwrap();
    }
}
