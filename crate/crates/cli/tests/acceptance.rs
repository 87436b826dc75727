//! Acceptance suite: one test per criterion, each printing a PASS line
//! (run with `cargo test -p mtmorph-cli --test acceptance -- --nocapture`
//! to see them). Criteria phrased as command invocations drive the real
//! binary; the rest go through the library.

use std::collections::BTreeSet;
use std::process::{Command, Output};
use std::time::Instant;

use mtmorph::binding::Binding;
use mtmorph::corpus::{bundled_grammar, load_corpus, CaseKind, GoldenCase};
use mtmorph::engine::{brute_force_partitions, partitions, resolve_partition};
use mtmorph::features::FeatureStructure;
use mtmorph::select::select_entries;
use mtmorph::tapes::{parse_surface, Cell, Tapes};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_mtmorph"))
}

fn stdout_lines(out: &Output) -> Vec<String> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| l.to_string())
        .collect()
}

fn gen_cases() -> Vec<GoldenCase> {
    load_corpus()
        .unwrap()
        .into_iter()
        .filter(|c| c.kind == CaseKind::Gen)
        .collect()
}

fn generate_invocation(case: &GoldenCase) -> Output {
    let mut cmd = bin();
    cmd.args(["generate", "--measure", &case.measure, "--root", "ktb", "--vocalism", "ui"]);
    if let Some(affix) = &case.tape_forms[3] {
        cmd.args(["--affix", affix]);
    }
    cmd.output().expect("binary runs")
}

#[test]
fn criterion_1_generation_fidelity() {
    let expected: &[(&str, &str)] = &[
        ("1", "kutib"),
        ("2", "kuttib"),
        ("3", "kuutib"),
        ("4", "'uktib"),
        ("5", "tukuttib"),
        ("6", "tukuutib"),
        ("7", "nkutib"),
        ("8", "ktutib"),
        ("10", "stuktib"),
    ];
    let cases = gen_cases();
    let started = Instant::now();
    for (measure, form) in expected {
        let case = cases.iter().find(|c| c.measure == *measure).unwrap();
        assert_eq!(&case.expected, form, "corpus and criterion agree");
        let out = generate_invocation(case);
        assert!(out.status.success(), "measure {measure}: exit 0 expected");
        let lines = stdout_lines(&out);
        let surfaces: Vec<&str> = lines
            .iter()
            .map(|l| l.split('\t').next().unwrap())
            .collect();
        assert_eq!(
            surfaces,
            vec![*form],
            "measure {measure}: exactly one form, no spurious alternatives"
        );
    }
    let elapsed = started.elapsed();
    assert!(
        elapsed.as_secs_f64() < 1.0,
        "nine generations took {elapsed:?}, expected < 1 s"
    );
    println!("PASS criterion 1: all nine measures generate exactly their table form ({elapsed:?})");
}

#[test]
fn criterion_2_trace_fidelity() {
    let expected: &[(&str, &str)] = &[
        ("1", "1124"),
        ("4", "3356124"),
        ("7", "351124"),
        ("10", "33356124"),
        ("2", "17124"),
        ("3", "9124"),
        ("8", "85124"),
    ];
    let cases = gen_cases();
    for (measure, digits) in expected {
        let case = cases.iter().find(|c| c.measure == *measure).unwrap();
        let out = generate_invocation(case);
        let lines = stdout_lines(&out);
        assert_eq!(lines.len(), 1, "measure {measure}");
        let trace_field = lines[0].split('\t').nth(3).unwrap();
        let got: String = trace_field
            .split(',')
            .map(|id| id.trim_start_matches('R'))
            .collect();
        assert_eq!(&got, digits, "measure {measure} trace");
    }
    println!("PASS criterion 2: the seven displayed derivations reproduce their rule-number strings");
}

#[test]
fn criterion_3_obligatoriness() {
    for (form, expect_any) in [
        ("'ukutib", false),
        ("stukutib", false),
        ("'uktib", true),
        ("stuktib", true),
    ] {
        let out = bin().args(["analyze", form]).output().expect("binary runs");
        let lines = stdout_lines(&out);
        if expect_any {
            assert!(!lines.is_empty(), "{form} must analyze");
            assert!(out.status.success(), "{form}: exit 0");
        } else {
            assert!(lines.is_empty(), "*{form} must have zero analyses, got {lines:?}");
            assert_eq!(out.status.code(), Some(1), "{form}: exit 1");
        }
    }
    println!("PASS criterion 3: syncope is obligatory (*'ukutib, *stukutib out; 'uktib, stuktib in)");
}

#[test]
fn criterion_4_recognition_round_trip() {
    let g = bundled_grammar();
    for case in gen_cases() {
        let surface = parse_surface(&g, &case.expected).unwrap();
        let analyses = mtmorph::engine::recognize(&g, &surface);
        let expected_morphemes: Vec<&str> = case
            .tape_forms
            .iter()
            .filter_map(|t| t.as_deref())
            .collect();
        let measures_of = |a: &mtmorph::Analysis| {
            a.word_fs
                .to_pairs(&g.schema)
                .into_iter()
                .find(|(attr, _)| attr == "measure")
                .map(|(_, vs)| vs)
                .unwrap_or_default()
        };
        let round_trip = analyses.iter().any(|a| {
            let forms: Vec<&str> = a.morphemes.iter().map(|m| m.form.as_str()).collect();
            forms == expected_morphemes && measures_of(a).contains(&case.measure)
        });
        assert!(
            round_trip,
            "{}: no analysis with the generation inputs containing measure {}",
            case.expected, case.measure
        );
        // exact measure sets for the geminate and the infixed form
        let exact = match case.expected.as_str() {
            "kuttib" => Some(vec!["2".to_string()]),
            "ktutib" => Some(vec!["8".to_string()]),
            _ => None,
        };
        if let Some(want) = exact {
            let hit = analyses.iter().any(|a| {
                let forms: Vec<&str> = a.morphemes.iter().map(|m| m.form.as_str()).collect();
                forms == expected_morphemes && measures_of(a) == want
            });
            assert!(hit, "{}: measure set exactly {:?}", case.expected, want);
        }
    }
    println!("PASS criterion 4: every generated form round-trips; kuttib and ktutib narrow to {{2}} and {{8}}");
}

#[test]
fn criterion_5_oracle_agreement() {
    for (measure, form) in [("1", "kutib"), ("2", "kuttib"), ("3", "kuutib"), ("8", "ktutib")] {
        let out = bin().args(["oracle", measure]).output().expect("binary runs");
        assert!(out.status.success(), "oracle {measure} exits 0");
        let lines = stdout_lines(&out);
        assert_eq!(lines, vec![format!("{form} agree")], "oracle {measure}");
    }
    println!("PASS criterion 5: prosodic derivations equal engine generation for measures 1, 2, 3, 8");
}

#[test]
fn criterion_6_brute_force_equivalence() {
    let g = bundled_grammar();
    let corpus = load_corpus().unwrap();
    let started = Instant::now();

    let mut inputs: Vec<(Tapes, Binding)> = Vec::new();
    for case in &corpus {
        let tokens: Vec<Option<&str>> = case.tape_forms.iter().map(|t| t.as_deref()).collect();
        let goal =
            FeatureStructure::build(&g.schema, &[("measure", &[case.measure.as_str()])]).unwrap();
        for sel in select_entries(&g, &tokens, &goal).unwrap() {
            let mut binding = Binding::new();
            let tapes = Tapes::from_selection(&g, &sel, &mut binding);
            inputs.push((tapes, binding));
        }
    }
    let surfaces: Vec<Vec<mtmorph::Sym>> = corpus
        .iter()
        .map(|c| parse_surface(&g, &c.expected).unwrap())
        .collect();

    let mut checked = 0usize;
    let mut compare = |tapes: &Tapes, cells: &[Cell], binding: &Binding| {
        let engine: BTreeSet<_> = partitions(&g, tapes, cells, binding)
            .iter()
            .map(|(p, b)| resolve_partition(&g, p, tapes, cells, b))
            .collect();
        let brute: BTreeSet<_> = brute_force_partitions(&g, tapes, cells, None, binding)
            .unwrap()
            .iter()
            .map(|(p, b)| resolve_partition(&g, p, tapes, cells, b))
            .collect();
        assert_eq!(engine, brute, "partition sets diverge");
        checked += 1;
    };

    // all corpus inputs against all corpus surfaces
    for (tapes, binding) in &inputs {
        for s in &surfaces {
            let cells: Vec<Cell> = s.iter().copied().map(Cell::Sym).collect();
            compare(tapes, &cells, binding);
        }
    }

    // 200 randomized sub-strings / tape-tuples of length ≤ 8
    let mut state = 0x2a5e_u64;
    let mut next = move |n: usize| {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        if n == 0 { 0 } else { ((state >> 33) % n as u64) as usize }
    };
    for _ in 0..200 {
        let (tapes, binding) = &inputs[next(inputs.len())];
        let cells: Vec<Vec<Cell>> = tapes
            .cells
            .iter()
            .map(|t| {
                let len = next(t.len().min(8) + 1);
                let start = next(t.len() - len + 1);
                t[start..start + len].to_vec()
            })
            .collect();
        let sub = Tapes { cells };
        let s = &surfaces[next(surfaces.len())];
        let len = next(s.len().min(8) + 1);
        let start = next(s.len() - len + 1);
        let cells: Vec<Cell> = s[start..start + len].iter().copied().map(Cell::Sym).collect();
        compare(&sub, &cells, binding);
    }

    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 30.0, "took {elapsed:?}, expected < 30 s");
    println!("PASS criterion 6: engine equals brute force on {checked} inputs ({elapsed:?})");
}

#[test]
fn criterion_7_algebraic_properties() {
    let g = bundled_grammar();
    let schema = &g.schema;
    let mut state = 0x7a17_u64;
    let mut next = move |n: u64| {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (state >> 33) % n
    };

    // fs_unify: commutative, associative, identity, 1000 random structures
    let random_fs = |next: &mut dyn FnMut(u64) -> u64| {
        let mut fs = FeatureStructure::top();
        let measure = schema.attr_id("measure").unwrap();
        let tense = schema.attr_id("tense").unwrap();
        let voice = schema.attr_id("voice").unwrap();
        let m = (next(512)) as u32;
        if m != 0 {
            fs.set(schema, measure, m);
        }
        let t = (next(4)) as u32;
        if t != 0 {
            fs.set(schema, tense, t);
        }
        let v = (next(4)) as u32;
        if v != 0 {
            fs.set(schema, voice, v);
        }
        fs
    };
    let top = FeatureStructure::top();
    for _ in 0..1000 {
        let a = random_fs(&mut next);
        let b = random_fs(&mut next);
        let c = random_fs(&mut next);
        assert_eq!(a.unify(&b, schema), b.unify(&a, schema), "commutativity");
        let left = a.unify(&b, schema).and_then(|ab| ab.unify(&c, schema));
        let right = b.unify(&c, schema).and_then(|bc| a.unify(&bc, schema));
        assert_eq!(left, right, "associativity");
        assert_eq!(a.unify(&top, schema), Some(a.clone()), "identity");
        assert_eq!(a.unify(&a, schema), Some(a.clone()), "idempotence");
    }

    // Φ factoring identity over 500 random CV-legal strings
    let ph = mtmorph::prosody::Phonology::from_classes(&g.symbols, "C", "V").unwrap();
    let consonants: Vec<mtmorph::Sym> = ph.consonants.iter().collect();
    let vowels: Vec<mtmorph::Sym> = ph.vowels.iter().collect();
    for _ in 0..500 {
        let mut base: Vec<mtmorph::Sym> = Vec::new();
        for _ in 0..(1 + next(4)) {
            let c = consonants[next(consonants.len() as u64) as usize];
            let v = vowels[next(vowels.len() as u64) as usize];
            base.push(c);
            base.push(v);
            match next(4) {
                2 => base.push(v),
                3 => base.push(consonants[next(consonants.len() as u64) as usize]),
                _ => {}
            }
        }
        // a trailing CC cluster is only CV-legal as coda + extrametrical
        let syll = match mtmorph::prosody::syllabify(&ph, &base, true) {
            Ok(s) => s,
            Err(_) => continue,
        };
        assert_eq!(syll.flatten(), base, "syllabification is lossless");
        for constituent in [
            mtmorph::prosody::Constituent::LightSyllable,
            mtmorph::prosody::Constituent::Consonant,
        ] {
            if let Ok(f) = mtmorph::prosody::phi(&syll, constituent, mtmorph::prosody::Edge::Left) {
                let mut joined = f.kernel.clone();
                joined.extend(&f.residue);
                assert_eq!(joined, base, "kernel ⌢ residue = base");
            }
        }
    }

    // rule-order permutation invariance of generation on the corpus
    let head_end = mtmorph::corpus::ARABIC_MTG.find("rule ").unwrap();
    let (head, rules_text) = mtmorph::corpus::ARABIC_MTG.split_at(head_end);
    let mut blocks: Vec<&str> = rules_text
        .split("\n\n")
        .filter(|b| !b.trim().is_empty())
        .collect();
    blocks.reverse();
    let reversed = format!("{head}{}\n", blocks.join("\n\n"));
    let permuted = mtmorph::dsl::load(&reversed, mtmorph::corpus::ARABIC_MTL).unwrap();
    for case in gen_cases() {
        let goal = FeatureStructure::build(
            &permuted.schema,
            &[("measure", &[case.measure.as_str()])],
        )
        .unwrap();
        let tokens: Vec<Option<&str>> = case.tape_forms.iter().map(|t| t.as_deref()).collect();
        let mut all = Vec::new();
        for sel in select_entries(&permuted, &tokens, &goal).unwrap() {
            all.extend(mtmorph::engine::generate(&permuted, &sel, &goal));
        }
        let surfaces: Vec<String> = all.iter().map(|a| a.surface_string(&permuted)).collect();
        assert_eq!(surfaces, vec![case.expected.clone()], "measure {}", case.measure);
    }

    println!("PASS criterion 7: unification algebra (1000 cases), factoring identity (500 strings), rule-order invariance");
}
