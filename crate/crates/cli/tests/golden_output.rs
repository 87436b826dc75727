//! Golden snapshot of the full recognition output for every corpus form.
//! Any change to engine semantics, feature narrowing, ordering, or the
//! text format shows up as a diff here.

use std::process::Command;

fn analyze(form: &str) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_mtmorph"))
        .args(["analyze", form])
        .output()
        .expect("binary runs");
    String::from_utf8(out.stdout).unwrap()
}

const GOLDEN: &[(&str, &str)] = &[
    (
        // the bare stem is any measure its morphemes allow; the
        // supplementary measure-5 root entry contributes its own reading
        "kutib",
        "kutib\tpattern:smsmsx root:ktb vocalism:ui\t[measure=1,2,3,4,6,7,8,10; tense=perf; voice=pass]\tR1,R1,R2,R4\n\
         kutib\tpattern:smsmsx root:ktb vocalism:ui\t[measure=5; tense=perf; voice=pass]\tR1,R1,R2,R4\n",
    ),
    (
        "kuttib",
        "kuttib\tpattern:smsmsx root:ktb vocalism:ui\t[measure=2; tense=perf; voice=pass]\tR1,R7,R1,R2,R4\n\
         kuttib\tpattern:smsmsx root:ktb vocalism:ui\t[measure=5; tense=perf; voice=pass]\tR1,R7,R1,R2,R4\n",
    ),
    (
        "kuutib",
        "kuutib\tpattern:smsmsx root:ktb vocalism:ui\t[measure=3,6; tense=perf; voice=pass]\tR9,R1,R2,R4\n",
    ),
    (
        "'uktib",
        "'uktib\tpattern:smsmsx root:ktb vocalism:ui affix:'V\t[measure=4; tense=perf; voice=pass]\tR3,R3,R5,R6,R1,R2,R4\n",
    ),
    (
        "tukuttib",
        "tukuttib\tpattern:smsmsx root:ktb vocalism:ui affix:tu\t[measure=5; tense=perf; voice=pass]\tR3,R3,R5,R1,R7,R1,R2,R4\n",
    ),
    (
        "tukuutib",
        "tukuutib\tpattern:smsmsx root:ktb vocalism:ui affix:tu\t[measure=6; tense=perf; voice=pass]\tR3,R3,R5,R9,R1,R2,R4\n",
    ),
    (
        "nkutib",
        "nkutib\tpattern:smsmsx root:ktb vocalism:ui affix:n\t[measure=7; tense=perf; voice=pass]\tR3,R5,R1,R1,R2,R4\n",
    ),
    (
        "ktutib",
        "ktutib\tpattern:smsmsx root:ktb vocalism:ui affix:t\t[measure=8; tense=perf; voice=pass]\tR8,R5,R1,R2,R4\n",
    ),
    (
        "stuktib",
        "stuktib\tpattern:smsmsx root:ktb vocalism:ui affix:stV\t[measure=10; tense=perf; voice=pass]\tR3,R3,R3,R5,R6,R1,R2,R4\n",
    ),
];

#[test]
fn recognition_output_matches_the_golden_snapshot() {
    for (form, expected) in GOLDEN {
        assert_eq!(&analyze(form), expected, "analyze {form}");
    }
}
