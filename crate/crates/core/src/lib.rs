//! A bidirectional multi-tape two-level morphology engine.
//!
//! Rules map an n-tuple of lexical tapes to a surface string inside
//! lexical and surface contexts; the engine interprets them directly in
//! both directions, generation (tapes → surfaces) and recognition
//! (surface → morpheme analyses), by searching for partitions of the two
//! levels into rule-licensed pairs, with obligatory rules enforced across
//! every pair. Feature structures with disjunctive values narrow analyses
//! through unification.
//!
//! The crate ships a grammar of the Arabic verbal stem (passive
//! perfective, measures 1–8 and 10) as an executable corpus, together
//! with an independent prosodic oracle (moraic syllabification, the
//! parsing function Φ, prosodic circumscription) that re-derives the
//! prosodically defined measures and cross-checks the engine.
//!
//! ```
//! use mtmorph::corpus::bundled_grammar;
//! use mtmorph::engine::recognize;
//! use mtmorph::tapes::parse_surface;
//!
//! let g = bundled_grammar();
//! let surface = parse_surface(&g, "kuttib").unwrap();
//! let analyses = recognize(&g, &surface);
//! assert!(analyses.iter().any(|a| a.word_fs.render(&g.schema).contains("measure=2")));
//! ```

pub mod binding;
pub mod corpus;
pub mod dsl;
pub mod engine;
pub mod features;
pub mod grammar;
pub mod lexicon;
pub mod pattern;
pub mod prosody;
pub mod select;
pub mod serialize;
pub mod symbols;
pub mod tapes;

pub use binding::{Binding, VarId, VarSpec};
pub use engine::{generate, recognize, Analysis};
pub use features::{FeatureSchema, FeatureStructure};
pub use grammar::{Diagnostic, Grammar};
pub use lexicon::LexicalEntry;
pub use symbols::{Sym, SymSet, SymbolTable};
pub use tapes::{parse_surface, Cell, Tapes};
