//! Moraic syllabification, the parsing function Φ, prosodic
//! circumscription, and template association.
//!
//! This module knows nothing of two-level rules: it derives stem shapes
//! straight from prosodic first principles (light syllables are CV, heavy
//! are CVV/CVC, a stem-final consonant may sit outside syllable weight as
//! an extrametrical element) and serves as an independent cross-check of
//! the rule engine's output for the measures whose derivations are
//! prosodically defined.
//!
//! Φ(C, E) returns the constituent C at edge E of a base, factoring it
//! into a kernel (the constituent) and a residue (the remainder), with
//! base = kernel ⌢ residue at the left edge and residue ⌢ kernel at the
//! right. Positive circumscription applies a morphological operation to
//! the kernel, negative to the residue.

use thiserror::Error;

use crate::symbols::{Sym, SymSet, SymbolTable};

/// Consonant/vowel classification, usually taken from a grammar's classes.
#[derive(Debug, Clone, Copy)]
pub struct Phonology {
    pub consonants: SymSet,
    pub vowels: SymSet,
}

impl Phonology {
    pub fn from_classes(
        table: &SymbolTable,
        consonant_class: &str,
        vowel_class: &str,
    ) -> Option<Phonology> {
        Some(Phonology {
            consonants: table.class(consonant_class)?.members,
            vowels: table.class(vowel_class)?.members,
        })
    }

    fn is_c(&self, s: Sym) -> bool {
        self.consonants.contains(s)
    }

    fn is_v(&self, s: Sym) -> bool {
        self.vowels.contains(s)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ProsodyError {
    #[error("empty base")]
    EmptyBase,
    #[error("position {0}: syllable must begin with a consonant")]
    MissingOnset(usize),
    #[error("position {0}: onset must be followed by a vowel")]
    MissingNucleus(usize),
    #[error("position {0}: symbol is neither consonant nor vowel")]
    Unclassified(usize),
    #[error("requested constituent absent at that edge")]
    ConstituentAbsent,
    #[error("constituent kind not supported at runtime")]
    UnsupportedConstituent,
    #[error("spreading requires a consonant-initial operand")]
    SpreadOntoVowel,
    #[error("melody exhausted: unfilled {0}")]
    MelodyExhausted(&'static str),
    #[error("melody left over after template satisfaction")]
    MelodyLeftOver,
    #[error("measure {0} has no prosodic derivation here")]
    UnsupportedMeasure(String),
}

/// Light = one mora (CV); heavy = two (CVV or CVC). The first mora is
/// always the vowel; a heavy syllable's second mora is a lengthened vowel
/// or a coda consonant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Syllable {
    pub onset: Sym,
    pub morae: Vec<Sym>,
}

impl Syllable {
    pub fn is_light(&self) -> bool {
        self.morae.len() == 1
    }

    pub fn syms(&self) -> Vec<Sym> {
        let mut v = vec![self.onset];
        v.extend(&self.morae);
        v
    }

    pub fn len(&self) -> usize {
        1 + self.morae.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// A fully syllabified base; flattening reproduces the input exactly.
///
/// Word-initial consonants that cannot begin a legal syllable (the `n` of
/// /nkutib/, the `k` of /ktutib/) are carried as unsyllabified leading
/// material rather than rejected: cluster-initial stems are part of the
/// corpus even though no syllable can host their first consonant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Syllabified {
    pub leading: Vec<Sym>,
    pub syllables: Vec<Syllable>,
    pub extrametrical: Option<Sym>,
}

impl Syllabified {
    pub fn flatten(&self) -> Vec<Sym> {
        let mut out = self.leading.clone();
        out.extend(self.syllables.iter().flat_map(|s| s.syms()));
        out.extend(self.extrametrical);
        out
    }
}

/// Greedy left-to-right parse preferring CV: a vowel doubles into CVV, and
/// a consonant closes a syllable (CVC) only when the following position
/// could not begin a legal syllable. With `extrametrical_final`, a final
/// consonant is set aside before parsing.
pub fn syllabify(
    ph: &Phonology,
    s: &[Sym],
    extrametrical_final: bool,
) -> Result<Syllabified, ProsodyError> {
    if s.is_empty() {
        return Err(ProsodyError::EmptyBase);
    }
    let (body, extrametrical) = if extrametrical_final && s.len() > 1 && ph.is_c(s[s.len() - 1]) {
        (&s[..s.len() - 1], Some(s[s.len() - 1]))
    } else {
        (s, None)
    };

    let mut syllables = Vec::new();
    let mut i = 0;
    // word-initial consonants with no following vowel stay unsyllabified
    let mut leading = Vec::new();
    while i + 1 < body.len() && ph.is_c(body[i]) && !ph.is_v(body[i + 1]) {
        leading.push(body[i]);
        i += 1;
    }
    while i < body.len() {
        let onset = body[i];
        if !ph.is_c(onset) {
            return Err(if ph.is_v(onset) {
                ProsodyError::MissingOnset(i)
            } else {
                ProsodyError::Unclassified(i)
            });
        }
        i += 1;
        if i >= body.len() || !ph.is_v(body[i]) {
            return Err(ProsodyError::MissingNucleus(i));
        }
        let nucleus = body[i];
        i += 1;
        let mut morae = vec![nucleus];
        if i < body.len() && body[i] == nucleus {
            // doubled vowel: open heavy CVV
            morae.push(body[i]);
            i += 1;
        } else if i < body.len() && ph.is_c(body[i]) {
            // close the syllable only if this consonant cannot start one
            let next_starts_syllable = i + 1 < body.len() && ph.is_v(body[i + 1]);
            if !next_starts_syllable {
                morae.push(body[i]);
                i += 1;
            }
        } else if i < body.len() && ph.is_v(body[i]) {
            // a different vowel cannot join this syllable and has no onset
            return Err(ProsodyError::MissingOnset(i));
        }
        syllables.push(Syllable { onset, morae });
    }
    Ok(Syllabified {
        leading,
        syllables,
        extrametrical,
    })
}

/// Constituent kinds Φ accepts. Foot and prosodic word are part of the
/// prosodic hierarchy but have no runtime support here; requesting them is
/// an explicit error rather than a silent mis-parse.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constituent {
    LightSyllable,
    Consonant,
    Foot,
    ProsodicWord,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Edge {
    Left,
    Right,
}

/// A kernel/residue split. `reconstruct` restores the base in original
/// order (kernel first at the left edge, last at the right).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factoring {
    pub kernel: Vec<Sym>,
    pub residue: Vec<Sym>,
    pub edge: Edge,
}

impl Factoring {
    pub fn reconstruct(&self) -> Vec<Sym> {
        match self.edge {
            Edge::Left => [self.kernel.as_slice(), self.residue.as_slice()].concat(),
            Edge::Right => [self.residue.as_slice(), self.kernel.as_slice()].concat(),
        }
    }
}

/// The parsing function Φ: returns the constituent at the given edge,
/// splitting the base into kernel and residue.
pub fn phi(
    base: &Syllabified,
    constituent: Constituent,
    edge: Edge,
) -> Result<Factoring, ProsodyError> {
    let flat = base.flatten();
    match (constituent, edge) {
        (Constituent::Foot | Constituent::ProsodicWord, _) => {
            Err(ProsodyError::UnsupportedConstituent)
        }
        (Constituent::LightSyllable, Edge::Left) => {
            // an unsyllabified leading consonant owns the left edge
            if !base.leading.is_empty() {
                return Err(ProsodyError::ConstituentAbsent);
            }
            let first = base.syllables.first().ok_or(ProsodyError::ConstituentAbsent)?;
            if !first.is_light() {
                return Err(ProsodyError::ConstituentAbsent);
            }
            let k = first.len();
            Ok(Factoring {
                kernel: flat[..k].to_vec(),
                residue: flat[k..].to_vec(),
                edge,
            })
        }
        (Constituent::Consonant, Edge::Left) => {
            // the first symbol is a consonant by construction: a leading
            // unsyllabified consonant or the first onset
            if flat.is_empty() {
                return Err(ProsodyError::ConstituentAbsent);
            }
            Ok(Factoring {
                kernel: flat[..1].to_vec(),
                residue: flat[1..].to_vec(),
                edge,
            })
        }
        (Constituent::LightSyllable, Edge::Right) => {
            // an extrametrical consonant owns the right edge, so a light
            // syllable is absent there
            if base.extrametrical.is_some() {
                return Err(ProsodyError::ConstituentAbsent);
            }
            let last = base.syllables.last().ok_or(ProsodyError::ConstituentAbsent)?;
            if !last.is_light() {
                return Err(ProsodyError::ConstituentAbsent);
            }
            let k = last.len();
            Ok(Factoring {
                kernel: flat[flat.len() - k..].to_vec(),
                residue: flat[..flat.len() - k].to_vec(),
                edge,
            })
        }
        (Constituent::Consonant, Edge::Right) => {
            match base.extrametrical {
                Some(_) => Ok(Factoring {
                    kernel: flat[flat.len() - 1..].to_vec(),
                    residue: flat[..flat.len() - 1].to_vec(),
                    edge,
                }),
                None => {
                    let last = base.syllables.last().ok_or(ProsodyError::ConstituentAbsent)?;
                    // only a closed syllable ends in a consonant
                    match last.morae.last() {
                        Some(_) if last.morae.len() == 2 && last.morae[1] != last.morae[0] => {
                            Ok(Factoring {
                                kernel: flat[flat.len() - 1..].to_vec(),
                                residue: flat[..flat.len() - 1].to_vec(),
                                edge,
                            })
                        }
                        _ => Err(ProsodyError::ConstituentAbsent),
                    }
                }
            }
        }
    }
}

/// A morphological operation applied under circumscription.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MorphOp {
    Prefix(Vec<Sym>),
    /// Prefix a mora and fill it by spreading the operand's initial
    /// consonant (gemination).
    PrefixMoraSpread,
    Suffix(Vec<Sym>),
}

fn apply_op(ph: &Phonology, op: &MorphOp, operand: &[Sym]) -> Result<Vec<Sym>, ProsodyError> {
    match op {
        MorphOp::Prefix(syms) => Ok([syms.as_slice(), operand].concat()),
        MorphOp::Suffix(syms) => Ok([operand, syms.as_slice()].concat()),
        MorphOp::PrefixMoraSpread => {
            let first = operand.first().copied().ok_or(ProsodyError::EmptyBase)?;
            if !ph.is_c(first) {
                return Err(ProsodyError::SpreadOntoVowel);
            }
            let mut out = vec![first];
            out.extend_from_slice(operand);
            Ok(out)
        }
    }
}

/// Negative prosodic circumscription: the operation applies to the
/// residue, and the kernel is restored in place.
pub fn apply_npc(
    ph: &Phonology,
    op: &MorphOp,
    base: &Syllabified,
    constituent: Constituent,
    edge: Edge,
) -> Result<Vec<Sym>, ProsodyError> {
    let f = phi(base, constituent, edge)?;
    let new_residue = apply_op(ph, op, &f.residue)?;
    Ok(match edge {
        Edge::Left => [f.kernel.as_slice(), new_residue.as_slice()].concat(),
        Edge::Right => [new_residue.as_slice(), f.kernel.as_slice()].concat(),
    })
}

/// Positive prosodic circumscription: the mirror image, applying the
/// operation to the kernel.
pub fn apply_ppc(
    ph: &Phonology,
    op: &MorphOp,
    base: &Syllabified,
    constituent: Constituent,
    edge: Edge,
) -> Result<Vec<Sym>, ProsodyError> {
    let f = phi(base, constituent, edge)?;
    let new_kernel = apply_op(ph, op, &f.kernel)?;
    Ok(match edge {
        Edge::Left => [new_kernel.as_slice(), f.residue.as_slice()].concat(),
        Edge::Right => [f.residue.as_slice(), new_kernel.as_slice()].concat(),
    })
}

/// Template units: a light syllable, a heavy syllable whose second mora is
/// filled by lengthening the nucleus, and an extrametrical consonant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TemplateUnit {
    Light,
    HeavyLengthened,
    Extrametrical,
}

/// Left-to-right association of root consonants and vocalism vowels to a
/// template: each syllable node takes a consonant, each mora a vowel, a
/// lengthened heavy syllable copies its nucleus into the second mora, and
/// the extrametrical node takes a consonant. Both melodies must be used up
/// exactly.
pub fn associate(
    template: &[TemplateUnit],
    root: &[Sym],
    vocalism: &[Sym],
) -> Result<Vec<Sym>, ProsodyError> {
    let mut out = Vec::new();
    let mut cs = root.iter().copied();
    let mut vs = vocalism.iter().copied();
    for unit in template {
        match unit {
            TemplateUnit::Light => {
                out.push(cs.next().ok_or(ProsodyError::MelodyExhausted("syllable node"))?);
                out.push(vs.next().ok_or(ProsodyError::MelodyExhausted("mora"))?);
            }
            TemplateUnit::HeavyLengthened => {
                out.push(cs.next().ok_or(ProsodyError::MelodyExhausted("syllable node"))?);
                let v = vs.next().ok_or(ProsodyError::MelodyExhausted("mora"))?;
                out.push(v);
                out.push(v);
            }
            TemplateUnit::Extrametrical => {
                out.push(cs.next().ok_or(ProsodyError::MelodyExhausted("extrametrical node"))?);
            }
        }
    }
    if cs.next().is_some() || vs.next().is_some() {
        return Err(ProsodyError::MelodyLeftOver);
    }
    Ok(out)
}

/// Derives the stem of a supported verbal measure from prosodic first
/// principles, for the corpus root/vocalism pair:
///
/// * measure 1: the base template σμ σμ σx;
/// * measure 2: prefix a mora to the residue of Φ(σμ, left), filled by
///   spreading (gemination);
/// * measure 3: the base template with a lengthened first syllable;
/// * measure 8: prefix {t} to the residue of Φ(C, left).
pub fn oracle_measure(
    ph: &Phonology,
    measure: &str,
    root: &[Sym],
    vocalism: &[Sym],
    t_affix: Sym,
) -> Result<Vec<Sym>, ProsodyError> {
    use TemplateUnit::*;
    let base_template = [Light, Light, Extrametrical];
    match measure {
        "1" => associate(&base_template, root, vocalism),
        "2" => {
            let base = associate(&base_template, root, vocalism)?;
            let syll = syllabify(ph, &base, true)?;
            apply_npc(ph, &MorphOp::PrefixMoraSpread, &syll, Constituent::LightSyllable, Edge::Left)
        }
        "3" => associate(&[HeavyLengthened, Light, Extrametrical], root, vocalism),
        "8" => {
            let base = associate(&base_template, root, vocalism)?;
            let syll = syllabify(ph, &base, true)?;
            apply_npc(ph, &MorphOp::Prefix(vec![t_affix]), &syll, Constituent::Consonant, Edge::Left)
        }
        other => Err(ProsodyError::UnsupportedMeasure(other.to_string())),
    }
}

/// The measures [`oracle_measure`] supports.
pub const ORACLE_MEASURES: [&str; 4] = ["1", "2", "3", "8"];
