//! Pattern-based Arabic stemming.
//!
//! The stemming machine is built in five steps: compile the affix
//! inventories (prefixes consumed to ε), compile and union the noun and
//! verb templates, concatenate prefix · patterns · suffix per category,
//! and union the two branches. Composing a word with the machine and
//! projecting the output enumerates every root the word could be built
//! from; a bigram scorer then picks the best one.

pub mod affix;
pub mod alphabet;
pub mod config;
pub mod pattern;
pub mod scorer;

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::fst::ops::{compose, concat, project, trim, union, union_all, ProjectSide};
use crate::fst::Wfst;
use crate::semiring::RealWeight;

use affix::{compile_affixes, AffixInventory};
use alphabet::Alphabet;
use config::StemmerConfig;
use pattern::{compile_pattern, parse_patterns, Category, Pattern};
use scorer::RootScorer;

/// Outcome of stemming one word. `stemmed` is false when no template
/// matched and the word passed through unchanged.
#[derive(Clone, Debug, PartialEq)]
pub struct StemResult {
    pub stem: String,
    pub stemmed: bool,
    /// All candidate roots, lexicographically ordered.
    pub candidates: Vec<String>,
    /// Bigram score of the chosen stem (0 when unstemmed).
    pub score: f64,
}

/// The compiled stemming transducer plus the alphabet that maps its
/// labels back to letters. Immutable; safe to share across threads.
#[derive(Clone, Debug)]
pub struct Stemmer {
    machine: Wfst<RealWeight>,
    alphabet: Alphabet,
    patterns: Vec<Pattern>,
    affixes: AffixInventory,
}

/// Compile the full stemming machine from configuration text.
pub fn build_stemmer(cfg: &StemmerConfig) -> Result<Stemmer> {
    let alphabet = Alphabet::from_text(&cfg.normalize_text)?;
    let patterns = parse_patterns(&cfg.pattern_text)?;
    if patterns.is_empty() {
        return Err(Error::Config("pattern file defines no patterns".to_string()));
    }
    let affixes = AffixInventory::from_text(&cfg.affix_text, &alphabet)?;

    let compile_category = |cat: Category| -> Result<Wfst<RealWeight>> {
        let machines = patterns
            .iter()
            .filter(|p| p.category == cat)
            .map(|p| compile_pattern(p, &alphabet))
            .collect::<Result<Vec<_>>>()?;
        Ok(union_all(&machines.iter().collect::<Vec<_>>()))
    };
    let noun_patterns = compile_category(Category::Noun)?;
    let verb_patterns = compile_category(Category::Verb)?;
    let noun_prefixes = compile_affixes(&affixes.noun_prefixes, &alphabet)?;
    let verb_prefixes = compile_affixes(&affixes.verb_prefixes, &alphabet)?;
    // One combined suffix machine serves both branches.
    let suffixes = compile_affixes::<RealWeight>(&affixes.suffixes, &alphabet)?;

    let noun_branch = concat(&concat(&noun_prefixes, &noun_patterns), &suffixes);
    let verb_branch = concat(&concat(&verb_prefixes, &verb_patterns), &suffixes);
    let machine = trim(&union(&noun_branch, &verb_branch));
    Ok(Stemmer {
        machine,
        alphabet,
        patterns,
        affixes,
    })
}

impl Stemmer {
    pub fn machine(&self) -> &Wfst<RealWeight> {
        &self.machine
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn patterns(&self) -> &[Pattern] {
        &self.patterns
    }

    pub fn affixes(&self) -> &AffixInventory {
        &self.affixes
    }

    /// Every root the word can be decomposed into: the output-projection
    /// language of word ∘ stemmer, each candidate once.
    pub fn candidate_stems(&self, word: &str) -> Result<BTreeSet<String>> {
        let labels = self.alphabet.labels_of(word)?;
        let word_machine: Wfst<RealWeight> = Wfst::acceptor(&labels);
        let composed = compose(&word_machine, &self.machine);
        let outputs = project(&composed, ProjectSide::Output);
        // Acyclic, so no path revisits a state: state count bounds length.
        let budget = outputs.num_states();
        let mut stems = BTreeSet::new();
        for path in outputs.enumerate_paths(budget) {
            stems.insert(self.alphabet.string_of(&path.output)?);
        }
        Ok(stems)
    }

    /// Best-scoring candidate root; ties (including all-zero scores) take
    /// the lexicographically smallest candidate. A word with no candidates
    /// passes through unchanged, flagged `stemmed: false`.
    pub fn stem(&self, sc: &RootScorer, word: &str) -> Result<StemResult> {
        let candidates = self.candidate_stems(word)?;
        if candidates.is_empty() {
            return Ok(StemResult {
                stem: word.to_string(),
                stemmed: false,
                candidates: Vec::new(),
                score: 0.0,
            });
        }
        let mut best: Option<(&str, f64)> = None;
        for cand in &candidates {
            let score = sc.score(cand)?;
            // strict > keeps the first (lexicographically smallest) on ties
            if best.is_none_or(|(_, b)| score > b) {
                best = Some((cand.as_str(), score));
            }
        }
        let (stem, score) = best.expect("nonempty candidate set");
        Ok(StemResult {
            stem: stem.to_string(),
            stemmed: true,
            candidates: candidates.iter().cloned().collect(),
            score,
        })
    }
}
